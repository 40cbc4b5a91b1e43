#include "hyperfuzzy/hypnum.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "hyperfuzzy/error.hpp"

namespace hyperfuzzy {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw InvalidNumber(std::string(what) + " must be finite, got " + std::to_string(x));
  }
}

std::string describe_pair(const Hyp& x, const Hyp& y) {
  return to_string(x) + " and " + to_string(y);
}

}  // namespace

Hyp::Hyp(double u, double v) : u_(u), v_(v) {
  require_finite(u, "e1 coefficient");
  require_finite(v, "e2 coefficient");
}

Hyp Hyp::from_standard(double a1, double a2) {
  require_finite(a1, "real part");
  require_finite(a2, "k part");
  return Hyp(a1 + a2, a1 - a2);
}

Ordering compare(const Hyp& x, const Hyp& y) {
  if (x == y) return Ordering::Equal;
  if (leq(x, y)) return Ordering::Less;
  if (leq(y, x)) return Ordering::Greater;
  return Ordering::Incomparable;
}

bool is_zero_divisor(const Hyp& x) {
  return classify(x) == Classification::ZeroDivisor;
}

Classification classify(const Hyp& x) {
  const bool u_zero = x.u() == 0.0;
  const bool v_zero = x.v() == 0.0;
  if (u_zero && v_zero) return Classification::Zero;
  if (u_zero != v_zero) return Classification::ZeroDivisor;
  if (x.u() > 0.0 && x.v() > 0.0) return Classification::InDPlus;
  return Classification::Other;
}

Hyp order_max(const Hyp& x, const Hyp& y, OrderMode mode) {
  if (mode == OrderMode::Lattice) {
    return Hyp(std::fmax(x.u(), y.u()), std::fmax(x.v(), y.v()));
  }
  if (leq(y, x)) return x;
  if (leq(x, y)) return y;
  throw IncomparableError("max of incomparable values " + describe_pair(x, y));
}

Hyp order_min(const Hyp& x, const Hyp& y, OrderMode mode) {
  if (mode == OrderMode::Lattice) {
    return Hyp(std::fmin(x.u(), y.u()), std::fmin(x.v(), y.v()));
  }
  if (leq(x, y)) return x;
  if (leq(y, x)) return y;
  throw IncomparableError("min of incomparable values " + describe_pair(x, y));
}

Hyp modulus(const Hyp& x) { return Hyp(std::fabs(x.u()), std::fabs(x.v())); }

Hyp metric(const Hyp& x, const Hyp& y) { return modulus(x - y); }

Hyp point_norm(std::span<const double> point) {
  double sum = 0.0;
  for (double c : point) sum += c * c;
  return Hyp::real(std::sqrt(sum));
}

// ---- intervals ---------------------------------------------------------

DInterval DInterval::closed(const Hyp& lo, const Hyp& hi) {
  if (!leq(lo, hi)) {
    throw RangeError("closed interval needs lo ⪯ hi, got " + describe_pair(lo, hi));
  }
  return DInterval(lo, hi, Kind::Closed);
}

DInterval DInterval::open(const Hyp& lo, const Hyp& hi) {
  if (!lt(lo, hi)) {
    throw RangeError("open interval needs lo ≺ hi, got " + describe_pair(lo, hi));
  }
  return DInterval(lo, hi, Kind::Open);
}

bool DInterval::contains(const Hyp& z) const {
  if (kind_ == Kind::Closed) return leq(lo_, z) && leq(z, hi_);
  return lt(lo_, z) && lt(z, hi_);
}

Degeneracy DInterval::degeneracy() const {
  const Hyp len = length();
  const bool u_zero = len.u() == 0.0;
  const bool v_zero = len.v() == 0.0;
  if (u_zero && v_zero) return Degeneracy::Point;
  if (u_zero || v_zero) return Degeneracy::Degenerate;
  return Degeneracy::Nondegenerate;
}

// ---- text form ---------------------------------------------------------

std::string format_real(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

std::string coefficient_after_plus(double x) {
  std::string s = format_real(x);
  if (!s.empty() && s.front() == '-') return "(" + s + ")";
  return s;
}

class HypParser {
 public:
  explicit HypParser(std::string_view raw) : original_(raw) {
    for (char c : raw) {
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') text_.push_back(c);
    }
  }

  Hyp parse() {
    if (text_.empty()) fail("empty literal");
    const double first = coefficient();
    if (at_end()) return Hyp::real(first);

    if (consume("e1")) {
      const double sign = separator();
      const double second = sign * coefficient();
      if (!consume("e2")) fail("expected 'e2'");
      if (!at_end()) fail("trailing characters");
      return Hyp(first, second);
    }
    const double sign = separator();
    const double second = sign * coefficient();
    if (!consume("k")) fail("expected 'k'");
    if (!at_end()) fail("trailing characters");
    return Hyp::from_standard(first, second);
  }

 private:
  bool at_end() const { return pos_ == text_.size(); }

  bool consume(std::string_view token) {
    if (std::string_view(text_).substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  double separator() {
    if (consume("+")) return 1.0;
    if (consume("-")) return -1.0;
    fail("expected '+' or '-'");
  }

  double coefficient() {
    if (consume("(")) {
      const auto close = text_.find(')', pos_);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      const double value = to_double(std::string_view(text_).substr(pos_, close - pos_));
      pos_ = close + 1;
      return value;
    }
    // Unparenthesized numbers only take an exponent written with an explicit
    // sign ("1e-05"); a bare 'e' starts the basis suffix e1 / e2.
    const std::size_t start = pos_;
    std::size_t p = pos_;
    auto digit = [&](std::size_t i) { return i < text_.size() && text_[i] >= '0' && text_[i] <= '9'; };
    if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
    while (digit(p)) ++p;
    if (p < text_.size() && text_[p] == '.') {
      ++p;
      while (digit(p)) ++p;
    }
    if (p + 2 < text_.size() && (text_[p] == 'e' || text_[p] == 'E') &&
        (text_[p + 1] == '+' || text_[p + 1] == '-') && digit(p + 2)) {
      p += 2;
      while (digit(p)) ++p;
    }
    pos_ = p;
    return to_double(std::string_view(text_).substr(start, p - start));
  }

  double to_double(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
      fail("malformed number '" + std::string(s) + "'");
    }
    if (!std::isfinite(value)) fail("non-finite number");
    return value;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse hyperbolic number '" + std::string(original_) + "': " + why);
  }

  std::string_view original_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Hyp& x, HypForm form) {
  if (form == HypForm::Standard) {
    const StandardForm s = x.to_standard();
    return format_real(s.a1) + "+" + coefficient_after_plus(s.a2) + "k";
  }
  return format_real(x.u()) + "e1+" + coefficient_after_plus(x.v()) + "e2";
}

Hyp parse_hyp(std::string_view text) { return HypParser(text).parse(); }

HypForm detect_form(std::string_view text) {
  while (!text.empty() && (text.back() == ' ' || text.back() == '\n')) text.remove_suffix(1);
  if (!text.empty() && text.back() == 'k') return HypForm::Standard;
  return HypForm::Idempotent;
}

std::string_view to_string(OrderMode mode) {
  return mode == OrderMode::Strict ? "strict" : "lattice";
}

std::string_view to_string(Ordering ordering) {
  switch (ordering) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
    case Ordering::Incomparable: return "incomparable";
  }
  return "?";
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Zero: return "zero";
    case Classification::ZeroDivisor: return "zero-divisor";
    case Classification::InDPlus: return "positive";
    case Classification::Other: return "other";
  }
  return "?";
}

std::string_view to_string(Degeneracy d) {
  switch (d) {
    case Degeneracy::Point: return "point";
    case Degeneracy::Degenerate: return "degenerate";
    case Degeneracy::Nondegenerate: return "nondegenerate";
  }
  return "?";
}

OrderMode parse_order_mode(std::string_view text) {
  if (text == "lattice") return OrderMode::Lattice;
  if (text == "strict") return OrderMode::Strict;
  throw ParseError("unknown order mode '" + std::string(text) + "' (expected lattice|strict)");
}

}  // namespace hyperfuzzy
