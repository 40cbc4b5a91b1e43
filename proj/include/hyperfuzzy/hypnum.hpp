#pragma once

/**
 * @file hypnum.hpp
 * @brief Hyperbolic (split-complex) numbers x + yk with k^2 = 1.
 *
 * Values are stored in the idempotent basis e1 = (1+k)/2, e2 = (1-k)/2:
 *
 *   a1 + a2 k  =  (a1 + a2) e1 + (a1 - a2) e2  =  u e1 + v e2
 *
 * In that basis sum, product, modulus and the partial order are all
 * componentwise, so every operation below is a one-liner on (u, v).
 * The standard form (a1, a2) is only a view.
 */

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace hyperfuzzy {

/// Standard-form coordinates a1 + a2 k.
struct StandardForm {
  double a1 = 0.0;
  double a2 = 0.0;

  bool operator==(const StandardForm&) const = default;
};

class Hyp {
 public:
  constexpr Hyp() = default;

  /// u e1 + v e2. Throws InvalidNumber unless both are finite.
  Hyp(double u, double v);

  /// a1 + a2 k. Throws InvalidNumber unless both are finite.
  static Hyp from_standard(double a1, double a2);

  /// Real scalar r embedded on the diagonal (r e1 + r e2).
  static Hyp real(double r) { return Hyp(r, r); }

  static constexpr Hyp zero() { return {0.0, 0.0, Unchecked{}}; }
  static constexpr Hyp one() { return {1.0, 1.0, Unchecked{}}; }
  static constexpr Hyp e1() { return {1.0, 0.0, Unchecked{}}; }
  static constexpr Hyp e2() { return {0.0, 1.0, Unchecked{}}; }
  static constexpr Hyp k() { return {1.0, -1.0, Unchecked{}}; }

  constexpr double u() const { return u_; }
  constexpr double v() const { return v_; }

  StandardForm to_standard() const { return {(u_ + v_) / 2.0, (u_ - v_) / 2.0}; }

  // Exact componentwise equality; -0.0 == 0.0.
  constexpr bool operator==(const Hyp& o) const { return u_ == o.u_ && v_ == o.v_; }

  constexpr Hyp operator-() const { return {-u_, -v_, Unchecked{}}; }
  constexpr Hyp operator+(const Hyp& o) const { return {u_ + o.u_, v_ + o.v_, Unchecked{}}; }
  constexpr Hyp operator-(const Hyp& o) const { return {u_ - o.u_, v_ - o.v_, Unchecked{}}; }
  constexpr Hyp operator*(const Hyp& o) const { return {u_ * o.u_, v_ * o.v_, Unchecked{}}; }
  constexpr Hyp operator*(double s) const { return {u_ * s, v_ * s, Unchecked{}}; }

 private:
  struct Unchecked {};
  constexpr Hyp(double u, double v, Unchecked) : u_(u), v_(v) {}

  double u_ = 0.0;
  double v_ = 0.0;
};

inline Hyp operator*(double s, const Hyp& x) { return x * s; }

enum class OrderMode : std::uint8_t {
  Strict,   ///< max/min only for comparable arguments
  Lattice,  ///< componentwise join/meet, total
};

enum class Ordering : std::uint8_t { Less, Equal, Greater, Incomparable };

enum class Classification : std::uint8_t { Zero, ZeroDivisor, InDPlus, Other };

/// x ⪯ y: both idempotent components of y - x are nonnegative.
constexpr bool leq(const Hyp& x, const Hyp& y) { return x.u() <= y.u() && x.v() <= y.v(); }

/// x ≺ y: strict in both components.
constexpr bool lt(const Hyp& x, const Hyp& y) { return x.u() < y.u() && x.v() < y.v(); }

Ordering compare(const Hyp& x, const Hyp& y);

inline bool comparable(const Hyp& x, const Hyp& y) {
  return compare(x, y) != Ordering::Incomparable;
}

bool is_zero_divisor(const Hyp& x);
Classification classify(const Hyp& x);

/// ⪯-greater argument (Strict) or componentwise maximum (Lattice).
/// Strict mode throws IncomparableError naming both values.
Hyp order_max(const Hyp& x, const Hyp& y, OrderMode mode = OrderMode::Lattice);
Hyp order_min(const Hyp& x, const Hyp& y, OrderMode mode = OrderMode::Lattice);

/// |x|_k = |u| e1 + |v| e2.
Hyp modulus(const Hyp& x);

/// Hyperbolic-valued metric |x - y|_k.
Hyp metric(const Hyp& x, const Hyp& y);

/// Euclidean norm of a real point placed on the diagonal.
Hyp point_norm(std::span<const double> point);

enum class Degeneracy : std::uint8_t { Point, Degenerate, Nondegenerate };

/// Closed [lo, hi] or open (lo, hi) interval under ⪯.
class DInterval {
 public:
  enum class Kind : std::uint8_t { Closed, Open };

  /// Requires lo ⪯ hi; throws RangeError otherwise.
  static DInterval closed(const Hyp& lo, const Hyp& hi);
  /// Requires lo ≺ hi; throws RangeError otherwise.
  static DInterval open(const Hyp& lo, const Hyp& hi);

  const Hyp& lo() const { return lo_; }
  const Hyp& hi() const { return hi_; }
  Kind kind() const { return kind_; }

  bool contains(const Hyp& z) const;
  Hyp length() const { return hi_ - lo_; }
  Degeneracy degeneracy() const;

 private:
  DInterval(const Hyp& lo, const Hyp& hi, Kind kind) : lo_(lo), hi_(hi), kind_(kind) {}

  Hyp lo_;
  Hyp hi_;
  Kind kind_;
};

// ---- text form ---------------------------------------------------------

enum class HypForm : std::uint8_t { Idempotent, Standard };

/// Real rendered with at most 12 significant digits; -0 prints as 0.
std::string format_real(double x);

/// "0.3e1+0.7e2" (idempotent) or "0.5+(-0.2)k" (standard).
std::string to_string(const Hyp& x, HypForm form = HypForm::Idempotent);

/// Accepts either textual form. Whitespace is ignored. Throws ParseError.
Hyp parse_hyp(std::string_view text);

/// Detects which form a literal is written in without fully parsing it.
HypForm detect_form(std::string_view text);

std::string_view to_string(OrderMode mode);
std::string_view to_string(Ordering ordering);
std::string_view to_string(Classification c);
std::string_view to_string(Degeneracy d);

/// "lattice" / "strict". Throws ParseError.
OrderMode parse_order_mode(std::string_view text);

}  // namespace hyperfuzzy
