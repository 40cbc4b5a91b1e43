#include "hyperfuzzy/dfuzzy.hpp"

#include <cmath>
#include <string>

#include "hyperfuzzy/error.hpp"

namespace hyperfuzzy {

namespace {

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

void require_same(const DFuzzySet& a, const DFuzzySet& b, const char* op) {
  if (!same_universe(a.universe(), b.universe())) {
    throw UniverseMismatch(std::string(op) + ": operands live on different universes");
  }
}

template <class F>
DFuzzySet pointwise(const DFuzzySet& a, const DFuzzySet& b, const char* op, F&& f) {
  require_same(a, b, op);
  std::vector<Hyp> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(f(i, a[i], b[i]));
  return DFuzzySet(a.universe_ptr(), std::move(out));
}

Hyp ordered(const Hyp& x, const Hyp& y, OrderMode mode, bool want_max, std::size_t at) {
  try {
    return want_max ? order_max(x, y, mode) : order_min(x, y, mode);
  } catch (const IncomparableError& e) {
    throw IncomparableError(std::string(e.what()) + " at point " + std::to_string(at));
  }
}

}  // namespace

DFuzzySet::DFuzzySet(UniversePtr universe, std::vector<Hyp> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (!universe_) throw ValidationError("fuzzy set needs a universe");
  if (values_.size() != universe_->size()) {
    throw LengthMismatch("got " + std::to_string(values_.size()) + " membership values for " +
                         std::to_string(universe_->size()) + " points");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const Hyp& x = values_[i];
    if (!in_unit(x.u())) {
      throw RangeError("membership at point " + std::to_string(i) + ": e1 component " +
                       format_real(x.u()) + " outside [0,1]");
    }
    if (!in_unit(x.v())) {
      throw RangeError("membership at point " + std::to_string(i) + ": e2 component " +
                       format_real(x.v()) + " outside [0,1]");
    }
  }
}

DFuzzySet DFuzzySet::constant(UniversePtr universe, const Hyp& value) {
  const std::size_t n = universe->size();
  return DFuzzySet(std::move(universe), std::vector<Hyp>(n, value));
}

DFuzzySet DFuzzySet::from_crisp(UniversePtr universe, const std::vector<bool>& members) {
  std::vector<Hyp> values;
  values.reserve(members.size());
  for (bool m : members) values.push_back(m ? Hyp::one() : Hyp::zero());
  return DFuzzySet(std::move(universe), std::move(values));
}

bool DFuzzySet::is_empty() const {
  for (const Hyp& x : values_) {
    if (!(x == Hyp::zero())) return false;
  }
  return true;
}

OrdinaryFuzzySet::OrdinaryFuzzySet(UniversePtr universe, std::vector<double> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (values_.size() != universe_->size()) {
    throw LengthMismatch("got " + std::to_string(values_.size()) + " membership values for " +
                         std::to_string(universe_->size()) + " points");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!in_unit(values_[i])) {
      throw RangeError("membership at point " + std::to_string(i) + " outside [0,1]");
    }
  }
}

std::pair<OrdinaryFuzzySet, OrdinaryFuzzySet> decompose(const DFuzzySet& a) {
  std::vector<double> first;
  std::vector<double> second;
  first.reserve(a.size());
  second.reserve(a.size());
  for (const Hyp& x : a.values()) {
    first.push_back(x.u());
    second.push_back(x.v());
  }
  return {OrdinaryFuzzySet(a.universe_ptr(), std::move(first)),
          OrdinaryFuzzySet(a.universe_ptr(), std::move(second))};
}

DFuzzySet recompose(const OrdinaryFuzzySet& first, const OrdinaryFuzzySet& second) {
  if (!same_universe(first.universe(), second.universe())) {
    throw UniverseMismatch("recompose: component sets live on different universes");
  }
  std::vector<Hyp> values;
  values.reserve(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) values.emplace_back(first[i], second[i]);
  return DFuzzySet(first.universe_ptr(), std::move(values));
}

bool equals(const DFuzzySet& a, const DFuzzySet& b) {
  require_same(a, b, "equals");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

bool approx_equals(const DFuzzySet& a, const DFuzzySet& b, double tol) {
  require_same(a, b, "approx_equals");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::fabs(a[i].u() - b[i].u()) > tol || std::fabs(a[i].v() - b[i].v()) > tol) return false;
  }
  return true;
}

Inclusion is_subset(const DFuzzySet& a, const DFuzzySet& b) {
  require_same(a, b, "is_subset");
  Inclusion result;
  bool reversed = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (leq(a[i], b[i])) continue;
    if (!leq(b[i], a[i])) return {Inclusion::Kind::IncomparableAt, i};
    if (!reversed) {
      reversed = true;
      result = {Inclusion::Kind::NotContained, i};
    }
  }
  return result;
}

DFuzzySet complement(const DFuzzySet& a) {
  std::vector<Hyp> out;
  out.reserve(a.size());
  for (const Hyp& x : a.values()) out.push_back(Hyp::one() - x);
  return DFuzzySet(a.universe_ptr(), std::move(out));
}

DFuzzySet unite(const DFuzzySet& a, const DFuzzySet& b, OrderMode mode) {
  return pointwise(a, b, "union", [mode](std::size_t i, const Hyp& x, const Hyp& y) {
    return ordered(x, y, mode, true, i);
  });
}

DFuzzySet intersect(const DFuzzySet& a, const DFuzzySet& b, OrderMode mode) {
  return pointwise(a, b, "intersection", [mode](std::size_t i, const Hyp& x, const Hyp& y) {
    return ordered(x, y, mode, false, i);
  });
}

std::size_t count_incomparable(const DFuzzySet& a, const DFuzzySet& b) {
  require_same(a, b, "count_incomparable");
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += comparable(a[i], b[i]) ? 0 : 1;
  return n;
}

DFuzzySet algebraic_sum(const DFuzzySet& a, const DFuzzySet& b) {
  return pointwise(a, b, "algebraic_sum", [](std::size_t i, const Hyp& x, const Hyp& y) {
    const Hyp sum = x + y;
    if (!leq(sum, Hyp::one())) {
      throw PreconditionError("algebraic sum is defined only when f_A + f_B ⪯ 1; at point " +
                              std::to_string(i) + " the sum is " + to_string(sum));
    }
    return sum;
  });
}

DFuzzySet algebraic_product(const DFuzzySet& a, const DFuzzySet& b) {
  return pointwise(a, b, "algebraic_product",
                   [](std::size_t, const Hyp& x, const Hyp& y) { return x * y; });
}

DFuzzySet absolute_difference(const DFuzzySet& a, const DFuzzySet& b) {
  return pointwise(a, b, "absolute_difference",
                   [](std::size_t, const Hyp& x, const Hyp& y) { return metric(x, y); });
}

DFuzzySet cartesian_product(const DFuzzySet& a, const DFuzzySet& b, OrderMode mode) {
  UniversePtr universe = Universe::product(a.universe(), b.universe());
  std::vector<Hyp> out;
  out.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      try {
        out.push_back(order_min(a[i], b[j], mode));
      } catch (const IncomparableError& e) {
        throw IncomparableError(std::string(e.what()) + " at pair (" + a.universe().describe(i) +
                                ", " + b.universe().describe(j) + ")");
      }
    }
  }
  return DFuzzySet(std::move(universe), std::move(out));
}

std::size_t count_incomparable_pairs(const DFuzzySet& a, const DFuzzySet& b) {
  std::size_t n = 0;
  for (const Hyp& x : a.values()) {
    for (const Hyp& y : b.values()) n += comparable(x, y) ? 0 : 1;
  }
  return n;
}

DFuzzySet convex_combination(const DFuzzySet& a, const DFuzzySet& b, const DFuzzySet& weight) {
  require_same(a, weight, "convex_combination");
  // lambda*a + (1-lambda)*b per idempotent component. std::lerp is exact at
  // the endpoints and never leaves [min(a,b), max(a,b)], so rounding cannot
  // push the result outside A∩B ⊂ (A,B;L) ⊂ A∪B.
  return pointwise(a, b, "convex_combination", [&weight](std::size_t i, const Hyp& x, const Hyp& y) {
    const Hyp& w = weight[i];
    return Hyp(std::lerp(y.u(), x.u(), w.u()), std::lerp(y.v(), x.v(), w.v()));
  });
}

}  // namespace hyperfuzzy
