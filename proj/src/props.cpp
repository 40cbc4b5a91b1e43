#include "hyperfuzzy/props.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>

#include "hyperfuzzy/convex.hpp"
#include "hyperfuzzy/dfuzzy.hpp"
#include "hyperfuzzy/error.hpp"
#include "hyperfuzzy/testkit.hpp"

namespace hyperfuzzy::testkit {

namespace {

using Body = std::function<bool(Generator&, std::string&)>;

GenConfig line_config(std::uint64_t seed) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.dim = 1;
  cfg.min_points = 1;
  cfg.max_points = 8;
  return cfg;
}

GenConfig grid_config(std::uint64_t seed) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.dim = 2;
  cfg.min_points = 2;
  cfg.max_points = 5;
  return cfg;
}

/// Alternates 1-D and 2-D universes across trials.
GenConfig mixed_config(std::uint64_t seed, std::size_t trial) {
  return trial % 2 == 0 ? line_config(seed) : grid_config(seed);
}

SuiteResult run_check(std::string name, std::size_t trials,
                      const std::function<GenConfig(std::size_t)>& config_for, const Body& body) {
  SuiteResult result{std::move(name), trials, 0, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    Generator gen(config_for(t).for_trial(t));
    std::string why;
    bool ok = false;
    try {
      ok = body(gen, why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!ok) {
      ++result.failures;
      if (result.first_counterexample.empty()) {
        result.first_counterexample = "trial " + std::to_string(t) + ": " + why;
      }
    }
  }
  return result;
}

SuiteResult run_line(std::string name, std::uint64_t seed, std::size_t trials, const Body& body) {
  return run_check(std::move(name), trials, [seed](std::size_t) { return line_config(seed); }, body);
}

SuiteResult run_mixed(std::string name, std::uint64_t seed, std::size_t trials, const Body& body) {
  return run_check(std::move(name), trials,
                   [seed](std::size_t t) { return mixed_config(seed, t); }, body);
}

Hyp integer_hyp(Generator& g) {
  return Hyp(static_cast<double>(g.between(0, 2000)) - 1000.0,
             static_cast<double>(g.between(0, 2000)) - 1000.0);
}

Hyp real_hyp(Generator& g) { return Hyp(g.real(-1.0, 1.0), g.real(-1.0, 1.0)); }

std::string hyps(std::initializer_list<Hyp> xs) {
  std::string out;
  for (const Hyp& x : xs) {
    if (!out.empty()) out += ", ";
    out += to_string(x);
  }
  return out;
}

std::string sets(std::initializer_list<std::pair<const char*, const DFuzzySet*>> xs) {
  std::string out;
  for (const auto& [label, s] : xs) {
    if (!out.empty()) out += " ";
    out += std::string(label) + "=" + describe(*s);
  }
  return out;
}

// Standard-form product (x1 x2 + y1 y2, x1 y2 + y1 x2), written against the
// standard coordinates so it shares nothing with the idempotent product.
StandardForm standard_product(const StandardForm& a, const StandardForm& b) {
  return {a.a1 * b.a1 + a.a2 * b.a2, a.a1 * b.a2 + a.a2 * b.a1};
}

// ---- hyperbolic numbers -------------------------------------------------

std::vector<SuiteResult> ring_suite(std::uint64_t seed, std::size_t trials) {
  std::vector<SuiteResult> out;
  out.push_back(run_line("ring_constants", seed, 1, [](Generator&, std::string& why) {
    const Hyp e1 = Hyp::e1();
    const Hyp e2 = Hyp::e2();
    const Hyp k = Hyp::k();
    const bool ok = k * k == Hyp::one() && e1 * e1 == e1 && e2 * e2 == e2 &&
                    e1 + e2 == Hyp::one() && e1 * e2 == Hyp::zero();
    if (!ok) why = "k^2, e1^2, e2^2, e1+e2 or e1e2 differ from the identities";
    return ok;
  }));
  out.push_back(run_line("ring_laws", seed, trials, [](Generator& g, std::string& why) {
    const Hyp x = integer_hyp(g);
    const Hyp y = integer_hyp(g);
    const Hyp z = integer_hyp(g);
    const bool ok = (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) && x + y == y + x &&
                    x * y == y * x && x * (y + z) == x * y + x * z &&
                    modulus(x * y) == modulus(x) * modulus(y);
    if (!ok) why = hyps({x, y, z});
    return ok;
  }));
  out.push_back(run_line("standard_product", seed, trials, [](Generator& g, std::string& why) {
    const Hyp x = real_hyp(g);
    const Hyp y = real_hyp(g);
    const StandardForm expected = standard_product(x.to_standard(), y.to_standard());
    const StandardForm got = (x * y).to_standard();
    const bool ok = std::fabs(expected.a1 - got.a1) <= 1e-12 && std::fabs(expected.a2 - got.a2) <= 1e-12;
    if (!ok) why = hyps({x, y});
    return ok;
  }));
  return out;
}

std::vector<SuiteResult> order_suite(std::uint64_t seed, std::size_t trials) {
  std::vector<SuiteResult> out;
  out.push_back(run_line("order_axioms", seed, trials, [](Generator& g, std::string& why) {
    const Hyp x = g.hyp();
    const Hyp y = g.hyp();
    const Hyp z = g.hyp();
    bool ok = leq(x, x);
    if (leq(x, y) && leq(y, x)) ok = ok && x == y;
    if (leq(x, y) && leq(y, z)) ok = ok && leq(x, z);
    if (!ok) why = hyps({x, y, z});
    return ok;
  }));
  out.push_back(run_line("lattice_laws", seed, trials, [](Generator& g, std::string& why) {
    const Hyp x = g.hyp();
    const Hyp y = g.hyp();
    bool ok = order_max(x, order_min(x, y)) == x && order_min(x, order_max(x, y)) == x &&
              order_max(x, x) == x && order_min(x, x) == x;
    if (comparable(x, y)) {
      ok = ok && order_max(x, y, OrderMode::Strict) == order_max(x, y) &&
           order_min(x, y, OrderMode::Strict) == order_min(x, y);
    }
    if (!ok) why = hyps({x, y});
    return ok;
  }));
  out.push_back(run_line("metric_axioms", seed, trials, [](Generator& g, std::string& why) {
    const Hyp x = integer_hyp(g);
    const Hyp y = g.below(4) == 0 ? x : integer_hyp(g);
    const Hyp z = integer_hyp(g);
    const bool ok = leq(Hyp::zero(), metric(x, y)) && metric(x, x) == Hyp::zero() &&
                    ((metric(x, y) == Hyp::zero()) == (x == y)) && metric(x, y) == metric(y, x) &&
                    leq(metric(x, z), metric(x, y) + metric(y, z));
    if (!ok) why = hyps({x, y, z});
    return ok;
  }));
  return out;
}

// ---- set algebra --------------------------------------------------------

std::vector<SuiteResult> demorgan_suite(std::uint64_t seed, std::size_t trials) {
  std::vector<SuiteResult> out;
  out.push_back(run_mixed("demorgan_1a", seed, trials, [](Generator& g, std::string& why) {
    const auto u = g.universe();
    const DFuzzySet a = g.set(u);
    const DFuzzySet b = g.set(u);
    const bool ok = equals(complement(unite(a, b)), intersect(complement(a), complement(b)));
    if (!ok) why = sets({{"A", &a}, {"B", &b}});
    return ok;
  }));
  out.push_back(run_mixed("demorgan_1b", seed, trials, [](Generator& g, std::string& why) {
    const auto u = g.universe();
    const DFuzzySet a = g.set(u);
    const DFuzzySet b = g.set(u);
    const bool ok = equals(complement(intersect(a, b)), unite(complement(a), complement(b)));
    if (!ok) why = sets({{"A", &a}, {"B", &b}});
    return ok;
  }));
  return out;
}

std::vector<SuiteResult> distributive_suite(std::uint64_t seed, std::size_t trials) {
  std::vector<SuiteResult> out;
  out.push_back(run_mixed("distributive_2a", seed, trials, [](Generator& g, std::string& why) {
    const auto u = g.universe();
    const DFuzzySet a = g.set(u);
    const DFuzzySet b = g.set(u);
    const DFuzzySet c = g.set(u);
    const bool ok = equals(intersect(c, unite(a, b)), unite(intersect(c, a), intersect(c, b)));
    if (!ok) why = sets({{"A", &a}, {"B", &b}, {"C", &c}});
    return ok;
  }));
  out.push_back(run_mixed("distributive_2b", seed, trials, [](Generator& g, std::string& why) {
    const auto u = g.universe();
    const DFuzzySet a = g.set(u);
    const DFuzzySet b = g.set(u);
    const DFuzzySet c = g.set(u);
    const bool ok = equals(unite(c, intersect(a, b)), intersect(unite(c, a), unite(c, b)));
    if (!ok) why = sets({{"A", &a}, {"B", &b}, {"C", &c}});
    return ok;
  }));
  // The six strict orderings of three comparable grades, in both modes.
  out.push_back(run_line("distributive_six_cases", seed, trials, [](Generator& g, std::string& why) {
    std::array<std::size_t, 3> ku{};
    std::array<std::size_t, 3> kv{};
    const std::size_t d = g.config().grid_divisions;
    for (auto* ks : {&ku, &kv}) {
      do {
        for (auto& k : *ks) k = g.below(d + 1);
        std::sort(ks->begin(), ks->end());
      } while ((*ks)[0] == (*ks)[1] || (*ks)[1] == (*ks)[2]);
    }
    std::array<Hyp, 3> chain;
    for (std::size_t i = 0; i < 3; ++i) chain[i] = Hyp(double(ku[i]) / d, double(kv[i]) / d);
    std::array<std::size_t, 3> perm = {0, 1, 2};
    do {
      const Hyp a = chain[perm[0]];
      const Hyp b = chain[perm[1]];
      const Hyp c = chain[perm[2]];
      for (OrderMode m : {OrderMode::Strict, OrderMode::Lattice}) {
        const Hyp lhs_a = order_min(c, order_max(a, b, m), m);
        const Hyp rhs_a = order_max(order_min(c, a, m), order_min(c, b, m), m);
        const Hyp lhs_b = order_max(c, order_min(a, b, m), m);
        const Hyp rhs_b = order_min(order_max(c, a, m), order_max(c, b, m), m);
        if (!(lhs_a == rhs_a) || !(lhs_b == rhs_b)) {
          why = std::string(to_string(m)) + " mode, A,B,C = " + hyps({a, b, c});
          return false;
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
  }));
  return out;
}

std::vector<SuiteResult> propositions_suite(std::uint64_t seed, std::size_t trials) {
  std::vector<SuiteResult> out;
  out.push_back(run_mixed("prop1_union_smallest", seed, trials, [](Generator& g, std::string& why) {
    const auto u = g.universe();
    const DFuzzySet a = g.set(u);
    const DFuzzySet b = g.set(u);
    const DFuzzySet c = unite(a, b);
    std::vector<Hyp> bumped;
    for (const Hyp& x : c.values()) {
      bumped.emplace_back(std::min(1.0, x.u() + g.level()), std::min(1.0, x.v() + g.level()));
    }
    const DFuzzySet d(u, std::move(bumped));
    bool ok = bool(is_subset(a, c)) && bool(is_subset(b, c));
    if (is_subset(a, d) && is_subset(b, d)) ok = ok && bool(is_subset(c, d));
    if (!ok) why = sets({{"A", &a}, {"B", &b}, {"D", &d}});
    return ok;
  }));
  out.push_back(run_mixed("prop2_intersection_largest", seed, trials, [](Generator& g, std::string& why) {
    const auto u = g.universe();
    const DFuzzySet a = g.set(u);
    const DFuzzySet b = g.set(u);
    const DFuzzySet c = intersect(a, b);
    std::vector<Hyp> lowered;
    for (const Hyp& x : c.values()) {
      lowered.emplace_back(std::max(0.0, x.u() - g.level()), std::max(0.0, x.v() - g.level()));
    }
    const DFuzzySet d(u, std::move(lowered));
    bool ok = bool(is_subset(c, a)) && bool(is_subset(c, b));
    if (is_subset(d, a) && is_subset(d, b)) ok = ok && bool(is_subset(d, c));
    if (!ok) why = sets({{"A", &a}, {"B", &b}, {"D", &d}});
    return ok;
  }));
  return out;
}

std::vector<SuiteResult> algebra_suite(std::uint64_t seed, std::size_t trials) {
  std::vector<SuiteResult> out;
  out.push_back(run_mixed("lattice_set_laws", seed, trials, [](Generator& g, std::string& why) {
    const auto u = g.universe();
    const DFuzzySet a = g.set(u);
    const DFuzzySet b = g.set(u);
    const DFuzzySet c = g.set(u);
    const bool ok = equals(unite(a, a), a) && equals(intersect(a, a), a) &&
                    equals(unite(a, b), unite(b, a)) && equals(intersect(a, b), intersect(b, a)) &&
                    equals(unite(unite(a, b), c), unite(a, unite(b, c))) &&
                    equals(intersect(intersect(a, b), c), intersect(a, intersect(b, c))) &&
                    equals(unite(a, intersect(a, b)), a) && equals(intersect(a, unite(a, b)), a);
    if (!ok) why = sets({{"A", &a}, {"B", &b}, {"C", &c}});
    return ok;
  }));
  out.push_back(run_mixed("decompose_commutes", seed, trials, [](Generator& g, std::string& why) {
    const auto u = g.universe();
    const DFuzzySet a = g.set(u);
    const DFuzzySet b = g.set(u);
    const auto [a1, a2] = decompose(a);
    const auto [b1, b2] = decompose(b);
    const auto [j1, j2] = decompose(unite(a, b));
    const auto [m1, m2] = decompose(intersect(a, b));
    bool ok = equals(recompose(a1, a2), a);
    for (std::size_t i = 0; i < a.size(); ++i) {
      ok = ok && j1[i] == std::max(a1[i], b1[i]) && j2[i] == std::max(a2[i], b2[i]) &&
           m1[i] == std::min(a1[i], b1[i]) && m2[i] == std::min(a2[i], b2[i]);
    }
    if (!ok) why = sets({{"A", &a}, {"B", &b}});
    return ok;
  }));
  out.push_back(run_mixed("sum_with_complement", seed, trials, [](Generator& g, std::string& why) {
    const DFuzzySet a = g.set();
    const bool ok = equals(algebraic_sum(a, complement(a)), DFuzzySet::constant(a.universe_ptr(), Hyp::one()));
    if (!ok) why = sets({{"A", &a}});
    return ok;
  }));
  return out;
}

std::vector<SuiteResult> sandwich_suite(std::uint64_t seed, std::size_t trials) {
  std::vector<SuiteResult> out;
  out.push_back(run_mixed("convex_combination_sandwich", seed, trials, [](Generator& g, std::string& why) {
    const auto u = g.universe();
    const DFuzzySet a = g.set(u);
    const DFuzzySet b = g.set(u);
    const DFuzzySet l = g.set(u);
    const DFuzzySet mix = convex_combination(a, b, l);
    const bool ok = bool(is_subset(intersect(a, b), mix)) && bool(is_subset(mix, unite(a, b)));
    if (!ok) why = sets({{"A", &a}, {"B", &b}, {"L", &l}});
    return ok;
  }));
  return out;
}

// ---- convexity ----------------------------------------------------------

bool both_components_quasi_concave(const DFuzzySet& a) {
  const auto [first, second] = decompose(a);
  return scalar_quasi_concave(a.universe(), first.values()) &&
         scalar_quasi_concave(a.universe(), second.values());
}

std::vector<SuiteResult> equivalence_suite(std::uint64_t seed, std::size_t trials) {
  std::vector<SuiteResult> out;
  // Cut-based and pointwise convexity coincide when no grade has exactly one
  // zero component; draw from that domain, half random and half convex.
  auto zd_free = [seed](std::size_t t) {
    GenConfig cfg = mixed_config(seed, t / 2);
    cfg.allow_zero_divisors = false;
    return cfg;
  };
  out.push_back(run_check("dc1_dc2_equivalence", trials, zd_free, [](Generator& g, std::string& why) {
    const DFuzzySet a = g.config().seed % 2 == 0 ? g.set() : g.convex_set();
    if (has_zero_divisor_grade(a)) return true;
    const bool by_cuts = convex_by_cuts(a).convex;
    const bool pointwise = convex_pointwise(a).convex;
    if (by_cuts != pointwise) why = sets({{"A", &a}});
    return by_cuts == pointwise;
  }));
  out.push_back(run_mixed("decomposition_criterion", seed, trials, [](Generator& g, std::string& why) {
    const DFuzzySet a = g.below(2) == 0 ? g.set() : g.convex_set();
    const bool pointwise = convex_pointwise(a).convex;
    const bool scalar = both_components_quasi_concave(a);
    if (pointwise != scalar) why = sets({{"A", &a}});
    return pointwise == scalar;
  }));
  return out;
}

std::vector<SuiteResult> convexity_suite(std::uint64_t seed, std::size_t trials) {
  std::vector<SuiteResult> out;
  out.push_back(run_mixed("intersection_convexity", seed, trials, [](Generator& g, std::string& why) {
    const auto u = g.universe();
    const DFuzzySet a = g.convex_set(u);
    const DFuzzySet b = g.convex_set(u);
    const DFuzzySet c = intersect(a, b);
    const bool ok = convex_pointwise(c).convex && convex_by_cuts(c).convex;
    if (!ok) why = sets({{"A", &a}, {"B", &b}});
    return ok;
  }));
  out.push_back(run_line("product_convexity", seed, trials, [](Generator& g, std::string& why) {
    const DFuzzySet a = g.convex_set();
    const DFuzzySet b = g.convex_set();
    const DFuzzySet c = cartesian_product(a, b);
    const bool ok = convex_pointwise(c).convex && convex_by_cuts(c).convex;
    if (!ok) why = sets({{"A", &a}, {"B", &b}});
    return ok;
  }));
  out.push_back(run_line("cylinder_convexity", seed, trials, [](Generator& g, std::string& why) {
    auto block = [&g](const UniversePtr& u) {
      const std::size_t n = u->size();
      const std::size_t lo = g.below(n);
      const std::size_t hi = g.between(lo, n - 1);
      std::vector<bool> flags(n);
      for (std::size_t i = lo; i <= hi; ++i) flags[i] = true;
      return DFuzzySet::from_crisp(u, flags);
    };
    const DFuzzySet a = block(g.universe());
    const DFuzzySet b = block(g.universe());
    const DFuzzySet c = cartesian_product(a, b);
    const bool ok = convex_pointwise(c).convex && convex_by_cuts(c).convex;
    if (!ok) why = sets({{"A", &a}, {"B", &b}});
    return ok;
  }));
  out.push_back(run_line("strong_convexity_intersection", seed, trials, [](Generator& g, std::string& why) {
    const auto u = g.universe();
    const DFuzzySet a = g.convex_set(u, {.strict = true});
    const DFuzzySet b = g.convex_set(u, {.strict = true});
    const bool ok = strongly_convex(intersect(a, b)).convex;
    if (!ok) why = sets({{"A", &a}, {"B", &b}});
    return ok;
  }));
  return out;
}

std::vector<SuiteResult> core_suite(std::uint64_t seed, std::size_t trials) {
  std::vector<SuiteResult> out;
  out.push_back(run_mixed("core_convexity", seed, trials, [](Generator& g, std::string& why) {
    const DFuzzySet a = g.convex_set({.shared_peak = true});
    const auto sup = essential_supremum(a);
    const auto c = core(a);
    const bool ok = sup.attained && !c.empty() && is_grid_convex(a.universe(), c);
    if (!ok) why = sets({{"A", &a}});
    return ok;
  }));
  out.push_back(run_line("core_singleton", seed, trials, [](Generator& g, std::string& why) {
    const DFuzzySet a = g.convex_set({.shared_peak = true, .strict = true});
    const bool ok = essential_supremum(a).attained && core(a).size() == 1;
    if (!ok) why = sets({{"A", &a}});
    return ok;
  }));
  return out;
}

std::vector<SuiteResult> shadow_suite(std::uint64_t seed, std::size_t trials) {
  std::vector<SuiteResult> out;
  out.push_back(run_check("shadow_convexity", trials, [seed](std::size_t) { return grid_config(seed); },
                          [](Generator& g, std::string& why) {
                            const DFuzzySet a = g.convex_set();
                            for (std::size_t axis = 0; axis < 2; ++axis) {
                              const DFuzzySet s = shadow(a, axis);
                              if (!convex_pointwise(s).convex || !convex_by_cuts(s).convex) {
                                why = "axis " + std::to_string(axis) + " " + sets({{"A", &a}});
                                return false;
                              }
                            }
                            return true;
                          }));
  return out;
}

std::vector<SuiteResult> separation_suite(std::uint64_t seed, std::size_t trials) {
  std::vector<SuiteResult> out;
  out.push_back(run_line("separation_theorem", seed, trials, [](Generator& g, std::string& why) {
    const auto u = g.universe();
    const DFuzzySet a = g.convex_set(u);
    const DFuzzySet b = g.convex_set(u);
    const SeparationReport r = optimal_separation(a, b);
    const Hyp m = essential_supremum(intersect(a, b)).value;
    const Hyp expected = Hyp::one() - m;
    const bool ok = std::fabs(r.best_degree.u() - expected.u()) <= 1e-12 &&
                    std::fabs(r.best_degree.v() - expected.v()) <= 1e-12 &&
                    leq(r.joint_best_degree, r.best_degree);
    if (!ok) why = sets({{"A", &a}, {"B", &b}}) + " D=" + to_string(r.best_degree) + " M=" + to_string(m);
    return ok;
  }));
  return out;
}

std::vector<SuiteResult> cuts_suite(std::uint64_t seed, std::size_t trials) {
  std::vector<SuiteResult> out;
  out.push_back(run_mixed("alpha_cut_antitone", seed, trials, [](Generator& g, std::string& why) {
    const DFuzzySet a = g.set();
    const auto alphas = candidate_alphas(a);
    std::vector<std::vector<std::size_t>> cuts;
    for (const Hyp& alpha : alphas) cuts.push_back(alpha_cut(a, alpha));
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      for (std::size_t j = 0; j < alphas.size(); ++j) {
        if (!leq(alphas[i], alphas[j])) continue;
        if (!std::includes(cuts[i].begin(), cuts[i].end(), cuts[j].begin(), cuts[j].end())) {
          why = "alphas " + hyps({alphas[i], alphas[j]}) + " " + sets({{"A", &a}});
          return false;
        }
      }
    }
    return true;
  }));
  out.push_back(run_mixed("bounding_radius_monotone", seed, trials, [](Generator& g, std::string& why) {
    const DFuzzySet a = g.set();
    const auto radii = bounding_radius(a);
    for (const auto& lo : radii) {
      for (const auto& hi : radii) {
        if (leq(lo.alpha, hi.alpha) && !leq(hi.radius, lo.radius)) {
          why = "alphas " + hyps({lo.alpha, hi.alpha}) + " " + sets({{"A", &a}});
          return false;
        }
      }
    }
    return true;
  }));
  return out;
}

using SuiteFn = std::vector<SuiteResult> (*)(std::uint64_t, std::size_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"ring", ring_suite},
      {"order", order_suite},
      {"demorgan", demorgan_suite},
      {"distributive", distributive_suite},
      {"propositions", propositions_suite},
      {"algebra", algebra_suite},
      {"sandwich", sandwich_suite},
      {"equivalence", equivalence_suite},
      {"convexity", convexity_suite},
      {"core", core_suite},
      {"shadow", shadow_suite},
      {"separation", separation_suite},
      {"cuts", cuts_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<SuiteResult> run_suite(std::string_view name, std::uint64_t seed, std::size_t trials) {
  std::vector<SuiteResult> out;
  for (const auto& [suite, fn] : registry()) {
    if (name == "all" || name == suite) {
      auto part = fn(seed, trials);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  if (out.empty()) {
    std::string known = "all";
    for (const auto& n : suite_names()) known += ", " + n;
    throw UsageError("unknown property suite '" + std::string(name) + "' (known: " + known + ")");
  }
  return out;
}

}  // namespace hyperfuzzy::testkit
