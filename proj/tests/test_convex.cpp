#include <gtest/gtest.h>

#include <algorithm>

#include "hyperfuzzy/convex.hpp"
#include "hyperfuzzy/error.hpp"
#include "support.hpp"

namespace hyperfuzzy {
namespace {

using test::diag;
using test::idx;
using test::pairs;

UniversePtr square(std::size_t w, std::size_t h) {
  const std::size_t extents[] = {w, h};
  return Universe::grid(extents);
}

bool has_alpha(const std::vector<Hyp>& alphas, const Hyp& x) {
  return std::find(alphas.begin(), alphas.end(), x) != alphas.end();
}

// ---- cuts -----------------------------------------------------------------

TEST(AlphaCut, Examples) {
  const auto u = Universe::line(4);
  const DFuzzySet a = diag(u, {0.2, 0.7, 0.7, 0.3});
  EXPECT_EQ(alpha_cut(a, Hyp(0.5, 0.5)), idx({1, 2}));
  EXPECT_EQ(alpha_cut(a, Hyp(0.2, 0.2)), idx({0, 1, 2, 3}));
  EXPECT_TRUE(alpha_cut(a, Hyp::one()).empty());
  const DFuzzySet b = pairs(u, {{1, 1}, {1, 0.9}, {0.3, 0.3}, {1, 1}});
  EXPECT_EQ(alpha_cut(b, Hyp::one()), idx({0, 3}));
}

TEST(AlphaCut, ExcludesIncomparableMembership) {
  const auto u = Universe::line(2);
  const DFuzzySet a = pairs(u, {{0.6, 0.2}, {0.6, 0.6}});
  EXPECT_EQ(alpha_cut(a, Hyp(0.4, 0.4)), idx({1}));
}

TEST(AlphaCut, RejectsOutOfRangeAlpha) {
  const DFuzzySet a = diag(Universe::line(2), {0.1, 0.2});
  EXPECT_THROW(alpha_cut(a, Hyp::zero()), RangeError);
  EXPECT_THROW(alpha_cut(a, Hyp(0.5, 0)), RangeError);
  EXPECT_THROW(alpha_cut(a, Hyp(1.1, 0.5)), RangeError);
}

TEST(CandidateAlphas, CrossProductOfPositiveValues) {
  const auto u = Universe::line(3);
  EXPECT_EQ(candidate_alphas(DFuzzySet::constant(u, Hyp(0.3, 0.4))), std::vector<Hyp>{Hyp(0.3, 0.4)});
  const auto two = candidate_alphas(diag(u, {0.2, 0.5, 0.5}));
  ASSERT_EQ(two.size(), 4u);
  for (const Hyp& x : {Hyp(0.2, 0.2), Hyp(0.2, 0.5), Hyp(0.5, 0.2), Hyp(0.5, 0.5)}) EXPECT_TRUE(has_alpha(two, x));
  const auto zero = candidate_alphas(pairs(u, {{0, 0.4}, {0.3, 0.4}, {0.3, 0}}));
  EXPECT_EQ(zero, std::vector<Hyp>{Hyp(0.3, 0.4)});
}

// ---- convexity ------------------------------------------------------------

TEST(Convexity, UnimodalIsConvex) {
  const DFuzzySet a = diag(Universe::line(4), {0.1, 0.5, 0.3, 0.2});
  EXPECT_TRUE(convex_by_cuts(a).convex);
  EXPECT_TRUE(convex_pointwise(a).convex);
  EXPECT_TRUE(convex_pointwise(a, OrderMode::Strict).convex);
}

TEST(Convexity, DipIsNotConvexWithWitness) {
  const DFuzzySet a = diag(Universe::line(4), {0.5, 0.1, 0.5, 0.2});
  for (const ConvexityReport& r : {convex_by_cuts(a), convex_pointwise(a)}) {
    EXPECT_FALSE(r.convex);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->first, 0u);
    EXPECT_EQ(r.witness->second, 2u);
    EXPECT_EQ(r.witness->between, 1u);
    EXPECT_DOUBLE_EQ(r.witness->lambda, 0.5);
  }
  const ConvexityReport cuts = convex_by_cuts(a);
  ASSERT_TRUE(cuts.witness->alpha.has_value());
  // The witness is re-checkable: both ends are in the cut, the middle is not.
  const auto cut = alpha_cut(a, *cuts.witness->alpha);
  EXPECT_TRUE(std::binary_search(cut.begin(), cut.end(), 0u));
  EXPECT_TRUE(std::binary_search(cut.begin(), cut.end(), 2u));
  EXPECT_FALSE(std::binary_search(cut.begin(), cut.end(), 1u));
}

TEST(Convexity, CrispBlocksAndConstants) {
  const auto u = Universe::line(5);
  const DFuzzySet block = DFuzzySet::from_crisp(u, {false, true, true, true, false});
  EXPECT_TRUE(convex_by_cuts(block).convex);
  EXPECT_TRUE(convex_pointwise(block).convex);
  const DFuzzySet gap = DFuzzySet::from_crisp(u, {true, false, true, false, false});
  EXPECT_FALSE(convex_by_cuts(gap).convex);
  EXPECT_FALSE(convex_pointwise(gap).convex);
  EXPECT_TRUE(convex_pointwise(DFuzzySet::constant(u, Hyp(0.3, 0.8))).convex);
}

TEST(Convexity, IncomparableEndpointsUseMeet) {
  const DFuzzySet a = pairs(Universe::line(3), {{0.5, 0.2}, {0.2, 0.2}, {0.2, 0.5}});
  const ConvexityReport r = convex_pointwise(a);
  EXPECT_TRUE(r.convex);
  EXPECT_EQ(r.incomparable_pairs, 1u);
  EXPECT_THROW(convex_pointwise(a, OrderMode::Strict), IncomparableError);
  EXPECT_TRUE(convex_by_cuts(a).convex);
}

TEST(Convexity, TwoDimensionalDiagonal) {
  const auto g = square(3, 3);
  std::vector<Hyp> values(9, Hyp::zero());
  values[0] = Hyp::one();
  values[8] = Hyp::one();
  const DFuzzySet corners(g, values);
  const ConvexityReport r = convex_pointwise(corners);
  EXPECT_FALSE(r.convex);
  EXPECT_EQ(r.witness->between, 4u);
  values[4] = Hyp::one();
  EXPECT_TRUE(convex_by_cuts(DFuzzySet(g, values)).convex);
}

TEST(Convexity, GridConvexPointSets) {
  const auto line = Universe::line(4);
  EXPECT_TRUE(is_grid_convex(*line, idx({1, 2, 3})));
  EXPECT_FALSE(is_grid_convex(*line, idx({0, 2})));
  EXPECT_TRUE(is_grid_convex(*line, idx({})));
}

TEST(StrongConvexity, Examples) {
  EXPECT_TRUE(strongly_convex(diag(Universe::line(3), {0.1, 0.5, 0.3})).convex);
  EXPECT_FALSE(strongly_convex(DFuzzySet::constant(Universe::line(3), Hyp(0.4, 0.4))).convex);
  EXPECT_TRUE(strongly_convex(DFuzzySet::constant(Universe::line(2), Hyp(0.4, 0.4))).convex);
  // Strict in one component only is not enough.
  EXPECT_FALSE(strongly_convex(pairs(Universe::line(3), {{0.1, 0.2}, {0.5, 0.2}, {0.3, 0.2}})).convex);
}

// ---- boundedness, supremum, core -------------------------------------------

TEST(BoundingRadius, Examples) {
  const auto u = Universe::from_points({{0, 0}, {3, 4}});
  const auto radii = bounding_radius(pairs(u, {{0.2, 0.2}, {0.8, 0.8}}));
  ASSERT_EQ(radii.size(), 4u);
  for (const RadiusEntry& e : radii) {
    if (e.alpha == Hyp(0.8, 0.8)) EXPECT_EQ(e.radius, Hyp(5, 5));
    if (e.alpha == Hyp(0.2, 0.2)) EXPECT_EQ(e.radius, Hyp(5, 5));
  }
  // (0.8, 0.2) keeps only (3,4); (0.2, 0.8) as well. Empty cuts give 0.
  const auto empty_cut = bounding_radius(pairs(u, {{0.9, 0.1}, {0.1, 0.9}}));
  for (const RadiusEntry& e : empty_cut) {
    if (e.alpha == Hyp(0.9, 0.9)) EXPECT_EQ(e.radius, Hyp::zero());
  }
}

TEST(EssentialSupremum, Examples) {
  const auto u = Universe::line(2);
  const Supremum m = essential_supremum(pairs(u, {{0.8, 0.1}, {0.1, 0.9}}));
  EXPECT_EQ(m.value, Hyp(0.8, 0.9));
  EXPECT_FALSE(m.attained);
  const Supremum c = essential_supremum(DFuzzySet::constant(u, Hyp(0.3, 0.6)));
  EXPECT_EQ(c.value, Hyp(0.3, 0.6));
  EXPECT_TRUE(c.attained);
  const Supremum crisp = essential_supremum(DFuzzySet::from_crisp(u, {false, true}));
  EXPECT_EQ(crisp.value, Hyp::one());
  EXPECT_TRUE(crisp.attained);
}

TEST(QSet, Examples) {
  const auto u = Universe::line(4);
  const DFuzzySet a = diag(u, {0.2, 0.7, 0.7, 0.3});
  EXPECT_EQ(q_set(a, Hyp(0.05, 0.05)), idx({1, 2}));
  EXPECT_EQ(q_set(a, Hyp(0.7, 0.7)), idx({0, 1, 2, 3}));
  const DFuzzySet split = pairs(Universe::line(2), {{0.8, 0.1}, {0.1, 0.9}});
  EXPECT_TRUE(q_set(split, Hyp(0.05, 0.05)).empty());
  EXPECT_THROW(q_set(a, Hyp(0.05, 0)), RangeError);
  EXPECT_THROW(q_set(a, Hyp::zero()), RangeError);
}

TEST(Core, Examples) {
  const auto u = Universe::line(4);
  const auto c = core(diag(u, {0.2, 0.7, 0.7, 0.3}));
  EXPECT_EQ(c, idx({1, 2}));
  EXPECT_TRUE(is_grid_convex(*u, c));
  EXPECT_EQ(core(diag(Universe::line(5), {0.1, 0.3, 0.9, 0.4, 0.2})), idx({2}));
  EXPECT_TRUE(core(pairs(Universe::line(2), {{0.8, 0.1}, {0.1, 0.9}})).empty());
}

// ---- shadows --------------------------------------------------------------

TEST(Shadow, FiberSupremum) {
  // Row-major 2x2: (0,0), (0,1), (1,0), (1,1).
  const DFuzzySet a = diag(square(2, 2), {0.1, 0.3, 0.4, 0.2});
  const DFuzzySet s = shadow(a, 0);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.universe().dim(), 1u);
  EXPECT_EQ(s.universe().coord(0, 0), 0);
  EXPECT_EQ(s[0], Hyp(0.4, 0.4));
  EXPECT_EQ(s[1], Hyp(0.3, 0.3));
  const DFuzzySet t = shadow(a, 1);
  EXPECT_EQ(t[0], Hyp(0.3, 0.3));
  EXPECT_EQ(t[1], Hyp(0.4, 0.4));
}

TEST(Shadow, ConstantsAndCrispRectangles) {
  const auto g = square(3, 4);
  const DFuzzySet c = shadow(DFuzzySet::constant(g, Hyp(0.2, 0.6)), 1);
  EXPECT_TRUE(equals(c, DFuzzySet::constant(c.universe_ptr(), Hyp(0.2, 0.6))));

  std::vector<bool> rect(12, false);
  for (std::size_t x = 1; x <= 2; ++x) {
    for (std::size_t y = 1; y <= 2; ++y) rect[x * 4 + y] = true;
  }
  const DFuzzySet s = shadow(DFuzzySet::from_crisp(g, rect), 0);
  EXPECT_TRUE(equals(s, DFuzzySet::from_crisp(s.universe_ptr(), {false, true, true, false})));
}

TEST(Shadow, Preconditions) {
  EXPECT_THROW(shadow(diag(Universe::line(2), {0.1, 0.2}), 0), PreconditionError);
  EXPECT_THROW(shadow(DFuzzySet::empty(square(2, 2)), 2), PreconditionError);
}

TEST(ShadowWitness, Verdicts) {
  const auto g = square(2, 2);
  const DFuzzySet a = diag(g, {0.1, 0.3, 0.4, 0.2});
  const std::size_t axes[] = {0, 1};
  EXPECT_EQ(shadow_witness(a, a, axes).verdict, ShadowComparison::Verdict::Equal);

  const DFuzzySet b = diag(g, {0.1, 0.3, 0.5, 0.2});
  const ShadowComparison d = shadow_witness(a, b, axes);
  EXPECT_EQ(d.verdict, ShadowComparison::Verdict::Differs);
  EXPECT_EQ(d.axis, std::optional<std::size_t>(0));

  // Opposite diagonals of a 2x2 grid: both convex (no interior segment
  // points), different, with identical axis-aligned shadows.
  const DFuzzySet main = diag(g, {1, 0, 0, 1});
  const DFuzzySet anti = diag(g, {0, 1, 1, 0});
  ASSERT_TRUE(convex_pointwise(main).convex);
  ASSERT_TRUE(convex_pointwise(anti).convex);
  const ShadowComparison inc = shadow_witness(main, anti, axes);
  EXPECT_EQ(inc.verdict, ShadowComparison::Verdict::Inconclusive);
  EXPECT_FALSE(inc.axis.has_value());
  EXPECT_EQ(to_string(inc.verdict), "inconclusive");
}

// ---- separation -----------------------------------------------------------

TEST(Separation, WorkedPair) {
  const auto u = Universe::line(5);
  const DFuzzySet a = diag(u, {0.2, 0.8, 0.5, 0.2, 0.0});
  const DFuzzySet b = diag(u, {0.0, 0.2, 0.5, 0.8, 0.2});
  EXPECT_EQ(separation_degree(a, b, {0, 2.5}), Hyp(0.5, 0.5));
  const SeparationReport r = optimal_separation(a, b);
  EXPECT_EQ(r.best_degree, Hyp(0.5, 0.5));
  EXPECT_EQ(r.intersection_max, Hyp(0.5, 0.5));
  EXPECT_EQ(r.best_degree, Hyp::one() - r.intersection_max);
  EXPECT_TRUE(leq(r.joint_best_degree, r.best_degree));
}

TEST(Separation, DisjointCrispBlocks) {
  const auto u = Universe::line(6);
  const DFuzzySet a = DFuzzySet::from_crisp(u, {true, true, false, false, false, false});
  const DFuzzySet b = DFuzzySet::from_crisp(u, {false, false, false, true, true, false});
  EXPECT_EQ(separation_degree(a, b, {0, 2.5}), Hyp::one());
  // On a boundary point both sides are capped by it.
  EXPECT_EQ(separation_degree(a, b, {0, 1}), Hyp::zero());
  const SeparationReport r = optimal_separation(a, b);
  EXPECT_EQ(r.best_degree, Hyp::one());
  EXPECT_EQ(r.intersection_max, Hyp::zero());
}

TEST(Separation, EqualConstants) {
  const auto u = Universe::line(4);
  const DFuzzySet c = DFuzzySet::constant(u, Hyp(0.25, 0.5));
  for (const Hyperplane& h : candidate_hyperplanes(*u)) {
    EXPECT_EQ(separation_degree(c, c, h), Hyp(0.75, 0.5));
  }
}

TEST(Separation, EqualConvexSets) {
  const auto u = Universe::line(5);
  const DFuzzySet a = pairs(u, {{0.1, 0.0}, {0.4, 0.3}, {0.9, 0.6}, {0.5, 0.6}, {0.2, 0.1}});
  const SeparationReport r = optimal_separation(a, a);
  EXPECT_EQ(r.best_degree, Hyp::one() - essential_supremum(a).value);
}

TEST(Separation, PerComponentHyperplanes) {
  // e1 is separable at 1.5, e2 at 2.5; no single hyperplane does both.
  const auto u = Universe::line(4);
  const DFuzzySet a = pairs(u, {{1, 1}, {1, 1}, {0, 1}, {0, 0}});
  const DFuzzySet b = pairs(u, {{0, 0}, {0, 0}, {1, 0}, {1, 1}});
  const SeparationReport r = optimal_separation(a, b);
  EXPECT_EQ(r.best_degree, Hyp::one());
  EXPECT_EQ(r.best_hyperplane_u.threshold, 1.5);
  EXPECT_EQ(r.best_hyperplane_v.threshold, 2.5);
  EXPECT_TRUE(leq(r.joint_best_degree, r.best_degree));
  EXPECT_NE(r.joint_best_degree, r.best_degree);
}

TEST(Separation, CandidateHyperplanes) {
  const auto u = Universe::from_points({{0}, {1}, {3}});
  const auto hs = candidate_hyperplanes(*u);
  ASSERT_EQ(hs.size(), 4u);
  EXPECT_EQ(hs[0].threshold, -1);
  EXPECT_EQ(hs[1].threshold, 0.5);
  EXPECT_EQ(hs[2].threshold, 2);
  EXPECT_EQ(hs[3].threshold, 4);
  EXPECT_EQ(candidate_hyperplanes(*square(2, 3)).size(), 3u + 4u);
}

TEST(Separation, Preconditions) {
  const DFuzzySet a = DFuzzySet::empty(Universe::line(3));
  const DFuzzySet b = DFuzzySet::empty(Universe::line(4));
  EXPECT_THROW(optimal_separation(a, b), UniverseMismatch);
  EXPECT_THROW(separation_degree(a, a, {1, 0.5}), PreconditionError);
}

}  // namespace
}  // namespace hyperfuzzy
