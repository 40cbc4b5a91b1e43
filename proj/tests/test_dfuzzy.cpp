#include <gtest/gtest.h>

#include "hyperfuzzy/dfuzzy.hpp"
#include "hyperfuzzy/error.hpp"
#include "support.hpp"

namespace hyperfuzzy {
namespace {

using test::diag;
using test::pairs;

// ---- universe -------------------------------------------------------------

TEST(Universe, Validation) {
  EXPECT_THROW(Universe::create(1, {}), ValidationError);
  EXPECT_THROW(Universe::create(0, {1.0}), ValidationError);
  EXPECT_THROW(Universe::create(2, {1.0, 2.0, 3.0}), ValidationError);
  EXPECT_THROW(Universe::create(1, {0.0, 1.0, 0.0}), ValidationError);
  EXPECT_THROW(Universe::create(1, {0.0, 1.0}, {"only one"}), ValidationError);
  EXPECT_THROW(Universe::from_points({{0.0, 1.0}, {0.0}}), ValidationError);
}

TEST(Universe, GridIsRowMajor) {
  const std::size_t extents[] = {2, 3};
  const auto g = Universe::grid(extents);
  ASSERT_EQ(g->size(), 6u);
  EXPECT_EQ(g->coord(1, 0), 0);
  EXPECT_EQ(g->coord(1, 1), 1);
  EXPECT_EQ(g->coord(3, 0), 1);
  EXPECT_EQ(g->coord(3, 1), 0);
}

TEST(Universe, ProductOrderAndLabels) {
  const auto x = Universe::from_points({{0}, {1}}, {"a", "b"});
  const auto y = Universe::from_points({{5}, {6}, {7}}, {"p", "q", "r"});
  const auto xy = Universe::product(*x, *y);
  ASSERT_EQ(xy->size(), 6u);
  EXPECT_EQ(xy->dim(), 2u);
  EXPECT_EQ(xy->describe(1), "(a, q)");
  EXPECT_EQ(xy->coord(4, 0), 1);
  EXPECT_EQ(xy->coord(4, 1), 6);
}

TEST(Universe, SegmentPoints) {
  const auto line = Universe::line(4);
  const auto seg = line->segment(0, 3);
  ASSERT_EQ(seg.size(), 2u);
  EXPECT_EQ(seg[0].index, 1u);
  EXPECT_NEAR(seg[0].lambda, 1.0 / 3.0, 1e-15);
  EXPECT_EQ(seg[1].index, 2u);
  EXPECT_NEAR(seg[1].lambda, 2.0 / 3.0, 1e-15);
  EXPECT_TRUE(line->segment(1, 2).empty());

  const auto rev = line->segment(3, 0);
  ASSERT_EQ(rev.size(), 2u);
  EXPECT_EQ(rev[0].index, 2u);
  EXPECT_NEAR(rev[0].lambda, 1.0 / 3.0, 1e-15);

  const std::size_t extents[] = {3, 3};
  const auto grid = Universe::grid(extents);
  const auto diagonal = grid->segment(0, 8);
  ASSERT_EQ(diagonal.size(), 1u);
  EXPECT_EQ(diagonal[0].index, 4u);
  EXPECT_DOUBLE_EQ(diagonal[0].lambda, 0.5);
  EXPECT_THROW(grid->segment(2, 2), PreconditionError);
}

TEST(Universe, IrregularPointsCollinearity) {
  const auto u = Universe::from_points({{0, 0}, {1, 0.5}, {2, 1}, {1, 0.6}});
  const auto seg = u->segment(0, 2);
  ASSERT_EQ(seg.size(), 1u);
  EXPECT_EQ(seg[0].index, 1u);
}

// ---- construction ---------------------------------------------------------

TEST(DFuzzySet, Construction) {
  const auto u = Universe::line(3);
  EXPECT_TRUE(DFuzzySet(u, {Hyp::zero(), Hyp::zero(), Hyp::zero()}).is_empty());
  EXPECT_THROW(DFuzzySet(u, {Hyp::zero()}), LengthMismatch);
  try {
    pairs(u, {{0.1, 0.1}, {1.2, 0.5}, {0, 0}});
    FAIL();
  } catch (const RangeError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("point 1"), std::string::npos);
    EXPECT_NE(what.find("e1"), std::string::npos);
  }
  EXPECT_THROW(pairs(u, {{0.1, 0.1}, {0.5, -0.01}, {0, 0}}), RangeError);
}

TEST(DFuzzySet, ExampleOneMembership) {
  const auto u = Universe::from_points({{5, 2}, {5, 5}}, {"5e1+2e2", "5"});
  const DFuzzySet a(u, {Hyp(0.06, 0.04), Hyp::from_standard(0.065, -0.005)});
  EXPECT_EQ(to_string(a[1]), "0.06e1+0.07e2");
}

TEST(DFuzzySet, FromCrisp) {
  const auto u = Universe::line(3);
  EXPECT_TRUE(equals(DFuzzySet::from_crisp(u, {true, true, true}), DFuzzySet::constant(u, Hyp::one())));
  EXPECT_TRUE(DFuzzySet::from_crisp(u, {false, false, false}).is_empty());
  EXPECT_TRUE(equals(complement(DFuzzySet::from_crisp(u, {true, false, true})),
                     DFuzzySet::from_crisp(u, {false, true, false})));
  EXPECT_THROW(DFuzzySet::from_crisp(u, {true}), LengthMismatch);
}

TEST(DFuzzySet, DecomposeRecompose) {
  const auto u = Universe::line(3);
  const auto [first, second] = decompose(DFuzzySet::constant(u, Hyp(0.06, 0.07)));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(first[i], 0.06);
    EXPECT_EQ(second[i], 0.07);
  }
  const DFuzzySet crisp = DFuzzySet::from_crisp(u, {true, false, true});
  const auto [c1, c2] = decompose(crisp);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(c1[i], c2[i]);
  const DFuzzySet a = pairs(u, {{0.1, 0.9}, {0.5, 0.2}, {0, 1}});
  const auto [a1, a2] = decompose(a);
  EXPECT_TRUE(equals(recompose(a1, a2), a));
  EXPECT_THROW(OrdinaryFuzzySet(u, {0.1, 1.5, 0}), RangeError);
}

// ---- comparison -----------------------------------------------------------

TEST(DFuzzySet, EqualityAndSubset) {
  const auto u = Universe::line(2);
  const DFuzzySet a = pairs(u, {{0.3, 0.6}, {0.1, 0.1}});
  const DFuzzySet b = pairs(u, {{0.5, 0.4}, {0.2, 0.2}});
  EXPECT_TRUE(bool(is_subset(a, unite(a, b))));
  EXPECT_TRUE(bool(is_subset(DFuzzySet::empty(u), a)));

  const DFuzzySet p = pairs(u, {{0.1, 0.1}, {0.5, 0.2}});
  const DFuzzySet q = pairs(u, {{0.1, 0.1}, {0.2, 0.5}});
  const Inclusion inc = is_subset(p, q);
  EXPECT_EQ(inc.kind, Inclusion::Kind::IncomparableAt);
  EXPECT_EQ(inc.index, 1u);

  const DFuzzySet big = pairs(u, {{0.9, 0.9}, {0.9, 0.9}});
  const Inclusion rev = is_subset(big, a);
  EXPECT_EQ(rev.kind, Inclusion::Kind::NotContained);
  EXPECT_EQ(rev.index, 0u);

  EXPECT_FALSE(equals(a, b));
  EXPECT_TRUE(approx_equals(a, pairs(u, {{0.3 + 1e-14, 0.6}, {0.1, 0.1}})));
  EXPECT_THROW(equals(a, DFuzzySet::empty(Universe::from_points({{0}, {5}}))), UniverseMismatch);
}

TEST(DFuzzySet, SameUniverseByPoints) {
  const DFuzzySet a = DFuzzySet::empty(Universe::line(2));
  const DFuzzySet b = DFuzzySet::empty(Universe::line(2));
  EXPECT_NO_THROW(unite(a, b));
  EXPECT_THROW(unite(a, DFuzzySet::empty(Universe::line(3))), UniverseMismatch);
}

// ---- operations -----------------------------------------------------------

TEST(Operations, Complement) {
  const auto u = Universe::line(1);
  const DFuzzySet a = pairs(u, {{0.06, 0.04}});
  const DFuzzySet c = complement(a);
  EXPECT_NEAR(c[0].u(), 0.94, 1e-15);
  EXPECT_NEAR(c[0].v(), 0.96, 1e-15);
  EXPECT_TRUE(equals(complement(complement(diag(u, {0.5}))), diag(u, {0.5})));
  EXPECT_TRUE(equals(complement(DFuzzySet::empty(u)), DFuzzySet::constant(u, Hyp::one())));
}

TEST(Operations, UnionIntersection) {
  const auto u = Universe::line(1);
  EXPECT_EQ(unite(pairs(u, {{0.06, 0.04}}), pairs(u, {{0.06, 0.07}}), OrderMode::Strict)[0], Hyp(0.06, 0.07));
  EXPECT_EQ(unite(pairs(u, {{0.3, 0.6}}), pairs(u, {{0.5, 0.4}}))[0], Hyp(0.5, 0.6));
  EXPECT_EQ(intersect(pairs(u, {{0.3, 0.6}}), pairs(u, {{0.5, 0.4}}))[0], Hyp(0.3, 0.4));

  const auto line = Universe::line(3);
  const DFuzzySet crisp = DFuzzySet::from_crisp(line, {true, false, true});
  EXPECT_TRUE(intersect(crisp, complement(crisp)).is_empty());
}

TEST(Operations, StrictModeReportsPoint) {
  const auto u = Universe::line(2);
  const DFuzzySet a = pairs(u, {{0.1, 0.1}, {0.3, 0.6}});
  const DFuzzySet b = pairs(u, {{0.2, 0.2}, {0.5, 0.4}});
  EXPECT_EQ(count_incomparable(a, b), 1u);
  try {
    unite(a, b, OrderMode::Strict);
    FAIL();
  } catch (const IncomparableError& e) {
    EXPECT_NE(std::string(e.what()).find("at point 1"), std::string::npos);
  }
  EXPECT_THROW(intersect(a, b, OrderMode::Strict), IncomparableError);
}

TEST(Operations, AlgebraicSum) {
  const auto u = Universe::line(2);
  const DFuzzySet a = pairs(u, {{0.4, 0.1}, {0, 0}});
  const DFuzzySet b = pairs(u, {{0.5, 0.3}, {0, 0}});
  const DFuzzySet s = algebraic_sum(a, b);
  EXPECT_NEAR(s[0].u(), 0.9, 1e-15);
  EXPECT_NEAR(s[0].v(), 0.4, 1e-15);
  EXPECT_TRUE(equals(algebraic_sum(a, DFuzzySet::empty(u)), a));
  try {
    algebraic_sum(diag(u, {0.1, 0.7}), diag(u, {0.1, 0.6}));
    FAIL();
  } catch (const PreconditionError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("point 1"), std::string::npos);
    EXPECT_NE(what.find("1.3e1+1.3e2"), std::string::npos);
  }
}

TEST(Operations, ProductAndDifference) {
  const auto u = Universe::line(1);
  const DFuzzySet p = algebraic_product(pairs(u, {{0.5, 0.4}}), pairs(u, {{0.2, 0.5}}));
  EXPECT_NEAR(p[0].u(), 0.1, 1e-15);
  EXPECT_NEAR(p[0].v(), 0.2, 1e-15);
  const DFuzzySet a = pairs(u, {{0.2, 0.9}});
  EXPECT_TRUE(absolute_difference(a, a).is_empty());
  const DFuzzySet d = absolute_difference(a, pairs(u, {{0.5, 0.1}}));
  EXPECT_NEAR(d[0].u(), 0.3, 1e-15);
  EXPECT_NEAR(d[0].v(), 0.8, 1e-15);
}

TEST(Operations, CartesianProduct) {
  const auto x = Universe::line(2);
  const auto y = Universe::from_points({{10}, {20}, {30}});
  const DFuzzySet a = pairs(x, {{0.3, 0.6}, {1, 1}});
  const DFuzzySet b = pairs(y, {{0.5, 0.4}, {1, 1}, {0, 0}});
  const DFuzzySet c = cartesian_product(a, b);
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(c.universe().dim(), 2u);
  EXPECT_EQ(c[0], Hyp(0.3, 0.4));
  EXPECT_EQ(c[1], Hyp(0.3, 0.6));
  EXPECT_EQ(c[2], Hyp::zero());
  EXPECT_EQ(c[3], Hyp(0.5, 0.4));

  const DFuzzySet ones = cartesian_product(a, DFuzzySet::constant(y, Hyp::one()));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(ones[i * 3 + j], a[i]);
  }
  EXPECT_TRUE(cartesian_product(DFuzzySet::empty(x), b).is_empty());

  EXPECT_EQ(count_incomparable_pairs(a, b), 1u);
  try {
    cartesian_product(a, b, OrderMode::Strict);
    FAIL();
  } catch (const IncomparableError& e) {
    EXPECT_NE(std::string(e.what()).find("((0), (10))"), std::string::npos);
  }
}

TEST(Operations, ConvexCombination) {
  const auto u = Universe::line(2);
  const DFuzzySet a = pairs(u, {{0.2, 0.9}, {0.4, 0.4}});
  const DFuzzySet b = pairs(u, {{0.8, 0.1}, {0.6, 0.0}});
  EXPECT_TRUE(equals(convex_combination(a, b, DFuzzySet::constant(u, Hyp::one())), a));
  EXPECT_TRUE(equals(convex_combination(a, b, DFuzzySet::empty(u)), b));
  const DFuzzySet mid = convex_combination(diag(u, {0.2, 0.2}), diag(u, {0.8, 0.8}), diag(u, {0.5, 0.5}));
  EXPECT_NEAR(mid[0].u(), 0.5, 1e-15);
  const DFuzzySet mix = convex_combination(a, b, pairs(u, {{0.3, 0.7}, {0.1, 0.9}}));
  EXPECT_TRUE(bool(is_subset(intersect(a, b), mix)));
  EXPECT_TRUE(bool(is_subset(mix, unite(a, b))));
}

}  // namespace
}  // namespace hyperfuzzy
