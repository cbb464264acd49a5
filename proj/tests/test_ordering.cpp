#include <gtest/gtest.h>

#include "dbm/errors.hpp"
#include "dbm/ordering.hpp"

using namespace dbm;

namespace {

LinearOrder swap2() { return LinearOrder({{0, 1}, {1, 0}}); }

}  // namespace

TEST(Ordering, CompareExamples) {
  EXPECT_EQ(compare(LexOrder{}, Point{1, 5}, Point{1, 7}), std::strong_ordering::less);
  EXPECT_EQ(compare(StandardOrder{}, Point{3}, Point{3}), std::strong_ordering::equal);
  // images (5,1) and (0,2)
  EXPECT_EQ(compare(swap2(), Point{1, 5}, Point{2, 0}), std::strong_ordering::greater);
}

TEST(Ordering, DimensionChecks) {
  EXPECT_THROW(compare(StandardOrder{}, Point{1, 2}, Point{1, 2}), DimensionMismatch);
  EXPECT_THROW(compare(LexOrder{}, Point{1}, Point{1, 2}), DimensionMismatch);
  EXPECT_THROW(compare(swap2(), Point{1, 2, 3}, Point{1, 2, 3}), DimensionMismatch);
}

TEST(Ordering, LinearOrderValidation) {
  EXPECT_THROW(LinearOrder({{1, 2}, {2, 4}}), InvalidArgument);
  EXPECT_THROW(LinearOrder({{1, 2}}), InvalidArgument);
  EXPECT_THROW(LinearOrder(std::vector<std::vector<Rational>>{}), InvalidArgument);
  EXPECT_NO_THROW(LinearOrder({{Rational(1, 2), 1}, {0, 3}}));
}

TEST(Ordering, BuiltinsSatisfyAxioms) {
  EXPECT_TRUE(check_ordering_axioms(LexOrder{}, 2, 2).pass);
  EXPECT_TRUE(check_ordering_axioms(StandardOrder{}, 1, 3).pass);
  EXPECT_TRUE(check_ordering_axioms(swap2(), 2, 2).pass);
  EXPECT_TRUE(check_ordering_axioms(LinearOrder({{1, 1}, {Rational(-1, 2), 1}}), 2, 2).pass);
  EXPECT_TRUE(check_ordering_axioms(LexOrder{}, 3, 1).pass);
}

TEST(Ordering, AbsoluteValueComparatorIsNotAdditive) {
  // |x| first, ties broken by x so that the order is total.
  const Comparator by_abs = [](const Point& a, const Point& b) {
    const auto key = [](const Point& p) { return std::make_pair(Integer(abs(p[0])), p[0]); };
    return key(a) < key(b)   ? std::strong_ordering::less
           : key(b) < key(a) ? std::strong_ordering::greater
                             : std::strong_ordering::equal;
  };
  const auto report = check_ordering_axioms(by_abs, 1, 2);
  EXPECT_FALSE(report.pass);
  EXPECT_EQ(report.axiom, "additivity");
  ASSERT_EQ(report.witness.size(), 3u);
  const auto& w = report.witness;
  EXPECT_TRUE(by_abs(w[0], w[1]) < 0);
  EXPECT_TRUE(by_abs(w[0] + w[2], w[1] + w[2]) >= 0);
  // The triple x=0, y=-1, z=1: 0 before -1, yet 1 after 0.
  EXPECT_TRUE(by_abs(Point{0}, Point{-1}) < 0);
  EXPECT_TRUE(by_abs(Point{1}, Point{0}) > 0);
}

TEST(Ordering, BrokenEqualityIsReported) {
  const Comparator constant = [](const Point&, const Point&) { return std::strong_ordering::equal; };
  const auto report = check_ordering_axioms(constant, 1, 1);
  EXPECT_FALSE(report.pass);
  EXPECT_EQ(report.axiom, "equality");
}

TEST(Ordering, IdentityMatrixAgreesWithLex) {
  const LinearOrder id({{1, 0}, {0, 1}});
  const auto pts = box_points(2, 2);
  for (const auto& a : pts) {
    for (const auto& b : pts) EXPECT_EQ(compare(id, a, b), compare(LexOrder{}, a, b));
  }
}

TEST(Ordering, Antisymmetry) {
  const auto pts = box_points(2, 2);
  const LinearOrder l({{2, -1}, {1, 1}});
  for (const auto& a : pts) {
    for (const auto& b : pts) EXPECT_EQ(compare(l, a, b) < 0, compare(l, b, a) > 0);
  }
}

TEST(Decomposition, ProjectAndPrefix) {
  const Point p{4, 7, 9};
  EXPECT_EQ(project(p, Decomposition::standard(3), 1), Point{7});
  const Decomposition d({Factor{2, LexOrder{}}, Factor{1, StandardOrder{}}});
  EXPECT_EQ(project(p, d, 0), (Point{4, 7}));
  EXPECT_EQ(prefix(p, d, 1), (Point{4, 7}));
  EXPECT_EQ(prefix(p, d, 0).dim(), 0u);
  EXPECT_THROW(project(p, Decomposition::standard(3), 3), InvalidArgument);
  EXPECT_THROW(project(Point{1, 2}, d, 0), DimensionMismatch);
}

TEST(Decomposition, Validation) {
  EXPECT_THROW(Decomposition({}), InvalidArgument);
  EXPECT_THROW(Decomposition({Factor{2, StandardOrder{}}}), InvalidArgument);
  EXPECT_THROW(Decomposition({Factor{0, LexOrder{}}}), InvalidArgument);
  EXPECT_TRUE(Decomposition::standard(2).is_standard());
  EXPECT_FALSE(Decomposition::single(2).is_standard());
  EXPECT_TRUE(Decomposition::single(1, StandardOrder{}).is_standard());
}

TEST(OrderingText, RoundTrip) {
  for (const char* text : {"std", "lex", "lin:0,1;1,0", "lin:1/2,1;0,3"}) {
    EXPECT_EQ(to_string(parse_ordering(text)), text);
  }
  EXPECT_THROW(parse_ordering("lin:1,2;2,4"), ParseError);
  EXPECT_THROW(parse_ordering("colex"), ParseError);
}

TEST(DecompositionText, Parse) {
  EXPECT_EQ(to_string(parse_decomposition("std", 2)), "1:std|1:std");
  EXPECT_EQ(to_string(parse_decomposition("single", 3)), "3:lex");
  EXPECT_EQ(to_string(parse_decomposition("single:lin:0,1;1,0", 2)), "2:lin:0,1;1,0");
  EXPECT_EQ(to_string(parse_decomposition("2:lex|1:std", 3)), "2:lex|1:std");
  EXPECT_THROW(parse_decomposition("2:lex|1:std", 4), ParseError);
  EXPECT_THROW(parse_decomposition("2:std", 2), ParseError);
  EXPECT_THROW(parse_decomposition("lex", 2), ParseError);
}
