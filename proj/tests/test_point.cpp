#include <gtest/gtest.h>

#include "dbm/errors.hpp"
#include "dbm/point.hpp"

using namespace dbm;

TEST(Point, Arithmetic) {
  const Point a{1, -2, 3};
  const Point b{4, 5, -6};
  EXPECT_EQ(a + b, (Point{5, 3, -3}));
  EXPECT_EQ(a - b, (Point{-3, -7, 9}));
  EXPECT_EQ(-a, (Point{-1, 2, -3}));
  EXPECT_THROW(a + Point{1}, DimensionMismatch);
  EXPECT_THROW((a - Point{1, 2}), DimensionMismatch);
}

TEST(Point, LexicographicOrder) {
  EXPECT_LT((Point{1, 5}), (Point{1, 7}));
  EXPECT_LT((Point{0, 9}), (Point{1, -9}));
  EXPECT_EQ((Point{2, 2} <=> Point{2, 2}), std::strong_ordering::equal);
}

TEST(Point, SliceAndConcat) {
  const Point p{4, 7, 9};
  EXPECT_EQ(p.slice(1, 2), (Point{7, 9}));
  EXPECT_EQ(p.slice(0, 0).dim(), 0u);
  EXPECT_EQ((Point{4}).concat(Point{7, 9}), p);
}

TEST(Point, BoxPoints) {
  const auto pts = box_points(2, 1);
  ASSERT_EQ(pts.size(), 9u);
  EXPECT_EQ(pts.front(), (Point{-1, -1}));
  EXPECT_EQ(pts.back(), (Point{1, 1}));
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
  EXPECT_EQ(box_points(3, 2).size(), 125u);
  EXPECT_EQ(box_points(0, 5).size(), 1u);
  EXPECT_THROW(box_points(1, -1), InvalidArgument);
}

TEST(Point, ToString) {
  EXPECT_EQ(to_string(Point{1, -2}), "(1,-2)");
  EXPECT_EQ(to_string(RationalPoint({Rational(1, 2), Rational(3)})), "(1/2,3)");
}

TEST(RationalPoint, IntegralityAndArithmetic) {
  const RationalPoint h({Rational(1, 2), Rational(-1, 2)});
  EXPECT_FALSE(h.is_integral());
  EXPECT_THROW(h.to_point(), InvalidArgument);
  const RationalPoint twice = Rational(2) * h;
  EXPECT_TRUE(twice.is_integral());
  EXPECT_EQ(twice.to_point(), (Point{1, -1}));
  EXPECT_EQ(h + h, twice);
  EXPECT_EQ(RationalPoint(Point{3, 4}).to_point(), (Point{3, 4}));
  EXPECT_EQ(RationalPoint({Rational(2, 4)}), RationalPoint({Rational(1, 2)}));
}
