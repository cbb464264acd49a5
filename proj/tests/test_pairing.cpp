#include <gtest/gtest.h>

#include "dbm/errors.hpp"
#include "dbm/pairing.hpp"
#include "oracle.hpp"

using namespace dbm;
using oracle::to_point;
using oracle::to_v;

namespace {

struct Case {
  PairingOp op;
  oracle::Op reference;
};

std::vector<Case> mix_cases() {
  std::vector<Case> out;
  for (auto [p, q] : {std::pair{0LL, 1LL}, {1, 3}, {1, 2}, {2, 5}, {1, 1}, {3, 7}}) {
    out.push_back({PairingOp::floor_mix(Rational(p, q)), oracle::floor_mix(p, q)});
    out.push_back({PairingOp::ceil_mix(Rational(p, q)), oracle::ceil_mix(p, q)});
  }
  out.push_back({PairingOp::meet(), oracle::meet});
  out.push_back({PairingOp::join(), oracle::join});
  return out;
}

}  // namespace

TEST(Pairing, Examples) {
  EXPECT_EQ(apply(PairingOp::meet(), Point{1, 4}, Point{3, 2}), (Point{1, 2}));
  EXPECT_EQ(complement(PairingOp::meet(), Point{1, 4}, Point{3, 2}), (Point{3, 4}));
  const auto half = PairingOp::floor_mix(Rational(1, 2));
  EXPECT_EQ(apply(half, Point{1}, Point{2}), Point{1});
  EXPECT_EQ(complement(half, Point{1}, Point{2}), Point{2});
  EXPECT_EQ(apply(PairingOp::parity_mix(), Point{0, 1, 1}, Point{1, 1, 0}), (Point{0, 1, 0}));
  EXPECT_EQ(complement(PairingOp::parity_mix(), Point{0, 1, 1}, Point{1, 1, 0}), (Point{1, 1, 1}));
}

TEST(Pairing, MatchesOracleOnBox) {
  const auto pts = oracle::box(2, 3);
  for (const auto& c : mix_cases()) {
    for (const auto& x : pts) {
      for (const auto& y : pts) {
        ASSERT_EQ(to_v(apply(c.op, to_point(x), to_point(y))), c.reference(x, y)) << to_string(c.op);
      }
    }
  }
}

TEST(Pairing, ParityMatchesOracle) {
  const auto pts = oracle::box(3, 1);
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      ASSERT_EQ(to_v(apply(PairingOp::parity_mix(), to_point(x), to_point(y))), oracle::parity(x, y));
    }
  }
}

TEST(Pairing, ComplementIdentities) {
  const auto pts = box_points(2, 3);
  std::vector<PairingOp> ops{PairingOp::parity_mix(), PairingOp::order_min(LexOrder{}),
                             PairingOp::order_max(LexOrder{})};
  for (const auto& c : mix_cases()) ops.push_back(c.op);
  for (const auto& op : ops) {
    for (const auto& x : pts) {
      EXPECT_EQ(apply(op, x, x), x) << to_string(op);
      for (const auto& y : pts) {
        ASSERT_EQ(apply(op, x, y) + complement(op, x, y), x + y) << to_string(op);
      }
    }
  }
}

TEST(Pairing, FloorComplementIsSwappedCeil) {
  const auto pts = box_points(2, 3);
  for (auto lambda : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(2, 5), Rational(1)}) {
    const auto f = PairingOp::floor_mix(lambda);
    const auto c = PairingOp::ceil_mix(lambda);
    for (const auto& x : pts) {
      for (const auto& y : pts) ASSERT_EQ(complement(f, x, y), apply(c, y, x));
    }
  }
}

TEST(Pairing, MeetJoinDuality) {
  const auto pts = box_points(2, 2);
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      EXPECT_EQ(complement(PairingOp::meet(), x, y), apply(PairingOp::join(), x, y));
    }
  }
}

TEST(Pairing, OrderMinMax) {
  const auto lin = LinearOrder({{0, 1}, {1, 0}});
  EXPECT_EQ(apply(PairingOp::order_min(LexOrder{}), Point{0, 9}, Point{1, -5}), (Point{0, 9}));
  EXPECT_EQ(apply(PairingOp::order_max(LexOrder{}), Point{0, 9}, Point{1, -5}), (Point{1, -5}));
  EXPECT_EQ(apply(PairingOp::order_min(lin), Point{0, 9}, Point{1, -5}), (Point{1, -5}));
  EXPECT_THROW(apply(PairingOp::order_min(lin), Point{1, 2, 3}, Point{1, 2, 3}), DimensionMismatch);
}

TEST(Pairing, PerFactor) {
  const auto op = PairingOp::per_factor({1, 2}, {PairingOp::join(), PairingOp::order_min(LexOrder{})});
  EXPECT_EQ(apply(op, Point{1, 0, 5}, Point{2, 0, 3}), (Point{2, 0, 3}));
  EXPECT_EQ(fixed_dimension(op), 3u);
  EXPECT_THROW(validate(op, 2), DimensionMismatch);
  EXPECT_THROW(PairingOp::per_factor({1}, {}), InvalidArgument);
}

TEST(Pairing, LambdaRange) {
  EXPECT_THROW(PairingOp::floor_mix(Rational(3, 2)), InvalidArgument);
  EXPECT_THROW(PairingOp::ceil_mix(Rational(-1, 2)), InvalidArgument);
}

TEST(Pairing, DimensionMismatch) {
  EXPECT_THROW(apply(PairingOp::meet(), Point{1}, Point{1, 2}), DimensionMismatch);
  const BinaryOp op = as_binary_op(PairingOp::meet(), 2);
  EXPECT_THROW(op(Point{1}, Point{2}), DimensionMismatch);
}

TEST(Slice, Examples) {
  const auto parity = slice(PairingOp::parity_mix(), Decomposition::standard(3), 2, Point{0, 1}, Point{1, 1});
  EXPECT_EQ(parity(Point{5}, Point{7}), Point{7});
  EXPECT_EQ(parity(Point{4}, Point{4}), Point{4});
  const auto meet = slice(PairingOp::meet(), Decomposition::standard(2), 1, Point{8}, Point{-8});
  EXPECT_EQ(meet(Point{3}, Point{-1}), Point{-1});
  const auto half =
      slice(PairingOp::floor_mix(Rational(1, 2)), Decomposition::standard(2), 1, Point{0}, Point{5});
  EXPECT_EQ(half(Point{1}, Point{2}), Point{1});
}

TEST(Slice, Rejections) {
  EXPECT_THROW(slice(PairingOp::parity_mix(), Decomposition::single(2), 0, Point{}, Point{}),
               InvalidArgument);
  EXPECT_THROW(slice(PairingOp::meet(), Decomposition::standard(2), 1, Point{1, 2}, Point{1}),
               DimensionMismatch);
}

TEST(PairingText, RoundTrip) {
  for (const char* text : {"meet", "join", "floormix:1/2", "ceilmix:2/5", "paritymix", "ordermin:lex",
                           "ordermax:lin:0,1;1,0", "perfactor:[1:meet|2:ordermax:lex]"}) {
    EXPECT_EQ(to_string(parse_pairing_op(text)), text);
  }
  EXPECT_EQ(to_string(parse_pairing_op("floormix:2/4")), "floormix:1/2");
}

TEST(PairingText, Rejected) {
  for (const char* bad : {"floormix:3/2", "floormix", "mean", "ordermin:colex", "perfactor:[1:meet",
                          "perfactor:[2:std]", "ceilmix:x"}) {
    EXPECT_THROW(parse_pairing_op(bad), ParseError) << bad;
  }
}
