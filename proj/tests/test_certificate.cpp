#include <gtest/gtest.h>

#include "dbm/certificate.hpp"
#include "dbm/errors.hpp"
#include "dbm/random.hpp"
#include "oracle.hpp"

using namespace dbm;

namespace {

SparseFn fn1(std::initializer_list<std::pair<long long, Rational>> entries) {
  SparseFn f(1);
  for (const auto& [x, v] : entries) f.set(Point{x}, v);
  return f;
}

struct Instance {
  PairingOp op;
  FourTuple tuple;
};

Instance random_instance(Rng& rng, const PairingOp& op, std::size_t dim, long long radius) {
  SparseFn f = random_sparse_fn(rng, dim, radius, 1, 5);
  SparseFn g = random_sparse_fn(rng, dim, radius, 1, 5);
  auto [h, k] = tight_hk(f, g, op);
  return {op, FourTuple(std::move(f), std::move(g), std::move(h), std::move(k))};
}

}  // namespace

TEST(Fact, Examples) {
  const auto a = fact_max_sum(1, 2, 2, 2);
  EXPECT_TRUE(a.applicable);
  EXPECT_TRUE(a.sum_holds);
  const auto b = fact_max_sum(1, 4, 2, 2);
  EXPECT_TRUE(b.product_ok);
  EXPECT_FALSE(b.max_ok);
  EXPECT_FALSE(b.applicable);
  const auto c = fact_max_sum(0, 5, 5, 1);
  EXPECT_TRUE(c.applicable);
  EXPECT_TRUE(c.sum_holds);
  EXPECT_THROW(fact_max_sum(-1, 0, 0, 0), InvalidArgument);
}

TEST(Certify, MeetIndicatorExample) {
  const auto meet = as_binary_op(PairingOp::meet(), 1);
  const SparseFn one = fn1({{0, 1}, {1, 1}});
  const SparseFn Fz = fz(one, one, Point{1});
  const SparseFn Hz = fz(one, one, Point{1});
  const Certificate cert = certify_sum_inequality(meet, Point{1}, Fz.support(), Fz, Hz);
  ASSERT_EQ(cert.depth(), 2u);
  const auto& root = cert.root();
  EXPECT_EQ(root.tag, CaseTag::Case2);
  EXPECT_EQ(*root.pair, std::make_pair(Point{0}, Point{1}));
  EXPECT_EQ(root.values, (NodeValues{1, 1, 1, 1}));
  EXPECT_EQ(root.sum_f, 2);
  EXPECT_EQ(root.sum_h, 2);
  EXPECT_EQ(cert.nodes[1].tag, CaseTag::Base0);
  EXPECT_TRUE(validate_certificate(cert, meet, Fz, Hz).valid);
}

TEST(Certify, BaseCases) {
  const auto meet = as_binary_op(PairingOp::meet(), 1);
  const SparseFn Fz = fn1({{0, 2}});
  const SparseFn Hz = fn1({{0, 3}});
  const auto single = certify_sum_inequality(meet, Point{0}, {Point{0}}, Fz, Hz);
  ASSERT_EQ(single.depth(), 1u);
  EXPECT_EQ(single.root().tag, CaseTag::Base1);
  EXPECT_TRUE(validate_certificate(single, meet, Fz, Hz).valid);

  const auto empty = certify_sum_inequality(meet, Point{0}, {}, Fz, Hz);
  ASSERT_EQ(empty.depth(), 1u);
  EXPECT_EQ(empty.root().tag, CaseTag::Base0);
  EXPECT_TRUE(validate_certificate(empty, meet, Fz, Hz).valid);

  EXPECT_THROW(certify_sum_inequality(meet, Point{0}, {Point{0}}, Hz, Fz.scaled(0)), ChainedInequalityFailure);
}

TEST(Certify, CornerSetIsNotExclusive) {
  const auto join = as_binary_op(PairingOp::join(), 2);
  const std::vector<Point> a{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
  const SparseFn one = SparseFn::indicator(2, box_points(2, 2));
  try {
    certify_sum_inequality(join, Point{0, 0}, a, one, one);
    FAIL() << "expected NotExclusive";
  } catch (const NotExclusive& e) {
    EXPECT_EQ(e.report().set, a);
    EXPECT_EQ(e.report().verdict, ExclusivityVerdict::Violation);
  }
}

TEST(Certify, HypothesisFailureIsReported) {
  const auto meet = as_binary_op(PairingOp::meet(), 1);
  const SparseFn Fz = fn1({{0, 4}, {1, 4}});
  const SparseFn Hz = fn1({{0, 1}, {1, 1}});
  EXPECT_THROW(certify_sum_inequality(meet, Point{1}, Fz.support(), Fz, Hz), ChainedInequalityFailure);
}

TEST(Certify, RoundTripAndStructure) {
  Rng rng(21);
  const std::vector<std::pair<PairingOp, std::size_t>> ops{
      {PairingOp::meet(), 1},
      {PairingOp::floor_mix(Rational(1, 2)), 1},
      {PairingOp::ceil_mix(Rational(2, 5)), 1},
      {PairingOp::order_max(LexOrder{}), 2},
      {PairingOp::order_min(LinearOrder({{1, 1}, {0, 1}})), 2},
  };
  for (const auto& [op, dim] : ops) {
    const auto bop = as_binary_op(op, dim);
    for (int i = 0; i < 30; ++i) {
      const Instance inst = random_instance(rng, op, dim, 2);
      const AggregateReport agg = sum_inequality_to_conclusion(inst.tuple, op);
      ASSERT_TRUE(agg.all_valid) << to_string(op);
      ASSERT_TRUE(agg.agrees && agg.holds && agg.lhs_matches_product) << to_string(op);
      for (const auto& cert : agg.certificates) {
        const SparseFn Fz = fz(inst.tuple.f, inst.tuple.g, cert.z);
        const SparseFn Hz = fz(inst.tuple.h, inst.tuple.k, cert.z);
        EXPECT_LE(cert.depth(), cert.root().set.size() + 1);
        for (std::size_t n = 0; n + 1 < cert.nodes.size(); ++n) {
          const auto& node = cert.nodes[n];
          const std::size_t shrink = node.tag == CaseTag::Case1 ? 1 : 2;
          EXPECT_EQ(cert.nodes[n + 1].set.size() + shrink, node.set.size());
          if (node.tag == CaseTag::Case2) {
            const auto& v = node.values;
            EXPECT_TRUE(fact_max_sum(v.f_x, v.f_y, v.h_xy, v.h_yx).applicable);
          }
        }
        // Independent sums over the oracle's image.
        std::vector<oracle::V> a;
        for (const auto& p : cert.root().set) a.push_back(oracle::to_v(p));
        const auto ref = [&](const oracle::V& x, const oracle::V& y) { return oracle::to_v(bop(oracle::to_point(x), oracle::to_point(y))); };
        Rational lhs = 0, rhs = 0;
        for (const auto& p : a) lhs += Fz(oracle::to_point(p));
        for (const auto& p : oracle::image(ref, a, oracle::to_v(cert.z))) rhs += Hz(oracle::to_point(p));
        EXPECT_EQ(lhs, cert.root().sum_f);
        EXPECT_EQ(rhs, cert.root().sum_h);
        EXPECT_LE(lhs, rhs);
      }
    }
  }
}

TEST(Validate, TamperingIsDetected) {
  Rng rng(33);
  const PairingOp op = PairingOp::meet();
  const auto bop = as_binary_op(op, 1);
  // Find a certificate with at least one Case node.
  for (int attempt = 0; attempt < 100; ++attempt) {
    const Instance inst = random_instance(rng, op, 1, 3);
    const auto agg = sum_inequality_to_conclusion(inst.tuple, op);
    for (const auto& cert : agg.certificates) {
      if (cert.depth() < 3) continue;
      const SparseFn Fz = fz(inst.tuple.f, inst.tuple.g, cert.z);
      const SparseFn Hz = fz(inst.tuple.h, inst.tuple.k, cert.z);
      ASSERT_TRUE(validate_certificate(cert, bop, Fz, Hz).valid);

      Certificate lowered = cert;
      lowered.nodes[0].values.h_xy -= 1;
      const auto r = validate_certificate(lowered, bop, Fz, Hz);
      EXPECT_FALSE(r.valid);
      EXPECT_EQ(r.failing_node, 0u);

      Certificate swapped = cert;
      std::swap(swapped.nodes[0].pair->first, swapped.nodes[0].pair->second);
      EXPECT_FALSE(validate_certificate(swapped, bop, Fz, Hz).valid);

      Certificate retagged = cert;
      retagged.nodes[0].tag = cert.nodes[0].tag == CaseTag::Case1 ? CaseTag::Case2 : CaseTag::Case1;
      EXPECT_FALSE(validate_certificate(retagged, bop, Fz, Hz).valid);

      Certificate truncated = cert;
      truncated.nodes.pop_back();
      EXPECT_FALSE(validate_certificate(truncated, bop, Fz, Hz).valid);

      Certificate moved = cert;
      moved.nodes[1].set.push_back(Point{100});
      EXPECT_FALSE(validate_certificate(moved, bop, Fz, Hz).valid);

      Certificate image = cert;
      image.nodes[0].image.pop_back();
      EXPECT_FALSE(validate_certificate(image, bop, Fz, Hz).valid);

      Certificate diag = cert;
      diag.nodes[0].exclusivity->escapes_without_x = !diag.nodes[0].exclusivity->escapes_without_x;
      EXPECT_FALSE(validate_certificate(diag, bop, Fz, Hz).valid);

      // Against a different Hz the certificate no longer checks out.
      EXPECT_FALSE(validate_certificate(cert, bop, Fz, Hz.scaled(Rational(1, 2))).valid);
      return;
    }
  }
  FAIL() << "no deep certificate found";
}

TEST(Aggregate, EmptyF) {
  const FourTuple t(SparseFn(1), fn1({{0, 1}}), SparseFn(1), SparseFn(1));
  const auto agg = sum_inequality_to_conclusion(t, PairingOp::meet());
  EXPECT_TRUE(agg.certificates.empty());
  EXPECT_TRUE(agg.holds);
  EXPECT_TRUE(agg.agrees);
}

TEST(Aggregate, AgreesWithConclusionOnSmallSupports) {
  Rng rng(44);
  for (const auto& op : {PairingOp::meet(), PairingOp::floor_mix(Rational(1, 2))}) {
    for (int i = 0; i < 150; ++i) {
      SparseFn f = random_sparse_fn(rng, 1, 2, 1, 5);
      SparseFn g = random_sparse_fn(rng, 1, 2, 1, 5);
      auto [h, k] = i % 2 ? tight_hk(f, g, op) : fiber_max_hk(f, g, op);
      const FourTuple t(f, g, h, k);
      const auto agg = sum_inequality_to_conclusion(t, op);
      ASSERT_TRUE(agg.all_valid);
      ASSERT_TRUE(agg.agrees);
      ASSERT_EQ(agg.rhs_full, check_conclusion(t).rhs);
    }
  }
}

TEST(Aggregate, IndicatorInstance) {
  const SparseFn a = SparseFn::indicator(1, {Point{0}, Point{1}, Point{3}});
  const SparseFn b = SparseFn::indicator(1, {Point{-1}, Point{2}});
  const auto m = PairingOp::meet();
  // h = indicator of A ∧ B, k = indicator of A ∨ B.
  std::vector<Point> lo, hi;
  for (const auto& x : a.support()) {
    for (const auto& y : b.support()) {
      lo.push_back(apply(m, x, y));
      hi.push_back(complement(m, x, y));
    }
  }
  const FourTuple t(a, b, SparseFn::indicator(1, lo), SparseFn::indicator(1, hi));
  const auto agg = sum_inequality_to_conclusion(t, m);
  EXPECT_TRUE(agg.all_valid);
  EXPECT_TRUE(agg.holds);
  EXPECT_TRUE(agg.agrees);
}

TEST(CaseTagText, RoundTrip) {
  for (auto tag : {CaseTag::Base0, CaseTag::Base1, CaseTag::Case1, CaseTag::Case2}) {
    EXPECT_EQ(parse_case_tag(to_string(tag)), tag);
  }
  EXPECT_THROW(parse_case_tag("Case3"), ParseError);
}
