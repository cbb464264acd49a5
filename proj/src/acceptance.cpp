#include "dbm/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <set>
#include <sstream>

#include "dbm/applications.hpp"
#include "dbm/axioms.hpp"
#include "dbm/certificate.hpp"
#include "dbm/four_functions.hpp"
#include "dbm/random.hpp"

namespace dbm {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail.str("");
      detail << what;
    }
  }
};

std::vector<Point> combination_points(const std::vector<Point>& pool, const std::vector<std::size_t>& idx) {
  std::vector<Point> out;
  for (auto i : idx) out.push_back(pool[i]);
  return out;
}

// Calls visit(subset) for every subset of pool with size in [lo, hi].
template <class Visit>
void for_each_subset(const std::vector<Point>& pool, std::size_t lo, std::size_t hi, Visit visit) {
  for (std::size_t size = lo; size <= hi && size <= pool.size(); ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      visit(combination_points(pool, idx));
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == pool.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

std::string points_text(const std::vector<Point>& pts) {
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? "," : "") + to_string(pts[i]);
  return out + "}";
}

// 1. Exclusivity failure of the join on Z^2 ordered as one factor.
Outcome criterion_join_corners(std::uint64_t) {
  Outcome o;
  const BinaryOp join = as_binary_op(PairingOp::join(), 2);
  const std::vector<Point> a{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
  const Point z{0, 0};
  const auto report = check_exclusive(join, a, z);
  o.require(report.verdict == ExclusivityVerdict::Violation, "check_exclusive did not report a violation");
  o.require(report.diagnostics.size() == 12, "violation report does not cover all 12 ordered pairs");

  const auto search = exclusivity_search(join, 1, 4, 1, SearchMode::AllViolations);
  const ExclusivityInstance target{a, z};
  const bool found = std::find(search.violations.begin(), search.violations.end(), target) !=
                     search.violations.end();
  o.require(!search.pass && found, "exclusivity_search did not list the instance");
  if (o.pass) {
    o.detail << "violation confirmed on all 12 ordered pairs; search checked "
             << search.instances_checked << " instances, " << search.violations.size()
             << " violations, instance included";
  }
  return o;
}

// 2. (min A, max A) is an exclusive pair for the one-dimensional operations.
Outcome criterion_min_max(std::uint64_t) {
  Outcome o;
  const std::vector<PairingOp> ops{PairingOp::meet(), PairingOp::join(),
                                   PairingOp::floor_mix(Rational(1, 2)),
                                   PairingOp::floor_mix(Rational(1, 3)),
                                   PairingOp::ceil_mix(Rational(2, 5))};
  const auto pool = box_points(1, 3);
  std::size_t checked = 0;
  for (const auto& op : ops) {
    const BinaryOp bop = as_binary_op(op, 1);
    for_each_subset(pool, 2, 5, [&](const std::vector<Point>& a) {
      for (const auto& z : pool) {
        const auto w = monotone_witness_pair(bop, OrderingSpec{StandardOrder{}}, a, z);
        ++checked;
        o.require(w.verified && w.x == a.front() && w.y == a.back(),
                  bop.name() + ": witness fails for A=" + points_text(a) + ", z=" + to_string(z));
      }
    });
  }
  if (o.pass) o.detail << checked << " (op, A, z) instances, zero failures";
  return o;
}

// 3. Random four-function instances with the tight (h, k).
Outcome criterion_random_tuples(std::uint64_t seed) {
  Outcome o;
  const std::vector<PairingOp> ops{PairingOp::meet(), PairingOp::floor_mix(Rational(1, 2)),
                                   PairingOp::parity_mix()};
  std::size_t instances = 0;
  for (std::size_t oi = 0; oi < ops.size(); ++oi) {
    Rng rng(seed + oi);
    for (int i = 0; i < 1000; ++i) {
      const SparseFn f = random_sparse_fn(rng, 2, 4, 1, 10);
      const SparseFn g = random_sparse_fn(rng, 2, 4, 1, 10);
      auto [h, k] = tight_hk(f, g, ops[oi]);
      const FourTuple t(f, g, std::move(h), std::move(k));
      const auto violations = check_hypothesis(t, ops[oi]);
      const auto conclusion = check_conclusion(t);
      ++instances;
      o.require(violations.empty(), to_string(ops[oi]) + ": hypothesis violated in instance " + std::to_string(i));
      o.require(conclusion.holds, "THEOREM CONTRADICTION: " + to_string(ops[oi]) + " instance " +
                                      std::to_string(i) + ": " + to_string(conclusion.lhs) + " > " +
                                      to_string(conclusion.rhs));
    }
  }
  if (o.pass) o.detail << instances << " instances, zero hypothesis violations, conclusion exact in all";
  return o;
}

// 4. Certificates: round trip, per-z inequality, aggregate agreement, tampering.
Outcome criterion_certificates(std::uint64_t seed) {
  Outcome o;
  const std::vector<PairingOp> ops{PairingOp::meet(), PairingOp::floor_mix(Rational(1, 2))};
  std::size_t certificates = 0;
  std::size_t tampered = 0;
  for (std::size_t oi = 0; oi < ops.size(); ++oi) {
    Rng rng(seed + 100 + oi);
    const BinaryOp bop = as_binary_op(ops[oi], 1);
    for (int i = 0; i < 200 && o.pass; ++i) {
      const SparseFn f = random_sparse_fn(rng, 1, 4, 1, 6);
      const SparseFn g = random_sparse_fn(rng, 1, 4, 1, 6);
      auto [h, k] = tight_hk(f, g, ops[oi]);
      const FourTuple t(f, g, std::move(h), std::move(k));
      const AggregateReport agg = sum_inequality_to_conclusion(t, ops[oi]);
      const std::string where = to_string(ops[oi]) + " instance " + std::to_string(i);
      o.require(agg.all_valid, where + ": a certificate failed validation");
      o.require(agg.lhs_matches_product, where + ": certified F sums do not add up to (sum f)(sum g)");
      o.require(agg.holds && agg.agrees, where + ": aggregate disagrees with check_conclusion");
      for (const auto& cert : agg.certificates) {
        ++certificates;
        const SparseFn Fz = fz(t.f, t.g, cert.z);
        const SparseFn Hz = fz(t.h, t.k, cert.z);
        Rational lhs = 0, rhs = 0;
        for (const auto& j : cert.root().set) lhs += Fz(j);
        for (const auto& j : image_set(bop, cert.root().set, cert.z)) rhs += Hz(j);
        o.require(cert.root().set == Fz.support(), where + ": root set is not supp F_z");
        o.require(lhs <= rhs, where + ": certified inequality fails at z=" + to_string(cert.z));
      }
      // Tamper with every stored rational of the deepest certificate.
      if (i % 20 == 0 && !agg.certificates.empty()) {
        const auto deepest = std::max_element(
            agg.certificates.begin(), agg.certificates.end(),
            [](const Certificate& a, const Certificate& b) { return a.depth() < b.depth(); });
        const SparseFn Fz = fz(t.f, t.g, deepest->z);
        const SparseFn Hz = fz(t.h, t.k, deepest->z);
        for (std::size_t n = 0; n < deepest->nodes.size(); ++n) {
          for (int field = 0; field < 6; ++field) {
            Certificate bad = *deepest;
            CertificateNode& node = bad.nodes[n];
            Rational* slots[] = {&node.values.f_x, &node.values.f_y, &node.values.h_xy,
                                 &node.values.h_yx, &node.sum_f, &node.sum_h};
            *slots[field] += 1;
            ++tampered;
            o.require(!validate_certificate(bad, bop, Fz, Hz).valid,
                      where + ": tampered certificate still validates (node " + std::to_string(n) +
                          ", field " + std::to_string(field) + ")");
          }
        }
      }
    }
  }
  if (o.pass) {
    o.detail << "400 instances, " << certificates << " certificates validated, " << tampered
             << " tampered copies all rejected";
  }
  return o;
}

// 5. Every pair of nonempty subsets of {0,1}^3.
Outcome criterion_hypercube(std::uint64_t) {
  Outcome o;
  const auto r = sweep_hypercube(3);
  o.require(r.pairs_checked == 65025, "expected 65025 pairs, checked " + std::to_string(r.pairs_checked));
  o.require(r.pass(), std::to_string(r.failures) + " failing pairs");
  if (o.pass) o.detail << r.pairs_checked << " pairs, zero failures";
  return o;
}

// 6. Lattice point chain.
Outcome criterion_lattice(std::uint64_t seed) {
  Outcome o;
  auto rp = [](std::initializer_list<long long> c) { return RationalPoint(Point(c)); };
  {
    const auto r = check_inz({rp({0})}, {rp({1})});
    o.require(r.count_upper == 1 && r.count_lower == 1 && r.count_open == 2 && r.holds(),
              "K={0}, L={1}: expected counts 1,1,2");
  }
  {
    const auto r = check_inz({rp({0}), rp({2})}, {rp({0}), rp({2})});
    o.require(r.count_k * r.count_l == 4 && r.count_upper * r.count_lower == 9 && r.holds(),
              "K=L={0,2}: expected 4 <= 9");
  }
  Rng rng(seed + 600);
  for (int i = 0; i < 200; ++i) {
    auto draw = [&] {
      std::vector<RationalPoint> out;
      const auto size = static_cast<std::size_t>(rng.uniform(1, 8));
      for (const auto& p : random_subset(rng, 2, 3, size)) out.emplace_back(p);
      return out;
    };
    const auto k = draw();
    const auto l = draw();
    const auto r = check_inz(k, l);
    o.require(r.holds(), "chain fails in instance " + std::to_string(i));
    o.require(r.hypothesis_holds, "floor/ceil hypothesis fails in instance " + std::to_string(i));
  }
  if (o.pass) o.detail << "2 hand instances and 200 seeded pairs, chain exact in all";
  return o;
}

// 7. max/sum fact on random quadruples and an exhaustive boundary grid.
Outcome criterion_fact(std::uint64_t seed) {
  Outcome o;
  Rng rng(seed + 700);
  std::size_t accepted = 0;
  std::size_t drawn = 0;
  while (accepted < 10000 && o.pass) {
    const Rational a = random_rational(rng, 12, 9);
    const Rational b = random_rational(rng, 12, 9);
    const Rational c = random_rational(rng, 12, 9);
    const Rational d = random_rational(rng, 12, 9);
    ++drawn;
    if (a * b > c * d || std::max(a, b) > std::max(c, d)) continue;
    ++accepted;
    o.require(a + b <= c + d, "a+b > c+d at " + to_string(a) + "," + to_string(b) + "," +
                                  to_string(c) + "," + to_string(d));
    o.require(fact_max_sum(a, b, c, d).sum_holds, "fact_max_sum disagrees");
  }
  std::vector<Rational> grid;
  for (long long q = 1; q <= 4; ++q) {
    for (long long p = 0; p <= 8; ++p) grid.emplace_back(p, q);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::size_t boundary = 0;
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      for (const auto& c : grid) {
        for (const auto& d : grid) {
          if (std::max(a, b) != std::max(c, d) || a * b != c * d) continue;
          ++boundary;
          const bool same = std::minmax(a, b) == std::minmax(c, d);
          o.require(a + b <= c + d, "boundary case breaks the sum inequality");
          o.require((a + b == c + d) == same, "boundary equality without equal multisets at " +
                                                  to_string(a) + "," + to_string(b) + "," +
                                                  to_string(c) + "," + to_string(d));
        }
      }
    }
  }
  if (o.pass) {
    o.detail << accepted << " quadruples (of " << drawn << " drawn) and " << boundary
             << " boundary grid cases";
  }
  return o;
}

// 8. Knothe monotonicity of the join under one lexicographic factor.
Outcome criterion_p2(std::uint64_t) {
  Outcome o;
  const PairingOp join = PairingOp::join();
  const auto single = check_P2(join, Decomposition::single(2, LexOrder{}), 2);
  o.require(!single.pass && single.failure == "monotonicity" && !single.witness.empty(),
            "check_P2 did not fail with a monotonicity witness");
  const BinaryOp whole = slice(join, Decomposition::single(2, LexOrder{}), 0, Point{}, Point{});
  o.require(violates_monotonicity(whole, make_comparator(LexOrder{}), Point{0, 9}, Point{1, 0},
                                  Point{1, -5}, Point{1, -5}),
            "the quadruple (0,9) <= (1,0), (1,-5) <= (1,-5) is not a violation");
  const auto standard = check_P2(join, Decomposition::standard(2), 2);
  o.require(standard.pass, "check_P2 fails for the standard decomposition: " + standard.detail);
  if (o.pass) {
    o.detail << "single lex factor fails with witness";
    for (const auto& [label, p] : single.witness) o.detail << " " << label << "=" << to_string(p);
    o.detail << "; standard decomposition passes on radius 2";
  }
  return o;
}

// 9. Four functions on Z/3 through the lift to Z.
Outcome criterion_finite_group(std::uint64_t seed) {
  Outcome o;
  const FiniteGroupSpec group({3});
  const PairingOp meet = PairingOp::meet();
  Rng rng(seed + 900);
  int holds = 0;
  for (int i = 0; i < 100; ++i) {
    std::map<Point, Rational> f, g;
    for (const auto& r : group.residues()) {
      f[r] = rng.uniform(0, 3) == 0 ? Rational(0) : random_square(rng);
      g[r] = rng.uniform(0, 3) == 0 ? Rational(0) : random_square(rng);
    }
    f[group.residues()[static_cast<std::size_t>(rng.uniform(0, 2))]] = random_square(rng);
    g[group.residues()[static_cast<std::size_t>(rng.uniform(0, 2))]] = random_square(rng);
    const SparseFn lf = lift_finite(group, f);
    const SparseFn lg = lift_finite(group, g);
    auto [lh, lk] = tight_hk(lf, lg, meet);
    std::map<Point, Rational> h, k;
    bool in_domain = true;
    for (const auto& [p, v] : lh.entries()) {
      in_domain = in_domain && group.in_fundamental_domain(p);
      h[p] = v;
    }
    for (const auto& [p, v] : lk.entries()) {
      in_domain = in_domain && group.in_fundamental_domain(p);
      k[p] = v;
    }
    o.require(in_domain, "tight (h, k) leaves the fundamental domain in instance " + std::to_string(i));
    const FourTuple lifted(lf, lg, lift_finite(group, h), lift_finite(group, k));
    const auto verdict = verify_theorem(lifted, meet, Decomposition::standard(1));
    o.require(verdict.axioms_pass() && verdict.hypothesis_pass(),
              "lifted tuple fails the hypothesis in instance " + std::to_string(i));
    Rational sf = 0, sg = 0, sh = 0, sk = 0;
    for (const auto& [r, v] : f) sf += v;
    for (const auto& [r, v] : g) sg += v;
    for (const auto& [r, v] : h) sh += v;
    for (const auto& [r, v] : k) sk += v;
    if (sf * sg <= sh * sk) ++holds;
  }
  o.require(holds == 100, "group-level conclusion holds in only " + std::to_string(holds) + "/100");
  if (o.pass) o.detail << holds << "/100 instances";
  return o;
}

struct Criterion {
  const char* title;
  double limit;
  Outcome (*run)(std::uint64_t);
};

const Criterion kCriteria[kCriterionCount] = {
    {"exclusivity fails for the join on Z^2 as one factor", 1, criterion_join_corners},
    {"bounded (min A, max A) exclusivity on Z", 30, criterion_min_max},
    {"four functions randomized suite on Z^2", 120, criterion_random_tuples},
    {"certificate round trip and tamper detection", 0, criterion_certificates},
    {"hypercube midpoints, all subset pairs of {0,1}^3", 60, criterion_hypercube},
    {"lattice point chain", 0, criterion_lattice},
    {"max/sum fact", 0, criterion_fact},
    {"Knothe monotonicity counterexample", 0, criterion_p2},
    {"finite group lifting on Z/3", 0, criterion_finite_group},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) {
    throw std::out_of_range("acceptance criterion " + std::to_string(id) + " does not exist");
  }
  const Criterion& c = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = c.title;
  r.limit_seconds = c.limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = c.run(seed);
    r.pass = o.pass;
    r.detail = o.detail.str();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.pass && c.limit > 0 && r.seconds >= c.limit) {
    r.pass = false;
    r.detail += "; runtime limit exceeded";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, seed));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char time[64];
  if (r.limit_seconds > 0) {
    std::snprintf(time, sizeof time, "%.2f s, limit %.0f s", r.seconds, r.limit_seconds);
  } else {
    std::snprintf(time, sizeof time, "%.2f s", r.seconds);
  }
  return std::string(r.pass ? "PASS" : "FAIL") + "  [" + std::to_string(r.id) + "] " + r.title + " (" +
         time + "): " + r.detail;
}

}  // namespace dbm
