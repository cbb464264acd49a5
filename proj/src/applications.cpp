#include "dbm/applications.hpp"

#include <algorithm>
#include <bit>

#include "dbm/errors.hpp"
#include "dbm/pairing.hpp"

namespace dbm {

namespace {

std::vector<Point> hypercube(std::size_t dim) {
  std::vector<Point> out;
  const std::size_t count = std::size_t{1} << dim;
  for (std::size_t mask = 0; mask < count; ++mask) {
    Point p = Point::zero(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = (mask >> (dim - 1 - i)) & 1U;
    out.push_back(std::move(p));
  }
  return out;
}

Integer first_integer_above(const Rational& bound, bool closed) {
  return closed ? ceil_of(bound) : Integer(floor_of(bound) + 1);
}

Integer last_integer_below(const Rational& bound, bool closed) {
  return closed ? floor_of(bound) : Integer(ceil_of(bound) - 1);
}

}  // namespace

void validate_hypercube_set(const std::vector<Point>& set) {
  if (set.empty()) {
    throw InvalidArgument("hypercube sets must be nonempty");
  }
  const std::size_t n = set.front().dim();
  for (const auto& p : set) {
    if (p.dim() != n) {
      throw DimensionMismatch("hypercube set mixes dimensions");
    }
    for (const auto& c : p.coords()) {
      if (c != 0 && c != 1) {
        throw InvalidArgument("point " + to_string(p) + " is not in {0,1}^" + std::to_string(n));
      }
    }
  }
}

bool is_midpoint(const Point& m, const Point& a, const Point& b) {
  if (m.dim() != a.dim() || a.dim() != b.dim()) {
    throw DimensionMismatch("midpoint test on points of different dimension");
  }
  long long agree_a = 0;
  long long agree_b = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m[i] != 0 && m[i] != 1) return false;
    if (a[i] == b[i] && m[i] != a[i]) return false;
    if (m[i] == a[i]) ++agree_a;
    if (m[i] == b[i]) ++agree_b;
  }
  const long long eps = agree_a - agree_b;
  return eps >= -1 && eps <= 1;
}

std::set<Point> ov_midpoints(const std::vector<Point>& a, const std::vector<Point>& b) {
  validate_hypercube_set(a);
  validate_hypercube_set(b);
  if (a.front().dim() != b.front().dim()) {
    throw DimensionMismatch("A and B live in different hypercubes");
  }
  std::set<Point> out;
  for (const auto& m : hypercube(a.front().dim())) {
    for (const auto& p : a) {
      const bool hit = std::any_of(b.begin(), b.end(), [&](const Point& q) { return is_midpoint(m, p, q); });
      if (hit) {
        out.insert(m);
        break;
      }
    }
  }
  return out;
}

ParityMidpoints ov_t_midpoints(const std::vector<Point>& a, const std::vector<Point>& b) {
  validate_hypercube_set(a);
  validate_hypercube_set(b);
  if (a.front().dim() != b.front().dim()) {
    throw DimensionMismatch("A and B live in different hypercubes");
  }
  const PairingOp parity = PairingOp::parity_mix();
  ParityMidpoints out;
  for (const auto& p : a) {
    for (const auto& q : b) {
      out.lower.insert(apply(parity, p, q));
      out.upper.insert(complement(parity, p, q));
    }
  }
  out.both = out.lower;
  out.both.insert(out.upper.begin(), out.upper.end());
  return out;
}

MidpointReport check_ov(const std::vector<Point>& a, const std::vector<Point>& b) {
  MidpointReport r;
  r.midpoints = ov_midpoints(a, b);
  r.parity = ov_t_midpoints(a, b);
  r.size_a = std::set<Point>(a.begin(), a.end()).size();
  r.size_b = std::set<Point>(b.begin(), b.end()).size();
  const std::size_t ab = r.size_a * r.size_b;
  r.parity_inside_midpoints = std::includes(r.midpoints.begin(), r.midpoints.end(),
                                            r.parity.both.begin(), r.parity.both.end());
  r.product_bound = r.parity.lower.size() * r.parity.upper.size() >= ab;
  r.square_bound = r.parity.both.size() * r.parity.both.size() >= ab;
  r.midpoint_bound = r.midpoints.size() * r.midpoints.size() >= ab;
  return r;
}

HypercubeSweepReport sweep_hypercube(std::size_t dim) {
  if (dim == 0 || dim > 3) {
    throw InvalidArgument("hypercube sweep supports dimensions 1 to 3");
  }
  const auto cube = hypercube(dim);
  const std::size_t m = cube.size();
  auto index_of = [&](const Point& p) {
    return static_cast<std::size_t>(std::lower_bound(cube.begin(), cube.end(), p) - cube.begin());
  };

  // Per single pair (a, b): bitmasks over the cube.
  std::vector<unsigned> mid(m * m), lower(m * m), upper(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (const auto& p : ov_midpoints({cube[i]}, {cube[j]})) mid[i * m + j] |= 1U << index_of(p);
      const auto t = ov_t_midpoints({cube[i]}, {cube[j]});
      for (const auto& p : t.lower) lower[i * m + j] |= 1U << index_of(p);
      for (const auto& p : t.upper) upper[i * m + j] |= 1U << index_of(p);
    }
  }

  HypercubeSweepReport report;
  report.dim = dim;
  const unsigned subsets = 1U << m;
  for (unsigned sa = 1; sa < subsets; ++sa) {
    for (unsigned sb = 1; sb < subsets; ++sb) {
      unsigned mm = 0, lo = 0, up = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (!((sa >> i) & 1U)) continue;
        for (std::size_t j = 0; j < m; ++j) {
          if (!((sb >> j) & 1U)) continue;
          mm |= mid[i * m + j];
          lo |= lower[i * m + j];
          up |= upper[i * m + j];
        }
      }
      const auto ab = static_cast<std::size_t>(std::popcount(sa)) * std::popcount(sb);
      const auto both = static_cast<std::size_t>(std::popcount(lo | up));
      const auto nm = static_cast<std::size_t>(std::popcount(mm));
      const bool ok = ((lo | up) & ~mm) == 0 &&
                      static_cast<std::size_t>(std::popcount(lo)) * std::popcount(up) >= ab &&
                      both * both >= ab && nm * nm >= ab;
      ++report.pairs_checked;
      if (!ok) {
        ++report.failures;
        if (!report.first_failure) report.first_failure = std::make_pair(sa, sb);
      }
    }
  }
  return report;
}

bool Box::contains(const Point& p) const {
  if (p.dim() != center.dim()) {
    throw DimensionMismatch("box of dimension " + std::to_string(center.dim()) +
                            " queried with " + to_string(p));
  }
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const Rational v = Rational(p[i]) - center[i];
    const Interval& iv = axes[i];
    if (iv.lower && (iv.lower_closed ? v < *iv.lower : v <= *iv.lower)) return false;
    if (iv.upper && (iv.upper_closed ? v > *iv.upper : v >= *iv.upper)) return false;
  }
  return true;
}

BoxUnion::BoxUnion(std::size_t dim, std::vector<Box> boxes) : dim_(dim), boxes_(std::move(boxes)) {
  for (const auto& b : boxes_) {
    if (b.center.dim() != dim_ || b.axes.size() != dim_) {
      throw DimensionMismatch("box does not have dimension " + std::to_string(dim_));
    }
    for (const auto& iv : b.axes) {
      if (iv.lower && iv.upper) {
        const bool nonempty =
            *iv.lower < *iv.upper || (*iv.lower == *iv.upper && iv.lower_closed && iv.upper_closed);
        if (!nonempty) throw InvalidArgument("box has an empty interval");
      }
    }
  }
}

bool BoxUnion::contains(const Point& p) const {
  return std::any_of(boxes_.begin(), boxes_.end(), [&](const Box& b) { return b.contains(p); });
}

BoxUnion BoxUnion::translates(std::size_t dim, const std::vector<RationalPoint>& centers,
                              const Interval& offset) {
  std::vector<Box> boxes;
  boxes.reserve(centers.size());
  for (const auto& c : centers) boxes.push_back(Box{c, std::vector<Interval>(dim, offset)});
  return BoxUnion(dim, std::move(boxes));
}

Integer lattice_count(const BoxUnion& u) {
  // Global integer bounding box of the union.
  std::vector<Integer> lo(u.dim()), hi(u.dim());
  bool any = false;
  for (const auto& b : u.boxes()) {
    std::vector<Integer> blo(u.dim()), bhi(u.dim());
    bool empty = false;
    for (std::size_t i = 0; i < u.dim(); ++i) {
      const Interval& iv = b.axes[i];
      if (!iv.lower || !iv.upper) {
        throw InvalidArgument("cannot count lattice points of an unbounded box");
      }
      blo[i] = first_integer_above(b.center[i] + *iv.lower, iv.lower_closed);
      bhi[i] = last_integer_below(b.center[i] + *iv.upper, iv.upper_closed);
      if (blo[i] > bhi[i]) empty = true;
    }
    if (empty) continue;
    for (std::size_t i = 0; i < u.dim(); ++i) {
      if (!any || blo[i] < lo[i]) lo[i] = blo[i];
      if (!any || bhi[i] > hi[i]) hi[i] = bhi[i];
    }
    any = true;
  }
  if (!any) return 0;

  Integer count = 0;
  Point p(lo);
  while (true) {
    if (u.contains(p)) ++count;
    std::size_t i = u.dim();
    while (i > 0) {
      --i;
      if (p[i] < hi[i]) {
        p[i] += 1;
        break;
      }
      p[i] = lo[i];
      if (i == 0) return count;
    }
  }
}

Integer lattice_count(const std::vector<RationalPoint>& set) {
  std::set<RationalPoint> integral;
  for (const auto& p : set) {
    if (p.is_integral()) integral.insert(p);
  }
  return Integer(integral.size());
}

LatticeChainReport check_inz(const std::vector<RationalPoint>& k, const std::vector<RationalPoint>& l) {
  if (k.empty() || l.empty()) {
    throw InvalidArgument("K and L must be nonempty");
  }
  const std::size_t n = k.front().dim();
  for (const auto* set : {&k, &l}) {
    for (const auto& p : *set) {
      if (p.dim() != n) throw DimensionMismatch("K and L must share one dimension");
    }
  }
  LatticeChainReport r;
  std::set<RationalPoint> mids;
  const Rational half(1, 2);
  for (const auto& x : k) {
    for (const auto& y : l) mids.insert(half * (x + y));
  }
  r.midpoint_set.assign(mids.begin(), mids.end());

  const BoxUnion upper = BoxUnion::translates(n, r.midpoint_set, Interval::closed_open(0, 1));
  const BoxUnion lower = BoxUnion::translates(n, r.midpoint_set, Interval::open_closed(-1, 0));
  const BoxUnion open = BoxUnion::translates(n, r.midpoint_set, Interval::open(-1, 1));
  r.count_k = lattice_count(k);
  r.count_l = lattice_count(l);
  r.count_upper = lattice_count(upper);
  r.count_lower = lattice_count(lower);
  r.count_open = lattice_count(open);
  r.first_link = r.count_k * r.count_l <= r.count_upper * r.count_lower;
  r.second_link = r.count_upper * r.count_lower <= r.count_open * r.count_open;

  const PairingOp floor_half = PairingOp::floor_mix(half);
  r.hypothesis_holds = true;
  for (const auto& x : k) {
    if (!x.is_integral()) continue;
    for (const auto& y : l) {
      if (!y.is_integral()) continue;
      const Point px = x.to_point();
      const Point py = y.to_point();
      const Point lo = apply(floor_half, px, py);
      const Point hi = complement(floor_half, px, py);
      if (!lower.contains(lo) || !upper.contains(hi)) r.hypothesis_holds = false;
    }
  }
  return r;
}

}  // namespace dbm
