#include "dbm/four_functions.hpp"

#include "dbm/errors.hpp"

namespace dbm {

namespace {

void require_dim(std::size_t expected, const Point& p) {
  if (p.dim() != expected) {
    throw DimensionMismatch("point " + to_string(p) + " is not in Z^" + std::to_string(expected));
  }
}

void raise_to(std::map<Point, Rational>& best, const Point& key, const Rational& value) {
  auto [it, inserted] = best.emplace(key, value);
  if (!inserted && it->second < value) it->second = value;
}

SparseFn from_map(std::size_t dim, const std::map<Point, Rational>& values) {
  SparseFn out(dim);
  for (const auto& [p, v] : values) out.set(p, v);
  return out;
}

}  // namespace

void SparseFn::set(const Point& p, const Rational& value) {
  require_dim(dim_, p);
  if (value < 0) {
    throw InvalidArgument("negative value " + to_string(value) + " at " + to_string(p));
  }
  if (value == 0) {
    entries_.erase(p);
  } else {
    entries_[p] = value;
  }
}

Rational SparseFn::operator()(const Point& p) const {
  require_dim(dim_, p);
  const auto it = entries_.find(p);
  return it == entries_.end() ? Rational(0) : it->second;
}

std::vector<Point> SparseFn::support() const {
  std::vector<Point> out;
  out.reserve(entries_.size());
  for (const auto& [p, v] : entries_) out.push_back(p);
  return out;
}

Rational SparseFn::total() const {
  Rational sum = 0;
  for (const auto& [p, v] : entries_) sum += v;
  return sum;
}

SparseFn SparseFn::translated(const Point& w) const {
  require_dim(dim_, w);
  SparseFn out(dim_);
  for (const auto& [p, v] : entries_) out.entries_.emplace(p + w, v);
  return out;
}

SparseFn SparseFn::scaled(const Rational& c) const {
  if (c < 0) {
    throw InvalidArgument("scale factor must be nonnegative");
  }
  SparseFn out(dim_);
  if (c == 0) return out;
  for (const auto& [p, v] : entries_) out.entries_.emplace(p, v * c);
  return out;
}

SparseFn SparseFn::indicator(std::size_t dim, const std::vector<Point>& points) {
  SparseFn out(dim);
  for (const auto& p : points) out.set(p, 1);
  return out;
}

FourTuple::FourTuple(SparseFn f_, SparseFn g_, SparseFn h_, SparseFn k_)
    : f(std::move(f_)), g(std::move(g_)), h(std::move(h_)), k(std::move(k_)) {
  if (g.dim() != f.dim() || h.dim() != f.dim() || k.dim() != f.dim()) {
    throw DimensionMismatch("f, g, h, k must share a dimension");
  }
}

SparseFn fz(const SparseFn& f, const SparseFn& g, const Point& z) {
  if (f.dim() != g.dim()) {
    throw DimensionMismatch("fz: f and g differ in dimension");
  }
  require_dim(f.dim(), z);
  SparseFn out(f.dim());
  for (const auto& [j, v] : f.entries()) {
    const Rational w = g(z - j);
    if (w != 0) out.set(j, v * w);
  }
  return out;
}

std::vector<HypothesisViolation> check_hypothesis(const FourTuple& t, const BinaryOp& op) {
  if (op.dim() != t.dim()) {
    throw DimensionMismatch("operation dimension does not match the tuple");
  }
  std::vector<HypothesisViolation> out;
  for (const auto& [x, fx] : t.f.entries()) {
    for (const auto& [y, gy] : t.g.entries()) {
      const Point tv = op(x, y);
      const Point cv = x + y - tv;
      const Rational lhs = fx * gy;
      const Rational rhs = t.h(tv) * t.k(cv);
      if (lhs > rhs) out.push_back({x, y, tv, cv, lhs, rhs});
    }
  }
  return out;
}

std::vector<HypothesisViolation> check_hypothesis(const FourTuple& t, const PairingOp& op) {
  return check_hypothesis(t, as_binary_op(op, t.dim()));
}

ConclusionReport check_conclusion(const FourTuple& t) {
  ConclusionReport r;
  r.sum_f = t.f.total();
  r.sum_g = t.g.total();
  r.sum_h = t.h.total();
  r.sum_k = t.k.total();
  r.lhs = r.sum_f * r.sum_g;
  r.rhs = r.sum_h * r.sum_k;
  r.holds = r.lhs <= r.rhs;
  return r;
}

std::pair<SparseFn, SparseFn> tight_hk(const SparseFn& f, const SparseFn& g, const PairingOp& op) {
  if (f.dim() != g.dim()) {
    throw DimensionMismatch("tight_hk: f and g differ in dimension");
  }
  const BinaryOp t = as_binary_op(op, f.dim());
  auto root = [](const Point& p, const Rational& v) {
    auto r = exact_sqrt(v);
    if (!r) {
      throw InvalidArgument("value " + to_string(v) + " at " + to_string(p) +
                            " is not the square of a rational");
    }
    return *r;
  };
  std::vector<std::pair<Point, Rational>> fr, gr;
  for (const auto& [p, v] : f.entries()) fr.emplace_back(p, root(p, v));
  for (const auto& [p, v] : g.entries()) gr.emplace_back(p, root(p, v));

  std::map<Point, Rational> h, k;
  for (const auto& [x, sx] : fr) {
    for (const auto& [y, sy] : gr) {
      const Rational m = sx * sy;
      const Point tv = t(x, y);
      raise_to(h, tv, m);
      raise_to(k, x + y - tv, m);
    }
  }
  return {from_map(f.dim(), h), from_map(f.dim(), k)};
}

std::pair<SparseFn, SparseFn> fiber_max_hk(const SparseFn& f, const SparseFn& g,
                                           const PairingOp& op) {
  if (f.dim() != g.dim()) {
    throw DimensionMismatch("fiber_max_hk: f and g differ in dimension");
  }
  const BinaryOp t = as_binary_op(op, f.dim());
  std::map<Point, Rational> h, k;
  for (const auto& [x, fx] : f.entries()) {
    for (const auto& [y, gy] : g.entries()) {
      const Point tv = t(x, y);
      raise_to(h, tv, fx);
      raise_to(k, x + y - tv, gy);
    }
  }
  return {from_map(f.dim(), h), from_map(f.dim(), k)};
}

bool TheoremVerdict::axioms_pass() const {
  if (!p1.pass) return false;
  if (p2 && !p2->pass) return false;
  if (p2prime && !p2prime->pass) return false;
  return true;
}

TheoremVerdict verify_theorem(const FourTuple& t, const PairingOp& op, const Decomposition& d,
                              const TheoremCheckOptions& options) {
  if (d.total_dim() != t.dim()) {
    throw DimensionMismatch("decomposition dimension does not match the tuple");
  }
  TheoremVerdict v;
  v.p1 = check_P1(op, t.dim(), options.box_radius, options.shift_radius);
  if (options.monotonicity == MonotonicityCheck::KnotheP2) {
    v.p2 = check_P2(op, d, options.box_radius);
  } else {
    v.p2prime = check_P2prime(op, d, options.box_radius, options.max_set_size);
  }
  v.hypothesis_violations = check_hypothesis(t, op);
  v.conclusion = check_conclusion(t);
  return v;
}

FiniteGroupSpec::FiniteGroupSpec(std::vector<long long> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) {
    throw InvalidArgument("a finite group needs at least one cyclic factor");
  }
  for (auto p : moduli_) {
    if (p < 2) throw InvalidArgument("moduli must be at least 2");
  }
}

std::vector<Point> FiniteGroupSpec::residues() const {
  std::vector<Point> out;
  std::vector<long long> cur(moduli_.size(), 0);
  while (true) {
    out.emplace_back(std::vector<Integer>(cur.begin(), cur.end()));
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (++cur[i] < moduli_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
  }
}

bool FiniteGroupSpec::in_fundamental_domain(const Point& p) const {
  if (p.dim() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (p[i] < 0 || p[i] >= moduli_[i]) return false;
  }
  return true;
}

Point FiniteGroupSpec::reduce(const Point& p) const {
  require_dim(dim(), p);
  Point out = p;
  for (std::size_t i = 0; i < dim(); ++i) {
    Integer r = out[i] % moduli_[i];
    if (r < 0) r += moduli_[i];
    out[i] = r;
  }
  return out;
}

SparseFn lift_finite(const FiniteGroupSpec& spec, const std::map<Point, Rational>& values) {
  SparseFn out(spec.dim());
  for (const auto& [r, v] : values) {
    if (!spec.in_fundamental_domain(r)) {
      throw InvalidArgument("residue " + to_string(r) + " is outside the fundamental domain");
    }
    out.set(r, v);
  }
  return out;
}

}  // namespace dbm
