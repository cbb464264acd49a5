#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dbm/axioms.hpp"
#include "dbm/ordering.hpp"
#include "dbm/pairing.hpp"
#include "dbm/point.hpp"

namespace dbm {

/// A finitely supported function Z^n -> [0, inf) with exact rational values.
/// Zero values are never stored; lookups off the support return 0.
class SparseFn {
 public:
  explicit SparseFn(std::size_t dim = 1) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  /// Throws InvalidArgument for a negative value, DimensionMismatch for a
  /// point of the wrong dimension. Setting zero erases the entry.
  void set(const Point& p, const Rational& value);
  Rational operator()(const Point& p) const;

  /// Points with nonzero value, in lexicographic order.
  std::vector<Point> support() const;
  const std::map<Point, Rational>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  Rational total() const;

  /// x -> f(x - w).
  SparseFn translated(const Point& w) const;
  /// Throws InvalidArgument for negative c.
  SparseFn scaled(const Rational& c) const;

  static SparseFn indicator(std::size_t dim, const std::vector<Point>& points);

  friend bool operator==(const SparseFn&, const SparseFn&) = default;

 private:
  std::size_t dim_;
  std::map<Point, Rational> entries_;
};

/// f, g, h, k of one four functions inequality. The constructor checks that
/// all four share a dimension.
struct FourTuple {
  SparseFn f, g, h, k;

  FourTuple(SparseFn f_, SparseFn g_, SparseFn h_, SparseFn k_);
  std::size_t dim() const noexcept { return f.dim(); }
};

/// j -> f(j) g(z - j). With (h, k) the same operation gives H_z.
SparseFn fz(const SparseFn& f, const SparseFn& g, const Point& z);

struct HypothesisViolation {
  Point x;
  Point y;
  Point t;           ///< T(x, y)
  Point complement;  ///< x + y - T(x, y)
  Rational lhs;      ///< f(x) g(y)
  Rational rhs;      ///< h(T(x,y)) k(x + y - T(x,y))
};

/// Every (x, y) in supp f x supp g with f(x) g(y) > h(T(x,y)) k(x+y-T(x,y)),
/// in lexicographic (x, y) order.
std::vector<HypothesisViolation> check_hypothesis(const FourTuple& t, const BinaryOp& op);
std::vector<HypothesisViolation> check_hypothesis(const FourTuple& t, const PairingOp& op);

struct ConclusionReport {
  Rational sum_f, sum_g, sum_h, sum_k;
  Rational lhs;  ///< (sum f)(sum g)
  Rational rhs;  ///< (sum h)(sum k)
  bool holds = true;
};

ConclusionReport check_conclusion(const FourTuple& t);

/// The admissible pair with m(x,y) = sqrt(f(x) g(y)):
///   h(u) = max{m(x,y) : T(x,y) = u},  k(v) = max{m(x,y) : x + y - T(x,y) = v}.
/// Every value of f and g must be the square of a rational; otherwise throws
/// InvalidArgument.
std::pair<SparseFn, SparseFn> tight_hk(const SparseFn& f, const SparseFn& g, const PairingOp& op);

/// Admissible pair for arbitrary values: h(u) = max f(x), k(v) = max g(y)
/// over the same fibers. Looser than tight_hk.
std::pair<SparseFn, SparseFn> fiber_max_hk(const SparseFn& f, const SparseFn& g,
                                           const PairingOp& op);

enum class MonotonicityCheck { KnotheP2, ExclusiveP2Prime };

struct TheoremVerdict {
  AxiomReport p1;
  std::optional<AxiomReport> p2;
  std::optional<P2PrimeReport> p2prime;
  std::vector<HypothesisViolation> hypothesis_violations;
  ConclusionReport conclusion;

  bool axioms_pass() const;
  bool hypothesis_pass() const { return hypothesis_violations.empty(); }
  /// The bounded axioms and the hypothesis pass but the conclusion fails.
  /// This can only mean a bug (or a hole in the bounded checks).
  bool contradiction() const { return axioms_pass() && hypothesis_pass() && !conclusion.holds; }
  bool pass() const { return axioms_pass() && hypothesis_pass() && conclusion.holds; }
};

struct TheoremCheckOptions {
  long long box_radius = 2;
  long long shift_radius = 2;
  MonotonicityCheck monotonicity = MonotonicityCheck::KnotheP2;
  std::size_t max_set_size = 4;
};

/// Bounded P1, bounded P2 (or P2'), exhaustive hypothesis, exact conclusion.
TheoremVerdict verify_theorem(const FourTuple& t, const PairingOp& op, const Decomposition& d,
                              const TheoremCheckOptions& options = {});

/// (Z/p1) x ... x (Z/pn).
class FiniteGroupSpec {
 public:
  /// Throws InvalidArgument if empty or any modulus is below 2.
  explicit FiniteGroupSpec(std::vector<long long> moduli);

  std::size_t dim() const noexcept { return moduli_.size(); }
  const std::vector<long long>& moduli() const noexcept { return moduli_; }
  /// All residue tuples of the fundamental domain 0 <= x_i < p_i, lexicographic.
  std::vector<Point> residues() const;
  bool in_fundamental_domain(const Point& p) const;
  /// The projection Z^n -> G, returned as the representative in the
  /// fundamental domain.
  Point reduce(const Point& p) const;

 private:
  std::vector<long long> moduli_;
};

/// The lift f~ of a function on the group: f(pi(x)) on the fundamental domain,
/// zero elsewhere. Residues outside 0 <= r_i < p_i raise InvalidArgument;
/// residues absent from the map are zero.
SparseFn lift_finite(const FiniteGroupSpec& spec, const std::map<Point, Rational>& values);

}  // namespace dbm
