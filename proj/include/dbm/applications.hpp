#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "dbm/point.hpp"

namespace dbm {

// ---------------------------------------------------------------------------
// Hypercube midpoints

/// Throws InvalidArgument if set is empty, DimensionMismatch if dimensions
/// differ, and InvalidArgument if a coordinate is not 0 or 1.
void validate_hypercube_set(const std::vector<Point>& set);

/// Midpoints m in {0,1}^n of some (a, b) in A x B: m agrees with a and b where
/// they agree, and #{j : m_j = a_j} = #{j : m_j = b_j} + eps, eps in {-1,0,1},
/// counted over all n coordinates.
std::set<Point> ov_midpoints(const std::vector<Point>& a, const std::vector<Point>& b);

/// True if m is a midpoint of (a, b) in the above sense.
bool is_midpoint(const Point& m, const Point& a, const Point& b);

struct ParityMidpoints {
  std::set<Point> lower;  ///< {T(a,b)} with T the parity map
  std::set<Point> upper;  ///< {a + b - T(a,b)}
  std::set<Point> both;   ///< lower ∪ upper
};

ParityMidpoints ov_t_midpoints(const std::vector<Point>& a, const std::vector<Point>& b);

struct MidpointReport {
  std::set<Point> midpoints;  ///< M
  ParityMidpoints parity;     ///< M1-, M1+, M1
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  bool parity_inside_midpoints = false;  ///< M1 ⊆ M
  bool product_bound = false;            ///< #M1- · #M1+ >= #A · #B
  bool square_bound = false;             ///< (#M1)^2 >= #A · #B
  bool midpoint_bound = false;           ///< (#M)^2 >= #A · #B

  bool holds() const {
    return parity_inside_midpoints && product_bound && square_bound && midpoint_bound;
  }
};

MidpointReport check_ov(const std::vector<Point>& a, const std::vector<Point>& b);

struct HypercubeSweepReport {
  std::size_t dim = 0;
  std::size_t pairs_checked = 0;
  std::size_t failures = 0;
  /// First failing (A, B), if any, as subset bitmasks over {0,1}^n in
  /// lexicographic order.
  std::optional<std::pair<unsigned, unsigned>> first_failure;
  bool pass() const { return failures == 0; }
};

/// check_ov over all pairs of nonempty A, B ⊆ {0,1}^dim (1 <= dim <= 3). Per-pair
/// sets are built as unions of the single-pair results of ov_midpoints and
/// ov_t_midpoints.
HypercubeSweepReport sweep_hypercube(std::size_t dim);

// ---------------------------------------------------------------------------
// Lattice point counts

/// An interval offset with rational endpoints; an absent endpoint is infinite.
struct Interval {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  bool lower_closed = true;
  bool upper_closed = true;

  static Interval closed(Rational lo, Rational hi) { return {lo, hi, true, true}; }
  static Interval open(Rational lo, Rational hi) { return {lo, hi, false, false}; }
  static Interval closed_open(Rational lo, Rational hi) { return {lo, hi, true, false}; }
  static Interval open_closed(Rational lo, Rational hi) { return {lo, hi, false, true}; }
};

/// center + I_1 x ... x I_n.
struct Box {
  RationalPoint center;
  std::vector<Interval> axes;

  bool contains(const Point& p) const;
};

/// Throws InvalidArgument for an empty box or dimension mismatch.
class BoxUnion {
 public:
  BoxUnion(std::size_t dim, std::vector<Box> boxes);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Box>& boxes() const noexcept { return boxes_; }
  bool contains(const Point& p) const;

  /// S + I^n for a finite set S and one interval used on every axis.
  static BoxUnion translates(std::size_t dim, const std::vector<RationalPoint>& centers,
                             const Interval& offset);

 private:
  std::size_t dim_;
  std::vector<Box> boxes_;
};

/// Number of integer points in the union. Throws InvalidArgument if a box is
/// unbounded.
Integer lattice_count(const BoxUnion& u);

/// Number of integer points of a finite point set.
Integer lattice_count(const std::vector<RationalPoint>& set);

struct LatticeChainReport {
  std::vector<RationalPoint> midpoint_set;  ///< S = (K + L) / 2
  Integer count_k, count_l;
  Integer count_upper;  ///< G(S + [0,1)^n)
  Integer count_lower;  ///< G(S + (-1,0]^n)
  Integer count_open;   ///< G(S + (-1,1)^n)
  bool first_link = false;   ///< G(K) G(L) <= G(S+[0,1)^n) G(S+(-1,0]^n)
  bool second_link = false;  ///< ... <= G(S+(-1,1)^n)^2
  /// Integer parts of K, L satisfy the floor/ceil midpoint hypothesis with
  /// h, k the indicators of the two half-open unions.
  bool hypothesis_holds = false;

  bool holds() const { return first_link && second_link; }
};

/// Throws InvalidArgument if K or L is empty or they differ in dimension.
LatticeChainReport check_inz(const std::vector<RationalPoint>& k, const std::vector<RationalPoint>& l);

}  // namespace dbm
