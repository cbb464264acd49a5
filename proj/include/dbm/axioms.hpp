#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dbm/ordering.hpp"
#include "dbm/pairing.hpp"
#include "dbm/point.hpp"

namespace dbm {

/// Result of a bounded check of translation equivariance or Knothe
/// monotonicity. Every report records the box it covers; a pass only speaks
/// for that box.
struct AxiomReport {
  std::string property;
  bool pass = true;
  long long box_radius = 0;
  long long shift_radius = 0;
  /// "translation", "dependence" or "monotonicity" on failure.
  std::string failure;
  std::vector<std::pair<std::string, Point>> witness;
  std::string detail;
};

/// T(x+z, y+z) == T(x,y) + z for x, y in [-box_radius, box_radius]^n and z in
/// [-shift_radius, shift_radius]^n.
AxiomReport check_P1(const BinaryOp& op, long long box_radius, long long shift_radius);
AxiomReport check_P1(const PairingOp& op, std::size_t dim, long long box_radius,
                     long long shift_radius);

/// For each factor except the last, T_i(x,y) must not change when the
/// coordinates of later factors are zeroed (x, y over the full box).
AxiomReport check_factor_dependence(const PairingOp& op, const Decomposition& d,
                                    long long box_radius);

/// Dependence check, then for every factor i, every prefix pair (a, b) in the
/// box and every in-box quadruple with x1 <= x2, y1 <= y2 (non-strict, factor
/// ordering) asserts slice(x1,y1) <= slice(x2,y2).
AxiomReport check_P2(const PairingOp& op, const Decomposition& d, long long box_radius);

/// True when x1 <= x2 and y1 <= y2 but slice(x1,y1) > slice(x2,y2).
bool violates_monotonicity(const BinaryOp& slice_op, const Comparator& order, const Point& x1,
                           const Point& x2, const Point& y1, const Point& y2);

enum class ExclusivityVerdict { ExclusiveOnInstance, Violation };

/// The conditions of exclusivity evaluated for one ordered candidate pair.
struct PairDiagnostic {
  Point x;
  Point y;
  Point cross_xy;  ///< T(x, z - y)
  Point cross_yx;  ///< T(y, z - x)
  std::vector<Point> image_without_x;     ///< T(A1, z - A1), A1 = A \ {x}
  std::vector<Point> image_without_y;     ///< T(A2, z - A2), A2 = A \ {y}
  std::vector<Point> image_without_both;  ///< T(A3, z - A3), A3 = A \ {x, y}
  bool escapes_without_x = false;         ///< condition (a) for A1
  bool escapes_without_y = false;         ///< condition (a) for A2
  bool disjoint_without_both = false;     ///< condition (b)

  bool satisfied() const {
    return escapes_without_x && escapes_without_y && disjoint_without_both;
  }
};

struct ExclusivityReport {
  ExclusivityVerdict verdict = ExclusivityVerdict::Violation;
  std::vector<Point> set;  ///< A, sorted
  Point z;
  std::optional<std::pair<Point, Point>> witness;
  /// Every ordered pair examined, in scan order. For a violation this covers
  /// all distinct pairs of A.
  std::vector<PairDiagnostic> diagnostics;
};

/// T(S, z - S) = {T(u, z - v) : u, v in S}, sorted and deduplicated.
std::vector<Point> image_set(const BinaryOp& op, std::span<const Point> set, const Point& z);

/// Evaluates the exclusivity conditions for the pair (x, y) of set by direct
/// enumeration. Throws InvalidArgument if x == y or either is not in set.
PairDiagnostic examine_pair(const BinaryOp& op, std::span<const Point> set, const Point& z,
                            const Point& x, const Point& y);

/// Scans ordered pairs (x, y) of A lexicographically and returns the first
/// pair meeting both parts of (a) and (b). Throws InvalidArgument if A has
/// fewer than two distinct points.
ExclusivityReport check_exclusive(const BinaryOp& op, std::vector<Point> set, const Point& z);

struct ExclusivityInstance {
  std::vector<Point> set;
  Point z;

  friend bool operator==(const ExclusivityInstance&, const ExclusivityInstance&) = default;
};

enum class SearchMode { FirstViolation, AllViolations };

struct ExclusivitySearchResult {
  bool pass = true;
  long long box_radius = 0;
  std::size_t max_set_size = 0;
  long long z_radius = 0;
  std::size_t instances_checked = 0;
  /// Full diagnostics of the first violating instance in scan order.
  std::optional<ExclusivityReport> first;
  /// Every violating instance seen (just the first in FirstViolation mode).
  std::vector<ExclusivityInstance> violations;
};

/// Runs check_exclusive on every A in the box with 2 <= |A| <= max_set_size
/// (sizes ascending, combinations in lexicographic order) and every z in the
/// z-box (lexicographic, innermost).
ExclusivitySearchResult exclusivity_search(const BinaryOp& op, long long box_radius,
                                           std::size_t max_set_size, long long z_radius,
                                           SearchMode mode = SearchMode::FirstViolation);

struct WitnessResult {
  Point x;  ///< minimum of A under the ordering
  Point y;  ///< maximum of A under the ordering
  PairDiagnostic verification;
  bool verified = false;
};

/// Returns (min A, max A) and re-verifies the exclusivity conditions for that
/// pair by enumeration. A failed verification is reported in the result, not
/// thrown.
WitnessResult monotone_witness_pair(const BinaryOp& op, const Comparator& order,
                                    std::vector<Point> set, const Point& z);
WitnessResult monotone_witness_pair(const BinaryOp& op, const OrderingSpec& order,
                                    std::vector<Point> set, const Point& z);

struct SliceViolation {
  std::size_t factor = 0;
  Point a;
  Point b;
  ExclusivityInstance instance;
};

struct P2PrimeReport {
  bool pass = true;
  long long box_radius = 0;
  std::size_t max_set_size = 0;
  long long z_radius = 0;
  AxiomReport dependence;
  std::size_t slices_checked = 0;
  std::optional<SliceViolation> first;
  std::optional<ExclusivityReport> first_report;
  std::vector<SliceViolation> violations;
};

/// Dependence check plus an exclusivity search on every slice T_i^{(a,b)}
/// with prefixes in the box. z_radius defaults to box_radius.
P2PrimeReport check_P2prime(const PairingOp& op, const Decomposition& d, long long box_radius,
                            std::size_t max_set_size, std::optional<long long> z_radius = {},
                            SearchMode mode = SearchMode::FirstViolation);

}  // namespace dbm
