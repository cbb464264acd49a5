#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dbm/axioms.hpp"
#include "dbm/errors.hpp"
#include "dbm/four_functions.hpp"
#include "dbm/pairing.hpp"
#include "dbm/point.hpp"

namespace dbm {

struct FactResult {
  bool product_ok = false;  ///< ab <= cd
  bool max_ok = false;      ///< max{a,b} <= max{c,d}
  bool applicable = false;
  bool sum_holds = false;   ///< a + b <= c + d
};

/// If ab <= cd and max{a,b} <= max{c,d} then a + b <= c + d, for a,b,c,d >= 0.
/// Throws InvalidArgument on a negative input and std::logic_error if the
/// preconditions hold but the sum inequality does not.
FactResult fact_max_sum(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

class CertificationError : public Error {
 public:
  using Error::Error;
};

/// Some set met during the induction has no exclusive pair.
class NotExclusive : public CertificationError {
 public:
  explicit NotExclusive(ExclusivityReport report);
  const ExclusivityReport& report() const noexcept { return report_; }

 private:
  ExclusivityReport report_;
};

/// F_z(x) F_z(y) <= H_z(T(x,z-y)) H_z(T(y,z-x)) (or its single-point form)
/// failed, so the input tuple does not satisfy the hypothesis.
class ChainedInequalityFailure : public CertificationError {
 public:
  ChainedInequalityFailure(Point x, Point y, Rational lhs, Rational rhs);
  const Point& x() const noexcept { return x_; }
  const Point& y() const noexcept { return y_; }
  const Rational& lhs() const noexcept { return lhs_; }
  const Rational& rhs() const noexcept { return rhs_; }

 private:
  Point x_, y_;
  Rational lhs_, rhs_;
};

enum class CaseTag { Base0, Base1, Case1, Case2 };

const char* to_string(CaseTag tag);
/// Throws ParseError for an unknown name.
CaseTag parse_case_tag(std::string_view name);

/// Exact values recorded at a node. For Base1 only f_x = F_z(j) and
/// h_xy = H_z(T(j, z-j)) are used; the rest are zero.
struct NodeValues {
  Rational f_x;   ///< F_z(x)
  Rational f_y;   ///< F_z(y)
  Rational h_xy;  ///< H_z(T(x, z-y))
  Rational h_yx;  ///< H_z(T(y, z-x))

  friend bool operator==(const NodeValues&, const NodeValues&) = default;
};

/// One step of the induction on |A|.
struct CertificateNode {
  std::vector<Point> set;  ///< A, sorted
  Point z;
  CaseTag tag = CaseTag::Base0;
  /// The exclusive pair, oriented so that F_z(x) <= F_z(y). Case nodes only.
  std::optional<std::pair<Point, Point>> pair;
  std::optional<PairDiagnostic> exclusivity;
  NodeValues values;
  std::vector<Point> image;  ///< T(A, z - A)
  Rational sum_f;            ///< sum of F_z over A
  Rational sum_h;            ///< sum of H_z over T(A, z - A)
};

/// The induction replayed for one z. nodes[0] is the root; nodes[i + 1] is
/// the child of nodes[i] (the induction recurses on a single smaller set).
struct Certificate {
  std::string op_name;
  Point z;
  std::vector<CertificateNode> nodes;

  const CertificateNode& root() const { return nodes.front(); }
  std::size_t depth() const noexcept { return nodes.size(); }
};

/// Builds a certificate for sum_{j in A} F_z(j) <= sum_{j in T(A,z-A)} H_z(j).
/// Among valid exclusive pairs the lexicographically first is used; ties
/// F_z(x) = F_z(y) are not swapped; F_z(y) = max of the H-values goes to
/// Case2. Throws NotExclusive or ChainedInequalityFailure.
Certificate certify_sum_inequality(const BinaryOp& op, const Point& z, std::vector<Point> set,
                                   const SparseFn& Fz, const SparseFn& Hz);

struct ValidationResult {
  bool valid = true;
  std::optional<std::size_t> failing_node;
  std::string reason;
};

/// Re-checks every node from scratch against op, Fz and Hz.
ValidationResult validate_certificate(const Certificate& cert, const BinaryOp& op,
                                      const SparseFn& Fz, const SparseFn& Hz);

struct AggregateReport {
  std::vector<Certificate> certificates;
  std::vector<ValidationResult> validations;
  bool all_valid = true;
  Rational lhs_total;      ///< sum over z of the certified F_z sums
  Rational rhs_certified;  ///< sum over z of the certified H_z sums
  Rational rhs_full;       ///< (sum h)(sum k)
  bool lhs_matches_product = false;  ///< lhs_total == (sum f)(sum g)
  bool holds = false;                ///< lhs_total <= rhs_certified <= rhs_full
  ConclusionReport conclusion;
  bool agrees = false;  ///< holds == conclusion.holds
};

/// Certifies the per-z inequality for every z with nonempty F_z (A = supp F_z)
/// and sums the results over z. Propagates certification errors.
AggregateReport sum_inequality_to_conclusion(const FourTuple& t, const PairingOp& op);

}  // namespace dbm
