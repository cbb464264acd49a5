#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dbm/point.hpp"

namespace dbm {

/// The usual order on Z. Only valid for one-dimensional factors.
struct StandardOrder {
  friend bool operator==(const StandardOrder&, const StandardOrder&) = default;
};

/// Lexicographic order on Z^l (first coordinate most significant).
struct LexOrder {
  friend bool operator==(const LexOrder&, const LexOrder&) = default;
};

/// x <=_L y iff Lx <=_lex Ly for an invertible rational matrix L.
class LinearOrder {
 public:
  /// Row-major square matrix. Throws InvalidArgument if it is not square or
  /// is singular.
  explicit LinearOrder(std::vector<std::vector<Rational>> matrix);

  std::size_t dim() const noexcept { return matrix_.size(); }
  const std::vector<std::vector<Rational>>& matrix() const noexcept { return matrix_; }
  RationalPoint image(const Point& p) const;

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;

 private:
  std::vector<std::vector<Rational>> matrix_;
};

/// A total additive ordering attached to a free factor Z^l.
using OrderingSpec = std::variant<StandardOrder, LexOrder, LinearOrder>;

bool supports_dimension(const OrderingSpec& order, std::size_t dim);

/// Throws DimensionMismatch if a, b do not have a dimension the ordering
/// supports (or differ from each other).
std::strong_ordering compare(const OrderingSpec& order, const Point& a, const Point& b);

/// Type-erased comparator, so tests and callers can inject orderings that are
/// not one of the built-ins.
using Comparator = std::function<std::strong_ordering(const Point&, const Point&)>;
Comparator make_comparator(OrderingSpec order);

/// Outcome of an exhaustive check over [-radius, radius]^dim. On failure,
/// `axiom` names the broken property and `witness` holds the offending points
/// in the order they appear in the axiom.
struct OrderingReport {
  bool pass = true;
  std::size_t dim = 0;
  long long radius = 0;
  std::string axiom;
  std::vector<Point> witness;
  std::string detail;
};

/// Checks antisymmetry/totality and Equal <=> structural equality on pairs,
/// then transitivity and additivity (x < y  =>  x+z < y+z) on triples.
OrderingReport check_ordering_axioms(const Comparator& cmp, std::size_t dim, long long radius);
OrderingReport check_ordering_axioms(const OrderingSpec& order, std::size_t dim, long long radius);

struct Factor {
  std::size_t dim = 1;
  OrderingSpec order = StandardOrder{};

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Z^n = G_1 x ... x G_k with each G_i = Z^{l_i} carrying an ordering.
/// Factor indices are zero-based throughout the library.
class Decomposition {
 public:
  /// Throws InvalidArgument on an empty list, a zero-dimensional factor, or an
  /// ordering that does not fit its factor.
  explicit Decomposition(std::vector<Factor> factors);

  /// n one-dimensional factors with the standard order.
  static Decomposition standard(std::size_t n);
  /// A single factor Z^n with the given ordering.
  static Decomposition single(std::size_t n, OrderingSpec order = LexOrder{});

  std::size_t size() const noexcept { return factors_.size(); }
  std::size_t total_dim() const noexcept { return total_dim_; }
  const Factor& factor(std::size_t i) const;
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  /// Index of the first coordinate of factor i.
  std::size_t offset(std::size_t i) const;
  bool is_standard() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  std::vector<Factor> factors_;
  std::size_t total_dim_ = 0;
};

/// Coordinates of p belonging to factor i. Throws InvalidArgument when i is
/// out of range.
Point project(const Point& p, const Decomposition& d, std::size_t i);
/// Coordinates of factors 0..i-1 (the conditioning prefix of factor i).
Point prefix(const Point& p, const Decomposition& d, std::size_t i);

/// Names: "std", "lex", "lin:<rows>" with rows separated by ';' and entries
/// by ','.
std::string to_string(const OrderingSpec& order);
OrderingSpec parse_ordering(std::string_view text);

/// Names: "std" (n standard factors), "single" or "single:<ordering>" (one
/// factor), or an explicit list "<dim>:<ordering>|<dim>:<ordering>|...".
std::string to_string(const Decomposition& d);
Decomposition parse_decomposition(std::string_view text, std::size_t dim);

}  // namespace dbm
