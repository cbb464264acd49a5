#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dbm/ordering.hpp"
#include "dbm/point.hpp"

namespace dbm {

struct PairingOp;

/// Coordinatewise minimum x ∧ y.
struct Meet {};
/// Coordinatewise maximum x ∨ y.
struct Join {};
/// floor(λx + (1-λ)y) per coordinate, λ ∈ [0,1] ∩ Q.
struct FloorMix {
  Rational lambda;
};
/// ceil(λx + (1-λ)y) per coordinate.
struct CeilMix {
  Rational lambda;
};
/// The smaller of x, y under a total additive ordering of the whole space.
struct OrderMin {
  OrderingSpec order;
};
struct OrderMax {
  OrderingSpec order;
};
/// T_i(x,y) = x_i when #{j <= i : x_j != y_j} is odd, y_i otherwise.
struct ParityMix {};
/// Independent operations on the factors of a decomposition; ops[i] acts on
/// the dims[i] coordinates of factor i.
struct PerFactor {
  std::vector<std::size_t> dims;
  std::vector<PairingOp> ops;
};

/// An operation T: Z^n x Z^n -> Z^n whose complement x + y - T(x,y) is the
/// partner argument of the four functions inequality.
struct PairingOp {
  std::variant<Meet, Join, FloorMix, CeilMix, OrderMin, OrderMax, ParityMix, PerFactor> kind;

  static PairingOp meet() { return {Meet{}}; }
  static PairingOp join() { return {Join{}}; }
  /// Throws InvalidArgument unless 0 <= lambda <= 1.
  static PairingOp floor_mix(Rational lambda);
  static PairingOp ceil_mix(Rational lambda);
  static PairingOp order_min(OrderingSpec order) { return {OrderMin{std::move(order)}}; }
  static PairingOp order_max(OrderingSpec order) { return {OrderMax{std::move(order)}}; }
  static PairingOp parity_mix() { return {ParityMix{}}; }
  /// Throws InvalidArgument if the lists differ in length or are empty.
  static PairingOp per_factor(std::vector<std::size_t> dims, std::vector<PairingOp> ops);
};

/// The dimension an operation is pinned to, if any (orderings with fixed
/// dimension, PerFactor). Dimension-generic operations return nullopt.
std::optional<std::size_t> fixed_dimension(const PairingOp& op);

/// Throws InvalidArgument/DimensionMismatch if op cannot act on Z^dim.
void validate(const PairingOp& op, std::size_t dim);

Point apply(const PairingOp& op, const Point& x, const Point& y);
/// x + y - apply(op, x, y).
Point complement(const PairingOp& op, const Point& x, const Point& y);

/// A binary operation on a fixed Z^dim. Slices of pairing operations and
/// operations injected by tests both take this shape.
class BinaryOp {
 public:
  using Fn = std::function<Point(const Point&, const Point&)>;

  BinaryOp(std::size_t dim, Fn fn, std::string name = "custom")
      : dim_(dim), fn_(std::move(fn)), name_(std::move(name)) {}

  /// Throws DimensionMismatch when an argument is not in Z^dim.
  Point operator()(const Point& x, const Point& y) const;

  std::size_t dim() const noexcept { return dim_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t dim_;
  Fn fn_;
  std::string name_;
};

BinaryOp as_binary_op(const PairingOp& op, std::size_t dim);

/// The conditional slice T_i^{(a,b)}(x, y) = T_i((a, x, 0...), (b, y, 0...)).
/// Coordinates after factor i are filled with zeros; the dependence check in
/// the axiom checkers catches operations that read them.
/// ParityMix is only accepted with the standard decomposition.
BinaryOp slice(const PairingOp& op, const Decomposition& d, std::size_t i, const Point& a,
               const Point& b);

/// meet, join, floormix:p/q, ceilmix:p/q, paritymix, ordermin:<ordering>,
/// ordermax:<ordering>, perfactor:[<dim>:<op>|<dim>:<op>|...].
std::string to_string(const PairingOp& op);
PairingOp parse_pairing_op(std::string_view text);

}  // namespace dbm
