#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "dbm/rational.hpp"

namespace dbm {

/// A point of Z^n with arbitrary-precision coordinates. Arithmetic is
/// componentwise and throws DimensionMismatch on operands of different
/// dimension. The built-in ordering (operator<=>) is structural
/// lexicographic order, used for containers and deterministic scans; group
/// orderings live in ordering.hpp.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<long long> coords);
  explicit Point(std::vector<Integer> coords) : coords_(std::move(coords)) {}

  static Point zero(std::size_t dim) { return Point(std::vector<Integer>(dim)); }

  std::size_t dim() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const noexcept { return coords_; }

  /// Coordinates [offset, offset + count).
  Point slice(std::size_t offset, std::size_t count) const;
  /// This point followed by the coordinates of tail.
  Point concat(const Point& tail) const;

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator-(const Point& a);

  friend bool operator==(const Point& a, const Point& b) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

 private:
  std::vector<Integer> coords_;
};

/// "(x1,x2,...)".
std::string to_string(const Point& p);

/// All points of [-radius, radius]^dim in lexicographic order. dim == 0 yields
/// the single empty point.
std::vector<Point> box_points(std::size_t dim, long long radius);

/// A point of Q^n. Rationals are kept in lowest terms by the arithmetic type,
/// so equality is structural.
class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  explicit RationalPoint(const Point& p);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  bool is_integral() const;
  /// Throws InvalidArgument unless is_integral().
  Point to_point() const;

  friend RationalPoint operator+(const RationalPoint& a, const RationalPoint& b);
  friend RationalPoint operator*(const Rational& s, const RationalPoint& a);

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) = default;
  friend std::strong_ordering operator<=>(const RationalPoint& a, const RationalPoint& b);

 private:
  std::vector<Rational> coords_;
};

std::string to_string(const RationalPoint& p);

}  // namespace dbm
