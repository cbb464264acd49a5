#include "dbm/point.hpp"

#include "dbm/errors.hpp"

namespace dbm {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

template <class T>
std::strong_ordering lex_compare(const std::vector<T>& a, const std::vector<T>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (b[i] < a[i]) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

}  // namespace

Point::Point(std::initializer_list<long long> coords) {
  coords_.reserve(coords.size());
  for (long long c : coords) {
    coords_.emplace_back(c);
  }
}

Point Point::slice(std::size_t offset, std::size_t count) const {
  if (offset + count > coords_.size()) {
    throw DimensionMismatch("slice [" + std::to_string(offset) + ", " +
                            std::to_string(offset + count) + ") out of range for dimension " +
                            std::to_string(coords_.size()));
  }
  return Point(std::vector<Integer>(coords_.begin() + static_cast<std::ptrdiff_t>(offset),
                                    coords_.begin() + static_cast<std::ptrdiff_t>(offset + count)));
}

Point Point::concat(const Point& tail) const {
  std::vector<Integer> out = coords_;
  out.insert(out.end(), tail.coords_.begin(), tail.coords_.end());
  return Point(std::move(out));
}

Point& Point::operator+=(const Point& other) {
  require_same_dim(dim(), other.dim());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  require_same_dim(dim(), other.dim());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Point operator-(const Point& a) {
  Point out = a;
  for (auto& c : out.coords_) c = -c;
  return out;
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  return lex_compare(a.coords_, b.coords_);
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) out += ",";
    out += p[i].str();
  }
  return out + ")";
}

std::vector<Point> box_points(std::size_t dim, long long radius) {
  if (radius < 0) {
    throw InvalidArgument("box radius must be nonnegative");
  }
  std::vector<Point> out;
  std::vector<long long> cur(dim, -radius);
  while (true) {
    std::vector<Integer> coords(cur.begin(), cur.end());
    out.emplace_back(std::move(coords));
    // odometer, last coordinate fastest
    std::size_t i = dim;
    while (i > 0) {
      --i;
      if (cur[i] < radius) {
        ++cur[i];
        break;
      }
      cur[i] = -radius;
      if (i == 0) return out;
    }
    if (dim == 0) return out;
  }
}

RationalPoint::RationalPoint(const Point& p) {
  coords_.reserve(p.dim());
  for (const auto& c : p.coords()) coords_.emplace_back(c);
}

bool RationalPoint::is_integral() const {
  for (const auto& c : coords_) {
    if (boost::multiprecision::denominator(c) != 1) return false;
  }
  return true;
}

Point RationalPoint::to_point() const {
  if (!is_integral()) {
    throw InvalidArgument("point " + to_string(*this) + " is not integral");
  }
  std::vector<Integer> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(boost::multiprecision::numerator(c));
  return Point(std::move(out));
}

RationalPoint operator+(const RationalPoint& a, const RationalPoint& b) {
  require_same_dim(a.dim(), b.dim());
  std::vector<Rational> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a.coords_[i] + b.coords_[i];
  return RationalPoint(std::move(out));
}

RationalPoint operator*(const Rational& s, const RationalPoint& a) {
  std::vector<Rational> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = s * a.coords_[i];
  return RationalPoint(std::move(out));
}

std::strong_ordering operator<=>(const RationalPoint& a, const RationalPoint& b) {
  return lex_compare(a.coords_, b.coords_);
}

std::string to_string(const RationalPoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) out += ",";
    out += to_string(p[i]);
  }
  return out + ")";
}

}  // namespace dbm
