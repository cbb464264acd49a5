#include "dbm/ordering.hpp"

#include <sstream>

#include "dbm/errors.hpp"

namespace dbm {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

std::strong_ordering lex(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (b[i] < a[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

const char* name_of(std::strong_ordering c) {
  if (c < 0) return "Less";
  if (c > 0) return "Greater";
  return "Equal";
}

}  // namespace

LinearOrder::LinearOrder(std::vector<std::vector<Rational>> matrix) : matrix_(std::move(matrix)) {
  if (matrix_.empty()) {
    throw InvalidArgument("linear ordering matrix must be nonempty");
  }
  for (const auto& row : matrix_) {
    if (row.size() != matrix_.size()) {
      throw InvalidArgument("linear ordering matrix must be square");
    }
  }
  if (determinant(matrix_) == 0) {
    throw InvalidArgument("linear ordering matrix is singular");
  }
}

RationalPoint LinearOrder::image(const Point& p) const {
  if (p.dim() != dim()) {
    throw DimensionMismatch("linear ordering of dimension " + std::to_string(dim()) +
                            " applied to point of dimension " + std::to_string(p.dim()));
  }
  std::vector<Rational> out(dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < dim(); ++c) acc += matrix_[r][c] * p[c];
    out[r] = acc;
  }
  return RationalPoint(std::move(out));
}

bool supports_dimension(const OrderingSpec& order, std::size_t dim) {
  return std::visit(Overloaded{
                        [&](const StandardOrder&) { return dim == 1; },
                        [&](const LexOrder&) { return dim >= 1; },
                        [&](const LinearOrder& l) { return dim == l.dim(); },
                    },
                    order);
}

std::strong_ordering compare(const OrderingSpec& order, const Point& a, const Point& b) {
  if (a.dim() != b.dim() || !supports_dimension(order, a.dim())) {
    throw DimensionMismatch("ordering " + to_string(order) + " cannot compare " + to_string(a) +
                            " and " + to_string(b));
  }
  return std::visit(Overloaded{
                        [&](const StandardOrder&) { return a <=> b; },
                        [&](const LexOrder&) { return a <=> b; },
                        [&](const LinearOrder& l) {
                          return lex(l.image(a).coords(), l.image(b).coords());
                        },
                    },
                    order);
}

Comparator make_comparator(OrderingSpec order) {
  return [order = std::move(order)](const Point& a, const Point& b) { return compare(order, a, b); };
}

OrderingReport check_ordering_axioms(const Comparator& cmp, std::size_t dim, long long radius) {
  OrderingReport report;
  report.dim = dim;
  report.radius = radius;
  const auto pts = box_points(dim, radius);
  const std::size_t m = pts.size();

  // sign table: -1, 0, 1
  std::vector<signed char> sign(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto c = cmp(pts[i], pts[j]);
      sign[i * m + j] = c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
  }
  auto fail = [&](std::string axiom, std::vector<Point> witness, std::string detail) {
    report.pass = false;
    report.axiom = std::move(axiom);
    report.witness = std::move(witness);
    report.detail = std::move(detail);
    return report;
  };

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const int s = sign[i * m + j];
      if ((s == 0) != (i == j)) {
        return fail("equality", {pts[i], pts[j]},
                    "comparator Equal must coincide with structural equality");
      }
      if (s != -sign[j * m + i]) {
        return fail("antisymmetry", {pts[i], pts[j]}, "compare(a,b) and compare(b,a) disagree");
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (sign[i * m + j] >= 0) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (sign[j * m + k] < 0 && sign[i * m + k] >= 0) {
          return fail("transitivity", {pts[i], pts[j], pts[k]}, "a < b and b < c but not a < c");
        }
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (sign[i * m + j] >= 0) continue;
      for (std::size_t k = 0; k < m; ++k) {
        const auto c = cmp(pts[i] + pts[k], pts[j] + pts[k]);
        if (c >= 0) {
          return fail("additivity", {pts[i], pts[j], pts[k]},
                      std::string("x < y but x+z vs y+z is ") + name_of(c));
        }
      }
    }
  }
  return report;
}

OrderingReport check_ordering_axioms(const OrderingSpec& order, std::size_t dim, long long radius) {
  if (!supports_dimension(order, dim)) {
    throw DimensionMismatch("ordering " + to_string(order) + " does not support dimension " +
                            std::to_string(dim));
  }
  return check_ordering_axioms(make_comparator(order), dim, radius);
}

Decomposition::Decomposition(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw InvalidArgument("decomposition needs at least one factor");
  }
  for (const auto& f : factors_) {
    if (f.dim == 0) {
      throw InvalidArgument("decomposition factors must have dimension >= 1");
    }
    if (!supports_dimension(f.order, f.dim)) {
      throw InvalidArgument("ordering " + to_string(f.order) + " does not fit a factor of dimension " +
                            std::to_string(f.dim));
    }
    total_dim_ += f.dim;
  }
}

Decomposition Decomposition::standard(std::size_t n) {
  return Decomposition(std::vector<Factor>(n, Factor{1, StandardOrder{}}));
}

Decomposition Decomposition::single(std::size_t n, OrderingSpec order) {
  return Decomposition({Factor{n, std::move(order)}});
}

const Factor& Decomposition::factor(std::size_t i) const {
  if (i >= factors_.size()) {
    throw InvalidArgument("factor index " + std::to_string(i) + " out of range for " +
                          std::to_string(factors_.size()) + " factors");
  }
  return factors_[i];
}

std::size_t Decomposition::offset(std::size_t i) const {
  if (i > factors_.size()) {
    throw InvalidArgument("factor index " + std::to_string(i) + " out of range");
  }
  std::size_t off = 0;
  for (std::size_t j = 0; j < i; ++j) off += factors_[j].dim;
  return off;
}

bool Decomposition::is_standard() const {
  for (const auto& f : factors_) {
    if (f.dim != 1 || !std::holds_alternative<StandardOrder>(f.order)) return false;
  }
  return true;
}

Point project(const Point& p, const Decomposition& d, std::size_t i) {
  if (p.dim() != d.total_dim()) {
    throw DimensionMismatch("point " + to_string(p) + " does not match decomposition of dimension " +
                            std::to_string(d.total_dim()));
  }
  const Factor& f = d.factor(i);
  return p.slice(d.offset(i), f.dim);
}

Point prefix(const Point& p, const Decomposition& d, std::size_t i) {
  if (p.dim() != d.total_dim()) {
    throw DimensionMismatch("point " + to_string(p) + " does not match decomposition of dimension " +
                            std::to_string(d.total_dim()));
  }
  d.factor(i);  // bounds check
  return p.slice(0, d.offset(i));
}

std::string to_string(const OrderingSpec& order) {
  return std::visit(Overloaded{
                        [](const StandardOrder&) { return std::string("std"); },
                        [](const LexOrder&) { return std::string("lex"); },
                        [](const LinearOrder& l) {
                          std::string out = "lin:";
                          for (std::size_t r = 0; r < l.dim(); ++r) {
                            if (r) out += ";";
                            for (std::size_t c = 0; c < l.dim(); ++c) {
                              if (c) out += ",";
                              out += to_string(l.matrix()[r][c]);
                            }
                          }
                          return out;
                        },
                    },
                    order);
}

OrderingSpec parse_ordering(std::string_view text) {
  if (text == "std") return StandardOrder{};
  if (text == "lex") return LexOrder{};
  if (text.starts_with("lin:")) {
    std::vector<std::vector<Rational>> matrix;
    for (auto row : split(text.substr(4), ';')) {
      std::vector<Rational> values;
      for (auto entry : split(row, ',')) values.push_back(parse_rational(entry));
      matrix.push_back(std::move(values));
    }
    try {
      return LinearOrder(std::move(matrix));
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string("ordering \"") + std::string(text) + "\": " + e.what());
    }
  }
  throw ParseError("unknown ordering \"" + std::string(text) + "\" (expected std, lex or lin:<matrix>)");
}

std::string to_string(const Decomposition& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += "|";
    out += std::to_string(d.factor(i).dim) + ":" + to_string(d.factor(i).order);
  }
  return out;
}

Decomposition parse_decomposition(std::string_view text, std::size_t dim) {
  if (dim == 0) {
    throw ParseError("decomposition dimension must be >= 1");
  }
  if (text == "std") return Decomposition::standard(dim);
  if (text == "single") return Decomposition::single(dim);
  try {
    if (text.starts_with("single:")) {
      return Decomposition::single(dim, parse_ordering(text.substr(7)));
    }
    std::vector<Factor> factors;
    for (auto item : split(text, '|')) {
      const auto colon = item.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("decomposition factor \"" + std::string(item) + "\" must be <dim>:<ordering>");
      }
      const Integer l = parse_integer(item.substr(0, colon));
      if (l < 1 || l > 64) {
        throw ParseError("factor dimension out of range in \"" + std::string(item) + "\"");
      }
      factors.push_back(Factor{static_cast<std::size_t>(l.convert_to<long>()),
                               parse_ordering(item.substr(colon + 1))});
    }
    Decomposition d(std::move(factors));
    if (d.total_dim() != dim) {
      throw ParseError("decomposition \"" + std::string(text) + "\" has dimension " +
                       std::to_string(d.total_dim()) + ", expected " + std::to_string(dim));
    }
    return d;
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("decomposition \"") + std::string(text) + "\": " + e.what());
  }
}

}  // namespace dbm
