#include "dbm/pairing.hpp"

#include "dbm/errors.hpp"

namespace dbm {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_lambda(const Rational& lambda) {
  if (lambda < 0 || lambda > 1) {
    throw InvalidArgument("mixing weight " + to_string(lambda) + " is outside [0,1]");
  }
}

// Splits on sep at bracket depth zero.
std::vector<std::string_view> split_top_level(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '[') ++depth;
    if (text[i] == ']') --depth;
    if (text[i] == sep && depth == 0) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

}  // namespace

PairingOp PairingOp::floor_mix(Rational lambda) {
  check_lambda(lambda);
  return {FloorMix{std::move(lambda)}};
}

PairingOp PairingOp::ceil_mix(Rational lambda) {
  check_lambda(lambda);
  return {CeilMix{std::move(lambda)}};
}

PairingOp PairingOp::per_factor(std::vector<std::size_t> dims, std::vector<PairingOp> ops) {
  if (dims.empty() || dims.size() != ops.size()) {
    throw InvalidArgument("perfactor needs one operation per factor");
  }
  for (std::size_t i = 0; i < dims.size(); ++i) validate(ops[i], dims[i]);
  return {PerFactor{std::move(dims), std::move(ops)}};
}

std::optional<std::size_t> fixed_dimension(const PairingOp& op) {
  return std::visit(Overloaded{
                        [](const OrderMin& o) -> std::optional<std::size_t> {
                          if (std::holds_alternative<StandardOrder>(o.order)) return 1;
                          if (auto* l = std::get_if<LinearOrder>(&o.order)) return l->dim();
                          return std::nullopt;
                        },
                        [](const OrderMax& o) -> std::optional<std::size_t> {
                          if (std::holds_alternative<StandardOrder>(o.order)) return 1;
                          if (auto* l = std::get_if<LinearOrder>(&o.order)) return l->dim();
                          return std::nullopt;
                        },
                        [](const PerFactor& p) -> std::optional<std::size_t> {
                          std::size_t n = 0;
                          for (auto d : p.dims) n += d;
                          return n;
                        },
                        [](const auto&) -> std::optional<std::size_t> { return std::nullopt; },
                    },
                    op.kind);
}

void validate(const PairingOp& op, std::size_t dim) {
  if (dim == 0) {
    throw DimensionMismatch("operations act on Z^n with n >= 1");
  }
  std::visit(Overloaded{
                 [](const FloorMix& m) { check_lambda(m.lambda); },
                 [](const CeilMix& m) { check_lambda(m.lambda); },
                 [&](const OrderMin& o) {
                   if (!supports_dimension(o.order, dim)) {
                     throw DimensionMismatch("ordering " + to_string(o.order) +
                                             " does not act on dimension " + std::to_string(dim));
                   }
                 },
                 [&](const OrderMax& o) {
                   if (!supports_dimension(o.order, dim)) {
                     throw DimensionMismatch("ordering " + to_string(o.order) +
                                             " does not act on dimension " + std::to_string(dim));
                   }
                 },
                 [&](const PerFactor& p) {
                   if (p.dims.empty() || p.dims.size() != p.ops.size()) {
                     throw InvalidArgument("perfactor needs one operation per factor");
                   }
                   std::size_t n = 0;
                   for (std::size_t i = 0; i < p.dims.size(); ++i) {
                     validate(p.ops[i], p.dims[i]);
                     n += p.dims[i];
                   }
                   if (n != dim) {
                     throw DimensionMismatch("perfactor covers dimension " + std::to_string(n) +
                                             ", expected " + std::to_string(dim));
                   }
                 },
                 [](const auto&) {},
             },
             op.kind);
}

Point apply(const PairingOp& op, const Point& x, const Point& y) {
  if (x.dim() != y.dim()) {
    throw DimensionMismatch("operands " + to_string(x) + " and " + to_string(y) +
                            " differ in dimension");
  }
  validate(op, x.dim());
  const std::size_t n = x.dim();
  return std::visit(
      Overloaded{
          [&](const Meet&) {
            Point out = x;
            for (std::size_t i = 0; i < n; ++i)
              if (y[i] < out[i]) out[i] = y[i];
            return out;
          },
          [&](const Join&) {
            Point out = x;
            for (std::size_t i = 0; i < n; ++i)
              if (y[i] > out[i]) out[i] = y[i];
            return out;
          },
          [&](const FloorMix& m) {
            Point out = Point::zero(n);
            const Rational rest = 1 - m.lambda;
            for (std::size_t i = 0; i < n; ++i) out[i] = floor_of(m.lambda * x[i] + rest * y[i]);
            return out;
          },
          [&](const CeilMix& m) {
            Point out = Point::zero(n);
            const Rational rest = 1 - m.lambda;
            for (std::size_t i = 0; i < n; ++i) out[i] = ceil_of(m.lambda * x[i] + rest * y[i]);
            return out;
          },
          [&](const OrderMin& o) { return compare(o.order, x, y) <= 0 ? x : y; },
          [&](const OrderMax& o) { return compare(o.order, x, y) >= 0 ? x : y; },
          [&](const ParityMix&) {
            Point out = Point::zero(n);
            std::size_t disagreements = 0;
            for (std::size_t i = 0; i < n; ++i) {
              if (x[i] != y[i]) ++disagreements;
              out[i] = disagreements % 2 == 1 ? x[i] : y[i];
            }
            return out;
          },
          [&](const PerFactor& p) {
            Point out;
            std::size_t off = 0;
            for (std::size_t i = 0; i < p.dims.size(); ++i) {
              out = out.concat(apply(p.ops[i], x.slice(off, p.dims[i]), y.slice(off, p.dims[i])));
              off += p.dims[i];
            }
            return out;
          },
      },
      op.kind);
}

Point complement(const PairingOp& op, const Point& x, const Point& y) {
  return x + y - apply(op, x, y);
}

Point BinaryOp::operator()(const Point& x, const Point& y) const {
  if (x.dim() != dim_ || y.dim() != dim_) {
    throw DimensionMismatch("operation " + name_ + " on Z^" + std::to_string(dim_) +
                            " applied to " + to_string(x) + ", " + to_string(y));
  }
  return fn_(x, y);
}

BinaryOp as_binary_op(const PairingOp& op, std::size_t dim) {
  validate(op, dim);
  return BinaryOp(dim, [op](const Point& x, const Point& y) { return apply(op, x, y); },
                  to_string(op));
}

BinaryOp slice(const PairingOp& op, const Decomposition& d, std::size_t i, const Point& a,
               const Point& b) {
  validate(op, d.total_dim());
  if (std::holds_alternative<ParityMix>(op.kind) && !d.is_standard()) {
    throw InvalidArgument("paritymix is only defined with the standard decomposition");
  }
  const std::size_t off = d.offset(i);
  const std::size_t len = d.factor(i).dim;
  if (a.dim() != off || b.dim() != off) {
    throw DimensionMismatch("prefixes of factor " + std::to_string(i) + " must have dimension " +
                            std::to_string(off));
  }
  const Point tail = Point::zero(d.total_dim() - off - len);
  return BinaryOp(
      len,
      [op, a, b, tail, off, len](const Point& x, const Point& y) {
        return apply(op, a.concat(x).concat(tail), b.concat(y).concat(tail)).slice(off, len);
      },
      to_string(op) + "[factor " + std::to_string(i) + " | " + to_string(a) + "," + to_string(b) +
          "]");
}

std::string to_string(const PairingOp& op) {
  return std::visit(Overloaded{
                        [](const Meet&) { return std::string("meet"); },
                        [](const Join&) { return std::string("join"); },
                        [](const FloorMix& m) { return "floormix:" + to_string(m.lambda); },
                        [](const CeilMix& m) { return "ceilmix:" + to_string(m.lambda); },
                        [](const OrderMin& o) { return "ordermin:" + to_string(o.order); },
                        [](const OrderMax& o) { return "ordermax:" + to_string(o.order); },
                        [](const ParityMix&) { return std::string("paritymix"); },
                        [](const PerFactor& p) {
                          std::string out = "perfactor:[";
                          for (std::size_t i = 0; i < p.dims.size(); ++i) {
                            if (i) out += "|";
                            out += std::to_string(p.dims[i]) + ":" + to_string(p.ops[i]);
                          }
                          return out + "]";
                        },
                    },
                    op.kind);
}

PairingOp parse_pairing_op(std::string_view text) {
  try {
    if (text == "meet") return PairingOp::meet();
    if (text == "join") return PairingOp::join();
    if (text == "paritymix") return PairingOp::parity_mix();
    if (text.starts_with("floormix:")) return PairingOp::floor_mix(parse_rational(text.substr(9)));
    if (text.starts_with("ceilmix:")) return PairingOp::ceil_mix(parse_rational(text.substr(8)));
    if (text.starts_with("ordermin:")) return PairingOp::order_min(parse_ordering(text.substr(9)));
    if (text.starts_with("ordermax:")) return PairingOp::order_max(parse_ordering(text.substr(9)));
    if (text.starts_with("perfactor:[") && text.ends_with("]")) {
      const auto body = text.substr(11, text.size() - 12);
      std::vector<std::size_t> dims;
      std::vector<PairingOp> ops;
      for (auto item : split_top_level(body, '|')) {
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) {
          throw ParseError("perfactor item \"" + std::string(item) + "\" must be <dim>:<op>");
        }
        const Integer l = parse_integer(item.substr(0, colon));
        if (l < 1 || l > 64) {
          throw ParseError("perfactor factor dimension out of range in \"" + std::string(item) + "\"");
        }
        dims.push_back(static_cast<std::size_t>(l.convert_to<long>()));
        ops.push_back(parse_pairing_op(item.substr(colon + 1)));
      }
      return PairingOp::per_factor(std::move(dims), std::move(ops));
    }
  } catch (const InvalidArgument& e) {
    throw ParseError("operation \"" + std::string(text) + "\": " + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError("operation \"" + std::string(text) + "\": " + e.what());
  }
  throw ParseError("unknown operation \"" + std::string(text) + "\"");
}

}  // namespace dbm
