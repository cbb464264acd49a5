#include "dbm/io.hpp"

#include <fstream>
#include <limits>
#include <set>

#include "dbm/errors.hpp"

namespace dbm {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError(field + ": " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(field.empty() ? key : field + "." + key, "missing field");
  return *it;
}

std::string sub(const std::string& field, const std::string& key) {
  return field.empty() ? key : field + "." + key;
}

std::string at(const std::string& field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

std::size_t dimension_from_json(const Json& j, const std::string& field) {
  const Integer n = integer_from_json(j, field);
  if (n < 1 || n > 64) fail(field, "dimension must be between 1 and 64");
  return static_cast<std::size_t>(n.convert_to<long>());
}

Json values_to_json(const NodeValues& v) {
  return {{"f_x", to_json(v.f_x)}, {"f_y", to_json(v.f_y)}, {"h_xy", to_json(v.h_xy)},
          {"h_yx", to_json(v.h_yx)}};
}

NodeValues values_from_json(const Json& j, const std::string& field) {
  NodeValues v;
  v.f_x = rational_from_json(member(j, "f_x", field), sub(field, "f_x"));
  v.f_y = rational_from_json(member(j, "f_y", field), sub(field, "f_y"));
  v.h_xy = rational_from_json(member(j, "h_xy", field), sub(field, "h_xy"));
  v.h_yx = rational_from_json(member(j, "h_yx", field), sub(field, "h_yx"));
  return v;
}

bool bool_from_json(const Json& j, const std::string& field) {
  if (!j.is_boolean()) fail(field, "expected true or false");
  return j.get<bool>();
}

PairDiagnostic diagnostic_from_json(const Json& j, const std::string& field, std::size_t dim) {
  PairDiagnostic d;
  d.x = point_from_json(member(j, "x", field), sub(field, "x"), dim);
  d.y = point_from_json(member(j, "y", field), sub(field, "y"), dim);
  d.cross_xy = point_from_json(member(j, "cross_xy", field), sub(field, "cross_xy"), dim);
  d.cross_yx = point_from_json(member(j, "cross_yx", field), sub(field, "cross_yx"), dim);
  d.image_without_x =
      points_from_json(member(j, "image_without_x", field), sub(field, "image_without_x"), dim);
  d.image_without_y =
      points_from_json(member(j, "image_without_y", field), sub(field, "image_without_y"), dim);
  d.image_without_both =
      points_from_json(member(j, "image_without_both", field), sub(field, "image_without_both"), dim);
  d.escapes_without_x =
      bool_from_json(member(j, "escapes_without_x", field), sub(field, "escapes_without_x"));
  d.escapes_without_y =
      bool_from_json(member(j, "escapes_without_y", field), sub(field, "escapes_without_y"));
  d.disjoint_without_both =
      bool_from_json(member(j, "disjoint_without_both", field), sub(field, "disjoint_without_both"));
  return d;
}

Json node_to_json(const CertificateNode& n) {
  Json j;
  j["set"] = to_json(n.set);
  j["z"] = to_json(n.z);
  j["case"] = to_string(n.tag);
  j["pair"] = n.pair ? Json::array({to_json(n.pair->first), to_json(n.pair->second)}) : Json(nullptr);
  j["values"] = values_to_json(n.values);
  j["exclusivity"] = n.exclusivity ? to_json(*n.exclusivity) : Json(nullptr);
  j["image"] = to_json(n.image);
  j["sum_f"] = to_json(n.sum_f);
  j["sum_h"] = to_json(n.sum_h);
  return j;
}

CertificateNode node_from_json(const Json& j, const std::string& field, std::size_t dim) {
  CertificateNode n;
  n.set = points_from_json(member(j, "set", field), sub(field, "set"), dim);
  n.z = point_from_json(member(j, "z", field), sub(field, "z"), dim);
  const Json& tag = member(j, "case", field);
  if (!tag.is_string()) fail(sub(field, "case"), "expected a case name");
  try {
    n.tag = parse_case_tag(tag.get<std::string>());
  } catch (const ParseError& e) {
    fail(sub(field, "case"), e.what());
  }
  const Json& pair = member(j, "pair", field);
  if (!pair.is_null()) {
    if (!pair.is_array() || pair.size() != 2) fail(sub(field, "pair"), "expected two points or null");
    n.pair = std::make_pair(point_from_json(pair[0], at(sub(field, "pair"), 0), dim),
                            point_from_json(pair[1], at(sub(field, "pair"), 1), dim));
  }
  n.values = values_from_json(member(j, "values", field), sub(field, "values"));
  if (const auto it = j.find("exclusivity"); it != j.end() && !it->is_null()) {
    n.exclusivity = diagnostic_from_json(*it, sub(field, "exclusivity"), dim);
  }
  n.image = points_from_json(member(j, "image", field), sub(field, "image"), dim);
  n.sum_f = rational_from_json(member(j, "sum_f", field), sub(field, "sum_f"));
  n.sum_h = rational_from_json(member(j, "sum_h", field), sub(field, "sum_h"));
  return n;
}

Json point_set_json(const std::set<Point>& s) {
  Json out = Json::array();
  for (const auto& p : s) out.push_back(to_json(p));
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(path.string() + ": cannot open file for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw Error(path.string() + ": write failed");
}

Json to_json(const Integer& z) {
  if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max()) {
    return z.convert_to<long long>();
  }
  return to_string(z);
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p.coords()) out.push_back(to_json(c));
  return out;
}

Json to_json(const RationalPoint& p) {
  Json out = Json::array();
  for (const auto& c : p.coords()) out.push_back(to_string(c));
  return out;
}

Json to_json(const std::vector<Point>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(to_json(p));
  return out;
}

Integer integer_from_json(const Json& j, const std::string& field) {
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(field, e.what());
    }
  }
  fail(field, "expected an integer");
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, field));
  if (j.is_number_float()) fail(field, "floating-point numerals are not accepted; use \"p/q\"");
  if (!j.is_string()) fail(field, "expected a rational \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(field, e.what());
  }
}

Point point_from_json(const Json& j, const std::string& field, std::size_t dim) {
  if (!j.is_array()) fail(field, "expected an array of integers");
  if (j.size() != dim) {
    fail(field, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
  }
  std::vector<Integer> coords;
  for (std::size_t i = 0; i < j.size(); ++i) coords.push_back(integer_from_json(j[i], at(field, i)));
  return Point(std::move(coords));
}

std::vector<Point> points_from_json(const Json& j, const std::string& field, std::size_t dim) {
  if (!j.is_array()) fail(field, "expected an array of points");
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point_from_json(j[i], at(field, i), dim));
  return out;
}

Json to_json(const SparseFn& f) {
  Json entries = Json::array();
  for (const auto& [p, v] : f.entries()) entries.push_back({{"point", to_json(p)}, {"value", to_json(v)}});
  return {{"dimension", f.dim()}, {"entries", entries}};
}

SparseFn sparse_fn_from_json(const Json& j, const std::string& field) {
  const std::size_t dim = dimension_from_json(member(j, "dimension", field), sub(field, "dimension"));
  const Json& entries = member(j, "entries", field);
  const std::string ef = sub(field, "entries");
  if (!entries.is_array()) fail(ef, "expected an array");
  SparseFn f(dim);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string name = at(ef, i);
    const Point p = point_from_json(member(entries[i], "point", name), sub(name, "point"), dim);
    const Rational v = rational_from_json(member(entries[i], "value", name), sub(name, "value"));
    if (v <= 0) fail(sub(name, "value"), "values must be positive, got " + to_string(v));
    if (f(p) != 0) fail(sub(name, "point"), "duplicate point " + to_string(p));
    f.set(p, v);
  }
  return f;
}

Json to_json(const FourTuple& t) {
  return {{"dimension", t.dim()}, {"f", to_json(t.f)}, {"g", to_json(t.g)}, {"h", to_json(t.h)},
          {"k", to_json(t.k)}};
}

FourTuple four_tuple_from_json(const Json& j) {
  const std::size_t dim = dimension_from_json(member(j, "dimension", ""), "dimension");
  auto read = [&](const char* name) {
    Json fn = member(j, name, "");
    if (fn.is_object() && !fn.contains("dimension")) fn["dimension"] = dim;
    SparseFn f = sparse_fn_from_json(fn, name);
    if (f.dim() != dim) fail(std::string(name) + ".dimension", "does not match the tuple dimension");
    return f;
  };
  SparseFn f = read("f");
  SparseFn g = read("g");
  SparseFn h = read("h");
  SparseFn k = read("k");
  return FourTuple(std::move(f), std::move(g), std::move(h), std::move(k));
}

Json point_set_to_json(std::size_t dim, const std::vector<RationalPoint>& points) {
  Json pts = Json::array();
  for (const auto& p : points) pts.push_back(to_json(p));
  return {{"dimension", dim}, {"points", pts}};
}

std::vector<RationalPoint> point_set_from_json(const Json& j) {
  const std::size_t dim = dimension_from_json(member(j, "dimension", ""), "dimension");
  const Json& pts = member(j, "points", "");
  if (!pts.is_array()) fail("points", "expected an array");
  std::vector<RationalPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string name = at("points", i);
    if (!pts[i].is_array() || pts[i].size() != dim) {
      fail(name, "expected " + std::to_string(dim) + " coordinates");
    }
    std::vector<Rational> coords;
    for (std::size_t c = 0; c < dim; ++c) coords.push_back(rational_from_json(pts[i][c], at(name, c)));
    out.emplace_back(std::move(coords));
  }
  return out;
}

std::vector<Point> hypercube_set_from_json(const Json& j) {
  const auto pts = point_set_from_json(j);
  std::vector<Point> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (const auto& c : pts[i].coords()) {
      if (c != 0 && c != 1) fail(at("points", i), "hypercube points need coordinates 0 or 1, got " + to_string(pts[i]));
    }
    out.push_back(pts[i].to_point());
  }
  if (out.empty()) fail("points", "hypercube sets must be nonempty");
  return out;
}

Json to_json(const CertificateFile& file) {
  Json child = nullptr;
  const auto& nodes = file.certificate.nodes;
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
    Json node = node_to_json(*it);
    node["child"] = std::move(child);
    child = std::move(node);
  }
  return {{"op", to_string(file.op)}, {"dimension", file.dim}, {"z", to_json(file.certificate.z)},
          {"fz", to_json(file.fz)}, {"hz", to_json(file.hz)}, {"root", child}};
}

CertificateFile certificate_file_from_json(const Json& j) {
  CertificateFile file;
  const Json& op = member(j, "op", "");
  if (!op.is_string()) fail("op", "expected an operation name");
  try {
    file.op = parse_pairing_op(op.get<std::string>());
  } catch (const ParseError& e) {
    fail("op", e.what());
  }
  file.dim = dimension_from_json(member(j, "dimension", ""), "dimension");
  file.certificate.op_name = to_string(file.op);
  file.certificate.z = point_from_json(member(j, "z", ""), "z", file.dim);
  file.fz = sparse_fn_from_json(member(j, "fz", ""), "fz");
  file.hz = sparse_fn_from_json(member(j, "hz", ""), "hz");
  if (file.fz.dim() != file.dim || file.hz.dim() != file.dim) {
    fail("dimension", "fz and hz must match the certificate dimension");
  }
  const Json* node = &member(j, "root", "");
  std::string field = "root";
  while (!node->is_null()) {
    file.certificate.nodes.push_back(node_from_json(*node, field, file.dim));
    node = &member(*node, "child", field);
    field += ".child";
  }
  if (file.certificate.nodes.empty()) fail("root", "certificate has no nodes");
  return file;
}

Json to_json(const AxiomReport& r) {
  Json witness = Json::array();
  for (const auto& [label, p] : r.witness) witness.push_back({{"label", label}, {"point", to_json(p)}});
  return {{"property", r.property}, {"pass", r.pass}, {"box_radius", r.box_radius},
          {"shift_radius", r.shift_radius}, {"failure", r.failure}, {"witness", witness},
          {"detail", r.detail}};
}

Json to_json(const PairDiagnostic& d) {
  return {{"x", to_json(d.x)},
          {"y", to_json(d.y)},
          {"cross_xy", to_json(d.cross_xy)},
          {"cross_yx", to_json(d.cross_yx)},
          {"image_without_x", to_json(d.image_without_x)},
          {"image_without_y", to_json(d.image_without_y)},
          {"image_without_both", to_json(d.image_without_both)},
          {"escapes_without_x", d.escapes_without_x},
          {"escapes_without_y", d.escapes_without_y},
          {"disjoint_without_both", d.disjoint_without_both}};
}

Json to_json(const ExclusivityReport& r) {
  Json diags = Json::array();
  for (const auto& d : r.diagnostics) diags.push_back(to_json(d));
  return {{"verdict", r.verdict == ExclusivityVerdict::Violation ? "Violation" : "ExclusiveOnInstance"},
          {"set", to_json(r.set)},
          {"z", to_json(r.z)},
          {"witness", r.witness ? Json::array({to_json(r.witness->first), to_json(r.witness->second)})
                                : Json(nullptr)},
          {"diagnostics", diags}};
}

Json to_json(const ExclusivitySearchResult& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back({{"set", to_json(v.set)}, {"z", to_json(v.z)}});
  return {{"pass", r.pass},
          {"box_radius", r.box_radius},
          {"max_set_size", r.max_set_size},
          {"z_radius", r.z_radius},
          {"instances_checked", r.instances_checked},
          {"first", r.first ? to_json(*r.first) : Json(nullptr)},
          {"violations", violations}};
}

Json to_json(const P2PrimeReport& r) {
  auto slice_json = [](const SliceViolation& v) {
    return Json{{"factor", v.factor}, {"a", to_json(v.a)}, {"b", to_json(v.b)},
                {"set", to_json(v.instance.set)}, {"z", to_json(v.instance.z)}};
  };
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(slice_json(v));
  return {{"pass", r.pass},
          {"box_radius", r.box_radius},
          {"max_set_size", r.max_set_size},
          {"z_radius", r.z_radius},
          {"dependence", to_json(r.dependence)},
          {"slices_checked", r.slices_checked},
          {"first", r.first ? slice_json(*r.first) : Json(nullptr)},
          {"first_report", r.first_report ? to_json(*r.first_report) : Json(nullptr)},
          {"violations", violations}};
}

Json to_json(const HypothesisViolation& v) {
  return {{"x", to_json(v.x)},     {"y", to_json(v.y)},     {"t", to_json(v.t)},
          {"complement", to_json(v.complement)}, {"lhs", to_json(v.lhs)}, {"rhs", to_json(v.rhs)}};
}

Json to_json(const ConclusionReport& r) {
  return {{"sum_f", to_json(r.sum_f)}, {"sum_g", to_json(r.sum_g)}, {"sum_h", to_json(r.sum_h)},
          {"sum_k", to_json(r.sum_k)}, {"lhs", to_json(r.lhs)},     {"rhs", to_json(r.rhs)},
          {"holds", r.holds}};
}

Json to_json(const TheoremVerdict& v) {
  Json violations = Json::array();
  for (const auto& h : v.hypothesis_violations) violations.push_back(to_json(h));
  return {{"p1", to_json(v.p1)},
          {"p2", v.p2 ? to_json(*v.p2) : Json(nullptr)},
          {"p2prime", v.p2prime ? to_json(*v.p2prime) : Json(nullptr)},
          {"axioms_pass", v.axioms_pass()},
          {"hypothesis_pass", v.hypothesis_pass()},
          {"hypothesis_violations", violations},
          {"conclusion", to_json(v.conclusion)},
          {"contradiction", v.contradiction()},
          {"pass", v.pass()}};
}

Json to_json(const ValidationResult& v) {
  return {{"valid", v.valid},
          {"failing_node", v.failing_node ? Json(*v.failing_node) : Json(nullptr)},
          {"reason", v.reason}};
}

Json to_json(const MidpointReport& r) {
  const std::size_t ab = r.size_a * r.size_b;
  return {{"M", point_set_json(r.midpoints)},
          {"M1_lower", point_set_json(r.parity.lower)},
          {"M1_upper", point_set_json(r.parity.upper)},
          {"M1", point_set_json(r.parity.both)},
          {"size_A", r.size_a},
          {"size_B", r.size_b},
          {"size_M", r.midpoints.size()},
          {"size_M1", r.parity.both.size()},
          {"AB", ab},
          {"M1_lower_times_upper", r.parity.lower.size() * r.parity.upper.size()},
          {"M1_squared", r.parity.both.size() * r.parity.both.size()},
          {"M_squared", r.midpoints.size() * r.midpoints.size()},
          {"M1_inside_M", r.parity_inside_midpoints},
          {"product_bound", r.product_bound},
          {"square_bound", r.square_bound},
          {"midpoint_bound", r.midpoint_bound},
          {"holds", r.holds()}};
}

Json to_json(const HypercubeSweepReport& r) {
  Json first = nullptr;
  if (r.first_failure) first = {{"A_mask", r.first_failure->first}, {"B_mask", r.first_failure->second}};
  return {{"dimension", r.dim}, {"pairs_checked", r.pairs_checked}, {"failures", r.failures},
          {"first_failure", first}, {"pass", r.pass()}};
}

Json to_json(const LatticeChainReport& r) {
  Json s = Json::array();
  for (const auto& p : r.midpoint_set) s.push_back(to_json(p));
  return {{"S", s},
          {"G_K", to_json(r.count_k)},
          {"G_L", to_json(r.count_l)},
          {"G_upper", to_json(r.count_upper)},
          {"G_lower", to_json(r.count_lower)},
          {"G_open", to_json(r.count_open)},
          {"G_K_times_G_L", to_json(Integer(r.count_k * r.count_l))},
          {"G_upper_times_G_lower", to_json(Integer(r.count_upper * r.count_lower))},
          {"G_open_squared", to_json(Integer(r.count_open * r.count_open))},
          {"first_link", r.first_link},
          {"second_link", r.second_link},
          {"hypothesis_holds", r.hypothesis_holds},
          {"holds", r.holds()}};
}

}  // namespace dbm
