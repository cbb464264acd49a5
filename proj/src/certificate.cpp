#include "dbm/certificate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dbm {

namespace {

void sort_unique(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

std::vector<Point> without(const std::vector<Point>& set, const Point& a, const Point& b) {
  std::vector<Point> out;
  for (const auto& p : set) {
    if (p != a && p != b) out.push_back(p);
  }
  return out;
}

Rational sum_over(const SparseFn& fn, const std::vector<Point>& pts) {
  Rational s = 0;
  for (const auto& p : pts) s += fn(p);
  return s;
}

bool contains(const std::vector<Point>& sorted, const Point& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

bool same_diagnostic(const PairDiagnostic& a, const PairDiagnostic& b) {
  return a.x == b.x && a.y == b.y && a.cross_xy == b.cross_xy && a.cross_yx == b.cross_yx &&
         a.image_without_x == b.image_without_x && a.image_without_y == b.image_without_y &&
         a.image_without_both == b.image_without_both &&
         a.escapes_without_x == b.escapes_without_x &&
         a.escapes_without_y == b.escapes_without_y &&
         a.disjoint_without_both == b.disjoint_without_both;
}

}  // namespace

FactResult fact_max_sum(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  if (a < 0 || b < 0 || c < 0 || d < 0) {
    throw InvalidArgument("fact_max_sum needs nonnegative inputs");
  }
  FactResult r;
  r.product_ok = a * b <= c * d;
  r.max_ok = std::max(a, b) <= std::max(c, d);
  r.applicable = r.product_ok && r.max_ok;
  r.sum_holds = a + b <= c + d;
  if (r.applicable && !r.sum_holds) {
    throw std::logic_error("fact_max_sum: preconditions hold but a + b > c + d for (" +
                           to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ", " +
                           to_string(d) + ")");
  }
  return r;
}

NotExclusive::NotExclusive(ExclusivityReport report)
    : CertificationError("no exclusive pair for a set of " + std::to_string(report.set.size()) +
                         " points at z = " + to_string(report.z)),
      report_(std::move(report)) {}

ChainedInequalityFailure::ChainedInequalityFailure(Point x, Point y, Rational lhs, Rational rhs)
    : CertificationError("chained inequality fails at (" + to_string(x) + ", " + to_string(y) +
                         "): " + to_string(lhs) + " > " + to_string(rhs)),
      x_(std::move(x)),
      y_(std::move(y)),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Base0: return "Base0";
    case CaseTag::Base1: return "Base1";
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2: return "Case2";
  }
  return "?";
}

CaseTag parse_case_tag(std::string_view name) {
  if (name == "Base0") return CaseTag::Base0;
  if (name == "Base1") return CaseTag::Base1;
  if (name == "Case1") return CaseTag::Case1;
  if (name == "Case2") return CaseTag::Case2;
  throw ParseError("unknown case tag \"" + std::string(name) + "\"");
}

Certificate certify_sum_inequality(const BinaryOp& op, const Point& z, std::vector<Point> set,
                                   const SparseFn& Fz, const SparseFn& Hz) {
  sort_unique(set);
  Certificate cert;
  cert.op_name = op.name();
  cert.z = z;

  std::vector<Point> current = std::move(set);
  while (true) {
    CertificateNode node;
    node.set = current;
    node.z = z;
    node.image = image_set(op, current, z);
    node.sum_f = sum_over(Fz, current);
    node.sum_h = sum_over(Hz, node.image);

    if (current.empty()) {
      node.tag = CaseTag::Base0;
      cert.nodes.push_back(std::move(node));
      break;
    }
    if (current.size() == 1) {
      const Point& j = current.front();
      node.tag = CaseTag::Base1;
      node.values.f_x = Fz(j);
      node.values.h_xy = Hz(op(j, z - j));
      if (node.values.f_x > node.values.h_xy) {
        throw ChainedInequalityFailure(j, j, node.values.f_x, node.values.h_xy);
      }
      cert.nodes.push_back(std::move(node));
      break;
    }

    ExclusivityReport report = check_exclusive(op, current, z);
    if (!report.witness) throw NotExclusive(std::move(report));
    auto [x, y] = *report.witness;
    if (Fz(x) > Fz(y)) std::swap(x, y);

    NodeValues& v = node.values;
    v.f_x = Fz(x);
    v.f_y = Fz(y);
    const Point t_xy = op(x, z - y);
    const Point t_yx = op(y, z - x);
    v.h_xy = Hz(t_xy);
    v.h_yx = Hz(t_yx);
    if (v.f_x * v.f_y > v.h_xy * v.h_yx) {
      throw ChainedInequalityFailure(x, y, v.f_x * v.f_y, v.h_xy * v.h_yx);
    }
    node.pair = std::make_pair(x, y);
    node.exclusivity = examine_pair(op, current, z, x, y);

    const Rational hmax = std::max(v.h_xy, v.h_yx);
    if (v.f_y > hmax) {
      node.tag = CaseTag::Case1;
      current = without(current, x, x);
    } else {
      node.tag = CaseTag::Case2;
      fact_max_sum(v.f_x, v.f_y, v.h_xy, v.h_yx);
      if (t_xy == t_yx) {
        throw CertificationError("T(x,z-y) == T(y,z-x) at x = " + to_string(x) + ", y = " +
                                 to_string(y) + "; the operation is not translation equivariant");
      }
      current = without(current, x, y);
    }
    cert.nodes.push_back(std::move(node));
  }
  return cert;
}

ValidationResult validate_certificate(const Certificate& cert, const BinaryOp& op,
                                      const SparseFn& Fz, const SparseFn& Hz) {
  ValidationResult result;
  auto reject = [&](std::size_t i, std::string reason) {
    result.valid = false;
    result.failing_node = i;
    result.reason = std::move(reason);
    return result;
  };
  if (cert.nodes.empty()) {
    result.valid = false;
    result.reason = "certificate has no nodes";
    return result;
  }

  std::optional<std::vector<Point>> expected_set;
  for (std::size_t i = 0; i < cert.nodes.size(); ++i) {
    const CertificateNode& n = cert.nodes[i];
    const bool last = i + 1 == cert.nodes.size();
    if (n.z != cert.z) return reject(i, "node z differs from certificate z");
    if (!std::is_sorted(n.set.begin(), n.set.end()) ||
        std::adjacent_find(n.set.begin(), n.set.end()) != n.set.end()) {
      return reject(i, "set is not sorted and duplicate-free");
    }
    if (expected_set && n.set != *expected_set) {
      return reject(i, "set does not match the parent's recursion set");
    }

    const std::size_t size = n.set.size();
    const bool base = n.tag == CaseTag::Base0 || n.tag == CaseTag::Base1;
    if ((n.tag == CaseTag::Base0) != (size == 0) || (n.tag == CaseTag::Base1) != (size == 1)) {
      return reject(i, std::string("case ") + to_string(n.tag) + " does not fit a set of size " +
                           std::to_string(size));
    }
    if (base != last) return reject(i, "base cases must end the certificate");

    const auto image = image_set(op, n.set, cert.z);
    if (n.image != image) return reject(i, "stored T(A, z-A) differs from recomputation");
    if (n.sum_f != sum_over(Fz, n.set)) return reject(i, "stored F sum is wrong");
    if (n.sum_h != sum_over(Hz, image)) return reject(i, "stored H sum is wrong");
    if (n.sum_f > n.sum_h) return reject(i, "sum inequality fails");

    const NodeValues& v = n.values;
    if (n.tag == CaseTag::Base0) {
      if (n.pair || n.exclusivity || v != NodeValues{}) {
        return reject(i, "empty base case must carry no pair and zero values");
      }
      continue;
    }
    if (n.tag == CaseTag::Base1) {
      const Point& j = n.set.front();
      if (n.pair || n.exclusivity || v.f_y != 0 || v.h_yx != 0) {
        return reject(i, "single-point base case carries extra data");
      }
      if (v.f_x != Fz(j)) return reject(i, "stored F_z(j) is wrong");
      if (v.h_xy != Hz(op(j, cert.z - j))) return reject(i, "stored H_z(T(j,z-j)) is wrong");
      if (v.f_x > v.h_xy) return reject(i, "pointwise bound F_z(j) <= H_z(T(j,z-j)) fails");
      continue;
    }

    if (!n.pair || !n.exclusivity) return reject(i, "case node without a pair");
    const auto& [x, y] = *n.pair;
    if (x == y || !contains(n.set, x) || !contains(n.set, y)) {
      return reject(i, "pair is not two distinct points of the set");
    }
    const PairDiagnostic diag = examine_pair(op, n.set, cert.z, x, y);
    if (!same_diagnostic(diag, *n.exclusivity)) {
      return reject(i, "stored exclusivity diagnostics differ from recomputation");
    }
    if (!diag.satisfied()) return reject(i, "pair does not satisfy the exclusivity conditions");
    if (v.f_x != Fz(x) || v.f_y != Fz(y)) return reject(i, "stored F values are wrong");
    if (v.h_xy != Hz(diag.cross_xy) || v.h_yx != Hz(diag.cross_yx)) {
      return reject(i, "stored H values are wrong");
    }
    if (v.f_x > v.f_y) return reject(i, "pair is not oriented with F_z(x) <= F_z(y)");
    if (v.f_x * v.f_y > v.h_xy * v.h_yx) return reject(i, "chained product inequality fails");

    const Rational hmax = std::max(v.h_xy, v.h_yx);
    const Rational hmin = std::min(v.h_xy, v.h_yx);
    if (n.tag == CaseTag::Case1) {
      if (v.f_y < hmax) return reject(i, "Case1 needs F_z(y) >= max of the H values");
      if (v.f_x > hmin) return reject(i, "Case1 needs F_z(x) <= min of the H values");
      expected_set = without(n.set, x, x);
    } else {
      if (v.f_y > hmax) return reject(i, "Case2 needs F_z(y) <= max of the H values");
      const FactResult fact = fact_max_sum(v.f_x, v.f_y, v.h_xy, v.h_yx);
      if (!fact.applicable) return reject(i, "max/sum fact does not apply");
      if (diag.cross_xy == diag.cross_yx) return reject(i, "Case2 needs T(x,z-y) != T(y,z-x)");
      expected_set = without(n.set, x, y);
    }

    // The child's image sits inside this node's image and misses the cross
    // values the case relies on.
    const auto child_image = image_set(op, *expected_set, cert.z);
    if (!std::includes(image.begin(), image.end(), child_image.begin(), child_image.end())) {
      return reject(i, "child image is not contained in the node image");
    }
    if (!contains(image, diag.cross_xy) || !contains(image, diag.cross_yx)) {
      return reject(i, "cross values are missing from T(A, z-A)");
    }
    const bool xy_fresh = !contains(child_image, diag.cross_xy);
    const bool yx_fresh = !contains(child_image, diag.cross_yx);
    if (n.tag == CaseTag::Case1 && !xy_fresh && !yx_fresh) {
      return reject(i, "Case1 needs a cross value outside T(A1, z-A1)");
    }
    if (n.tag == CaseTag::Case2 && !(xy_fresh && yx_fresh)) {
      return reject(i, "Case2 needs both cross values outside T(A3, z-A3)");
    }
  }
  return result;
}

AggregateReport sum_inequality_to_conclusion(const FourTuple& t, const PairingOp& op) {
  AggregateReport report;
  report.conclusion = check_conclusion(t);
  const BinaryOp bop = as_binary_op(op, t.dim());

  std::set<Point> zs;
  for (const auto& [x, fx] : t.f.entries()) {
    for (const auto& [y, gy] : t.g.entries()) zs.insert(x + y);
  }
  for (const auto& z : zs) {
    const SparseFn Fz = fz(t.f, t.g, z);
    const SparseFn Hz = fz(t.h, t.k, z);
    Certificate cert = certify_sum_inequality(bop, z, Fz.support(), Fz, Hz);
    ValidationResult valid = validate_certificate(cert, bop, Fz, Hz);
    report.all_valid = report.all_valid && valid.valid;
    report.lhs_total += cert.root().sum_f;
    report.rhs_certified += cert.root().sum_h;
    report.certificates.push_back(std::move(cert));
    report.validations.push_back(std::move(valid));
  }
  report.rhs_full = report.conclusion.rhs;
  report.lhs_matches_product = report.lhs_total == report.conclusion.lhs;
  report.holds = report.lhs_total <= report.rhs_certified && report.rhs_certified <= report.rhs_full;
  report.agrees = report.holds == report.conclusion.holds;
  return report;
}

}  // namespace dbm
