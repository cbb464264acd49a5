#include "dbm/axioms.hpp"

#include <algorithm>

#include "dbm/errors.hpp"

namespace dbm {

namespace {

void sort_unique(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

bool contains(const std::vector<Point>& sorted, const Point& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

// T(u, z - v) for all u, v in set, indexed [u * m + v].
std::vector<Point> cross_table(const BinaryOp& op, const std::vector<Point>& set, const Point& z) {
  const std::size_t m = set.size();
  std::vector<Point> complements;
  complements.reserve(m);
  for (const auto& v : set) complements.push_back(z - v);
  std::vector<Point> table;
  table.reserve(m * m);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) table.push_back(op(set[u], complements[v]));
  }
  return table;
}

std::vector<Point> image_excluding(const std::vector<Point>& table, std::size_t m, std::size_t skip1,
                                   std::size_t skip2) {
  std::vector<Point> out;
  for (std::size_t u = 0; u < m; ++u) {
    if (u == skip1 || u == skip2) continue;
    for (std::size_t v = 0; v < m; ++v) {
      if (v == skip1 || v == skip2) continue;
      out.push_back(table[u * m + v]);
    }
  }
  sort_unique(out);
  return out;
}

void fill_conditions(PairDiagnostic& d) {
  d.escapes_without_x = !(contains(d.image_without_x, d.cross_xy) &&
                          contains(d.image_without_x, d.cross_yx));
  d.escapes_without_y = !(contains(d.image_without_y, d.cross_xy) &&
                          contains(d.image_without_y, d.cross_yx));
  d.disjoint_without_both = !contains(d.image_without_both, d.cross_xy) &&
                            !contains(d.image_without_both, d.cross_yx);
}

// Calls fn(indices) for each size-k combination of {0..m-1} in lexicographic
// order; stops early when fn returns false. Returns false if stopped.
template <class Fn>
bool for_each_combination(std::size_t m, std::size_t k, Fn&& fn) {
  if (k > m) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

AxiomReport fail(AxiomReport report, std::string failure,
                 std::vector<std::pair<std::string, Point>> witness, std::string detail) {
  report.pass = false;
  report.failure = std::move(failure);
  report.witness = std::move(witness);
  report.detail = std::move(detail);
  return report;
}

// Zeroes every coordinate from `keep` on.
Point truncate(const Point& p, std::size_t keep) {
  return p.slice(0, keep).concat(Point::zero(p.dim() - keep));
}

}  // namespace

AxiomReport check_P1(const BinaryOp& op, long long box_radius, long long shift_radius) {
  AxiomReport report;
  report.property = "P1";
  report.box_radius = box_radius;
  report.shift_radius = shift_radius;
  const auto pts = box_points(op.dim(), box_radius);
  const auto shifts = box_points(op.dim(), shift_radius);
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      const Point base = op(x, y);
      for (const auto& z : shifts) {
        const Point moved = op(x + z, y + z);
        if (moved != base + z) {
          return fail(report, "translation", {{"x", x}, {"y", y}, {"z", z}},
                      "T(x+z,y+z) = " + to_string(moved) + " but T(x,y)+z = " +
                          to_string(base + z));
        }
      }
    }
  }
  return report;
}

AxiomReport check_P1(const PairingOp& op, std::size_t dim, long long box_radius,
                     long long shift_radius) {
  return check_P1(as_binary_op(op, dim), box_radius, shift_radius);
}

AxiomReport check_factor_dependence(const PairingOp& op, const Decomposition& d,
                                    long long box_radius) {
  validate(op, d.total_dim());
  AxiomReport report;
  report.property = "P2(i)";
  report.box_radius = box_radius;
  if (d.size() == 1) return report;
  const auto pts = box_points(d.total_dim(), box_radius);
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    const std::size_t keep = d.offset(i + 1);
    for (const auto& x : pts) {
      const Point tx = truncate(x, keep);
      for (const auto& y : pts) {
        const Point ty = truncate(y, keep);
        const Point full = project(apply(op, x, y), d, i);
        const Point cut = project(apply(op, tx, ty), d, i);
        if (full != cut) {
          report.box_radius = box_radius;
          return fail(report, "dependence", {{"x", x}, {"y", y}},
                      "factor " + std::to_string(i) + " reads later coordinates: " +
                          to_string(full) + " vs " + to_string(cut) + " with them zeroed");
        }
      }
    }
  }
  return report;
}

bool violates_monotonicity(const BinaryOp& slice_op, const Comparator& order, const Point& x1,
                           const Point& x2, const Point& y1, const Point& y2) {
  if (order(x1, x2) > 0 || order(y1, y2) > 0) return false;
  return order(slice_op(x1, y1), slice_op(x2, y2)) > 0;
}

AxiomReport check_P2(const PairingOp& op, const Decomposition& d, long long box_radius) {
  AxiomReport report = check_factor_dependence(op, d, box_radius);
  report.property = "P2";
  if (!report.pass) return report;
  if (std::holds_alternative<ParityMix>(op.kind) && !d.is_standard()) {
    throw InvalidArgument("paritymix is only defined with the standard decomposition");
  }

  for (std::size_t i = 0; i < d.size(); ++i) {
    const Factor& factor = d.factor(i);
    const Comparator order = make_comparator(factor.order);
    const auto prefixes = box_points(d.offset(i), box_radius);
    const auto pts = box_points(factor.dim, box_radius);
    const std::size_t m = pts.size();

    // ordered pairs (p, q) with pts[p] <= pts[q]
    std::vector<std::pair<std::size_t, std::size_t>> chains;
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = 0; q < m; ++q) {
        if (order(pts[p], pts[q]) <= 0) chains.emplace_back(p, q);
      }
    }
    for (const auto& a : prefixes) {
      for (const auto& b : prefixes) {
        const BinaryOp s = slice(op, d, i, a, b);
        std::vector<Point> values;
        values.reserve(m * m);
        for (const auto& x : pts) {
          for (const auto& y : pts) values.push_back(s(x, y));
        }
        for (const auto& [x1, x2] : chains) {
          for (const auto& [y1, y2] : chains) {
            const Point& lo = values[x1 * m + y1];
            const Point& hi = values[x2 * m + y2];
            if (order(lo, hi) > 0) {
              return fail(report, "monotonicity",
                          {{"a", a},
                           {"b", b},
                           {"x1", pts[x1]},
                           {"x2", pts[x2]},
                           {"y1", pts[y1]},
                           {"y2", pts[y2]},
                           {"T(x1,y1)", lo},
                           {"T(x2,y2)", hi}},
                          "factor " + std::to_string(i) + ": x1 <= x2 and y1 <= y2 but T(x1,y1) " +
                              to_string(lo) + " > T(x2,y2) " + to_string(hi));
            }
          }
        }
      }
    }
  }
  return report;
}

std::vector<Point> image_set(const BinaryOp& op, std::span<const Point> set, const Point& z) {
  std::vector<Point> out;
  out.reserve(set.size() * set.size());
  for (const auto& u : set) {
    for (const auto& v : set) out.push_back(op(u, z - v));
  }
  sort_unique(out);
  return out;
}

PairDiagnostic examine_pair(const BinaryOp& op, std::span<const Point> set, const Point& z,
                            const Point& x, const Point& y) {
  if (x == y) {
    throw InvalidArgument("exclusivity pair must consist of distinct points");
  }
  const bool has_x = std::find(set.begin(), set.end(), x) != set.end();
  const bool has_y = std::find(set.begin(), set.end(), y) != set.end();
  if (!has_x || !has_y) {
    throw InvalidArgument("exclusivity pair must be drawn from the set");
  }
  std::vector<Point> without_x, without_y, without_both;
  for (const auto& p : set) {
    if (p != x) without_x.push_back(p);
    if (p != y) without_y.push_back(p);
    if (p != x && p != y) without_both.push_back(p);
  }
  PairDiagnostic d;
  d.x = x;
  d.y = y;
  d.cross_xy = op(x, z - y);
  d.cross_yx = op(y, z - x);
  d.image_without_x = image_set(op, without_x, z);
  d.image_without_y = image_set(op, without_y, z);
  d.image_without_both = image_set(op, without_both, z);
  fill_conditions(d);
  return d;
}

ExclusivityReport check_exclusive(const BinaryOp& op, std::vector<Point> set, const Point& z) {
  sort_unique(set);
  if (set.size() < 2) {
    throw InvalidArgument("exclusivity needs a set with at least two distinct points");
  }
  ExclusivityReport report;
  report.set = std::move(set);
  report.z = z;
  const auto& a = report.set;
  const std::size_t m = a.size();
  const auto table = cross_table(op, a, z);
  for (std::size_t ix = 0; ix < m; ++ix) {
    for (std::size_t iy = 0; iy < m; ++iy) {
      if (ix == iy) continue;
      PairDiagnostic d;
      d.x = a[ix];
      d.y = a[iy];
      d.cross_xy = table[ix * m + iy];
      d.cross_yx = table[iy * m + ix];
      d.image_without_x = image_excluding(table, m, ix, ix);
      d.image_without_y = image_excluding(table, m, iy, iy);
      d.image_without_both = image_excluding(table, m, ix, iy);
      fill_conditions(d);
      const bool ok = d.satisfied();
      report.diagnostics.push_back(std::move(d));
      if (ok) {
        report.verdict = ExclusivityVerdict::ExclusiveOnInstance;
        report.witness = std::make_pair(a[ix], a[iy]);
        return report;
      }
    }
  }
  report.verdict = ExclusivityVerdict::Violation;
  return report;
}

ExclusivitySearchResult exclusivity_search(const BinaryOp& op, long long box_radius,
                                           std::size_t max_set_size, long long z_radius,
                                           SearchMode mode) {
  if (max_set_size < 2) {
    throw InvalidArgument("max set size must be at least 2");
  }
  ExclusivitySearchResult result;
  result.box_radius = box_radius;
  result.max_set_size = max_set_size;
  result.z_radius = z_radius;
  const auto pts = box_points(op.dim(), box_radius);
  const auto zs = box_points(op.dim(), z_radius);

  for (std::size_t k = 2; k <= max_set_size; ++k) {
    const bool finished = for_each_combination(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<Point> set;
      set.reserve(idx.size());
      for (auto i : idx) set.push_back(pts[i]);
      for (const auto& z : zs) {
        ++result.instances_checked;
        ExclusivityReport report = check_exclusive(op, set, z);
        if (report.verdict == ExclusivityVerdict::Violation) {
          result.pass = false;
          result.violations.push_back({set, z});
          if (!result.first) result.first = std::move(report);
          if (mode == SearchMode::FirstViolation) return false;
        }
      }
      return true;
    });
    if (!finished) break;
  }
  return result;
}

WitnessResult monotone_witness_pair(const BinaryOp& op, const Comparator& order,
                                    std::vector<Point> set, const Point& z) {
  sort_unique(set);
  if (set.size() < 2) {
    throw InvalidArgument("a witness pair needs a set with at least two distinct points");
  }
  const auto less = [&](const Point& p, const Point& q) { return order(p, q) < 0; };
  std::sort(set.begin(), set.end(), less);
  WitnessResult result;
  result.x = set.front();
  result.y = set.back();
  result.verification = examine_pair(op, set, z, result.x, result.y);
  result.verified = result.verification.satisfied();
  return result;
}

WitnessResult monotone_witness_pair(const BinaryOp& op, const OrderingSpec& order,
                                    std::vector<Point> set, const Point& z) {
  return monotone_witness_pair(op, make_comparator(order), std::move(set), z);
}

P2PrimeReport check_P2prime(const PairingOp& op, const Decomposition& d, long long box_radius,
                            std::size_t max_set_size, std::optional<long long> z_radius,
                            SearchMode mode) {
  P2PrimeReport report;
  report.box_radius = box_radius;
  report.max_set_size = max_set_size;
  report.z_radius = z_radius.value_or(box_radius);
  report.dependence = check_factor_dependence(op, d, box_radius);
  if (!report.dependence.pass) {
    report.pass = false;
    return report;
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto prefixes = box_points(d.offset(i), box_radius);
    for (const auto& a : prefixes) {
      for (const auto& b : prefixes) {
        ++report.slices_checked;
        auto search = exclusivity_search(slice(op, d, i, a, b), box_radius, max_set_size,
                                         report.z_radius, mode);
        if (search.pass) continue;
        report.pass = false;
        for (auto& inst : search.violations) {
          report.violations.push_back(SliceViolation{i, a, b, std::move(inst)});
        }
        if (!report.first) {
          report.first = report.violations.front();
          report.first_report = std::move(search.first);
        }
        if (mode == SearchMode::FirstViolation) return report;
      }
    }
  }
  return report;
}

}  // namespace dbm
