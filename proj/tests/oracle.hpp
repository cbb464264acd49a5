#pragma once

// Independent reference implementations on machine integers. They share no
// code with the library and follow the definitions literally, so they are
// slow but easy to audit.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <vector>

#include "dbm/point.hpp"

namespace oracle {

using V = std::vector<long long>;
using Op = std::function<V(const V&, const V&)>;

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline V meet(const V& x, const V& y) {
  V out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::min(x[i], y[i]);
  return out;
}

inline V join(const V& x, const V& y) {
  V out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::max(x[i], y[i]);
  return out;
}

/// floor((p x + (q - p) y) / q), lambda = p/q.
inline Op floor_mix(long long p, long long q) {
  return [p, q](const V& x, const V& y) {
    V out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = floor_div(p * x[i] + (q - p) * y[i], q);
    return out;
  };
}

inline Op ceil_mix(long long p, long long q) {
  return [p, q](const V& x, const V& y) {
    V out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = -floor_div(-(p * x[i] + (q - p) * y[i]), q);
    return out;
  };
}

inline V parity(const V& x, const V& y) {
  V out(x.size());
  int disagreements = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) ++disagreements;
    out[i] = disagreements % 2 == 1 ? x[i] : y[i];
  }
  return out;
}

inline V sub(const V& a, const V& b) {
  V out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline V add(const V& a, const V& b) {
  V out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

/// {T(u, z - v) : u, v in s}.
inline std::set<V> image(const Op& t, const std::vector<V>& s, const V& z) {
  std::set<V> out;
  for (const auto& u : s) {
    for (const auto& v : s) out.insert(t(u, sub(z, v)));
  }
  return out;
}

inline std::vector<V> without(const std::vector<V>& s, const V& a, const V& b) {
  std::vector<V> out;
  for (const auto& p : s) {
    if (p != a && p != b) out.push_back(p);
  }
  return out;
}

/// Conditions (a) for both one-point removals and (b), literally.
inline bool pair_ok(const Op& t, const std::vector<V>& a, const V& z, const V& x, const V& y) {
  const V cxy = t(x, sub(z, y));
  const V cyx = t(y, sub(z, x));
  const auto i1 = image(t, without(a, x, x), z);
  const auto i2 = image(t, without(a, y, y), z);
  const auto i3 = image(t, without(a, x, y), z);
  const bool a1 = !(i1.count(cxy) && i1.count(cyx));
  const bool a2 = !(i2.count(cxy) && i2.count(cyx));
  const bool b = !i3.count(cxy) && !i3.count(cyx);
  return a1 && a2 && b;
}

inline bool exclusive(const Op& t, const std::vector<V>& a, const V& z) {
  for (const auto& x : a) {
    for (const auto& y : a) {
      if (x != y && pair_ok(t, a, z, x, y)) return true;
    }
  }
  return false;
}

/// Midpoint rule over all coordinates.
inline bool midpoint(const V& m, const V& a, const V& b) {
  long long ca = 0, cb = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (a[i] == b[i] && m[i] != a[i]) return false;
    ca += m[i] == a[i];
    cb += m[i] == b[i];
  }
  return std::llabs(ca - cb) <= 1;
}

inline V to_v(const dbm::Point& p) {
  V out;
  for (const auto& c : p.coords()) out.push_back(c.convert_to<long long>());
  return out;
}

inline dbm::Point to_point(const V& v) {
  std::vector<dbm::Integer> c(v.begin(), v.end());
  return dbm::Point(std::move(c));
}

inline std::vector<V> box(std::size_t dim, long long r) {
  std::vector<V> out{V{}};
  for (std::size_t d = 0; d < dim; ++d) {
    std::vector<V> next;
    for (const auto& p : out) {
      for (long long c = -r; c <= r; ++c) {
        V q = p;
        q.push_back(c);
        next.push_back(q);
      }
    }
    out = next;
  }
  return out;
}

}  // namespace oracle
