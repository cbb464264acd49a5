#include "dbm/random.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "dbm/errors.hpp"

namespace dbm {

long long Rng::uniform(long long lo, long long hi) {
  if (lo > hi) {
    throw InvalidArgument("empty range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<long long>(next());
  const std::uint64_t range = span + 1;
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return static_cast<long long>(static_cast<std::uint64_t>(lo) + v % range);
}

Point random_point(Rng& rng, std::size_t dim, long long radius) {
  Point p = Point::zero(dim);
  for (std::size_t i = 0; i < dim; ++i) p[i] = rng.uniform(-radius, radius);
  return p;
}

std::vector<Point> random_subset(Rng& rng, std::size_t dim, long long radius, std::size_t count) {
  if (radius < 0) throw InvalidArgument("radius must be >= 0");
  const long long side = 2 * radius + 1;
  long double cells = 1;
  for (std::size_t i = 0; i < dim; ++i) cells *= side;
  if (static_cast<long double>(count) > cells) {
    throw InvalidArgument("cannot draw " + std::to_string(count) + " distinct points from a box of " +
                          std::to_string(static_cast<long long>(cells)));
  }
  std::set<Point> out;
  while (out.size() < count) out.insert(random_point(rng, dim, radius));
  return {out.begin(), out.end()};
}

Rational random_rational(Rng& rng, long long max_num, long long max_den) {
  const long long p = rng.uniform(0, max_num);
  const long long q = rng.uniform(1, max_den);
  return Rational(p, q);
}

Rational random_square(Rng& rng) {
  const long long p = rng.uniform(1, 9);
  const long long q = rng.uniform(1, 9);
  const Rational r(p, q);
  return r * r;
}

SparseFn random_sparse_fn(Rng& rng, std::size_t dim, long long radius, std::size_t min_support,
                          std::size_t max_support) {
  if (min_support > max_support) throw InvalidArgument("min_support exceeds max_support");
  const auto size = static_cast<std::size_t>(
      rng.uniform(static_cast<long long>(min_support), static_cast<long long>(max_support)));
  SparseFn f(dim);
  for (const auto& p : random_subset(rng, dim, radius, size)) f.set(p, random_square(rng));
  return f;
}

}  // namespace dbm
