#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "dbm/four_functions.hpp"
#include "dbm/point.hpp"

namespace dbm {

/// Seeded generator with a fixed algorithm: mt19937_64 and rejection sampling
/// for bounded integers. Standard distributions are avoided because their
/// output is implementation defined.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64/rejection-v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi]. Throws InvalidArgument if lo > hi.
  long long uniform(long long lo, long long hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

Point random_point(Rng& rng, std::size_t dim, long long radius);

/// count distinct points of [-radius, radius]^dim, sorted. Throws
/// InvalidArgument if the box is too small.
std::vector<Point> random_subset(Rng& rng, std::size_t dim, long long radius, std::size_t count);

/// p/q with 0 <= p <= max_num and 1 <= q <= max_den.
Rational random_rational(Rng& rng, long long max_num, long long max_den);

/// (p/q)^2 with p, q in 1..9.
Rational random_square(Rng& rng);

/// Support of uniform size in [min_support, max_support] drawn from the box,
/// values from random_square.
SparseFn random_sparse_fn(Rng& rng, std::size_t dim, long long radius, std::size_t min_support,
                          std::size_t max_support);

}  // namespace dbm
