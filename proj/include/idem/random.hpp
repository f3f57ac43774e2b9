#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "idem/scalar.hpp"
#include "idem/semimodule.hpp"

namespace idem {

/// Seeded source of test data. Only raw mt19937_64 output is used, so a
/// seed gives the same stream on every platform.
///
/// `scalar()` draws -inf with probability 1/8, +inf with probability 1/16,
/// and otherwise an integer uniform in [-10, 10].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  std::size_t size(std::size_t lo, std::size_t hi) { return static_cast<std::size_t>(integer(lo, hi)); }
  bool coin() { return below(2) == 1; }

  Extended finite() { return Extended{integer(-10, 10)}; }

  Extended scalar() {
    switch (below(16)) {
      case 0:
      case 1: return Extended::bottom();
      case 2: return Extended::top();
      default: return finite();
    }
  }

  /// Same distribution with +inf excluded (elements of R_max).
  Extended bounded_scalar() { return below(8) == 0 ? Extended::bottom() : finite(); }

  FinVector vector(std::size_t dim) { return fill(dim, [this] { return scalar(); }); }
  FinVector bounded_vector(std::size_t dim) { return fill(dim, [this] { return bounded_scalar(); }); }
  FinVector finite_vector(std::size_t dim) { return fill(dim, [this] { return finite(); }); }

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  template <class Draw>
  FinVector fill(std::size_t dim, Draw draw) {
    std::vector<Extended> c;
    c.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) c.push_back(draw());
    return FinVector(std::move(c));
  }

  std::mt19937_64 rng_;
};

}  // namespace idem
