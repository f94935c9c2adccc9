#pragma once

// Seeded generators for randomized property checks.

#include <cstdint>
#include <random>

#include "cohlattice.hpp"
#include "fmtransform.hpp"

namespace fmstab {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// p/q with |p| <= num_bound, 1 <= q <= den_bound.
  Rational rational(int num_bound = 9, int den_bound = 6) {
    return Rational(uniform_int(-num_bound, num_bound), uniform_int(1, den_bound));
  }

  Rational positive_rational(int num_bound = 9, int den_bound = 6) {
    return Rational(uniform_int(1, num_bound), uniform_int(1, den_bound));
  }

  CohClass cls(const AbelianContext& ctx) {
    std::vector<Rational> c;
    for (int i = 0; i <= ctx.g(); ++i) c.push_back(rational());
    return {ctx, std::move(c)};
  }

  /// A valid spec of dimension g: target degree solved from reciprocity.
  FMTransformSpec spec(int g, int max_rank = 4) {
    return FMTransformSpec::with_reciprocal_target(g, positive_rational(), uniform_int(1, max_rank), rational(4, 3),
                                                   rational(4, 3));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fmstab
