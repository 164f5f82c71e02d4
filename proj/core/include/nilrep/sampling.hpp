#ifndef NILREP_SAMPLING_HPP
#define NILREP_SAMPLING_HPP

#include <cstdint>

#include "nilrep/polynomial.hpp"
#include "nilrep/rational.hpp"

namespace nilrep {

/// SplitMix64: tiny deterministic generator with a fully specified
/// transition function, so seeded runs are reproducible across platforms
/// and standard library versions.
class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, n); n must be positive.
  uint64_t bounded(uint64_t n) { return next() % n; }

private:
  uint64_t state_;
};

/// Deterministic source of small-height rationals, Lie elements and sparse
/// polynomials. Heights are capped (default numerators in [-5, 5],
/// denominators in [1, 5]) to keep exact intermediate values small while
/// still exercising nontrivial brackets.
class Sampler {
public:
  static constexpr int kDefaultHeight = 5;

  explicit Sampler(uint64_t seed, int height = kDefaultHeight)
      : rng_(seed), height_(height < 1 ? 1 : height) {}

  Rational rational();
  Rational nonzero_rational();
  Vec element(int dim);
  Vec nonzero_element(int dim);
  int index(int n) { return static_cast<int>(rng_.bounded(static_cast<uint64_t>(n))); }

  /// Sparse polynomial of total degree exactly `degree`.
  PolyFun poly_of_degree(int vars, int degree);
  /// Sparse polynomial of total degree <= `degree` (possibly lower).
  PolyFun poly_up_to_degree(int vars, int degree);

private:
  Exponents random_monomial(int vars, int degree_exact);

  SplitMix64 rng_;
  int height_;
};

}  // namespace nilrep

#endif
