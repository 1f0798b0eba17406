#ifndef MCKAY_TESTS_GENERATORS_HPP_
#define MCKAY_TESTS_GENERATORS_HPP_

#include <cstdint>  // for int64_t, uint64_t
#include <random>   // for mt19937_64, uniform_int_distribution
#include <vector>   // for vector

#include "mckay/cyclo.hpp"
#include "mckay/poly.hpp"
#include "mckay/rational.hpp"

namespace mckay::testgen {

  inline std::int64_t
  uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }

  inline Rational small_rational(std::mt19937_64& rng) {
    return Rational(uniform(rng, -9, 9), uniform(rng, 1, 6));
  }

  inline CycloNum cyclo(std::mt19937_64& rng, unsigned n) {
    std::vector<Rational> c(euler_phi(n));
    for (auto& x : c) {
      // sparse-ish, so zero divisors of the naive kind show up
      x = uniform(rng, 0, 2) == 0 ? Rational(0) : small_rational(rng);
    }
    return CycloNum::from_exponents(n, c);
  }

  inline QPoly poly(std::mt19937_64& rng, int max_degree) {
    std::vector<Rational> c(uniform(rng, 0, max_degree) + 1);
    for (auto& x : c) {
      x = small_rational(rng);
    }
    return QPoly(c);
  }

}  // namespace mckay::testgen

#endif  // MCKAY_TESTS_GENERATORS_HPP_
