#ifndef SOPKIT_RANDGEN_HPP
#define SOPKIT_RANDGEN_HPP

#include <random>

#include "sopkit/ideal.hpp"

namespace sopkit {

// Deterministic generator for randomized identity suites and property tests.
class InstanceGen {
 public:
  InstanceGen(RingPtr ring, std::uint64_t seed) : ring_(std::move(ring)), rng_(seed) {}

  std::uint64_t uniform(std::uint64_t n) { return rng_() % n; }  // [0, n)

  Coeff random_nonzero_coeff();
  Coeff random_small_coeff(int lo = -10, int hi = 10);  // may be zero
  Monomial random_monomial(std::uint32_t min_deg, std::uint32_t max_deg);
  Polynomial random_variable();
  // a monomial or a two-term binomial with a random nonzero coefficient
  Polynomial random_mono_or_binomial(std::uint32_t max_deg);
  Ideal random_ideal(std::size_t max_gens, std::uint32_t max_deg);
  // dense-ish polynomial with small integer coefficients
  Polynomial random_poly_small(std::size_t max_terms, std::uint32_t max_deg);

  const RingPtr& ring() const { return ring_; }

 private:
  RingPtr ring_;
  std::mt19937_64 rng_;
};

std::uint64_t fnv1a(std::string_view s);

}  // namespace sopkit

#endif
