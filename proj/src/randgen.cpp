#include "sopkit/randgen.hpp"

namespace sopkit {

Coeff InstanceGen::random_nonzero_coeff() {
  const Field& F = ring_->field();
  while (true) {
    Coeff c = F.is_prime_field() ? F.from_int(static_cast<long long>(uniform(F.characteristic())))
                                 : F.from_int(static_cast<long long>(uniform(21)) - 10);
    if (!F.is_zero(c)) return c;
  }
}

Coeff InstanceGen::random_small_coeff(int lo, int hi) {
  return ring_->field().from_int(lo + static_cast<long long>(uniform(hi - lo + 1)));
}

Monomial InstanceGen::random_monomial(std::uint32_t min_deg, std::uint32_t max_deg) {
  std::uint32_t deg = min_deg + static_cast<std::uint32_t>(uniform(max_deg - min_deg + 1));
  std::vector<std::uint32_t> e(ring_->nvars(), 0);
  for (std::uint32_t i = 0; i < deg; ++i) ++e[uniform(ring_->nvars())];
  return Monomial(std::move(e));
}

Polynomial InstanceGen::random_variable() {
  return Polynomial::variable(ring_, uniform(ring_->nvars()));
}

Polynomial InstanceGen::random_mono_or_binomial(std::uint32_t max_deg) {
  Monomial m1 = random_monomial(1, max_deg);
  if (uniform(2) == 0) return Polynomial::monomial_term(ring_, ring_->field().one(), m1);
  Monomial m2 = random_monomial(1, max_deg);
  Polynomial p = Polynomial::monomial_term(ring_, ring_->field().one(), m1) +
                 Polynomial::monomial_term(ring_, random_nonzero_coeff(), m2);
  return p.is_zero() ? Polynomial::monomial_term(ring_, ring_->field().one(), m1) : p;
}

Ideal InstanceGen::random_ideal(std::size_t max_gens, std::uint32_t max_deg) {
  std::size_t count = 1 + uniform(max_gens);
  std::vector<Polynomial> gens;
  gens.reserve(count);
  for (std::size_t i = 0; i < count; ++i) gens.push_back(random_mono_or_binomial(max_deg));
  return Ideal(ring_, std::move(gens));
}

Polynomial InstanceGen::random_poly_small(std::size_t max_terms, std::uint32_t max_deg) {
  std::size_t count = 1 + uniform(max_terms);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < count; ++i)
    terms.push_back({random_small_coeff(), random_monomial(0, max_deg)});
  return Polynomial::from_terms(ring_, std::move(terms));
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace sopkit
