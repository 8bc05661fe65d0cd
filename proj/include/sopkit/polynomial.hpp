#ifndef SOPKIT_POLYNOMIAL_HPP
#define SOPKIT_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "sopkit/monomial.hpp"
#include "sopkit/ring.hpp"

namespace sopkit {

struct Term {
  Coeff coeff;
  Monomial mono;
};

// Sparse multivariate polynomial. Terms are kept strictly descending under
// grevlex (the ambient order of every ring context); other orders re-sort on
// demand. The zero polynomial is the empty term list.
class Polynomial {
 public:
  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial from_int(RingPtr ring, long long v);
  static Polynomial variable(RingPtr ring, std::size_t i, std::uint32_t e = 1);
  static Polynomial monomial_term(RingPtr ring, Coeff c, Monomial m);
  // Normalizes: merges duplicate monomials, drops zeros, sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  std::uint64_t degree() const;  // total degree; 0 for the zero polynomial
  bool is_homogeneous() const;   // zero counts as homogeneous

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Coeff& c) const;
  Polynomial times_monomial(const Coeff& c, const Monomial& m) const;
  Polynomial pow(std::uint32_t n) const;
  Polynomial monic() const;  // divide by the grevlex leading coefficient

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Terms sorted strictly descending under `ord`.
  std::vector<Term> sorted_terms(const MonomialOrder& ord) const;

  // "x^2*y - 3"; GF(p) coefficients print balanced in [-(p-1)/2,(p-1)/2].
  std::string str() const;
  std::string str(const MonomialOrder& ord) const;
  std::string str_compact() const;  // no spaces, for report witnesses

 private:
  Polynomial(RingPtr r, std::vector<Term> t) : ring_(std::move(r)), terms_(std::move(t)) {}
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Exact quotient g / f, or nullopt if f does not divide g. f != 0.
std::optional<Polynomial> exact_quotient(const Polynomial& g, const Polynomial& f);

}  // namespace sopkit

#endif
