#ifndef SOPKIT_IDEAL_HPP
#define SOPKIT_IDEAL_HPP

#include <map>
#include <mutex>

#include "sopkit/groebner.hpp"
#include "sopkit/parser.hpp"

namespace sopkit {

// Ideal of the ambient polynomial ring: generator list plus lazily cached
// reduced Groebner bases, keyed by order. Equality is extensional (identical
// reduced grevlex bases). Cheap to copy; the cache is shared and write-once
// per order.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);  // zero gens dropped
  static Ideal zero(RingPtr ring);
  static Ideal unit(RingPtr ring);
  static Ideal principal(Polynomial f);

  const RingPtr& ring() const;
  const std::vector<Polynomial>& generators() const;
  const GroebnerBasis& gb(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

  bool is_zero() const { return generators().empty(); }
  bool is_unit() const { return gb().is_unit(); }

 private:
  struct Impl {
    RingPtr ring;
    std::vector<Polynomial> gens;
    mutable std::mutex mu;
    mutable std::map<std::uint64_t, std::shared_ptr<const GroebnerBasis>> cache;
  };
  std::shared_ptr<const Impl> impl_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, std::uint32_t n);  // n = 0 gives (1)

// I cap J via the tag-variable elimination t*I + (1-t)*J.
Ideal intersect(const Ideal& a, const Ideal& b);

Ideal colon(const Ideal& a, const Polynomial& f);  // f != 0
Ideal colon(const Ideal& a, const Ideal& b);

// Stable value of the chain I : f ⊆ I : f^2 ⊆ ... (resp. I : J iterated).
Ideal saturate(const Ideal& a, const Polynomial& f);  // f != 0
Ideal saturate(const Ideal& a, const Ideal& b);       // b != (0)

bool member(const Polynomial& f, const Ideal& I);
bool contains(const Ideal& outer, const Ideal& inner);  // inner ⊆ outer
bool equal(const Ideal& a, const Ideal& b);

// dim S/I from the leading-term ideal: the largest variable subset
// supporting no leading monomial. Unit ideal gives the sentinel -1.
int krull_dimension(const Ideal& I);

// "(g1, g2, ...)" over the reduced grevlex basis.
std::string ideal_str(const Ideal& I);

// "(f, g, h)" or a single polynomial; used by the CLI and tests.
Ideal parse_ideal(std::string_view text, const RingPtr& ring);

}  // namespace sopkit

#endif
