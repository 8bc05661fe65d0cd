#ifndef SOPKIT_GROEBNER_HPP
#define SOPKIT_GROEBNER_HPP

#include <memory>
#include <span>
#include <vector>

#include "sopkit/polynomial.hpp"

namespace sopkit {

// Reduced Groebner basis: monic, auto-reduced, generators sorted by leading
// term descending under the basis order. Unique for a given ideal and order.
class GroebnerBasis {
 public:
  const RingPtr& ring() const;
  const MonomialOrder& order() const;
  const std::vector<Polynomial>& generators() const;
  const std::vector<Monomial>& leading_monomials() const;
  bool is_empty() const { return generators().empty(); }
  bool is_unit() const;  // basis == {1}

  struct Impl;
  explicit GroebnerBasis(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const Impl> impl_;
  friend Polynomial normal_form(const Polynomial&, const GroebnerBasis&);
};

GroebnerBasis reduced_gb(std::span<const Polynomial> gens, const MonomialOrder& ord);

// Unique remainder of f modulo gb: no term divisible by any leading term.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Element of a free module S^rank.
class FreeModuleVector {
 public:
  FreeModuleVector(RingPtr ring, std::vector<Polynomial> comps);
  static FreeModuleVector zero(RingPtr ring, std::size_t rank);
  static FreeModuleVector unit(RingPtr ring, std::size_t rank, std::size_t i);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return comps_.size(); }
  const Polynomial& comp(std::size_t i) const { return comps_.at(i); }
  const std::vector<Polynomial>& comps() const { return comps_; }
  bool is_zero() const;

  FreeModuleVector operator+(const FreeModuleVector& o) const;
  FreeModuleVector operator-(const FreeModuleVector& o) const;
  FreeModuleVector scaled(const Polynomial& f) const;

  bool operator==(const FreeModuleVector& o) const { return comps_ == o.comps_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> comps_;
};

// Generators of the full syzygy module of the given generators: every output
// v satisfies sum_j v_j * gens_j = 0 and the outputs generate all relations.
// Module Groebner bases use the position-over-term extension of grevlex.
std::vector<FreeModuleVector> syzygy_basis(std::span<const Polynomial> gens);
std::vector<FreeModuleVector> syzygy_basis(std::span<const FreeModuleVector> gens);

// Reduced module Groebner basis wrapper for membership tests.
class ModuleBasis {
 public:
  explicit ModuleBasis(std::span<const FreeModuleVector> gens);
  bool contains(const FreeModuleVector& v) const;
  std::size_t rank() const;

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
};

Polynomial apply_syzygy(const FreeModuleVector& v, std::span<const Polynomial> gens);
FreeModuleVector apply_syzygy(const FreeModuleVector& v, std::span<const FreeModuleVector> gens);

}  // namespace sopkit

#endif
