#ifndef SOPKIT_MONOMIAL_HPP
#define SOPKIT_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "sopkit/error.hpp"

namespace sopkit {

// Exponent vectors are fixed-width machine integers; degrees at the scales
// handled here are tiny, so additions are checked against a generous cap.
constexpr std::uint32_t kExponentCap = 1u << 24;

class Monomial {
 public:
  explicit Monomial(std::vector<std::uint32_t> exps);
  static Monomial one(std::size_t nvars);
  static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t e = 1);

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint64_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;          // this | o
  Monomial quotient_by(const Monomial& o) const;  // this / o, exact
  Monomial pow(std::uint32_t k) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  const std::vector<std::uint32_t>& exponents() const { return e_; }

 private:
  std::vector<std::uint32_t> e_;
  std::uint64_t deg_ = 0;
};

class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { grevlex, lex, block_elim };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  // First `block` variables are eliminated; grevlex within each block.
  static MonomialOrder block_elim(std::size_t block) {
    return MonomialOrder(Kind::block_elim, block);
  }

  // -1, 0, +1 for a < b, a == b, a > b.
  int cmp(const Monomial& a, const Monomial& b) const;

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }
  std::uint64_t cache_key() const {
    return (static_cast<std::uint64_t>(kind_) << 32) | block_;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}
  Kind kind_;
  std::size_t block_;
};

// All monomials of the given total degree in nvars variables,
// in lexicographically descending exponent order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t deg);

}  // namespace sopkit

#endif
