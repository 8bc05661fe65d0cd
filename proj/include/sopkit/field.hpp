#ifndef SOPKIT_FIELD_HPP
#define SOPKIT_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <variant>

#include "sopkit/error.hpp"

namespace sopkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A field element: a residue in [0, p) for GF(p), or an exact rational.
// cpp_rational keeps lowest terms with positive denominator on its own.
using Coeff = std::variant<std::uint64_t, Rational>;

// Coefficient field: GF(p) for an odd prime p (default 32003), or QQ.
class Field {
 public:
  static Field gf(std::uint32_t p);
  static Field rationals();

  bool is_prime_field() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(long long v) const;
  Coeff from_bigint(const BigInt& v) const;
  Coeff from_rational(const Rational& v) const;  // GF(p): num * den^-1 mod p

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff div(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;
  bool eq(const Coeff& a, const Coeff& b) const;

  // GF(p) prints the balanced representative in [-(p-1)/2, (p-1)/2].
  std::string str(const Coeff& a) const;
  bool is_negative_rep(const Coeff& a) const;   // printed with a leading '-'
  std::string abs_str(const Coeff& a) const;    // magnitude of the printed form

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint64_t fp(const Coeff& a) const { return std::get<std::uint64_t>(a); }
  const Rational& rat(const Coeff& a) const { return std::get<Rational>(a); }

  std::uint32_t p_ = 0;  // 0 means QQ
};

constexpr std::uint32_t kDefaultPrime = 32003;

}  // namespace sopkit

#endif
