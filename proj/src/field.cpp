#include "sopkit/field.hpp"

namespace sopkit {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// a^-1 mod p via extended Euclid, 0 < a < p.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error("element not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::gf(std::uint32_t p) {
  if (!is_prime(p)) throw Error("GF(p) modulus " + std::to_string(p) + " is not prime");
  if (p == 2) throw Error("GF(2) not supported: modulus must be an odd prime");
  return Field(p);
}

Field Field::rationals() { return Field(0); }

Coeff Field::zero() const {
  if (p_) return std::uint64_t{0};
  return Rational(0);
}

Coeff Field::one() const {
  if (p_) return std::uint64_t{1};
  return Rational(1);
}

Coeff Field::from_int(long long v) const {
  if (!p_) return Rational(v);
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint64_t>(r);
}

Coeff Field::from_bigint(const BigInt& v) const {
  if (!p_) return Rational(v);
  BigInt r = v % p_;
  if (r < 0) r += p_;
  return static_cast<std::uint64_t>(r);
}

Coeff Field::from_rational(const Rational& v) const {
  if (!p_) return v;
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  BigInt dm = den % p_;
  if (dm == 0) throw Error("rational has denominator divisible by p");
  Coeff n = from_bigint(num);
  std::uint64_t d = static_cast<std::uint64_t>(dm < 0 ? dm + p_ : dm);
  return mul(n, Coeff{mod_inverse(d, p_)});
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (p_) {
    std::uint64_t s = fp(a) + fp(b);
    if (s >= p_) s -= p_;
    return s;
  }
  return Rational(rat(a) + rat(b));
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (p_) {
    std::uint64_t s = fp(a) + p_ - fp(b);
    if (s >= p_) s -= p_;
    return s;
  }
  return Rational(rat(a) - rat(b));
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (p_) return (fp(a) * fp(b)) % p_;
  return Rational(rat(a) * rat(b));
}

Coeff Field::div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

Coeff Field::neg(const Coeff& a) const {
  if (p_) {
    std::uint64_t v = fp(a);
    return v == 0 ? v : p_ - v;
  }
  return Rational(-rat(a));
}

Coeff Field::inv(const Coeff& a) const {
  if (p_) {
    if (fp(a) == 0) throw Error("division by zero in GF(p)");
    return mod_inverse(fp(a), p_);
  }
  if (rat(a) == 0) throw Error("division by zero in QQ");
  return Rational(1 / rat(a));
}

bool Field::is_zero(const Coeff& a) const { return p_ ? fp(a) == 0 : rat(a) == 0; }
bool Field::is_one(const Coeff& a) const { return p_ ? fp(a) == 1 : rat(a) == 1; }
bool Field::eq(const Coeff& a, const Coeff& b) const {
  return p_ ? fp(a) == fp(b) : rat(a) == rat(b);
}

bool Field::is_negative_rep(const Coeff& a) const {
  if (p_) return fp(a) > p_ / 2;
  return rat(a) < 0;
}

std::string Field::abs_str(const Coeff& a) const {
  if (p_) {
    std::uint64_t v = fp(a);
    if (v > p_ / 2) v = p_ - v;
    return std::to_string(v);
  }
  Rational r = rat(a) < 0 ? Rational(-rat(a)) : rat(a);
  return r.str();
}

std::string Field::str(const Coeff& a) const {
  return (is_negative_rep(a) ? "-" : "") + abs_str(a);
}

}  // namespace sopkit
