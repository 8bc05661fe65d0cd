#include "sopkit/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace sopkit {

Monomial::Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {
  for (std::uint32_t x : e_) {
    if (x >= kExponentCap) throw Error("monomial exponent overflow");
    deg_ += x;
  }
}

Monomial Monomial::one(std::size_t nvars) {
  return Monomial(std::vector<std::uint32_t>(nvars, 0));
}

Monomial Monomial::var(std::size_t nvars, std::size_t i, std::uint32_t e) {
  std::vector<std::uint32_t> v(nvars, 0);
  v.at(i) = e;
  return Monomial(std::move(v));
}

Monomial Monomial::times(const Monomial& o) const {
  if (nvars() != o.nvars()) throw Error("monomial length mismatch");
  std::vector<std::uint32_t> v(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    std::uint64_t s = std::uint64_t{e_[i]} + o.e_[i];
    if (s >= kExponentCap) throw Error("monomial exponent overflow");
    v[i] = static_cast<std::uint32_t>(s);
  }
  return Monomial(std::move(v));
}

bool Monomial::divides(const Monomial& o) const {
  if (nvars() != o.nvars()) throw Error("monomial length mismatch");
  for (std::size_t i = 0; i < nvars(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_by(const Monomial& o) const {
  if (nvars() != o.nvars()) throw Error("monomial length mismatch");
  std::vector<std::uint32_t> v(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (o.e_[i] > e_[i]) throw Error("non-exact monomial quotient");
    v[i] = e_[i] - o.e_[i];
  }
  return Monomial(std::move(v));
}

Monomial Monomial::pow(std::uint32_t k) const {
  std::vector<std::uint32_t> v(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    std::uint64_t s = std::uint64_t{e_[i]} * k;
    if (s >= kExponentCap) throw Error("monomial exponent overflow");
    v[i] = static_cast<std::uint32_t>(s);
  }
  return Monomial(std::move(v));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw Error("monomial length mismatch");
  std::vector<std::uint32_t> v(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) v[i] = std::max(a.e_[i], b.e_[i]);
  return Monomial(std::move(v));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw Error("monomial length mismatch");
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.e_[i] != 0 && b.e_[i] != 0) return false;
  return true;
}

namespace {

// grevlex on the variable range [lo, hi): higher degree wins; on ties the
// smaller exponent at the last differing position wins.
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) throw Error("monomial length mismatch");
  const std::size_t n = a.nvars();
  switch (kind_) {
    case Kind::grevlex:
      return grevlex_range(a, b, 0, n);
    case Kind::lex:
      return lex_range(a, b, 0, n);
    case Kind::block_elim: {
      const std::size_t b1 = std::min(block_, n);
      int c = grevlex_range(a, b, 0, b1);
      if (c != 0) return c;
      return grevlex_range(a, b, b1, n);
    }
  }
  return 0;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t deg) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (deg == 0) out.push_back(Monomial::one(0));
    return out;
  }
  std::vector<std::uint32_t> cur(nvars, 0);
  // distribute `deg` over positions, first position takes the most first
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t remaining) -> void {
    if (i + 1 == nvars) {
      cur[i] = remaining;
      out.push_back(Monomial(cur));
      return;
    }
    for (std::uint32_t e = remaining; e != static_cast<std::uint32_t>(-1); --e) {
      cur[i] = e;
      self(self, i + 1, remaining - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, deg);
  return out;
}

}  // namespace sopkit
