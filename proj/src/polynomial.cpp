#include "sopkit/polynomial.hpp"

#include <algorithm>

namespace sopkit {

RingPtr Ring::make(Field field, std::vector<std::string> var_names) {
  for (std::size_t i = 0; i < var_names.size(); ++i)
    for (std::size_t j = i + 1; j < var_names.size(); ++j)
      if (var_names[i] == var_names[j])
        throw Error("duplicate variable name '" + var_names[i] + "'");
  return RingPtr(new Ring(field, std::move(var_names)));
}

int Ring::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw Error("mismatched ring contexts");
}

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(RingPtr ring, Coeff c) {
  if (ring->field().is_zero(c)) return zero(std::move(ring));
  std::vector<Term> t;
  t.push_back({std::move(c), Monomial::one(ring->nvars())});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_int(RingPtr ring, long long v) {
  Coeff c = ring->field().from_int(v);
  return constant(std::move(ring), std::move(c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i, std::uint32_t e) {
  if (i >= ring->nvars()) throw Error("variable index out of range");
  if (e == 0) return constant(std::move(ring), ring->field().one());
  Monomial m = Monomial::var(ring->nvars(), i, e);
  std::vector<Term> t;
  t.push_back({ring->field().one(), std::move(m)});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::monomial_term(RingPtr ring, Coeff c, Monomial m) {
  if (m.nvars() != ring->nvars()) throw Error("monomial length mismatch");
  if (ring->field().is_zero(c)) return zero(std::move(ring));
  std::vector<Term> t;
  t.push_back({std::move(c), std::move(m)});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Field& F = ring->field();
  const MonomialOrder ord = MonomialOrder::grevlex();
  for (const Term& t : terms)
    if (t.mono.nvars() != ring->nvars()) throw Error("monomial length mismatch");
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.cmp(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [&](const Term& t) { return F.is_zero(t.coeff); });
  return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::uint64_t d = terms_[0].mono.degree();
  for (const Term& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const Field& F = ring_->field();
  const MonomialOrder ord = MonomialOrder::grevlex();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Coeff s = F.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!F.is_zero(s)) out.push_back({std::move(s), terms_[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  const Field& F = ring_->field();
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = F.neg(t.coeff);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_monomial(const Coeff& c, const Monomial& m) const {
  const Field& F = ring_->field();
  if (F.is_zero(c)) return zero(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back({F.mul(t.coeff, c), t.mono.times(m)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  const Field& F = ring_->field();
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) acc.push_back({F.mul(a.coeff, b.coeff), a.mono.times(b.mono)});
  return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  const Field& F = ring_->field();
  if (F.is_zero(c)) return zero(ring_);
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = F.mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(std::uint32_t n) const {
  Polynomial result = constant(ring_, ring_->field().one());
  Polynomial base = *this;
  while (n) {
    if (n & 1) result = result * base;
    base = (n >>= 1) ? base * base : base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_[0].coeff));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  const Field& F = ring_->field();
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || !F.eq(terms_[i].coeff, o.terms_[i].coeff))
      return false;
  return true;
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& ord) const {
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return ord.cmp(a.mono, b.mono) > 0; });
  return out;
}

namespace {

void append_monomial(std::string& s, const Ring& ring, const Monomial& m) {
  bool first = true;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) s += '*';
    first = false;
    s += ring.var_name(i);
    if (m[i] > 1) {
      s += '^';
      s += std::to_string(m[i]);
    }
  }
}

std::string render(const Polynomial& p, const MonomialOrder& ord, bool spaces) {
  if (p.is_zero()) return "0";
  const Field& F = p.ring()->field();
  std::string s;
  bool first = true;
  for (const Term& t : p.sorted_terms(ord)) {
    bool neg = F.is_negative_rep(t.coeff);
    if (first) {
      if (neg) s += '-';
    } else {
      s += spaces ? (neg ? " - " : " + ") : (neg ? "-" : "+");
    }
    first = false;
    std::string mag = F.abs_str(t.coeff);
    if (t.mono.is_one()) {
      s += mag;
    } else {
      if (mag != "1") {
        s += mag;
        s += '*';
      }
      append_monomial(s, *p.ring(), t.mono);
    }
  }
  return s;
}

}  // namespace

std::string Polynomial::str() const { return render(*this, MonomialOrder::grevlex(), true); }
std::string Polynomial::str(const MonomialOrder& ord) const { return render(*this, ord, true); }
std::string Polynomial::str_compact() const {
  return render(*this, MonomialOrder::grevlex(), false);
}

std::optional<Polynomial> exact_quotient(const Polynomial& g, const Polynomial& f) {
  require_same_ring(g.ring(), f.ring());
  if (f.is_zero()) throw Error("division by the zero polynomial");
  const Field& F = g.ring()->field();
  const Term& lt = f.terms()[0];
  Polynomial rem = g;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& t = rem.terms()[0];
    if (!lt.mono.divides(t.mono)) return std::nullopt;
    Coeff c = F.div(t.coeff, lt.coeff);
    Monomial m = t.mono.quotient_by(lt.mono);
    rem = rem - f.times_monomial(c, m);
    quot.push_back({std::move(c), std::move(m)});
  }
  return Polynomial::from_terms(g.ring(), std::move(quot));
}

}  // namespace sopkit
