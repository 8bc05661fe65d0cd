#include "sopkit/ideal.hpp"

#include <algorithm>
#include <bit>

namespace sopkit {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) {
  auto impl = std::make_shared<Impl>();
  impl->ring = std::move(ring);
  for (Polynomial& g : gens) {
    require_same_ring(impl->ring, g.ring());
    if (!g.is_zero()) impl->gens.push_back(std::move(g));
  }
  impl_ = std::move(impl);
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, ring->field().one());
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::principal(Polynomial f) {
  RingPtr r = f.ring();
  return Ideal(std::move(r), {std::move(f)});
}

const RingPtr& Ideal::ring() const { return impl_->ring; }
const std::vector<Polynomial>& Ideal::generators() const { return impl_->gens; }

const GroebnerBasis& Ideal::gb(const MonomialOrder& ord) const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto it = impl_->cache.find(ord.cache_key());
  if (it == impl_->cache.end()) {
    std::vector<Polynomial> gens = impl_->gens;
    if (gens.empty()) gens.push_back(Polynomial::zero(impl_->ring));
    auto gb = std::make_shared<GroebnerBasis>(reduced_gb(gens, ord));
    it = impl_->cache.emplace(ord.cache_key(), std::move(gb)).first;
  }
  return *it->second;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Polynomial& f : a.generators())
    for (const Polynomial& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, std::uint32_t n) {
  if (n == 0) return Ideal::unit(a.ring());
  const auto& g = a.generators();
  if (g.empty()) return Ideal::zero(a.ring());
  // all degree-n products of generators: multisets of indices
  std::vector<Polynomial> gens;
  std::vector<std::uint32_t> pick(n, 0);
  while (true) {
    Polynomial prod = g[pick[0]];
    for (std::uint32_t i = 1; i < n; ++i) prod = prod * g[pick[i]];
    gens.push_back(std::move(prod));
    // next non-decreasing index tuple
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == g.size() - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[i - 1];
  }
  return Ideal(a.ring(), std::move(gens));
}

namespace {

// ambient ring with one tag variable prepended
RingPtr tag_ring(const RingPtr& ring) {
  std::vector<std::string> names;
  names.reserve(ring->nvars() + 1);
  names.push_back("@t");
  for (const std::string& v : ring->var_names()) names.push_back(v);
  return Ring::make(ring->field(), std::move(names));
}

Polynomial lift_to_tag(const Polynomial& f, const RingPtr& ext) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    std::vector<std::uint32_t> e;
    e.reserve(t.mono.nvars() + 1);
    e.push_back(0);
    e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(ext, std::move(terms));
}

Polynomial drop_tag(const Polynomial& f, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    const auto& e = t.mono.exponents();
    terms.push_back({t.coeff, Monomial(std::vector<std::uint32_t>(e.begin() + 1, e.end()))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

bool uses_tag(const Polynomial& f) {
  for (const Term& t : f.terms())
    if (t.mono[0] != 0) return true;
  return false;
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  RingPtr ext = tag_ring(a.ring());
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::from_int(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.generators()) gens.push_back(t * lift_to_tag(f, ext));
  for (const Polynomial& g : b.generators()) gens.push_back(one_minus_t * lift_to_tag(g, ext));
  GroebnerBasis gb = reduced_gb(gens, MonomialOrder::block_elim(1));
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb.generators())
    if (!uses_tag(g)) kept.push_back(drop_tag(g, a.ring()));
  return Ideal(a.ring(), std::move(kept));
}

Ideal colon(const Ideal& a, const Polynomial& f) {
  require_same_ring(a.ring(), f.ring());
  if (f.is_zero()) throw Error("colon by the zero element");
  if (f.is_constant()) return a;
  Ideal cap = intersect(a, Ideal::principal(f));
  std::vector<Polynomial> gens;
  gens.reserve(cap.generators().size());
  for (const Polynomial& g : cap.generators()) {
    auto q = exact_quotient(g, f);
    if (!q) throw Error("internal: intersection with (f) not divisible by f");
    gens.push_back(std::move(*q));
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  Ideal acc = Ideal::unit(a.ring());
  for (const Polynomial& g : b.generators()) {
    Ideal c = colon(a, g);
    acc = acc.is_unit() ? c : intersect(acc, c);
  }
  return acc;  // empty generator list (b = 0) gives (1)
}

Ideal saturate(const Ideal& a, const Polynomial& f) {
  require_same_ring(a.ring(), f.ring());
  if (f.is_zero()) throw Error("saturation by the zero element");
  Ideal cur = a;
  while (true) {
    Ideal next = colon(cur, f);
    if (equal(next, cur)) return cur;
    cur = next;
  }
}

Ideal saturate(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw Error("saturation by the zero ideal");
  Ideal cur = a;
  while (true) {
    Ideal next = colon(cur, b);
    if (equal(next, cur)) return cur;
    cur = next;
  }
}

bool member(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  return normal_form(f, I.gb()).is_zero();
}

bool contains(const Ideal& outer, const Ideal& inner) {
  require_same_ring(outer.ring(), inner.ring());
  const GroebnerBasis& gb = outer.gb();
  for (const Polynomial& g : inner.generators())
    if (!normal_form(g, gb).is_zero()) return false;
  return true;
}

bool equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const auto& ga = a.gb().generators();
  const auto& gc = b.gb().generators();
  if (ga.size() != gc.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (ga[i] != gc[i]) return false;
  return true;
}

namespace {

// branch on the support of the first monomial contained in the active set
int max_independent(const std::vector<Monomial>& lts, std::uint64_t active,
                    std::map<std::uint64_t, int>& memo, std::size_t nvars) {
  auto it = memo.find(active);
  if (it != memo.end()) return it->second;
  const Monomial* blocker = nullptr;
  for (const Monomial& m : lts) {
    bool inside = true;
    for (std::size_t i = 0; i < nvars && inside; ++i)
      if (m[i] != 0 && !(active & (1ull << i))) inside = false;
    if (inside) {
      blocker = &m;
      break;
    }
  }
  int best;
  if (!blocker) {
    best = static_cast<int>(std::popcount(active));
  } else if (blocker->is_one()) {
    best = -1;  // unit ideal: no independent set at all
  } else {
    best = -1;
    for (std::size_t i = 0; i < nvars; ++i)
      if ((*blocker)[i] != 0 && (active & (1ull << i)))
        best = std::max(best, max_independent(lts, active & ~(1ull << i), memo, nvars));
  }
  memo.emplace(active, best);
  return best;
}

}  // namespace

int krull_dimension(const Ideal& I) {
  const std::size_t n = I.ring()->nvars();
  if (n > 63) throw Error("too many variables for dimension computation");
  const std::vector<Monomial>& lts = I.gb().leading_monomials();
  if (lts.empty()) return static_cast<int>(n);  // zero ideal
  std::map<std::uint64_t, int> memo;
  std::uint64_t all = (n == 63) ? ~0ull >> 1 : ((1ull << n) - 1);
  return max_independent(lts, all, memo, n);
}

std::string ideal_str(const Ideal& I) {
  std::string s = "(";
  const auto& gens = I.gb().generators();
  if (gens.empty()) s += "0";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].str();
  }
  return s + ")";
}

Ideal parse_ideal(std::string_view text, const RingPtr& ring) {
  std::size_t a = text.find_first_not_of(" \t");
  std::size_t b = text.find_last_not_of(" \t");
  if (a == std::string_view::npos) throw ParseError("empty ideal expression", 0);
  std::string_view body = text.substr(a, b - a + 1);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw ParseError("unbalanced parentheses", b);
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Polynomial> gens;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string_view piece =
        body.substr(start, comma == std::string_view::npos ? body.size() - start : comma - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos)
      gens.push_back(parse_poly(piece, ring));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace sopkit
