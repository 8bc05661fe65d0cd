#include "sopkit/groebner.hpp"

#include <algorithm>
#include <unordered_set>

namespace sopkit {

namespace {

// Module term: coefficient * x^m * e_pos. Position-over-term order with
// positions compared by index ascending (e_0 largest).
struct MTerm {
  Coeff c;
  std::uint32_t pos;
  Monomial m;
};

using MPoly = std::vector<MTerm>;  // strictly descending

// Buchberger engine over S^rank for a fixed order.
class Engine {
 public:
  Engine(RingPtr ring, MonomialOrder ord, std::uint32_t rank)
      : ring_(std::move(ring)), F_(ring_->field()), ord_(ord), rank_(rank) {}

  int cmp(const MTerm& a, const MTerm& b) const {
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
    return ord_.cmp(a.m, b.m);
  }

  MPoly normalize(MPoly f) const {
    std::sort(f.begin(), f.end(), [&](const MTerm& a, const MTerm& b) { return cmp(a, b) > 0; });
    MPoly out;
    out.reserve(f.size());
    for (MTerm& t : f) {
      if (!out.empty() && out.back().pos == t.pos && out.back().m == t.m)
        out.back().c = F_.add(out.back().c, t.c);
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [&](const MTerm& t) { return F_.is_zero(t.c); });
    return out;
  }

  // a - c * x^m * b, both inputs sorted; result sorted.
  MPoly subtract_scaled(const MPoly& a, const MPoly& b, const Coeff& c, const Monomial& m) const {
    MPoly out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto shifted = [&](const MTerm& t) {
      return MTerm{F_.neg(F_.mul(t.c, c)), t.pos, t.m.times(m)};
    };
    while (i < a.size() && j < b.size()) {
      MTerm bt = shifted(b[j]);
      int d = cmp(a[i], bt);
      if (d > 0) {
        out.push_back(a[i++]);
      } else if (d < 0) {
        out.push_back(std::move(bt));
        ++j;
      } else {
        Coeff s = F_.add(a[i].c, bt.c);
        if (!F_.is_zero(s)) out.push_back({std::move(s), a[i].pos, a[i].m});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(shifted(b[j]));
    return out;
  }

  // Full normal form: no term of the result is reducible by the basis.
  MPoly normal_form(MPoly f, const std::vector<MPoly>& basis) const {
    MPoly out;
    while (!f.empty()) {
      const MTerm& t = f.front();
      const MPoly* red = nullptr;
      for (const MPoly& g : basis) {
        if (g.empty()) continue;
        const MTerm& lt = g.front();
        if (lt.pos == t.pos && lt.m.divides(t.m)) {
          red = &g;
          break;
        }
      }
      if (red) {
        const MTerm& lt = red->front();
        Coeff c = F_.div(t.c, lt.c);
        Monomial q = t.m.quotient_by(lt.m);
        f = subtract_scaled(f, *red, c, q);
      } else {
        out.push_back(f.front());
        f.erase(f.begin());
      }
    }
    return out;
  }

  MPoly spair(const MPoly& f, const MPoly& g) const {
    const MTerm& a = f.front();
    const MTerm& b = g.front();
    Monomial l = Monomial::lcm(a.m, b.m);
    MPoly s = subtract_scaled(MPoly{}, f, F_.neg(F_.inv(a.c)), l.quotient_by(a.m));
    return subtract_scaled(s, g, F_.inv(b.c), l.quotient_by(b.m));
  }

  std::vector<MPoly> reduced_basis(std::vector<MPoly> input) const {
    std::vector<MPoly> G;
    for (MPoly& f : input) {
      MPoly n = normalize(std::move(f));
      if (!n.empty()) G.push_back(std::move(n));
    }

    struct Pair {
      std::size_t i, j;
      std::uint32_t pos;
      Monomial lcm;
      bool alive = true;
    };
    std::vector<Pair> pairs;
    std::unordered_set<std::uint64_t> done;
    auto key = [](std::size_t i, std::size_t j) {
      return (static_cast<std::uint64_t>(i) << 32) | j;
    };
    auto push_pairs = [&](std::size_t j) {
      for (std::size_t i = 0; i < j; ++i)
        if (G[i].front().pos == G[j].front().pos)
          pairs.push_back({i, j, G[j].front().pos,
                           Monomial::lcm(G[i].front().m, G[j].front().m)});
    };
    for (std::size_t j = 0; j < G.size(); ++j) push_pairs(j);

    while (true) {
      // normal strategy: smallest lcm first
      std::size_t best = pairs.size();
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (!pairs[k].alive) continue;
        if (best == pairs.size()) {
          best = k;
          continue;
        }
        const Pair& a = pairs[k];
        const Pair& b = pairs[best];
        int c = a.lcm.degree() < b.lcm.degree()   ? -1
                : a.lcm.degree() > b.lcm.degree() ? 1
                                                  : ord_.cmp(a.lcm, b.lcm);
        if (c < 0 || (c == 0 && (a.pos < b.pos || (a.pos == b.pos && key(a.i, a.j) < key(b.i, b.j)))))
          best = k;
      }
      if (best == pairs.size()) break;
      Pair p = pairs[best];
      pairs[best].alive = false;
      done.insert(key(p.i, p.j));

      // product criterion (ideals only)
      if (rank_ == 1 && Monomial::coprime(G[p.i].front().m, G[p.j].front().m)) continue;
      // chain criterion
      bool chained = false;
      for (std::size_t k = 0; k < G.size() && !chained; ++k) {
        if (k == p.i || k == p.j) continue;
        if (G[k].front().pos != p.pos || !G[k].front().m.divides(p.lcm)) continue;
        auto treated = [&](std::size_t a, std::size_t b) {
          return done.count(key(std::min(a, b), std::max(a, b))) > 0;
        };
        chained = treated(p.i, k) && treated(k, p.j);
      }
      if (chained) continue;

      MPoly h = normal_form(spair(G[p.i], G[p.j]), G);
      if (!h.empty()) {
        G.push_back(std::move(h));
        push_pairs(G.size() - 1);
      }
    }

    // minimal leading terms: scan ascending, drop anything divisible by a kept one
    std::vector<std::size_t> idx(G.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return cmp(G[a].front(), G[b].front()) < 0; });
    std::vector<MPoly> kept;
    for (std::size_t i : idx) {
      const MTerm& lt = G[i].front();
      bool redundant = false;
      for (const MPoly& h : kept) {
        if (h.front().pos == lt.pos && h.front().m.divides(lt.m)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) kept.push_back(G[i]);
    }

    // tail-reduce against the others, then scale monic
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<MPoly> others;
      others.reserve(kept.size() - 1);
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      kept[i] = normal_form(kept[i], others);
    }
    std::erase_if(kept, [](const MPoly& g) { return g.empty(); });
    for (MPoly& g : kept) {
      Coeff s = F_.inv(g.front().c);
      for (MTerm& t : g) t.c = F_.mul(t.c, s);
    }
    std::sort(kept.begin(), kept.end(),
              [&](const MPoly& a, const MPoly& b) { return cmp(a.front(), b.front()) > 0; });
    return kept;
  }

  // conversions
  MPoly from_poly(const Polynomial& f, std::uint32_t pos = 0) const {
    MPoly out;
    out.reserve(f.size());
    for (const Term& t : f.terms()) out.push_back({t.coeff, pos, t.mono});
    return normalize(std::move(out));
  }

  MPoly from_vector(const FreeModuleVector& v) const {
    MPoly out;
    for (std::size_t i = 0; i < v.rank(); ++i)
      for (const Term& t : v.comp(i).terms())
        out.push_back({t.coeff, static_cast<std::uint32_t>(i), t.mono});
    return normalize(std::move(out));
  }

  Polynomial to_poly(const MPoly& f) const {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const MTerm& t : f) terms.push_back({t.c, t.m});
    return Polynomial::from_terms(ring_, std::move(terms));
  }

  FreeModuleVector to_vector(const MPoly& f, std::uint32_t rank, std::uint32_t pos_shift = 0) const {
    std::vector<std::vector<Term>> comps(rank);
    for (const MTerm& t : f) comps.at(t.pos - pos_shift).push_back({t.c, t.m});
    std::vector<Polynomial> polys;
    polys.reserve(rank);
    for (auto& c : comps) polys.push_back(Polynomial::from_terms(ring_, std::move(c)));
    return FreeModuleVector(ring_, std::move(polys));
  }

  const RingPtr& ring() const { return ring_; }

 private:
  RingPtr ring_;
  const Field& F_;
  MonomialOrder ord_;
  std::uint32_t rank_;
};

RingPtr common_ring(std::span<const Polynomial> gens) {
  RingPtr r;
  for (const Polynomial& g : gens) {
    if (!r)
      r = g.ring();
    else
      require_same_ring(r, g.ring());
  }
  if (!r) throw Error("cannot infer ring context from an empty generator list");
  return r;
}

// Shared syzygy computation: gens are rank-r module elements (r = 1 for
// ideals); returns generators of the kernel of S^k -> S^r, e_i -> gens[i].
std::vector<MPoly> syzygy_mpolys(const Engine& big, std::vector<MPoly> tagged,
                                 std::uint32_t rank) {
  std::vector<MPoly> G = big.reduced_basis(std::move(tagged));
  std::vector<MPoly> out;
  for (MPoly& g : G)
    if (!g.empty() && g.front().pos >= rank) out.push_back(std::move(g));
  return out;
}

}  // namespace

struct GroebnerBasis::Impl {
  RingPtr ring;
  MonomialOrder ord = MonomialOrder::grevlex();
  std::vector<Polynomial> gens;      // canonical storage
  std::vector<Monomial> lts;         // leading monomials under ord
  std::vector<std::vector<Term>> sorted;  // terms sorted descending under ord
};

const RingPtr& GroebnerBasis::ring() const { return impl_->ring; }
const MonomialOrder& GroebnerBasis::order() const { return impl_->ord; }
const std::vector<Polynomial>& GroebnerBasis::generators() const { return impl_->gens; }
const std::vector<Monomial>& GroebnerBasis::leading_monomials() const { return impl_->lts; }
bool GroebnerBasis::is_unit() const {
  return impl_->gens.size() == 1 && impl_->gens[0].is_constant() && !impl_->gens[0].is_zero();
}

GroebnerBasis reduced_gb(std::span<const Polynomial> gens, const MonomialOrder& ord) {
  RingPtr ring = common_ring(gens);
  Engine eng(ring, ord, 1);
  std::vector<MPoly> input;
  input.reserve(gens.size());
  for (const Polynomial& g : gens) input.push_back(eng.from_poly(g));
  std::vector<MPoly> basis = eng.reduced_basis(std::move(input));

  auto impl = std::make_shared<GroebnerBasis::Impl>();
  impl->ring = ring;
  impl->ord = ord;
  for (const MPoly& g : basis) {
    impl->lts.push_back(g.front().m);
    std::vector<Term> sorted;
    sorted.reserve(g.size());
    for (const MTerm& t : g) sorted.push_back({t.c, t.m});
    impl->gens.push_back(eng.to_poly(g));
    impl->sorted.push_back(std::move(sorted));
  }
  return GroebnerBasis(std::move(impl));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  require_same_ring(f.ring(), gb.ring());
  Engine eng(gb.ring(), gb.order(), 1);
  std::vector<MPoly> basis;
  basis.reserve(gb.impl_->sorted.size());
  for (const auto& terms : gb.impl_->sorted) {
    MPoly g;
    g.reserve(terms.size());
    for (const Term& t : terms) g.push_back({t.coeff, 0, t.mono});
    basis.push_back(std::move(g));
  }
  return eng.to_poly(eng.normal_form(eng.from_poly(f), basis));
}

FreeModuleVector::FreeModuleVector(RingPtr ring, std::vector<Polynomial> comps)
    : ring_(std::move(ring)), comps_(std::move(comps)) {
  for (const Polynomial& c : comps_) require_same_ring(ring_, c.ring());
}

FreeModuleVector FreeModuleVector::zero(RingPtr ring, std::size_t rank) {
  std::vector<Polynomial> comps(rank, Polynomial::zero(ring));
  return FreeModuleVector(std::move(ring), std::move(comps));
}

FreeModuleVector FreeModuleVector::unit(RingPtr ring, std::size_t rank, std::size_t i) {
  FreeModuleVector v = zero(ring, rank);
  v.comps_.at(i) = Polynomial::constant(ring, ring->field().one());
  return v;
}

bool FreeModuleVector::is_zero() const {
  for (const Polynomial& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

FreeModuleVector FreeModuleVector::operator+(const FreeModuleVector& o) const {
  if (rank() != o.rank()) throw Error("free module rank mismatch");
  std::vector<Polynomial> out;
  out.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(comps_[i] + o.comps_[i]);
  return FreeModuleVector(ring_, std::move(out));
}

FreeModuleVector FreeModuleVector::operator-(const FreeModuleVector& o) const {
  if (rank() != o.rank()) throw Error("free module rank mismatch");
  std::vector<Polynomial> out;
  out.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(comps_[i] - o.comps_[i]);
  return FreeModuleVector(ring_, std::move(out));
}

FreeModuleVector FreeModuleVector::scaled(const Polynomial& f) const {
  std::vector<Polynomial> out;
  out.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(comps_[i] * f);
  return FreeModuleVector(ring_, std::move(out));
}

std::vector<FreeModuleVector> syzygy_basis(std::span<const Polynomial> gens) {
  RingPtr ring = common_ring(gens);
  const std::uint32_t k = static_cast<std::uint32_t>(gens.size());
  Engine eng(ring, MonomialOrder::grevlex(), 1 + k);
  std::vector<MPoly> tagged;
  tagged.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    MPoly h = eng.from_poly(gens[i], 0);
    h.push_back({ring->field().one(), 1 + i, Monomial::one(ring->nvars())});
    tagged.push_back(std::move(h));
  }
  std::vector<MPoly> syz = syzygy_mpolys(eng, std::move(tagged), 1);
  std::vector<FreeModuleVector> out;
  out.reserve(syz.size());
  for (const MPoly& s : syz) out.push_back(eng.to_vector(s, k, 1));
  return out;
}

std::vector<FreeModuleVector> syzygy_basis(std::span<const FreeModuleVector> gens) {
  if (gens.empty()) return {};
  RingPtr ring = gens[0].ring();
  const std::uint32_t r = static_cast<std::uint32_t>(gens[0].rank());
  for (const FreeModuleVector& g : gens) {
    require_same_ring(ring, g.ring());
    if (g.rank() != r) throw Error("free module rank mismatch");
  }
  const std::uint32_t k = static_cast<std::uint32_t>(gens.size());
  Engine eng(ring, MonomialOrder::grevlex(), r + k);
  std::vector<MPoly> tagged;
  tagged.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    MPoly h = eng.from_vector(gens[i]);
    h.push_back({ring->field().one(), r + i, Monomial::one(ring->nvars())});
    tagged.push_back(std::move(h));
  }
  std::vector<MPoly> syz = syzygy_mpolys(eng, std::move(tagged), r);
  std::vector<FreeModuleVector> out;
  out.reserve(syz.size());
  for (const MPoly& s : syz) out.push_back(eng.to_vector(s, k, r));
  return out;
}

struct ModuleBasis::Impl {
  RingPtr ring;
  std::uint32_t rank = 0;
  std::vector<std::vector<MTerm>> basis;
};

ModuleBasis::ModuleBasis(std::span<const FreeModuleVector> gens) {
  if (gens.empty()) throw Error("module basis needs at least one generator");
  RingPtr ring = gens[0].ring();
  const std::uint32_t r = static_cast<std::uint32_t>(gens[0].rank());
  Engine eng(ring, MonomialOrder::grevlex(), r);
  std::vector<MPoly> input;
  input.reserve(gens.size());
  for (const FreeModuleVector& g : gens) {
    require_same_ring(ring, g.ring());
    if (g.rank() != r) throw Error("free module rank mismatch");
    input.push_back(eng.from_vector(g));
  }
  auto impl = std::make_shared<Impl>();
  impl->ring = ring;
  impl->rank = r;
  impl->basis = eng.reduced_basis(std::move(input));
  impl_ = std::move(impl);
}

bool ModuleBasis::contains(const FreeModuleVector& v) const {
  require_same_ring(impl_->ring, v.ring());
  if (v.rank() != impl_->rank) throw Error("free module rank mismatch");
  Engine eng(impl_->ring, MonomialOrder::grevlex(), impl_->rank);
  return eng.normal_form(eng.from_vector(v), impl_->basis).empty();
}

std::size_t ModuleBasis::rank() const { return impl_->rank; }

Polynomial apply_syzygy(const FreeModuleVector& v, std::span<const Polynomial> gens) {
  if (v.rank() != gens.size()) throw Error("syzygy length mismatch");
  Polynomial acc = Polynomial::zero(v.ring());
  for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + v.comp(i) * gens[i];
  return acc;
}

FreeModuleVector apply_syzygy(const FreeModuleVector& v, std::span<const FreeModuleVector> gens) {
  if (v.rank() != gens.size()) throw Error("syzygy length mismatch");
  if (gens.empty()) throw Error("empty generator list");
  FreeModuleVector acc = FreeModuleVector::zero(v.ring(), gens[0].rank());
  for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + gens[i].scaled(v.comp(i));
  return acc;
}

}  // namespace sopkit
