#include "sopkit/sop.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "sopkit/cohomology.hpp"

namespace sopkit {

struct RingPresentation::Impl {
  RingPtr ambient;
  Ideal defining;
  Ideal irrelevant;
  int dim = 0;
  std::string name;
  mutable PresentationCaches caches;

  Impl(RingPtr a, Ideal d, Ideal m)
      : ambient(std::move(a)), defining(std::move(d)), irrelevant(std::move(m)) {}
};

RingPresentation RingPresentation::make(RingPtr ambient, Ideal defining, std::string name) {
  require_same_ring(ambient, defining.ring());
  for (const Polynomial& g : defining.generators()) {
    if (!g.is_homogeneous())
      throw Error("inhomogeneous defining generator: " + g.str());
    if (g.is_constant())
      throw Error("defining ideal contains a unit: " + g.str());
  }
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ambient->nvars(); ++i)
    vars.push_back(Polynomial::variable(ambient, i));
  Ideal m(ambient, std::move(vars));

  RingPresentation R;
  R.impl_ = std::make_shared<Impl>(ambient, std::move(defining), std::move(m));
  R.impl_->dim = krull_dimension(R.impl_->defining);
  R.impl_->name = std::move(name);
  return R;
}

const RingPtr& RingPresentation::ambient() const { return impl_->ambient; }
const Ideal& RingPresentation::defining_ideal() const { return impl_->defining; }
const Ideal& RingPresentation::irrelevant_ideal() const { return impl_->irrelevant; }
int RingPresentation::dim() const { return impl_->dim; }
const std::string& RingPresentation::name() const { return impl_->name; }
PresentationCaches& RingPresentation::caches() const { return impl_->caches; }

Ideal RingPresentation::lift(const Ideal& J) const { return ideal_sum(impl_->defining, J); }
Ideal RingPresentation::lift(const Polynomial& f) const {
  return ideal_sum(impl_->defining, Ideal::principal(f));
}

std::uint32_t MultiIndex::sum() const {
  std::uint32_t s = 0;
  for (std::uint32_t p : parts) s += p;
  return s;
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

std::vector<MultiIndex> lambda_set(std::uint32_t s, std::uint32_t n) {
  if (s < 1 || n < 1) throw Error("lambda_set requires s >= 1 and n >= 1");
  std::vector<MultiIndex> out;
  std::vector<std::uint32_t> cur(s, 1);
  const std::uint32_t total = s + n - 1;
  auto rec = [&](auto&& self, std::uint32_t i, std::uint32_t remaining) -> void {
    if (i + 1 == s) {
      cur[i] = remaining;
      out.push_back({cur});
      return;
    }
    // lexicographic: smallest first part first
    for (std::uint32_t v = 1; v + (s - i - 1) <= remaining; ++v) {
      cur[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

bool is_sop(const RingPresentation& R, std::span<const Polynomial> xs) {
  const std::size_t d = static_cast<std::size_t>(R.dim());
  if (xs.size() != d)
    throw Error("system of parameters must have length " + std::to_string(d));
  for (const Polynomial& x : xs) {
    require_same_ring(R.ambient(), x.ring());
    if (!x.is_homogeneous() || x.is_zero())
      throw Error("parameter element must be homogeneous and nonzero: " + x.str());
  }
  std::vector<Polynomial> gens(xs.begin(), xs.end());
  return krull_dimension(R.lift(Ideal(R.ambient(), std::move(gens)))) == 0;
}

Sop::Sop(RingPresentation R, std::vector<Polynomial> elements)
    : R_(std::move(R)), xs_(std::move(elements)) {
  if (!is_sop(R_, xs_)) throw Error("not a system of parameters: " + str());
}

Ideal Sop::prefix(std::size_t s) const {
  if (s > xs_.size()) throw Error("prefix length out of range");
  std::vector<Polynomial> gens(xs_.begin(), xs_.begin() + s);
  return R_.lift(Ideal(R_.ambient(), std::move(gens)));
}

Ideal Sop::prefix_power(std::size_t s, std::uint32_t n) const {
  if (s > xs_.size()) throw Error("prefix length out of range");
  std::vector<Polynomial> gens(xs_.begin(), xs_.begin() + s);
  return R_.lift(ideal_power(Ideal(R_.ambient(), std::move(gens)), n));
}

Ideal Sop::component(const MultiIndex& alpha) const {
  if (alpha.parts.size() > xs_.size()) throw Error("multi-index longer than the sop");
  std::vector<Polynomial> gens;
  gens.reserve(alpha.parts.size());
  for (std::size_t i = 0; i < alpha.parts.size(); ++i) {
    if (alpha.parts[i] < 1) throw Error("multi-index parts must be positive");
    gens.push_back(xs_[i].pow(alpha.parts[i]));
  }
  return R_.lift(Ideal(R_.ambient(), std::move(gens)));
}

std::string Sop::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (i) s += ", ";
    s += xs_[i].str();
  }
  return s + "]";
}

Ideal parametric_intersection(const Sop& sop, std::uint32_t s, std::uint32_t n) {
  if (s < 1 || s > sop.size()) throw Error("parametric_intersection: s out of range");
  if (n < 1) throw Error("parametric_intersection: n must be positive");
  std::vector<MultiIndex> lambda = lambda_set(s, n);
  Ideal acc = sop.component(lambda[0]);
  for (std::size_t i = 1; i < lambda.size(); ++i) acc = intersect(acc, sop.component(lambda[i]));
  return acc;
}

Ideal power_colon(const Sop& sop, std::uint32_t s, std::uint32_t n) {
  if (s >= sop.size()) throw Error("power_colon: s out of range");
  if (n < 1) throw Error("power_colon: n must be positive");
  return colon(sop.prefix_power(s, n), sop.element(s));
}

LimitClosureResult limit_closure(const Sop& sop, std::uint32_t s, std::uint32_t window,
                                 std::uint32_t n_cap) {
  if (s < 1 || s > sop.size()) throw Error("limit_closure: s out of range");
  if (window < 1 || n_cap < 1) throw Error("limit_closure: bad window or cap");
  const RingPresentation& R = sop.ring();
  Polynomial prod = Polynomial::constant(R.ambient(), R.ambient()->field().one());
  for (std::uint32_t i = 0; i < s; ++i) prod = prod * sop.element(i);

  Ideal current = Ideal::zero(R.ambient());
  std::uint32_t run_start = 1, run = 0;
  for (std::uint32_t n = 1; n <= n_cap; ++n) {
    std::vector<Polynomial> powers;
    powers.reserve(s);
    for (std::uint32_t i = 0; i < s; ++i) powers.push_back(sop.element(i).pow(n + 1));
    Ideal jn = colon(R.lift(Ideal(R.ambient(), std::move(powers))), prod.pow(n));
    if (n > 1 && equal(jn, current)) {
      ++run;
      if (run >= window) return {current, run_start, false};
    } else {
      current = jn;
      run_start = n;
      run = 0;
    }
  }
  return {current, run_start, true};
}

Ideal quotient_annihilator(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  for (const Polynomial& g : I.generators())
    if (!member(g, J))
      throw Error("quotient_annihilator: containment I ⊆ J fails at generator " + g.str());
  return colon(I, J);
}

namespace {

Polynomial random_linear_form(const RingPtr& ring, std::mt19937_64& rng) {
  const Field& F = ring->field();
  std::vector<Term> terms;
  for (std::size_t attempt = 0; attempt < 100; ++attempt) {
    terms.clear();
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      Coeff c = F.is_prime_field()
                    ? F.from_int(static_cast<long long>(rng() % F.characteristic()))
                    : F.from_int(static_cast<long long>(rng() % 21) - 10);
      if (!F.is_zero(c)) terms.push_back({std::move(c), Monomial::var(ring->nvars(), i)});
    }
    if (!terms.empty()) return Polynomial::from_terms(ring, std::move(terms));
  }
  throw Error("failed to draw a nonzero linear form");
}

}  // namespace

std::vector<Sop> sample_sops(const RingPresentation& R, std::size_t count, std::uint64_t seed,
                             SopStrategy strategy) {
  if (count < 1) throw Error("sample_sops: count must be positive");
  const std::size_t d = static_cast<std::size_t>(R.dim());
  std::mt19937_64 rng(seed);
  std::vector<Sop> out;
  std::set<std::string> seen;
  std::size_t stale = 0;
  while (out.size() < count) {
    std::vector<Polynomial> xs;
    for (std::size_t slot = 0; slot < d; ++slot) {
      bool placed = false;
      for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
        Polynomial candidate = random_linear_form(R.ambient(), rng);
        if (strategy == SopStrategy::linear_plus_powers)
          candidate = candidate.pow(1 + static_cast<std::uint32_t>(rng() % 3));
        std::vector<Polynomial> part = xs;
        part.push_back(candidate);
        Ideal test = R.lift(Ideal(R.ambient(), part));
        if (krull_dimension(test) == static_cast<int>(d - slot - 1)) {
          xs.push_back(std::move(candidate));
          placed = true;
        }
      }
      if (!placed)
        throw Error("sample_sops: retry budget exhausted (degenerate ring or small field?)");
    }
    Sop sop(R, std::move(xs));
    if (seen.insert(sop.str()).second) {
      out.push_back(std::move(sop));
      stale = 0;
    } else if (++stale > 100) {
      throw Error("sample_sops: cannot find enough distinct sops");
    }
  }
  return out;
}

SampledAnnihilator sampled_annihilator(AnnihilatorKind kind, const RingPresentation& R,
                                       std::span<const Sop> sops, std::uint32_t n_max) {
  if (sops.empty()) throw Error("sampled_annihilator: empty sample");
  if (n_max < 1) throw Error("sampled_annihilator: n_max must be positive");
  const std::size_t d = static_cast<std::size_t>(R.dim());
  Ideal acc = Ideal::unit(R.ambient());
  auto meet = [&](const Ideal& t) { acc = acc.is_unit() ? t : intersect(acc, t); };
  for (const Sop& sop : sops) {
    switch (kind) {
      case AnnihilatorKind::b:
        for (std::size_t s = 0; s < d; ++s) {
          Ideal q = sop.prefix(s);
          meet(quotient_annihilator(q, colon(q, sop.element(s))));
        }
        break;
      case AnnihilatorKind::c:
        for (std::size_t s = 0; s < d; ++s)
          for (std::uint32_t n = 1; n <= n_max; ++n) {
            Ideal q = sop.prefix_power(s, n);
            meet(quotient_annihilator(q, colon(q, sop.element(s))));
          }
        break;
      case AnnihilatorKind::d:
        for (std::size_t s = 1; s <= d; ++s)
          for (std::uint32_t n = 1; n <= n_max; ++n) {
            Ideal q = sop.prefix_power(s, n);
            meet(quotient_annihilator(
                q, parametric_intersection(sop, static_cast<std::uint32_t>(s), n)));
          }
        break;
    }
  }
  return {kind, std::vector<Sop>(sops.begin(), sops.end()), n_max, std::move(acc)};
}

namespace {

// I^k : x^inf for k = 0..n, computed once
std::vector<Ideal> saturated_powers(const Ideal& I, const Polynomial& x, std::uint32_t n) {
  std::vector<Ideal> sats;
  sats.reserve(n + 1);
  for (std::uint32_t k = 0; k <= n; ++k)
    sats.push_back(k == 0 ? Ideal::unit(I.ring()) : saturate(ideal_power(I, k), x));
  return sats;
}

Ideal principal_power(const Polynomial& x, std::uint32_t a) {
  return Ideal::principal(x.pow(a));
}

}  // namespace

std::pair<Ideal, Ideal> key_lemma_sides(const Ideal& I, const Polynomial& x, std::uint32_t n) {
  require_same_ring(I.ring(), x.ring());
  if (x.is_zero()) throw Error("key_lemma_sides: x must be nonzero");
  if (n < 1) throw Error("key_lemma_sides: n must be positive");
  std::vector<Ideal> sats = saturated_powers(I, x, n);

  Ideal lhs = Ideal::unit(I.ring());
  for (std::uint32_t a = 1; a <= n; ++a) {
    Ideal piece = ideal_sum(principal_power(x, a), sats[n + 1 - a]);
    lhs = (a == 1) ? piece : intersect(lhs, piece);
  }
  Ideal rhs = Ideal::zero(I.ring());
  for (std::uint32_t a = 0; a <= n; ++a)
    rhs = ideal_sum(rhs, ideal_product(principal_power(x, a), sats[n - a]));
  return {std::move(lhs), std::move(rhs)};
}

std::pair<Ideal, Ideal> saturation_intersection_sides(const Ideal& I, const Polynomial& x,
                                                      std::uint32_t n, std::uint32_t m) {
  require_same_ring(I.ring(), x.ring());
  if (x.is_zero()) throw Error("x must be nonzero");
  if (m > n) throw Error("requires n >= m");
  Ideal sat = saturate(I, x);
  Ideal lhs = intersect(principal_power(x, n), ideal_product(principal_power(x, m), sat));
  Ideal rhs = ideal_product(principal_power(x, n), sat);
  return {std::move(lhs), std::move(rhs)};
}

std::pair<Ideal, Ideal> saturation_sum_sides(const Ideal& I, const Polynomial& x, std::uint32_t n,
                                             std::uint32_t m, std::uint32_t a) {
  require_same_ring(I.ring(), x.ring());
  if (x.is_zero()) throw Error("x must be nonzero");
  if (!(n + 1 >= a && a > m && m >= 1)) throw Error("requires n+1 >= a > m >= 1");
  std::vector<Ideal> sats = saturated_powers(I, x, n);
  Ideal sum = Ideal::zero(I.ring());
  for (std::uint32_t i = 0; i + 2 <= m; ++i)
    sum = ideal_sum(sum, ideal_product(principal_power(x, i), sats[n - i]));
  sum = ideal_sum(sum, ideal_product(principal_power(x, m - 1), sats[n + 1 - a]));
  Ideal lhs = intersect(principal_power(x, m), sum);
  Ideal rhs = ideal_product(principal_power(x, m), sats[n + 1 - a]);
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace sopkit
