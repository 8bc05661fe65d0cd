#include "sopkit/cohomology.hpp"

#include <algorithm>
#include <map>

namespace sopkit {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      a_(rows * cols, Polynomial::zero(ring_)) {}

PolyMatrix PolyMatrix::from_columns(RingPtr ring, std::size_t rows,
                                    std::span<const FreeModuleVector> cols) {
  PolyMatrix m(std::move(ring), rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].rank() != rows) throw Error("column rank mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c].comp(r);
  }
  return m;
}

FreeModuleVector PolyMatrix::col(std::size_t c) const {
  std::vector<Polynomial> comps;
  comps.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) comps.push_back(at(r, c));
  return FreeModuleVector(ring_, std::move(comps));
}

std::vector<FreeModuleVector> PolyMatrix::columns() const {
  std::vector<FreeModuleVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(col(c));
  return out;
}

std::vector<FreeModuleVector> PolyMatrix::rows_as_vectors() const {
  std::vector<FreeModuleVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::vector<Polynomial> comps;
    comps.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) comps.push_back(at(r, c));
    out.push_back(FreeModuleVector(ring_, std::move(comps)));
  }
  return out;
}

FreeResolution::FreeResolution(RingPtr ring, std::vector<PolyMatrix> diffs)
    : ring_(std::move(ring)), diffs_(std::move(diffs)) {}

std::size_t FreeResolution::rank(std::size_t j) const {
  if (j == 0) return 1;
  if (j <= diffs_.size()) return diffs_[j - 1].cols();
  return 0;
}

namespace {

// Drop generators that occur in the span of the others, detected by syzygies
// with a unit (nonzero constant) entry; for graded input this yields a
// minimal generating set.
std::vector<FreeModuleVector> prune_generators(std::vector<FreeModuleVector> gens) {
  std::erase_if(gens, [](const FreeModuleVector& v) { return v.is_zero(); });
  while (gens.size() > 1) {
    auto syz = syzygy_basis(std::span<const FreeModuleVector>(gens));
    std::size_t victim = gens.size();
    for (const FreeModuleVector& v : syz) {
      for (std::size_t j = 0; j < v.rank() && victim == gens.size(); ++j)
        if (!v.comp(j).is_zero() && v.comp(j).is_constant()) victim = j;
      if (victim != gens.size()) break;
    }
    if (victim == gens.size()) break;
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(victim));
  }
  return gens;
}

const FreeResolution& cache_resolution(const RingPresentation& R,
                                       std::shared_ptr<const FreeResolution> res) {
  PresentationCaches& c = R.caches();
  std::lock_guard<std::mutex> lock(c.mu);
  if (!c.resolution) c.resolution = std::move(res);
  return *c.resolution;
}

}  // namespace

const FreeResolution& free_resolution(const RingPresentation& R) {
  {
    PresentationCaches& c = R.caches();
    std::lock_guard<std::mutex> lock(c.mu);
    if (c.resolution) return *c.resolution;
  }

  const RingPtr& S = R.ambient();
  const std::size_t N = S->nvars();
  std::vector<PolyMatrix> diffs;

  std::vector<FreeModuleVector> cols;
  for (const Polynomial& g : R.defining_ideal().generators())
    cols.push_back(FreeModuleVector(S, {g}));
  cols = prune_generators(std::move(cols));

  std::size_t rank = 1;
  while (!cols.empty()) {
    diffs.push_back(PolyMatrix::from_columns(S, rank, cols));
    if (diffs.size() > N)
      throw Error("internal: resolution exceeded the global dimension bound");
    rank = cols.size();
    cols = prune_generators(syzygy_basis(std::span<const FreeModuleVector>(cols)));
  }
  return cache_resolution(R, std::make_shared<FreeResolution>(S, std::move(diffs)));
}

bool certify_resolution(const RingPresentation& R) {
  const FreeResolution& res = free_resolution(R);
  const RingPtr& S = R.ambient();
  const std::size_t L = res.length();
  if (L == 0) return R.defining_ideal().is_zero();

  // d_1 presents the defining ideal
  std::vector<Polynomial> first;
  for (std::size_t c = 0; c < res.differentials()[0].cols(); ++c)
    first.push_back(res.differentials()[0].at(0, c));
  if (!equal(Ideal(S, first), R.defining_ideal())) return false;

  for (std::size_t j = 1; j < L; ++j) {
    const PolyMatrix& dj = res.differentials()[j - 1];
    const PolyMatrix& dnext = res.differentials()[j];
    std::vector<FreeModuleVector> dj_cols = dj.columns();
    // composition d_j o d_{j+1} = 0
    for (std::size_t c = 0; c < dnext.cols(); ++c) {
      if (!apply_syzygy(dnext.col(c), std::span<const FreeModuleVector>(dj_cols)).is_zero())
        return false;
    }
    // exactness: every syzygy of d_j's columns lies in the image of d_{j+1}
    auto syz = syzygy_basis(std::span<const FreeModuleVector>(dj_cols));
    if (!syz.empty()) {
      std::vector<FreeModuleVector> im_cols = dnext.columns();
      ModuleBasis im{std::span<const FreeModuleVector>(im_cols)};
      for (const FreeModuleVector& v : syz)
        if (!im.contains(v)) return false;
    }
  }
  // the last differential is injective
  std::vector<FreeModuleVector> last_cols = res.differentials()[L - 1].columns();
  return syzygy_basis(std::span<const FreeModuleVector>(last_cols)).empty();
}

namespace {

// (U : g) = { f : f*g in U } for a submodule U of S^r; the first components
// of the syzygies of [g, u_1, ..., u_t] generate it.
Ideal module_colon(const RingPtr& S, std::span<const FreeModuleVector> im,
                   const FreeModuleVector& g) {
  if (g.is_zero()) return Ideal::unit(S);
  std::vector<FreeModuleVector> gens;
  gens.reserve(1 + im.size());
  gens.push_back(g);
  gens.insert(gens.end(), im.begin(), im.end());
  auto syz = syzygy_basis(std::span<const FreeModuleVector>(gens));
  std::vector<Polynomial> firsts;
  firsts.reserve(syz.size());
  for (const FreeModuleVector& v : syz) firsts.push_back(v.comp(0));
  return Ideal(S, std::move(firsts));
}

}  // namespace

Ideal ext_annihilator(const RingPresentation& R, std::uint32_t j) {
  const RingPtr& S = R.ambient();
  const std::size_t N = S->nvars();
  if (j > N) throw Error("ext_annihilator: index out of range");
  const FreeResolution& res = free_resolution(R);
  const std::size_t L = res.length();
  if (j > L) return Ideal::unit(S);  // Ext^j = 0

  const std::size_t rj = res.rank(j);

  std::vector<FreeModuleVector> kernel;
  if (j == L) {
    for (std::size_t i = 0; i < rj; ++i) kernel.push_back(FreeModuleVector::unit(S, rj, i));
  } else {
    // ker(d_{j+1}^T) = syzygies of the rows of d_{j+1}
    std::vector<FreeModuleVector> rows = res.differentials()[j].rows_as_vectors();
    kernel = syzygy_basis(std::span<const FreeModuleVector>(rows));
  }

  std::vector<FreeModuleVector> image;  // im(d_j^T) = rows of d_j
  if (j > 0) image = res.differentials()[j - 1].rows_as_vectors();

  Ideal acc = Ideal::unit(S);
  for (const FreeModuleVector& g : kernel) {
    Ideal c = module_colon(S, image, g);
    acc = acc.is_unit() ? c : (c.is_unit() ? acc : intersect(acc, c));
  }
  return acc;
}

const ExtAnnihilators& a_ideals(const RingPresentation& R) {
  {
    PresentationCaches& c = R.caches();
    std::lock_guard<std::mutex> lock(c.mu);
    if (c.ext_ann) return *c.ext_ann;
  }
  const int d = R.dim();
  if (d < 1) throw Error("a_ideals: presentation must have positive dimension");
  const std::uint32_t N = static_cast<std::uint32_t>(R.ambient()->nvars());

  auto out = std::make_shared<ExtAnnihilators>(
      ExtAnnihilators{{}, Ideal::unit(R.ambient())});
  for (int i = 0; i < d; ++i) {
    Ideal ai = ext_annihilator(R, N - static_cast<std::uint32_t>(i));
    out->product = ideal_product(out->product, ai);
    out->a.push_back(std::move(ai));
  }
  PresentationCaches& c = R.caches();
  std::lock_guard<std::mutex> lock(c.mu);
  if (!c.ext_ann) c.ext_ann = std::move(out);
  return *c.ext_ann;
}

Ideal h0_annihilator(const Ideal& A) {
  if (A.is_unit()) throw Error("h0_annihilator: ideal must be proper");
  const RingPtr& S = A.ring();
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < S->nvars(); ++i) vars.push_back(Polynomial::variable(S, i));
  Ideal m(S, std::move(vars));
  return quotient_annihilator(A, saturate(A, m));
}

namespace {

// vector-space basis of the degree-D piece of S/I_R: standard monomials
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::size_t nvars, int deg) {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  for (Monomial& m : monomials_of_degree(nvars, static_cast<std::uint32_t>(deg))) {
    bool standard = true;
    for (const Monomial& lt : gb.leading_monomials())
      if (lt.divides(m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(std::move(m));
  }
  return out;
}

std::size_t matrix_rank(std::vector<std::vector<Coeff>> m, const Field& F) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && F.is_zero(m[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    Coeff inv = F.inv(m[rank][c]);
    for (std::size_t cc = c; cc < cols; ++cc) m[rank][cc] = F.mul(m[rank][cc], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || F.is_zero(m[r][c])) continue;
      Coeff factor = m[r][c];
      for (std::size_t cc = c; cc < cols; ++cc)
        m[r][cc] = F.sub(m[r][cc], F.mul(factor, m[rank][cc]));
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = start; v + (k - depth - 1) < n; ++v) {
      cur[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// one cohomological level of the truncated Cech complex in one degree
struct CechLevel {
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::vector<Monomial>> basis;  // per subset
  std::vector<std::size_t> offset;           // per subset
  std::size_t total = 0;
};

CechLevel cech_level(const GroebnerBasis& gb, std::size_t nvars, std::size_t size, int t,
                     std::uint32_t cap) {
  CechLevel lvl;
  lvl.subsets = subsets_of_size(nvars, size);
  for (const auto& S : lvl.subsets) {
    int deg = t + static_cast<int>(cap) * static_cast<int>(S.size());
    lvl.basis.push_back(standard_monomials(gb, nvars, deg));
    lvl.offset.push_back(lvl.total);
    lvl.total += lvl.basis.back().size();
  }
  return lvl;
}

// differential C^(size) -> C^(size+1): multiplication by x_k^cap with signs
std::vector<std::vector<Coeff>> cech_matrix(const RingPresentation& R, const GroebnerBasis& gb,
                                            const CechLevel& from, const CechLevel& to,
                                            std::uint32_t cap) {
  const RingPtr& S = R.ambient();
  const Field& F = S->field();
  std::vector<std::vector<Coeff>> m(to.total, std::vector<Coeff>(from.total, F.zero()));
  std::map<std::vector<std::size_t>, std::size_t> to_index;
  for (std::size_t i = 0; i < to.subsets.size(); ++i) to_index[to.subsets[i]] = i;

  for (std::size_t si = 0; si < from.subsets.size(); ++si) {
    const auto& sub = from.subsets[si];
    for (std::size_t k = 0; k < S->nvars(); ++k) {
      if (std::find(sub.begin(), sub.end(), k) != sub.end()) continue;
      std::vector<std::size_t> target = sub;
      target.insert(std::upper_bound(target.begin(), target.end(), k), k);
      std::size_t ti = to_index.at(target);
      std::size_t pos_k = static_cast<std::size_t>(
          std::lower_bound(target.begin(), target.end(), k) - target.begin());
      bool negative = (pos_k % 2) != 0;

      std::map<std::vector<std::uint32_t>, std::size_t> mono_index;
      for (std::size_t b = 0; b < to.basis[ti].size(); ++b)
        mono_index[to.basis[ti][b].exponents()] = b;

      Polynomial xk_cap = Polynomial::variable(S, k, cap);
      for (std::size_t b = 0; b < from.basis[si].size(); ++b) {
        Polynomial image = normal_form(
            Polynomial::monomial_term(S, F.one(), from.basis[si][b]) * xk_cap, gb);
        for (const Term& term : image.terms()) {
          auto it = mono_index.find(term.mono.exponents());
          if (it == mono_index.end()) throw Error("internal: non-standard monomial in Cech map");
          Coeff c = negative ? F.neg(term.coeff) : term.coeff;
          std::size_t row = to.offset[ti] + it->second;
          std::size_t col = from.offset[si] + b;
          m[row][col] = F.add(m[row][col], c);
        }
      }
    }
  }
  return m;
}

std::size_t cech_dim_at(const RingPresentation& R, std::uint32_t i, int t, std::uint32_t cap) {
  const RingPtr& S = R.ambient();
  const std::size_t N = S->nvars();
  const GroebnerBasis& gb = R.defining_ideal().gb();

  CechLevel mid = cech_level(gb, N, i, t, cap);
  std::size_t rank_out = 0, rank_in = 0;
  if (i < N) {
    CechLevel up = cech_level(gb, N, i + 1, t, cap);
    if (mid.total && up.total)
      rank_out = matrix_rank(cech_matrix(R, gb, mid, up, cap), S->field());
  }
  if (i > 0) {
    CechLevel down = cech_level(gb, N, i - 1, t, cap);
    if (down.total && mid.total)
      rank_in = matrix_rank(cech_matrix(R, gb, down, mid, cap), S->field());
  }
  return mid.total - rank_out - rank_in;
}

}  // namespace

CechDims cech_dims(const RingPresentation& R, std::uint32_t i, int lo, int hi, std::uint32_t cap) {
  const std::size_t N = R.ambient()->nvars();
  if (N > 4) throw Error("cech_dims: supported for at most 4 variables");
  if (i > N) throw Error("cech_dims: cohomological index out of range");
  if (lo > hi) throw Error("cech_dims: empty degree window");
  if (cap < 1) throw Error("cech_dims: exponent cap must be positive");

  CechDims out;
  for (int t = lo; t <= hi; ++t) {
    std::size_t d0 = cech_dim_at(R, i, t, cap);
    std::size_t d1 = cech_dim_at(R, i, t, cap + 1);
    if (d0 != d1) out.stable = false;
    out.dims.push_back({t, d1});
  }
  return out;
}

}  // namespace sopkit
