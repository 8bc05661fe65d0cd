#ifndef SOPKIT_COHOMOLOGY_HPP
#define SOPKIT_COHOMOLOGY_HPP

#include "sopkit/sop.hpp"

namespace sopkit {

// Dense matrix over the polynomial ring; columns are module elements.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix from_columns(RingPtr ring, std::size_t rows,
                                 std::span<const FreeModuleVector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return a_.at(r * cols_ + c); }
  Polynomial& at(std::size_t r, std::size_t c) { return a_.at(r * cols_ + c); }

  FreeModuleVector col(std::size_t c) const;
  std::vector<FreeModuleVector> columns() const;
  // rows as elements of S^cols (= columns of the transpose)
  std::vector<FreeModuleVector> rows_as_vectors() const;

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> a_;
};

// Graded free resolution 0 -> F_L -> ... -> F_1 -> F_0 = S of S/I_R.
// differentials()[j] is d_{j+1} : F_{j+1} -> F_j. Generating sets are pruned
// at every step, so the resolution is minimal and its length is at most the
// number of ambient variables.
class FreeResolution {
 public:
  FreeResolution(RingPtr ring, std::vector<PolyMatrix> diffs);

  const RingPtr& ring() const { return ring_; }
  const std::vector<PolyMatrix>& differentials() const { return diffs_; }
  std::size_t length() const { return diffs_.size(); }
  std::size_t rank(std::size_t j) const;  // rank of F_j

 private:
  RingPtr ring_;
  std::vector<PolyMatrix> diffs_;
};

// Computed once per presentation and cached.
const FreeResolution& free_resolution(const RingPresentation& R);

// d_{j-1} o d_j = 0 and ker d_j = im d_{j+1} at every step, re-certified by
// syzygy computation; also checks that d_1 presents the defining ideal.
bool certify_resolution(const RingPresentation& R);

// Ann Ext^j_S(R, S) computed on the dualized resolution:
// Ext^j = ker(d_{j+1}^T) / im(d_j^T), Ann = cap over kernel generators g of
// (im : g). Ann(0) = (1). By graded local duality this equals
// Ann H^{N-j}_m(R) for the irrelevant maximal ideal m.
Ideal ext_annihilator(const RingPresentation& R, std::uint32_t j);

// a[i] = Ann H^i_m(R) for 0 <= i < d, via Ext^{N-i}; product in order.
struct ExtAnnihilators {
  std::vector<Ideal> a;
  Ideal product;
};

const ExtAnnihilators& a_ideals(const RingPresentation& R);

// Independent route for i = 0: H^0_m(S/A) = (A : m^inf)/A, so
// Ann H^0 = A : (A : m^inf). A must be proper.
Ideal h0_annihilator(const Ideal& A);

// Degreewise dimensions of H^i_m(R) on a small window, computed by linear
// algebra on the Cech complex of the variables truncated at denominator
// exponent `cap`. Re-run at cap+1; disagreement flags the result unstable.
struct CechDims {
  std::vector<std::pair<int, std::size_t>> dims;  // (degree, dim_k)
  bool stable = true;
};

CechDims cech_dims(const RingPresentation& R, std::uint32_t i, int lo, int hi, std::uint32_t cap);

}  // namespace sopkit

#endif
