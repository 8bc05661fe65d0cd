#ifndef SOPKIT_SOP_HPP
#define SOPKIT_SOP_HPP

#include <cstdint>
#include <mutex>
#include <span>
#include <utility>

#include "sopkit/ideal.hpp"

namespace sopkit {

class FreeResolution;
struct ExtAnnihilators;

// Lazily filled, write-once caches attached to a presentation.
struct PresentationCaches {
  std::mutex mu;
  std::shared_ptr<const FreeResolution> resolution;
  std::shared_ptr<const ExtAnnihilators> ext_ann;
};

// Standard-graded quotient R = S/I of a polynomial ring over the chosen
// field, with the irrelevant maximal ideal playing the role of m. Ideals of
// R are represented by their preimages in S (always containing I).
class RingPresentation {
 public:
  static RingPresentation make(RingPtr ambient, Ideal defining, std::string name = "");

  const RingPtr& ambient() const;
  const Ideal& defining_ideal() const;
  const Ideal& irrelevant_ideal() const;  // (x_1, ..., x_N)
  int dim() const;
  const std::string& name() const;

  Ideal lift(const Ideal& J) const;       // I_R + J
  Ideal lift(const Polynomial& f) const;  // I_R + (f)

  PresentationCaches& caches() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// alpha in Lambda_{s,n}: positive parts summing to s + n - 1.
struct MultiIndex {
  std::vector<std::uint32_t> parts;
  std::uint32_t sum() const;
  std::string str() const;
};

// All of Lambda_{s,n} in lexicographic order; |Lambda_{s,n}| = C(n+s-2, s-1).
std::vector<MultiIndex> lambda_set(std::uint32_t s, std::uint32_t n);

// Throws on wrong length or an inhomogeneous element; otherwise reports
// whether dim S/(I_R + (xs)) = 0.
bool is_sop(const RingPresentation& R, std::span<const Polynomial> xs);

// Ordered system of parameters x_1, ..., x_d of R; validated on construction.
class Sop {
 public:
  Sop(RingPresentation R, std::vector<Polynomial> elements);

  const RingPresentation& ring() const { return R_; }
  std::size_t size() const { return xs_.size(); }
  const Polynomial& element(std::size_t i) const { return xs_.at(i); }  // x_{i+1}
  const std::vector<Polynomial>& elements() const { return xs_; }

  Ideal prefix(std::size_t s) const;                           // I_R + Q_s, Q_0 = (0)
  Ideal prefix_power(std::size_t s, std::uint32_t n) const;    // I_R + Q_s^n
  Ideal component(const MultiIndex& alpha) const;              // I_R + Q_s(alpha)

  std::string str() const;

 private:
  RingPresentation R_;
  std::vector<Polynomial> xs_;
};

// cap over alpha in Lambda_{s,n} of (I_R + Q_s(alpha)), as an ideal of S.
Ideal parametric_intersection(const Sop& sop, std::uint32_t s, std::uint32_t n);

// (I_R + Q_s^n) : x_{s+1} for 0 <= s <= d-1.
Ideal power_colon(const Sop& sop, std::uint32_t s, std::uint32_t n);

struct LimitClosureResult {
  Ideal value;
  std::uint32_t stabilized_at = 0;  // first n of the stable window
  bool capped = false;              // n cap hit before the window filled
};

// Ascending chain J_n = (I_R + (x_1^{n+1},...,x_s^{n+1})) : (x_1...x_s)^n,
// stopped once `window` consecutive steps agree (heuristic; no effective
// stabilization bound is available).
LimitClosureResult limit_closure(const Sop& sop, std::uint32_t s, std::uint32_t window = 2,
                                 std::uint32_t n_cap = 6);

// Ann(J/I) = I : J; requires I ⊆ J.
Ideal quotient_annihilator(const Ideal& I, const Ideal& J);

enum class SopStrategy { linear, linear_plus_powers };

// `count` distinct validated sops; deterministic in `seed`. Linear forms are
// drawn uniformly; linear_plus_powers raises accepted forms to a random
// exponent in {1,2,3}.
std::vector<Sop> sample_sops(const RingPresentation& R, std::size_t count, std::uint64_t seed,
                             SopStrategy strategy = SopStrategy::linear);

enum class AnnihilatorKind { b, c, d };

// Finite-sample over-approximation of the uniform annihilators: intersects
// Ann of the defining quotients over the given sops (and n <= n_max where
// the kind involves powers). Always contains the true ideal.
struct SampledAnnihilator {
  AnnihilatorKind kind;
  std::vector<Sop> sample;
  std::uint32_t n_max;
  Ideal value;
};

SampledAnnihilator sampled_annihilator(AnnihilatorKind kind, const RingPresentation& R,
                                       std::span<const Sop> sops, std::uint32_t n_max);

// Both sides of the telescoping identity
//   cap_{a=1..n} ((x^a) + (I^{n+1-a} : x^inf)) = sum_{a=0..n} x^a (I^{n-a} : x^inf)
// computed independently from the calculus primitives (I^0 = (1), x^0 = 1).
std::pair<Ideal, Ideal> key_lemma_sides(const Ideal& I, const Polynomial& x, std::uint32_t n);

// (x^n) cap x^m (I : x^inf)  vs  x^n (I : x^inf), for n >= m >= 0.
std::pair<Ideal, Ideal> saturation_intersection_sides(const Ideal& I, const Polynomial& x,
                                                      std::uint32_t n, std::uint32_t m);

// (x^m) cap (sum_{i<=m-2} x^i (I^{n-i}:x^inf) + x^{m-1}(I^{n+1-a}:x^inf))
// vs x^m (I^{n+1-a}:x^inf), for n+1 >= a > m >= 1.
std::pair<Ideal, Ideal> saturation_sum_sides(const Ideal& I, const Polynomial& x, std::uint32_t n,
                                             std::uint32_t m, std::uint32_t a);

}  // namespace sopkit

#endif
