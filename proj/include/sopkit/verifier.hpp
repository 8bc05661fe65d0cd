#ifndef SOPKIT_VERIFIER_HPP
#define SOPKIT_VERIFIER_HPP

#include <optional>

#include "sopkit/cohomology.hpp"
#include "sopkit/randgen.hpp"

namespace sopkit {

// One verdict for one claim instance. FAIL always carries a witness: an
// element of the left side that is provably outside the right side.
struct CheckResult {
  enum class Status { pass, fail, skipped };

  std::string claim;
  std::string ring;
  int sop = 0;
  int s = 0;
  int n = 0;
  int i = -1;  // printed only when >= 0
  Status status = Status::pass;
  std::optional<Polynomial> witness;
  std::string note;  // skip reason or heuristic flag
  // ideals behind a FAIL, kept so witnesses can be re-certified
  std::shared_ptr<const Ideal> lhs, rhs;

  std::string line() const;
};

// Named presentations exercised by every check run.
struct Corpus {
  std::vector<RingPresentation> rings;

  static Corpus standard(std::uint32_t p = kDefaultPrime);
  const RingPresentation* find(std::string_view name) const;
  std::vector<std::string> names() const;
};

struct VerifyConfig {
  std::uint64_t seed = 42;
  std::uint32_t sops = 5;
  std::uint32_t n_max = 3;
  std::uint32_t lemma_instances = 200;
  std::uint32_t limit_window = 2;
  std::uint32_t limit_nmax = 6;
  std::uint32_t buchsbaum_k = 1;
  std::uint32_t jobs = 0;  // 0: use the hardware concurrency, capped at 8
  bool weaken_exponent = false;
  std::vector<std::string> rings;  // corpus selection by name
};

struct VerificationReport {
  std::vector<CheckResult> results;
  std::uint64_t seed = 0;
  std::uint32_t p = 0;

  std::size_t count(CheckResult::Status s) const;
  bool all_pass() const { return count(CheckResult::Status::fail) == 0; }
  // CHECK lines followed by a one-line JSON summary; no timestamps, so equal
  // configurations render byte-identically.
  std::string render() const;
};

// Theorem instances: a(R)^E (Q_s^n : x_{s+1}) ⊆ Q_s^n with E = 2^{d-2}
// (E = 1 for d = 1), and a(R)^{2^{d-1}} (cap Q_s(alpha)) ⊆ Q_s^n.
std::vector<CheckResult> check_main_theorem(const RingPresentation& R, std::span<const Sop> sops,
                                            std::uint32_t n_max, bool weaken = false);

// a(R) annihilates (Q_s : x_{s+1})/Q_s.
std::vector<CheckResult> check_schenzel(const RingPresentation& R, std::span<const Sop> sops);

// Per-sop b_s * d_s terms annihilate (Q_s^n : x_{s+1})/Q_s^n.
std::vector<CheckResult> check_lemma26(const RingPresentation& R, std::span<const Sop> sops,
                                       std::uint32_t n_max);

// The b-sample of R annihilates the linear-relation quotients of
// R/(x_1,...,x_i), with fresh sops drawn in the quotient.
std::vector<CheckResult> check_lemma41(const RingPresentation& R, std::span<const Sop> sops,
                                       std::uint32_t quotient_sops, std::uint64_t seed);

// Annihilation of H^i_m(R/Q_s^n) by a(R)^{2^{s-1}} and by m^{k d 2^{s-1}}.
std::vector<CheckResult> check_cor44_45(const RingPresentation& R, std::span<const Sop> sops,
                                        std::uint32_t n_max, std::uint32_t k_buchsbaum);

// 1 is never in the limit closure.
std::vector<CheckResult> check_qlim(const RingPresentation& R, std::span<const Sop> sops,
                                    std::uint32_t window, std::uint32_t n_cap);

// Randomized identity suites in GF(p)[x,y,z].
std::vector<CheckResult> check_lemma31_suite(const RingPtr& S, std::uint32_t count,
                                             std::uint64_t seed, const std::string& ring_id);
std::vector<CheckResult> check_lemma32_suite(const RingPtr& S, std::uint32_t count,
                                             std::uint64_t seed, const std::string& ring_id,
                                             std::uint32_t max_n = 4);

// Parametric decomposition is an equality over a regular ring: the variable
// sop plus sampled linear sops, s <= d, n <= max_n.
std::vector<CheckResult> check_remark33(const RingPresentation& R, std::span<const Sop> sops,
                                        std::uint32_t max_n = 4);

VerificationReport run_corpus(const VerifyConfig& config, const Corpus& corpus);

}  // namespace sopkit

#endif
