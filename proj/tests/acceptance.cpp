// Acceptance suite: one line per criterion, exact ideal arithmetic
// throughout (no tolerances). Exit code = number of failed criteria.

#include <chrono>
#include <iostream>

#include "sopkit/verifier.hpp"

using namespace sopkit;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, double seconds) {
  std::cout << "ACCEPTANCE " << index << " " << name << " " << (pass ? "PASS" : "FAIL") << " ("
            << seconds << "s)\n"
            << std::flush;
  if (!pass) ++failures;
}

template <typename Fn>
void criterion(int index, const std::string& name, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  try {
    pass = fn();
  } catch (const std::exception& e) {
    std::cout << "  exception: " << e.what() << "\n";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(index, name, pass, secs);
}

std::size_t fail_count(const std::vector<CheckResult>& rs) {
  std::size_t n = 0;
  for (const CheckResult& r : rs)
    if (r.status == CheckResult::Status::fail) ++n;
  return n;
}

}  // namespace

int main() {
  Corpus corpus = Corpus::standard();
  const RingPresentation& regular3 = *corpus.find("regular3");
  const RingPresentation& nonCM1 = *corpus.find("nonCM1");
  const RingPresentation& two_planes = *corpus.find("two_planes");
  RingPtr S3 = regular3.ambient();

  // 1: both telescoping-saturation identities, 200 randomized instances
  criterion(1, "saturation-intersection-identities", [&] {
    auto results = check_lemma31_suite(S3, 200, 42, "regular3");
    return results.size() == 400 && fail_count(results) == 0;
  });

  // 2: the key intersection-equals-sum identity, 200 instances, n <= 4
  criterion(2, "telescoping-identity-instances", [&] {
    auto results = check_lemma32_suite(S3, 200, 42, "regular3", 4);
    return results.size() == 200 && fail_count(results) == 0;
  });

  // 3: parametric decomposition is exact over the regular ring
  criterion(3, "parametric-decomposition-regular", [&] {
    std::vector<Sop> sops;
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < S3->nvars(); ++i) vars.push_back(Polynomial::variable(S3, i));
    sops.push_back(Sop(regular3, std::move(vars)));
    for (Sop& s : sample_sops(regular3, 5, 42)) sops.push_back(std::move(s));
    auto results = check_remark33(regular3, sops, 4);
    return results.size() == 6 * 3 * 4 && fail_count(results) == 0;
  });

  // 4: colon and decomposition annihilator containments
  criterion(4, "annihilator-power-containments", [&] {
    auto s1 = sample_sops(nonCM1, 5, 42);
    auto s2 = sample_sops(two_planes, 5, 42);
    auto r1 = check_main_theorem(nonCM1, s1, 3);
    auto r2 = check_main_theorem(two_planes, s2, 3);
    return !r1.empty() && !r2.empty() && fail_count(r1) == 0 && fail_count(r2) == 0;
  });

  // 5: a(R) annihilates every sampled linear-relation quotient
  criterion(5, "linear-relation-annihilation", [&] {
    for (const RingPresentation& R : corpus.rings) {
      auto sops = sample_sops(R, 5, 42);
      if (fail_count(check_schenzel(R, sops)) != 0) return false;
    }
    return true;
  });

  // 6: Ext route vs saturation route vs Cech route
  criterion(6, "cohomology-cross-validation", [&] {
    for (const RingPresentation& R : corpus.rings) {
      std::uint32_t N = static_cast<std::uint32_t>(R.ambient()->nvars());
      if (!equal(ext_annihilator(R, N), h0_annihilator(R.defining_ideal()))) return false;
    }
    for (const char* name : {"regular2", "regular3", "hypersurface"})
      for (const Ideal& ai : a_ideals(*corpus.find(name)).a)
        if (!ai.is_unit()) return false;
    const ExtAnnihilators& tp = a_ideals(two_planes);
    if (!equal(tp.a[1], two_planes.irrelevant_ideal())) return false;
    CechDims h1 = cech_dims(two_planes, 1, -3, 3, 3);
    if (!h1.stable) return false;
    for (auto [t, dim] : h1.dims)
      if (dim != (t == 0 ? 1u : 0u)) return false;
    return true;
  });

  // 7: annihilation of the local cohomology of R/Q_s^n on the two planes
  criterion(7, "parameter-power-cohomology", [&] {
    auto sops = sample_sops(two_planes, 5, 42);
    auto results = check_cor44_45(two_planes, sops, 3, 1);
    std::size_t cor44 = 0, cor45 = 0;
    for (const CheckResult& r : results) {
      if (r.status == CheckResult::Status::fail) return false;
      if (r.claim == "cor4.4" && r.s == 1 && r.i == 0) ++cor44;
      if (r.claim == "cor4.5" && r.s == 1 && r.i == 0) ++cor45;
    }
    return cor44 == 5 * 3 && cor45 == 5 * 3;
  });

  // 8: permutation-invariant bases and a byte-reproducible full run
  criterion(8, "engine-determinism", [&] {
    InstanceGen gen(S3, 20240815);
    for (int iter = 0; iter < 200; ++iter) {
      std::size_t count = 1 + gen.uniform(4);
      std::vector<Polynomial> gens;
      for (std::size_t i = 0; i < count; ++i) gens.push_back(gen.random_mono_or_binomial(3));
      auto gb1 = reduced_gb(gens, MonomialOrder::grevlex());
      std::vector<Polynomial> shuffled = gens;
      for (std::size_t i = shuffled.size(); i > 1; --i)
        std::swap(shuffled[i - 1], shuffled[gen.uniform(i)]);
      auto gb2 = reduced_gb(shuffled, MonomialOrder::grevlex());
      if (gb1.generators().size() != gb2.generators().size()) return false;
      for (std::size_t i = 0; i < gb1.generators().size(); ++i)
        if (!(gb1.generators()[i] == gb2.generators()[i])) return false;
    }

    VerifyConfig config;
    config.seed = 42;
    config.rings = corpus.names();
    std::string run1 = run_corpus(config, corpus).render();
    std::string run2 = run_corpus(config, corpus).render();
    return !run1.empty() && run1 == run2;
  });

  std::cout << (failures == 0 ? "ACCEPTANCE SUITE PASS" : "ACCEPTANCE SUITE FAIL") << " ("
            << failures << " failed)\n";
  return failures;
}
