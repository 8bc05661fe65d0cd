#include "sopkit/verifier.hpp"

#include <algorithm>
#include <condition_variable>
#include <functional>
#include <queue>
#include <thread>

namespace sopkit {

namespace {

std::uint32_t pow2(std::uint32_t e) { return 1u << e; }

CheckResult containment_check(std::string claim, const std::string& ring, int sop, int s, int n,
                              int i, const Ideal& lhs, const Ideal& rhs) {
  CheckResult r;
  r.claim = std::move(claim);
  r.ring = ring;
  r.sop = sop;
  r.s = s;
  r.n = n;
  r.i = i;
  r.status = CheckResult::Status::pass;
  for (const Polynomial& g : lhs.generators()) {
    if (!member(g, rhs)) {
      r.status = CheckResult::Status::fail;
      r.witness = g;
      r.lhs = std::make_shared<Ideal>(lhs);
      r.rhs = std::make_shared<Ideal>(rhs);
      break;
    }
  }
  return r;
}

CheckResult equality_check(std::string claim, const std::string& ring, int sop, int s, int n,
                           int i, const Ideal& lhs, const Ideal& rhs) {
  CheckResult r = containment_check(std::move(claim), ring, sop, s, n, i, lhs, rhs);
  if (r.status != CheckResult::Status::pass) return r;
  CheckResult back = containment_check(r.claim, ring, sop, s, n, i, rhs, lhs);
  if (back.status == CheckResult::Status::pass) return r;
  return back;
}

CheckResult skipped(std::string claim, const std::string& ring, std::string reason) {
  CheckResult r;
  r.claim = std::move(claim);
  r.ring = ring;
  r.status = CheckResult::Status::skipped;
  r.note = std::move(reason);
  return r;
}

}  // namespace

std::string CheckResult::line() const {
  std::string out = "CHECK " + claim + " ring=" + ring + " sop=" + std::to_string(sop) +
                    " s=" + std::to_string(s) + " n=" + std::to_string(n);
  if (i >= 0) out += " i=" + std::to_string(i);
  switch (status) {
    case Status::pass:
      out += " PASS";
      break;
    case Status::fail:
      out += " FAIL";
      break;
    case Status::skipped:
      out += " SKIPPED";
      break;
  }
  if (witness) out += " witness=" + witness->str_compact();
  if (!note.empty()) out += " note=" + note;
  return out;
}

Corpus Corpus::standard(std::uint32_t p) {
  Field F = Field::gf(p);
  Corpus corpus;
  auto add = [&](const char* name, std::vector<std::string> vars, const char* ideal_text,
                 int expected_dim) {
    RingPtr S = Ring::make(F, std::move(vars));
    Ideal I = parse_ideal(ideal_text, S);
    RingPresentation R = RingPresentation::make(S, std::move(I), name);
    if (R.dim() != expected_dim)
      throw Error(std::string("corpus ring ") + name + " has unexpected dimension");
    corpus.rings.push_back(std::move(R));
  };
  add("regular2", {"x", "y"}, "(0)", 2);
  add("regular3", {"x", "y", "z"}, "(0)", 3);
  add("hypersurface", {"x", "y", "z"}, "(x^3 + y^3 + z^3)", 2);
  add("nonCM1", {"x", "y"}, "(x^2, x*y)", 1);
  add("two_planes", {"x", "y", "u", "v"}, "(x*u, x*v, y*u, y*v)", 2);
  return corpus;
}

const RingPresentation* Corpus::find(std::string_view name) const {
  for (const RingPresentation& R : rings)
    if (R.name() == name) return &R;
  return nullptr;
}

std::vector<std::string> Corpus::names() const {
  std::vector<std::string> out;
  out.reserve(rings.size());
  for (const RingPresentation& R : rings) out.push_back(R.name());
  return out;
}

std::size_t VerificationReport::count(CheckResult::Status s) const {
  std::size_t c = 0;
  for (const CheckResult& r : results)
    if (r.status == s) ++c;
  return c;
}

std::string VerificationReport::render() const {
  std::string out;
  for (const CheckResult& r : results) {
    out += r.line();
    out += '\n';
  }
  out += "{\"total\":" + std::to_string(results.size()) +
         ",\"pass\":" + std::to_string(count(CheckResult::Status::pass)) +
         ",\"fail\":" + std::to_string(count(CheckResult::Status::fail)) +
         ",\"skipped\":" + std::to_string(count(CheckResult::Status::skipped)) +
         ",\"seed\":" + std::to_string(seed) + ",\"p\":" + std::to_string(p) + "}\n";
  return out;
}

std::vector<CheckResult> check_main_theorem(const RingPresentation& R, std::span<const Sop> sops,
                                            std::uint32_t n_max, bool weaken) {
  std::vector<CheckResult> out;
  const int d = R.dim();
  if (d < 1) return out;
  const Ideal& a = a_ideals(R).product;
  std::uint32_t e_colon = (d == 1) ? 1 : pow2(static_cast<std::uint32_t>(d - 2));
  std::uint32_t e_decomp = pow2(static_cast<std::uint32_t>(d - 1));
  if (weaken) {
    e_colon = e_colon ? e_colon - 1 : 0;
    e_decomp = e_decomp ? e_decomp - 1 : 0;
  }
  Ideal a_colon = ideal_power(a, e_colon);
  Ideal a_decomp = ideal_power(a, e_decomp);

  for (std::size_t k = 0; k < sops.size(); ++k) {
    const Sop& sop = sops[k];
    for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(d); ++s) {
      for (std::uint32_t n = 1; n <= n_max; ++n) {
        Ideal target = sop.prefix_power(s, n);
        Ideal lhs = ideal_product(a_colon, power_colon(sop, s, n));
        out.push_back(containment_check("thm4.2.colon", R.name(), static_cast<int>(k),
                                        static_cast<int>(s), static_cast<int>(n), -1, lhs,
                                        target));
      }
    }
    for (std::uint32_t s = 1; s <= static_cast<std::uint32_t>(d); ++s) {
      for (std::uint32_t n = 1; n <= n_max; ++n) {
        Ideal target = sop.prefix_power(s, n);
        Ideal lhs = ideal_product(a_decomp, parametric_intersection(sop, s, n));
        out.push_back(containment_check("thm4.2.decomp", R.name(), static_cast<int>(k),
                                        static_cast<int>(s), static_cast<int>(n), -1, lhs,
                                        target));
      }
    }
  }
  return out;
}

std::vector<CheckResult> check_schenzel(const RingPresentation& R, std::span<const Sop> sops) {
  std::vector<CheckResult> out;
  const int d = R.dim();
  if (d < 1) return out;
  const Ideal& a = a_ideals(R).product;
  for (std::size_t k = 0; k < sops.size(); ++k) {
    const Sop& sop = sops[k];
    for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(d); ++s) {
      Ideal q = sop.prefix(s);
      Ideal ann = quotient_annihilator(q, colon(q, sop.element(s)));
      out.push_back(containment_check("schenzel", R.name(), static_cast<int>(k),
                                      static_cast<int>(s), 0, -1, a, ann));
    }
  }
  return out;
}

std::vector<CheckResult> check_lemma26(const RingPresentation& R, std::span<const Sop> sops,
                                       std::uint32_t n_max) {
  std::vector<CheckResult> out;
  const int d = R.dim();
  for (std::size_t k = 0; k < sops.size(); ++k) {
    const Sop& sop = sops[k];
    for (std::uint32_t s = 1; s + 1 <= static_cast<std::uint32_t>(d); ++s) {
      Ideal q1 = sop.prefix(s);
      Ideal b_term = quotient_annihilator(q1, colon(q1, sop.element(s)));
      Ideal d_term = Ideal::unit(R.ambient());
      for (std::uint32_t n = 1; n <= n_max; ++n) {
        Ideal qn = sop.prefix_power(s, n);
        Ideal t = quotient_annihilator(qn, parametric_intersection(sop, s, n));
        d_term = d_term.is_unit() ? t : intersect(d_term, t);
      }
      Ideal prod = ideal_product(b_term, d_term);
      for (std::uint32_t n = 1; n <= n_max; ++n) {
        Ideal qn = sop.prefix_power(s, n);
        Ideal lhs = ideal_product(prod, colon(qn, sop.element(s)));
        out.push_back(containment_check("lem2.6", R.name(), static_cast<int>(k),
                                        static_cast<int>(s), static_cast<int>(n), -1, lhs, qn));
      }
    }
  }
  return out;
}

std::vector<CheckResult> check_lemma41(const RingPresentation& R, std::span<const Sop> sops,
                                       std::uint32_t quotient_sops, std::uint64_t seed) {
  std::vector<CheckResult> out;
  const int d = R.dim();
  if (d < 2) return out;
  Ideal b_sample = sampled_annihilator(AnnihilatorKind::b, R, sops, 1).value;

  for (std::size_t k = 0; k < sops.size(); ++k) {
    const Sop& sop = sops[k];
    for (int i = 1; i < d; ++i) {
      RingPresentation quotient =
          RingPresentation::make(R.ambient(), sop.prefix(static_cast<std::size_t>(i)), R.name());
      std::uint64_t qseed = seed ^ fnv1a(R.name()) ^ (k * 1315423911ull) ^ (i * 2654435761ull);
      std::vector<Sop> fresh = sample_sops(quotient, quotient_sops, qseed);
      for (std::size_t kq = 0; kq < fresh.size(); ++kq) {
        for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(d - i); ++s) {
          Ideal q = fresh[kq].prefix(s);
          Ideal lhs = ideal_product(b_sample, colon(q, fresh[kq].element(s)));
          out.push_back(containment_check("lem4.1", R.name(), static_cast<int>(k),
                                          static_cast<int>(s), static_cast<int>(kq), i, lhs, q));
        }
      }
    }
  }
  return out;
}

std::vector<CheckResult> check_cor44_45(const RingPresentation& R, std::span<const Sop> sops,
                                        std::uint32_t n_max, std::uint32_t k_buchsbaum) {
  std::vector<CheckResult> out;
  const int d = R.dim();
  if (d < 2) return out;
  const std::uint32_t N = static_cast<std::uint32_t>(R.ambient()->nvars());
  const ExtAnnihilators& ext = a_ideals(R);
  const Ideal& a = ext.product;
  const Ideal& m = R.irrelevant_ideal();

  // precondition for the Buchsbaum-type bound: m^k kills H^i_m(R) for i < d
  Ideal mk = ideal_power(m, k_buchsbaum);
  bool k_ok = true;
  for (const Ideal& ai : ext.a)
    if (!contains(ai, mk)) k_ok = false;
  if (!k_ok)
    out.push_back(skipped("cor4.5", R.name(), "k-precondition-fails"));

  for (std::size_t k = 0; k < sops.size(); ++k) {
    const Sop& sop = sops[k];
    for (std::uint32_t s = 1; s + 1 <= static_cast<std::uint32_t>(d); ++s) {
      Ideal a_pow = ideal_power(a, pow2(s - 1));
      Ideal m_pow = ideal_power(m, k_buchsbaum * static_cast<std::uint32_t>(d) * pow2(s - 1));
      for (std::uint32_t n = 1; n <= n_max; ++n) {
        RingPresentation quotient =
            RingPresentation::make(R.ambient(), sop.prefix_power(s, n), R.name());
        for (std::uint32_t i = 0; i + s < static_cast<std::uint32_t>(d); ++i) {
          Ideal ann_hi = ext_annihilator(quotient, N - i);
          out.push_back(containment_check("cor4.4", R.name(), static_cast<int>(k),
                                          static_cast<int>(s), static_cast<int>(n),
                                          static_cast<int>(i), a_pow, ann_hi));
          if (k_ok)
            out.push_back(containment_check("cor4.5", R.name(), static_cast<int>(k),
                                            static_cast<int>(s), static_cast<int>(n),
                                            static_cast<int>(i), m_pow, ann_hi));
        }
      }
    }
  }
  return out;
}

std::vector<CheckResult> check_qlim(const RingPresentation& R, std::span<const Sop> sops,
                                    std::uint32_t window, std::uint32_t n_cap) {
  std::vector<CheckResult> out;
  const int d = R.dim();
  for (std::size_t k = 0; k < sops.size(); ++k) {
    for (std::uint32_t s = 1; s <= static_cast<std::uint32_t>(d); ++s) {
      LimitClosureResult lc = limit_closure(sops[k], s, window, n_cap);
      CheckResult r;
      r.claim = "qlim";
      r.ring = R.name();
      r.sop = static_cast<int>(k);
      r.s = static_cast<int>(s);
      r.n = static_cast<int>(lc.stabilized_at);
      if (lc.value.is_unit()) {
        r.status = CheckResult::Status::fail;
        r.witness = Polynomial::from_int(R.ambient(), 1);
        r.lhs = std::make_shared<Ideal>(lc.value);
        r.rhs = std::make_shared<Ideal>(R.irrelevant_ideal());
      } else {
        r.status = CheckResult::Status::pass;
      }
      if (lc.capped) r.note = "window-heuristic-capped";
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CheckResult> check_lemma31_suite(const RingPtr& S, std::uint32_t count,
                                             std::uint64_t seed, const std::string& ring_id) {
  std::vector<CheckResult> out;
  InstanceGen gen(S, seed);
  for (std::uint32_t inst = 0; inst < count; ++inst) {
    Ideal I = gen.random_ideal(3, 3);
    Polynomial x = gen.random_variable();
    // part 1: n >= m >= 0, n <= 3
    std::uint32_t n1 = static_cast<std::uint32_t>(gen.uniform(4));
    std::uint32_t m1 = static_cast<std::uint32_t>(gen.uniform(n1 + 1));
    auto [l1, r1] = saturation_intersection_sides(I, x, n1, m1);
    out.push_back(equality_check("lem3.1a", ring_id, static_cast<int>(inst),
                                 static_cast<int>(m1), static_cast<int>(n1), -1, l1, r1));
    // part 2: n+1 >= alpha > m >= 1, n <= 3
    std::uint32_t n2 = 1 + static_cast<std::uint32_t>(gen.uniform(3));
    std::uint32_t m2 = 1 + static_cast<std::uint32_t>(gen.uniform(n2));
    std::uint32_t alpha = m2 + 1 + static_cast<std::uint32_t>(gen.uniform(n2 + 1 - m2));
    auto [l2, r2] = saturation_sum_sides(I, x, n2, m2, alpha);
    out.push_back(equality_check("lem3.1b", ring_id, static_cast<int>(inst),
                                 static_cast<int>(m2), static_cast<int>(n2),
                                 static_cast<int>(alpha), l2, r2));
  }
  return out;
}

std::vector<CheckResult> check_lemma32_suite(const RingPtr& S, std::uint32_t count,
                                             std::uint64_t seed, const std::string& ring_id,
                                             std::uint32_t max_n) {
  std::vector<CheckResult> out;
  InstanceGen gen(S, seed);
  for (std::uint32_t inst = 0; inst < count; ++inst) {
    Ideal I = gen.random_ideal(3, 3);
    Polynomial x = gen.random_variable();
    std::uint32_t n = 1 + static_cast<std::uint32_t>(gen.uniform(max_n));
    auto [lhs, rhs] = key_lemma_sides(I, x, n);
    out.push_back(equality_check("lem3.2", ring_id, static_cast<int>(inst), 0,
                                 static_cast<int>(n), -1, lhs, rhs));
  }
  return out;
}

std::vector<CheckResult> check_remark33(const RingPresentation& R, std::span<const Sop> sops,
                                        std::uint32_t max_n) {
  std::vector<CheckResult> out;
  const int d = R.dim();
  for (std::size_t k = 0; k < sops.size(); ++k) {
    for (std::uint32_t s = 1; s <= static_cast<std::uint32_t>(d); ++s) {
      for (std::uint32_t n = 1; n <= max_n; ++n) {
        Ideal lhs = parametric_intersection(sops[k], s, n);
        Ideal rhs = sops[k].prefix_power(s, n);
        out.push_back(equality_check("rem3.3", R.name(), static_cast<int>(k),
                                     static_cast<int>(s), static_cast<int>(n), -1, lhs, rhs));
      }
    }
  }
  return out;
}

namespace {

// bounded worker pool; results keep task order
std::vector<std::vector<CheckResult>> run_tasks(
    std::vector<std::function<std::vector<CheckResult>()>> tasks, std::uint32_t jobs) {
  if (jobs == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    jobs = std::min(hw == 0 ? 1u : hw, 8u);
  }
  std::vector<std::vector<CheckResult>> results(tasks.size());
  if (jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    return results;
  }
  std::mutex mu;
  std::size_t next = 0;
  std::exception_ptr first_error;
  auto worker = [&]() {
    while (true) {
      std::size_t mine;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= tasks.size() || first_error) return;
        mine = next++;
      }
      try {
        results[mine] = tasks[mine]();
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::uint32_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace

VerificationReport run_corpus(const VerifyConfig& config, const Corpus& corpus) {
  VerificationReport report;
  report.seed = config.seed;
  report.p = 0;

  std::vector<const RingPresentation*> selection;
  for (const std::string& name : config.rings) {
    const RingPresentation* R = corpus.find(name);
    if (!R) throw Error("unknown corpus ring '" + name + "'");
    selection.push_back(R);
  }
  if (!selection.empty()) report.p = selection[0]->ambient()->field().characteristic();

  // sops are drawn up front so worker scheduling cannot affect them
  std::vector<std::vector<Sop>> sampled;
  for (const RingPresentation* R : selection)
    sampled.push_back(sample_sops(*R, config.sops, config.seed ^ fnv1a(R->name())));

  std::vector<std::function<std::vector<CheckResult>()>> tasks;
  for (std::size_t idx = 0; idx < selection.size(); ++idx) {
    const RingPresentation& R = *selection[idx];
    const std::vector<Sop>& sops = sampled[idx];
    const VerifyConfig& c = config;

    tasks.push_back([&R, &sops, &c] { return check_schenzel(R, sops); });
    tasks.push_back([&R, &sops, &c] {
      return check_main_theorem(R, sops, c.n_max, c.weaken_exponent);
    });
    tasks.push_back([&R, &sops, &c] { return check_lemma26(R, sops, c.n_max); });
    tasks.push_back([&R, &sops, &c] { return check_lemma41(R, sops, c.sops, c.seed); });
    tasks.push_back([&R, &sops, &c] { return check_cor44_45(R, sops, c.n_max, c.buchsbaum_k); });
    tasks.push_back([&R, &sops, &c] {
      return check_qlim(R, sops, c.limit_window, c.limit_nmax);
    });
    if (R.name() == "regular3") {
      tasks.push_back([&R, &sops, &c] {
        std::vector<Sop> with_vars;
        std::vector<Polynomial> vars;
        for (std::size_t i = 0; i < R.ambient()->nvars(); ++i)
          vars.push_back(Polynomial::variable(R.ambient(), i));
        with_vars.push_back(Sop(R, std::move(vars)));
        with_vars.insert(with_vars.end(), sops.begin(), sops.end());
        return check_remark33(R, with_vars, 4);
      });
      tasks.push_back([&R, &c] {
        return check_lemma31_suite(R.ambient(), c.lemma_instances, c.seed ^ fnv1a("lem3.1"),
                                   R.name());
      });
      tasks.push_back([&R, &c] {
        return check_lemma32_suite(R.ambient(), c.lemma_instances, c.seed ^ fnv1a("lem3.2"),
                                   R.name());
      });
    }
    tasks.push_back([&R] {
      std::vector<CheckResult> out;
      out.push_back(skipped("schenzel.upper", R.name(), "bounds-uncomputable-b(R)-from-above"));
      out.push_back(skipped("exact.bcd", R.name(), "finite-sample-over-approximation-only"));
      return out;
    });
  }

  auto grouped = run_tasks(std::move(tasks), config.jobs);
  for (auto& group : grouped)
    for (CheckResult& r : group) report.results.push_back(std::move(r));
  return report;
}

}  // namespace sopkit
