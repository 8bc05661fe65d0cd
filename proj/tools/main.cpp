// sopkit command line: Groebner bases, ideal calculus, and batch
// verification of the uniform-annihilator identities over a ring corpus.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sopkit/ringspec.hpp"
#include "sopkit/verifier.hpp"

namespace {

using namespace sopkit;

MonomialOrder order_from_name(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  throw Error("unknown order '" + name + "' (expected grevlex or lex)");
}

int cmd_gb(const std::string& spec_path, const std::string& order_name,
           const std::vector<std::string>& exprs) {
  RingSpec spec = load_ring_spec(spec_path);
  MonomialOrder ord = order_from_name(order_name);
  std::vector<Polynomial> gens = spec.defining.generators();
  for (const std::string& e : exprs) {
    Ideal parsed = parse_ideal(e, spec.ring);
    for (const Polynomial& g : parsed.generators()) gens.push_back(g);
  }
  if (gens.empty()) return 0;  // zero ideal: empty basis
  GroebnerBasis gb = reduced_gb(gens, ord);
  for (const Polynomial& g : gb.generators()) std::cout << g.str(ord) << "\n";
  return 0;
}

// argument is an ideal "(f, g)" or a single polynomial
bool looks_like_ideal(const std::string& text) {
  return text.find('(') != std::string::npos || text.find(',') != std::string::npos;
}

int cmd_ideal(const std::string& spec_path, const std::string& op,
              const std::vector<std::string>& args) {
  RingSpec spec = load_ring_spec(spec_path);
  auto with_defining = [&](const Ideal& I) { return ideal_sum(spec.defining, I); };
  auto arg_ideal = [&](const std::string& text) {
    return with_defining(parse_ideal(text, spec.ring));
  };

  Ideal result = Ideal::zero(spec.ring);
  if (op == "intersect") {
    if (args.size() != 2) throw Error("intersect needs two ideals");
    result = intersect(arg_ideal(args[0]), arg_ideal(args[1]));
  } else if (op == "colon") {
    if (args.size() != 2) throw Error("colon needs an ideal and a divisor");
    Ideal I = arg_ideal(args[0]);
    result = looks_like_ideal(args[1]) ? colon(I, arg_ideal(args[1]))
                                       : colon(I, parse_poly(args[1], spec.ring));
  } else if (op == "saturate") {
    if (args.size() != 2) throw Error("saturate needs an ideal and a divisor");
    Ideal I = arg_ideal(args[0]);
    result = looks_like_ideal(args[1]) ? saturate(I, arg_ideal(args[1]))
                                       : saturate(I, parse_poly(args[1], spec.ring));
  } else if (op == "power") {
    if (args.size() != 2) throw Error("power needs an ideal and an exponent");
    result = with_defining(ideal_power(parse_ideal(args[0], spec.ring),
                                       static_cast<std::uint32_t>(std::stoul(args[1]))));
  } else {
    throw Error("unknown ideal operation '" + op + "'");
  }
  for (const Polynomial& g : result.gb().generators()) std::cout << g.str() << "\n";
  return 0;
}

int cmd_verify(const VerifyConfig& config_in, const std::vector<std::string>& corpus_names,
               const std::string& ring_path, const std::string& out_path) {
  VerifyConfig config = config_in;
  Corpus corpus;
  if (!ring_path.empty()) {
    RingSpec spec = load_ring_spec(ring_path);
    corpus.rings.push_back(spec.presentation());
    config.rings = {corpus.rings[0].name()};
  } else {
    corpus = Corpus::standard();
    if (corpus_names.size() == 1 && corpus_names[0] == "all") {
      config.rings = corpus.names();
    } else {
      config.rings = corpus_names;
    }
  }
  if (config.rings.empty()) {
    VerificationReport empty;
    empty.seed = config.seed;
    std::cout << empty.render();
    return 0;
  }

  VerificationReport report = run_corpus(config, corpus);
  std::string body = report.render();
  std::cout << body;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write report to '" + out_path + "'");
    out << body;
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commutative-algebra workbench: Groebner bases, ideal calculus, "
               "and uniform-annihilator verification"};
  app.require_subcommand(1);

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of the given polynomials");
  std::string gb_spec, gb_order = "grevlex";
  std::vector<std::string> gb_exprs;
  gb->add_option("spec", gb_spec, "ring spec file")->required();
  gb->add_option("--order", gb_order, "monomial order: grevlex | lex");
  gb->add_option("exprs", gb_exprs, "polynomials");

  auto* ideal = app.add_subcommand("ideal", "ideal calculus: intersect | colon | saturate | power");
  std::string id_spec, id_op;
  std::vector<std::string> id_args;
  ideal->add_option("spec", id_spec, "ring spec file")->required();
  ideal->add_option("op", id_op, "operation")->required();
  ideal->add_option("args", id_args, "operands");

  auto* verify = app.add_subcommand("verify", "run the claim checker over a ring corpus");
  VerifyConfig config;
  std::vector<std::string> corpus_names;
  std::string ring_path, out_path;
  verify->add_option("--corpus", corpus_names,
                     "corpus ring names, or 'all' "
                     "(regular2 regular3 hypersurface nonCM1 two_planes)")
      ->delimiter(',');
  verify->add_option("--ring", ring_path, "verify a custom ring spec file instead");
  verify->add_option("--sops", config.sops, "sampled sops per ring");
  verify->add_option("--nmax", config.n_max, "largest power exponent n");
  verify->add_option("--seed", config.seed, "sampling seed");
  verify->add_option("--lemma-instances", config.lemma_instances,
                     "randomized instances per identity suite");
  verify->add_option("--limit-nmax", config.limit_nmax, "hard cap for limit-closure chains");
  verify->add_option("--k", config.buchsbaum_k, "k with m^k H^i_m(R) = 0 for i < d");
  verify->add_option("--jobs", config.jobs, "worker threads (0 = auto)");
  verify->add_flag("--weaken-exponent", config.weaken_exponent,
                   "drop the annihilator exponents by one (exploratory)");
  verify->add_option("--out", out_path, "also write the report to this file");

  try {
    app.parse(argc, argv);
    if (gb->parsed()) return cmd_gb(gb_spec, gb_order, gb_exprs);
    if (ideal->parsed()) return cmd_ideal(id_spec, id_op, id_args);
    return cmd_verify(config, corpus_names, ring_path, out_path);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const sopkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
