// Command-line front end.  Exit codes: 0 success, 1 check or precondition
// failure, 2 input error.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "idalg/algebra/catalog.hpp"
#include "idalg/algebra/classifier.hpp"
#include "idalg/algebra/closure.hpp"
#include "idalg/algebra/corollary.hpp"
#include "idalg/error.hpp"
#include "idalg/io/json.hpp"
#include "idalg/verify.hpp"

using namespace idalg;
using io::Json;

namespace {

constexpr int kOk = 0, kFailed = 1, kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

void emit(const Json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write '" + out + "'");
  f << j.dump(2) << "\n";
}

bool is_input_error(Errc c) {
  switch (c) {
    case Errc::Parse:
    case Errc::UnknownName:
    case Errc::SizeMismatch:
    case Errc::DimensionMismatch:
    case Errc::InvalidParameters: return true;
    default: return false;
  }
}

struct Common {
  std::size_t n = 5;
  std::string out;
  bool emit_basis = false;
};

int cmd_catalog(const std::string& name, const Common& c) {
  const Catalog& cat = Catalog::get(c.n);
  const auto& mods = module_names();
  Json j;
  j["name"] = name;
  j["n"] = c.n;
  bool ok = true;
  const Subspace* space = nullptr;
  if (std::find(mods.begin(), mods.end(), name) != mods.end()) {
    const GModule& m = cat.module(name);
    bool hw = m.hwv && cat.is_highest_weight(*m.hwv) && m.space.member(m.hwv->vec());
    bool stable = cat.is_g_stable(m.space);
    j["dim"] = m.space.dim();
    j["expected_dim"] = m.expected_dim;
    j["hwv_check"] = hw;
    j["g_stable"] = stable;
    if (m.explicit_match) j["explicit_span_match"] = *m.explicit_match;
    j["certified"] = m.certified;
    ok = m.space.dim() == m.expected_dim && hw && stable && m.explicit_match.value_or(true);
    space = &m.space;
  } else {
    space = &cat.ambient(name);
    bool stable = cat.is_g_stable(*space);
    j["dim"] = space->dim();
    j["g_stable"] = stable;
    j["certified"] = cat.certified();
    ok = stable;
  }
  if (c.emit_basis) j["basis"] = io::basis_to_json(*space, c.n);
  emit(j, c.out);
  return ok ? kOk : kFailed;
}

int cmd_decompose(const Common& c) {
  const Catalog& cat = Catalog::get(c.n);
  struct Chain {
    std::string target;
    std::vector<std::string> parts;
    bool ambient_first;
  };
  const std::vector<Chain> chains{{"sl2", {"g", "V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8"}, false},
                                  {"so2m1", {"g", "V1", "V2"}, false},
                                  {"so2", {"so2m1", "V3"}, true},
                                  {"sl2m1", {"so2m1", "V4p", "V5", "V6"}, true},
                                  {"sl2", {"sl2m1", "p", "q", "V8"}, true}};
  Json list = Json::array();
  bool ok = true;
  for (const auto& ch : chains) {
    Subspace total(cat.ambient_dim());
    std::size_t dims = 0;
    Json parts = Json::array();
    for (std::size_t k = 0; k < ch.parts.size(); ++k) {
      const Subspace& s = (k == 0 && ch.ambient_first) ? cat.ambient(ch.parts[k]) : cat.module(ch.parts[k]).space;
      total = sum(total, s);
      dims += s.dim();
      parts.push_back(Json{{"name", ch.parts[k]}, {"dim", s.dim()}});
    }
    bool equal = total == cat.ambient(ch.target), direct = dims == total.dim();
    ok = ok && equal && direct;
    list.push_back(Json{{"target", ch.target},
                        {"target_dim", cat.ambient(ch.target).dim()},
                        {"parts", parts},
                        {"sum_dim", total.dim()},
                        {"direct", direct},
                        {"equal", equal}});
  }
  emit(Json{{"n", c.n}, {"certified", cat.certified()}, {"chains", list}, {"ok", ok}}, c.out);
  return ok ? kOk : kFailed;
}

int cmd_closure(const std::string& kind, const std::string& gens_path, bool plain, const Common& c) {
  auto gens = io::generators_from_json(read_json(gens_path), c.n);
  ClosureKind k = kind == "lie" ? ClosureKind::Lie : ClosureKind::Assoc;
  ClosureReport r = closure(k, gens, c.n, {.use_module_structure = !plain});
  Json j{{"kind", kind},
         {"n", c.n},
         {"generators", gens.size()},
         {"dim", r.closure.dim()},
         {"rounds", r.rounds},
         {"products_computed", r.products_computed}};
  if (c.emit_basis) j["basis"] = io::basis_to_json(r.closure, c.n);
  emit(j, c.out);
  return kOk;
}

int cmd_classify(const std::string& gens_path, bool close_first, const Common& c) {
  auto gens = io::generators_from_json(read_json(gens_path), c.n);
  if (c.n < 5) throw Error(Errc::UnsupportedN, "classification needs n >= 5");
  Subspace s = close_first ? lie_closure(gens, c.n).closure : span_of(as_vectors(gens), c.n * c.n * c.n * c.n);
  ClassLabel label = classify(s, c.n);
  Json j = io::label_to_json(label);
  j["dim"] = s.dim();
  j["certified"] = true;
  emit(j, c.out);
  return kOk;
}

int cmd_rank(const std::string& lambda, std::size_t samples, std::uint64_t seed, const std::string& op_path,
             const Common& c) {
  if (!op_path.empty()) {
    Json ranks = Json::array();
    for (const auto& op : io::generators_from_json(read_json(op_path), c.n)) ranks.push_back(op_rank(op));
    emit(Json{{"n", c.n}, {"ranks", ranks}}, c.out);
    return kOk;
  }
  GaussScalar l = io::parse_scalar_text(lambda);
  RankReport r = rank_floor_check(l, c.n, samples, seed);
  emit(Json{{"n", c.n},
            {"lambda", l.str()},
            {"seed", seed},
            {"samples", r.samples},
            {"floor", r.floor},
            {"min_rank", r.min_rank},
            {"below_floor", r.below_floor},
            {"basis_min_rank", r.basis_min_rank},
            {"two_term_maps", r.two_term_maps},
            {"two_term_max_rank", r.two_term_max_rank},
            {"ok", r.ok()}},
       c.out);
  return r.ok() ? kOk : kFailed;
}

int cmd_fderiv(const std::string& poly_path, bool no_unital, bool sample, std::uint64_t seed, const Common& c) {
  MultilinearPoly f = io::poly_from_json(read_json(poly_path));
  FDerivationReport r = f_derivation_report(f, c.n, !no_unital, {.force_sampling = sample, .seed = seed});
  Json j{{"n", c.n},
         {"poly", io::poly_to_json(f)},
         {"unital_kill", !no_unital},
         {"dim", r.space.dim()},
         {"equals_g", r.space == Catalog::get(c.n).g()},
         {"equations", r.equations},
         {"sampled", r.sampled}};
  if (r.sampled) {
    j["seed"] = r.seed;
    j["tuples_sampled"] = r.tuples_sampled;
    j["repairs"] = r.repairs;
  }
  if (c.emit_basis) j["basis"] = io::basis_to_json(r.space, c.n);
  emit(j, c.out);
  return kOk;
}

int cmd_verify(const std::string& suite, bool slow, std::uint64_t seed, const Common& c) {
  VerifyOptions o{c.n, slow, seed};
  auto checks = run_suite(suite, o);
  emit(report_to_json(suite, o, checks), c.out);
  return all_pass(checks) ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie and associative algebras of operators on M_n containing the inner derivations"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", common.n, "matrix size n")->check(CLI::Range(2, 12));
    sub->add_option("--out", common.out, "output file (default stdout)");
  };

  std::string name;
  auto* catalog = app.add_subcommand("catalog", "build a module or ambient algebra and check it");
  catalog->add_option("name", name, "g, V1..V8, p, q, V4p or an ambient name")->required();
  catalog->add_flag("--emit-basis", common.emit_basis, "include the basis");
  add_common(catalog);

  auto* decompose = app.add_subcommand("decompose", "check the direct-sum chains of g-modules");
  add_common(decompose);

  std::string kind = "lie", gens;
  bool plain = false;
  auto* closure_cmd = app.add_subcommand("closure", "Lie or associative closure of generators");
  closure_cmd->add_option("--kind", kind, "lie or assoc")->check(CLI::IsMember({"lie", "assoc"}));
  closure_cmd->add_option("--gens", gens, "generator JSON file ('-' for stdin)")->required();
  closure_cmd->add_flag("--plain", plain, "use the plain worklist only");
  closure_cmd->add_flag("--emit-basis", common.emit_basis, "include the basis");
  add_common(closure_cmd);

  bool close_first = false;
  auto* classify_cmd = app.add_subcommand("classify", "identify the Lie algebra spanned by the generators");
  classify_cmd->add_option("--gens", gens, "generator JSON file ('-' for stdin)")->required();
  classify_cmd->add_flag("--close", close_first, "take the Lie closure of the generators first");
  add_common(classify_cmd);

  std::string lambda = "0", op_path;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  auto* rank = app.add_subcommand("rank", "rank floor on g + W(lambda), or ranks of given operators");
  rank->add_option("--lambda", lambda, "lambda as a scalar string");
  rank->add_option("--samples", samples, "number of random elements");
  rank->add_option("--seed", seed, "random seed");
  rank->add_option("--ops", op_path, "operator JSON file; prints their ranks instead");
  add_common(rank);

  std::string poly;
  bool no_unital = false, sample = false;
  auto* fderiv = app.add_subcommand("fderiv", "space of f-derivations of M_n");
  fderiv->add_option("--poly", poly, "multilinear polynomial JSON file")->required();
  fderiv->add_flag("--no-unital-kill", no_unital, "drop the condition d(1) = 0");
  fderiv->add_flag("--sample", sample, "sample tuples, then verify with a full sweep");
  fderiv->add_option("--seed", seed, "random seed");
  fderiv->add_flag("--emit-basis", common.emit_basis, "include the basis");
  add_common(fderiv);

  std::string suite = "all";
  bool slow = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "table, facts, corollaries, density or all")
      ->check(CLI::IsMember(suite_names()));
  verify->add_flag("--slow", slow, "include the larger cases");
  verify->add_option("--seed", seed, "random seed");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*catalog) return cmd_catalog(name, common);
    if (*decompose) return cmd_decompose(common);
    if (*closure_cmd) return cmd_closure(kind, gens, plain, common);
    if (*classify_cmd) return cmd_classify(gens, close_first, common);
    if (*rank) return cmd_rank(lambda, samples, seed, op_path, common);
    if (*fderiv) return cmd_fderiv(poly, no_unital, sample, seed, common);
    if (*verify) return cmd_verify(suite, slow, seed, common);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    std::cout << Json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump(2) << "\n";
    return is_input_error(e.code()) ? kInputError : kFailed;
  }
  return kInputError;
}
