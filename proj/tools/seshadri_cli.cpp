// Command-line front end: every subcommand prints JSON (or DOT) on stdout and
// diagnostics on stderr. Exit codes: 0 ok, 1 verification failed, 2 invalid
// input, 3 resource cap or overflow.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "seshadri/json_io.hpp"
#include "seshadri/seshadri.hpp"

namespace {

using seshadri::io::Json;

int exit_code(const seshadri::Error& e) {
  switch (e.error_class()) {
    case seshadri::ErrorClass::input: return 2;
    case seshadri::ErrorClass::resource: return 3;
    case seshadri::ErrorClass::verification: return 1;
  }
  return 2;
}

bool pretty = false;

void emit(const Json& j) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert variety stratification combinatorics: bonded posets, LS-paths, standard monomials"};
  app.require_subcommand(1);

  seshadri::CaseSpec spec;
  seshadri::Limits limits;
  std::size_t jobs = 1;
  std::string sign = "minus";
  app.add_option("--type", spec.type, "Cartan type, e.g. A3")->required();
  app.add_option("--lambda", spec.lambda, "dominant weight, comma-separated fundamental coordinates")->required();
  app.add_option("--tau", spec.tau, "reduced word (space separated) or 'longest'")->required();
  app.add_option("--max-chains", limits.max_chains, "cap on maximal chains");
  app.add_option("--max-linext", limits.max_linext, "cap on linear extensions");
  app.add_option("--max-paths", limits.max_paths, "cap on enumerated LS-paths");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--mult-one-sign", sign, "sign of j*beta in the multiplicity-one check")
      ->check(CLI::IsMember({"minus", "plus"}));
  app.add_flag("--pretty", pretty, "indent JSON output");

  auto* poset = app.add_subcommand("poset", "nodes, covers and bonds");
  bool dot = false;
  poset->add_flag("--dot", dot, "emit Graphviz DOT instead of JSON");

  auto* chains = app.add_subcommand("chains", "maximal chains with bonds");

  auto* lspaths = app.add_subcommand("lspaths", "LS-paths of a given degree");
  std::int64_t degree = 0;
  bool path_model = false;
  lspaths->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);
  lspaths->add_flag("--path-model", path_model, "include the path-model segments");

  auto* character = app.add_subcommand("character", "Demazure character of V(d lambda)_tau");
  bool check = false;
  character->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);
  character->add_flag("--check", check, "compare with the weights of LS-paths");

  auto* decompose = app.add_subcommand("decompose", "decomposition into degree-one LS-paths");
  std::string path_text;
  decompose->add_option("--path", path_text, "path vector JSON")->required();

  auto* standard = app.add_subcommand("standard-count", "number of standard monomials");
  standard->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);

  auto* straighten = app.add_subcommand("straighten", "straightening support of a non-standard product");
  std::string a_text, b_text;
  straighten->add_option("--a", a_text, "first factor JSON")->required();
  straighten->add_option("--b", b_text, "second factor JSON")->required();

  auto* deg = app.add_subcommand("degree", "embedding degree from bonds and from the Hilbert polynomial");
  auto* gcd = app.add_subcommand("gcd-check", "chain independence of bond gcds");

  auto* verify = app.add_subcommand("verify", "full consistency report");
  std::int64_t d_max = 2;
  verify->add_option("--dmax", d_max)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const seshadri::ResolvedCase rc = seshadri::resolve_case(spec);

    if (*verify) {
      seshadri::VerifyOptions opt;
      opt.limits = limits;
      opt.jobs = jobs;
      opt.sign = sign == "plus" ? seshadri::MultOneSign::plus : seshadri::MultOneSign::minus;
      const auto report = seshadri::run_case(rc, d_max, opt);
      emit(seshadri::io::report_json(report));
      return report.all_ok() ? 0 : 1;
    }

    seshadri::BondedPoset p = seshadri::build_poset(rc.rs, rc.lambda, rc.tau);
    if (*poset) {
      if (dot)
        std::cout << seshadri::export_dot(p);
      else
        emit(seshadri::io::poset_json(p));
      return 0;
    }
    if (*gcd) {
      const auto entries = seshadri::gcd_check(p, limits.max_chains);
      Json pairs = Json::array();
      std::size_t mismatches = 0;
      for (const auto& e : entries) {
        if (!e.gcd) ++mismatches;
        pairs.push_back(Json{{"upper", p.node(e.upper).label},
                             {"lower", p.node(e.lower).label},
                             {"gcd", e.gcd ? Json(*e.gcd) : Json(nullptr)}});
      }
      emit(Json{{"pairs_checked", entries.size()}, {"mismatches", mismatches}, {"ok", mismatches == 0}, {"pairs", pairs}});
      return mismatches == 0 ? 0 : 1;
    }

    const seshadri::LsFan fan(std::move(p), limits);
    const seshadri::BondedPoset& P = fan.poset();

    if (*chains) {
      emit(seshadri::io::chains_json(P, fan.chains()));
      return 0;
    }
    if (*lspaths) {
      Json list = Json::array();
      const auto paths = seshadri::enumerate_ls_paths(fan, degree);
      for (const auto& a : paths) {
        Json j = seshadri::io::path_json(P, a);
        if (path_model) {
          Json segs = Json::array();
          for (const auto& s : seshadri::to_path_model(fan, a))
            segs.push_back(Json{{"length", s.length.str()}, {"direction", s.direction.coords}});
          j["segments"] = std::move(segs);
        }
        list.push_back(std::move(j));
      }
      emit(Json{{"degree", degree}, {"count", paths.size()}, {"paths", std::move(list)}});
      return 0;
    }
    if (*character) {
      const auto ch = seshadri::demazure_character(P, degree);
      Json out{{"degree", degree}, {"dimension", ch.dimension()}, {"character", seshadri::io::character_json(ch)}};
      if (check) {
        const auto ls = seshadri::ls_character(fan, degree);
        const bool equal = ls == ch;
        out["ls_paths"] = ls.dimension();
        out["characters_equal"] = equal;
        emit(out);
        return equal ? 0 : 1;
      }
      emit(out);
      return 0;
    }
    if (*decompose) {
      const auto a = seshadri::io::parse_path(P, path_text);
      Json factors = Json::array();
      for (const auto& f : seshadri::decompose(fan, a)) factors.push_back(seshadri::io::path_json(P, f));
      emit(Json{{"path", seshadri::io::path_json(P, a)}, {"factors", std::move(factors)}});
      return 0;
    }
    if (*standard) {
      const auto count = seshadri::count_standard_monomials(fan, degree);
      const auto paths = static_cast<std::int64_t>(seshadri::enumerate_ls_paths(fan, degree).size());
      emit(Json{{"degree", degree}, {"standard_monomials", count}, {"ls_paths", paths}, {"equal", count == paths}});
      return count == paths ? 0 : 1;
    }
    if (*straighten) {
      const auto a = seshadri::io::parse_path(P, a_text);
      const auto b = seshadri::io::parse_path(P, b_text);
      const seshadri::Monomial input({a, b});
      const auto terms = seshadri::straightening_support(fan, a, b);
      Json list = Json::array();
      for (const auto& t : terms) list.push_back(seshadri::io::monomial_json(P, t.monomial, true, t.guaranteed));
      emit(Json{{"input", seshadri::io::monomial_json(P, input, false, false)}, {"candidates", std::move(list)}});
      return 0;
    }
    if (*deg) {
      const auto by_bonds = seshadri::degree_by_bonds(fan);
      const auto by_hilbert = seshadri::degree_by_hilbert(P, jobs);
      emit(Json{{"degree_by_bonds", by_bonds}, {"degree_by_hilbert", by_hilbert}});
      return by_bonds == by_hilbert ? 0 : 1;
    }
  } catch (const seshadri::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
