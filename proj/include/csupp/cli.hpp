#pragma once

/**
 * @file cli.hpp
 * @brief The `csupp` command line: validate, classify, check, catalog, census, verify.
 *
 * Exit codes: 0 success or confirmed, 1 property false or counterexample
 * found, 2 invalid input, 3 cap exceeded. Diagnostics go to the error
 * stream; documents go to the output stream or to `--out`.
 */

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csupp/census.hpp"
#include "csupp/classify.hpp"
#include "csupp/io.hpp"
#include "csupp/lattice.hpp"

namespace csupp::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kInvalid = 2, kCap = 3 };

/// Algebra-level properties accepted by `check --property`.
inline const std::vector<std::string>& algebra_properties() {
  static const std::vector<std::string> kProps{
      "c-supplemented", "completely-factorisable", "phi-free",      "elementary",       "E-algebra",
      "solvable",       "nilpotent",               "supersolvable", "simple",           "semisimple",
      "semisimple-shape", "main-decomposition"};
  return kProps;
}

/// Properties accepted together with `--subspace`.
inline const std::vector<std::string>& subspace_properties() {
  static const std::vector<std::string> kProps{"subalgebra", "ideal", "c-supplemented", "complemented", "core"};
  return kProps;
}

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw InvalidAlgebra("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline void emit(const io::Json& doc, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw DomainError("cannot write " + out_path);
  f << doc.dump(2) << '\n';
}

inline io::Json subspace_verdict(const LatticeCache& lat, const std::string& property, const Subspace& U) {
  const LieAlgebra& L = lat.algebra();
  io::Json doc;
  doc["property"] = property;
  doc["subspace"] = io::rows(U);
  if (property == "subalgebra") {
    doc["holds"] = is_subalgebra(L, U);
    return doc;
  }
  if (property == "ideal") {
    doc["holds"] = is_ideal(L, U);
    return doc;
  }
  if (!is_subalgebra(L, U)) throw NotClosed(U.to_string() + " is not a subalgebra");
  if (property == "core") {
    doc["holds"] = true;
    doc["core"] = io::rows(core(L, U));
    return doc;
  }
  if (property == "complemented") {
    const auto C = complement_subalgebra(lat, U);
    doc["holds"] = C.has_value();
    doc["complement"] = io::rows(C);
    return doc;
  }
  const auto w = c_supplement(lat, U);
  doc["holds"] = w.has_value();
  doc["core"] = io::rows(core(L, U));
  if (w) {
    doc["supplement"] = io::rows(w->C);
    doc["intersection"] = io::rows(w->meets_in);
  } else {
    doc["supplement"] = nullptr;
  }
  return doc;
}

inline io::Json algebra_verdict(const LatticeCache& lat, const std::string& property, const LatticeOptions& opts) {
  const LieAlgebra& L = lat.algebra();
  io::Json doc;
  doc["property"] = property;
  auto with_failing = [&](const PredicateResult& r) {
    doc["holds"] = r.holds;
    doc["failing"] = io::rows(r.failing);
  };
  if (property == "c-supplemented") {
    with_failing(is_c_supplemented_algebra(lat, opts.workers));
  } else if (property == "completely-factorisable") {
    with_failing(is_completely_factorisable(lat, opts.workers));
  } else if (property == "elementary") {
    with_failing(is_elementary(lat, opts.workers));
  } else if (property == "E-algebra") {
    with_failing(is_E_algebra(lat, opts.workers));
  } else if (property == "phi-free") {
    const Frattini f = frattini(lat);
    doc["holds"] = f.ideal.is_zero();
    doc["phi"] = io::rows(f.ideal);
  } else if (property == "solvable") {
    doc["holds"] = is_solvable(L);
  } else if (property == "nilpotent") {
    doc["holds"] = is_nilpotent(L);
  } else if (property == "supersolvable") {
    doc["holds"] = is_supersolvable(L);
  } else if (property == "simple") {
    doc["holds"] = is_simple(lat);
  } else if (property == "semisimple") {
    doc["holds"] = is_semisimple(lat);
  } else if (property == "semisimple-shape") {
    const auto s = check_semisimple_shape(lat);
    doc["holds"] = s.holds;
    doc["reason"] = s.reason;
  } else {
    const auto d = check_main_decomposition(lat, opts);
    doc["holds"] = d.holds;
    doc["reason"] = d.reason;
  }
  return doc;
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with subalgebra lattices of Lie algebras over GF(p)", "csupp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(io::kToolVersion));

  std::string file = "-";
  std::string out_path;
  std::uint64_t lattice_cap = kDefaultSubspaceCap;
  unsigned workers = 1;

  auto add_common = [&](CLI::App* sub, bool with_file) {
    if (with_file) sub->add_option("file", file, "Algebra document, '-' for standard input");
    sub->add_option("--out", out_path, "Write the document here instead of standard output");
    sub->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1U, 256U));
  };

  auto* validate = app.add_subcommand("validate", "Check an algebra document");
  validate->add_option("file", file, "Algebra document, '-' for standard input");

  auto* classify_cmd = app.add_subcommand("classify", "Full classification report");
  add_common(classify_cmd, true);
  classify_cmd->add_option("--cap,--lattice-cap", lattice_cap, "Maximum number of subspaces to enumerate");

  std::string property;
  std::string subspace_text;
  auto* check = app.add_subcommand("check", "Decide a single property");
  add_common(check, true);
  check->add_option("--cap,--lattice-cap", lattice_cap, "Maximum number of subspaces to enumerate");
  check->add_option("--property", property, "Property name")->required();
  check->add_option("--subspace", subspace_text, "Spanning vectors, entries separated by spaces");

  std::string catalog_name;
  std::uint32_t catalog_p = 2;
  std::size_t catalog_n = 0;
  std::int64_t catalog_gamma = 0;
  auto* catalog_cmd = app.add_subcommand("catalog", "Emit a catalog algebra");
  catalog_cmd->add_option("name", catalog_name, "Catalog entry")->required()->check(CLI::IsMember(catalog::names()));
  catalog_cmd->add_option("--field,--p", catalog_p, "Field characteristic");
  auto* n_opt = catalog_cmd->add_option("--n", catalog_n, "Dimension for 'abelian'");
  auto* gamma_opt = catalog_cmd->add_option("--gamma", catalog_gamma, "Parameter for 'L1_gamma'");
  catalog_cmd->add_option("--out", out_path, "Write the document here instead of standard output");

  CensusSpec spec;
  std::uint64_t samples = 0;
  bool list = false;
  std::string theorem;
  auto add_census = [&](CLI::App* sub) {
    add_common(sub, false);
    sub->add_option("--field,--p", spec.p, "Field characteristic");
    sub->add_option("--dim", spec.max_dim, "Largest dimension")->check(CLI::Range(1, 8));
    sub->add_option("--min-dim", spec.min_dim, "Smallest dimension")->check(CLI::Range(1, 8));
    auto* ex = sub->add_flag("--exhaustive", "Enumerate every table (default)");
    auto* sm = sub->add_option("--samples", samples, "Random tables drawn per dimension");
    ex->excludes(sm);
    sub->add_option("--seed", spec.seed, "Random seed")->needs(sm);
    sub->add_option("--cap", spec.cap, "Maximum number of tables per dimension");
    sub->add_option("--lattice-cap", spec.subspace_cap, "Maximum number of subspaces per lattice");
    sub->add_flag("--dim4-opt-in", spec.dim4_opt_in, "Allow exhaustive runs in dimension 4 and above");
    sub->add_flag("--solvable-only", spec.solvable_only, "Keep solvable algebras only");
    sub->add_flag("--phi-free-only", spec.phi_free_only, "Keep phi-free algebras only");
    sub->add_flag("--dedup-fingerprint", spec.dedup_fingerprint, "Drop algebras with a repeated lattice fingerprint");
  };
  auto* census_cmd = app.add_subcommand("census", "Enumerate small Lie algebras and count properties");
  add_census(census_cmd);
  census_cmd->add_flag("--list", list, "Include every algebra in the document");
  auto* verify_cmd = app.add_subcommand("verify", "Check a statement over a census");
  verify_cmd->add_option("theorem", theorem, "Statement id")->required()->check(CLI::IsMember(theorem_ids()));
  add_census(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << io::kToolVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "csupp: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    const LatticeOptions opts{lattice_cap, workers};
    if (validate->parsed()) {
      const LieAlgebra L = io::parse_algebra(detail::read_input(file, in));
      err << "valid: dim " << L.dim() << " over GF(" << L.field().prime() << ")\n";
      return kOk;
    }
    if (classify_cmd->parsed()) {
      const LieAlgebra L = io::parse_algebra(detail::read_input(file, in));
      const LatticeCache lat = build_lattice(L, opts);
      detail::emit(io::to_json(classify(lat, opts), L), out_path, out);
      return kOk;
    }
    if (check->parsed()) {
      const LieAlgebra L = io::parse_algebra(detail::read_input(file, in));
      io::Json doc;
      if (subspace_text.empty()) {
        const auto& props = algebra_properties();
        if (std::find(props.begin(), props.end(), property) == props.end()) {
          err << "csupp: unknown property '" << property << "'\n";
          return kInvalid;
        }
        const LatticeCache lat = build_lattice(L, opts);
        doc = detail::algebra_verdict(lat, property, opts);
      } else {
        const auto& props = subspace_properties();
        if (std::find(props.begin(), props.end(), property) == props.end()) {
          err << "csupp: property '" << property << "' does not take a subspace\n";
          return kInvalid;
        }
        const Subspace U = io::parse_subspace(L.field(), L.dim(), subspace_text);
        const LatticeCache lat = build_lattice(L, opts);
        doc = detail::subspace_verdict(lat, property, U);
      }
      detail::emit(doc, out_path, out);
      return doc["holds"].get<bool>() ? kOk : kFalse;
    }
    if (catalog_cmd->parsed()) {
      catalog::Params params;
      if (n_opt->count() > 0) params.n = catalog_n;
      if (gamma_opt->count() > 0) params.gamma = catalog_gamma;
      detail::emit(io::to_json(catalog::make(catalog_name, catalog_p, params)), out_path, out);
      return kOk;
    }
    spec.workers = workers;
    if (samples > 0) {
      spec.mode = CensusMode::Random;
      spec.samples = samples;
    }
    if (spec.min_dim > spec.max_dim) {
      err << "csupp: --min-dim exceeds --dim\n";
      return kInvalid;
    }
    if (census_cmd->parsed()) {
      detail::emit(io::to_json(census(spec), list), out_path, out);
      return kOk;
    }
    const VerdictLog log = verify(theorem, spec);
    detail::emit(io::to_json(log), out_path, out);
    err << theorem << ": " << log.examined << " examined, " << log.counterexamples.size() << " counterexamples\n";
    return log.confirmed() ? kOk : kFalse;
  } catch (const CapExceeded& e) {
    err << "csupp: cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const Error& e) {
    err << "csupp: " << e.what() << '\n';
    return kInvalid;
  }
}

inline int run_cli(int argc, const char* const* argv, std::istream& in = std::cin, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, in, out, err);
}

}  // namespace csupp::cli
