#pragma once

/**
 * @file io.hpp
 * @brief JSON documents: algebras in, reports and verdict logs out.
 *
 * Algebra document:
 *
 *     { "field": { "prime": 2 }, "dim": 3, "basis": ["x", "y", "z"],
 *       "brackets": [ { "i": 0, "j": 1, "coeffs": { "2": 1 } } ] }
 *
 * Only pairs i < j are listed, omitted pairs are zero brackets, and
 * coefficient keys are basis indices. Every emitted document uses a fixed
 * key order; wall-clock figures live only under "timing".
 */

#include <cstdint>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "csupp/census.hpp"
#include "csupp/classify.hpp"
#include "csupp/liealg.hpp"

namespace csupp::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "csupp";
inline constexpr const char* kToolVersion = "1.0.0";

inline Json tool_block() { return Json{{"name", kToolName}, {"version", kToolVersion}}; }

// ---------------------------------------------------------------------------
// Algebra documents

inline Json to_json(const LieAlgebra& L) {
  Json doc;
  doc["field"] = Json{{"prime", L.field().prime()}};
  doc["dim"] = L.dim();
  if (!L.names().empty()) doc["basis"] = L.names();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Vector& v = L.table()[pair_index(L.dim(), i, j)];
      if (is_zero(v)) continue;
      Json coeffs = Json::object();
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_zero()) coeffs[std::to_string(k)] = v[k].value;
      }
      brackets.push_back(Json{{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  }
  doc["brackets"] = brackets;
  return doc;
}

namespace detail {

inline std::size_t index_field(const Json& entry, const char* key, std::size_t dim) {
  if (!entry.contains(key) || !entry[key].is_number_integer()) {
    throw InvalidAlgebra(std::string("bracket entry needs an integer '") + key + "'");
  }
  const auto v = entry[key].get<std::int64_t>();
  if (v < 0 || static_cast<std::uint64_t>(v) >= dim) {
    throw InvalidAlgebra(std::string("bracket index '") + key + "' = " + std::to_string(v) + " out of range");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace detail

/// Parses and validates an algebra document; InvalidAlgebra on any defect
/// (including Jacobi failure, which names the violating basis triple).
inline LieAlgebra algebra_from_json(const Json& doc) {
  if (!doc.is_object()) throw InvalidAlgebra("algebra document must be a JSON object");
  if (!doc.contains("field") || !doc["field"].contains("prime") || !doc["field"]["prime"].is_number_integer()) {
    throw InvalidAlgebra("missing integer field.prime");
  }
  const auto p = doc["field"]["prime"].get<std::int64_t>();
  if (p < 2 || p > std::numeric_limits<std::uint32_t>::max() || !PrimeField::is_prime(static_cast<std::uint32_t>(p))) {
    throw InvalidAlgebra("field.prime = " + std::to_string(p) + " is not a supported prime");
  }
  const PrimeField F(static_cast<std::uint32_t>(p));
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<std::int64_t>() < 0) {
    throw InvalidAlgebra("missing non-negative integer dim");
  }
  const auto n = static_cast<std::size_t>(doc["dim"].get<std::int64_t>());
  std::vector<std::string> names;
  if (doc.contains("basis") && !doc["basis"].is_null()) {
    for (const auto& b : doc["basis"]) {
      if (!b.is_string()) throw InvalidAlgebra("basis names must be strings");
      names.push_back(b.get<std::string>());
    }
    if (names.size() != n) throw InvalidAlgebra("basis has " + std::to_string(names.size()) + " names for dim " + std::to_string(n));
  }
  std::vector<Vector> table(pair_count(n), Vector(n));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) throw InvalidAlgebra("brackets must be an array");
    for (const auto& entry : doc["brackets"]) {
      const std::size_t i = detail::index_field(entry, "i", n);
      const std::size_t j = detail::index_field(entry, "j", n);
      if (i >= j) throw InvalidAlgebra("bracket entry needs i < j, got (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      if (!seen.emplace(i, j).second) {
        throw InvalidAlgebra("duplicate bracket entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      Vector& v = table[pair_index(n, i, j)];
      if (!entry.contains("coeffs") || !entry["coeffs"].is_object()) throw InvalidAlgebra("bracket entry needs a coeffs object");
      for (const auto& [key, value] : entry["coeffs"].items()) {
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          k = std::stoul(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          throw InvalidAlgebra("coefficient key '" + key + "' is not a basis index");
        }
        if (k >= n) throw InvalidAlgebra("coefficient index " + key + " out of range");
        if (!value.is_number_integer()) throw InvalidAlgebra("coefficients must be integers");
        v[k] = F.from_int(value.get<std::int64_t>());
      }
    }
  }
  return LieAlgebra(F, n, std::move(table), std::move(names));
}

inline LieAlgebra parse_algebra(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidAlgebra(std::string("malformed JSON: ") + e.what());
  }
  return algebra_from_json(doc);
}

/// FNV-1a over the compact semantic document (basis names excluded).
inline std::string algebra_hash(const LieAlgebra& L) {
  Json doc = to_json(L);
  doc.erase("basis");
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : doc.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

// ---------------------------------------------------------------------------
// Subspaces

inline Json rows(const Subspace& U) {
  Json out = Json::array();
  for (const auto& r : U.basis()) {
    Json row = Json::array();
    for (auto s : r) row.push_back(s.value);
    out.push_back(row);
  }
  return out;
}

inline Json rows(const std::optional<Subspace>& U) { return U ? rows(*U) : Json(nullptr); }

/// Space-separated integers, read row by row into n-vectors and spanned.
inline Subspace parse_subspace(const PrimeField& F, std::size_t n, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::int64_t> values;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InvalidAlgebra("subspace entry '" + tok + "' is not an integer");
    }
  }
  if (n == 0 || values.size() % n != 0) {
    throw DimensionMismatch("subspace has " + std::to_string(values.size()) + " entries, not a multiple of dim " +
                            std::to_string(n));
  }
  std::vector<Vector> vecs;
  for (std::size_t r = 0; r < values.size() / n; ++r) {
    Vector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = F.from_int(values[r * n + k]);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(F, n, std::move(vecs));
}

// ---------------------------------------------------------------------------
// Reports

inline Json to_json(const ClassificationReport& r, const LieAlgebra& L) {
  Json doc;
  doc["tool"] = tool_block();
  Json alg = to_json(L);
  alg["hash"] = algebra_hash(L);
  doc["algebra"] = alg;
  doc["degenerate"] = r.degenerate;
  doc["predicates"] = Json{{"solvable", r.solvable},
                           {"nilpotent", r.nilpotent},
                           {"supersolvable", r.supersolvable},
                           {"simple", r.simple},
                           {"semisimple", r.semisimple},
                           {"phi_free", r.phi_free},
                           {"elementary", r.elementary.holds},
                           {"E_algebra", r.e_algebra.holds},
                           {"c_supplemented", r.c_supplemented.holds},
                           {"completely_factorisable", r.completely_factorisable.holds},
                           {"semisimple_shape", r.semisimple_shape.holds},
                           {"main_decomposition", r.main_decomposition.holds}};
  doc["phi_dim"] = r.frattini_result.ideal.dim();
  Json minimal = Json::array();
  for (const auto& m : r.minimal_ideal_list) minimal.push_back(rows(m));
  Json summands = Json::array();
  if (r.semisimple_shape.holds) {
    for (const auto& s : r.semisimple_shape.summands) summands.push_back(rows(s));
  }
  doc["witnesses"] = Json{
      {"frattini_subalgebra", rows(r.frattini_result.subalgebra)},
      {"phi", rows(r.frattini_result.ideal)},
      {"derived_algebra", rows(r.derived_algebra)},
      {"radical", rows(r.radical_space)},
      {"abelian_socle", rows(r.abelian_socle_space)},
      {"minimal_ideals", minimal},
      {"c_supplemented_failing", rows(r.c_supplemented.failing)},
      {"completely_factorisable_failing", rows(r.completely_factorisable.failing)},
      {"elementary_failing", rows(r.elementary.failing)},
      {"E_algebra_failing", rows(r.e_algebra.failing)},
      {"semisimple_summands", summands},
      {"decomposition",
       Json{{"R", rows(r.main_decomposition.R)},
            {"S", rows(r.main_decomposition.S)},
            {"non_ideal_phi_subalgebra", rows(r.main_decomposition.non_ideal_subalgebra)},
            {"reason", r.main_decomposition.reason}}}};
  doc["lattice"] = Json{{"subspaces_scanned", r.subspaces_scanned},
                        {"subalgebras", r.subalgebra_count},
                        {"ideals", r.ideal_count},
                        {"maximal_subalgebras", r.maximal_count}};
  doc["timing"] = Json{{"elapsed_ms", r.elapsed_ms}};
  return doc;
}

inline Json to_json(const VerdictLog& log) {
  Json doc;
  doc["tool"] = tool_block();
  doc["theorem"] = log.theorem;
  doc["universe"] = log.universe;
  doc["candidates"] = log.candidates;
  doc["examined"] = log.examined;
  doc["confirmed"] = log.confirmed();
  Json cex = Json::array();
  for (const auto& c : log.counterexamples) {
    Json sources = Json::array();
    for (const auto& [dim, index] : c.sources) sources.push_back(Json{{"dim", dim}, {"table_index", index}});
    cex.push_back(Json{{"sources", sources}, {"detail", c.detail}, {"algebra", to_json(c.algebra)}});
  }
  doc["counterexamples"] = cex;
  doc["timing"] = Json{{"elapsed_ms", log.elapsed_ms}};
  return doc;
}

inline Json to_json(const CensusSummary& s, bool list_algebras) {
  Json doc;
  doc["tool"] = tool_block();
  doc["census"] = s.universe;
  doc["candidates"] = s.candidates;
  Json per_dim = Json::object();
  for (const auto& [d, c] : s.algebras_per_dim) per_dim[std::to_string(d)] = c;
  doc["algebras_per_dim"] = per_dim;
  doc["counts"] = Json{{"algebras", s.algebras.size()},
                       {"solvable", s.solvable},
                       {"supersolvable", s.supersolvable},
                       {"phi_free", s.phi_free},
                       {"c_supplemented", s.c_supplemented},
                       {"completely_factorisable", s.completely_factorisable}};
  if (list_algebras) {
    Json list = Json::array();
    for (const auto& a : s.algebras) {
      list.push_back(Json{{"dim", a.dim}, {"table_index", a.index}, {"algebra", to_json(a.algebra)}});
    }
    doc["algebras"] = list;
  }
  doc["timing"] = Json{{"elapsed_ms", s.elapsed_ms}};
  return doc;
}

/// Document with the "timing" block removed, for byte comparisons.
inline std::string without_timing(Json doc) {
  doc.erase("timing");
  return doc.dump();
}

}  // namespace csupp::io
