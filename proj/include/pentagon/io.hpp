#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pentagon/census.hpp"
#include "pentagon/clifford.hpp"
#include "pentagon/idempotent.hpp"
#include "pentagon/involutive.hpp"
#include "pentagon/solution.hpp"

namespace pentagon {

using json = nlohmann::ordered_json;

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[i] = digits[v & 0xf];
  return out;
}

// One fixed rendering so identical values always serialize to identical
// bytes.
inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline const json& expect(const json& j, const std::string& field,
                          const std::string& path) {
  if (!j.contains(field))
    throw schema_error(path + "/" + field, "missing field " + field);
  return j[field];
}

inline int expect_int(const json& j, const std::string& path) {
  if (!j.is_number_integer())
    throw schema_error(path, "expected an integer");
  return j.get<int>();
}

inline std::vector<int> expect_row(const json& j, int n,
                                   const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw schema_error(path, "expected an array of length " +
                                 std::to_string(n));
  std::vector<int> out;
  out.reserve(n);
  for (size_t i = 0; i < j.size(); ++i) {
    int v = expect_int(j[i], path + "/" + std::to_string(i));
    if (v < 0 || v >= n)
      throw schema_error(path + "/" + std::to_string(i),
                         "entry out of range [0," + std::to_string(n) + ")");
    out.push_back(v);
  }
  return out;
}

inline std::vector<int> expect_matrix(const json& j, int n,
                                      const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw schema_error(path, "expected " + std::to_string(n) + " rows");
  std::vector<int> cells;
  cells.reserve(n * n);
  for (int x = 0; x < n; ++x) {
    std::vector<int> row = expect_row(j[x], n, path + "/" + std::to_string(x));
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return cells;
}

inline json matrix_json(int n, const std::vector<int>& cells) {
  json rows = json::array();
  for (int x = 0; x < n; ++x) {
    json row = json::array();
    for (int y = 0; y < n; ++y) row.push_back(cells[x * n + y]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

// {"order": n, "table": [[...], ...]}, table[x][y] = x*y, 0-indexed.
inline json table_to_json(const CayleyTable& t) {
  json j;
  j["order"] = t.order;
  j["table"] = detail::matrix_json(t.order, t.cells);
  return j;
}

// Shape and range checks only; associativity is the caller's verification
// step so that bad algebra is reported as a verdict, not a schema error.
struct RawSolutionInput {
  int order = 0;
  std::vector<int> table;
  std::vector<int> theta;  // empty when absent
  bool has_theta = false;
};

inline RawSolutionInput raw_input_from_json(const json& j) {
  if (!j.is_object()) throw schema_error("", "expected a JSON object");
  RawSolutionInput in;
  in.order = detail::expect_int(detail::expect(j, "order", ""), "/order");
  if (in.order < 1 || in.order > kMaxOrder)
    throw schema_error("/order", "order out of range");
  in.table = detail::expect_matrix(detail::expect(j, "table", ""), in.order,
                                   "/table");
  if (j.contains("theta")) {
    in.theta = detail::expect_matrix(j["theta"], in.order, "/theta");
    in.has_theta = true;
  }
  return in;
}

inline CayleyTable table_from_json(const json& j) {
  RawSolutionInput in = raw_input_from_json(j);
  return validate_table(in.order, std::move(in.table));
}

// {"order": n, "table": [[...]], "theta": [[...]]}, theta[x][y] = theta_x(y).
inline json solution_to_json(const PESolution& s) {
  json j = table_to_json(s.table);
  j["theta"] = detail::matrix_json(s.order(), s.theta.cells);
  return j;
}

inline PESolution solution_from_json(const json& j) {
  RawSolutionInput in = raw_input_from_json(j);
  if (!in.has_theta) throw schema_error("/theta", "missing field theta");
  CayleyTable t = validate_table(in.order, std::move(in.table));
  return verify_solution(t, ThetaFamily{in.order, std::move(in.theta)});
}

inline json property_report_to_json(const PropertyReport& r) {
  json j;
  j["involutive"] = r.involutive;
  j["idempotent"] = r.idempotent;
  j["bijective"] = r.bijective;
  j["non_degenerate"] = r.non_degenerate;
  j["commutative"] = r.commutative;
  j["cocommutative"] = r.cocommutative;
  j["qybe"] = r.qybe;
  return j;
}

inline std::string filter_name(const SearchFilter& f) {
  if (f.involutive) return "involutive";
  if (f.idempotent) return "idempotent";
  if (f.bijective) return "bijective";
  if (f.non_degenerate) return "nondegenerate";
  if (f.commutative) return "commutative";
  if (f.cocommutative) return "cocommutative";
  if (f.e_invariant) return "e-invariant";
  if (f.e_fixed) return "e-fixed";
  return "none";
}

inline SearchFilter filter_from_name(const std::string& name) {
  SearchFilter f;
  if (name == "" || name == "none") return f;
  if (name == "involutive") f.involutive = true;
  else if (name == "idempotent") f.idempotent = true;
  else if (name == "bijective") f.bijective = true;
  else if (name == "nondegenerate") f.non_degenerate = true;
  else if (name == "commutative") f.commutative = true;
  else if (name == "cocommutative") f.cocommutative = true;
  else if (name == "e-invariant") f.e_invariant = true;
  else if (name == "e-fixed") f.e_fixed = true;
  else
    throw schema_error("/filter", "unknown filter " + name);
  return f;
}

inline json census_to_json(const CensusReport& r) {
  json j;
  j["order"] = r.order;
  j["filter"] = filter_name(r.filter);
  j["labeled_semigroups"] = r.labeled_semigroups;
  j["iso_semigroups"] = r.iso_semigroups;
  j["anti_iso_semigroups"] = r.anti_iso_semigroups;
  j["labeled_solutions"] = r.labeled_solutions;
  j["iso_classes"] = r.iso_classes;
  j["iso_or_opposite_classes"] = r.iso_or_opposite_classes;
  json files = json::array();
  std::string all;
  for (size_t i = 0; i < r.classes.size(); ++i) {
    std::string text = dump_json(solution_to_json(r.classes[i]));
    all += text;
    char name[32];
    std::snprintf(name, sizeof(name), "solution_%04zu.json", i);
    json entry;
    entry["file"] = name;
    entry["checksum"] = hex64(fnv1a64(text));
    files.push_back(std::move(entry));
  }
  j["catalog_checksum"] = hex64(fnv1a64(all));
  j["classes"] = std::move(files);
  return j;
}

// One file per isomorphism class plus census.json; returns the census text.
inline std::string write_catalog(const CensusReport& r,
                                 const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (size_t i = 0; i < r.classes.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "solution_%04zu.json", i);
    std::ofstream out(dir / name, std::ios::binary);
    out << dump_json(solution_to_json(r.classes[i]));
  }
  std::string text = dump_json(census_to_json(r));
  std::ofstream out(dir / "census.json", std::ios::binary);
  out << text;
  return text;
}

// Idempotent list, per-group element lists and the phi tables (entries in
// carrier element ids; null where phi is undefined).
inline json clifford_structure_to_json(const CliffordStructure& cs) {
  json j;
  j["idempotents"] = cs.idempotents;
  json groups = json::array();
  for (const auto& g : cs.groups) groups.push_back(g);
  j["groups"] = std::move(groups);
  json phi = json::array();
  int m = cs.num_groups();
  for (int i = 0; i < m; ++i) {
    json row = json::array();
    for (int k = 0; k < m; ++k) {
      if (!cs.leq[k][i]) {
        row.push_back(nullptr);
        continue;
      }
      json img = json::array();
      for (int p = 0; p < static_cast<int>(cs.groups[i].size()); ++p)
        img.push_back(cs.groups[k][cs.phi[i][k](p)]);
      row.push_back(std::move(img));
    }
    phi.push_back(std::move(row));
  }
  j["phi"] = std::move(phi);
  return j;
}

namespace detail {

inline void verdict(json& j, const char* name, bool ok,
                    const std::vector<int>& witness) {
  json v;
  v["holds"] = ok;
  if (!ok) v["witness"] = witness;
  j[name] = std::move(v);
}

}  // namespace detail

inline json monoid_report_to_json(const MonoidThetaReport& r) {
  json j;
  detail::verdict(j, "theta_of_one_idempotent", r.theta_of_one_idempotent,
                  r.witness);
  detail::verdict(j, "theta_one_factors", r.theta_one_factors, r.witness);
  detail::verdict(j, "theta_one_range", r.theta_one_range, r.witness);
  detail::verdict(j, "theta_absorbs", r.theta_absorbs, r.witness);
  j["all"] = r.all();
  return j;
}

inline json idempotent_report_to_json(const IdempotentThetaReport& r) {
  json j;
  detail::verdict(j, "a", r.a, r.witness);
  detail::verdict(j, "b", r.b, r.witness);
  detail::verdict(j, "c", r.c, r.witness);
  detail::verdict(j, "d", r.d, r.witness);
  detail::verdict(j, "e", r.e, r.witness);
  detail::verdict(j, "f", r.ff, r.witness);
  detail::verdict(j, "g", r.g, r.witness);
  if (r.monoid) {
    detail::verdict(j, "theta1_idempotent", r.cor_theta1_idempotent, r.witness);
    detail::verdict(j, "theta_collapse", r.cor_theta_collapse, r.witness);
    detail::verdict(j, "theta1_absorbs", r.cor_theta1_absorbs, r.witness);
    detail::verdict(j, "theta_idempotent", r.cor_theta_idempotent, r.witness);
  }
  j["all"] = r.all();
  return j;
}

inline json commutativity_report_to_json(const CommutativityReport& r) {
  json j;
  j["commutative"] = r.commutative;
  j["commutative_identities"] = r.commutative_identities;
  j["cocommutative"] = r.cocommutative;
  j["cocommutative_identities"] = r.cocommutative_identities;
  j["routes_agree"] = r.routes_agree;
  if (r.refined_applicable) {
    j["carrier_commutative"] = r.carrier_commutative;
    j["theta_constant_idempotent_endo"] = r.theta_constant_idempotent_endo;
    j["theta_identity"] = r.theta_identity;
    j["refined_agree"] = r.refined_agree;
  }
  return j;
}

inline json decomposition_to_json(const InvolutiveDecomposition& d) {
  json j;
  j["x_size"] = d.x_size;
  j["a_table"] = detail::matrix_json(d.a_table.order, d.a_table.cells);
  j["g_table"] = detail::matrix_json(d.g_table.order, d.g_table.cells);
  j["sigma"] = d.sigma;
  j["witness"] = d.witness;
  return j;
}

}  // namespace pentagon
