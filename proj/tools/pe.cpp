// pe: command-line front end for the pentagon-equation workbench.
//
// Verbs: verify, properties, enumerate, census, construct, retract,
// decompose, opposite, iso.  All structured output is JSON on stdout.
// Exit codes: 0 success / true verdict, 1 failed verification or false
// verdict, 2 malformed input or usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pentagon/constructions.hpp"
#include "pentagon/idempotent.hpp"
#include "pentagon/io.hpp"

namespace {

using pentagon::json;

json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pentagon::schema_error("", "cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw pentagon::schema_error("", "invalid JSON in " + path);
  return j;
}

void emit(const json& j) { std::cout << pentagon::dump_json(j); }

json error_json(const pentagon::validation_error& e) {
  json j;
  j["valid"] = false;
  j["error"] = e.code;
  j["witness"] = e.witness;
  j["message"] = e.what();
  return j;
}

pentagon::QybeConvention convention_from(const std::string& name) {
  if (name == "qybe-a") return pentagon::QybeConvention::A;
  if (name == "qybe-b") return pentagon::QybeConvention::B;
  throw pentagon::schema_error("/convention", "unknown convention " + name);
}

std::vector<int> int_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw pentagon::schema_error(path, "expected an array");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(
        pentagon::detail::expect_int(j[i], path + "/" + std::to_string(i)));
  return out;
}

pentagon::ElementMap map_from(const json& j, int order, const std::string& path) {
  std::vector<int> img = int_list(j, path);
  if (static_cast<int>(img.size()) != order)
    throw pentagon::schema_error(path, "expected " + std::to_string(order) +
                                           " entries");
  for (int v : img)
    if (v < 0 || v >= order)
      throw pentagon::schema_error(path, "entry out of range");
  return pentagon::ElementMap{order, std::move(img)};
}

json run_construct(const std::string& kind, const json& params) {
  using namespace pentagon;
  if (kind == "lyubashenko") {
    int n = detail::expect_int(detail::expect(params, "order", ""), "/order");
    return solution_to_json(lyubashenko(n, map_from(params["f"], n, "/f"),
                                        map_from(params["g"], n, "/g")));
  }
  if (kind == "endo") {
    CayleyTable s = table_from_json(detail::expect(params, "semigroup", ""));
    return solution_to_json(
        endo_solution(s, map_from(detail::expect(params, "gamma", ""), s.order,
                                  "/gamma")));
  }
  if (kind == "leftzero-group") {
    CayleyTable g = table_from_json(detail::expect(params, "group", ""));
    int n = detail::expect_int(detail::expect(params, "n", ""), "/n");
    return solution_to_json(left_zero_group_solution(
        g, n, int_list(detail::expect(params, "sigma", ""), "/sigma")));
  }
  if (kind == "factorization") {
    CayleyTable g = table_from_json(detail::expect(params, "group", ""));
    ExactFactorizationSolutions out = exact_factorization_solutions(
        g, int_list(detail::expect(params, "h", ""), "/h"),
        int_list(detail::expect(params, "k", ""), "/k"));
    json j;
    j["s"] = solution_to_json(out.s);
    j["r"] = solution_to_json(out.r);
    j["r_equals_tau_s_tau"] = out.r_equals_tau_s_tau;
    j["r_equals_opposite_s"] = out.r_equals_opposite_s;
    return j;
  }
  if (kind == "kashaev-sergeev") {
    CayleyTable g = table_from_json(detail::expect(params, "group", ""));
    return solution_to_json(kashaev_sergeev(
        g, int_list(detail::expect(params, "carrier", ""), "/carrier"),
        int_list(detail::expect(params, "lambda", ""), "/lambda"),
        int_list(detail::expect(params, "mu", ""), "/mu")));
  }
  if (kind == "group-quotient") {
    CayleyTable g = table_from_json(detail::expect(params, "group", ""));
    GroupSolutionData data;
    data.kernel = int_list(detail::expect(params, "kernel", ""), "/kernel");
    data.reps = int_list(detail::expect(params, "reps", ""), "/reps");
    if (params.contains("mu")) {
      data.mu = map_from(params["mu"], g.order, "/mu");
    } else {
      // mu(x) = the representative of Kx
      SemigroupFacts f = analyze(g);
      if (!f.is_group)
        throw validation_error("NotAGroup", {}, "group-quotient needs a group");
      const std::vector<int>& inv = *f.inverses;
      data.mu.order = g.order;
      data.mu.image.assign(g.order, -1);
      std::vector<char> in_k(g.order, 0);
      for (int x : data.kernel) in_k[x] = 1;
      for (int x = 0; x < g.order; ++x)
        for (int r : data.reps)
          if (in_k[g.at(r, inv[x])]) data.mu.image[x] = r;
      for (int x = 0; x < g.order; ++x)
        if (data.mu.image[x] < 0)
          throw validation_error("BadRepresentativeSystem", {x},
                                 "no representative for some coset");
    }
    return solution_to_json(group_quotient_solution(g, data));
  }
  if (kind == "matched") {
    MatchedQuadruple q;
    q.s = solution_from_json(detail::expect(params, "s", ""));
    q.t = solution_from_json(detail::expect(params, "t", ""));
    const json& alpha = detail::expect(params, "alpha", "");
    const json& beta = detail::expect(params, "beta", "");
    for (size_t u = 0; u < alpha.size(); ++u)
      q.alpha.push_back(map_from(alpha[u], q.s.order(), "/alpha"));
    for (size_t a = 0; a < beta.size(); ++a)
      q.beta.push_back(map_from(beta[a], q.t.order(), "/beta"));
    return solution_to_json(matched_product(q));
  }
  if (kind == "ext-sigma") {
    CayleyTable a = table_from_json(detail::expect(params, "a", ""));
    int xs = detail::expect_int(detail::expect(params, "x_size", ""), "/x_size");
    const json& sig = detail::expect(params, "sigma", "");
    std::vector<std::vector<int>> sigma;
    for (size_t i = 0; i < sig.size(); ++i)
      sigma.push_back(int_list(sig[i], "/sigma/" + std::to_string(i)));
    return solution_to_json(ext_sigma(a, xs, sigma));
  }
  if (kind == "t-a") {
    return solution_to_json(
        t_a_solution(table_from_json(detail::expect(params, "a", ""))));
  }
  if (kind == "clifford-glue") {
    CayleyTable s = table_from_json(detail::expect(params, "semigroup", ""));
    CliffordStructure cs = clifford_structure(s);
    int m = cs.num_groups();
    CliffordGlue glue;
    glue.group_solutions.resize(m);
    std::vector<char> have(m, 0);
    const json& sols = detail::expect(params, "solutions", "");
    for (size_t i = 0; i < sols.size(); ++i) {
      int e = detail::expect_int(detail::expect(sols[i], "e", "/solutions"),
                                 "/solutions/e");
      int gi = -1;
      for (int k = 0; k < m; ++k)
        if (cs.idempotents[k] == e) gi = k;
      if (gi < 0)
        throw schema_error("/solutions", "e is not an idempotent");
      int q = static_cast<int>(cs.groups[gi].size());
      glue.group_solutions[gi] = ThetaFamily{
          q, detail::expect_matrix(detail::expect(sols[i], "theta", "/solutions"),
                                   q, "/solutions/theta")};
      have[gi] = 1;
    }
    for (int k = 0; k < m; ++k)
      if (!have[k]) throw schema_error("/solutions", "missing a group solution");
    // epsilon: phi entries are filled automatically, others must be given
    glue.epsilon.assign(m, std::vector<ElementMap>(m));
    std::vector<std::vector<char>> set(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (cs.leq[j][i]) {
          glue.epsilon[i][j] = cs.phi[i][j];
          set[i][j] = 1;
        }
    if (params.contains("epsilon")) {
      const json& eps = params["epsilon"];
      for (size_t i = 0; i < eps.size(); ++i) {
        int from = detail::expect_int(detail::expect(eps[i], "from", "/epsilon"),
                                      "/epsilon/from");
        int to = detail::expect_int(detail::expect(eps[i], "to", "/epsilon"),
                                    "/epsilon/to");
        int gi = -1, gj = -1;
        for (int k = 0; k < m; ++k) {
          if (cs.idempotents[k] == from) gi = k;
          if (cs.idempotents[k] == to) gj = k;
        }
        if (gi < 0 || gj < 0)
          throw schema_error("/epsilon", "from/to must be idempotents");
        glue.epsilon[gi][gj] =
            map_from(detail::expect(eps[i], "map", "/epsilon"),
                     static_cast<int>(cs.groups[gi].size()), "/epsilon/map");
        // allow re-stating a phi entry only if it matches
        set[gi][gj] = 1;
      }
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (!set[i][j])
          throw schema_error("/epsilon", "missing epsilon map");
    return solution_to_json(glue_e_fixed(s, cs, glue));
  }
  if (kind == "idempotent-central") {
    CayleyTable mtab = table_from_json(detail::expect(params, "monoid", ""));
    IdempotentCentralData data;
    data.mu = map_from(detail::expect(params, "mu", ""), mtab.order, "/mu");
    const json& thetas = detail::expect(params, "thetas", "");
    for (size_t i = 0; i < thetas.size(); ++i) {
      int e = detail::expect_int(detail::expect(thetas[i], "e", "/thetas"),
                                 "/thetas/e");
      data.thetas.emplace_back(
          e, map_from(detail::expect(thetas[i], "theta", "/thetas"), mtab.order,
                      "/thetas/theta"));
    }
    return solution_to_json(construct_idempotent_central(mtab, data));
  }
  throw pentagon::schema_error("/kind", "unknown construction kind " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pentagon-equation workbench"};
  app.require_subcommand(1);

  std::string file, file2, out_dir, out_file;
  std::string filter_name, kind, convention = "qybe-a";
  int order = 0, workers = 1;
  bool up_to_iso = false, allow_slow = false;

  CLI::App* verify = app.add_subcommand("verify", "check a solution file");
  verify->add_option("file", file)->required();

  CLI::App* props = app.add_subcommand("properties", "classify a solution");
  props->add_option("file", file)->required();
  props->add_option("--convention", convention,
                    "set Yang-Baxter convention (qybe-a|qybe-b)");

  CLI::App* enumerate = app.add_subcommand("enumerate",
                                           "list semigroups or solutions");
  enumerate->add_option("file", file, "semigroup file (solutions mode)");
  enumerate->add_option("--order", order, "enumerate semigroups of this order");
  enumerate->add_option("--filter", filter_name);
  enumerate->add_flag("--up-to-iso", up_to_iso);
  enumerate->add_flag("--allow-slow", allow_slow);
  enumerate->add_option("--workers", workers);

  CLI::App* census_cmd = app.add_subcommand("census", "global solution census");
  census_cmd->add_option("--order", order)->required();
  census_cmd->add_option("--filter", filter_name);
  census_cmd->add_option("--workers", workers);
  census_cmd->add_option("--out", out_dir, "write the catalog here");

  CLI::App* construct = app.add_subcommand("construct", "run a construction");
  construct->add_option("--kind", kind)->required();
  construct->add_option("params", file)->required();
  construct->add_option("--out", out_file);

  CLI::App* retract_cmd = app.add_subcommand("retract",
                                             "retract of an involutive solution");
  retract_cmd->add_option("file", file)->required();

  CLI::App* decomp = app.add_subcommand("decompose",
                                        "factor an involutive solution");
  decomp->add_option("file", file)->required();

  CLI::App* opp = app.add_subcommand("opposite", "opposite of a bijective solution");
  opp->add_option("file", file)->required();

  CLI::App* iso = app.add_subcommand("iso", "test two solutions for isomorphism");
  iso->add_option("a", file)->required();
  iso->add_option("b", file2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  using namespace pentagon;
  try {
    if (verify->parsed()) {
      json in = load_json(file);
      try {
        RawSolutionInput raw = raw_input_from_json(in);
        if (!raw.has_theta) throw schema_error("/theta", "missing field theta");
        CayleyTable t = validate_table(raw.order, std::move(raw.table));
        verify_solution(t, ThetaFamily{raw.order, std::move(raw.theta)});
      } catch (const validation_error& e) {
        emit(error_json(e));
        return 1;
      }
      json ok;
      ok["valid"] = true;
      emit(ok);
      return 0;
    }
    if (props->parsed()) {
      PESolution s = solution_from_json(load_json(file));
      PropertyReport pr = classify_properties(s, convention_from(convention));
      json j = property_report_to_json(pr);
      auto [e_inv, e_fix] = invariance_flags(s);
      j["e_invariant"] = e_inv;
      j["e_fixed"] = e_fix;
      j["convention"] = convention;
      j["commutativity"] =
          commutativity_report_to_json(commutativity_characterizations(s));
      SemigroupFacts facts = analyze(s.table);
      if (facts.is_monoid)
        j["monoid_theta_facts"] = monoid_report_to_json(monoid_theta_checks(s));
      if (pr.idempotent)
        j["idempotent_theta_facts"] =
            idempotent_report_to_json(idempotent_theta_checks(s));
      if (facts.is_clifford)
        j["clifford_structure"] =
            clifford_structure_to_json(clifford_structure(s.table));
      emit(j);
      return 0;
    }
    if (enumerate->parsed()) {
      json j;
      if (!file.empty()) {
        CayleyTable s = table_from_json(load_json(file));
        SearchFilter f = filter_from_name(filter_name);
        f.up_to_iso = up_to_iso;
        std::vector<ThetaFamily> sols = enumerate_solutions(s, f, workers);
        j["order"] = s.order;
        j["filter"] = filter_name.empty() ? "none" : filter_name;
        j["count"] = sols.size();
        json arr = json::array();
        for (const ThetaFamily& t : sols)
          arr.push_back(detail::matrix_json(s.order, t.cells));
        j["solutions"] = std::move(arr);
      } else if (order > 0) {
        std::vector<CayleyTable> semis =
            enumerate_semigroups(order, up_to_iso, allow_slow);
        j["order"] = order;
        j["up_to_iso"] = up_to_iso;
        j["count"] = semis.size();
        json arr = json::array();
        for (const CayleyTable& t : semis)
          arr.push_back(detail::matrix_json(t.order, t.cells));
        j["semigroups"] = std::move(arr);
      } else {
        std::cerr << "enumerate needs a semigroup file or --order\n";
        return 2;
      }
      emit(j);
      return 0;
    }
    if (census_cmd->parsed()) {
      CensusReport r = census(order, filter_from_name(filter_name), workers);
      if (!out_dir.empty())
        write_catalog(r, out_dir);
      emit(census_to_json(r));
      return 0;
    }
    if (construct->parsed()) {
      json result = run_construct(kind, load_json(file));
      if (!out_file.empty()) {
        std::ofstream out(out_file, std::ios::binary);
        out << dump_json(result);
      }
      emit(result);
      return 0;
    }
    if (retract_cmd->parsed()) {
      emit(solution_to_json(retract(solution_from_json(load_json(file)))));
      return 0;
    }
    if (decomp->parsed()) {
      emit(decomposition_to_json(
          decompose_involutive(solution_from_json(load_json(file)))));
      return 0;
    }
    if (opp->parsed()) {
      emit(solution_to_json(opposite(solution_from_json(load_json(file)))));
      return 0;
    }
    if (iso->parsed()) {
      PESolution a = solution_from_json(load_json(file));
      PESolution b = solution_from_json(load_json(file2));
      auto psi = solutions_isomorphic(a, b);
      json j;
      j["isomorphic"] = psi.has_value();
      if (psi) j["psi"] = *psi;
      emit(j);
      return psi.has_value() ? 0 : 1;
    }
  } catch (const schema_error& e) {
    json j;
    j["error"] = "SchemaError";
    j["path"] = e.path;
    j["message"] = e.what();
    emit(j);
    return 2;
  } catch (const validation_error& e) {
    emit(error_json(e));
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
