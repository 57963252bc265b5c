#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pentagon/congruence.hpp"
#include "pentagon/solution.hpp"

namespace pentagon {

// A Clifford semigroup decomposed as a semilattice of groups: disjoint
// maximal subgroups G_e indexed by the idempotents, glued by the structure
// homomorphisms phi_{e,f}(x) = f*x for f <= e (where e <= f iff ef=fe=e).
struct CliffordStructure {
  std::vector<int> idempotents;            // ascending element ids
  std::vector<int> group_index_of;         // element -> index into groups
  std::vector<std::vector<int>> groups;    // per idempotent, elements ascending
  std::vector<CayleyTable> group_tables;   // on positions of groups[i]
  std::vector<std::vector<char>> leq;      // leq[i][j]: E[i] <= E[j]
  // phi[i][j]: positions of groups[i] -> positions of groups[j], defined
  // when E[j] <= E[i]; empty image otherwise.
  std::vector<std::vector<ElementMap>> phi;

  int num_groups() const { return static_cast<int>(idempotents.size()); }

  int position_in_group(int g, int element) const {
    const auto& v = groups[g];
    return static_cast<int>(std::find(v.begin(), v.end(), element) - v.begin());
  }
};

inline CliffordStructure clifford_structure(const CayleyTable& s) {
  SemigroupFacts f = analyze(s);
  if (!f.is_clifford)
    throw validation_error("NotClifford", {}, "carrier is not Clifford");
  const std::vector<int>& inv = *f.inverses;
  CliffordStructure cs;
  cs.idempotents = f.idempotents;
  int m = cs.num_groups();
  cs.group_index_of.assign(s.order, -1);
  cs.groups.resize(m);
  for (int x = 0; x < s.order; ++x) {
    int e = s.at(x, inv[x]);
    for (int i = 0; i < m; ++i)
      if (cs.idempotents[i] == e) {
        cs.group_index_of[x] = i;
        cs.groups[i].push_back(x);
      }
  }
  for (int i = 0; i < m; ++i) {
    if (cs.groups[i].empty())
      throw validation_error("NotClifford", {cs.idempotents[i]},
                             "idempotent with empty group");
    cs.group_tables.push_back(subtable(s, cs.groups[i]));
    if (!detail::is_group_table(cs.group_tables.back()))
      throw validation_error("NotClifford", {cs.idempotents[i]},
                             "maximal class is not a group");
  }
  cs.leq.assign(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int e = cs.idempotents[i], ff = cs.idempotents[j];
      cs.leq[i][j] = s.at(e, ff) == e && s.at(ff, e) == e;
    }
  cs.phi.assign(m, std::vector<ElementMap>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!cs.leq[j][i]) continue;  // need E[j] <= E[i]
      int fj = cs.idempotents[j];
      ElementMap& p = cs.phi[i][j];
      p.order = static_cast<int>(cs.groups[i].size());
      p.image.resize(p.order);
      for (int k = 0; k < p.order; ++k) {
        int y = s.at(fj, cs.groups[i][k]);
        int pos = cs.position_in_group(j, y);
        if (pos >= static_cast<int>(cs.groups[j].size()))
          throw validation_error("NotClifford", {fj, cs.groups[i][k]},
                                 "phi image escapes its group");
        p.image[k] = pos;
      }
    }
  // Product law x*y = phi_{e,ef}(x) phi_{f,ef}(y) plus homomorphism and
  // composition identities for phi.
  for (int x = 0; x < s.order; ++x)
    for (int y = 0; y < s.order; ++y) {
      int gi = cs.group_index_of[x], gj = cs.group_index_of[y];
      int ef = s.at(cs.idempotents[gi], cs.idempotents[gj]);
      int gk = cs.group_index_of[ef];
      int px = cs.phi[gi][gk](cs.position_in_group(gi, x));
      int py = cs.phi[gj][gk](cs.position_in_group(gj, y));
      int prod = cs.groups[gk][cs.group_tables[gk].at(px, py)];
      if (prod != s.at(x, y))
        throw validation_error("NotClifford", {x, y}, "product law fails");
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!cs.leq[j][i]) continue;
      const CayleyTable& gi = cs.group_tables[i];
      const CayleyTable& gj = cs.group_tables[j];
      for (int a = 0; a < gi.order; ++a)
        for (int b = 0; b < gi.order; ++b)
          if (cs.phi[i][j](gi.at(a, b)) !=
              gj.at(cs.phi[i][j](a), cs.phi[i][j](b)))
            throw validation_error("NotClifford", {i, j},
                                   "phi is not a homomorphism");
      for (int k = 0; k < m; ++k)
        if (cs.leq[k][j])
          for (int a = 0; a < gi.order; ++a)
            if (cs.phi[j][k](cs.phi[i][j](a)) != cs.phi[i][k](a))
              throw validation_error("NotClifford", {i, j, k},
                                     "phi composition fails");
    }
  return cs;
}

struct CanonicalCliffordSolutions {
  PESolution i_solution;  // (xy, y)
  PESolution f_solution;  // (xy, y y^-1)
  std::vector<std::pair<int, PESolution>> e_solutions;  // (xy, e) per e
};

inline CanonicalCliffordSolutions canonical_clifford_solutions(
    const CayleyTable& s) {
  SemigroupFacts f = analyze(s);
  if (!f.is_clifford)
    throw validation_error("NotClifford", {}, "carrier is not Clifford");
  const std::vector<int>& inv = *f.inverses;
  int n = s.order;
  CanonicalCliffordSolutions out;
  out.i_solution = identity_solution(s);
  ThetaFamily fth{n, std::vector<int>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) fth.cells[x * n + y] = s.at(y, inv[y]);
  out.f_solution = verify_solution(s, fth);
  for (int e : f.idempotents) {
    ThetaFamily eth{n, std::vector<int>(n * n, e)};
    out.e_solutions.emplace_back(e, verify_solution(s, eth));
  }
  return out;
}

// e_invariant: theta_x constant on idempotent arguments.
// e_fixed: theta_x fixes every idempotent.
inline std::pair<bool, bool> invariance_flags(const PESolution& s) {
  SemigroupFacts f = analyze(s.table);
  bool invariant = true, fixed = true;
  for (int x = 0; x < s.order(); ++x) {
    for (int e : f.idempotents) {
      if (s.theta.at(x, e) != s.theta.at(x, f.idempotents[0]))
        invariant = false;
      if (s.theta.at(x, e) != e) fixed = false;
    }
  }
  return {invariant, fixed};
}

// --- congruence pairs (Ker / trace machinery on inverse semigroups) ---

// K a normal subsemigroup (full, closed, inverse-closed, self-conjugate
// under all of X) together with a normal congruence tau on the idempotents,
// given as a partition of positions in the ascending idempotent list.
struct CongruencePairData {
  std::vector<int> kernel;  // ascending element ids
  Congruence trace;         // over idempotent positions
};

namespace detail {

struct InverseContext {
  SemigroupFacts facts;
  std::vector<int> epos;  // element -> idempotent position or -1

  static InverseContext make(const CayleyTable& s) {
    InverseContext c;
    c.facts = analyze(s);
    if (!c.facts.is_inverse)
      throw validation_error("NotInverse", {}, "carrier is not inverse");
    c.epos.assign(s.order, -1);
    for (size_t i = 0; i < c.facts.idempotents.size(); ++i)
      c.epos[c.facts.idempotents[i]] = static_cast<int>(i);
    return c;
  }
};

}  // namespace detail

// Returns an explanation for the first failed pair axiom, or nullopt.
inline std::optional<std::string> congruence_pair_violation(
    const CayleyTable& s, const CongruencePairData& pair) {
  detail::InverseContext ctx = detail::InverseContext::make(s);
  const std::vector<int>& inv = *ctx.facts.inverses;
  const std::vector<int>& es = ctx.facts.idempotents;
  int n = s.order;
  std::vector<char> in_k(n, 0);
  for (int x : pair.kernel) in_k[x] = 1;
  for (int e : es)
    if (!in_k[e]) return "kernel must contain every idempotent";
  for (int a : pair.kernel) {
    if (!in_k[inv[a]]) return "kernel not inverse-closed";
    for (int b : pair.kernel)
      if (!in_k[s.at(a, b)]) return "kernel not closed under the product";
  }
  for (int a = 0; a < n; ++a)
    for (int k : pair.kernel)
      if (!in_k[s.at(s.at(inv[a], k), a)]) return "kernel not self-conjugate";
  if (pair.trace.order != static_cast<int>(es.size()))
    return "trace must partition the idempotents";
  // tau must be a congruence on the idempotent subsemigroup and normal.
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = 0; j < es.size(); ++j) {
      if (!pair.trace.related(static_cast<int>(i), static_cast<int>(j)))
        continue;
      for (size_t k = 0; k < es.size(); ++k) {
        int l = ctx.epos[s.at(es[i], es[k])], r = ctx.epos[s.at(es[j], es[k])];
        if (l < 0 || r < 0 || !pair.trace.related(l, r))
          return "trace is not a congruence on E(X)";
      }
      for (int a = 0; a < n; ++a) {
        int l = ctx.epos[s.at(s.at(inv[a], es[i]), a)];
        int r = ctx.epos[s.at(s.at(inv[a], es[j]), a)];
        if (l < 0 || r < 0 || !pair.trace.related(l, r))
          return "trace is not normal";
      }
    }
  for (int a = 0; a < n; ++a)
    for (int e : es)
      if (in_k[s.at(a, e)] &&
          pair.trace.related(ctx.epos[e], ctx.epos[s.at(inv[a], a)]) &&
          !in_k[a])
        return "pair condition fails: ae in K and e ~ a^-1 a but a not in K";
  for (int k : pair.kernel)
    if (!pair.trace.related(ctx.epos[s.at(k, inv[k])],
                            ctx.epos[s.at(inv[k], k)]))
      return "pair condition fails: kk^-1 !~ k^-1 k for kernel element";
  return std::nullopt;
}

// rho = {(a,b) : a^-1 a ~ b^-1 b in tau and a b^-1 in K}; verified to be a
// congruence whose kernel and trace give the pair back.
inline Congruence congruence_from_pair(const CayleyTable& s,
                                       const CongruencePairData& pair) {
  if (auto why = congruence_pair_violation(s, pair))
    throw validation_error("NotCongruencePair", {}, *why);
  detail::InverseContext ctx = detail::InverseContext::make(s);
  const std::vector<int>& inv = *ctx.facts.inverses;
  int n = s.order;
  std::vector<char> in_k(n, 0);
  for (int x : pair.kernel) in_k[x] = 1;
  std::vector<int> raw(n);
  std::iota(raw.begin(), raw.end(), 0);
  // union-find over the relation
  std::vector<int>& parent = raw;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool rel = pair.trace.related(ctx.epos[s.at(inv[a], a)],
                                    ctx.epos[s.at(inv[b], b)]) &&
                 in_k[s.at(a, inv[b])];
      if (rel) parent[find(a)] = find(b);
    }
  std::vector<int> cls(n);
  for (int x = 0; x < n; ++x) cls[x] = find(x);
  Congruence rho = normalize_partition(n, cls);
  if (!is_compatible(s, rho))
    throw validation_error("TheoremViolation", {},
                           "pair did not induce a congruence");
  // Round trip: the relation itself must already be transitive-consistent.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool rel = pair.trace.related(ctx.epos[s.at(inv[a], a)],
                                    ctx.epos[s.at(inv[b], b)]) &&
                 in_k[s.at(a, inv[b])];
      if (rel != rho.related(a, b))
        throw validation_error("TheoremViolation", {a, b},
                               "pair relation is not an equivalence");
    }
  return rho;
}

// Ker rho = union of idempotent classes; tr rho = restriction to E(X).
inline CongruencePairData kernel_and_trace(const CayleyTable& s,
                                           const Congruence& rho) {
  detail::InverseContext ctx = detail::InverseContext::make(s);
  if (!is_compatible(s, rho))
    throw validation_error("NotCongruence", {}, "rho is not a congruence");
  const std::vector<int>& es = ctx.facts.idempotents;
  CongruencePairData pair;
  for (int x = 0; x < s.order; ++x)
    for (int e : es)
      if (rho.related(x, e)) {
        pair.kernel.push_back(x);
        break;
      }
  std::vector<int> traw(es.size());
  for (size_t i = 0; i < es.size(); ++i) traw[i] = rho.class_of[es[i]];
  pair.trace = normalize_partition(static_cast<int>(es.size()), traw);
  if (auto why = congruence_pair_violation(s, pair))
    throw validation_error("TheoremViolation", {},
                           "kernel/trace of a congruence must form a pair: " +
                               *why);
  if (!(congruence_from_pair(s, pair) == rho))
    throw validation_error("TheoremViolation", {},
                           "rho_(Ker rho, tr rho) != rho");
  return pair;
}

// --- E(X)-invariant solutions on Clifford semigroups ---

// s(x,y) = (xy, mu(x)^-1 mu(xy)) for a congruence rho with group quotient,
// a representative system R of X/rho and mu picking rho-representatives
// subject to mu(xy) = mu(x) mu(x)^-1 mu(xy).
inline PESolution construct_e_invariant(const CayleyTable& s,
                                        const Congruence& rho,
                                        const std::vector<int>& reps,
                                        const ElementMap& mu) {
  SemigroupFacts f = analyze(s);
  if (!f.is_clifford)
    throw validation_error("NotClifford", {}, "carrier is not Clifford");
  if (!is_compatible(s, rho))
    throw validation_error("NotCongruence", {}, "rho is not a congruence");
  if (!detail::is_group_table(quotient_table(s, rho)))
    throw validation_error("QuotientNotGroup", {}, "X/rho is not a group");
  std::vector<char> class_hit(rho.num_classes, 0);
  for (int r : reps) {
    if (class_hit[rho.class_of[r]]++)
      throw validation_error("BadRepresentativeSystem", {r},
                             "class hit twice by R");
  }
  if (static_cast<int>(reps.size()) != rho.num_classes)
    throw validation_error("BadRepresentativeSystem", {},
                           "R must meet every class once");
  std::vector<char> in_r(s.order, 0);
  for (int r : reps) in_r[r] = 1;
  for (int x = 0; x < s.order; ++x)
    if (!in_r[mu(x)] || !rho.related(mu(x), x))
      throw validation_error("BadRepresentativeSystem", {x},
                             "mu(x) must be the representative of x's class");
  const std::vector<int>& inv = *f.inverses;
  for (int x = 0; x < s.order; ++x)
    for (int y = 0; y < s.order; ++y) {
      int xy = s.at(x, y);
      if (mu(xy) != s.at(s.at(mu(x), inv[mu(x)]), mu(xy)))
        throw validation_error("MuConditionFailed", {x, y},
                               "mu(xy) != mu(x) mu(x)^-1 mu(xy)");
    }
  int n = s.order;
  ThetaFamily th{n, std::vector<int>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      th.cells[x * n + y] = s.at(inv[mu(x)], mu(s.at(x, y)));
  PESolution sol = verify_solution(s, th);
  if (!invariance_flags(sol).first)
    throw validation_error("TheoremViolation", {},
                           "construction must be E(X)-invariant");
  return sol;
}

struct EInvariantData {
  CongruencePairData pair;
  Congruence rho;
  std::vector<int> representatives;  // theta_e(X) for the first idempotent
};

// Recovers the congruence pair (K, E x E) with K = {x : theta_e(x) is
// idempotent for every e}, checks that each theta_e gives a representative
// system and that theta_x(y) = theta_e(x)^-1 theta_e(xy) throughout.
inline EInvariantData extract_e_invariant_data(const PESolution& s) {
  SemigroupFacts f = analyze(s.table);
  if (!f.is_clifford)
    throw validation_error("NotClifford", {}, "carrier is not Clifford");
  auto [e_inv, e_fix] = invariance_flags(s);
  if (!e_inv)
    throw validation_error("NotEInvariant", {}, "solution is not E(X)-invariant");
  const std::vector<int>& es = f.idempotents;
  const std::vector<int>& inv = *f.inverses;
  int n = s.order();
  std::vector<char> is_e(n, 0);
  for (int e : es) is_e[e] = 1;
  EInvariantData out;
  for (int x = 0; x < n; ++x) {
    bool all = true;
    for (int e : es)
      if (!is_e[s.theta.at(e, x)]) {
        all = false;
        break;
      }
    if (all) out.pair.kernel.push_back(x);
  }
  out.pair.trace = universal_congruence(static_cast<int>(es.size()));
  if (auto why = congruence_pair_violation(s.table, out.pair))
    throw validation_error("TheoremViolation", {}, "extracted pair invalid: " + *why);
  out.rho = congruence_from_pair(s.table, out.pair);
  if (!detail::is_group_table(quotient_table(s.table, out.rho)))
    throw validation_error("TheoremViolation", {}, "X/rho is not a group");
  for (int e : es) {
    std::vector<char> class_hit(out.rho.num_classes, 0);
    std::vector<char> seen(n, 0);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
      int t = s.theta.at(e, x);
      if (!seen[t]) {
        seen[t] = 1;
        reps.push_back(t);
        if (class_hit[out.rho.class_of[t]]++)
          throw validation_error("TheoremViolation", {e, t},
                                 "theta_e image hits a class twice");
      }
      if (!out.rho.related(t, x))
        throw validation_error("TheoremViolation", {e, x},
                               "(theta_e(x), x) not in rho");
    }
    if (static_cast<int>(reps.size()) != out.rho.num_classes)
      throw validation_error("TheoremViolation", {e},
                             "theta_e image misses a class");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int xy = s.table.at(x, y);
        int te_x = s.theta.at(e, x), te_xy = s.theta.at(e, xy);
        if (te_xy != s.table.at(s.table.at(te_x, inv[te_x]), te_xy))
          throw validation_error("TheoremViolation", {e, x, y},
                                 "mu-condition fails for theta_e");
        if (s.theta.at(x, y) != s.table.at(inv[te_x], te_xy))
          throw validation_error("TheoremViolation", {e, x, y},
                                 "theta_x(y) != theta_e(x)^-1 theta_e(xy)");
      }
    if (e == es[0]) {
      std::sort(reps.begin(), reps.end());
      out.representatives = reps;
    }
  }
  return out;
}

// Isomorphism criterion for two E(X)-invariant solutions on the same
// Clifford carrier: an automorphism psi with psi theta_e = eta_e psi for
// every idempotent e.
inline std::optional<std::vector<int>> e_invariant_isomorphic(
    const PESolution& a, const PESolution& b) {
  if (!(a.table == b.table)) return std::nullopt;
  SemigroupFacts f = analyze(a.table);
  if (!f.is_clifford)
    throw validation_error("NotClifford", {}, "carrier is not Clifford");
  detail::require_canonical_order(a.order());
  int n = a.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool aut = true;
    for (int x = 0; x < n && aut; ++x)
      for (int y = 0; y < n; ++y)
        if (p[a.table.at(x, y)] != a.table.at(p[x], p[y])) {
          aut = false;
          break;
        }
    if (!aut) continue;
    bool ok = true;
    for (int e : f.idempotents) {
      for (int y = 0; y < n && ok; ++y)
        if (p[a.theta.at(e, y)] != b.theta.at(e, p[y])) ok = false;
      if (!ok) break;
    }
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

// --- E(X)-fixed gluing ---

// Per-group pentagon solutions plus connecting maps eps[i][j]: G_i -> G_j
// (positions), with eps = phi whenever E[j] <= E[i].
struct CliffordGlue {
  std::vector<ThetaFamily> group_solutions;
  std::vector<std::vector<ElementMap>> epsilon;
};

// theta_x(y) := theta^[f]_{eps_{e,f}(x)}(y) for x in G_e, y in G_f; checks
// the two compatibility conditions and that the result is E(X)-fixed.
inline PESolution glue_e_fixed(const CayleyTable& s,
                               const CliffordStructure& cs,
                               const CliffordGlue& glue) {
  int m = cs.num_groups();
  if (static_cast<int>(glue.group_solutions.size()) != m ||
      static_cast<int>(glue.epsilon.size()) != m)
    throw validation_error("OrderMismatch", {m}, "glue data size mismatch");
  for (int i = 0; i < m; ++i)
    verify_solution(cs.group_tables[i], glue.group_solutions[i]);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(glue.epsilon[i].size()) != m)
      throw validation_error("OrderMismatch", {i}, "epsilon row size mismatch");
    for (int j = 0; j < m; ++j) {
      const ElementMap& e = glue.epsilon[i][j];
      int src = static_cast<int>(cs.groups[i].size());
      int dst = static_cast<int>(cs.groups[j].size());
      if (e.order != src)
        throw validation_error("OrderMismatch", {i, j}, "epsilon domain");
      for (int v : e.image)
        if (v < 0 || v >= dst)
          throw validation_error("OutOfRangeEntry", {i, j}, "epsilon value");
      if (cs.leq[j][i] && !(e == cs.phi[i][j]))
        throw validation_error("CompatibilityFailed", {i, j},
                               "epsilon must equal phi when E[j] <= E[i]");
    }
  }
  auto theta_g = [&](int h, int row, int y) {
    return glue.group_solutions[h].at(row, y);
  };
  for (int e = 0; e < m; ++e)
    for (int ff = 0; ff < m; ++ff)
      for (int h = 0; h < m; ++h) {
        int ef_elt = s.at(cs.idempotents[e], cs.idempotents[ff]);
        int ef = cs.group_index_of[ef_elt];
        for (size_t xi = 0; xi < cs.groups[e].size(); ++xi)
          for (size_t yi = 0; yi < cs.groups[ff].size(); ++yi) {
            int x = cs.groups[e][xi], y = cs.groups[ff][yi];
            int xy = s.at(x, y);
            int row1 = glue.epsilon[ef][h](cs.position_in_group(ef, xy));
            int row2 = cs.group_tables[h].at(
                glue.epsilon[e][h](static_cast<int>(xi)),
                glue.epsilon[ff][h](static_cast<int>(yi)));
            for (int w = 0; w < static_cast<int>(cs.groups[h].size()); ++w)
              if (theta_g(h, row1, w) != theta_g(h, row2, w))
                throw validation_error("CompatibilityFailed",
                                       {e, ff, h, x, y},
                                       "glue condition (products) fails");
            for (int w = 0; w < static_cast<int>(cs.groups[ff].size()); ++w) {
              int lhs = glue.epsilon[ff][h](
                  theta_g(ff, glue.epsilon[e][ff](static_cast<int>(xi)), w));
              int rhs = theta_g(h, glue.epsilon[e][h](static_cast<int>(xi)),
                                glue.epsilon[ff][h](w));
              if (lhs != rhs)
                throw validation_error("CompatibilityFailed",
                                       {e, ff, h, x, cs.groups[ff][w]},
                                       "glue condition (intertwining) fails");
            }
          }
      }
  int n = s.order;
  ThetaFamily th{n, std::vector<int>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int e = cs.group_index_of[x], ff = cs.group_index_of[y];
      int row = glue.epsilon[e][ff](cs.position_in_group(e, x));
      th.cells[x * n + y] =
          cs.groups[ff][theta_g(ff, row, cs.position_in_group(ff, y))];
    }
  PESolution sol = verify_solution(s, th);
  if (!invariance_flags(sol).second)
    throw validation_error("TheoremViolation", {}, "glued map not E(X)-fixed");
  return sol;
}

// For gluings whose eps maps send identities upward (eps_{e,f}(e) = f for
// e <= f), the kernel {a : theta_e(a) = aa^-1 for all idempotents e <= aa^-1}
// equals the union of the per-group kernels K_e = {a in G_e :
// theta^[e]_e(a) = e}.  Both sides are computed and compared.
inline std::vector<int> e_fixed_kernel(const CayleyTable& s,
                                       const CliffordStructure& cs,
                                       const CliffordGlue& glue,
                                       const PESolution& glued) {
  int m = cs.num_groups();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (cs.leq[i][j]) {
        int pe = cs.position_in_group(i, cs.idempotents[i]);
        if (cs.groups[j][glue.epsilon[i][j](pe)] != cs.idempotents[j])
          throw validation_error("HypothesisFailed", {i, j},
                                 "epsilon_{e,f}(e) != f for e <= f");
      }
  SemigroupFacts f = analyze(s);
  const std::vector<int>& inv = *f.inverses;
  std::vector<int> from_formula;
  for (int a = 0; a < s.order; ++a) {
    int aa = s.at(a, inv[a]);
    int ga = cs.group_index_of[aa];
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      if (cs.leq[i][ga] && glued.theta.at(cs.idempotents[i], a) != aa)
        ok = false;
    if (ok) from_formula.push_back(a);
  }
  std::vector<int> from_union;
  for (int i = 0; i < m; ++i) {
    int pe = cs.position_in_group(i, cs.idempotents[i]);
    for (size_t k = 0; k < cs.groups[i].size(); ++k)
      if (glue.group_solutions[i].at(pe, static_cast<int>(k)) == pe)
        from_union.push_back(cs.groups[i][k]);
  }
  std::sort(from_union.begin(), from_union.end());
  if (from_formula != from_union)
    throw validation_error("TheoremViolation", {},
                           "kernel formula and kernel union disagree");
  return from_formula;
}

}  // namespace pentagon
