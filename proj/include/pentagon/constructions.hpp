#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pentagon/congruence.hpp"
#include "pentagon/solution.hpp"

namespace pentagon {

// Every constructor here re-verifies its output through verify_solution
// rather than trusting the underlying theorem.

// s(x,y) = (f(x), g(y)) with f,g idempotent commuting maps; the product is
// x*y := f(x).
inline PESolution lyubashenko(int n, const ElementMap& f, const ElementMap& g) {
  if (f.order != n || g.order != n)
    throw validation_error("OrderMismatch", {n}, "map orders must equal n");
  for (int x = 0; x < n; ++x) {
    if (f(f(x)) != f(x))
      throw validation_error("FNotIdempotent", {x}, "f(f(x)) != f(x)");
    if (g(g(x)) != g(x))
      throw validation_error("GNotIdempotent", {x}, "g(g(x)) != g(x)");
    if (f(g(x)) != g(f(x)))
      throw validation_error("FGNotCommuting", {x}, "fg != gf at x");
  }
  CayleyTable t{n, std::vector<int>(n * n)};
  ThetaFamily th{n, std::vector<int>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      t.cells[x * n + y] = f(x);
      th.cells[x * n + y] = g(y);
    }
  return verify_solution(validate_table(n, std::move(t.cells)), th);
}

inline bool is_endomorphism(const CayleyTable& s, const ElementMap& g) {
  for (int x = 0; x < s.order; ++x)
    for (int y = 0; y < s.order; ++y)
      if (g(s.at(x, y)) != s.at(g(x), g(y))) return false;
  return true;
}

// s(x,y) = (xy, gamma(y)) for an idempotent endomorphism gamma.
inline PESolution endo_solution(const CayleyTable& s, const ElementMap& gamma) {
  int n = s.order;
  if (gamma.order != n)
    throw validation_error("OrderMismatch", {n}, "gamma order mismatch");
  if (!is_endomorphism(s, gamma))
    throw validation_error("NotEndomorphism", {}, "gamma(xy) != gamma(x)gamma(y)");
  for (int x = 0; x < n; ++x)
    if (gamma(gamma(x)) != gamma(x))
      throw validation_error("NotIdempotentMap", {x}, "gamma^2 != gamma");
  ThetaFamily th{n, std::vector<int>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) th.cells[x * n + y] = gamma(y);
  PESolution sol = verify_solution(s, th);
  bool nondeg = classify_properties(sol).non_degenerate;
  if (nondeg != gamma.is_identity())
    throw validation_error("InternalInconsistency", {},
                           "non-degeneracy must hold exactly for gamma = id");
  return sol;
}

// Carrier E x G with E = {0..n-1} (stored index-major: (i,a) -> i*|G|+a),
// product (i,a)(j,b) = (i,ab) and s((i,a),(j,b)) = ((i,ab), (sig^{i+1}(j), b)).
// sig is the 0-indexed form of a permutation of {1..n} required to satisfy
// sig^{sig(i)+1} = sig^i for every i in {1..n}.
inline PESolution left_zero_group_solution(const CayleyTable& g, int n,
                                           const std::vector<int>& sig) {
  SemigroupFacts gf = analyze(g);
  if (!gf.is_group)
    throw validation_error("NotAGroup", {}, "needs a group as second factor");
  ElementMap sigma{n, sig};
  if (static_cast<int>(sig.size()) != n || !sigma.is_permutation())
    throw validation_error("BadSigma", {n}, "sigma must be a permutation");
  // powers[k] = sigma^k, enough to cover exponents up to n+2
  std::vector<ElementMap> powers{identity_map(n)};
  for (int k = 1; k <= n + 2; ++k) powers.push_back(compose(sigma, powers[k - 1]));
  for (int i = 0; i < n; ++i)
    if (!(powers[sig[i] + 2] == powers[i + 1]))
      throw validation_error("SigmaConditionFailed", {i + 1},
                             "sigma^{sigma(i)+1} != sigma^i at i=" +
                                 std::to_string(i + 1));
  int q = g.order, m = n * q;
  CayleyTable tab{m, std::vector<int>(m * m)};
  ThetaFamily th{m, std::vector<int>(m * m)};
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < q; ++a)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < q; ++b) {
          int p = i * q + a, r = j * q + b;
          tab.cells[p * m + r] = i * q + g.at(a, b);
          th.cells[p * m + r] = powers[i + 1](j) * q + b;
        }
  PESolution sol = verify_solution(validate_table(m, std::move(tab.cells)), th);
  PropertyReport pr = classify_properties(sol);
  if (!pr.bijective)
    throw validation_error("InternalInconsistency", {}, "expected bijective");
  bool expect_inv = has_exponent_dividing_two(g, *gf.identity) &&
                    compose(sigma, sigma).is_identity();
  if (pr.involutive != expect_inv)
    throw validation_error("InternalInconsistency", {},
                           "involutivity criterion mismatch");
  return sol;
}

struct ExactFactorizationSolutions {
  PESolution s, r;
  bool r_equals_tau_s_tau = false;
  bool r_equals_opposite_s = false;
};

// G = HK with unique factorization x = p1(x)p2(x), p1 into H, p2 into K.
// Builds the two pentagon maps
//   s(x,y) = (p2(y p1(x)^-1) x,  y p1(x)^-1)
//   r(x,y) = (x p1(p2(x)^-1 y),  p2(x)^-1 y)
// and re-verifies both; their products are left groups.
inline ExactFactorizationSolutions exact_factorization_solutions(
    const CayleyTable& g, const std::vector<int>& h_set,
    const std::vector<int>& k_set) {
  SemigroupFacts gf = analyze(g);
  if (!gf.is_group)
    throw validation_error("NotAGroup", {}, "needs a group");
  int n = g.order;
  const std::vector<int>& inv = *gf.inverses;
  std::vector<char> in_h(n, 0), in_k(n, 0);
  for (int x : h_set) in_h[x] = 1;
  for (int x : k_set) in_k[x] = 1;
  std::vector<int> p1(n, -1), p2(n, -1);
  for (int x = 0; x < n; ++x) {
    int count = 0;
    for (int h : h_set)
      for (int k : k_set)
        if (g.at(h, k) == x) {
          ++count;
          p1[x] = h;
          p2[x] = k;
        }
    if (count != 1)
      throw validation_error("NotExactFactorization", {x, count},
                             "element " + std::to_string(x) + " has " +
                                 std::to_string(count) + " factorizations");
  }
  PairMap ms, mr;
  ms.order = mr.order = n;
  ms.first.resize(n * n);
  ms.second.resize(n * n);
  mr.first.resize(n * n);
  mr.second.resize(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int yp = g.at(y, inv[p1[x]]);
      ms.first[x * n + y] = g.at(p2[yp], x);
      ms.second[x * n + y] = yp;
      int py = g.at(inv[p2[x]], y);
      mr.first[x * n + y] = g.at(x, p1[py]);
      mr.second[x * n + y] = py;
    }
  ExactFactorizationSolutions out;
  out.s = from_pair_map(ms);
  out.r = from_pair_map(mr);
  if (!analyze(out.s.table).is_left_group ||
      !analyze(out.r.table).is_left_group)
    throw validation_error("InternalInconsistency", {},
                           "factorization products must be left groups");
  out.r_equals_tau_s_tau = true;
  for (int x = 0; x < n && out.r_equals_tau_s_tau; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = ms.apply(y, x);
      if (mr.apply(x, y) != std::pair<int, int>{v, u}) {
        out.r_equals_tau_s_tau = false;
        break;
      }
    }
  out.r_equals_opposite_s = opposite(out.s) == out.r;
  return out;
}

// Kashaev-Sergeev data: a subsemigroup X of a group G and maps lambda, mu
// from X to G (given per position in `carrier`) with
//   x*y := mu(x)^-1 mu(xy) in X   and   mu(x*y) = lambda(x) mu(y).
// Returns s(x,y) = (xy, x*y) on the relabeled carrier.
inline PESolution kashaev_sergeev(const CayleyTable& g,
                                  const std::vector<int>& carrier,
                                  const std::vector<int>& lambda,
                                  const std::vector<int>& mu) {
  SemigroupFacts gf = analyze(g);
  if (!gf.is_group)
    throw validation_error("NotAGroup", {}, "needs an ambient group");
  const std::vector<int>& inv = *gf.inverses;
  int m = static_cast<int>(carrier.size());
  if (static_cast<int>(lambda.size()) != m || static_cast<int>(mu.size()) != m)
    throw validation_error("OrderMismatch", {m}, "lambda/mu length mismatch");
  std::vector<int> pos(g.order, -1);
  for (int i = 0; i < m; ++i) pos[carrier[i]] = i;
  CayleyTable sub = subtable(g, carrier);  // throws NotClosed if not closed
  ThetaFamily star{m, std::vector<int>(m * m)};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int xy = g.at(carrier[i], carrier[j]);
      int st = g.at(inv[mu[i]], mu[pos[xy]]);
      if (pos[st] < 0)
        throw validation_error("ClosureFailed", {carrier[i], carrier[j]},
                               "x*y lands outside the carrier");
      star.cells[i * m + j] = pos[st];
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (mu[star.at(i, j)] != g.at(lambda[i], mu[j]))
        throw validation_error("CocycleFailed", {carrier[i], carrier[j]},
                               "mu(x*y) != lambda(x) mu(y)");
  return verify_solution(sub, star);
}

// Data classifying solutions on a group: a normal subgroup K, a system R of
// coset representatives and mu(x) = the representative of Kx.
struct GroupSolutionData {
  std::vector<int> kernel;
  std::vector<int> reps;
  ElementMap mu;
};

// s(x,y) = (xy, mu(x)^-1 mu(xy)).
inline PESolution group_quotient_solution(const CayleyTable& g,
                                          const GroupSolutionData& data) {
  SemigroupFacts gf = analyze(g);
  if (!gf.is_group)
    throw validation_error("NotAGroup", {}, "needs a group");
  int n = g.order;
  const std::vector<int>& inv = *gf.inverses;
  std::vector<char> in_k(n, 0), in_r(n, 0);
  for (int x : data.kernel) in_k[x] = 1;
  for (int x : data.reps) in_r[x] = 1;
  if (data.mu.order != n)
    throw validation_error("BadRepresentativeSystem", {}, "mu order mismatch");
  // mu must pick, for every x, a representative lying in Kx, constant on
  // cosets, with R meeting each coset exactly once.
  std::vector<char> rep_seen(n, 0);
  for (int x = 0; x < n; ++x) {
    int r = data.mu(x);
    if (!in_r[r] || !in_k[g.at(r, inv[x])])
      throw validation_error("BadRepresentativeSystem", {x},
                             "mu(x) is not a representative of Kx");
  }
  for (int r : data.reps) {
    if (data.mu(r) != r)
      throw validation_error("BadRepresentativeSystem", {r},
                             "representatives must be mu-fixed");
    if (rep_seen[data.mu(r)]++)
      throw validation_error("BadRepresentativeSystem", {r},
                             "coset hit twice by R");
  }
  if (static_cast<int>(data.reps.size()) * static_cast<int>(data.kernel.size()) != n)
    throw validation_error("BadRepresentativeSystem", {},
                           "|R| * |K| must equal |G|");
  ThetaFamily th{n, std::vector<int>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      th.cells[x * n + y] = g.at(inv[data.mu(x)], data.mu(g.at(x, y)));
  return verify_solution(g, th);
}

// Recovers (K, R, mu) from a solution on a group: K = theta_1^{-1}(1),
// R = im theta_1, mu = theta_1; checks every claim and the round trip.
inline GroupSolutionData extract_group_data(const PESolution& s) {
  SemigroupFacts gf = analyze(s.table);
  if (!gf.is_group)
    throw validation_error("NotAGroup", {}, "extract_group_data needs a group");
  int n = s.order(), one = *gf.identity;
  const std::vector<int>& inv = *gf.inverses;
  GroupSolutionData data;
  data.mu.order = n;
  data.mu.image.resize(n);
  std::vector<char> in_r(n, 0);
  for (int x = 0; x < n; ++x) {
    int t = s.theta.at(one, x);
    data.mu.image[x] = t;
    if (t == one) data.kernel.push_back(x);
    if (!in_r[t]) {
      in_r[t] = 1;
      data.reps.push_back(t);
    }
  }
  std::sort(data.reps.begin(), data.reps.end());
  // K normal; theta_1(x) in Kx; reconstruction theta_x(y) = mu(x)^-1 mu(xy).
  std::vector<char> in_k(n, 0);
  for (int x : data.kernel) in_k[x] = 1;
  for (int a : data.kernel)
    for (int b : data.kernel)
      if (!in_k[s.table.at(a, b)])
        throw validation_error("TheoremViolation", {a, b}, "kernel not closed");
  for (int x = 0; x < n; ++x)
    for (int a : data.kernel)
      if (!in_k[s.table.at(s.table.at(x, a), inv[x])])
        throw validation_error("TheoremViolation", {x, a}, "kernel not normal");
  for (int x = 0; x < n; ++x)
    if (!in_k[s.table.at(data.mu(x), inv[x])])
      throw validation_error("TheoremViolation", {x}, "theta_1(x) not in Kx");
  PESolution rebuilt = group_quotient_solution(s.table, data);
  if (!(rebuilt == s))
    throw validation_error("TheoremViolation", {},
                           "group solution failed to round-trip");
  return data;
}

// --- matched products ---

// Two solutions s on S and t on T together with actions alpha: T -> S^S and
// beta: S -> T^T.  The five defining identities (two making S x T a
// semigroup, three intertwining the theta families) are directly evaluable.
struct MatchedQuadruple {
  PESolution s, t;
  std::vector<ElementMap> alpha;  // indexed by u in T, maps on S
  std::vector<ElementMap> beta;   // indexed by a in S, maps on T
};

struct MatchedCheck {
  bool ok = true;
  // (identity name, witness tuple) for each failed instance
  std::vector<std::pair<std::string, std::vector<int>>> violations;
};

inline MatchedCheck check_matched_quadruple(const MatchedQuadruple& q) {
  const CayleyTable& S = q.s.table;
  const CayleyTable& T = q.t.table;
  int ns = S.order, nt = T.order;
  if (static_cast<int>(q.alpha.size()) != nt ||
      static_cast<int>(q.beta.size()) != ns)
    throw validation_error("OrderMismatch", {ns, nt},
                           "alpha/beta sizes must match the carriers");
  auto al = [&](int u, int a) { return q.alpha[u](a); };
  auto be = [&](int a, int u) { return q.beta[a](u); };
  auto th = [&](int a, int b) { return q.s.theta.at(a, b); };
  auto et = [&](int u, int v) { return q.t.theta.at(u, v); };
  MatchedCheck out;
  auto fail = [&](const char* name, std::vector<int> w) {
    out.ok = false;
    out.violations.emplace_back(name, std::move(w));
  };
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int u = 0; u < nt; ++u)
        for (int v = 0; v < nt; ++v) {
          if (al(u, S.at(a, al(v, b))) !=
              S.at(al(u, a), al(T.at(be(a, u), v), b)))
            fail("alpha_product", {a, b, u, v});
          if (be(a, T.at(be(b, u), v)) !=
              T.at(be(S.at(b, al(v, a)), u), be(a, v)))
            fail("beta_product", {a, b, u, v});
        }
  // theta_a alpha_u = theta_{alpha_v(a)} alpha_{beta_a(v)u}
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int v = 0; v < nt; ++v)
        for (int b = 0; b < ns; ++b)
          if (th(a, al(u, b)) != th(al(v, a), al(T.at(be(a, v), u), b)))
            fail("theta_alpha_shift", {a, u, v, b});
  // theta_{a alpha_u(b)} = alpha_{eta_{beta_b(u)}(v)} theta_{a alpha_u(b)}
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int u = 0; u < nt; ++u)
        for (int v = 0; v < nt; ++v) {
          int m = S.at(a, al(u, b));
          for (int c = 0; c < ns; ++c)
            if (th(m, c) != al(et(be(b, u), v), th(m, c)))
              fail("alpha_fixes_theta", {a, b, u, v, c});
        }
  // eta_{beta_{b alpha_v(c)}(u)}(beta_c(v)) =
  //   beta_{theta_{a alpha_u(b)}(alpha_{beta_b(u)v}(c))}(eta_{beta_b(u)}(v))
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int c = 0; c < ns; ++c)
        for (int u = 0; u < nt; ++u)
          for (int v = 0; v < nt; ++v) {
            int lhs = et(be(S.at(b, al(v, c)), u), be(c, v));
            int arg = th(S.at(a, al(u, b)), al(T.at(be(b, u), v), c));
            int rhs = be(arg, et(be(b, u), v));
            if (lhs != rhs) fail("eta_beta_shift", {a, b, c, u, v});
          }
  return out;
}

// Pairs (a,u) are indexed a*|T|+u.  Product (a,u)(b,v) = (a alpha_u(b),
// beta_b(u) v); the map sends ((a,u),(b,v)) to the product paired with
// (theta_a(alpha_u(b)), eta_{beta_b(u)}(v)).
inline PESolution matched_product(const MatchedQuadruple& q) {
  MatchedCheck chk = check_matched_quadruple(q);
  if (!chk.ok)
    throw validation_error(
        "NotMatched", chk.violations.front().second,
        "matched identity " + chk.violations.front().first + " fails");
  const CayleyTable& S = q.s.table;
  const CayleyTable& T = q.t.table;
  int ns = S.order, nt = T.order, n = ns * nt;
  CayleyTable tab{n, std::vector<int>(n * n)};
  ThetaFamily th{n, std::vector<int>(n * n)};
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int b = 0; b < ns; ++b)
        for (int v = 0; v < nt; ++v) {
          int p = a * nt + u, r = b * nt + v;
          int ab = S.at(a, q.alpha[u](b));
          int uv = T.at(q.beta[b](u), v);
          tab.cells[p * n + r] = ab * nt + uv;
          th.cells[p * n + r] = q.s.theta.at(a, q.alpha[u](b)) * nt +
                                q.t.theta.at(q.beta[b](u), v);
        }
  return verify_solution(validate_table(n, std::move(tab.cells)), th);
}

}  // namespace pentagon
