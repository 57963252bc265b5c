#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "pentagon/solution.hpp"

namespace pentagon {

namespace detail {

inline void require_involutive(const PESolution& s, const char* who) {
  if (!classify_properties(s).involutive)
    throw validation_error("NotInvolutive", {},
                           std::string(who) + " needs an involutive solution");
}

// theta-equality classes in order of first occurrence.
inline std::vector<int> theta_classes(const PESolution& s, int& num) {
  int n = s.order();
  std::vector<int> cls(n, -1);
  num = 0;
  for (int x = 0; x < n; ++x) {
    if (cls[x] != -1) continue;
    cls[x] = num;
    for (int y = x + 1; y < n; ++y) {
      if (cls[y] != -1) continue;
      bool eq = true;
      for (int w = 0; w < n; ++w)
        if (s.theta.at(x, w) != s.theta.at(y, w)) {
          eq = false;
          break;
        }
      if (eq) cls[y] = num;
    }
    ++num;
  }
  return cls;
}

}  // namespace detail

// Quotient of an involutive solution by theta-equality.  The class map is a
// congruence, the quotient carrier is left zero, the induced solution is
// involutive and irretractable; all of that is re-verified here.
inline PESolution retract(const PESolution& s) {
  detail::require_involutive(s, "retract");
  int n = s.order(), m = 0;
  std::vector<int> cls = detail::theta_classes(s, m);
  std::vector<int> rep(m, -1);
  for (int x = n - 1; x >= 0; --x) rep[cls[x]] = x;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (cls[s.table.at(rep[cls[x]], rep[cls[y]])] != cls[s.table.at(x, y)] ||
          cls[s.theta.at(rep[cls[x]], rep[cls[y]])] != cls[s.theta.at(x, y)])
        throw validation_error("NotWellDefined", {x, y},
                               "theta-equality is not a congruence here");
    }
  CayleyTable tab{m, std::vector<int>(m * m)};
  ThetaFamily th{m, std::vector<int>(m * m)};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      tab.cells[i * m + j] = cls[s.table.at(rep[i], rep[j])];
      th.cells[i * m + j] = cls[s.theta.at(rep[i], rep[j])];
    }
  PESolution ret = verify_solution(validate_table(m, std::move(tab.cells)), th);
  if (!analyze(ret.table).is_left_zero)
    throw validation_error("NotWellDefined", {}, "retract carrier not left zero");
  detail::require_involutive(ret, "retract output");
  int check = 0;
  detail::theta_classes(ret, check);
  if (check != m)
    throw validation_error("NotWellDefined", {}, "retract is retractable");
  return ret;
}

// t_A(x,y) = (x, x+y) on an elementary abelian 2-group A: the irretractable
// involutive solution.
inline PESolution t_a_solution(const CayleyTable& a) {
  SemigroupFacts f = analyze(a);
  if (!f.is_group || !has_exponent_dividing_two(a, f.identity.value_or(0)))
    throw validation_error("NotElementaryAbelian2Group", {},
                           "carrier must be a group of exponent dividing 2");
  int n = a.order;
  ThetaFamily th{n, std::vector<int>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) th.cells[x * n + y] = a.at(x, y);
  PESolution sol = verify_solution(left_zero_table(n), th);
  detail::require_involutive(sol, "t_A");
  return sol;
}

// Extension of t_A by a set X and sigma: A -> Sym(X); carrier X x A indexed
// (x,a) -> x*|A|+a, map ((x,a),(y,b)) -> ((x,a), (sig_{a+b} sig_b^-1(y), a+b)).
inline PESolution ext_sigma(const CayleyTable& a, int x_size,
                            const std::vector<std::vector<int>>& sigma) {
  SemigroupFacts f = analyze(a);
  if (!f.is_group || !has_exponent_dividing_two(a, f.identity.value_or(0)))
    throw validation_error("NotElementaryAbelian2Group", {},
                           "A must be a group of exponent dividing 2");
  if (x_size < 1)
    throw validation_error("OrderOutOfRange", {x_size}, "X must be non-empty");
  int na = a.order;
  if (static_cast<int>(sigma.size()) != na)
    throw validation_error("BadSigma", {na}, "need one permutation per element");
  std::vector<ElementMap> sig, sig_inv;
  for (int i = 0; i < na; ++i) {
    ElementMap p{x_size, sigma[i]};
    if (!p.is_permutation())
      throw validation_error("BadSigma", {i}, "sigma value is not a permutation");
    ElementMap q{x_size, std::vector<int>(x_size)};
    for (int x = 0; x < x_size; ++x) q.image[p(x)] = x;
    sig.push_back(std::move(p));
    sig_inv.push_back(std::move(q));
  }
  int n = x_size * na;
  ThetaFamily th{n, std::vector<int>(n * n)};
  for (int x = 0; x < x_size; ++x)
    for (int ai = 0; ai < na; ++ai)
      for (int y = 0; y < x_size; ++y)
        for (int bi = 0; bi < na; ++bi) {
          int p = x * na + ai, q = y * na + bi;
          int ab = a.at(ai, bi);
          th.cells[p * n + q] = sig[ab](sig_inv[bi](y)) * na + ab;
        }
  PESolution sol = verify_solution(left_zero_table(n), th);
  detail::require_involutive(sol, "ext_sigma");
  return sol;
}

// Number of involutive solutions, up to isomorphism, on a carrier of size
// N = 2^n(2m+1): the binomial C(n+2,2), one class per decomposition
// N = |X|*|A|*|G| with A, G elementary abelian 2-groups.
inline long long count_involutive(long long n) {
  if (n < 1)
    throw validation_error("OrderOutOfRange", {static_cast<int>(n)},
                           "carrier must be non-empty");
  long long two = 0;
  while (n % 2 == 0) {
    ++two;
    n /= 2;
  }
  return (two + 2) * (two + 1) / 2;
}

// Witnessed decomposition s = Ext^sigma_X(t_A) x s_G under the index scheme
// (x,a,g) -> (x*|A|+a)*|G|+g.
struct InvolutiveDecomposition {
  int x_size = 1;
  CayleyTable a_table, g_table;
  std::vector<std::vector<int>> sigma;  // per element of A, perm of X
  std::vector<int> witness;             // (x,a,g) index -> carrier element
};

inline PESolution reassemble(const InvolutiveDecomposition& d) {
  PESolution left = ext_sigma(d.a_table, d.x_size, d.sigma);
  PESolution whole = product_solution(left, identity_solution(d.g_table));
  return relabel(whole, d.witness);
}

// Splits an involutive solution into its set, exponent-2 and group factors:
// classes of theta-equality give A, e0*S gives G, the residual fibers give X,
// and sigma is read off from the action on the a=0 classes.  The reassembled
// solution must reproduce the input exactly.
inline InvolutiveDecomposition decompose_involutive(const PESolution& s) {
  detail::require_involutive(s, "decompose_involutive");
  SemigroupFacts facts = analyze(s.table);
  if (!facts.is_left_group)
    throw validation_error("DecompositionFailed", {},
                           "involutive carrier must be a left group");
  int n = s.order(), m = 0;
  std::vector<int> cls = detail::theta_classes(s, m);

  // A: group structure on the retract classes via a+b := theta-bar_a(b).
  std::vector<int> rep(m, -1);
  for (int x = n - 1; x >= 0; --x) rep[cls[x]] = x;
  CayleyTable a_tab{m, std::vector<int>(m * m)};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      a_tab.cells[i * m + j] = cls[s.theta.at(rep[i], rep[j])];
  a_tab = validate_table(m, std::move(a_tab.cells));
  SemigroupFacts af = analyze(a_tab);
  if (!af.is_group || !has_exponent_dividing_two(a_tab, af.identity.value_or(0)))
    throw validation_error("DecompositionFailed", {},
                           "retract is not an elementary abelian 2-group");
  // Relabel classes so the zero class is element 0 (tie-break: class order).
  {
    int zero = *af.identity;
    std::vector<int> p(m);
    for (int i = 0; i < m; ++i) p[i] = i == zero ? 0 : i < zero ? i + 1 : i;
    a_tab = relabel(a_tab, p);
    for (int x = 0; x < n; ++x) cls[x] = p[cls[x]];
  }

  // G: the maximal subgroup e0*S.
  int e0 = facts.left_group->left_zero.front();
  const std::vector<int>& ge = facts.left_group->group_elements;
  CayleyTable g_tab = facts.left_group->group;
  int gq = g_tab.order;
  SemigroupFacts gf = analyze(g_tab);
  if (!has_exponent_dividing_two(g_tab, gf.identity.value_or(0)))
    throw validation_error("DecompositionFailed", {},
                           "group factor must have exponent dividing 2");
  std::vector<int> gpos(n, -1);
  for (int j = 0; j < gq; ++j) gpos[ge[j]] = j;
  auto g_of = [&](int u) { return gpos[s.table.at(e0, u)]; };

  if (n % (m * gq) != 0)
    throw validation_error("DecompositionFailed", {}, "sizes do not divide");
  int xs = n / (m * gq);

  // X-fibers: u ~ u' when u*G = u'*G; labeled per class by minimal element.
  std::vector<int> fiber(n, -1);
  std::vector<int> fiber_count(m, 0);
  for (int u = 0; u < n; ++u) {
    if (fiber[u] != -1) continue;
    int label = fiber_count[cls[u]]++;
    for (int v = u; v < n; ++v) {
      if (fiber[v] != -1 || cls[v] != cls[u]) continue;
      // same fiber iff v in u*G
      bool same = false;
      for (int j = 0; j < gq && !same; ++j)
        same = s.table.at(u, ge[j]) == v;
      if (same) fiber[v] = label;
    }
  }
  for (int c = 0; c < m; ++c)
    if (fiber_count[c] != xs)
      throw validation_error("DecompositionFailed", {c}, "uneven fibers");

  // sigma_a: X -> X via theta_u (u in class a) acting on class-0 elements.
  std::vector<std::vector<int>> sigma(m, std::vector<int>(xs, -1));
  for (int i = 0; i < xs; ++i) sigma[0][i] = i;  // normalization
  for (int a = 1; a < m; ++a) {
    int u = -1;
    for (int x = 0; x < n; ++x)
      if (cls[x] == a) {
        u = x;
        break;
      }
    for (int v = 0; v < n; ++v) {
      if (cls[v] != 0) continue;
      int w = s.theta.at(u, v);
      sigma[a][fiber[v]] = fiber[w];
    }
    ElementMap check{xs, sigma[a]};
    if (!check.is_permutation())
      throw validation_error("DecompositionFailed", {a}, "sigma fit failed");
  }

  InvolutiveDecomposition d;
  d.x_size = xs;
  d.a_table = a_tab;
  d.g_table = g_tab;
  d.sigma = sigma;
  d.witness.assign(n, -1);
  std::vector<char> taken(n, 0);
  for (int u = 0; u < n; ++u) {
    int idx = (fiber[u] * m + cls[u]) * gq + g_of(u);
    if (taken[idx]++)
      throw validation_error("DecompositionFailed", {u},
                             "coordinates do not separate points");
    d.witness[idx] = u;
  }
  PESolution back = reassemble(d);
  if (!(back == s))
    throw validation_error("DecompositionFailed", {},
                           "reassembly differs from the input");
  return d;
}

}  // namespace pentagon
