#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pentagon/canonical.hpp"
#include "pentagon/semigroup.hpp"

namespace pentagon {

// The second coordinate of a pentagon map: theta[x][y] = theta_x(y).
struct ThetaFamily {
  int order = 0;
  std::vector<int> cells;  // row-major

  int at(int x, int y) const { return cells[x * order + y]; }

  std::string key() const {
    std::string k;
    k.reserve(cells.size() + 1);
    k.push_back(static_cast<char>(order));
    for (int v : cells) k.push_back(static_cast<char>(v));
    return k;
  }

  bool operator==(const ThetaFamily&) const = default;
};

inline ThetaFamily identity_theta(int n) {
  ThetaFamily t{n, std::vector<int>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.cells[x * n + y] = y;
  return t;
}

// A pentagon-equation solution s(x,y) = (x*y, theta_x(y)) on a finite
// semigroup.  Instances are only built through verify_solution or the
// constructors in this library, so the axioms
//   (P1)  theta_x(y) * theta_{xy}(z) = theta_x(yz)
//   (P2)  theta_{theta_x(y)}(theta_{xy}(w)) = theta_y(w)
// always hold together with associativity of the table.
struct PESolution {
  CayleyTable table;
  ThetaFamily theta;

  int order() const { return table.order; }

  std::string key() const { return table.key() + theta.key(); }

  bool operator==(const PESolution&) const = default;
};

inline bool pentagon_axioms_hold(const CayleyTable& s, const ThetaFamily& t) {
  int n = s.order;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = s.at(x, y), txy = t.at(x, y);
      for (int z = 0; z < n; ++z) {
        if (s.at(txy, t.at(xy, z)) != t.at(x, s.at(y, z))) return false;
        if (t.at(txy, t.at(xy, z)) != t.at(y, z)) return false;
      }
    }
  return true;
}

// Checks (P1) on all triples in lexicographic order, then (P2); throws
// "P1Violation"/"P2Violation" with the first witness found.
inline PESolution verify_solution(const CayleyTable& s, const ThetaFamily& t) {
  int n = s.order;
  if (t.order != n || static_cast<int>(t.cells.size()) != n * n)
    throw validation_error("OrderMismatch", {n, t.order},
                           "table and theta orders differ");
  for (int v : t.cells)
    if (v < 0 || v >= n)
      throw validation_error("OutOfRangeEntry", {v}, "theta entry out of range");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (s.at(t.at(x, y), t.at(s.at(x, y), z)) != t.at(x, s.at(y, z)))
          throw validation_error(
              "P1Violation", {x, y, z},
              "theta_x(y)*theta_{xy}(z) != theta_x(yz) at " +
                  detail::tuple_str({x, y, z}));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int w = 0; w < n; ++w)
        if (t.at(t.at(x, y), t.at(s.at(x, y), w)) != t.at(y, w))
          throw validation_error(
              "P2Violation", {x, y, w},
              "theta_{theta_x(y)} theta_{xy} != theta_y at " +
                  detail::tuple_str({x, y, w}));
  return PESolution{s, t};
}

// An arbitrary map X^2 -> X^2, not necessarily of pentagon shape.
struct PairMap {
  int order = 0;
  std::vector<int> first, second;  // indexed x*order+y

  std::pair<int, int> apply(int x, int y) const {
    return {first[x * order + y], second[x * order + y]};
  }
};

inline PairMap to_pair_map(const PESolution& s) {
  PairMap m{s.order(), s.table.cells, s.theta.cells};
  return m;
}

// Repackages a pair map as (table, theta) and verifies the pentagon axioms.
inline PESolution from_pair_map(const PairMap& m) {
  CayleyTable s = validate_table(m.order, std::vector<int>(m.first));
  ThetaFamily t{m.order, m.second};
  return verify_solution(s, t);
}

namespace detail {

struct Triple {
  int a, b, c;
  bool operator==(const Triple&) const = default;
};

inline Triple apply12(const PairMap& s, Triple t) {
  auto [u, v] = s.apply(t.a, t.b);
  return {u, v, t.c};
}
inline Triple apply23(const PairMap& s, Triple t) {
  auto [u, v] = s.apply(t.b, t.c);
  return {t.a, u, v};
}
inline Triple apply13(const PairMap& s, Triple t) {
  auto [u, v] = s.apply(t.a, t.c);
  return {u, t.b, v};
}

}  // namespace detail

// Evaluates s23 s13 s12 = s12 s23 on all of X^3 (composition right to left).
inline bool pentagon_direct_check(const PairMap& s) {
  using namespace detail;
  int n = s.order;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Triple t{x, y, z};
        if (apply23(s, apply13(s, apply12(s, t))) !=
            apply12(s, apply23(s, t)))
          return false;
      }
  return true;
}

enum class QybeConvention {
  // s12 s13 s23 = s23 s13 s12
  A,
  // braid form: s12 s23 s12 = s23 s12 s23
  B,
};

inline bool qybe_check(const PairMap& s, QybeConvention conv) {
  using namespace detail;
  int n = s.order;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Triple t{x, y, z};
        bool ok;
        if (conv == QybeConvention::A)
          ok = apply12(s, apply13(s, apply23(s, t))) ==
               apply23(s, apply13(s, apply12(s, t)));
        else
          ok = apply12(s, apply23(s, apply12(s, t))) ==
               apply23(s, apply12(s, apply23(s, t)));
        if (!ok) return false;
      }
  return true;
}

inline bool qybe_check(const PESolution& s,
                       QybeConvention conv = QybeConvention::A) {
  return qybe_check(to_pair_map(s), conv);
}

struct PropertyReport {
  bool involutive = false;
  bool idempotent = false;
  bool bijective = false;
  bool non_degenerate = false;
  bool commutative = false;
  bool cocommutative = false;
  bool qybe = false;
};

// Each flag is computed from its defining identity on the full domain.
// Involutivity and idempotency are additionally cross-checked against the
// elementwise identities they are equivalent to for pentagon solutions; a
// disagreement would mean a corrupted solution object and throws.
inline PropertyReport classify_properties(
    const PESolution& sol, QybeConvention conv = QybeConvention::A) {
  using namespace detail;
  PairMap s = to_pair_map(sol);
  int n = s.order;
  PropertyReport r;

  r.involutive = true;
  r.idempotent = true;
  r.bijective = true;
  {
    std::vector<char> hit(n * n, 0);
    for (int x = 0; x < n && (r.involutive || r.idempotent || r.bijective);
         ++x)
      for (int y = 0; y < n; ++y) {
        auto [u, v] = s.apply(x, y);
        auto [u2, v2] = s.apply(u, v);
        if (u2 != x || v2 != y) r.involutive = false;
        if (u2 != u || v2 != v) r.idempotent = false;
        if (hit[u * n + v]++) r.bijective = false;
      }
  }

  r.non_degenerate = true;
  for (int x = 0; x < n && r.non_degenerate; ++x) {
    std::vector<char> seen(n, 0);
    for (int y = 0; y < n; ++y)
      if (seen[sol.theta.at(x, y)]++) {
        r.non_degenerate = false;
        break;
      }
  }

  bool inv_ids = true, idem_ids = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = sol.table.at(x, y), th = sol.theta.at(x, y);
      int prod = sol.table.at(xy, th), back = sol.theta.at(xy, th);
      if (prod != x || back != y) inv_ids = false;
      if (prod != xy || back != th) idem_ids = false;
    }
  if (inv_ids != r.involutive)
    throw validation_error("InternalInconsistency", {},
                           "involutive checks disagree");
  if (idem_ids != r.idempotent)
    throw validation_error("InternalInconsistency", {},
                           "idempotent checks disagree");

  r.commutative = true;
  r.cocommutative = true;
  for (int x = 0; x < n && (r.commutative || r.cocommutative); ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Triple t{x, y, z};
        if (apply12(s, apply13(s, t)) != apply13(s, apply12(s, t)))
          r.commutative = false;
        if (apply13(s, apply23(s, t)) != apply23(s, apply13(s, t)))
          r.cocommutative = false;
      }

  r.qybe = qybe_check(s, conv);
  return r;
}

// Opposite of a bijective solution: tau s^{-1} tau, repackaged and
// re-verified.  Its product may differ from the input product.
inline PESolution opposite(const PESolution& sol) {
  PairMap s = to_pair_map(sol);
  int n = s.order;
  std::vector<int> inv_first(n * n, -1), inv_second(n * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = s.apply(x, y);
      if (inv_first[u * n + v] != -1)
        throw validation_error("NotBijective", {x, y},
                               "opposite needs a bijective solution");
      inv_first[u * n + v] = x;
      inv_second[u * n + v] = y;
    }
  PairMap op;
  op.order = n;
  op.first.resize(n * n);
  op.second.resize(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      // tau s^{-1} tau
      op.first[x * n + y] = inv_second[y * n + x];
      op.second[x * n + y] = inv_first[y * n + x];
    }
  try {
    return from_pair_map(op);
  } catch (const validation_error& e) {
    if (e.code == "NotAssociative")
      throw validation_error("NotProductShaped", e.witness,
                             "opposite produced a non-associative product");
    throw;
  }
}

inline PESolution relabel(const PESolution& s, const std::vector<int>& p) {
  int n = s.order();
  ThetaFamily t{n, std::vector<int>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t.cells[p[x] * n + p[y]] = p[s.theta.at(x, y)];
  return PESolution{relabel(s.table, p), std::move(t)};
}

// psi with psi(x*y) = psi(x)*psi(y) and psi(theta_x(y)) = eta_{psi x}(psi y),
// found by scanning all permutations; lexicographically first if any.
inline std::optional<std::vector<int>> solutions_isomorphic(
    const PESolution& a, const PESolution& b) {
  if (a.order() != b.order()) return std::nullopt;
  detail::require_canonical_order(a.order());
  int n = a.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y)
        if (p[a.table.at(x, y)] != b.table.at(p[x], p[y]) ||
            p[a.theta.at(x, y)] != b.theta.at(p[x], p[y])) {
          ok = false;
          break;
        }
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

struct CanonicalSolution {
  PESolution solution;
  std::vector<int> relabeling;
};

// Minimum of the concatenated (table, theta) byte arrays over all
// relabelings; equality of canonical forms is solution isomorphism.
inline CanonicalSolution solution_canonical_form(const PESolution& s) {
  detail::require_canonical_order(s.order());
  int n = s.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  CanonicalSolution best{relabel(s, p), p};
  std::string best_key = best.solution.key();
  while (std::next_permutation(p.begin(), p.end())) {
    PESolution cand = relabel(s, p);
    std::string k = cand.key();
    if (k < best_key) {
      best = {std::move(cand), p};
      best_key = std::move(k);
    }
  }
  return best;
}

inline std::string solution_canonical_key(const PESolution& s) {
  return solution_canonical_form(s).solution.key();
}

// s(x,y) = (xy, y); a solution on any semigroup, the Kac-Takesaki solution
// when the carrier is a group.
inline PESolution identity_solution(const CayleyTable& s) {
  return PESolution{s, identity_theta(s.order)};
}

// Direct product, pairs indexed (x,y) -> x*b.order()+y.
inline PESolution product_solution(const PESolution& a, const PESolution& b) {
  int nb = b.order();
  int n = a.order() * nb;
  CayleyTable tab = direct_product(a.table, b.table);
  ThetaFamily th{n, std::vector<int>(n * n)};
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < nb; ++y2) {
          int p = x1 * nb + y1, q = x2 * nb + y2;
          th.cells[p * n + q] =
              a.theta.at(x1, x2) * nb + b.theta.at(y1, y2);
        }
  return verify_solution(tab, th);
}

}  // namespace pentagon
