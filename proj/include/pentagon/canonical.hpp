#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pentagon/semigroup.hpp"

namespace pentagon {

// Canonical forms work by full permutation scan, so they are exact but only
// admitted for order <= 7.  That covers everything this project enumerates.
inline constexpr int kMaxCanonicalOrder = 7;

namespace detail {
inline void require_canonical_order(int n) {
  if (n > kMaxCanonicalOrder)
    throw validation_error(
        "CanonicalizationTooLarge", {n},
        "canonical forms are only computed for order <= " +
            std::to_string(kMaxCanonicalOrder));
}
}  // namespace detail

// Applies relabeling p: new[p(x)][p(y)] = p(old[x][y]).
inline CayleyTable relabel(const CayleyTable& s, const std::vector<int>& p) {
  int n = s.order;
  CayleyTable t{n, std::vector<int>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.cells[p[x] * n + p[y]] = p[s.at(x, y)];
  return t;
}

struct CanonicalTable {
  CayleyTable table;
  std::vector<int> relabeling;  // permutation achieving the minimum
};

// Lexicographically minimal table over all n! relabelings.  Two tables are
// isomorphic iff their canonical forms coincide.
inline CanonicalTable canonical_form(const CayleyTable& s) {
  detail::require_canonical_order(s.order);
  std::vector<int> perm(s.order);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalTable best{relabel(s, perm), perm};
  while (std::next_permutation(perm.begin(), perm.end())) {
    CayleyTable t = relabel(s, perm);
    if (t.cells < best.table.cells) best = {std::move(t), perm};
  }
  return best;
}

inline std::string canonical_key(const CayleyTable& s) {
  return canonical_form(s).table.key();
}

inline std::optional<std::vector<int>> table_isomorphism(const CayleyTable& a,
                                                         const CayleyTable& b) {
  if (a.order != b.order) return std::nullopt;
  detail::require_canonical_order(a.order);
  std::vector<int> perm(a.order);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

inline bool tables_isomorphic(const CayleyTable& a, const CayleyTable& b) {
  return table_isomorphism(a, b).has_value();
}

// Table of the opposite semigroup (x*y := y*x in the original).
inline CayleyTable reversed_table(const CayleyTable& s) {
  CayleyTable t{s.order, std::vector<int>(s.cells.size())};
  for (int x = 0; x < s.order; ++x)
    for (int y = 0; y < s.order; ++y) t.cells[x * s.order + y] = s.at(y, x);
  return t;
}

// Key identifying the table up to isomorphism or anti-isomorphism.
inline std::string canonical_key_mod_anti(const CayleyTable& s) {
  return std::min(canonical_key(s), canonical_key(reversed_table(s)));
}

}  // namespace pentagon
