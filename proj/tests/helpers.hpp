#pragma once

#include <numeric>
#include <vector>

#include "pentagon/semigroup.hpp"
#include "pentagon/solution.hpp"

// Fixed tables used across the test suites.  Elements are labeled so that
// identities sit at 0, matching the data files shipped with the project.

inline pentagon::CayleyTable klein_table() {
  return pentagon::direct_product(pentagon::cyclic_table(2),
                                  pentagon::cyclic_table(2));
}

// Permutations of {0..k-1} in lexicographic one-line order; product is
// composition a*b = a after b.  Writes the one-line forms to perms if given.
inline pentagon::CayleyTable symmetric_group_table(
    int k, std::vector<std::vector<int>>* perms_out = nullptr) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int n = static_cast<int>(perms.size());
  pentagon::CayleyTable t{n, std::vector<int>(n * n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(k);
      for (int x = 0; x < k; ++x) c[x] = perms[a][perms[b][x]];
      int idx = static_cast<int>(
          std::find(perms.begin(), perms.end(), c) - perms.begin());
      t.cells[a * n + b] = idx;
    }
  if (perms_out) *perms_out = perms;
  return t;
}

inline int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

// The commutative Clifford monoid {1,x,y} with x^2=x, y^2=x, xy=y;
// labels 1->0, x->1, y->2.
inline pentagon::CayleyTable clifford_monoid_m() {
  return pentagon::validate_table(3, std::vector<std::vector<int>>{
                                         {0, 1, 2}, {1, 1, 2}, {2, 2, 1}});
}

// The commutative monoid {1,a,b} with a^2=a, ab=a, b^2=1;
// labels 1->0, a->1, b->2.
inline pentagon::CayleyTable idempotent_monoid_m() {
  return pentagon::validate_table(3, std::vector<std::vector<int>>{
                                         {0, 1, 2}, {1, 1, 1}, {2, 1, 0}});
}

// The chain semilattice 1 > x > y (product = meet); labels 1->0, x->1, y->2.
inline pentagon::CayleyTable chain_semilattice_3() {
  return pentagon::validate_table(3, std::vector<std::vector<int>>{
                                         {0, 1, 2}, {1, 1, 2}, {2, 2, 2}});
}

inline pentagon::PESolution kac_takesaki(const pentagon::CayleyTable& g) {
  return pentagon::identity_solution(g);
}

// The null-semigroup solution: xy = 0, theta_0 = id, theta_a = theta_b the
// transposition of {a,b}; labels 0->0, a->1, b->2.
inline pentagon::PESolution null_semigroup_solution() {
  pentagon::CayleyTable t = pentagon::null_table(3);
  pentagon::ThetaFamily th{3, {0, 1, 2, 0, 2, 1, 0, 2, 1}};
  return pentagon::verify_solution(t, th);
}
