#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "pentagon/semigroup.hpp"

namespace pentagon {

// Partition of {0..n-1} in restricted-growth form: class_of[0] = 0 and each
// new class id is one past the largest id seen so far.
struct Congruence {
  int order = 0;
  std::vector<int> class_of;
  int num_classes = 0;

  bool related(int x, int y) const { return class_of[x] == class_of[y]; }
  bool operator==(const Congruence&) const = default;
};

inline Congruence normalize_partition(int n, const std::vector<int>& raw) {
  Congruence c{n, std::vector<int>(n, -1), 0};
  std::vector<int> map;
  for (int x = 0; x < n; ++x) {
    int found = -1;
    for (size_t i = 0; i < map.size(); ++i)
      if (map[i] == raw[x]) found = static_cast<int>(i);
    if (found < 0) {
      found = static_cast<int>(map.size());
      map.push_back(raw[x]);
    }
    c.class_of[x] = found;
  }
  c.num_classes = static_cast<int>(map.size());
  return c;
}

inline Congruence trivial_congruence(int n) {
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = i;
  return Congruence{n, c, n};
}

inline Congruence universal_congruence(int n) {
  return Congruence{n, std::vector<int>(n, 0), 1};
}

inline bool is_compatible(const CayleyTable& s, const Congruence& c) {
  for (int x = 0; x < s.order; ++x)
    for (int x2 = 0; x2 < s.order; ++x2) {
      if (c.class_of[x] != c.class_of[x2]) continue;
      for (int y = 0; y < s.order; ++y)
        if (c.class_of[s.at(x, y)] != c.class_of[s.at(x2, y)] ||
            c.class_of[s.at(y, x)] != c.class_of[s.at(y, x2)])
          return false;
    }
  return true;
}

namespace detail {
inline void all_partitions_rec(int n, int i, int max_used,
                               std::vector<int>& cur,
                               std::vector<std::vector<int>>& out) {
  if (i == n) {
    out.push_back(cur);
    return;
  }
  for (int c = 0; c <= max_used + 1; ++c) {
    cur[i] = c;
    all_partitions_rec(n, i + 1, std::max(max_used, c), cur, out);
  }
}
}  // namespace detail

// All set partitions of {0..n-1} as restricted-growth strings, lexicographic.
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  detail::all_partitions_rec(n, 1, 0, cur, out);
  if (n == 0) out.push_back({});
  return out;
}

// Exhaustive over all Bell(n) partitions; only sane for n <= 6.
inline std::vector<Congruence> enumerate_congruences(const CayleyTable& s) {
  if (s.order > 6)
    throw validation_error("OrderTooLarge", {s.order},
                           "congruence enumeration is capped at order 6");
  std::vector<Congruence> out;
  for (const auto& p : all_partitions(s.order)) {
    Congruence c = normalize_partition(s.order, p);
    if (is_compatible(s, c)) out.push_back(std::move(c));
  }
  return out;
}

// Table on classes; well-defined whenever c is compatible.
inline CayleyTable quotient_table(const CayleyTable& s, const Congruence& c) {
  int m = c.num_classes;
  std::vector<int> rep(m, -1);
  for (int x = s.order - 1; x >= 0; --x) rep[c.class_of[x]] = x;
  CayleyTable t{m, std::vector<int>(m * m)};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t.cells[i * m + j] = c.class_of[s.at(rep[i], rep[j])];
  return t;
}

// All normal subgroups of a group, ordered by (size, elements).  Subset
// scan, capped well before the mask width runs out.
inline std::vector<std::vector<int>> normal_subgroups(const CayleyTable& g) {
  SemigroupFacts f = analyze(g);
  if (!f.is_group)
    throw validation_error("NotAGroup", {}, "normal_subgroups needs a group");
  if (g.order > 16)
    throw validation_error("OrderTooLarge", {g.order},
                           "normal subgroup scan is capped at order 16");
  int n = g.order, e = *f.identity;
  const std::vector<int>& inv = *f.inverses;
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> e & 1)) continue;
    std::vector<int> k;
    for (int x = 0; x < n; ++x)
      if (mask >> x & 1) k.push_back(x);
    bool ok = true;
    for (int a : k) {
      for (int b : k)
        if (!(mask >> g.at(a, b) & 1)) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (!ok) continue;
    for (int x = 0; x < n && ok; ++x)
      for (int a : k)
        if (!(mask >> g.at(g.at(x, a), inv[x]) & 1)) {
          ok = false;
          break;
        }
    if (ok) out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

// One representative per right coset Kx, together with the map x -> its
// representative.
struct RepSystem {
  std::vector<int> reps;  // one per coset, cosets ordered by min element
  ElementMap mu;
};

// Every way of choosing a representative system of G/K; there are
// |K|^[G:K] of them, generated in lexicographic order.
inline std::vector<RepSystem> coset_representative_systems(
    const CayleyTable& g, const std::vector<int>& kernel) {
  SemigroupFacts f = analyze(g);
  if (!f.is_group)
    throw validation_error("NotAGroup", {}, "coset systems need a group");
  int n = g.order, e = *f.identity;
  const std::vector<int>& inv = *f.inverses;
  std::vector<char> in_k(n, 0);
  for (int x : kernel) in_k[x] = 1;
  if (!in_k[e])
    throw validation_error("NotNormal", {}, "kernel must contain the identity");
  for (int a : kernel)
    for (int b : kernel)
      if (!in_k[g.at(a, b)])
        throw validation_error("NotNormal", {a, b}, "kernel not closed");
  for (int x = 0; x < n; ++x)
    for (int a : kernel)
      if (!in_k[g.at(g.at(x, a), inv[x])])
        throw validation_error("NotNormal", {x, a}, "kernel not normal");

  std::vector<int> coset_of(n, -1);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] != -1) continue;
    int id = static_cast<int>(cosets.size());
    std::vector<int> cs;
    for (int a : kernel) cs.push_back(g.at(a, x));
    std::sort(cs.begin(), cs.end());
    for (int y : cs) coset_of[y] = id;
    cosets.push_back(std::move(cs));
  }
  int m = static_cast<int>(cosets.size());
  std::vector<RepSystem> out;
  std::vector<int> choice(m, 0);
  for (;;) {
    RepSystem rs;
    rs.reps.resize(m);
    for (int i = 0; i < m; ++i) rs.reps[i] = cosets[i][choice[i]];
    rs.mu.order = n;
    rs.mu.image.resize(n);
    for (int x = 0; x < n; ++x) rs.mu.image[x] = rs.reps[coset_of[x]];
    out.push_back(std::move(rs));
    int i = m - 1;
    while (i >= 0 && choice[i] + 1 == static_cast<int>(cosets[i].size()))
      choice[i--] = 0;
    if (i < 0) break;
    ++choice[i];
  }
  return out;
}

}  // namespace pentagon
