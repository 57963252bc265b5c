#pragma once

#include <vector>

#include "pentagon/canonical.hpp"
#include "pentagon/semigroup.hpp"
#include "pentagon/solution.hpp"

// Independent brute-force reference implementations.  These deliberately
// avoid the incremental search machinery so the two routes can be compared.

// Advances a base-n odometer; false once it wraps to all zeros.
inline bool next_digits(std::vector<int>& d, int base) {
  for (size_t i = d.size(); i-- > 0;) {
    if (++d[i] < base) return true;
    d[i] = 0;
  }
  return false;
}

// Every associative table of order n, by scanning all n^(n^2) candidates.
inline std::vector<pentagon::CayleyTable> naive_associative_tables(int n) {
  std::vector<pentagon::CayleyTable> out;
  std::vector<int> cells(n * n, 0);
  do {
    pentagon::CayleyTable t{n, cells};
    if (pentagon::is_associative(t)) out.push_back(t);
  } while (next_digits(cells, n));
  return out;
}

// Every theta family satisfying (P1) and (P2), by scanning all n^(n^2).
inline std::vector<pentagon::ThetaFamily> naive_solutions(
    const pentagon::CayleyTable& s) {
  std::vector<pentagon::ThetaFamily> out;
  int n = s.order;
  std::vector<int> cells(n * n, 0);
  do {
    pentagon::ThetaFamily t{n, cells};
    if (pentagon::pentagon_axioms_hold(s, t)) out.push_back(t);
  } while (next_digits(cells, n));
  return out;
}

// Isomorphism-class count by pairwise comparison, no canonical forms.
inline int pairwise_iso_class_count(
    const std::vector<pentagon::CayleyTable>& tables) {
  std::vector<int> cls(tables.size(), -1);
  int count = 0;
  for (size_t i = 0; i < tables.size(); ++i) {
    if (cls[i] != -1) continue;
    cls[i] = count;
    for (size_t j = i + 1; j < tables.size(); ++j)
      if (cls[j] == -1 && pentagon::tables_isomorphic(tables[i], tables[j]))
        cls[j] = count;
    ++count;
  }
  return count;
}

// Composition-table route for the operator identities on X^3, written
// directly against PairMap for cross-checking qybe_check and friends.
struct TripleMap {
  int n = 0;
  std::vector<int> a, b, c;  // images of (x,y,z), flattened x*n*n+y*n+z

  static TripleMap identity(int n) {
    TripleMap m;
    m.n = n;
    m.a.resize(n * n * n);
    m.b.resize(n * n * n);
    m.c.resize(n * n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int i = (x * n + y) * n + z;
          m.a[i] = x;
          m.b[i] = y;
          m.c[i] = z;
        }
    return m;
  }

  bool operator==(const TripleMap&) const = default;
};

enum class Leg { one_two, one_three, two_three };

// g := s_leg applied after g.
inline TripleMap lift_apply(const pentagon::PairMap& s, Leg leg,
                            const TripleMap& g) {
  TripleMap out = g;
  for (size_t i = 0; i < g.a.size(); ++i) {
    int x = g.a[i], y = g.b[i], z = g.c[i];
    switch (leg) {
      case Leg::one_two: {
        auto [u, v] = s.apply(x, y);
        out.a[i] = u;
        out.b[i] = v;
        out.c[i] = z;
        break;
      }
      case Leg::one_three: {
        auto [u, v] = s.apply(x, z);
        out.a[i] = u;
        out.b[i] = y;
        out.c[i] = v;
        break;
      }
      case Leg::two_three: {
        auto [u, v] = s.apply(y, z);
        out.a[i] = x;
        out.b[i] = u;
        out.c[i] = v;
        break;
      }
    }
  }
  return out;
}

// Composes the legs right to left: legs = {l1, l2, l3} means l1 ∘ l2 ∘ l3.
inline TripleMap compose_legs(const pentagon::PairMap& s,
                              std::initializer_list<Leg> legs) {
  TripleMap m = TripleMap::identity(s.order);
  std::vector<Leg> v(legs);
  for (size_t i = v.size(); i-- > 0;) m = lift_apply(s, v[i], m);
  return m;
}
