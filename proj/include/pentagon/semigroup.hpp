#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pentagon/error.hpp"

namespace pentagon {

// Everything in this library works on carriers {0..n-1}.  Orders stay tiny
// (exhaustive searches cap at 4-6, canonical forms at 7), so tables are plain
// row-major int vectors and all operations are pure functions over values.

inline constexpr int kMaxOrder = 64;

// A finite semigroup given by its multiplication table.
struct CayleyTable {
  int order = 0;
  std::vector<int> cells;  // row-major, cells[x*order+y] = x*y

  int at(int x, int y) const { return cells[x * order + y]; }

  // Raw bytes, usable as an ordering/dedup key.
  std::string key() const {
    std::string k;
    k.reserve(cells.size() + 1);
    k.push_back(static_cast<char>(order));
    for (int v : cells) k.push_back(static_cast<char>(v));
    return k;
  }

  bool operator==(const CayleyTable&) const = default;
};

// A total map {0..n-1} -> {0..n-1}.
struct ElementMap {
  int order = 0;
  std::vector<int> image;

  int operator()(int x) const { return image[x]; }

  bool is_identity() const {
    for (int x = 0; x < order; ++x)
      if (image[x] != x) return false;
    return true;
  }

  bool is_permutation() const {
    std::vector<char> seen(order, 0);
    for (int v : image) {
      if (v < 0 || v >= order || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  bool operator==(const ElementMap&) const = default;
};

inline ElementMap identity_map(int n) {
  ElementMap m{n, std::vector<int>(n)};
  std::iota(m.image.begin(), m.image.end(), 0);
  return m;
}

inline ElementMap constant_map(int n, int v) {
  return ElementMap{n, std::vector<int>(n, v)};
}

// g after f, i.e. x -> g(f(x)).
inline ElementMap compose(const ElementMap& g, const ElementMap& f) {
  ElementMap r{f.order, std::vector<int>(f.order)};
  for (int x = 0; x < f.order; ++x) r.image[x] = g.image[f.image[x]];
  return r;
}

namespace detail {
inline std::string tuple_str(const std::vector<int>& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}
}  // namespace detail

// Checks entries and associativity; reports the first violating triple in
// lexicographic (x,y,z) order.
inline CayleyTable validate_table(int order, std::vector<int> cells) {
  if (order < 1 || order > kMaxOrder)
    throw validation_error("OrderOutOfRange", {order},
                           "order must be in [1," + std::to_string(kMaxOrder) +
                               "], got " + std::to_string(order));
  if (static_cast<int>(cells.size()) != order * order)
    throw validation_error("BadTableShape", {order},
                           "table must be order*order entries");
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int v = cells[x * order + y];
      if (v < 0 || v >= order)
        throw validation_error("OutOfRangeEntry", {x, y},
                               "entry at " + detail::tuple_str({x, y}) +
                                   " is " + std::to_string(v));
    }
  CayleyTable t{order, std::move(cells)};
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      for (int z = 0; z < order; ++z)
        if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z)))
          throw validation_error(
              "NotAssociative", {x, y, z},
              "(x*y)*z != x*(y*z) at " + detail::tuple_str({x, y, z}));
  return t;
}

inline CayleyTable validate_table(int order,
                                  const std::vector<std::vector<int>>& rows) {
  std::vector<int> cells;
  cells.reserve(order * order);
  if (static_cast<int>(rows.size()) != order)
    throw validation_error("BadTableShape", {order}, "wrong number of rows");
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != order)
      throw validation_error("BadTableShape", {order}, "wrong row length");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return validate_table(order, std::move(cells));
}

inline bool is_associative(const CayleyTable& t) {
  for (int x = 0; x < t.order; ++x)
    for (int y = 0; y < t.order; ++y)
      for (int z = 0; z < t.order; ++z)
        if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z))) return false;
  return true;
}

// Witness for a left-group factorization S = (left zero E) x (group G),
// with pairing (i,j) -> E[i]*G[j].
struct LeftGroupFactorization {
  std::vector<int> left_zero;       // the idempotents, ascending
  std::vector<int> group_elements;  // e0*S, ascending
  CayleyTable group;                // table on positions of group_elements
  std::vector<int> pair_index;      // element -> i*|G|+j
};

struct SemigroupFacts {
  std::vector<int> idempotents;
  std::optional<int> identity;
  bool is_monoid = false;
  bool is_group = false;
  bool is_commutative = false;
  bool is_cancellative = false;
  bool is_left_zero = false;
  bool is_inverse = false;
  bool is_clifford = false;
  bool is_left_group = false;
  std::optional<std::vector<int>> inverses;
  std::optional<LeftGroupFactorization> left_group;
};

// Multiplication table of a subset, relabeled to positions. Throws if the
// subset is not closed.
inline CayleyTable subtable(const CayleyTable& s,
                            const std::vector<int>& elements) {
  int m = static_cast<int>(elements.size());
  std::vector<int> pos(s.order, -1);
  for (int i = 0; i < m; ++i) pos[elements[i]] = i;
  CayleyTable t{m, std::vector<int>(m * m)};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = s.at(elements[i], elements[j]);
      if (pos[p] < 0)
        throw validation_error("NotClosed", {elements[i], elements[j]},
                               "subset not closed under the product");
      t.cells[i * m + j] = pos[p];
    }
  return t;
}

namespace detail {

// Group test for a table already known associative.
inline bool is_group_table(const CayleyTable& t) {
  int id = -1;
  for (int e = 0; e < t.order; ++e) {
    bool ok = true;
    for (int x = 0; x < t.order && ok; ++x)
      ok = t.at(e, x) == x && t.at(x, e) == x;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) return false;
  for (int x = 0; x < t.order; ++x) {
    std::vector<char> row(t.order, 0), col(t.order, 0);
    for (int y = 0; y < t.order; ++y) {
      if (row[t.at(x, y)]++) return false;
      if (col[t.at(y, x)]++) return false;
    }
  }
  return true;
}

inline std::optional<LeftGroupFactorization> left_group_factorization(
    const CayleyTable& s, const std::vector<int>& idempotents) {
  if (idempotents.empty()) return std::nullopt;
  // Idempotents must form a left-zero subsemigroup of right identities.
  for (int e : idempotents) {
    for (int f : idempotents)
      if (s.at(e, f) != e) return std::nullopt;
    for (int x = 0; x < s.order; ++x)
      if (s.at(x, e) != x) return std::nullopt;
  }
  int e0 = idempotents[0];
  std::vector<int> ge;
  {
    std::vector<char> seen(s.order, 0);
    for (int x = 0; x < s.order; ++x) seen[s.at(e0, x)] = 1;
    for (int x = 0; x < s.order; ++x)
      if (seen[x]) ge.push_back(x);
  }
  int p = static_cast<int>(idempotents.size());
  int q = static_cast<int>(ge.size());
  if (p * q != s.order) return std::nullopt;
  CayleyTable g;
  try {
    g = subtable(s, ge);
  } catch (const validation_error&) {
    return std::nullopt;
  }
  if (!is_group_table(g)) return std::nullopt;
  std::vector<int> pair_index(s.order, -1);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      int el = s.at(idempotents[i], ge[j]);
      if (pair_index[el] != -1) return std::nullopt;  // not a bijection
      pair_index[el] = i * q + j;
    }
  for (int el = 0; el < s.order; ++el)
    if (pair_index[el] < 0) return std::nullopt;
  // Product law: (i,j)(i',j') = (i, j*j').
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      for (int i2 = 0; i2 < p; ++i2)
        for (int j2 = 0; j2 < q; ++j2) {
          int a = s.at(idempotents[i], ge[j]);
          int b = s.at(idempotents[i2], ge[j2]);
          int c = s.at(idempotents[i], ge[g.at(j, j2)]);
          if (s.at(a, b) != c) return std::nullopt;
        }
  return LeftGroupFactorization{idempotents, ge, std::move(g),
                                std::move(pair_index)};
}

}  // namespace detail

inline SemigroupFacts analyze(const CayleyTable& s) {
  SemigroupFacts f;
  int n = s.order;
  for (int x = 0; x < n; ++x)
    if (s.at(x, x) == x) f.idempotents.push_back(x);

  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = s.at(e, x) == x && s.at(x, e) == x;
    if (ok) {
      f.identity = e;
      break;
    }
  }
  f.is_monoid = f.identity.has_value();

  f.is_commutative = true;
  for (int x = 0; x < n && f.is_commutative; ++x)
    for (int y = 0; y < x; ++y)
      if (s.at(x, y) != s.at(y, x)) {
        f.is_commutative = false;
        break;
      }

  f.is_cancellative = true;
  for (int x = 0; x < n && f.is_cancellative; ++x) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int y = 0; y < n; ++y) {
      if (row[s.at(x, y)]++ || col[s.at(y, x)]++) {
        f.is_cancellative = false;
        break;
      }
    }
  }
  f.is_group = f.is_monoid && f.is_cancellative;

  f.is_left_zero = true;
  for (int x = 0; x < n && f.is_left_zero; ++x)
    for (int y = 0; y < n; ++y)
      if (s.at(x, y) != x) {
        f.is_left_zero = false;
        break;
      }

  // x is inverse-unique when exactly one y satisfies xyx=x and yxy=y.
  std::vector<int> inv(n, -1);
  f.is_inverse = true;
  for (int x = 0; x < n; ++x) {
    int count = 0;
    for (int y = 0; y < n; ++y)
      if (s.at(s.at(x, y), x) == x && s.at(s.at(y, x), y) == y) {
        ++count;
        inv[x] = y;
      }
    if (count != 1) {
      f.is_inverse = false;
      break;
    }
  }
  if (f.is_inverse) f.inverses = inv;

  f.is_clifford = f.is_inverse;
  if (f.is_clifford)
    for (int e : f.idempotents) {
      for (int x = 0; x < n; ++x)
        if (s.at(e, x) != s.at(x, e)) {
          f.is_clifford = false;
          break;
        }
      if (!f.is_clifford) break;
    }

  f.left_group = detail::left_group_factorization(s, f.idempotents);
  f.is_left_group = f.left_group.has_value();
  return f;
}

// --- small builders used throughout ---

inline CayleyTable cyclic_table(int n) {
  CayleyTable t{n, std::vector<int>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.cells[x * n + y] = (x + y) % n;
  return t;
}

inline CayleyTable left_zero_table(int n) {
  CayleyTable t{n, std::vector<int>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.cells[x * n + y] = x;
  return t;
}

inline CayleyTable null_table(int n, int zero = 0) {
  return CayleyTable{n, std::vector<int>(n * n, zero)};
}

// Pair (x,y) -> x*b.order + y.
inline CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
  int n = a.order * b.order;
  CayleyTable t{n, std::vector<int>(n * n)};
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2) {
          int p = x1 * b.order + y1, q = x2 * b.order + y2;
          t.cells[p * n + q] = a.at(x1, x2) * b.order + b.at(y1, y2);
        }
  return t;
}

// Order of g in a group table with known identity.
inline int element_order(const CayleyTable& g, int identity, int x) {
  int p = x, k = 1;
  while (p != identity) {
    p = g.at(p, x);
    ++k;
  }
  return k;
}

inline bool has_exponent_dividing_two(const CayleyTable& g, int identity) {
  for (int x = 0; x < g.order; ++x)
    if (g.at(x, x) != identity) return false;
  return true;
}

}  // namespace pentagon
