#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "pentagon/clifford.hpp"
#include "pentagon/solution.hpp"

namespace pentagon {

struct SearchFilter {
  bool involutive = false;
  bool idempotent = false;
  bool bijective = false;
  bool non_degenerate = false;
  bool commutative = false;
  bool cocommutative = false;
  bool e_invariant = false;
  bool e_fixed = false;
  bool up_to_iso = false;

  bool any() const {
    return involutive || idempotent || bijective || non_degenerate ||
           commutative || cocommutative || e_invariant || e_fixed;
  }
};

namespace detail {

// Depth-first assignment of theta cells in row-major order with incremental
// (P1)/(P2) checking.  Each axiom instance fires once, when the last of its
// statically-known cells is assigned; (P2) instances whose outer lookup cell
// is still open record a forced value for that cell instead.  Every full
// assignment is re-verified before being emitted.
class ThetaSearch {
 public:
  ThetaSearch(const CayleyTable& s, const SearchFilter& f)
      : s_(s), f_(f), n_(s.order), ncells_(n_ * n_) {
    theta_.assign(ncells_, -1);
    base_forced_.assign(ncells_, -1);
    feasible_ = true;

    p1_at_.assign(ncells_, {});
    p2_at_.assign(ncells_, {});
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        for (int z = 0; z < n_; ++z) {
          int a = x * n_ + y;
          int b = s_.at(x, y) * n_ + z;
          int c = x * n_ + s_.at(y, z);
          p1_at_[std::max({a, b, c})].push_back({x, y, z});
          int b2 = s_.at(x, y) * n_ + z;  // w plays the role of z here
          int c2 = y * n_ + z;
          p2_at_[std::max({a, b2, c2})].push_back({x, y, z});
        }

    if (f_.e_invariant || f_.e_fixed) {
      SemigroupFacts facts = analyze(s_);
      if (!facts.is_clifford)
        throw validation_error("NotClifford", {},
                               "idempotent-class filters need a Clifford carrier");
      idempotents_ = facts.idempotents;
      if (f_.e_fixed)
        for (int x = 0; x < n_; ++x)
          for (int e : idempotents_) base_forced_[x * n_ + e] = e;
    }
    if (f_.commutative) {
      for (int x = 0; x < n_ && feasible_; ++x)
        for (int y = 0; y < n_ && feasible_; ++y)
          for (int z = 0; z < n_; ++z)
            if (s_.at(s_.at(x, z), y) != s_.at(s_.at(x, y), z)) {
              feasible_ = false;
              break;
            }
      // rows x and x*y must carry equal theta rows
      row_rep_.resize(n_);
      std::iota(row_rep_.begin(), row_rep_.end(), 0);
      auto find = [&](int r) {
        while (row_rep_[r] != r) r = row_rep_[r] = row_rep_[row_rep_[r]];
        return r;
      };
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
          int a = find(x), b = find(s_.at(x, y));
          if (a != b) row_rep_[std::max(a, b)] = std::min(a, b);
        }
      for (int x = 0; x < n_; ++x) find(x);
    }
    if (f_.bijective) used_.assign(ncells_, 0);
    reset();
  }

  bool feasible() const { return feasible_; }

  void reset() {
    std::fill(theta_.begin(), theta_.end(), -1);
    forced_ = base_forced_;
    log_.clear();
    if (f_.bijective) std::fill(used_.begin(), used_.end(), 0);
  }

  // All consistent assignments of the first row, used to partition the
  // search tree among workers.
  std::vector<std::vector<int>> row0_prefixes() {
    std::vector<std::vector<int>> out;
    if (!feasible_) return out;
    int limit = std::min(n_, ncells_);
    dfs(0, limit, [&](const std::vector<int>& t) {
      out.emplace_back(t.begin(), t.begin() + limit);
    });
    return out;
  }

  // Assigns a previously collected prefix; true on success.
  bool replay(const std::vector<int>& prefix) {
    for (size_t i = 0; i < prefix.size(); ++i)
      if (!assign(static_cast<int>(i), prefix[i])) return false;
    return true;
  }

  template <class Emit>
  void search_tail(int from, Emit&& emit) {
    dfs(from, ncells_, emit);
  }

 private:
  enum Kind { kAssign, kForced, kOutput };
  struct LogEntry {
    Kind kind;
    int where;
  };
  struct Inst {
    int x, y, z;
  };

  bool demand(int cell, int val) {
    if (theta_[cell] >= 0) return theta_[cell] == val;
    if (forced_[cell] >= 0) return forced_[cell] == val;
    forced_[cell] = val;
    log_.push_back({kForced, cell});
    return true;
  }

  bool local_checks(int c, int v) {
    int row = c / n_, col = c % n_;
    if (f_.non_degenerate) {
      for (int y = 0; y < col; ++y)
        if (theta_[row * n_ + y] == v) return false;
    }
    if (f_.bijective) {
      int out = s_.at(row, col) * n_ + v;
      if (used_[out]) return false;
      used_[out] = 1;
      log_.push_back({kOutput, out});
    }
    if (f_.involutive) {
      int p = s_.at(row, col);
      if (s_.at(p, v) != row) return false;
      if (!demand(p * n_ + v, col)) return false;
    }
    if (f_.idempotent) {
      int p = s_.at(row, col);
      if (s_.at(p, v) != p) return false;
      if (!demand(p * n_ + v, v)) return false;
    }
    if (f_.cocommutative) {
      for (int x = 0; x < n_; ++x)
        if (s_.at(x, v) != s_.at(x, col)) return false;
    }
    if (f_.commutative) {
      int r = row_rep_[row];
      if (r != row && theta_[r * n_ + col] != v) return false;
    }
    if (f_.e_invariant && !idempotents_.empty() && col != idempotents_[0]) {
      bool is_idem = s_.at(col, col) == col;
      if (is_idem && theta_[row * n_ + idempotents_[0]] != v) return false;
    }
    return true;
  }

  bool fire(int c) {
    for (const Inst& i : p1_at_[c]) {
      int v1 = theta_[i.x * n_ + i.y];
      int v2 = theta_[s_.at(i.x, i.y) * n_ + i.z];
      int rhs = theta_[i.x * n_ + s_.at(i.y, i.z)];
      if (s_.at(v1, v2) != rhs) return false;
    }
    for (const Inst& i : p2_at_[c]) {
      int t1 = theta_[i.x * n_ + i.y];
      int t2 = theta_[s_.at(i.x, i.y) * n_ + i.z];
      int rhs = theta_[i.y * n_ + i.z];
      if (!demand(t1 * n_ + t2, rhs)) return false;
    }
    return true;
  }

  bool assign(int c, int v) {
    if (forced_[c] >= 0 && forced_[c] != v) return false;
    theta_[c] = v;
    log_.push_back({kAssign, c});
    return local_checks(c, v) && fire(c);
  }

  void undo_to(size_t mark) {
    while (log_.size() > mark) {
      LogEntry e = log_.back();
      log_.pop_back();
      switch (e.kind) {
        case kAssign: theta_[e.where] = -1; break;
        case kForced: forced_[e.where] = -1; break;
        case kOutput: used_[e.where] = 0; break;
      }
    }
  }

  bool leaf_ok() {
    if (!pentagon_axioms_hold(s_, ThetaFamily{n_, theta_})) return false;
    if (!f_.any()) return true;
    PESolution sol{s_, ThetaFamily{n_, theta_}};
    PropertyReport pr = classify_properties(sol);
    if (f_.involutive && !pr.involutive) return false;
    if (f_.idempotent && !pr.idempotent) return false;
    if (f_.bijective && !pr.bijective) return false;
    if (f_.non_degenerate && !pr.non_degenerate) return false;
    if (f_.commutative && !pr.commutative) return false;
    if (f_.cocommutative && !pr.cocommutative) return false;
    if (f_.e_invariant || f_.e_fixed) {
      auto [inv, fix] = invariance_flags(sol);
      if (f_.e_invariant && !inv) return false;
      if (f_.e_fixed && !fix) return false;
    }
    return true;
  }

  template <class Emit>
  void dfs(int c, int limit, Emit&& emit) {
    if (c == limit) {
      if (limit < ncells_ || leaf_ok()) emit(theta_);
      return;
    }
    int lo = 0, hi = n_ - 1;
    if (forced_[c] >= 0) lo = hi = forced_[c];
    for (int v = lo; v <= hi; ++v) {
      size_t mark = log_.size();
      if (assign(c, v)) dfs(c + 1, limit, emit);
      undo_to(mark);
    }
  }

  const CayleyTable& s_;
  SearchFilter f_;
  int n_, ncells_;
  bool feasible_ = true;
  std::vector<int> theta_, forced_, base_forced_;
  std::vector<LogEntry> log_;
  std::vector<std::vector<Inst>> p1_at_, p2_at_;
  std::vector<char> used_;
  std::vector<int> idempotents_;
  std::vector<int> row_rep_;
};

// Same machinery for building associative tables cell by cell.  Instances
// of (xy)z = x(yz) fire when both argument cells are known; the two outer
// lookups are checked, forced, or parked on the earlier open cell.
class TableSearch {
 public:
  explicit TableSearch(int n) : n_(n), ncells_(n * n) {
    cells_.assign(ncells_, -1);
    forced_.assign(ncells_, -1);
    at_.assign(ncells_, {});
    pend_.assign(ncells_, {});
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        for (int z = 0; z < n_; ++z) {
          int a = x * n_ + y, b = y * n_ + z;
          at_[std::max(a, b)].push_back({x, y, z});
        }
  }

  template <class Emit>
  void run(Emit&& emit) {
    dfs(0, emit);
  }

 private:
  enum Kind { kAssign, kForced, kPend };
  struct LogEntry {
    Kind kind;
    int where;
  };
  struct Inst {
    int x, y, z;
  };

  bool demand(int cell, int val) {
    if (cells_[cell] >= 0) return cells_[cell] == val;
    if (forced_[cell] >= 0) return forced_[cell] == val;
    forced_[cell] = val;
    log_.push_back({kForced, cell});
    return true;
  }

  bool eval(const Inst& i) {
    int left = cells_[i.x * n_ + i.y];   // x*y, known
    int right = cells_[i.y * n_ + i.z];  // y*z, known
    int dl = left * n_ + i.z, dr = i.x * n_ + right;
    int vl = cells_[dl], vr = cells_[dr];
    if (vl >= 0 && vr >= 0) return vl == vr;
    if (vl >= 0) return demand(dr, vl);
    if (vr >= 0) return demand(dl, vr);
    int park = std::min(dl, dr);
    pend_[park].push_back(i);
    log_.push_back({kPend, park});
    return true;
  }

  bool assign(int c, int v) {
    if (forced_[c] >= 0 && forced_[c] != v) return false;
    cells_[c] = v;
    log_.push_back({kAssign, c});
    for (const Inst& i : at_[c])
      if (!eval(i)) return false;
    // instances parked here now have at least one outer cell known
    size_t count = pend_[c].size();
    for (size_t k = 0; k < count; ++k)
      if (!eval(pend_[c][k])) return false;
    return true;
  }

  void undo_to(size_t mark) {
    while (log_.size() > mark) {
      LogEntry e = log_.back();
      log_.pop_back();
      switch (e.kind) {
        case kAssign: cells_[e.where] = -1; break;
        case kForced: forced_[e.where] = -1; break;
        case kPend: pend_[e.where].pop_back(); break;
      }
    }
  }

  template <class Emit>
  void dfs(int c, Emit&& emit) {
    if (c == ncells_) {
      CayleyTable t{n_, cells_};
      if (is_associative(t)) emit(std::move(t));
      return;
    }
    int lo = 0, hi = n_ - 1;
    if (forced_[c] >= 0) lo = hi = forced_[c];
    for (int v = lo; v <= hi; ++v) {
      size_t mark = log_.size();
      if (assign(c, v)) dfs(c + 1, emit);
      undo_to(mark);
    }
  }

  int n_, ncells_;
  std::vector<int> cells_, forced_;
  std::vector<LogEntry> log_;
  std::vector<std::vector<Inst>> at_, pend_;
};

}  // namespace detail

// All associative tables of the given order, in lexicographic order; with
// up_to_iso, canonical representatives sorted by key.  Order 5 takes a while
// and sits behind allow_slow; anything larger is refused.
inline std::vector<CayleyTable> enumerate_semigroups(int n, bool up_to_iso,
                                                     bool allow_slow = false) {
  if (n < 1 || n > (allow_slow ? 5 : 4))
    throw validation_error("OrderTooLarge", {n},
                           "semigroup enumeration is capped at order 4 "
                           "(5 with allow_slow)");
  std::vector<CayleyTable> all;
  detail::TableSearch search(n);
  search.run([&](CayleyTable t) { all.push_back(std::move(t)); });
  if (!up_to_iso) return all;
  std::map<std::string, CayleyTable> reps;
  for (const CayleyTable& t : all) {
    CanonicalTable c = canonical_form(t);
    reps.emplace(c.table.key(), c.table);
  }
  std::vector<CayleyTable> out;
  out.reserve(reps.size());
  for (auto& [k, t] : reps) out.push_back(std::move(t));
  return out;
}

// All theta families making (S, theta) a pentagon solution and passing the
// filter.  Output is in lexicographic theta order; the search tree is
// partitioned by the first row, so worker count never changes the result.
inline std::vector<ThetaFamily> enumerate_solutions(const CayleyTable& s,
                                                    const SearchFilter& filter = {},
                                                    int workers = 1) {
  detail::ThetaSearch base(s, filter);
  std::vector<ThetaFamily> found;
  if (!base.feasible()) return found;
  int n = s.order;
  std::vector<std::vector<int>> prefixes = base.row0_prefixes();
  int limit = std::min(n, n * n);

  auto run_prefix = [&](detail::ThetaSearch& ts, const std::vector<int>& pre,
                        std::vector<ThetaFamily>& sink) {
    ts.reset();
    if (!ts.replay(pre)) return;
    ts.search_tail(limit, [&](const std::vector<int>& cells) {
      sink.push_back(ThetaFamily{n, cells});
    });
  };

  if (workers <= 1 || prefixes.size() <= 1) {
    for (const auto& pre : prefixes) run_prefix(base, pre, found);
  } else {
    std::vector<std::vector<ThetaFamily>> buckets(prefixes.size());
    int k = std::min<int>(workers, static_cast<int>(prefixes.size()));
    std::vector<std::thread> pool;
    for (int t = 0; t < k; ++t)
      pool.emplace_back([&, t]() {
        detail::ThetaSearch local(s, filter);
        for (size_t i = t; i < prefixes.size(); i += k)
          run_prefix(local, prefixes[i], buckets[i]);
      });
    for (auto& th : pool) th.join();
    for (auto& b : buckets)
      for (auto& tf : b) found.push_back(std::move(tf));
  }

  if (filter.up_to_iso) {
    std::set<std::string> seen;
    std::vector<ThetaFamily> unique;
    for (auto& tf : found)
      if (seen.insert(solution_canonical_key(PESolution{s, tf})).second)
        unique.push_back(std::move(tf));
    return unique;
  }
  return found;
}

}  // namespace pentagon
