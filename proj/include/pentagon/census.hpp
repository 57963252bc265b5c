#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pentagon/enumerate.hpp"

namespace pentagon {

struct CensusReport {
  int order = 0;
  SearchFilter filter;
  long long labeled_semigroups = 0;
  long long iso_semigroups = 0;
  long long anti_iso_semigroups = 0;  // classes mod iso + anti-iso
  long long labeled_solutions = 0;
  long long iso_classes = 0;
  // classes additionally merged when a bijective solution and the opposite
  // of another coincide; reported so censuses can be compared against
  // duality-insensitive counts
  long long iso_or_opposite_classes = 0;
  std::vector<PESolution> classes;  // canonical representatives, key order
};

// Iterates every labeled semigroup of the given order, enumerates solutions
// on each, and deduplicates across all carriers by solution canonical form.
// Unfiltered censuses stop at order 3; order 4 needs a restrictive filter.
inline CensusReport census(int order, const SearchFilter& filter = {},
                           int workers = 1) {
  bool restrictive = filter.involutive || filter.idempotent;
  if (order < 1 || order > 4 || (order == 4 && !restrictive))
    throw validation_error("OrderTooLarge", {order},
                           "census runs unfiltered up to order 3, order 4 "
                           "only with an involutive or idempotent filter");
  CensusReport r;
  r.order = order;
  r.filter = filter;
  SearchFilter inner = filter;
  inner.up_to_iso = false;

  std::vector<CayleyTable> semis = enumerate_semigroups(order, false);
  r.labeled_semigroups = static_cast<long long>(semis.size());
  std::set<std::string> semi_iso, semi_anti;
  std::map<std::string, PESolution> classes;
  for (const CayleyTable& s : semis) {
    semi_iso.insert(canonical_key(s));
    semi_anti.insert(canonical_key_mod_anti(s));
    std::vector<ThetaFamily> sols = enumerate_solutions(s, inner, workers);
    r.labeled_solutions += static_cast<long long>(sols.size());
    for (const ThetaFamily& tf : sols) {
      CanonicalSolution c = solution_canonical_form(PESolution{s, tf});
      classes.emplace(c.solution.key(), c.solution);
    }
  }
  r.iso_semigroups = static_cast<long long>(semi_iso.size());
  r.anti_iso_semigroups = static_cast<long long>(semi_anti.size());
  r.iso_classes = static_cast<long long>(classes.size());

  std::set<std::string> merged;
  for (const auto& [key, sol] : classes) {
    if (classify_properties(sol).bijective)
      merged.insert(std::min(key, solution_canonical_key(opposite(sol))));
    else
      merged.insert(key);
  }
  r.iso_or_opposite_classes = static_cast<long long>(merged.size());

  r.classes.reserve(classes.size());
  for (auto& [key, sol] : classes) r.classes.push_back(std::move(sol));
  return r;
}

}  // namespace pentagon
