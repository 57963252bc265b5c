#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pentagon/congruence.hpp"
#include "pentagon/solution.hpp"

namespace pentagon {

// Structural facts about theta on a monoid solution:
//   1. theta_x(1) is idempotent
//   2. theta_1 = theta_{theta_x(1)} theta_x
//   3. theta_1(x) in theta_1(1) M
//   4. theta_x = theta_{theta_1(x)} theta_x
struct MonoidThetaReport {
  bool theta_of_one_idempotent = true;
  bool theta_one_factors = true;
  bool theta_one_range = true;
  bool theta_absorbs = true;
  std::vector<int> witness;

  bool all() const {
    return theta_of_one_idempotent && theta_one_factors && theta_one_range &&
           theta_absorbs;
  }
};

inline MonoidThetaReport monoid_theta_checks(const PESolution& s) {
  SemigroupFacts f = analyze(s.table);
  if (!f.is_monoid)
    throw validation_error("NotAMonoid", {}, "monoid checks need a monoid");
  int n = s.order(), one = *f.identity;
  MonoidThetaReport r;
  auto note = [&](bool& flag, std::vector<int> w) {
    if (flag) r.witness = std::move(w);
    flag = false;
  };
  for (int x = 0; x < n; ++x) {
    int tx1 = s.theta.at(x, one);
    if (s.table.at(tx1, tx1) != tx1) note(r.theta_of_one_idempotent, {x});
    for (int y = 0; y < n; ++y)
      if (s.theta.at(tx1, s.theta.at(x, y)) != s.theta.at(one, y))
        note(r.theta_one_factors, {x, y});
    bool in_range = false;
    int base = s.theta.at(one, one);
    for (int m = 0; m < n && !in_range; ++m)
      in_range = s.table.at(base, m) == s.theta.at(one, x);
    if (!in_range) note(r.theta_one_range, {x});
    int t1x = s.theta.at(one, x);
    for (int y = 0; y < n; ++y)
      if (s.theta.at(t1x, s.theta.at(x, y)) != s.theta.at(x, y))
        note(r.theta_absorbs, {x, y});
  }
  return r;
}

// Per-idempotent facts about an idempotent solution; items (a)-(c) apply to
// x with xe = x, items (d)-(g) to x with ex = x, and the corollary items to
// monoids.
struct IdempotentThetaReport {
  bool a = true, b = true, c = true, d = true, e = true, ff = true, g = true;
  bool monoid = false;
  bool cor_theta1_idempotent = true;   // theta_1(x) in E, theta_1(1) = 1
  bool cor_theta_collapse = true;      // theta_x = theta_{theta_1(x)}
  bool cor_theta1_absorbs = true;      // theta_1 = theta_1 theta_x
  bool cor_theta_idempotent = true;    // theta_x theta_x = theta_x
  std::vector<int> witness;

  bool all() const {
    return a && b && c && d && e && ff && g &&
           (!monoid || (cor_theta1_idempotent && cor_theta_collapse &&
                        cor_theta1_absorbs && cor_theta_idempotent));
  }
};

inline IdempotentThetaReport idempotent_theta_checks(const PESolution& s) {
  if (!classify_properties(s).idempotent)
    throw validation_error("NotIdempotent", {},
                           "these checks need an idempotent solution");
  SemigroupFacts fct = analyze(s.table);
  int n = s.order();
  IdempotentThetaReport r;
  auto note = [&](bool& flag, std::vector<int> w) {
    if (flag) r.witness = std::move(w);
    flag = false;
  };
  auto in_left_ideal = [&](int x, int t) {  // x in X*t
    for (int w = 0; w < n; ++w)
      if (s.table.at(w, t) == x) return true;
    return false;
  };
  for (int e : fct.idempotents) {
    for (int x = 0; x < n; ++x) {
      if (s.table.at(x, e) == x) {
        int txe = s.theta.at(x, e);
        if (!in_left_ideal(x, txe)) note(r.a, {e, x});
        for (int y = 0; y < n; ++y)
          if (!in_left_ideal(s.theta.at(y, x), txe)) note(r.b, {e, x, y});
        for (int y = 0; y < n; ++y)
          if (s.theta.at(e, s.theta.at(x, y)) != s.theta.at(e, y))
            note(r.c, {e, x, y});
      }
      if (s.table.at(e, x) == x) {
        int tex = s.theta.at(e, x);
        if (s.table.at(tex, tex) != tex) note(r.d, {e, x});
        if (!in_left_ideal(x, tex)) note(r.e, {e, x});
        for (int y = 0; y < n; ++y)
          if (!in_left_ideal(s.theta.at(y, x), tex)) note(r.ff, {e, x, y});
        for (int y = 0; y < n; ++y)
          if (s.theta.at(x, s.theta.at(x, y)) != s.theta.at(x, y))
            note(r.g, {e, x, y});
      }
    }
  }
  if (fct.is_monoid) {
    r.monoid = true;
    int one = *fct.identity;
    if (s.theta.at(one, one) != one) note(r.cor_theta1_idempotent, {one});
    for (int x = 0; x < n; ++x) {
      int t1x = s.theta.at(one, x);
      if (s.table.at(t1x, t1x) != t1x) note(r.cor_theta1_idempotent, {x});
      for (int y = 0; y < n; ++y) {
        if (s.theta.at(x, y) != s.theta.at(t1x, y)) note(r.cor_theta_collapse, {x, y});
        if (s.theta.at(one, s.theta.at(x, y)) != s.theta.at(one, y))
          note(r.cor_theta1_absorbs, {x, y});
        if (s.theta.at(x, s.theta.at(x, y)) != s.theta.at(x, y))
          note(r.cor_theta_idempotent, {x, y});
      }
    }
  }
  return r;
}

struct Theta1HomData {
  ElementMap mu;                    // = theta_1
  Congruence kernel;                // ker theta_1 as a partition of M
  std::vector<int> representatives; // theta_1(M), ascending
  bool mu_is_idempotent_monoid_hom = true;
  bool rep_system_ok = true;
  bool theta_values_in_kernel_class = true;
};

// On a monoid with central idempotents, theta_1 of an idempotent solution is
// an idempotent monoid homomorphism onto a representative system of its own
// kernel, and every theta_x(y) stays in y's kernel class.
inline Theta1HomData theta1_homomorphism_data(const PESolution& s) {
  SemigroupFacts f = analyze(s.table);
  if (!f.is_monoid)
    throw validation_error("NotAMonoid", {}, "needs a monoid");
  for (int e : f.idempotents)
    for (int x = 0; x < s.order(); ++x)
      if (s.table.at(e, x) != s.table.at(x, e))
        throw validation_error("IdempotentsNotCentral", {e, x},
                               "idempotents must be central");
  if (!classify_properties(s).idempotent)
    throw validation_error("NotIdempotent", {}, "needs an idempotent solution");
  int n = s.order(), one = *f.identity;
  Theta1HomData out;
  out.mu.order = n;
  out.mu.image.resize(n);
  for (int x = 0; x < n; ++x) out.mu.image[x] = s.theta.at(one, x);
  std::vector<char> is_e(n, 0);
  for (int e : f.idempotents) is_e[e] = 1;
  if (out.mu(one) != one) out.mu_is_idempotent_monoid_hom = false;
  for (int x = 0; x < n && out.mu_is_idempotent_monoid_hom; ++x) {
    if (!is_e[out.mu(x)] || out.mu(out.mu(x)) != out.mu(x))
      out.mu_is_idempotent_monoid_hom = false;
    for (int y = 0; y < n; ++y)
      if (out.mu(s.table.at(x, y)) != s.table.at(out.mu(x), out.mu(y))) {
        out.mu_is_idempotent_monoid_hom = false;
        break;
      }
  }
  out.kernel = normalize_partition(n, out.mu.image);
  std::vector<char> seen(n, 0), class_hit(out.kernel.num_classes, 0);
  for (int x = 0; x < n; ++x) {
    int t = out.mu(x);
    if (!seen[t]) {
      seen[t] = 1;
      out.representatives.push_back(t);
      if (class_hit[out.kernel.class_of[t]]++) out.rep_system_ok = false;
    }
  }
  std::sort(out.representatives.begin(), out.representatives.end());
  if (static_cast<int>(out.representatives.size()) != out.kernel.num_classes)
    out.rep_system_ok = false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!out.kernel.related(s.theta.at(x, y), y))
        out.theta_values_in_kernel_class = false;
  return out;
}

// Classification data for idempotent solutions on a monoid with central
// idempotents: mu plus the theta_e family for e in im(mu), subject to
//   theta_e = theta_e theta_{ef}
//   theta_e(xy) = theta_e(x) theta_{mu(ex)}(y)
//   theta_{e mu(x)}(theta_e(x)) = theta_e(x)
// with theta_1 = mu.
struct IdempotentCentralData {
  ElementMap mu;
  std::vector<std::pair<int, ElementMap>> thetas;  // keyed by e in im(mu)
};

inline PESolution construct_idempotent_central(
    const CayleyTable& m, const IdempotentCentralData& data) {
  SemigroupFacts f = analyze(m);
  if (!f.is_monoid)
    throw validation_error("NotAMonoid", {}, "needs a monoid");
  int n = m.order, one = *f.identity;
  std::vector<char> is_e(n, 0);
  for (int e : f.idempotents) is_e[e] = 1;
  for (int e : f.idempotents)
    for (int x = 0; x < n; ++x)
      if (m.at(e, x) != m.at(x, e))
        throw validation_error("IdempotentsNotCentral", {e, x},
                               "idempotents must be central");
  if (data.mu.order != n)
    throw validation_error("OrderMismatch", {n}, "mu order mismatch");
  auto theta_of = [&](int e) -> const ElementMap& {
    for (const auto& [k, v] : data.thetas)
      if (k == e) return v;
    throw validation_error("ConditionFailed", {0, e},
                           "missing theta for an element of im(mu)");
  };
  // mu: idempotent monoid hom into E(M), mu(x) a right identity for x.
  for (int x = 0; x < n; ++x) {
    if (!is_e[data.mu(x)] || data.mu(data.mu(x)) != data.mu(x) ||
        data.mu(one) != one)
      throw validation_error("ConditionFailed", {1, x},
                             "mu is not an idempotent monoid hom into E(M)");
    for (int y = 0; y < n; ++y)
      if (data.mu(m.at(x, y)) != m.at(data.mu(x), data.mu(y)))
        throw validation_error("ConditionFailed", {1, x, y},
                               "mu is not a homomorphism");
    if (m.at(x, data.mu(x)) != x)
      throw validation_error("ConditionFailed", {2, x},
                             "mu(x) must be a right identity for x");
  }
  if (!(theta_of(one) == data.mu))
    throw validation_error("ConditionFailed", {3}, "theta_1 must equal mu");
  std::vector<int> image;
  for (int x = 0; x < n; ++x)
    if (std::find(image.begin(), image.end(), data.mu(x)) == image.end())
      image.push_back(data.mu(x));
  for (int e : image)
    for (int ff : image) {
      const ElementMap& te = theta_of(e);
      const ElementMap& tef = theta_of(data.mu(m.at(e, ff)));
      for (int x = 0; x < n; ++x)
        if (te(x) != te(tef(x)))
          throw validation_error("ConditionFailed", {4, e, ff, x},
                                 "theta_e != theta_e theta_ef");
    }
  for (int e : image) {
    const ElementMap& te = theta_of(e);
    for (int x = 0; x < n; ++x) {
      int h = data.mu(m.at(e, x));
      for (int y = 0; y < n; ++y)
        if (te(m.at(x, y)) != m.at(te(x), theta_of(h)(y)))
          throw validation_error("ConditionFailed", {5, e, x, y},
                                 "theta_e(xy) != theta_e(x) theta_h(y)");
      int j = data.mu(x);
      if (theta_of(data.mu(m.at(e, j)))(te(x)) != te(x))
        throw validation_error("ConditionFailed", {6, e, x},
                               "theta_{ej}(theta_e(x)) != theta_e(x)");
    }
  }
  ThetaFamily th{n, std::vector<int>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      th.cells[x * n + y] = theta_of(data.mu(x))(y);
  PESolution sol = verify_solution(m, th);
  if (!classify_properties(sol).idempotent)
    throw validation_error("TheoremViolation", {},
                           "construction must be idempotent");
  return sol;
}

// Converse direction: read the data off an idempotent solution.
inline IdempotentCentralData extract_idempotent_central(const PESolution& s) {
  Theta1HomData hom = theta1_homomorphism_data(s);
  IdempotentCentralData data;
  data.mu = hom.mu;
  int n = s.order();
  std::vector<int> image;
  for (int x = 0; x < n; ++x)
    if (std::find(image.begin(), image.end(), data.mu(x)) == image.end())
      image.push_back(data.mu(x));
  for (int e : image) {
    ElementMap te{n, std::vector<int>(n)};
    for (int y = 0; y < n; ++y) te.image[y] = s.theta.at(e, y);
    data.thetas.emplace_back(e, std::move(te));
  }
  return data;
}

// Two-route commutativity/cocommutativity report.  The definitional route
// uses the operator identities on X^3, the elementwise route the equivalent
// identities; monoid and Clifford carriers also get the sharper form.
struct CommutativityReport {
  bool commutative = false;
  bool commutative_identities = false;    // xzy = xyz and theta_x = theta_{xy}
  bool cocommutative = false;
  bool cocommutative_identities = false;  // x theta_y(z) = xz and thetas commute
  bool routes_agree = true;
  // monoid / Clifford refinements
  bool refined_applicable = false;
  bool carrier_commutative = false;
  bool theta_constant_idempotent_endo = false;  // all theta_x equal one gamma
  bool theta_identity = false;                  // theta_x = id for every x
  bool refined_agree = true;
};

inline CommutativityReport commutativity_characterizations(const PESolution& s) {
  int n = s.order();
  PropertyReport pr = classify_properties(s);
  CommutativityReport r;
  r.commutative = pr.commutative;
  r.cocommutative = pr.cocommutative;

  bool xzy = true, theta_shift = true;
  for (int x = 0; x < n && xzy; ++x)
    for (int y = 0; y < n && xzy; ++y)
      for (int z = 0; z < n; ++z)
        if (s.table.at(s.table.at(x, z), y) != s.table.at(s.table.at(x, y), z)) {
          xzy = false;
          break;
        }
  for (int x = 0; x < n && theta_shift; ++x)
    for (int y = 0; y < n && theta_shift; ++y)
      for (int w = 0; w < n; ++w)
        if (s.theta.at(x, w) != s.theta.at(s.table.at(x, y), w)) {
          theta_shift = false;
          break;
        }
  r.commutative_identities = xzy && theta_shift;

  bool absorb = true, commute = true;
  for (int x = 0; x < n && absorb; ++x)
    for (int y = 0; y < n && absorb; ++y)
      for (int z = 0; z < n; ++z)
        if (s.table.at(x, s.theta.at(y, z)) != s.table.at(x, z)) {
          absorb = false;
          break;
        }
  for (int x = 0; x < n && commute; ++x)
    for (int y = 0; y < n && commute; ++y)
      for (int z = 0; z < n; ++z)
        if (s.theta.at(x, s.theta.at(y, z)) != s.theta.at(y, s.theta.at(x, z))) {
          commute = false;
          break;
        }
  r.cocommutative_identities = absorb && commute;

  r.routes_agree = (r.commutative == r.commutative_identities) &&
                   (r.cocommutative == r.cocommutative_identities);
  if (!r.routes_agree)
    throw validation_error("InternalInconsistency", {},
                           "commutativity routes disagree");

  SemigroupFacts f = analyze(s.table);
  if (f.is_monoid || f.is_clifford) {
    r.refined_applicable = true;
    r.carrier_commutative = f.is_commutative;
    bool constant = true;
    for (int x = 1; x < n && constant; ++x)
      for (int y = 0; y < n; ++y)
        if (s.theta.at(x, y) != s.theta.at(0, y)) {
          constant = false;
          break;
        }
    if (constant) {
      ElementMap gamma{n, std::vector<int>(n)};
      for (int y = 0; y < n; ++y) gamma.image[y] = s.theta.at(0, y);
      bool endo = true;
      for (int x = 0; x < n && endo; ++x)
        for (int y = 0; y < n; ++y)
          if (gamma(s.table.at(x, y)) != s.table.at(gamma(x), gamma(y))) {
            endo = false;
            break;
          }
      bool idem = true;
      for (int x = 0; x < n; ++x)
        if (gamma(gamma(x)) != gamma(x)) idem = false;
      r.theta_constant_idempotent_endo = endo && idem;
    }
    r.theta_identity = s.theta == identity_theta(n);
    bool want_comm = r.carrier_commutative && r.theta_constant_idempotent_endo;
    if (want_comm != r.commutative) r.refined_agree = false;
    if (r.theta_identity != r.cocommutative) r.refined_agree = false;
  }
  return r;
}

}  // namespace pentagon
