#include <catch2/catch.hpp>

#include <set>
#include <string>

#include "pentagon/constructions.hpp"
#include "pentagon/enumerate.hpp"
#include "pentagon/idempotent.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace pentagon;

namespace {

// The three idempotent solutions on {1,a,b} (a^2=a, ab=a, b^2=1), in the
// labeling 1->0, a->1, b->2.
PESolution catalog_s() {
  return verify_solution(idempotent_monoid_m(),
                         ThetaFamily{3, {0, 0, 0, 0, 0, 0, 0, 0, 0}});
}
PESolution catalog_r() {
  return verify_solution(idempotent_monoid_m(),
                         ThetaFamily{3, {0, 1, 0, 0, 1, 0, 0, 1, 0}});
}
PESolution catalog_t() {
  return verify_solution(idempotent_monoid_m(),
                         ThetaFamily{3, {0, 1, 0, 0, 1, 2, 0, 1, 0}});
}

}  // namespace

TEST_CASE("the three idempotent solutions on {1,a,b}", "[idempotent]") {
  for (PESolution s : {catalog_s(), catalog_r(), catalog_t()}) {
    CHECK(classify_properties(s).idempotent);
    CHECK(idempotent_theta_checks(s).all());
    CHECK(monoid_theta_checks(s).all());
  }
  // pairwise non-isomorphic
  CHECK_FALSE(solutions_isomorphic(catalog_s(), catalog_r()).has_value());
  CHECK_FALSE(solutions_isomorphic(catalog_s(), catalog_t()).has_value());
  CHECK_FALSE(solutions_isomorphic(catalog_r(), catalog_t()).has_value());
}

TEST_CASE("brute force finds exactly the three catalog solutions",
          "[idempotent][property]") {
  CayleyTable m = idempotent_monoid_m();
  std::set<std::string> found;
  for (const ThetaFamily& t : naive_solutions(m)) {
    PESolution s{m, t};
    if (classify_properties(s).idempotent)
      found.insert(solution_canonical_key(s));
  }
  std::set<std::string> expected{solution_canonical_key(catalog_s()),
                                 solution_canonical_key(catalog_r()),
                                 solution_canonical_key(catalog_t())};
  CHECK(found == expected);
  CHECK(found.size() == 3);
}

TEST_CASE("theta_1 homomorphism data", "[idempotent]") {
  Theta1HomData hs = theta1_homomorphism_data(catalog_s());
  CHECK(hs.mu == constant_map(3, 0));
  CHECK(hs.kernel.num_classes == 1);
  CHECK(hs.representatives == std::vector<int>{0});
  CHECK(hs.mu_is_idempotent_monoid_hom);
  CHECK(hs.rep_system_ok);
  CHECK(hs.theta_values_in_kernel_class);

  Theta1HomData hr = theta1_homomorphism_data(catalog_r());
  CHECK(hr.mu == ElementMap{3, {0, 1, 0}});
  CHECK(hr.kernel == normalize_partition(3, {0, 1, 0}));  // {1,b} and {a}
  CHECK(hr.representatives == std::vector<int>{0, 1});

  Theta1HomData ht = theta1_homomorphism_data(catalog_t());
  CHECK(ht.mu == ElementMap{3, {0, 1, 0}});
  CHECK(ht.mu_is_idempotent_monoid_hom);
}

TEST_CASE("idempotent classification data round-trips", "[idempotent]") {
  CayleyTable m = idempotent_monoid_m();
  for (PESolution s : {catalog_s(), catalog_r(), catalog_t()}) {
    IdempotentCentralData data = extract_idempotent_central(s);
    CHECK(construct_idempotent_central(m, data) == s);
  }
}

TEST_CASE("cancellative monoids admit only s(x,y) = (xy,1)", "[idempotent]") {
  for (const CayleyTable& g : {cyclic_table(2), cyclic_table(3)}) {
    int count = 0;
    for (const ThetaFamily& t : naive_solutions(g)) {
      PESolution s{g, t};
      if (classify_properties(s).idempotent) {
        ++count;
        CHECK(t == ThetaFamily{g.order, std::vector<int>(g.order * g.order, 0)});
      }
    }
    CHECK(count == 1);
  }

  // the same solution arises from the classification data
  IdempotentCentralData data;
  data.mu = constant_map(3, 0);
  data.thetas = {{0, constant_map(3, 0)}};
  PESolution s = construct_idempotent_central(cyclic_table(3), data);
  CHECK(s.theta == ThetaFamily{3, std::vector<int>(9, 0)});

  // trivial monoid: the identity solution
  IdempotentCentralData triv;
  triv.mu = constant_map(1, 0);
  triv.thetas = {{0, constant_map(1, 0)}};
  CHECK(construct_idempotent_central(cyclic_table(1), triv) ==
        identity_solution(cyclic_table(1)));
}

TEST_CASE("classification data validation rejects bad input", "[idempotent]") {
  CayleyTable m = idempotent_monoid_m();
  // mu = theta_1 of catalog_r but theta_1 != mu in the family
  IdempotentCentralData bad;
  bad.mu = ElementMap{3, {0, 1, 0}};
  bad.thetas = {{0, constant_map(3, 0)}, {1, identity_map(3)}};
  CHECK_THROWS_AS(construct_idempotent_central(m, bad), validation_error);

  // mu(x) must be a right identity for x: constant 1 fails on b since b*a=a
  IdempotentCentralData bad2;
  bad2.mu = ElementMap{3, {0, 1, 1}};
  bad2.thetas = {{0, ElementMap{3, {0, 1, 1}}}, {1, constant_map(3, 1)}};
  CHECK_THROWS_AS(construct_idempotent_central(m, bad2), validation_error);
}

TEST_CASE("monoid theta facts on assorted monoid solutions", "[idempotent]") {
  CHECK(monoid_theta_checks(kac_takesaki(cyclic_table(2))).all());
  CHECK(monoid_theta_checks(kac_takesaki(symmetric_group_table(3))).all());
  PESolution endo = endo_solution(clifford_monoid_m(), ElementMap{3, {1, 1, 2}});
  CHECK(monoid_theta_checks(endo).all());
  CHECK_THROWS_AS(monoid_theta_checks(verify_solution(left_zero_table(2),
                                                      identity_theta(2))),
                  validation_error);
}

TEST_CASE("idempotent theta facts on constructed examples", "[idempotent]") {
  CHECK(idempotent_theta_checks(null_semigroup_solution()).all());
  PESolution ly = lyubashenko(3, constant_map(3, 0), constant_map(3, 0));
  CHECK(idempotent_theta_checks(ly).all());
  CHECK_THROWS_AS(idempotent_theta_checks(kac_takesaki(cyclic_table(3))),
                  validation_error);
}

TEST_CASE("classification round-trips on all monoids with central idempotents",
          "[idempotent][property]") {
  pentagon::SearchFilter f;
  f.idempotent = true;
  for (int n = 1; n <= 4; ++n)
    for (const CayleyTable& m : enumerate_semigroups(n, true)) {
      SemigroupFacts facts = analyze(m);
      if (!facts.is_monoid) continue;
      bool central = true;
      for (int e : facts.idempotents)
        for (int x = 0; x < n; ++x)
          if (m.at(e, x) != m.at(x, e)) central = false;
      if (!central) continue;
      for (const ThetaFamily& t : enumerate_solutions(m, f)) {
        PESolution s{m, t};
        IdempotentCentralData data = extract_idempotent_central(s);
        CHECK(construct_idempotent_central(m, data) == s);
      }
    }
}

TEST_CASE("commutativity characterizations", "[idempotent]") {
  CommutativityReport kt2 = commutativity_characterizations(kac_takesaki(cyclic_table(2)));
  CHECK(kt2.commutative);
  CHECK(kt2.cocommutative);
  CHECK(kt2.routes_agree);
  CHECK(kt2.refined_applicable);
  CHECK(kt2.refined_agree);
  CHECK(kt2.theta_identity);

  // noncommutative carrier: cocommutative but not commutative
  CommutativityReport s3 =
      commutativity_characterizations(kac_takesaki(symmetric_group_table(3)));
  CHECK_FALSE(s3.commutative);
  CHECK(s3.cocommutative);
  CHECK(s3.refined_agree);

  // Lyubashenko maps with f = g are commutative and cocommutative
  CommutativityReport ly = commutativity_characterizations(
      lyubashenko(3, constant_map(3, 0), constant_map(3, 0)));
  CHECK(ly.commutative);
  CHECK(ly.cocommutative);

  // involutive examples are both
  CommutativityReport ta = commutativity_characterizations(
      verify_solution(left_zero_table(2), ThetaFamily{2, {0, 1, 1, 0}}));
  CHECK(ta.commutative);
  CHECK(ta.cocommutative);
}
