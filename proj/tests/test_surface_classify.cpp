#include <doctest.h>

#include <set>

#include "toric4/surface_classify.hpp"

using namespace toric4;

namespace {

std::vector<SurfaceCandidate> surviving(const std::vector<SurfaceCandidate>& all) {
  std::vector<SurfaceCandidate> out;
  for (const auto& c : all)
    if (c.verdict != Verdict::rejected) out.push_back(c);
  return out;
}

const SurfaceCandidate* find_mu(const std::vector<SurfaceCandidate>& all, const Int& mu) {
  for (const auto& c : all)
    if (c.mu == mu) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("sieve for the trivial bundle keeps the two product cases") {
  auto res = sieve_p3_bundle({0, 0, 0});
  auto surv = surviving(res);
  REQUIRE(surv.size() == 2);
  CHECK(surv[0].nu == 3);
  CHECK(surv[0].mu == 6);
  CHECK(*surv[0].lambda == 8);
  CHECK(surv[0].verdict == Verdict::external_exists);
  CHECK(surv[1].nu == 6);
  CHECK(surv[1].mu == 9);
  CHECK(*surv[1].lambda == 6);
  CHECK(surv[1].verdict == Verdict::external_excluded);
}

TEST_CASE("twists (1,1,0) die at the trace-degeneracy rule") {
  auto res = sieve_p3_bundle({1, 1, 0});
  CHECK(surviving(res).empty());
  const auto* c = find_mu(res, 6);
  REQUIRE(c != nullptr);
  CHECK(*c->lambda == 2);
  CHECK(c->verdict == Verdict::rejected);
  CHECK(c->rejected_rule == "b-rule");
  CHECK(c->checks.back().witness == Rat(2));
}

TEST_CASE("twists (2,2,2) die at the trace-degeneracy rule") {
  auto res = sieve_p3_bundle({2, 2, 2});
  CHECK(surviving(res).empty());
  const auto* c = find_mu(res, 6);
  REQUIRE(c != nullptr);
  CHECK(*c->lambda == -10);
  CHECK(c->rejected_rule == "b-rule");
  CHECK(c->checks.back().witness == Rat(-10 + 36 - 24));
}

TEST_CASE("sieve is empty for every positive twist total up to 8") {
  for (int k1 = 0; k1 <= 8; ++k1)
    for (int k2 = 0; k2 <= k1; ++k2)
      for (int k3 = 0; k3 <= k2; ++k3) {
        int k = k1 + k2 + k3;
        if (k < 1 || k > 8) continue;
        INFO("twists " << k1 << "," << k2 << "," << k3);
        CHECK(surviving(sieve_p3_bundle({Int(k1), Int(k2), Int(k3)})).empty());
      }
}

TEST_CASE("first failing rule is recorded and later checks stop") {
  auto res = sieve_p3_bundle({1, 0, 0});
  const auto* c = find_mu(res, 6);  // p_g non-integral there
  REQUIRE(c != nullptr);
  CHECK(c->rejected_rule == "genus-b1");
  CHECK(c->checks.back().rule == "genus-b1");
  CHECK_FALSE(c->checks.back().pass);
  CHECK(c->checks.back().witness == Rat(1, 2));  // (5 + 6)/2 - 6 + 1
  for (size_t i = 0; i + 1 < c->checks.size(); ++i) CHECK(c->checks[i].pass);
}

TEST_CASE("divisibility stage survivors over a large grid") {
  std::set<Int> mus;
  for (int k = 0; k <= 40; ++k)
    for (Int nu = 1; nu <= 1000; ++nu) {
      Int num = -Int(k) * (nu * nu + 3 * nu) + 8 * nu + 24;
      if (num % (2 * nu) == 0) mus.insert(nu + 3);
    }
  CHECK(mus == std::set<Int>{4, 5, 6, 7, 9, 11, 15, 27});
}

TEST_CASE("fibration splitting predicate") {
  CHECK(fibration_splits(6));
  CHECK(fibration_splits(9));
  CHECK(fibration_splits(15));
  CHECK_FALSE(fibration_splits(4));
  CHECK_FALSE(fibration_splits(5));
  CHECK_FALSE(fibration_splits(7));
  CHECK_FALSE(fibration_splits(11));
  // equivalence with a direct factor-pair search
  for (Int mu = 1; mu <= 1000; ++mu) {
    bool direct = false;
    for (Int d = 2; d <= mu && !direct; ++d)
      for (Int e = 3; d * e <= mu && !direct; ++e)
        if (d * e == mu) direct = true;
    CHECK(fibration_splits(mu) == direct);
  }
}

TEST_CASE("P^1-bundle over P^3 forces the zero class") {
  for (int k = 1; k <= 10; ++k) {
    auto r = check_p1_bundle(Int(k));
    CHECK(r.applicable);
    CHECK(r.lambda == 0);
    CHECK(r.mu == 0);
    CHECK(r.empty);
  }
  CHECK_FALSE(check_p1_bundle(0).applicable);
  CHECK_THROWS_AS(check_p1_bundle(-1), std::invalid_argument);
}

TEST_CASE("enumeration for twists (1,1) at nu = 6") {
  auto res = enumerate_p2_bundle(1, 1, 6, 40);
  std::vector<const SurfaceCandidate*> adm;
  for (const auto& c : res)
    if (c.verdict == Verdict::admissible) adm.push_back(&c);
  REQUIRE(adm.size() == 1);
  CHECK(adm[0]->nu == 6);
  CHECK(adm[0]->mu == 14);
  CHECK(*adm[0]->lambda == 22);
  // the first integral-lambda row fails the index bound
  const auto* c6 = find_mu(res, 6);
  REQUIRE(c6 != nullptr);
  CHECK(c6->rejected_rule == "hodge");
  CHECK(*c6->lambda == 14);
}

TEST_CASE("the kappa = 1 tail cases end empty with the classical rejected pairs") {
  SUBCASE("nu = 6") {
    auto res = enumerate_p2_bundle(1, 0, 6, 60);
    std::vector<std::pair<Int, Int>> star_failures;
    for (const auto& c : res) {
      CHECK(c.verdict != Verdict::admissible);
      if (c.rejected_rule == "star") star_failures.emplace_back(c.mu, *c.lambda);
    }
    CHECK(star_failures == std::vector<std::pair<Int, Int>>{{9, 10}, {10, 10}});
  }
  SUBCASE("nu = 8") {
    auto res = enumerate_p2_bundle(1, 0, 8, 80);
    std::vector<std::pair<Int, Int>> star_failures;
    for (const auto& c : res) {
      CHECK(c.verdict != Verdict::admissible);
      if (c.rejected_rule == "star") star_failures.emplace_back(c.mu, *c.lambda);
    }
    CHECK(star_failures == std::vector<std::pair<Int, Int>>{{10, 10}, {13, 10}});
  }
}

TEST_CASE("enumeration grid for steep twists") {
  // kappa1 > 2 kappa2, kappa1 <= 6: empty except the tangency class at (5,2), nu = 6
  for (int k1 = 1; k1 <= 6; ++k1)
    for (int k2 = 0; 2 * k2 < k1; ++k2)
      for (Int nu : {6, 8, 10}) {
        INFO("cell " << k1 << "," << k2 << " nu=" << nu);
        auto res = enumerate_p2_bundle(k1, k2, nu, 10 * (k1 + k2) * nu);
        std::vector<std::array<Int, 3>> adm;
        for (const auto& c : res)
          if (c.verdict == Verdict::admissible) adm.push_back({c.nu, c.mu, *c.lambda});
        if (k1 == 5 && k2 == 2 && nu == 6) {
          // genuine boundary class: B_1^2 = 0 and strict index bound 960 < 961
          CHECK(adm == std::vector<std::array<Int, 3>>{{6, 31, 160}});
        } else {
          CHECK(adm.empty());
        }
      }
}

TEST_CASE("equality in the fibre pairing is rejected for nondegenerate surfaces") {
  // (1,0) at nu = 10 and (3,1) at nu = 8 hit mu = k1 nu exactly
  auto res = enumerate_p2_bundle(1, 0, 10, 100);
  const auto* c = find_mu(res, 10);
  REQUIRE(c != nullptr);
  CHECK(c->rejected_rule == "fiber-ample");
  CHECK(*c->lambda == 10);

  auto res2 = enumerate_p2_bundle(3, 1, 8, 320);
  const auto* c2 = find_mu(res2, 24);
  REQUIRE(c2 != nullptr);
  CHECK(c2->rejected_rule == "fiber-ample");
  CHECK(*c2->lambda == 72);
}

TEST_CASE("fan-table lambda solver") {
  // the correction term k1 k2 nu^2 shifts lambda; at (1,1), nu = 6 the
  // scan then ends empty, the mu = 14 row dying at the trace bound
  auto res = enumerate_p2_bundle(1, 1, 6, 40, DegreeMode::fan);
  for (const auto& c : res) CHECK(c.verdict != Verdict::admissible);
  const auto* c14 = find_mu(res, 14);
  REQUIRE(c14 != nullptr);
  CHECK(*c14->lambda == 18);
  CHECK(c14->rejected_rule == "star");
}

TEST_CASE("admissible classes satisfy the parity constraints") {
  BundleSpace sp(2, {1, 1});
  for (const auto& c : enumerate_p2_bundle(1, 1, 6, 40)) {
    if (c.verdict != Verdict::admissible) continue;
    SurfaceClass s;
    s.nu = c.nu;
    s.mu = c.mu;
    s.lambda = *c.lambda;
    CHECK(surface_class_constraints_ok(s));
  }
  SurfaceClass bad;
  bad.nu = 6;
  bad.mu = 14;
  bad.lambda = 21;
  CHECK_FALSE(surface_class_constraints_ok(bad));
}

TEST_CASE("enumeration argument validation") {
  CHECK_THROWS_AS(enumerate_p2_bundle(0, 0, 6, 10), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_p2_bundle(1, 1, 5, 40), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_p2_bundle(1, 1, 7, 40), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_p2_bundle(2, 1, 6, 5), std::invalid_argument);
}

TEST_CASE("monotone in mu_max") {
  auto small = enumerate_p2_bundle(1, 1, 6, 40);
  auto large = enumerate_p2_bundle(1, 1, 6, 90);
  std::vector<std::array<Int, 3>> a, b;
  for (const auto& c : small)
    if (c.verdict == Verdict::admissible) a.push_back({c.nu, c.mu, *c.lambda});
  for (const auto& c : large)
    if (c.verdict == Verdict::admissible && c.mu <= 40) b.push_back({c.nu, c.mu, *c.lambda});
  CHECK(a == b);
}

TEST_CASE("region test exact values") {
  SUBCASE("steep pair (3,1): the parabola enters the corner region") {
    auto r = region_test(3, 1, 6);
    CHECK(r.x_star == Rat(3, 4));
    CHECK(r.f_at_x_star == Rat(29, 48));
    CHECK(r.threshold == Rat(27, 48));
    CHECK(r.corner_gap == Rat(-1, 24));
    CHECK(r.slope_gap >= 0);
    CHECK_FALSE(r.verdict);          // exact corner test fails...
    CHECK(r.exact_value == -6);
    CHECK(r.coarse_value == 12);     // ...while the coarse shortcut would pass
  }
  SUBCASE("balanced pair (1,1): candidate exists, verdict false") {
    auto r = region_test(1, 1, 6);
    CHECK_FALSE(r.verdict);
    CHECK(r.exact_value == -12);
  }
  SUBCASE("kappa = 1 tail: slope condition actually holds, corner fails") {
    auto r = region_test(1, 0, 6);
    CHECK_FALSE(r.verdict);
    CHECK(r.fprime_at_x_star == Rat(7, 9));
    CHECK(r.slope_gap == Rat(11, 9));
    CHECK(r.corner_gap < 0);
  }
  SUBCASE("region verdict is sound against the enumeration") {
    for (int k1 = 1; k1 <= 6; ++k1)
      for (int k2 = 0; k2 <= k1; ++k2)
        for (Int nu : {6, 8, 10}) {
          if (k1 + k2 == 0) continue;
          auto r = region_test(k1, k2, nu);
          if (!r.verdict) continue;
          auto res = enumerate_p2_bundle(k1, k2, nu, 10 * (k1 + k2) * nu);
          for (const auto& c : res) {
            INFO("cell " << k1 << "," << k2 << " nu=" << nu << " mu=" << c.mu);
            CHECK(c.verdict != Verdict::admissible);
          }
        }
  }
  SUBCASE("sign of the exact clearing-denominators polynomial") {
    for (int k1 = 1; k1 <= 6; ++k1)
      for (int k2 = 0; k2 <= k1; ++k2)
        for (Int nu : {6, 8, 10}) {
          auto r = region_test(k1, k2, nu);
          CHECK((r.corner_gap > 0) == (r.exact_value > 0));
        }
  }
  CHECK_THROWS_AS(region_test(0, 0, 6), std::invalid_argument);
}

TEST_CASE("trace genus values") {
  BundleSpace sp(1, {0, 0, 0});
  CHECK(genus_of_trace(sp, 0, 6, 8, 4) == Rat(5));
  CHECK(genus_of_trace(sp, 0, 15, 5, 4) == Rat(7, 2));
  CHECK(genus_of_trace(sp, 0, 0, 0, 1) == Rat(1));
  CHECK_THROWS_AS(genus_of_trace(sp, 0, 6, 8, 5), std::out_of_range);
}

TEST_CASE("candidate json carries the ordered trail") {
  auto res = sieve_p3_bundle({1, 1, 0});
  const auto* c = find_mu(res, 6);
  REQUIRE(c != nullptr);
  Json j = candidate_json(*c);
  CHECK(j["verdict"] == "rejected");
  CHECK(j["rejected_by"] == "b-rule");
  CHECK(j["checks"].back()["witness"] == 2);
  CHECK(j["checks"][0]["rule"] == "lambda-integral");
}
