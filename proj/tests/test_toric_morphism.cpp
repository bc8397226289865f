#include <doctest.h>

#include <random>

#include "toric4/toric_morphism.hpp"

using namespace toric4;

namespace {

RatPoly Z() { return RatPoly({Rat(0), Rat(1)}); }
RatPoly zshift(const Rat& r) { return RatPoly({-r, Rat(1)}); }  // z - r
RatPoly one() { return RatPoly::constant(1); }

Fan p1_fan() { return Fan::projective_space(1); }

}  // namespace

TEST_CASE("polynomial parsing") {
  RatPoly p = parse_poly("z^2-3/2*z+1");
  CHECK(p.deg() == 2);
  CHECK(p.coeffs()[0] == Rat(1));
  CHECK(p.coeffs()[1] == Rat(-3, 2));
  CHECK(p.coeffs()[2] == Rat(1));
  CHECK(p.is_monic());
  CHECK(parse_poly("1").deg() == 0);
  CHECK(parse_poly("z").eval(Rat(5)) == Rat(5));
  CHECK(parse_poly("2*z^3 - z + 1/3").eval(Rat(1)) == Rat(4, 3));
  CHECK(parse_poly(" -z + 4 ").eval(Rat(1)) == Rat(3));
  CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("z^2 +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("q+1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("1/0"), std::invalid_argument);
}

TEST_CASE("polynomial gcd") {
  RatPoly a = zshift(1) * zshift(2);
  RatPoly b = zshift(2) * zshift(3);
  CHECK(RatPoly::gcd(a, b) == zshift(2));
  CHECK(RatPoly::gcd(zshift(1), zshift(2)).deg() == 0);
  CHECK(RatPoly::gcd(a, one()).deg() == 0);
}

TEST_CASE("curve validation on the projective plane") {
  Fan f = Fan::projective_space(2);
  SUBCASE("distinct linear factors are fine") {
    CurveData d{{Z(), zshift(-1), zshift(1)}};
    CHECK(validate_curve(f, d).valid);
  }
  SUBCASE("gcd 1 despite a repeated polynomial") {
    CurveData d{{Z(), Z(), zshift(-1)}};
    CHECK(validate_curve(f, d).valid);
  }
  SUBCASE("shared root across the whole collection") {
    CurveData d{{Z(), Z(), Z()}};
    auto r = validate_curve(f, d);
    REQUIRE_FALSE(r.valid);
    CHECK(r.violations.size() == 1);
    CHECK(r.violations[0].kind == "gcd");
    CHECK(r.violations[0].where == std::vector<int>{0, 1, 2});
  }
  SUBCASE("unbalanced degrees") {
    CurveData d{{Z() * zshift(1), zshift(2), zshift(3)}};
    auto r = validate_curve(f, d);
    REQUIRE_FALSE(r.valid);
    CHECK(r.violations[0].kind == "balance");
  }
  SUBCASE("non-monic rejected") {
    CurveData d{{RatPoly({Rat(0), Rat(2)}), zshift(1), zshift(2)}};
    CHECK_THROWS_AS(validate_curve(f, d), std::invalid_argument);
  }
}

TEST_CASE("bundle fan morphism data") {
  Fan f = make_kleinschmidt(2, 2, {Int(1), Int(1)});
  // degrees (1,1,2,1,1,1) solve the balance system
  CurveData d{{zshift(1), zshift(2), zshift(3) * zshift(4), zshift(5), zshift(6), zshift(7)}};
  CHECK(validate_curve(f, d).valid);
}

TEST_CASE("admissible degree vectors") {
  SUBCASE("projective line") {
    auto v = admissible_degrees(p1_fan(), 4);
    CHECK(v == std::vector<std::vector<Int>>{{0, 0}, {1, 1}, {2, 2}});
  }
  SUBCASE("projective plane") {
    auto v = admissible_degrees(Fan::projective_space(2), 3);
    CHECK(v == std::vector<std::vector<Int>>{{0, 0, 0}, {1, 1, 1}});
  }
  SUBCASE("bundle fan") {
    auto v = admissible_degrees(make_kleinschmidt(2, 2, {Int(1), Int(1)}), 7);
    bool has_zero = false, has_116 = false;
    for (const auto& d : v) {
      if (d == std::vector<Int>{0, 0, 0, 0, 0, 0}) has_zero = true;
      if (d == std::vector<Int>{1, 1, 2, 1, 1, 1}) has_116 = true;
    }
    CHECK(has_zero);
    CHECK(has_116);
    // every vector satisfies the balance equations
    const Fan f = make_kleinschmidt(2, 2, {Int(1), Int(1)});
    for (const auto& dv : v)
      for (int c = 0; c < 4; ++c) {
        Int sum = 0;
        for (size_t i = 0; i < dv.size(); ++i) sum += dv[i] * f.rays()[i][c];
        CHECK(sum == 0);
      }
  }
}

TEST_CASE("chart evaluation on the projective line") {
  Fan f = p1_fan();
  CurveData d{{Z(), zshift(1)}};  // P_+ = z, P_- = z - 1
  SUBCASE("torus point") {
    auto p = evaluate_curve(f, d, Rat(2));
    CHECK(p.cone.rays.empty());
    REQUIRE(p.coords.size() == 1);
    CHECK(p.coords[0] == Rat(2));  // P_+(2) / P_-(2)
  }
  SUBCASE("boundary point") {
    auto p = evaluate_curve(f, d, Rat(0));
    CHECK(p.cone.rays == std::vector<int>{0});
    CHECK(p.coords[0] == Rat(0));
  }
  SUBCASE("infinity is the torus identity") {
    auto p = evaluate_curve(f, d, std::nullopt);
    CHECK(p.cone.rays.empty());
    CHECK(p.coords[0] == Rat(1));
  }
  SUBCASE("constant data maps everywhere to the identity") {
    CurveData c{{one(), one()}};
    auto p = evaluate_curve(f, c, Rat(17));
    CHECK(p.cone.rays.empty());
    CHECK(p.coords[0] == Rat(1));
  }
}

TEST_CASE("invalid data fails chart evaluation at a shared root") {
  Fan f = Fan::projective_space(2);
  CurveData d{{Z(), Z(), Z()}};
  CHECK_THROWS_AS(evaluate_curve(f, d, Rat(0)), std::invalid_argument);
}

TEST_CASE("reparametrisation invariance of validation") {
  Fan f = make_kleinschmidt(2, 2, {Int(1), Int(1)});
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dist(-8, 8);
  auto degs = admissible_degrees(f, 6);
  for (int rep = 0; rep < 25; ++rep) {
    const auto& dv = degs[rep % degs.size()];
    CurveData d, scaled;
    const Rat c(3, 2);
    bool ok = true;
    std::set<int> used;
    for (size_t i = 0; i < dv.size(); ++i) {
      std::vector<Rat> roots, roots2;
      for (Int k = 0; k < dv[i]; ++k) {
        int r;
        do { r = dist(rng); } while (used.count(r));
        used.insert(r);
        roots.push_back(Rat(r));
        roots2.push_back(Rat(r) * c);
      }
      d.polys.push_back(RatPoly::from_roots(roots));
      scaled.polys.push_back(RatPoly::from_roots(roots2));
    }
    if (!ok) continue;
    CHECK(validate_curve(f, d).valid == validate_curve(f, scaled).valid);
  }
}

TEST_CASE("fuzzed valid data evaluates everywhere") {
  Fan f = make_kleinschmidt(2, 2, {Int(1), Int(1)});
  auto degs = admissible_degrees(f, 8);
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> root_dist(-20, 20);
  std::uniform_int_distribution<int> z_dist(-25, 25);
  int evaluated = 0;
  for (int rep = 0; rep < 140; ++rep) {
    const auto& dv = degs[rep % degs.size()];
    CurveData d;
    std::set<int> used;
    for (size_t i = 0; i < dv.size(); ++i) {
      std::vector<Rat> roots;
      for (Int k = 0; k < dv[i]; ++k) {
        int r;
        do { r = root_dist(rng); } while (used.count(r));
        used.insert(r);
        roots.push_back(Rat(r));
      }
      d.polys.push_back(RatPoly::from_roots(roots));
    }
    REQUIRE(validate_curve(f, d).valid);
    for (int zi = 0; zi < 8; ++zi) {
      std::optional<Rat> z0;
      if (zi == 7) z0 = std::nullopt;  // infinity
      else if (zi >= 5 && !used.empty()) z0 = Rat(*used.begin());  // hit a root
      else z0 = Rat(z_dist(rng));
      auto p = evaluate_curve(f, d, z0);
      CHECK(p.coords.size() == 4);
      if (!z0) {
        for (const auto& c : p.coords) CHECK(c == Rat(1));
      }
      ++evaluated;
    }
  }
  CHECK(evaluated >= 1000);
}

TEST_CASE("class balance for the bundle configuration") {
  // classes in the rank-2 group <e, c>: taus -> e, first two sigmas -> c,
  // third sigma -> e + c
  auto classes_for = [](const Fan&) {
    ClassAssignment a;
    a.rank = 2;
    a.classes = {{0, 1}, {0, 1}, {1, 1}, {1, 0}, {1, 0}, {1, 0}};
    return a;
  };
  SUBCASE("twists (1,1) balance") {
    Fan f = make_kleinschmidt(2, 2, {Int(1), Int(1)});
    CHECK(class_balance(f, classes_for(f)).valid);
  }
  SUBCASE("twists (2,2) violate in the first two coordinates") {
    Fan f = make_kleinschmidt(2, 2, {Int(2), Int(2)});
    auto r = class_balance(f, classes_for(f));
    REQUIRE_FALSE(r.valid);
    CHECK(r.violations.size() == 2);
    CHECK(r.violations[0].where == std::vector<int>{0});
    CHECK(r.violations[1].where == std::vector<int>{1});
  }
  SUBCASE("zero classes always balance") {
    Fan f = make_kleinschmidt(2, 2, {Int(2), Int(2)});
    ClassAssignment a;
    a.rank = 2;
    a.classes.assign(6, {0, 0});
    CHECK(class_balance(f, a).valid);
  }
  SUBCASE("rank mismatch") {
    Fan f = make_kleinschmidt(2, 2, {Int(1), Int(1)});
    ClassAssignment a;
    a.rank = 2;
    a.classes.assign(6, {0});
    CHECK_THROWS_AS(class_balance(f, a), std::invalid_argument);
  }
}
