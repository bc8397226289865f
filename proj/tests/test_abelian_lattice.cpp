#include <doctest.h>

#include <random>

#include "toric4/abelian_lattice.hpp"

using namespace toric4;

namespace {

const PolarizedLattice kType13{1, 3};

Wedge2 e1_class() { return polarization_class(kType13); }

Wedge2 c_class() { return curve_class({1, 0, 0, 0}, {0, 0, 4, 1}); }

Wedge2 add(const Wedge2& a, const Wedge2& b, const Int& s = 1) {
  Wedge2 out;
  for (int i = 0; i < 6; ++i) out[i] = a[i] + s * b[i];
  return out;
}

}  // namespace

TEST_CASE("intersection pairing basics") {
  SUBCASE("decomposable squares vanish") {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int rep = 0; rep < 50; ++rep) {
      std::array<Int, 4> u{d(rng), d(rng), d(rng), d(rng)};
      std::array<Int, 4> v{d(rng), d(rng), d(rng), d(rng)};
      Wedge2 w = curve_class(u, v);
      CHECK(pairing(w, w) == 0);
    }
  }
  SUBCASE("polarisation square is twice the Pfaffian") {
    CHECK(pairing(e1_class(), e1_class()) == 6);
    PolarizedLattice p111{1, 11};
    CHECK(pairing(polarization_class(p111), polarization_class(p111)) == 22);
  }
  SUBCASE("degree of the embedded elliptic curve") {
    CHECK(pairing(e1_class(), c_class()) == 4);
    CHECK(pairing(c_class(), c_class()) == 0);
  }
  SUBCASE("symmetry and even squares") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> d(-12, 12);
    for (int rep = 0; rep < 60; ++rep) {
      Wedge2 x{d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
      Wedge2 y{d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
      CHECK(pairing(x, y) == pairing(y, x));
      CHECK(pairing(x, x) % 2 == 0);
    }
  }
}

TEST_CASE("curve class is bilinear and alternating") {
  std::array<Int, 4> u{1, -2, 3, 0}, v{0, 5, 1, -1};
  Wedge2 uv = curve_class(u, v), vu = curve_class(v, u);
  for (int i = 0; i < 6; ++i) CHECK(uv[i] == -vu[i]);
  CHECK(curve_class(u, u) == Wedge2{0, 0, 0, 0, 0, 0});
  CHECK(curve_class({1, 0, 0, 0}, {0, 1, 0, 0}) == Wedge2{1, 0, 0, 0, 0, 0});
  CHECK(curve_class({1, 0, 0, 0}, {0, 0, 4, 1}) == Wedge2{0, 4, 1, 0, 0, 0});
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(Wedge2{0, 4, 1, 0, 0, 0}));
  CHECK_FALSE(is_primitive(Wedge2{0, 8, 2, 0, 0, 0}));
  CHECK(is_primitive(Wedge2{0, 0, 0, 0, 0, 1}));
  CHECK_THROWS_AS(is_primitive(Wedge2{0, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("period lattice coordinates") {
  SUBCASE("first period column") {
    std::array<PeriodScalar, 2> v{PeriodScalar{0, 4, 0}, PeriodScalar{0, 3, 0}};
    auto c = lattice_coordinates(v);
    REQUIRE(c.has_value());
    CHECK(*c == std::array<Int, 4>{1, 0, 0, 0});
  }
  SUBCASE("gamma(1) lands on 4 f3 + f4") {
    std::array<PeriodScalar, 2> v{PeriodScalar{4, 0, 0}, PeriodScalar{3, 0, 0}};
    auto c = lattice_coordinates(v);
    REQUIRE(c.has_value());
    CHECK(*c == std::array<Int, 4>{0, 0, 4, 1});
  }
  SUBCASE("unit vector") {
    std::array<PeriodScalar, 2> v{PeriodScalar{1, 0, 0}, PeriodScalar{0, 0, 0}};
    auto c = lattice_coordinates(v);
    REQUIRE(c.has_value());
    CHECK(*c == std::array<Int, 4>{0, 0, 1, 0});
  }
  SUBCASE("all four basis columns round-trip") {
    const std::array<std::array<PeriodScalar, 2>, 4> cols{{
        {PeriodScalar{0, 4, 0}, PeriodScalar{0, 3, 0}},
        {PeriodScalar{0, 3, 0}, PeriodScalar{0, 0, 1}},
        {PeriodScalar{1, 0, 0}, PeriodScalar{0, 0, 0}},
        {PeriodScalar{0, 0, 0}, PeriodScalar{3, 0, 0}},
    }};
    for (int i = 0; i < 4; ++i) {
      auto c = lattice_coordinates(cols[i]);
      REQUIRE(c.has_value());
      for (int k = 0; k < 4; ++k) CHECK((*c)[k] == (k == i ? 1 : 0));
    }
  }
  SUBCASE("vectors outside the lattice fail") {
    CHECK_FALSE(lattice_coordinates({PeriodScalar{0, 0, 1}, PeriodScalar{0, 0, 0}}).has_value());
    CHECK_FALSE(lattice_coordinates({PeriodScalar{0, 0, 0}, PeriodScalar{1, 0, 0}}).has_value());
    CHECK_FALSE(lattice_coordinates({PeriodScalar{0, 1, 0}, PeriodScalar{0, 0, 0}}).has_value());
  }
}

TEST_CASE("gram matrix of the polarisation pair") {
  Wedge2 b = e1_class();
  Wedge2 a = add(b, c_class(), 2);  // E1 + D1 with D1 in |2C|
  GramNS g = gram(b, a);
  CHECK(g.m[0][0] == 6);
  CHECK(g.m[0][1] == 14);
  CHECK(g.m[1][0] == 14);
  CHECK(g.m[1][1] == 22);
  CHECK(g.m[0][0] * g.m[1][1] - g.m[0][1] * g.m[1][0] == -64);
  CHECK(h0_even_positive(g.m[1][1]) == 11);  // type (1,11)
  CHECK(h0_even_positive(6) == 3);
  CHECK_THROWS_AS(h0_even_positive(5), std::invalid_argument);
  SUBCASE("gram of a repeated class") {
    GramNS gg = gram(b, b);
    CHECK(gg.m[0][0] == gg.m[0][1]);
    CHECK(gg.m[0][1] == gg.m[1][1]);
  }
}

TEST_CASE("isotropic directions") {
  SUBCASE("the (a, b) ordering factors as 2(xi+zeta)(11xi+3zeta)") {
    GramNS g;
    g.m = {{{22, 14}, {14, 6}}};
    auto iso = isotropic_directions(g);
    REQUIRE(iso.kind == IsotropicResult::Kind::lines);
    REQUIRE(iso.directions.size() == 2);
    CHECK(iso.directions[0] == std::array<Int, 2>{1, -1});
    CHECK(iso.directions[1] == std::array<Int, 2>{3, -11});
    CHECK(iso.content == 2);
    REQUIRE(iso.forms.size() == 2);
    CHECK(iso.forms[0] == std::array<Int, 2>{1, 1});
    CHECK(iso.forms[1] == std::array<Int, 2>{11, 3});
  }
  SUBCASE("hyperbolic plane") {
    GramNS g;
    g.m = {{{0, 1}, {1, 0}}};
    auto iso = isotropic_directions(g);
    REQUIRE(iso.kind == IsotropicResult::Kind::lines);
    REQUIRE(iso.directions.size() == 2);
    CHECK(iso.directions[0] == std::array<Int, 2>{0, 1});
    CHECK(iso.directions[1] == std::array<Int, 2>{1, 0});
    CHECK(iso.content == 2);
  }
  SUBCASE("definite form has none") {
    GramNS g;
    g.m = {{{2, 0}, {0, 2}}};
    CHECK(isotropic_directions(g).kind == IsotropicResult::Kind::definite);
  }
  SUBCASE("irrational splitting is reported, not approximated") {
    GramNS g;
    g.m = {{{2, 0}, {0, -4}}};  // disc 8, not a square
    CHECK(isotropic_directions(g).kind == IsotropicResult::Kind::irrational);
  }
}

TEST_CASE("very-ampleness case analysis") {
  GramNS g;
  g.m = {{{22, 14}, {14, 6}}};
  auto branches = reider_case_analysis(g);
  REQUIRE(branches.size() == 8);  // 4 product assignments + 4 low-degree splits
  for (const auto& b : branches) {
    INFO(b.scenario << " | " << b.label << " | " << b.witness);
    CHECK_FALSE(b.consistent);
    CHECK_FALSE(b.witness.empty());
  }
  SUBCASE("the classical scale 1/8 appears in a product branch") {
    bool seen = false;
    for (const auto& b : branches) {
      if (b.scenario != "product") continue;
      for (const auto& [k, v] : b.values)
        if (k == "xi" && v == Rat(1, 8)) seen = true;
    }
    CHECK(seen);
  }
  SUBCASE("cross product branches die by integrality, not by degree") {
    int integrality = 0;
    for (const auto& b : branches)
      if (b.scenario == "product" && b.witness.find("not an integral class") != std::string::npos)
        ++integrality;
    CHECK(integrality == 2);
  }
  SUBCASE("the J.E1 = 2 split reproduces the divisibility exclusion") {
    bool seen = false;
    for (const auto& b : branches)
      if (b.scenario == "low-degree" && b.witness.find("the class is primitive") != std::string::npos)
        seen = true;
    CHECK(seen);
  }
}

TEST_CASE("case analysis control: a solvable configuration is reported consistent") {
  GramNS g;
  g.m = {{{0, 1}, {1, 0}}};
  ReiderOptions opts;
  opts.theta = {1, 1};
  opts.target_j = 1;
  opts.target_jp = 1;
  opts.target_jjp = 1;
  opts.ns_basis = {{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
  opts.low_degree_scenario = false;
  auto branches = reider_case_analysis(g, opts);
  REQUIRE(branches.size() == 4);
  int consistent = 0;
  for (const auto& b : branches)
    if (b.consistent) ++consistent;
  CHECK(consistent == 2);  // both cross assignments solve with xi = xi' = 1
}

TEST_CASE("report serialisation") {
  GramNS g;
  g.m = {{{22, 14}, {14, 6}}};
  Json iso = isotropic_json(isotropic_directions(g));
  CHECK(iso["kind"] == "lines");
  CHECK(iso["content"] == 2);
  Json rj = reider_json(reider_case_analysis(g));
  CHECK(rj.size() == 8);
  CHECK(rj[0].contains("witness"));
}
