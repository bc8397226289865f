#include "toric4/abelian_lattice.hpp"

#include <algorithm>

namespace toric4 {
namespace {

// basis order f1^f2, f1^f3, f1^f4, f2^f3, f2^f4, f3^f4
constexpr int kF12 = 0, kF13 = 1, kF14 = 2, kF23 = 3, kF24 = 4, kF34 = 5;

int slot(int a, int b) {
  // a < b, 1-based
  static constexpr int table[5][5] = {{-1, -1, -1, -1, -1},
                                      {-1, -1, kF12, kF13, kF14},
                                      {-1, -1, -1, kF23, kF24},
                                      {-1, -1, -1, -1, kF34},
                                      {-1, -1, -1, -1, -1}};
  return table[a][b];
}

Int isqrt_exact(const Int& n) {
  // returns s with s*s == n, or -1
  if (n < 0) return -1;
  Int s = boost::multiprecision::sqrt(n);
  return s * s == n ? s : Int(-1);
}

std::array<Int, 2> primitive_dir(Int u, Int v) {
  Int g = boost::multiprecision::gcd(u < 0 ? -u : u, v < 0 ? -v : v);
  if (g != 0) { u /= g; v /= g; }
  if (u < 0 || (u == 0 && v < 0)) { u = -u; v = -v; }
  return {u, v};
}

}  // namespace

PolarizedLattice::PolarizedLattice(Int a, Int b) : d1(std::move(a)), d2(std::move(b)) {
  if (d1 <= 0 || d2 <= 0 || d2 % d1 != 0)
    throw std::invalid_argument("polarisation type needs 0 < d1 | d2");
}

Int pairing(const Wedge2& x, const Wedge2& y) {
  return -(x[kF12] * y[kF34] + x[kF34] * y[kF12]) + (x[kF13] * y[kF24] + x[kF24] * y[kF13]) -
         (x[kF14] * y[kF23] + x[kF23] * y[kF14]);
}

Wedge2 curve_class(const std::array<Int, 4>& u, const std::array<Int, 4>& v) {
  Wedge2 w{};
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) w[slot(a, b)] = u[a - 1] * v[b - 1] - u[b - 1] * v[a - 1];
  return w;
}

Wedge2 polarization_class(const PolarizedLattice& pl) {
  Wedge2 w{};
  w[kF13] = pl.d2;
  w[kF24] = pl.d1;
  return w;
}

bool is_primitive(const Wedge2& x) {
  Int g = 0;
  for (const Int& c : x) g = boost::multiprecision::gcd(g, c);
  if (g == 0) throw std::invalid_argument("zero class has no primitivity");
  return g == 1;
}

std::optional<std::array<Int, 4>> lattice_coordinates(const std::array<PeriodScalar, 2>& v) {
  // columns f1 = (4t1, 3t1), f2 = (3t1, t3), f3 = (1, 0), f4 = (0, 3)
  if (v[0].tau3 != 0) return std::nullopt;
  if (v[1].tau1 % 3 != 0) return std::nullopt;
  if (v[1].one % 3 != 0) return std::nullopt;
  std::array<Int, 4> c{};
  c[0] = v[1].tau1 / 3;           // 3 c1 = q2
  c[1] = v[1].tau3;               // c2 = r2
  c[2] = v[0].one;                // c3 = p1
  c[3] = v[1].one / 3;            // 3 c4 = p2
  if (4 * c[0] + 3 * c[1] != v[0].tau1) return std::nullopt;
  return c;
}

GramNS gram(const Wedge2& a, const Wedge2& b) {
  GramNS g;
  g.m[0][0] = pairing(a, a);
  g.m[0][1] = g.m[1][0] = pairing(a, b);
  g.m[1][1] = pairing(b, b);
  return g;
}

IsotropicResult isotropic_directions(const GramNS& g) {
  IsotropicResult res;
  const Int A = g.m[0][0], B = g.m[0][1], C = g.m[1][1];
  const Int disc = B * B - A * C;
  if (disc < 0) {
    res.kind = IsotropicResult::Kind::definite;
    return res;
  }
  const Int s = isqrt_exact(disc);
  if (s < 0) {
    res.kind = IsotropicResult::Kind::irrational;
    return res;
  }
  res.kind = IsotropicResult::Kind::lines;
  if (A != 0) {
    res.directions.push_back(primitive_dir(-B + s, A));
    if (s != 0) res.directions.push_back(primitive_dir(-B - s, A));
  } else if (B != 0) {
    res.directions.push_back(primitive_dir(1, 0));
    res.directions.push_back(primitive_dir(-C, 2 * B));
  } else if (C != 0) {
    res.directions.push_back(primitive_dir(1, 0));
  } else {
    throw std::invalid_argument("zero quadratic form");
  }
  std::sort(res.directions.begin(), res.directions.end());
  res.directions.erase(std::unique(res.directions.begin(), res.directions.end()),
                       res.directions.end());

  // integral factorisation content * l1 * l2 when two lines exist
  if (res.directions.size() == 2 || (res.directions.size() == 1 && s == 0)) {
    std::vector<std::array<Int, 2>> dirs = res.directions;
    if (dirs.size() == 1) dirs.push_back(dirs[0]);
    for (const auto& d : dirs) res.forms.push_back(primitive_dir(d[1], -d[0]));
    // Q = r * l1 * l2: compare a nonzero coefficient
    const Int p1 = res.forms[0][0], q1 = res.forms[0][1];
    const Int p2 = res.forms[1][0], q2 = res.forms[1][1];
    Rat r;
    if (p1 * p2 != 0) r = make_rat(A, p1 * p2);
    else if (q1 * q2 != 0) r = make_rat(C, q1 * q2);
    else r = make_rat(2 * B, p1 * q2 + p2 * q1);
    // verify all three coefficients
    if (Rat(A) != r * p1 * p2 || Rat(C) != r * q1 * q2 ||
        Rat(2 * B) != r * (p1 * q2 + p2 * q1) || !is_integer(r))
      throw std::logic_error("factorisation mismatch");
    res.content = rat_num(r);
  }
  return res;
}

namespace {

Rat gram_dot(const GramNS& g, const std::array<Rat, 2>& u, const std::array<Rat, 2>& v) {
  return u[0] * v[0] * g.m[0][0] + (u[0] * v[1] + u[1] * v[0]) * g.m[0][1] +
         u[1] * v[1] * g.m[1][1];
}

std::array<Rat, 2> scale_dir(const Rat& s, const std::array<Int, 2>& d) {
  return {s * d[0], s * d[1]};
}

/// Coordinates of xi*a + zeta*b in the declared integral NS basis.
std::array<Rat, 2> ns_coords(const ReiderOptions& o, const std::array<Rat, 2>& v) {
  return {o.ns_basis[0][0] * v[0] + o.ns_basis[0][1] * v[1],
          o.ns_basis[1][0] * v[0] + o.ns_basis[1][1] * v[1]};
}

std::string vec_str(const std::array<Rat, 2>& v) {
  return "(" + rat_str(v[0]) + ", " + rat_str(v[1]) + ")";
}

}  // namespace

std::vector<ReiderBranch> reider_case_analysis(const GramNS& g, const ReiderOptions& opts) {
  const IsotropicResult iso = isotropic_directions(g);
  if (iso.kind != IsotropicResult::Kind::lines || iso.directions.size() != 2)
    throw std::invalid_argument("case analysis needs two rational isotropic directions");
  const auto& dirs = iso.directions;
  std::array<Rat, 2> theta{Rat(opts.theta[0]), Rat(opts.theta[1])};
  std::vector<ReiderBranch> out;

  auto dir_str = [&](int i) {
    return "(" + dirs[i][0].str() + "," + dirs[i][1].str() + ")";
  };

  // product scenario: A = J x J' with degrees (target_j, target_jp) and J.J' = target_jjp
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      ReiderBranch br;
      br.scenario = "product";
      br.label = "J on " + dir_str(i) + ", J' on " + dir_str(j);
      std::array<Rat, 2> di{Rat(dirs[i][0]), Rat(dirs[i][1])};
      std::array<Rat, 2> dj{Rat(dirs[j][0]), Rat(dirs[j][1])};
      const Rat dth_i = gram_dot(g, di, theta);
      const Rat dth_j = gram_dot(g, dj, theta);
      if (dth_i == 0) {
        br.witness = "J.theta vanishes on this line, cannot reach " + rat_str(opts.target_j);
        out.push_back(std::move(br));
        continue;
      }
      if (dth_j == 0) {
        br.witness = "J'.theta vanishes on this line, cannot reach " + rat_str(opts.target_jp);
        out.push_back(std::move(br));
        continue;
      }
      const Rat xi = opts.target_j / dth_i;
      const Rat xip = opts.target_jp / dth_j;
      br.values.emplace_back("xi", xi);
      br.values.emplace_back("xi'", xip);
      const Rat jjp = xi * xip * gram_dot(g, di, dj);
      br.values.emplace_back("J.J'", jjp);
      if (jjp != opts.target_jjp) {
        br.witness = "J.J' = " + rat_str(jjp) + " instead of " + rat_str(opts.target_jjp);
        out.push_back(std::move(br));
        continue;
      }
      const auto J = ns_coords(opts, scale_dir(xi, dirs[i]));
      const auto Jp = ns_coords(opts, scale_dir(xip, dirs[j]));
      if (!is_integer(J[0]) || !is_integer(J[1])) {
        br.witness = "[J] = " + vec_str(J) + " is not an integral class";
        out.push_back(std::move(br));
        continue;
      }
      if (!is_integer(Jp[0]) || !is_integer(Jp[1])) {
        br.witness = "[J'] = " + vec_str(Jp) + " is not an integral class";
        out.push_back(std::move(br));
        continue;
      }
      br.consistent = true;
      out.push_back(std::move(br));
    }
  }

  if (!opts.low_degree_scenario) return out;

  // low-degree scenario: an elliptic curve J with J.(a) = 2 splits as
  // J.b = 1, J.(a-b) = 1 or J.b = 2, J.(a-b) = 0
  const std::array<Rat, 2> bvec{Rat(0), Rat(1)};
  const std::array<Rat, 2> amb{Rat(1), Rat(-1)};
  for (int i = 0; i < 2; ++i) {
    for (const auto& [tb, td] : std::vector<std::pair<Rat, Rat>>{{1, 1}, {2, 0}}) {
      ReiderBranch br;
      br.scenario = "low-degree";
      br.label = "J on " + dir_str(i) + ", J.E1 = " + rat_str(tb) + ", J.D1 = " + rat_str(td);
      std::array<Rat, 2> di{Rat(dirs[i][0]), Rat(dirs[i][1])};
      const Rat jb = gram_dot(g, di, bvec);
      if (jb == 0) {
        br.witness = "J.E1 vanishes on this line";
        out.push_back(std::move(br));
        continue;
      }
      const Rat xi = tb / jb;
      br.values.emplace_back("xi", xi);
      const Rat jd = xi * gram_dot(g, di, amb);
      br.values.emplace_back("J.D1", jd);
      if (jd != td) {
        br.witness = "J.D1 = " + rat_str(jd) + " instead of " + rat_str(td);
        out.push_back(std::move(br));
        continue;
      }
      const auto J = ns_coords(opts, scale_dir(xi, dirs[i]));
      if (!is_integer(J[0]) || !is_integer(J[1])) {
        const auto twoJ = std::array<Rat, 2>{2 * J[0], 2 * J[1]};
        if (is_integer(twoJ[0]) && is_integer(twoJ[1]))
          br.witness = "2[J] = " + vec_str(twoJ) +
                       " is integral but [J] = " + vec_str(J) + " is not: the class is primitive";
        else
          br.witness = "[J] = " + vec_str(J) + " is not an integral class";
        out.push_back(std::move(br));
        continue;
      }
      br.consistent = true;
      out.push_back(std::move(br));
    }
  }
  return out;
}

Int h0_even_positive(const Int& self_intersection) {
  if (self_intersection <= 0 || self_intersection % 2 != 0)
    throw std::invalid_argument("needs an even positive self-intersection");
  return self_intersection / 2;
}

Json isotropic_json(const IsotropicResult& r) {
  Json j;
  switch (r.kind) {
    case IsotropicResult::Kind::lines: j["kind"] = "lines"; break;
    case IsotropicResult::Kind::definite: j["kind"] = "definite"; break;
    case IsotropicResult::Kind::irrational: j["kind"] = "irrational"; break;
  }
  Json dirs = Json::array();
  for (const auto& d : r.directions) dirs.push_back(Json::array({int_json(d[0]), int_json(d[1])}));
  j["directions"] = dirs;
  if (!r.forms.empty()) {
    j["content"] = int_json(r.content);
    Json fs = Json::array();
    for (const auto& f : r.forms) fs.push_back(Json::array({int_json(f[0]), int_json(f[1])}));
    j["forms"] = fs;
  }
  return j;
}

Json reider_json(const std::vector<ReiderBranch>& branches) {
  Json arr = Json::array();
  for (const auto& b : branches) {
    Json j;
    j["scenario"] = b.scenario;
    j["branch"] = b.label;
    j["consistent"] = b.consistent;
    Json vals = Json::object();
    for (const auto& [k, v] : b.values) vals[k] = rat_json(v);
    j["values"] = vals;
    if (!b.witness.empty()) j["witness"] = b.witness;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace toric4
