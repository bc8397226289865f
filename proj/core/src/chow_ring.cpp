#include "toric4/chow_ring.hpp"

#include <algorithm>

namespace toric4 {
namespace {

/// Elementary symmetric polynomials e_0..e_s of the twists.
std::vector<Int> elementary_symmetric(const std::vector<Int>& ks) {
  std::vector<Int> e(ks.size() + 1, 0);
  e[0] = 1;
  for (const Int& k : ks)
    for (size_t j = e.size() - 1; j >= 1; --j) e[j] += k * e[j - 1];
  return e;
}

}  // namespace

BundleSpace::BundleSpace(int d, std::vector<Int> ks) : base_dim(d), twists(std::move(ks)) {
  if (d < 1 || d > 3) throw std::invalid_argument("base dimension must be 1, 2 or 3");
  if (static_cast<int>(twists.size()) != 4 - d)
    throw std::invalid_argument("expected 4 - d twists");
  for (size_t i = 0; i < twists.size(); ++i) {
    if (twists[i] < 0) throw std::invalid_argument("twists must be nonnegative");
    if (i + 1 < twists.size() && twists[i] < twists[i + 1])
      throw std::invalid_argument("twists must be nonincreasing");
  }
}

Int BundleSpace::kappa() const {
  Int k = 0;
  for (const Int& t : twists) k += t;
  return k;
}

Int BundleSpace::twist(int i) const {
  if (i < 1 || i > fiber_dim() + 1) throw std::out_of_range("divisor index out of range");
  if (i <= static_cast<int>(twists.size())) return twists[i - 1];
  return 0;
}

Fan BundleSpace::fan() const { return make_kleinschmidt(base_dim, fiber_dim(), twists); }

RingElement normal_form(const BundleSpace& space, int degree,
                        const std::map<std::pair<int, int>, Int>& raw) {
  if (degree < 0 || degree > 4) throw std::invalid_argument("degree must lie in 0..4");
  const int d = space.base_dim;
  const int s = space.fiber_dim();
  // b^{s+1} = sum_{k=1..s} (-1)^{k+1} e_k a^k b^{s+1-k}
  const std::vector<Int> e = elementary_symmetric(space.twists);

  std::map<std::pair<int, int>, Int> work;
  for (const auto& [mono, c] : raw) {
    if (mono.first < 0 || mono.second < 0 || mono.first + mono.second != degree)
      throw std::invalid_argument("monomial degree mismatch");
    if (c != 0) work[mono] += c;
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = work.begin(); it != work.end();) {
      auto [i, j] = it->first;
      Int c = it->second;
      if (c == 0) { it = work.erase(it); changed = true; continue; }
      if (i > d) { it = work.erase(it); changed = true; continue; }
      if (j > s) {
        it = work.erase(it);
        for (int k = 1; k <= s; ++k) {
          Int coeff = e[k] * c;
          if (k % 2 == 0) coeff = -coeff;
          if (coeff != 0) work[{i + k, j - s - 1 + (s + 1 - k)}] += coeff;
        }
        changed = true;
        continue;
      }
      ++it;
    }
  }
  RingElement out;
  out.degree = degree;
  for (const auto& [mono, c] : work)
    if (c != 0) out.terms[mono] = c;
  return out;
}

RingElement ring_add(const RingElement& x, const RingElement& y) {
  if (!x.terms.empty() && !y.terms.empty() && x.degree != y.degree)
    throw std::invalid_argument("degree mismatch in ring addition");
  RingElement out;
  out.degree = x.terms.empty() ? y.degree : x.degree;
  out.terms = x.terms;
  for (const auto& [mono, c] : y.terms) {
    out.terms[mono] += c;
    if (out.terms[mono] == 0) out.terms.erase(mono);
  }
  return out;
}

RingElement ring_scale(const Int& c, const RingElement& x) {
  RingElement out;
  out.degree = x.degree;
  if (c == 0) return out;
  for (const auto& [mono, v] : x.terms) out.terms[mono] = c * v;
  return out;
}

RingElement ring_mul(const BundleSpace& space, const RingElement& x, const RingElement& y) {
  const int deg = x.degree + y.degree;
  if (deg > 4) throw std::invalid_argument("product degree exceeds 4");
  std::map<std::pair<int, int>, Int> raw;
  for (const auto& [ma, ca] : x.terms)
    for (const auto& [mb, cb] : y.terms)
      raw[{ma.first + mb.first, ma.second + mb.second}] += ca * cb;
  return normal_form(space, deg, raw);
}

RingElement class_a(const BundleSpace& space) {
  return normal_form(space, 1, {{{1, 0}, 1}});
}

RingElement class_b(const BundleSpace& space) {
  return normal_form(space, 1, {{{0, 1}, 1}});
}

RingElement sigma_divisor_class(const BundleSpace& space, int i) {
  Int k = space.twist(i);
  return normal_form(space, 1, {{{0, 1}, 1}, {{1, 0}, -k}});
}

Int degree(const BundleSpace& space, int deg, const std::map<std::pair<int, int>, Int>& raw) {
  if (deg != 4) throw std::invalid_argument("degree map needs a degree-4 class");
  RingElement e = normal_form(space, 4, raw);
  auto it = e.terms.find({space.base_dim, space.fiber_dim()});
  return it == e.terms.end() ? Int(0) : it->second;
}

Int degree(const BundleSpace& space, const RingElement& e) {
  return degree(space, e.degree, e.terms);
}

std::array<Int, 5> degree_table(const BundleSpace& space, DegreeMode mode) {
  const Int k = space.kappa();
  if (mode == DegreeMode::paper) {
    switch (space.base_dim) {
      case 1: return {0, 0, 0, 1, k};
      case 2: return {0, 0, 1, k, k * k};
      case 3: return {0, 1, k, k * k, k * k * k};
    }
  }
  std::array<Int, 5> t;
  for (int i = 0; i <= 4; ++i)
    t[i] = degree(space, 4, {{{4 - i, i}, 1}});  // t[i] = deg(a^{4-i} b^i)
  return t;
}

Int pair_degree2(const BundleSpace& space, const std::array<Int, 3>& x,
                 const std::array<Int, 3>& y, DegreeMode mode) {
  const auto t = degree_table(space, mode);
  Int acc = 0;
  // x_i is the coefficient of a^{2-i} b^i, so a^{4-(i+j)} b^{i+j} pairs to t[i+j]
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += x[i] * y[j] * t[i + j];
  return acc;
}

RingElement chern_c2(const BundleSpace& space) {
  const int s = space.fiber_dim();
  const int d = space.base_dim;
  std::vector<RingElement> classes;
  for (int i = 1; i <= s + 1; ++i) classes.push_back(sigma_divisor_class(space, i));
  for (int j = 0; j <= d; ++j) classes.push_back(class_a(space));
  RingElement acc;  // zero
  acc.degree = 2;
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i + 1; j < classes.size(); ++j)
      acc = ring_add(acc, ring_mul(space, classes[i], classes[j]));
  return acc;
}

std::array<Int, 3> chern_c2_coeffs(const BundleSpace& space) {
  RingElement c2 = chern_c2(space);
  std::array<Int, 3> out{0, 0, 0};
  for (const auto& [mono, c] : c2.terms) out[mono.second] = c;
  return out;
}

bool surface_class_constraints_ok(const SurfaceClass& s) {
  return s.nu >= 0 && s.mu >= 0 && s.lambda >= 0 && s.nu % 2 == 0 && s.lambda % 2 == 0;
}

SurfaceClass convert_class(const BundleSpace& space, const std::array<Int, 3>& coeffs,
                           DegreeMode mode) {
  const auto t = degree_table(space, mode);
  SurfaceClass s;
  s.mode = mode;
  s.coeffs = coeffs;
  s.has_coeffs = true;
  // row pairing of (a^2, ab, b^2) against the coefficient vector
  s.nu = coeffs[0] * t[0] + coeffs[1] * t[1] + coeffs[2] * t[2];
  s.mu = coeffs[0] * t[1] + coeffs[1] * t[2] + coeffs[2] * t[3];
  s.lambda = coeffs[0] * t[2] + coeffs[1] * t[3] + coeffs[2] * t[4];
  return s;
}

std::array<Int, 3> class_coefficients(const BundleSpace& space, const Int& nu, const Int& mu,
                                      const Int& lambda, DegreeMode mode) {
  if (space.base_dim != 2)
    throw std::invalid_argument("basis recovery is defined for the P^2-over-P^2 family");
  const auto t = degree_table(space, mode);
  // matrix [[0,0,1],[0,1,t3],[1,t3,t4]] in both modes; solve directly
  std::array<Int, 3> c;
  c[2] = nu;
  c[1] = mu - t[3] * nu;
  c[0] = lambda - t[3] * c[1] - t[4] * c[2];
  return c;
}

Int pair_surface(const BundleSpace& /*space*/, const SurfaceClass& s, const RingElement& c,
                 DegreeMode mode) {
  if (mode != s.mode) throw std::invalid_argument("degree-table mode mismatch");
  if (c.degree != 2 && !c.is_zero())
    throw std::invalid_argument("pair_surface needs a degree-2 class");
  std::array<Int, 3> v{0, 0, 0};
  for (const auto& [mono, coef] : c.terms) v[mono.second] = coef;
  return v[0] * s.nu + v[1] * s.mu + v[2] * s.lambda;
}

Int double_point_number(const BundleSpace& space, const SurfaceClass& s) {
  if (!s.has_coeffs)
    throw std::invalid_argument("double point number needs the basis coefficients");
  const Int self = s.coeffs[0] * s.nu + s.coeffs[1] * s.mu + s.coeffs[2] * s.lambda;
  const auto c2 = chern_c2_coeffs(space);
  const Int c2a = c2[0] * s.nu + c2[1] * s.mu + c2[2] * s.lambda;
  return self - c2a;
}

Json ring_element_json(const RingElement& e) {
  Json j;
  j["degree"] = e.degree;
  Json terms = Json::object();
  for (const auto& [mono, c] : e.terms) {
    std::string key = "a^" + std::to_string(mono.first) + " b^" + std::to_string(mono.second);
    terms[key] = int_json(c);
  }
  j["terms"] = terms;
  return j;
}

}  // namespace toric4
