#pragma once

#include <array>
#include <map>
#include <vector>

#include "toric4/lattice_fan.hpp"
#include "toric4/numeric.hpp"

namespace toric4 {

// Everything in this header is a pure function over immutable values;
// unsynchronised concurrent use is safe.

/// One of the three Picard-rank-2 families: a P^s-bundle over P^d with
/// d + s = 4 and nonincreasing nonnegative twists k_1 >= ... >= k_s.
struct BundleSpace {
  int base_dim;              // d in {1, 2, 3}
  std::vector<Int> twists;   // s = 4 - d entries

  BundleSpace(int d, std::vector<Int> ks);

  int fiber_dim() const { return 4 - base_dim; }
  Int kappa() const;
  /// k_i for i = 1..s, and 0 for the untwisted summand indices beyond.
  Int twist(int i) const;
  Fan fan() const;
};

/// Homogeneous class in Z[a,b] modulo a^{d+1} and b*prod(b - k_i a),
/// kept in the monomial normal form a^i b^j with i <= d, j <= s.
struct RingElement {
  int degree = 0;
  std::map<std::pair<int, int>, Int> terms;  // (i, j) -> coefficient, i+j = degree

  bool is_zero() const { return terms.empty(); }
  bool operator==(const RingElement&) const = default;
};

/// Reduces an arbitrary homogeneous polynomial (degree <= 4) to normal form.
RingElement normal_form(const BundleSpace& space, int degree,
                        const std::map<std::pair<int, int>, Int>& raw);

RingElement ring_add(const RingElement& x, const RingElement& y);
RingElement ring_scale(const Int& c, const RingElement& x);
RingElement ring_mul(const BundleSpace& space, const RingElement& x, const RingElement& y);

RingElement class_a(const BundleSpace& space);   // pullback hyperplane from the base
RingElement class_b(const BundleSpace& space);   // relative hyperplane
/// Prime divisor class of the i-th fibre-direction divisor, i = 1..s+1:
/// b - k_i a, with k beyond the twist list equal to zero.
RingElement sigma_divisor_class(const BundleSpace& space, int i);

/// Integral over X of a degree-4 class, normalised so the product of four
/// distinct prime divisor classes spanning a smooth maximal cone is 1.
/// Accepts raw homogeneous polynomials and reduces them first.
Int degree(const BundleSpace& space, int deg, const std::map<std::pair<int, int>, Int>& raw);
Int degree(const BundleSpace& space, const RingElement& e);

/// Two degree tables coexist for the P^2-over-P^2 family, where the
/// classical printed value b^4 = kappa^2 differs from the Stanley-Reisner
/// reduction kappa^2 - k1*k2. "paper" is the printed table, "fan" the
/// reduction oracle; the other two families agree in both modes.
enum class DegreeMode { paper, fan };

/// Values of [a^4, a^3 b, a^2 b^2, a b^3, b^4] under the selected table.
std::array<Int, 5> degree_table(const BundleSpace& space, DegreeMode mode);

/// Bilinear pairing of two degree-2 coefficient vectors (a^2, ab, b^2)
/// through the selected degree-4 table, without intermediate reduction.
Int pair_degree2(const BundleSpace& space, const std::array<Int, 3>& x,
                 const std::array<Int, 3>& y, DegreeMode mode);

/// Degree-2 truncation of prod(1 + prime divisor class) over all rays.
RingElement chern_c2(const BundleSpace& space);
/// c2 as a coefficient vector (a^2, ab, b^2) of the normal form.
std::array<Int, 3> chern_c2_coeffs(const BundleSpace& space);

/// Intrinsic surface data (nu, mu, lambda) = (a^2 [A], ab [A], b^2 [A])
/// under a declared degree table, remembering the basis coefficients
/// (lambda', mu', nu') of [A] = lambda' a^2 + mu' ab + nu' b^2.
struct SurfaceClass {
  Int nu, mu, lambda;
  DegreeMode mode = DegreeMode::paper;
  std::array<Int, 3> coeffs{};  // (lambda', mu', nu')
  bool has_coeffs = false;
};

/// Constraints every class of an embedded abelian surface satisfies:
/// nu, mu, lambda nonnegative with nu and lambda even.
bool surface_class_constraints_ok(const SurfaceClass& s);

/// Basis coefficients -> intrinsic triple under the selected table.
SurfaceClass convert_class(const BundleSpace& space, const std::array<Int, 3>& coeffs,
                           DegreeMode mode);
/// Inverse conversion; defined for the P^2-over-P^2 family, where the
/// degree matrix is unimodular in both modes, and round-trips exactly.
std::array<Int, 3> class_coefficients(const BundleSpace& space, const Int& nu, const Int& mu,
                                      const Int& lambda, DegreeMode mode);

/// Integral of c * [A] for a degree-2 class c; linear with value
/// alpha*nu + beta*mu + gamma*lambda on c = alpha a^2 + beta ab + gamma b^2.
Int pair_surface(const BundleSpace& space, const SurfaceClass& s, const RingElement& c,
                 DegreeMode mode);

/// [A]^2 - c2(X).[A] under the class's degree table.
Int double_point_number(const BundleSpace& space, const SurfaceClass& s);

/// {"degree": k, "terms": {"a^i b^j": coeff}}
Json ring_element_json(const RingElement& e);

}  // namespace toric4
