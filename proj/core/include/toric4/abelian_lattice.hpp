#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "toric4/numeric.hpp"

namespace toric4 {

// Pure functions over value types; branch reports come back in a
// deterministic order.

/// Polarised abelian surface data of type (d1, d2), d1 | d2, with the
/// alternating form E(f1,f3) = d1, E(f2,f4) = d2 on the period basis
/// f1..f4. Matches the period matrix ((d1*t..),(..)) with diagonal block
/// diag(d1, d2) in the last two columns.
struct PolarizedLattice {
  Int d1 = 1, d2 = 1;

  PolarizedLattice(Int a, Int b);
};

/// Degree-2 class over the basis f1^f2, f1^f3, f1^f4, f2^f3, f2^f4, f3^f4.
using Wedge2 = std::array<Int, 6>;

/// Intersection number normalised on the symplectic orientation
/// f1^f3^f2^f4 -> 1 (the one induced by the complex structure, under
/// which a polarisation has positive square).
Int pairing(const Wedge2& x, const Wedge2& y);

/// u ^ v expanded in the 6-dimensional basis.
Wedge2 curve_class(const std::array<Int, 4>& u, const std::array<Int, 4>& v);

/// Class of a curve representing the polarisation: the dual of the
/// alternating form, d2 f1^f3 + d1 f2^f4 (the complementary slot carries
/// the other elementary divisor).
Wedge2 polarization_class(const PolarizedLattice& pl);

/// gcd of the six coefficients equals one. Errors on the zero class.
bool is_primitive(const Wedge2& x);

/// Entry of a 2-vector that is Z-linear in {1, tau1, tau3}.
struct PeriodScalar {
  Int one = 0, tau1 = 0, tau3 = 0;
};

/// Integer coordinates of v in the lattice spanned by the columns of
/// ((d1*4? ...)) -- here the fixed period matrix
///   (4 tau1, 3 tau1, 1, 0; 3 tau1, tau3, 0, 3)
/// with tau1, tau3 treated as independent formal symbols. Empty result
/// means v is not a lattice vector.
std::optional<std::array<Int, 4>> lattice_coordinates(const std::array<PeriodScalar, 2>& v);

struct GramNS {
  std::array<std::array<Int, 2>, 2> m{};
};

/// Pairwise intersection matrix of two classes.
GramNS gram(const Wedge2& a, const Wedge2& b);

/// Rational isotropic lines of the binary quadratic form of a Gram matrix,
/// as primitive integer direction vectors, plus the integral factorisation
/// content * (form1)(form2) when the form splits over Q.
struct IsotropicResult {
  enum class Kind { lines, definite, irrational } kind = Kind::definite;
  std::vector<std::array<Int, 2>> directions;       // primitive, at most 2
  Int content = 1;                                  // gcd factor of the form
  std::vector<std::array<Int, 2>> forms;            // linear forms (p,q) ~ p*xi + q*zeta
};
IsotropicResult isotropic_directions(const GramNS& g);

/// One solved branch of the very-ampleness case analysis.
struct ReiderBranch {
  std::string scenario;   // "product" | "low-degree"
  std::string label;
  bool consistent = false;
  std::vector<std::pair<std::string, Rat>> values;  // solved scales and residuals
  std::string witness;    // first contradiction, empty when consistent
};

/// Parameters of the case analysis. theta is the class against which the
/// target degrees are prescribed, in (a, b) coordinates of the Gram; the
/// ns_basis maps (xi, zeta) to coordinates in an integral basis of the
/// Neron-Severi lattice (integrality of candidate elliptic-curve classes
/// is tested there).
struct ReiderOptions {
  std::array<Int, 2> theta{1, 0};
  Rat target_j = 1, target_jp = 11, target_jjp = 1;
  std::array<std::array<Rat, 2>, 2> ns_basis{{{Rat(1), Rat(1)}, {Rat(2), Rat(0)}}};
  bool low_degree_scenario = true;
};

/// Default options encode the rank-2 configuration with Gram
/// [[22,14],[14,6]] in the ordering (a, b) = (E1 + D1, E1): the integral
/// lattice is spanned by E1 and the elliptic-curve class C = (a - b)/2.
std::vector<ReiderBranch> reider_case_analysis(const GramNS& g,
                                               const ReiderOptions& opts = ReiderOptions{});

/// Riemann-Roch count h^0 = D^2 / 2 for an even positive class.
Int h0_even_positive(const Int& self_intersection);

Json isotropic_json(const IsotropicResult& r);
Json reider_json(const std::vector<ReiderBranch>& branches);

}  // namespace toric4
