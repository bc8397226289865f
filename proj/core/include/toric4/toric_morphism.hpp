#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric4/lattice_fan.hpp"
#include "toric4/numeric.hpp"

namespace toric4 {

// Pure validation and evaluation; violation lists are deterministically
// ordered.

/// Univariate polynomial with exact rational coefficients, ascending order.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  static RatPoly constant(const Rat& c) { return RatPoly({c}); }
  static RatPoly from_roots(const std::vector<Rat>& roots);  // monic

  int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat eval(const Rat& z) const;

  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  bool operator==(const RatPoly&) const = default;

  /// Monic gcd over Q.
  static RatPoly gcd(RatPoly a, RatPoly b);
  /// Leading coefficient scaled to 1.
  RatPoly monic() const;
  std::string str(char var = 'z') const;

 private:
  std::vector<Rat> c_;
  void trim();
};

/// Parses "z^2-3/2*z+1" style expressions with exact rational coefficients.
RatPoly parse_poly(const std::string& text, char var = 'z');

/// Morphism data for maps P^1 -> X_fan fixing infinity to the torus
/// identity: one monic polynomial per ray, P_rho tracking the pullback
/// divisor D(rho).
struct CurveData {
  std::vector<RatPoly> polys;  // indexed like the fan's rays
};

struct Violation {
  std::string kind;           // "gcd" | "balance"
  std::vector<int> where;     // primitive collection, or coordinate index
  std::string detail;
};

struct ValidationResult {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Checks (i) the polynomials of every primitive collection have trivial
/// gcd, (ii) sum deg(P_rho) n(rho) = 0 in N. Requires monic assignments
/// covering all rays.
ValidationResult validate_curve(const Fan& fan, const CurveData& data);

/// All nonnegative degree vectors with sum d_rho n(rho) = 0 and total
/// degree <= total_bound, lexicographically sorted.
std::vector<std::vector<Int>> admissible_degrees(const Fan& fan, const Int& total_bound);

/// Value of the morphism at z0 (nullopt = infinity): the cone spanned by
/// the vanishing rays plus the chart coordinates eps(m_i)(z0) for the dual
/// basis of a smooth maximal cone containing them. Infinity always maps to
/// the torus identity (monic data with balanced degrees).
struct ChartPoint {
  Cone cone;                          // spanned by the rays vanishing at z0
  std::vector<int> chart_rays;        // rays of the maximal cone used for the chart
  std::vector<LatticeVector> chart_basis;   // full Z-basis (cone rays first)
  std::vector<Rat> coords;            // eps(m_i)(z0), finite by construction
};
ChartPoint evaluate_curve(const Fan& fan, const CurveData& data, const std::optional<Rat>& z0);

/// Class-level shadow of the divisor condition: assigns to each ray the
/// class of its pullback divisor in a free abelian group and checks
/// sum <m, n(rho)> class(rho) = 0 for the dual basis m.
struct ClassAssignment {
  int rank = 0;
  std::vector<std::vector<Int>> classes;  // one vector of length rank per ray
};
ValidationResult class_balance(const Fan& fan, const ClassAssignment& classes);

}  // namespace toric4
