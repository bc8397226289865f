#pragma once

#include <array>
#include <map>

#include "toric4/numeric.hpp"

namespace toric4 {

// All series values are immutable once built; the twelve matrix entries
// are independent computations and safe to produce concurrently.

/// x + y*w with w a primitive cube root of unity, w^2 + w + 1 = 0.
struct EisensteinInt {
  Int x = 0, y = 0;

  bool operator==(const EisensteinInt&) const = default;
  bool is_zero() const { return x == 0 && y == 0; }
  EisensteinInt operator+(const EisensteinInt& o) const { return {x + o.x, y + o.y}; }
  EisensteinInt operator-(const EisensteinInt& o) const { return {x - o.x, y - o.y}; }
  EisensteinInt operator-() const { return {-x, -y}; }
  EisensteinInt operator*(const EisensteinInt& o) const {
    return {x * o.x - y * o.y, x * o.y + o.x * y - y * o.y};
  }
  static EisensteinInt omega_pow(const Int& k);
};

/// Finite Laurent polynomial in t over Z[w].
using TLaurent = std::map<long long, EisensteinInt>;

TLaurent tl_mul(const TLaurent& a, const TLaurent& b);
EisensteinInt tl_coeff(const TLaurent& a, long long e);

/// Truncated series in s whose coefficients are t-Laurent polynomials:
/// only s-exponents <= s_cut are stored and |t-exponent| <= t_window.
struct SSeries {
  int s_cut = 0;
  long long t_window = 0;
  std::map<int, TLaurent> coeffs;

  bool is_zero() const { return coeffs.empty(); }
};

SSeries ss_add(const SSeries& a, const SSeries& b);
SSeries ss_sub(const SSeries& a, const SSeries& b);
SSeries ss_mul(const SSeries& a, const SSeries& b);

/// Restricted theta series at one of the four evaluation points
/// (z0 = 0, z1 = 1/2, z2 = tau1/2, z3 = 1/3): over all n with
/// (3n+j)^2 <= s_cut and all m with the resulting t-exponent in the
/// window, the term s^{(3n+j)^2} t^{4m^2+6mn+2mj} times the point factor
/// (1, (-1)^{n+j}, a shift t^{4m+3n+j}, or w^{(m+j) mod 3}).
SSeries theta_series(int j, int point, int s_cut, long long t_window);

struct ThetaMatrix {
  int s_cut = 0;
  long long t_window = 0;
  std::array<std::array<SSeries, 3>, 4> entries;  // [point][j]
};
ThetaMatrix build_theta_matrix(int s_cut, long long t_window);

/// Exact 3x3 determinant of the rows with index != k, in row order.
SSeries matrix_minor(const ThetaMatrix& m, int k);

/// Coefficient of s^{s_exp}; zero when absent, error above the cut.
TLaurent g_coefficient(const SSeries& s, int s_exp);

/// t^0 coefficient of g02*g15 - g12*g05 extracted from the four minors.
EisensteinInt obstruction_constant(int s_cut, long long t_window);

/// Runs the computation twice (t_window and t_window + 20) and reports
/// whether the value is stable under the window growth.
struct ObstructionCertificate {
  EisensteinInt value;
  bool stable = false;
  long long window = 0;
  long long recheck_window = 0;
};
ObstructionCertificate certified_obstruction(int s_cut, long long t_window);

Json tlaurent_json(const TLaurent& t);

}  // namespace toric4
