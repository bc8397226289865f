#include "toric4/theta_engine.hpp"

#include <stdexcept>

namespace toric4 {

EisensteinInt EisensteinInt::omega_pow(const Int& k) {
  Int r = k % 3;
  if (r < 0) r += 3;
  if (r == 0) return {1, 0};
  if (r == 1) return {0, 1};
  return {-1, -1};
}

TLaurent tl_mul(const TLaurent& a, const TLaurent& b) {
  TLaurent out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      EisensteinInt& slot = out[ea + eb];
      slot = slot + ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

EisensteinInt tl_coeff(const TLaurent& a, long long e) {
  auto it = a.find(e);
  return it == a.end() ? EisensteinInt{} : it->second;
}

namespace {

void ss_trim(SSeries& s) {
  for (auto it = s.coeffs.begin(); it != s.coeffs.end();) {
    for (auto jt = it->second.begin(); jt != it->second.end();)
      jt = jt->second.is_zero() ? it->second.erase(jt) : std::next(jt);
    it = it->second.empty() ? s.coeffs.erase(it) : std::next(it);
  }
}

SSeries ss_combine(const SSeries& a, const SSeries& b, bool subtract) {
  SSeries out;
  out.s_cut = std::min(a.s_cut, b.s_cut);
  out.t_window = std::min(a.t_window, b.t_window);
  for (const auto& [se, tl] : a.coeffs)
    if (se <= out.s_cut) out.coeffs[se] = tl;
  for (const auto& [se, tl] : b.coeffs) {
    if (se > out.s_cut) continue;
    TLaurent& slot = out.coeffs[se];
    for (const auto& [e, c] : tl) {
      EisensteinInt& v = slot[e];
      v = subtract ? v - c : v + c;
    }
  }
  ss_trim(out);
  return out;
}

}  // namespace

SSeries ss_add(const SSeries& a, const SSeries& b) { return ss_combine(a, b, false); }
SSeries ss_sub(const SSeries& a, const SSeries& b) { return ss_combine(a, b, true); }

SSeries ss_mul(const SSeries& a, const SSeries& b) {
  SSeries out;
  out.s_cut = std::min(a.s_cut, b.s_cut);
  out.t_window = std::min(a.t_window, b.t_window);
  for (const auto& [sa, ta] : a.coeffs)
    for (const auto& [sb, tb] : b.coeffs) {
      const int se = sa + sb;
      if (se > out.s_cut) continue;
      TLaurent& slot = out.coeffs[se];
      for (const auto& [ea, ca] : ta)
        for (const auto& [eb, cb] : tb) {
          const long long e = ea + eb;
          if (e > out.t_window || e < -out.t_window) continue;
          EisensteinInt& v = slot[e];
          v = v + ca * cb;
        }
    }
  ss_trim(out);
  return out;
}

SSeries theta_series(int j, int point, int s_cut, long long W) {
  if (j < 0 || j > 2) throw std::invalid_argument("characteristic j must be 0, 1 or 2");
  if (point < 0 || point > 3) throw std::invalid_argument("point index must be 0..3");
  if (s_cut < 0 || W < 1) throw std::invalid_argument("bad truncation parameters");

  SSeries out;
  out.s_cut = s_cut;
  out.t_window = W;

  auto floordiv = [](long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  };

  // strata: all n with (3n+j)^2 <= s_cut
  for (long long n = -(s_cut + 3); n <= s_cut + 3; ++n) {
    const long long q = 3 * n + j;
    if (q * q > s_cut) continue;
    const int sexp = static_cast<int>(q * q);
    auto texp = [&](long long m) {
      long long e = 4 * m * m + 6 * m * n + 2 * m * j;
      if (point == 2) e += 4 * m + 3 * n + j;
      return e;
    };
    auto emit = [&](long long m) {
      const long long e = texp(m);
      if (e > W || e < -W) return;
      EisensteinInt f{1, 0};
      if (point == 1 && ((n + j) % 2 != 0)) f = {-1, 0};
      if (point == 3) f = EisensteinInt::omega_pow(Int(m + j));
      EisensteinInt& slot = out.coeffs[sexp][e];
      slot = slot + f;
    };
    // the exponent is an upward parabola in m; the integer minimum sits at
    // floor or ceil of the real vertex, so two monotone walks cover it
    const long long mv = floordiv(-(q + (point == 2 ? 2 : 0)), 4);
    for (long long m = mv; texp(m) <= W; --m) emit(m);
    for (long long m = mv + 1; texp(m) <= W; ++m) emit(m);
  }
  ss_trim(out);
  return out;
}

ThetaMatrix build_theta_matrix(int s_cut, long long W) {
  ThetaMatrix m;
  m.s_cut = s_cut;
  m.t_window = W;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) m.entries[i][j] = theta_series(j, i, s_cut, W);
  return m;
}

SSeries matrix_minor(const ThetaMatrix& m, int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("minor index must be 0..3");
  std::array<int, 3> rows{};
  int idx = 0;
  for (int i = 0; i < 4; ++i)
    if (i != k) rows[idx++] = i;
  auto& E = m.entries;
  auto term = [&](int c0, int c1, int c2) {
    return ss_mul(ss_mul(E[rows[0]][c0], E[rows[1]][c1]), E[rows[2]][c2]);
  };
  SSeries det = ss_sub(term(0, 1, 2), term(0, 2, 1));
  det = ss_add(det, term(1, 2, 0));
  det = ss_sub(det, term(1, 0, 2));
  det = ss_add(det, term(2, 0, 1));
  det = ss_sub(det, term(2, 1, 0));
  return det;
}

TLaurent g_coefficient(const SSeries& s, int s_exp) {
  if (s_exp > s.s_cut) throw std::invalid_argument("s-exponent above the truncation cut");
  auto it = s.coeffs.find(s_exp);
  return it == s.coeffs.end() ? TLaurent{} : it->second;
}

EisensteinInt obstruction_constant(int s_cut, long long W) {
  if (s_cut < 6) throw std::invalid_argument("need s_cut >= 6 to see both g-coefficients");
  ThetaMatrix m = build_theta_matrix(s_cut, W);
  SSeries m0 = matrix_minor(m, 0);
  SSeries m1 = matrix_minor(m, 1);
  TLaurent g02 = g_coefficient(m0, 2), g05 = g_coefficient(m0, 5);
  TLaurent g12 = g_coefficient(m1, 2), g15 = g_coefficient(m1, 5);
  TLaurent bracket = tl_mul(g02, g15);
  for (const auto& [e, c] : tl_mul(g12, g05)) {
    EisensteinInt& v = bracket[e];
    v = v - c;
  }
  return tl_coeff(bracket, 0);
}

ObstructionCertificate certified_obstruction(int s_cut, long long W) {
  ObstructionCertificate cert;
  cert.window = W;
  cert.recheck_window = W + 20;
  cert.value = obstruction_constant(s_cut, W);
  cert.stable = (cert.value == obstruction_constant(s_cut, cert.recheck_window));
  return cert;
}

Json tlaurent_json(const TLaurent& t) {
  Json arr = Json::array();
  for (const auto& [e, c] : t) {
    Json term;
    term["t"] = e;
    term["re"] = int_json(c.x);
    term["w"] = int_json(c.y);
    arr.push_back(term);
  }
  return arr;
}

}  // namespace toric4
