#include "toric4/toric_morphism.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace toric4 {

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::from_roots(const std::vector<Rat>& roots) {
  RatPoly p({Rat(1)});
  for (const Rat& r : roots) p = p * RatPoly({-r, Rat(1)});
  return p;
}

Rat RatPoly::eval(const Rat& z) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return RatPoly(std::move(out));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rat> out = c_;
  Rat lead = out.back();
  for (Rat& x : out) x /= lead;
  return RatPoly(std::move(out));
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    // remainder of a by b
    RatPoly r = a;
    while (!r.is_zero() && r.deg() >= b.deg()) {
      Rat f = r.coeffs().back() / b.coeffs().back();
      int shift = r.deg() - b.deg();
      std::vector<Rat> sub(shift, Rat(0));
      for (const Rat& c : b.coeffs()) sub.push_back(c * f);
      r = r - RatPoly(std::move(sub));
    }
    a = b;
    b = r.is_zero() ? r : r.monic();
  }
  return a.monic();
}

std::string RatPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    Rat ab = c > 0 ? c : Rat(-c);
    if (ab != 1 || i == 0) {
      os << rat_str(ab);
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

RatPoly parse_poly(const std::string& text, char var) {
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos; };
  auto parse_uint = [&]() -> Int {
    size_t start = pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    if (pos == start) throw std::invalid_argument("malformed polynomial: " + text);
    return Int(text.substr(start, pos - start));
  };
  std::vector<Rat> coeffs;
  auto addc = [&](int e, const Rat& c) {
    if (e >= static_cast<int>(coeffs.size())) coeffs.resize(e + 1, Rat(0));
    coeffs[e] += c;
  };
  skip_ws();
  bool expect_term = true;
  int sign = 1;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    char ch = text[pos];
    if (ch == '+' || ch == '-') {
      if (expect_term && ch == '-') sign = -sign;
      else if (expect_term) { /* unary plus */ }
      else { sign = (ch == '-') ? -1 : 1; expect_term = true; }
      ++pos;
      continue;
    }
    if (!expect_term) throw std::invalid_argument("malformed polynomial: " + text);
    Rat coeff(1);
    bool saw_coeff = false;
    if (std::isdigit((unsigned char)ch)) {
      Int num = parse_uint();
      Int den = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        den = parse_uint();
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
      }
      coeff = Rat(num, den);
      saw_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') { ++pos; skip_ws(); }
    }
    int expo = 0;
    if (pos < text.size() && text[pos] == var) {
      ++pos;
      expo = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        Int e = parse_uint();
        if (e > 64) throw std::invalid_argument("exponent too large: " + text);
        expo = static_cast<int>(e);
      }
    } else if (!saw_coeff) {
      throw std::invalid_argument("malformed polynomial: " + text);
    }
    addc(expo, sign > 0 ? coeff : Rat(-coeff));
    sign = 1;
    expect_term = false;
    skip_ws();
  }
  if (expect_term) throw std::invalid_argument("malformed polynomial: " + text);
  return RatPoly(std::move(coeffs));
}

namespace {

void require_cover(const Fan& fan, const CurveData& data) {
  if (data.polys.size() != fan.rays().size())
    throw std::invalid_argument("need one polynomial per ray");
  for (const auto& p : data.polys)
    if (!p.is_monic()) throw std::invalid_argument("ray polynomials must be monic");
}

}  // namespace

ValidationResult validate_curve(const Fan& fan, const CurveData& data) {
  require_cover(fan, data);
  ValidationResult res;
  for (const auto& pc : primitive_collections(fan)) {
    RatPoly g = data.polys[pc[0]];
    for (size_t i = 1; i < pc.size(); ++i) g = RatPoly::gcd(g, data.polys[pc[i]]);
    if (g.deg() > 0) {
      res.valid = false;
      res.violations.push_back({"gcd", pc, "common factor " + g.str()});
    }
  }
  const int r = fan.rank();
  for (int coord = 0; coord < r; ++coord) {
    Int sum = 0;
    for (size_t i = 0; i < fan.rays().size(); ++i)
      sum += Int(data.polys[i].deg()) * fan.rays()[i][coord];
    if (sum != 0) {
      res.valid = false;
      res.violations.push_back({"balance", {coord}, "weighted ray sum " + sum.str()});
    }
  }
  return res;
}

std::vector<std::vector<Int>> admissible_degrees(const Fan& fan, const Int& total_bound) {
  if (total_bound < 0) throw std::invalid_argument("bound must be nonnegative");
  const int n = static_cast<int>(fan.rays().size());
  const int r = fan.rank();
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(n, 0);
  std::vector<Int> partial(r, 0);
  auto rec = [&](auto&& self, int idx, Int budget) -> void {
    if (idx == n) {
      bool zero = std::all_of(partial.begin(), partial.end(), [](const Int& x) { return x == 0; });
      if (zero) out.push_back(cur);
      return;
    }
    for (Int d = 0; d <= budget; ++d) {
      cur[idx] = d;
      if (d > 0)
        for (int c = 0; c < r; ++c) partial[c] += fan.rays()[idx][c];
      self(self, idx + 1, budget - d);
    }
    for (int c = 0; c < r; ++c) partial[c] -= cur[idx] * fan.rays()[idx][c];
    cur[idx] = 0;
  };
  rec(rec, 0, total_bound);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// Extends the rows (primitive, extendable-to-basis) to a full Z-basis by
/// greedily appending standard basis vectors while the maximal-minor gcd
/// stays 1. Fans here are smooth, so this always completes.
std::vector<LatticeVector> complete_basis(const Fan& fan, const std::vector<int>& cone_rays) {
  const int r = fan.rank();
  std::vector<LatticeVector> rows;
  for (int i : cone_rays) rows.push_back(fan.rays()[i]);

  auto minors_ok = [&](const std::vector<LatticeVector>& m) {
    const int k = static_cast<int>(m.size());
    std::vector<int> cols(k);
    for (int i = 0; i < k; ++i) cols[i] = i;
    Int g = 0;
    while (true) {
      // determinant of the chosen square block
      std::vector<std::vector<Int>> sq(k, std::vector<Int>(k));
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) sq[a][b] = m[a][cols[b]];
      // Laplace expansion; block sizes never exceed 4
      auto detf = [&](auto&& self, std::vector<std::vector<Int>> mm) -> Int {
        const size_t n = mm.size();
        if (n == 1) return mm[0][0];
        Int acc = 0;
        for (size_t c = 0; c < n; ++c) {
          if (mm[0][c] == 0) continue;
          std::vector<std::vector<Int>> sub;
          for (size_t rr = 1; rr < n; ++rr) {
            std::vector<Int> row;
            for (size_t cc = 0; cc < n; ++cc)
              if (cc != c) row.push_back(mm[rr][cc]);
            sub.push_back(std::move(row));
          }
          Int term = mm[0][c] * self(self, std::move(sub));
          if (c % 2) acc -= term; else acc += term;
        }
        return acc;
      };
      g = boost::multiprecision::gcd(g, detf(detf, sq));
      int i = k - 1;
      while (i >= 0 && cols[i] == r - k + i) --i;
      if (i < 0) break;
      ++cols[i];
      for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return g == 1;
  };

  for (int i = 0; i < r && static_cast<int>(rows.size()) < r; ++i) {
    LatticeVector e(r, 0);
    e[i] = 1;
    rows.push_back(e);
    if (!minors_ok(rows)) rows.pop_back();
  }
  if (static_cast<int>(rows.size()) != r)
    throw std::logic_error("failed to extend cone rays to a basis");
  return rows;
}

/// Inverse-transpose of a unimodular integer matrix: row i pairs to
/// delta_{ij} against row j of the input.
std::vector<LatticeVector> dual_basis(const std::vector<LatticeVector>& basis) {
  const int n = static_cast<int>(basis.size());
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(basis[j][i]);  // transpose
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (m[p][col] == 0) ++p;
    std::swap(m[p], m[col]);
    Rat inv = m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] /= inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat f = m[row][col];
      for (int j = 0; j < 2 * n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  std::vector<LatticeVector> out(n, LatticeVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = m[i][n + j];  // row i of the inverse pairs to delta_{ij}
      if (!is_integer(v)) throw std::logic_error("basis not unimodular");
      out[i][j] = rat_num(v);
    }
  return out;
}

}  // namespace

ChartPoint evaluate_curve(const Fan& fan, const CurveData& data, const std::optional<Rat>& z0) {
  require_cover(fan, data);
  ChartPoint out;
  std::vector<int> vanishing;
  if (z0) {
    for (size_t i = 0; i < data.polys.size(); ++i)
      if (data.polys[i].eval(*z0) == 0) vanishing.push_back(static_cast<int>(i));
  }
  if (!fan.spans_cone(vanishing))
    throw std::invalid_argument("vanishing rays span no cone: morphism data invalid");
  out.cone.rays = vanishing;

  // chart: first maximal cone containing the vanishing set
  const Cone* chart = nullptr;
  for (const Cone& c : fan.max_cones()) {
    if (std::includes(c.rays.begin(), c.rays.end(), vanishing.begin(), vanishing.end())) {
      chart = &c;
      break;
    }
  }
  out.chart_rays = chart->rays;
  out.chart_basis = complete_basis(fan, chart->rays);
  const auto duals = dual_basis(out.chart_basis);

  const int r = fan.rank();
  for (int i = 0; i < r; ++i) {
    if (!z0) {
      out.coords.push_back(Rat(1));  // monic data with balanced degrees
      continue;
    }
    // eps(m_i)(z0) = prod P_rho(z0)^{<m_i, n(rho)>}
    Rat val = 1;
    bool zero = false;
    for (size_t ray = 0; ray < fan.rays().size(); ++ray) {
      Int expo = 0;
      for (int c = 0; c < r; ++c) expo += duals[i][c] * fan.rays()[ray][c];
      if (expo == 0) continue;
      Rat pv = data.polys[ray].eval(*z0);
      if (pv == 0) {
        if (expo < 0) throw std::logic_error("negative exponent at vanishing ray");
        zero = true;
        continue;
      }
      long e = static_cast<long>(expo);
      Rat powv = 1;
      for (long n = 0; n < (e < 0 ? -e : e); ++n) powv *= pv;
      if (e < 0) powv = Rat(1) / powv;
      val *= powv;
    }
    out.coords.push_back(zero ? Rat(0) : val);
  }
  return out;
}

ValidationResult class_balance(const Fan& fan, const ClassAssignment& classes) {
  if (classes.classes.size() != fan.rays().size())
    throw std::invalid_argument("need one class per ray");
  for (const auto& v : classes.classes)
    if (static_cast<int>(v.size()) != classes.rank)
      throw std::invalid_argument("class vector rank mismatch");
  ValidationResult res;
  const int r = fan.rank();
  for (int coord = 0; coord < r; ++coord) {
    std::vector<Int> sum(classes.rank, 0);
    for (size_t ray = 0; ray < fan.rays().size(); ++ray)
      for (int t = 0; t < classes.rank; ++t)
        sum[t] += fan.rays()[ray][coord] * classes.classes[ray][t];
    bool zero = std::all_of(sum.begin(), sum.end(), [](const Int& x) { return x == 0; });
    if (!zero) {
      std::string detail = "sum (";
      for (int t = 0; t < classes.rank; ++t)
        detail += sum[t].str() + (t + 1 < classes.rank ? "," : ")");
      res.valid = false;
      res.violations.push_back({"balance", {coord}, detail});
    }
  }
  return res;
}

}  // namespace toric4
