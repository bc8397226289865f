#include "toric4/lattice_fan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric4 {
namespace {

Int coord_gcd(const LatticeVector& v) {
  Int g = 0;
  for (const Int& c : v) g = boost::multiprecision::gcd(g, c);
  return g;
}

/// Determinant of a square Int matrix by fraction-free Laplace expansion
/// (sizes here are at most 4).
Int det(const std::vector<LatticeVector>& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int acc = 0;
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<LatticeVector> sub;
    sub.reserve(n - 1);
    for (size_t r = 1; r < n; ++r) {
      LatticeVector row;
      row.reserve(n - 1);
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(std::move(row));
    }
    Int term = m[0][c] * det(sub);
    if (c % 2) acc -= term; else acc += term;
  }
  return acc;
}

std::vector<LatticeVector> ray_matrix(const Fan& fan, const std::vector<int>& idx) {
  std::vector<LatticeVector> rows;
  rows.reserve(idx.size());
  for (int i : idx) rows.push_back(fan.rays()[i]);
  return rows;
}

/// gcd of all k x k minors of a k x r matrix (k <= r); nonzero gcd 1 means
/// the rows extend to a Z-basis.
Int minor_gcd(const std::vector<LatticeVector>& rows, int rank) {
  const int k = static_cast<int>(rows.size());
  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;
  Int g = 0;
  while (true) {
    std::vector<LatticeVector> sq(k, LatticeVector(k));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sq[r][c] = rows[r][cols[c]];
    g = boost::multiprecision::gcd(g, det(sq));
    int i = k - 1;
    while (i >= 0 && cols[i] == rank - k + i) --i;
    if (i < 0) break;
    ++cols[i];
    for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return g;
}

}  // namespace

Fan::Fan(int rank, std::vector<LatticeVector> rays, std::vector<Cone> max_cones)
    : rank_(rank), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  if (rank_ < 1) throw std::invalid_argument("fan rank must be positive");
  for (const auto& r : rays_) {
    if (static_cast<int>(r.size()) != rank_)
      throw std::invalid_argument("ray length differs from fan rank");
    if (coord_gcd(r) != 1)
      throw std::invalid_argument("fan rays must be primitive");
  }
  std::vector<bool> used(rays_.size(), false);
  for (auto& c : max_cones_) {
    std::sort(c.rays.begin(), c.rays.end());
    if (std::adjacent_find(c.rays.begin(), c.rays.end()) != c.rays.end())
      throw std::invalid_argument("repeated ray index in cone");
    if (c.rays.empty() || static_cast<int>(c.rays.size()) > rank_)
      throw std::invalid_argument("cone size out of range");
    for (int i : c.rays) {
      if (i < 0 || i >= static_cast<int>(rays_.size()))
        throw std::invalid_argument("cone ray index out of range");
      used[i] = true;
    }
    if (minor_gcd(ray_matrix(*this, c.rays), rank_) == 0)
      throw std::invalid_argument("cone rays are linearly dependent");
  }
  for (size_t i = 0; i < rays_.size(); ++i)
    if (!used[i]) throw std::invalid_argument("ray not contained in any maximal cone");
}

bool Fan::spans_cone(const std::vector<int>& ray_indices) const {
  for (const Cone& c : max_cones_) {
    if (std::includes(c.rays.begin(), c.rays.end(), ray_indices.begin(),
                      ray_indices.end()))
      return true;
  }
  return false;
}

Fan Fan::projective_space(int n) {
  std::vector<LatticeVector> rays;
  for (int i = 0; i < n; ++i) {
    LatticeVector e(n, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.push_back(LatticeVector(n, -1));
  std::vector<Cone> cones;
  for (int omit = n; omit >= 0; --omit) {
    Cone c;
    for (int i = 0; i <= n; ++i)
      if (i != omit) c.rays.push_back(i);
    cones.push_back(c);
  }
  return Fan(n, std::move(rays), std::move(cones));
}

Fan make_kleinschmidt(int base_dim, int fiber_dim, const std::vector<Int>& twists) {
  const int d = base_dim, s = fiber_dim;
  if (d < 1 || s < 1) throw std::invalid_argument("base and fiber dimension must be >= 1");
  if (static_cast<int>(twists.size()) != s)
    throw std::invalid_argument("expected one twist per fiber dimension");
  for (size_t i = 0; i < twists.size(); ++i) {
    if (twists[i] < 0) throw std::invalid_argument("twists must be nonnegative");
    if (i + 1 < twists.size() && twists[i] < twists[i + 1])
      throw std::invalid_argument("twists must be nonincreasing");
  }
  const int r = d + s;
  std::vector<LatticeVector> rays;
  // fibre rays sigma_1..sigma_{s+1} in the first s coordinates
  for (int i = 0; i < s; ++i) {
    LatticeVector e(r, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  {
    LatticeVector e(r, 0);
    for (int i = 0; i < s; ++i) e[i] = -1;
    rays.push_back(e);
  }
  // base rays tau_1..tau_d, then the twisted ray
  for (int j = 0; j < d; ++j) {
    LatticeVector e(r, 0);
    e[s + j] = 1;
    rays.push_back(e);
  }
  {
    LatticeVector e(r, 0);
    for (int i = 0; i < s; ++i) e[i] = twists[i];
    for (int j = 0; j < d; ++j) e[s + j] = -1;
    rays.push_back(e);
  }
  // maximal cones omit one sigma and one tau
  std::vector<Cone> cones;
  for (int os = 0; os <= s; ++os) {
    for (int ot = 0; ot <= d; ++ot) {
      Cone c;
      for (int i = 0; i <= s; ++i)
        if (i != os) c.rays.push_back(i);
      for (int j = 0; j <= d; ++j)
        if (j != ot) c.rays.push_back(s + 1 + j);
      cones.push_back(c);
    }
  }
  return Fan(r, std::move(rays), std::move(cones));
}

bool is_smooth(const Fan& fan) {
  for (const Cone& c : fan.max_cones()) {
    auto rows = ray_matrix(fan, c.rays);
    Int g = minor_gcd(rows, fan.rank());
    if (g != 1) return false;
  }
  return true;
}

bool is_complete(const Fan& fan) {
  const int r = fan.rank();
  for (const Cone& c : fan.max_cones())
    if (static_cast<int>(c.rays.size()) != r) return false;

  std::map<std::vector<int>, std::vector<int>> facet_owners;
  for (size_t ci = 0; ci < fan.max_cones().size(); ++ci) {
    const auto& rays = fan.max_cones()[ci].rays;
    for (size_t omit = 0; omit < rays.size(); ++omit) {
      std::vector<int> facet;
      for (size_t k = 0; k < rays.size(); ++k)
        if (k != omit) facet.push_back(rays[k]);
      facet_owners[facet].push_back(static_cast<int>(ci));
    }
  }
  for (const auto& [facet, owners] : facet_owners)
    if (owners.size() != 2) return false;

  // adjacency connectivity across shared facets
  const size_t n = fan.max_cones().size();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<size_t> stack{0};
  seen[0] = true;
  std::map<int, std::vector<int>> nbrs;
  for (const auto& [facet, owners] : facet_owners) {
    nbrs[owners[0]].push_back(owners[1]);
    nbrs[owners[1]].push_back(owners[0]);
  }
  while (!stack.empty()) {
    size_t v = stack.back();
    stack.pop_back();
    for (int w : nbrs[static_cast<int>(v)]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<std::vector<int>> primitive_collections(const Fan& fan) {
  const int n = static_cast<int>(fan.rays().size());
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    if (fan.spans_cone(subset)) continue;
    bool minimal = true;
    for (size_t omit = 0; omit < subset.size() && minimal; ++omit) {
      std::vector<int> sub;
      for (size_t k = 0; k < subset.size(); ++k)
        if (k != omit) sub.push_back(subset[k]);
      if (!fan.spans_cone(sub)) minimal = false;
    }
    if (minimal) out.push_back(subset);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::optional<Cone> cone_containing(const Fan& fan, const LatticeVector& v) {
  if (static_cast<int>(v.size()) != fan.rank())
    throw std::invalid_argument("vector length differs from fan rank");
  for (const Cone& c : fan.max_cones()) {
    // solve sum c_i * ray_i = v exactly; rays are independent so the
    // solution, if any, is unique
    const int k = static_cast<int>(c.rays.size());
    const int r = fan.rank();
    std::vector<std::vector<Rat>> m(r, std::vector<Rat>(k + 1));
    for (int row = 0; row < r; ++row) {
      for (int col = 0; col < k; ++col) m[row][col] = Rat(fan.rays()[c.rays[col]][row]);
      m[row][k] = Rat(v[row]);
    }
    // Gaussian elimination
    int lead = 0;
    std::vector<int> pivot_of_col(k, -1);
    for (int col = 0; col < k && lead < r; ++col) {
      int p = -1;
      for (int row = lead; row < r; ++row)
        if (m[row][col] != 0) { p = row; break; }
      if (p < 0) continue;
      std::swap(m[p], m[lead]);
      Rat inv = m[lead][col];
      for (int j = col; j <= k; ++j) m[lead][j] /= inv;
      for (int row = 0; row < r; ++row) {
        if (row == lead || m[row][col] == 0) continue;
        Rat f = m[row][col];
        for (int j = col; j <= k; ++j) m[row][j] -= f * m[lead][j];
      }
      pivot_of_col[col] = lead;
      ++lead;
    }
    bool consistent = true;
    for (int row = lead; row < r; ++row)
      if (m[row][k] != 0) consistent = false;
    if (!consistent) continue;
    std::vector<Rat> sol(k, Rat(0));
    bool ok = true;
    for (int col = 0; col < k; ++col) {
      if (pivot_of_col[col] >= 0) sol[col] = m[pivot_of_col[col]][k];
      if (sol[col] < 0) ok = false;
    }
    if (!ok) continue;
    Cone face;
    for (int col = 0; col < k; ++col)
      if (sol[col] > 0) face.rays.push_back(c.rays[col]);
    return face;
  }
  return std::nullopt;
}

Json fan_to_json(const Fan& fan) {
  Json j;
  j["rank"] = fan.rank();
  Json rays = Json::array();
  for (const auto& r : fan.rays()) {
    Json row = Json::array();
    for (const Int& c : r) row.push_back(int_json(c));
    rays.push_back(row);
  }
  j["rays"] = rays;
  Json cones = Json::array();
  for (const auto& c : fan.max_cones()) cones.push_back(c.rays);
  j["max_cones"] = cones;
  return j;
}

Fan fan_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("rays") || !j.contains("max_cones"))
    throw std::invalid_argument("fan document needs rank, rays, max_cones");
  int rank = j.at("rank").get<int>();
  std::vector<LatticeVector> rays;
  for (const auto& row : j.at("rays")) {
    LatticeVector v;
    for (const auto& c : row) {
      if (c.is_number_integer()) v.push_back(Int(c.get<std::int64_t>()));
      else v.push_back(Int(c.get<std::string>()));
    }
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  for (const auto& row : j.at("max_cones")) {
    Cone c;
    for (const auto& i : row) c.rays.push_back(i.get<int>());
    cones.push_back(std::move(c));
  }
  return Fan(rank, std::move(rays), std::move(cones));
}

}  // namespace toric4
