#include "toric4/surface_classify.hpp"

namespace toric4 {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::admissible: return "admissible";
    case Verdict::rejected: return "rejected";
    case Verdict::external_exists: return "external-exists";
    case Verdict::external_excluded: return "external-excluded";
  }
  return "?";
}

bool fibration_splits(const Int& mu) {
  for (Int d = 2; d * 3 <= mu; ++d)
    if (mu % d == 0 && mu / d >= 3) return true;
  return false;
}

namespace {

void pass(SurfaceCandidate& c, const std::string& rule, const Rat& w) {
  c.checks.push_back({rule, true, w});
}

void fail(SurfaceCandidate& c, const std::string& rule, const Rat& w) {
  c.checks.push_back({rule, false, w});
  c.verdict = Verdict::rejected;
  c.rejected_rule = rule;
}

}  // namespace

std::vector<SurfaceCandidate> sieve_p3_bundle(const std::vector<Int>& twists) {
  BundleSpace space(1, twists);
  const Int k = space.kappa();
  std::vector<SurfaceCandidate> out;
  for (Int nu = 1; nu <= 24; ++nu) {
    const Int mu = nu + 3;
    SurfaceCandidate cand;
    cand.nu = nu;
    cand.mu = mu;
    // 2 lambda nu = -kappa (nu^2 + 3 nu) + 8 nu + 24
    const Rat lam = Rat(-k * (nu * nu + 3 * nu) + 8 * nu + 24, 2 * nu);
    if (!is_integer(lam)) {
      fail(cand, "lambda-integral", lam);
      out.push_back(std::move(cand));
      continue;
    }
    pass(cand, "lambda-integral", lam);
    const Int lambda = rat_num(lam);
    cand.lambda = lambda;

    const Int knu = k * nu;
    if (!(knu < 24 || (knu == 24 && k % 3 == 0))) {
      fail(cand, "kappa-bound", Rat(knu));
      out.push_back(std::move(cand));
      continue;
    }
    pass(cand, "kappa-bound", Rat(knu));

    if (!fibration_splits(mu)) {
      fail(cand, "fibration", Rat(mu));
      out.push_back(std::move(cand));
      continue;
    }
    pass(cand, "fibration", Rat(mu));

    bool dead = false;
    for (int i = 1; i <= 4 && !dead; ++i) {
      const Rat pg = genus_of_trace(space, nu, mu, lambda, i);
      if (!is_integer(pg) || pg <= 0) {
        fail(cand, "genus-b" + std::to_string(i), pg);
        dead = true;
      } else {
        pass(cand, "genus-b" + std::to_string(i), pg);
      }
    }
    if (dead) { out.push_back(std::move(cand)); continue; }

    for (int i = 1; i <= 3 && !dead; ++i) {
      const Rat star = Rat(lambda, 2) + (Rat(k, 2) - Rat(space.twist(i))) * Rat(mu);
      if (star < 0) {
        fail(cand, "star-" + std::to_string(i), star);
        dead = true;
      } else {
        pass(cand, "star-" + std::to_string(i), star);
      }
    }
    if (dead) { out.push_back(std::move(cand)); continue; }

    // equal twists with trace self-intersection 2 force B_i = B_j and a
    // degenerate embedding into a 3-dimensional torus closure
    for (int i = 1; i <= 4 && !dead; ++i) {
      for (int j = i + 1; j <= 4 && !dead; ++j) {
        if (space.twist(i) != space.twist(j)) continue;
        const Int b2 = lambda + k * mu - 2 * space.twist(i) * mu;
        if (b2 == 2) {
          fail(cand, "b-rule", Rat(b2));
          dead = true;
        }
      }
    }
    if (dead) { out.push_back(std::move(cand)); continue; }
    pass(cand, "b-rule", Rat(0));

    if (k == 0)
      cand.verdict = (mu == 6) ? Verdict::external_exists : Verdict::external_excluded;
    else
      cand.verdict = Verdict::admissible;
    out.push_back(std::move(cand));
  }
  return out;
}

P1BundleResult check_p1_bundle(const Int& kappa) {
  if (kappa < 0) throw std::invalid_argument("kappa must be nonnegative");
  P1BundleResult res;
  if (kappa == 0) {
    res.applicable = false;
    return res;
  }
  // In [A] = lambda a^2 + mu ab over the d = 3 table, the three vanishing
  // conditions read mu = 0, lambda = 0, -kappa lambda = 0.
  res.lambda = 0;
  res.mu = 0;
  res.empty = true;
  return res;
}

std::vector<SurfaceCandidate> enumerate_p2_bundle(const Int& k1, const Int& k2, const Int& nu,
                                                  const Int& mu_max, DegreeMode mode) {
  if (k1 < k2 || k2 < 0) throw std::invalid_argument("twists must be nonincreasing, nonnegative");
  const Int k = k1 + k2;
  if (k == 0) throw std::invalid_argument("enumeration needs kappa > 0");
  if (nu < 6 || nu % 2 != 0) throw std::invalid_argument("nu must be an even integer >= 6");
  if (mu_max < k1 * nu) throw std::invalid_argument("mu_max below k1 * nu");
  const Int self_corr = (mode == DegreeMode::fan) ? k1 * k2 * nu * nu : Int(0);

  std::vector<SurfaceCandidate> out;
  for (Int mu = k1 * nu; mu <= mu_max; ++mu) {
    SurfaceCandidate cand;
    cand.nu = nu;
    cand.mu = mu;
    pass(cand, "fiber", Rat(mu - k1 * nu));

    // lambda from the degree-2 self-intersection identity
    const Rat lam = make_rat(mu * mu + self_corr - 2 * k * mu * nu - (9 - 2 * k) * mu -
                                 (3 - 3 * k + k1 * k2) * nu,
                             3 - 2 * nu);
    if (!is_integer(lam)) {
      fail(cand, "lambda-integral", lam);
      out.push_back(std::move(cand));
      continue;
    }
    pass(cand, "lambda-integral", lam);
    const Int lambda = rat_num(lam);
    cand.lambda = lambda;

    if (lambda < 0) { fail(cand, "lambda-nonneg", Rat(lambda)); out.push_back(std::move(cand)); continue; }
    pass(cand, "lambda-nonneg", Rat(lambda));
    if (lambda % 2 != 0) { fail(cand, "lambda-even", Rat(lambda)); out.push_back(std::move(cand)); continue; }
    pass(cand, "lambda-even", Rat(lambda));
    if (lambda < 6) { fail(cand, "lambda-h0", Rat(lambda, 2)); out.push_back(std::move(cand)); continue; }
    pass(cand, "lambda-h0", Rat(lambda, 2));

    const Int hodge = mu * mu - lambda * nu;
    if (hodge < 0) { fail(cand, "hodge", Rat(hodge)); out.push_back(std::move(cand)); continue; }
    pass(cand, "hodge", Rat(hodge));

    const Int star = lambda - 2 * k1 * mu + k1 * k1 * nu;
    if (star < 0) { fail(cand, "star", Rat(star)); out.push_back(std::move(cand)); continue; }
    pass(cand, "star", Rat(star));

    const Int fib = mu - k1 * nu;
    if (fib == 0) { fail(cand, "fiber-ample", Rat(fib)); out.push_back(std::move(cand)); continue; }
    pass(cand, "fiber-ample", Rat(fib));

    cand.verdict = Verdict::admissible;
    out.push_back(std::move(cand));
  }
  return out;
}

RegionReport region_test(const Int& k1, const Int& k2, const Int& nu) {
  if (k1 < k2 || k2 < 0) throw std::invalid_argument("twists must be nonincreasing, nonnegative");
  const Int k = k1 + k2;
  if (k == 0) throw std::invalid_argument("region test needs kappa > 0");
  if (nu < 2) throw std::invalid_argument("nu too small");

  RegionReport rep;
  const Rat x = Rat(k1, k);
  const Rat den = Rat(2 * nu - 3);
  const Rat fa = Rat(-nu) / den;
  const Rat fb = (Rat(2 * nu - 2) + Rat(9, k)) / den;
  const Rat fc = Rat(3 + k1 * k2 - 3 * k) / (Rat(k * k) * den);
  rep.x_star = x;
  rep.f_at_x_star = fa * x * x + fb * x + fc;
  rep.fprime_at_x_star = 2 * fa * x + fb;
  rep.threshold = x * x;
  rep.corner_gap = rep.threshold - rep.f_at_x_star;
  rep.slope_gap = 2 * x - rep.fprime_at_x_star;
  rep.exact_value = (nu - 1) * k1 * k1 - (2 * nu - 1) * k1 * k2 - 6 * k1 + 3 * (k2 - 1);
  rep.coarse_value = (nu + 1) * k1 * k1 - (2 * nu - 1) * k1 * k2 - 6 * k1 + 3 * (k2 - 1);
  rep.verdict = rep.corner_gap > 0 && rep.slope_gap >= 0;
  return rep;
}

Rat genus_of_trace(const BundleSpace& space, const Int& nu, const Int& mu, const Int& lambda,
                   int i) {
  const Int ki = space.twist(i);  // throws when i is out of range
  if (space.base_dim == 1) {
    // [A] = lambda ab + mu b^2; [A] b^2 = lambda + kappa mu, [A] ab = mu
    return Rat(lambda + space.kappa() * mu, 2) - ki * mu + 1;
  }
  // intrinsic triple: [A](b - ki a)^2 = lambda - 2 ki mu + ki^2 nu
  return Rat(lambda - 2 * ki * mu + ki * ki * nu, 2) + 1;
}

Json candidate_json(const SurfaceCandidate& c) {
  Json j;
  j["nu"] = int_json(c.nu);
  j["mu"] = int_json(c.mu);
  if (c.lambda) j["lambda"] = int_json(*c.lambda);
  j["verdict"] = verdict_str(c.verdict);
  if (!c.rejected_rule.empty()) j["rejected_by"] = c.rejected_rule;
  Json checks = Json::array();
  for (const auto& ch : c.checks) {
    Json e;
    e["rule"] = ch.rule;
    e["pass"] = ch.pass;
    e["witness"] = rat_json(ch.witness);
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j;
}

}  // namespace toric4
