#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric4/chow_ring.hpp"
#include "toric4/numeric.hpp"

namespace toric4 {

// Pure enumeration with deterministic, sorted output; scans may be
// sharded over mu externally without changing results.

struct CheckEntry {
  std::string rule;
  bool pass = false;
  Rat witness;
};

enum class Verdict { admissible, rejected, external_exists, external_excluded };

std::string verdict_str(Verdict v);

/// Candidate numerical class with its ordered verdict trail. Checks stop
/// at the first failure, which names the rejecting rule. For the
/// P^3-over-P^1 family the triple is (nu, mu, lambda) = (mu-3, mu,
/// lambda-coefficient of [A] = lambda ab + mu b^2); for the P^2-over-P^2
/// family it is the intrinsic (a^2[A], ab[A], b^2[A]).
struct SurfaceCandidate {
  Int nu, mu;
  std::optional<Int> lambda;  // absent when the divisibility stage fails
  std::vector<CheckEntry> checks;
  Verdict verdict = Verdict::rejected;
  std::string rejected_rule;  // empty unless verdict == rejected
};

/// True iff mu = d*e with d >= 2 and e >= 3 (fibre of the elliptic
/// fibration splits into d >= 2 translates of a curve of degree >= 3).
bool fibration_splits(const Int& mu);

/// Necessary-condition sieve for the P^3-bundle over P^1 with the given
/// twists. Scans nu = mu - 3 in 1..24 (complete: the divisibility rule
/// bounds nu for kappa = 0 and the kappa bound does for kappa > 0).
/// Rules, in order: lambda-integral, kappa-bound (strict unless 3 | kappa),
/// fibration, genus-b1..b4 (positive integer), star-1..3, b-rule
/// (some pair k_i = k_j with B_i^2 = 2 forces B_i = B_j). Candidates
/// surviving everything at kappa = 0 are tagged external (product case,
/// settled elsewhere): mu = 6 exists, mu = 9 excluded.
std::vector<SurfaceCandidate> sieve_p3_bundle(const std::vector<Int>& twists);

/// Forced vanishing for the P^1-bundle over P^3: solves
/// a^2[A] = a(b-ka)[A] = (b-ka)^2[A] = 0 for [A] = lambda a^2 + mu ab.
struct P1BundleResult {
  bool applicable = true;  // false for kappa = 0 (the product P^1 x P^3)
  Int lambda = 0, mu = 0;
  bool empty = false;
};
P1BundleResult check_p1_bundle(const Int& kappa);

/// Candidate scan for the P^2-bundle over P^2, kappa > 0, nu even >= 6.
/// lambda is solved from the self-intersection identity; checks in order:
/// fiber (mu - k1 nu >= 0, given by the range), lambda-integral,
/// lambda-nonneg, lambda-even, lambda-h0 (lambda >= 6, the Riemann-Roch
/// bound h^0 >= 3 mirrored from nu >= 6), hodge (lambda nu <= mu^2),
/// star (lambda - 2 k1 mu + k1^2 nu >= 0), fiber-ample
/// (mu - k1 nu > 0: the restriction of a is ample and meets the nonzero
/// trace curve B_1, so equality is impossible for totally nondegenerate
/// surfaces).
/// The lambda solver follows the degree table: the fan table adds the
/// k1 k2 nu^2 correction to the right-hand side of the identity.
std::vector<SurfaceCandidate> enumerate_p2_bundle(const Int& k1, const Int& k2, const Int& nu,
                                                  const Int& mu_max,
                                                  DegreeMode mode = DegreeMode::paper);

/// Exact evaluation of the corner test for the nonexistence region:
/// verdict means f(x*) < x*^2 and f'(x*) <= 2 x* at x* = k1/kappa, i.e.
/// the constraint parabola stays below the tangent corner of the
/// admissible region. corner_gap = x*^2 - f(x*), slope_gap = 2x* - f'(x*).
/// coarse_value is the classical polynomial shortcut
/// (nu+1)k1^2 - (2nu-1)k1k2 - 6k1 + 3(k2-1); it overshoots the exact gap
/// by 2 k1^2 / (kappa^2 (2nu-3)) and is reported for comparison only.
struct RegionReport {
  Rat x_star, f_at_x_star, fprime_at_x_star, threshold;
  Rat corner_gap, slope_gap;
  Int exact_value;   // (nu-1)k1^2 - (2nu-1)k1k2 - 6k1 + 3(k2-1), sign of corner_gap
  Int coarse_value;
  bool verdict = false;
};
RegionReport region_test(const Int& k1, const Int& k2, const Int& nu);

/// p_g of the trace curve B_i: (1/2) [A](b - k_i a)^2 + 1, as an exact
/// rational. The candidate triple follows the family convention above.
Rat genus_of_trace(const BundleSpace& space, const Int& nu, const Int& mu, const Int& lambda,
                   int i);

Json candidate_json(const SurfaceCandidate& c);

}  // namespace toric4
