#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chisq/measures.hpp"

namespace chisq {

struct AxiomId {
  enum class Tag {
    Homogeneity,
    DeviationsBalancedness,
    InverseEffects,
    RestrictedInverseEffects,
  };

  Tag tag;
  int omega = 0;  // only meaningful for Homogeneity

  std::string name() const;
  bool operator==(const AxiomId&) const = default;
};

/// A failing instance with enough structure to replay the check exactly.
struct Witness {
  AxiomId axiom;
  std::vector<Rational> pi;
  std::vector<Rational> pi2;       // IE only
  std::vector<std::int64_t> x;     // H and DB
  std::vector<std::int64_t> y;     // DB only
  std::int64_t k = 0;
  std::int64_t k2 = 0;             // IE only
  std::int64_t lambda = 0;         // H only
  std::size_t j = 0, l = 0, r = 0, s = 0;  // IE only, 1-based
  Rational lhs, rhs;               // both sides of the violated identity

  bool operator==(const Witness&) const = default;
};

struct CheckReport {
  AxiomId axiom;
  std::string measure;
  std::int64_t instances_tested = 0;
  bool passed = false;
  std::optional<Witness> witness;

  bool operator==(const CheckReport&) const = default;
};

/// f(lambda*x, pi) == lambda^omega * f(x, pi), exactly.
bool check_homogeneity(const MeasureSpec& m, int omega, const CountVector& x,
                       const ReferencePoint& pi, std::int64_t lambda);

/// A_jl = 1/pi_j + 1/pi_l (1-based indices, j != l).
Rational harmonic_factor(const ReferencePoint& pi, std::size_t j, std::size_t l);

/// Inverse Effects instance, checked by cross-multiplication:
///   f(k*pi + 1^j - 1^l, pi) * A(pi2, r, s) == f(k2*pi2 + 1^r - 1^s, pi2) * A(pi, j, l).
/// Restricted Inverse Effects is the pi == pi2, k == k2 special case.
bool check_inverse_effects(const MeasureSpec& m, std::int64_t k, std::int64_t k2,
                           const ReferencePoint& pi, const ReferencePoint& pi2,
                           std::size_t j, std::size_t l, std::size_t r, std::size_t s);

/// Pairs (x, y) with s(x) = s(y) = k and both x+y-k*pi and x-y+k*pi
/// entrywise non-negative; lexicographic in (x, y), up to `limit` pairs,
/// exhaustive when the family is smaller.
std::vector<std::pair<CountVector, CountVector>> enumerate_db_pairs(
    const ReferencePoint& pi, std::int64_t k, std::int64_t limit);

/// f(x+y-k*pi, pi) + f(x-y+k*pi, pi) == 2 f(x, pi) + 2 f(y, pi), exactly.
bool check_deviations_balancedness(const MeasureSpec& m, const ReferencePoint& pi,
                                   const CountVector& x, const CountVector& y,
                                   std::int64_t k);

struct SuiteConfig {
  std::vector<std::size_t> n_values{2, 3, 4};
  std::vector<std::int64_t> k_multiples{1, 2, 4};
  std::int64_t lambda_max = 5;
  std::int64_t db_limit = 500;
};

/// Built-in reference points for a given n: uniform, staircase
/// (1/T, 2/T, ..., n/T) with T = n(n+1)/2, and a dyadic point
/// (1/2, 1/4, ..., 1/2^(n-1), 1/2^(n-1)).
std::vector<ReferencePoint> reference_catalogue(std::size_t n);

/// Phi table covering every catalogue point of the config, with a distinct
/// value per point (so phi is not constant).
PhiTable catalogue_phi_table(const SuiteConfig& config);

/// One report per axiom in {H(0), H(1), DB, IE, RIE}, enumerated
/// deterministically over the catalogue. `parallel` fans instances out to
/// OpenMP workers; results are identical to the serial run.
std::vector<CheckReport> run_axiom_suite(const MeasureSpec& m, const SuiteConfig& config,
                                         bool parallel = false);

/// Re-runs the check a witness came from; returns the check's verdict
/// (false for a genuine witness).
bool replay_witness(const MeasureSpec& m, const Witness& w);

struct IndependenceRow {
  std::string measure;
  bool homogeneity0_passed = false;
  bool deviations_balancedness_passed = false;
  bool inverse_effects_passed = false;
  std::optional<Witness> witness;  // of the designated failure
};

struct IndependenceReport {
  std::vector<IndependenceRow> rows;  // chi2_1, abs, sq
  /// True iff each measure fails exactly its designated axiom:
  /// chi2_1 -> H(0), abs -> DB, sq -> IE.
  bool as_expected = false;
};

IndependenceReport independence_report(const SuiteConfig& config, bool parallel = false);

}  // namespace chisq
