#include "chisq/axioms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chisq {

std::string AxiomId::name() const {
  switch (tag) {
    case Tag::Homogeneity:
      return "homogeneity_" + std::to_string(omega);
    case Tag::DeviationsBalancedness:
      return "deviations_balancedness";
    case Tag::InverseEffects:
      return "inverse_effects";
    case Tag::RestrictedInverseEffects:
      return "restricted_inverse_effects";
  }
  return "?";
}

namespace {

struct Sides {
  Rational lhs, rhs;
  bool equal() const { return lhs == rhs; }
};

Sides homogeneity_sides(const MeasureSpec& m, int omega, const CountVector& x,
                        const ReferencePoint& pi, std::int64_t lambda) {
  Rational scaled = evaluate(m, x.scaled(lambda), pi);
  Rational base = evaluate(m, x, pi);
  Rational factor = omega == 0 ? Rational(1) : Rational(lambda);
  return {scaled, factor * base};
}

Sides inverse_effects_sides(const MeasureSpec& m, std::int64_t k, std::int64_t k2,
                            const ReferencePoint& pi, const ReferencePoint& pi2,
                            std::size_t j, std::size_t l, std::size_t r, std::size_t s) {
  Rational f1 = evaluate(m, single_move(pi, k, j, l), pi);
  Rational f2 = evaluate(m, single_move(pi2, k2, r, s), pi2);
  // Cross-multiplied: a zero on one side with a nonzero other side is a
  // violation, never a division by zero.
  return {f1 * harmonic_factor(pi2, r, s), f2 * harmonic_factor(pi, j, l)};
}

Sides deviations_balancedness_sides(const MeasureSpec& m, const ReferencePoint& pi,
                                    const CountVector& x, const CountVector& y,
                                    std::int64_t k) {
  IntVector k_pi = scaled_reference(pi, k);
  CountVector plus = additive_combination(x, y, k_pi).to_counts();
  CountVector minus = subtractive_combination(x, y, k_pi).to_counts();
  Rational lhs = evaluate(m, plus, pi) + evaluate(m, minus, pi);
  Rational rhs = 2 * (evaluate(m, x, pi) + evaluate(m, y, pi));
  return {lhs, rhs};
}

}  // namespace

bool check_homogeneity(const MeasureSpec& m, int omega, const CountVector& x,
                       const ReferencePoint& pi, std::int64_t lambda) {
  if (omega != 0 && omega != 1) throw std::invalid_argument("omega must be 0 or 1");
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  return homogeneity_sides(m, omega, x, pi, lambda).equal();
}

Rational harmonic_factor(const ReferencePoint& pi, std::size_t j, std::size_t l) {
  if (j < 1 || j > pi.dim() || l < 1 || l > pi.dim()) {
    throw IndexOutOfRange("category index out of range");
  }
  if (j == l) throw EqualIndices();
  return 1 / pi[j - 1] + 1 / pi[l - 1];
}

bool check_inverse_effects(const MeasureSpec& m, std::int64_t k, std::int64_t k2,
                           const ReferencePoint& pi, const ReferencePoint& pi2,
                           std::size_t j, std::size_t l, std::size_t r, std::size_t s) {
  return inverse_effects_sides(m, k, k2, pi, pi2, j, l, r, s).equal();
}

namespace {

/// Enumerates vectors v of length n with lower[i] <= v[i] <= upper[i] and
/// sum(v) == total, in lexicographic order.
void bounded_compositions(const std::vector<std::int64_t>& lower,
                          const std::vector<std::int64_t>& upper, std::int64_t total,
                          const std::function<bool(const std::vector<std::int64_t>&)>& emit) {
  const std::size_t n = lower.size();
  std::vector<std::int64_t> v(n);
  std::vector<std::int64_t> lower_suffix(n + 1, 0), upper_suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    lower_suffix[i] = lower_suffix[i + 1] + lower[i];
    upper_suffix[i] = upper_suffix[i + 1] + upper[i];
  }
  std::function<bool(std::size_t, std::int64_t)> rec = [&](std::size_t pos,
                                                           std::int64_t rest) -> bool {
    if (pos == n) return emit(v);
    std::int64_t lo = std::max(lower[pos], rest - upper_suffix[pos + 1]);
    std::int64_t hi = std::min(upper[pos], rest - lower_suffix[pos + 1]);
    for (std::int64_t c = lo; c <= hi; ++c) {
      v[pos] = c;
      if (!rec(pos + 1, rest - c)) return false;
    }
    return true;
  };
  rec(0, total);
}

}  // namespace

std::vector<std::pair<CountVector, CountVector>> enumerate_db_pairs(
    const ReferencePoint& pi, std::int64_t k, std::int64_t limit) {
  IntVector k_pi = scaled_reference(pi, k);
  const std::size_t n = pi.dim();
  std::vector<std::pair<CountVector, CountVector>> pairs;
  if (limit <= 0) return pairs;

  std::vector<std::int64_t> zero(n, 0), cap(n, k);
  bool more = true;
  bounded_compositions(zero, cap, k, [&](const std::vector<std::int64_t>& xv) {
    // y must satisfy k*pi - x <= y <= x + k*pi componentwise.
    std::vector<std::int64_t> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::max<std::int64_t>(0, k_pi[i] - xv[i]);
      hi[i] = std::min<std::int64_t>(k, xv[i] + k_pi[i]);
    }
    CountVector x(xv);
    bounded_compositions(lo, hi, k, [&](const std::vector<std::int64_t>& yv) {
      pairs.emplace_back(x, CountVector(yv));
      if (static_cast<std::int64_t>(pairs.size()) >= limit) {
        more = false;
        return false;
      }
      return true;
    });
    return more;
  });
  return pairs;
}

bool check_deviations_balancedness(const MeasureSpec& m, const ReferencePoint& pi,
                                   const CountVector& x, const CountVector& y,
                                   std::int64_t k) {
  return deviations_balancedness_sides(m, pi, x, y, k).equal();
}

std::vector<ReferencePoint> reference_catalogue(std::size_t n) {
  if (n < 2) throw DimensionMismatch("catalogue needs n >= 2");
  std::vector<ReferencePoint> catalogue;

  std::vector<Rational> uniform(n, Rational(1, static_cast<int>(n)));
  catalogue.emplace_back(uniform);

  const std::int64_t t = static_cast<std::int64_t>(n) * (n + 1) / 2;
  std::vector<Rational> staircase;
  for (std::size_t i = 1; i <= n; ++i) staircase.emplace_back(Int(i), Int(t));
  catalogue.emplace_back(staircase);

  // (1/2, 1/4, ..., 1/2^(n-1), 1/2^(n-1)); coincides with uniform at n=2.
  if (n >= 3) {
    std::vector<Rational> dyadic;
    Int den = 2;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      dyadic.emplace_back(Int(1), den);
      den *= 2;
    }
    dyadic.emplace_back(dyadic.back());
    catalogue.emplace_back(dyadic);
  }
  return catalogue;
}

PhiTable catalogue_phi_table(const SuiteConfig& config) {
  PhiTable phi;
  Int value = 1;
  for (std::size_t n : config.n_values) {
    for (const auto& pi : reference_catalogue(n)) {
      phi.set(pi, Rational(value));
      ++value;
    }
  }
  return phi;
}

namespace {

// One suite instance; which fields are live depends on the axiom.
struct Instance {
  std::vector<Rational> pi;
  std::vector<Rational> pi2;
  std::vector<std::int64_t> x;
  std::vector<std::int64_t> y;
  std::int64_t k = 0, k2 = 0, lambda = 0;
  std::size_t j = 0, l = 0, r = 0, s = 0;
};

Sides instance_sides(const MeasureSpec& m, const AxiomId& axiom, const Instance& in) {
  switch (axiom.tag) {
    case AxiomId::Tag::Homogeneity:
      return homogeneity_sides(m, axiom.omega, CountVector(in.x), ReferencePoint(in.pi),
                               in.lambda);
    case AxiomId::Tag::DeviationsBalancedness:
      return deviations_balancedness_sides(m, ReferencePoint(in.pi), CountVector(in.x),
                                           CountVector(in.y), in.k);
    case AxiomId::Tag::InverseEffects:
    case AxiomId::Tag::RestrictedInverseEffects:
      return inverse_effects_sides(m, in.k, in.k2, ReferencePoint(in.pi),
                                   ReferencePoint(in.pi2), in.j, in.l, in.r, in.s);
  }
  throw std::logic_error("unreachable");
}

Witness make_witness(const AxiomId& axiom, const Instance& in, const Sides& sides) {
  Witness w;
  w.axiom = axiom;
  w.pi = in.pi;
  w.pi2 = in.pi2;
  w.x = in.x;
  w.y = in.y;
  w.k = in.k;
  w.k2 = in.k2;
  w.lambda = in.lambda;
  w.j = in.j;
  w.l = in.l;
  w.r = in.r;
  w.s = in.s;
  w.lhs = sides.lhs;
  w.rhs = sides.rhs;
  return w;
}

std::vector<std::int64_t> counts_of(const IntVector& v) { return v.entries(); }

std::vector<Instance> homogeneity_instances(const SuiteConfig& config) {
  std::vector<Instance> out;
  for (std::size_t n : config.n_values) {
    std::vector<std::int64_t> stair;
    for (std::size_t i = 1; i <= n; ++i) stair.push_back(static_cast<std::int64_t>(i));
    for (const auto& pi : reference_catalogue(n)) {
      const std::int64_t k0 = lcm_denominators(pi);
      for (std::int64_t mult : config.k_multiples) {
        const std::int64_t k = mult * k0;
        std::vector<std::vector<std::int64_t>> xs;
        xs.push_back(counts_of(scaled_reference(pi, k)));
        for (std::size_t j = 1; j <= n; ++j) {
          for (std::size_t l = 1; l <= n; ++l) {
            if (j == l) continue;
            xs.push_back(single_move(pi, k, j, l).counts());
          }
        }
        xs.push_back(stair);
        xs.push_back(unit_vector(n, 1).counts());
        for (const auto& x : xs) {
          for (std::int64_t lambda = 1; lambda <= config.lambda_max; ++lambda) {
            Instance in;
            in.pi = pi.probs();
            in.x = x;
            in.lambda = lambda;
            out.push_back(std::move(in));
          }
        }
      }
    }
  }
  return out;
}

std::vector<Instance> db_instances(const SuiteConfig& config) {
  std::vector<Instance> out;
  for (std::size_t n : config.n_values) {
    for (const auto& pi : reference_catalogue(n)) {
      const std::int64_t k0 = lcm_denominators(pi);
      for (std::int64_t mult : config.k_multiples) {
        const std::int64_t k = mult * k0;
        for (const auto& [x, y] : enumerate_db_pairs(pi, k, config.db_limit)) {
          Instance in;
          in.pi = pi.probs();
          in.x = x.counts();
          in.y = y.counts();
          in.k = k;
          out.push_back(std::move(in));
        }
      }
    }
  }
  return out;
}

std::vector<Instance> ie_instances(const SuiteConfig& config, bool restricted) {
  std::vector<Instance> out;
  for (std::size_t n : config.n_values) {
    const auto catalogue = reference_catalogue(n);
    for (const auto& pi : catalogue) {
      for (const auto& pi2 : catalogue) {
        if (restricted && !(pi == pi2)) continue;
        // The axiom quantifies over a single k with k*pi and k*pi' both in X.
        const std::int64_t k00 = std::lcm(lcm_denominators(pi), lcm_denominators(pi2));
        for (std::int64_t mult : config.k_multiples) {
          const std::int64_t k = mult * k00;
          const std::int64_t k2 = k;
          for (std::size_t j = 1; j <= n; ++j) {
          for (std::size_t l = 1; l <= n; ++l) {
            if (j == l) continue;
            for (std::size_t r = 1; r <= n; ++r) {
              for (std::size_t s = 1; s <= n; ++s) {
                if (r == s) continue;
                Instance in;
                in.pi = pi.probs();
                in.pi2 = pi2.probs();
                in.k = k;
                in.k2 = k2;
                in.j = j;
                in.l = l;
                in.r = r;
                in.s = s;
                  out.push_back(std::move(in));
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

CheckReport run_axiom(const MeasureSpec& m, const AxiomId& axiom,
                      const std::vector<Instance>& instances, bool parallel) {
  std::vector<char> ok(instances.size(), 1);
  const std::int64_t count = static_cast<std::int64_t>(instances.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    ok[static_cast<std::size_t>(i)] = instance_sides(m, axiom, instances[i]).equal();
  }

  CheckReport report;
  report.axiom = axiom;
  report.measure = m.name();
  report.instances_tested = count;
  auto first_bad = std::find(ok.begin(), ok.end(), 0);
  report.passed = first_bad == ok.end();
  if (!report.passed) {
    const auto& in = instances[static_cast<std::size_t>(first_bad - ok.begin())];
    report.witness = make_witness(axiom, in, instance_sides(m, axiom, in));
  }
  return report;
}

}  // namespace

std::vector<CheckReport> run_axiom_suite(const MeasureSpec& m, const SuiteConfig& config,
                                         bool parallel) {
  if (config.n_values.empty() || config.k_multiples.empty() || config.lambda_max < 1) {
    throw std::invalid_argument("suite config ranges must be non-empty");
  }
  const auto h_instances = homogeneity_instances(config);
  const auto d_instances = db_instances(config);
  const auto i_instances = ie_instances(config, false);
  const auto r_instances = ie_instances(config, true);

  std::vector<CheckReport> reports;
  reports.push_back(run_axiom(m, {AxiomId::Tag::Homogeneity, 0}, h_instances, parallel));
  reports.push_back(run_axiom(m, {AxiomId::Tag::Homogeneity, 1}, h_instances, parallel));
  reports.push_back(
      run_axiom(m, {AxiomId::Tag::DeviationsBalancedness}, d_instances, parallel));
  reports.push_back(run_axiom(m, {AxiomId::Tag::InverseEffects}, i_instances, parallel));
  reports.push_back(
      run_axiom(m, {AxiomId::Tag::RestrictedInverseEffects}, r_instances, parallel));
  return reports;
}

bool replay_witness(const MeasureSpec& m, const Witness& w) {
  switch (w.axiom.tag) {
    case AxiomId::Tag::Homogeneity:
      return check_homogeneity(m, w.axiom.omega, CountVector(w.x), ReferencePoint(w.pi),
                               w.lambda);
    case AxiomId::Tag::DeviationsBalancedness:
      return check_deviations_balancedness(m, ReferencePoint(w.pi), CountVector(w.x),
                                           CountVector(w.y), w.k);
    case AxiomId::Tag::InverseEffects:
    case AxiomId::Tag::RestrictedInverseEffects:
      return check_inverse_effects(m, w.k, w.k2, ReferencePoint(w.pi),
                                   ReferencePoint(w.pi2), w.j, w.l, w.r, w.s);
  }
  throw std::logic_error("unreachable");
}

IndependenceReport independence_report(const SuiteConfig& config, bool parallel) {
  struct Expectation {
    MeasureSpec measure;
    AxiomId::Tag designated;
  };
  const std::vector<Expectation> expectations = {
      {MeasureSpec::chi2_1_measure(), AxiomId::Tag::Homogeneity},
      {MeasureSpec::abs_counter(), AxiomId::Tag::DeviationsBalancedness},
      {MeasureSpec::sq_counter(), AxiomId::Tag::InverseEffects},
  };

  IndependenceReport report;
  report.as_expected = true;
  for (const auto& e : expectations) {
    auto suite = run_axiom_suite(e.measure, config, parallel);
    IndependenceRow row;
    row.measure = e.measure.name();
    for (const auto& r : suite) {
      if (r.axiom == AxiomId{AxiomId::Tag::Homogeneity, 0}) {
        row.homogeneity0_passed = r.passed;
        if (!r.passed && e.designated == AxiomId::Tag::Homogeneity) row.witness = r.witness;
      } else if (r.axiom.tag == AxiomId::Tag::DeviationsBalancedness) {
        row.deviations_balancedness_passed = r.passed;
        if (!r.passed && e.designated == AxiomId::Tag::DeviationsBalancedness) {
          row.witness = r.witness;
        }
      } else if (r.axiom.tag == AxiomId::Tag::InverseEffects) {
        row.inverse_effects_passed = r.passed;
        if (!r.passed && e.designated == AxiomId::Tag::InverseEffects) row.witness = r.witness;
      }
    }
    const bool expected_h0 = e.designated != AxiomId::Tag::Homogeneity;
    const bool expected_db = e.designated != AxiomId::Tag::DeviationsBalancedness;
    const bool expected_ie = e.designated != AxiomId::Tag::InverseEffects;
    if (row.homogeneity0_passed != expected_h0 ||
        row.deviations_balancedness_passed != expected_db ||
        row.inverse_effects_passed != expected_ie || !row.witness.has_value()) {
      report.as_expected = false;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace chisq
