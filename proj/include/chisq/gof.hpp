#pragma once

#include "chisq/measures.hpp"

namespace chisq {

/// Upper-tail probability P[X >= t] of the chi-squared distribution with
/// df degrees of freedom, i.e. the regularized upper incomplete gamma
/// Q(df/2, t/2). Absolute error <= 1e-12 for df <= 100, t <= 1000.
double chisq_survival(double t, int df);

struct TestResult {
  Rational statistic;      // gamma * chi2_1(x, pi)
  double statistic_float;  // nearest double
  int df = 0;              // n - 1
  double p_value = 0.0;
  Rational gamma;

  bool operator==(const TestResult&) const = default;
};

/// Pearson goodness-of-fit test. The statistic is gamma-scaled but the
/// p-value refers the unscaled statistic to the chi-squared distribution,
/// so it is bitwise independent of gamma.
TestResult pearson_test(const CountVector& x, const ReferencePoint& pi,
                        const Rational& gamma);

}  // namespace chisq
