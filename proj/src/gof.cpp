#include "chisq/gof.hpp"

#include <cmath>
#include <limits>

namespace chisq {

namespace {

constexpr double kEps = 1e-14;
constexpr int kMaxIter = 10000;

// Regularized lower incomplete gamma P(a, x) by series, for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double term = sum;
  for (int i = 0; i < kMaxIter; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a, x) by modified Lentz continued
// fraction, for x >= a + 1.
double gamma_q_cf(double a, double x) {
  const double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q(double a, double x) {
  if (x <= 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

}  // namespace

double chisq_survival(double t, int df) {
  if (df < 1) throw InvalidDF("degrees of freedom must be >= 1");
  if (t < 0.0 || std::isnan(t)) throw NegativeStatistic("statistic must be >= 0");
  return gamma_q(0.5 * df, 0.5 * t);
}

TestResult pearson_test(const CountVector& x, const ReferencePoint& pi,
                        const Rational& gamma) {
  if (gamma <= 0) throw std::invalid_argument("gamma must be positive");
  TestResult result;
  Rational plain = chi2_1(x, pi);
  result.statistic = gamma * plain;
  result.statistic_float = to_double(result.statistic);
  result.df = static_cast<int>(x.dim()) - 1;
  // Unscale before the survival call so the p-value cannot depend on gamma.
  result.p_value = chisq_survival(to_double(plain), result.df);
  result.gamma = gamma;
  return result;
}

}  // namespace chisq
