#pragma once

#include <map>
#include <utility>
#include <vector>

#include "chisq/measures.hpp"

namespace chisq {

/// Line segment between two distinct points of the closed simplex,
/// parameterized p(alpha) = alpha*t + (1-alpha)*s for rational alpha in [0,1].
class Segment {
 public:
  Segment(SimplexPoint from, SimplexPoint to);

  const SimplexPoint& from() const { return from_; }
  const SimplexPoint& to() const { return to_; }

  SimplexPoint at(const Rational& alpha) const;

 private:
  SimplexPoint from_, to_;
};

/// L(beta) = a*beta^2 + b*beta + d.
struct ParabolaCoeffs {
  Rational a, b, d;

  Rational eval(const Rational& beta) const { return a * beta * beta + b * beta + d; }
  bool operator==(const ParabolaCoeffs&) const = default;
};

/// F(p) restricted to coordinates i != dropped (1-based), in the shifted
/// variables u_i = p_i - pi_i:
///   F(p) = sum_i rho_ii u_i^2 + sum_{i<j} rho_ij u_i u_j
///          + sum_i linear_i u_i + constant.
/// For a measure satisfying the axioms the linear and constant parts are 0.
struct QuadraticForm {
  std::size_t n = 0;
  std::size_t dropped = 0;  // 1-based
  std::map<std::size_t, Rational> diag;                         // rho_ii
  std::map<std::pair<std::size_t, std::size_t>, Rational> cross;  // rho_ij, i < j
  std::map<std::size_t, Rational> linear;
  Rational constant;

  Rational eval(const SimplexPoint& p, const ReferencePoint& pi) const;
  bool operator==(const QuadraticForm&) const = default;
};

/// Evaluates m in degree-0 form at a rational simplex point: picks any x
/// with normalize(x) = p and divides out s(x)^degree. Independent of the
/// representative by homogeneity.
Rational degree0_at(const MeasureSpec& m, const ReferencePoint& pi, const SimplexPoint& p);

/// L(alpha) = F(p(alpha)) along the segment.
Rational segment_restriction(const MeasureSpec& m, const ReferencePoint& pi,
                             const Segment& seg, const Rational& alpha);

/// Unique (a, b, d) with L(0) = d, L(1/2) = a/4 + b/2 + d, L(1) = a + b + d.
/// The 3x3 system has determinant -1/4, so it is always solvable.
ParabolaCoeffs fit_parabola_three_points(const Rational& l0, const Rational& lhalf,
                                         const Rational& l1);

/// Solves the offset delta from the m = 2 instance of
///   L(m c) = m L(c) + (1-m) L(0) + m(m-1)/2 * (L(1/2-c) + L(1/2+c) + delta)
/// and verifies the identity for every m in {0, ..., m_max}.
bool verify_parabola_recurrence(const MeasureSpec& measure, const ReferencePoint& pi,
                                const Segment& seg, const Rational& c, std::int64_t m_max);

/// F(p+q-pi) + F(p-q+pi) == 2 F(p) + 2 F(q), exactly. Throws OutOfSimplex
/// when a combination leaves the closed simplex.
bool check_simplex_functional_equation(const MeasureSpec& m, const ReferencePoint& pi,
                                       const SimplexPoint& p, const SimplexPoint& q);

/// Fits a full quadratic (including linear and constant terms) to exact
/// samples of the degree-0 measure around pi, then checks every sample
/// reproduces. Throws SingularSystem when the samples are inconsistent
/// with any quadratic (the measure is not quadratic on the simplex).
QuadraticForm fit_quadratic_form(const MeasureSpec& m, const ReferencePoint& pi,
                                 std::size_t dropped);

/// Closed-form coefficients with dropped index n:
///   rho_jj = gamma (pi_j + pi_n)/(pi_j pi_n), rho_jl = 2 gamma / pi_n.
QuadraticForm theorem1_coefficients(const ReferencePoint& pi, const Rational& gamma);

/// gamma = rho_11 * pi_1 pi_l / (pi_1 + pi_l) where l is the dropped index.
/// Throws MissingCoefficient when the form drops index 1.
Rational derive_gamma(const QuadraticForm& form, const ReferencePoint& pi);

/// Re-expresses the same function of p with a different dropped index,
/// substituting via sum_i (p_i - pi_i) = 0.
QuadraticForm with_dropped_index(const QuadraticForm& form, const ReferencePoint& pi,
                                 std::size_t dropped);

struct Theorem2Result {
  bool constant = false;
  std::vector<std::pair<ReferencePoint, Rational>> gammas;
};

/// Fits a form per reference point, derives gamma_pi for each, and reports
/// whether all gammas agree exactly. Needs at least two reference points.
Theorem2Result verify_theorem2(const MeasureSpec& m,
                               const std::vector<ReferencePoint>& references);

}  // namespace chisq
