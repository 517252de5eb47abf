#pragma once

#include <map>
#include <string>
#include <vector>

#include "chisq/vectors.hpp"

namespace chisq {

/// Pearson statistic: sum_i (s(x) pi_i - x_i)^2 / (s(x) pi_i).
Rational chi2_1(const CountVector& x, const ReferencePoint& pi);

/// chi2_1 / s(x) = sum_i (pi_i - x_i/s(x))^2 / pi_i.
Rational chi2_0(const CountVector& x, const ReferencePoint& pi);

enum class MeasureKind { Chi2_0, Chi2_1, AbsCounter, SqCounter, PhiWeighted };

/// Finite lookup table pi -> phi(pi) > 0.
class PhiTable {
 public:
  PhiTable() = default;

  void set(const ReferencePoint& pi, Rational value);
  const Rational& lookup(const ReferencePoint& pi) const;

  bool operator==(const PhiTable&) const = default;

 private:
  std::map<std::vector<Rational>, Rational> table_;
};

/// Which dissimilarity measure to evaluate. A positive gamma scaling is a
/// field rather than a nested spec, so scalings cannot stack.
class MeasureSpec {
 public:
  static MeasureSpec chi2_0_measure() { return MeasureSpec(MeasureKind::Chi2_0); }
  static MeasureSpec chi2_1_measure() { return MeasureSpec(MeasureKind::Chi2_1); }
  static MeasureSpec abs_counter() { return MeasureSpec(MeasureKind::AbsCounter); }
  static MeasureSpec sq_counter() { return MeasureSpec(MeasureKind::SqCounter); }
  static MeasureSpec phi_weighted(PhiTable phi);
  static MeasureSpec scaled(const Rational& gamma, const MeasureSpec& base);

  MeasureKind kind() const { return kind_; }
  const Rational& gamma() const { return gamma_; }
  const PhiTable& phi() const { return phi_; }
  bool is_scaled() const { return gamma_ != 1; }

  /// Homogeneity degree the measure is declared to satisfy (chi2_1 is
  /// degree 1, everything else here is built from x/s(x)).
  int homogeneity_degree() const { return kind_ == MeasureKind::Chi2_1 ? 1 : 0; }

  std::string name() const;

 private:
  explicit MeasureSpec(MeasureKind kind) : kind_(kind) {}

  MeasureKind kind_;
  Rational gamma_ = 1;
  PhiTable phi_;
};

/// Exact value of the selected measure at (x, pi).
Rational evaluate(const MeasureSpec& m, const CountVector& x, const ReferencePoint& pi);

/// Parses a CLI measure name: chi2_0, chi2_1, abs, sq, phi.
MeasureSpec measure_from_name(const std::string& name, const PhiTable& phi = {});

}  // namespace chisq
