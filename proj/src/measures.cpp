#include "chisq/measures.hpp"

namespace chisq {

namespace {

void require_match(const CountVector& x, const ReferencePoint& pi) {
  if (x.dim() != pi.dim()) {
    throw DimensionMismatch("observed has " + std::to_string(x.dim()) +
                            " categories, reference has " + std::to_string(pi.dim()));
  }
  if (x.size() == 0) throw ZeroSize();
}

}  // namespace

Rational chi2_1(const CountVector& x, const ReferencePoint& pi) {
  require_match(x, pi);
  const Int s = x.size();
  Rational total = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    Rational expected = pi[i] * s;
    Rational diff = expected - x[i];
    total += diff * diff / expected;
  }
  return total;
}

Rational chi2_0(const CountVector& x, const ReferencePoint& pi) {
  return chi2_1(x, pi) / x.size();
}

void PhiTable::set(const ReferencePoint& pi, Rational value) {
  if (value <= 0) throw std::invalid_argument("phi values must be positive");
  table_[pi.probs()] = std::move(value);
}

const Rational& PhiTable::lookup(const ReferencePoint& pi) const {
  auto it = table_.find(pi.probs());
  if (it == table_.end()) {
    throw PhiUndefined("phi table has no entry for the given reference point");
  }
  return it->second;
}

MeasureSpec MeasureSpec::phi_weighted(PhiTable phi) {
  MeasureSpec m(MeasureKind::PhiWeighted);
  m.phi_ = std::move(phi);
  return m;
}

MeasureSpec MeasureSpec::scaled(const Rational& gamma, const MeasureSpec& base) {
  if (gamma <= 0) throw std::invalid_argument("gamma must be positive");
  if (base.is_scaled()) throw std::invalid_argument("scalings cannot be nested");
  MeasureSpec m = base;
  m.gamma_ = gamma;
  return m;
}

std::string MeasureSpec::name() const {
  std::string base;
  switch (kind_) {
    case MeasureKind::Chi2_0: base = "chi2_0"; break;
    case MeasureKind::Chi2_1: base = "chi2_1"; break;
    case MeasureKind::AbsCounter: base = "abs"; break;
    case MeasureKind::SqCounter: base = "sq"; break;
    case MeasureKind::PhiWeighted: base = "phi"; break;
  }
  if (gamma_ != 1) base = format_rational(gamma_) + "*" + base;
  return base;
}

Rational evaluate(const MeasureSpec& m, const CountVector& x, const ReferencePoint& pi) {
  require_match(x, pi);
  const Int s = x.size();
  Rational value = 0;
  switch (m.kind()) {
    case MeasureKind::Chi2_0:
      value = chi2_0(x, pi);
      break;
    case MeasureKind::Chi2_1:
      value = chi2_1(x, pi);
      break;
    case MeasureKind::AbsCounter:
      for (std::size_t i = 0; i < x.dim(); ++i) {
        Rational diff = pi[i] - Rational(Int(x[i]), s);
        value += abs(diff) / pi[i];
      }
      break;
    case MeasureKind::SqCounter:
      for (std::size_t i = 0; i < x.dim(); ++i) {
        Rational diff = pi[i] - Rational(Int(x[i]), s);
        value += diff * diff;
      }
      break;
    case MeasureKind::PhiWeighted:
      value = m.phi().lookup(pi) * chi2_0(x, pi);
      break;
  }
  return m.gamma() * value;
}

MeasureSpec measure_from_name(const std::string& name, const PhiTable& phi) {
  if (name == "chi2_0") return MeasureSpec::chi2_0_measure();
  if (name == "chi2_1") return MeasureSpec::chi2_1_measure();
  if (name == "abs") return MeasureSpec::abs_counter();
  if (name == "sq") return MeasureSpec::sq_counter();
  if (name == "phi") return MeasureSpec::phi_weighted(phi);
  throw std::invalid_argument("unknown measure \"" + name + "\"");
}

}  // namespace chisq
