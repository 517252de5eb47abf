#include "chisq/reconstruction.hpp"

#include <algorithm>
#include <functional>

namespace chisq {

Segment::Segment(SimplexPoint from, SimplexPoint to)
    : from_(std::move(from)), to_(std::move(to)) {
  if (from_.dim() != to_.dim()) {
    throw DimensionMismatch("segment endpoints have mismatched dimensions");
  }
  if (from_ == to_) throw std::invalid_argument("segment endpoints must be distinct");
}

SimplexPoint Segment::at(const Rational& alpha) const {
  if (alpha < 0 || alpha > 1) {
    throw DomainExceeded("segment parameter " + format_rational(alpha) +
                         " outside [0, 1]");
  }
  std::vector<Rational> coords(from_.dim());
  for (std::size_t i = 0; i < from_.dim(); ++i) {
    coords[i] = alpha * to_[i] + (1 - alpha) * from_[i];
  }
  return SimplexPoint(std::move(coords));
}

Rational QuadraticForm::eval(const SimplexPoint& p, const ReferencePoint& pi) const {
  std::vector<Rational> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = p[i] - pi[i];
  Rational value = constant;
  for (const auto& [i, rho] : diag) value += rho * u[i - 1] * u[i - 1];
  for (const auto& [ij, rho] : cross) value += rho * u[ij.first - 1] * u[ij.second - 1];
  for (const auto& [i, rho] : linear) value += rho * u[i - 1];
  return value;
}

Rational degree0_at(const MeasureSpec& m, const ReferencePoint& pi, const SimplexPoint& p) {
  Int scale = 1;
  for (const auto& c : p.coords()) {
    scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(c));
  }
  std::vector<std::int64_t> counts;
  counts.reserve(p.dim());
  for (const auto& c : p.coords()) {
    counts.push_back(Int(c * scale).convert_to<std::int64_t>());
  }
  CountVector x(std::move(counts));
  Rational value = evaluate(m, x, pi);
  if (m.homogeneity_degree() == 1) value /= x.size();
  return value;
}

Rational segment_restriction(const MeasureSpec& m, const ReferencePoint& pi,
                             const Segment& seg, const Rational& alpha) {
  return degree0_at(m, pi, seg.at(alpha));
}

ParabolaCoeffs fit_parabola_three_points(const Rational& l0, const Rational& lhalf,
                                         const Rational& l1) {
  ParabolaCoeffs c;
  c.d = l0;
  c.a = 2 * l0 - 4 * lhalf + 2 * l1;
  c.b = -3 * l0 + 4 * lhalf - l1;
  return c;
}

bool verify_parabola_recurrence(const MeasureSpec& measure, const ReferencePoint& pi,
                                const Segment& seg, const Rational& c,
                                std::int64_t m_max) {
  if (c <= 0 || c > Rational(1, 2)) {
    throw DomainExceeded("c must lie in (0, 1/2]");
  }
  if (m_max < 0 || Rational(m_max) * c > 1) {
    throw DomainExceeded("m_max * c exceeds the segment domain");
  }
  auto L = [&](const Rational& beta) { return segment_restriction(measure, pi, seg, beta); };

  if (m_max < 2) return true;  // m = 0 and m = 1 hold identically

  const Rational bracket = L(Rational(1, 2) - c) + L(Rational(1, 2) + c);
  const Rational l0 = L(0);
  const Rational lc = L(c);
  const Rational delta = L(2 * c) - 2 * lc + l0 - bracket;

  for (std::int64_t m = 0; m <= m_max; ++m) {
    Rational expected = m * lc + (1 - Rational(m)) * l0 +
                        Rational(m * (m - 1), 2) * (bracket + delta);
    if (L(Rational(m) * c) != expected) return false;
  }
  return true;
}

namespace {

SimplexPoint combine_simplex(const SimplexPoint& p, const SimplexPoint& q,
                             const ReferencePoint& pi, int sign) {
  if (p.dim() != q.dim() || p.dim() != pi.dim()) {
    throw DimensionMismatch("functional-equation operands have mismatched dimensions");
  }
  std::vector<Rational> coords(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    coords[i] = p[i] + sign * q[i] - sign * pi[i];
  }
  return SimplexPoint(std::move(coords));  // throws OutOfSimplex if negative
}

}  // namespace

bool check_simplex_functional_equation(const MeasureSpec& m, const ReferencePoint& pi,
                                       const SimplexPoint& p, const SimplexPoint& q) {
  SimplexPoint plus = combine_simplex(p, q, pi, +1);
  SimplexPoint minus = combine_simplex(p, q, pi, -1);
  Rational lhs = degree0_at(m, pi, plus) + degree0_at(m, pi, minus);
  Rational rhs = 2 * (degree0_at(m, pi, p) + degree0_at(m, pi, q));
  return lhs == rhs;
}

namespace {

/// Displacement vectors d with entries in [-2, 2] summing to 0; the sample
/// grid is p = (K*pi + d)/K, rich enough to pin every monomial of a full
/// quadratic in the n-1 free coordinates.
std::vector<std::vector<int>> displacement_grid(std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> d(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int sum) {
    if (pos == n) {
      if (sum == 0) out.push_back(d);
      return;
    }
    for (int v = -2; v <= 2; ++v) {
      d[pos] = v;
      rec(pos + 1, sum + v);
    }
  };
  rec(0, 0);
  return out;
}

/// Solves the exact overdetermined system rows * sol = rhs by Gaussian
/// elimination; throws SingularSystem when rank-deficient or inconsistent.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> rows,
                                  std::vector<Rational> rhs, std::size_t unknowns) {
  const std::size_t m = rows.size();
  std::vector<std::size_t> pivot_row(unknowns);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns && rank < m; ++col) {
    std::size_t pr = m;
    for (std::size_t r = rank; r < m; ++r) {
      if (rows[r][col] != 0) {
        pr = r;
        break;
      }
    }
    if (pr == m) {
      throw SingularSystem("sample grid leaves coefficient " + std::to_string(col) +
                           " undetermined");
    }
    std::swap(rows[rank], rows[pr]);
    std::swap(rhs[rank], rhs[pr]);
    const Rational inv = 1 / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    rhs[rank] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t cc = 0; cc < unknowns; ++cc) rows[r][cc] -= factor * rows[rank][cc];
      rhs[r] -= factor * rhs[rank];
    }
    pivot_row[col] = rank;
    ++rank;
  }
  if (rank < unknowns) throw SingularSystem("sample system is rank deficient");
  for (std::size_t r = rank; r < m; ++r) {
    if (rhs[r] != 0) {
      throw SingularSystem("samples are inconsistent with a quadratic form");
    }
  }
  std::vector<Rational> sol(unknowns);
  for (std::size_t col = 0; col < unknowns; ++col) sol[col] = rhs[pivot_row[col]];
  return sol;
}

}  // namespace

QuadraticForm fit_quadratic_form(const MeasureSpec& m, const ReferencePoint& pi,
                                 std::size_t dropped) {
  const std::size_t n = pi.dim();
  if (dropped < 1 || dropped > n) throw IndexOutOfRange("dropped index out of range");

  std::vector<std::size_t> free_idx;  // 1-based
  for (std::size_t i = 1; i <= n; ++i) {
    if (i != dropped) free_idx.push_back(i);
  }
  const std::size_t nf = free_idx.size();
  // Unknown layout: diag, cross (i < j), linear, constant.
  const std::size_t unknowns = nf + nf * (nf - 1) / 2 + nf + 1;

  const std::int64_t scale = 4 * lcm_denominators(pi);
  std::vector<SimplexPoint> samples;
  std::vector<Rational> base = pi.probs();
  samples.emplace_back(base);
  for (const auto& d : displacement_grid(n)) {
    std::vector<Rational> coords(n);
    bool all_zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      coords[i] = base[i] + Rational(d[i], scale);
      if (d[i] != 0) all_zero = false;
    }
    if (!all_zero) samples.emplace_back(std::move(coords));
  }

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  rows.reserve(samples.size());
  for (const auto& p : samples) {
    std::vector<Rational> u(nf);
    for (std::size_t a = 0; a < nf; ++a) u[a] = p[free_idx[a] - 1] - pi[free_idx[a] - 1];
    std::vector<Rational> row;
    row.reserve(unknowns);
    for (std::size_t a = 0; a < nf; ++a) row.push_back(u[a] * u[a]);
    for (std::size_t a = 0; a < nf; ++a) {
      for (std::size_t b = a + 1; b < nf; ++b) row.push_back(u[a] * u[b]);
    }
    for (std::size_t a = 0; a < nf; ++a) row.push_back(u[a]);
    row.emplace_back(1);
    rows.push_back(std::move(row));
    rhs.push_back(degree0_at(m, pi, p));
  }

  const auto sol = solve_exact(std::move(rows), std::move(rhs), unknowns);

  QuadraticForm form;
  form.n = n;
  form.dropped = dropped;
  std::size_t next = 0;
  for (std::size_t a = 0; a < nf; ++a) form.diag[free_idx[a]] = sol[next++];
  for (std::size_t a = 0; a < nf; ++a) {
    for (std::size_t b = a + 1; b < nf; ++b) {
      form.cross[{free_idx[a], free_idx[b]}] = sol[next++];
    }
  }
  for (std::size_t a = 0; a < nf; ++a) form.linear[free_idx[a]] = sol[next++];
  form.constant = sol[next++];
  return form;
}

QuadraticForm theorem1_coefficients(const ReferencePoint& pi, const Rational& gamma) {
  if (gamma <= 0) throw std::invalid_argument("gamma must be positive");
  const std::size_t n = pi.dim();
  QuadraticForm form;
  form.n = n;
  form.dropped = n;
  const Rational pi_n = pi[n - 1];
  for (std::size_t j = 1; j < n; ++j) {
    form.diag[j] = gamma * (pi[j - 1] + pi_n) / (pi[j - 1] * pi_n);
    form.linear[j] = 0;
    for (std::size_t l = j + 1; l < n; ++l) form.cross[{j, l}] = 2 * gamma / pi_n;
  }
  form.constant = 0;
  return form;
}

Rational derive_gamma(const QuadraticForm& form, const ReferencePoint& pi) {
  if (form.dropped == 1 || form.diag.find(1) == form.diag.end()) {
    throw MissingCoefficient("rho_11 is not present in the fitted form");
  }
  const Rational& rho11 = form.diag.at(1);
  const Rational& pi1 = pi[0];
  const Rational& pil = pi[form.dropped - 1];
  return rho11 * pi1 * pil / (pi1 + pil);
}

QuadraticForm with_dropped_index(const QuadraticForm& form, const ReferencePoint& pi,
                                 std::size_t dropped) {
  const std::size_t n = form.n;
  if (dropped < 1 || dropped > n) throw IndexOutOfRange("dropped index out of range");
  if (dropped == form.dropped) return form;

  // Full symmetric-matrix view over all n shifted coordinates, with the
  // old dropped coordinate unused.
  std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n, Rational(0)));
  std::vector<Rational> lin(n, Rational(0));
  for (const auto& [i, rho] : form.diag) mat[i - 1][i - 1] = rho;
  for (const auto& [ij, rho] : form.cross) {
    mat[ij.first - 1][ij.second - 1] = rho / 2;
    mat[ij.second - 1][ij.first - 1] = rho / 2;
  }
  for (const auto& [i, rho] : form.linear) lin[i - 1] = rho;

  // Substitution u_v = sum_w T[v][w] * u~_w where u~ ranges over the new
  // free coordinates; uses sum of all shifted coordinates = 0.
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t v = 0; v < n; ++v) {
    if (v + 1 == form.dropped) continue;
    if (v + 1 != dropped) {
      t[v][v] = 1;
    } else {
      for (std::size_t w = 0; w < n; ++w) {
        if (w + 1 != dropped) t[v][w] = -1;
      }
    }
  }

  std::vector<std::vector<Rational>> tmp(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) tmp[a][b] += mat[a][c] * t[c][b];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) out[a][b] += t[c][a] * tmp[c][b];
    }
  }
  std::vector<Rational> new_lin(n, Rational(0));
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) new_lin[b] += t[c][b] * lin[c];
  }

  QuadraticForm result;
  result.n = n;
  result.dropped = dropped;
  result.constant = form.constant;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == dropped) continue;
    result.diag[i] = out[i - 1][i - 1];
    result.linear[i] = new_lin[i - 1];
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (j == dropped) continue;
      result.cross[{i, j}] = 2 * out[i - 1][j - 1];
    }
  }
  return result;
}

Theorem2Result verify_theorem2(const MeasureSpec& m,
                               const std::vector<ReferencePoint>& references) {
  if (references.size() < 2) {
    throw std::invalid_argument("theorem 2 needs at least two reference points");
  }
  Theorem2Result result;
  result.constant = true;
  for (const auto& pi : references) {
    QuadraticForm form = fit_quadratic_form(m, pi, pi.dim());
    result.gammas.emplace_back(pi, derive_gamma(form, pi));
  }
  for (const auto& [pi, gamma] : result.gammas) {
    if (gamma != result.gammas.front().second) result.constant = false;
  }
  return result;
}

}  // namespace chisq
