#include "chisq/vectors.hpp"

#include <numeric>

namespace chisq {

namespace {

void require_dim(std::size_t n) {
  if (n < 2) throw DimensionMismatch("need at least 2 categories, got " + std::to_string(n));
}

}  // namespace

CountVector::CountVector(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
  require_dim(counts_.size());
  for (auto c : counts_) {
    if (c < 0) throw NegativeEntry("negative count " + std::to_string(c));
  }
}

std::int64_t CountVector::size() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

CountVector CountVector::scaled(std::int64_t lambda) const {
  if (lambda <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<std::int64_t> scaled(counts_);
  for (auto& c : scaled) c *= lambda;
  return CountVector(std::move(scaled));
}

ReferencePoint::ReferencePoint(std::vector<Rational> probs) : probs_(std::move(probs)) {
  require_dim(probs_.size());
  Rational sum = 0;
  for (const auto& p : probs_) {
    if (p <= 0) throw OutOfSimplex("reference probability must be strictly positive");
    sum += p;
  }
  if (sum != 1) throw OutOfSimplex("reference probabilities must sum to 1");
}

SimplexPoint::SimplexPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  require_dim(coords_.size());
  Rational sum = 0;
  for (const auto& c : coords_) {
    if (c < 0) throw OutOfSimplex("simplex coordinate must be non-negative");
    sum += c;
  }
  if (sum != 1) throw OutOfSimplex("simplex coordinates must sum to 1");
}

IntVector::IntVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  require_dim(entries_.size());
}

std::int64_t IntVector::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

CountVector IntVector::to_counts() const {
  for (auto e : entries_) {
    if (e < 0) throw NegativeEntry("entry " + std::to_string(e) + " is negative");
  }
  return CountVector(entries_);
}

SimplexPoint normalize(const CountVector& x) {
  const std::int64_t s = x.size();
  if (s == 0) throw ZeroSize();
  std::vector<Rational> coords;
  coords.reserve(x.dim());
  for (auto c : x.counts()) coords.emplace_back(Int(c), Int(s));
  return SimplexPoint(std::move(coords));
}

std::int64_t lcm_denominators(const ReferencePoint& pi) {
  Int acc = 1;
  for (const auto& p : pi.probs()) {
    Int den = boost::multiprecision::denominator(p);
    acc = boost::multiprecision::lcm(acc, den);
  }
  return acc.convert_to<std::int64_t>();
}

CountVector unit_vector(std::size_t n, std::size_t i) {
  require_dim(n);
  if (i < 1 || i > n) throw IndexOutOfRange("category index " + std::to_string(i));
  std::vector<std::int64_t> counts(n, 0);
  counts[i - 1] = 1;
  return CountVector(std::move(counts));
}

IntVector scaled_reference(const ReferencePoint& pi, std::int64_t k) {
  if (k <= 0) throw std::invalid_argument("k must be positive");
  std::vector<std::int64_t> entries;
  entries.reserve(pi.dim());
  for (const auto& p : pi.probs()) {
    Rational scaled = p * k;
    if (boost::multiprecision::denominator(scaled) != 1) {
      throw NotIntegral("k*pi is not integral for k = " + std::to_string(k));
    }
    entries.push_back(boost::multiprecision::numerator(scaled).convert_to<std::int64_t>());
  }
  return IntVector(std::move(entries));
}

CountVector single_move(const ReferencePoint& pi, std::int64_t k, std::size_t j,
                        std::size_t l) {
  if (j == l) throw EqualIndices();
  if (j < 1 || j > pi.dim() || l < 1 || l > pi.dim()) {
    throw IndexOutOfRange("category index out of range");
  }
  IntVector base = scaled_reference(pi, k);
  std::vector<std::int64_t> entries = base.entries();
  entries[j - 1] += 1;
  entries[l - 1] -= 1;
  return IntVector(std::move(entries)).to_counts();
}

namespace {

IntVector combine(const CountVector& x, const CountVector& y, const IntVector& k_pi,
                  int sign) {
  if (x.dim() != y.dim() || x.dim() != k_pi.dim()) {
    throw DimensionMismatch("combination operands have mismatched dimensions");
  }
  std::vector<std::int64_t> entries(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    entries[i] = x[i] + sign * y[i] - sign * k_pi[i];
  }
  return IntVector(std::move(entries));
}

}  // namespace

IntVector additive_combination(const CountVector& x, const CountVector& y,
                               const IntVector& k_pi) {
  return combine(x, y, k_pi, +1);
}

IntVector subtractive_combination(const CountVector& x, const CountVector& y,
                                  const IntVector& k_pi) {
  return combine(x, y, k_pi, -1);
}

}  // namespace chisq
