#pragma once

#include <cstdint>
#include <vector>

#include "chisq/errors.hpp"
#include "chisq/rational.hpp"

namespace chisq {

/// Observed distribution x: non-negative counts over n >= 2 categories.
class CountVector {
 public:
  explicit CountVector(std::vector<std::int64_t> counts);

  std::size_t dim() const { return counts_.size(); }
  std::int64_t operator[](std::size_t i) const { return counts_[i]; }
  const std::vector<std::int64_t>& counts() const { return counts_; }

  /// s(x) = sum of all counts.
  std::int64_t size() const;

  CountVector scaled(std::int64_t lambda) const;

  bool operator==(const CountVector&) const = default;
  auto operator<=>(const CountVector&) const = default;

 private:
  std::vector<std::int64_t> counts_;
};

/// Reference distribution pi: strictly positive rationals summing to 1.
class ReferencePoint {
 public:
  explicit ReferencePoint(std::vector<Rational> probs);

  std::size_t dim() const { return probs_.size(); }
  const Rational& operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<Rational>& probs() const { return probs_; }

  bool operator==(const ReferencePoint&) const = default;
  bool operator<(const ReferencePoint& other) const { return probs_ < other.probs_; }

 private:
  std::vector<Rational> probs_;
};

/// Point of the closed rational simplex; zero coordinates are allowed
/// (x/s(x) can hit the boundary even though reference points cannot).
class SimplexPoint {
 public:
  explicit SimplexPoint(std::vector<Rational> coords);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool operator==(const SimplexPoint&) const = default;

 private:
  std::vector<Rational> coords_;
};

/// Unconstrained integer vector, used for intermediate combinations such
/// as k*pi and x+y-k*pi before non-negativity is established.
class IntVector {
 public:
  explicit IntVector(std::vector<std::int64_t> entries);

  std::size_t dim() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  std::int64_t sum() const;

  /// Converts to counts; throws NegativeEntry if any entry is negative.
  CountVector to_counts() const;

  bool operator==(const IntVector&) const = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// p = x/s(x). Throws ZeroSize when s(x) = 0.
SimplexPoint normalize(const CountVector& x);

/// Smallest k0 >= 1 with k0*pi integral; every integral k is a multiple.
std::int64_t lcm_denominators(const ReferencePoint& pi);

/// The vector 1^i (1-based category index i).
CountVector unit_vector(std::size_t n, std::size_t i);

/// k*pi as integers. Throws NotIntegral unless k is a multiple of
/// lcm_denominators(pi).
IntVector scaled_reference(const ReferencePoint& pi, std::int64_t k);

/// k*pi + 1^j - 1^l (1-based j != l). Throws NegativeEntry if a count
/// would go negative.
CountVector single_move(const ReferencePoint& pi, std::int64_t k, std::size_t j,
                        std::size_t l);

/// x + y - k*pi and x - y + k*pi as (possibly negative) integer vectors.
IntVector additive_combination(const CountVector& x, const CountVector& y,
                               const IntVector& k_pi);
IntVector subtractive_combination(const CountVector& x, const CountVector& y,
                                  const IntVector& k_pi);

}  // namespace chisq
