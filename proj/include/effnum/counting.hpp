#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "effnum/tolerance.hpp"

namespace effnum {

class CountingVector;

/// What to do with inputs whose sum misses its target by more than the
/// tolerance. `rescale` multiplies every entry by target/sum.
enum class Normalization { reject, rescale };

/// Non-negative probabilities summing to 1.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> entries,
                             Normalization mode = Normalization::reject,
                             double tolerance = tol::norm);

  static ProbabilityVector uniform(std::size_t n);

  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const double> entries() const noexcept { return entries_; }
  double operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const ProbabilityVector&, const ProbabilityVector&) = default;

 private:
  struct Trusted {};
  ProbabilityVector(Trusted, std::vector<double> entries) : entries_(std::move(entries)) {}

  friend ProbabilityVector to_probability(const CountingVector& w);
  friend ProbabilityVector compose_probability(const ProbabilityVector& p,
                                               const ProbabilityVector& q);

  std::vector<double> entries_;
};

/// Counting vector W of N objects: non-negative weights summing to N.
/// This is the domain of every effective number function.
class CountingVector {
 public:
  explicit CountingVector(std::vector<double> entries,
                          Normalization mode = Normalization::reject,
                          double tolerance = tol::norm);

  /// (1, 1, ..., 1)
  static CountingVector uniform(std::size_t n);
  /// n at `position`, zero elsewhere.
  static CountingVector delta(std::size_t n, std::size_t position = 0);

  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const double> entries() const noexcept { return entries_; }
  double operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const CountingVector&, const CountingVector&) = default;

 private:
  struct Trusted {};
  CountingVector(Trusted, std::vector<double> entries) : entries_(std::move(entries)) {}

  friend CountingVector to_counting(const ProbabilityVector& p);
  friend CountingVector concat(const CountingVector& w, const CountingVector& b);
  friend CountingVector sort_descending(const CountingVector& w);
  friend CountingVector elementary_transfer(const CountingVector& w, std::size_t i,
                                            std::size_t j, double epsilon);

  std::vector<double> entries_;
};

/// W = N P.
CountingVector to_counting(const ProbabilityVector& p);
/// P = W / N.
ProbabilityVector to_probability(const CountingVector& w);

/// W ⊞ B: entries of w followed by entries of b.
CountingVector concat(const CountingVector& w, const CountingVector& b);

/// Probability of the combined system of sizes N and M:
/// (N/(N+M)) p followed by (M/(N+M)) q.
ProbabilityVector compose_probability(const ProbabilityVector& p, const ProbabilityVector& q);

CountingVector sort_descending(const CountingVector& w);

enum class Cumulation { more_cumulated, less_cumulated, equal, incomparable };

const char* to_string(Cumulation c) noexcept;

/// Majorization comparison of w against b. Both are sorted (copies) in
/// decreasing order and their partial sums compared; w is more cumulated
/// when its partial sums dominate those of b everywhere.
///
/// Throws Error(length_mismatch) if the lengths differ.
Cumulation compare_cumulation(const CountingVector& w, const CountingVector& b);

/// Moves `epsilon` of weight from entry i to entry j, which requires
/// w[i] <= w[j] and 0 <= epsilon <= w[i]; the result is never less
/// cumulated than w.
///
/// Throws Error(transfer_violation) when the preconditions fail or i == j.
CountingVector elementary_transfer(const CountingVector& w, std::size_t i, std::size_t j,
                                   double epsilon);

}  // namespace effnum
