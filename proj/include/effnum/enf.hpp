#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "effnum/counting.hpp"

namespace effnum {

/// An effective count together with the nominal size N it refers to.
struct EffectiveNumber {
  double value = 0.0;
  std::size_t n = 0;

  friend bool operator==(const EffectiveNumber&, const EffectiveNumber&) = default;
};

/// Minimal effective number function: sum over entries of min(w_i, 1).
/// It is additive under concatenation and is the smallest value any
/// effective number function can assign to w.
EffectiveNumber n_star(const CountingVector& w);

/// Number of entries above tol::zero. An upper envelope of all effective
/// number functions, but discontinuous, so not one itself.
double support_count(const CountingVector& w);

/// 1 / sum p_i^2 with p = w / N.
double participation_number(const CountingVector& w);

/// exp(-sum p_i ln p_i) with 0 ln 0 = 0.
double exp_shannon(const CountingVector& w);

/// (sum p_i^alpha)^(1/(1-alpha)). Orders within tol::renyi_shannon of 1 use
/// the Shannon limit. Throws Error(bad_order) unless alpha > 0 and alpha != 1.
double exp_renyi(const CountingVector& w, double alpha);

/// True when the interval [n_star(w), support_count(w)] of admissible
/// effective numbers collapses to a point, i.e. no entry lies in (0, 1)
/// (resolved with tol::zero at both ends).
bool admissible_interval_collapses(const CountingVector& w);

enum class QuantifierKind {
  minimal_enf,
  support_count,
  participation_number,
  exp_shannon,
  exp_renyi,
};

/// One of the built-in effective-number-like quantifiers.
class QuantifierDescriptor {
 public:
  static QuantifierDescriptor minimal_enf() { return QuantifierDescriptor(QuantifierKind::minimal_enf); }
  static QuantifierDescriptor support_count() { return QuantifierDescriptor(QuantifierKind::support_count); }
  static QuantifierDescriptor participation_number() {
    return QuantifierDescriptor(QuantifierKind::participation_number);
  }
  static QuantifierDescriptor exp_shannon() { return QuantifierDescriptor(QuantifierKind::exp_shannon); }
  static QuantifierDescriptor exp_renyi(double alpha);

  /// Builds a descriptor from its name ("minimal_enf", "support_count",
  /// "participation_number", "exp_shannon", "exp_renyi"). `alpha` is
  /// required for exp_renyi and ignored otherwise.
  /// Throws Error(unknown_quantifier) or Error(bad_order).
  static QuantifierDescriptor parse(std::string_view name, std::optional<double> alpha = std::nullopt);

  QuantifierKind kind() const noexcept { return kind_; }
  std::optional<double> alpha() const noexcept { return alpha_; }

  /// Name as accepted by parse(); exp_renyi carries its order, e.g. "exp_renyi(2)".
  std::string label() const;

 private:
  explicit QuantifierDescriptor(QuantifierKind kind, std::optional<double> alpha = std::nullopt)
      : kind_(kind), alpha_(alpha) {}

  QuantifierKind kind_;
  std::optional<double> alpha_;
};

const char* to_string(QuantifierKind kind) noexcept;

double evaluate(const QuantifierDescriptor& q, const CountingVector& w);

}  // namespace effnum
