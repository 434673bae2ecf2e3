#include "effnum/enf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "effnum/error.hpp"
#include "effnum/summation.hpp"

namespace effnum {

EffectiveNumber n_star(const CountingVector& w) {
  CompensatedSum acc;
  for (double x : w.entries()) acc += std::min(x, 1.0);
  return {acc.value(), w.size()};
}

double support_count(const CountingVector& w) {
  const auto count = std::count_if(w.entries().begin(), w.entries().end(),
                                   [](double x) { return x > tol::zero; });
  return static_cast<double>(count);
}

double participation_number(const CountingVector& w) {
  const double n = static_cast<double>(w.size());
  CompensatedSum acc;
  for (double x : w.entries()) {
    const double p = x / n;
    acc += p * p;
  }
  const double s = acc.value();
  if (!(s > 0.0)) throw Error(ErrorCode::degenerate_input, "all weights are zero");
  return 1.0 / s;
}

double exp_shannon(const CountingVector& w) {
  const double n = static_cast<double>(w.size());
  CompensatedSum entropy;
  for (double x : w.entries()) {
    if (x <= 0.0) continue;
    const double p = x / n;
    entropy += -p * std::log(p);
  }
  return std::exp(entropy.value());
}

double exp_renyi(const CountingVector& w, double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha)) {
    std::ostringstream msg;
    msg << "Renyi order must be positive, finite and different from 1, got " << alpha;
    throw Error(ErrorCode::bad_order, msg.str());
  }
  if (std::fabs(alpha - 1.0) < tol::renyi_shannon) return exp_shannon(w);

  const double n = static_cast<double>(w.size());
  CompensatedSum acc;
  for (double x : w.entries()) {
    if (x <= 0.0) continue;  // p^alpha -> 0 for every alpha > 0
    acc += std::pow(x / n, alpha);
  }
  return std::pow(acc.value(), 1.0 / (1.0 - alpha));
}

bool admissible_interval_collapses(const CountingVector& w) {
  return std::all_of(w.entries().begin(), w.entries().end(),
                     [](double x) { return x <= tol::zero || x >= 1.0 - tol::zero; });
}

QuantifierDescriptor QuantifierDescriptor::exp_renyi(double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha)) {
    std::ostringstream msg;
    msg << "Renyi order must be positive, finite and different from 1, got " << alpha;
    throw Error(ErrorCode::bad_order, msg.str());
  }
  return QuantifierDescriptor(QuantifierKind::exp_renyi, alpha);
}

QuantifierDescriptor QuantifierDescriptor::parse(std::string_view name, std::optional<double> alpha) {
  if (name == "minimal_enf" || name == "n_star") return minimal_enf();
  if (name == "support_count") return support_count();
  if (name == "participation_number" || name == "participation") return participation_number();
  if (name == "exp_shannon") return exp_shannon();
  if (name == "exp_renyi") {
    if (!alpha) throw Error(ErrorCode::bad_order, "exp_renyi requires an order alpha");
    return exp_renyi(*alpha);
  }
  throw Error(ErrorCode::unknown_quantifier, "unknown quantifier '" + std::string(name) + "'");
}

std::string QuantifierDescriptor::label() const {
  if (kind_ != QuantifierKind::exp_renyi) return to_string(kind_);
  std::ostringstream out;
  out << "exp_renyi(" << *alpha_ << ")";
  return out.str();
}

const char* to_string(QuantifierKind kind) noexcept {
  switch (kind) {
    case QuantifierKind::minimal_enf: return "minimal_enf";
    case QuantifierKind::support_count: return "support_count";
    case QuantifierKind::participation_number: return "participation_number";
    case QuantifierKind::exp_shannon: return "exp_shannon";
    case QuantifierKind::exp_renyi: return "exp_renyi";
  }
  return "unknown";
}

double evaluate(const QuantifierDescriptor& q, const CountingVector& w) {
  switch (q.kind()) {
    case QuantifierKind::minimal_enf: return n_star(w).value;
    case QuantifierKind::support_count: return support_count(w);
    case QuantifierKind::participation_number: return participation_number(w);
    case QuantifierKind::exp_shannon: return exp_shannon(w);
    case QuantifierKind::exp_renyi: return exp_renyi(w, *q.alpha());
  }
  throw Error(ErrorCode::unknown_quantifier, "unhandled quantifier kind");
}

}  // namespace effnum
