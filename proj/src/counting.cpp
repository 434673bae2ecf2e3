#include "effnum/counting.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "effnum/error.hpp"
#include "effnum/summation.hpp"

namespace effnum {
namespace {

// Checks non-negativity and the sum against `target`; rescales in place when
// asked to. Returns the (possibly rescaled) entries.
std::vector<double> checked(std::vector<double> entries, double target, Normalization mode,
                            double tolerance, ErrorCode code, const char* what) {
  if (entries.empty()) throw Error(code, std::string(what) + " must have at least one entry");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double x = entries[i];
    if (!std::isfinite(x) || x < 0.0) {
      std::ostringstream msg;
      msg << what << " entry " << i << " = " << x << " is not a finite non-negative number";
      throw Error(code, msg.str());
    }
  }
  const double sum = compensated_sum(entries);
  if (std::fabs(sum - target) <= tolerance * target) return entries;
  if (mode == Normalization::rescale && sum > 0.0) {
    for (double& x : entries) x = target * x / sum;
    return entries;
  }
  std::ostringstream msg;
  msg.precision(17);
  msg << what << " sums to " << sum << ", expected " << target;
  throw Error(code, msg.str());
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> entries, Normalization mode,
                                     double tolerance)
    : entries_(checked(std::move(entries), 1.0, mode, tolerance, ErrorCode::invalid_probability,
                       "probability vector")) {}

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_probability, "probability vector must have at least one entry");
  return ProbabilityVector(Trusted{}, std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

CountingVector::CountingVector(std::vector<double> entries, Normalization mode, double tolerance) {
  const auto n = static_cast<double>(entries.size());
  entries_ = checked(std::move(entries), n, mode, tolerance, ErrorCode::invalid_counting,
                     "counting vector");
}

CountingVector CountingVector::uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_counting, "counting vector must have at least one entry");
  return CountingVector(Trusted{}, std::vector<double>(n, 1.0));
}

CountingVector CountingVector::delta(std::size_t n, std::size_t position) {
  if (n == 0) throw Error(ErrorCode::invalid_counting, "counting vector must have at least one entry");
  if (position >= n) throw Error(ErrorCode::invalid_argument, "delta position out of range");
  std::vector<double> w(n, 0.0);
  w[position] = static_cast<double>(n);
  return CountingVector(Trusted{}, std::move(w));
}

CountingVector to_counting(const ProbabilityVector& p) {
  const double n = static_cast<double>(p.size());
  std::vector<double> w(p.entries().begin(), p.entries().end());
  for (double& x : w) x *= n;
  return CountingVector(CountingVector::Trusted{}, std::move(w));
}

ProbabilityVector to_probability(const CountingVector& w) {
  const double n = static_cast<double>(w.size());
  std::vector<double> p(w.entries().begin(), w.entries().end());
  for (double& x : p) x /= n;
  return ProbabilityVector(ProbabilityVector::Trusted{}, std::move(p));
}

CountingVector concat(const CountingVector& w, const CountingVector& b) {
  std::vector<double> out;
  out.reserve(w.size() + b.size());
  out.insert(out.end(), w.entries().begin(), w.entries().end());
  out.insert(out.end(), b.entries().begin(), b.entries().end());
  return CountingVector(CountingVector::Trusted{}, std::move(out));
}

ProbabilityVector compose_probability(const ProbabilityVector& p, const ProbabilityVector& q) {
  const double n = static_cast<double>(p.size());
  const double m = static_cast<double>(q.size());
  const double left = n / (n + m);
  const double right = m / (n + m);
  std::vector<double> out;
  out.reserve(p.size() + q.size());
  for (double x : p.entries()) out.push_back(left * x);
  for (double x : q.entries()) out.push_back(right * x);
  return ProbabilityVector(ProbabilityVector::Trusted{}, std::move(out));
}

CountingVector sort_descending(const CountingVector& w) {
  std::vector<double> out(w.entries().begin(), w.entries().end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return CountingVector(CountingVector::Trusted{}, std::move(out));
}

const char* to_string(Cumulation c) noexcept {
  switch (c) {
    case Cumulation::more_cumulated: return "more-cumulated";
    case Cumulation::less_cumulated: return "less-cumulated";
    case Cumulation::equal: return "equal";
    case Cumulation::incomparable: return "incomparable";
  }
  return "unknown";
}

Cumulation compare_cumulation(const CountingVector& w, const CountingVector& b) {
  if (w.size() != b.size()) {
    std::ostringstream msg;
    msg << "cannot compare counting vectors of lengths " << w.size() << " and " << b.size();
    throw Error(ErrorCode::length_mismatch, msg.str());
  }
  const CountingVector ws = sort_descending(w);
  const CountingVector bs = sort_descending(b);

  bool same = true;
  for (std::size_t k = 0; k < ws.size(); ++k)
    if (std::fabs(ws[k] - bs[k]) > tol::cmp) same = false;
  if (same) return Cumulation::equal;

  // Both totals equal N by the counting-vector invariant, so the last
  // partial sum carries no information and is skipped.
  bool w_dominates = true;
  bool b_dominates = true;
  CompensatedSum sw, sb;
  for (std::size_t k = 0; k + 1 < ws.size(); ++k) {
    sw += ws[k];
    sb += bs[k];
    const double d = sw.value() - sb.value();
    if (d < -tol::cmp) w_dominates = false;
    if (d > tol::cmp) b_dominates = false;
  }
  if (w_dominates && b_dominates) return Cumulation::equal;
  if (w_dominates) return Cumulation::more_cumulated;
  if (b_dominates) return Cumulation::less_cumulated;
  return Cumulation::incomparable;
}

CountingVector elementary_transfer(const CountingVector& w, std::size_t i, std::size_t j,
                                   double epsilon) {
  const auto fail = [&](const char* why) {
    std::ostringstream msg;
    msg << "transfer of " << epsilon << " from entry " << i << " to entry " << j << ": " << why;
    throw Error(ErrorCode::transfer_violation, msg.str());
  };
  if (i >= w.size() || j >= w.size()) fail("index out of range");
  if (i == j) fail("source and target coincide");
  if (w[i] > w[j]) fail("source weight exceeds target weight");
  if (!(epsilon >= 0.0 && epsilon <= w[i])) fail("amount outside [0, w_i]");

  std::vector<double> out(w.entries().begin(), w.entries().end());
  out[i] -= epsilon;
  out[j] += epsilon;
  return CountingVector(CountingVector::Trusted{}, std::move(out));
}

}  // namespace effnum
