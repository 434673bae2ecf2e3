#include "effnum/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "effnum/error.hpp"
#include "effnum/summation.hpp"
#include "effnum/tolerance.hpp"

namespace effnum {
namespace {

constexpr std::uint64_t stream_of(Axiom a) { return static_cast<std::uint64_t>(a) + 1; }
constexpr std::uint64_t gen_call_stream = 0x100;

// ‖w − w′‖₁ for the continuity probes, coarsest first.
constexpr std::array<double, 7> continuity_steps = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};

class ReportBuilder {
 public:
  explicit ReportBuilder(Axiom axiom) { report_.axiom = axiom; }

  void trial() { ++report_.trials; }

  void violation(std::vector<std::vector<double>> inputs, double lhs, double rhs,
                 double discrepancy, double tolerance) {
    ++report_.violation_count;
    if (report_.violations.size() < max_recorded_violations)
      report_.violations.push_back({std::move(inputs), lhs, rhs, discrepancy, tolerance});
  }

  AxiomReport finish(bool sampled = false) {
    report_.passed = report_.violation_count == 0;
    report_.sampled_evidence = sampled;
    return std::move(report_);
  }

 private:
  AxiomReport report_;
};

std::vector<double> copy_of(const CountingVector& w) { return {w.entries().begin(), w.entries().end()}; }

std::size_t argmax(const CountingVector& w) {
  const auto e = w.entries();
  return static_cast<std::size_t>(std::max_element(e.begin(), e.end()) - e.begin());
}

// Random index in [0, n) different from `other`; n >= 2.
std::size_t other_index(Rng& rng, std::size_t n, std::size_t other) {
  std::size_t k = rng.below(n - 1);
  return k >= other ? k + 1 : k;
}

double length_tolerance(std::size_t n) { return tol::axiom * static_cast<double>(n); }

}  // namespace

std::string_view label(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::additivity: return "A";
    case Axiom::monotonicity: return "M_minus";
    case Axiom::symmetry: return "S";
    case Axiom::continuity: return "C";
    case Axiom::uniform_boundary: return "B1";
    case Axiom::delta_boundary: return "B2";
    case Axiom::bounds: return "B";
  }
  return "?";
}

void GeneratorConfig::validate() const {
  std::ostringstream msg;
  if (max_n < 2) msg << "max_n must be at least 2 (got " << max_n << ")";
  else if (trials_per_axiom < 1) msg << "trials_per_axiom must be positive";
  else if (!(sparsity >= 0.0 && sparsity <= 1.0)) msg << "sparsity must lie in [0, 1] (got " << sparsity << ")";
  else return;
  throw Error(ErrorCode::invalid_argument, msg.str());
}

VectorGenerator::VectorGenerator(const GeneratorConfig& cfg, std::uint64_t stream)
    : cfg_(cfg), rng_(derive_stream_seed(cfg.seed, stream)) {
  cfg_.validate();
}

CountingVector VectorGenerator::next(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "vector length must be positive");
  const double power = 0.25 + 2.75 * rng_.uniform();
  std::vector<double> raw(n);
  for (double& x : raw) {
    const double e = -std::log1p(-rng_.uniform());
    x = std::pow(e, power);
    if (rng_.uniform() < cfg_.sparsity) x = 0.0;
  }
  double sum = compensated_sum(raw);
  if (!(sum > 0.0)) {
    raw[rng_.below(n)] = 1.0;
    sum = 1.0;
  }
  const double target = static_cast<double>(n);
  for (double& x : raw) x = target * x / sum;
  return CountingVector(std::move(raw));
}

CountingVector VectorGenerator::next_collapsed(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "vector length must be positive");
  const std::size_t k = 1 + rng_.below(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) std::swap(order[i], order[i + rng_.below(n - i)]);

  std::vector<double> share(k);
  for (double& s : share) s = rng_.uniform();
  double total = compensated_sum(share);
  if (!(total > 0.0)) {
    std::fill(share.begin(), share.end(), 1.0);
    total = static_cast<double>(k);
  }
  const double extra = static_cast<double>(n - k);
  std::vector<double> w(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) w[order[i]] = 1.0 + extra * share[i] / total;
  return CountingVector(std::move(w));
}

std::size_t VectorGenerator::size(std::size_t min_n) {
  return min_n + rng_.below(cfg_.max_n - min_n + 1);
}

CountingVector gen_counting_vector(const GeneratorConfig& cfg, std::size_t n, std::uint64_t call_index) {
  cfg.validate();
  if (n == 0 || n > cfg.max_n) {
    std::ostringstream msg;
    msg << "vector length " << n << " outside [1, " << cfg.max_n << "]";
    throw Error(ErrorCode::invalid_argument, msg.str());
  }
  return VectorGenerator(cfg, gen_call_stream + call_index).next(n);
}

AxiomReport check_additivity(const QuantifierDescriptor& q, const GeneratorConfig& cfg) {
  VectorGenerator gen(cfg, stream_of(Axiom::additivity));
  ReportBuilder report(Axiom::additivity);
  for (std::size_t t = 0; t < cfg.trials_per_axiom; ++t) {
    const std::size_t n = gen.size();
    const std::size_t m = gen.size();
    const CountingVector w = gen.next(n);
    const CountingVector b = gen.next(m);
    const double lhs = evaluate(q, concat(w, b));
    const double rhs = evaluate(q, w) + evaluate(q, b);
    const double d = std::fabs(lhs - rhs);
    const double tolerance = length_tolerance(n + m);
    report.trial();
    if (d > tolerance) report.violation({copy_of(w), copy_of(b)}, lhs, rhs, d, tolerance);
  }
  return report.finish();
}

AxiomReport check_monotonicity(const QuantifierDescriptor& q, const GeneratorConfig& cfg) {
  VectorGenerator gen(cfg, stream_of(Axiom::monotonicity));
  Rng& rng = gen.rng();
  ReportBuilder report(Axiom::monotonicity);
  for (std::size_t t = 0; t < cfg.trials_per_axiom; ++t) {
    const std::size_t n = gen.size(2);
    const CountingVector w = gen.next(n);
    std::size_t i = rng.below(n);
    std::size_t j = other_index(rng, n, i);
    if (w[i] > w[j]) std::swap(i, j);
    // Every eighth trial probes each end of the admissible range exactly.
    double epsilon = rng.uniform() * w[i];
    if (t % 8 == 0) epsilon = 0.0;
    if (t % 8 == 1) epsilon = w[i];

    const CountingVector moved = elementary_transfer(w, i, j, epsilon);
    const double lhs = evaluate(q, moved);
    const double rhs = evaluate(q, w);
    const double tolerance = length_tolerance(n);
    report.trial();
    if (lhs - rhs > tolerance) report.violation({copy_of(w), copy_of(moved)}, lhs, rhs, lhs - rhs, tolerance);
  }
  return report.finish();
}

AxiomReport check_symmetry(const QuantifierDescriptor& q, const GeneratorConfig& cfg) {
  VectorGenerator gen(cfg, stream_of(Axiom::symmetry));
  Rng& rng = gen.rng();
  ReportBuilder report(Axiom::symmetry);
  for (std::size_t t = 0; t < cfg.trials_per_axiom; ++t) {
    const std::size_t n = gen.size(2);
    const CountingVector w = gen.next(n);
    const std::size_t i = rng.below(n);
    const std::size_t j = other_index(rng, n, i);
    std::vector<double> swapped = copy_of(w);
    std::swap(swapped[i], swapped[j]);
    const CountingVector ws(swapped);

    const double lhs = evaluate(q, w);
    const double rhs = evaluate(q, ws);
    const double d = std::fabs(lhs - rhs);
    const double tolerance = length_tolerance(n);
    report.trial();
    if (d > tolerance) report.violation({copy_of(w), std::move(swapped)}, lhs, rhs, d, tolerance);
  }
  return report.finish();
}

// Each trial moves weight δ/2 out of the largest entry into another one, for
// a decreasing ladder of δ. Even trials first empty the receiving entry, so
// the probe crosses the boundary of the simplex where support-type
// quantifiers jump. A trial fails when the change at the finest δ is still a
// jump (> tol::jump) or has not at least halved relative to the coarsest δ.
AxiomReport check_continuity(const QuantifierDescriptor& q, const GeneratorConfig& cfg) {
  VectorGenerator gen(cfg, stream_of(Axiom::continuity));
  Rng& rng = gen.rng();
  ReportBuilder report(Axiom::continuity);
  for (std::size_t t = 0; t < cfg.trials_per_axiom; ++t) {
    const std::size_t n = gen.size(2);
    CountingVector w = gen.next(n);
    const std::size_t from = argmax(w);
    const std::size_t to = other_index(rng, n, from);
    if (t % 2 == 0) {
      std::vector<double> v = copy_of(w);
      v[to] = 0.0;
      w = CountingVector(std::move(v), Normalization::rescale);
    }

    const double base = evaluate(q, w);
    double first_change = 0.0;
    double last_change = 0.0;
    std::vector<double> last_moved;
    for (std::size_t k = 0; k < continuity_steps.size(); ++k) {
      std::vector<double> v = copy_of(w);
      v[from] -= continuity_steps[k] / 2;
      v[to] += continuity_steps[k] / 2;
      const double change = std::fabs(evaluate(q, CountingVector(v)) - base);
      if (k == 0) first_change = change;
      last_change = change;
      last_moved = std::move(v);
    }

    report.trial();
    double tolerance = tol::jump;
    if (last_change <= tolerance) tolerance = std::max(length_tolerance(n), 0.5 * first_change);
    if (last_change > tolerance) {
      const double moved_value = evaluate(q, CountingVector(last_moved));
      report.violation({copy_of(w), std::move(last_moved)}, moved_value, base, last_change, tolerance);
    }
  }
  return report.finish(true);
}

AxiomReport check_uniform_boundary(const QuantifierDescriptor& q, const GeneratorConfig& cfg) {
  cfg.validate();
  ReportBuilder report(Axiom::uniform_boundary);
  for (std::size_t n = 1; n <= cfg.max_n; ++n) {
    const CountingVector w = CountingVector::uniform(n);
    const double lhs = evaluate(q, w);
    const double rhs = static_cast<double>(n);
    const double d = std::fabs(lhs - rhs);
    const double tolerance = length_tolerance(n);
    report.trial();
    if (d > tolerance) report.violation({copy_of(w)}, lhs, rhs, d, tolerance);
  }
  return report.finish();
}

AxiomReport check_delta_boundary(const QuantifierDescriptor& q, const GeneratorConfig& cfg) {
  Rng rng(derive_stream_seed(cfg.seed, stream_of(Axiom::delta_boundary)));
  cfg.validate();
  ReportBuilder report(Axiom::delta_boundary);
  for (std::size_t n = 1; n <= cfg.max_n; ++n) {
    // (N, 0, ..., 0) plus the same spike at a random position.
    for (std::size_t position : {std::size_t{0}, rng.below(n)}) {
      const CountingVector w = CountingVector::delta(n, position);
      const double lhs = evaluate(q, w);
      const double d = std::fabs(lhs - 1.0);
      const double tolerance = length_tolerance(n);
      report.trial();
      if (d > tolerance) report.violation({copy_of(w)}, lhs, 1.0, d, tolerance);
    }
  }
  return report.finish();
}

AxiomReport check_bounds(const QuantifierDescriptor& q, const GeneratorConfig& cfg) {
  VectorGenerator gen(cfg, stream_of(Axiom::bounds));
  ReportBuilder report(Axiom::bounds);
  for (std::size_t t = 0; t < cfg.trials_per_axiom; ++t) {
    const std::size_t n = gen.size();
    const CountingVector w = t % 4 == 3 ? gen.next_collapsed(n) : gen.next(n);
    const double value = evaluate(q, w);
    const double upper = static_cast<double>(n);
    const double tolerance = length_tolerance(n);
    report.trial();
    if (1.0 - value > tolerance) report.violation({copy_of(w)}, value, 1.0, 1.0 - value, tolerance);
    else if (value - upper > tolerance) report.violation({copy_of(w)}, value, upper, value - upper, tolerance);
  }
  return report.finish();
}

std::vector<AxiomReport> check_boundaries(const QuantifierDescriptor& q, const GeneratorConfig& cfg) {
  std::vector<AxiomReport> out;
  out.push_back(check_uniform_boundary(q, cfg));
  out.push_back(check_delta_boundary(q, cfg));
  out.push_back(check_bounds(q, cfg));
  return out;
}

std::vector<AxiomReport> run_full_battery(const QuantifierDescriptor& q, const GeneratorConfig& cfg) {
  cfg.validate();
  std::vector<AxiomReport> out;
  out.reserve(all_axioms.size());
  out.push_back(check_additivity(q, cfg));
  out.push_back(check_monotonicity(q, cfg));
  out.push_back(check_symmetry(q, cfg));
  out.push_back(check_continuity(q, cfg));
  for (AxiomReport& r : check_boundaries(q, cfg)) out.push_back(std::move(r));
  return out;
}

double replay(const QuantifierDescriptor& q, Axiom axiom, const Violation& v) {
  const auto input = [&](std::size_t k) {
    if (k >= v.inputs.size()) throw Error(ErrorCode::invalid_argument, "violation lacks replay inputs");
    return CountingVector(v.inputs[k]);
  };
  switch (axiom) {
    case Axiom::additivity: {
      const CountingVector w = input(0), b = input(1);
      return std::fabs(evaluate(q, concat(w, b)) - evaluate(q, w) - evaluate(q, b));
    }
    case Axiom::monotonicity: return evaluate(q, input(1)) - evaluate(q, input(0));
    case Axiom::symmetry:
    case Axiom::continuity: return std::fabs(evaluate(q, input(1)) - evaluate(q, input(0)));
    case Axiom::uniform_boundary: {
      const CountingVector w = input(0);
      return std::fabs(evaluate(q, w) - static_cast<double>(w.size()));
    }
    case Axiom::delta_boundary: return std::fabs(evaluate(q, input(0)) - 1.0);
    case Axiom::bounds: {
      const CountingVector w = input(0);
      const double value = evaluate(q, w);
      return std::max(1.0 - value, value - static_cast<double>(w.size()));
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown axiom");
}

bool expected_to_pass(QuantifierKind kind, Axiom axiom) noexcept {
  switch (kind) {
    case QuantifierKind::minimal_enf: return true;
    case QuantifierKind::support_count: return axiom != Axiom::continuity;
    case QuantifierKind::participation_number:
    case QuantifierKind::exp_shannon:
    case QuantifierKind::exp_renyi: return axiom != Axiom::additivity;
  }
  return false;
}

bool matches_expected(QuantifierKind kind, std::span<const AxiomReport> reports) noexcept {
  if (reports.size() != all_axioms.size()) return false;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    if (reports[k].axiom != all_axioms[k]) return false;
    if (reports[k].passed != expected_to_pass(kind, reports[k].axiom)) return false;
  }
  return true;
}

}  // namespace effnum
