#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "effnum/counting.hpp"
#include "effnum/enf.hpp"
#include "effnum/rng.hpp"

namespace effnum {

// The axioms defining effective number functions, in battery order.
enum class Axiom {
  additivity,        // A
  monotonicity,      // M_minus
  symmetry,          // S
  continuity,        // C
  uniform_boundary,  // B1
  delta_boundary,    // B2
  bounds,            // B
};

inline constexpr std::array<Axiom, 7> all_axioms = {
    Axiom::additivity,       Axiom::monotonicity,   Axiom::symmetry, Axiom::continuity,
    Axiom::uniform_boundary, Axiom::delta_boundary, Axiom::bounds,
};

/// Short label used in reports: A, M_minus, S, C, B1, B2, B.
std::string_view label(Axiom axiom) noexcept;

/// Random input generation for the axiom checks.
struct GeneratorConfig {
  std::uint64_t seed = 1;
  std::size_t max_n = 16;
  std::size_t trials_per_axiom = 1000;
  /// Probability that an entry is forced to zero before rescaling.
  double sparsity = 0.25;

  /// Throws Error(invalid_argument) unless max_n >= 2, trials >= 1 and
  /// sparsity lies in [0, 1].
  void validate() const;
};

/// A recorded counterexample. `inputs` holds every vector needed to replay
/// it (see replay()); `discrepancy` exceeds `tolerance`.
struct Violation {
  std::vector<std::vector<double>> inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double discrepancy = 0.0;
  double tolerance = 0.0;
};

/// At most this many counterexamples are kept per report; violation_count
/// keeps counting past it.
inline constexpr std::size_t max_recorded_violations = 16;

struct AxiomReport {
  Axiom axiom = Axiom::additivity;
  std::size_t trials = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;
  bool passed = true;
  /// Set for continuity: sampling can refute continuity but never prove it.
  bool sampled_evidence = false;
};

/// Draws counting vectors for the checks. Each vector gets a random spread
/// (entries are exponential variates raised to a random power in [0.25, 3])
/// so that samples straddle the kink of min(w, 1); entries are zeroed with
/// probability cfg.sparsity, and the result is rescaled to sum to n. If every
/// entry was zeroed a single random entry keeps all the weight.
class VectorGenerator {
 public:
  VectorGenerator(const GeneratorConfig& cfg, std::uint64_t stream);

  CountingVector next(std::size_t n);
  /// A vector with no entry in (0, 1): k nonzero entries, each >= 1.
  CountingVector next_collapsed(std::size_t n);
  /// Uniform size in [min_n, cfg.max_n].
  std::size_t size(std::size_t min_n = 1);

  Rng& rng() noexcept { return rng_; }

 private:
  GeneratorConfig cfg_;
  Rng rng_;
};

/// Deterministic in (cfg.seed, call_index): uses stream 0x100 + call_index.
/// Throws Error(invalid_argument) for n == 0 or n > cfg.max_n.
CountingVector gen_counting_vector(const GeneratorConfig& cfg, std::size_t n,
                                   std::uint64_t call_index = 0);

// Individual checks. Tolerances: tol::axiom times the vector length (N + M
// for additivity); continuity uses tol::jump plus a shrink test.
AxiomReport check_additivity(const QuantifierDescriptor& q, const GeneratorConfig& cfg);
AxiomReport check_monotonicity(const QuantifierDescriptor& q, const GeneratorConfig& cfg);
AxiomReport check_symmetry(const QuantifierDescriptor& q, const GeneratorConfig& cfg);
AxiomReport check_continuity(const QuantifierDescriptor& q, const GeneratorConfig& cfg);
AxiomReport check_uniform_boundary(const QuantifierDescriptor& q, const GeneratorConfig& cfg);
AxiomReport check_delta_boundary(const QuantifierDescriptor& q, const GeneratorConfig& cfg);
AxiomReport check_bounds(const QuantifierDescriptor& q, const GeneratorConfig& cfg);

/// B1, B2 and B in that order.
std::vector<AxiomReport> check_boundaries(const QuantifierDescriptor& q, const GeneratorConfig& cfg);

/// All seven checks in battery order. Bit-for-bit deterministic for a given
/// (q, cfg): every check draws from its own stream.
std::vector<AxiomReport> run_full_battery(const QuantifierDescriptor& q, const GeneratorConfig& cfg);

/// Recomputes the discrepancy of a recorded violation from its inputs alone.
double replay(const QuantifierDescriptor& q, Axiom axiom, const Violation& v);

/// Expected outcome: N* passes everything, the support count fails only C,
/// the three entropy-style rivals fail only A.
bool expected_to_pass(QuantifierKind kind, Axiom axiom) noexcept;

/// Whether a battery reproduces the expected row for `kind`.
bool matches_expected(QuantifierKind kind, std::span<const AxiomReport> reports) noexcept;

/// JSON document for one report / a battery. Doubles are written in their
/// shortest round-trip form (at most 17 significant digits).
std::string to_json(const AxiomReport& report);
std::string to_json(const QuantifierDescriptor& q, const GeneratorConfig& cfg,
                    std::span<const AxiomReport> reports);

}  // namespace effnum
