#include "json.hpp"

#include "effnum/axioms.hpp"

namespace effnum {
namespace {

using nlohmann::ordered_json;

ordered_json report_json(const AxiomReport& r) {
  ordered_json violations = ordered_json::array();
  for (const Violation& v : r.violations) {
    violations.push_back({{"inputs", v.inputs},
                          {"lhs", v.lhs},
                          {"rhs", v.rhs},
                          {"discrepancy", v.discrepancy},
                          {"tolerance", v.tolerance}});
  }
  ordered_json out = {{"axiom", label(r.axiom)},
                      {"trials", r.trials},
                      {"passed", r.passed},
                      {"violation_count", r.violation_count}};
  if (r.sampled_evidence) out["evidence"] = "sampled";
  out["violations"] = std::move(violations);
  return out;
}

}  // namespace

std::string to_json(const AxiomReport& report) { return report_json(report).dump(); }

std::string to_json(const QuantifierDescriptor& q, const GeneratorConfig& cfg,
                    std::span<const AxiomReport> reports) {
  ordered_json quantifier = {{"kind", to_string(q.kind())}};
  if (q.alpha()) quantifier["alpha"] = *q.alpha();

  ordered_json list = ordered_json::array();
  bool all_passed = true;
  for (const AxiomReport& r : reports) {
    list.push_back(report_json(r));
    all_passed = all_passed && r.passed;
  }
  ordered_json out = {{"quantifier", std::move(quantifier)},
                      {"config",
                       {{"seed", cfg.seed},
                        {"max_n", cfg.max_n},
                        {"trials_per_axiom", cfg.trials_per_axiom},
                        {"sparsity", cfg.sparsity}}},
                      {"reports", std::move(list)},
                      {"all_passed", all_passed},
                      {"expected_matrix_match", matches_expected(q.kind(), reports)}};
  return out.dump();
}

}  // namespace effnum
