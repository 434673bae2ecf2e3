// effnum: batch front end over the C API.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "effnum/effnum.h"
#include "io.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;
using effnum::cli::format_double;

enum Exit : int { exit_ok = 0, exit_mismatch = 1, exit_input = 2, exit_numeric = 3 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(effnum_status s) {
  switch (s) {
    case EFFNUM_ERR_NUMERIC_FAILURE:
    case EFFNUM_ERR_OUT_OF_MEMORY:
    case EFFNUM_ERR_INTERNAL:
      return exit_numeric;
    default:
      return exit_input;
  }
}

// Throws with the library message, prefixed by the file it concerns.
void check(effnum_status s, const std::string& context = {}) {
  if (s == EFFNUM_OK) return;
  std::string msg = effnum_last_error();
  if (!context.empty()) msg = context + ": " + msg;
  throw Failure{exit_for(s), msg};
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using Counting = std::unique_ptr<effnum_counting, Deleter<effnum_counting, effnum_counting_destroy>>;
using State = std::unique_ptr<effnum_state, Deleter<effnum_state, effnum_state_destroy>>;
using Basis = std::unique_ptr<effnum_basis, Deleter<effnum_basis, effnum_basis_destroy>>;
using Observable = std::unique_ptr<effnum_observable, Deleter<effnum_observable, effnum_observable_destroy>>;
using Record = std::unique_ptr<effnum_record, Deleter<effnum_record, effnum_record_destroy>>;
using Grid = std::unique_ptr<effnum_grid, Deleter<effnum_grid, effnum_grid_destroy>>;
using Battery = std::unique_ptr<effnum_battery, Deleter<effnum_battery, effnum_battery_destroy>>;
using Anderson = std::unique_ptr<effnum_anderson, Deleter<effnum_anderson, effnum_anderson_destroy>>;

struct Output {
  std::string path;
  std::string format = "json";
};

void emit(const Output& out, const std::string& body) {
  if (out.path.empty() || out.path == "-") {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw Failure{exit_input, out.path + ": cannot open for writing"};
  f << body;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("EFFNUM_SEED"); env && *env) {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0' || env[0] == '-')
      throw Failure{exit_input, std::string("EFFNUM_SEED is not an unsigned integer: ") + env};
    return v;
  }
  return 1;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Report-level invariants: n_star <= support_count and 1 <= n_star <= N.
void check_report(double n_star, double support, std::size_t n) {
  const double slack = 1e-12 * static_cast<double>(n);
  if (n_star <= support + slack && n_star >= 1.0 - slack && n_star <= static_cast<double>(n) + slack) return;
  std::ostringstream msg;
  msg.precision(17);
  msg << "report invariant violated: n_star = " << n_star << ", support_count = " << support << ", N = " << n;
  throw Failure{exit_numeric, msg.str()};
}

std::vector<double> entries(const effnum_counting* w) {
  std::vector<double> v(effnum_counting_size(w));
  check(effnum_counting_entries(w, v.data(), v.size()));
  return v;
}

double evaluate(effnum_quantifier_kind kind, const effnum_counting* w, double alpha = 0.0) {
  double v = 0.0;
  check(effnum_evaluate(effnum_quantifier{kind, alpha}, w, &v));
  return v;
}

struct Quantified {
  ordered_json values;
  double n_star = 0.0;
  double support = 0.0;
};

Quantified quantify(const effnum_counting* w, const std::vector<double>& alphas) {
  Quantified q;
  q.n_star = evaluate(EFFNUM_MINIMAL_ENF, w);
  q.support = evaluate(EFFNUM_SUPPORT_COUNT, w);
  ordered_json renyi = ordered_json::array();
  for (double a : alphas) renyi.push_back({{"alpha", a}, {"value", evaluate(EFFNUM_EXP_RENYI, w, a)}});
  q.values = {{"n_star", q.n_star},
              {"support_count", q.support},
              {"participation", evaluate(EFFNUM_PARTICIPATION_NUMBER, w)},
              {"exp_shannon", evaluate(EFFNUM_EXP_SHANNON, w)},
              {"exp_renyi", std::move(renyi)}};
  check_report(q.n_star, q.support, effnum_counting_size(w));
  return q;
}

int collapsed(const effnum_counting* w) {
  int c = 0;
  check(effnum_interval_collapses(w, &c));
  return c;
}

std::string quantifier_csv(const ordered_json& values) {
  std::string s = "quantity,value\n";
  for (const char* key : {"n_star", "support_count", "participation", "exp_shannon"})
    s += std::string(key) + ',' + format_double(values[key].get<double>()) + '\n';
  for (const auto& r : values["exp_renyi"])
    s += "exp_renyi(" + format_double(r["alpha"].get<double>()) + ")," + format_double(r["value"].get<double>()) + '\n';
  return s;
}

std::string finish(ordered_json report, std::chrono::steady_clock::time_point t0) {
  report["timing"] = {{"seconds", seconds_since(t0)}};
  return report.dump(2) + '\n';
}

// ---- input loading --------------------------------------------------------

State load_state(const std::string& path, bool renormalize, effnum::cli::StateData* data = nullptr) {
  const std::string text = effnum::cli::read_file(path);
  const effnum::cli::StateData s = effnum::cli::parse_state(text, path);
  effnum_state* raw = nullptr;
  check(effnum_state_create(s.re_im.data(), s.n, renormalize ? 1 : 0, &raw), effnum::cli::locate(path, text, "amplitudes"));
  State state(raw);
  if (data) {
    data->n = s.n;
    data->re_im.resize(2 * s.n);
    check(effnum_state_amplitudes(state.get(), data->re_im.data(), data->re_im.size()));
  }
  return state;
}

Observable load_observable(const std::string& path) {
  const std::string text = effnum::cli::read_file(path);
  const effnum::cli::MatrixData m = effnum::cli::parse_observable(text, path);
  effnum_observable* raw = nullptr;
  check(effnum_observable_create(m.re_im.data(), m.n, &raw), effnum::cli::locate(path, text, "matrix"));
  return Observable(raw);
}

Basis load_basis(const std::string& path) {
  const std::string text = effnum::cli::read_file(path);
  const effnum::cli::MatrixData m = effnum::cli::parse_basis(text, path);
  effnum_basis* raw = nullptr;
  check(effnum_basis_create(m.re_im.data(), m.n, &raw), effnum::cli::locate(path, text, "rows"));
  return Basis(raw);
}

void require_same_size(std::size_t a, std::size_t b, const std::string& path, const std::string& what) {
  if (a == b) return;
  throw Failure{exit_input, path + ": " + what + " has dimension " + std::to_string(b) + " but the state has " +
                                std::to_string(a)};
}

// ---- commands ---------------------------------------------------------------

struct StateArgs {
  std::string input;
  std::string basis = "identity";
  std::string observable;
  std::vector<double> alphas{0.5, 2.0, 3.0};
  bool renormalize = false;
  std::string emit_state;
};

int cmd_state(const StateArgs& a, const Output& out) {
  const auto t0 = std::chrono::steady_clock::now();
  effnum::cli::StateData data;
  State state = load_state(a.input, a.renormalize, &data);
  const std::size_t n = effnum_state_size(state.get());

  ordered_json input = {{"path", a.input}, {"n", n}};
  ordered_json flags = ordered_json::array();
  std::vector<double> eigenvalues;
  Basis basis;
  if (!a.observable.empty()) {
    Observable o = load_observable(a.observable);
    require_same_size(n, effnum_observable_size(o.get()), a.observable, "observable");
    eigenvalues.resize(n);
    effnum_basis* raw = nullptr;
    int degenerate = 0;
    double residual = 0.0;
    check(effnum_observable_eigen(o.get(), &raw, eigenvalues.data(), &degenerate, &residual), a.observable);
    basis.reset(raw);
    input["basis"] = "observable";
    input["observable"] = a.observable;
    if (degenerate) flags.push_back("degenerate_spectrum");
  } else if (a.basis == "identity") {
    effnum_basis* raw = nullptr;
    check(effnum_basis_identity(n, &raw));
    basis.reset(raw);
    input["basis"] = "identity";
  } else {
    basis = load_basis(a.basis);
    require_same_size(n, effnum_basis_size(basis.get()), a.basis, "basis");
    input["basis"] = "file";
    input["basis_path"] = a.basis;
  }

  effnum_counting* raw = nullptr;
  check(effnum_weights_from_state(state.get(), basis.get(), &raw), a.input);
  Counting w(raw);
  const Quantified q = quantify(w.get(), a.alphas);
  if (collapsed(w.get())) flags.push_back("interval_collapsed");

  if (!a.emit_state.empty()) emit({a.emit_state, "json"}, effnum::cli::write_state(data));

  if (out.format == "csv") {
    emit(out, quantifier_csv(q.values));
    return exit_ok;
  }
  ordered_json report = {{"command", "state"}, {"input", std::move(input)}, {"weights", entries(w.get())}};
  report["quantifiers"] = q.values;
  if (!eigenvalues.empty()) report["eigenvalues"] = eigenvalues;
  report["flags"] = std::move(flags);
  emit(out, finish(std::move(report), t0));
  return exit_ok;
}

int cmd_grid(const std::string& path, const Output& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string text = effnum::cli::read_file(path);
  const effnum::cli::GridData g = effnum::cli::parse_grid(text, path);
  effnum_grid* raw = nullptr;
  check(effnum_grid_create(g.dims.data(), g.spacing.data(), g.origin.empty() ? nullptr : g.origin.data(),
                           g.dims.size(), g.re_im.data(), g.re_im.size() / 2, 0.0, &raw),
        effnum::cli::locate(path, text, "dims"));
  Grid grid(raw);

  double volume = 0.0;
  check(effnum_grid_effective_volume(grid.get(), &volume));
  effnum_counting* wraw = nullptr;
  check(effnum_grid_discrete_limit(grid.get(), &wraw));
  Counting w(wraw);
  const double cell = effnum_grid_cell_volume(grid.get());
  const double region = effnum_grid_region_volume(grid.get());
  const Quantified q = quantify(w.get(), {0.5, 2.0, 3.0});
  const double bridged = q.n_star * cell;
  const double residual = std::fabs(bridged - volume) / volume;
  const bool bridge_ok = residual <= 1e-12;

  ordered_json flags = ordered_json::array();
  flags.push_back(bridge_ok ? "bridge_identity_ok" : "bridge_identity_failed");

  if (out.format == "csv") {
    std::string s = "quantity,value\n";
    s += "effective_volume," + format_double(volume) + '\n';
    s += "region_volume," + format_double(region) + '\n';
    s += "cell_volume," + format_double(cell) + '\n';
    s += "bridge_residual," + format_double(residual) + '\n';
    emit(out, s);
  } else {
    ordered_json report = {{"command", "grid"},
                           {"input", {{"path", path}, {"dims", g.dims}, {"spacing", g.spacing},
                                      {"cells", effnum_grid_cell_count(grid.get())}}},
                           {"effective_volume", volume},
                           {"region_volume", region},
                           {"cell_volume", cell},
                           {"relative_effective_volume", volume / region},
                           {"bridge", {{"n_star_times_cell_volume", bridged}, {"relative_residual", residual}}},
                           {"quantifiers", q.values},
                           {"flags", std::move(flags)}};
    emit(out, finish(std::move(report), t0));
  }
  if (!bridge_ok) {
    std::ostringstream msg;
    msg << path << ": bridge identity residual " << residual << " exceeds 1e-12";
    throw Failure{exit_numeric, msg.str()};
  }
  return exit_ok;
}

struct VerifyArgs {
  std::string quantifier = "minimal_enf";
  double alpha = 2.0;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 1000;
  std::size_t max_n = 16;
  double sparsity = 0.25;
  bool require_all_pass = false;
};

int cmd_verify(const VerifyArgs& a, const Output& out) {
  const auto t0 = std::chrono::steady_clock::now();
  effnum_quantifier q{};
  check(effnum_quantifier_parse(a.quantifier.c_str(), a.alpha, &q));
  effnum_generator_config cfg = effnum_generator_config_default();
  cfg.seed = resolve_seed(a.seed);
  cfg.trials_per_axiom = a.trials;
  cfg.max_n = a.max_n;
  cfg.sparsity = a.sparsity;
  effnum_battery* raw = nullptr;
  check(effnum_battery_run(q, &cfg, &raw));
  Battery b(raw);

  const bool matches = effnum_battery_matches_expected(b.get()) != 0;
  const bool all_passed = effnum_battery_all_passed(b.get()) != 0;

  if (out.format == "csv") {
    std::string s = "axiom,passed,violation_count\n";
    for (std::size_t k = 0; k < effnum_battery_size(b.get()); ++k) {
      const char* axiom = nullptr;
      int passed = 0;
      std::size_t count = 0;
      check(effnum_battery_result(b.get(), k, &axiom, &passed, &count));
      s += std::string(axiom) + ',' + (passed ? "true" : "false") + ',' + std::to_string(count) + '\n';
    }
    emit(out, s);
  } else {
    ordered_json report = {{"command", "verify"}};
    const ordered_json battery = ordered_json::parse(effnum_battery_json(b.get()));
    for (const auto& [key, value] : battery.items()) report[key] = value;
    emit(out, finish(std::move(report), t0));
  }
  if (!matches) {
    std::cerr << "effnum: pass/fail pattern differs from the expected matrix for " << a.quantifier << '\n';
    return exit_mismatch;
  }
  if (a.require_all_pass && !all_passed) {
    std::cerr << "effnum: " << a.quantifier << " does not satisfy every axiom\n";
    return exit_mismatch;
  }
  return exit_ok;
}

struct SampleArgs {
  std::string input;
  std::string observable;
  std::size_t count = 100000;
  std::optional<std::uint64_t> seed;
  bool renormalize = false;
};

int cmd_sample(const SampleArgs& a, const Output& out) {
  const auto t0 = std::chrono::steady_clock::now();
  State state = load_state(a.input, a.renormalize);
  const std::size_t n = effnum_state_size(state.get());
  const std::uint64_t seed = resolve_seed(a.seed);

  Observable o;
  Basis basis;
  std::vector<double> eigenvalues(n);
  ordered_json flags = ordered_json::array();
  if (!a.observable.empty()) {
    o = load_observable(a.observable);
    require_same_size(n, effnum_observable_size(o.get()), a.observable, "observable");
    effnum_basis* raw = nullptr;
    int degenerate = 0;
    check(effnum_observable_eigen(o.get(), &raw, eigenvalues.data(), &degenerate, nullptr), a.observable);
    basis.reset(raw);
    if (degenerate) flags.push_back("degenerate_spectrum");
  } else {
    effnum_basis* raw = nullptr;
    check(effnum_basis_identity(n, &raw));
    basis.reset(raw);
    for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = static_cast<double>(i);
  }

  effnum_counting* wraw = nullptr;
  check(effnum_weights_from_state(state.get(), basis.get(), &wraw), a.input);
  Counting w(wraw);
  const double exact = evaluate(EFFNUM_MINIMAL_ENF, w.get());
  check_report(exact, evaluate(EFFNUM_SUPPORT_COUNT, w.get()), n);

  effnum_record* rraw = nullptr;
  check(effnum_sample_measurements(state.get(), o.get(), a.count, seed, &rraw));
  Record record(rraw);
  double empirical = 0.0;
  check(effnum_empirical_mu_uncertainty(record.get(), n, &empirical));

  std::vector<double> freq(n, 0.0);
  for (std::size_t l = 0; l < effnum_record_size(record.get()); ++l) {
    std::size_t index = 0;
    check(effnum_record_outcome(record.get(), l, &index, nullptr));
    freq[index] += 1.0;
  }
  for (double& f : freq) f /= static_cast<double>(a.count);
  std::size_t observed = 0;
  for (double f : freq) observed += f > 0.0 ? 1 : 0;
  check_report(empirical, static_cast<double>(observed), n);

  std::vector<double> p = entries(w.get());
  for (double& x : p) x /= static_cast<double>(n);

  if (out.format == "csv") {
    std::string s = "index,eigenvalue,probability,frequency\n";
    for (std::size_t i = 0; i < n; ++i)
      s += std::to_string(i) + ',' + format_double(eigenvalues[i]) + ',' + format_double(p[i]) + ',' +
           format_double(freq[i]) + '\n';
    emit(out, s);
    return exit_ok;
  }
  ordered_json input = {{"path", a.input}, {"n", n}, {"count", a.count}, {"seed", seed}};
  if (!a.observable.empty()) input["observable"] = a.observable;
  ordered_json report = {{"command", "sample"},
                         {"input", std::move(input)},
                         {"exact_n_star", exact},
                         {"empirical_n_star", empirical},
                         {"gap", std::fabs(empirical - exact)},
                         {"eigenvalues", eigenvalues},
                         {"probabilities", p},
                         {"frequencies", freq},
                         {"flags", std::move(flags)}};
  emit(out, finish(std::move(report), t0));
  return exit_ok;
}

struct AndersonArgs {
  std::size_t sites = 64;
  double disorder = 1.0;
  double hopping = 1.0;
  std::optional<std::uint64_t> seed;
  std::size_t realizations = 1;
};

int cmd_anderson(const AndersonArgs& a, Output out) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t seed = resolve_seed(a.seed);
  effnum_anderson* raw = nullptr;
  check(effnum_anderson_run(a.sites, a.disorder, a.hopping, seed, a.realizations, &raw));
  Anderson table(raw);

  std::vector<effnum_anderson_row> rows(effnum_anderson_row_count(table.get()));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    check(effnum_anderson_row_at(table.get(), k, &rows[k]));
    if (!(rows[k].n_star >= 1.0 - 1e-9 && rows[k].n_star <= static_cast<double>(a.sites) + 1e-9))
      throw Failure{exit_numeric, "eigenstate n_star outside [1, sites]"};
  }
  double mean_n_star = 0.0;
  double mean_pn = 0.0;
  std::size_t degenerate = 0;
  check(effnum_anderson_means(table.get(), &mean_n_star, &mean_pn, &degenerate));

  if (out.format == "csv") {
    std::string s = "realization,index,energy,n_star,participation_number\n";
    for (const auto& r : rows)
      s += std::to_string(r.realization) + ',' + std::to_string(r.index) + ',' + format_double(r.energy) + ',' +
           format_double(r.n_star) + ',' + format_double(r.participation) + '\n';
    s += "mean,,," + format_double(mean_n_star) + ',' + format_double(mean_pn) + '\n';
    emit(out, s);
    return exit_ok;
  }
  ordered_json list = ordered_json::array();
  for (const auto& r : rows)
    list.push_back({{"realization", r.realization},
                    {"index", r.index},
                    {"energy", r.energy},
                    {"n_star", r.n_star},
                    {"participation_number", r.participation}});
  ordered_json report = {{"command", "anderson"},
                         {"input",
                          {{"sites", a.sites},
                           {"disorder", a.disorder},
                           {"hopping", a.hopping},
                           {"seed", seed},
                           {"realizations", a.realizations}}},
                         {"mean_n_star", mean_n_star},
                         {"mean_participation_number", mean_pn},
                         {"degenerate_realizations", degenerate},
                         {"rows", std::move(list)}};
  emit(out, finish(std::move(report), t0));
  return exit_ok;
}

void add_output(CLI::App* cmd, Output& out, const char* default_format = "json") {
  out.format = default_format;
  cmd->add_option("--output,-o", out.path, "Write the report here instead of stdout");
  cmd->add_option("--format", out.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Effective number quantifiers for counting vectors, quantum states and grids"};
  app.set_version_flag("--version", std::string(effnum_version()));
  app.require_subcommand(1);

  StateArgs state;
  Output state_out;
  auto* state_cmd = app.add_subcommand("state", "Quantify a state file in a probing basis");
  state_cmd->add_option("--input,-i", state.input, "State file")->required();
  state_cmd->add_option("--basis", state.basis, "identity or a basis file")->capture_default_str();
  state_cmd->add_option("--observable", state.observable, "Observable file; probes its eigenbasis");
  state_cmd->add_option("--alpha", state.alphas, "Renyi orders to report")->capture_default_str();
  state_cmd->add_flag("--renormalize", state.renormalize, "Rescale an unnormalized state instead of failing");
  state_cmd->add_option("--emit-state", state.emit_state, "Write the parsed state back out");
  add_output(state_cmd, state_out);

  std::string grid_input;
  Output grid_out;
  auto* grid_cmd = app.add_subcommand("grid", "Effective volume of a sampled wavefunction");
  grid_cmd->add_option("--input,-i", grid_input, "Grid file")->required();
  add_output(grid_cmd, grid_out);

  VerifyArgs verify;
  Output verify_out;
  std::uint64_t verify_seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run the axiom battery against a quantifier");
  verify_cmd->add_option("--quantifier,-q", verify.quantifier)->capture_default_str();
  verify_cmd->add_option("--alpha", verify.alpha, "Order for exp_renyi")->capture_default_str();
  auto* verify_seed_opt = verify_cmd->add_option("--seed", verify_seed, "Defaults to $EFFNUM_SEED, then 1");
  verify_cmd->add_option("--trials", verify.trials)->capture_default_str()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-n", verify.max_n)->capture_default_str()->check(CLI::Range(2, 1 << 20));
  verify_cmd->add_option("--sparsity", verify.sparsity)->capture_default_str()->check(CLI::Range(0.0, 1.0));
  verify_cmd->add_flag("--require-all-pass", verify.require_all_pass, "Fail unless every axiom holds");
  add_output(verify_cmd, verify_out);

  SampleArgs sample;
  Output sample_out;
  std::uint64_t sample_seed = 0;
  auto* sample_cmd = app.add_subcommand("sample", "Simulate measurements and estimate n_star");
  sample_cmd->add_option("--input,-i", sample.input, "State file")->required();
  sample_cmd->add_option("--observable", sample.observable, "Observable file; identity when omitted");
  sample_cmd->add_option("--count", sample.count)->capture_default_str()->check(CLI::PositiveNumber);
  auto* sample_seed_opt = sample_cmd->add_option("--seed", sample_seed, "Defaults to $EFFNUM_SEED, then 1");
  sample_cmd->add_flag("--renormalize", sample.renormalize);
  add_output(sample_cmd, sample_out);

  AndersonArgs anderson;
  Output anderson_out;
  std::uint64_t anderson_seed = 0;
  auto* anderson_cmd = app.add_subcommand("anderson", "Disordered tight-binding chain eigenstate table");
  anderson_cmd->add_option("--sites", anderson.sites)->capture_default_str()->check(CLI::Range(2, 1 << 14));
  anderson_cmd->add_option("--disorder", anderson.disorder)->capture_default_str()->check(CLI::NonNegativeNumber);
  anderson_cmd->add_option("--hopping", anderson.hopping)->capture_default_str();
  auto* anderson_seed_opt = anderson_cmd->add_option("--seed", anderson_seed, "Defaults to $EFFNUM_SEED, then 1");
  anderson_cmd->add_option("--realizations", anderson.realizations)->capture_default_str()->check(CLI::PositiveNumber);
  add_output(anderson_cmd, anderson_out, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_input;
  }

  try {
    if (*state_cmd) return cmd_state(state, state_out);
    if (*grid_cmd) return cmd_grid(grid_input, grid_out);
    if (*verify_cmd) {
      if (*verify_seed_opt) verify.seed = verify_seed;
      return cmd_verify(verify, verify_out);
    }
    if (*sample_cmd) {
      if (*sample_seed_opt) sample.seed = sample_seed;
      return cmd_sample(sample, sample_out);
    }
    if (*anderson_cmd) {
      if (*anderson_seed_opt) anderson.seed = anderson_seed;
      return cmd_anderson(anderson, anderson_out);
    }
  } catch (const Failure& f) {
    std::cerr << "effnum: " << f.message << '\n';
    return f.code;
  } catch (const effnum::cli::ParseError& e) {
    std::cerr << "effnum: " << e.what() << '\n';
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "effnum: " << e.what() << '\n';
    return exit_numeric;
  }
  return exit_input;
}
