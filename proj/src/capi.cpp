#include "effnum/effnum.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "effnum/anderson.hpp"
#include "effnum/axioms.hpp"
#include "effnum/continuum.hpp"
#include "effnum/counting.hpp"
#include "effnum/enf.hpp"
#include "effnum/error.hpp"
#include "effnum/quantum.hpp"

struct effnum_counting {
  effnum::CountingVector value;
};
struct effnum_state {
  effnum::QuantumState value;
};
struct effnum_basis {
  effnum::ProbingBasis value;
};
struct effnum_observable {
  effnum::Observable value;
};
struct effnum_record {
  effnum::MeasurementRecord value;
};
struct effnum_grid {
  effnum::GridWavefunction value;
};
struct effnum_battery {
  effnum::QuantifierDescriptor quantifier;
  std::vector<effnum::AxiomReport> reports;
  std::string json;
};
struct effnum_anderson {
  effnum::AndersonTable value;
};

namespace {

using effnum::Complex;
using effnum::ErrorCode;

thread_local std::string last_error;

struct NullArgument {
  const char* name;
};

template <typename T>
T& require(T* p, const char* name) {
  if (p == nullptr) throw NullArgument{name};
  return *p;
}

effnum_status status_of(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_probability: return EFFNUM_ERR_INVALID_PROBABILITY;
    case ErrorCode::invalid_counting: return EFFNUM_ERR_INVALID_COUNTING;
    case ErrorCode::length_mismatch: return EFFNUM_ERR_LENGTH_MISMATCH;
    case ErrorCode::transfer_violation: return EFFNUM_ERR_TRANSFER_VIOLATION;
    case ErrorCode::degenerate_input: return EFFNUM_ERR_DEGENERATE_INPUT;
    case ErrorCode::bad_order: return EFFNUM_ERR_BAD_ORDER;
    case ErrorCode::dimension_mismatch: return EFFNUM_ERR_DIMENSION_MISMATCH;
    case ErrorCode::non_orthonormal_basis: return EFFNUM_ERR_NON_ORTHONORMAL_BASIS;
    case ErrorCode::not_hermitian: return EFFNUM_ERR_NOT_HERMITIAN;
    case ErrorCode::empty_record: return EFFNUM_ERR_EMPTY_RECORD;
    case ErrorCode::not_normalized: return EFFNUM_ERR_NOT_NORMALIZED;
    case ErrorCode::invalid_argument: return EFFNUM_ERR_INVALID_ARGUMENT;
    case ErrorCode::unknown_quantifier: return EFFNUM_ERR_UNKNOWN_QUANTIFIER;
    case ErrorCode::numeric_failure: return EFFNUM_ERR_NUMERIC_FAILURE;
  }
  return EFFNUM_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
effnum_status guarded(F&& body) noexcept {
  try {
    body();
    return EFFNUM_OK;
  } catch (const effnum::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const NullArgument& e) {
    last_error = std::string("null pointer passed for ") + e.name;
    return EFFNUM_ERR_NULL_POINTER;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return EFFNUM_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return EFFNUM_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return EFFNUM_ERR_INTERNAL;
  }
}

std::vector<double> doubles(const double* p, std::size_t n, const char* name) {
  if (n > 0) require(p, name);
  return std::vector<double>(p, p + n);
}

std::vector<Complex> complexes(const double* re_im, std::size_t n, const char* name) {
  if (n > 0) require(re_im, name);
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = Complex(re_im[2 * i], re_im[2 * i + 1]);
  return out;
}

void copy_complexes(std::span<const Complex> in, double* out, std::size_t capacity) {
  require(out, "out");
  if (capacity < 2 * in.size()) throw effnum::Error(ErrorCode::invalid_argument, "output buffer too small");
  for (std::size_t i = 0; i < in.size(); ++i) {
    out[2 * i] = in[i].real();
    out[2 * i + 1] = in[i].imag();
  }
}

effnum::Normalization mode(int renormalize) {
  return renormalize ? effnum::Normalization::rescale : effnum::Normalization::reject;
}

// C callers may pass any int as the kind; read it without an enum load.
int raw_kind(const effnum_quantifier_kind& kind) {
  int value = 0;
  static_assert(sizeof value == sizeof kind);
  std::memcpy(&value, &kind, sizeof value);
  return value;
}

effnum::QuantifierDescriptor descriptor(const effnum_quantifier& q) {
  switch (raw_kind(q.kind)) {
    case EFFNUM_MINIMAL_ENF: return effnum::QuantifierDescriptor::minimal_enf();
    case EFFNUM_SUPPORT_COUNT: return effnum::QuantifierDescriptor::support_count();
    case EFFNUM_PARTICIPATION_NUMBER: return effnum::QuantifierDescriptor::participation_number();
    case EFFNUM_EXP_SHANNON: return effnum::QuantifierDescriptor::exp_shannon();
    case EFFNUM_EXP_RENYI: return effnum::QuantifierDescriptor::exp_renyi(q.alpha);
  }
  throw effnum::Error(ErrorCode::unknown_quantifier, "unknown quantifier kind");
}

effnum_counting* wrap(effnum::CountingVector w) { return new effnum_counting{std::move(w)}; }

}  // namespace

extern "C" {

const char* effnum_version(void) { return "1.0.0"; }

const char* effnum_status_name(effnum_status status) {
  switch (status) {
    case EFFNUM_OK: return "OK";
    case EFFNUM_ERR_NULL_POINTER: return "NullPointer";
    case EFFNUM_ERR_OUT_OF_MEMORY: return "OutOfMemory";
    case EFFNUM_ERR_INTERNAL: return "Internal";
    default:
      if (status >= EFFNUM_ERR_INVALID_PROBABILITY && status <= EFFNUM_ERR_NUMERIC_FAILURE)
        return effnum::to_string(static_cast<ErrorCode>(status));
  }
  return "Unknown";
}

const char* effnum_last_error(void) { return last_error.c_str(); }

// ---- counting vectors

effnum_status effnum_counting_create(const double* weights, size_t n, int renormalize, effnum_counting** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(effnum::CountingVector(doubles(weights, n, "weights"), mode(renormalize)));
  });
}

effnum_status effnum_counting_from_probability(const double* probabilities, size_t n, int renormalize,
                                               effnum_counting** out) {
  return guarded([&] {
    require(out, "out");
    const effnum::ProbabilityVector p(doubles(probabilities, n, "probabilities"), mode(renormalize));
    *out = wrap(effnum::to_counting(p));
  });
}

void effnum_counting_destroy(effnum_counting* w) { delete w; }

size_t effnum_counting_size(const effnum_counting* w) { return w ? w->value.size() : 0; }

effnum_status effnum_counting_entries(const effnum_counting* w, double* out, size_t capacity) {
  return guarded([&] {
    const auto e = require(w, "w").value.entries();
    require(out, "out");
    if (capacity < e.size()) throw effnum::Error(ErrorCode::invalid_argument, "output buffer too small");
    std::memcpy(out, e.data(), e.size() * sizeof(double));
  });
}

effnum_status effnum_counting_concat(const effnum_counting* w, const effnum_counting* b, effnum_counting** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(effnum::concat(require(w, "w").value, require(b, "b").value));
  });
}

effnum_status effnum_counting_sort_descending(const effnum_counting* w, effnum_counting** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(effnum::sort_descending(require(w, "w").value));
  });
}

effnum_status effnum_counting_transfer(const effnum_counting* w, size_t i, size_t j, double epsilon,
                                       effnum_counting** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(effnum::elementary_transfer(require(w, "w").value, i, j, epsilon));
  });
}

effnum_status effnum_compare_cumulation(const effnum_counting* w, const effnum_counting* b,
                                        effnum_cumulation* out) {
  return guarded([&] {
    require(out, "out");
    switch (effnum::compare_cumulation(require(w, "w").value, require(b, "b").value)) {
      case effnum::Cumulation::more_cumulated: *out = EFFNUM_MORE_CUMULATED; break;
      case effnum::Cumulation::less_cumulated: *out = EFFNUM_LESS_CUMULATED; break;
      case effnum::Cumulation::equal: *out = EFFNUM_EQUAL; break;
      case effnum::Cumulation::incomparable: *out = EFFNUM_INCOMPARABLE; break;
    }
  });
}

effnum_status effnum_compose_probability(const double* p, size_t n, const double* q, size_t m, double* out) {
  return guarded([&] {
    require(out, "out");
    const effnum::ProbabilityVector left(doubles(p, n, "p"));
    const effnum::ProbabilityVector right(doubles(q, m, "q"));
    const effnum::ProbabilityVector composed = effnum::compose_probability(left, right);
    std::memcpy(out, composed.entries().data(), composed.size() * sizeof(double));
  });
}

// ---- quantifiers

effnum_status effnum_quantifier_parse(const char* name, double alpha, effnum_quantifier* out) {
  return guarded([&] {
    require(out, "out");
    require(name, "name");
    const auto d = effnum::QuantifierDescriptor::parse(name, alpha);
    out->kind = static_cast<effnum_quantifier_kind>(d.kind());
    out->alpha = d.alpha().value_or(0.0);
  });
}

const char* effnum_quantifier_name(effnum_quantifier_kind kind) {
  const int value = raw_kind(kind);
  if (value < EFFNUM_MINIMAL_ENF || value > EFFNUM_EXP_RENYI) return "unknown";
  return effnum::to_string(static_cast<effnum::QuantifierKind>(value));
}

effnum_status effnum_evaluate(effnum_quantifier q, const effnum_counting* w, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = effnum::evaluate(descriptor(q), require(w, "w").value);
  });
}

effnum_status effnum_interval_collapses(const effnum_counting* w, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = effnum::admissible_interval_collapses(require(w, "w").value) ? 1 : 0;
  });
}

// ---- quantum

effnum_status effnum_state_create(const double* re_im, size_t n, int renormalize, effnum_state** out) {
  return guarded([&] {
    require(out, "out");
    *out = new effnum_state{effnum::QuantumState(complexes(re_im, n, "re_im"), mode(renormalize))};
  });
}

void effnum_state_destroy(effnum_state* s) { delete s; }

size_t effnum_state_size(const effnum_state* s) { return s ? s->value.size() : 0; }

effnum_status effnum_state_amplitudes(const effnum_state* s, double* re_im, size_t capacity) {
  return guarded([&] { copy_complexes(require(s, "s").value.amplitudes(), re_im, capacity); });
}

effnum_status effnum_basis_identity(size_t n, effnum_basis** out) {
  return guarded([&] {
    require(out, "out");
    *out = new effnum_basis{effnum::ProbingBasis::identity(n)};
  });
}

effnum_status effnum_basis_create(const double* rows_re_im, size_t n, effnum_basis** out) {
  return guarded([&] {
    require(out, "out");
    *out = new effnum_basis{effnum::ProbingBasis(n, complexes(rows_re_im, n * n, "rows_re_im"))};
  });
}

void effnum_basis_destroy(effnum_basis* b) { delete b; }

size_t effnum_basis_size(const effnum_basis* b) { return b ? b->value.size() : 0; }

effnum_status effnum_basis_vector(const effnum_basis* b, size_t i, double* re_im, size_t capacity) {
  return guarded([&] { copy_complexes(require(b, "b").value.vector(i), re_im, capacity); });
}

effnum_status effnum_observable_create(const double* re_im, size_t n, effnum_observable** out) {
  return guarded([&] {
    require(out, "out");
    *out = new effnum_observable{effnum::Observable(n, complexes(re_im, n * n, "re_im"))};
  });
}

void effnum_observable_destroy(effnum_observable* o) { delete o; }

size_t effnum_observable_size(const effnum_observable* o) { return o ? o->value.size() : 0; }

effnum_status effnum_observable_eigen(const effnum_observable* o, effnum_basis** basis, double* eigenvalues,
                                      int* degenerate, double* residual) {
  return guarded([&] {
    require(basis, "basis");
    require(eigenvalues, "eigenvalues");
    effnum::Spectrum s = effnum::eigenbasis(require(o, "o").value);
    std::memcpy(eigenvalues, s.eigenvalues.data(), s.eigenvalues.size() * sizeof(double));
    if (degenerate) *degenerate = s.degenerate ? 1 : 0;
    if (residual) *residual = s.residual;
    *basis = new effnum_basis{std::move(s.basis)};
  });
}

effnum_status effnum_weights_from_state(const effnum_state* s, const effnum_basis* b, effnum_counting** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(effnum::weights_from_state(require(s, "s").value, require(b, "b").value));
  });
}

effnum_status effnum_mu_uncertainty(const effnum_state* s, const effnum_basis* b, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = effnum::mu_uncertainty(require(s, "s").value, require(b, "b").value).value;
  });
}

effnum_status effnum_mu_uncertainty_observable(const effnum_state* s, const effnum_observable* o, double* out,
                                               int* degenerate) {
  return guarded([&] {
    require(out, "out");
    const auto r = effnum::mu_uncertainty_observable(require(s, "s").value, require(o, "o").value);
    *out = r.value.value;
    if (degenerate) *degenerate = r.degenerate_spectrum ? 1 : 0;
  });
}

effnum_status effnum_sample_measurements(const effnum_state* s, const effnum_observable* o, size_t count,
                                         uint64_t seed, effnum_record** out) {
  return guarded([&] {
    require(out, "out");
    const effnum::QuantumState& psi = require(s, "s").value;
    if (o != nullptr) {
      *out = new effnum_record{effnum::sample_measurements(psi, o->value, count, seed)};
      return;
    }
    std::vector<double> labels(psi.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<double>(i);
    *out = new effnum_record{effnum::sample_measurements(psi, effnum::Observable::diagonal(labels), count, seed)};
  });
}

void effnum_record_destroy(effnum_record* r) { delete r; }

size_t effnum_record_size(const effnum_record* r) { return r ? r->value.outcomes.size() : 0; }

effnum_status effnum_record_outcome(const effnum_record* r, size_t l, size_t* index, double* eigenvalue) {
  return guarded([&] {
    const auto& outcomes = require(r, "r").value.outcomes;
    if (l >= outcomes.size()) throw effnum::Error(ErrorCode::invalid_argument, "outcome index out of range");
    if (index) *index = outcomes[l].index;
    if (eigenvalue) *eigenvalue = outcomes[l].eigenvalue;
  });
}

effnum_status effnum_empirical_mu_uncertainty(const effnum_record* r, size_t n, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = effnum::empirical_mu_uncertainty(require(r, "r").value, n).value;
  });
}

// ---- continuum

effnum_status effnum_grid_create(const size_t* dims, const double* spacing, const double* origin, size_t rank,
                                 const double* re_im, size_t count, double tolerance, effnum_grid** out) {
  return guarded([&] {
    require(out, "out");
    if (rank > 0) {
      require(dims, "dims");
      require(spacing, "spacing");
    }
    std::vector<std::size_t> d(dims, dims + rank);
    std::vector<double> o = origin ? std::vector<double>(origin, origin + rank) : std::vector<double>{};
    const double t = tolerance > 0.0 ? tolerance : effnum::tol::cont_file;
    *out = new effnum_grid{effnum::GridWavefunction(std::move(d), doubles(spacing, rank, "spacing"),
                                                    complexes(re_im, count, "re_im"), t, std::move(o))};
  });
}

void effnum_grid_destroy(effnum_grid* g) { delete g; }

size_t effnum_grid_cell_count(const effnum_grid* g) { return g ? g->value.cell_count() : 0; }

double effnum_grid_cell_volume(const effnum_grid* g) { return g ? g->value.cell_volume() : 0.0; }

double effnum_grid_region_volume(const effnum_grid* g) { return g ? g->value.region_volume() : 0.0; }

effnum_status effnum_grid_effective_volume(const effnum_grid* g, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = effnum::effective_volume(require(g, "g").value).value;
  });
}

effnum_status effnum_grid_discrete_limit(const effnum_grid* g, effnum_counting** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(effnum::discrete_limit_check(require(g, "g").value));
  });
}

// ---- axiom verification

effnum_generator_config effnum_generator_config_default(void) {
  const effnum::GeneratorConfig d;
  return {d.seed, d.max_n, d.trials_per_axiom, d.sparsity};
}

effnum_status effnum_battery_run(effnum_quantifier q, const effnum_generator_config* cfg, effnum_battery** out) {
  return guarded([&] {
    require(out, "out");
    const effnum_generator_config& c = require(cfg, "cfg");
    const effnum::GeneratorConfig config{c.seed, c.max_n, c.trials_per_axiom, c.sparsity};
    const effnum::QuantifierDescriptor d = descriptor(q);
    auto reports = effnum::run_full_battery(d, config);
    std::string json = effnum::to_json(d, config, reports);
    *out = new effnum_battery{d, std::move(reports), std::move(json)};
  });
}

void effnum_battery_destroy(effnum_battery* b) { delete b; }

size_t effnum_battery_size(const effnum_battery* b) { return b ? b->reports.size() : 0; }

effnum_status effnum_battery_result(const effnum_battery* b, size_t k, const char** axiom, int* passed,
                                    size_t* violation_count) {
  return guarded([&] {
    const auto& reports = require(b, "b").reports;
    if (k >= reports.size()) throw effnum::Error(ErrorCode::invalid_argument, "report index out of range");
    if (axiom) *axiom = effnum::label(reports[k].axiom).data();
    if (passed) *passed = reports[k].passed ? 1 : 0;
    if (violation_count) *violation_count = reports[k].violation_count;
  });
}

int effnum_battery_matches_expected(const effnum_battery* b) {
  return b && effnum::matches_expected(b->quantifier.kind(), b->reports) ? 1 : 0;
}

int effnum_battery_all_passed(const effnum_battery* b) {
  if (!b) return 0;
  for (const auto& r : b->reports)
    if (!r.passed) return 0;
  return 1;
}

const char* effnum_battery_json(const effnum_battery* b) { return b ? b->json.c_str() : ""; }

// ---- Anderson demo

effnum_status effnum_anderson_run(size_t sites, double disorder, double hopping, uint64_t seed, size_t realizations,
                                  effnum_anderson** out) {
  return guarded([&] {
    require(out, "out");
    *out = new effnum_anderson{effnum::run_anderson({sites, disorder, hopping, seed, realizations})};
  });
}

void effnum_anderson_destroy(effnum_anderson* a) { delete a; }

size_t effnum_anderson_row_count(const effnum_anderson* a) { return a ? a->value.rows.size() : 0; }

effnum_status effnum_anderson_row_at(const effnum_anderson* a, size_t k, effnum_anderson_row* out) {
  return guarded([&] {
    require(out, "out");
    const auto& rows = require(a, "a").value.rows;
    if (k >= rows.size()) throw effnum::Error(ErrorCode::invalid_argument, "row index out of range");
    const auto& r = rows[k];
    *out = {r.realization, r.index, r.energy, r.n_star, r.participation};
  });
}

effnum_status effnum_anderson_means(const effnum_anderson* a, double* n_star, double* participation,
                                    size_t* degenerate_realizations) {
  return guarded([&] {
    const auto& t = require(a, "a").value;
    if (n_star) *n_star = t.mean_n_star;
    if (participation) *participation = t.mean_participation;
    if (degenerate_realizations) *degenerate_realizations = t.degenerate_realizations;
  });
}

}  // extern "C"
