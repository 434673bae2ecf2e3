#include "effnum/anderson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "effnum/counting.hpp"
#include "effnum/enf.hpp"
#include "effnum/error.hpp"
#include "effnum/rng.hpp"
#include "effnum/summation.hpp"

namespace effnum {

Observable tight_binding_hamiltonian(std::span<const double> onsite, double hopping) {
  const std::size_t n = onsite.size();
  std::vector<Complex> h(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    h[i * n + i] = onsite[i];
    if (i + 1 < n) {
      h[i * n + i + 1] = hopping;
      h[(i + 1) * n + i] = hopping;
    }
  }
  return Observable(n, std::move(h));
}

std::vector<double> draw_disorder(std::size_t sites, double disorder, std::uint64_t seed,
                                  std::size_t realization) {
  Rng rng(derive_stream_seed(seed, 0x200 + realization));
  std::vector<double> onsite(sites);
  for (double& e : onsite) e = disorder * (rng.uniform() - 0.5);
  return onsite;
}

namespace {

// One step of inverse iteration with the tridiagonal H - lambda I, solved by
// LU with partial pivoting. Near the band edges the solver's vectors carry
// ~1e-12 admixtures of their neighbours; this removes them.
std::vector<Complex> polish(std::span<const double> onsite, double hopping, double lambda,
                            std::vector<Complex> v) {
  const std::size_t n = onsite.size();
  std::vector<double> d(n), du(n - 1, hopping), dl(n - 1, hopping), du2(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = onsite[i] - lambda;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::fabs(d[i]) >= std::fabs(dl[i])) {
      if (d[i] == 0.0) d[i] = std::numeric_limits<double>::epsilon() * std::fabs(hopping);
      const double fact = dl[i] / d[i];
      d[i + 1] -= fact * du[i];
      v[i + 1] -= fact * v[i];
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      const double temp = d[i + 1];
      d[i + 1] = du[i] - fact * temp;
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du2[i];
      }
      du[i] = temp;
      std::swap(v[i], v[i + 1]);
      v[i + 1] -= fact * v[i];
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = std::numeric_limits<double>::epsilon() * std::fabs(hopping);
  v[n - 1] /= d[n - 1];
  v[n - 2] = (v[n - 2] - du[n - 2] * v[n - 1]) / d[n - 2];
  for (std::size_t i = n - 2; i-- > 0;) v[i] = (v[i] - du[i] * v[i + 1] - du2[i] * v[i + 2]) / d[i];
  return v;
}

}  // namespace

AndersonTable run_anderson(const AndersonParams& params) {
  if (params.sites < 2) throw Error(ErrorCode::invalid_argument, "the chain needs at least two sites");
  if (params.realizations == 0) throw Error(ErrorCode::invalid_argument, "at least one realization is required");
  if (!(params.disorder >= 0.0) || !std::isfinite(params.disorder) || !std::isfinite(params.hopping))
    throw Error(ErrorCode::invalid_argument, "disorder must be finite and non-negative, hopping finite");

  AndersonTable table;
  table.rows.reserve(params.sites * params.realizations);
  CompensatedSum n_star_sum, participation_sum;
  const ProbingBasis position = ProbingBasis::identity(params.sites);

  for (std::size_t r = 0; r < params.realizations; ++r) {
    const std::vector<double> onsite = draw_disorder(params.sites, params.disorder, params.seed, r);
    const Spectrum spectrum = eigenbasis(tight_binding_hamiltonian(onsite, params.hopping));
    if (spectrum.degenerate) ++table.degenerate_realizations;
    for (std::size_t k = 0; k < params.sites; ++k) {
      std::vector<Complex> v = spectrum.basis.vector(k);
      // Degenerate levels would mix under inverse iteration.
      if (!spectrum.degenerate && params.hopping != 0.0)
        v = polish(onsite, params.hopping, spectrum.eigenvalues[k], std::move(v));
      const QuantumState state(std::move(v), Normalization::rescale);
      const CountingVector w = weights_from_state(state, position);
      const EigenstateRow row{r, k, spectrum.eigenvalues[k], n_star(w).value, participation_number(w)};
      n_star_sum += row.n_star;
      participation_sum += row.participation;
      table.rows.push_back(row);
    }
  }
  const double count = static_cast<double>(table.rows.size());
  table.mean_n_star = n_star_sum.value() / count;
  table.mean_participation = participation_sum.value() / count;
  return table;
}

}  // namespace effnum
