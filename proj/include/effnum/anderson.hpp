#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "effnum/quantum.hpp"

namespace effnum {

/// Open tight-binding chain: `onsite` on the diagonal and `hopping` between
/// nearest neighbours.
Observable tight_binding_hamiltonian(std::span<const double> onsite, double hopping);

/// On-site energies uniform in [-disorder/2, disorder/2] for realization r,
/// drawn from stream 0x200 + r of `seed`.
std::vector<double> draw_disorder(std::size_t sites, double disorder, std::uint64_t seed,
                                  std::size_t realization);

struct AndersonParams {
  std::size_t sites = 64;
  double disorder = 1.0;
  double hopping = 1.0;
  std::uint64_t seed = 1;
  std::size_t realizations = 1;
};

/// One eigenstate of one realization, quantified in the position basis.
struct EigenstateRow {
  std::size_t realization = 0;
  std::size_t index = 0;
  double energy = 0.0;
  double n_star = 0.0;
  double participation = 0.0;
};

struct AndersonTable {
  std::vector<EigenstateRow> rows;
  double mean_n_star = 0.0;
  double mean_participation = 0.0;
  /// Realizations whose spectrum was flagged degenerate.
  std::size_t degenerate_realizations = 0;
};

/// Diagonalizes every realization and quantifies all eigenstates.
/// Throws Error(invalid_argument) for sites < 2, realizations == 0 or a
/// negative disorder strength.
AndersonTable run_anderson(const AndersonParams& params);

}  // namespace effnum
