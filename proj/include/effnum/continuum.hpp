#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "effnum/counting.hpp"
#include "effnum/quantum.hpp"
#include "effnum/tolerance.hpp"

namespace effnum {

/// Wavefunction sampled at the cell midpoints of a rectangular grid in D
/// dimensions. Samples are row-major (last axis fastest). The region is the
/// grid's bounding box, starting at `origin`.
class GridWavefunction {
 public:
  using Sampler = std::function<Complex(std::span<const double>)>;

  /// Throws Error(dimension_mismatch) on inconsistent shapes,
  /// Error(invalid_argument) on non-positive dims/spacings, and
  /// Error(not_normalized) when |sum |psi|^2 dV - 1| > tolerance.
  GridWavefunction(std::vector<std::size_t> dims, std::vector<double> spacing,
                   std::vector<Complex> samples, double tolerance = tol::cont_file,
                   std::vector<double> origin = {});

  /// Samples `f` at every cell midpoint and rescales so that the Riemann sum
  /// of |psi|^2 is one. Throws Error(not_normalized) if f vanishes on the grid.
  static GridWavefunction sample(std::vector<std::size_t> dims, std::vector<double> spacing,
                                 std::vector<double> origin, const Sampler& f,
                                 double tolerance = tol::cont_sampled);

  std::size_t dimension() const noexcept { return dims_.size(); }
  std::span<const std::size_t> dims() const noexcept { return dims_; }
  std::span<const double> spacing() const noexcept { return spacing_; }
  std::span<const double> origin() const noexcept { return origin_; }
  std::span<const Complex> samples() const noexcept { return samples_; }
  double tolerance() const noexcept { return tolerance_; }

  std::size_t cell_count() const noexcept { return samples_.size(); }
  /// Product of the spacings.
  double cell_volume() const noexcept;
  /// V = product of dims_k * spacing_k.
  double region_volume() const noexcept;
  /// Midpoint of the cell with row-major index `cell`.
  std::vector<double> midpoint(std::size_t cell) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<double> spacing_;
  std::vector<double> origin_;
  std::vector<Complex> samples_;
  double tolerance_;
};

struct EffectiveVolume {
  double value = 0.0;
  double region_volume = 0.0;
};

/// Midpoint Riemann sum of min(V |psi(x)|^2, 1) over the region.
EffectiveVolume effective_volume(const GridWavefunction& g);

/// Counting vector induced by the cells: w_i = (cell count) |psi_i|^2 dV.
/// n_star of it times the cell volume equals effective_volume(g); the
/// vector is validated with the grid's own normalization tolerance.
CountingVector discrete_limit_check(const GridWavefunction& g);

/// Doubles the point count along every axis (halving the spacing, same
/// origin), resamples `f` and renormalizes.
GridWavefunction refine(const GridWavefunction& g, const GridWavefunction::Sampler& f);

}  // namespace effnum
