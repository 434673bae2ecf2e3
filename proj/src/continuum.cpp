#include "effnum/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "effnum/enf.hpp"
#include "effnum/error.hpp"
#include "effnum/summation.hpp"

namespace effnum {
namespace {

double riemann_norm(std::span<const Complex> samples, double cell_volume) {
  CompensatedSum acc;
  for (const Complex& z : samples) acc += std::norm(z);
  return acc.value() * cell_volume;
}

std::size_t product(std::span<const std::size_t> dims) {
  std::size_t p = 1;
  for (std::size_t d : dims) p *= d;
  return p;
}

}  // namespace

GridWavefunction::GridWavefunction(std::vector<std::size_t> dims, std::vector<double> spacing,
                                   std::vector<Complex> samples, double tolerance,
                                   std::vector<double> origin)
    : dims_(std::move(dims)),
      spacing_(std::move(spacing)),
      origin_(std::move(origin)),
      samples_(std::move(samples)),
      tolerance_(tolerance) {
  if (dims_.empty()) throw Error(ErrorCode::dimension_mismatch, "grid needs at least one axis");
  if (spacing_.size() != dims_.size()) {
    std::ostringstream msg;
    msg << "grid has " << dims_.size() << " axes but " << spacing_.size() << " spacings";
    throw Error(ErrorCode::dimension_mismatch, msg.str());
  }
  if (origin_.empty()) origin_.assign(dims_.size(), 0.0);
  if (origin_.size() != dims_.size()) throw Error(ErrorCode::dimension_mismatch, "origin length differs from axis count");
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (dims_[k] == 0) throw Error(ErrorCode::invalid_argument, "grid axes need at least one point");
    if (!(spacing_[k] > 0.0) || !std::isfinite(spacing_[k]))
      throw Error(ErrorCode::invalid_argument, "grid spacings must be positive and finite");
  }
  if (samples_.size() != product(dims_)) {
    std::ostringstream msg;
    msg << "grid of shape";
    for (std::size_t d : dims_) msg << ' ' << d;
    msg << " needs " << product(dims_) << " samples, got " << samples_.size();
    throw Error(ErrorCode::dimension_mismatch, msg.str());
  }
  for (const Complex& z : samples_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::invalid_argument, "grid samples must be finite");

  const double norm = riemann_norm(samples_, cell_volume());
  if (!(std::fabs(norm - 1.0) <= tolerance_)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "Riemann sum of |psi|^2 is " << norm << ", expected 1";
    throw Error(ErrorCode::not_normalized, msg.str());
  }
}

GridWavefunction GridWavefunction::sample(std::vector<std::size_t> dims, std::vector<double> spacing,
                                          std::vector<double> origin, const Sampler& f, double tolerance) {
  if (origin.empty()) origin.assign(dims.size(), 0.0);
  if (spacing.size() != dims.size() || origin.size() != dims.size())
    throw Error(ErrorCode::dimension_mismatch, "dims, spacing and origin lengths differ");
  if (dims.empty() || std::find(dims.begin(), dims.end(), std::size_t{0}) != dims.end())
    throw Error(ErrorCode::invalid_argument, "grid axes need at least one point");

  const std::size_t cells = product(dims);
  std::vector<Complex> samples(cells);
  std::vector<double> x(dims.size());
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::size_t rest = cell;
    for (std::size_t k = dims.size(); k-- > 0;) {
      x[k] = origin[k] + (static_cast<double>(rest % dims[k]) + 0.5) * spacing[k];
      rest /= dims[k];
    }
    samples[cell] = f(x);
  }

  double cell = 1.0;
  for (double h : spacing) cell *= h;
  const double norm = riemann_norm(samples, cell);
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw Error(ErrorCode::not_normalized, "sampled function has zero or non-finite norm on the grid");
  const double scale = 1.0 / std::sqrt(norm);
  for (Complex& z : samples) z *= scale;
  return GridWavefunction(std::move(dims), std::move(spacing), std::move(samples), tolerance, std::move(origin));
}

double GridWavefunction::cell_volume() const noexcept {
  double v = 1.0;
  for (double h : spacing_) v *= h;
  return v;
}

double GridWavefunction::region_volume() const noexcept {
  double v = 1.0;
  for (std::size_t k = 0; k < dims_.size(); ++k) v *= static_cast<double>(dims_[k]) * spacing_[k];
  return v;
}

std::vector<double> GridWavefunction::midpoint(std::size_t cell) const {
  std::vector<double> x(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    x[k] = origin_[k] + (static_cast<double>(cell % dims_[k]) + 0.5) * spacing_[k];
    cell /= dims_[k];
  }
  return x;
}

EffectiveVolume effective_volume(const GridWavefunction& g) {
  const double volume = g.region_volume();
  CompensatedSum acc;
  for (const Complex& z : g.samples()) acc += std::min(volume * std::norm(z), 1.0);
  return {acc.value() * g.cell_volume(), volume};
}

CountingVector discrete_limit_check(const GridWavefunction& g) {
  const double cells = static_cast<double>(g.cell_count());
  const double dv = g.cell_volume();
  std::vector<double> w(g.cell_count());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = cells * (std::norm(g.samples()[i]) * dv);
  return CountingVector(std::move(w), Normalization::reject, std::max(g.tolerance(), tol::norm));
}

GridWavefunction refine(const GridWavefunction& g, const GridWavefunction::Sampler& f) {
  std::vector<std::size_t> dims(g.dims().begin(), g.dims().end());
  std::vector<double> spacing(g.spacing().begin(), g.spacing().end());
  for (std::size_t& d : dims) d *= 2;
  for (double& h : spacing) h /= 2;
  return GridWavefunction::sample(std::move(dims), std::move(spacing), {g.origin().begin(), g.origin().end()}, f,
                                  g.tolerance());
}

}  // namespace effnum
