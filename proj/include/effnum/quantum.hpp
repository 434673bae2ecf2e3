#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "effnum/counting.hpp"
#include "effnum/enf.hpp"

namespace effnum {

using Complex = std::complex<double>;

class Observable;
struct Spectrum;

/// Unit-norm state vector.
class QuantumState {
 public:
  explicit QuantumState(std::vector<Complex> amplitudes,
                        Normalization mode = Normalization::reject);

  /// |k> in dimension n.
  static QuantumState basis_state(std::size_t n, std::size_t k);
  /// (1, ..., 1) / sqrt(n).
  static QuantumState uniform(std::size_t n);

  std::size_t size() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

 private:
  std::vector<Complex> amplitudes_;
};

/// Orthonormal basis stored as an n x n row-major matrix whose rows are the
/// basis states. The identity basis is represented without storage.
class ProbingBasis {
 public:
  /// Throws Error(dimension_mismatch) if rows.size() != n*n and
  /// Error(non_orthonormal_basis) if max |B B^† - I| exceeds tol::ortho.
  ProbingBasis(std::size_t n, std::vector<Complex> rows);

  static ProbingBasis identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool is_identity() const noexcept { return rows_.empty(); }

  /// Basis state i.
  std::vector<Complex> vector(std::size_t i) const;
  /// <i|psi>.
  Complex overlap(std::size_t i, std::span<const Complex> psi) const;

 private:
  struct Trusted {};
  ProbingBasis(Trusted, std::size_t n, std::vector<Complex> rows) : n_(n), rows_(std::move(rows)) {}
  friend Spectrum eigenbasis(const Observable& o);

  std::size_t n_ = 0;
  std::vector<Complex> rows_;
};

/// Hermitian operator, n x n row-major.
class Observable {
 public:
  /// Throws Error(dimension_mismatch) or Error(not_hermitian) when
  /// ||O - O^†||_F > tol::herm * ||O||_F.
  Observable(std::size_t n, std::vector<Complex> matrix);

  static Observable diagonal(std::span<const double> values);

  std::size_t size() const noexcept { return n_; }
  std::span<const Complex> matrix() const noexcept { return matrix_; }
  Complex operator()(std::size_t row, std::size_t col) const { return matrix_[row * n_ + col]; }

 private:
  std::size_t n_ = 0;
  std::vector<Complex> matrix_;
};

/// Eigenpairs of an observable, eigenvalues ascending. `degenerate` is set
/// when two eigenvalues lie closer than tol::degen times the spectral range;
/// the eigenvectors inside such a subspace are then an arbitrary choice of
/// the solver, and so is any uncertainty derived from them.
struct Spectrum {
  ProbingBasis basis;
  std::vector<double> eigenvalues;
  bool degenerate = false;
  /// ||O - V Λ V^†||_F / ||O||_F
  double residual = 0.0;
};

/// Throws Error(numeric_failure) if the reconstruction residual exceeds tol::eig.
Spectrum eigenbasis(const Observable& o);

/// Born probabilities |<i|psi>|^2.
std::vector<double> born_probabilities(const QuantumState& psi, const ProbingBasis& basis);

/// w_i = N |<i|psi>|^2. Throws Error(dimension_mismatch).
CountingVector weights_from_state(const QuantumState& psi, const ProbingBasis& basis);

/// Minimal measure uncertainty of psi probed in `basis`: n_star of the weights.
EffectiveNumber mu_uncertainty(const QuantumState& psi, const ProbingBasis& basis);

struct ObservableUncertainty {
  EffectiveNumber value;
  bool degenerate_spectrum = false;
};

ObservableUncertainty mu_uncertainty_observable(const QuantumState& psi, const Observable& o);

struct Outcome {
  std::size_t index = 0;
  double eigenvalue = 0.0;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct MeasurementRecord {
  std::vector<Outcome> outcomes;
  std::uint64_t seed = 0;
  std::size_t dimension = 0;
};

/// `count` independent collapses of psi onto the eigenbasis of `o`, by
/// inverse CDF over the Born probabilities. The generator is Rng seeded with
/// derive_stream_seed(seed, 0); draw l uses the l-th uniform.
MeasurementRecord sample_measurements(const QuantumState& psi, const Observable& o,
                                      std::size_t count, std::uint64_t seed);
MeasurementRecord sample_measurements(const QuantumState& psi, const Spectrum& spectrum,
                                      std::size_t count, std::uint64_t seed);

/// Frequency of each outcome index in [0, n).
std::vector<double> outcome_frequencies(const MeasurementRecord& record, std::size_t n);

/// n_star of the empirical counting vector n * frequency_i.
/// Throws Error(empty_record) or Error(dimension_mismatch) for indices >= n.
EffectiveNumber empirical_mu_uncertainty(const MeasurementRecord& record, std::size_t n);

}  // namespace effnum
