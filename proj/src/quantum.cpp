#include "effnum/quantum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "effnum/error.hpp"
#include "effnum/rng.hpp"
#include "effnum/summation.hpp"
#include "effnum/tolerance.hpp"

namespace effnum {
namespace {

using RowMajorMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMatrixMap = Eigen::Map<const RowMajorMatrix>;

void require_same_dimension(std::size_t a, std::size_t b, const char* what) {
  if (a == b) return;
  std::ostringstream msg;
  msg << what << ": dimensions " << a << " and " << b << " differ";
  throw Error(ErrorCode::dimension_mismatch, msg.str());
}

void require_square(std::size_t n, std::size_t entries, const char* what) {
  if (n == 0) throw Error(ErrorCode::dimension_mismatch, std::string(what) + " must have positive dimension");
  if (entries == n * n) return;
  std::ostringstream msg;
  msg << what << " of dimension " << n << " needs " << n * n << " entries, got " << entries;
  throw Error(ErrorCode::dimension_mismatch, msg.str());
}

}  // namespace

QuantumState::QuantumState(std::vector<Complex> amplitudes, Normalization mode)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw Error(ErrorCode::invalid_argument, "state must have at least one amplitude");
  CompensatedSum norm2;
  for (const Complex& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw Error(ErrorCode::invalid_argument, "state amplitudes must be finite");
    norm2 += std::norm(a);
  }
  const double s = norm2.value();
  if (std::fabs(s - 1.0) <= tol::norm) return;
  if (mode == Normalization::rescale && s > 0.0) {
    const double norm = std::sqrt(s);
    for (Complex& a : amplitudes_) a /= norm;
    return;
  }
  std::ostringstream msg;
  msg.precision(17);
  msg << "state has squared norm " << s << ", expected 1";
  throw Error(ErrorCode::not_normalized, msg.str());
}

QuantumState QuantumState::basis_state(std::size_t n, std::size_t k) {
  if (k >= n) throw Error(ErrorCode::invalid_argument, "basis index out of range");
  std::vector<Complex> a(n, 0.0);
  a[k] = 1.0;
  return QuantumState(std::move(a));
}

QuantumState QuantumState::uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "state must have at least one amplitude");
  return QuantumState(std::vector<Complex>(n, 1.0 / std::sqrt(static_cast<double>(n))));
}

ProbingBasis::ProbingBasis(std::size_t n, std::vector<Complex> rows) : n_(n), rows_(std::move(rows)) {
  require_square(n_, rows_.size(), "probing basis");
  const ConstMatrixMap b(rows_.data(), static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_));
  const RowMajorMatrix gram = b * b.adjoint();
  const double defect = (gram - RowMajorMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (!(defect <= tol::ortho)) {
    std::ostringstream msg;
    msg << "rows deviate from orthonormality by " << defect;
    throw Error(ErrorCode::non_orthonormal_basis, msg.str());
  }
}

ProbingBasis ProbingBasis::identity(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::dimension_mismatch, "probing basis must have positive dimension");
  return ProbingBasis(Trusted{}, n, {});
}

std::vector<Complex> ProbingBasis::vector(std::size_t i) const {
  if (i >= n_) throw Error(ErrorCode::invalid_argument, "basis index out of range");
  if (is_identity()) {
    std::vector<Complex> e(n_, 0.0);
    e[i] = 1.0;
    return e;
  }
  return {rows_.begin() + static_cast<std::ptrdiff_t>(i * n_),
          rows_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_)};
}

Complex ProbingBasis::overlap(std::size_t i, std::span<const Complex> psi) const {
  require_same_dimension(n_, psi.size(), "overlap");
  if (is_identity()) return psi[i];
  Complex acc = 0.0;
  const Complex* row = rows_.data() + i * n_;
  for (std::size_t k = 0; k < n_; ++k) acc += std::conj(row[k]) * psi[k];
  return acc;
}

Observable::Observable(std::size_t n, std::vector<Complex> matrix) : n_(n), matrix_(std::move(matrix)) {
  require_square(n_, matrix_.size(), "observable");
  for (const Complex& z : matrix_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::invalid_argument, "observable entries must be finite");
  const ConstMatrixMap o(matrix_.data(), static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_));
  const double skew = (o - o.adjoint()).norm();
  if (skew > tol::herm * o.norm()) {
    std::ostringstream msg;
    msg << "||O - O^dagger||_F = " << skew << " relative to ||O||_F = " << o.norm();
    throw Error(ErrorCode::not_hermitian, msg.str());
  }
}

Observable Observable::diagonal(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<Complex> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = values[i];
  return Observable(n, std::move(m));
}

Spectrum eigenbasis(const Observable& o) {
  const auto n = static_cast<Eigen::Index>(o.size());
  const ConstMatrixMap m(o.matrix().data(), n, n);
  // Average with the adjoint so the solver sees an exactly Hermitian matrix.
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::numeric_failure, "eigensolver did not converge");

  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXcd& vectors = solver.eigenvectors();

  const double scale = m.norm();
  const double residual_abs = (m - vectors * values.asDiagonal() * vectors.adjoint()).norm();
  const double residual = scale > 0.0 ? residual_abs / scale : residual_abs;
  if (!(residual <= tol::eig)) {
    std::ostringstream msg;
    msg << "eigen-reconstruction residual " << residual << " exceeds " << tol::eig;
    throw Error(ErrorCode::numeric_failure, msg.str());
  }

  // Rows of the probing basis are the eigenvectors (columns of V).
  std::vector<Complex> rows(static_cast<std::size_t>(n * n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) rows[static_cast<std::size_t>(i * n + k)] = vectors(k, i);

  std::vector<double> eigenvalues(values.data(), values.data() + n);
  bool degenerate = false;
  if (n >= 2) {
    const double threshold = tol::degen * (eigenvalues.back() - eigenvalues.front());
    for (std::size_t i = 1; i < eigenvalues.size(); ++i)
      if (eigenvalues[i] - eigenvalues[i - 1] <= threshold) degenerate = true;
  }
  return Spectrum{ProbingBasis(ProbingBasis::Trusted{}, o.size(), std::move(rows)), std::move(eigenvalues),
                  degenerate, residual};
}

std::vector<double> born_probabilities(const QuantumState& psi, const ProbingBasis& basis) {
  require_same_dimension(psi.size(), basis.size(), "state and basis");
  std::vector<double> p(psi.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(basis.overlap(i, psi.amplitudes()));
  return p;
}

CountingVector weights_from_state(const QuantumState& psi, const ProbingBasis& basis) {
  std::vector<double> w = born_probabilities(psi, basis);
  const double n = static_cast<double>(w.size());
  for (double& x : w) x *= n;
  // Completeness holds up to the state's norm slack plus the basis defect.
  return CountingVector(std::move(w), Normalization::reject, tol::norm + n * tol::ortho);
}

EffectiveNumber mu_uncertainty(const QuantumState& psi, const ProbingBasis& basis) {
  return n_star(weights_from_state(psi, basis));
}

ObservableUncertainty mu_uncertainty_observable(const QuantumState& psi, const Observable& o) {
  require_same_dimension(psi.size(), o.size(), "state and observable");
  const Spectrum s = eigenbasis(o);
  return {mu_uncertainty(psi, s.basis), s.degenerate};
}

MeasurementRecord sample_measurements(const QuantumState& psi, const Observable& o, std::size_t count,
                                      std::uint64_t seed) {
  require_same_dimension(psi.size(), o.size(), "state and observable");
  return sample_measurements(psi, eigenbasis(o), count, seed);
}

MeasurementRecord sample_measurements(const QuantumState& psi, const Spectrum& spectrum, std::size_t count,
                                      std::uint64_t seed) {
  const std::vector<double> p = born_probabilities(psi, spectrum.basis);
  std::vector<double> cdf(p.size());
  CompensatedSum acc;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc.value();
  }
  const double total = cdf.back();

  MeasurementRecord record;
  record.seed = seed;
  record.dimension = p.size();
  record.outcomes.reserve(count);
  Rng rng(derive_stream_seed(seed, 0));
  for (std::size_t l = 0; l < count; ++l) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    const auto i = static_cast<std::size_t>(it - cdf.begin());
    record.outcomes.push_back({i, spectrum.eigenvalues[i]});
  }
  return record;
}

std::vector<double> outcome_frequencies(const MeasurementRecord& record, std::size_t n) {
  if (record.outcomes.empty()) throw Error(ErrorCode::empty_record, "measurement record has no outcomes");
  std::vector<std::size_t> counts(n, 0);
  for (const Outcome& o : record.outcomes) {
    if (o.index >= n) {
      std::ostringstream msg;
      msg << "outcome index " << o.index << " outside [0, " << n << ")";
      throw Error(ErrorCode::dimension_mismatch, msg.str());
    }
    ++counts[o.index];
  }
  std::vector<double> f(n);
  const double total = static_cast<double>(record.outcomes.size());
  for (std::size_t i = 0; i < n; ++i) f[i] = static_cast<double>(counts[i]) / total;
  return f;
}

EffectiveNumber empirical_mu_uncertainty(const MeasurementRecord& record, std::size_t n) {
  std::vector<double> w = outcome_frequencies(record, n);
  const double scale = static_cast<double>(n);
  for (double& x : w) x *= scale;
  return n_star(CountingVector(std::move(w)));
}

}  // namespace effnum
