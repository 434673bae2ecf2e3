#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "effnum/counting.hpp"
#include "effnum/error.hpp"
#include "effnum/quantum.hpp"

namespace testing {

// Code of the effnum::Error thrown by f; fails the test when nothing or
// something else is thrown.
template <class F>
effnum::ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const effnum::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected effnum::Error");
}

// Seeded generators for property tests, independent of the library RNG.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
  std::size_t size(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return uniform() < p; }

  // Random weights summing to n; a share of entries is zero and some
  // vectors are pushed towards one heavy entry.
  std::vector<double> weights(std::size_t n, double zero_share = 0.25) {
    std::vector<double> w(n);
    const double power = uniform(0.3, 3.0);
    double sum = 0.0;
    for (double& x : w) {
      x = coin(zero_share) ? 0.0 : std::pow(-std::log1p(-uniform()), power);
      sum += x;
    }
    if (sum == 0.0) {
      w[index(n)] = 1.0;
      sum = 1.0;
    }
    for (double& x : w) x *= static_cast<double>(n) / sum;
    return w;
  }

  effnum::CountingVector counting(std::size_t n, double zero_share = 0.25) {
    return effnum::CountingVector(weights(n, zero_share), effnum::Normalization::rescale);
  }

  // Weights where every entry is 0 or at least 1.
  effnum::CountingVector collapsed(std::size_t n) {
    const std::size_t k = size(1, n);
    std::vector<double> w(n, 0.0);
    std::vector<double> extra(k);
    double total = 0.0;
    for (double& e : extra) total += (e = uniform());
    const double spare = static_cast<double>(n - k);
    for (std::size_t i = 0; i < k; ++i) w[i] = 1.0 + (total > 0 ? spare * extra[i] / total : 0.0);
    for (std::size_t i = n; i-- > 1;) std::swap(w[i], w[index(i + 1)]);
    return effnum::CountingVector(std::move(w), effnum::Normalization::rescale);
  }

  std::vector<effnum::Complex> amplitudes(std::size_t n) {
    std::vector<effnum::Complex> a(n);
    std::normal_distribution<double> g;
    double norm = 0.0;
    for (auto& z : a) {
      z = {g(engine_), g(engine_)};
      norm += std::norm(z);
    }
    for (auto& z : a) z /= std::sqrt(norm);
    return a;
  }

  // Haar-ish unitary from Gram-Schmidt on Gaussian columns, row-major.
  std::vector<effnum::Complex> unitary(std::size_t n) {
    std::vector<std::vector<effnum::Complex>> rows;
    while (rows.size() < n) {
      std::vector<effnum::Complex> v = amplitudes(n);
      for (const auto& r : rows) {
        effnum::Complex dot = 0.0;
        for (std::size_t k = 0; k < n; ++k) dot += std::conj(r[k]) * v[k];
        for (std::size_t k = 0; k < n; ++k) v[k] -= dot * r[k];
      }
      double norm = 0.0;
      for (const auto& z : v) norm += std::norm(z);
      if (norm < 1e-6) continue;
      for (auto& z : v) z /= std::sqrt(norm);
      rows.push_back(std::move(v));
    }
    std::vector<effnum::Complex> u;
    for (const auto& r : rows) u.insert(u.end(), r.begin(), r.end());
    return u;
  }

  // Random Hermitian matrix, row-major.
  std::vector<effnum::Complex> hermitian(std::size_t n) {
    std::normal_distribution<double> g;
    std::vector<effnum::Complex> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      m[i * n + i] = g(engine_);
      for (std::size_t j = i + 1; j < n; ++j) {
        m[i * n + j] = {g(engine_), g(engine_)};
        m[j * n + i] = std::conj(m[i * n + j]);
      }
    }
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testing
