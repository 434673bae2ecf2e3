#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "effnum/anderson.hpp"
#include "effnum/enf.hpp"
#include "helpers.hpp"

using namespace effnum;
using testing::error_of;

namespace {

// n_star of the exact open-chain eigenvector sqrt(2/(n+1)) sin(pi k j/(n+1)).
double sine_n_star(std::size_t n, std::size_t k) {
  std::vector<double> w(n);
  const double m = static_cast<double>(n + 1);
  for (std::size_t j = 1; j <= n; ++j) {
    const double s = std::sin(std::numbers::pi * static_cast<double>(k * j) / m);
    w[j - 1] = static_cast<double>(n) * (2 / m) * s * s;
  }
  return n_star(CountingVector(std::move(w), Normalization::rescale)).value;
}

}  // namespace

TEST_CASE("hamiltonian layout") {
  const std::vector<double> onsite{0.5, -0.25, 1.0};
  const Observable h = tight_binding_hamiltonian(onsite, 2.0);
  CHECK(h(0, 0) == Complex(0.5));
  CHECK(h(1, 1) == Complex(-0.25));
  CHECK(h(0, 1) == Complex(2.0));
  CHECK(h(2, 1) == Complex(2.0));
  CHECK(h(0, 2) == Complex(0.0));
}

TEST_CASE("disorder draws") {
  const std::vector<double> e = draw_disorder(1000, 3.0, 42, 0);
  CHECK(*std::min_element(e.begin(), e.end()) >= -1.5);
  CHECK(*std::max_element(e.begin(), e.end()) < 1.5);
  CHECK(e == draw_disorder(1000, 3.0, 42, 0));
  CHECK(e != draw_disorder(1000, 3.0, 42, 1));
  CHECK(e != draw_disorder(1000, 3.0, 43, 0));
  for (double x : draw_disorder(10, 0.0, 42, 0)) CHECK(x == 0.0);
}

TEST_CASE("zero disorder reproduces the sine eigenstates") {
  for (std::size_t n : {2u, 3u, 16u, 64u}) {
    const AndersonTable t = run_anderson({.sites = n, .disorder = 0.0, .hopping = 1.0, .seed = 1, .realizations = 1});
    REQUIRE(t.rows.size() == n);
    CHECK(t.degenerate_realizations == 0);
    for (std::size_t idx = 0; idx < n; ++idx) {
      // Ascending energies 2 cos(pi k/(n+1)) run from k = n down to k = 1.
      const std::size_t k = n - idx;
      const double energy = 2 * std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n + 1));
      CHECK(t.rows[idx].energy == doctest::Approx(energy).epsilon(1e-12));
      CHECK(std::fabs(t.rows[idx].n_star - sine_n_star(n, k)) <= 1e-10);
    }
  }
}

TEST_CASE("two-site chains stay within the bounds") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (double disorder : {0.0, 0.5, 5.0, 500.0}) {
      const AndersonTable t = run_anderson({.sites = 2, .disorder = disorder, .hopping = 1.0, .seed = seed});
      for (const auto& row : t.rows) {
        CHECK(row.n_star >= 1.0 - 1e-12);
        CHECK(row.n_star <= 2.0 + 1e-12);
        CHECK(row.n_star <= row.participation + 1e-12);
      }
    }
  }
}

TEST_CASE("strong disorder localizes") {
  const AndersonTable clean = run_anderson({.sites = 64, .disorder = 0.0});
  const AndersonTable dirty = run_anderson({.sites = 64, .disorder = 100.0, .seed = 3, .realizations = 5});
  CHECK(clean.mean_n_star > 0.6 * 64);
  CHECK(dirty.mean_n_star < 0.1 * clean.mean_n_star);
  CHECK(dirty.rows.size() == 64 * 5);
  CHECK(dirty.rows.back().realization == 4);
}

TEST_CASE("runs are deterministic") {
  const AndersonParams p{.sites = 12, .disorder = 2.0, .hopping = 0.7, .seed = 9, .realizations = 3};
  const AndersonTable a = run_anderson(p);
  const AndersonTable b = run_anderson(p);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].energy == b.rows[i].energy);
    CHECK(a.rows[i].n_star == b.rows[i].n_star);
  }
  CHECK(a.mean_n_star == b.mean_n_star);
}

TEST_CASE("invalid parameters") {
  CHECK(error_of([] { run_anderson({.sites = 1}); }) == ErrorCode::invalid_argument);
  CHECK(error_of([] { run_anderson({.sites = 4, .realizations = 0}); }) == ErrorCode::invalid_argument);
  CHECK(error_of([] { run_anderson({.sites = 4, .disorder = -1.0}); }) == ErrorCode::invalid_argument);
}
