#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "effnum/enf.hpp"
#include "helpers.hpp"

using namespace effnum;
using testing::error_of;

TEST_CASE("n_star examples") {
  CHECK(n_star(CountingVector({1, 1, 1})).value == 3.0);
  CHECK(n_star(CountingVector({3, 0, 0})).value == 1.0);
  CHECK(n_star(CountingVector({0.5, 1.5, 1.0})).value == 2.5);
  CHECK(n_star(CountingVector({0.5, 1.5, 1.0})).n == 3);
}

TEST_CASE("n_star of uniform and delta vectors is exact for N up to 1000") {
  for (std::size_t n = 1; n <= 1000; ++n) {
    REQUIRE(n_star(CountingVector::uniform(n)).value == static_cast<double>(n));
    REQUIRE(n_star(CountingVector::delta(n, n / 2)).value == 1.0);
  }
}

TEST_CASE("support_count") {
  CHECK(support_count(CountingVector({1, 1, 1})) == 3.0);
  CHECK(support_count(CountingVector({3, 0, 0})) == 1.0);
  CHECK(support_count(CountingVector({0.5, 1.5, 2.0, 0})) == 3.0);
  CHECK(support_count(CountingVector({1e-13, 2 - 1e-13})) == 1.0);
}

TEST_CASE("participation_number") {
  CHECK(participation_number(CountingVector({1, 1, 1})) == doctest::Approx(3).epsilon(1e-15));
  CHECK(participation_number(CountingVector({3, 0, 0})) == 1.0);
  // 1 / (0.25 + 0.09 + 0.04), hand computed.
  CHECK(participation_number(CountingVector({1.5, 0.9, 0.6})) == doctest::Approx(1.0 / 0.38).epsilon(1e-14));
  CHECK(participation_number(CountingVector({1.5, 0.9, 0.6})) == doctest::Approx(2.6316).epsilon(1e-4));
}

TEST_CASE("exp_shannon") {
  CHECK(exp_shannon(CountingVector({1, 1, 1})) == doctest::Approx(3).epsilon(1e-14));
  CHECK(exp_shannon(CountingVector({3, 0, 0})) == 1.0);
  CHECK(exp_shannon(CountingVector({2, 2, 0, 0})) == doctest::Approx(2).epsilon(1e-14));
}

TEST_CASE("exp_renyi") {
  CHECK(exp_renyi(CountingVector({1, 1, 1}), 2) == doctest::Approx(3).epsilon(1e-14));
  CHECK(exp_renyi(CountingVector({3, 0, 0}), 0.5) == doctest::Approx(1).epsilon(1e-15));
  CHECK(exp_renyi(CountingVector({2, 2, 0, 0}), 2) == doctest::Approx(2).epsilon(1e-14));

  const CountingVector w({1.5, 0.9, 0.6});
  CHECK(exp_renyi(w, 2) == doctest::Approx(participation_number(w)).epsilon(1e-14));
  CHECK(exp_renyi(w, 1 + 1e-7) == exp_shannon(w));
  CHECK(exp_renyi(w, 1 + 1e-3) == doctest::Approx(exp_shannon(w)).epsilon(1e-3));

  CHECK(error_of([&] { exp_renyi(w, 1.0); }) == ErrorCode::bad_order);
  CHECK(error_of([&] { exp_renyi(w, 0.0); }) == ErrorCode::bad_order);
  CHECK(error_of([&] { exp_renyi(w, -2.0); }) == ErrorCode::bad_order);
}

TEST_CASE("quantifier descriptors") {
  CHECK(evaluate(QuantifierDescriptor::minimal_enf(), CountingVector({1, 1, 1})) == 3.0);
  CHECK(evaluate(QuantifierDescriptor::support_count(), CountingVector({3, 0, 0})) == 1.0);
  CHECK(evaluate(QuantifierDescriptor::exp_renyi(2), CountingVector({2, 2, 0, 0})) ==
        doctest::Approx(2).epsilon(1e-14));

  CHECK(QuantifierDescriptor::parse("participation_number").kind() == QuantifierKind::participation_number);
  CHECK(QuantifierDescriptor::parse("exp_renyi", 3.0).label() == "exp_renyi(3)");
  CHECK(QuantifierDescriptor::parse("minimal_enf").label() == "minimal_enf");
  CHECK(error_of([] { QuantifierDescriptor::parse("entropy"); }) == ErrorCode::unknown_quantifier);
  CHECK(error_of([] { QuantifierDescriptor::parse("exp_renyi"); }) == ErrorCode::bad_order);
  CHECK(error_of([] { QuantifierDescriptor::exp_renyi(1.0); }) == ErrorCode::bad_order);
}

TEST_CASE("frozen non-additivity witnesses") {
  // Found by tests/oracles/nonadditivity_witness_search.py.
  const CountingVector w({1, 1});
  const CountingVector b({0, 0.75, 1.75, 1.5});
  const auto gap = [&](const QuantifierDescriptor& q) {
    return evaluate(q, concat(w, b)) - evaluate(q, w) - evaluate(q, b);
  };
  CHECK(gap(QuantifierDescriptor::participation_number()) == doctest::Approx(-0.1519756838905777).epsilon(1e-12));
  CHECK(gap(QuantifierDescriptor::exp_shannon()) == doctest::Approx(-0.064970416131575615).epsilon(1e-12));
  CHECK(gap(QuantifierDescriptor::exp_renyi(2)) == doctest::Approx(-0.1519756838905777).epsilon(1e-12));
  CHECK(std::fabs(gap(QuantifierDescriptor::minimal_enf())) <= 1e-12 * 6);
}

TEST_CASE("property: additivity of n_star") {
  testing::Gen gen(201);
  for (int t = 0; t < 5000; ++t) {
    const CountingVector w = gen.counting(gen.size(1, 64));
    const CountingVector b = gen.counting(gen.size(1, 64));
    const double gap = n_star(concat(w, b)).value - n_star(w).value - n_star(b).value;
    REQUIRE(std::fabs(gap) <= 1e-12 * static_cast<double>(w.size() + b.size()));
  }
}

TEST_CASE("property: sandwich, bounds and degeneracy criterion") {
  testing::Gen gen(202);
  for (int t = 0; t < 5000; ++t) {
    const std::size_t n = gen.size(1, 50);
    const CountingVector w = t % 3 == 0 ? gen.collapsed(n) : gen.counting(n);
    const double ns = n_star(w).value;
    const double sc = support_count(w);
    REQUIRE(ns <= sc + 1e-12 * n);
    REQUIRE(ns >= 1.0 - 1e-12 * n);
    REQUIRE(ns <= static_cast<double>(n) + 1e-12 * n);
    const bool outside = std::all_of(w.entries().begin(), w.entries().end(),
                                     [](double x) { return x <= 1e-12 || x >= 1 - 1e-12; });
    REQUIRE(admissible_interval_collapses(w) == outside);
    REQUIRE((std::fabs(ns - sc) <= 1e-12 * n) == outside);
  }
}

TEST_CASE("property: every quantifier is symmetric, bounded and Schur-concave") {
  const std::vector<QuantifierDescriptor> qs{
      QuantifierDescriptor::minimal_enf(), QuantifierDescriptor::support_count(),
      QuantifierDescriptor::participation_number(), QuantifierDescriptor::exp_shannon(),
      QuantifierDescriptor::exp_renyi(0.5), QuantifierDescriptor::exp_renyi(2), QuantifierDescriptor::exp_renyi(3)};
  testing::Gen gen(203);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = gen.size(2, 24);
    const CountingVector w = gen.counting(n);
    std::vector<double> perm(w.entries().begin(), w.entries().end());
    for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[gen.index(i + 1)]);
    std::size_t i = gen.index(n), j = gen.index(n);
    if (i == j) j = (i + 1) % n;
    if (w[i] > w[j]) std::swap(i, j);
    const CountingVector moved = elementary_transfer(w, i, j, gen.uniform() * w[i]);
    for (const auto& q : qs) {
      const double v = evaluate(q, w);
      const double slack = 1e-12 * std::max<double>(n, v);
      REQUIRE(std::fabs(evaluate(q, CountingVector(perm)) - v) <= slack);
      REQUIRE(v >= 1.0 - slack);
      REQUIRE(v <= static_cast<double>(n) + slack);
      REQUIRE(evaluate(q, moved) <= v + slack);
      REQUIRE(evaluate(q, CountingVector::uniform(n)) == doctest::Approx(static_cast<double>(n)).epsilon(1e-13));
      REQUIRE(evaluate(q, CountingVector::delta(n, i)) == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
}
