#include <doctest.h>

#include <cmath>
#include <utility>

#include "ardehali/bell_operators.hpp"
#include "ardehali/lhv.hpp"
#include "ardehali/qubit_algebra.hpp"
#include "ardehali/see_saw.hpp"
#include "ardehali/types.hpp"
#include "support/oracles.hpp"

using namespace ardehali;

namespace {

StateVector random_state(oracles::TestRng& rng, int n) {
  const auto dim = Eigen::Index{1} << n;
  VectorXc v(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    v(i) = Complex(rng.normal(), rng.normal());
  v.normalize();
  return {n, v};
}

MeasurementSettings random_settings(oracles::TestRng& rng, int n) {
  MeasurementSettings s;
  for (int j = 0; j < n; ++j)
    s.pairs.emplace_back(spin_observable(rng.unit_vector()),
                         spin_observable(rng.unit_vector()));
  return s;
}

MeasurementSettings collapsed_settings(int n) {
  MeasurementSettings s;
  for (int j = 0; j < n; ++j)
    s.pairs.emplace_back(spin_observable(Vec3(1, 0, 0)),
                         spin_observable(Vec3(1, 0, 0)));
  return s;
}

StateVector basis_state(int n, Eigen::Index idx) {
  VectorXc v = VectorXc::Zero(Eigen::Index{1} << n);
  v(idx) = 1.0;
  return {n, v};
}

}  // namespace

TEST_CASE("coefficient_vectors give the exact multilinear expansion") {
  oracles::TestRng rng(61);
  for (int n = 2; n <= 5; ++n) {
    for (int t = 0; t < 4; ++t) {
      const StateVector state = random_state(rng, n);
      MeasurementSettings s = random_settings(rng, n);
      const double value = ardehali_expectation(state, s);
      for (int j = 1; j <= n; ++j) {
        const auto [c, cp] = coefficient_vectors(state, s, j);
        CHECK(value == doctest::Approx(c.dot(s.pairs[j - 1].first.direction) +
                                       cp.dot(s.pairs[j - 1].second.direction))
                           .epsilon(1e-10));

        // Linearity: substituting an unrelated direction moves the
        // value exactly along the same coefficients.
        const Vec3 u = rng.unit_vector();
        MeasurementSettings probe = s;
        probe.pairs[j - 1].first = spin_observable(u);
        CHECK(ardehali_expectation(state, probe) ==
              doctest::Approx(c.dot(u) +
                              cp.dot(s.pairs[j - 1].second.direction))
                  .epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("coefficient_vectors validate the site index and dimensions") {
  oracles::TestRng rng(62);
  const StateVector state = random_state(rng, 3);
  const MeasurementSettings s2 = random_settings(rng, 2);
  const MeasurementSettings s3 = random_settings(rng, 3);
  for (auto bad : {std::pair{&s2, 1}, std::pair{&s3, 0}, std::pair{&s3, 4}}) {
    try {
      coefficient_vectors(state, *bad.first, bad.second);
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
  }
}

TEST_CASE("canonical settings are stationary for the GHZ state") {
  for (int n = 2; n <= 5; ++n) {
    const StateVector ghz = ghz_state(n);
    const MeasurementSettings canon = canonical_settings(n);
    for (int j = 1; j <= n; ++j) {
      const auto [c, cp] = coefficient_vectors(ghz, canon, j);
      REQUIRE(c.norm() > 1e-6);
      REQUIRE(cp.norm() > 1e-6);
      CHECK((c.normalized() - canon.pairs[j - 1].first.direction).norm() <=
            1e-9);
      CHECK((cp.normalized() - canon.pairs[j - 1].second.direction).norm() <=
            1e-9);
    }
  }
}

TEST_CASE("see_saw drives GHZ states to the quantum bound") {
  for (int n = 2; n <= 4; ++n) {
    OptimizationConfig cfg;
    cfg.restarts = 10;
    cfg.seed = 100 + n;
    const OptimizationResult r = see_saw(ghz_state(n), cfg);
    CHECK(r.converged);
    CHECK(r.best_value ==
          doctest::Approx(std::pow(2.0, n - 0.5)).epsilon(1e-7));
    CHECK(r.best_value <= std::pow(2.0, n - 0.5) + 1e-9);
    CHECK(r.best_settings.n() == n);
  }
}

TEST_CASE("see_saw on product states stops at the classical value") {
  // A product state's expectation is a multilinear function of the
  // per-site means, so its maximum over settings matches the
  // deterministic-strategy maximum.
  OptimizationConfig cfg;
  cfg.restarts = 30;
  cfg.seed = 7;
  const OptimizationResult two = see_saw(basis_state(2, 0), cfg);
  CHECK(two.best_value == doctest::Approx(double(lhv_max(2))).epsilon(1e-7));
  CHECK(two.best_value <= double(lhv_max(2)) + 1e-9);

  const OptimizationResult three = see_saw(basis_state(3, 0), cfg);
  CHECK(three.best_value == doctest::Approx(double(lhv_max(3))).epsilon(1e-7));
  CHECK(three.best_value <= double(lhv_max(3)) + 1e-9);
}

TEST_CASE("see_saw reproduces the reference W-state optimum") {
  OptimizationConfig cfg;
  cfg.restarts = 30;
  cfg.seed = 4242;
  const OptimizationResult r = see_saw(w_state(3), cfg);
  CHECK(r.converged);
  CHECK(r.best_value == doctest::Approx(4.354648431614518).epsilon(1e-7));
}

TEST_CASE("see_saw is deterministic for a fixed seed and monotone in sweeps") {
  oracles::TestRng mk(63);
  const StateVector state = random_state(mk, 3);

  OptimizationConfig cfg;
  cfg.restarts = 5;
  cfg.seed = 99;
  const OptimizationResult a = see_saw(state, cfg);
  const OptimizationResult b = see_saw(state, cfg);
  CHECK(a.best_value == b.best_value);
  CHECK(a.sweeps_used == b.sweeps_used);
  for (int j = 0; j < 3; ++j) {
    CHECK((a.best_settings.pairs[j].first.direction -
           b.best_settings.pairs[j].first.direction)
              .norm() == 0.0);
  }

  // Truncating the sweep budget can only lower the (monotone) value.
  OptimizationConfig one = cfg;
  one.restarts = 1;
  one.max_sweeps = 1;
  OptimizationConfig full = one;
  full.max_sweeps = 500;
  CHECK(see_saw(state, one).best_value <=
        see_saw(state, full).best_value + 1e-12);
}

TEST_CASE("see_saw rejects invalid configurations and tiny systems") {
  OptimizationConfig bad;
  bad.restarts = 0;
  try {
    see_saw(ghz_state(2), bad);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }

  OptimizationConfig badtol;
  badtol.value_tol = 0.0;
  try {
    see_saw(ghz_state(2), badtol);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }

  StateVector single{1, VectorXc::Zero(2)};
  single.amplitudes(0) = 1.0;
  try {
    see_saw(single, OptimizationConfig{});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
}

TEST_CASE("optimal_state returns the top eigenpair for fixed settings") {
  const auto [value, state] = optimal_state(canonical_settings(3));
  CHECK(value == doctest::Approx(std::pow(2.0, 2.5)).epsilon(1e-9));
  CHECK(ardehali_expectation(state, canonical_settings(3)) ==
        doctest::Approx(value).epsilon(1e-9));

  oracles::TestRng rng(64);
  for (int t = 0; t < 5; ++t) {
    const MeasurementSettings s = random_settings(rng, 3);
    const auto [v, st] = optimal_state(s);
    CHECK(v == doctest::Approx(operator_norm(ardehali_operator(s)))
                   .epsilon(1e-8));
    CHECK(st.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("fully collapsed settings telescope the operator") {
  // With A_j = A'_j everywhere the recursion collapses: the operator
  // is 4 A x ... x A at n = 3, 4 and vanishes identically at n = 5.
  CHECK(operator_norm(ardehali_operator(collapsed_settings(3))) ==
        doctest::Approx(4.0).epsilon(1e-10));
  CHECK(operator_norm(ardehali_operator(collapsed_settings(4))) ==
        doctest::Approx(4.0).epsilon(1e-10));
  CHECK(ardehali_operator(collapsed_settings(5)).cwiseAbs().maxCoeff() <=
        1e-14);
}
