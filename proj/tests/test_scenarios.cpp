#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "wpent/oracle.hpp"
#include "wpent/scenarios.hpp"

using namespace wpent;

namespace {
CavityParams cavity(double a0_re) {
  CavityParams p;
  p.Omega = 1.0;
  p.gamma = 0.01;
  p.g = 1.0;
  p.a0 = a0_re;
  return p;
}
}  // namespace

TEST_CASE("two-cavity scenario") {
  const CavityParams p1 = cavity(1.0 / std::sqrt(2.0));
  const CavityParams p2 = cavity(1.0 / std::sqrt(2.0));
  const TimeSeries ts = run_two_cavity(p1, p2, time_grid(10.0 / p1.gamma, 400));

  SUBCASE("schema and t = 0 row") {
    REQUIRE(ts.columns.size() == 6);
    CHECK(ts.columns[2] == "lambda_hz_raw");
    CHECK(ts.rows.front()[2] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(ts.rows.front()[4] == doctest::Approx(0.0).epsilon(1e-14));
  }

  SUBCASE("lambda_hz <= 0 everywhere") {
    for (const auto& row : ts.rows) CHECK(row[2] <= 1e-14);
  }

  SUBCASE("raw value equals -|J1|^2 |J2|^2 on every row") {
    for (size_t i = 0; i < ts.rows.size(); i += 37) {
      const double t = ts.rows[i][1];  // omega_t, Omega = 1
      const double expect =
          -std::norm(j_closed(p1, t)) * std::norm(j_closed(p2, t));
      CHECK(ts.rows[i][2] == doctest::Approx(expect).epsilon(1e-12));
    }
  }

  SUBCASE("rescaled output invariant under g_i -> s g_i") {
    CavityParams q1 = p1, q2 = p2;
    q1.g *= 3.0;
    q2.g *= 3.0;
    const TimeSeries ts2 = run_two_cavity(q1, q2, time_grid(10.0 / p1.gamma, 50));
    const TimeSeries ts1 = run_two_cavity(p1, p2, time_grid(10.0 / p1.gamma, 50));
    for (size_t i = 0; i < ts1.rows.size(); ++i)
      CHECK(std::abs(ts1.rows[i][3] - ts2.rows[i][3]) <
            1e-10 * std::max(1.0, std::abs(ts1.rows[i][3])));
  }

  SUBCASE("unnormalized initial amplitudes rejected") {
    CHECK_THROWS_AS(run_two_cavity(cavity(1.0), cavity(1.0), {0.0, 1.0}),
                    std::invalid_argument);
  }
}

TEST_CASE("spontaneous emission scenario") {
  AtomParams p;
  p.omega_eg = 1.0;
  p.Gamma = 0.01;
  p.g = 1.0;
  const TimeSeries ts = run_spontaneous(p, time_grid(12.0 / p.Gamma, 2000));

  SUBCASE("mu(0) = 0 and decay at late times") {
    CHECK(ts.rows.front()[2] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(std::abs(ts.rows.back()[2]) < 1e-3 * std::abs(ts.metadata.at("mu_min")));
  }

  SUBCASE("interior minimum matches the dense scan oracle") {
    auto mu = [&](double t) {
      return -std::exp(-p.Gamma * t) * std::norm(j_closed(p, t));
    };
    const oracle::ScanMinimum sm =
        oracle::scan_minimum(mu, 0.0, 12.0 / p.Gamma, 12000);
    CHECK(ts.metadata.at("mu_min") ==
          doctest::Approx(sm.value).epsilon(5e-3));
    CHECK(ts.metadata.at("gamma_t_min") ==
          doctest::Approx(p.Gamma * sm.x).epsilon(5e-2));
    // interior: not at either end of the grid
    CHECK(ts.metadata.at("gamma_t_min") > 0.0);
    CHECK(ts.metadata.at("gamma_t_min") < 12.0);
  }
}

TEST_CASE("superradiance scenario") {
  EnsembleParams e;
  e.N = 10;
  e.positions = Eigen::MatrixXd::Zero(10, 3);
  e.k0 = Eigen::Vector3d(0, 0, 1.0);
  e.gamma_N = 0.005;
  e.omega_eg = 1.0;
  e.g = 1.0;

  SUBCASE("colocated N = 10: 10x the single-emitter curve") {
    const std::vector<double> tg = time_grid(12.0 / e.gamma_N, 200);
    const TimeSeries ts10 = run_superradiance(e, tg);
    EnsembleParams e1 = e;
    e1.N = 1;
    e1.positions = Eigen::MatrixXd::Zero(1, 3);
    const TimeSeries ts1 = run_superradiance(e1, tg);
    CHECK(ts10.metadata.at("zeta_abs2") == doctest::Approx(10.0).epsilon(1e-12));
    for (size_t i = 0; i < tg.size(); i += 13)
      CHECK(ts10.rows[i][2] == doctest::Approx(10.0 * ts1.rows[i][2]).epsilon(1e-12));
  }

  SUBCASE("N = 1 coincides with run_spontaneous when gamma_N = Gamma/2") {
    EnsembleParams e1 = e;
    e1.N = 1;
    e1.positions = Eigen::MatrixXd::Zero(1, 3);
    AtomParams a;
    a.omega_eg = 1.0;
    a.Gamma = 2.0 * e1.gamma_N;
    a.g = 1.0;
    const std::vector<double> tg = time_grid(6.0 / a.Gamma, 300);
    const TimeSeries sr = run_superradiance(e1, tg);
    const TimeSeries sp = run_spontaneous(a, tg);
    for (size_t i = 0; i < tg.size(); ++i)
      CHECK(std::abs(sr.rows[i][2] - sp.rows[i][2]) <=
            1e-12 * std::max(1.0, std::abs(sp.rows[i][2])));
  }

  SUBCASE("time-to-minimum shrinks as gamma_N grows") {
    double prev_tmin = 1e300;
    for (double gn : {0.005, 0.01, 0.02}) {
      EnsembleParams eg = e;
      eg.gamma_N = gn;
      auto mu = [&](double t) {
        return -std::exp(-2.0 * gn * t) *
               std::norm(j_closed_core(eg.omega_eg, gn, eg.g, 1.0, t)) * 10.0;
      };
      const oracle::ScanMinimum sm = oracle::scan_minimum(mu, 0.0, 12.0 / gn, 8000);
      CHECK(sm.x < prev_tmin);
      prev_tmin = sm.x;
    }
  }

  SUBCASE("random ensemble is deterministic in the seed") {
    const EnsembleParams a = random_ensemble(20, 1.0, 10.0, 42);
    const EnsembleParams b = random_ensemble(20, 1.0, 10.0, 42);
    const EnsembleParams c = random_ensemble(20, 1.0, 10.0, 43);
    CHECK(a.positions.isApprox(b.positions));
    CHECK_FALSE(a.positions.isApprox(c.positions));
  }
}

TEST_CASE("wavepacket nonclassicality presets") {
  SUBCASE("all r = 0: lambda_sm = 1/2 everywhere") {
    CHECK(run_wp_squeezed_modes({0.0, 0.0}, 0.01).sm.value ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(run_wp_profile({0.0, 0.0, 0.0}).sm.value ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(run_wp_entangled_pair(0.0, 0.01).sm.value ==
          doctest::Approx(0.5).epsilon(1e-14));
  }

  SUBCASE("flat profile over M modes: 1/2 + M (S^2 - S C)") {
    const double r = 0.3;
    const int M = 8;
    const WpNonclassicalityResult res = run_wp_profile(std::vector<double>(M, r));
    const double S = std::sinh(r), C = std::cosh(r);
    CHECK(res.sm.value == doctest::Approx(0.5 + M * (S * S - S * C)).epsilon(1e-12));
    CHECK(res.sm.value == doctest::Approx(res.closed_form).epsilon(1e-12));
  }

  SUBCASE("entangled pair r = 1, eps = 0.01: frozen value") {
    const WpNonclassicalityResult res = run_wp_entangled_pair(1.0, 0.01);
    // 1/2 + 0.02 (sinh^2 1 - sinh 1 cosh 1) = 0.49135335...
    CHECK(res.sm.value == doctest::Approx(0.49135335283).epsilon(1e-9));
    CHECK(res.sm.flagged);
    CHECK(res.bs.value < 0.0);  // BS test agrees: nonclassical
  }

  SUBCASE("squeezed modes match the closed form and flag nonclassicality") {
    const WpNonclassicalityResult res = run_wp_squeezed_modes({0.5, 1.0}, 0.01);
    CHECK(res.sm.value == doctest::Approx(res.closed_form).epsilon(1e-12));
    CHECK(res.sm.value < 0.5);
    CHECK(res.bs.flagged);
  }
}

TEST_CASE("efield onset map") {
  const CavityParams p1 = cavity(1.0 / std::sqrt(2.0));
  const CavityParams p2 = cavity(1.0 / std::sqrt(2.0));
  const std::vector<double> zg = {0.0, 50.0, 100.0};
  const std::vector<double> tg = {25.0, 75.0, 125.0};
  const TimeSeries ts = run_efield_onset(p1, p2, zg, tg);
  REQUIRE(ts.rows.size() == 27);
  for (const auto& row : ts.rows) {
    const double z1 = row[0], z2 = row[1], t = row[2];
    if (t < std::max(z1, z2)) {
      CHECK(row[3] == 0.0);
    } else {
      CHECK(row[3] < 0.0);
    }
  }
}

TEST_CASE("time grid validation") {
  CHECK_THROWS_AS(time_grid(-1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(run_spontaneous(AtomParams{}, {1.0, 1.0}),
                  std::invalid_argument);
}
