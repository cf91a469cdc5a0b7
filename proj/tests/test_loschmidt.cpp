#include <algorithm>

#include "doctest.h"
#include "mode_oracle.hpp"
#include "support.hpp"
#include "xydqpt/errors.hpp"
#include "xydqpt/fisher.hpp"
#include "xydqpt/loschmidt.hpp"

using namespace xydqpt;
using test::kPhiDefault;
using test::kPi;

namespace {

QuenchProtocol path_b(double beta) { return {{0.5, 0.5}, {0.5, 1.5}, {beta, kPhiDefault}, std::nullopt}; }
QuenchProtocol path_a(double beta) { return {{0.5, 0.0}, {0.5, 0.5}, {beta, kPhiDefault}, std::nullopt}; }

}  // namespace

TEST_CASE("amplitude at t = 0 is one") {
  test::Gen gen(31);
  for (int i = 0; i < 100; ++i) {
    CHECK(std::abs(mode_amplitude(gen.protocol(), gen.momentum(), 0.0) - 1.0) < 1e-15);
  }
}

TEST_CASE("no-quench ground state evolves by a pure phase") {
  test::Gen gen(32);
  for (int i = 0; i < 100; ++i) {
    const ModelParams p = gen.gapped_params();
    const QuenchProtocol q{p, p, {1000.0, gen.uniform(-kPi, kPi)}, std::nullopt};
    CHECK(std::abs(std::abs(mode_amplitude(q, gen.momentum(), gen.uniform(0, 50))) - 1.0) < 1e-12);
  }
}

TEST_CASE("amplitude matches the 2x2 evolution oracle") {
  test::Gen gen(33);
  for (int i = 0; i < 1000; ++i) {
    const QuenchProtocol q = gen.protocol(8.0);
    const double k = gen.momentum();
    const double t = gen.uniform(0.0, 30.0);
    const auto ref = oracle::evolved_overlap(q.pre.gamma, q.pre.lambda, q.post.gamma,
                                             q.post.lambda, q.init.beta, q.init.phi, k, t);
    CHECK(std::abs(mode_amplitude(q, k, t) - ref) < 1e-10);
  }
}

TEST_CASE("tanh form and explicit Boltzmann populations are consistent") {
  test::Gen gen(34);
  for (int i = 0; i < 500; ++i) {
    const QuenchProtocol q = gen.protocol(8.0);
    const double k = gen.momentum();
    const QuenchMode m = quench_mode(q, k);
    const auto [plus, minus] = oracle::post_populations(q.pre.gamma, q.pre.lambda, q.post.gamma,
                                                        q.post.lambda, q.init.beta, q.init.phi, k);
    CHECK(std::abs(m.p_plus - plus) < 1e-12);
    CHECK(std::abs(m.p_minus - minus) < 1e-12);
    CHECK(std::abs(m.echo_coefficient - (minus - plus)) < 1e-12);
    const double t = gen.uniform(0.0, 20.0);
    const double s = std::sin(m.eps_post * t);
    CHECK(std::norm(mode_amplitude(m, t)) == doctest::Approx(1.0 - 4.0 * plus * minus * s * s).epsilon(1e-12));
  }
}

TEST_CASE("modulus bound and per-mode periodicity") {
  test::Gen gen(35);
  for (int i = 0; i < 500; ++i) {
    const QuenchProtocol q = gen.protocol();
    const double k = gen.momentum();
    const double t = gen.uniform(0.0, 20.0);
    const QuenchMode m = quench_mode(q, k);
    CHECK(std::abs(mode_amplitude(m, t)) <= 1.0 + 1e-14);
    const double period = 2 * kPi / m.eps_post;
    CHECK(std::abs(mode_amplitude(m, t + period) - mode_amplitude(m, t)) < 1e-9);
  }
}

TEST_CASE("log of the modulus ignores the complex branch") {
  test::Gen gen(36);
  for (int i = 0; i < 200; ++i) {
    const QuenchMode m = quench_mode(gen.protocol(), gen.momentum());
    const double t = gen.uniform(0.0, 20.0);
    const auto g = mode_amplitude(m, t);
    CHECK(log_mode_modulus(m, t) == doctest::Approx(std::log(g).real()).epsilon(1e-10));
  }
}

TEST_CASE("finite-N rate basics") {
  QuenchProtocol q = path_b(1.0);
  q.sites = 64;
  const auto times = uniform_times(0.0, 10.0, 201);
  const RateTrace tr = rate_finite(q, times);
  CHECK(tr.values.front() == 0.0);
  for (double v : tr.values) CHECK(v >= -1e-9);

  QuenchProtocol still{{0.5, 0.5}, {0.5, 0.5}, {1000.0, kPhiDefault}, 64};
  for (double v : rate_finite(still, times).values) CHECK(std::abs(v) < 1e-12);

  q.sites = std::nullopt;
  CHECK_THROWS_AS(rate_finite(q, times), Error);
  const double bad[] = {0.0, 2.0, 1.0};
  q.sites = 64;
  CHECK_THROWS_AS(rate_finite(q, bad), Error);
  q.sites = 6;
  CHECK_NOTHROW(rate_finite(q, times));
  q.sites = 7;
  CHECK_THROWS_AS(rate_finite(q, times), Error);
}

TEST_CASE("finite-N rate converges toward the integral under N doubling") {
  const QuenchProtocol q = path_b(1.0);
  for (double t : {0.7, 2.3, 4.1}) {
    const double exact = rate_integral_at(q, t);
    double prev = INFINITY;
    for (int n : {64, 128, 256, 512}) {
      QuenchProtocol qn = q;
      qn.sites = n;
      const double ts[] = {t};
      const double err = std::abs(rate_finite(qn, ts).values.front() - exact);
      CHECK(err < prev);
      prev = err;
    }
  }
}

TEST_CASE("thermodynamic-limit rate") {
  const auto times = uniform_times(0.0, 10.0, 401);
  const RateTrace b = rate_integral(path_b(10.0), times);
  CHECK(b.values.front() == doctest::Approx(0.0).epsilon(1e-12));
  for (double v : b.values) CHECK(v >= -1e-9);
  const auto resample = [](double t) { return rate_integral_at(path_b(10.0), t); };
  CHECK(!detect_cusps(b, resample).empty());

  const RateTrace a = rate_integral(path_a(10.0), uniform_times(0.0, 10.0, 2001));
  CHECK(detect_cusps(a, [](double t) { return rate_integral_at(path_a(10.0), t); }).empty());
}

TEST_CASE("worker count does not change the rate") {
  const auto times = uniform_times(0.0, 5.0, 101);
  const RateTrace one = rate_integral(path_b(1.0), times, 1);
  const RateTrace many = rate_integral(path_b(1.0), times, 4);
  CHECK(one.values == many.values);
  QuenchProtocol q = path_b(1.0);
  q.sites = 256;
  CHECK(rate_finite(q, times, 1).values == rate_finite(q, times, 3).values);
}

TEST_CASE("cusp detection on synthetic traces") {
  RateTrace zero;
  zero.times = uniform_times(0.0, 10.0, 1001);
  zero.values.assign(zero.times.size(), 0.0);
  CHECK(detect_cusps(zero).empty());

  RateTrace kinks;
  kinks.times = uniform_times(0.0, 10.0, 2001);
  for (double t : kinks.times) kinks.values.push_back(std::abs(std::sin(t)));
  const auto found = detect_cusps(kinks, [](double t) { return std::abs(std::sin(t)); });
  REQUIRE(found.size() == 3);
  for (int n = 1; n <= 3; ++n) CHECK(found[static_cast<std::size_t>(n - 1)] == doctest::Approx(n * kPi).epsilon(1e-4));

  RateTrace smooth;
  smooth.times = uniform_times(0.0, 10.0, 2001);
  for (double t : smooth.times) smooth.values.push_back(std::exp(-50.0 * (t - 5.0) * (t - 5.0)));
  CHECK(detect_cusps(smooth, [](double t) { return std::exp(-50.0 * (t - 5.0) * (t - 5.0)); }).empty());
}

TEST_CASE("cusps of path B sit at the Fisher critical times") {
  const QuenchProtocol q = path_b(10.0);
  const RateTrace tr = rate_integral(q, uniform_times(0.0, 10.0, 2001));
  const auto cusps = detect_cusps(tr, [&](double t) { return rate_integral_at(q, t); });
  const auto crossings = find_crossings(q);
  REQUIRE(!crossings.empty());
  REQUIRE(!cusps.empty());
  for (double c : cusps) {
    double best = INFINITY;
    for (const auto& cr : crossings) {
      for (double tc : critical_times_up_to(cr, 11.0)) best = std::min(best, std::abs(tc - c));
    }
    CHECK(best < 1e-3);
  }
}

TEST_CASE("uniform times") {
  const auto t = uniform_times(0.0, 1.0, 11);
  REQUIRE(t.size() == 11);
  CHECK(t.front() == 0.0);
  CHECK(t.back() == 1.0);
  CHECK(t[5] == doctest::Approx(0.5));
}
