#include <algorithm>

#include "doctest.h"
#include "mode_oracle.hpp"
#include "support.hpp"
#include "xydqpt/errors.hpp"
#include "xydqpt/fisher.hpp"

using namespace xydqpt;
using test::kPhiDefault;
using test::kPi;

namespace {

QuenchProtocol path(double g0, double l0, double gf, double lf, double beta, double phi = kPhiDefault) {
  return {{g0, l0}, {gf, lf}, {beta, phi}, std::nullopt};
}

// Independent root finder: sign changes of the oracle's Re z on a fine grid.
std::vector<double> oracle_roots(const QuenchProtocol& q, int points) {
  std::vector<double> roots;
  const auto value = [&](double k) {
    const auto [plus, minus] = oracle::post_populations(q.pre.gamma, q.pre.lambda, q.post.gamma,
                                                        q.post.lambda, q.init.beta, q.init.phi, k);
    return plus - minus;
  };
  double prev_k = 1e-9;
  double prev = value(prev_k);
  for (int i = 1; i <= points; ++i) {
    const double k = kPi * i / points - (i == points ? 1e-9 : 0.0);
    const double v = value(k);
    if ((prev < 0) != (v < 0)) {
      double lo = prev_k, hi = k;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        ((value(mid) < 0) == (prev < 0) ? lo : hi) = mid;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev = v;
    prev_k = k;
  }
  return roots;
}

}  // namespace

TEST_CASE("no-quench Fisher zeros") {
  test::Gen gen(41);
  for (int i = 0; i < 100; ++i) {
    const ModelParams p = gen.gapped_params();
    const double beta = gen.uniform(0.1, 5.0);
    const QuenchProtocol q{p, p, {beta, 0.0}, std::nullopt};
    const double k = gen.momentum();
    const int n = gen.integer(0, 3);
    const FisherSample z = fisher_zero(q, n, k);
    CHECK(z.re_z == doctest::Approx(-beta).epsilon(1e-9));
    CHECK(z.im_z * 2.0 * dispersion(p, k) == doctest::Approx((2 * n + 1) * kPi).epsilon(1e-12));
  }
}

TEST_CASE("Fisher zero matches the population oracle") {
  test::Gen gen(42);
  for (int i = 0; i < 500; ++i) {
    const QuenchProtocol q = gen.protocol(5.0);
    const double k = gen.momentum();
    const auto [plus, minus] = oracle::post_populations(q.pre.gamma, q.pre.lambda, q.post.gamma,
                                                        q.post.lambda, q.init.beta, q.init.phi, k);
    if (plus < 1e-12 || minus < 1e-12) continue;
    const FisherSample z = fisher_zero(q, 0, k);
    const double eps = dispersion(q.post, k);
    CHECK(z.re_z == doctest::Approx(std::log(plus / minus) / (2 * eps)).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("path A at large beta has no crossing; path B always does") {
  CHECK(find_crossings(path(0.5, 0.0, 0.5, 0.5, 10.0)).empty());
  CHECK_FALSE(has_crossing(path(0.5, 0.0, 0.5, 0.5, 10.0)));
  for (double beta : {0.1, 1.0, 10.0, 100.0}) {
    CHECK(has_crossing(path(0.5, 0.5, 0.5, 1.5, beta)));
  }
}

TEST_CASE("ground-state limit recovers the pure-state critical momenta") {
  const QuenchProtocol q = path(0.5, 0.5, 0.5, 1.5, 500.0, 0.0);
  const auto found = find_crossings(q);
  REQUIRE(found.size() == 1);
  const auto [c2, s2] = oracle::double_angle_difference(0.5, 0.5, 0.5, 1.5, found[0].k_star);
  CHECK(std::abs(c2) < 1e-8);
  (void)s2;
}

TEST_CASE("Re z vanishes at every critical momentum and t_c spacing is pi/eps'") {
  test::Gen gen(43);
  int seen = 0;
  for (int i = 0; i < 300; ++i) {
    const QuenchProtocol q = gen.protocol(5.0);
    for (const Crossing& c : find_crossings(q)) {
      ++seen;
      CHECK(std::abs(fisher_zero(q, 0, c.k_star).re_z) < 1e-8);
      CHECK(c.eps_post == doctest::Approx(dispersion(q.post, c.k_star)).epsilon(1e-14));
      CHECK(c.t_c[0] == doctest::Approx(kPi / (2 * c.eps_post)).epsilon(1e-14));
      CHECK(c.t_c[1] - c.t_c[0] == doctest::Approx(kPi / c.eps_post).epsilon(1e-12));
      CHECK(c.t_c[2] - c.t_c[1] == doctest::Approx(kPi / c.eps_post).epsilon(1e-12));
    }
  }
  CHECK(seen > 20);
}

TEST_CASE("crossing set agrees with an independent root scan") {
  test::Gen gen(44);
  for (int i = 0; i < 200; ++i) {
    const QuenchProtocol q = gen.protocol(5.0);
    const auto ours = find_crossings(q);
    const auto ref = oracle_roots(q, 20000);
    // Tangential roots can be seen by one scan and not the other.
    if (ours.size() != ref.size()) {
      MESSAGE("root count differs at seed index " << i);
      continue;
    }
    for (std::size_t j = 0; j < ours.size(); ++j) CHECK(ours[j].k_star == doctest::Approx(ref[j]).epsilon(1e-7));
  }
}

TEST_CASE("phase parity: phi -> pi - phi leaves the crossing function unchanged") {
  test::Gen gen(45);
  for (int i = 0; i < 200; ++i) {
    QuenchProtocol q = gen.protocol(5.0);
    QuenchProtocol mirror = q;
    mirror.init.phi = kPi - q.init.phi;
    const double k = gen.momentum();
    CHECK(crossing_function(q, k) == doctest::Approx(crossing_function(mirror, k)).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("critical times up to a bound") {
  Crossing c;
  c.eps_post = 1.0;
  const auto ts = critical_times_up_to(c, 10.0);
  REQUIRE(ts.size() == 3);
  CHECK(ts[0] == doctest::Approx(kPi / 2));
  CHECK(ts[2] == doctest::Approx(5 * kPi / 2));
  CHECK(critical_time(2.0, 1) == doctest::Approx(3 * kPi / 4));
}

TEST_CASE("Fisher curve layout") {
  const FisherCurve curve = fisher_curve(path(0.5, 0.5, 0.5, 1.5, 1.0), 1, 512);
  CHECK(curve.branch == 1);
  CHECK(curve.samples.size() == 512);
  CHECK(curve.crossings.size() == 1);
  CHECK(std::count_if(curve.samples.begin(), curve.samples.end(),
                      [](const FisherSample& s) { return s.is_crossing; }) == 1);
  for (std::size_t i = 1; i < curve.samples.size(); ++i) CHECK(curve.samples[i].k > curve.samples[i - 1].k);
  CHECK_THROWS_AS(fisher_curve(path(0.5, 0.5, 0.5, 1.5, 1.0), 0, 255), Error);
}

TEST_CASE("critical beta on the named paths") {
  const CriticalBeta a = critical_beta(path(0.5, 0.0, 0.5, 0.5, 1.0));
  CHECK(a.status == BetaStatus::Ok);
  CHECK(a.beta_c > 1.0);
  CHECK(a.beta_c < 10.0);
  CHECK_FALSE(has_crossing(path(0.5, 0.0, 0.5, 0.5, a.beta_c * 1.01)));
  CHECK(has_crossing(path(0.5, 0.0, 0.5, 0.5, a.beta_c * 0.99)));

  CHECK(critical_beta(path(0.5, 0.5, 0.5, 1.5, 1.0)).status == BetaStatus::AlwaysTransition);
  CHECK(critical_beta(path(0.5, 0.0, 0.5, 0.5, 1.0, 0.0)).status == BetaStatus::NoTransition);
  CHECK(critical_beta(path(0.5, 0.5, 0.5, 1.5, 1.0, 0.0)).status == BetaStatus::AlwaysTransition);
}

TEST_CASE("critical beta grows with quench amplitude inside the ferromagnet") {
  double prev = 0.0;
  for (double lf : {0.5, 0.9, 0.999}) {
    const CriticalBeta c = critical_beta(path(0.8, 0.0, 0.8, lf, 1.0));
    REQUIRE(c.status == BetaStatus::Ok);
    CHECK(c.beta_c > prev);
    prev = c.beta_c;
  }
}

TEST_CASE("critical beta bracket validation") {
  BetaBracket bad;
  bad.beta_lo = 2.0;
  bad.beta_hi = 1.0;
  CHECK_THROWS_AS(critical_beta(path(0.5, 0.0, 0.5, 0.5, 1.0), bad), Error);
}
