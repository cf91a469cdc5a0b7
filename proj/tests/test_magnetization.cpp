#include "doctest.h"
#include "fock_oracle.hpp"
#include "support.hpp"
#include "xydqpt/errors.hpp"
#include "xydqpt/magnetization.hpp"

using namespace xydqpt;
using test::kPhiDefault;
using test::kPi;

TEST_CASE("contraction table and correlators match the Fock oracle") {
  test::Gen gen(61);
  for (int trial = 0; trial < 8; ++trial) {
    const ModelParams p = gen.params();
    const InitialState s = gen.init(5.0);
    const oracle::FockOracle fock(8, {p.gamma, p.lambda}, s.beta, s.phi);
    const ContractionTable t = contractions(p, s, 8, 3);
    CHECK(std::abs(t.g(0) - fock.ba(0, 0)) < 1e-10);
    for (int r = 1; r <= 3; ++r) {
      CHECK(std::abs(t.q(r) - fock.aa(0, r)) < 1e-10);
      CHECK(std::abs(t.s(r) - fock.bb(0, r)) < 1e-10);
      CHECK(std::abs(t.g(r) - fock.ba(0, r)) < 1e-10);
      CHECK(std::abs(t.g(-r) - fock.ba(r, 0)) < 1e-10);
      CHECK(std::abs(correlator_x(t, r) - fock.sigma_xx(0, r)) < 1e-8);
      CHECK(std::abs(correlator_y(t, r) - fock.sigma_yy(0, r)) < 1e-8);
    }
    CHECK(std::abs(m_z(p, s, 8) - fock.sigma_z(0).real()) < 1e-10);
  }
}

TEST_CASE("table symmetries") {
  test::Gen gen(62);
  const ContractionTable t = contractions(gen.params(), gen.init(), 64, 10);
  CHECK(t.q(0) == std::complex<double>(0.0, 0.0));
  CHECK(t.s(0) == std::complex<double>(0.0, 0.0));
  for (int r = 1; r <= 10; ++r) {
    CHECK(t.q(-r) == -t.q(r));
    CHECK(t.s(-r) == -t.s(r));
    CHECK(t.d(r) == -t.g(-r));
  }
  CHECK_THROWS_AS(contractions(gen.params(), gen.init(), 20, 10), Error);
}

TEST_CASE("Ising ground state is fully ordered") {
  for (double phi : {0.0, kPhiDefault, 1.0}) {
    const ContractionTable x = contractions({1.0, 0.0}, {100.0, phi}, 64, 5);
    const ContractionTable y = contractions({-1.0, 0.0}, {100.0, phi}, 64, 5);
    for (int r : {1, 2, 5}) {
      CHECK(std::abs(correlator_x(x, r) - 1.0) < 1e-10);
      CHECK(std::abs(correlator_y(y, r) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("nearest-neighbour correlators are single contractions") {
  test::Gen gen(63);
  for (int i = 0; i < 50; ++i) {
    const ContractionTable t = contractions(gen.params(), gen.init(), 32, 2);
    CHECK(std::abs(correlator_x(t, 1) - t.g(1)) < 1e-14);
    CHECK(std::abs(correlator_y(t, 1) + t.d(1)) < 1e-14);
  }
}

TEST_CASE("x/y duality under gamma -> -gamma, phi -> phi + pi") {
  test::Gen gen(64);
  for (int i = 0; i < 50; ++i) {
    const ModelParams p = gen.params();
    const InitialState s = gen.init(5.0);
    const ContractionTable a = contractions(p, s, 64, 6);
    const ContractionTable b = contractions({-p.gamma, p.lambda}, {s.beta, s.phi + kPi}, 64, 6);
    for (int r = 1; r <= 6; ++r) CHECK(std::abs(correlator_y(a, r) - correlator_x(b, r)) < 1e-10);
  }
}

TEST_CASE("correlators are real and bounded") {
  test::Gen gen(65);
  for (int i = 0; i < 50; ++i) {
    const ContractionTable t = contractions(gen.params(), gen.init(), 128, 16);
    for (int r : {1, 3, 8, 16}) {
      for (Direction d : {Direction::X, Direction::Y}) {
        const auto c = correlator(t, d, r);
        CHECK(std::abs(c.imag()) < 1e-10);
        CHECK(std::abs(c.real()) <= 1.0 + 1e-10);
      }
    }
  }
}

TEST_CASE("string matrix first row is the template row") {
  const ContractionTable t = contractions({0.4, 0.7}, {2.0, kPhiDefault}, 64, 6);
  const SkewMatrix m = string_matrix(t, Direction::X, 4);
  REQUIRE(m.dim() == 8);
  // x string: B0 A1 B1 A2 B2 A3 B3 A4.
  CHECK(m(0, 1) == t.g(1));
  CHECK(m(0, 2) == t.s(1));
  CHECK(m(0, 3) == t.g(2));
  CHECK(m(1, 2) == t.d(0));
  CHECK(m(1, 3) == t.q(1));
  CHECK_NOTHROW(m.validate());
}

TEST_CASE("transverse magnetization") {
  CHECK(m_z({0.5, 50.0}, {100.0, kPhiDefault}, 1024) > 0.99);
  CHECK(std::abs(m_z({0.5, 1.2}, {0.0, 0.0}, 1024)) < 1e-12);
  double prev = 0.0;
  for (double beta : {0.1, 1.0, 10.0, 100.0}) {
    const double mz = std::abs(m_z({0.5, 1.2}, {beta, kPhiDefault}, 4096));
    CHECK(mz > prev);
    prev = mz;
  }
  CHECK_THROWS_AS(m_z({0.5, 1.2}, {1.0, 0.0}, 3), Error);
}

TEST_CASE("ground-state order parameter of the transverse Ising chain") {
  const OrderParameter op = order_parameter({1.0, 0.5}, {100.0, kPhiDefault}, Direction::X);
  CHECK(op.converged);
  CHECK(op.value == doctest::Approx(std::pow(1.0 - 0.25, 0.125)).epsilon(1e-5));
  const OrderParameter dis = order_parameter({1.0, 1.5}, {100.0, kPhiDefault}, Direction::X);
  CHECK(dis.value < 1e-3);
}

TEST_CASE("order parameter grows as temperature drops") {
  const auto mx = [](double beta) {
    return order_parameter({0.5, 0.5}, {beta, kPhiDefault}, Direction::X).value;
  };
  const double m01 = mx(0.1), m1 = mx(1.0), m100 = mx(100.0);
  CHECK(m01 < m1);
  CHECK(m1 < m100);
}

TEST_CASE("order parameter diagnostics") {
  OrderParameterOptions opts;
  opts.r_cap = 16;
  const OrderParameter op = order_parameter({0.5, 0.5}, {0.1, kPhiDefault}, Direction::X, opts);
  CHECK_FALSE(op.converged);
  CHECK(op.r_used == 16);
  opts.r_start = 0;
  CHECK_THROWS_AS(order_parameter({0.5, 0.5}, {0.1, kPhiDefault}, Direction::X, opts), Error);

  const MagnetizationPoint pt = magnetization({1.0, 0.5}, {100.0, kPhiDefault});
  CHECK(pt.my < 1e-3);
  CHECK(pt.mx > 0.9);
  CHECK(pt.mz == doctest::Approx(m_z({1.0, 0.5}, {100.0, kPhiDefault}, 4096)));
}
