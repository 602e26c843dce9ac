#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qsynth/matcore.hpp"
#include "qsynth/sim.hpp"
#include "qsynth/usynth.hpp"
#include "test_helpers.hpp"

using namespace qsynth;
using qsynth::testing::random_state;

TEST_CASE("x_tilde matches the component formula") {
  CHECK(max_abs_diff(circuit_matrix(x_tilde(3, 1, 2, 0.0)), CMat::Identity(9, 9)) <= 1e-14);

  // sigma = pi at (a,b) = (1,1), d = 2 is the elementary controlled sign-flip
  CMat cm = CMat::Identity(4, 4);
  cm(3, 3) = -1.0;
  CHECK(max_abs_diff(circuit_matrix(x_tilde(2, 1, 1, M_PI)), cm) <= 1e-12);

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (int rep = 0; rep < 20; ++rep) {
    Eigen::Index d = 2 + static_cast<Eigen::Index>(rng() % 3);
    Eigen::Index a = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(d));
    Eigen::Index b = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(d));
    double sigma = angle(rng);
    CMat expected = CMat::Identity(d * d, d * d);
    expected(d * a + b, d * a + b) = std::polar(1.0, sigma);
    CHECK(max_abs_diff(circuit_matrix(x_tilde(d, a, b, sigma)), expected) <= 1e-12);
  }
}

TEST_CASE("z_gate with sigma = 0 is the identity") {
  CVec v = random_state(9, 51);
  Circuit z = z_gate(3, 0, 1, 0.0, v);
  CHECK(max_abs_diff(circuit_matrix(z), CMat::Identity(9, 9)) <= 1e-10);
}

TEST_CASE("z_gate on a basis eigenvector collapses to x_tilde") {
  Eigen::Index d = 3, a = 2, b = 0;
  CVec v = CVec::Zero(d * d);
  v(a * d + b) = 1.0;
  Circuit z = z_gate(d, a, b, 1.1, v);
  CHECK(max_abs_diff(circuit_matrix(z), circuit_matrix(x_tilde(d, a, b, 1.1))) <= 1e-10);
}

TEST_CASE("z_gate phases its eigenvector and fixes the complement") {
  std::mt19937_64 rng(67);
  for (int rep = 0; rep < 10; ++rep) {
    CVec v = random_state(9, rng());
    double sigma = 0.5 + 0.1 * rep;
    Circuit z = z_gate(3, 1, 2, sigma, v);

    CVec out = qsynth::apply(z, v);
    CHECK((out - std::polar(1.0, sigma) * v).cwiseAbs().maxCoeff() <= 1e-9);

    // random vector orthogonal to v
    CVec w = random_state(9, rng());
    w -= v.dot(w) * v;
    w /= w.norm();
    CHECK((qsynth::apply(z, w) - w).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("synthesize identity") {
  Circuit c = synthesize(CMat::Identity(9, 9));
  CHECK(max_abs_diff(circuit_matrix(c), CMat::Identity(9, 9)) <= 1e-10);
}

TEST_CASE("synthesize round-trips the elementary gate") {
  CMat cm = CMat::Identity(4, 4);
  cm(3, 3) = -1.0;
  Circuit c = synthesize(cm);
  CHECK(max_abs_diff(circuit_matrix(c), cm) <= 1e-10);
}

TEST_CASE("synthesize Haar samples at small d") {
  for (Eigen::Index d = 2; d <= 3; ++d) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      CMat u = haar_random_unitary(d * d, 5000 + 10 * static_cast<std::uint64_t>(d) + s);
      Circuit c = synthesize(u);
      CHECK(max_abs_diff(circuit_matrix(c), u) <= 1e-8);

      // spectral fixed points
      EigenPairs ep = eig_unitary(u, Tolerances::for_dim(d * d));
      CMat m = circuit_matrix(c);
      for (Eigen::Index k = 0; k < d * d; ++k) {
        CVec v = ep.vectors.col(k);
        CHECK((m * v - std::polar(1.0, ep.phases[static_cast<std::size_t>(k)]) * v)
                  .cwiseAbs()
                  .maxCoeff() <= 1e-8);
      }
    }
  }
}

TEST_CASE("synthesize degenerate inputs") {
  CMat one_phase = CMat::Identity(9, 9);
  one_phase(8, 8) = std::polar(1.0, 0.4);
  Circuit c = synthesize(one_phase);
  CHECK(max_abs_diff(circuit_matrix(c), one_phase) <= 1e-9);
}

TEST_CASE("synthesize rejects non-unitary input") {
  CHECK_THROWS_AS(synthesize(CMat::Ones(4, 4)), NotUnitary);
  CHECK_THROWS_AS(synthesize(CMat::Identity(5, 5)), DimMismatch);
}

TEST_CASE("Z factors commute: product order does not change the matrix") {
  CMat u = haar_random_unitary(4, 4321);
  EigenPairs ep = eig_unitary(u, Tolerances::for_dim(4));
  Circuit forward;
  forward.dim = 2;
  Circuit backward;
  backward.dim = 2;
  for (Eigen::Index m = 0; m < 4; ++m) {
    CVec v = ep.vectors.col(m);
    forward.append(z_gate(2, m / 2, m % 2, ep.phases[static_cast<std::size_t>(m)], v));
  }
  for (Eigen::Index m = 3; m >= 0; --m) {
    CVec v = ep.vectors.col(m);
    backward.append(z_gate(2, m / 2, m % 2, ep.phases[static_cast<std::size_t>(m)], v));
  }
  CHECK(max_abs_diff(circuit_matrix(forward), circuit_matrix(backward)) <= 1e-9);
  CHECK(max_abs_diff(circuit_matrix(forward), u) <= 1e-9);
}

TEST_CASE("synthesized circuits are structurally elementary") {
  CMat u = haar_random_unitary(9, 8);
  Circuit c = synthesize(u);
  for (const Gate& g : c.gates) {
    if (g.is_single()) {
      CHECK(g.as_single().matrix.rows() == 3);
    } else {
      CHECK(g.as_cm().control_state < 3);
      CHECK(g.as_cm().target_state < 3);
    }
  }
}

TEST_CASE("stats and closed-form ControlledM tallies") {
  Circuit empty;
  empty.dim = 3;
  CircuitStats zero = stats(empty);
  CHECK(zero.gates_total == 0);
  CHECK(zero.gates_single == 0);
  CHECK(zero.gates_cm == 0);

  for (Eigen::Index d = 2; d <= 3; ++d) {
    CMat u = haar_random_unitary(d * d, 60 + static_cast<std::uint64_t>(d));
    CircuitStats s = stats(synthesize(u));
    long expected = d * d * (4 * (d * d - 1) + 2 * (d - 1));
    CHECK(s.gates_cm == expected);
  }
  CMat u2 = haar_random_unitary(4, 62);
  CHECK(stats(synthesize(u2)).gates_cm == 56);
}

TEST_CASE("synthesize output is reproducible") {
  CMat u = haar_random_unitary(9, 99);
  Circuit c1 = synthesize(u);
  Circuit c2 = synthesize(u);
  REQUIRE(c1.gates.size() == c2.gates.size());
  CHECK(max_abs_diff(circuit_matrix(c1), circuit_matrix(c2)) == 0.0);
}
