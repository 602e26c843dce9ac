#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qsynth/csynth.hpp"
#include "qsynth/matcore.hpp"
#include "qsynth/sim.hpp"
#include "test_helpers.hpp"

using namespace qsynth;
using qsynth::testing::embed_block;
using qsynth::testing::embed_block_q1;

namespace {

long cm_count(const Circuit& c) { return stats(c).gates_cm; }

CMat projected_su(Eigen::Index d, std::uint64_t seed) {
  CMat u = haar_random_unitary(d, seed);
  double delta = std::arg(u.determinant()) / static_cast<double>(d);
  return std::polar(1.0, -delta) * u;
}

}  // namespace

TEST_CASE("c_exchange reproduces CNOT at d=2") {
  Circuit c = c_exchange(2, 1, 0, 1);
  CMat cnot(4, 4);
  cnot << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
  CHECK(max_abs_diff(circuit_matrix(c), cnot) <= 1e-15);
}

TEST_CASE("c_exchange block form") {
  Circuit c = c_exchange(3, 0, 1, 2);
  CHECK(max_abs_diff(circuit_matrix(c), embed_block(3, 0, p_matrix(3, 1, 2))) <= 1e-15);
  CHECK(c.gates.size() == 3);
  CHECK(cm_count(c) == 1);

  // control off: state untouched
  CVec psi = CVec::Zero(9);
  psi(3) = Complex(0.6, 0.0);
  psi(5) = Complex(0.0, 0.8);
  CHECK((qsynth::apply(c, psi) - psi).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("uncontrolled phase sandwich identity") {
  // Theta_b(t/4) P_0b Theta_b(-t/2) P_0b Theta_b(t/4) = Theta_b(t)
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (Eigen::Index d = 2; d <= 5; ++d) {
    for (Eigen::Index b = 1; b < d; ++b) {
      double th = angle(rng);
      CMat p = p_matrix(d, 0, b);
      CMat lhs = theta_b_matrix(d, b, th / 4.0) * p * theta_b_matrix(d, b, -th / 2.0) * p *
                 theta_b_matrix(d, b, th / 4.0);
      CHECK(max_abs_diff(lhs, theta_b_matrix(d, b, th)) <= 1e-14);
    }
  }
}

TEST_CASE("c_theta_b block form and count") {
  Circuit zero = c_theta_b(3, 1, 2, 0.0);
  CHECK(max_abs_diff(circuit_matrix(zero), CMat::Identity(9, 9)) <= 1e-15);
  CHECK(cm_count(zero) == 2);

  Circuit c = c_theta_b(2, 1, 1, 0.77);
  CHECK(max_abs_diff(circuit_matrix(c), embed_block(2, 1, theta_b_matrix(2, 1, 0.77))) <= 1e-14);

  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (Eigen::Index d = 2; d <= 4; ++d) {
    for (Eigen::Index a = 0; a < d; ++a) {
      for (Eigen::Index b = 1; b < d; ++b) {
        double th = angle(rng);
        Circuit cc = c_theta_b(d, a, b, th);
        CHECK(max_abs_diff(circuit_matrix(cc), embed_block(d, a, theta_b_matrix(d, b, th))) <=
              1e-12);
        CHECK(cm_count(cc) == 2);
      }
    }
  }
}

TEST_CASE("c_theta_vec block form") {
  Circuit zero = c_theta_vec(3, 0, {0.0, 0.0});
  CHECK(max_abs_diff(circuit_matrix(zero), CMat::Identity(9, 9)) <= 1e-15);

  double alpha = 0.4, beta = -1.2;
  Circuit c = c_theta_vec(3, 2, {alpha, beta});
  CHECK(max_abs_diff(circuit_matrix(c), embed_block(3, 2, theta_vec_matrix(3, {alpha, beta}))) <=
        1e-13);
  CHECK(cm_count(c) == 2 * (3 - 1));
  CHECK_THROWS_AS(c_theta_vec(3, 0, {1.0}), LengthMismatch);
}

TEST_CASE("c_theta_vec factor order is irrelevant") {
  // diagonal blocks commute; build b-factors in reversed order by hand
  Eigen::Index d = 4;
  std::vector<double> th = {0.3, -0.9, 1.7};
  Circuit forward = c_theta_vec(d, 1, th);
  Circuit reversed;
  reversed.dim = d;
  for (Eigen::Index b = d - 1; b >= 1; --b) {
    reversed.append(c_theta_b(d, 1, b, th[static_cast<std::size_t>(b - 1)]));
  }
  CHECK(max_abs_diff(circuit_matrix(forward), circuit_matrix(reversed)) <= 1e-13);
}

TEST_CASE("c_su identity and hand-checked d=2 case") {
  Circuit cid = c_su(3, 1, CMat::Identity(3, 3));
  CHECK(max_abs_diff(circuit_matrix(cid), CMat::Identity(9, 9)) <= 1e-12);

  CMat w(2, 2);
  w << 0, 1, -1, 0;  // det 1
  Circuit c = c_su(2, 1, w);
  CHECK(max_abs_diff(circuit_matrix(c), embed_block(2, 1, w)) <= 1e-12);
  CHECK(cm_count(c) == 2);
}

TEST_CASE("c_su on Haar matrices projected to SU(d)") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    CMat w = projected_su(4, 300 + s);
    Circuit c = c_su(4, static_cast<Eigen::Index>(s % 4), w);
    CHECK(max_abs_diff(circuit_matrix(c), embed_block(4, static_cast<Eigen::Index>(s % 4), w)) <=
          1e-9);
    CHECK(cm_count(c) == 2 * 3);
  }
  CHECK_THROWS_AS(c_su(2, 0, haar_random_unitary(2, 1) * Complex(0.0, 1.0)), NotSpecialUnitary);
}

TEST_CASE("c_phase") {
  Circuit zero = c_phase(3, 1, 0.0);
  CHECK(max_abs_diff(circuit_matrix(zero), CMat::Identity(9, 9)) == 0.0);

  Circuit c = c_phase(2, 1, M_PI);
  CMat expected = CMat::Identity(4, 4);
  expected(2, 2) = -1.0;
  expected(3, 3) = -1.0;
  CHECK(max_abs_diff(circuit_matrix(c), expected) <= 1e-15);
  CHECK(cm_count(c) == 0);
  CHECK(c.gates.size() == 1);

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (int rep = 0; rep < 10; ++rep) {
    double delta = angle(rng);
    Circuit cp = c_phase(3, 2, delta);
    CHECK(max_abs_diff(circuit_matrix(cp),
                       kron(e_matrix(3, 2, delta), CMat::Identity(3, 3))) <= 1e-15);
  }
}

TEST_CASE("c_u block form") {
  Circuit cid = c_u(3, 0, CMat::Identity(3, 3));
  CHECK(max_abs_diff(circuit_matrix(cid), CMat::Identity(9, 9)) <= 1e-12);

  CMat u = CMat::Identity(2, 2);
  u(1, 1) = std::polar(1.0, 1.3);
  Circuit c = c_u(2, 0, u);
  CHECK(max_abs_diff(circuit_matrix(c), embed_block(2, 0, u)) <= 1e-12);

  for (Eigen::Index d = 2; d <= 5; ++d) {
    for (std::uint64_t s = 0; s < 25; ++s) {
      CMat haar = haar_random_unitary(d, 1000 * static_cast<std::uint64_t>(d) + s);
      Eigen::Index a = static_cast<Eigen::Index>(s) % d;
      Circuit cc = c_u(d, a, haar);
      CHECK(max_abs_diff(circuit_matrix(cc), embed_block(d, a, haar)) <= 1e-9);
      CHECK(cm_count(cc) == 2 * (d - 1));
    }
  }
  CHECK_THROWS_AS(c_u(2, 0, CMat::Ones(2, 2)), NotUnitary);
}

TEST_CASE("c_u composed with its inverse is identity") {
  CMat u = haar_random_unitary(4, 77);
  Circuit c = c_u(4, 2, u);
  c.append(c_u(4, 2, u.adjoint().eval()));
  CHECK(max_abs_diff(circuit_matrix(c), CMat::Identity(16, 16)) <= 2e-8);
}

TEST_CASE("role-swapped control rides on qudit 1") {
  CMat u = haar_random_unitary(3, 55);
  Circuit c = c_u(3, 1, u, /*control_qudit=*/1);
  CHECK(max_abs_diff(circuit_matrix(c), embed_block_q1(3, 1, u)) <= 1e-10);
  for (const Gate& g : c.gates) {
    if (g.is_single()) {
      CHECK(g.as_single().qudit == ((g.as_single().label.rfind("E_", 0) == 0) ? 1 : 0));
    } else {
      CHECK(g.as_cm().control_qudit == 1);
    }
  }
}

TEST_CASE("every two-qudit gate emitted is a ControlledM") {
  CMat u = haar_random_unitary(4, 9);
  Circuit c = c_u(4, 3, u);
  for (const Gate& g : c.gates) {
    if (g.is_single()) {
      CHECK(g.as_single().matrix.rows() == 4);  // single-qudit sized
    }
  }
}
