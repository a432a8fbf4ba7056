#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oplab/matrix.hpp"
#include "oplab/polar.hpp"
#include "oplab/rng.hpp"
#include "oplab/shift.hpp"
#include "oplab/symmetry.hpp"

using namespace oplab;

namespace {

ComplexMatrix random_matrix(Rng& rng, std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.gauss_complex();
  return m;
}

ComplexMatrix diag_real(std::initializer_list<double> d) {
  ComplexMatrix m(d.size(), d.size());
  std::size_t i = 0;
  for (double v : d) m(i, i) = v, ++i;
  return m;
}

// normal matrix Q^* D Q with random complex diagonal
ComplexMatrix random_normal(std::uint64_t seed) {
  const ComplexMatrix q = random_unitary(4, seed);
  Rng rng(seed ^ 0xABCD);
  ComplexMatrix d(4, 4);
  for (std::size_t i = 0; i < 4; ++i) d(i, i) = rng.gauss_complex();
  return matmul(adjoint(q), matmul(d, q));
}

const WeightedShift kShift121(4, {cxd{1, 0}, cxd{2, 0}, cxd{1, 0}});

}  // namespace

TEST_CASE("polar of the (1,2,1) shift gives the textbook parts") {
  const ComplexMatrix t = to_matrix(kShift121);
  const PolarParts pp = polar_decompose(t);
  CHECK(max_abs_diff(pp.U, to_matrix(WeightedShift(4, {1.0, 1.0, 1.0}))) <=
        1e-13);
  CHECK(max_abs_diff(pp.P, diag_real({0, 1, 2, 1})) <= 1e-13);
  CHECK(frobenius_norm(matmul(pp.U, pp.P) - t) <= polar_eps(t));
}

TEST_CASE("polar of a unitary is the unitary itself") {
  const ComplexMatrix q = random_unitary(5, 77);
  const PolarParts pp = polar_decompose(q);
  CHECK(frobenius_norm(pp.U - q) <= polar_eps(q));
  CHECK(frobenius_norm(pp.P - ComplexMatrix::identity(5)) <= polar_eps(q));
}

TEST_CASE("polar reconstruction and projection identity on random input") {
  Rng rng(21);
  for (int rep = 0; rep < 8; ++rep) {
    const ComplexMatrix t = random_matrix(rng, 5);
    const PolarParts pp = polar_decompose(t);
    const double eps = polar_eps(t);
    CHECK(frobenius_norm(matmul(pp.U, pp.P) - t) <= eps);
    ComplexMatrix g(5, 5);
    matmul_adjA_into(g, pp.U, pp.U);
    CHECK(frobenius_norm(matmul(g, pp.P) - pp.P) <= eps);
    CHECK(is_partial_isometry(pp.U));
  }
}

TEST_CASE("ker U = ker T on rank-deficient input") {
  // the shift kills e1
  const ComplexMatrix t = to_matrix(kShift121);
  const PolarParts pp = polar_decompose(t);
  double u_e1 = 0.0;
  for (std::size_t i = 0; i < 4; ++i) u_e1 += std::norm(pp.U(i, 0));
  CHECK(std::sqrt(u_e1) <= 1e-9);

  // constructed rank-2 matrix with known kernel vectors q3, q4
  const ComplexMatrix w = random_unitary(4, 31);
  const ComplexMatrix q = random_unitary(4, 32);
  const ComplexMatrix t2 = matmul(w, matmul(diag_real({2, 1, 0, 0}), adjoint(q)));
  const PolarParts pp2 = polar_decompose(t2);
  for (std::size_t col = 2; col < 4; ++col) {
    std::vector<cxd> ux(4, cxd{});
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 4; ++k) ux[i] += pp2.U(i, k) * q(k, col);
    double nrm = 0.0;
    for (const cxd& v : ux) nrm += std::norm(v);
    CHECK(std::sqrt(nrm) <= 1e-9);
  }
}

TEST_CASE("polar rejects non-square input") {
  CHECK_THROWS_AS(polar_decompose(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("duggal of the (1,2,1) shift") {
  const ComplexMatrix td = duggal(to_matrix(kShift121));
  const ComplexMatrix expected = ComplexMatrix::from_rows(
      {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}, {0, 0, 0, 0}});
  CHECK(max_abs_diff(td, expected) <= 1e-13);
}

TEST_CASE("duggal fixes normal operators") {
  const ComplexMatrix t = random_normal(41);
  CHECK(frobenius_norm(duggal(t) - t) <= polar_eps(t));
}

TEST_CASE("duggal of an equal-weight shift has the truncated shape") {
  const ComplexMatrix td =
      duggal(to_matrix(WeightedShift(4, {cxd{1.5, 0}, cxd{1.5, 0}, cxd{1.5, 0}})));
  const ComplexMatrix expected =
      direct_sum(ComplexMatrix(1, 1),
                 to_matrix(WeightedShift(3, {cxd{1.5, 0}, cxd{1.5, 0}})));
  CHECK(max_abs_diff(td, expected) <= 1e-13);
}

TEST_CASE("aluthge at t=1/2 of the (1,2,1) shift") {
  const ComplexMatrix a = aluthge_t(to_matrix(kShift121), 0.5);
  const double r2 = std::sqrt(2.0);
  ComplexMatrix expected(4, 4);
  expected(1, 2) = r2;
  expected(2, 3) = r2;
  CHECK(max_abs_diff(a, expected) <= 1e-12);
}

TEST_CASE("aluthge endpoints: t=1 is duggal, t=0 is the input") {
  Rng rng(22);
  for (int rep = 0; rep < 5; ++rep) {
    const ComplexMatrix t = random_matrix(rng, 4);
    const double eps = polar_eps(t);
    CHECK(frobenius_norm(aluthge_t(t, 1.0) - duggal(t)) <= eps);
    CHECK(frobenius_norm(aluthge_t(t, 0.0) - t) <= eps);
  }
}

TEST_CASE("aluthge rejects t outside [0, 1]") {
  const ComplexMatrix t = to_matrix(kShift121);
  CHECK_THROWS_AS(aluthge_t(t, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(aluthge_t(t, 1.1), std::invalid_argument);
}

TEST_CASE("mean transform of the equal-weight shift") {
  const ComplexMatrix m =
      mean_t(to_matrix(WeightedShift(4, {cxd{1, 0}, cxd{1, 0}, cxd{1, 0}})), 0.0);
  const ComplexMatrix expected = ComplexMatrix::from_rows(
      {{0, 0.5, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
  CHECK(max_abs_diff(m, expected) <= 1e-12);
}

TEST_CASE("mean transform weights follow the averaged-moduli formula") {
  const double w1 = 1.7, w2 = 0.4, w3 = 2.2;
  const ComplexMatrix m =
      mean_t(to_matrix(WeightedShift(4, {cxd{w1, 0}, cxd{w2, 0}, cxd{w3, 0}})), 0.0);
  CHECK(std::abs(m(0, 1) - 0.5 * w1) <= 1e-12);
  CHECK(std::abs(m(1, 2) - 0.5 * (w1 + w2)) <= 1e-12);
  CHECK(std::abs(m(2, 3) - 0.5 * (w2 + w3)) <= 1e-12);
}

TEST_CASE("mean transform fixes normal operators at every t") {
  const ComplexMatrix t = random_normal(42);
  for (double s : {0.0, 0.2, 0.5})
    CHECK(frobenius_norm(mean_t(t, s) - t) <= polar_eps(t));
}

TEST_CASE("mean endpoint identity: t=0 averages T and duggal(T)") {
  Rng rng(23);
  const ComplexMatrix t = random_matrix(rng, 5);
  const ComplexMatrix avg = cxd{0.5, 0} * (t + duggal(t));
  CHECK(frobenius_norm(mean_t(t, 0.0) - avg) <= polar_eps(t));
}

TEST_CASE("mean rejects t outside [0, 1/2]") {
  const ComplexMatrix t = to_matrix(kShift121);
  CHECK_THROWS_AS(mean_t(t, 0.6), std::invalid_argument);
  CHECK_THROWS_AS(mean_t(t, -0.01), std::invalid_argument);
}

TEST_CASE("gauge equivariance of the transforms") {
  Rng rng(24);
  for (int rep = 0; rep < 4; ++rep) {
    std::vector<cxd> w(3);
    for (auto& x : w) x = rng.uniform(0.5, 3.0) * rng.unit_phase();
    const WeightedShift s(4, w);
    const GaugeResult g = unimodular_gauge(s);
    const ComplexMatrix t = to_matrix(s);
    const ComplexMatrix tg = to_matrix(g.positive);
    const ComplexMatrix dadj = adjoint(g.D);
    const double eps = polar_eps(t);
    CHECK(frobenius_norm(duggal(tg) - matmul(dadj, matmul(duggal(t), g.D))) <= eps);
    CHECK(frobenius_norm(aluthge_t(tg, 0.5) -
                         matmul(dadj, matmul(aluthge_t(t, 0.5), g.D))) <= eps);
    CHECK(frobenius_norm(mean_t(tg, 0.25) -
                         matmul(dadj, matmul(mean_t(t, 0.25), g.D))) <= eps);
  }
}

TEST_CASE("partial isometry and unitary predicates") {
  const PolarParts pp = polar_decompose(to_matrix(kShift121));
  CHECK(is_partial_isometry(pp.U));
  CHECK(!is_unitary(pp.U));

  CHECK(is_partial_isometry(ComplexMatrix::identity(3)));
  CHECK(is_unitary(ComplexMatrix::identity(3)));

  CHECK(is_partial_isometry(diag_real({1, 0})));
  CHECK(!is_unitary(diag_real({1, 0})));

  // generic matrices are neither
  CHECK(!is_partial_isometry(diag_real({2, 1})));
}

TEST_CASE("polar of degenerate sizes") {
  const PolarParts p0 = polar_decompose(ComplexMatrix(0, 0));
  CHECK(p0.U.rows() == 0);
  const ComplexMatrix one = ComplexMatrix::from_rows({{cxd{0, 2}}});
  const PolarParts p1 = polar_decompose(one);
  CHECK(std::abs(p1.P(0, 0) - 2.0) <= 1e-14);
  CHECK(std::abs(p1.U(0, 0) - cxd{0, 1}) <= 1e-14);
}
