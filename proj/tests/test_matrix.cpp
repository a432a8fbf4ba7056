#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "oplab/io.hpp"
#include "oplab/matrix.hpp"
#include "oplab/rng.hpp"
#include "oplab/shift.hpp"

using namespace oplab;

namespace {

ComplexMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.gauss_complex();
  return m;
}

ComplexMatrix diag_real(std::initializer_list<double> d) {
  ComplexMatrix m(d.size(), d.size());
  std::size_t i = 0;
  for (double v : d) m(i, i) = v, ++i;
  return m;
}

}  // namespace

TEST_CASE("matmul: identity is neutral") {
  Rng rng(1);
  const ComplexMatrix a = random_matrix(rng, 3, 3);
  CHECK(max_abs_diff(matmul(ComplexMatrix::identity(3), a), a) == 0.0);
}

TEST_CASE("matmul: shift factor times modulus gives back the weights") {
  // superdiagonal (1,1,1) times diag(0,1,2,1) -> superdiagonal (1,2,1)
  const ComplexMatrix u = to_matrix(WeightedShift(4, {1.0, 1.0, 1.0}));
  const ComplexMatrix p = diag_real({0, 1, 2, 1});
  const ComplexMatrix t = matmul(u, p);
  CHECK(t == to_matrix(WeightedShift(4, {1.0, 2.0, 1.0})));
}

TEST_CASE("matmul: associativity on random triples") {
  Rng rng(2);
  for (int rep = 0; rep < 10; ++rep) {
    const ComplexMatrix a = random_matrix(rng, 3, 3);
    const ComplexMatrix b = random_matrix(rng, 3, 3);
    const ComplexMatrix c = random_matrix(rng, 3, 3);
    CHECK(frobenius_norm(matmul(matmul(a, b), c) - matmul(a, matmul(b, c))) <=
          1e-12);
  }
}

TEST_CASE("matmul: dimension mismatch throws") {
  CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("matmul_adjA_into equals adjoint-then-multiply") {
  Rng rng(3);
  const ComplexMatrix a = random_matrix(rng, 5, 4);
  const ComplexMatrix b = random_matrix(rng, 5, 6);
  ComplexMatrix out(4, 6);
  matmul_adjA_into(out, a, b);
  CHECK(frobenius_norm(out - matmul(adjoint(a), b)) <= 1e-13);
}

TEST_CASE("adjoint, transpose, conj basics") {
  ComplexMatrix d(2, 2);
  d(0, 0) = cxd{0, 1};
  d(1, 1) = cxd{0, 1};
  const ComplexMatrix da = adjoint(d);
  CHECK(da(0, 0) == cxd{0, -1});
  CHECK(da(1, 1) == cxd{0, -1});

  const ComplexMatrix s = to_matrix(WeightedShift(4, {1.0, 2.0, 1.0}));
  const ComplexMatrix sa = adjoint(s);
  CHECK(sa(1, 0) == cxd{1, 0});
  CHECK(sa(2, 1) == cxd{2, 0});
  CHECK(sa(3, 2) == cxd{1, 0});
  CHECK(sa(0, 1) == cxd{0, 0});

  Rng rng(4);
  const ComplexMatrix a = random_matrix(rng, 4, 3);
  CHECK(adjoint(adjoint(a)) == a);
  CHECK(transpose(transpose(a)) == a);
  CHECK(conj(conj(a)) == a);
  CHECK(frobenius_norm(adjoint(a) - conj(transpose(a))) == 0.0);
}

TEST_CASE("commutator: [A, A] = 0 and the shift examples") {
  Rng rng(5);
  const ComplexMatrix a = random_matrix(rng, 3, 3);
  CHECK(frobenius_norm(commutator(a, a)) == 0.0);

  // |T| and |T^*| for the (1,2,1) shift are both diagonal, so they commute.
  const ComplexMatrix mod_t = diag_real({0, 1, 2, 1});
  const ComplexMatrix mod_ta = diag_real({1, 2, 1, 0});
  CHECK(frobenius_norm(commutator(mod_t, mod_ta)) <= 1e-12);

  // equal-weight shift is not quasinormal: [T, T^*T] has norm 1
  const ComplexMatrix t = to_matrix(WeightedShift(4, {1.0, 1.0, 1.0}));
  CHECK(frobenius_norm(commutator(t, matmul(adjoint(t), t))) >= 0.5);
}

TEST_CASE("frobenius norm of the (1,2,1) shift") {
  CHECK(frobenius_norm(to_matrix(WeightedShift(4, {1.0, 2.0, 1.0}))) ==
        doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
}

TEST_CASE("direct_sum places blocks and ignores empty operands") {
  const ComplexMatrix z(1, 1);
  const ComplexMatrix s = to_matrix(WeightedShift(2, {1.0}));
  const ComplexMatrix d = direct_sum(z, s);
  CHECK(d.rows() == 3);
  CHECK(d(1, 2) == cxd{1, 0});
  CHECK(d(0, 0) == cxd{0, 0});

  const ComplexMatrix empty;
  CHECK(direct_sum(empty, s) == s);
  CHECK(direct_sum(s, empty) == s);
}

TEST_CASE("scalar multiply and add/sub") {
  Rng rng(6);
  const ComplexMatrix a = random_matrix(rng, 3, 3);
  const ComplexMatrix b = random_matrix(rng, 3, 3);
  CHECK(frobenius_norm((a + b) - b - a) <= 1e-14);
  CHECK(frobenius_norm(cxd{2, 0} * a - a - a) <= 1e-14);
}

TEST_CASE("matrix json round trip") {
  Rng rng(7);
  const ComplexMatrix a = random_matrix(rng, 3, 5);
  const ComplexMatrix b = io::matrix_from_json(io::matrix_to_json(a));
  CHECK(a == b);
}

TEST_CASE("matrix reader rejects malformed and non-finite documents") {
  CHECK_THROWS(io::matrix_from_json("{\"rows\": 2, \"cols\": 2}"));
  CHECK_THROWS(io::matrix_from_json(
      "{\"rows\": 2, \"cols\": 2, \"data\": [[0,0],[0,0],[0,0]]}"));
  // 1e999 overflows double: nlohmann reports it; guard stays either way
  CHECK_THROWS(io::matrix_from_json(
      "{\"rows\": 1, \"cols\": 1, \"data\": [[1e999, 0]]}"));
  CHECK_THROWS(io::matrix_from_json(
      "{\"rows\": 1, \"cols\": 1, \"data\": [[NaN, 0]]}"));
  CHECK_THROWS(io::matrix_from_json(
      "{\"rows\": 1, \"cols\": 1, \"data\": [[\"x\", 0]]}"));
}

TEST_CASE("matrix file io") {
  Rng rng(8);
  const ComplexMatrix a = random_matrix(rng, 4, 4);
  const std::string path = "test_matrix_io.json";
  io::write_matrix_file(path, a);
  CHECK(io::read_matrix_file(path) == a);
  std::remove(path.c_str());
}

TEST_CASE("all_finite flags NaN and Inf") {
  ComplexMatrix a(2, 2);
  CHECK(all_finite(a));
  a(1, 1) = cxd{std::nan(""), 0};
  CHECK(!all_finite(a));
}

TEST_CASE("degenerate shapes are legal") {
  const ComplexMatrix e;
  CHECK(e.rows() == 0);
  CHECK(frobenius_norm(e) == 0.0);
  CHECK(matmul(e, e).rows() == 0);
  const ComplexMatrix one = ComplexMatrix::identity(1);
  CHECK(matmul(one, one) == one);
}
