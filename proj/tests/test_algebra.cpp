#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dualfield/algebra.hpp"

using namespace dualfield::algebra;
using Eigen::Matrix2cd;

namespace {

// Hamilton quaternions as 2x2 complex matrices, independent of the table.
Matrix2cd hamilton_matrix(int index) {
  const cplx i{0.0, 1.0};
  Matrix2cd m;
  switch (index) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << i, 0, 0, -i; break;
    case 2: m << 0, 1, -1, 0; break;
    default: m << 0, i, i, 0; break;
  }
  return m;
}

int levi_civita(int a, int b, int c) {
  return (a - b) * (b - c) * (c - a) / 2;
}

}  // namespace

TEST_CASE("complex numbers as 2x2 real matrices") {
  CHECK(complex_to_matrix2(1, 0) == Matrix2R::Identity());
  Matrix2R j;
  j << 0, -1, 1, 0;
  CHECK(complex_to_matrix2(0, 1) == j);
  CHECK(complex_to_matrix2({1, 2}) * complex_to_matrix2({3, -1}) == complex_to_matrix2({5, 5}));
  CHECK(matrix2_to_complex(complex_to_matrix2({-2.5, 4})) == cplx(-2.5, 4));
  Matrix2R bad;
  bad << 1, 2, 3, 4;
  CHECK_THROWS_AS(matrix2_to_complex(bad), std::invalid_argument);
}

TEST_CASE("cyclic [0,1] bases") {
  for (auto v : {Basis01Variant::Zeta, Basis01Variant::ZetaPrime}) {
    CAPTURE(static_cast<int>(v));
    const Matrix01 e1 = basis01_element(v, 1);
    const Matrix01 e2 = basis01_element(v, 2);
    CHECK(e1 == Matrix01::Identity());
    CHECK(e2 * e2 == basis01_element(v, 3));
    CHECK(e2 * e2 * e2 == basis01_element(v, 4));
    CHECK(e2 * e2 * e2 * e2 == e1);
    for (int k = 1; k <= 4; ++k) CHECK(is_permutation_matrix(basis01_element(v, k)));
    // i^2 = -1 under the mapping
    CHECK(basis01_image(v, 0, 1) * basis01_image(v, 0, 1) == basis01_image(v, -1, 0));
    // i (-i) = 1 and (-1)(-1) = 1
    CHECK(e2 * basis01_element(v, 4) == e1);
    CHECK(basis01_element(v, 3) * basis01_element(v, 3) == e1);
  }
  CHECK(basis01_element(Basis01Variant::Zeta, 2) != basis01_element(Basis01Variant::ZetaPrime, 2));
  CHECK_THROWS(basis01_element(Basis01Variant::Zeta, 0));
  CHECK_THROWS(basis01_element(Basis01Variant::Zeta, 5));
}

TEST_CASE("hermitian split") {
  Eigen::MatrixXcd sym(2, 2);
  sym << 1, 2, 2, 3;
  auto s = hermitian_split(sym);
  CHECK(s.antisymmetric.isZero(0.0));
  CHECK(s.symmetric == sym.real());

  Eigen::MatrixXcd pauli_y(2, 2);
  pauli_y << 0, cplx(0, -1), cplx(0, 1), 0;
  s = hermitian_split(pauli_y);
  Eigen::MatrixXd A(2, 2);
  A << 0, -1, 1, 0;
  CHECK(s.symmetric.isZero(0.0));
  CHECK(s.antisymmetric == A);

  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> d(-10, 10);
  Eigen::MatrixXcd R(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) R(i, k) = {d(gen), d(gen)};
  const Eigen::MatrixXcd H = R + R.adjoint();
  s = hermitian_split(H);
  const Eigen::MatrixXcd back = s.symmetric.cast<cplx>() + cplx(0, 1) * s.antisymmetric.cast<cplx>();
  CHECK((back - H).norm() == doctest::Approx(0.0));
  CHECK((s.symmetric - s.symmetric.transpose()).norm() == 0.0);
  CHECK((s.antisymmetric + s.antisymmetric.transpose()).norm() == 0.0);

  const auto block = hermitian_block_form(s);
  CHECK(block.rows() == 10);
  CHECK((block - block.transpose()).norm() == doctest::Approx(0.0));

  CHECK_THROWS_AS(hermitian_split(R), NotHermitian);
}

TEST_CASE("Hamilton table against the matrix representation") {
  const auto x = Quaternion::unit(QuatBasis::Hamilton, 1);
  const auto y = Quaternion::unit(QuatBasis::Hamilton, 2);
  CHECK(quat_mul(x, y) == Quaternion::unit(QuatBasis::Hamilton, 3));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      const auto p = basis_product(QuatBasis::Hamilton, a, b);
      const Matrix2cd expected = hamilton_matrix(a) * hamilton_matrix(b);
      CHECK((static_cast<double>(p.sign) * hamilton_matrix(p.index) - expected).norm() == 0.0);
    }
}

TEST_CASE("Levi-Civita table") {
  const auto e0 = Quaternion::unit(QuatBasis::LeviCivita, 0);
  const auto e1 = Quaternion::unit(QuatBasis::LeviCivita, 1);
  CHECK(quat_mul(e1, e1) == e0);
  for (int a = 1; a < 4; ++a)
    for (int b = 1; b < 4; ++b) {
      const auto p = basis_product(QuatBasis::LeviCivita, a, b);
      if (a == b) {
        CHECK(p.index == 0);
        CHECK(p.sign == 1);
      } else {
        const int c = 6 - a - b;
        CHECK(p.index == c);
        CHECK(p.sign == levi_civita(a, b, c));
      }
    }
  // The table is not associative: (e1 e2) e2 = -e1 while e1 (e2 e2) = e1.
  const auto e2 = Quaternion::unit(QuatBasis::LeviCivita, 2);
  CHECK(quat_mul(quat_mul(e1, e2), e2) == -1.0 * e1);
  CHECK(quat_mul(e1, quat_mul(e2, e2)) == e1);
}

TEST_CASE("bilinear quaternion product") {
  Quaternion x, y;
  x.c = {cplx(1, 1), 2, 0, cplx(0, -1)};
  y.c = {3, cplx(0, 2), -1, 1};
  // Oracle through the matrix representation.
  Matrix2cd mx = Matrix2cd::Zero(), my = Matrix2cd::Zero(), mp = Matrix2cd::Zero();
  const auto p = quat_mul(x, y);
  for (int i = 0; i < 4; ++i) {
    mx += x[i] * hamilton_matrix(i);
    my += y[i] * hamilton_matrix(i);
    mp += p[i] * hamilton_matrix(i);
  }
  CHECK((mx * my - mp).norm() == doctest::Approx(0.0));
  CHECK_THROWS(quat_mul(x, Quaternion::unit(QuatBasis::LeviCivita, 1)));
  CHECK_THROWS(basis_product(QuatBasis::Hamilton, 4, 0));
}
