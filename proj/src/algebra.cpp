#include "dualfield/algebra.hpp"

#include <cmath>

namespace dualfield::algebra {

Matrix2R complex_to_matrix2(double re, double im) {
  Matrix2R m;
  m << re, -im, im, re;
  return m;
}

cplx matrix2_to_complex(const Matrix2R& m, double tol) {
  if (std::abs(m(0, 0) - m(1, 1)) > tol || std::abs(m(0, 1) + m(1, 0)) > tol) {
    throw std::invalid_argument("matrix is not the image of a complex number");
  }
  return {m(0, 0), m(1, 0)};
}

namespace {

// Row r of each basis element has its single 1 in column perm[r].
constexpr std::array<std::array<int, 4>, 4> kZetaPerm{{
    {0, 1, 2, 3},
    {1, 2, 3, 0},
    {2, 3, 0, 1},
    {3, 0, 1, 2},
}};

constexpr std::array<std::array<int, 4>, 4> kZetaPrimePerm{{
    {0, 1, 2, 3},
    {2, 3, 1, 0},
    {1, 0, 3, 2},
    {3, 2, 0, 1},
}};

}  // namespace

Matrix01 basis01_element(Basis01Variant variant, int index) {
  if (index < 1 || index > 4) {
    throw std::out_of_range("basis01 index must be in 1..4, got " + std::to_string(index));
  }
  const auto& perm = (variant == Basis01Variant::Zeta ? kZetaPerm : kZetaPrimePerm)[index - 1];
  Matrix01 m = Matrix01::Zero();
  for (int r = 0; r < 4; ++r) m(r, perm[r]) = 1;
  return m;
}

Matrix01 basis01_image(Basis01Variant variant, std::int64_t re, std::int64_t im) {
  Matrix01 m = Matrix01::Zero();
  if (re > 0) m += re * basis01_element(variant, 1);
  if (re < 0) m += (-re) * basis01_element(variant, 3);
  if (im > 0) m += im * basis01_element(variant, 2);
  if (im < 0) m += (-im) * basis01_element(variant, 4);
  return m;
}

bool is_permutation_matrix(const Matrix01& m) {
  for (int r = 0; r < 4; ++r) {
    if (m.row(r).sum() != 1 || m.col(r).sum() != 1) return false;
  }
  return (m.array() >= 0).all() && (m.array() <= 1).all();
}

HermitianSplit hermitian_split(const Eigen::MatrixXcd& H, double tol) {
  if (H.rows() != H.cols()) throw std::invalid_argument("hermitian_split: matrix must be square");
  const double violation = (H - H.adjoint()).norm();
  if (violation > tol) throw NotHermitian(violation);
  return {H.real(), H.imag()};
}

Eigen::MatrixXd hermitian_block_form(const HermitianSplit& split) {
  const auto n = split.symmetric.rows();
  Eigen::MatrixXd out(2 * n, 2 * n);
  out << split.symmetric, -split.antisymmetric, split.antisymmetric, split.symmetric;
  return out;
}

// ---------------------------------------------------------------------------

Quaternion Quaternion::unit(QuatBasis basis, int index) {
  Quaternion q;
  q.basis = basis;
  q[index] = 1.0;
  return q;
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  if (o.basis != basis) throw std::invalid_argument("quaternion basis mismatch");
  for (int i = 0; i < 4; ++i) (*this)[i] += o[i];
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  if (o.basis != basis) throw std::invalid_argument("quaternion basis mismatch");
  for (int i = 0; i < 4; ++i) (*this)[i] -= o[i];
  return *this;
}

Quaternion& Quaternion::operator*=(cplx s) {
  for (auto& v : c) v *= s;
  return *this;
}

Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
Quaternion operator*(cplx s, Quaternion q) { return q *= s; }

namespace {

int levi_civita(int a, int b, int c) {
  // indices in 1..3
  return (a - b) * (b - c) * (c - a) / 2;
}

BasisProduct hamilton_product(int a, int b) {
  // 0 = e, 1 = i, 2 = j, 3 = k
  if (a == 0) return {1, b};
  if (b == 0) return {1, a};
  if (a == b) return {-1, 0};
  // cyclic order i -> j -> k
  const int c = 6 - a - b;
  return {levi_civita(a, b, c), c};
}

BasisProduct levi_civita_product(int a, int b) {
  if (a == 0) return {1, b};
  if (b == 0) return {1, a};
  if (a == b) return {1, 0};
  const int c = 6 - a - b;
  return {levi_civita(a, b, c), c};
}

}  // namespace

BasisProduct basis_product(QuatBasis basis, int a, int b) {
  if (a < 0 || a > 3 || b < 0 || b > 3) throw std::out_of_range("quaternion basis index must be in 0..3");
  return basis == QuatBasis::Hamilton ? hamilton_product(a, b) : levi_civita_product(a, b);
}

Quaternion quat_mul(const Quaternion& x, const Quaternion& y) {
  if (x.basis != y.basis) throw std::invalid_argument("quat_mul: operands use different basis tables");
  Quaternion out;
  out.basis = x.basis;
  for (int a = 0; a < 4; ++a) {
    if (x[a] == cplx{}) continue;
    for (int b = 0; b < 4; ++b) {
      const auto p = basis_product(x.basis, a, b);
      out[p.index] += static_cast<double>(p.sign) * x[a] * y[b];
    }
  }
  return out;
}

double max_abs_difference(const Quaternion& a, const Quaternion& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace dualfield::algebra
