#pragma once

// Matrix representations of complex numbers, cyclic [0,1]-matrix bases and
// the two quaternion multiplication tables used by the field modules.

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dualfield::algebra {

using cplx = std::complex<double>;

/// 2x2 real matrix image of a complex number a+ib, always [[a,-b],[b,a]].
using Matrix2R = Eigen::Matrix2d;

/// 4x4 integer [0,1]-matrix.
using Matrix01 = Eigen::Matrix<std::int64_t, 4, 4>;

Matrix2R complex_to_matrix2(double re, double im);
inline Matrix2R complex_to_matrix2(cplx z) { return complex_to_matrix2(z.real(), z.imag()); }

/// Inverse of complex_to_matrix2; throws if the matrix is not of the form [[a,-b],[b,a]].
cplx matrix2_to_complex(const Matrix2R& m, double tol = 0.0);

enum class Basis01Variant { Zeta, ZetaPrime };

/// Element e_index (index in 1..4) of the chosen cyclic [0,1]-basis.
/// e_1 represents 1, e_2 represents i, e_3 represents -1, e_4 represents -i.
Matrix01 basis01_element(Basis01Variant variant, int index);

/// Image of the integer complex number a + i b in the [0,1]-basis:
/// max(a,0) e1 + max(-a,0) e3 + max(b,0) e2 + max(-b,0) e4.
Matrix01 basis01_image(Basis01Variant variant, std::int64_t re, std::int64_t im);

bool is_permutation_matrix(const Matrix01& m);

/// Thrown by hermitian_split when the input deviates from its adjoint.
class NotHermitian : public std::invalid_argument {
 public:
  explicit NotHermitian(double violation)
      : std::invalid_argument("matrix is not Hermitian: ||H - H^dagger|| = " + std::to_string(violation)),
        violation_(violation) {}
  double violation() const noexcept { return violation_; }

 private:
  double violation_;
};

struct HermitianSplit {
  Eigen::MatrixXd symmetric;      // S = Re H
  Eigen::MatrixXd antisymmetric;  // A = Im H
};

/// Splits a Hermitian H into S + iA with S symmetric and A antisymmetric.
/// The check uses the Frobenius norm of H - H^dagger against `tol`.
HermitianSplit hermitian_split(const Eigen::MatrixXcd& H, double tol = 1e-12);

/// Real 2n x 2n block form [[S,-A],[A,S]] of a Hermitian matrix.
Eigen::MatrixXd hermitian_block_form(const HermitianSplit& split);

// ---------------------------------------------------------------------------
// Quaternions with complex coefficients

enum class QuatBasis {
  Hamilton,    // (e, i, j, k): ij = k, jk = i, ki = j, i^2 = j^2 = k^2 = -1
  LeviCivita,  // (e0, e1, e2, e3): e_a e_b = eps_abc e_c + delta_ab e0
};

struct Quaternion {
  QuatBasis basis = QuatBasis::Hamilton;
  std::array<cplx, 4> c{};  // coefficient of basis element 0..3

  static Quaternion unit(QuatBasis basis, int index);

  cplx& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const cplx& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(cplx s);

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion operator+(Quaternion a, const Quaternion& b);
Quaternion operator-(Quaternion a, const Quaternion& b);
Quaternion operator*(cplx s, Quaternion q);

/// Product of two basis elements as (sign, index) in the given table.
struct BasisProduct {
  int sign;
  int index;
};
BasisProduct basis_product(QuatBasis basis, int a, int b);

/// Bilinear extension of the basis table; throws on mismatched basis tags.
Quaternion quat_mul(const Quaternion& x, const Quaternion& y);

double max_abs_difference(const Quaternion& a, const Quaternion& b);

}  // namespace dualfield::algebra
