#pragma once

#include <Eigen/Dense>
#include <complex>

namespace dualfield {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

inline constexpr double kPi = 3.14159265358979323846;

/// sin(pi x) and cos(pi x), exactly zero at integer and half-integer zeros.
double sin_pi(double x);
double cos_pi(double x);

/// SI constants. The default set uses the CODATA 2018 values with
/// eps0 derived from mu0 and c so that c^2 eps0 mu0 = 1 holds to rounding.
struct PhysicalConstants {
  double eps0;
  double mu0;
  double c;
  double hbar;
  double e_charge;

  static PhysicalConstants codata();

  /// Relative violation of c^2 eps0 mu0 = 1.
  double consistency_error() const;

  /// Throws std::invalid_argument unless every constant is positive and
  /// the consistency error is below 1e-12.
  void validate() const;
};

}  // namespace dualfield
