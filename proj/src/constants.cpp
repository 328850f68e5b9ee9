#include "dualfield/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dualfield {

PhysicalConstants PhysicalConstants::codata() {
  constexpr double c = 299792458.0;
  constexpr double mu0 = 1.25663706212e-6;
  return {1.0 / (mu0 * c * c), mu0, c, 1.054571817e-34, 1.602176634e-19};
}

double PhysicalConstants::consistency_error() const { return std::abs(c * c * eps0 * mu0 - 1.0); }

void PhysicalConstants::validate() const {
  if (!(eps0 > 0 && mu0 > 0 && c > 0 && hbar > 0 && e_charge > 0)) {
    throw std::invalid_argument("physical constants must be positive");
  }
  if (consistency_error() > 1e-12) {
    throw std::invalid_argument("inconsistent constants: |c^2 eps0 mu0 - 1| = " +
                                std::to_string(consistency_error()));
  }
}

double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  if (r == 0.0 || r == 1.0) return 0.0;
  const double sign = r > 1.0 ? -1.0 : 1.0;
  if (r > 1.0) r -= 1.0;
  if (r == 0.5) return sign;
  return sign * std::sin(kPi * (r > 0.5 ? 1.0 - r : r));
}

double cos_pi(double x) {
  const double r = std::fmod(std::abs(x), 2.0);
  if (r == 0.5 || r == 1.5) return 0.0;
  if (r == 0.0) return 1.0;
  if (r == 1.0) return -1.0;
  return std::cos(kPi * r);
}

}  // namespace dualfield
