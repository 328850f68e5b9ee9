#pragma once

// Closed-form standing-wave solutions of the 1D perfectly conducting cavity.
// E is polarized along x, H along y, both depend on (z, t) only.

#include <span>
#include <vector>

#include "dualfield/constants.hpp"
#include "dualfield/grid.hpp"

namespace dualfield::cavity {

enum class Branch { First, Second };

/// Treatment of the constants produced by integrating q from 0 to t.
/// Kept: q' = w int_0^t q, q'' = w int_0^t q'. Dropped: the constant-free
/// antiderivatives, for which q'' = -q and the second branch is an exact
/// Maxwell solution.
enum class IntegrationConstants { Kept, Dropped };

class CavityMode {
 public:
  /// Throws std::invalid_argument for alpha < 1 or non-positive L, volume, mass.
  CavityMode(int alpha, double L, double volume, double mass, cplx C1, cplx C2,
             const PhysicalConstants& pc = PhysicalConstants::codata());

  /// Real solution B cos(wt + phi): C1 = (B/2) e^{i phi}, C2 = conj(C1).
  static CavityMode real_branch(int alpha, double L, double volume, double mass, double B, double phi,
                                const PhysicalConstants& pc = PhysicalConstants::codata());

  int alpha() const noexcept { return alpha_; }
  double length() const noexcept { return L_; }
  double volume() const noexcept { return volume_; }
  double mass() const noexcept { return mass_; }
  cplx C1() const noexcept { return C1_; }
  cplx C2() const noexcept { return C2_; }
  double k() const noexcept { return k_; }
  double omega() const noexcept { return omega_; }
  double amp_E() const noexcept { return amp_E_; }
  double amp_H() const noexcept { return amp_H_; }
  const PhysicalConstants& constants() const noexcept { return pc_; }

  bool is_real_branch(double tol = 1e-12) const;
  CavityMode with_amplitudes(cplx C1, cplx C2) const;

 private:
  int alpha_;
  double L_;
  double volume_;
  double mass_;
  cplx C1_;
  cplx C2_;
  PhysicalConstants pc_;
  double k_;
  double omega_;
  double amp_E_;
  double amp_H_;
};

cplx q_mode(double t, const CavityMode& mode);
cplx q_dot(double t, const CavityMode& mode);
cplx q_ddot(double t, const CavityMode& mode);
/// d^2q/dt^2 + w^2 q from the closed forms.
cplx ode_residual(double t, const CavityMode& mode);

cplx q_prime(double t, const CavityMode& mode, IntegrationConstants ic = IntegrationConstants::Kept);
cplx q_dprime(double t, const CavityMode& mode, IntegrationConstants ic = IntegrationConstants::Kept);

/// E along x. Throws std::out_of_range unless 0 <= z <= L; all modes must share L.
CVec3 field_E(double z, double t, Branch branch, std::span<const CavityMode> modes,
              IntegrationConstants ic = IntegrationConstants::Dropped);
/// H along y. FIRST: (A_H/w) dq/dt cos(kz). SECOND: A_H q' cos(kz).
CVec3 field_H(double z, double t, Branch branch, std::span<const CavityMode> modes,
              IntegrationConstants ic = IntegrationConstants::Dropped);

/// Samples (E_x, H_y) as components 0 and 1.
SampledGrid sample_fields(std::span<const CavityMode> modes, Branch branch, const Axis& z, const Axis& t,
                          IntegrationConstants ic = IntegrationConstants::Dropped);

struct MaxwellResidual {
  double faraday;  // max |dE_x/dz + mu0 dH_y/dt|
  double ampere;   // max |dH_y/dz + eps0 dE_x/dt|
};

/// Central-difference residuals over interior nodes of a (E_x, H_y) grid.
MaxwellResidual maxwell_residual(const SampledGrid& fields, const PhysicalConstants& pc);
MaxwellResidual maxwell_residual(std::span<const CavityMode> modes, Branch branch, const Axis& z, const Axis& t,
                                 IntegrationConstants ic = IntegrationConstants::Dropped);

/// 1/2 sum (m w^2 q^2 + p^2/m); throws std::invalid_argument unless every mode is real.
double hamiltonian(double t, std::span<const CavityMode> modes);

/// Pointwise T[t f]/t on a time axis symmetric about zero: out(t) = -sign * f(-t),
/// sign = +1 for t-even and -1 for t-uneven components. The t = 0 column uses
/// the limit of the same expression.
SampledGrid t_reversal_companion(const SampledGrid& field, std::span<const int> time_signs);
/// Cavity layout: E_x is t-even (+1), H_y is t-uneven (-1).
SampledGrid t_reversal_companion(const SampledGrid& field);

}  // namespace dualfield::cavity
