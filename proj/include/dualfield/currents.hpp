#pragma once

// Complex field functions u^{s,+-} built from cavity modes, their Lagrangian,
// the two Noether current families of the U1 x R gauge group, complex charge,
// Hilbert norms and the spin tensor. Index 4 is x4 = ict, d4 = (1/(ic)) d/dt.

#include <array>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dualfield/cavity.hpp"

namespace dualfield::currents {

enum class SignFamily { Plus, Minus };
enum class CurrentFamily { J1, J2, Total };
enum class Charge { Q1, Q2 };

class FieldFunctionSet {
 public:
  /// Throws std::invalid_argument for an empty mode list or modes of different length.
  FieldFunctionSet(std::vector<cavity::CavityMode> modes, SignFamily sign = SignFamily::Plus,
                   cavity::IntegrationConstants ic = cavity::IntegrationConstants::Dropped);

  const std::vector<cavity::CavityMode>& modes() const noexcept { return modes_; }
  SignFamily sign() const noexcept { return sign_; }
  cavity::IntegrationConstants constants_mode() const noexcept { return ic_; }
  const PhysicalConstants& constants() const noexcept { return modes_.front().constants(); }
  double length() const noexcept { return modes_.front().length(); }
  double volume() const noexcept { return modes_.front().volume(); }

  /// u^1 = sqrt(eps0) A_E sin(kz) [q +- i q''], u^2 = sqrt(mu0) A_H cos(kz) [-q' +- (i/w) dq/dt].
  /// s in 1..2, alpha indexes modes(). No domain check, so stencils may leave [0, L].
  cplx u(int s, std::size_t alpha, double z, double t) const;
  /// Closed-form partial derivatives; mu = 3 is d/dz, mu = 4 is (1/(ic)) d/dt.
  cplx du(int s, std::size_t alpha, int mu, double z, double t) const;
  /// dz and dt of u by sixth-order central differences.
  cplx du_numeric(int s, std::size_t alpha, int mu, double z, double t) const;

  /// Time envelope g_s and its t-derivative; u = amplitude * profile * g.
  cplx envelope(int s, std::size_t alpha, double t) const;
  cplx envelope_dot(int s, std::size_t alpha, double t) const;
  double amplitude(int s, std::size_t alpha) const;

 private:
  std::vector<cavity::CavityMode> modes_;
  SignFamily sign_;
  cavity::IntegrationConstants ic_;
};

struct NoetherContext {
  std::function<double(double, double)> K = [](double, double) { return 0.0; };
  Eigen::Matrix2d I_matrix = (Eigen::Matrix2d() << 0.0, 1.0, -1.0, 0.0).finished();
};

/// sum_s sum_alpha sum_mu d_mu u d_mu u* - K u u*; real by construction.
double lagrangian_density(const FieldFunctionSet& ffs, const NoetherContext& ctx, double z, double t);

/// Which evaluation path produced a current.
enum class Route { ClosedForm, Generic };

/// Closed forms hold for constant-free envelopes; otherwise the generic route is used.
cplx current_j1(const FieldFunctionSet& ffs, const NoetherContext& ctx, int mu, double z, double t);
cplx current_j2(const FieldFunctionSet& ffs, const NoetherContext& ctx, int mu, double z, double t);
cplx current(const FieldFunctionSet& ffs, const NoetherContext& ctx, CurrentFamily fam, int mu, double z, double t,
             Route route);

/// Natural magnitude of current densities: (e/(hbar c^2 V)) sum 8 m w^3 (|C1|^2 + |C2|^2).
double current_scale(const FieldFunctionSet& ffs);

/// Euler-Lagrange residual box u + K u at a point from closed-form second derivatives.
cplx euler_lagrange_residual(const FieldFunctionSet& ffs, const NoetherContext& ctx, int s, std::size_t alpha,
                             double z, double t);

struct ContinuityResidual {
  double absolute;  // max |dj3/dz + (1/(ic)) dj4/dt|
  double relative;  // absolute over the largest term magnitude seen
};

ContinuityResidual continuity_residual(const FieldFunctionSet& ffs, const NoetherContext& ctx, const Axis& z,
                                       const Axis& t, CurrentFamily fam);
/// Central-difference check on arbitrary current components (z, t) -> j.
ContinuityResidual continuity_residual(const std::function<cplx(double, double)>& j3,
                                       const std::function<cplx(double, double)>& j4, const Axis& z, const Axis& t,
                                       double c);

/// Q1 = -int sum [dL/d(d4 u) u - dL/d(d4 u*) u*], Q2 = int sum d4 |u|^2, over the cavity volume.
cplx charge_Q(const FieldFunctionSet& ffs, const NoetherContext& ctx, Charge component, double t);
cplx complex_charge(const FieldFunctionSet& ffs, const NoetherContext& ctx, double t);
/// Q1 from the volume integral of j4^1, times -i hbar c / e.
cplx charge_from_current(const FieldFunctionSet& ffs, const NoetherContext& ctx, double t, std::size_t nz = 257);

/// S^mu_12 = sum [d_mu u*^1 u^2 - d_mu u*^2 u^1] + c.c.
double spin_density(const FieldFunctionSet& ffs, int mu, double z, double t);
/// Same component through the Noether tensor -sum dL/d(d_mu u_i) (I U)_i + c.c.,
/// with dL/d(d_mu u_i) obtained by differentiating the Lagrangian numerically,
/// rescaled by kNoetherSpinNormalization.
double spin_density_noether(const FieldFunctionSet& ffs, const NoetherContext& ctx, int mu, double z, double t);
inline constexpr double kNoetherSpinNormalization = -1.0;

/// S^4_3 = -(i/c) int S^4_12 d^3x with exact z-integrals.
cplx spirality(const FieldFunctionSet& ffs, double t);
/// Spirality from the Noether route, z-integral by composite Simpson rule.
cplx spirality_noether(const FieldFunctionSet& ffs, const NoetherContext& ctx, double t, std::size_t nz = 257);
/// Natural magnitude of the spirality: (V/c) sum A^2 w (|C1|^2 + |C2|^2).
double spirality_scale(const FieldFunctionSet& ffs);

/// sqrt(sum_s sum_alpha int_0^L |u|^2 dz), exact z-integrals.
double hilbert_norm(const FieldFunctionSet& ffs, double t);
double hilbert_distance(const FieldFunctionSet& ffs, double t1, double t2);
/// Norm of the pointwise difference of two sets whose modes match index by index
/// in alpha and cavity length; throws std::invalid_argument otherwise.
double hilbert_distance(const FieldFunctionSet& a, double ta, const FieldFunctionSet& b, double tb);

}  // namespace dualfield::currents
