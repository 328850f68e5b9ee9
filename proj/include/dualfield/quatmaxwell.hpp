#pragma once

// Quaternion packing of the four parity components of E, H, j_e, j_g, rho_e,
// rho_g, finite-difference residuals of the generalized Maxwell system, and
// the biquaternion gradient of Phi = F + F~.

#include <array>
#include <span>
#include <vector>

#include "dualfield/algebra.hpp"
#include "dualfield/cavity.hpp"
#include "dualfield/dualsym.hpp"
#include "dualfield/grid.hpp"

namespace dualfield::quat {

/// Uniform (x, y, z, t) grid. Node index runs x fastest, then y, z, t.
/// An axis with a single sample is treated as a direction of no variation.
struct Grid4 {
  Axis x;
  Axis y;
  Axis z;
  Axis t;

  std::size_t size() const { return x.count * y.count * z.count * t.count; }
  std::size_t index(std::size_t ix, std::size_t iy, std::size_t iz, std::size_t it) const {
    return ((it * z.count + iz) * y.count + iy) * x.count + ix;
  }
  const Axis& axis(int a) const;
  /// Throws DegenerateGrid when an axis has exactly two samples or when z or t
  /// has fewer than three.
  void require_differentiable() const;
  bool operator==(const Grid4& o) const;
};

using VectorSamples = std::vector<Vec3>;
using ScalarSamples = std::vector<double>;

/// Raw real components [1]..[4] (array slots 0..3) of every quantity.
struct FieldComponents {
  std::array<VectorSamples, 4> E, H, je, jg;
  std::array<ScalarSamples, 4> rho_e, rho_g;

  static FieldComponents zeros(const Grid4& grid);
  /// Throws std::invalid_argument unless every sample vector has `n` entries.
  void require_size(std::size_t n) const;
};

/// Hamilton-basis coefficients (e, i, j, k) of each quaternion quantity.
/// (c1 - i c2) + (c3 - i c4) j has coefficients (c1, -c2, c3, -c4); the
/// magnetic current enters with all signs reversed.
struct FieldQuaternion {
  Grid4 grid;
  std::array<VectorSamples, 4> E, H, je, jg;
  std::array<ScalarSamples, 4> rho_e, rho_g;

  /// Parity of component n (1..4) of a quantity.
  static dualsym::ParityClass tag(dualsym::Quantity q, int component) {
    return dualsym::parity_classify(q, component);
  }
};

inline constexpr std::array<double, 4> kPackSigns{1.0, -1.0, 1.0, -1.0};
inline constexpr std::array<double, 4> kPackSignsJg{-1.0, 1.0, -1.0, 1.0};

FieldQuaternion assemble(const Grid4& grid, const FieldComponents& comps);
FieldComponents decompose(const FieldQuaternion& fq);

struct GeneralizedResidual {
  double a;  // curl E + mu0 dH/dt + j_g
  double b;  // curl H - eps0 dE/dt - j_e
  double c;  // div E - rho_e
  double d;  // div H - rho_g
  /// Same norms split by quaternion coefficient (e, i, j, k).
  std::array<double, 4> a_by_coeff{}, b_by_coeff{}, c_by_coeff{}, d_by_coeff{};
};

/// Max-norms over interior nodes by central differences.
GeneralizedResidual generalized_maxwell_residual(const FieldQuaternion& fq, const PhysicalConstants& pc);

/// FIRST branch as component [1], SECOND (constant-free envelopes) as [2],
/// real parts, no sources. The grid must lie inside the cavity.
FieldComponents embed_cavity(const Grid4& grid, std::span<const cavity::CavityMode> modes);

// ---------------------------------------------------------------------------

enum class Normalization { Literal, RiemannSilberstein };
enum class GradientMode { Spatial, Spacetime };

/// Phi = F + F~ sampled on a grid. Literal: F = E1 + i H1, F~ = H2 + i E2.
/// RiemannSilberstein: F = E1 + i c mu0 H1, F~ = c mu0 H2 - i E2, the scaling
/// under which the spacetime gradient annihilates free fields.
struct Biquaternion3Field {
  Grid4 grid;
  Normalization norm = Normalization::Literal;
  std::vector<CVec3> F;
  std::vector<CVec3> F_tilde;

  static Biquaternion3Field from_components(const Grid4& grid, const FieldComponents& comps, Normalization norm,
                                            const PhysicalConstants& pc);
  CVec3 phi(std::size_t node) const { return F[node] + F_tilde[node]; }
};

/// Re-expresses a Riemann-Silberstein field in the literal normalization.
Biquaternion3Field to_literal(const Biquaternion3Field& field, const PhysicalConstants& pc);

struct QuaternionField {
  Grid4 grid;
  std::vector<algebra::Quaternion> values;  // zero on boundary nodes
  double max_abs() const;
  double max_abs_scalar() const;
  double max_abs_vector() const;
};

/// Left action sum_k e_k d_k Phi in the Levi-Civita basis: scalar part div Phi,
/// vector part curl Phi. Spacetime mode adds e0 (1/(ic)) d_t Phi.
QuaternionField biquat_gradient(const Biquaternion3Field& phi, GradientMode mode, const PhysicalConstants& pc);

}  // namespace dualfield::quat
