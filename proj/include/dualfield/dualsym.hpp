#pragma once

// Dual (Rainich) and hyperbolic dual transformations of (E, H) pairs and
// their invariants, plus the parity table of the four field components.

#include <optional>
#include <utility>

#include "dualfield/constants.hpp"

namespace dualfield::dualsym {

struct FieldPair {
  CVec3 E = CVec3::Zero();  // V/m
  CVec3 H = CVec3::Zero();  // A/m

  static FieldPair real(const Vec3& e, const Vec3& h) { return {e.cast<cplx>(), h.cast<cplx>()}; }
  bool is_finite() const;
  bool is_real(double tol = 0.0) const;
};

/// Rotation angle of the dual transformation, reduced to [0, 2pi).
class DualAngle {
 public:
  explicit DualAngle(double theta);
  double value() const noexcept { return theta_; }

 private:
  double theta_;
};

/// Parameter of the hyperbolic dual transformation. Unbounded real; may be
/// built from a velocity ratio beta with |beta| < 1 as atanh(beta).
class HyperParam {
 public:
  explicit HyperParam(double vartheta) : vartheta_(vartheta) {}
  static HyperParam from_beta(double beta);

  double value() const noexcept { return vartheta_; }
  std::optional<double> beta() const noexcept { return beta_; }

 private:
  double vartheta_;
  std::optional<double> beta_;
};

/// Unconjugated bilinear product sum_k a_k b_k.
cplx bilinear_dot(const CVec3& a, const CVec3& b);

/// E' = E cos(theta) + H sin(theta), H' = H cos(theta) - E sin(theta).
FieldPair dual_rotate(const FieldPair& fp, DualAngle theta);

/// E'' = E cosh + i H sinh, H'' = -i E sinh + H cosh.
FieldPair hyper_rotate(const FieldPair& fp, HyperParam hp);

struct Magnitudes {
  double E;
  double H;
};

/// ((|E| + beta|H|), (|H| - beta|E|)) / sqrt(1 - beta^2); requires |beta| < 1.
Magnitudes boost_magnitudes(double absE, double absH, double beta);

/// E'' = (E + [H x V]/c)/sqrt(1-beta^2), H'' = (H - [E x V]/c)/sqrt(1-beta^2)
/// with beta = |V|/c; requires |V| < c.
FieldPair boost_fields(const FieldPair& fp, const Vec3& V, double c);

/// (E.E - H.H) + 2i (E.H) with bilinear products.
cplx complex_invariant(const FieldPair& fp);

struct DualInvariants {
  double first;   // (E^2-H^2) cos 2theta + 2 (E.H) sin 2theta
  double second;  // 2 (E.H) cos 2theta - (E^2-H^2) sin 2theta
};

/// Requires real fields.
DualInvariants dual_invariants(const FieldPair& fp, DualAngle theta);

struct HyperInvariants {
  double first;   // (E^2-H^2) e^{2 vartheta}
  double second;  // 2 (E.H) e^{2 vartheta}
  double ratio;   // first/second; +-inf when E.H = 0, NaN when both vanish
};

/// Requires real fields.
HyperInvariants hyper_invariants(const FieldPair& fp, HyperParam hp);

// ---------------------------------------------------------------------------

enum class Quantity { E, H, je, jg, rho_e, rho_g };
enum class Parity { Even, Uneven };

struct ParityClass {
  Parity P;
  Parity t;
  friend bool operator==(const ParityClass&, const ParityClass&) = default;
};

/// Space/time parity of component 1..4 of a quantity.
ParityClass parity_classify(Quantity kind, int component);

const char* to_string(Quantity q);
const char* to_string(Parity p);

}  // namespace dualfield::dualsym
