#include "dualfield/dualsym.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace dualfield::dualsym {

bool FieldPair::is_finite() const { return E.allFinite() && H.allFinite(); }

bool FieldPair::is_real(double tol) const {
  return E.imag().cwiseAbs().maxCoeff() <= tol && H.imag().cwiseAbs().maxCoeff() <= tol;
}

DualAngle::DualAngle(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("dual angle must be finite");
  theta_ = std::fmod(theta, 2.0 * kPi);
  if (theta_ < 0.0) theta_ += 2.0 * kPi;
}

HyperParam HyperParam::from_beta(double beta) {
  if (!(std::abs(beta) < 1.0)) throw std::invalid_argument("|beta| must be below 1");
  HyperParam hp(std::atanh(beta));
  hp.beta_ = beta;
  return hp;
}

cplx bilinear_dot(const CVec3& a, const CVec3& b) { return (a.array() * b.array()).sum(); }

namespace {

// Quarter turns get exact values so that theta = pi/2 is the Larmor swap.
std::pair<double, double> cos_sin(double theta) {
  if (theta == 0.0) return {1.0, 0.0};
  if (theta == kPi / 2.0) return {0.0, 1.0};
  if (theta == kPi) return {-1.0, 0.0};
  if (theta == 3.0 * kPi / 2.0) return {0.0, -1.0};
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace

FieldPair dual_rotate(const FieldPair& fp, DualAngle theta) {
  const auto [c, s] = cos_sin(theta.value());
  return {fp.E * c + fp.H * s, fp.H * c - fp.E * s};
}

FieldPair hyper_rotate(const FieldPair& fp, HyperParam hp) {
  const double ch = std::cosh(hp.value());
  const cplx ish{0.0, std::sinh(hp.value())};
  return {fp.E * ch + fp.H * ish, fp.H * ch - fp.E * ish};
}

Magnitudes boost_magnitudes(double absE, double absH, double beta) {
  if (!(std::abs(beta) < 1.0)) throw std::invalid_argument("|beta| must be below 1");
  if (absE < 0.0 || absH < 0.0) throw std::invalid_argument("field magnitudes must be non-negative");
  const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
  return {(absE + beta * absH) * gamma, (absH - beta * absE) * gamma};
}

FieldPair boost_fields(const FieldPair& fp, const Vec3& V, double c) {
  const double beta = V.norm() / c;
  if (!(beta < 1.0)) throw std::invalid_argument("frame velocity must be below c");
  const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
  const CVec3 v = V.cast<cplx>() / c;
  return {(fp.E + fp.H.cross(v)) * gamma, (fp.H - fp.E.cross(v)) * gamma};
}

cplx complex_invariant(const FieldPair& fp) {
  // (E + iH).(E + iH) expands to the same expression with fewer cancellations.
  const CVec3 F = fp.E + cplx{0.0, 1.0} * fp.H;
  return bilinear_dot(F, F);
}

namespace {

struct RealInvariants {
  double diff;  // E^2 - H^2
  double twice_dot;  // 2 E.H
};

RealInvariants real_invariants(const FieldPair& fp) {
  if (!fp.is_real()) throw std::invalid_argument("invariants require real-valued fields");
  const Vec3 e = fp.E.real();
  const Vec3 h = fp.H.real();
  return {e.squaredNorm() - h.squaredNorm(), 2.0 * e.dot(h)};
}

}  // namespace

DualInvariants dual_invariants(const FieldPair& fp, DualAngle theta) {
  const auto inv = real_invariants(fp);
  const double c2 = std::cos(2.0 * theta.value());
  const double s2 = std::sin(2.0 * theta.value());
  return {inv.diff * c2 + inv.twice_dot * s2, inv.twice_dot * c2 - inv.diff * s2};
}

HyperInvariants hyper_invariants(const FieldPair& fp, HyperParam hp) {
  const auto inv = real_invariants(fp);
  const double scale = std::exp(2.0 * hp.value());
  HyperInvariants out{inv.diff * scale, inv.twice_dot * scale, 0.0};
  if (inv.twice_dot != 0.0) {
    out.ratio = inv.diff / inv.twice_dot;
  } else if (inv.diff != 0.0) {
    out.ratio = std::copysign(std::numeric_limits<double>::infinity(), inv.diff);
  } else {
    out.ratio = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

// ---------------------------------------------------------------------------

ParityClass parity_classify(Quantity kind, int component) {
  if (component < 1 || component > 4) {
    throw std::out_of_range("field component must be in 1..4, got " + std::to_string(component));
  }
  using enum Parity;
  // Electric-type quantities (E, j_e, rho_e) and magnetic-type quantities
  // (H, j_g, rho_g) carry swapped time parities in components 1/2 and 3/4.
  static constexpr ParityClass electric[4] = {{Uneven, Even}, {Uneven, Uneven}, {Even, Even}, {Even, Uneven}};
  static constexpr ParityClass magnetic[4] = {{Uneven, Uneven}, {Uneven, Even}, {Even, Uneven}, {Even, Even}};
  switch (kind) {
    case Quantity::E:
    case Quantity::je:
    case Quantity::rho_e:
      return electric[component - 1];
    case Quantity::H:
    case Quantity::jg:
    case Quantity::rho_g:
      return magnetic[component - 1];
  }
  throw std::invalid_argument("unknown quantity");
}

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::E: return "E";
    case Quantity::H: return "H";
    case Quantity::je: return "je";
    case Quantity::jg: return "jg";
    case Quantity::rho_e: return "rho_e";
    case Quantity::rho_g: return "rho_g";
  }
  return "?";
}

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "uneven"; }

}  // namespace dualfield::dualsym
