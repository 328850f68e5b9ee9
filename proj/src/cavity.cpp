#include "dualfield/cavity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dualfield::cavity {

namespace {

constexpr cplx kI{0.0, 1.0};

struct Phases {
  cplx up;    // e^{iwt}
  cplx down;  // e^{-iwt}
};

Phases phases(double t, const CavityMode& m) {
  const double wt = m.omega() * t;
  return {std::polar(1.0, wt), std::polar(1.0, -wt)};
}

void check_z(double z, std::span<const CavityMode> modes) {
  if (modes.empty()) return;
  const double L = modes.front().length();
  for (const auto& m : modes) {
    if (m.length() != L) throw std::invalid_argument("modes must share the cavity length");
  }
  if (!(z >= 0.0 && z <= L)) throw std::out_of_range("z = " + std::to_string(z) + " lies outside the cavity");
}

}  // namespace

CavityMode::CavityMode(int alpha, double L, double volume, double mass, cplx C1, cplx C2,
                       const PhysicalConstants& pc)
    : alpha_(alpha), L_(L), volume_(volume), mass_(mass), C1_(C1), C2_(C2), pc_(pc) {
  if (alpha < 1) throw std::invalid_argument("mode index must be a positive integer");
  if (!(L > 0.0) || !(volume > 0.0) || !(mass > 0.0)) {
    throw std::invalid_argument("cavity length, volume and mass must be positive");
  }
  k_ = alpha * kPi / L;
  omega_ = pc.c * k_;
  amp_E_ = std::sqrt(2.0 * omega_ * omega_ * mass / (volume * pc.eps0));
  amp_H_ = std::sqrt(2.0 * omega_ * omega_ * mass / (volume * pc.mu0));
}

CavityMode CavityMode::real_branch(int alpha, double L, double volume, double mass, double B, double phi,
                                   const PhysicalConstants& pc) {
  const cplx c1 = std::polar(B / 2.0, phi);
  return {alpha, L, volume, mass, c1, std::conj(c1), pc};
}

bool CavityMode::is_real_branch(double tol) const {
  return std::abs(C2_ - std::conj(C1_)) <= tol * std::max(1.0, std::abs(C1_));
}

CavityMode CavityMode::with_amplitudes(cplx C1, cplx C2) const {
  return {alpha_, L_, volume_, mass_, C1, C2, pc_};
}

cplx q_mode(double t, const CavityMode& m) {
  const auto p = phases(t, m);
  return m.C1() * p.up + m.C2() * p.down;
}

cplx q_dot(double t, const CavityMode& m) {
  const auto p = phases(t, m);
  return kI * m.omega() * (m.C1() * p.up - m.C2() * p.down);
}

cplx q_ddot(double t, const CavityMode& m) { return -m.omega() * m.omega() * q_mode(t, m); }

cplx ode_residual(double t, const CavityMode& m) {
  return q_ddot(t, m) + m.omega() * m.omega() * q_mode(t, m);
}

cplx q_prime(double t, const CavityMode& m, IntegrationConstants ic) {
  const auto p = phases(t, m);
  if (ic == IntegrationConstants::Dropped) return -kI * (m.C1() * p.up - m.C2() * p.down);
  return -kI * m.C1() * (p.up - 1.0) + kI * m.C2() * (p.down - 1.0);
}

cplx q_dprime(double t, const CavityMode& m, IntegrationConstants ic) {
  if (ic == IntegrationConstants::Dropped) return -q_mode(t, m);
  const double wt = m.omega() * t;
  return -(q_mode(t, m) - (m.C1() + m.C2())) + kI * wt * (m.C1() - m.C2());
}

CVec3 field_E(double z, double t, Branch branch, std::span<const CavityMode> modes, IntegrationConstants ic) {
  check_z(z, modes);
  cplx ex{};
  for (const auto& m : modes) {
    const cplx q = branch == Branch::First ? q_mode(t, m) : q_dprime(t, m, ic);
    ex += m.amp_E() * q * sin_pi(m.alpha() * z / m.length());
  }
  return {ex, 0.0, 0.0};
}

CVec3 field_H(double z, double t, Branch branch, std::span<const CavityMode> modes, IntegrationConstants ic) {
  check_z(z, modes);
  cplx hy{};
  for (const auto& m : modes) {
    const cplx env = branch == Branch::First ? q_dot(t, m) / m.omega() : q_prime(t, m, ic);
    hy += m.amp_H() * env * cos_pi(m.alpha() * z / m.length());
  }
  return {0.0, hy, 0.0};
}

SampledGrid sample_fields(std::span<const CavityMode> modes, Branch branch, const Axis& z, const Axis& t,
                          IntegrationConstants ic) {
  SampledGrid g(z, t, 2);
  g.fill(0, [&](double zz, double tt) { return field_E(zz, tt, branch, modes, ic)(0); });
  g.fill(1, [&](double zz, double tt) { return field_H(zz, tt, branch, modes, ic)(1); });
  return g;
}

MaxwellResidual maxwell_residual(const SampledGrid& f, const PhysicalConstants& pc) {
  if (f.components() < 2) throw std::invalid_argument("residual needs E_x and H_y components");
  f.require_interior();
  MaxwellResidual r{0.0, 0.0};
  for (std::size_t iz = 1; iz + 1 < f.z().count; ++iz) {
    for (std::size_t it = 1; it + 1 < f.t().count; ++it) {
      r.faraday = std::max(r.faraday, std::abs(f.d_dz(iz, it, 0) + pc.mu0 * f.d_dt(iz, it, 1)));
      r.ampere = std::max(r.ampere, std::abs(f.d_dz(iz, it, 1) + pc.eps0 * f.d_dt(iz, it, 0)));
    }
  }
  return r;
}

MaxwellResidual maxwell_residual(std::span<const CavityMode> modes, Branch branch, const Axis& z, const Axis& t,
                                 IntegrationConstants ic) {
  if (z.count < 3 || t.count < 3) throw DegenerateGrid("grid needs at least 3 samples per axis");
  const auto pc = modes.empty() ? PhysicalConstants::codata() : modes.front().constants();
  return maxwell_residual(sample_fields(modes, branch, z, t, ic), pc);
}

double hamiltonian(double t, std::span<const CavityMode> modes) {
  double h = 0.0;
  for (const auto& m : modes) {
    if (!m.is_real_branch()) throw std::invalid_argument("hamiltonian requires real-branch amplitudes");
    const double q = q_mode(t, m).real();
    const double p = m.mass() * q_dot(t, m).real();
    h += 0.5 * (m.mass() * m.omega() * m.omega() * q * q + p * p / m.mass());
  }
  return h;
}

SampledGrid t_reversal_companion(const SampledGrid& field, std::span<const int> time_signs) {
  if (time_signs.size() != field.components()) {
    throw std::invalid_argument("one time-parity sign per component is required");
  }
  const Axis& ta = field.t();
  if (!ta.symmetric_about_zero()) throw std::invalid_argument("time samples must be symmetric about zero");
  SampledGrid out(field.z(), ta, field.components());
  const std::size_t nt = ta.count;
  for (std::size_t iz = 0; iz < field.z().count; ++iz) {
    for (std::size_t it = 0; it < nt; ++it) {
      const double t = ta.at(it);
      const std::size_t mirror = nt - 1 - it;
      for (std::size_t c = 0; c < field.components(); ++c) {
        const double sign = time_signs[c];
        // T maps t -> -t and flips t-uneven components; the t = 0 node is the limit.
        const bool at_origin = std::abs(t) <= 1e-12 * ta.step;
        out(iz, it, c) = at_origin ? -sign * field(iz, mirror, c) : sign * (-t) * field(iz, mirror, c) / t;
      }
    }
  }
  return out;
}

SampledGrid t_reversal_companion(const SampledGrid& field) {
  static constexpr int signs[2] = {1, -1};
  return t_reversal_companion(field, signs);
}

}  // namespace dualfield::cavity
