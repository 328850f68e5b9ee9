#include "dualfield/currents.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dualfield::currents {

using cavity::CavityMode;
using cavity::IntegrationConstants;

namespace {

constexpr cplx kI{0.0, 1.0};

void check_s(int s) {
  if (s != 1 && s != 2) throw std::out_of_range("field function index must be 1 or 2");
}

void check_mu(int mu) {
  if (mu < 1 || mu > 4) throw std::out_of_range("4-index must be in 1..4, got " + std::to_string(mu));
}

double sign_of(SignFamily f) { return f == SignFamily::Plus ? 1.0 : -1.0; }

// Composite Simpson rule over [0, L] with n (odd) nodes.
template <class F>
auto simpson(F f, double L, std::size_t n) {
  if (n < 3) n = 3;
  if (n % 2 == 0) ++n;
  const double h = L / static_cast<double>(n - 1);
  auto acc = f(0.0) + f(L);
  for (std::size_t i = 1; i + 1 < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(h * static_cast<double>(i));
  return acc * (h / 3.0);
}

// Values of one field function and its 4-gradient at a point; only mu = 3, 4 are nonzero.
struct Slots {
  cplx u;
  cplx uc;                   // u*
  std::array<cplx, 4> d;     // d_mu u
  std::array<cplx, 4> dc;    // d_mu (u*)
};

// d_4 (u*) = (1/(ic)) d/dt u* = -conj(d_4 u).
Slots make_slots(cplx u, cplx dz, cplx d4) { return {u, std::conj(u), {0.0, 0.0, dz, d4}, {0.0, 0.0, std::conj(dz), -std::conj(d4)}}; }

// Lagrangian density as a function of independent slot values.
cplx lagrangian_from_slots(std::span<const Slots> slots, double K) {
  cplx acc{};
  for (const auto& s : slots) {
    for (int mu = 0; mu < 4; ++mu) acc += s.d[mu] * s.dc[mu];
    acc -= K * s.u * s.uc;
  }
  return acc;
}

// dL/d(d_mu u_i) (conj = false) or dL/d(d_mu u_i*) (conj = true) by a symmetric
// difference in that slot. L is linear in each slot, so the difference is exact
// up to rounding for any step.
cplx slot_derivative(std::vector<Slots> slots, double K, std::size_t i, int mu, bool conj, double step) {
  cplx& slot = conj ? slots[i].dc[mu - 1] : slots[i].d[mu - 1];
  const cplx base = slot;
  slot = base + step;
  const cplx plus = lagrangian_from_slots(slots, K);
  slot = base - step;
  const cplx minus = lagrangian_from_slots(slots, K);
  return (plus - minus) / (2.0 * step);
}

std::vector<Slots> numeric_slots(const FieldFunctionSet& ffs, double z, double t) {
  std::vector<Slots> out;
  out.reserve(2 * ffs.modes().size());
  for (std::size_t a = 0; a < ffs.modes().size(); ++a) {
    for (int s = 1; s <= 2; ++s) {
      out.push_back(make_slots(ffs.u(s, a, z, t), ffs.du_numeric(s, a, 3, z, t), ffs.du_numeric(s, a, 4, z, t)));
    }
  }
  return out;
}

double slot_step(std::span<const Slots> slots) {
  double m = 0.0;
  for (const auto& s : slots) {
    for (const auto& v : s.d) m = std::max(m, std::abs(v));
  }
  return m > 0.0 ? m : 1.0;
}

struct ModeCurrentTerms {
  cplx X;        // C1 C2* e^{2iwt}
  double delta;  // |C1|^2 - |C2|^2
  double P;      // 8 e m w^3 / (hbar c^2 V)
};

ModeCurrentTerms mode_terms(const CavityMode& m, double t) {
  const auto& pc = m.constants();
  const double w = m.omega();
  return {m.C1() * std::conj(m.C2()) * std::polar(1.0, 2.0 * w * t), std::norm(m.C1()) - std::norm(m.C2()),
          8.0 * pc.e_charge * m.mass() * w * w * w / (pc.hbar * pc.c * pc.c * m.volume())};
}

cplx closed_j1(const FieldFunctionSet& ffs, int mu, double t) {
  if (mu != 4) return 0.0;
  cplx acc{};
  for (const auto& m : ffs.modes()) {
    const auto mt = mode_terms(m, t);
    acc += kI * mt.P * mt.delta;
  }
  return acc;
}

cplx closed_j2(const FieldFunctionSet& ffs, int mu, double z, double t) {
  if (mu < 3) return 0.0;
  cplx acc{};
  for (const auto& m : ffs.modes()) {
    const auto mt = mode_terms(m, t);
    if (mu == 3) {
      acc += -kI * mt.P * std::sin(2.0 * m.k() * z) * (mt.X + std::conj(mt.X));
    } else {
      acc += kI * mt.P * std::cos(2.0 * m.k() * z) * (mt.X - std::conj(mt.X));
    }
  }
  return acc;
}

cplx generic_current(const FieldFunctionSet& ffs, const NoetherContext& ctx, CurrentFamily fam, int mu, double z,
                     double t) {
  if (mu < 3) return 0.0;
  const auto& pc = ffs.constants();
  const auto slots = numeric_slots(ffs, z, t);
  const double K = ctx.K(z, t);
  const double step = slot_step(slots);
  const cplx pre = kI * pc.e_charge / (pc.hbar * pc.c);
  cplx du_u{};    // sum dL/d(d_mu u) u
  cplx duc_uc{};  // sum dL/d(d_mu u*) u*
  for (std::size_t i = 0; i < slots.size(); ++i) {
    du_u += slot_derivative(slots, K, i, mu, false, step) * slots[i].u;
    duc_uc += slot_derivative(slots, K, i, mu, true, step) * slots[i].uc;
  }
  const cplx j1 = -pre * du_u + pre * duc_uc;
  const cplx j2 = -pre * du_u - pre * duc_uc;
  switch (fam) {
    case CurrentFamily::J1: return j1;
    case CurrentFamily::J2: return j2;
    case CurrentFamily::Total: return j1 + j2;
  }
  return 0.0;
}

}  // namespace

FieldFunctionSet::FieldFunctionSet(std::vector<CavityMode> modes, SignFamily sign, IntegrationConstants ic)
    : modes_(std::move(modes)), sign_(sign), ic_(ic) {
  if (modes_.empty()) throw std::invalid_argument("field function set needs at least one mode");
  for (const auto& m : modes_) {
    if (m.length() != modes_.front().length() || m.volume() != modes_.front().volume()) {
      throw std::invalid_argument("modes must share the cavity geometry");
    }
  }
}

double FieldFunctionSet::amplitude(int s, std::size_t alpha) const {
  check_s(s);
  const auto& m = modes_.at(alpha);
  return s == 1 ? std::sqrt(m.constants().eps0) * m.amp_E() : std::sqrt(m.constants().mu0) * m.amp_H();
}

cplx FieldFunctionSet::envelope(int s, std::size_t alpha, double t) const {
  check_s(s);
  const auto& m = modes_.at(alpha);
  const double sg = sign_of(sign_);
  if (s == 1) return cavity::q_mode(t, m) + sg * kI * cavity::q_dprime(t, m, ic_);
  return -cavity::q_prime(t, m, ic_) + sg * kI / m.omega() * cavity::q_dot(t, m);
}

cplx FieldFunctionSet::envelope_dot(int s, std::size_t alpha, double t) const {
  check_s(s);
  const auto& m = modes_.at(alpha);
  const double sg = sign_of(sign_);
  const double w = m.omega();
  // d/dt q'' = w q' and d/dt q' = w q under either integration convention.
  if (s == 1) return cavity::q_dot(t, m) + sg * kI * w * cavity::q_prime(t, m, ic_);
  return -w * cavity::q_mode(t, m) + sg * kI / w * cavity::q_ddot(t, m);
}

cplx FieldFunctionSet::u(int s, std::size_t alpha, double z, double t) const {
  const auto& m = modes_.at(alpha);
  const double x = m.alpha() * z / m.length();
  const double profile = s == 1 ? sin_pi(x) : cos_pi(x);
  return amplitude(s, alpha) * profile * envelope(s, alpha, t);
}

cplx FieldFunctionSet::du(int s, std::size_t alpha, int mu, double z, double t) const {
  check_mu(mu);
  if (mu < 3) return 0.0;
  const auto& m = modes_.at(alpha);
  const double x = m.alpha() * z / m.length();
  if (mu == 3) {
    const double dprofile = s == 1 ? m.k() * cos_pi(x) : -m.k() * sin_pi(x);
    return amplitude(s, alpha) * dprofile * envelope(s, alpha, t);
  }
  const double profile = s == 1 ? sin_pi(x) : cos_pi(x);
  return amplitude(s, alpha) * profile * envelope_dot(s, alpha, t) / (kI * m.constants().c);
}

cplx FieldFunctionSet::du_numeric(int s, std::size_t alpha, int mu, double z, double t) const {
  check_mu(mu);
  if (mu < 3) return 0.0;
  const auto& m = modes_.at(alpha);
  const double h = mu == 3 ? 1e-2 / m.k() : 1e-2 / m.omega();
  auto f = [&](double off) { return mu == 3 ? u(s, alpha, z + off * h, t) : u(s, alpha, z, t + off * h); };
  const cplx d = (-f(-3) + 9.0 * f(-2) - 45.0 * f(-1) + 45.0 * f(1) - 9.0 * f(2) + f(3)) / (60.0 * h);
  return mu == 3 ? d : d / (kI * m.constants().c);
}

double lagrangian_density(const FieldFunctionSet& ffs, const NoetherContext& ctx, double z, double t) {
  std::vector<Slots> slots;
  for (std::size_t a = 0; a < ffs.modes().size(); ++a) {
    for (int s = 1; s <= 2; ++s) slots.push_back(make_slots(ffs.u(s, a, z, t), ffs.du(s, a, 3, z, t), ffs.du(s, a, 4, z, t)));
  }
  return lagrangian_from_slots(slots, ctx.K(z, t)).real();
}

cplx current(const FieldFunctionSet& ffs, const NoetherContext& ctx, CurrentFamily fam, int mu, double z, double t,
             Route route) {
  check_mu(mu);
  if (route == Route::Generic) return generic_current(ffs, ctx, fam, mu, z, t);
  if (ffs.constants_mode() != IntegrationConstants::Dropped) {
    throw std::invalid_argument("closed-form currents need constant-free envelopes");
  }
  switch (fam) {
    case CurrentFamily::J1: return closed_j1(ffs, mu, t);
    case CurrentFamily::J2: return closed_j2(ffs, mu, z, t);
    case CurrentFamily::Total: return closed_j1(ffs, mu, t) + closed_j2(ffs, mu, z, t);
  }
  return 0.0;
}

namespace {
Route default_route(const FieldFunctionSet& ffs) {
  return ffs.constants_mode() == IntegrationConstants::Dropped ? Route::ClosedForm : Route::Generic;
}
}  // namespace

cplx current_j1(const FieldFunctionSet& ffs, const NoetherContext& ctx, int mu, double z, double t) {
  return current(ffs, ctx, CurrentFamily::J1, mu, z, t, default_route(ffs));
}

cplx current_j2(const FieldFunctionSet& ffs, const NoetherContext& ctx, int mu, double z, double t) {
  return current(ffs, ctx, CurrentFamily::J2, mu, z, t, default_route(ffs));
}

double current_scale(const FieldFunctionSet& ffs) {
  double acc = 0.0;
  for (const auto& m : ffs.modes()) acc += mode_terms(m, 0.0).P * (std::norm(m.C1()) + std::norm(m.C2()));
  return acc;
}

cplx euler_lagrange_residual(const FieldFunctionSet& ffs, const NoetherContext& ctx, int s, std::size_t alpha,
                             double z, double t) {
  check_s(s);
  const auto& m = ffs.modes().at(alpha);
  const double w = m.omega();
  const double c = m.constants().c;
  const double sg = sign_of(ffs.sign());
  const cplx qd = cavity::q_dot(t, m);
  const cplx g_ddot = s == 1 ? cavity::q_ddot(t, m) + sg * kI * w * w * cavity::q_mode(t, m)
                             : -w * qd + sg * kI / w * (-w * w * qd);
  const double kz = m.k() * z;
  const double profile = s == 1 ? std::sin(kz) : std::cos(kz);
  const cplx uval = ffs.u(s, alpha, z, t);
  const cplx dzz = -m.k() * m.k() * uval;
  const cplx d44 = -ffs.amplitude(s, alpha) * profile * g_ddot / (c * c);
  return dzz + d44 + ctx.K(z, t) * uval;
}

ContinuityResidual continuity_residual(const std::function<cplx(double, double)>& j3,
                                       const std::function<cplx(double, double)>& j4, const Axis& z, const Axis& t,
                                       double c) {
  if (z.count < 3 || t.count < 3) throw DegenerateGrid("grid needs at least 3 samples per axis");
  SampledGrid g(z, t, 2);
  g.fill(0, j3);
  g.fill(1, j4);
  ContinuityResidual r{0.0, 0.0};
  double scale = 0.0;
  for (std::size_t iz = 1; iz + 1 < z.count; ++iz) {
    for (std::size_t it = 1; it + 1 < t.count; ++it) {
      const cplx a = g.d_dz(iz, it, 0);
      const cplx b = g.d_dt(iz, it, 1) / (kI * c);
      r.absolute = std::max(r.absolute, std::abs(a + b));
      scale = std::max({scale, std::abs(a), std::abs(b)});
    }
  }
  r.relative = scale > 0.0 ? r.absolute / scale : r.absolute;
  return r;
}

ContinuityResidual continuity_residual(const FieldFunctionSet& ffs, const NoetherContext& ctx, const Axis& z,
                                       const Axis& t, CurrentFamily fam) {
  if (z.count < 3 || t.count < 3) throw DegenerateGrid("grid needs at least 3 samples per axis");
  const double c = ffs.constants().c;
  if (ffs.constants_mode() != IntegrationConstants::Dropped) {
    auto j = [&](int mu) {
      return [&, mu](double zz, double tt) { return current(ffs, ctx, fam, mu, zz, tt, Route::Generic); };
    };
    return continuity_residual(j(3), j(4), z, t, c);
  }
  // Closed-form derivatives; the J1 family has j3 = 0 and a constant j4.
  ContinuityResidual r{0.0, 0.0};
  if (fam == CurrentFamily::J1) return r;
  double scale = 0.0;
  for (std::size_t iz = 0; iz < z.count; ++iz) {
    for (std::size_t it = 0; it < t.count; ++it) {
      cplx dz_j3{};
      cplx dt_j4{};
      for (const auto& m : ffs.modes()) {
        const auto mt = mode_terms(m, t.at(it));
        const cplx re2 = mt.X + std::conj(mt.X);
        const double c2 = std::cos(2.0 * m.k() * z.at(iz));
        dz_j3 += -kI * mt.P * 2.0 * m.k() * c2 * re2;
        dt_j4 += kI * mt.P * c2 * (2.0 * kI * m.omega()) * re2;
      }
      const cplx b = dt_j4 / (kI * c);
      r.absolute = std::max(r.absolute, std::abs(dz_j3 + b));
      scale = std::max({scale, std::abs(dz_j3), std::abs(b)});
    }
  }
  r.relative = scale > 0.0 ? r.absolute / scale : r.absolute;
  return r;
}

cplx charge_Q(const FieldFunctionSet& ffs, const NoetherContext&, Charge component, double t) {
  const double c = ffs.constants().c;
  const double V = ffs.volume();
  // int_0^L sin^2 = int_0^L cos^2 = L/2 and d^3x = (V/L) dz.
  double acc = 0.0;
  for (std::size_t a = 0; a < ffs.modes().size(); ++a) {
    for (int s = 1; s <= 2; ++s) {
      const double A = ffs.amplitude(s, a);
      const cplx w = std::conj(ffs.envelope(s, a, t)) * ffs.envelope_dot(s, a, t);
      acc += A * A * (component == Charge::Q1 ? w.imag() : w.real());
    }
  }
  if (component == Charge::Q1) return V / c * acc;
  return -kI * V / c * acc;
}

cplx complex_charge(const FieldFunctionSet& ffs, const NoetherContext& ctx, double t) {
  return charge_Q(ffs, ctx, Charge::Q1, t) + kI * charge_Q(ffs, ctx, Charge::Q2, t);
}

cplx charge_from_current(const FieldFunctionSet& ffs, const NoetherContext& ctx, double t, std::size_t nz) {
  const auto& pc = ffs.constants();
  const cplx integral =
      simpson([&](double z) { return current_j1(ffs, ctx, 4, z, t); }, ffs.length(), nz) * (ffs.volume() / ffs.length());
  return -kI * (pc.hbar * pc.c / pc.e_charge) * integral;
}

double spin_density(const FieldFunctionSet& ffs, int mu, double z, double t) {
  check_mu(mu);
  if (mu < 3) return 0.0;
  cplx acc{};
  for (std::size_t a = 0; a < ffs.modes().size(); ++a) {
    // d_mu (u*) is conj(d_mu u) for mu = 3 and -conj(d_mu u) for mu = 4.
    const double cs = mu == 3 ? 1.0 : -1.0;
    const cplx d1c = cs * std::conj(ffs.du(1, a, mu, z, t));
    const cplx d2c = cs * std::conj(ffs.du(2, a, mu, z, t));
    acc += d1c * ffs.u(2, a, z, t) - d2c * ffs.u(1, a, z, t);
  }
  return 2.0 * acc.real();
}

double spin_density_noether(const FieldFunctionSet& ffs, const NoetherContext& ctx, int mu, double z, double t) {
  check_mu(mu);
  if (mu < 3) return 0.0;
  const auto slots = numeric_slots(ffs, z, t);
  const double K = ctx.K(z, t);
  const double step = slot_step(slots);
  cplx theta{};
  for (std::size_t a = 0; a < ffs.modes().size(); ++a) {
    const std::size_t i1 = 2 * a;
    const std::size_t i2 = 2 * a + 1;
    const Eigen::Vector2cd U(slots[i1].u, slots[i2].u);
    const Eigen::Vector2cd Y = ctx.I_matrix.cast<cplx>() * U;
    theta -= slot_derivative(slots, K, i1, mu, false, step) * Y(0);
    theta -= slot_derivative(slots, K, i2, mu, false, step) * Y(1);
  }
  return kNoetherSpinNormalization * 2.0 * theta.real();
}

cplx spirality(const FieldFunctionSet& ffs, double t) {
  const double c = ffs.constants().c;
  const double L = ffs.length();
  double acc = 0.0;
  for (std::size_t a = 0; a < ffs.modes().size(); ++a) {
    const double k = ffs.modes()[a].k();
    // S^4_12 density = 2 Re[-(i/c) A1 A2 sin cos (g1dot* g2 - g2dot* g1)];
    // int_0^L sin(kz) cos(kz) dz = sin^2(kL) / (2k).
    const cplx bracket = std::conj(ffs.envelope_dot(1, a, t)) * ffs.envelope(2, a, t) -
                         std::conj(ffs.envelope_dot(2, a, t)) * ffs.envelope(1, a, t);
    const double amp = ffs.amplitude(1, a) * ffs.amplitude(2, a);
    const double sc = std::pow(std::sin(k * L), 2) / (2.0 * k);
    acc += 2.0 * (-kI / c * amp * bracket).real() * sc;
  }
  return -kI / c * (ffs.volume() / L) * acc;
}

cplx spirality_noether(const FieldFunctionSet& ffs, const NoetherContext& ctx, double t, std::size_t nz) {
  const double c = ffs.constants().c;
  const double L = ffs.length();
  const double integral = simpson([&](double z) { return spin_density_noether(ffs, ctx, 4, z, t); }, L, nz);
  return -kI / c * (ffs.volume() / L) * integral;
}

double spirality_scale(const FieldFunctionSet& ffs) {
  double acc = 0.0;
  for (std::size_t a = 0; a < ffs.modes().size(); ++a) {
    const auto& m = ffs.modes()[a];
    acc += ffs.amplitude(1, a) * ffs.amplitude(2, a) * m.omega() * (std::norm(m.C1()) + std::norm(m.C2()));
  }
  return ffs.volume() / ffs.constants().c * acc;
}

double hilbert_norm(const FieldFunctionSet& ffs, double t) {
  double acc = 0.0;
  for (std::size_t a = 0; a < ffs.modes().size(); ++a) {
    for (int s = 1; s <= 2; ++s) acc += std::pow(ffs.amplitude(s, a), 2) * std::norm(ffs.envelope(s, a, t));
  }
  return std::sqrt(acc * ffs.length() / 2.0);
}

double hilbert_distance(const FieldFunctionSet& ffs, double t1, double t2) {
  return hilbert_distance(ffs, t1, ffs, t2);
}

double hilbert_distance(const FieldFunctionSet& a, double ta, const FieldFunctionSet& b, double tb) {
  if (a.modes().size() != b.modes().size() || a.length() != b.length()) {
    throw std::invalid_argument("field function sets must share cavity and mode layout");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.modes().size(); ++i) {
    if (a.modes()[i].alpha() != b.modes()[i].alpha()) {
      throw std::invalid_argument("field function sets must share cavity and mode layout");
    }
    for (int s = 1; s <= 2; ++s) {
      acc += std::norm(a.amplitude(s, i) * a.envelope(s, i, ta) - b.amplitude(s, i) * b.envelope(s, i, tb));
    }
  }
  return std::sqrt(acc * a.length() / 2.0);
}

}  // namespace dualfield::currents
