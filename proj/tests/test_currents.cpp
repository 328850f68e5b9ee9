#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dualfield/currents.hpp"

using namespace dualfield;
using namespace dualfield::currents;
using cavity::CavityMode;

namespace {

const cplx kI{0.0, 1.0};
const NoetherContext ctx;

std::vector<CavityMode> two_modes() {
  return {CavityMode(1, 1.0, 1.0, 1.0, {0.7, 0.2}, {-0.3, 0.5}), CavityMode(2, 1.0, 1.0, 2.0, {0.1, -0.4}, {0.6, 0.3})};
}

FieldFunctionSet silent() { return FieldFunctionSet({CavityMode(1, 1.0, 1.0, 1.0, 0, 0)}); }

double period(const FieldFunctionSet& f) { return 2 * kPi / f.modes().front().omega(); }

}  // namespace

TEST_CASE("Lagrangian density") {
  CHECK(lagrangian_density(silent(), ctx, 0.3, 1e-9) == 0.0);

  // Independent evaluation for one mode, plus family, constant-free envelopes:
  // g1 = (1 - i) q, g2 = (i - 1) D with D = C1 e^{iwt} - C2 e^{-iwt}, dD/dt = i w q.
  const CavityMode m(1, 1.0, 1.0, 1.0, {0.7, 0.2}, {-0.3, 0.5});
  const FieldFunctionSet ffs({m});
  const double w = m.omega(), k = m.k(), c = m.constants().c;
  const double z = 0.3, t = 0.1 * 2 * kPi / w;
  const cplx up = std::polar(1.0, w * t), down = std::polar(1.0, -w * t);
  const cplx q = m.C1() * up + m.C2() * down;
  const cplx D = m.C1() * up - m.C2() * down;
  const cplx qdot = kI * w * D;
  const cplx g1 = (1.0 - kI) * q, g1dot = (1.0 - kI) * qdot;
  const cplx g2 = (kI - 1.0) * D, g2dot = (kI - 1.0) * kI * w * q;
  const double a2 = 2.0 * w * w * m.mass() / m.volume();
  const double s = std::sin(k * z), co = std::cos(k * z);
  const double oracle = a2 * (k * k * co * co * std::norm(g1) + k * k * s * s * std::norm(g2) -
                              (s * s * std::norm(g1dot) + co * co * std::norm(g2dot)) / (c * c));
  // The four terms nearly cancel, so compare against their size.
  const double terms = a2 * (k * k * (std::norm(g1) + std::norm(g2)) + (std::norm(g1dot) + std::norm(g2dot)) / (c * c));
  CHECK(std::abs(lagrangian_density(ffs, ctx, z, t) - oracle) < 1e-14 * terms);

  for (int sidx = 1; sidx <= 2; ++sidx) {
    const cplx r = euler_lagrange_residual(ffs, ctx, sidx, 0, z, t);
    CHECK(std::abs(r) < 1e-12 * k * k * std::abs(ffs.amplitude(sidx, 0)));
  }
}

TEST_CASE("field function derivatives") {
  const FieldFunctionSet ffs(two_modes(), SignFamily::Minus);
  for (std::size_t a = 0; a < 2; ++a)
    for (int s = 1; s <= 2; ++s)
      for (int mu = 3; mu <= 4; ++mu) {
        const cplx exact = ffs.du(s, a, mu, 0.37, 2e-9);
        CHECK(std::abs(ffs.du_numeric(s, a, mu, 0.37, 2e-9) - exact) < 1e-9 * std::abs(exact));
      }
}

TEST_CASE("first current family") {
  const FieldFunctionSet ffs(two_modes());
  const double scale = current_scale(ffs);
  for (double z : {0.1, 0.5, 0.77})
    for (double t : {0.0, 3e-9}) CHECK(std::abs(current_j1(ffs, ctx, 3, z, t)) <= 1e-14 * scale);

  std::vector<CavityMode> balanced;
  for (const auto& m : two_modes()) balanced.push_back(m.with_amplitudes(m.C1(), std::abs(m.C1()) * kI));
  const FieldFunctionSet bal(balanced);
  CHECK(std::abs(current_j1(bal, ctx, 4, 0.4, 1e-9)) <= 1e-14 * current_scale(bal));

  // One travelling component: j4^1 = 8 i e m w^3 / (hbar c^2 V) everywhere.
  const CavityMode single(1, 1.0, 1.0, 1.0, 1.0, 0.0);
  const FieldFunctionSet one({single});
  const auto& pc = single.constants();
  const double w = single.omega();
  const cplx expected = 8.0 * kI * pc.e_charge * single.mass() * w * w * w / (pc.hbar * pc.c * pc.c);
  for (double z : {0.05, 0.5, 0.9})
    for (double t : {0.0, 1.3e-9}) {
      CHECK(std::abs(current_j1(one, ctx, 4, z, t) - expected) < 1e-12 * std::abs(expected));
      CHECK(std::abs(current(one, ctx, CurrentFamily::J1, 4, z, t, Route::Generic) - expected) <
            1e-8 * std::abs(expected));
    }
}

TEST_CASE("second current family") {
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> u(0, 1);
  for (auto sign : {SignFamily::Plus, SignFamily::Minus}) {
    const FieldFunctionSet ffs(two_modes(), sign);
    const double scale = current_scale(ffs);
    for (int i = 0; i < 10; ++i) {
      const double z = u(gen), t = u(gen) * period(ffs);
      for (int mu : {3, 4}) {
        const cplx closed = current(ffs, ctx, CurrentFamily::J2, mu, z, t, Route::ClosedForm);
        const cplx generic = current(ffs, ctx, CurrentFamily::J2, mu, z, t, Route::Generic);
        CHECK(std::abs(closed - generic) < 1e-8 * scale);
      }
    }
  }
  // sin(2kz) profile of j3^2 for one mode
  const CavityMode m(1, 1.0, 1.0, 1.0, {0.7, 0.2}, {-0.3, 0.5});
  const FieldFunctionSet one({m});
  const double t = 0.7e-9;
  const cplx at_quarter = current_j2(one, ctx, 3, 0.25, t);
  CHECK(std::abs(current_j2(one, ctx, 3, 0.125, t) - at_quarter * std::sin(kPi / 4)) < 1e-12 * std::abs(at_quarter));
  CHECK(std::abs(current_j2(one, ctx, 3, 0.5, t)) < 1e-12 * std::abs(at_quarter));

  const FieldFunctionSet no_cross({m.with_amplitudes(m.C1(), 0.0)});
  for (double z : {0.1, 0.3, 0.6}) CHECK(current_j2(no_cross, ctx, 3, z, t) == cplx(0.0));
}

TEST_CASE("kept constants use the generic route") {
  const FieldFunctionSet kept(two_modes(), SignFamily::Plus, cavity::IntegrationConstants::Kept);
  const double z = 0.3, t = 2.2e-9;
  CHECK(current_j2(kept, ctx, 3, z, t) == current(kept, ctx, CurrentFamily::J2, 3, z, t, Route::Generic));
  CHECK(std::abs(euler_lagrange_residual(kept, ctx, 1, 0, z, t)) > 0.0);
}

TEST_CASE("continuity") {
  const FieldFunctionSet ffs(two_modes());
  const Axis z = Axis::uniform(0.0, 1.0, 24);
  const Axis t = Axis::uniform(0.0, period(ffs), 24);
  for (auto fam : {CurrentFamily::J1, CurrentFamily::J2, CurrentFamily::Total})
    CHECK(continuity_residual(ffs, ctx, z, t, fam).relative < 1e-12);
  CHECK(continuity_residual(silent(), ctx, z, t, CurrentFamily::Total).absolute == 0.0);

  // Scaling j4 by 1.01 spoils the balance.
  const double c = ffs.constants().c;
  auto j3 = [&](double zz, double tt) { return current_j2(ffs, ctx, 3, zz, tt); };
  auto j4 = [&](double zz, double tt) { return current_j2(ffs, ctx, 4, zz, tt); };
  auto j4_bad = [&](double zz, double tt) { return 1.01 * j4(zz, tt); };
  const Axis zf = Axis::uniform(0.0, 1.0, 1001);
  const Axis tf = Axis::uniform(0.0, period(ffs), 1001);
  const auto good = continuity_residual(j3, j4, zf, tf, c);
  const auto bad = continuity_residual(j3, j4_bad, zf, tf, c);
  CHECK(bad.relative > 1e-3);
  CHECK(bad.relative > 10.0 * good.relative);
}

TEST_CASE("complex charge") {
  const NoetherContext none;
  CHECK(complex_charge(silent(), none, 0.0) == cplx(0.0));

  std::vector<CavityMode> real;
  for (const auto& m : two_modes()) real.push_back(m.with_amplitudes(m.C1(), std::conj(m.C1())));
  // Real envelopes carry no Q1; the bound is rounding on the summed products.
  const FieldFunctionSet real_set(real);
  double size = 0.0;
  for (std::size_t a = 0; a < real.size(); ++a)
    for (int s = 1; s <= 2; ++s)
      size += std::pow(real_set.amplitude(s, a), 2) * std::abs(real_set.envelope(s, a, 1e-9)) *
              std::abs(real_set.envelope_dot(s, a, 1e-9));
  size *= real_set.volume() / real_set.constants().c;
  CHECK(std::abs(charge_Q(real_set, none, Charge::Q1, 1e-9)) < 1e-14 * size);

  const FieldFunctionSet ffs(two_modes());
  const double w = ffs.modes().front().omega();
  const cplx Q0 = complex_charge(ffs, none, 1e-9);
  const cplx Q1 = complex_charge(ffs, none, 1e-9 + 0.37 / w);
  CHECK(std::abs(Q1 - Q0) < 1e-10 * std::abs(Q0));
  CHECK(std::abs(charge_from_current(ffs, none, 1e-9) - charge_Q(ffs, none, Charge::Q1, 1e-9)) <
        1e-8 * std::abs(Q0));
}

TEST_CASE("spin and spirality") {
  CHECK(spin_density(silent(), 4, 0.3, 0.0) == 0.0);
  CHECK(spirality(silent(), 0.0) == cplx(0.0));

  const FieldFunctionSet ffs(two_modes());
  for (int mu : {3, 4}) {
    const double direct = spin_density(ffs, mu, 0.31, 1.1e-9);
    const double noether = spin_density_noether(ffs, ctx, mu, 0.31, 1.1e-9);
    CHECK(noether == doctest::Approx(direct).epsilon(1e-8));
  }
  const double scale = spirality_scale(ffs);
  const cplx S = spirality(ffs, 0.4e-9);
  CHECK(std::abs(spirality_noether(ffs, ctx, 0.4e-9) - S) < 1e-10 * scale);
  CHECK(std::abs(spirality(ffs, 2.9e-9) - S) < 1e-10 * scale);
}

TEST_CASE("Hilbert norms") {
  CHECK(hilbert_norm(silent(), 0.0) == 0.0);
  const FieldFunctionSet ffs(two_modes());
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(0, 1e-8);
  for (int i = 0; i < 20; ++i) {
    const double a = u(gen), b = u(gen), c = u(gen);
    CHECK(hilbert_distance(ffs, a, c) <= hilbert_distance(ffs, a, b) + hilbert_distance(ffs, b, c) + 1e-12);
  }
  // norm^2 scales with w^2 m at t = 0
  const CavityMode base(1, 1.0, 1.0, 1.0, {0.4, 0.1}, {0.2, -0.3});
  const double n1 = hilbert_norm(FieldFunctionSet({base}), 0.0);
  const double n_heavy = hilbert_norm(FieldFunctionSet({CavityMode(1, 1.0, 1.0, 2.0, base.C1(), base.C2())}), 0.0);
  const double n_fast = hilbert_norm(FieldFunctionSet({CavityMode(2, 1.0, 1.0, 1.0, base.C1(), base.C2())}), 0.0);
  CHECK(n_heavy * n_heavy / (n1 * n1) == doctest::Approx(2.0));
  CHECK(n_fast * n_fast / (n1 * n1) == doctest::Approx(4.0));
  CHECK_THROWS(hilbert_distance(ffs, 0.0, FieldFunctionSet({base}), 0.0));
}
