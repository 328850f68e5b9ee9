#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "dualfield/cavity.hpp"

using namespace dualfield;
using namespace dualfield::cavity;

namespace {

const auto pc = PhysicalConstants::codata();

CavityMode cosine_mode(int alpha = 1, double L = 1.0) { return {alpha, L, 1.0, 1.0, 0.5, 0.5}; }

double period(const CavityMode& m) { return 2 * kPi / m.omega(); }

}  // namespace

TEST_CASE("mode functions") {
  const auto m = cosine_mode();
  const double w = m.omega();
  for (double t : {0.0, 0.1 / w, 2.3 / w}) {
    CHECK(std::abs(q_mode(t, m) - std::cos(w * t)) < 1e-15);
    CHECK(ode_residual(t, m) == cplx(0.0));
    CHECK(std::abs(q_prime(t, m) - std::sin(w * t)) < 1e-15);
    CHECK(std::abs(q_dprime(t, m) - (1.0 - std::cos(w * t))) < 1e-15);
  }
  const auto general = CavityMode(2, 1.0, 1.0, 2.0, {0.3, 0.7}, {-1.2, 0.1});
  CHECK(q_prime(0.0, general) == cplx(0.0));
  CHECK(q_dprime(0.0, general) == cplx(0.0));
  CHECK(ode_residual(0.37, general) == cplx(0.0));

  const auto real = CavityMode::real_branch(1, 1.0, 1.0, 1.0, 1.0, 0.0);
  CHECK(real.is_real_branch());
  const auto shifted = CavityMode::real_branch(1, 1.0, 1.0, 1.0, 2.0, 0.4);
  for (double t : {0.0, 0.7 / w}) {
    CHECK(std::abs(q_mode(t, real) - std::cos(w * t)) < 1e-15);
    CHECK(std::abs(q_mode(t, shifted) - 2.0 * std::cos(w * t + 0.4)) < 1e-14);
  }
  // Constant-free antiderivatives of a cosine
  CHECK(std::abs(q_prime(0.3 / w, m, IntegrationConstants::Dropped) - std::sin(0.3)) < 1e-15);
  CHECK(std::abs(q_dprime(0.3 / w, m, IntegrationConstants::Dropped) + std::cos(0.3)) < 1e-15);

  CHECK_THROWS(CavityMode(0, 1.0, 1.0, 1.0, 1, 1));
  CHECK_THROWS(CavityMode(1, -1.0, 1.0, 1.0, 1, 1));
}

TEST_CASE("field profiles") {
  const std::vector<CavityMode> modes{cosine_mode(1), CavityMode(3, 1.0, 1.0, 0.5, {0.2, 0.1}, {0.4, -0.3})};
  for (double t : {0.0, 1e-9, 7e-9}) {
    for (auto br : {Branch::First, Branch::Second}) {
      CHECK(field_E(0.0, t, br, modes).norm() == 0.0);
      CHECK(field_E(1.0, t, br, modes).norm() == 0.0);
    }
  }
  const std::vector<CavityMode> one{cosine_mode()};
  const auto& m = one.front();
  CHECK(std::abs(field_E(0.5, 0.0, Branch::First, one)(0) - m.amp_E()) < 1e-15 * m.amp_E());
  CHECK(field_H(0.3, 0.0, Branch::First, one).norm() == 0.0);

  // Second branch with kept constants: sign flip plus a static profile.
  const double t = 0.4 / m.omega();
  for (double z : {0.1, 0.45, 0.8}) {
    const cplx e1 = field_E(z, t, Branch::First, one)(0);
    const cplx e2 = field_E(z, t, Branch::Second, one, IntegrationConstants::Kept)(0);
    CHECK(std::abs(e2 - (-e1 + m.amp_E() * std::sin(kPi * z))) < 1e-14 * m.amp_E());
  }
  // H of the second branch at the wall is A_H q' with q' = sin(wt).
  CHECK(std::abs(field_H(0.0, t, Branch::Second, one)(1) - m.amp_H() * std::sin(0.4)) < 1e-14 * m.amp_H());

  // Constant-free second branch is the negated first branch.
  for (double z : {0.2, 0.7}) {
    CHECK((field_E(z, t, Branch::Second, modes) + field_E(z, t, Branch::First, modes)).norm() <
          1e-14 * field_E(z, t, Branch::First, modes).norm());
    CHECK((field_H(z, t, Branch::Second, modes) + field_H(z, t, Branch::First, modes)).norm() <
          1e-14 * field_H(z, t, Branch::First, modes).norm());
  }
  CHECK_THROWS_AS(field_E(1.5, 0.0, Branch::First, one), std::out_of_range);
  CHECK_THROWS_AS(field_H(-0.1, 0.0, Branch::First, one), std::out_of_range);
}

TEST_CASE("Maxwell residual") {
  const std::vector<CavityMode> modes{cosine_mode(1), CavityMode(2, 1.0, 1.0, 1.0, {0.3, 0.2}, {0.1, -0.4})};
  const Axis z = Axis::uniform(0.0, 1.0, 33);
  const Axis t = Axis::uniform(0.0, period(modes.front()), 33);
  for (auto br : {Branch::First, Branch::Second}) {
    const auto coarse = maxwell_residual(modes, br, z, t);
    const auto fine = maxwell_residual(modes, br, z.refined(), t.refined());
    CHECK(coarse.faraday / fine.faraday == doctest::Approx(4.0).epsilon(0.1));
    CHECK(coarse.ampere / fine.ampere == doctest::Approx(4.0).epsilon(0.1));
  }
  // Kept constants leave a Faraday defect that does not shrink.
  const auto kept = maxwell_residual(modes, Branch::Second, z, t, IntegrationConstants::Kept);
  const auto kept_fine = maxwell_residual(modes, Branch::Second, z.refined(), t.refined(), IntegrationConstants::Kept);
  CHECK(kept.faraday / kept_fine.faraday < 1.5);

  const std::vector<CavityMode> silent{CavityMode(1, 1.0, 1.0, 1.0, 0, 0)};
  const auto zero = maxwell_residual(silent, Branch::First, z, t);
  CHECK(zero.faraday == 0.0);
  CHECK(zero.ampere == 0.0);

  const Axis zf = Axis::uniform(0.0, 1.0, 513);
  const Axis tf = Axis::uniform(0.0, period(modes.front()), 513);
  auto grid = sample_fields(modes, Branch::First, zf, tf);
  const auto clean = maxwell_residual(grid, pc);
  for (std::size_t iz = 0; iz < zf.count; ++iz)
    for (std::size_t it = 0; it < tf.count; ++it) grid(iz, it, 1) *= 1.01;
  const auto bad = maxwell_residual(grid, pc);
  CHECK(bad.ampere > 10.0 * clean.ampere);

  CHECK_THROWS_AS(maxwell_residual(modes, Branch::First, Axis::uniform(0, 1, 2), t), DegenerateGrid);
}

TEST_CASE("Hamiltonian") {
  // L = c/2 gives w = 2 pi for alpha = 1.
  const double L = pc.c / 2.0;
  const CavityMode m = CavityMode::real_branch(1, L, 1.0, 1.0, 1.0, 0.3);
  CHECK(m.omega() == doctest::Approx(2 * kPi));
  const std::vector<CavityMode> one{m};
  for (double t : {0.0, 0.13, 0.5, 0.91}) CHECK(hamiltonian(t, one) == doctest::Approx(2 * kPi * kPi).epsilon(1e-14));

  const std::vector<CavityMode> silent{CavityMode(1, 1.0, 1.0, 1.0, 0, 0)};
  CHECK(hamiltonian(0.0, silent) == 0.0);

  // Field energy by Simpson quadrature over the cavity.
  const std::vector<CavityMode> modes{CavityMode::real_branch(1, 1.0, 2.0, 1.0, 1.0, 0.2),
                                      CavityMode::real_branch(2, 1.0, 2.0, 3.0, 0.5, -1.0)};
  const double area = 2.0;  // V / L
  const int n = 2001;
  const double h = 1.0 / (n - 1);
  for (double t : {0.0, 1.7e-9}) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double z = i * h;
      const double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      const double e = field_E(z, t, Branch::First, modes)(0).real();
      const double hy = field_H(z, t, Branch::First, modes)(1).real();
      acc += w * 0.5 * (pc.eps0 * e * e + pc.mu0 * hy * hy);
    }
    const double energy = acc * h / 3.0 * area;
    CHECK(energy == doctest::Approx(hamiltonian(t, modes)).epsilon(1e-6));
  }
  const std::vector<CavityMode> complex_mode{CavityMode(1, 1.0, 1.0, 1.0, {1, 0}, {0, 1})};
  CHECK_THROWS(hamiltonian(0.0, complex_mode));
}

TEST_CASE("time-reversal companion") {
  const auto m = cosine_mode();
  const std::vector<CavityMode> one{m};
  const double T = period(m);
  const Axis z = Axis::uniform(0.0, 1.0, 33);
  const Axis t = Axis::uniform(-T / 2, T / 2, 33);
  CHECK(t.symmetric_about_zero());

  SampledGrid cosine(z, t, 1);
  cosine.fill(0, [&](double, double tt) { return std::cos(m.omega() * tt); });
  const int even[1] = {1};
  const auto comp = t_reversal_companion(cosine, even);
  for (std::size_t it = 0; it < t.count; ++it) {
    const cplx v = comp(5, it, 0);
    CHECK(std::abs(v + std::cos(m.omega() * t.at(it))) < 1e-14);
    CHECK(std::abs(v - comp(5, t.count - 1 - it, 0)) < 1e-14);
  }

  SampledGrid zero(z, t, 2);
  const auto zc = t_reversal_companion(zero);
  for (std::size_t it = 0; it < t.count; ++it) CHECK(zc(3, it, 1) == cplx(0.0));

  const auto fields = sample_fields(one, Branch::First, z, t);
  const auto fine_fields = sample_fields(one, Branch::First, z.refined(), t.refined());
  const auto r1 = maxwell_residual(t_reversal_companion(fields), pc);
  const auto r2 = maxwell_residual(t_reversal_companion(fine_fields), pc);
  CHECK(r1.faraday / r2.faraday == doctest::Approx(4.0).epsilon(0.1));
  CHECK(r1.ampere / r2.ampere == doctest::Approx(4.0).epsilon(0.1));

  CHECK_THROWS(t_reversal_companion(sample_fields(one, Branch::First, z, Axis::uniform(0, T, 9))));
}

TEST_CASE("axes") {
  const double samples[] = {0.0, 0.25, 0.5, 0.75};
  const Axis a = Axis::from_samples(samples);
  CHECK(a.count == 4);
  CHECK(a.step == 0.25);
  const double uneven[] = {0.0, 0.25, 0.6};
  CHECK_THROWS(Axis::from_samples(uneven));
  CHECK(a.refined().count == 7);
  CHECK(a.refined().last() == a.last());
}
