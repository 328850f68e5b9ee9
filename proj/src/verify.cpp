#include "dualfield/verify.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "dualfield/algebra.hpp"
#include "dualfield/cavity.hpp"
#include "dualfield/currents.hpp"
#include "dualfield/dualsym.hpp"
#include "dualfield/qfield.hpp"
#include "dualfield/quatmaxwell.hpp"

namespace dualfield::verify {

using report::at_least;
using report::at_most;
using report::holds;
using report::within;

namespace {

constexpr cplx kI{0.0, 1.0};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  double magnitude() { return uniform(-10.0, 10.0); }
  Vec3 vec() { return {magnitude(), magnitude(), magnitude()}; }
  cplx amplitude() { return {magnitude(), magnitude()}; }

 private:
  std::mt19937_64 gen_;
};

std::vector<cavity::CavityMode> random_modes(Sampler& rng, bool real_branch) {
  std::vector<cavity::CavityMode> modes;
  for (int alpha : {1, 2}) {
    const cplx c1 = rng.amplitude();
    const cplx c2 = real_branch ? std::conj(c1) : rng.amplitude();
    modes.emplace_back(alpha, 1.0, 1.0, 1.0, c1, c2);
  }
  return modes;
}

double period(const cavity::CavityMode& m) { return 2.0 * kPi / m.omega(); }

}  // namespace

bool Criterion::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return !checks.empty();
}

Criterion dual_covariance(std::uint64_t seed) {
  Sampler rng(seed);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto fp = dualsym::FieldPair::real(rng.vec(), rng.vec());
    const double theta = rng.uniform(0.0, 2.0 * kPi);
    const cplx K = dualsym::complex_invariant(fp);
    const cplx rotated = dualsym::complex_invariant(dualsym::dual_rotate(fp, dualsym::DualAngle(theta)));
    worst = std::max(worst, std::abs(rotated - std::polar(1.0, -2.0 * theta) * K) / std::abs(K));
  }
  return {1, "dual covariance", {at_most("dual_covariance", "K(rotated) = exp(-2i theta) K", worst, 1e-12)}};
}

Criterion hyperbolic_covariance(std::uint64_t seed) {
  Sampler rng(seed + 1);
  double worst_factor = 0.0;
  double worst_ratio = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto fp = dualsym::FieldPair::real(rng.vec(), rng.vec());
    const double vt = rng.uniform(-3.0, 3.0);
    const dualsym::HyperParam hp(vt);
    const cplx K = dualsym::complex_invariant(fp);
    const cplx moved = dualsym::complex_invariant(dualsym::hyper_rotate(fp, hp));
    const cplx expected = std::exp(2.0 * vt) * K;
    worst_factor = std::max(worst_factor, std::abs(moved - expected) / std::abs(expected));
    const double W0 = dualsym::hyper_invariants(fp, dualsym::HyperParam(0.0)).ratio;
    const double W = dualsym::hyper_invariants(fp, hp).ratio;
    worst_ratio = std::max(worst_ratio, std::abs(W - W0) / std::abs(W0));
  }
  return {2,
          "hyperbolic covariance",
          {at_most("hyper_factor", "K(hyper-rotated) = exp(2 vartheta) K", worst_factor, 1e-10),
           at_most("w_ratio", "I1''/I2'' = I1/I2 = W", worst_ratio, 1e-12)}};
}

Criterion larmor_reduction(std::uint64_t seed) {
  Sampler rng(seed + 2);
  bool exact = true;
  for (int i = 0; i < 100; ++i) {
    const auto fp = dualsym::FieldPair::real(rng.vec(), rng.vec());
    const auto out = dualsym::dual_rotate(fp, dualsym::DualAngle(kPi / 2.0));
    exact = exact && out.E == fp.H && out.H == -fp.E;
  }
  return {3, "Larmor reduction", {holds("larmor_swap", "theta = pi/2: E -> H, H -> -E exactly", exact)}};
}

Criterion cyclic_bases() {
  using namespace algebra;
  Criterion c{4, "cyclic bases and quaternion tables", {}};
  for (auto v : {Basis01Variant::Zeta, Basis01Variant::ZetaPrime}) {
    const Matrix01 one = basis01_image(v, 1, 0);
    const Matrix01 i = basis01_image(v, 0, 1);
    const Matrix01 minus_one = basis01_image(v, -1, 0);
    const bool ok = (i * i == minus_one) && (i * i * i * i == one);
    const std::string name = v == Basis01Variant::Zeta ? "zeta" : "zeta_prime";
    c.checks.push_back(holds(name + "_i_squared", "i^2 = -1 and i^4 = 1 under the [0,1] mapping", ok));
  }
  // Associativity of the Hamilton table over all basis triples.
  bool assoc = true;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int d = 0; d < 4; ++d) {
        const auto x = Quaternion::unit(QuatBasis::Hamilton, a);
        const auto y = Quaternion::unit(QuatBasis::Hamilton, b);
        const auto z = Quaternion::unit(QuatBasis::Hamilton, d);
        assoc = assoc && quat_mul(quat_mul(x, y), z) == quat_mul(x, quat_mul(y, z));
      }
  c.checks.push_back(holds("hamilton_associative", "(xy)z = x(yz) on 64 basis triples", assoc));
  // Levi-Civita table against e_a e_b = eps_abc e_c + delta_ab e0, e0 neutral.
  bool table = true;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Quaternion expected;
      expected.basis = QuatBasis::LeviCivita;
      if (a == 0) {
        expected[b] = 1.0;
      } else if (b == 0) {
        expected[a] = 1.0;
      } else if (a == b) {
        expected[0] = 1.0;
      } else {
        const int k = 6 - a - b;
        // eps_abk for the cyclic order (1,2,3)
        const bool cyclic = (a % 3) + 1 == b;
        expected[k] = cyclic ? 1.0 : -1.0;
      }
      table = table && quat_mul(Quaternion::unit(QuatBasis::LeviCivita, a),
                                Quaternion::unit(QuatBasis::LeviCivita, b)) == expected;
    }
  c.checks.push_back(holds("levi_civita_table", "e_a e_b = eps_abc e_c + delta_ab e0 on 16 pairs", table));
  return c;
}

Criterion cavity_solutions(std::uint64_t seed) {
  using namespace cavity;
  Sampler rng(seed + 3);
  Criterion c{5, "cavity solutions", {}};
  const auto modes = random_modes(rng, false);
  const double L = modes.front().length();
  const double T = period(modes.front());

  double boundary = 0.0;
  cplx ode{};
  double ode_max = 0.0;
  for (int i = 0; i <= 64; ++i) {
    const double t = T * i / 64.0;
    for (auto br : {Branch::First, Branch::Second}) {
      boundary = std::max({boundary, field_E(0.0, t, br, modes).norm(), field_E(L, t, br, modes).norm()});
    }
    for (const auto& m : modes) {
      ode = ode_residual(t, m);
      ode_max = std::max(ode_max, std::abs(ode));
    }
  }
  c.checks.push_back(at_most("boundary", "E(0, t) = E(L, t) = 0, both branches", boundary, 0.0));
  c.checks.push_back(at_most("mode_ode", "q'' + w^2 q = 0 in closed form", ode_max, 0.0));

  const auto real = random_modes(rng, true);
  const double H0 = hamiltonian(0.0, real);
  double drift = 0.0;
  for (int i = 1; i <= 64; ++i) drift = std::max(drift, std::abs(hamiltonian(T * i / 64.0, real) - H0) / H0);
  c.checks.push_back(at_most("hamiltonian_drift", "H = 1/2 sum (m w^2 q^2 + p^2/m) constant", drift, 1e-12));

  const Axis z = Axis::uniform(0.0, L, 33);
  const Axis t = Axis::uniform(0.0, T, 33);
  for (auto br : {Branch::First, Branch::Second}) {
    const auto coarse = maxwell_residual(modes, br, z, t);
    const auto fine = maxwell_residual(modes, br, z.refined(), t.refined());
    const std::string tag = br == Branch::First ? "first" : "second";
    c.checks.push_back(within("faraday_order_" + tag, "dE/dz + mu0 dH/dt = 0, residual ratio under halving",
                              coarse.faraday / fine.faraday, 3.5, 4.5));
    c.checks.push_back(within("ampere_order_" + tag, "dH/dz + eps0 dE/dt = 0, residual ratio under halving",
                              coarse.ampere / fine.ampere, 3.5, 4.5));
  }
  return c;
}

Criterion cavity_currents(std::uint64_t seed) {
  using namespace currents;
  Sampler rng(seed + 4);
  Criterion c{6, "cavity currents", {}};
  const FieldFunctionSet ffs(random_modes(rng, false));
  const NoetherContext ctx;
  const double scale = current_scale(ffs);
  const double L = ffs.length();
  const double T = period(ffs.modes().front());

  const Axis z = Axis::uniform(0.0, L, 32);
  const Axis t = Axis::uniform(0.0, T, 32);
  double j3 = 0.0;
  for (std::size_t iz = 0; iz < z.count; ++iz)
    for (std::size_t it = 0; it < t.count; ++it) j3 = std::max(j3, std::abs(current_j1(ffs, ctx, 3, z.at(iz), t.at(it))));
  c.checks.push_back(at_most("j3_first_family", "j3^1 = 0 (scaled)", j3 / scale, 1e-14));

  std::vector<cavity::CavityMode> balanced;
  for (const auto& m : ffs.modes()) {
    const double r = std::abs(m.C1());
    balanced.push_back(m.with_amplitudes(m.C1(), std::polar(r, rng.uniform(0.0, 2.0 * kPi))));
  }
  const FieldFunctionSet bal(balanced);
  double j4 = 0.0;
  for (std::size_t it = 0; it < t.count; ++it) j4 = std::max(j4, std::abs(current_j1(bal, ctx, 4, 0.3 * L, t.at(it))));
  c.checks.push_back(at_most("j4_first_family_balanced", "j4^1 = 0 when |C1| = |C2| (scaled)", j4 / current_scale(bal),
                             1e-14));

  double agree = 0.0;
  for (auto sign : {SignFamily::Plus, SignFamily::Minus}) {
    const FieldFunctionSet f(ffs.modes(), sign);
    for (int i = 0; i < 16; ++i) {
      const double zz = rng.uniform(0.0, L);
      const double tt = rng.uniform(0.0, T);
      for (auto fam : {CurrentFamily::J1, CurrentFamily::J2}) {
        for (int mu : {3, 4}) {
          const cplx closed = current(f, ctx, fam, mu, zz, tt, Route::ClosedForm);
          const cplx generic = current(f, ctx, fam, mu, zz, tt, Route::Generic);
          agree = std::max(agree, std::abs(closed - generic) / scale);
        }
      }
    }
  }
  c.checks.push_back(at_most("closed_vs_generic", "closed-form currents = Lagrangian-derived currents", agree, 1e-8));

  double cont = 0.0;
  for (auto fam : {CurrentFamily::J1, CurrentFamily::J2, CurrentFamily::Total}) {
    cont = std::max(cont, continuity_residual(ffs, ctx, z, t, fam).relative);
  }
  c.checks.push_back(at_most("continuity", "dj3/dz + (1/(ic)) dj4/dt = 0 (relative)", cont, 1e-12));
  return c;
}

Criterion conservation(std::uint64_t seed) {
  using namespace currents;
  Sampler rng(seed + 5);
  Criterion c{7, "conservation", {}};
  const auto modes = random_modes(rng, false);
  const FieldFunctionSet ffs(modes);
  const NoetherContext ctx;
  const double T = period(modes.front());
  const double cc = ffs.constants().c;
  double qscale = 0.0;
  for (const auto& m : modes) {
    qscale += 8.0 * m.mass() * std::pow(m.omega(), 3) * (std::norm(m.C1()) + std::norm(m.C2())) / cc;
  }
  const double sscale = spirality_scale(ffs);
  const cplx Q0 = complex_charge(ffs, ctx, 0.0);
  const cplx S0 = spirality(ffs, 0.0);
  double qdrift = 0.0;
  double sdrift = 0.0;
  for (int i = 1; i <= 32; ++i) {
    const double t = T * i / 32.0;
    qdrift = std::max(qdrift, std::abs(complex_charge(ffs, ctx, t) - Q0) / std::max(std::abs(Q0), qscale));
    sdrift = std::max(sdrift, std::abs(spirality(ffs, t) - S0) / std::max(std::abs(S0), sscale));
  }
  c.checks.push_back(at_most("charge_drift", "Q = Q1 + iQ2 constant in t", qdrift, 1e-10));
  c.checks.push_back(at_most("spirality_drift", "S^4_3 constant in t", sdrift, 1e-10));

  const double t = rng.uniform(0.0, T);
  const cplx sum = spirality(FieldFunctionSet({modes[0]}), t) + spirality(FieldFunctionSet({modes[1]}), t);
  c.checks.push_back(at_most("spirality_additive", "S^4_3(modes a + b) = S^4_3(a) + S^4_3(b)",
                             std::abs(spirality(ffs, t) - sum) / sscale, 1e-12));
  return c;
}

Criterion fock_algebra(std::uint64_t seed) {
  using namespace qfield;
  Sampler rng(seed + 6);
  Criterion c{8, "Fock algebra", {}};
  const auto pc = PhysicalConstants::codata();
  const int D = 12;
  const QuantizedMode qm(cavity::CavityMode(1, 1.0, 1.0, 1.0, 0.5, 0.5), D);
  const Matrix& a = qm.a().matrix;
  const Matrix& ad = qm.a_dag().matrix;

  Matrix expected = Matrix::Identity(D, D);
  expected(D - 1, D - 1) = 1.0 - D;
  // sqrt(n)^2 reproduces n only up to one rounding.
  const double eps = std::numeric_limits<double>::epsilon();
  c.checks.push_back(at_most("ladder_commutator", "[a, a+] = I except corner 1 - D",
                             (commutator(a, ad) - expected).cwiseAbs().maxCoeff(), 4.0 * eps * D));

  const auto [q, p] = position_momentum(qm, pc);
  const Matrix ihbar = kI * pc.hbar * Matrix::Identity(D, D);
  c.checks.push_back(at_most("canonical_pq", "[p, q] = i hbar on the interior block",
                             interior_difference(commutator(p.matrix, q.matrix), ihbar, D - 1) / pc.hbar, 1e-12));
  c.checks.push_back(at_most("canonical_qp", "[q, p] = i hbar on the interior block",
                             interior_difference(commutator(q.matrix, p.matrix), ihbar, D - 1) / pc.hbar, 1e-12));

  std::vector<QuantizedMode> two{QuantizedMode(cavity::CavityMode(1, 1.0, 1.0, 1.0, 0.5, 0.5), D, 0),
                                 QuantizedMode(cavity::CavityMode(2, 1.0, 1.0, 1.0, 0.5, 0.5), D, 1)};
  const double T = period(two.front().mode());
  for (auto kind : {FieldKind::E1, FieldKind::H1, FieldKind::E2, FieldKind::H2, FieldKind::ETotal, FieldKind::HTotal}) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
      const auto op = field_operator(kind, rng.uniform(0.0, 1.0), rng.uniform(0.0, T), two, pc);
      worst = std::max(worst, hermiticity_violation(op.matrix) / op.matrix.cwiseAbs().maxCoeff());
    }
    c.checks.push_back(at_most(std::string("hermitian_") + to_string(kind), "O = O+ (relative)", worst, 1e-12));
  }

  double evo = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double t = rng.uniform(0.0, 2.0 * T);
    evo = std::max(evo, interior_difference(heisenberg_evolve(qm, t).a.matrix, heisenberg_by_exponential(qm, t), D - 1) /
                            a.cwiseAbs().maxCoeff());
  }
  c.checks.push_back(at_most("heisenberg", "a(t) = a e^{-iwt} = U+ a U on the interior block", evo, 1e-8));
  return c;
}

Criterion contradiction_certificate() {
  using namespace qfield;
  const QuantizedMode qm(cavity::CavityMode(1, 1.0, 1.0, 1.0, 0.5, 0.5), 12);
  const double w = qm.mode().omega();
  const auto r = cosine_ansatz_contradiction(qm, kPi / 6.0 / w, kPi / 3.0 / w);
  return {9,
          "cosine-ansatz contradiction",
          {at_most("lhs_constant", "(a+ - a)^{-1}(a+ + a) independent of t", r.lhs_drift / r.lhs_magnitude, 1e-12),
           at_least("rhs_moves", "|tan(w t1) - tan(w t2)| > 0.5", r.rhs_difference, 0.5),
           holds("flagged", "contradiction reported", r.contradiction)}};
}

Criterion generalized_maxwell(std::uint64_t seed) {
  using namespace quat;
  Sampler rng(seed + 7);
  Criterion c{10, "generalized Maxwell system", {}};
  const auto pc = PhysicalConstants::codata();
  const auto modes = random_modes(rng, true);
  const double L = modes.front().length();
  const double T = period(modes.front());
  auto residual_on = [&](std::size_t nz, std::size_t nt) {
    const double h = L / static_cast<double>(nz - 1);
    const Grid4 g{{0.0, h, 3}, {0.0, h, 3}, Axis::uniform(0.0, L, nz), Axis::uniform(0.0, T, nt)};
    return generalized_maxwell_residual(assemble(g, embed_cavity(g, modes)), pc);
  };
  const auto coarse = residual_on(33, 33);
  const auto fine = residual_on(65, 65);
  c.checks.push_back(within("curl_E_order", "curl E + mu0 dH/dt + j_g = 0, residual ratio under halving",
                            coarse.a / fine.a, 3.5, 4.5));
  c.checks.push_back(within("curl_H_order", "curl H - eps0 dE/dt - j_e = 0, residual ratio under halving",
                            coarse.b / fine.b, 3.5, 4.5));
  c.checks.push_back(at_most("div_free", "div E = rho_e and div H = rho_g with no sources",
                             std::max(fine.c, fine.d), 0.0));

  const Grid4 g{Axis::uniform(0.0, 1.0, 5), Axis::uniform(0.0, 1.0, 5), Axis::uniform(0.0, 1.0, 5),
                Axis::uniform(0.0, 1.0, 3)};
  auto comps = FieldComponents::zeros(g);
  for (std::size_t it = 0; it < g.t.count; ++it)
    for (std::size_t iz = 0; iz < g.z.count; ++iz)
      for (std::size_t iy = 0; iy < g.y.count; ++iy)
        for (std::size_t ix = 0; ix < g.x.count; ++ix) comps.E[0][g.index(ix, iy, iz, it)] = {0.0, 0.0, g.z.at(iz)};
  const double rc_zero_source = generalized_maxwell_residual(assemble(g, comps), pc).c;
  for (auto& v : comps.rho_e[0]) v = 1.0;
  const double rc_unit_source = generalized_maxwell_residual(assemble(g, comps), pc).c;
  c.checks.push_back(at_most("linear_profile_balanced", "div (0, 0, z) = rho_e with rho_e = 1", rc_unit_source, 1e-12));
  c.checks.push_back(at_most("linear_profile_unbalanced", "div (0, 0, z) - rho_e = 1 with rho_e = 0",
                             std::abs(rc_zero_source - 1.0), 1e-12));
  return c;
}

std::vector<Criterion> run_all(std::uint64_t seed) {
  return {dual_covariance(seed),    hyperbolic_covariance(seed), larmor_reduction(seed),
          cyclic_bases(),           cavity_solutions(seed),      cavity_currents(seed),
          conservation(seed),       fock_algebra(seed),          contradiction_certificate(),
          generalized_maxwell(seed)};
}

}  // namespace dualfield::verify
