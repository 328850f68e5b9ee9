#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "dualfield/qfield.hpp"

using namespace dualfield;
using namespace dualfield::qfield;

namespace {

const auto pc = PhysicalConstants::codata();
const double eps = std::numeric_limits<double>::epsilon();

QuantizedMode mode(int alpha = 1, int D = 12, int idx = 0) {
  return QuantizedMode(cavity::CavityMode(alpha, 1.0, 1.0, 1.0, 0.5, 0.5), D, idx);
}

}  // namespace

TEST_CASE("ladder operators") {
  const auto [a, ad] = ladder(4);
  CHECK((a.matrix * Eigen::VectorXcd::Unit(4, 0)).isZero(0.0));
  CHECK(ad.matrix == a.matrix.adjoint());
  Matrix expected = Matrix::Identity(4, 4);
  expected(3, 3) = -3.0;
  CHECK((commutator(a.matrix, ad.matrix) - expected).cwiseAbs().maxCoeff() <= 4 * eps * 4);
  Eigen::VectorXcd n(4);
  n << 0, 1, 2, 3;
  CHECK(((ad.matrix * a.matrix) - Matrix(n.asDiagonal())).cwiseAbs().maxCoeff() <= 4 * eps * 4);
  CHECK_THROWS(ladder(1));
}

TEST_CASE("canonical pair") {
  const auto qm = mode();
  const auto [q, p] = position_momentum(qm, pc);
  CHECK(hermiticity_violation(q.matrix) <= 1e-14 * q.matrix.cwiseAbs().maxCoeff());
  CHECK(hermiticity_violation(p.matrix) <= 1e-14 * p.matrix.cwiseAbs().maxCoeff());
  CHECK(q.matrix(0, 0) == cplx(0.0));
  CHECK(p.matrix(0, 0) == cplx(0.0));
  const Eigen::Index n = qm.D() - 1;
  const Matrix ihbar = cplx(0, pc.hbar) * Matrix::Identity(qm.D(), qm.D());
  // With a[n-1, n] = sqrt(n) these formulas give [q, p] = i hbar, so [p, q] = -i hbar.
  CHECK(interior_difference(commutator(q.matrix, p.matrix), ihbar, n) < 1e-12 * pc.hbar);
  CHECK(interior_difference(commutator(p.matrix, q.matrix), -ihbar, n) < 1e-12 * pc.hbar);
}

TEST_CASE("field operators") {
  const std::vector<QuantizedMode> two{mode(1, 6, 0), mode(2, 6, 1)};
  for (auto kind : {FieldKind::E1, FieldKind::H1, FieldKind::E2, FieldKind::H2}) {
    const auto op = field_operator(kind, 0.3, 1.1e-9, two, pc);
    CHECK(op.dim() == 36);
    CHECK(hermiticity_violation(op.matrix) <= 1e-12 * op.matrix.cwiseAbs().maxCoeff());
  }
  // The combined operators carry the anti-Hermitian (a'' - a''+) and -(a'' + a''+) pieces.
  for (auto kind : {FieldKind::ETotal, FieldKind::HTotal}) {
    const auto op = field_operator(kind, 0.3, 1.1e-9, two, pc);
    const Matrix anti = (op.matrix - op.matrix.adjoint()) / 2.0;
    CHECK(anti.cwiseAbs().maxCoeff() > 0.1 * op.matrix.cwiseAbs().maxCoeff());
    CHECK(std::abs(op.matrix(0, 0)) == 0.0);
  }
  for (double z : {0.0, 0.25, 0.9}) CHECK(field_operator(FieldKind::E1, z, 2e-9, two, pc).matrix(0, 0) == cplx(0.0));

  // <0|E1^2(z, 0)|0> = hbar w / (V eps0) sin^2(kz)
  const std::vector<QuantizedMode> one{mode(1, 8)};
  const auto& m = one.front().mode();
  const double z = 0.3;
  const auto E = field_operator(FieldKind::E1, z, 0.0, one, pc).matrix;
  const cplx vac = (E * E)(0, 0);
  const double expected = pc.hbar * m.omega() / (m.volume() * pc.eps0) * std::pow(std::sin(m.k() * z), 2);
  CHECK(std::abs(vac - expected) < 1e-12 * expected);

  CHECK_THROWS_AS(field_operator(FieldKind::E1, 0.3, 0.0, two, pc, 30), DimensionCapExceeded);
  CHECK_THROWS_AS(field_operator(FieldKind::E1, 1.3, 0.0, two, pc), std::out_of_range);
}

TEST_CASE("embedding") {
  const std::vector<QuantizedMode> two{mode(1, 3, 0), mode(2, 4, 1)};
  const Matrix a0 = embed(two[0].a().matrix, 0, two);
  const Matrix a1 = embed(two[1].a().matrix, 1, two);
  CHECK(a0.rows() == 12);
  CHECK(commutator(a0, a1).isZero(0.0));
  CHECK(commutator(a0, embed(two[1].a_dag().matrix, 1, two)).isZero(0.0));
}

TEST_CASE("Heisenberg evolution") {
  const auto qm = mode();
  const auto at0 = heisenberg_evolve(qm, 0.0);
  CHECK(at0.a.matrix == qm.a().matrix);
  const double T = 2 * kPi / qm.mode().omega();
  CHECK((heisenberg_evolve(qm, T).a.matrix - qm.a().matrix).cwiseAbs().maxCoeff() < 1e-12);
  for (double t : {0.1 * T, 0.77 * T, 3.3 * T}) {
    const auto ev = heisenberg_evolve(qm, t);
    CHECK(interior_difference(ev.a.matrix, heisenberg_by_exponential(qm, t), qm.D() - 1) < 1e-8);
    CHECK(ev.a_dag.matrix == ev.a.matrix.adjoint());
  }
}

TEST_CASE("cosine ansatz") {
  const auto qm = mode();
  const double w = qm.mode().omega();
  const auto r = cosine_ansatz_contradiction(qm, kPi / 6 / w, kPi / 3 / w);
  CHECK(r.tan1 == doctest::Approx(0.57735).epsilon(1e-5));
  CHECK(r.tan2 == doctest::Approx(1.73205).epsilon(1e-5));
  CHECK(r.lhs_drift <= 1e-12 * r.lhs_magnitude);
  CHECK(r.rhs_difference > 0.5);
  CHECK(r.contradiction);

  const auto same = cosine_ansatz_contradiction(qm, 0.4 / w, 0.4 / w);
  CHECK_FALSE(same.contradiction);
  const auto close = cosine_ansatz_contradiction(qm, 0.4 / w, (0.4 + 1e-4) / w);
  CHECK(close.contradiction);

  CHECK_THROWS(cosine_ansatz_contradiction(qm, kPi / 2 / w, 0.3 / w));
  CHECK_THROWS(cosine_ansatz_contradiction(mode(1, 5), 0.2 / w, 0.3 / w));
}
