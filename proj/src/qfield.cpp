#include "dualfield/qfield.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace dualfield::qfield {

namespace {
constexpr cplx kI{0.0, 1.0};
}

LadderPair ladder(int D, int mode_index) {
  if (D < 2) throw std::invalid_argument("Fock truncation needs D >= 2, got " + std::to_string(D));
  Matrix a = Matrix::Zero(D, D);
  for (int n = 1; n < D; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return {{a, mode_index}, {a.adjoint(), mode_index}};
}

QuantizedMode::QuantizedMode(cavity::CavityMode mode, int D, int mode_index)
    : mode_(std::move(mode)), D_(D), ladder_(ladder(D, mode_index)) {}

CanonicalPair position_momentum(const QuantizedMode& qm, const PhysicalConstants& pc) {
  const double m = qm.mode().mass();
  const double w = qm.mode().omega();
  const Matrix& a = qm.a().matrix;
  const Matrix& ad = qm.a_dag().matrix;
  const int idx = qm.a().mode_index;
  return {{std::sqrt(pc.hbar / (2.0 * m * w)) * (ad + a), idx},
          {kI * std::sqrt(pc.hbar * m * w / 2.0) * (ad - a), idx}};
}

const char* to_string(FieldKind k) {
  switch (k) {
    case FieldKind::E1: return "E1";
    case FieldKind::H1: return "H1";
    case FieldKind::E2: return "E2";
    case FieldKind::H2: return "H2";
    case FieldKind::ETotal: return "E_TOTAL";
    case FieldKind::HTotal: return "H_TOTAL";
  }
  return "?";
}

Matrix embed(const Matrix& op, std::size_t slot, std::span<const QuantizedMode> modes) {
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const Matrix factor = i == slot ? op : Matrix::Identity(modes[i].D(), modes[i].D());
    out = Eigen::kroneckerProduct(out, factor).eval();
  }
  return out;
}

LadderPair heisenberg_evolve(const QuantizedMode& qm, double t) {
  const double wt = qm.mode().omega() * t;
  return {{qm.a().matrix * std::polar(1.0, -wt), qm.a().mode_index},
          {qm.a_dag().matrix * std::polar(1.0, wt), qm.a_dag().mode_index}};
}

Matrix heisenberg_by_exponential(const QuantizedMode& qm, double t) {
  const Matrix& a = qm.a().matrix;
  const Matrix& ad = qm.a_dag().matrix;
  const Matrix Hw = ad * a + 0.5 * Matrix::Identity(qm.D(), qm.D());  // H / hbar
  const Matrix U = (-kI * qm.mode().omega() * t * Hw).exp();
  return U.adjoint() * a * U;
}

FockOperator field_operator(FieldKind kind, double z, double t, std::span<const QuantizedMode> modes,
                            const PhysicalConstants& pc, std::size_t cap) {
  if (modes.empty()) throw std::invalid_argument("field operator needs at least one mode");
  std::size_t dim = 1;
  for (const auto& qm : modes) {
    dim *= static_cast<std::size_t>(qm.D());
    if (dim > cap) {
      throw DimensionCapExceeded("tensor dimension exceeds cap " + std::to_string(cap));
    }
  }
  const double L = modes.front().mode().length();
  if (!(z >= 0.0 && z <= L)) throw std::out_of_range("z = " + std::to_string(z) + " lies outside the cavity");

  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const auto& m = modes[i].mode();
    const auto ev = heisenberg_evolve(modes[i], t);
    const Matrix& a = ev.a.matrix;
    const Matrix& ad = ev.a_dag.matrix;
    // Second-branch operators share the same ladder matrices.
    const Matrix& a2 = a;
    const Matrix& a2d = ad;
    const double ce = std::sqrt(pc.hbar * m.omega() / (m.volume() * pc.eps0)) * std::sin(m.k() * z);
    const double ch = std::sqrt(pc.hbar * m.omega() / (m.volume() * pc.mu0)) * std::cos(m.k() * z);
    Matrix single;
    switch (kind) {
      case FieldKind::E1: single = ce * (ad + a); break;
      case FieldKind::H1: single = kI * ch * (ad - a); break;
      case FieldKind::E2: single = ce * (a2d + a2); break;
      case FieldKind::H2: single = -kI * ch * (a2d - a2); break;
      case FieldKind::ETotal: single = ce * ((ad + a) + (a2 - a2d)); break;
      case FieldKind::HTotal: single = ch * ((ad - a) - (a2 + a2d)); break;
    }
    out += embed(single, i, modes);
  }
  return {out, modes.size() == 1 ? modes.front().a().mode_index : -1};
}

Matrix commutator(const Matrix& A, const Matrix& B) { return A * B - B * A; }

double hermiticity_violation(const Matrix& M) { return (M - M.adjoint()).cwiseAbs().maxCoeff(); }

double interior_difference(const Matrix& A, const Matrix& B, Eigen::Index n) {
  return (A.topLeftCorner(n, n) - B.topLeftCorner(n, n)).cwiseAbs().maxCoeff();
}

ContradictionReport cosine_ansatz_contradiction(const QuantizedMode& qm, double t1, double t2) {
  const double w = qm.mode().omega();
  const Matrix& a0 = qm.a().matrix;
  const Matrix& ad0 = qm.a_dag().matrix;
  auto lhs = [&](double t) {
    const double c = std::cos(w * t);
    if (std::abs(c) < 1e-12) throw std::invalid_argument("cos(wt) vanishes at a probe time");
    const Matrix diff = (ad0 - a0) * c;
    Eigen::FullPivLU<Matrix> lu(diff);
    if (!lu.isInvertible()) throw std::invalid_argument("a^+ - a is singular; use an even truncation dimension");
    return Matrix(lu.solve((ad0 + a0) * c));
  };
  ContradictionReport r{};
  r.omega_t1 = w * t1;
  r.omega_t2 = w * t2;
  const Matrix l1 = lhs(t1);
  const Matrix l2 = lhs(t2);
  r.lhs_drift = (l1 - l2).cwiseAbs().maxCoeff();
  r.lhs_magnitude = l1.cwiseAbs().maxCoeff();
  r.tan1 = std::tan(r.omega_t1);
  r.tan2 = std::tan(r.omega_t2);
  r.rhs_difference = std::abs(r.tan1 - r.tan2);
  r.contradiction = r.lhs_drift <= 1e-9 * std::max(1.0, r.lhs_magnitude) && r.rhs_difference > 1e-6;
  return r;
}

}  // namespace dualfield::qfield
