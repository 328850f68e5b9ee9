#pragma once

// Truncated Fock-space quantization of cavity modes: ladder operators,
// canonical pairs, field operators of both branches and their combinations,
// and Heisenberg evolution. Multi-mode operators act on the Kronecker product
// of per-mode spaces, mode 0 being the most significant factor.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "dualfield/cavity.hpp"

namespace dualfield::qfield {

using Matrix = Eigen::MatrixXcd;

struct FockOperator {
  Matrix matrix;
  int mode_index = 0;  // -1 for operators spanning several modes
  Eigen::Index dim() const { return matrix.rows(); }
};

struct LadderPair {
  FockOperator a;
  FockOperator a_dag;
};

/// a[n-1, n] = sqrt(n); throws std::invalid_argument for D < 2.
LadderPair ladder(int D, int mode_index = 0);

class QuantizedMode {
 public:
  explicit QuantizedMode(cavity::CavityMode mode, int D = 12, int mode_index = 0);

  const cavity::CavityMode& mode() const noexcept { return mode_; }
  int D() const noexcept { return D_; }
  const FockOperator& a() const noexcept { return ladder_.a; }
  const FockOperator& a_dag() const noexcept { return ladder_.a_dag; }

 private:
  cavity::CavityMode mode_;
  int D_;
  LadderPair ladder_;
};

struct CanonicalPair {
  FockOperator q;
  FockOperator p;
};

/// q = sqrt(hbar/(2 m w)) (a^+ + a), p = i sqrt(hbar m w / 2) (a^+ - a).
CanonicalPair position_momentum(const QuantizedMode& qm, const PhysicalConstants& pc);

enum class FieldKind { E1, H1, E2, H2, ETotal, HTotal };
const char* to_string(FieldKind k);

inline constexpr std::size_t kDefaultDimensionCap = 4096;

class DimensionCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Field operator at (z, t) with a(t) = a e^{-iwt}. The second-branch operators
/// a'' share the ladder matrices of a. Throws std::out_of_range for z outside
/// the cavity and DimensionCapExceeded when prod D exceeds `cap`.
FockOperator field_operator(FieldKind kind, double z, double t, std::span<const QuantizedMode> modes,
                            const PhysicalConstants& pc, std::size_t cap = kDefaultDimensionCap);

/// a(t) = a e^{-iwt}, a^+(t) = a^+ e^{iwt}.
LadderPair heisenberg_evolve(const QuantizedMode& qm, double t);

/// Oracle: U^+ a U with U = exp(-i H t / hbar), H = hbar w (a^+ a + 1/2).
Matrix heisenberg_by_exponential(const QuantizedMode& qm, double t);

/// Places a single-mode operator into slot `slot` of the product space.
Matrix embed(const Matrix& op, std::size_t slot, std::span<const QuantizedMode> modes);

Matrix commutator(const Matrix& A, const Matrix& B);
/// Largest entry of |M - M^+|.
double hermiticity_violation(const Matrix& M);
/// Largest entry of |A - B| over the leading n x n block.
double interior_difference(const Matrix& A, const Matrix& B, Eigen::Index n);

struct ContradictionReport {
  double omega_t1;
  double omega_t2;
  double lhs_drift;      // max |LHS(t1) - LHS(t2)|
  double lhs_magnitude;  // max |LHS(t1)|
  double tan1;
  double tan2;
  double rhs_difference;  // |tan1 - tan2|
  bool contradiction;     // LHS constant while the right side moves by > 1e-6
};

/// Both sides of (a^+(t) - a(t))^{-1} (a^+(t) + a(t)) = tan(wt) under a real
/// cosine time dependence of the ladder operators. Needs even D so that
/// a^+ - a is invertible; throws std::invalid_argument when cos(wt) or the
/// tangent is singular at either probe time.
ContradictionReport cosine_ansatz_contradiction(const QuantizedMode& qm, double t1, double t2);

}  // namespace dualfield::qfield
