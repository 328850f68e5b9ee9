#pragma once

// The two-parameter gauge group U1(alpha) x R(beta) acting on field functions
// by u -> beta e^{i alpha} u, and its one-dimensional irreducible representations.

#include <span>
#include <vector>

#include "dualfield/constants.hpp"

namespace dualfield::gauge {

class GaugeElement {
 public:
  /// Throws std::invalid_argument when beta == 0.
  GaugeElement(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// Multiplier beta e^{i alpha} applied to field functions.
  cplx factor() const;
  /// Conjugate transform, applied to u*: beta e^{-i alpha}.
  GaugeElement conjugate() const { return {-alpha_, beta_}; }

  friend GaugeElement operator*(const GaugeElement& a, const GaugeElement& b) {
    return {a.alpha_ + b.alpha_, a.beta_ * b.beta_};
  }

 private:
  double alpha_;
  double beta_;
};

struct IrrepLabel {
  int m;
  int k;
};

std::vector<cplx> gauge_transform(std::span<const cplx> u, const GaugeElement& g);

/// beta^{2k+1}; odd in beta, T(1) = 1.
double irrep_R(double beta, int k);

/// e^{-i m alpha} beta^{2k+1}.
cplx irrep_Gamma(const GaugeElement& g, IrrepLabel label);

}  // namespace dualfield::gauge
