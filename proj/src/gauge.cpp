#include "dualfield/gauge.hpp"

#include <cmath>
#include <stdexcept>

namespace dualfield::gauge {

GaugeElement::GaugeElement(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (beta == 0.0) throw std::invalid_argument("gauge parameter beta must be non-zero");
}

cplx GaugeElement::factor() const { return beta_ * std::polar(1.0, alpha_); }

std::vector<cplx> gauge_transform(std::span<const cplx> u, const GaugeElement& g) {
  const cplx f = g.factor();
  std::vector<cplx> out(u.begin(), u.end());
  for (auto& v : out) v *= f;
  return out;
}

double irrep_R(double beta, int k) {
  if (beta == 0.0) throw std::invalid_argument("irrep_R: beta must be non-zero");
  return std::pow(beta, 2 * k + 1);
}

cplx irrep_Gamma(const GaugeElement& g, IrrepLabel label) {
  return std::polar(1.0, -static_cast<double>(label.m) * g.alpha()) * irrep_R(g.beta(), label.k);
}

}  // namespace dualfield::gauge
