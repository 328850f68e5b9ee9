#include "dualfield/grid.hpp"

#include <cmath>

namespace dualfield {

Axis Axis::uniform(double first, double last, std::size_t count) {
  if (count < 2) throw DegenerateGrid("axis needs at least two samples");
  if (!(last > first)) throw DegenerateGrid("axis must be increasing");
  return {first, (last - first) / static_cast<double>(count - 1), count};
}

Axis Axis::from_samples(std::span<const double> samples) {
  if (samples.size() < 2) throw DegenerateGrid("axis needs at least two samples");
  const Axis ax = uniform(samples.front(), samples.back(), samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double tol = 1e-12 * std::max(std::abs(ax.at(i)), ax.step);
    if (std::abs(samples[i] - ax.at(i)) > tol) throw DegenerateGrid("axis samples are not uniformly spaced");
  }
  return ax;
}

bool Axis::symmetric_about_zero(double tol) const {
  for (std::size_t i = 0; i < count; ++i) {
    if (std::abs(at(i) + at(count - 1 - i)) > tol * std::max(1.0, step) * static_cast<double>(count)) return false;
  }
  return true;
}

SampledGrid::SampledGrid(Axis z, Axis t, std::size_t components)
    : z_(z), t_(t), ncomp_(components), data_(z.count * t.count * components) {
  if (components == 0) throw std::invalid_argument("grid needs at least one component");
}

void SampledGrid::fill(std::size_t comp, const std::function<cplx(double, double)>& f) {
  for (std::size_t iz = 0; iz < z_.count; ++iz) {
    for (std::size_t it = 0; it < t_.count; ++it) (*this)(iz, it, comp) = f(z_.at(iz), t_.at(it));
  }
}

cplx SampledGrid::d_dz(std::size_t iz, std::size_t it, std::size_t comp) const {
  return ((*this)(iz + 1, it, comp) - (*this)(iz - 1, it, comp)) / (2.0 * z_.step);
}

cplx SampledGrid::d_dt(std::size_t iz, std::size_t it, std::size_t comp) const {
  return ((*this)(iz, it + 1, comp) - (*this)(iz, it - 1, comp)) / (2.0 * t_.step);
}

void SampledGrid::require_interior(std::size_t min_per_axis) const {
  if (z_.count < min_per_axis || t_.count < min_per_axis) {
    throw DegenerateGrid("grid needs at least " + std::to_string(min_per_axis) + " samples per axis");
  }
}

}  // namespace dualfield
