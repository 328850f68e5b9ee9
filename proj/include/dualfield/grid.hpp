#pragma once

// Uniform sampling axes and (z, t) sample grids used by the residual checks.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualfield/constants.hpp"

namespace dualfield {

struct Axis {
  double start = 0.0;
  double step = 1.0;
  std::size_t count = 1;

  static Axis uniform(double first, double last, std::size_t count);
  /// Throws unless the samples are ordered with spacing uniform to 1e-12 relative.
  static Axis from_samples(std::span<const double> samples);

  double at(std::size_t i) const { return start + step * static_cast<double>(i); }
  double last() const { return at(count - 1); }
  Axis translated(double offset) const { return {start + offset, step, count}; }
  /// Same extent with twice the resolution.
  Axis refined() const { return {start, step / 2.0, 2 * count - 1}; }
  /// True when samples are mirror images about zero.
  bool symmetric_about_zero(double tol = 1e-12) const;
};

class DegenerateGrid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Complex samples over (z, t) with a fixed number of components per node.
class SampledGrid {
 public:
  SampledGrid(Axis z, Axis t, std::size_t components);

  const Axis& z() const noexcept { return z_; }
  const Axis& t() const noexcept { return t_; }
  std::size_t components() const noexcept { return ncomp_; }

  cplx& operator()(std::size_t iz, std::size_t it, std::size_t comp) { return data_[index(iz, it, comp)]; }
  const cplx& operator()(std::size_t iz, std::size_t it, std::size_t comp) const {
    return data_[index(iz, it, comp)];
  }

  /// Fills component `comp` from f(z, t).
  void fill(std::size_t comp, const std::function<cplx(double, double)>& f);

  /// Central difference in z (axis 0) or t (axis 1) at an interior node.
  cplx d_dz(std::size_t iz, std::size_t it, std::size_t comp) const;
  cplx d_dt(std::size_t iz, std::size_t it, std::size_t comp) const;

  void require_interior(std::size_t min_per_axis = 3) const;

 private:
  std::size_t index(std::size_t iz, std::size_t it, std::size_t comp) const {
    return (iz * t_.count + it) * ncomp_ + comp;
  }

  Axis z_;
  Axis t_;
  std::size_t ncomp_;
  std::vector<cplx> data_;
};

}  // namespace dualfield
