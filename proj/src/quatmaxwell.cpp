#include "dualfield/quatmaxwell.hpp"

#include <cmath>
#include <stdexcept>

namespace dualfield::quat {

namespace {

constexpr cplx kI{0.0, 1.0};

std::array<std::size_t, 4> strides(const Grid4& g) {
  return {1, g.x.count, g.x.count * g.y.count, g.x.count * g.y.count * g.z.count};
}

struct Node {
  std::size_t flat;
  std::array<std::size_t, 4> idx;
};

// Visits nodes that are interior along every axis with at least three samples.
template <class F>
void for_interior(const Grid4& g, F f) {
  auto lo = [](const Axis& a) { return a.count >= 3 ? std::size_t{1} : std::size_t{0}; };
  auto hi = [](const Axis& a) { return a.count >= 3 ? a.count - 1 : a.count; };
  for (std::size_t it = lo(g.t); it < hi(g.t); ++it)
    for (std::size_t iz = lo(g.z); iz < hi(g.z); ++iz)
      for (std::size_t iy = lo(g.y); iy < hi(g.y); ++iy)
        for (std::size_t ix = lo(g.x); ix < hi(g.x); ++ix) f(Node{g.index(ix, iy, iz, it), {ix, iy, iz, it}});
}

// Central difference of samples along axis a; zero along single-sample axes.
template <class T>
T diff(const Grid4& g, const std::vector<T>& v, const Node& n, int a) {
  const Axis& ax = g.axis(a);
  if (ax.count < 3) return T(v[n.flat] * 0.0);
  const std::size_t s = strides(g)[static_cast<std::size_t>(a)];
  return T((v[n.flat + s] - v[n.flat - s]) / (2.0 * ax.step));
}

Vec3 curl(const Grid4& g, const VectorSamples& v, const Node& n) {
  const Vec3 dx = diff(g, v, n, 0);
  const Vec3 dy = diff(g, v, n, 1);
  const Vec3 dz = diff(g, v, n, 2);
  return {dy.z() - dz.y(), dz.x() - dx.z(), dx.y() - dy.x()};
}

double divergence(const Grid4& g, const VectorSamples& v, const Node& n) {
  return diff(g, v, n, 0).x() + diff(g, v, n, 1).y() + diff(g, v, n, 2).z();
}

template <class T>
std::vector<T> scaled(const std::vector<T>& v, double s) {
  std::vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

void require_same(std::size_t n, std::size_t expected) {
  if (n != expected) throw std::invalid_argument("component grids do not share the grid shape");
}

}  // namespace

const Axis& Grid4::axis(int a) const {
  switch (a) {
    case 0: return x;
    case 1: return y;
    case 2: return z;
    case 3: return t;
  }
  throw std::out_of_range("grid axis must be in 0..3");
}

void Grid4::require_differentiable() const {
  for (int a = 0; a < 4; ++a) {
    if (axis(a).count == 2) throw DegenerateGrid("an axis with two samples cannot be differentiated");
  }
  if (z.count < 3 || t.count < 3) throw DegenerateGrid("z and t axes need at least 3 samples");
}

bool Grid4::operator==(const Grid4& o) const {
  for (int a = 0; a < 4; ++a) {
    const Axis& p = axis(a);
    const Axis& q = o.axis(a);
    if (p.start != q.start || p.step != q.step || p.count != q.count) return false;
  }
  return true;
}

FieldComponents FieldComponents::zeros(const Grid4& grid) {
  FieldComponents c;
  const std::size_t n = grid.size();
  for (std::size_t i = 0; i < 4; ++i) {
    c.E[i].assign(n, Vec3::Zero());
    c.H[i].assign(n, Vec3::Zero());
    c.je[i].assign(n, Vec3::Zero());
    c.jg[i].assign(n, Vec3::Zero());
    c.rho_e[i].assign(n, 0.0);
    c.rho_g[i].assign(n, 0.0);
  }
  return c;
}

void FieldComponents::require_size(std::size_t n) const {
  for (std::size_t i = 0; i < 4; ++i) {
    require_same(E[i].size(), n);
    require_same(H[i].size(), n);
    require_same(je[i].size(), n);
    require_same(jg[i].size(), n);
    require_same(rho_e[i].size(), n);
    require_same(rho_g[i].size(), n);
  }
}

FieldQuaternion assemble(const Grid4& grid, const FieldComponents& comps) {
  comps.require_size(grid.size());
  FieldQuaternion fq{grid, {}, {}, {}, {}, {}, {}};
  for (std::size_t i = 0; i < 4; ++i) {
    fq.E[i] = scaled(comps.E[i], kPackSigns[i]);
    fq.H[i] = scaled(comps.H[i], kPackSigns[i]);
    fq.je[i] = scaled(comps.je[i], kPackSigns[i]);
    fq.jg[i] = scaled(comps.jg[i], kPackSignsJg[i]);
    fq.rho_e[i] = scaled(comps.rho_e[i], kPackSigns[i]);
    fq.rho_g[i] = scaled(comps.rho_g[i], kPackSigns[i]);
  }
  return fq;
}

FieldComponents decompose(const FieldQuaternion& fq) {
  FieldComponents c;
  // Every packing sign is +-1, so unpacking multiplies by the same sign.
  for (std::size_t i = 0; i < 4; ++i) {
    c.E[i] = scaled(fq.E[i], kPackSigns[i]);
    c.H[i] = scaled(fq.H[i], kPackSigns[i]);
    c.je[i] = scaled(fq.je[i], kPackSigns[i]);
    c.jg[i] = scaled(fq.jg[i], kPackSignsJg[i]);
    c.rho_e[i] = scaled(fq.rho_e[i], kPackSigns[i]);
    c.rho_g[i] = scaled(fq.rho_g[i], kPackSigns[i]);
  }
  return c;
}

GeneralizedResidual generalized_maxwell_residual(const FieldQuaternion& fq, const PhysicalConstants& pc) {
  const Grid4& g = fq.grid;
  g.require_differentiable();
  GeneralizedResidual r{0.0, 0.0, 0.0, 0.0};
  for (std::size_t q = 0; q < 4; ++q) {
    for_interior(g, [&](const Node& n) {
      const Vec3 ra = curl(g, fq.E[q], n) + pc.mu0 * diff(g, fq.H[q], n, 3) + fq.jg[q][n.flat];
      const Vec3 rb = curl(g, fq.H[q], n) - pc.eps0 * diff(g, fq.E[q], n, 3) - fq.je[q][n.flat];
      const double rc = divergence(g, fq.E[q], n) - fq.rho_e[q][n.flat];
      const double rd = divergence(g, fq.H[q], n) - fq.rho_g[q][n.flat];
      r.a_by_coeff[q] = std::max(r.a_by_coeff[q], ra.cwiseAbs().maxCoeff());
      r.b_by_coeff[q] = std::max(r.b_by_coeff[q], rb.cwiseAbs().maxCoeff());
      r.c_by_coeff[q] = std::max(r.c_by_coeff[q], std::abs(rc));
      r.d_by_coeff[q] = std::max(r.d_by_coeff[q], std::abs(rd));
    });
    r.a = std::max(r.a, r.a_by_coeff[q]);
    r.b = std::max(r.b, r.b_by_coeff[q]);
    r.c = std::max(r.c, r.c_by_coeff[q]);
    r.d = std::max(r.d, r.d_by_coeff[q]);
  }
  return r;
}

FieldComponents embed_cavity(const Grid4& grid, std::span<const cavity::CavityMode> modes) {
  using cavity::Branch;
  FieldComponents c = FieldComponents::zeros(grid);
  for (std::size_t it = 0; it < grid.t.count; ++it) {
    for (std::size_t iz = 0; iz < grid.z.count; ++iz) {
      const double z = grid.z.at(iz);
      const double t = grid.t.at(it);
      const Vec3 e1 = cavity::field_E(z, t, Branch::First, modes).real();
      const Vec3 h1 = cavity::field_H(z, t, Branch::First, modes).real();
      const Vec3 e2 = cavity::field_E(z, t, Branch::Second, modes).real();
      const Vec3 h2 = cavity::field_H(z, t, Branch::Second, modes).real();
      for (std::size_t iy = 0; iy < grid.y.count; ++iy) {
        for (std::size_t ix = 0; ix < grid.x.count; ++ix) {
          const std::size_t n = grid.index(ix, iy, iz, it);
          c.E[0][n] = e1;
          c.H[0][n] = h1;
          c.E[1][n] = e2;
          c.H[1][n] = h2;
        }
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------------------

Biquaternion3Field Biquaternion3Field::from_components(const Grid4& grid, const FieldComponents& comps,
                                                       Normalization norm, const PhysicalConstants& pc) {
  comps.require_size(grid.size());
  Biquaternion3Field out{grid, norm, std::vector<CVec3>(grid.size()), std::vector<CVec3>(grid.size())};
  const double s = norm == Normalization::Literal ? 1.0 : pc.c * pc.mu0;
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const CVec3 e1 = comps.E[0][n].cast<cplx>();
    const CVec3 h1 = comps.H[0][n].cast<cplx>();
    const CVec3 e2 = comps.E[1][n].cast<cplx>();
    const CVec3 h2 = comps.H[1][n].cast<cplx>();
    if (norm == Normalization::Literal) {
      out.F[n] = e1 + kI * h1;
      out.F_tilde[n] = h2 + kI * e2;
    } else {
      out.F[n] = e1 + kI * s * h1;
      out.F_tilde[n] = s * h2 - kI * e2;
    }
  }
  return out;
}

Biquaternion3Field to_literal(const Biquaternion3Field& field, const PhysicalConstants& pc) {
  if (field.norm == Normalization::Literal) return field;
  const double s = pc.c * pc.mu0;
  Biquaternion3Field out{field.grid, Normalization::Literal, field.F, field.F_tilde};
  for (std::size_t n = 0; n < field.F.size(); ++n) {
    const CVec3 e1 = field.F[n].real().cast<cplx>();
    const CVec3 h1 = (field.F[n].imag() / s).cast<cplx>();
    const CVec3 h2 = (field.F_tilde[n].real() / s).cast<cplx>();
    const CVec3 e2 = (-field.F_tilde[n].imag()).cast<cplx>();
    out.F[n] = e1 + kI * h1;
    out.F_tilde[n] = h2 + kI * e2;
  }
  return out;
}

double QuaternionField::max_abs() const { return std::max(max_abs_scalar(), max_abs_vector()); }

double QuaternionField::max_abs_scalar() const {
  double m = 0.0;
  for (const auto& q : values) m = std::max(m, std::abs(q[0]));
  return m;
}

double QuaternionField::max_abs_vector() const {
  double m = 0.0;
  for (const auto& q : values) {
    for (int i = 1; i < 4; ++i) m = std::max(m, std::abs(q[i]));
  }
  return m;
}

QuaternionField biquat_gradient(const Biquaternion3Field& phi, GradientMode mode, const PhysicalConstants& pc) {
  using algebra::QuatBasis;
  const Grid4& g = phi.grid;
  g.require_differentiable();
  std::vector<CVec3> total(g.size());
  for (std::size_t n = 0; n < g.size(); ++n) total[n] = phi.phi(n);

  algebra::Quaternion zero;
  zero.basis = QuatBasis::LeviCivita;
  QuaternionField out{g, std::vector<algebra::Quaternion>(g.size(), zero)};

  auto as_vector_quat = [](const CVec3& v) {
    algebra::Quaternion q;
    q.basis = QuatBasis::LeviCivita;
    for (int i = 0; i < 3; ++i) q[i + 1] = v(i);
    return q;
  };

  for_interior(g, [&](const Node& n) {
    algebra::Quaternion acc = zero;
    for (int k = 0; k < 3; ++k) {
      const CVec3 d = diff(g, total, n, k);
      acc += algebra::quat_mul(algebra::Quaternion::unit(QuatBasis::LeviCivita, k + 1), as_vector_quat(d));
    }
    if (mode == GradientMode::Spacetime) {
      const CVec3 dt = diff(g, total, n, 3) / (kI * pc.c);
      acc += algebra::quat_mul(algebra::Quaternion::unit(QuatBasis::LeviCivita, 0), as_vector_quat(dt));
    }
    out.values[n.flat] = acc;
  });
  return out;
}

}  // namespace dualfield::quat
