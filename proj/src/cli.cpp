#include "dualfield/cli.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dualfield/algebra.hpp"
#include "dualfield/cavity.hpp"
#include "dualfield/config.hpp"
#include "dualfield/currents.hpp"
#include "dualfield/dualsym.hpp"
#include "dualfield/gauge.hpp"
#include "dualfield/qfield.hpp"
#include "dualfield/quatmaxwell.hpp"
#include "dualfield/report.hpp"
#include "dualfield/snapshot.hpp"
#include "dualfield/verify.hpp"

namespace dualfield::cli {

namespace {

using report::at_most;
using report::format_number;
using report::holds;
using report::RunReport;
using report::within;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

double to_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw UsageError("bad number '" + s + "'");
}

Vec3 parse_vec3(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw UsageError("expected three comma-separated numbers, got '" + s + "'");
  return {to_double(parts[0]), to_double(parts[1]), to_double(parts[2])};
}

std::vector<cplx> parse_complex_list(const std::string& s) {
  std::vector<cplx> out;
  for (const auto& item : split(s, ';')) {
    const auto parts = split(item, ',');
    if (parts.empty() || parts.size() > 2) throw UsageError("expected re[,im] entries separated by ';'");
    out.emplace_back(to_double(parts[0]), parts.size() == 2 ? to_double(parts[1]) : 0.0);
  }
  return out;
}

std::string vec_text(const Vec3& v) {
  return format_number(v(0)) + "," + format_number(v(1)) + "," + format_number(v(2));
}

void put_cvec(RunReport& r, const std::string& key, const CVec3& v) {
  r.value(key + "_re", vec_text(v.real()));
  r.value(key + "_im", vec_text(v.imag()));
}

void put_cplx(RunReport& r, const std::string& key, cplx z) {
  r.value(key + "_re", z.real());
  r.value(key + "_im", z.imag());
}

double rel(double diff, double scale) { return scale > 0.0 ? diff / scale : diff; }

cavity::Branch parse_branch(const std::string& s) {
  if (s == "first") return cavity::Branch::First;
  if (s == "second") return cavity::Branch::Second;
  throw UsageError("branch must be first or second");
}

currents::CurrentFamily parse_family(const std::string& s) {
  if (s == "j1") return currents::CurrentFamily::J1;
  if (s == "j2") return currents::CurrentFamily::J2;
  if (s == "total") return currents::CurrentFamily::Total;
  throw UsageError("family must be j1, j2 or total");
}

qfield::FieldKind parse_kind(const std::string& s) {
  using qfield::FieldKind;
  for (auto k : {FieldKind::E1, FieldKind::H1, FieldKind::E2, FieldKind::H2, FieldKind::ETotal, FieldKind::HTotal}) {
    if (s == qfield::to_string(k)) return k;
  }
  throw UsageError("unknown field operator kind '" + s + "'");
}

struct Options {
  std::string format = "text";
  std::string config;
  bool timing = false;

  // shared numeric inputs
  double theta = 0.0;
  double vartheta = 0.0;
  std::optional<double> beta;
  std::string E = "0,0,0";
  std::string H = "0,0,0";
  double absE = 0.0;
  double absH = 0.0;
  double alpha = 0.0;
  double gbeta = 1.0;
  int m = 0;
  int k = 0;
  std::string u = "1,0";
  double z = 0.0;
  double t = 0.0;
  std::string branch = "first";
  std::size_t nz = 33;
  std::size_t nt = 33;
  std::string family = "j1";
  std::string sign = "plus";
  int mu = 4;
  std::string kind = "E1";
  double wt1 = kPi / 6.0;
  double wt2 = kPi / 3.0;
  std::string in;
  std::string out;
  std::string encoding = "binary";
  std::string norm = "literal";
  std::string gradient = "spatial";
  std::optional<double> tol;
  std::uint64_t seed = 42;
};

class Session {
 public:
  explicit Session(const Options& o) : o_(o) {}

  const config::RunConfig& cfg() {
    if (!cfg_) {
      const auto path = config::resolve_path(o_.config.empty() ? std::nullopt : std::optional(o_.config));
      cfg_ = path ? config::load(*path) : config::default_config();
    }
    return *cfg_;
  }

  std::vector<qfield::QuantizedMode> quantized() {
    std::vector<qfield::QuantizedMode> qs;
    int idx = 0;
    for (const auto& m : cfg().modes) qs.emplace_back(m, cfg().fock_dim, idx++);
    return qs;
  }

  double period() { return 2.0 * kPi / cfg().modes.front().omega(); }

 private:
  const Options& o_;
  std::optional<config::RunConfig> cfg_;
};

// ---------------------------------------------------------------------------

void algebra_check(RunReport& r) {
  using namespace algebra;
  for (auto& c : verify::cyclic_bases().checks) r.check(std::move(c));
  bool homomorphic = true;
  bool inverse = true;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const cplx z1(a, b);
      const cplx z2(b + 1, a - 2);
      homomorphic = homomorphic && complex_to_matrix2(z1) * complex_to_matrix2(z2) == complex_to_matrix2(z1 * z2);
      inverse = inverse && matrix2_to_complex(complex_to_matrix2(z1)) == z1;
    }
  r.check(holds("matrix_homomorphism", "M(z1) M(z2) = M(z1 z2) on integer grid", homomorphic));
  r.check(holds("matrix_inverse", "M^-1(M(z)) = z", inverse));
}

dualsym::FieldPair field_pair(const Options& o) { return dualsym::FieldPair::real(parse_vec3(o.E), parse_vec3(o.H)); }

void dual_transform(const Options& o, RunReport& r) {
  const auto fp = field_pair(o);
  const dualsym::DualAngle th(o.theta);
  const auto out = dualsym::dual_rotate(fp, th);
  r.value("E", vec_text(out.E.real()));
  r.value("H", vec_text(out.H.real()));
  const cplx K = dualsym::complex_invariant(fp);
  const cplx expected = std::polar(1.0, -2.0 * th.value()) * K;
  r.check(at_most("dual_covariance", "K(rotated) = exp(-2i theta) K",
                  rel(std::abs(dualsym::complex_invariant(out) - expected), std::abs(K)), 1e-12));
}

void dual_invariants(const Options& o, RunReport& r) {
  const auto fp = field_pair(o);
  const dualsym::DualAngle th(o.theta);
  const auto inv = dualsym::dual_invariants(fp, th);
  r.value("I1", inv.first);
  r.value("I2", inv.second);
  const cplx K = dualsym::complex_invariant(dualsym::dual_rotate(fp, th));
  const double scale = std::max(1.0, std::abs(K));
  r.check(at_most("rotated_field_invariants", "(I1, I2) = (Re, Im) of K(rotated fields)",
                  std::abs(cplx(inv.first, inv.second) - K) / scale, 1e-12));
}

dualsym::HyperParam hyper_param(const Options& o) {
  return o.beta ? dualsym::HyperParam::from_beta(*o.beta) : dualsym::HyperParam(o.vartheta);
}

void hyper_transform(const Options& o, RunReport& r) {
  const auto fp = field_pair(o);
  const auto hp = hyper_param(o);
  const auto out = dualsym::hyper_rotate(fp, hp);
  r.value("vartheta", hp.value());
  put_cvec(r, "E", out.E);
  put_cvec(r, "H", out.H);
  const cplx K = dualsym::complex_invariant(fp);
  const cplx expected = std::exp(2.0 * hp.value()) * K;
  r.check(at_most("hyper_factor", "K(hyper-rotated) = exp(2 vartheta) K",
                  rel(std::abs(dualsym::complex_invariant(out) - expected), std::abs(expected)), 1e-10));
}

void hyper_invariants(const Options& o, RunReport& r) {
  const auto fp = field_pair(o);
  const auto hp = hyper_param(o);
  const auto inv = dualsym::hyper_invariants(fp, hp);
  r.value("I1", inv.first);
  r.value("I2", inv.second);
  r.value("W", inv.ratio);
  const double W0 = dualsym::hyper_invariants(fp, dualsym::HyperParam(0.0)).ratio;
  if (std::isfinite(W0)) {
    r.check(at_most("w_ratio", "I1''/I2'' = I1/I2 = W", rel(std::abs(inv.ratio - W0), std::abs(W0)), 1e-12));
  }
}

void hyper_boost(const Options& o, RunReport& r) {
  if (!o.beta) throw UsageError("--beta is required");
  const auto m = dualsym::boost_magnitudes(o.absE, o.absH, *o.beta);
  r.value("E", m.E);
  r.value("H", m.H);
}

void gauge_irrep(const Options& o, RunReport& r) {
  const gauge::GaugeElement g(o.alpha, o.gbeta);
  const gauge::IrrepLabel label{o.m, o.k};
  const cplx T = gauge::irrep_Gamma(g, label);
  put_cplx(r, "T", T);
  const cplx T2 = gauge::irrep_Gamma(g * g, label);
  r.check(at_most("representation", "T(g g) = T(g)^2", rel(std::abs(T2 - T * T), std::abs(T * T)), 1e-12));
}

void gauge_transform(const Options& o, RunReport& r) {
  const gauge::GaugeElement g(o.alpha, o.gbeta);
  const auto u = parse_complex_list(o.u);
  const auto out = gauge::gauge_transform(u, g);
  double worst = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    put_cplx(r, "u" + std::to_string(i + 1), out[i]);
    worst = std::max(worst, rel(std::abs(std::abs(out[i]) - std::abs(o.gbeta) * std::abs(u[i])), std::abs(u[i])));
  }
  r.check(at_most("modulus_scaling", "|u'| = |beta| |u|", worst, 1e-12));
}

// ---------------------------------------------------------------------------

void cavity_fields(const Options& o, Session& s, RunReport& r) {
  const auto& modes = s.cfg().modes;
  const auto br = parse_branch(o.branch);
  put_cvec(r, "E", cavity::field_E(o.z, o.t, br, modes));
  put_cvec(r, "H", cavity::field_H(o.z, o.t, br, modes));
  const double L = s.cfg().length;
  const double wall =
      std::max(cavity::field_E(0.0, o.t, br, modes).norm(), cavity::field_E(L, o.t, br, modes).norm());
  r.check(at_most("boundary", "E(0, t) = E(L, t) = 0", wall, 0.0));
}

void cavity_energy(const Options& o, Session& s, RunReport& r) {
  const auto& modes = s.cfg().modes;
  const double H0 = cavity::hamiltonian(o.t, modes);
  r.value("H", H0);
  const double T = s.period();
  double drift = 0.0;
  for (int i = 1; i <= 64; ++i) drift = std::max(drift, std::abs(cavity::hamiltonian(o.t + T * i / 64.0, modes) - H0));
  r.check(at_most("energy_drift", "H constant over one period (relative)", rel(drift, H0), 1e-12));
}

void cavity_residual(const Options& o, Session& s, RunReport& r) {
  const auto& modes = s.cfg().modes;
  const auto br = parse_branch(o.branch);
  const Axis z = Axis::uniform(0.0, s.cfg().length, o.nz);
  const Axis t = Axis::uniform(0.0, s.period(), o.nt);
  const auto coarse = cavity::maxwell_residual(modes, br, z, t);
  const auto fine = cavity::maxwell_residual(modes, br, z.refined(), t.refined());
  r.value("faraday", coarse.faraday);
  r.value("ampere", coarse.ampere);
  r.value("faraday_refined", fine.faraday);
  r.value("ampere_refined", fine.ampere);
  r.check(within("faraday_order", "dE/dz + mu0 dH/dt = 0, residual ratio under halving", coarse.faraday / fine.faraday,
                 3.5, 4.5));
  r.check(within("ampere_order", "dH/dz + eps0 dE/dt = 0, residual ratio under halving", coarse.ampere / fine.ampere,
                 3.5, 4.5));
}

currents::FieldFunctionSet field_functions(const Options& o, Session& s) {
  currents::SignFamily sign;
  if (o.sign == "plus") {
    sign = currents::SignFamily::Plus;
  } else if (o.sign == "minus") {
    sign = currents::SignFamily::Minus;
  } else {
    throw UsageError("sign must be plus or minus");
  }
  return currents::FieldFunctionSet(s.cfg().modes, sign);
}

void currents_evaluate(const Options& o, Session& s, RunReport& r) {
  using currents::Route;
  if (o.mu != 3 && o.mu != 4) throw UsageError("--mu must be 3 or 4");
  const auto ffs = field_functions(o, s);
  const currents::NoetherContext ctx;
  const auto fam = parse_family(o.family);
  const cplx closed = currents::current(ffs, ctx, fam, o.mu, o.z, o.t, Route::ClosedForm);
  const cplx generic = currents::current(ffs, ctx, fam, o.mu, o.z, o.t, Route::Generic);
  put_cplx(r, "j", closed);
  put_cplx(r, "j_generic", generic);
  r.check(at_most("closed_vs_generic", "closed-form current = Lagrangian-derived current (scaled)",
                  std::abs(closed - generic) / currents::current_scale(ffs), 1e-8));
}

void currents_continuity(const Options& o, Session& s, RunReport& r) {
  const auto ffs = field_functions(o, s);
  const Axis z = Axis::uniform(0.0, s.cfg().length, o.nz);
  const Axis t = Axis::uniform(0.0, s.period(), o.nt);
  const auto res = currents::continuity_residual(ffs, currents::NoetherContext{}, z, t, parse_family(o.family));
  r.value("absolute", res.absolute);
  r.check(at_most("continuity", "dj3/dz + (1/(ic)) dj4/dt = 0 (relative)", res.relative, 1e-12));
}

void currents_charge(const Options& o, Session& s, RunReport& r) {
  const auto ffs = field_functions(o, s);
  const currents::NoetherContext ctx;
  const cplx Q = currents::complex_charge(ffs, ctx, o.t);
  const cplx Q1_current = currents::charge_from_current(ffs, ctx, o.t);
  r.value("Q1", Q.real());
  r.value("Q2", Q.imag());
  put_cplx(r, "Q1_from_current", Q1_current);
  double scale = std::abs(Q);
  for (const auto& m : ffs.modes()) {
    scale = std::max(scale, 8.0 * m.mass() * std::pow(m.omega(), 3) * (std::norm(m.C1()) + std::norm(m.C2())) /
                                ffs.constants().c);
  }
  double drift = 0.0;
  const double T = s.period();
  for (int i = 1; i <= 32; ++i) drift = std::max(drift, std::abs(currents::complex_charge(ffs, ctx, o.t + T * i / 32.0) - Q));
  r.check(at_most("charge_drift", "Q = Q1 + iQ2 constant in t (relative)", drift / scale, 1e-10));
  r.check(at_most("charge_from_current", "Q1 = -i (hbar c/e) int j4^1 d^3x (relative)",
                  std::abs(Q1_current - Q.real()) / scale, 1e-8));
}

void currents_spin(const Options& o, Session& s, RunReport& r) {
  if (o.mu != 3 && o.mu != 4) throw UsageError("--mu must be 3 or 4");
  const auto ffs = field_functions(o, s);
  const currents::NoetherContext ctx;
  const double direct = currents::spin_density(ffs, o.mu, o.z, o.t);
  const double noether = currents::spin_density_noether(ffs, ctx, o.mu, o.z, o.t);
  const cplx S = currents::spirality(ffs, o.t);
  r.value("spin_density", direct);
  r.value("spin_density_noether", noether);
  put_cplx(r, "spirality", S);
  const double scale = currents::spirality_scale(ffs);
  r.check(at_most("noether_spin", "S^mu_12 from the Noether tensor = direct form (relative)",
                  std::abs(direct - noether) / std::max({std::abs(direct), std::abs(noether), 1e-300}), 1e-8));
  double drift = 0.0;
  const double T = s.period();
  for (int i = 1; i <= 32; ++i) drift = std::max(drift, std::abs(currents::spirality(ffs, o.t + T * i / 32.0) - S));
  r.check(at_most("spirality_drift", "S^4_3 constant in t (relative)", drift / std::max(std::abs(S), scale), 1e-10));
}

// ---------------------------------------------------------------------------

void qfield_commutators(Session& s, RunReport& r) {
  using namespace qfield;
  const auto& pc = s.cfg().constants;
  const int D = s.cfg().fock_dim;
  const QuantizedMode qm(s.cfg().modes.front(), D);
  Matrix expected = Matrix::Identity(D, D);
  expected(D - 1, D - 1) = 1.0 - D;
  const double defect = (commutator(qm.a().matrix, qm.a_dag().matrix) - expected).cwiseAbs().maxCoeff();
  r.value("dimension", static_cast<double>(D));
  r.value("corner", 1.0 - D);
  r.check(at_most("ladder_commutator", "[a, a+] = I except corner 1 - D", defect,
                  4.0 * std::numeric_limits<double>::epsilon() * D));
  const auto [q, p] = position_momentum(qm, pc);
  const Matrix ihbar = cplx(0.0, pc.hbar) * Matrix::Identity(D, D);
  r.check(at_most("canonical_pq", "[p, q] = i hbar on the interior block",
                  interior_difference(commutator(p.matrix, q.matrix), ihbar, D - 1) / pc.hbar, 1e-12));
  r.check(at_most("canonical_qp", "[q, p] = i hbar on the interior block",
                  interior_difference(commutator(q.matrix, p.matrix), ihbar, D - 1) / pc.hbar, 1e-12));
}

void qfield_operators(const Options& o, Session& s, RunReport& r) {
  using namespace qfield;
  const auto qs = s.quantized();
  const auto op = field_operator(parse_kind(o.kind), o.z, o.t, qs, s.cfg().constants, s.cfg().dimension_cap);
  const Matrix& M = op.matrix;
  r.value("dimension", static_cast<double>(op.dim()));
  put_cplx(r, "vacuum_expectation", M(0, 0));
  const double scale = M.cwiseAbs().maxCoeff();
  r.check(at_most("hermitian", "O = O+ (relative)", rel(hermiticity_violation(M), scale), 1e-12));
  r.check(at_most("vacuum_mean", "<0|O|0> = 0 (relative)", rel(std::abs(M(0, 0)), scale), 1e-12));
}

void qfield_evolve(const Options& o, Session& s, RunReport& r) {
  using namespace qfield;
  const QuantizedMode qm(s.cfg().modes.front(), s.cfg().fock_dim);
  const auto evolved = heisenberg_evolve(qm, o.t);
  const Matrix oracle = heisenberg_by_exponential(qm, o.t);
  const Eigen::Index n = qm.D() - 1;
  const cplx phase = evolved.a.matrix(0, 1) / qm.a().matrix(0, 1);
  put_cplx(r, "phase", phase);
  r.check(at_most("heisenberg", "a(t) = a e^{-iwt} = U+ a U on the interior block",
                  interior_difference(evolved.a.matrix, oracle, n) / qm.a().matrix.cwiseAbs().maxCoeff(), 1e-8));
}

void qfield_contradiction(const Options& o, Session& s, RunReport& r) {
  using namespace qfield;
  const QuantizedMode qm(s.cfg().modes.front(), s.cfg().fock_dim);
  const double w = qm.mode().omega();
  const auto rep = cosine_ansatz_contradiction(qm, o.wt1 / w, o.wt2 / w);
  r.value("omega_t1", rep.omega_t1);
  r.value("omega_t2", rep.omega_t2);
  r.value("tan1", rep.tan1);
  r.value("tan2", rep.tan2);
  r.value("lhs_drift", rep.lhs_drift);
  r.value("contradiction", rep.contradiction ? "true" : "false");
  r.check(at_most("lhs_constant", "(a+ - a)^{-1}(a+ + a) independent of t (relative)",
                  rel(rep.lhs_drift, rep.lhs_magnitude), 1e-12));
  r.check(holds("contradiction", "constant left side against tan(w t1) != tan(w t2)", rep.contradiction));
}

// ---------------------------------------------------------------------------

quat::Grid4 cavity_grid(const Options& o, Session& s) {
  const double L = s.cfg().length;
  const double h = L / static_cast<double>(o.nz - 1);
  return {{0.0, h, 3}, {0.0, h, 3}, Axis::uniform(0.0, L, o.nz), Axis::uniform(0.0, s.period(), o.nt)};
}

snapshot::Snapshot input_snapshot(const Options& o, Session& s) {
  if (!o.in.empty()) return snapshot::read(o.in);
  const auto g = cavity_grid(o, s);
  return snapshot::from_components(g, quat::embed_cavity(g, s.cfg().modes));
}

snapshot::Encoding parse_encoding(const std::string& e) {
  if (e == "binary") return snapshot::Encoding::Binary;
  if (e == "csv") return snapshot::Encoding::Csv;
  throw UsageError("encoding must be binary or csv");
}

bool same(const quat::FieldComponents& a, const quat::FieldComponents& b) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (a.E[i] != b.E[i] || a.H[i] != b.H[i] || a.je[i] != b.je[i] || a.jg[i] != b.jg[i] ||
        a.rho_e[i] != b.rho_e[i] || a.rho_g[i] != b.rho_g[i])
      return false;
  }
  return true;
}

void quat_assemble(const Options& o, Session& s, RunReport& r) {
  const auto snap = input_snapshot(o, s);
  const auto comps = snapshot::to_components(snap);
  const auto fq = quat::assemble(snap.grid, comps);
  r.value("nodes", static_cast<double>(snap.grid.size()));
  if (!o.out.empty()) {
    snapshot::write(o.out, snapshot::from_components(snap.grid, comps), parse_encoding(o.encoding));
    r.value("written", o.out);
  }
  r.check(holds("pack_round_trip", "decompose(assemble(c)) = c exactly", same(quat::decompose(fq), comps)));
}

void quat_residual(const Options& o, Session& s, RunReport& r) {
  const auto& pc = s.cfg().constants;
  const auto snap = input_snapshot(o, s);
  const auto res = quat::generalized_maxwell_residual(quat::assemble(snap.grid, snapshot::to_components(snap)), pc);
  r.value("curl_E", res.a);
  r.value("curl_H", res.b);
  r.value("div_E", res.c);
  r.value("div_H", res.d);
  if (o.in.empty()) {
    Options fine = o;
    fine.nz = 2 * o.nz - 1;
    fine.nt = 2 * o.nt - 1;
    const auto g = cavity_grid(fine, s);
    const auto rf = quat::generalized_maxwell_residual(quat::assemble(g, quat::embed_cavity(g, s.cfg().modes)), pc);
    r.check(within("curl_E_order", "curl E + mu0 dH/dt + j_g = 0, residual ratio under halving", res.a / rf.a, 3.5,
                   4.5));
    r.check(within("curl_H_order", "curl H - eps0 dE/dt - j_e = 0, residual ratio under halving", res.b / rf.b, 3.5,
                   4.5));
    r.check(at_most("div_free", "div E = rho_e and div H = rho_g with no sources", std::max(res.c, res.d), 0.0));
  } else if (o.tol) {
    r.check(at_most("residual", "generalized Maxwell system satisfied", std::max({res.a, res.b, res.c, res.d}), *o.tol));
  }
}

void quat_gradient(const Options& o, Session& s, RunReport& r) {
  const auto& pc = s.cfg().constants;
  const auto snap = input_snapshot(o, s);
  quat::Normalization norm;
  if (o.norm == "literal") {
    norm = quat::Normalization::Literal;
  } else if (o.norm == "rs") {
    norm = quat::Normalization::RiemannSilberstein;
  } else {
    throw UsageError("norm must be literal or rs");
  }
  quat::GradientMode mode;
  if (o.gradient == "spatial") {
    mode = quat::GradientMode::Spatial;
  } else if (o.gradient == "spacetime") {
    mode = quat::GradientMode::Spacetime;
  } else {
    throw UsageError("mode must be spatial or spacetime");
  }
  const auto phi = quat::Biquaternion3Field::from_components(snap.grid, snapshot::to_components(snap), norm, pc);
  const auto grad = quat::biquat_gradient(phi, mode, pc);
  r.value("scalar_max", grad.max_abs_scalar());
  r.value("vector_max", grad.max_abs_vector());
  if (o.tol) r.check(at_most("gradient", "grad Phi = 0", grad.max_abs(), *o.tol));
}

void verify_all(const Options& o, RunReport& r) {
  for (const auto& crit : verify::run_all(o.seed)) {
    const std::string tag = "criterion_" + std::to_string(crit.id);
    r.value(tag, crit.title + (crit.pass() ? ": pass" : ": fail"));
    for (auto c : crit.checks) {
      c.name = tag + "." + c.name;
      r.check(std::move(c));
    }
  }
}

}  // namespace

int run(int argc, char** argv) { return run(argc, argv, std::cout, std::cerr); }

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dual-symmetric field toolkit: transformations, cavity fields, currents, quantization and "
               "quaternion Maxwell residuals"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "csv"}));
  app.add_option("--config", o.config, "INI configuration file (else $DUALFIELD_CONFIG)");
  app.add_flag("--timing", o.timing, "Append wall time to the report");

  std::string command;
  std::function<void(RunReport&)> action;
  Session session(o);

  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help, auto fn) {
    auto* sub = group->add_subcommand(name, help);
    sub->callback([&, sub, group, fn] {
      command = group->get_name() + " " + sub->get_name();
      action = fn;
    });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };
  auto fields_opts = [&](CLI::App* sub) {
    sub->add_option("--E", o.E, "E as x,y,z");
    sub->add_option("--H", o.H, "H as x,y,z");
  };
  auto zt_opts = [&](CLI::App* sub) {
    sub->add_option("--z", o.z, "Position in the cavity");
    sub->add_option("--t", o.t, "Time");
  };
  auto grid_opts = [&](CLI::App* sub) {
    sub->add_option("--nz", o.nz, "Samples along z")->check(CLI::Range(3, 1 << 16));
    sub->add_option("--nt", o.nt, "Samples along t")->check(CLI::Range(3, 1 << 16));
  };
  auto current_opts = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "j1, j2 or total");
    sub->add_option("--sign", o.sign, "plus or minus field-function family");
  };
  auto snapshot_opts = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "Snapshot base path (default: embedded cavity solution)");
    grid_opts(sub);
  };

  auto* alg = group("algebra", "Matrix bases and quaternion tables");
  leaf(alg, "check", "Check cyclic bases and multiplication tables", [](RunReport& r) { algebra_check(r); });

  auto* dual = group("dual", "Dual transformation");
  auto* dt = leaf(dual, "transform", "Rotate (E, H) by theta", [&](RunReport& r) { dual_transform(o, r); });
  auto* di = leaf(dual, "invariants", "Invariants at angle theta", [&](RunReport& r) { dual_invariants(o, r); });
  for (auto* sub : {dt, di}) {
    sub->add_option("--theta", o.theta, "Rotation angle");
    fields_opts(sub);
  }

  auto* hyp = group("hyper", "Hyperbolic dual transformation");
  auto* ht = leaf(hyp, "transform", "Hyperbolic rotation of (E, H)", [&](RunReport& r) { hyper_transform(o, r); });
  auto* hi = leaf(hyp, "invariants", "Hyperbolic invariants and W", [&](RunReport& r) { hyper_invariants(o, r); });
  for (auto* sub : {ht, hi}) {
    sub->add_option("--vartheta", o.vartheta, "Hyperbolic parameter");
    sub->add_option("--beta", o.beta, "Velocity ratio, overrides --vartheta");
    fields_opts(sub);
  }
  auto* hb = leaf(hyp, "boost", "Field magnitudes after a boost", [&](RunReport& r) { hyper_boost(o, r); });
  hb->add_option("--beta", o.beta, "Velocity ratio")->required();
  hb->add_option("--absE", o.absE, "|E|")->required();
  hb->add_option("--absH", o.absH, "|H|")->required();

  auto* gau = group("gauge", "Gauge group U1 x R");
  auto* gi = leaf(gau, "irrep", "Irreducible representation value", [&](RunReport& r) { gauge_irrep(o, r); });
  gi->add_option("--m", o.m, "U1 label");
  gi->add_option("--k", o.k, "R label");
  auto* gt = leaf(gau, "transform", "Transform field functions", [&](RunReport& r) { gauge_transform(o, r); });
  gt->add_option("--u", o.u, "Values as re,im;re,im;...");
  for (auto* sub : {gi, gt}) {
    sub->add_option("--alpha", o.alpha, "Phase parameter");
    sub->add_option("--beta", o.gbeta, "Scale parameter");
  }

  auto* cav = group("cavity", "Classical cavity solutions");
  auto* cf = leaf(cav, "fields", "E and H at (z, t)", [&](RunReport& r) { cavity_fields(o, session, r); });
  zt_opts(cf);
  cf->add_option("--branch", o.branch, "first or second");
  auto* ce = leaf(cav, "energy", "Hamiltonian at t", [&](RunReport& r) { cavity_energy(o, session, r); });
  ce->add_option("--t", o.t, "Time");
  auto* cr = leaf(cav, "residual", "Maxwell residual and its order", [&](RunReport& r) { cavity_residual(o, session, r); });
  cr->add_option("--branch", o.branch, "first or second");
  grid_opts(cr);

  auto* cur = group("currents", "Noether currents, charges and spin");
  auto* ev = leaf(cur, "evaluate", "Current component at (z, t)", [&](RunReport& r) { currents_evaluate(o, session, r); });
  zt_opts(ev);
  current_opts(ev);
  ev->add_option("--mu", o.mu, "Component 3 or 4");
  auto* cc = leaf(cur, "continuity", "Continuity residual", [&](RunReport& r) { currents_continuity(o, session, r); });
  current_opts(cc);
  grid_opts(cc);
  auto* ch = leaf(cur, "charge", "Complex charge at t", [&](RunReport& r) { currents_charge(o, session, r); });
  ch->add_option("--t", o.t, "Time");
  ch->add_option("--sign", o.sign, "plus or minus field-function family");
  auto* sp = leaf(cur, "spin", "Spin density and spirality", [&](RunReport& r) { currents_spin(o, session, r); });
  zt_opts(sp);
  sp->add_option("--mu", o.mu, "Component 3 or 4");
  sp->add_option("--sign", o.sign, "plus or minus field-function family");

  auto* qf = group("qfield", "Quantized cavity field");
  leaf(qf, "commutators", "Ladder and canonical commutators", [&](RunReport& r) { qfield_commutators(session, r); });
  auto* qo = leaf(qf, "operators", "Field operator Hermiticity", [&](RunReport& r) { qfield_operators(o, session, r); });
  zt_opts(qo);
  qo->add_option("--kind", o.kind, "E1, H1, E2, H2, E_TOTAL or H_TOTAL");
  auto* qe = leaf(qf, "evolve", "Heisenberg evolution", [&](RunReport& r) { qfield_evolve(o, session, r); });
  qe->add_option("--t", o.t, "Time");
  auto* qc = leaf(qf, "contradiction", "Cosine-ansatz check", [&](RunReport& r) { qfield_contradiction(o, session, r); });
  qc->add_option("--wt1", o.wt1, "First probe phase w t");
  qc->add_option("--wt2", o.wt2, "Second probe phase w t");

  auto* qm = group("quat", "Quaternion Maxwell system");
  auto* qa = leaf(qm, "assemble", "Pack components into quaternions", [&](RunReport& r) { quat_assemble(o, session, r); });
  snapshot_opts(qa);
  qa->add_option("--out", o.out, "Write the components as a snapshot");
  qa->add_option("--encoding", o.encoding, "binary or csv");
  auto* qr = leaf(qm, "residual", "Generalized Maxwell residual", [&](RunReport& r) { quat_residual(o, session, r); });
  snapshot_opts(qr);
  qr->add_option("--tol", o.tol, "Pass threshold for snapshot input");
  auto* qg = leaf(qm, "gradient", "Biquaternion gradient of Phi", [&](RunReport& r) { quat_gradient(o, session, r); });
  snapshot_opts(qg);
  qg->add_option("--norm", o.norm, "literal or rs");
  qg->add_option("--mode", o.gradient, "spatial or spacetime");
  qg->add_option("--tol", o.tol, "Pass threshold");

  auto* ver = group("verify", "Acceptance property suite");
  auto* va = leaf(ver, "all", "Run every criterion", [&](RunReport& r) { verify_all(o, r); });
  va->add_option("--seed", o.seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  if (!action) {
    err << "no command selected\n";
    return kUsage;
  }

  std::string inputs;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--timing") continue;
    inputs += std::string(argv[i]) + '\n';
  }
  RunReport report(command, inputs);
  const auto start = std::chrono::steady_clock::now();
  try {
    action(report);
  } catch (const config::ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kBadConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (o.timing) {
    report.set_wall_time(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  report.write(out, o.format == "csv" ? report::Format::Csv : report::Format::Text);
  return report.all_pass() ? kPass : kCheckFailed;
}

}  // namespace dualfield::cli
