#include "landau/marginals.hpp"

#include <cmath>
#include <stdexcept>

#include "landau/jet.hpp"
#include "landau/specialfn.hpp"

namespace landau {

using specialfn::hermite;
using specialfn::laguerre;

namespace {

void check_indices(int n, int l) {
  if (n < 0 || l < 0) throw std::domain_error("marginal: indices must be nonnegative");
}

double factorial_ratio(int lo, int hi) {  // lo!/hi!
  return std::exp(std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0));
}

// (min!/max!) r^{2|n-l|} e^{-r^2} [L^{|n-l|}_min(r^2)]^2
double radial_shape(int n, int l, double r2) {
  const int lo = std::min(n, l), k = std::abs(n - l);
  const double L = laguerre(lo, k, r2);
  return factorial_ratio(lo, lo + k) * std::pow(r2, k) * std::exp(-r2) * L * L;
}

}  // namespace

DimensionlessVars dimensionless(const PhasePoint& pt, const Params& params) {
  const double g = params.gamma(), mw = params.m() * params.omega();
  DimensionlessVars d;
  d.rho2 = (pt.q1 * pt.q1 + pt.q2 * pt.q2) / (g * g);
  d.zeta2 = g * g * (pt.p1 * pt.p1 + pt.p2 * pt.p2) / (4 * params.hbar() * params.hbar());
  d.tau_plus = (mw * pt.q1 + 2 * pt.p2) / (mw * g);
  d.tau_minus = (mw * pt.q1 - 2 * pt.p2) / (mw * g);
  return d;
}

double marginal_q1q2(int n, int l, double q1, double q2, const Params& params) {
  check_indices(n, l);
  const double hg = params.hbar() / params.gamma();
  return 4 * M_PI * hg * hg * radial_shape(n, l, dimensionless({q1, q2, 0, 0}, params).rho2);
}

double marginal_q1p2(int n, int l, double q1, double p2, const Params& params) {
  check_indices(n, l);
  const DimensionlessVars d = dimensionless({q1, 0, 0, p2}, params);
  const double H = hermite(n, d.tau_minus / M_SQRT2) * hermite(l, d.tau_plus / M_SQRT2);
  const double pre = 4 * M_PI * params.hbar() /
                     std::exp(std::lgamma(n + 1.0) + std::lgamma(l + 1.0) + (n + l) * std::log(2.0));
  return pre * std::exp(-0.5 * (d.tau_plus * d.tau_plus + d.tau_minus * d.tau_minus)) * H * H;
}

double marginal_q2p1(int n, int l, double q2, double p1, const Params& params) {
  return marginal_q1p2(l, n, q2, p1, params);
}

double marginal_axial_candidate(Plane plane, int n, int l, double u, double v, const Params& params) {
  check_indices(n, l);
  if (plane == Plane::q1p2 || plane == Plane::q2p1)
    throw std::invalid_argument("marginal_axial_candidate: plane is not axially symmetric");
  const auto [i, j] = plane_axes(plane);
  const double ui = axis_unit(i, params), uj = axis_unit(j, params);
  const double r2 = u * u / (ui * ui) + v * v / (uj * uj);
  const double h = params.h();
  return h * h / (M_PI * ui * uj) * radial_shape(n, l, r2);
}

double marginal_closed(Plane plane, int n, int l, double u, double v, const Params& params) {
  switch (plane) {
    case Plane::q1q2: return marginal_q1q2(n, l, u, v, params);
    case Plane::q1p2: return marginal_q1p2(n, l, u, v, params);
    case Plane::q2p1: return marginal_q2p1(n, l, u, v, params);
    default: return marginal_axial_candidate(plane, n, l, u, v, params);
  }
}

MarginalResult marginal_numeric(const WignerIndex& idx, Plane plane, double u, double v, const Params& params,
                                int quad_order, double tol) {
  idx.validate();
  if (!idx.diagonal()) throw std::domain_error("marginal_numeric: diagonal index required");
  if (quad_order < 20 + 4 * std::max(idx.n1, idx.l1))
    throw std::domain_error("marginal_numeric: quad_order must be at least 20 + 4 max(n, l)");
  const QuadResult r = integrate_plane_checked([&](const PhasePoint& x) { return eval_wigner(idx, x, params); },
                                               complement(plane), plane_point(plane, u, v), params, quad_order, tol);
  return {r.value.real(), r.change, r.warning};
}

cplx marginal_generating_q(const GenParams& gp, double q1, double q2, const Params& params) {
  const double g = params.gamma(), hg = params.hbar() / g;
  const cplx Z(q1 / g, q2 / g), Zb = std::conj(Z), I(0, 1);
  const cplx Qa = std::exp(-gp.alpha1 * gp.alpha2 + I * (gp.alpha1 * Zb - gp.alpha2 * Z));
  const cplx Qb = std::exp(-gp.beta1 * gp.beta2 - I * (gp.beta1 * Z - gp.beta2 * Zb));
  return M_PI * hg * hg * std::exp(-std::norm(Z)) * Qa * Qb;
}

double marginal_from_generating(int n, int l, double q1, double q2, const Params& params) {
  check_indices(n, l);
  const double g = params.gamma(), hg = params.hbar() / g;
  const cplx Z(q1 / g, q2 / g), Zb = std::conj(Z), I(0, 1);
  const int K = 2 * (n + l);
  const Jet4 a1 = Jet4::variable(K, 0, 0.0), b1 = Jet4::variable(K, 1, 0.0);
  const Jet4 a2 = Jet4::variable(K, 2, 0.0), b2 = Jet4::variable(K, 3, 0.0);
  const Jet4 h = (a1 * a2 + b1 * b2) * cplx(-1.0) + (a1 * Zb - a2 * Z) * I - (b1 * Z - b2 * Zb) * I;
  const cplx c = exp(h).coeff({n, n, l, l});
  // derivative = coefficient * (n!)^2 (l!)^2
  const double fact = std::exp(std::lgamma(n + 1.0) + std::lgamma(l + 1.0));
  return (4 * fact * M_PI * hg * hg * std::exp(-std::norm(Z)) * c).real();
}

cplx wavefunction(int n_r, int j, double q1, double q2, const Params& params) {
  if (n_r < 0) throw std::domain_error("wavefunction: n_r must be nonnegative");
  const double g = params.gamma();
  const double rho2 = (q1 * q1 + q2 * q2) / (g * g);
  const int k = std::abs(j);
  const double norm = std::sqrt(factorial_ratio(n_r, n_r + k) / M_PI) / g;
  const double theta = std::atan2(q2, q1);
  return norm * std::pow(rho2, 0.5 * k) * std::polar(1.0, j * theta) * std::exp(-0.5 * rho2) *
         laguerre(n_r, k, rho2);
}

std::pair<int, int> radial_quantum_numbers(int n, int l) {
  check_indices(n, l);
  return {std::min(n, l), l - n};
}

}  // namespace landau
