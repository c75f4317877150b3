#include "landau/phasespace.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace landau {

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
const cplx kI{0.0, 1.0};
}  // namespace

Params::Params(double m, double omega, double hbar) : m_(m), omega_(omega), hbar_(hbar) {
  if (!(m > 0.0) || !(omega > 0.0) || !(hbar > 0.0) || !std::isfinite(m) || !std::isfinite(omega) ||
      !std::isfinite(hbar))
    throw std::invalid_argument("Params: m, omega and hbar must be positive and finite");
}

double Params::gamma() const { return std::sqrt(2.0 * hbar_ / (m_ * omega_)); }

double Params::h() const { return 2.0 * std::numbers::pi * hbar_; }

void SymplecticParams::validate() const {
  if (u == 0.0 || v == 0.0) throw std::invalid_argument("SymplecticParams: u and v must be nonzero");
}

ComplexPoint to_complex(const PhasePoint& pt) {
  ComplexPoint c;
  c.z = cplx(pt.q1, pt.q2) / kSqrt2;
  c.zbar = cplx(pt.q1, -pt.q2) / kSqrt2;
  c.p = cplx(pt.p1, -pt.p2) / kSqrt2;
  c.pbar = cplx(pt.p1, pt.p2) / kSqrt2;
  return c;
}

PhasePoint from_complex(const ComplexPoint& c) {
  const cplx q1 = (c.z + c.zbar) / kSqrt2;
  const cplx q2 = (c.z - c.zbar) / (kI * kSqrt2);
  const cplx p1 = (c.p + c.pbar) / kSqrt2;
  const cplx p2 = (c.pbar - c.p) / (kI * kSqrt2);
  return {q1.real(), q2.real(), p1.real(), p2.real()};
}

LadderPoint to_ladder(const PhasePoint& pt, const Params& params) {
  const ComplexPoint c = to_complex(pt);
  const double mw = params.m() * params.omega();
  const double pref = kSqrt2 / (mw * params.gamma());
  LadderPoint x;
  x.a = pref * (c.pbar - kI * (0.5 * mw) * c.z);
  x.b = pref * (-c.p + kI * (0.5 * mw) * c.zbar);
  x.abar = std::conj(x.a);
  x.bbar = std::conj(x.b);
  return x;
}

PhasePoint from_ladder(const LadderPoint& x, const Params& params) {
  const double g = params.gamma();
  const double mwg = params.m() * params.omega() * g;
  ComplexPoint c;
  c.z = kI * g / kSqrt2 * (x.a + x.bbar);
  c.zbar = -kI * g / kSqrt2 * (x.abar + x.b);
  c.p = mwg / (2.0 * kSqrt2) * (x.abar - x.b);
  c.pbar = mwg / (2.0 * kSqrt2) * (x.a - x.bbar);
  return from_complex(c);
}

Matrix4c ladder_to_canonical_matrix(const Params& params) {
  const double k = params.kappa();
  Matrix4c B;
  // columns: a, b, abar, bbar
  B << cplx(0, 1), cplx(0, -1), cplx(0, -1), cplx(0, 1),  //
      1, 1, 1, 1,                                         //
      k, -k, k, -k,                                       //
      cplx(0, -k), cplx(0, -k), cplx(0, k), cplx(0, k);
  return B * (0.5 * params.gamma());
}

Matrix4c ladder_scaling_matrix(const SymplecticParams& sp) {
  sp.validate();
  Matrix4c A = Matrix4c::Zero();
  A(0, 0) = sp.u * std::exp(kI * sp.xi);
  A(1, 1) = sp.v * std::exp(kI * sp.eta);
  A(2, 2) = std::exp(-kI * sp.xi) / sp.u;
  A(3, 3) = std::exp(-kI * sp.eta) / sp.v;
  return A;
}

Matrix4c symplectic_C(const SymplecticParams& sp, const Params& params) {
  const Matrix4c B = ladder_to_canonical_matrix(params);
  Eigen::FullPivLU<Matrix4c> lu(B);
  if (!lu.isInvertible()) throw std::logic_error("symplectic_C: singular ladder matrix");
  return B * ladder_scaling_matrix(sp) * lu.inverse();
}

Matrix4c standard_symplectic_form() {
  Matrix4c J = Matrix4c::Zero();
  J(0, 2) = 1;
  J(1, 3) = 1;
  J(2, 0) = -1;
  J(3, 1) = -1;
  return J;
}

LadderPoint apply_ladder_scaling(const SymplecticParams& sp, const LadderPoint& x) {
  sp.validate();
  LadderPoint y;
  y.a = sp.u * std::exp(kI * sp.xi) * x.a;
  y.b = sp.v * std::exp(kI * sp.eta) * x.b;
  y.abar = std::exp(-kI * sp.xi) / sp.u * x.abar;
  y.bbar = std::exp(-kI * sp.eta) / sp.v * x.bbar;
  return y;
}

double landau_energy_reduced(const PhasePoint& pt, const Params& params) {
  const double k = params.kappa();
  const double s1 = pt.p1 + k * pt.q2;
  const double s2 = pt.p2 - k * pt.q1;
  return (s1 * s1 + s2 * s2) / (4.0 * params.hbar() * k);
}

double angular_momentum_reduced(const PhasePoint& pt, const Params& params) {
  const double k = params.kappa();
  const double s1 = pt.p1 - k * pt.q2;
  const double s2 = pt.p2 + k * pt.q1;
  return (s1 * s1 + s2 * s2) / (4.0 * params.hbar() * k) - landau_energy_reduced(pt, params);
}

double ground_exponent(const PhasePoint& pt, const Params& params) {
  const double k = params.kappa();
  const double hb = params.hbar();
  return (k * (pt.q1 * pt.q1 + pt.q2 * pt.q2)) / hb + (pt.p1 * pt.p1 + pt.p2 * pt.p2) / (k * hb);
}

}  // namespace landau
