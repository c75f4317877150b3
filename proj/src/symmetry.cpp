#include "landau/symmetry.hpp"

#include <cmath>
#include <stdexcept>

namespace landau {

std::string discrete_name(DiscreteKind kind) {
  switch (kind) {
    case DiscreteKind::space_inversion: return "space_inversion";
    case DiscreteKind::time_reversal: return "time_reversal";
    case DiscreteKind::parity: return "parity";
    case DiscreteKind::swap: return "swap";
  }
  throw std::invalid_argument("discrete_name: bad kind");
}

const std::vector<DiscreteKind>& all_discrete() {
  static const std::vector<DiscreteKind> kinds = {DiscreteKind::space_inversion, DiscreteKind::time_reversal,
                                                  DiscreteKind::parity, DiscreteKind::swap};
  return kinds;
}

DiscreteKind parse_discrete(const std::string& name) {
  for (DiscreteKind k : all_discrete())
    if (discrete_name(k) == name) return k;
  throw std::invalid_argument("unknown discrete transform '" + name + "'");
}

PhasePoint apply_discrete(DiscreteKind kind, const PhasePoint& pt) {
  switch (kind) {
    case DiscreteKind::space_inversion: return {-pt.q1, -pt.q2, pt.p1, pt.p2};
    case DiscreteKind::time_reversal: return {pt.q1, pt.q2, -pt.p1, -pt.p2};
    case DiscreteKind::parity: return {-pt.q1, -pt.q2, -pt.p1, -pt.p2};
    case DiscreteKind::swap: return {pt.q2, pt.q1, pt.p2, pt.p1};
  }
  throw std::invalid_argument("apply_discrete: bad kind");
}

double DiscreteResiduals::max() const {
  return std::max({space_inversion, time_reversal, parity, swap});
}

DiscreteResiduals check_discrete(int n, int l, const std::vector<PhasePoint>& pts, const Params& params) {
  const WignerIndex nl = WignerIndex::diag(n, l), ln = WignerIndex::diag(l, n);
  DiscreteResiduals r;
  for (const PhasePoint& x : pts) {
    const cplx w = eval_wigner(nl, x, params), wt = eval_wigner(ln, x, params);
    auto at = [&](DiscreteKind k) { return eval_wigner(nl, apply_discrete(k, x), params); };
    r.space_inversion = std::max(r.space_inversion, std::abs(at(DiscreteKind::space_inversion) - wt));
    r.time_reversal = std::max(r.time_reversal, std::abs(at(DiscreteKind::time_reversal) - wt));
    r.parity = std::max(r.parity, std::abs(at(DiscreteKind::parity) - w));
    r.swap = std::max(r.swap, std::abs(at(DiscreteKind::swap) - wt));
  }
  return r;
}

bool symplectic_C_is_real(const SymplecticParams& sp, const Params& params, double tol) {
  return symplectic_C(sp, params).imag().cwiseAbs().maxCoeff() <= tol;
}

InvarianceResidual check_symplectic_invariance(const WignerIndex& idx, const SymplecticParams& sp,
                                               const std::vector<PhasePoint>& pts, const Params& params) {
  idx.validate();
  if (!idx.diagonal()) throw std::domain_error("check_symplectic_invariance: diagonal index required");
  sp.validate();
  InvarianceResidual r;
  const bool real = symplectic_C_is_real(sp, params);
  const Eigen::Matrix4d C = symplectic_C(sp, params).real();
  if (real) r.matrix = 0.0;
  for (const PhasePoint& y : pts) {
    const LadderPoint x = to_ladder(y, params);
    const cplx w = eval_wigner_ladder(idx, x);
    r.ladder = std::max(r.ladder, std::abs(eval_wigner_ladder(idx, apply_ladder_scaling(sp, x)) - w));
    if (real) {
      const PhasePoint yc = PhasePoint::from_vec(C * y.vec());
      r.matrix = std::max(*r.matrix, std::abs(eval_wigner(idx, yc, params) - w));
    }
  }
  return r;
}

double check_hamiltonian_invariance(const SymplecticParams& sp, const std::vector<PhasePoint>& pts,
                                    const Params& params) {
  double r = 0.0;
  for (const PhasePoint& y : pts) {
    const LadderPoint x = to_ladder(y, params), xs = apply_ladder_scaling(sp, x);
    const cplx h = x.abar * x.a, hs = xs.abar * xs.a;
    const cplx j = x.bbar * x.b - h, js = xs.bbar * xs.b - hs;
    r = std::max({r, std::abs(hs - h), std::abs(js - j)});
    // the ladder products really are the physical quantities
    r = std::max({r, std::abs(h - landau_energy_reduced(y, params)), std::abs(j - angular_momentum_reduced(y, params))});
  }
  return r;
}

PhasePoint translate(const PhasePoint& pt, double c1, double c2, const Params& params) {
  const double k = params.kappa();
  return {pt.q1 + c1, pt.q2 + c2, pt.p1 - k * c2, pt.p2 + k * c1};
}

std::vector<PhasePoint> random_points(std::mt19937& rng, int count, const Params& params, double r) {
  std::uniform_real_distribution<double> u(-r, r);
  std::vector<PhasePoint> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    Eigen::Vector4d y;
    for (int i = 0; i < 4; ++i) y[i] = u(rng) * axis_unit(i, params);
    pts.push_back(PhasePoint::from_vec(y));
  }
  return pts;
}

}  // namespace landau
