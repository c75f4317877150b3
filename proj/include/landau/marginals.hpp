#pragma once

#include "landau/phasespace.hpp"
#include "landau/quad.hpp"
#include "landau/wigner.hpp"

namespace landau {

/// Dimensionless quantities: rho^2 = |q|^2/gamma^2, zeta^2 = gamma^2 |p|^2/(4 hbar^2),
/// tau_pm = (m omega q1 pm 2 p2)/(m omega gamma).
struct DimensionlessVars {
  double rho2 = 0.0, zeta2 = 0.0, tau_plus = 0.0, tau_minus = 0.0;
};
DimensionlessVars dimensionless(const PhasePoint& pt, const Params& params);

/// 4 pi (min!/max!) (hbar/gamma)^2 rho^{2|n-l|} e^{-rho^2} [L^{|n-l|}_{min}(rho^2)]^2
double marginal_q1q2(int n, int l, double q1, double q2, const Params& params);
/// 4 pi hbar/(n! l! 2^{n+l}) e^{-(tau+^2 + tau-^2)/2} [H_n(tau-/sqrt2) H_l(tau+/sqrt2)]^2
double marginal_q1p2(int n, int l, double q1, double p2, const Params& params);
/// marginal_q1p2 with the indices exchanged
double marginal_q2p1(int n, int l, double q2, double p1, const Params& params);

/// Candidate closed forms on the four axially symmetric planes: the q1q2 shape
/// with the plane's own radius, r^2 = u^2/unit_u^2 + v^2/unit_v^2, and
/// prefactor h^2/(pi unit_u unit_v). Verified against quadrature, not assumed.
double marginal_axial_candidate(Plane plane, int n, int l, double u, double v, const Params& params);

/// Any plane: the closed form where one is known (q1q2, q1p2, q2p1), else the candidate.
double marginal_closed(Plane plane, int n, int l, double u, double v, const Params& params);

struct MarginalResult {
  double value = 0.0;
  double change = 0.0;  // against quad_order + 8
  bool warning = false;
};
/// Gauss–Hermite integral of eval_wigner over the complementary plane.
/// quad_order must be at least 20 + 4 max(n, l).
MarginalResult marginal_numeric(const WignerIndex& idx, Plane plane, double u, double v, const Params& params,
                                int quad_order = 40, double tol = 1e-10);

/// pi (hbar/gamma)^2 e^{-rho^2} Q_alpha Q_beta
cplx marginal_generating_q(const GenParams& gp, double q1, double q2, const Params& params);
/// 4/(n! l!) (d_a1 d_b1)^n (d_a2 d_b2)^l M at 0, by power-series extraction.
double marginal_from_generating(int n, int l, double q1, double q2, const Params& params);

/// Normalised symmetric-gauge wavefunction psi_{n_r j}(r, theta).
cplx wavefunction(int n_r, int j, double q1, double q2, const Params& params);
/// (n_r, j) of the Landau state W_nl: n_r = min(n, l), j = l - n.
std::pair<int, int> radial_quantum_numbers(int n, int l);

}  // namespace landau
