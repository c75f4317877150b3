#pragma once

#include <string>

#include "landau/moyal.hpp"
#include "landau/quad.hpp"
#include "landau/wigner.hpp"

namespace landau {

/// U = exp(i theta chi(q)), theta = charge/(c hbar).
struct GaugeFn {
  static constexpr int max_degree = 6;
  PhasePoly chi;
  Rational theta{1};
  /// chi must depend on q only, have real coefficients and degree <= max_degree.
  void validate() const;
  int degree() const { return chi.total_degree(); }
  /// +-(B/2) q1 q2 with charge/c = 1: takes the symmetric potential to a
  /// Landau-gauge one (A = (0, B q1) for sign +1).
  static GaugeFn symmetric_to_landau(const Params& params, int sign = 1);
};

/// Parses sums of products like "c*q1*q2 - 0.5*q1^2 + 3" into a polynomial in
/// q1, q2; decimals are read exactly, `c` takes the given value.
/// Throws std::invalid_argument on malformed input or p variables.
PhasePoly parse_gauge_poly(const std::string& text, const Rational& c);

/// U * p_j * U^-1 = p_j - theta hbar d_j chi, j = 1 or 2
PhasePoly conjugate_momentum(const GaugeFn& g, int component, const Params& params);
/// U * f * U^-1 for polynomial f, exact.
PhasePoly conjugate_function(const GaugeFn& g, const PhasePoly& f, const Params& params);
/// Same for GaussPoly input; throws unsupported_class unless f is a polynomial.
PhasePoly conjugate_function(const GaugeFn& g, const PhaseGaussPoly& f, const Params& params);

/// H_L in the symmetric gauge, ((p1 + kappa q2)^2 + (p2 - kappa q1)^2)/(2m), exact.
PhasePoly landau_hamiltonian_poly(const Params& params);
/// (1/2m) sum_j (p_j - A_j - theta hbar d_j chi)^2 expanded pointwise.
PhasePoly gauge_hamiltonian_expected(const GaugeFn& g, const Params& params);

/// Gauge-transformed Wigner function norm * shape in canonical variables.
/// For chi of degree <= 2, U * W * U^-1 = W(q, p - theta hbar grad chi), which
/// is again a polynomial times a Gaussian; higher degrees throw unsupported_class.
struct GaugedWigner {
  Surd norm;
  PhaseGaussPoly shape;
  cplx eval(const PhasePoint& pt) const;
};
GaugedWigner gauge_wigner(const GaugeFn& g, const WignerIndex& idx, const Params& params);
/// The untransformed W in canonical variables (chi = 0).
GaugedWigner canonical_wigner(const WignerIndex& idx, const Params& params);

/// Truncated sum_{k<=order} (i s theta chi)^k / k!, s = +-1.
PhasePoly taylor_unitary(const GaugeFn& g, int order, int s = 1);

/// |f1(q) * e^{-i y.p/hbar} * f2(q) - f1(q + y/2) f2(q - y/2) e^{-i y.p/hbar}| at pt,
/// left side by the exact star series.
double verify_kernel_identity(const PhasePoly& f1, const PhasePoly& f2, const std::array<double, 2>& y,
                              const PhasePoint& pt, const Params& params);
/// Same identity with f1 = U, f2 = U^-1 replaced by their Taylor truncations,
/// compared with the exact phase factors.
double verify_gauge_kernel(const GaugeFn& g, const std::array<double, 2>& y, const PhasePoint& pt,
                           const Params& params, int taylor_order = 8);

/// Exact residuals of H' * W' - E W' and W' * H' - E W' (largest coefficient).
struct EigenResidual {
  double left = 0.0, right = 0.0;
  double max() const { return std::max(left, right); }
};
EigenResidual gauge_eigen_check(const GaugeFn& g, int n, int l, const Params& params);

/// Integral of W' over phase space, Gaussian quadrature fitted to its envelope.
cplx gauge_wigner_integral(const GaugedWigner& w, int order = 12);

/// Direct integral  int psi'(q + y/2) conj(psi'(q - y/2)) e^{-i y.p/hbar} dy  for the
/// ground state with psi' = exp(i theta chi) psi_0.
cplx gauge_ground_direct(const GaugeFn& g, const PhasePoint& pt, const Params& params, int order = 40);

}  // namespace landau
