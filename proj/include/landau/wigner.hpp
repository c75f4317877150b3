#pragma once

#include <string>

#include "landau/exact.hpp"
#include "landau/moyal.hpp"
#include "landau/phasespace.hpp"

namespace landau {

/// (n1, n2, l1, l2); diagonal when n1 = n2 and l1 = l2.
struct WignerIndex {
  int n1 = 0, n2 = 0, l1 = 0, l2 = 0;

  static WignerIndex diag(int n, int l) { return {n, n, l, l}; }
  bool diagonal() const { return n1 == n2 && l1 == l2; }
  void validate() const;
  std::string str() const;
};

struct GenParams {
  cplx alpha1{0.0}, alpha2{0.0}, beta1{0.0}, beta2{0.0};
};

/// 4 exp(-4 H0 / hbar omega)
double eval_ground(const PhasePoint& pt, const Params& params);

/// Closed form for every (n1, n2, l1, l2); real for diagonal indices.
cplx eval_wigner(const WignerIndex& idx, const PhasePoint& pt, const Params& params);
/// The same closed form with the four ladder values taken independently.
cplx eval_wigner_ladder(const WignerIndex& idx, const LadderPoint& x);
/// Diagonal form in terms of H_L and J.
double eval_wigner_energy_form(int n, int l, const PhasePoint& pt, const Params& params);

cplx eval_generating(const GenParams& gp, const PhasePoint& pt, const Params& params);
/// Coefficient of alpha1^n1 beta1^n2 alpha2^l1 beta2^l2 in the power series of G,
/// times 4 sqrt(n1! n2! l1! l2!).
cplx derive_wigner_from_G(const WignerIndex& idx, const PhasePoint& pt, const Params& params);

/// G as an exact Gaussian in the ladder chart; the parameters enter through
/// their exact binary values.
GaussPolyFn generating_gausspoly(const GenParams& gp);

/// W = norm * shape with shape a Gaussian polynomial over Q(i).
struct WignerPoly {
  Surd norm;
  GaussPolyFn shape;
};
WignerPoly wigner_gausspoly(const WignerIndex& idx);

/// W = norm * a_part(a, abar) * b_part(b, bbar)
struct WignerSectors {
  Surd norm;
  SectorFn sectors;
};
WignerSectors wigner_sectors(const WignerIndex& idx);

/// Residuals of the coherent-state and Bopp relations at a point, each
/// computed from an exact star product and compared with the shift form.
struct CoherentResiduals {
  double left_a;        // |a * G - alpha1 G|
  double right_abar;    // |G * abar - beta1 G|
  double left_b;        // |b * G - alpha2 G|
  double right_bbar;    // |G * bbar - beta2 G|
  double bopp_abar;     // |abar * G - (2 abar - beta1) G|
  double bopp_a;        // |G * a - (2 a - alpha1) G|
  double bopp_deriv_a;  // |abar * G - dG/dalpha1|, derivative by contour integral
  double bopp_deriv_b;  // |G * a - dG/dbeta1|
  double max() const;
};
CoherentResiduals coherent_residuals(const GenParams& gp, const PhasePoint& pt, const Params& params);

}  // namespace landau
