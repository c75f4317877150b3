#include "landau/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "landau/specialfn.hpp"

namespace landau {

namespace {

std::array<cplx, 4> ladder_array(const LadderPoint& x) { return {x.a, x.abar, x.b, x.bbar}; }

/// sqrt(min!/max!) without forming the factorials
double factorial_ratio_sqrt(int lo, int hi) { return std::exp(0.5 * (std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0))); }

/// (-1)^min (2 x)^|d| L^|d|_min(4 u), x = conj-side variable when i >= j
cplx sector_value(int i, int j, cplx z, cplx zbar) {
  const int lo = std::min(i, j), d = std::abs(i - j);
  const cplx base = 2.0 * (i >= j ? zbar : z);
  cplx pw = 1.0;
  for (int k = 0; k < d; ++k) pw *= base;
  const double sign = (lo % 2) ? -1.0 : 1.0;
  return sign * factorial_ratio_sqrt(lo, lo + d) * pw * specialfn::laguerre(lo, d, 4.0 * z * zbar);
}

/// exact polynomial (-1)^min (2 x)^|d| L^|d|_min(4 z zbar) in one sector
LadderPoly sector_poly(int i, int j, int zvar, int zbarvar) {
  const int lo = std::min(i, j), d = std::abs(i - j);
  const specialfn::Poly1 L = specialfn::laguerre_series_poly(lo, d);
  LadderPoly out;
  for (int k = 0; k <= L.degree(); ++k) {
    Exponent4 e{0, 0, 0, 0};
    e[static_cast<std::size_t>(zvar)] = k;
    e[static_cast<std::size_t>(zbarvar)] = k;
    e[static_cast<std::size_t>(i >= j ? zbarvar : zvar)] += d;
    Rational c = L.coeff(k);
    c *= Rational(mpz_class(1) << (2 * k + d));
    if (lo % 2) c = -c;
    out.add_term(e, QComplex(c));
  }
  return out;
}

Surd index_norm(const WignerIndex& idx) {
  Rational r = factorial_q(static_cast<unsigned>(std::min(idx.n1, idx.n2))) *
               factorial_q(static_cast<unsigned>(std::min(idx.l1, idx.l2))) /
               (factorial_q(static_cast<unsigned>(std::max(idx.n1, idx.n2))) *
                factorial_q(static_cast<unsigned>(std::max(idx.l1, idx.l2))));
  return Surd::sqrt_of(r);
}

QComplex exact_of(cplx z) { return {rational_from_double(z.real()), rational_from_double(z.imag())}; }

}  // namespace

void WignerIndex::validate() const {
  if (n1 < 0 || n2 < 0 || l1 < 0 || l2 < 0) throw std::domain_error("WignerIndex: indices must be nonnegative");
}

std::string WignerIndex::str() const {
  std::ostringstream os;
  os << "(" << n1 << "," << n2 << "," << l1 << "," << l2 << ")";
  return os.str();
}

double eval_ground(const PhasePoint& pt, const Params& params) { return 4.0 * std::exp(-ground_exponent(pt, params)); }

cplx eval_wigner_ladder(const WignerIndex& idx, const LadderPoint& x) {
  idx.validate();
  return 4.0 * sector_value(idx.n1, idx.n2, x.a, x.abar) * sector_value(idx.l1, idx.l2, x.b, x.bbar) *
         std::exp(-2.0 * (x.a * x.abar + x.b * x.bbar));
}

cplx eval_wigner(const WignerIndex& idx, const PhasePoint& pt, const Params& params) {
  const cplx w = eval_wigner_ladder(idx, to_ladder(pt, params));
  return idx.diagonal() ? cplx(w.real(), 0.0) : w;
}

double eval_wigner_energy_form(int n, int l, const PhasePoint& pt, const Params& params) {
  if (n < 0 || l < 0) throw std::domain_error("eval_wigner_energy_form: negative index");
  const double h = landau_energy_reduced(pt, params);
  const double j = angular_momentum_reduced(pt, params);
  const double sign = ((n + l) % 2) ? -1.0 : 1.0;
  return 4.0 * sign * specialfn::laguerre(n, 0, 4.0 * h) * specialfn::laguerre(l, 0, 4.0 * j + 4.0 * h) *
         std::exp(-2.0 * j - 4.0 * h);
}

cplx eval_generating(const GenParams& gp, const PhasePoint& pt, const Params& params) {
  const LadderPoint x = to_ladder(pt, params);
  return std::exp(-(gp.alpha1 * gp.beta1 + gp.alpha2 * gp.beta2) +
                  2.0 * (gp.alpha1 * x.abar + gp.beta1 * x.a + gp.alpha2 * x.bbar + gp.beta2 * x.b) -
                  ground_exponent(pt, params));
}

cplx derive_wigner_from_G(const WignerIndex& idx, const PhasePoint& pt, const Params& params) {
  idx.validate();
  const LadderPoint x = to_ladder(pt, params);
  const int K = idx.n1 + idx.n2 + idx.l1 + idx.l2;
  // power series in (alpha1, beta1, alpha2, beta2) around 0
  const Jet4 al1 = Jet4::variable(K, 0, 0.0), be1 = Jet4::variable(K, 1, 0.0);
  const Jet4 al2 = Jet4::variable(K, 2, 0.0), be2 = Jet4::variable(K, 3, 0.0);
  const Jet4 h = (al1 * be1 + al2 * be2) * cplx(-1.0) +
                 (al1 * x.abar + be1 * x.a + al2 * x.bbar + be2 * x.b) * cplx(2.0);
  const Jet4 e = exp(h);
  const cplx c = e.coeff({idx.n1, idx.n2, idx.l1, idx.l2});
  double fact = 1.0;
  for (int v : {idx.n1, idx.n2, idx.l1, idx.l2}) fact *= std::exp(std::lgamma(v + 1.0));
  return 4.0 * std::sqrt(fact) * c * std::exp(-ground_exponent(pt, params));
}

GaussPolyFn generating_gausspoly(const GenParams& gp) {
  LadderPoly e;
  e.add_term({0, 0, 0, 0}, exact_of(gp.alpha1) * exact_of(gp.beta1) + exact_of(gp.alpha2) * exact_of(gp.beta2));
  e.add_term({1, 1, 0, 0}, QComplex(2));
  e.add_term({0, 0, 1, 1}, QComplex(2));
  e.add_term({0, 1, 0, 0}, QComplex(-2) * exact_of(gp.alpha1));
  e.add_term({1, 0, 0, 0}, QComplex(-2) * exact_of(gp.beta1));
  e.add_term({0, 0, 0, 1}, QComplex(-2) * exact_of(gp.alpha2));
  e.add_term({0, 0, 1, 0}, QComplex(-2) * exact_of(gp.beta2));
  return GaussPolyFn(LadderPoly(QComplex(1)), e);
}

WignerPoly wigner_gausspoly(const WignerIndex& idx) {
  idx.validate();
  const LadderPoly p = sector_poly(idx.n1, idx.n2, 0, 1) * sector_poly(idx.l1, idx.l2, 2, 3) * QComplex(4);
  return {index_norm(idx), make_gauss_fn(p, Rational(2))};
}

WignerSectors wigner_sectors(const WignerIndex& idx) {
  idx.validate();
  LadderPoly ea, eb;
  ea.add_term({1, 1, 0, 0}, QComplex(2));
  eb.add_term({0, 0, 1, 1}, QComplex(2));
  return {index_norm(idx),
          SectorFn{GaussPolyFn(sector_poly(idx.n1, idx.n2, 0, 1) * QComplex(4), ea),
                   GaussPolyFn(sector_poly(idx.l1, idx.l2, 2, 3), eb)}};
}

double CoherentResiduals::max() const {
  return std::max({left_a, right_abar, left_b, right_bbar, bopp_abar, bopp_a, bopp_deriv_a, bopp_deriv_b});
}

CoherentResiduals coherent_residuals(const GenParams& gp, const PhasePoint& pt, const Params& params) {
  const LadderPoint lp = to_ladder(pt, params);
  const auto x = ladder_array(lp);
  const GaussPolyFn G = generating_gausspoly(gp);
  const cplx g = G.eval(x);
  auto star = [&](const LadderPoly& f, bool left) {
    return (left ? star_exact(GaussPolyFn(f), G) : star_exact(G, GaussPolyFn(f))).eval(x);
  };
  // dG/dparam by the trapezoid rule on a circle, exact up to rounding for entire functions
  auto dparam = [&](cplx GenParams::*field) {
    const int N = 64;
    const double r = 0.5;
    cplx s = 0.0;
    for (int k = 0; k < N; ++k) {
      const cplx w = std::polar(r, 2.0 * M_PI * k / N);
      GenParams q = gp;
      q.*field += w;
      s += eval_generating(q, pt, params) / w;
    }
    return s / static_cast<double>(N);
  };
  CoherentResiduals r{};
  r.left_a = std::abs(star(ladder_a(), true) - gp.alpha1 * g);
  r.right_abar = std::abs(star(ladder_abar(), false) - gp.beta1 * g);
  r.left_b = std::abs(star(ladder_b(), true) - gp.alpha2 * g);
  r.right_bbar = std::abs(star(ladder_bbar(), false) - gp.beta2 * g);
  const cplx abar_G = star(ladder_abar(), true);
  const cplx G_a = star(ladder_a(), false);
  r.bopp_abar = std::abs(abar_G - (2.0 * lp.abar - gp.beta1) * g);
  r.bopp_a = std::abs(G_a - (2.0 * lp.a - gp.alpha1) * g);
  r.bopp_deriv_a = std::abs(abar_G - dparam(&GenParams::alpha1));
  r.bopp_deriv_b = std::abs(G_a - dparam(&GenParams::beta1));
  return r;
}

}  // namespace landau
