#pragma once

#include <array>
#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "landau/jet.hpp"
#include "landau/phasespace.hpp"
#include "landau/poly.hpp"

namespace landau {

/// Raised when a star product leaves the class the exact engine can close on.
class unsupported_class : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a numeric star product asks for more derivatives than a
/// function provides.
class capability_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One term coeff * (left derivative on f)(right derivative on g) of the
/// Poisson bivector in the exponent of the star product.
struct PoissonPair {
  int left;
  int right;
  QComplex coeff;
};

/// Ladder chart: exp[1/2 (<-d_a ->d_abar + <-d_b ->d_bbar - <-d_abar ->d_a - <-d_bbar ->d_b)]
std::vector<PoissonPair> ladder_pairs();
/// Canonical chart: exp[(i hbar/2) sum_k (<-d_qk ->d_pk - <-d_pk ->d_qk)]
std::vector<PoissonPair> canonical_pairs(const Rational& hbar);

/// Bidifferential series f exp(P) g. Terminates when either operand is a
/// polynomial; throws unsupported_class otherwise.
template <class Chart>
GaussPoly<Chart> star_series(const GaussPoly<Chart>& f, const GaussPoly<Chart>& g,
                             const std::vector<PoissonPair>& pairs) {
  if (!f.is_polynomial() && !g.is_polynomial())
    throw unsupported_class("star product of two Gaussian-damped functions has no terminating series");
  if (f.is_zero() || g.is_zero()) return {};

  const std::size_t np = pairs.size();
  std::vector<int> bound(np, INT_MAX);
  const Exponent4 df = f.poly().max_degrees();
  const Exponent4 dg = g.poly().max_degrees();
  for (std::size_t i = 0; i < np; ++i) {
    if (f.is_polynomial()) bound[i] = std::min(bound[i], df[static_cast<std::size_t>(pairs[i].left)]);
    if (g.is_polynomial()) bound[i] = std::min(bound[i], dg[static_cast<std::size_t>(pairs[i].right)]);
  }

  std::map<Exponent4, GaussPoly<Chart>> fd, gd;
  fd.emplace(Exponent4{0, 0, 0, 0}, f);
  gd.emplace(Exponent4{0, 0, 0, 0}, g);
  std::function<const GaussPoly<Chart>&(std::map<Exponent4, GaussPoly<Chart>>&, const Exponent4&)> deriv =
      [&](std::map<Exponent4, GaussPoly<Chart>>& memo, const Exponent4& m) -> const GaussPoly<Chart>& {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    int v = 0;
    while (m[static_cast<std::size_t>(v)] == 0) ++v;
    Exponent4 prev = m;
    prev[static_cast<std::size_t>(v)] -= 1;
    GaussPoly<Chart> d = deriv(memo, prev).derivative(v);
    return memo.emplace(m, std::move(d)).first->second;
  };

  GaussPoly<Chart> out;
  std::vector<int> m(np, 0);
  while (true) {
    Exponent4 L{0, 0, 0, 0}, R{0, 0, 0, 0};
    QComplex c(1);
    for (std::size_t i = 0; i < np; ++i) {
      L[static_cast<std::size_t>(pairs[i].left)] += m[i];
      R[static_cast<std::size_t>(pairs[i].right)] += m[i];
      if (m[i] > 0) c *= pow(pairs[i].coeff, static_cast<unsigned>(m[i])) * QComplex(Rational(1) / factorial_q(static_cast<unsigned>(m[i])));
    }
    const auto& a = deriv(fd, L);
    if (!a.is_zero()) {
      const auto& b = deriv(gd, R);
      if (!b.is_zero()) out += pointwise(a, b) * c;
    }
    std::size_t i = 0;
    while (i < np && m[i] == bound[i]) m[i++] = 0;
    if (i == np) break;
    ++m[i];
  }
  return out;
}

// ---- ladder chart ---------------------------------------------------------

/// e^{-s (a abar + b bbar)} times a polynomial; s = 0 gives the polynomial.
GaussPolyFn make_gauss_fn(const LadderPoly& poly, const Rational& s);
/// s if the exponent is s (a abar + b bbar), nothing otherwise
std::optional<Rational> gauss_s(const GaussPolyFn& f);
/// exponent coefficients (sigma_a, sigma_b) if it is sigma_a a abar + sigma_b b bbar
std::optional<std::pair<QComplex, QComplex>> sector_exponents(const GaussPolyFn& f);

LadderPoly ladder_a();
LadderPoly ladder_abar();
LadderPoly ladder_b();
LadderPoly ladder_bbar();

/// Exact ladder-chart star product. Polynomial against anything uses the
/// terminating series; two pure exponentials of the sector form use
/// e^{-s aabar} * e^{-t aabar} = (1 + st/4)^-1 exp[-(s+t)/(1+st/4) aabar] per sector.
GaussPolyFn star_exact(const GaussPolyFn& f, const GaussPolyFn& g);
GaussPolyFn moyal_bracket(const GaussPolyFn& f, const GaussPolyFn& g);
/// Poisson bracket written in ladder variables; carries the factor -i/hbar.
GaussPolyFn poisson_bracket(const GaussPolyFn& f, const GaussPolyFn& g, const Rational& hbar);
GaussPolyFn star_power(const GaussPolyFn& g, int n);

// ---- canonical chart ------------------------------------------------------

PhaseGaussPoly star_exact(const PhaseGaussPoly& f, const PhaseGaussPoly& g, const Rational& hbar);
PhaseGaussPoly moyal_bracket(const PhaseGaussPoly& f, const PhaseGaussPoly& g, const Rational& hbar);
PhaseGaussPoly poisson_bracket(const PhaseGaussPoly& f, const PhaseGaussPoly& g);
PhaseGaussPoly star_power(const PhaseGaussPoly& g, int n, const Rational& hbar);

/// Rational images of the physical constants. Conversions between the two
/// charts are exact when gamma and kappa are (as for the default parameters).
struct ExactParams {
  Rational m, omega, hbar, gamma, kappa;
  static ExactParams from(const Params& p);
};

PhasePoly ladder_to_canonical(const LadderPoly& f, const ExactParams& ep);
LadderPoly canonical_to_ladder(const PhasePoly& f, const ExactParams& ep);
PhaseGaussPoly ladder_to_canonical(const GaussPolyFn& f, const ExactParams& ep);
GaussPolyFn canonical_to_ladder(const PhaseGaussPoly& f, const ExactParams& ep);

// ---- numeric fallback -----------------------------------------------------

enum class ChartKind { Canonical, Ladder };

/// A function known through its value and its Taylor jets at a phase point.
/// Jets are in the chart's own variables: (q1, q2, p1, p2) or (a, abar, b, bbar).
struct SmoothFn {
  ChartKind chart = ChartKind::Canonical;
  std::function<cplx(const PhasePoint&)> value;
  std::function<Jet4(const PhasePoint&, int)> jet;
  int max_order = INT_MAX;

  static SmoothFn from_phase(const PhaseGaussPoly& f);
  static SmoothFn from_ladder(const GaussPolyFn& f, const Params& params);
};

/// Factorised function f_a(a, abar) f_b(b, bbar); both Wigner families are of this form.
/// Its star series is computed in exact arithmetic at the binary value of the
/// sample point, up to the common factor exp(-exponent(x0)).
struct SectorFn {
  GaussPolyFn a_part;
  GaussPolyFn b_part;

  cplx eval(const LadderPoint& x) const;
};

struct StarSeries {
  cplx value;               // partial sum through the requested order
  double tail = 0.0;        // |last included order|
  std::vector<cplx> terms;  // per-order contributions
  cplx resummed;            // Euler-transformed sum, see euler_resum
};

/// Jet of a GaussPoly at x0 in the chart variables listed in vars.
template <int N, class Chart>
Jet<N> jet_of(const GaussPoly<Chart>& f, const std::array<int, N>& vars, const std::array<cplx, 4>& x0, int order);

/// Exact per-order terms of a one-sector star product (sector 0: a, abar;
/// sector 1: b, bbar), up to the factor exp(-exponent).
struct SectorSeries {
  QComplex exponent;
  std::vector<QComplex> terms;
  StarSeries evaluate() const;
};
/// Exact ladder values (a, abar, b, bbar) of the binary value of a phase point.
std::array<QComplex, 4> exact_ladder_point(const PhasePoint& pt, const Params& params);
SectorSeries sector_star_series(const GaussPolyFn& f, const GaussPolyFn& g, int sector,
                                const std::array<QComplex, 4>& x0, int order);

StarSeries star_numeric(const SmoothFn& f, const SmoothFn& g, const PhasePoint& pt, int order, const Params& params);
StarSeries star_numeric(const SectorFn& f, const SectorFn& g, const PhasePoint& pt, int order, const Params& params);

/// Per-order terms of the star series from two jets. partner[v] is the
/// variable paired with v, negative[v] marks derivatives on f carrying a
/// minus sign, and c is the bivector coefficient.
template <int N, class T>
std::vector<T> star_terms(const Jet<N, T>& f, const Jet<N, T>& g, const std::array<int, N>& partner,
                          const std::array<bool, N>& negative, const T& c);

/// Sum of sum_k T_k when the deformation parameter lambda enters through
/// singularities at lambda^2 = -1 only: regroup into a series in mu = lambda^2,
/// map mu -> w = mu/(1+mu) and evaluate at w = 1/2.
cplx euler_resum(const std::vector<cplx>& terms);
QComplex euler_resum(const std::vector<QComplex>& terms);

}  // namespace landau
