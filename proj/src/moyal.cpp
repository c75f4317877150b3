#include "landau/moyal.hpp"

#include <cmath>

namespace landau {

namespace {

constexpr int A = 0, AB = 1, B = 2, BB = 3;
constexpr int Q1 = 0, Q2 = 1, P1 = 2, P2 = 3;

const Exponent4 kAAbar{1, 1, 0, 0};
const Exponent4 kBBbar{0, 0, 1, 1};

std::array<cplx, 4> ladder_array(const PhasePoint& pt, const Params& params) {
  const LadderPoint x = to_ladder(pt, params);
  return {x.a, x.abar, x.b, x.bbar};
}

std::array<cplx, 4> phase_array(const PhasePoint& pt) { return {pt.q1, pt.q2, pt.p1, pt.p2}; }

}  // namespace

std::vector<PoissonPair> ladder_pairs() {
  const QComplex h(Rational(1, 2));
  return {{A, AB, h}, {B, BB, h}, {AB, A, -h}, {BB, B, -h}};
}

std::vector<PoissonPair> canonical_pairs(const Rational& hbar) {
  const QComplex c(Rational(0), hbar / 2);
  return {{Q1, P1, c}, {Q2, P2, c}, {P1, Q1, -c}, {P2, Q2, -c}};
}

LadderPoly ladder_a() { return LadderPoly::variable(A); }
LadderPoly ladder_abar() { return LadderPoly::variable(AB); }
LadderPoly ladder_b() { return LadderPoly::variable(B); }
LadderPoly ladder_bbar() { return LadderPoly::variable(BB); }

GaussPolyFn make_gauss_fn(const LadderPoly& poly, const Rational& s) {
  if (sgn(s) == 0) return GaussPolyFn(poly);
  LadderPoly e;
  e.add_term(kAAbar, QComplex(s));
  e.add_term(kBBbar, QComplex(s));
  return GaussPolyFn(poly, e);
}

std::optional<std::pair<QComplex, QComplex>> sector_exponents(const GaussPolyFn& f) {
  QComplex sa, sb;
  for (const auto& [e, c] : f.exponent().terms()) {
    if (e == kAAbar)
      sa = c;
    else if (e == kBBbar)
      sb = c;
    else
      return std::nullopt;
  }
  return std::make_pair(sa, sb);
}

std::optional<Rational> gauss_s(const GaussPolyFn& f) {
  auto se = sector_exponents(f);
  if (!se || se->first != se->second || sgn(se->first.im) != 0) return std::nullopt;
  return se->first.re;
}

GaussPolyFn star_exact(const GaussPolyFn& f, const GaussPolyFn& g) {
  if (f.is_polynomial() || g.is_polynomial()) return star_series(f, g, ladder_pairs());
  if (!f.is_pure_exponential() || !g.is_pure_exponential())
    throw unsupported_class("Gaussian-polynomial star product outside the closed class; use star_numeric");
  auto sf = sector_exponents(f);
  auto sg = sector_exponents(g);
  if (!sf || !sg) throw unsupported_class("exponential star product needs sector-diagonal exponents");
  const QComplex quarter(Rational(1, 4));
  const QComplex da = QComplex(1) + sf->first * sg->first * quarter;
  const QComplex db = QComplex(1) + sf->second * sg->second * quarter;
  if (da.is_zero() || db.is_zero()) throw std::domain_error("exponential star product is singular");
  LadderPoly e;
  e.add_term(kAAbar, (sf->first + sg->first) / da);
  e.add_term(kBBbar, (sf->second + sg->second) / db);
  const QComplex c = f.poly().constant_term() * g.poly().constant_term() / (da * db);
  return GaussPolyFn(LadderPoly(c), e);
}

GaussPolyFn moyal_bracket(const GaussPolyFn& f, const GaussPolyFn& g) { return star_exact(f, g) - star_exact(g, f); }

GaussPolyFn poisson_bracket(const GaussPolyFn& f, const GaussPolyFn& g, const Rational& hbar) {
  GaussPolyFn s = pointwise(f.derivative(A), g.derivative(AB)) - pointwise(f.derivative(AB), g.derivative(A));
  s += pointwise(f.derivative(B), g.derivative(BB)) - pointwise(f.derivative(BB), g.derivative(B));
  return s * QComplex(Rational(0), -1 / hbar);
}

GaussPolyFn star_power(const GaussPolyFn& g, int n) {
  if (n < 0) throw std::invalid_argument("star_power: negative exponent");
  GaussPolyFn out(LadderPoly(QComplex(1)));
  for (int k = 0; k < n; ++k) out = star_exact(out, g);
  return out;
}

PhaseGaussPoly star_exact(const PhaseGaussPoly& f, const PhaseGaussPoly& g, const Rational& hbar) {
  return star_series(f, g, canonical_pairs(hbar));
}

PhaseGaussPoly moyal_bracket(const PhaseGaussPoly& f, const PhaseGaussPoly& g, const Rational& hbar) {
  return star_exact(f, g, hbar) - star_exact(g, f, hbar);
}

PhaseGaussPoly poisson_bracket(const PhaseGaussPoly& f, const PhaseGaussPoly& g) {
  PhaseGaussPoly s = pointwise(f.derivative(Q1), g.derivative(P1)) - pointwise(f.derivative(P1), g.derivative(Q1));
  s += pointwise(f.derivative(Q2), g.derivative(P2)) - pointwise(f.derivative(P2), g.derivative(Q2));
  return s;
}

PhaseGaussPoly star_power(const PhaseGaussPoly& g, int n, const Rational& hbar) {
  if (n < 0) throw std::invalid_argument("star_power: negative exponent");
  PhaseGaussPoly out(PhasePoly(QComplex(1)));
  for (int k = 0; k < n; ++k) out = star_exact(out, g, hbar);
  return out;
}

ExactParams ExactParams::from(const Params& p) {
  return {rational_from_double(p.m()), rational_from_double(p.omega()), rational_from_double(p.hbar()),
          rational_from_double(p.gamma()), rational_from_double(p.kappa())};
}

PhasePoly ladder_to_canonical(const LadderPoly& f, const ExactParams& ep) {
  const Rational s = 1 / (2 * ep.kappa * ep.gamma);
  const PhasePoly q1 = PhasePoly::variable(Q1), q2 = PhasePoly::variable(Q2);
  const PhasePoly p1 = PhasePoly::variable(P1), p2 = PhasePoly::variable(P2);
  const QComplex k(ep.kappa), i = QComplex::i();
  const PhasePoly re_a = p1 + k * q2, im_a = p2 - k * q1;
  const PhasePoly re_b = k * q2 - p1, im_b = p2 + k * q1;
  std::array<PhasePoly, 4> img{(re_a + i * im_a) * QComplex(s), (re_a - i * im_a) * QComplex(s),
                               (re_b + i * im_b) * QComplex(s), (re_b - i * im_b) * QComplex(s)};
  return f.substitute(img);
}

LadderPoly canonical_to_ladder(const PhasePoly& f, const ExactParams& ep) {
  const LadderPoly a = ladder_a(), ab = ladder_abar(), b = ladder_b(), bb = ladder_bbar();
  const QComplex g2(ep.gamma / 2), gk2(ep.gamma * ep.kappa / 2), i = QComplex::i();
  std::array<LadderPoly, 4> img{(a - b - ab + bb) * (i * g2), (a + b + ab + bb) * g2, (a - b + ab - bb) * gk2,
                                (ab + bb - a - b) * (i * gk2)};
  return f.substitute(img);
}

PhaseGaussPoly ladder_to_canonical(const GaussPolyFn& f, const ExactParams& ep) {
  return PhaseGaussPoly(ladder_to_canonical(f.poly(), ep), ladder_to_canonical(f.exponent(), ep));
}

GaussPolyFn canonical_to_ladder(const PhaseGaussPoly& f, const ExactParams& ep) {
  return GaussPolyFn(canonical_to_ladder(f.poly(), ep), canonical_to_ladder(f.exponent(), ep));
}

// ---- jets -------------------------------------------------------------------

namespace {

template <class T>
T scalar_of(const QComplex& q);
template <>
cplx scalar_of<cplx>(const QComplex& q) {
  return q.to_complex();
}
template <>
QComplex scalar_of<QComplex>(const QComplex& q) {
  return q;
}

template <class T>
T ipow(const T& x, int k) {
  T r(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

template <int N, class T, class Chart>
Jet<N, T> poly_jet(const Poly4<Chart>& p, const std::array<int, N>& vars, const std::array<T, 4>& x0, int order) {
  Jet<N, T> out(order);
  std::array<bool, 4> in{false, false, false, false};
  for (int v : vars) in[static_cast<std::size_t>(v)] = true;
  for (const auto& [e, c] : p.terms()) {
    T base = scalar_of<T>(c);
    for (std::size_t v = 0; v < 4; ++v)
      if (!in[v]) base *= ipow(x0[v], e[v]);
    if (JetScalar<T>::zero(base)) continue;
    // expand prod_v (x0_v + h_v)^{e_v} over the jet variables
    std::array<int, N> k{};
    while (true) {
      int deg = 0;
      for (int j = 0; j < N; ++j) deg += k[static_cast<std::size_t>(j)];
      if (deg <= order) {
        T t = base;
        for (int j = 0; j < N; ++j) {
          const auto v = static_cast<std::size_t>(vars[static_cast<std::size_t>(j)]);
          const int kk = k[static_cast<std::size_t>(j)];
          t *= scalar_of<T>(QComplex(binomial_q(static_cast<unsigned>(e[v]), static_cast<unsigned>(kk)))) *
               ipow(x0[v], e[v] - kk);
        }
        out.add(k, t);
      }
      int j = 0;
      while (j < N && k[static_cast<std::size_t>(j)] == e[static_cast<std::size_t>(vars[static_cast<std::size_t>(j)])])
        k[static_cast<std::size_t>(j++)] = 0;
      if (j == N) break;
      ++k[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

/// f = exp(-E(x0)) * jet with exact coefficients
struct ExactSectorJet {
  QComplex exponent_at_x0;
  ExactJet2 jet;
};

ExactSectorJet exact_jet(const GaussPolyFn& f, const std::array<int, 2>& vars, const std::array<QComplex, 4>& x0,
                         int order) {
  ExactJet2 p = poly_jet<2, QComplex>(f.poly(), vars, x0, order);
  if (f.is_polynomial()) return {QComplex(), p};
  ExactJet2 e = poly_jet<2, QComplex>(f.exponent(), vars, x0, order);
  const QComplex e0 = e.at(0);
  e.at(0) = QComplex();
  return {e0, p * exp(e * QComplex(-1))};
}

template <class T>
T euler_impl(const std::vector<T>& terms) {
  std::vector<T> c;
  for (std::size_t k = 0; k < terms.size(); k += 2) c.push_back(k + 1 < terms.size() ? terms[k] + terms[k + 1] : terms[k]);
  if (c.empty()) return T();
  // b_0 = c_0, b_n = sum_{j=1}^n C(n-1, j-1) c_j, evaluated at w = 1/2
  T sum = c[0];
  for (std::size_t n = 1; n < c.size(); ++n) {
    T b = T();
    for (std::size_t j = 1; j <= n; ++j)
      b += c[j] * scalar_of<T>(QComplex(binomial_q(static_cast<unsigned>(n - 1), static_cast<unsigned>(j - 1))));
    sum += b * scalar_of<T>(QComplex(Rational(1) / Rational(mpz_class(1) << n)));
  }
  return sum;
}

}  // namespace

template <int N, class Chart>
Jet<N> jet_of(const GaussPoly<Chart>& f, const std::array<int, N>& vars, const std::array<cplx, 4>& x0, int order) {
  Jet<N> p = poly_jet<N, cplx>(f.poly(), vars, x0, order);
  if (f.is_polynomial()) return p;
  Jet<N> e = poly_jet<N, cplx>(f.exponent(), vars, x0, order);
  return p * exp(e * cplx(-1.0));
}

template Jet<2> jet_of<2, LadderChart>(const GaussPolyFn&, const std::array<int, 2>&, const std::array<cplx, 4>&, int);
template Jet<4> jet_of<4, LadderChart>(const GaussPolyFn&, const std::array<int, 4>&, const std::array<cplx, 4>&, int);
template Jet<4> jet_of<4, CanonicalChart>(const PhaseGaussPoly&, const std::array<int, 4>&,
                                          const std::array<cplx, 4>&, int);

SmoothFn SmoothFn::from_phase(const PhaseGaussPoly& f) {
  SmoothFn s;
  s.chart = ChartKind::Canonical;
  s.value = [f](const PhasePoint& pt) { return f.eval(phase_array(pt)); };
  s.jet = [f](const PhasePoint& pt, int order) { return jet_of<4>(f, std::array<int, 4>{0, 1, 2, 3}, phase_array(pt), order); };
  return s;
}

SmoothFn SmoothFn::from_ladder(const GaussPolyFn& f, const Params& params) {
  SmoothFn s;
  s.chart = ChartKind::Ladder;
  s.value = [f, params](const PhasePoint& pt) { return f.eval(ladder_array(pt, params)); };
  s.jet = [f, params](const PhasePoint& pt, int order) {
    return jet_of<4>(f, std::array<int, 4>{0, 1, 2, 3}, ladder_array(pt, params), order);
  };
  return s;
}

cplx SectorFn::eval(const LadderPoint& x) const {
  const std::array<cplx, 4> v{x.a, x.abar, x.b, x.bbar};
  return a_part.eval(v) * b_part.eval(v);
}

template <int N, class T>
std::vector<T> star_terms(const Jet<N, T>& f, const Jet<N, T>& g, const std::array<int, N>& partner,
                          const std::array<bool, N>& negative, const T& c) {
  const auto& L = f.layout();
  const int K = L.order();
  std::vector<T> fact(static_cast<std::size_t>(K) + 1, T(1));
  for (int k = 1; k <= K; ++k) fact[static_cast<std::size_t>(k)] = fact[static_cast<std::size_t>(k) - 1] * T(k);
  std::vector<T> cpow(static_cast<std::size_t>(K) + 1, T(1));
  for (int k = 1; k <= K; ++k) cpow[static_cast<std::size_t>(k)] = cpow[static_cast<std::size_t>(k) - 1] * c;
  std::vector<T> terms(static_cast<std::size_t>(K) + 1, T());
  for (int i = 0; i < L.size(); ++i) {
    const T& fv = f.at(i);
    if (JetScalar<T>::zero(fv)) continue;
    const auto& m = L.exponent(i);
    std::array<int, N> mg{};
    int deg = 0, neg = 0;
    T w(1);
    for (int v = 0; v < N; ++v) {
      const int mv = m[static_cast<std::size_t>(v)];
      mg[static_cast<std::size_t>(partner[static_cast<std::size_t>(v)])] = mv;
      deg += mv;
      if (negative[static_cast<std::size_t>(v)]) neg += mv;
      if (mv > 1) w *= fact[static_cast<std::size_t>(mv)];
    }
    const T gv = g.coeff(mg);
    if (JetScalar<T>::zero(gv)) continue;
    if (neg % 2) w = T(-1) * w;
    terms[static_cast<std::size_t>(deg)] += cpow[static_cast<std::size_t>(deg)] * w * fv * gv;
  }
  return terms;
}

template std::vector<cplx> star_terms<2, cplx>(const Jet<2>&, const Jet<2>&, const std::array<int, 2>&,
                                               const std::array<bool, 2>&, const cplx&);
template std::vector<cplx> star_terms<4, cplx>(const Jet<4>&, const Jet<4>&, const std::array<int, 4>&,
                                               const std::array<bool, 4>&, const cplx&);
template std::vector<QComplex> star_terms<2, QComplex>(const ExactJet2&, const ExactJet2&, const std::array<int, 2>&,
                                                       const std::array<bool, 2>&, const QComplex&);

cplx euler_resum(const std::vector<cplx>& terms) { return euler_impl(terms); }

QComplex euler_resum(const std::vector<QComplex>& terms) { return euler_impl(terms); }

namespace {

StarSeries finish(std::vector<cplx> terms) {
  StarSeries s;
  s.value = 0.0;
  for (const auto& t : terms) s.value += t;
  s.tail = terms.empty() ? 0.0 : std::abs(terms.back());
  s.resummed = euler_resum(terms);
  s.terms = std::move(terms);
  return s;
}

}  // namespace

StarSeries star_numeric(const SmoothFn& f, const SmoothFn& g, const PhasePoint& pt, int order, const Params& params) {
  if (order < 0) throw std::invalid_argument("star_numeric: negative order");
  if (order > f.max_order || order > g.max_order)
    throw capability_error("star_numeric: order exceeds the available derivatives");
  if (f.chart != g.chart) throw std::invalid_argument("star_numeric: operands given in different charts");
  const Jet4 jf = f.jet(pt, order);
  const Jet4 jg = g.jet(pt, order);
  if (f.chart == ChartKind::Ladder)
    return finish(star_terms<4, cplx>(jf, jg, {1, 0, 3, 2}, {false, true, false, true}, cplx(0.5)));
  return finish(star_terms<4, cplx>(jf, jg, {2, 3, 0, 1}, {false, false, true, true}, cplx(0.0, 0.5 * params.hbar())));
}

std::array<QComplex, 4> exact_ladder_point(const PhasePoint& pt, const Params& params) {
  const ExactParams ep = ExactParams::from(params);
  const Rational y[4] = {rational_from_double(pt.q1), rational_from_double(pt.q2), rational_from_double(pt.p1),
                         rational_from_double(pt.p2)};
  const LadderPoly vars[4] = {ladder_a(), ladder_abar(), ladder_b(), ladder_bbar()};
  std::array<QComplex, 4> x0;
  for (std::size_t v = 0; v < 4; ++v) {
    QComplex s;
    const PhasePoly img = ladder_to_canonical(vars[v], ep);
    for (const auto& [e, c] : img.terms()) {
      QComplex t = c;
      for (std::size_t k = 0; k < 4; ++k)
        for (int r = 0; r < e[k]; ++r) t *= QComplex(y[k]);
      s += t;
    }
    x0[v] = s;
  }
  return x0;
}

SectorSeries sector_star_series(const GaussPolyFn& f, const GaussPolyFn& g, int sector,
                                const std::array<QComplex, 4>& x0, int order) {
  if (order < 0) throw std::invalid_argument("star_numeric: negative order");
  const std::array<int, 2> vars = sector == 0 ? std::array<int, 2>{A, AB} : std::array<int, 2>{B, BB};
  const ExactSectorJet jf = exact_jet(f, vars, x0, order), jg = exact_jet(g, vars, x0, order);
  return {jf.exponent_at_x0 + jg.exponent_at_x0,
          star_terms<2, QComplex>(jf.jet, jg.jet, {1, 0}, {false, true}, QComplex(Rational(1, 2)))};
}

StarSeries SectorSeries::evaluate() const {
  const cplx scale = std::exp(-exponent.to_complex());
  std::vector<cplx> t;
  for (const auto& x : terms) t.push_back(scale * x.to_complex());
  StarSeries s = finish(std::move(t));
  s.resummed = scale * euler_resum(terms).to_complex();
  return s;
}

StarSeries star_numeric(const SectorFn& f, const SectorFn& g, const PhasePoint& pt, int order, const Params& params) {
  const auto x0 = exact_ladder_point(pt, params);
  const SectorSeries sa = sector_star_series(f.a_part, g.a_part, 0, x0, order);
  const SectorSeries sb = sector_star_series(f.b_part, g.b_part, 1, x0, order);
  SectorSeries t{sa.exponent + sb.exponent, std::vector<QComplex>(static_cast<std::size_t>(order) + 1)};
  for (int i = 0; i <= order; ++i) {
    if (sa.terms[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j)
      t.terms[static_cast<std::size_t>(i + j)] += sa.terms[static_cast<std::size_t>(i)] * sb.terms[static_cast<std::size_t>(j)];
  }
  return t.evaluate();
}

}  // namespace landau
