#include "landau/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "landau/gauge.hpp"
#include "landau/marginals.hpp"
#include "landau/moyal.hpp"
#include "landau/specialfn.hpp"
#include "landau/staralg.hpp"
#include "landau/symmetry.hpp"
#include "landau/wigner.hpp"

namespace landau {

namespace {

using Results = std::vector<CheckResult>;

CheckResult numeric(std::string name, double residual, double tol, std::string detail = "") {
  return {std::move(name), residual <= tol, residual, tol, std::move(detail)};
}

CheckResult exact(std::string name, bool ok, std::string detail = "") {
  return {std::move(name), ok, ok ? 0.0 : 1.0, 0.0, std::move(detail)};
}

int pick(int requested, int fallback) { return requested >= 0 ? requested : fallback; }

std::string upto(int k) { return "indices <= " + std::to_string(k); }

// ---- algebra --------------------------------------------------------------

Results suite_algebra(const SuiteOptions& opt) {
  Results out;
  const LadderPoly a = ladder_a(), ab = ladder_abar(), b = ladder_b(), bb = ladder_bbar();
  const GaussPolyFn A(a), AB(ab), B(b), BB(bb);
  const bool brackets = moyal_bracket(A, AB) == GaussPolyFn(LadderPoly(QComplex(1))) &&
                        moyal_bracket(B, BB) == GaussPolyFn(LadderPoly(QComplex(1))) &&
                        moyal_bracket(A, B).is_zero() && moyal_bracket(A, BB).is_zero() &&
                        moyal_bracket(AB, B).is_zero() && moyal_bracket(AB, BB).is_zero();
  out.push_back(exact("ladder brackets {a,abar}_M = {b,bbar}_M = 1", brackets));

  // associativity on random polynomials and the vacuum
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_poly = [&](int deg) {
    LadderPoly p;
    for (int t = 0; t < 4; ++t) {
      Exponent4 e{0, 0, 0, 0};
      for (int k = 0; k < deg; ++k) e[static_cast<std::size_t>(rng() % 4)] += static_cast<int>(rng() % 2);
      p.add_term(e, QComplex(Rational(coef(rng)), Rational(coef(rng))));
    }
    return p;
  };
  const GaussPolyFn W0 = wigner_gausspoly(WignerIndex::diag(0, 0)).shape;
  bool assoc = true;
  for (int i = 0; i < 10; ++i) {
    const GaussPolyFn f(random_poly(3)), g(random_poly(3));
    assoc = assoc && star_exact(star_exact(f, g), W0) == star_exact(f, star_exact(g, W0));
    assoc = assoc && star_exact(star_exact(W0, f), g) == star_exact(W0, star_exact(f, g));
  }
  out.push_back(exact("associativity with the vacuum", assoc));

  const bool vacuum = star_exact(A, W0).is_zero() && star_exact(B, W0).is_zero() &&
                      star_exact(W0, AB).is_zero() && star_exact(W0, BB).is_zero() && star_exact(W0, W0) == W0;
  out.push_back(exact("vacuum: a*W0 = b*W0 = W0*abar = W0*bbar = 0, W0*W0 = W0", vacuum));

  // normal-ordering: both strategies agree
  bool confluent = true;
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 8);
    const LadderElement e = LadderElement(w);
    confluent = confluent && normalize(e, RewriteOrder::leftmost) == normalize(e, RewriteOrder::rightmost);
  }
  out.push_back(exact("rewriting is confluent on 200 random words", confluent));

  const int K = pick(opt.max_index, 3);
  bool ladders = true;
  for (int n = 0; n <= K; ++n)
    for (int l = 0; l <= K; ++l)
      for (Letter g : {Letter::a, Letter::abar, Letter::b, Letter::bbar})
        ladders = ladders && verify_ladder(WignerIndex::diag(n, l), g);
  out.push_back(exact("ladder actions on W_nl", ladders, upto(K)));

  return out;
}

// ---- eigen ------------------------------------------------------------------

Results suite_eigen(const SuiteOptions& opt) {
  Results out;
  const int K = pick(opt.max_index, 5);
  const LadderPoly a = ladder_a(), ab = ladder_abar(), b = ladder_b(), bb = ladder_bbar();
  const GaussPolyFn HL(ab * a), J(bb * b - ab * a);
  bool h = true, j = true, alg = true;
  for (int n = 0; n <= K; ++n)
    for (int l = 0; l <= K; ++l) {
      const GaussPolyFn W = wigner_gausspoly(WignerIndex::diag(n, l)).shape;
      const QComplex E(Rational(2 * n + 1, 2)), M(l - n);
      h = h && (star_exact(HL, W) - W * E).is_zero() && (star_exact(W, HL) - W * E).is_zero();
      j = j && (star_exact(J, W) - W * M).is_zero() && (star_exact(W, J) - W * M).is_zero();
      const EigenValues ev = eigen_check(WignerIndex::diag(n, l));
      alg = alg && ev.energy == Rational(2 * n + 1, 2) && ev.momentum == l - n;
    }
  out.push_back(exact("H_L * W_nl = hbar omega (n + 1/2) W_nl, both sides", h, upto(K)));
  out.push_back(exact("J * W_nl = hbar (l - n) W_nl, both sides", j, upto(K)));
  out.push_back(exact("eigenvalues in the word algebra", alg, upto(K)));
  // canonical chart, default-exact parameters
  const Params p;
  const ExactParams ep = ExactParams::from(p);
  const PhaseGaussPoly H(landau_hamiltonian_poly(p));
  bool canon = true;
  for (int n = 0; n <= std::min(K, 3); ++n)
    for (int l = 0; l <= std::min(K, 3); ++l) {
      const PhaseGaussPoly W = canonical_wigner(WignerIndex::diag(n, l), p).shape;
      canon = canon && (star_exact(H, W, ep.hbar) - W * QComplex(ep.hbar * ep.omega * Rational(2 * n + 1, 2))).is_zero();
    }
  out.push_back(exact("H_L * W_nl in canonical variables", canon, upto(std::min(K, 3))));
  return out;
}

// ---- projection ---------------------------------------------------------------

Results suite_projection(const SuiteOptions& opt) {
  Results out;
  const int K = pick(opt.max_index, 4);
  bool diag = true;
  for (int n = 0; n <= K; ++n)
    for (int l = 0; l <= K; ++l)
      for (int n2 = 0; n2 <= K; ++n2)
        for (int l2 = 0; l2 <= K; ++l2) {
          const LadderElement r =
              star_product(wigner_element(WignerIndex::diag(n, l)), wigner_element(WignerIndex::diag(n2, l2)));
          diag = diag && (n == n2 && l == l2 ? r == wigner_element(WignerIndex::diag(n, l)) : r.is_zero());
        }
  out.push_back(exact("W_nl * W_n'l' = delta delta W_nl", diag, upto(K)));

  std::mt19937 rng(102);
  std::uniform_int_distribution<int> u(0, std::max(K, 1));
  bool offd = true;
  for (int i = 0; i < 200; ++i) {
    const WignerIndex x{u(rng), u(rng), u(rng), u(rng)}, y{u(rng), u(rng), u(rng), u(rng)};
    const LadderElement r = star_product(wigner_element(x), wigner_element(y));
    offd = offd && (x.n2 == y.n1 && x.l2 == y.l1 ? r == wigner_element({x.n1, y.n2, x.l1, y.l2}) : r.is_zero());
  }
  out.push_back(exact("off-diagonal composition rule, 200 random pairs", offd));

  // numeric mirror at five dyadic points through the resummed series
  const Params& p = opt.params;
  std::uniform_int_distribution<int> c(-6, 6);
  const int m = std::min(K, 4);
  const std::pair<WignerIndex, WignerIndex> pairs[] = {
      {WignerIndex::diag(0, 0), WignerIndex::diag(0, 0)}, {WignerIndex::diag(m, m), WignerIndex::diag(m, m)},
      {WignerIndex::diag(2 % (m + 1), 1 % (m + 1)), WignerIndex::diag(1 % (m + 1), 2 % (m + 1))},
      {WignerIndex::diag(m, 0), WignerIndex::diag(m, 0)}, {WignerIndex::diag(1 % (m + 1), m), WignerIndex::diag(1 % (m + 1), m)}};
  double worst = 0;
  for (const auto& [x, y] : pairs) {
    const PhasePoint pt{c(rng) / 16.0, c(rng) / 16.0, c(rng) / 16.0, c(rng) / 16.0};
    const WignerSectors f = wigner_sectors(x), g = wigner_sectors(y);
    const cplx expect = (x.n2 == y.n1 && x.l2 == y.l1) ? eval_wigner({x.n1, y.n2, x.l1, y.l2}, pt, p) : 0.0;
    const StarSeries s = star_numeric(f.sectors, g.sectors, pt, 80, p);
    worst = std::max(worst, std::abs(f.norm.to_complex() * g.norm.to_complex() * s.resummed - expect));
  }
  out.push_back(numeric("numeric mirror at 5 points (series order 80, resummed)", worst, 1e-6 * opt.tolerance_scale));
  return out;
}

// ---- normalization ------------------------------------------------------------

Results suite_normalization(const SuiteOptions& opt) {
  Results out;
  const Params& p = opt.params;
  const int K = pick(opt.max_index, 3);
  const int N = K + 1;
  const double h2 = p.h() * p.h();
  double norm = 0;
  for (int n = 0; n <= K; ++n)
    for (int l = 0; l <= K; ++l) {
      const cplx v = integrate_full([&](const PhasePoint& x) { return eval_wigner(WignerIndex::diag(n, l), x, p); },
                                    p, 4 + 2 * K);
      norm = std::max(norm, std::abs(v - h2) / h2);
    }
  out.push_back(numeric("int W_nl dV = h^2 (relative)", norm, 1e-10 * opt.tolerance_scale, upto(K)));
  auto batch = [&](const PhasePoint& x, cplx* res) {
    std::vector<cplx> w(static_cast<std::size_t>(N * N));
    for (int n = 0; n < N; ++n)
      for (int l = 0; l < N; ++l) w[static_cast<std::size_t>(n * N + l)] = eval_wigner(WignerIndex::diag(n, l), x, p);
    for (int a = 0; a < N * N; ++a)
      for (int b = 0; b < N * N; ++b) res[a * N * N + b] = w[static_cast<std::size_t>(a)] * w[static_cast<std::size_t>(b)];
  };
  const auto v = integrate_full(batch, N * N * N * N, p, 4 + 4 * K, 2.0);
  double orth = 0;
  for (int a = 0; a < N * N; ++a)
    for (int b = 0; b < N * N; ++b)
      orth = std::max(orth, std::abs(v[static_cast<std::size_t>(a * N * N + b)] - (a == b ? h2 : 0.0)) / h2);
  out.push_back(numeric("int W_nl W_n'l' dV = h^2 delta delta (relative)", orth, 1e-10 * opt.tolerance_scale, upto(K)));

  // marginals integrate to h^2
  double marg = 0;
  const int M = std::min(K, 2);
  for (int n = 0; n <= M; ++n)
    for (int l = 0; l <= M; ++l)
      for (Plane plane : all_planes()) {
        const auto [i, j] = plane_axes(plane);
        const double ui = axis_unit(i, p), uj = axis_unit(j, p);
        const QuadRule& r = gauss_hermite(30);
        double s = 0;
        for (int x = 0; x < 30; ++x)
          for (int y = 0; y < 30; ++y)
            s += r.scaled[x] * r.scaled[y] * marginal_closed(plane, n, l, ui * r.nodes[x], uj * r.nodes[y], p);
        marg = std::max(marg, std::abs(s * ui * uj - h2) / h2);
      }
  out.push_back(numeric("marginals integrate to h^2 on all six planes", marg, 1e-6 * opt.tolerance_scale, upto(M)));
  return out;
}

// ---- symmetry ------------------------------------------------------------------

Results suite_symmetry(const SuiteOptions& opt) {
  Results out;
  const Params& p = opt.params;
  const int K = pick(opt.max_index, 5);
  std::mt19937 rng(103);
  const auto pts = random_points(rng, 100, p);
  double disc = 0;
  for (int n = 0; n <= K; ++n)
    for (int l = 0; l <= K; ++l) disc = std::max(disc, check_discrete(n, l, pts, p).max());
  out.push_back(numeric("inversion, time reversal, parity, swap identities (100 points)", disc,
                        1e-12 * opt.tolerance_scale, upto(K)));

  std::uniform_real_distribution<double> s(0.3, 3.0), ang(-M_PI, M_PI);
  const Matrix4c J0 = standard_symplectic_form();
  double sympl = 0, inv = 0, ham = 0, mat = 0;
  const auto few = random_points(rng, 20, p);
  for (int k = 0; k < 100; ++k) {
    const SymplecticParams sp{s(rng), s(rng), ang(rng), ang(rng)};
    const Matrix4c C = symplectic_C(sp, p);
    sympl = std::max(sympl, (C * J0 * C.transpose() - J0).cwiseAbs().maxCoeff());
    const WignerIndex idx = WignerIndex::diag(k % (K + 1), (k / (K + 1)) % (K + 1));
    inv = std::max(inv, check_symplectic_invariance(idx, sp, few, p).ladder);
    ham = std::max(ham, check_hamiltonian_invariance(sp, few, p));
    const SymplecticParams rot{1, 1, sp.xi, sp.xi};
    const auto r = check_symplectic_invariance(idx, rot, few, p);
    if (r.matrix) mat = std::max(mat, *r.matrix);
  }
  const double t = 1e-12 * opt.tolerance_scale;
  out.push_back(numeric("C J0 C^T = J0 over 100 draws", sympl, t));
  out.push_back(numeric("W_nl invariant under the ladder scaling", inv, t));
  out.push_back(numeric("W_nl invariant under real C (rotations)", mat, t));
  out.push_back(numeric("H_L and J invariant under the ladder scaling", ham, t));

  double witness = 0;
  for (const PhasePoint& x : few)
    witness = std::max(witness, std::abs(eval_wigner(WignerIndex::diag(1, 0), translate(x, 0.5 * p.gamma(), 0, p), p) -
                                         eval_wigner(WignerIndex::diag(1, 0), x, p)));
  out.push_back({"translation is not a symmetry (must change W_10)", witness > 1e-3, witness, 1e-3, "residual must exceed tol"});
  return out;
}

// ---- gauge ------------------------------------------------------------------------

Results suite_gauge(const SuiteOptions& opt) {
  Results out;
  const Params& p = opt.params;
  const GaugeFn g = GaugeFn::symmetric_to_landau(p);
  double eig = 0;
  for (auto [n, l] : {std::pair{0, 0}, std::pair{1, 0}, std::pair{1, 1}})
    eig = std::max(eig, gauge_eigen_check(g, n, l, p).max());
  const bool rational = ExactParams::from(p).hbar == ExactParams::from(p).gamma * ExactParams::from(p).gamma * ExactParams::from(p).kappa;
  out.push_back(rational ? exact("H' * W' = E W' for chi = B q1 q2 / 2", eig == 0.0, "(0,0), (1,0), (1,1)")
                         : numeric("H' * W' = E W' for chi = B q1 q2 / 2", eig, 1e-12 * opt.tolerance_scale,
                                   "parameters not exactly representable"));
  out.push_back(exact("H' is the Landau-gauge Hamiltonian",
                      conjugate_function(g, landau_hamiltonian_poly(p), p) == gauge_hamiltonian_expected(g, p)));
  const double h2 = p.h() * p.h();
  double nrm = 0;
  for (int n = 0; n <= 2; ++n)
    for (int l = 0; l <= 2; ++l)
      nrm = std::max(nrm, std::abs(gauge_wigner_integral(gauge_wigner(g, WignerIndex::diag(n, l), p)) - h2) / h2);
  out.push_back(numeric("int W' dV = h^2 (relative)", nrm, 1e-6 * opt.tolerance_scale, "indices <= 2"));
  std::mt19937 rng(104);
  const auto pts = random_points(rng, 10, p, 1.5);
  const GaugedWigner w0 = gauge_wigner(g, WignerIndex::diag(0, 0), p);
  double direct = 0;
  for (const PhasePoint& x : pts) direct = std::max(direct, std::abs(gauge_ground_direct(g, x, p) - w0.eval(x)));
  out.push_back(numeric("W'_0 from the phase-multiplied wavefunction", direct, 1e-6 * opt.tolerance_scale));
  std::uniform_real_distribution<double> u(-1, 1);
  double kern = 0, kern_u = 0;
  GaugeFn small;
  small.chi = PhasePoly::monomial({1, 1, 0, 0}, QComplex(Rational(1, 2)));
  small.theta = Rational(1, 2);
  for (int k = 0; k < 5; ++k) {
    const std::array<double, 2> y{u(rng), u(rng)};
    const PhasePoint x{u(rng), u(rng), u(rng), u(rng)};
    kern = std::max(kern, verify_kernel_identity(PhasePoly::variable(0), PhasePoly::variable(1), y, x, p));
    const std::array<double, 2> ys{0.5 * y[0], 0.5 * y[1]};
    const PhasePoint xs{0.5 * x.q1, 0.5 * x.q2, x.p1, x.p2};
    kern_u = std::max(kern_u, verify_gauge_kernel(small, ys, xs, p, 8));
  }
  out.push_back(numeric("f1(q) * e^{-iy.p/hbar} * f2(q) kernel identity", kern, 1e-13 * opt.tolerance_scale));
  out.push_back(numeric("kernel identity with Taylor-truncated U", kern_u, 1e-6 * opt.tolerance_scale));
  return out;
}

// ---- appendix ------------------------------------------------------------------------

Results suite_appendix(const SuiteOptions& opt) {
  using namespace specialfn;
  Results out;
  const int K = pick(opt.max_index, 12);
  bool shift_ok = true;
  for (int n = 0; n <= K; ++n) shift_ok = shift_ok && verify_shift_operator_identity(n);
  out.push_back(exact("operator identity (1-T)^n x^n e^-x, symbolic", shift_ok, "n <= " + std::to_string(K)));
  double doubling = 0;
  const int Kd = std::max(K, 15);
  for (int n = 0; n <= Kd; ++n)
    for (double x : {0.0, 0.5, 1.0, 2.5, 10.0}) doubling = std::max(doubling, verify_laguerre_doubling_sum(n, x));
  out.push_back(numeric("L_n(2x) sum formula", doubling, 1e-10 * opt.tolerance_scale, "n <= " + std::to_string(Kd)));
  bool pn = true;
  for (int n = 0; n <= K; ++n) {
    Poly1 target = laguerre_series_poly(n, 0).scaled_argument(Rational(2));
    if (n % 2) target *= Rational(-1);
    pn = pn && ladder_polynomial(n) == target;
  }
  out.push_back(exact("P_n(u) = (-1)^n L_n(2u)", pn, "n <= " + std::to_string(K)));
  bool lag = true;
  for (int n = 0; n <= K; ++n)
    for (int al = 0; al <= 3; ++al)
      lag = lag && laguerre_series_poly(n, al) == laguerre_rodrigues_poly(n, al) &&
            laguerre_series_poly(n, al) == laguerre_recurrence_poly(n, al);
  out.push_back(exact("Laguerre: series, recurrence and Rodrigues agree", lag));
  return out;
}

const std::map<std::string, std::function<Results(const SuiteOptions&)>>& registry() {
  static const std::map<std::string, std::function<Results(const SuiteOptions&)>> r = {
      {"algebra", suite_algebra},   {"eigen", suite_eigen},       {"projection", suite_projection},
      {"normalization", suite_normalization}, {"symmetry", suite_symmetry}, {"gauge", suite_gauge},
      {"appendix", suite_appendix}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"algebra", "eigen", "projection", "normalization",
                                                 "symmetry", "gauge", "appendix"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  if (opt.max_index > 12) throw std::invalid_argument("--max-index must be at most 12");
  return it->second(opt);
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass || r.skipped; });
}

TransformReport gauge_transform_report(const GaugeFn& g, int n, int l, const SuiteOptions& opt) {
  g.validate();
  if (n < 0 || l < 0) throw std::invalid_argument("indices must be non-negative");
  const Params& p = opt.params;
  const ExactParams ep = ExactParams::from(p);
  TransformReport rep;
  rep.hamiltonian = conjugate_function(g, landau_hamiltonian_poly(p), p);
  Results& out = rep.checks;
  out.push_back(exact("H' = (p - A - theta hbar grad chi)^2 / 2m", rep.hamiltonian == gauge_hamiltonian_expected(g, p)));

  std::mt19937 rng(105);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_poly = [&] {
    PhasePoly f;
    for (int t = 0; t < 4; ++t) {
      Exponent4 e{0, 0, 0, 0};
      for (int k = 0; k < 3; ++k) e[static_cast<std::size_t>(rng() % 4)] += static_cast<int>(rng() % 2);
      f.add_term(e, QComplex(Rational(coef(rng)), Rational(coef(rng))));
    }
    return f;
  };
  bool morph = true;
  for (int k = 0; k < 5 && morph; ++k) {
    const PhasePoly f = random_poly(), h = random_poly();
    const PhasePoly lhs = conjugate_function(g, star_exact(PhaseGaussPoly(f), PhaseGaussPoly(h), ep.hbar), p);
    const PhaseGaussPoly rhs =
        star_exact(PhaseGaussPoly(conjugate_function(g, f, p)), PhaseGaussPoly(conjugate_function(g, h, p)), ep.hbar);
    morph = PhaseGaussPoly(lhs) == rhs;
  }
  out.push_back(exact("U * (f * g) * U^-1 = f' * g'", morph, "5 random polynomial pairs"));

  const std::string nl = "(n, l) = (" + std::to_string(n) + ", " + std::to_string(l) + ")";
  if (g.degree() > 2) {
    for (const char* name : {"H' * W' = E W' and W' * H' = E W'", "W' is real", "int W' dV = h^2 (relative)"}) {
      CheckResult r{name, false, 0.0, 0.0, "W' leaves the Gaussian class for degree > 2"};
      r.skipped = true;
      out.push_back(r);
    }
    return rep;
  }
  const double eig = gauge_eigen_check(g, n, l, p).max();
  const bool rational = ep.hbar == ep.gamma * ep.gamma * ep.kappa;
  out.push_back(rational ? exact("H' * W' = E W' and W' * H' = E W'", eig == 0.0, nl)
                         : numeric("H' * W' = E W' and W' * H' = E W'", eig, 1e-12 * opt.tolerance_scale,
                                   nl + ", parameters not exactly representable"));
  const GaugedWigner w = gauge_wigner(g, WignerIndex::diag(n, l), p);
  out.push_back(exact("W' is real", w.shape.conj() == w.shape, nl));
  const double h2 = p.h() * p.h();
  out.push_back(numeric("int W' dV = h^2 (relative)", std::abs(gauge_wigner_integral(w, std::max(12, n + l + 4)) - h2) / h2,
                        1e-6 * opt.tolerance_scale, nl));
  return rep;
}

}  // namespace landau
