#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "landau/gauge.hpp"
#include "landau/symmetry.hpp"

using namespace landau;

namespace {

PhasePoly q1() { return PhasePoly::variable(0); }
PhasePoly q2() { return PhasePoly::variable(1); }
PhasePoly p1() { return PhasePoly::variable(2); }
PhasePoly p2() { return PhasePoly::variable(3); }
QComplex r(long a, long b = 1) { return QComplex(Rational(a, b)); }

GaugeFn cubic() {
  GaugeFn g;
  g.chi = q1() * q1() * q2() * r(1, 3) - q2() * q2() * q2() * r(1, 5) + q1() * r(2);
  g.theta = Rational(3, 4);
  return g;
}

}  // namespace

TEST_CASE("gauge functions") {
  GaugeFn g;
  g.chi = q1() * p1();
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.chi = q1() * QComplex::i();
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.chi = q1().pow(7);
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.chi = q1().pow(6) + q2();
  CHECK_NOTHROW(g.validate());

  CHECK(parse_gauge_poly("c*q1*q2", Rational(3)) == q1() * q2() * r(3));
  CHECK(parse_gauge_poly(" -0.5*q1^2 + (q2 - 1)^2 ", 0) == q1() * q1() * r(-1, 2) + (q2() - r(1)) * (q2() - r(1)));
  CHECK(parse_gauge_poly("2.5e-1*q2", 0) == q2() * r(1, 4));
  for (const char* bad : {"q1*p1", "q1 +", "3**q1", "(q1", "x", "q1^"})
    CHECK_THROWS_AS(parse_gauge_poly(bad, 1), std::invalid_argument);
}

TEST_CASE("conjugated momenta") {
  const Params p;
  GaugeFn g;
  g.chi = r(5);
  CHECK(conjugate_momentum(g, 1, p) == p1());
  CHECK(conjugate_momentum(g, 2, p) == p2());
  g.chi = q1() * r(3);
  g.theta = Rational(1, 2);
  // hbar = 1: p1 - theta hbar c1
  CHECK(conjugate_momentum(g, 1, p) == p1() - r(3, 2));
  CHECK(conjugate_momentum(g, 2, p) == p2());
  const GaugeFn c = cubic();
  CHECK(conjugate_momentum(c, 1, p) == p1() - c.chi.derivative(0) * QComplex(c.theta));
  CHECK(conjugate_momentum(c, 2, p) == p2() - c.chi.derivative(1) * QComplex(c.theta));
  CHECK_THROWS(conjugate_momentum(c, 3, p));
  CHECK(conjugate_function(c, q1() * q2() * q2(), p) == q1() * q2() * q2());
}

TEST_CASE("conjugation is an algebra automorphism") {
  auto rng = testutil::rng(61);
  const Params p(1.0, 8.0, 1.0);
  const Rational hbar = ExactParams::from(p).hbar;
  const GaugeFn g = cubic();
  for (int k = 0; k < 10; ++k) {
    const PhasePoly f = testutil::random_poly<CanonicalChart>(rng, 3, 4);
    const PhasePoly h = testutil::random_poly<CanonicalChart>(rng, 3, 4);
    const PhaseGaussPoly fh = star_exact(PhaseGaussPoly(f), PhaseGaussPoly(h), hbar);
    const PhasePoly lhs = conjugate_function(g, fh, p);
    const PhaseGaussPoly rhs =
        star_exact(PhaseGaussPoly(conjugate_function(g, f, p)), PhaseGaussPoly(conjugate_function(g, h, p)), hbar);
    CHECK(PhaseGaussPoly(lhs) == rhs);
    // conjugation back
    GaugeFn inv = g;
    inv.theta = -g.theta;
    CHECK(conjugate_function(inv, conjugate_function(g, f, p), p) == f);
  }
  CHECK_THROWS_AS(conjugate_function(g, PhaseGaussPoly(q1(), q1() * q1()), p), unsupported_class);
}

TEST_CASE("transformed Hamiltonian") {
  for (const Params& p : {Params(), Params(1.0, 8.0, 1.0), Params(0.5, 3.0, 0.75)}) {
    const PhasePoly H = landau_hamiltonian_poly(p);
    for (int sign : {1, -1}) {
      const GaugeFn g = GaugeFn::symmetric_to_landau(p, sign);
      CHECK(conjugate_function(g, H, p) == gauge_hamiltonian_expected(g, p));
    }
    CHECK(conjugate_function(cubic(), H, p) == gauge_hamiltonian_expected(cubic(), p));
    // sign +1 is the Landau gauge: (p1^2 + (p2 - 2 kappa q1)^2)/2m
    const ExactParams ep = ExactParams::from(p);
    const PhasePoly s2 = p2() - q1() * QComplex(2 * ep.kappa);
    CHECK(conjugate_function(GaugeFn::symmetric_to_landau(p), H, p) == (p1() * p1() + s2 * s2) * QComplex(1 / (2 * ep.m)));
  }
  // and it agrees with the phase-space energy function
  const Params p;
  auto rng = std::mt19937(62);
  const auto pts = random_points(rng, 10, p);
  for (const PhasePoint& x : pts)
    CHECK(landau_hamiltonian_poly(p).eval({x.q1, x.q2, x.p1, x.p2}).real() ==
          doctest::Approx(landau_energy_reduced(x, p) * p.hbar() * p.omega()));
}

TEST_CASE("kernel identity") {
  auto rng = testutil::rng(63);
  std::uniform_real_distribution<double> u(-1, 1);
  const Params p(1.0, 2.0, 0.5);
  const PhasePoint pt{0.3, -0.2, 0.7, 0.1};
  CHECK(verify_kernel_identity(r(1), r(1), {0.4, -0.3}, pt, p) <= 1e-15);
  for (int k = 0; k < 5; ++k) {
    const std::array<double, 2> y{u(rng), u(rng)};
    const PhasePoint x{u(rng), u(rng), u(rng), u(rng)};
    CHECK(verify_kernel_identity(q1(), q2(), y, x, p) <= 1e-13);
    CHECK(verify_kernel_identity(q1() * q1() * q2() - r(2), q2().pow(3) + q1(), y, x, p) <= 1e-12);
  }
  CHECK_THROWS(verify_kernel_identity(p1(), r(1), {0, 0}, pt, p));
  // truncated U: |theta chi| <= 0.5 on the points used
  GaugeFn g;
  g.chi = q1() * q2() * r(1, 2) + q1() * r(1, 4);
  g.theta = Rational(1, 2);
  for (int k = 0; k < 5; ++k) {
    const std::array<double, 2> y{0.5 * u(rng), 0.5 * u(rng)};
    const PhasePoint x{0.5 * u(rng), 0.5 * u(rng), u(rng), u(rng)};
    CHECK(verify_gauge_kernel(g, y, x, p, 8) <= 1e-6);
  }
}

TEST_CASE("truncated unitarity") {
  GaugeFn g;
  g.chi = q1() * q2() + q1() * q1() * r(1, 2);
  g.theta = Rational(1, 3);
  const Params p;
  const Rational hbar = ExactParams::from(p).hbar;
  for (int N : {4, 8, 12}) {
    const PhasePoly U = taylor_unitary(g, N, 1), Ui = taylor_unitary(g, N, -1);
    const PhaseGaussPoly one = star_exact(PhaseGaussPoly(U), PhaseGaussPoly(Ui), hbar);
    CHECK(one == PhaseGaussPoly(U * Ui));  // q-only functions star-multiply pointwise
    for (double x : {0.2, 0.6, 1.0}) {
      const double phi = std::abs(to_double(g.theta) * (x * 0.5 * x + x * -0.8));
      const cplx v = one.eval({x, -0.8, 0.3, 0.3});
      const double bound = 2 * std::pow(phi, N + 1) / std::tgamma(N + 2.0) * std::exp(phi);
      CHECK(std::abs(v - 1.0) <= bound + 1e-15);
    }
  }
}

TEST_CASE("gauge-transformed Wigner functions") {
  const Params p(1.0, 8.0, 1.0);
  for (int sign : {1, -1}) {
    const GaugeFn g = GaugeFn::symmetric_to_landau(p, sign);
    for (auto [n, l] : {std::pair{0, 0}, std::pair{1, 0}, std::pair{1, 1}, std::pair{2, 1}}) {
      const EigenResidual e = gauge_eigen_check(g, n, l, p);
      CHECK(e.max() == 0.0);
      // the untransformed function is not an eigenfunction of H'
      const GaugedWigner w0 = canonical_wigner(WignerIndex::diag(n, l), p);
      const PhaseGaussPoly H(conjugate_function(g, landau_hamiltonian_poly(p), p));
      const ExactParams ep = ExactParams::from(p);
      const QComplex E(ep.hbar * ep.omega * Rational(2 * n + 1, 2));
      CHECK((star_exact(H, w0.shape, ep.hbar) - w0.shape * E).poly().max_abs_coeff() > 1e-3);
    }
  }
  // real, and equal to the original at q where grad chi = 0
  const GaugeFn g = GaugeFn::symmetric_to_landau(p);
  const GaugedWigner w = gauge_wigner(g, WignerIndex::diag(2, 1), p);
  CHECK(w.shape.conj() == w.shape);
  CHECK(std::abs(w.eval({0, 0, 0.3, -0.2}) - eval_wigner(WignerIndex::diag(2, 1), {0, 0, 0.3, -0.2}, p)) <= 1e-13);
  CHECK_THROWS_AS(gauge_wigner(cubic(), WignerIndex::diag(0, 0), p), unsupported_class);
  // chi = 0 gives back the closed form
  auto rng = std::mt19937(64);
  for (const PhasePoint& x : random_points(rng, 10, p))
    CHECK(std::abs(canonical_wigner({2, 1, 0, 3}, p).eval(x) - eval_wigner({2, 1, 0, 3}, x, p)) <= 1e-12);
}

TEST_CASE("normalization of transformed Wigner functions") {
  const Params p;
  const double h2 = p.h() * p.h();
  for (int sign : {1, -1}) {
    const GaugeFn g = GaugeFn::symmetric_to_landau(p, sign);
    for (int n = 0; n <= 2; ++n)
      for (int l = 0; l <= 2; ++l) {
        const cplx v = gauge_wigner_integral(gauge_wigner(g, WignerIndex::diag(n, l), p));
        CHECK(std::abs(v - h2) <= 1e-6 * h2);
      }
  }
  // a linear gauge too
  GaugeFn lin;
  lin.chi = q1() * r(1, 2) - q2();
  CHECK(std::abs(gauge_wigner_integral(gauge_wigner(lin, WignerIndex::diag(1, 2), p)) - h2) <= 1e-6 * h2);
}

TEST_CASE("transformed Wigner function from the transformed wavefunction") {
  auto rng = std::mt19937(65);
  for (const Params& p : {Params(), Params(1.3, 0.9, 0.7)}) {
    const auto pts = random_points(rng, 8, p, 1.5);
    GaugeFn quad;
    quad.chi = q1() * q2() * r(1, 3) + q2() * q2() * r(-1, 4) + q1() * r(1, 2);
    for (const GaugeFn& g : {GaugeFn::symmetric_to_landau(p), quad}) {
      const GaugedWigner w = gauge_wigner(g, WignerIndex::diag(0, 0), p);
      for (const PhasePoint& x : pts) CHECK(std::abs(gauge_ground_direct(g, x, p) - w.eval(x)) <= 1e-6);
    }
    // chi = 0: the defining integral of the ground state
    GaugeFn none;
    for (const PhasePoint& x : pts) CHECK(std::abs(gauge_ground_direct(none, x, p) - eval_ground(x, p)) <= 1e-10);
  }
}

TEST_CASE("truncated U acting on a Wigner function") {
  // U_N * W * U_N^-1 through the terminating series tends to W'
  const Params p;
  const Rational hbar = ExactParams::from(p).hbar;
  GaugeFn g;
  g.chi = q1() * q2();
  g.theta = Rational(1, 8);
  const GaugedWigner w = canonical_wigner(WignerIndex::diag(1, 0), p);
  const GaugedWigner wt = gauge_wigner(g, WignerIndex::diag(1, 0), p);
  const PhaseGaussPoly U(taylor_unitary(g, 7, 1)), Ui(taylor_unitary(g, 7, -1));
  const PhaseGaussPoly approx = star_exact(star_exact(U, w.shape, hbar), Ui, hbar);
  for (const PhasePoint& x : {PhasePoint{0.3, 0.4, -0.2, 0.5}, PhasePoint{-0.5, 0.2, 0.6, 0.1}}) {
    const cplx a = w.norm.to_complex() * approx.eval({x.q1, x.q2, x.p1, x.p2});
    CHECK(std::abs(a - wt.eval(x)) <= 1e-6);
    CHECK(std::abs(wt.eval(x) - w.eval(x)) > 1e-4);
  }
}
