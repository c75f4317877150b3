#include <cmath>
#include <random>

#include "doctest.h"
#include "landau/marginals.hpp"

using namespace landau;

namespace {

double plane_integral(const std::function<double(double, double)>& P, Plane plane, const Params& p, int order = 40) {
  // P carries its own Gaussian envelope, so divide it out again
  const auto [i, j] = plane_axes(plane);
  const double ui = axis_unit(i, p), uj = axis_unit(j, p);
  const QuadRule& r = gauss_hermite(order);
  double s = 0;
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) s += r.scaled[a] * r.scaled[b] * P(ui * r.nodes[a], uj * r.nodes[b]);
  return s * ui * uj;
}

}  // namespace

TEST_CASE("dimensionless variables") {
  const Params p(1.5, 0.7, 0.4);
  const DimensionlessVars d = dimensionless({0.3, -0.4, 0.1, 0.2}, p);
  CHECK(d.rho2 == doctest::Approx(0.25 / (p.gamma() * p.gamma())));
  // zeta^2 = |p|^2 / (m omega gamma)^2
  const double mwg = p.m() * p.omega() * p.gamma();
  CHECK(d.zeta2 == doctest::Approx(0.05 / (mwg * mwg)));
  CHECK(d.tau_plus == doctest::Approx((p.m() * p.omega() * 0.3 + 0.4) / mwg));
  CHECK(d.tau_minus == doctest::Approx((p.m() * p.omega() * 0.3 - 0.4) / mwg));
}

TEST_CASE("closed-form marginal examples") {
  const Params p(1.2, 1.7, 0.6);
  const double hg = p.hbar() / p.gamma();
  for (double q1 : {0.0, 0.4, -1.1}) {
    const double rho2 = q1 * q1 / (p.gamma() * p.gamma());
    CHECK(marginal_q1q2(0, 0, q1, 0, p) == doctest::Approx(4 * M_PI * hg * hg * std::exp(-rho2)));
    const DimensionlessVars d = dimensionless({q1, 0, 0, 0.3}, p);
    CHECK(marginal_q1p2(0, 0, q1, 0.3, p) ==
          doctest::Approx(4 * M_PI * p.hbar() * std::exp(-0.5 * (d.tau_plus * d.tau_plus + d.tau_minus * d.tau_minus))));
    CHECK(marginal_q2p1(0, 0, q1, 0.3, p) == marginal_q1p2(0, 0, q1, 0.3, p));
    CHECK(marginal_q2p1(2, 1, q1, 0.3, p) == marginal_q1p2(1, 2, q1, 0.3, p));
  }
  CHECK_THROWS_AS(marginal_q1q2(-1, 0, 0, 0, p), std::domain_error);
}

TEST_CASE("analytic marginals against quadrature") {
  const Params p;
  auto rng = std::mt19937(41);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= 3; ++l)
      for (Plane plane : all_planes())
        for (int k = 0; k < 3; ++k) {
          const double x = u(rng), y = u(rng);
          const MarginalResult r = marginal_numeric(WignerIndex::diag(n, l), plane, x, y, p);
          CHECK_FALSE(r.warning);
          const double c = marginal_closed(plane, n, l, x, y, p);
          INFO(plane_name(plane) << " n=" << n << " l=" << l);
          CHECK(std::abs(r.value - c) <= 1e-8 * (1 + std::abs(c)));
        }
  CHECK_THROWS_AS(marginal_numeric(WignerIndex::diag(3, 0), Plane::q1q2, 0, 0, p, 30), std::domain_error);
  CHECK_THROWS_AS(marginal_numeric({1, 0, 0, 0}, Plane::q1q2, 0, 0, p), std::domain_error);
}

TEST_CASE("marginal examples with other parameters") {
  const Params p(0.8, 2.5, 1.3);
  const MarginalResult r00 = marginal_numeric(WignerIndex::diag(0, 0), Plane::q1q2, 0.2, 0.5, p);
  CHECK(std::abs(r00.value - marginal_q1q2(0, 0, 0.2, 0.5, p)) <= 1e-10);
  // n < l uses the swapped form
  for (auto [n, l] : {std::pair{0, 2}, std::pair{1, 3}}) {
    const MarginalResult r = marginal_numeric(WignerIndex::diag(n, l), Plane::q1q2, 0.7, -0.3, p);
    CHECK(r.value == doctest::Approx(marginal_q1q2(n, l, 0.7, -0.3, p)).epsilon(1e-10));
  }
  const MarginalResult r21 = marginal_numeric(WignerIndex::diag(2, 1), Plane::q2p1, 0.4, -0.6, p);
  CHECK(r21.value == doctest::Approx(marginal_q2p1(2, 1, 0.4, -0.6, p)).epsilon(1e-8));
  // (1,2) on p1p2: nonnegative, integrates to h^2
  CHECK(marginal_numeric(WignerIndex::diag(1, 2), Plane::p1p2, 0.3, 0.2, p).value >= 0);
  const double h2 = p.h() * p.h();
  const double total = plane_integral(
      [&](double x, double y) {
        const double w = marginal_numeric(WignerIndex::diag(1, 2), Plane::p1p2, x, y, p, 28).value;
        const double ux = x / axis_unit(2, p), uy = y / axis_unit(3, p);
        return w * std::exp(ux * ux + uy * uy) * std::exp(-(ux * ux + uy * uy));
      },
      Plane::p1p2, p, 20);
  CHECK(total == doctest::Approx(h2).epsilon(1e-6));
  // (0,0) on q1p1 against an independent trapezoid integral
  const PhasePoint at = plane_point(Plane::q1p1, 0.3, -0.4);
  const cplx tr = integrate_plane_trapezoid([&](const PhasePoint& x) { return cplx(eval_ground(x, p)); },
                                            Plane::q2p2, at, p, 7.0, 141);
  const double gh = marginal_numeric(WignerIndex::diag(0, 0), Plane::q1p1, 0.3, -0.4, p).value;
  CHECK(gh > 0);
  CHECK(std::abs(gh - tr.real()) <= 1e-5 * gh);
}

TEST_CASE("normalization, positivity, axial symmetry") {
  const Params p(1.1, 1.9, 0.75);
  const double h2 = p.h() * p.h();
  auto rng = std::mt19937(42);
  std::uniform_real_distribution<double> u(-2.5, 2.5), ang(0, 2 * M_PI);
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= 3; ++l)
      for (Plane plane : all_planes()) {
        const auto [i, j] = plane_axes(plane);
        const double ui = axis_unit(i, p), uj = axis_unit(j, p);
        // the closed forms are polynomial times exp(-r^2) in the plane's units, with r^2 = x^2+y^2
        // except on q1p2 / q2p1, where the quadratic form is still exp(-|x|^2) after rescaling
        const double total = plane_integral([&](double x, double y) {
          const double r2 = x * x / (ui * ui) + y * y / (uj * uj);
          return marginal_closed(plane, n, l, x, y, p) * std::exp(r2) * std::exp(-r2);
        }, plane, p);
        INFO(plane_name(plane) << " n=" << n << " l=" << l);
        CHECK(total == doctest::Approx(h2).epsilon(1e-6));
        for (int k = 0; k < 20; ++k) {
          const double x = u(rng) * ui, y = u(rng) * uj;
          CHECK(marginal_closed(plane, n, l, x, y, p) >= 0);
          if (plane != Plane::q1p2 && plane != Plane::q2p1) {
            // rotate in the plane's own units
            const double t = ang(rng), cx = x / ui, cy = y / uj;
            const double rx = (std::cos(t) * cx - std::sin(t) * cy) * ui, ry = (std::sin(t) * cx + std::cos(t) * cy) * uj;
            const double a = marginal_numeric(WignerIndex::diag(n, l), plane, x, y, p).value;
            const double b = marginal_numeric(WignerIndex::diag(n, l), plane, rx, ry, p).value;
            CHECK(std::abs(a - b) <= 1e-10 * (1 + std::abs(a)));
          }
        }
      }
}

TEST_CASE("marginal generating function") {
  const Params p(1.3, 0.9, 0.8);
  const double hg = p.hbar() / p.gamma();
  for (double q1 : {0.0, 0.5}) {
    const double rho2 = (q1 * q1 + 0.09) / (p.gamma() * p.gamma());
    const cplx m0 = marginal_generating_q({}, q1, 0.3, p);
    CHECK(std::abs(m0 - M_PI * hg * hg * std::exp(-rho2)) <= 1e-14);
    CHECK(std::abs(4.0 * m0 - marginal_q1q2(0, 0, q1, 0.3, p)) <= 1e-13);
  }
  auto rng = std::mt19937(43);
  std::uniform_real_distribution<double> u(-1.2, 1.2), c(-0.5, 0.5);
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= 3; ++l)
      for (int k = 0; k < 4; ++k) {
        const double x = u(rng), y = u(rng);
        CHECK(std::abs(marginal_from_generating(n, l, x, y, p) - marginal_q1q2(n, l, x, y, p)) <= 1e-12);
      }
  for (int k = 0; k < 10; ++k) {
    const GenParams gp{{c(rng), c(rng)}, {c(rng), c(rng)}, {c(rng), c(rng)}, {c(rng), c(rng)}};
    const double x = u(rng), y = u(rng);
    const cplx quad = integrate_plane([&](const PhasePoint& pt) { return eval_generating(gp, pt, p); }, Plane::p1p2,
                                      {x, y, 0, 0}, p, 40);
    CHECK(std::abs(quad - marginal_generating_q(gp, x, y, p)) <= 1e-7 * (1 + std::abs(quad)));
  }
}

TEST_CASE("marginals are squared wavefunctions") {
  const Params p(0.9, 1.4, 1.1);
  const double h2 = p.h() * p.h();
  auto rng = std::mt19937(44);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= n; ++l) {
      const auto [nr, j] = radial_quantum_numbers(n, l);
      CHECK(nr == l);
      CHECK(std::abs(j) == n - l);
      for (int k = 0; k < 20; ++k) {
        const double x = u(rng), y = u(rng);
        const double psi2 = std::norm(wavefunction(nr, j, x, y, p));
        CHECK(std::abs(marginal_q1q2(n, l, x, y, p) - h2 * psi2) <= 1e-10 * (1 + h2 * psi2));
      }
    }
  // normalised: ∫ |psi|^2 dq = 1
  const double g = p.gamma();
  const QuadRule& r = gauss_hermite(30);
  for (auto [nr, j] : {std::pair{0, 0}, std::pair{1, -2}, std::pair{2, 3}}) {
    double s = 0;
    for (int a = 0; a < 30; ++a)
      for (int b = 0; b < 30; ++b)
        s += r.scaled[a] * r.scaled[b] * std::norm(wavefunction(nr, j, g * r.nodes[a], g * r.nodes[b], p));
    CHECK(s * g * g == doctest::Approx(1.0).epsilon(1e-12));
  }
  // energy ħω(n_r + 1/2 + (|j| - j)/2) = ħω(n + 1/2)
  for (int n = 0; n <= 4; ++n)
    for (int l = 0; l <= 4; ++l) {
      const auto [nr, j] = radial_quantum_numbers(n, l);
      CHECK(2 * nr + 1 + std::abs(j) - j == 2 * n + 1);
    }
}
