#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "landau/quad.hpp"
#include "landau/wigner.hpp"

using namespace landau;

namespace {

double double_factorial_moment(int k) {
  // ∫ x^{2k} e^{-x^2} dx = (2k-1)!! sqrt(pi) / 2^k
  double r = std::sqrt(M_PI);
  for (int j = 1; j <= k; ++j) r *= (2 * j - 1) / 2.0;
  return r;
}

std::array<cplx, 4> ladder_array(const PhasePoint& pt, const Params& p) {
  const LadderPoint x = to_ladder(pt, p);
  return {x.a, x.abar, x.b, x.bbar};
}

}  // namespace

TEST_CASE("Gauss-Hermite rules") {
  for (int n : {1, 2, 5, 10, 20, 40, 80}) {
    const QuadRule& r = gauss_hermite(n);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
    double wsum = 0.0;
    for (int i = 0; i < n; ++i) {
      CHECK(r.weights[i] > 0);
      CHECK(r.nodes[i] == -r.nodes[n - 1 - i]);
      wsum += r.weights[i];
    }
    CHECK(wsum == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    for (int k = 0; k < std::min(n, 30); ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], 2 * k);
      CHECK(s == doctest::Approx(double_factorial_moment(k)).epsilon(1e-12));
    }
  }
  CHECK(&gauss_hermite(12) == &gauss_hermite(12));
  CHECK_THROWS(gauss_hermite(0));
  CHECK(gauss_hermite(3).nodes[1] == 0.0);
  CHECK(gauss_hermite(2).nodes[1] == doctest::Approx(1 / std::sqrt(2.0)));
}

TEST_CASE("planes") {
  for (Plane p : all_planes()) {
    CHECK(parse_plane(plane_name(p)) == p);
    CHECK(complement(complement(p)) == p);
    const auto [i, j] = plane_axes(p);
    const auto [k, l] = plane_axes(complement(p));
    CHECK((1 << i | 1 << j | 1 << k | 1 << l) == 15);
  }
  CHECK_THROWS_AS(parse_plane("q1q1"), std::invalid_argument);
  const PhasePoint x = plane_point(Plane::q2p1, 3, 4, {1, 1, 1, 1});
  CHECK(x.q1 == 1);
  CHECK(x.q2 == 3);
  CHECK(x.p1 == 4);
}

TEST_CASE("normalization of Wigner functions") {
  for (const Params& p : {Params(), Params(1.3, 0.7, 0.45)}) {
    const double h2 = p.h() * p.h();
    const cplx i0 = integrate_full([&](const PhasePoint& x) { return cplx(eval_ground(x, p)); }, p, 4);
    CHECK(std::abs(i0 - h2) <= 1e-12 * h2);
    for (int n = 0; n <= 4; ++n)
      for (int l = 0; l <= 4; ++l) {
        const cplx v = integrate_full([&](const PhasePoint& x) { return eval_wigner(WignerIndex::diag(n, l), x, p); },
                                      p, 12);
        CHECK(std::abs(v - h2) <= 1e-12 * h2);
      }
  }
}

TEST_CASE("orthogonality and order doubling") {
  const Params p;
  const double h2 = p.h() * p.h();
  const int N = 4;  // indices 0..3
  auto batch = [&](const PhasePoint& x, cplx* out) {
    cplx w[N * N];
    for (int n = 0; n < N; ++n)
      for (int l = 0; l < N; ++l) w[n * N + l] = eval_wigner(WignerIndex::diag(n, l), x, p);
    for (int a = 0; a < N * N; ++a)
      for (int b = 0; b < N * N; ++b) out[a * N * N + b] = w[a] * w[b];
  };
  const auto lo = integrate_full(batch, N * N * N * N, p, 16, 2.0);
  const auto hi = integrate_full(batch, N * N * N * N, p, 32, 2.0);
  for (int a = 0; a < N * N; ++a)
    for (int b = 0; b < N * N; ++b) {
      const double expect = a == b ? h2 : 0.0;
      CHECK(std::abs(lo[a * N * N + b] - expect) <= 1e-10 * h2);
      CHECK(std::abs(lo[a * N * N + b] - hi[a * N * N + b]) <= 1e-10 * h2);
    }
}

TEST_CASE("general Gaussian envelope") {
  Eigen::Matrix4d M = Eigen::Matrix4d::Random();
  const Eigen::Matrix4d Q = M * M.transpose() + Eigen::Matrix4d::Identity();
  auto f = [&](const PhasePoint& x) {
    const Eigen::Vector4d y = x.vec();
    return cplx(std::exp(-y.dot(Q * y)) * (1 + y[0] * y[1]));
  };
  // ∫ y0 y1 e^{-yQy} = (π²/sqrt det Q) (Q^{-1})_{01} / 2
  const double base = M_PI * M_PI / std::sqrt(Q.determinant());
  const double expect = base * (1 + 0.5 * Q.inverse()(0, 1));
  CHECK(std::abs(integrate_gaussian(f, Q, 6) - expect) <= 1e-12 * base);
  CHECK_THROWS(integrate_gaussian(f, -Q, 6));
}

TEST_CASE("plane quadrature against the trapezoid rule") {
  const Params p(1.0, 1.5, 0.8);
  const WignerIndex idx = WignerIndex::diag(1, 2);
  auto f = [&](const PhasePoint& x) { return eval_wigner(idx, x, p); };
  for (Plane over : all_planes()) {
    const PhasePoint fixed = plane_point(complement(over), 0.3, -0.2);
    const QuadResult gh = integrate_plane_checked(f, over, fixed, p, 30, 1e-12);
    const cplx tr = integrate_plane_trapezoid(f, over, fixed, p, 8.0, 161);
    CHECK_FALSE(gh.warning);
    CHECK(std::abs(gh.value - tr) <= 1e-9 * (1 + std::abs(tr)));
  }
  // a non-Gaussian integrand trips the order check
  auto rough = [](const PhasePoint& x) { return cplx(1.0 / (1.0 + x.q1 * x.q1 + x.q2 * x.q2)); };
  CHECK(integrate_plane_checked(rough, Plane::q1q2, {}, p, 10, 1e-10).warning);
}

TEST_CASE("trace property of the star product") {
  auto rng = testutil::rng(31);
  const Params p(1.2, 0.9, 0.7);
  for (int i = 0; i < 8; ++i) {
    const LadderPoly P = testutil::random_poly<LadderChart>(rng, 2, 5);
    const LadderPoly R = testutil::random_poly<LadderChart>(rng, 2, 5);
    // conj(P) in g keeps the integral away from zero
    const GaussPolyFn f = make_gauss_fn(P, Rational(1)), g(R + P.conj());
    const GaussPolyFn fg = star_exact(f, g), gf = star_exact(g, f);
    auto integral = [&](const GaussPolyFn& h, bool absolute = false) {
      return integrate_full(
          [&](const PhasePoint& x) {
            const cplx v = h.eval(ladder_array(x, p));
            return absolute ? cplx(std::abs(v)) : v;
          },
          p, 12, 0.5);
    };
    const GaussPolyFn fg_plain = pointwise(f, g);
    const cplx plain = integral(fg_plain);
    const double scale = std::abs(integral(fg_plain, true));
    CHECK(std::abs(integral(fg) - plain) <= 1e-8 * scale);
    CHECK(std::abs(integral(gf) - plain) <= 1e-8 * scale);
    CHECK(std::abs(integral(fg - gf)) <= 1e-8 * scale);
    CHECK(std::abs(plain) >= 1e-3 * scale);
  }
}

TEST_CASE("grids") {
  GridSpec spec{-2, 2, 21, -3, 3, 31};
  const FieldGrid c = sample_grid([](double, double) { return cplx(2.5); }, spec, {{"kind", "const"}});
  CHECK(c.values.size() == 21 * 31);
  for (cplx z : c.values) CHECK(z == 2.5);
  CHECK(c.is_real());
  CHECK(c.metadata.at(0).second == "const");
  CHECK(spec.u(0) == -2);
  CHECK(spec.u(20) == 2);
  CHECK(spec.v(15) == doctest::Approx(0.0));

  const Params p;
  const FieldGrid w = sample_grid([&](double u, double v) { return cplx(eval_ground({u, v, 0, 0}, p)); },
                                  {-3, 3, 41, -3, 3, 41});
  const std::size_t N = w.values.size();
  double mx = 0;
  for (std::size_t k = 0; k < N; ++k) {
    CHECK(w.values[k] == w.values[N - 1 - k]);
    mx = std::max(mx, w.values[k].real());
  }
  CHECK(mx == 4.0);
  CHECK(w.at(20, 20) == 4.0);

  CHECK_THROWS(sample_grid([](double, double) { return cplx(0); }, {-1, 1, 1, -1, 1, 5}));
  CHECK_THROWS(sample_grid([](double, double) { return cplx(0); }, {-1, INFINITY, 3, -1, 1, 5}));
}
