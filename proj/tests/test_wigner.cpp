#include <cmath>
#include <random>

#include "doctest.h"
#include "landau/specialfn.hpp"
#include "landau/wigner.hpp"

using namespace landau;

namespace {

PhasePoint random_point(std::mt19937& rng, double scale = 1.5) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng), u(rng)};
}

std::array<cplx, 4> ladder_array(const PhasePoint& pt, const Params& p) {
  const LadderPoint x = to_ladder(pt, p);
  return {x.a, x.abar, x.b, x.bbar};
}

double fact(int n) { return std::tgamma(n + 1.0); }

}  // namespace

TEST_CASE("ground state") {
  const Params p;
  CHECK(eval_ground({0, 0, 0, 0}, p) == 4.0);
  CHECK(eval_ground({p.gamma(), 0, 0, 0}, p) == doctest::Approx(4 * std::exp(-1.0)).epsilon(1e-15));
  CHECK(eval_ground({std::sqrt(2.0) * p.gamma(), 0, 0, 0}, p) == doctest::Approx(4 * std::exp(-2.0)).epsilon(1e-15));
  auto rng = std::mt19937(1);
  for (const Params& q : {Params(), Params(1.7, 0.4, 0.9)})
    for (int i = 0; i < 20; ++i) {
      const PhasePoint pt = random_point(rng);
      CHECK(std::abs(eval_wigner({0, 0, 0, 0}, pt, q) - eval_ground(pt, q)) <= 1e-15);
    }
}

TEST_CASE("origin values") {
  const Params p;
  for (int n = 0; n <= 6; ++n)
    for (int l = 0; l <= 6; ++l) {
      const cplx w = eval_wigner(WignerIndex::diag(n, l), {0, 0, 0, 0}, p);
      CHECK(std::abs(w - 4.0 * (((n + l) % 2) ? -1.0 : 1.0)) <= 1e-14);
    }
}

TEST_CASE("diagonal closed forms agree and are real") {
  auto rng = std::mt19937(2);
  for (const Params& p : {Params(), Params(0.6, 3.0, 1.3)})
    for (int n = 0; n <= 5; ++n)
      for (int l = 0; l <= 5; ++l)
        for (int i = 0; i < 5; ++i) {
          const PhasePoint pt = random_point(rng);
          const cplx raw = eval_wigner_ladder(WignerIndex::diag(n, l), to_ladder(pt, p));
          CHECK(std::abs(raw.imag()) <= 1e-14 * (1 + std::abs(raw)));
          CHECK(std::abs(raw.real() - eval_wigner_energy_form(n, l, pt, p)) <= 1e-12);
        }
}

TEST_CASE("off-diagonal values") {
  const Params p;
  auto rng = std::mt19937(3);
  for (int i = 0; i < 10; ++i) {
    const PhasePoint pt = random_point(rng);
    const LadderPoint x = to_ladder(pt, p);
    const cplx w = eval_wigner({1, 0, 0, 0}, pt, p);
    CHECK(std::abs(w - 4.0 * 2.0 * x.abar * std::exp(-ground_exponent(pt, p))) <= 1e-14);
    // direct substitution with the superscript rule applied by laguerre()
    const WignerIndex idx{1, 3, 4, 2};
    const cplx direct = 4.0 * std::sqrt(fact(3) * fact(2) / (fact(1) * fact(4))) * 1.0 *
                        std::pow(2.0 * x.abar, -2) * std::pow(2.0 * x.bbar, 2) *
                        specialfn::laguerre(3, -2, 4.0 * std::norm(x.a)) *
                        specialfn::laguerre(2, 2, 4.0 * std::norm(x.b)) * std::exp(-ground_exponent(pt, p)) *
                        (((3 + 2) % 2) ? -1.0 : 1.0);
    CHECK(std::abs(eval_wigner(idx, pt, p) - direct) <= 1e-12 * (1 + std::abs(direct)));
  }
}

TEST_CASE("hermiticity of the off-diagonal family") {
  const Params p;
  auto rng = std::mt19937(4);
  for (int i = 0; i < 30; ++i) {
    const PhasePoint pt = random_point(rng);
    const WignerIndex idx{static_cast<int>(rng() % 5), static_cast<int>(rng() % 5), static_cast<int>(rng() % 5),
                          static_cast<int>(rng() % 5)};
    const WignerIndex swapped{idx.n2, idx.n1, idx.l2, idx.l1};
    CHECK(std::abs(std::conj(eval_wigner(idx, pt, p)) - eval_wigner(swapped, pt, p)) <= 1e-12);
  }
}

TEST_CASE("generating function") {
  auto rng = std::mt19937(5);
  for (const Params& p : {Params(), Params(2.0, 1.5, 0.7)})
    for (int i = 0; i < 10; ++i) {
      const PhasePoint pt = random_point(rng);
      CHECK(std::abs(4.0 * eval_generating({}, pt, p) - eval_ground(pt, p)) <= 1e-15);
      GenParams gp{{0.3, -0.1}, {-0.2, 0.4}, {0.1, 0.2}, {0.5, -0.3}};
      const cplx g = eval_generating(gp, pt, p);
      CHECK(std::abs(generating_gausspoly(gp).eval(ladder_array(pt, p)) - g) <= 1e-13 * std::abs(g));
    }
}

TEST_CASE("derive_wigner_from_G agrees with the closed form") {
  const Params p;
  auto rng = std::mt19937(6);
  CHECK(std::abs(derive_wigner_from_G({0, 0, 0, 0}, {0.2, 0.1, -0.3, 0.4}, p) -
                 eval_ground({0.2, 0.1, -0.3, 0.4}, p)) <= 1e-15);
  for (int i = 0; i < 5; ++i) {
    const PhasePoint pt = random_point(rng);
    CHECK(std::abs(derive_wigner_from_G({1, 1, 0, 0}, pt, p) - eval_wigner({1, 1, 0, 0}, pt, p)) <= 1e-12);
    CHECK(std::abs(derive_wigner_from_G({2, 1, 3, 1}, pt, p) - eval_wigner({2, 1, 3, 1}, pt, p)) <= 1e-10);
  }
  for (int n1 = 0; n1 <= 4; ++n1)
    for (int n2 = 0; n2 <= 4; ++n2)
      for (int l1 = 0; l1 <= 3; ++l1)
        for (int l2 = 0; l2 <= 3; ++l2) {
          const PhasePoint pt = random_point(rng);
          const WignerIndex idx{n1, n2, l1, l2};
          CHECK(std::abs(derive_wigner_from_G(idx, pt, p) - eval_wigner(idx, pt, p)) <= 1e-10);
        }
}

TEST_CASE("exact Gaussian-polynomial form") {
  const Params p;
  auto rng = std::mt19937(7);
  for (int i = 0; i < 30; ++i) {
    const WignerIndex idx{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), static_cast<int>(rng() % 4),
                          static_cast<int>(rng() % 4)};
    const PhasePoint pt = random_point(rng);
    const auto x = ladder_array(pt, p);
    const WignerPoly w = wigner_gausspoly(idx);
    const cplx ref = eval_wigner(idx, pt, p);
    CHECK(std::abs(w.norm.to_complex() * w.shape.eval(x) - ref) <= 1e-12);
    const WignerSectors s = wigner_sectors(idx);
    CHECK(std::abs(s.norm.to_complex() * s.sectors.eval(to_ladder(pt, p)) - ref) <= 1e-12);
  }
  CHECK(wigner_gausspoly(WignerIndex::diag(3, 2)).norm == Surd(1));
  CHECK(wigner_gausspoly({2, 1, 0, 0}).norm == Surd::sqrt_of(Rational(1, 2)));
}

TEST_CASE("star-eigenvalue equations, exact") {
  const LadderPoly a = ladder_a(), ab = ladder_abar(), b = ladder_b(), bb = ladder_bbar();
  const GaussPolyFn HL(ab * a), J(bb * b - ab * a);
  for (int n = 0; n <= 5; ++n)
    for (int l = 0; l <= 5; ++l) {
      const GaussPolyFn W = wigner_gausspoly(WignerIndex::diag(n, l)).shape;
      CHECK((star_exact(HL, W) - W * QComplex(Rational(2 * n + 1, 2))).is_zero());
      CHECK((star_exact(W, HL) - W * QComplex(Rational(2 * n + 1, 2))).is_zero());
      CHECK((star_exact(J, W) - W * QComplex(l - n)).is_zero());
    }
}

TEST_CASE("coherent-state and Bopp relations") {
  auto rng = std::mt19937(8);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (const Params& p : {Params(), Params(1.3, 0.9, 0.6)})
    for (int i = 0; i < 10; ++i) {
      const GenParams gp{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
      const CoherentResiduals r = coherent_residuals(gp, random_point(rng, 1.0), p);
      CHECK(r.max() <= 1e-10);
    }
}

TEST_CASE("projection through the resummed star series") {
  const Params p;
  auto rng = std::mt19937(9);
  std::uniform_int_distribution<int> u(-6, 6);
  struct Case {
    WignerIndex i, j;
    int order;
  };
  // index jumps of 3 need a longer series
  for (const Case& c : {Case{WignerIndex::diag(0, 0), WignerIndex::diag(0, 0), 80},
                        Case{WignerIndex::diag(2, 1), WignerIndex::diag(2, 1), 80},
                        Case{WignerIndex::diag(2, 1), WignerIndex::diag(1, 2), 80},
                        Case{WignerIndex::diag(4, 4), WignerIndex::diag(4, 4), 80},
                        Case{WignerIndex::diag(4, 3), WignerIndex::diag(3, 4), 80},
                        Case{{1, 0, 0, 0}, {0, 1, 0, 0}, 80},
                        Case{{2, 1, 0, 3}, {2, 1, 0, 3}, 80},
                        Case{{2, 1, 0, 3}, {1, 3, 3, 1}, 160}}) {
    const auto& [i, j, order] = c;
    const PhasePoint pt{u(rng) / 16.0, u(rng) / 16.0, u(rng) / 16.0, u(rng) / 16.0};
    const WignerSectors f = wigner_sectors(i), g = wigner_sectors(j);
    const cplx expect = (i.n2 == j.n1 && i.l2 == j.l1) ? eval_wigner({i.n1, j.n2, i.l1, j.l2}, pt, p) : 0.0;
    const StarSeries s = star_numeric(f.sectors, g.sectors, pt, order, p);
    const cplx v = f.norm.to_complex() * g.norm.to_complex() * s.resummed;
    INFO(i.str() << " * " << j.str());
    CHECK(std::abs(v - expect) <= 1e-10);
  }
}
