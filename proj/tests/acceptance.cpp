// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "landau/gauge.hpp"
#include "landau/marginals.hpp"
#include "landau/symmetry.hpp"
#include "landau/verify.hpp"
#include "landau/wigner.hpp"

using namespace landau;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string e3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

// a suite restricted to the checks whose names contain one of `keys` (all when empty)
Outcome suite(const std::string& name, int max_index, std::vector<std::string> keys = {}) {
  SuiteOptions so;
  so.max_index = max_index;
  bool ok = true;
  std::string detail;
  int used = 0;
  for (const CheckResult& r : run_suite(name, so)) {
    bool wanted = keys.empty();
    for (const auto& k : keys) wanted = wanted || r.name.find(k) != std::string::npos;
    if (!wanted) continue;
    ++used;
    ok = ok && r.pass;
    if (!r.pass) detail += " [" + r.name + ": " + e3(r.residual) + "]";
  }
  if (used == 0) return {false, "no checks selected"};
  return {ok, std::to_string(used) + " checks" + detail};
}

Outcome origin_values() {
  const Params p;
  double worst = 0;
  for (int n = 0; n <= 6; ++n)
    for (int l = 0; l <= 6; ++l) {
      const double expect = 4.0 * ((n + l) % 2 ? -1 : 1);
      worst = std::max(worst, std::abs(eval_wigner(WignerIndex::diag(n, l), {0, 0, 0, 0}, p) - expect));
    }
  return {worst <= 1e-14, "max |W_nl(0) - 4(-1)^(n+l)| = " + e3(worst) + ", n,l <= 6"};
}

Outcome marginal_bridge() {
  const Params p(0.9, 1.4, 1.1);
  const double h2 = p.h() * p.h();
  std::mt19937 rng(2001);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double bridge = 0;
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= n; ++l) {
      const auto [nr, j] = radial_quantum_numbers(n, l);
      for (int k = 0; k < 20; ++k) {
        const double x = u(rng) * p.gamma(), y = u(rng) * p.gamma();
        const double psi2 = h2 * std::norm(wavefunction(nr, j, x, y, p));
        bridge = std::max(bridge, std::abs(marginal_q1q2(n, l, x, y, p) - psi2) / (1 + psi2));
      }
    }
  double quad = 0;
  bool warned = false;
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= 3; ++l)
      for (int k = 0; k < 3; ++k) {
        const double a = u(rng), b = u(rng);
        const double q1 = a * p.gamma(), q2 = b * p.gamma(), p2 = b * axis_unit(3, p);
        const auto m1 = marginal_numeric(WignerIndex::diag(n, l), Plane::q1q2, q1, q2, p);
        const auto m2 = marginal_numeric(WignerIndex::diag(n, l), Plane::q1p2, q1, p2, p);
        warned = warned || m1.warning || m2.warning;
        quad = std::max({quad, std::abs(m1.value - marginal_q1q2(n, l, q1, q2, p)),
                         std::abs(m2.value - marginal_q1p2(n, l, q1, p2, p))});
      }
  const bool ok = bridge <= 1e-10 && quad <= 1e-8 && !warned;
  return {ok, "bridge " + e3(bridge) + " (20 points per n >= l, n <= 3), q1q2/q1p2 vs quadrature " + e3(quad)};
}

Outcome coherent() {
  std::mt19937 rng(2002);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  double worst = 0;
  for (const Params& p : {Params(), Params(1.3, 0.9, 0.6)})
    for (int i = 0; i < 10; ++i) {
      const GenParams gp{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
      const PhasePoint pt{u(rng), u(rng), u(rng), u(rng)};
      worst = std::max(worst, coherent_residuals(gp, pt, p).max());
    }
  return {worst <= 1e-10, "max residual " + e3(worst) + " over 20 draws"};
}

Outcome triangulation() {
  std::mt19937 rng(2003);
  const Params p;
  const auto pts = random_points(rng, 10, p, 1.5);
  double gen = 0;
  int k = 0;
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= 3; ++n2)
      for (int l1 = 0; l1 <= 2; ++l1)
        for (int l2 = 0; l2 <= 2; ++l2) {
          const PhasePoint& x = pts[static_cast<std::size_t>(k++ % 10)];
          gen = std::max(gen, std::abs(derive_wigner_from_G({n1, n2, l1, l2}, x, p) - eval_wigner({n1, n2, l1, l2}, x, p)));
        }
  GaugeFn none;
  none.chi = PhasePoly();
  double direct = 0;
  for (const PhasePoint& x : pts) direct = std::max(direct, std::abs(gauge_ground_direct(none, x, p) - eval_ground(x, p)));
  return {gen <= 1e-10 && direct <= 1e-6,
          "closed form vs generating function " + e3(gen) + ", W0 vs direct integral " + e3(direct)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"origin values W_nl(0) = 4(-1)^(n+l)", origin_values},
      {"star-eigenvalue equations, exact", [] { return suite("eigen", 5, {"H_L * W_nl = ", "J * W_nl"}); }},
      {"projection, exact and numeric mirror", [] { return suite("projection", 4); }},
      {"normalization and orthogonality", [] { return suite("normalization", 3, {"int W_nl"}); }},
      {"marginal / wavefunction bridge", marginal_bridge},
      {"appendix identities", [] { return suite("appendix", 12); }},
      {"symmetries", [] { return suite("symmetry", 5); }},
      {"coherent-state and Bopp relations", coherent},
      {"gauge sector", [] { return suite("gauge", -1, {"H' * W'", "int W' dV"}); }},
      {"oracle triangulation", triangulation},
  };
  bool all = true;
  double total = 0;
  int i = 0;
  for (const auto& [name, fn] : criteria) {
    ++i;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += dt;
    all = all && o.pass;
    std::printf("%s  criterion %2d  %-40s %7.3fs  %s\n", o.pass ? "PASS" : "FAIL", i, name, dt, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("total %.2fs\n", total);
  return all ? 0 : 1;
}
