#include "landau/quad.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace landau {

namespace {

// Normalised Hermite functions without their exp(-x^2/2) factor; returns
// (phi_{n-1}(x), phi_n(x)).
std::pair<double, double> hermite_phi(int n, double x) {
  double prev = 0.0, cur = std::pow(M_PI, -0.25);
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return {prev, cur};
}

QuadRule build_rule(int n) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) J(k, k - 1) = J(k - 1, k) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  std::vector<double> x(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(x.begin(), x.end());
  // polish on phi_n, then symmetrise
  for (double& xi : x) {
    for (int it = 0; it < 3; ++it) {
      const auto [pm1, pn] = hermite_phi(n, xi);
      const double d = std::sqrt(2.0 * n) * pm1;  // phi_n'
      if (d == 0.0) break;
      xi -= pn / d;
    }
  }
  for (int i = 0; i < n / 2; ++i) {
    const double m = 0.5 * (x[n - 1 - i] - x[i]);
    x[i] = -m;
    x[n - 1 - i] = m;
  }
  if (n % 2) x[n / 2] = 0.0;
  QuadRule r;
  r.order = n;
  r.nodes = x;
  for (double xi : x) {
    const double phi = hermite_phi(n, xi).first;
    const double w = 1.0 / (n * phi * phi);
    r.weights.push_back(w);
    r.scaled.push_back(w * std::exp(xi * xi));
  }
  return r;
}

// Sum over the outermost index in parallel; partial sums are combined in index
// order so results do not depend on scheduling.
template <class Body>
std::vector<std::vector<cplx>> parallel_rows(int rows, int count, Body body) {
  std::vector<std::vector<cplx>> partial(static_cast<std::size_t>(rows), std::vector<cplx>(count, 0.0));
  const int nthreads = std::max(1, std::min<int>(rows, static_cast<int>(std::thread::hardware_concurrency())));
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&, t] {
      for (int i = t; i < rows; i += nthreads) body(i, partial[static_cast<std::size_t>(i)].data());
    });
  for (auto& th : pool) th.join();
  return partial;
}

std::vector<cplx> reduce(const std::vector<std::vector<cplx>>& partial, int count) {
  std::vector<cplx> out(count, 0.0);
  for (const auto& row : partial)
    for (int k = 0; k < count; ++k) out[k] += row[k];
  return out;
}

std::vector<cplx> integrate_q(const BatchFn& f, int count, const Eigen::Matrix4d& Q, int order) {
  const Eigen::LLT<Eigen::Matrix4d> llt(Q);
  if (llt.info() != Eigen::Success) throw std::domain_error("integrate: envelope form is not positive definite");
  const Eigen::Matrix4d L = llt.matrixL();
  const Eigen::Matrix4d T = L.transpose().inverse();  // y = T x
  const double jac = 1.0 / L.diagonal().prod();
  const QuadRule& r = gauss_hermite(order);
  const int n = order;
  auto partial = parallel_rows(n, count, [&](int i, cplx* acc) {
    std::vector<cplx> buf(count);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Eigen::Vector4d x(r.nodes[i], r.nodes[j], r.nodes[k], r.nodes[l]);
          const double w = r.scaled[i] * r.scaled[j] * r.scaled[k] * r.scaled[l];
          f(PhasePoint::from_vec(T * x), buf.data());
          for (int c = 0; c < count; ++c) acc[c] += w * buf[c];
        }
  });
  std::vector<cplx> out = reduce(partial, count);
  for (cplx& v : out) v *= jac;
  return out;
}

Eigen::Matrix4d envelope_form(const Params& params, double s) {
  Eigen::Matrix4d Q = Eigen::Matrix4d::Zero();
  for (int k = 0; k < 4; ++k) Q(k, k) = s / std::pow(axis_unit(k, params), 2);
  return Q;
}

}  // namespace

const QuadRule& gauss_hermite(int order) {
  if (order < 1) throw std::domain_error("gauss_hermite: order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<QuadRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<QuadRule>(build_rule(order));
  return *slot;
}

std::pair<int, int> plane_axes(Plane plane) {
  switch (plane) {
    case Plane::q1q2: return {0, 1};
    case Plane::p1p2: return {2, 3};
    case Plane::q1p1: return {0, 2};
    case Plane::q2p2: return {1, 3};
    case Plane::q1p2: return {0, 3};
    case Plane::q2p1: return {1, 2};
  }
  throw std::invalid_argument("plane_axes: bad plane");
}

Plane complement(Plane plane) {
  switch (plane) {
    case Plane::q1q2: return Plane::p1p2;
    case Plane::p1p2: return Plane::q1q2;
    case Plane::q1p1: return Plane::q2p2;
    case Plane::q2p2: return Plane::q1p1;
    case Plane::q1p2: return Plane::q2p1;
    case Plane::q2p1: return Plane::q1p2;
  }
  throw std::invalid_argument("complement: bad plane");
}

std::string plane_name(Plane plane) {
  static const char* names[] = {"q1q2", "p1p2", "q1p1", "q2p2", "q1p2", "q2p1"};
  return names[static_cast<int>(plane)];
}

const std::vector<Plane>& all_planes() {
  static const std::vector<Plane> planes = {Plane::q1q2, Plane::p1p2, Plane::q1p1,
                                            Plane::q2p2, Plane::q1p2, Plane::q2p1};
  return planes;
}

Plane parse_plane(const std::string& name) {
  for (Plane p : all_planes())
    if (plane_name(p) == name) return p;
  throw std::invalid_argument("unknown plane '" + name + "'");
}

double axis_unit(int axis, const Params& params) {
  return axis < 2 ? params.gamma() : params.kappa() * params.gamma();
}

PhasePoint plane_point(Plane plane, double u, double v, const PhasePoint& base) {
  Eigen::Vector4d y = base.vec();
  const auto [i, j] = plane_axes(plane);
  y[i] = u;
  y[j] = v;
  return PhasePoint::from_vec(y);
}

std::vector<cplx> integrate_full(const BatchFn& f, int count, const Params& params, int order, double s) {
  return integrate_q(f, count, envelope_form(params, s), order);
}

cplx integrate_full(const PhaseFn& f, const Params& params, int order, double s) {
  return integrate_full([&](const PhasePoint& pt, cplx* out) { out[0] = f(pt); }, 1, params, order, s)[0];
}

cplx integrate_gaussian(const PhaseFn& f, const Eigen::Matrix4d& Q, int order) {
  return integrate_q([&](const PhasePoint& pt, cplx* out) { out[0] = f(pt); }, 1, Q, order)[0];
}

cplx integrate_plane(const PhaseFn& f, Plane over, const PhasePoint& fixed, const Params& params, int order,
                     double s) {
  const auto [i, j] = plane_axes(over);
  const double ui = axis_unit(i, params) / std::sqrt(s), uj = axis_unit(j, params) / std::sqrt(s);
  const QuadRule& r = gauss_hermite(order);
  cplx sum = 0.0;
  for (int a = 0; a < order; ++a) {
    cplx row = 0.0;
    for (int b = 0; b < order; ++b)
      row += r.scaled[b] * f(plane_point(over, ui * r.nodes[a], uj * r.nodes[b], fixed));
    sum += r.scaled[a] * row;
  }
  return sum * ui * uj;
}

QuadResult integrate_plane_checked(const PhaseFn& f, Plane over, const PhasePoint& fixed, const Params& params,
                                   int order, double tol, double s) {
  QuadResult r;
  r.value = integrate_plane(f, over, fixed, params, order, s);
  r.change = std::abs(integrate_plane(f, over, fixed, params, order + 8, s) - r.value);
  r.warning = r.change > tol;
  return r;
}

cplx integrate_plane_trapezoid(const PhaseFn& f, Plane over, const PhasePoint& fixed, const Params& params,
                               double half_width, int points) {
  if (points < 2) throw std::domain_error("trapezoid: need at least two points");
  const auto [i, j] = plane_axes(over);
  const double ui = axis_unit(i, params), uj = axis_unit(j, params);
  const double h = 2.0 * half_width / (points - 1);
  cplx sum = 0.0;
  for (int a = 0; a < points; ++a) {
    const double wa = (a == 0 || a == points - 1) ? 0.5 : 1.0;
    for (int b = 0; b < points; ++b) {
      const double wb = (b == 0 || b == points - 1) ? 0.5 : 1.0;
      sum += wa * wb * f(plane_point(over, ui * (-half_width + a * h), uj * (-half_width + b * h), fixed));
    }
  }
  return sum * h * h * ui * uj;
}

void GridSpec::validate() const {
  if (nu < 2 || nv < 2) throw std::invalid_argument("grid: counts must be at least 2");
  for (double x : {u_min, u_max, v_min, v_max})
    if (!std::isfinite(x)) throw std::invalid_argument("grid: ranges must be finite");
}

bool FieldGrid::is_real(double tol) const {
  return std::all_of(values.begin(), values.end(), [tol](cplx z) { return std::abs(z.imag()) <= tol; });
}

FieldGrid sample_grid(const std::function<cplx(double, double)>& f, const GridSpec& spec,
                      std::vector<std::pair<std::string, std::string>> metadata) {
  spec.validate();
  FieldGrid g{spec, std::vector<cplx>(static_cast<std::size_t>(spec.nu) * spec.nv), std::move(metadata)};
  const int nthreads = std::max(1, std::min<int>(spec.nv, static_cast<int>(std::thread::hardware_concurrency())));
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&, t] {
      for (int j = t; j < spec.nv; j += nthreads)
        for (int i = 0; i < spec.nu; ++i) g.values[static_cast<std::size_t>(j) * spec.nu + i] = f(spec.u(i), spec.v(j));
    });
  for (auto& th : pool) th.join();
  for (cplx z : g.values)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::runtime_error("grid: non-finite sample");
  return g;
}

}  // namespace landau
