#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "landau/phasespace.hpp"

namespace landau {

/// Gauss–Hermite rule for the weight exp(-x^2).
struct QuadRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> scaled;  // weights[i] * exp(nodes[i]^2)
};

/// Golub–Welsch; cached per order, safe to call concurrently.
const QuadRule& gauss_hermite(int order);

/// Coordinate pairs; coordinates are numbered q1=0, q2=1, p1=2, p2=3.
enum class Plane { q1q2, p1p2, q1p1, q2p2, q1p2, q2p1 };

std::pair<int, int> plane_axes(Plane plane);
Plane complement(Plane plane);
std::string plane_name(Plane plane);
/// Throws std::invalid_argument for an unknown name.
Plane parse_plane(const std::string& name);
const std::vector<Plane>& all_planes();

/// gamma for positions, kappa*gamma for momenta: the units in which the
/// ground-state envelope is exp(-|x|^2).
double axis_unit(int axis, const Params& params);

/// Sets the two coordinates of `plane` on top of `base`.
PhasePoint plane_point(Plane plane, double u, double v, const PhasePoint& base = {});

using PhaseFn = std::function<cplx(const PhasePoint&)>;
using BatchFn = std::function<void(const PhasePoint&, cplx* out)>;

struct QuadResult {
  cplx value{0.0};
  double change = 0.0;  // |I(order + 8) - I(order)|, when checked
  bool warning = false;
};

/// Integral over R^4 of f, with the Gaussian weight matched to
/// exp(-s 4 H0 / hbar omega). Exact for f = polynomial * that envelope once
/// the polynomial degree per axis is below 2*order.
cplx integrate_full(const PhaseFn& f, const Params& params, int order, double s = 1.0);
/// Several integrands sharing the nodes.
std::vector<cplx> integrate_full(const BatchFn& f, int count, const Params& params, int order, double s = 1.0);

/// Integral over R^4 with the weight matched to exp(-y^T Q y) for a symmetric
/// positive definite Q in canonical coordinates (Cholesky substitution).
cplx integrate_gaussian(const PhaseFn& f, const Eigen::Matrix4d& Q, int order);

/// Integral over the two coordinates of `over`, the others taken from `fixed`.
/// The weight is matched to exp(-s 4 H0 / hbar omega) on that plane.
cplx integrate_plane(const PhaseFn& f, Plane over, const PhasePoint& fixed, const Params& params, int order,
                     double s = 1.0);
/// Same, also evaluated at order + 8; warning set when they differ by more than tol.
QuadResult integrate_plane_checked(const PhaseFn& f, Plane over, const PhasePoint& fixed, const Params& params,
                                   int order, double tol, double s = 1.0);

/// Composite trapezoid rule on [-half_width, half_width]^2 in axis units.
cplx integrate_plane_trapezoid(const PhaseFn& f, Plane over, const PhasePoint& fixed, const Params& params,
                               double half_width, int points);

struct GridSpec {
  double u_min = -4.0, u_max = 4.0;
  int nu = 201;
  double v_min = -4.0, v_max = 4.0;
  int nv = 201;

  void validate() const;
  // exact mirror images for symmetric ranges
  double u(int i) const { return (u_min * (nu - 1 - i) + u_max * i) / (nu - 1); }
  double v(int j) const { return (v_min * (nv - 1 - j) + v_max * j) / (nv - 1); }
};

/// Row-major samples: values[j * nu + i] = f(u(i), v(j)).
struct FieldGrid {
  GridSpec spec;
  std::vector<cplx> values;
  std::vector<std::pair<std::string, std::string>> metadata;

  cplx at(int i, int j) const { return values[static_cast<std::size_t>(j) * spec.nu + i]; }
  bool is_real(double tol = 0.0) const;
};

FieldGrid sample_grid(const std::function<cplx(double, double)>& f, const GridSpec& spec,
                      std::vector<std::pair<std::string, std::string>> metadata = {});

}  // namespace landau
