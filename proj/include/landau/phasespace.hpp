#pragma once

#include <Eigen/Dense>

#include <complex>

namespace landau {

using cplx = std::complex<double>;
using Matrix4c = Eigen::Matrix<cplx, 4, 4>;

/// Physical parameters. Only m, omega and hbar are stored; the charge and the
/// field strength enter exclusively through omega = qB/mc.
class Params {
 public:
  Params() : Params(1.0, 2.0, 1.0) {}
  Params(double m, double omega, double hbar);

  double m() const { return m_; }
  double omega() const { return omega_; }
  double hbar() const { return hbar_; }
  /// magnetic length sqrt(2 hbar / (m omega))
  double gamma() const;
  /// m omega / 2
  double kappa() const { return 0.5 * m_ * omega_; }
  /// Planck's constant h = 2 pi hbar
  double h() const;

 private:
  double m_;
  double omega_;
  double hbar_;
};

struct PhasePoint {
  double q1 = 0.0;
  double q2 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;

  Eigen::Vector4d vec() const { return {q1, q2, p1, p2}; }
  static PhasePoint from_vec(const Eigen::Vector4d& v) { return {v[0], v[1], v[2], v[3]}; }
};

/// z = (q1 + i q2)/sqrt2, p = (p1 - i p2)/sqrt2 and conjugates.
struct ComplexPoint {
  cplx z, p, zbar, pbar;
};

/// Dimensionless ladder coordinates. For a real phase point abar = conj(a) and
/// bbar = conj(b); the symplectic ladder action breaks that, so all four are kept.
struct LadderPoint {
  cplx a, b, abar, bbar;

  static LadderPoint from_ab(cplx a, cplx b) { return {a, b, std::conj(a), std::conj(b)}; }
};

struct SymplecticParams {
  double u = 1.0;
  double v = 1.0;
  double xi = 0.0;
  double eta = 0.0;

  void validate() const;
};

ComplexPoint to_complex(const PhasePoint& pt);
PhasePoint from_complex(const ComplexPoint& c);

LadderPoint to_ladder(const PhasePoint& pt, const Params& params);
/// Inverse map; imaginary parts (nonzero only off the real slice) are dropped.
PhasePoint from_ladder(const LadderPoint& x, const Params& params);

/// y = B x with x = (a, b, abar, bbar), y = (q1, q2, p1, p2).
Matrix4c ladder_to_canonical_matrix(const Params& params);
/// x' = A x, the four-parameter scaling of the ladder functions.
Matrix4c ladder_scaling_matrix(const SymplecticParams& sp);
/// C = B A B^-1 acting on canonical coordinates.
Matrix4c symplectic_C(const SymplecticParams& sp, const Params& params);
/// Standard symplectic form [[0, 1], [-1, 0]].
Matrix4c standard_symplectic_form();

LadderPoint apply_ladder_scaling(const SymplecticParams& sp, const LadderPoint& x);

/// H_L / (hbar omega) = abar a
double landau_energy_reduced(const PhasePoint& pt, const Params& params);
/// J / hbar = bbar b - abar a
double angular_momentum_reduced(const PhasePoint& pt, const Params& params);
/// 4 H_0 / (hbar omega), exponent of the ground-state envelope
double ground_exponent(const PhasePoint& pt, const Params& params);

}  // namespace landau
