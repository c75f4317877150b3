#pragma once

#include <complex>
#include <vector>

#include "landau/exact.hpp"

namespace landau::specialfn {

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// The coefficient vector never carries a trailing zero; the zero polynomial
/// has an empty vector and degree -1.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rational> coeffs);
  static Poly1 constant(const Rational& c);
  static Poly1 monomial(int degree, const Rational& c = Rational(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;

  Poly1 derivative() const;
  double eval(double x) const;
  Rational eval(const Rational& x) const;
  /// p(c x)
  Poly1 scaled_argument(const Rational& c) const;

  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  Poly1& operator*=(const Rational& c);
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(Poly1 a, const Rational& c) { return a *= c; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.coeffs_ == b.coeffs_; }

  /// Exact division by x^k; throws if the low coefficients are not zero.
  Poly1 divide_by_x_power(int k) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// poly(x) * exp(rate * x), the closed class for the Rodrigues manipulations.
struct ExpPoly {
  Poly1 poly;
  Rational rate;

  /// d/dx
  ExpPoly derivative() const;
};

/// Generalised Laguerre L_n^alpha(x). Negative alpha = -k uses
/// L_n^{-k}(x) = (-x)^k (n-k)!/n! L_{n-k}^k(x), and is zero when k > n.
double laguerre(int n, int alpha, double x);
std::complex<double> laguerre(int n, int alpha, std::complex<double> x);

/// Physicists' Hermite H_n(x) by the three-term recurrence.
double hermite(int n, double x);

/// L_n^alpha as an exact polynomial from the explicit finite series.
Poly1 laguerre_series_poly(int n, int alpha);
/// L_n^alpha as an exact polynomial from the three-term recurrence.
Poly1 laguerre_recurrence_poly(int n, int alpha);
/// L_n^alpha from the Rodrigues formula e^x/n! x^-alpha d^n(x^{n+alpha} e^-x).
Poly1 laguerre_rodrigues_poly(int n, int alpha);

/// P_n(u) = e^u/n! (1 - d/du)^n (u^n e^-u), expanded exactly.
Poly1 ladder_polynomial(int n);

/// Expands both sides of (1-T)^n (x^n e^-x) = (-1)^n e^x T^n (x^n e^-2x), T = d/dx,
/// and compares the polynomial cofactors of e^-x exactly.
bool verify_shift_operator_identity(int n);

/// |L_n(2x) - sum_j (-x)^j/j! L_{n-j}^j(x)|
double verify_laguerre_doubling_sum(int n, double x);

}  // namespace landau::specialfn
