#include "landau/specialfn.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace landau::specialfn {

Poly1::Poly1(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly1 Poly1::constant(const Rational& c) { return Poly1({c}); }

Poly1 Poly1::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Poly1(std::move(v));
}

void Poly1::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Poly1::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Poly1 Poly1::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Poly1(std::move(d));
}

double Poly1::eval(double x) const {
  double s = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * x + to_double(*it);
  return s;
}

Rational Poly1::eval(const Rational& x) const {
  Rational s(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * x + *it;
  return s;
}

Poly1 Poly1::scaled_argument(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  Rational p(1);
  for (auto& x : v) {
    x *= p;
    p *= c;
  }
  return Poly1(std::move(v));
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly1(std::move(v));
}

Poly1 Poly1::divide_by_x_power(int k) const {
  if (k <= 0) return *this;
  for (int j = 0; j < k; ++j)
    if (sgn(coeff(j)) != 0) throw std::domain_error("Poly1::divide_by_x_power: not divisible");
  if (static_cast<int>(coeffs_.size()) <= k) return {};
  return Poly1(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

ExpPoly ExpPoly::derivative() const {
  // (p e^{rx})' = (p' + r p) e^{rx}
  return {poly.derivative() + poly * rate, rate};
}

namespace {

template <class T>
T laguerre_impl(int n, int alpha, T x) {
  if (n < 0) throw std::domain_error("laguerre: negative degree");
  if (alpha < 0) {
    const int k = -alpha;
    if (k > n) return T(0.0);
    // (n-k)!/n! accumulated as a product to stay finite
    double ratio = 1.0;
    for (int j = n - k + 1; j <= n; ++j) ratio /= j;
    T mx = -x, pw = 1.0;
    for (int j = 0; j < k; ++j) pw *= mx;
    return pw * ratio * laguerre_impl(n - k, k, x);
  }
  if (n == 0) return T(1.0);
  T prev = 1.0;
  T cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const T next = ((2.0 * k + 1.0 + static_cast<double>(alpha) - x) * cur - static_cast<double>(k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double laguerre(int n, int alpha, double x) { return laguerre_impl(n, alpha, x); }

std::complex<double> laguerre(int n, int alpha, std::complex<double> x) { return laguerre_impl(n, alpha, x); }

double hermite(int n, double x) {
  if (n < 0) throw std::domain_error("hermite: negative degree");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Poly1 laguerre_series_poly(int n, int alpha) {
  if (n < 0) throw std::domain_error("laguerre_series_poly: negative degree");
  if (alpha < 0) throw std::domain_error("laguerre_series_poly: negative superscript");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational term = binomial_q(static_cast<unsigned>(n + alpha), static_cast<unsigned>(n - k)) /
                    factorial_q(static_cast<unsigned>(k));
    c[static_cast<std::size_t>(k)] = (k % 2) ? Rational(-term) : term;
  }
  return Poly1(std::move(c));
}

Poly1 laguerre_recurrence_poly(int n, int alpha) {
  if (n < 0) throw std::domain_error("laguerre_recurrence_poly: negative degree");
  Poly1 prev = Poly1::constant(1);
  if (n == 0) return prev;
  Poly1 cur({Rational(1 + alpha), Rational(-1)});
  const Poly1 x = Poly1::monomial(1);
  for (int k = 1; k < n; ++k) {
    Poly1 next = (Poly1::constant(2 * k + 1 + alpha) - x) * cur - prev * Rational(k + alpha);
    next *= Rational(1, k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly1 laguerre_rodrigues_poly(int n, int alpha) {
  if (n < 0 || alpha < 0) throw std::domain_error("laguerre_rodrigues_poly: negative index");
  ExpPoly f{Poly1::monomial(n + alpha), Rational(-1)};
  for (int k = 0; k < n; ++k) f = f.derivative();
  // e^x cancels the e^-x factor exactly
  return f.poly.divide_by_x_power(alpha) * (Rational(1) / factorial_q(static_cast<unsigned>(n)));
}

Poly1 ladder_polynomial(int n) {
  if (n < 0) throw std::domain_error("ladder_polynomial: negative degree");
  ExpPoly f{Poly1::monomial(n), Rational(-1)};
  for (int k = 0; k < n; ++k) {
    ExpPoly d = f.derivative();
    f.poly -= d.poly;  // (1 - d/du)
  }
  return f.poly * (Rational(1) / factorial_q(static_cast<unsigned>(n)));
}

bool verify_shift_operator_identity(int n) {
  if (n < 0) throw std::domain_error("verify_shift_operator_identity: negative n");
  // left: (1-T)^n (x^n e^-x), cofactor of e^-x
  ExpPoly lhs{Poly1::monomial(n), Rational(-1)};
  for (int k = 0; k < n; ++k) lhs.poly -= lhs.derivative().poly;
  // right: (-1)^n e^x T^n (x^n e^-2x) = (-1)^n q(x) e^-x
  ExpPoly rhs{Poly1::monomial(n), Rational(-2)};
  for (int k = 0; k < n; ++k) rhs = rhs.derivative();
  Poly1 right = rhs.poly * Rational(n % 2 ? -1 : 1);
  return lhs.poly == right;
}

double verify_laguerre_doubling_sum(int n, double x) {
  if (n < 0) throw std::domain_error("verify_laguerre_doubling_sum: negative n");
  double sum = 0.0;
  double term = 1.0;  // (-x)^j / j!
  for (int j = 0; j <= n; ++j) {
    if (j > 0) term *= -x / j;
    sum += term * laguerre(n - j, j, x);
  }
  return std::abs(laguerre(n, 0, 2.0 * x) - sum);
}

}  // namespace landau::specialfn
