#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>

namespace landau {

using Rational = mpq_class;

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational rational_from_double(double x);

double to_double(const Rational& r);

Rational factorial_q(unsigned n);
Rational binomial_q(unsigned n, unsigned k);

/// Gaussian rational re + i*im.
struct QComplex {
  Rational re{0};
  Rational im{0};

  QComplex() = default;
  QComplex(Rational r) : re(std::move(r)) {}  // NOLINT: implicit from rational
  QComplex(long r) : re(r) {}                 // NOLINT
  QComplex(int r) : re(r) {}                  // NOLINT
  QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static QComplex i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  QComplex conj() const { return {re, -im}; }
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  QComplex& operator+=(const QComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  QComplex& operator-=(const QComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  QComplex& operator*=(const QComplex& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  QComplex& operator/=(const QComplex& o);

  friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
  friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
  friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
  friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
  friend QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const QComplex& a, const QComplex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const QComplex& a, const QComplex& b) { return !(a == b); }
};

std::ostream& operator<<(std::ostream& os, const QComplex& z);

QComplex pow(const QComplex& z, unsigned k);

/// Exact element of Q(i)(sqrt 2, sqrt 3, sqrt 5, ...): a finite sum of
/// Gaussian rationals times square roots of squarefree positive integers.
/// Enough to carry the 1/sqrt(n1! n2! l1! l2!) normalisations exactly.
class Surd {
 public:
  Surd() = default;
  Surd(QComplex c);  // NOLINT: implicit from a rational coefficient
  Surd(long c) : Surd(QComplex(c)) {}  // NOLINT

  /// sqrt(r) for a nonnegative rational r.
  static Surd sqrt_of(const Rational& r);

  bool is_zero() const { return parts_.empty(); }
  const std::map<std::uint64_t, QComplex>& parts() const { return parts_; }
  std::complex<double> to_complex() const;
  Surd conj() const;

  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend Surd operator-(Surd a) {
    for (auto& [k, v] : a.parts_) v = -v;
    return a;
  }
  friend bool operator==(const Surd& a, const Surd& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

 private:
  void add_part(std::uint64_t radicand, const QComplex& c);
  std::map<std::uint64_t, QComplex> parts_;  // squarefree radicand -> coefficient
};

std::ostream& operator<<(std::ostream& os, const Surd& s);

}  // namespace landau
