#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "landau/exact.hpp"

namespace landau {

using Exponent4 = std::array<int, 4>;

/// Ladder chart: variables (a, abar, b, bbar), treated as independent.
struct LadderChart {
  static constexpr std::array<const char*, 4> names{"a", "abar", "b", "bbar"};
  /// complex conjugation swaps a <-> abar and b <-> bbar
  static Exponent4 conj_exponent(const Exponent4& e) { return {e[1], e[0], e[3], e[2]}; }
};

/// Canonical chart: real variables (q1, q2, p1, p2).
struct CanonicalChart {
  static constexpr std::array<const char*, 4> names{"q1", "q2", "p1", "p2"};
  static Exponent4 conj_exponent(const Exponent4& e) { return e; }
};

/// Sparse polynomial in the four chart variables with exact Gaussian-rational
/// coefficients. Exact zeros are pruned; nothing else is.
template <class Chart>
class Poly4 {
 public:
  using Terms = std::map<Exponent4, QComplex>;

  Poly4() = default;
  Poly4(const QComplex& c) {  // NOLINT: constants convert implicitly
    if (!c.is_zero()) terms_.emplace(Exponent4{0, 0, 0, 0}, c);
  }

  static Poly4 variable(int v, const QComplex& c = QComplex(1)) {
    Exponent4 e{0, 0, 0, 0};
    e.at(static_cast<std::size_t>(v)) = 1;
    return monomial(e, c);
  }
  static Poly4 monomial(const Exponent4& e, const QComplex& c = QComplex(1)) {
    Poly4 p;
    p.add_term(e, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  QComplex coeff(const Exponent4& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? QComplex() : it->second;
  }

  void add_term(const Exponent4& e, const QComplex& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// highest exponent of each variable
  Exponent4 max_degrees() const {
    Exponent4 d{0, 0, 0, 0};
    for (const auto& [e, c] : terms_)
      for (std::size_t v = 0; v < 4; ++v) d[v] = std::max(d[v], e[v]);
    return d;
  }

  int total_degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    return d;
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent4{0, 0, 0, 0}); }
  QComplex constant_term() const { return coeff({0, 0, 0, 0}); }

  Poly4 derivative(int v) const {
    Poly4 out;
    const auto vi = static_cast<std::size_t>(v);
    for (const auto& [e, c] : terms_) {
      if (e[vi] == 0) continue;
      Exponent4 f = e;
      f[vi] -= 1;
      out.add_term(f, c * QComplex(static_cast<long>(e[vi])));
    }
    return out;
  }

  Poly4 derivative(const Exponent4& m) const {
    Poly4 out = *this;
    for (int v = 0; v < 4; ++v)
      for (int k = 0; k < m[static_cast<std::size_t>(v)]; ++k) out = out.derivative(v);
    return out;
  }

  Poly4 conj() const {
    Poly4 out;
    for (const auto& [e, c] : terms_) out.add_term(Chart::conj_exponent(e), c.conj());
    return out;
  }

  std::complex<double> eval(const std::array<std::complex<double>, 4>& x) const {
    std::complex<double> s = 0.0;
    for (const auto& [e, c] : terms_) {
      std::complex<double> t = c.to_complex();
      for (std::size_t v = 0; v < 4; ++v)
        for (int k = 0; k < e[v]; ++k) t *= x[v];
      s += t;
    }
    return s;
  }

  /// Replace each chart variable by a polynomial in another chart.
  template <class To>
  Poly4<To> substitute(const std::array<Poly4<To>, 4>& images) const {
    // cache powers per variable
    std::array<std::vector<Poly4<To>>, 4> powers;
    const Exponent4 md = max_degrees();
    for (std::size_t v = 0; v < 4; ++v) {
      powers[v].push_back(Poly4<To>(QComplex(1)));
      for (int k = 1; k <= md[v]; ++k) powers[v].push_back(powers[v].back() * images[v]);
    }
    Poly4<To> out;
    for (const auto& [e, c] : terms_) {
      Poly4<To> t(c);
      for (std::size_t v = 0; v < 4; ++v) t = t * powers[v][static_cast<std::size_t>(e[v])];
      out += t;
    }
    return out;
  }

  Poly4& operator+=(const Poly4& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly4& operator-=(const Poly4& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly4& operator*=(const QComplex& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend Poly4 operator+(Poly4 a, const Poly4& b) { return a += b; }
  friend Poly4 operator-(Poly4 a, const Poly4& b) { return a -= b; }
  friend Poly4 operator-(Poly4 a) { return a *= QComplex(-1); }
  friend Poly4 operator*(Poly4 a, const QComplex& s) { return a *= s; }
  friend Poly4 operator*(const QComplex& s, Poly4 a) { return a *= s; }
  friend Poly4 operator*(const Poly4& a, const Poly4& b) {
    Poly4 out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
    return out;
  }
  friend bool operator==(const Poly4& a, const Poly4& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly4& a, const Poly4& b) { return !(a == b); }

  Poly4 pow(int k) const {
    Poly4 out(QComplex(1));
    for (int j = 0; j < k; ++j) out = out * *this;
    return out;
  }

  /// largest |coefficient| as a double, for residual reports
  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c.to_complex()));
    return m;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly4& p) {
    if (p.terms_.empty()) return os << "0";
    bool first = true;
    for (const auto& [e, c] : p.terms_) {
      if (!first) os << " + ";
      first = false;
      os << c;
      for (std::size_t v = 0; v < 4; ++v) {
        if (e[v] == 0) continue;
        os << "*" << Chart::names[v];
        if (e[v] > 1) os << "^" << e[v];
      }
    }
    return os;
  }

 private:
  Terms terms_;
};

using LadderPoly = Poly4<LadderChart>;
using PhasePoly = Poly4<CanonicalChart>;

/// poly * exp(-exponent) with exponent a polynomial of degree <= 2 (zero for a
/// pure polynomial). This is the class on which star products close exactly.
template <class Chart>
class GaussPoly {
 public:
  GaussPoly() = default;
  GaussPoly(Poly4<Chart> poly) : poly_(std::move(poly)) {}  // NOLINT: polynomials embed implicitly
  GaussPoly(Poly4<Chart> poly, Poly4<Chart> exponent) : poly_(std::move(poly)), exponent_(std::move(exponent)) {
    if (exponent_.total_degree() > 2) throw std::invalid_argument("GaussPoly: exponent must be at most quadratic");
  }

  const Poly4<Chart>& poly() const { return poly_; }
  const Poly4<Chart>& exponent() const { return exponent_; }
  bool is_polynomial() const { return exponent_.is_zero(); }
  /// constant polynomial part times a Gaussian
  bool is_pure_exponential() const { return poly_.is_constant(); }
  bool is_zero() const { return poly_.is_zero(); }

  /// d/dx_v (P e^{-E}) = (dP - P dE) e^{-E}
  GaussPoly derivative(int v) const {
    if (exponent_.is_zero()) return GaussPoly(poly_.derivative(v));
    return GaussPoly(poly_.derivative(v) - poly_ * exponent_.derivative(v), exponent_);
  }

  GaussPoly conj() const { return GaussPoly(poly_.conj(), exponent_.conj()); }

  std::complex<double> eval(const std::array<std::complex<double>, 4>& x) const {
    return poly_.eval(x) * std::exp(-exponent_.eval(x));
  }

  GaussPoly& operator*=(const QComplex& s) {
    poly_ *= s;
    return *this;
  }
  friend GaussPoly operator*(GaussPoly a, const QComplex& s) { return a *= s; }
  friend GaussPoly operator*(const QComplex& s, GaussPoly a) { return a *= s; }

  /// Sum of two terms sharing the same Gaussian factor.
  GaussPoly& operator+=(const GaussPoly& o) {
    if (o.poly_.is_zero()) return *this;
    if (poly_.is_zero()) {
      *this = o;
      return *this;
    }
    if (exponent_ != o.exponent_) throw std::invalid_argument("GaussPoly: sum of different Gaussian factors");
    poly_ += o.poly_;
    return *this;
  }
  GaussPoly& operator-=(const GaussPoly& o) { return *this += o * QComplex(-1); }
  friend GaussPoly operator+(GaussPoly a, const GaussPoly& b) { return a += b; }
  friend GaussPoly operator-(GaussPoly a, const GaussPoly& b) { return a -= b; }

  /// Pointwise product; Gaussian exponents add.
  friend GaussPoly pointwise(const GaussPoly& f, const GaussPoly& g) {
    return GaussPoly(f.poly_ * g.poly_, f.exponent_ + g.exponent_);
  }

  /// Equality as functions: zero polynomials compare equal whatever the exponent.
  friend bool operator==(const GaussPoly& f, const GaussPoly& g) {
    if (f.poly_.is_zero() || g.poly_.is_zero()) return f.poly_.is_zero() && g.poly_.is_zero();
    return f.poly_ == g.poly_ && f.exponent_ == g.exponent_;
  }
  friend bool operator!=(const GaussPoly& f, const GaussPoly& g) { return !(f == g); }

  friend std::ostream& operator<<(std::ostream& os, const GaussPoly& f) {
    os << "[" << f.poly_ << "]";
    if (!f.exponent_.is_zero()) os << " * exp(-(" << f.exponent_ << "))";
    return os;
  }

 private:
  Poly4<Chart> poly_;
  Poly4<Chart> exponent_;
};

using GaussPolyFn = GaussPoly<LadderChart>;
using PhaseGaussPoly = GaussPoly<CanonicalChart>;

}  // namespace landau
