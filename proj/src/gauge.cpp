#include "landau/gauge.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

namespace landau {

namespace {

constexpr int Q1 = 0, Q2 = 1, P1 = 2, P2 = 3;

PhasePoly var(int v) { return PhasePoly::variable(v); }

// e^{-i s theta chi} d^m e^{i s theta chi}, m = (m1, m2) in (q1, q2)
class PhaseDerivs {
 public:
  PhaseDerivs(const GaugeFn& g, int s) {
    const QComplex c = QComplex(Rational(0), g.theta * s);
    grad_ = {g.chi.derivative(Q1) * c, g.chi.derivative(Q2) * c};
    memo_.emplace(std::pair{0, 0}, PhasePoly(QComplex(1)));
  }
  const PhasePoly& get(int m1, int m2) {
    auto it = memo_.find({m1, m2});
    if (it != memo_.end()) return it->second;
    const int j = m1 > 0 ? 0 : 1;
    const PhasePoly& prev = j == 0 ? get(m1 - 1, m2) : get(m1, m2 - 1);
    PhasePoly next = prev.derivative(j == 0 ? Q1 : Q2) + prev * grad_[j];
    return memo_.emplace(std::pair{m1, m2}, std::move(next)).first->second;
  }

 private:
  std::array<PhasePoly, 2> grad_;
  std::map<std::pair<int, int>, PhasePoly> memo_;
};

// sum_m c^|m| / m! d_p^m f * P_m
PhasePoly one_sided(const PhasePoly& f, PhaseDerivs& P, const QComplex& c) {
  const Exponent4 d = f.max_degrees();
  PhasePoly out;
  PhasePoly fm1 = f;
  for (int m1 = 0; m1 <= d[P1]; ++m1) {
    PhasePoly fm = fm1;
    for (int m2 = 0; m2 <= d[P2]; ++m2) {
      if (fm.is_zero()) break;
      const QComplex w = pow(c, static_cast<unsigned>(m1 + m2)) *
                         QComplex(1 / (factorial_q(static_cast<unsigned>(m1)) * factorial_q(static_cast<unsigned>(m2))));
      out += fm * P.get(m1, m2) * w;
      fm = fm.derivative(P2);
    }
    fm1 = fm1.derivative(P1);
  }
  return out;
}

PhasePoly shifted_momenta(const PhasePoly& f, const GaugeFn& g, const Rational& hbar) {
  const QComplex s(-g.theta * hbar);
  return f.substitute<CanonicalChart>(
      {var(Q1), var(Q2), var(P1) + g.chi.derivative(Q1) * s, var(P2) + g.chi.derivative(Q2) * s});
}

std::array<cplx, 4> arr(const PhasePoint& pt) { return {pt.q1, pt.q2, pt.p1, pt.p2}; }

// --- tiny recursive-descent parser ---------------------------------------

class PolyParser {
 public:
  PolyParser(const std::string& s, const Rational& c) : s_(s), c_(c) {}
  PhasePoly parse() {
    PhasePoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("gauge polynomial: " + why + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  PhasePoly expr() {
    PhasePoly p = term();
    while (true) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }
  PhasePoly term() {
    PhasePoly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }
  PhasePoly factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    PhasePoly base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      const int k = std::stoi(s_.substr(start, pos_ - start));
      if (k > 64) fail("exponent too large");
      base = base.pow(k);
    }
    return base;
  }
  PhasePoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char ch = s_[pos_];
    if (eat('(')) {
      PhasePoly p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return PhasePoly(QComplex(number()));
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string id = s_.substr(start, pos_ - start);
      if (id == "q1") return var(Q1);
      if (id == "q2") return var(Q2);
      if (id == "c") return PhasePoly(QComplex(c_));
      pos_ = start;
      fail("unknown symbol '" + id + "' (allowed: q1, q2, c)");
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }
  Rational number() {
    mpz_class whole = 0, frac = 0, scale = 1;
    bool digits = false;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      whole = whole * 10 + (s_[pos_++] - '0');
      digits = true;
    }
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        frac = frac * 10 + (s_[pos_++] - '0');
        scale *= 10;
        digits = true;
      }
    }
    if (!digits) fail("malformed number");
    Rational r(whole * scale + frac, scale);
    r.canonicalize();
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      ++pos_;
      int sign = 1;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) sign = s_[pos_++] == '-' ? -1 : 1;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("malformed exponent");
      const int e = std::stoi(s_.substr(start, pos_ - start));
      mpz_class t;
      mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(e));
      r = sign > 0 ? Rational(r * t) : Rational(r / t);
    }
    return r;
  }

  const std::string& s_;
  Rational c_;
  std::size_t pos_ = 0;
};

}  // namespace

void GaugeFn::validate() const {
  for (const auto& [e, c] : chi.terms()) {
    if (e[P1] || e[P2]) throw std::invalid_argument("GaugeFn: chi must depend on q only");
    if (sgn(c.im) != 0) throw std::invalid_argument("GaugeFn: chi must have real coefficients");
  }
  if (degree() > max_degree) throw std::invalid_argument("GaugeFn: degree of chi exceeds " + std::to_string(max_degree));
}

GaugeFn GaugeFn::symmetric_to_landau(const Params& params, int sign) {
  const ExactParams ep = ExactParams::from(params);
  GaugeFn g;
  g.chi = PhasePoly::monomial({1, 1, 0, 0}, QComplex(ep.kappa * sign));
  g.theta = 1 / ep.hbar;
  return g;
}

PhasePoly parse_gauge_poly(const std::string& text, const Rational& c) {
  return PolyParser(text, c).parse();
}

PhasePoly conjugate_function(const GaugeFn& g, const PhasePoly& f, const Params& params) {
  g.validate();
  const Rational hbar = ExactParams::from(params).hbar;
  PhaseDerivs plus(g, 1), minus(g, -1);
  // U * f = U F, then (U F) * U^-1 = G
  const PhasePoly F = one_sided(f, plus, QComplex(Rational(0), hbar / 2));
  return one_sided(F, minus, QComplex(Rational(0), -hbar / 2));
}

PhasePoly conjugate_function(const GaugeFn& g, const PhaseGaussPoly& f, const Params& params) {
  if (!f.is_polynomial()) throw unsupported_class("conjugate_function: argument must be a polynomial");
  return conjugate_function(g, f.poly(), params);
}

PhasePoly conjugate_momentum(const GaugeFn& g, int component, const Params& params) {
  if (component != 1 && component != 2) throw std::invalid_argument("conjugate_momentum: component must be 1 or 2");
  return conjugate_function(g, var(component == 1 ? P1 : P2), params);
}

PhasePoly landau_hamiltonian_poly(const Params& params) {
  const ExactParams ep = ExactParams::from(params);
  const QComplex k(ep.kappa);
  const PhasePoly s1 = var(P1) + var(Q2) * k, s2 = var(P2) - var(Q1) * k;
  return (s1 * s1 + s2 * s2) * QComplex(1 / (2 * ep.m));
}

PhasePoly gauge_hamiltonian_expected(const GaugeFn& g, const Params& params) {
  const ExactParams ep = ExactParams::from(params);
  const QComplex k(ep.kappa), s(-g.theta * ep.hbar);
  const PhasePoly s1 = var(P1) + var(Q2) * k + g.chi.derivative(Q1) * s;
  const PhasePoly s2 = var(P2) - var(Q1) * k + g.chi.derivative(Q2) * s;
  return (s1 * s1 + s2 * s2) * QComplex(1 / (2 * ep.m));
}

cplx GaugedWigner::eval(const PhasePoint& pt) const { return norm.to_complex() * shape.eval(arr(pt)); }

GaugedWigner canonical_wigner(const WignerIndex& idx, const Params& params) {
  const WignerPoly w = wigner_gausspoly(idx);
  return {w.norm, ladder_to_canonical(w.shape, ExactParams::from(params))};
}

GaugedWigner gauge_wigner(const GaugeFn& g, const WignerIndex& idx, const Params& params) {
  g.validate();
  if (g.degree() > 2)
    throw unsupported_class("gauge_wigner: U W U^-1 leaves the Gaussian class for chi of degree above 2");
  const GaugedWigner w = canonical_wigner(idx, params);
  const Rational hbar = ExactParams::from(params).hbar;
  return {w.norm, PhaseGaussPoly(shifted_momenta(w.shape.poly(), g, hbar), shifted_momenta(w.shape.exponent(), g, hbar))};
}

PhasePoly taylor_unitary(const GaugeFn& g, int order, int s) {
  if (order < 0) throw std::invalid_argument("taylor_unitary: negative order");
  const PhasePoly x = g.chi * QComplex(Rational(0), g.theta * s);
  PhasePoly term(QComplex(1)), out(QComplex(1));
  for (int k = 1; k <= order; ++k) {
    term = term * x * QComplex(Rational(1, k));
    out += term;
  }
  return out;
}

namespace {

PhaseGaussPoly plane_wave(const std::array<double, 2>& y, const Rational& hbar) {
  PhasePoly e;
  e.add_term({0, 0, 1, 0}, QComplex(Rational(0), rational_from_double(y[0]) / hbar));
  e.add_term({0, 0, 0, 1}, QComplex(Rational(0), rational_from_double(y[1]) / hbar));
  return PhaseGaussPoly(PhasePoly(QComplex(1)), e);
}

cplx kernel_lhs(const PhasePoly& f1, const PhasePoly& f2, const std::array<double, 2>& y, const PhasePoint& pt,
                const Params& params) {
  const Rational hbar = ExactParams::from(params).hbar;
  const PhaseGaussPoly E = plane_wave(y, hbar);
  return star_exact(star_exact(PhaseGaussPoly(f1), E, hbar), PhaseGaussPoly(f2), hbar).eval(arr(pt));
}

cplx wave(const std::array<double, 2>& y, const PhasePoint& pt, const Params& params) {
  return std::exp(cplx(0, -(y[0] * pt.p1 + y[1] * pt.p2) / params.hbar()));
}

}  // namespace

double verify_kernel_identity(const PhasePoly& f1, const PhasePoly& f2, const std::array<double, 2>& y,
                              const PhasePoint& pt, const Params& params) {
  for (const PhasePoly* f : {&f1, &f2})
    for (const auto& [e, c] : f->terms())
      if (e[P1] || e[P2]) throw std::invalid_argument("verify_kernel_identity: f1, f2 must depend on q only");
  const PhasePoint plus{pt.q1 + y[0] / 2, pt.q2 + y[1] / 2, 0, 0}, minus{pt.q1 - y[0] / 2, pt.q2 - y[1] / 2, 0, 0};
  const cplx rhs = f1.eval(arr(plus)) * f2.eval(arr(minus)) * wave(y, pt, params);
  return std::abs(kernel_lhs(f1, f2, y, pt, params) - rhs);
}

double verify_gauge_kernel(const GaugeFn& g, const std::array<double, 2>& y, const PhasePoint& pt,
                           const Params& params, int taylor_order) {
  g.validate();
  const PhasePoly U = taylor_unitary(g, taylor_order, 1), Ui = taylor_unitary(g, taylor_order, -1);
  const PhasePoint plus{pt.q1 + y[0] / 2, pt.q2 + y[1] / 2, 0, 0}, minus{pt.q1 - y[0] / 2, pt.q2 - y[1] / 2, 0, 0};
  const double th = to_double(g.theta);
  const double phase = th * (g.chi.eval(arr(plus)).real() - g.chi.eval(arr(minus)).real());
  const cplx rhs = std::polar(1.0, phase) * wave(y, pt, params);
  return std::abs(kernel_lhs(U, Ui, y, pt, params) - rhs);
}

EigenResidual gauge_eigen_check(const GaugeFn& g, int n, int l, const Params& params) {
  const ExactParams ep = ExactParams::from(params);
  const PhaseGaussPoly H(conjugate_function(g, landau_hamiltonian_poly(params), params));
  const PhaseGaussPoly W = gauge_wigner(g, WignerIndex::diag(n, l), params).shape;
  const QComplex E(ep.hbar * ep.omega * Rational(2 * n + 1, 2));
  EigenResidual r;
  r.left = (star_exact(H, W, ep.hbar) - W * E).poly().max_abs_coeff();
  r.right = (star_exact(W, H, ep.hbar) - W * E).poly().max_abs_coeff();
  return r;
}

cplx gauge_wigner_integral(const GaugedWigner& w, int order) {
  // exponent = y.Q y + b.y + c; centre the envelope at -Q^-1 b / 2
  Eigen::Matrix4d Q = Eigen::Matrix4d::Zero();
  Eigen::Vector4d b = Eigen::Vector4d::Zero();
  for (const auto& [e, c] : w.shape.exponent().terms()) {
    const double v = to_double(c.re);
    const int deg = e[0] + e[1] + e[2] + e[3];
    int i = -1, j = -1;
    for (int k = 0; k < 4; ++k)
      for (int r = 0; r < e[static_cast<std::size_t>(k)]; ++r) (i < 0 ? i : j) = k;
    if (deg == 1) b[i] += v;
    else if (deg == 2 && i == j) Q(i, i) += v;
    else if (deg == 2) {
      Q(i, j) += v / 2;
      Q(j, i) += v / 2;
    }
  }
  const Eigen::Vector4d y0 = -0.5 * Q.ldlt().solve(b);
  return integrate_gaussian([&](const PhasePoint& x) { return w.eval(PhasePoint::from_vec(x.vec() + y0)); }, Q, order);
}

cplx gauge_ground_direct(const GaugeFn& g, const PhasePoint& pt, const Params& params, int order) {
  g.validate();
  const double gam = params.gamma(), th = to_double(g.theta);
  const QuadRule& r = gauss_hermite(order);
  const double rho2 = (pt.q1 * pt.q1 + pt.q2 * pt.q2) / (gam * gam);
  cplx s = 0;
  // y = 2 gamma x turns psi0(q + y/2) psi0(q - y/2) into exp(-rho^2 - |x|^2)/(gamma^2 pi)
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const double y1 = 2 * gam * r.nodes[a], y2 = 2 * gam * r.nodes[b];
      const PhasePoint plus{pt.q1 + y1 / 2, pt.q2 + y2 / 2, 0, 0}, minus{pt.q1 - y1 / 2, pt.q2 - y2 / 2, 0, 0};
      const double phase = th * (g.chi.eval(arr(plus)).real() - g.chi.eval(arr(minus)).real()) -
                           (y1 * pt.p1 + y2 * pt.p2) / params.hbar();
      s += r.weights[a] * r.weights[b] * std::polar(1.0, phase);
    }
  return s * 4.0 * gam * gam * std::exp(-rho2) / (gam * gam * M_PI);
}

}  // namespace landau
