#include "landau/exact.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace landau {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite value");
  Rational r(x);  // GMP converts doubles exactly
  r.canonicalize();
  return r;
}

double to_double(const Rational& r) { return r.get_d(); }

Rational factorial_q(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial_q(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

QComplex& QComplex::operator/=(const QComplex& o) {
  Rational den = o.re * o.re + o.im * o.im;
  if (sgn(den) == 0) throw std::domain_error("QComplex: division by zero");
  Rational r = (re * o.re + im * o.im) / den;
  im = (im * o.re - re * o.im) / den;
  re = std::move(r);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QComplex& z) {
  if (sgn(z.im) == 0) return os << z.re.get_str();
  if (sgn(z.re) == 0) return os << z.im.get_str() << "i";
  return os << "(" << z.re.get_str() << (sgn(z.im) > 0 ? "+" : "") << z.im.get_str() << "i)";
}

QComplex pow(const QComplex& z, unsigned k) {
  QComplex out(1);
  QComplex base = z;
  while (k) {
    if (k & 1u) out *= base;
    base *= base;
    k >>= 1u;
  }
  return out;
}

namespace {

// n = square^2 * squarefree. Trial division is enough for the factorial-sized
// radicands used here; a large cofactor that is not a perfect square is
// rejected rather than guessed at.
void split_square(const mpz_class& n, mpz_class& square_root, std::uint64_t& squarefree) {
  mpz_class rest = n;
  square_root = 1;
  mpz_class free_part = 1;
  for (unsigned long p = 2; p < 20000 && rest > 1; ++p) {
    if (p > 2 && p % 2 == 0) continue;
    unsigned count = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++count;
    }
    for (unsigned c = 0; c + 1 < count; c += 2) square_root *= p;
    if (count % 2) free_part *= p;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      square_root *= r;
    } else if (rest < mpz_class(20000) * mpz_class(20000)) {
      free_part *= rest;  // prime cofactor
    } else {
      throw std::domain_error("Surd::sqrt_of: radicand too large to factor");
    }
  }
  if (!free_part.fits_ulong_p()) throw std::domain_error("Surd::sqrt_of: radicand overflow");
  squarefree = free_part.get_ui();
}

}  // namespace

Surd::Surd(QComplex c) {
  if (!c.is_zero()) parts_.emplace(1, std::move(c));
}

Surd Surd::sqrt_of(const Rational& r) {
  if (sgn(r) < 0) throw std::domain_error("Surd::sqrt_of: negative radicand");
  Surd out;
  if (sgn(r) == 0) return out;
  // sqrt(p/q) = sqrt(p*q)/q
  mpz_class pq = r.get_num() * r.get_den();
  mpz_class root;
  std::uint64_t free_part = 1;
  split_square(pq, root, free_part);
  out.parts_.emplace(free_part, QComplex(Rational(root, r.get_den())));
  out.parts_.begin()->second.re.canonicalize();
  return out;
}

void Surd::add_part(std::uint64_t radicand, const QComplex& c) {
  auto [it, inserted] = parts_.try_emplace(radicand, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) parts_.erase(it);
}

std::complex<double> Surd::to_complex() const {
  std::complex<double> s = 0;
  for (const auto& [k, v] : parts_) s += std::sqrt(static_cast<double>(k)) * v.to_complex();
  return s;
}

Surd Surd::conj() const {
  Surd out = *this;
  for (auto& [k, v] : out.parts_) v = v.conj();
  return out;
}

Surd& Surd::operator+=(const Surd& o) {
  for (const auto& [k, v] : o.parts_) add_part(k, v);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (const auto& [k, v] : o.parts_) add_part(k, -v);
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  Surd out;
  for (const auto& [k1, v1] : parts_) {
    for (const auto& [k2, v2] : o.parts_) {
      // sqrt(k1) sqrt(k2) = g sqrt(k1 k2 / g^2), g = gcd(k1, k2), both squarefree
      std::uint64_t g = std::gcd(k1, k2);
      std::uint64_t rad = (k1 / g) * (k2 / g);
      out.add_part(rad, v1 * v2 * QComplex(Rational(static_cast<unsigned long>(g))));
    }
  }
  *this = std::move(out);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Surd& s) {
  if (s.parts().empty()) return os << "0";
  bool first = true;
  for (const auto& [k, v] : s.parts()) {
    if (!first) os << " + ";
    first = false;
    os << v;
    if (k != 1) os << "*sqrt(" << k << ")";
  }
  return os;
}

}  // namespace landau
