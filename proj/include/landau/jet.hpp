#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "landau/exact.hpp"

namespace landau {

template <class T>
struct JetScalar;

template <>
struct JetScalar<std::complex<double>> {
  static bool zero(const std::complex<double>& x) { return x == 0.0; }
  static std::complex<double> ratio(int j, int d) { return static_cast<double>(j) / d; }
  static std::complex<double> exp(const std::complex<double>& x) { return std::exp(x); }
};

/// Exact jets carry no transcendental constant term: exp() requires h(x0) = 0.
template <>
struct JetScalar<QComplex> {
  static bool zero(const QComplex& x) { return x.is_zero(); }
  static QComplex ratio(int j, int d) {
    Rational r(j, d);
    r.canonicalize();
    return QComplex(r);
  }
  static QComplex exp(const QComplex& x) {
    if (!x.is_zero()) throw std::domain_error("exact jet exp needs a vanishing constant term");
    return QComplex(1);
  }
};

/// Index bookkeeping for truncated Taylor jets in N variables, graded by total
/// degree. Within a degree the exponents run with the first variable descending.
template <int N>
class JetLayout {
 public:
  using Multi = std::array<int, N>;

  explicit JetLayout(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("jet order must be nonnegative");
    binom_.assign(static_cast<std::size_t>(order + N + 1), std::vector<long>(N + 1, 0));
    for (int n = 0; n <= order + N; ++n)
      for (int k = 0; k <= N; ++k) binom_[n][k] = choose(n, k);
    for (int d = 0; d <= order; ++d) {
      offsets_.push_back(static_cast<int>(exps_.size()));
      Multi m{};
      enumerate(d, 0, m);
    }
    offsets_.push_back(static_cast<int>(exps_.size()));
  }

  int order() const { return order_; }
  int size() const { return static_cast<int>(exps_.size()); }
  const Multi& exponent(int idx) const { return exps_[static_cast<std::size_t>(idx)]; }
  int degree_begin(int d) const { return offsets_[static_cast<std::size_t>(d)]; }
  int degree_end(int d) const { return offsets_[static_cast<std::size_t>(d) + 1]; }

  int index(const Multi& m) const {
    int d = 0;
    for (int v = 0; v < N; ++v) d += m[v];
    if (d > order_) return -1;
    long rank = 0;
    int r = d;
    for (int v = 0; v + 1 < N; ++v) {
      const int parts = N - v;
      const int rest = r - m[v] - 1;
      if (rest >= 0) rank += binom_[static_cast<std::size_t>(rest + parts - 1)][parts - 1];
      r -= m[v];
    }
    return offsets_[static_cast<std::size_t>(d)] + static_cast<int>(rank);
  }

  static std::shared_ptr<const JetLayout> get(int order);

 private:
  static long choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }
  void enumerate(int remaining, int v, Multi& m) {
    if (v == N - 1) {
      m[v] = remaining;
      exps_.push_back(m);
      return;
    }
    for (int x = remaining; x >= 0; --x) {
      m[v] = x;
      enumerate(remaining - x, v + 1, m);
    }
  }

  int order_;
  std::vector<std::vector<long>> binom_;
  std::vector<int> offsets_;
  std::vector<Multi> exps_;
};

/// Truncated Taylor expansion around a point: coefficient of h^m is
/// (d^m f)(x0) / m!.
template <int N, class T = std::complex<double>>
class Jet {
 public:
  using cplx = T;
  using S = JetScalar<T>;
  using Multi = std::array<int, N>;

  Jet() = default;
  explicit Jet(int order) : layout_(JetLayout<N>::get(order)), c_(static_cast<std::size_t>(layout_->size())) {}

  static Jet constant(int order, cplx v) {
    Jet j(order);
    j.c_[0] = v;
    return j;
  }
  /// x_v expanded around x0
  static Jet variable(int order, int v, cplx x0) {
    Jet j = constant(order, x0);
    if (order >= 1) {
      Multi m{};
      m[v] = 1;
      j.c_[static_cast<std::size_t>(j.layout_->index(m))] = cplx(1);
    }
    return j;
  }

  int order() const { return layout_->order(); }
  const JetLayout<N>& layout() const { return *layout_; }
  cplx value() const { return c_[0]; }
  cplx coeff(const Multi& m) const {
    const int i = layout_->index(m);
    return i < 0 ? cplx() : c_[static_cast<std::size_t>(i)];
  }
  cplx& at(int idx) { return c_[static_cast<std::size_t>(idx)]; }
  cplx at(int idx) const { return c_[static_cast<std::size_t>(idx)]; }
  void add(const Multi& m, cplx v) {
    const int i = layout_->index(m);
    if (i >= 0) c_[static_cast<std::size_t>(i)] += v;
  }

  Jet& operator+=(const Jet& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet& operator*=(const cplx& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const cplx& s) { return a *= s; }
  friend Jet operator*(const cplx& s, Jet a) { return a *= s; }

  /// Truncated product; loops over the nonzero entries of the sparser factor.
  friend Jet operator*(const Jet& a, const Jet& b) {
    a.check(b);
    const Jet& sparse = a.nonzeros() <= b.nonzeros() ? a : b;
    const Jet& dense = &sparse == &a ? b : a;
    const auto& L = *a.layout_;
    const int K = L.order();
    Jet out(K);
    for (int i = 0; i < L.size(); ++i) {
      const cplx& s = sparse.c_[static_cast<std::size_t>(i)];
      if (S::zero(s)) continue;
      const Multi& ms = L.exponent(i);
      int ds = 0;
      for (int v = 0; v < N; ++v) ds += ms[v];
      for (int j = 0; j < L.degree_end(K - ds); ++j) {
        const cplx& t = dense.c_[static_cast<std::size_t>(j)];
        if (S::zero(t)) continue;
        const Multi& mt = L.exponent(j);
        Multi m;
        for (int v = 0; v < N; ++v) m[v] = ms[v] + mt[v];
        out.c_[static_cast<std::size_t>(L.index(m))] += s * t;
      }
    }
    return out;
  }

  /// exp of a jet via d E_d = sum_j j H_j E_{d-j} on homogeneous parts.
  friend Jet exp(const Jet& h) {
    const auto& L = *h.layout_;
    const int K = L.order();
    Jet e(K);
    e.c_[0] = S::exp(h.c_[0]);
    struct Entry {
      Multi m;
      int deg;
      cplx v;
    };
    std::vector<Entry> hs;
    for (int i = L.degree_begin(std::min(1, K)); i < L.size() && K >= 1; ++i) {
      if (S::zero(h.c_[static_cast<std::size_t>(i)])) continue;
      const Multi& m = L.exponent(i);
      int d = 0;
      for (int v = 0; v < N; ++v) d += m[v];
      hs.push_back({m, d, h.c_[static_cast<std::size_t>(i)]});
    }
    for (int d = 1; d <= K; ++d) {
      for (const auto& en : hs) {
        if (en.deg > d) continue;
        const cplx f = en.v * S::ratio(en.deg, d);
        for (int j = L.degree_begin(d - en.deg); j < L.degree_end(d - en.deg); ++j) {
          const cplx& t = e.c_[static_cast<std::size_t>(j)];
          if (S::zero(t)) continue;
          const Multi& mt = L.exponent(j);
          Multi m;
          for (int v = 0; v < N; ++v) m[v] = en.m[v] + mt[v];
          e.c_[static_cast<std::size_t>(L.index(m))] += f * t;
        }
      }
    }
    return e;
  }

  int nonzeros() const {
    int n = 0;
    for (const auto& x : c_) n += !S::zero(x);
    return n;
  }

 private:
  void check(const Jet& o) const {
    if (layout_ != o.layout_) throw std::invalid_argument("jets of different order");
  }
  std::shared_ptr<const JetLayout<N>> layout_;
  std::vector<cplx> c_;
};

using Jet2 = Jet<2>;
using Jet4 = Jet<4>;
using ExactJet2 = Jet<2, QComplex>;

}  // namespace landau

template <int N>
std::shared_ptr<const landau::JetLayout<N>> landau::JetLayout<N>::get(int order) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const JetLayout<N>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[order];
  if (!slot) slot = std::make_shared<const JetLayout<N>>(order);
  return slot;
}
