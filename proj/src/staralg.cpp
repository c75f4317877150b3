#include "landau/staralg.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace landau {

namespace {

constexpr char A = static_cast<char>(Letter::abar), B = static_cast<char>(Letter::bbar);
constexpr char a_ = static_cast<char>(Letter::a), b_ = static_cast<char>(Letter::b);
constexpr char P = static_cast<char>(Letter::Pi);

// Normal order ā < b̄ < Π < a < b, at most one Π.
int rank(char x) {
  switch (x) {
    case A: return 0;
    case B: return 1;
    case P: return 2;
    case a_: return 3;
    case b_: return 4;
  }
  throw std::invalid_argument("staralg: unknown letter");
}

bool reducible(char x, char y) { return rank(x) > rank(y) || (x == P && y == P); }

struct Replacement {
  std::vector<std::pair<Word, int>> terms;  // empty = the pair vanishes
};

Replacement rewrite(char x, char y) {
  if (x == a_ && y == A) return {{{Word{A, a_}, 1}, {Word{}, 1}}};
  if (x == b_ && y == B) return {{{Word{B, b_}, 1}, {Word{}, 1}}};
  if (x == P && y == P) return {{{Word{P}, 1}}};
  if (x == P || y == P) return {};  // aΠ = bΠ = Πā = Πb̄ = 0
  return {{{Word{y, x}, 1}}};       // the remaining pairs commute
}

std::string letter_name(char x) {
  switch (x) {
    case A: return "ā";
    case B: return "b̄";
    case P: return "Π";
    case a_: return "a";
    case b_: return "b";
  }
  return "?";
}

Rational rational_part(const Surd& s) {
  if (s.is_zero()) return Rational(0);
  if (s.parts().size() != 1 || s.parts().begin()->first != 1 || sgn(s.parts().begin()->second.im) != 0)
    throw std::logic_error("staralg: eigenvalue is not rational");
  return s.parts().begin()->second.re;
}

}  // namespace

Word word(std::initializer_list<Letter> letters) {
  Word w;
  for (Letter x : letters) w.push_back(static_cast<char>(x));
  return w;
}

Word power(Letter x, int k) {
  if (k < 0) throw std::domain_error("staralg: negative power");
  return Word(static_cast<std::size_t>(k), static_cast<char>(x));
}

Word NormalWord::str() const {
  Word w = power(Letter::abar, ma) + power(Letter::bbar, mb);
  if (projector) w.push_back(P);
  return w + power(Letter::a, pa) + power(Letter::b, pb);
}

std::optional<NormalWord> parse_normal(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (reducible(w[i], w[i + 1])) return std::nullopt;
  NormalWord n;
  for (char x : w) {
    switch (x) {
      case A: ++n.ma; break;
      case B: ++n.mb; break;
      case P: n.projector = true; break;
      case a_: ++n.pa; break;
      case b_: ++n.pb; break;
      default: return std::nullopt;
    }
  }
  return n;
}

LadderElement::LadderElement(const Word& w, Surd c) {
  for (char x : w) rank(x);
  add_term(w, c);
}

void LadderElement::add_term(const Word& w, const Surd& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool LadderElement::is_normal() const {
  for (const auto& [w, c] : terms_)
    if (!parse_normal(w)) return false;
  return true;
}

LadderElement LadderElement::conj() const {
  LadderElement out;
  for (const auto& [w, c] : terms_) {
    Word r(w.rbegin(), w.rend());
    for (char& x : r) {
      if (x == A) x = a_;
      else if (x == a_) x = A;
      else if (x == B) x = b_;
      else if (x == b_) x = B;
    }
    out.add_term(r, c.conj());
  }
  return normalize(out);
}

LadderElement& LadderElement::operator+=(const LadderElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

LadderElement& LadderElement::operator-=(const LadderElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

LadderElement& LadderElement::operator*=(const Surd& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const LadderElement& e) {
  if (e.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    std::size_t i = 0;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      os << " " << letter_name(w[i]);
      if (j - i > 1) os << "^" << j - i;
      i = j;
    }
  }
  return os;
}

LadderElement normalize(const LadderElement& e, RewriteOrder order) {
  std::map<Word, Surd> pending = e.terms();
  LadderElement done;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Surd& c = node.mapped();
    std::optional<std::size_t> at;
    if (order == RewriteOrder::leftmost) {
      for (std::size_t i = 0; i + 1 < w.size() && !at; ++i)
        if (reducible(w[i], w[i + 1])) at = i;
    } else {
      for (std::size_t i = w.size(); i >= 2 && !at; --i)
        if (reducible(w[i - 2], w[i - 1])) at = i - 2;
    }
    if (!at) {
      done.add_term(w, c);
      continue;
    }
    for (const auto& [rep, k] : rewrite(w[*at], w[*at + 1]).terms) {
      Word next = w.substr(0, *at) + rep + w.substr(*at + 2);
      Surd v = c * Surd(static_cast<long>(k));
      auto [it, inserted] = pending.try_emplace(std::move(next), v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return done;
}

LadderElement star_product(const LadderElement& x, const LadderElement& y) {
  LadderElement cat;
  for (const auto& [w1, c1] : x.terms())
    for (const auto& [w2, c2] : y.terms()) cat.add_term(w1 + w2, c1 * c2);
  return normalize(cat);
}

LadderElement star_power(const LadderElement& x, int n) {
  if (n < 0) throw std::domain_error("staralg: negative star power");
  LadderElement out = LadderElement::scalar(Surd(1));
  for (int k = 0; k < n; ++k) out = star_product(out, x);
  return out;
}

LadderElement number_a() { return LadderElement(word({Letter::abar, Letter::a})); }
LadderElement number_b() { return LadderElement(word({Letter::bbar, Letter::b})); }

LadderElement wigner_element(const WignerIndex& idx) {
  idx.validate();
  const Rational f = factorial_q(static_cast<unsigned>(idx.n1)) * factorial_q(static_cast<unsigned>(idx.n2)) *
                     factorial_q(static_cast<unsigned>(idx.l1)) * factorial_q(static_cast<unsigned>(idx.l2));
  const NormalWord w{idx.n1, idx.l1, true, idx.n2, idx.l2};
  return LadderElement(w.str(), Surd::sqrt_of(1 / f));
}

std::optional<Surd> proportionality(const LadderElement& x, const LadderElement& y) {
  if (x.is_zero()) return Surd();
  if (y.is_zero()) return std::nullopt;
  const auto& [w0, c0] = *y.terms().begin();
  auto it = x.terms().find(w0);
  if (it == x.terms().end()) return std::nullopt;
  if (c0.parts().size() != 1) throw std::domain_error("proportionality: reference coefficient must be a single surd");
  // 1/(q sqrt k) = sqrt k / (q k)
  const auto& [k, q] = *c0.parts().begin();
  const Surd inv = Surd::sqrt_of(Rational(static_cast<unsigned long>(k))) *
                   Surd(QComplex(1) / (q * QComplex(Rational(static_cast<unsigned long>(k)))));
  const Surd c = it->second * inv;
  if (x != y * c) return std::nullopt;
  return c;
}

bool verify_ladder(const WignerIndex& idx, Letter generator) {
  if (!idx.diagonal()) throw std::domain_error("verify_ladder: diagonal index required");
  const int n = idx.n1, l = idx.l1;
  auto W = [](int n, int l) { return wigner_element(WignerIndex::diag(n, l)); };
  const LadderElement a = LadderElement::letter(Letter::a), ab = LadderElement::letter(Letter::abar);
  const LadderElement b = LadderElement::letter(Letter::b), bb = LadderElement::letter(Letter::bbar);
  switch (generator) {
    case Letter::a:
      if (n == 0) return star_product(a, W(0, l)).is_zero() && star_product(W(0, l), ab).is_zero();
      return star_product(a, W(n, l)) == star_product(W(n - 1, l), a) &&
             star_product(W(n, l), ab) == star_product(ab, W(n - 1, l));
    case Letter::abar:
      return star_product(ab, W(n, l)) == star_product(W(n + 1, l), ab) &&
             star_product(a, W(n + 1, l)) == star_product(W(n, l), a);
    case Letter::b:
      if (l == 0) return star_product(b, W(n, 0)).is_zero() && star_product(W(n, 0), bb).is_zero();
      return star_product(b, W(n, l)) == star_product(W(n, l - 1), b) &&
             star_product(W(n, l), bb) == star_product(bb, W(n, l - 1));
    case Letter::bbar:
      return star_product(bb, W(n, l)) == star_product(W(n, l + 1), bb) &&
             star_product(b, W(n, l + 1)) == star_product(W(n, l), b);
    case Letter::Pi:
      break;
  }
  throw std::invalid_argument("verify_ladder: generator must be a, ā, b or b̄");
}

EigenValues eigen_check(const WignerIndex& idx) {
  if (!idx.diagonal()) throw std::domain_error("eigen_check: diagonal index required");
  const LadderElement W = wigner_element(idx);
  auto eigenvalue = [&](const LadderElement& N) {
    const auto left = proportionality(star_product(N, W), W);
    const auto right = proportionality(star_product(W, N), W);
    if (!left || !right) throw std::logic_error("eigen_check: not a star eigenfunction");
    if (*left != *right) throw std::logic_error("eigen_check: left and right eigenvalues differ");
    return rational_part(*left);
  };
  const Rational na = eigenvalue(number_a());
  const Rational nb = eigenvalue(number_b());
  return {na + Rational(1, 2), nb - na};
}

Word random_word(std::mt19937& rng, int max_length) {
  static constexpr char letters[] = {A, B, P, a_, b_};
  std::uniform_int_distribution<int> len(0, max_length), pick(0, 4);
  Word w(static_cast<std::size_t>(len(rng)), A);
  for (char& x : w) x = letters[pick(rng)];
  return w;
}

GaussPolyFn represent(const Word& w) {
  const auto pi = w.find(P);
  if (pi != Word::npos && w.find(P, pi + 1) != Word::npos)
    throw unsupported_class("represent: at most one projector per word");
  auto poly_of = [](const Word& part) {
    LadderPoly p(QComplex(1));
    for (char x : part) {
      switch (x) {
        case A: p = p * ladder_abar(); break;
        case B: p = p * ladder_bbar(); break;
        case a_: p = p * ladder_a(); break;
        case b_: p = p * ladder_b(); break;
      }
    }
    return GaussPolyFn(p);
  };
  if (pi == Word::npos) {
    GaussPolyFn acc(LadderPoly(QComplex(1)));
    for (char x : w) acc = star_exact(acc, poly_of(Word{x}));
    return acc;
  }
  GaussPolyFn left(LadderPoly(QComplex(1)));
  for (char x : w.substr(0, pi)) left = star_exact(left, poly_of(Word{x}));
  GaussPolyFn acc = star_exact(left, make_gauss_fn(LadderPoly(QComplex(4)), Rational(2)));
  for (char x : w.substr(pi + 1)) acc = star_exact(acc, poly_of(Word{x}));
  return acc;
}

}  // namespace landau
