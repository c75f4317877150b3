#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>

#include "landau/exact.hpp"
#include "landau/moyal.hpp"
#include "landau/wigner.hpp"

namespace landau {

// Letters of the abstract ladder algebra. Pi is the vacuum projector.
enum class Letter : char { a = 'a', abar = 'A', b = 'b', bbar = 'B', Pi = 'P' };

using Word = std::basic_string<char>;  // letters as chars, see Letter

Word word(std::initializer_list<Letter> letters);
Word power(Letter x, int k);

/// ā^ma b̄^mb [Π] a^pa b^pb
struct NormalWord {
  int ma = 0, mb = 0;
  bool projector = false;
  int pa = 0, pb = 0;

  Word str() const;
};

/// Parses a word already in normal form; nullopt otherwise.
std::optional<NormalWord> parse_normal(const Word& w);

enum class RewriteOrder { leftmost, rightmost };

class LadderElement {
 public:
  LadderElement() = default;
  LadderElement(const Word& w, Surd c = Surd(1));  // NOLINT
  static LadderElement scalar(Surd c) { return LadderElement(Word{}, std::move(c)); }
  static LadderElement letter(Letter x) { return LadderElement(word({x})); }
  static LadderElement projector() { return letter(Letter::Pi); }

  const std::map<Word, Surd>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_normal() const;

  void add_term(const Word& w, const Surd& c);
  /// ā <-> a, b̄ <-> b, words reversed, coefficients conjugated; result normalized.
  LadderElement conj() const;

  LadderElement& operator+=(const LadderElement& o);
  LadderElement& operator-=(const LadderElement& o);
  LadderElement& operator*=(const Surd& c);

  friend LadderElement operator+(LadderElement x, const LadderElement& y) { return x += y; }
  friend LadderElement operator-(LadderElement x, const LadderElement& y) { return x -= y; }
  friend LadderElement operator*(LadderElement x, const Surd& c) { return x *= c; }
  friend bool operator==(const LadderElement& x, const LadderElement& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const LadderElement& x, const LadderElement& y) { return !(x == y); }

 private:
  std::map<Word, Surd> terms_;
};

std::ostream& operator<<(std::ostream& os, const LadderElement& e);

/// Rewrites every term to normal form (creators, optional Π, annihilators).
LadderElement normalize(const LadderElement& e, RewriteOrder order = RewriteOrder::leftmost);

/// Concatenation followed by normalization.
LadderElement star_product(const LadderElement& x, const LadderElement& y);
LadderElement star_power(const LadderElement& x, int n);

LadderElement number_a();  // ā a
LadderElement number_b();  // b̄ b

/// (n1! n2! l1! l2!)^{-1/2} ā^n1 b̄^l1 Π a^n2 b^l2
LadderElement wigner_element(const WignerIndex& idx);

/// c with x = c y, when such a c exists (x = 0 gives c = 0).
std::optional<Surd> proportionality(const LadderElement& x, const LadderElement& y);

/// Checks the ladder relations of the diagonal W_nl for one generator:
///   a:    a ⋆ W_nl = W_{n-1,l} ⋆ a        (zero when n = 0)
///   abar: ā ⋆ W_nl = W_{n+1,l} ⋆ ā
///   b, bbar likewise in the l index
/// together with the matching right actions W_nl ⋆ ā = ā ⋆ W_{n-1,l} etc.
bool verify_ladder(const WignerIndex& idx, Letter generator);

/// Star eigenvalues as multiples of hbar*omega and hbar.
struct EigenValues {
  Rational energy;    // H_L ⋆ W = energy * hbar omega * W
  Rational momentum;  // J ⋆ W = momentum * hbar * W
  double energy_value(const Params& p) const { return to_double(energy) * p.hbar() * p.omega(); }
  double momentum_value(const Params& p) const { return to_double(momentum) * p.hbar(); }
};
/// Throws std::logic_error when H_L ⋆ W or J ⋆ W is not proportional to W,
/// or when the left and right actions disagree.
EigenValues eigen_check(const WignerIndex& idx);

/// Random word over all five letters.
Word random_word(std::mt19937& rng, int max_length);

/// Image of a single word in the function picture: a, ā, b, b̄ as ladder
/// coordinates and Π as 4 exp(-2(aā + bb̄)), multiplied with star_exact.
GaussPolyFn represent(const Word& w);

}  // namespace landau
