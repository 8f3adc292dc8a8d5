#ifndef MZV_NCPOLY_HPP
#define MZV_NCPOLY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mzv/rational.hpp"
#include "mzv/words.hpp"

namespace mzv {

// Sparse noncommutative polynomial: finite map word -> rational with no zero
// values stored. All support words share the polynomial's alphabet.
class NcPoly {
 public:
  explicit NcPoly(Alphabet a) : alphabet_(a) {}
  static NcPoly zero(Alphabet a) { return NcPoly(a); }
  static NcPoly unit(Alphabet a);  // the empty word, coefficient 1
  static NcPoly from_word(const Word& w, const Rational& c = Rational(1));

  Alphabet alphabet() const { return alphabet_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Word& w) const;
  void add_term(const Word& w, const Rational& c);

  std::set<int> weights() const;
  // Weight if homogeneous (zero polynomial counts as homogeneous of any
  // weight and reports nullopt alongside is_zero()).
  std::optional<int> homogeneous_weight() const;
  NcPoly homogeneous_part(int n) const;
  int min_weight() const;  // of the support; throws on zero polynomial
  int max_weight() const;

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Rational& c);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Rational& c) { return a *= c; }
  friend NcPoly operator*(const Rational& c, NcPoly a) { return a *= c; }
  friend NcPoly operator-(const NcPoly& a) { return a * Rational(-1); }
  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

  std::string pretty() const;

 private:
  Alphabet alphabet_;
  std::map<Word, Rational> terms_;
};

// Concatenation product (the noncommutative multiplication).
NcPoly concat(const NcPoly& a, const NcPoly& b);
inline NcPoly operator*(const NcPoly& a, const NcPoly& b) { return concat(a, b); }
NcPoly bracket(const NcPoly& a, const NcPoly& b);  // ab - ba
NcPoly concat_pow(const NcPoly& a, int k);

// Shuffle product, both alphabets:
//   au (sh) bv = a(u (sh) bv) + b(au (sh) v),  w (sh) 1 = w.
// Recursive on word pairs with a shared memo cache (repeated subproblems
// dominate basis construction).
NcPoly shuffle(const NcPoly& p, const NcPoly& q);
NcPoly shuffle_pow(const NcPoly& p, int k);

// Quasi-shuffle (stuffle) product, alphabet Y only:
//   y_s u (st) y_t v = y_s(u (st) y_t v) + y_t(y_s u (st) v) + y_{s+t}(u (st) v).
NcPoly stuffle(const NcPoly& p, const NcPoly& q);
NcPoly stuffle_pow(const NcPoly& p, int k);

// Words form an orthonormal family: <p | q> = sum over shared support.
Rational pairing(const NcPoly& p, const NcPoly& q);

// Finite map (word, word) -> rational; carrier for coproduct outputs and the
// truncated diagonal-series computations.
class TensorPoly {
 public:
  explicit TensorPoly(Alphabet a) : alphabet_(a) {}
  static TensorPoly unit(Alphabet a);  // 1 (x) 1
  static TensorPoly outer(const NcPoly& a, const NcPoly& b);

  Alphabet alphabet() const { return alphabet_; }
  const std::map<std::pair<Word, Word>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Word& u, const Word& v) const;
  void add_term(const Word& u, const Word& v, const Rational& c);

  TensorPoly& operator+=(const TensorPoly& o);
  TensorPoly& operator-=(const TensorPoly& o);
  TensorPoly& operator*=(const Rational& c);
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  friend TensorPoly operator*(TensorPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorPoly& a, const TensorPoly& b) { return !(a == b); }

 private:
  Alphabet alphabet_;
  std::map<std::pair<Word, Word>, Rational> terms_;
};

// Componentwise concatenation: (a (x) b)(c (x) d) = ac (x) bd.
TensorPoly tensor_concat(const TensorPoly& A, const TensorPoly& B);

enum class ProductLaw { Concat, Shuffle, Stuffle };

// (a (x) b)(c (x) d) = (a law c) (x) (b concat d), dropping any term whose
// slot weight exceeds trunc_weight. This is the algebra in which the
// Schutzenberger factorization lives (left slot dual law, right slot
// concatenation).
TensorPoly tensor_mixed_product(const TensorPoly& A, const TensorPoly& B, ProductLaw left_law,
                                int trunc_weight);
TensorPoly tensor_exp(const TensorPoly& Z, ProductLaw left_law, int trunc_weight);

Rational pairing(const TensorPoly& T, const NcPoly& left, const NcPoly& right);

enum class CoproductKind { Mu, Shuffle, Stuffle, Deconcat };

// Coproducts on a word:
//   Mu:       single Y letters only, Delta_mu y_s = sum_{i=1}^{s-1} y_i (x) y_{s-i}
//             (not a concatenation morphism, so no extension is guessed);
//   Shuffle:  letters -> l (x) 1 + 1 (x) l, extended as concatenation morphism;
//   Stuffle:  Shuffle + Mu on letters, extended as concatenation morphism;
//   Deconcat: sum of prefix (x) suffix splits.
TensorPoly coproduct(const Word& w, CoproductKind kind);
TensorPoly coproduct(const NcPoly& p, CoproductKind kind);

// Primitive projector for the stuffle coproduct. pi1(w) = w + corrections of
// higher length, the unique preimage under the exponential reconstruction
//   w = sum_k 1/k! sum <w | u_1 st ... st u_k> pi1(u_1)...pi1(u_k),
// solved degree by degree (the direct alternating-sum formula is kept as a
// test oracle). pi1 of the empty word is 0.
NcPoly pi1(const Word& w);
NcPoly pi1(const NcPoly& p);

// Concatenation automorphism of Q<Y> with phi(y_k) = pi1(y_k); transports the
// shuffle bialgebra onto the stuffle bialgebra.
NcPoly phi(const NcPoly& p);
const NcPoly& phi_word(const Word& w);

// Linear extension of the letter-level projections. to_Y annihilates words
// ending in x0; to_X is a section of to_Y.
NcPoly project_poly(const NcPoly& p, Alphabet target);

}  // namespace mzv

#endif  // MZV_NCPOLY_HPP
