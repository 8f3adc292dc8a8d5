#ifndef MZV_WORDS_HPP
#define MZV_WORDS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mzv {

// Two alphabets drive everything:
//   X = {x0, x1} with x0 < x1;
//   Y = {y_1, y_2, y_3, ...} with y_1 > y_2 > y_3 > ...  (y_1 is the largest letter).
// A word over Y encodes a composition (s_1,...,s_r) as y_{s_1}...y_{s_r};
// the same composition over X reads x0^{s_1-1} x1 ... x0^{s_r-1} x1.
enum class Alphabet : unsigned char { X, Y };

std::string alphabet_name(Alphabet a);

struct Letter {
  Alphabet alphabet;
  int index;  // X: 0 or 1; Y: s >= 1 for y_s

  Letter(Alphabet a, int i);
};

// Strict total order on letters of one alphabet (x0 < x1; y_s < y_t iff s > t).
bool letter_less(Alphabet a, int i, int j);

class Word {
 public:
  explicit Word(Alphabet a) : alphabet_(a) {}
  Word(Alphabet a, std::vector<int> letters);

  // Text forms: X-word = /[01]*/, Y-word = comma-separated indices ("2,1"),
  // the empty string being the unit of either monoid.
  static Word parse(Alphabet a, std::string_view text);
  std::string str() const;

  Alphabet alphabet() const { return alphabet_; }
  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }
  // X: length; Y: sum of letter indices.
  int weight() const;

  Word concat(const Word& rhs) const;
  Word prefix(int len) const;
  Word suffix(int from) const;

  // Container order: alphabet tag first, then the word order of compare().
  // Use compare() for the mathematical order (it rejects mixed alphabets).
  friend bool operator<(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  Alphabet alphabet_;
  std::vector<int> letters_;
};

// Lexicographic order induced by the letter order; a proper prefix compares
// less than its extension. Throws on mixed alphabets (caller bug).
std::strong_ordering compare(const Word& u, const Word& v);

// w is Lyndon iff nonempty and strictly smaller than every proper suffix.
bool is_lyndon(const Word& w);

// All words of the given weight, sorted ascending in the word order.
// Over Y these are the compositions of n (2^{n-1} of them); over X all
// binary words of length n.
std::vector<Word> words_of_weight(Alphabet a, int n);

// All Lyndon words of weight <= max_weight, sorted by (weight, word order).
// Exhaustive filter over the weight blocks; at desk scale (weight <= 16) the
// blocks are small enough that generation cleverness buys nothing.
std::vector<Word> lyndon_words(Alphabet a, int max_weight);
std::vector<Word> lyndon_words_of_weight(Alphabet a, int n);

// Standard factorization of a Lyndon word of length >= 2: l = l1 l2 where l2
// is the smallest proper suffix. Both factors are Lyndon and l1 < l.
std::pair<Word, Word> standard_factorization(const Word& l);

// Chen-Fox-Lyndon factorization grouped into strictly decreasing Lyndon words
// with multiplicities: w = l1^{i1} ... lk^{ik}, l1 > ... > lk. Computed with
// Duval's algorithm (Theor. Comput. Sci. 1988). Empty word -> empty list.
std::vector<std::pair<Word, int>> lyndon_factorization(const Word& w);

// The letter-level correspondence pi_Y / pi_X between the alphabets.
// X -> Y: words ending in x1 (or empty) map to their composition word; words
// ending in x0 are annihilated (nullopt). Y -> X: total, injective.
std::optional<Word> project_word(const Word& w);

}  // namespace mzv

#endif  // MZV_WORDS_HPP
