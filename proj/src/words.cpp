#include "mzv/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace mzv {

std::string alphabet_name(Alphabet a) { return a == Alphabet::X ? "X" : "Y"; }

Letter::Letter(Alphabet a, int i) : alphabet(a), index(i) {
  if (a == Alphabet::X) {
    if (i != 0 && i != 1) throw std::invalid_argument("Letter: X index must be 0 or 1");
  } else {
    if (i < 1) throw std::invalid_argument("Letter: Y index must be >= 1");
  }
}

bool letter_less(Alphabet a, int i, int j) {
  // x0 < x1 on X; y_1 > y_2 > ... on Y, so smaller index means larger letter.
  return a == Alphabet::X ? i < j : i > j;
}

Word::Word(Alphabet a, std::vector<int> letters) : alphabet_(a), letters_(std::move(letters)) {
  for (int l : letters_) Letter(a, l);  // validate
}

Word Word::parse(Alphabet a, std::string_view text) {
  std::vector<int> letters;
  if (a == Alphabet::X) {
    for (char c : text) {
      if (c != '0' && c != '1') throw std::invalid_argument("Word: X text must match [01]*");
      letters.push_back(c - '0');
    }
    return Word(a, std::move(letters));
  }
  if (text.empty()) return Word(a);
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                            : comma - pos);
    if (tok.empty() || tok[0] == '0') throw std::invalid_argument("Word: bad Y letter token");
    int v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw std::invalid_argument("Word: bad Y letter token");
      v = v * 10 + (c - '0');
      if (v > 1'000'000) throw std::invalid_argument("Word: Y letter index too large");
    }
    letters.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Word(a, std::move(letters));
}

std::string Word::str() const {
  std::string out;
  if (alphabet_ == Alphabet::X) {
    for (int l : letters_) out.push_back(static_cast<char>('0' + l));
    return out;
  }
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(letters_[i]);
  }
  return out;
}

int Word::weight() const {
  if (alphabet_ == Alphabet::X) return length();
  int w = 0;
  for (int l : letters_) w += l;
  return w;
}

Word Word::concat(const Word& rhs) const {
  if (alphabet_ != rhs.alphabet_) throw std::invalid_argument("Word::concat: mixed alphabets");
  std::vector<int> ls = letters_;
  ls.insert(ls.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(alphabet_, std::move(ls));
}

Word Word::prefix(int len) const {
  return Word(alphabet_, std::vector<int>(letters_.begin(), letters_.begin() + len));
}

Word Word::suffix(int from) const {
  return Word(alphabet_, std::vector<int>(letters_.begin() + from, letters_.end()));
}

std::strong_ordering compare(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet())
    throw std::invalid_argument("compare: mixed alphabets");
  const auto& a = u.letters();
  const auto& b = v.letters();
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    return letter_less(u.alphabet(), a[i], b[i]) ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
  }
  if (a.size() == b.size()) return std::strong_ordering::equal;
  return a.size() < b.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool operator<(const Word& a, const Word& b) {
  if (a.alphabet_ != b.alphabet_) return a.alphabet_ < b.alphabet_;
  return compare(a, b) == std::strong_ordering::less;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_lyndon: empty word");
  for (int i = 1; i < w.length(); ++i) {
    if (compare(w, w.suffix(i)) != std::strong_ordering::less) return false;
  }
  return true;
}

namespace {

void gen_words(Alphabet a, int remaining, std::vector<int>& acc, std::vector<Word>& out) {
  if (remaining == 0) {
    out.emplace_back(a, acc);
    return;
  }
  if (a == Alphabet::X) {
    for (int l = 0; l <= 1; ++l) {
      acc.push_back(l);
      gen_words(a, remaining - 1, acc, out);
      acc.pop_back();
    }
  } else {
    for (int l = 1; l <= remaining; ++l) {
      acc.push_back(l);
      gen_words(a, remaining - l, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> words_of_weight(Alphabet a, int n) {
  if (n < 0) throw std::invalid_argument("words_of_weight: negative weight");
  std::vector<Word> out;
  std::vector<int> acc;
  gen_words(a, n, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> lyndon_words_of_weight(Alphabet a, int n) {
  std::vector<Word> out;
  for (const Word& w : words_of_weight(a, n)) {
    if (!w.empty() && is_lyndon(w)) out.push_back(w);
  }
  return out;
}

std::vector<Word> lyndon_words(Alphabet a, int max_weight) {
  if (max_weight < 1) throw std::invalid_argument("lyndon_words: max_weight must be >= 1");
  std::vector<Word> out;
  for (int n = 1; n <= max_weight; ++n) {
    auto block = lyndon_words_of_weight(a, n);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& l) {
  if (l.length() < 2) throw std::invalid_argument("standard_factorization: need length >= 2");
  if (!is_lyndon(l)) throw std::invalid_argument("standard_factorization: input not Lyndon");
  int best = 1;
  for (int i = 2; i < l.length(); ++i) {
    if (compare(l.suffix(i), l.suffix(best)) == std::strong_ordering::less) best = i;
  }
  return {l.prefix(best), l.suffix(best)};
}

std::vector<std::pair<Word, int>> lyndon_factorization(const Word& w) {
  // Duval's algorithm; factors come out non-increasing and are grouped here.
  std::vector<Word> factors;
  const auto& s = w.letters();
  int n = w.length();
  int i = 0;
  while (i < n) {
    int j = i + 1, k = i;
    while (j < n && !letter_less(w.alphabet(), s[j], s[k])) {
      if (letter_less(w.alphabet(), s[k], s[j]))
        k = i;  // strictly larger: restart period scan
      else
        ++k;
      ++j;
    }
    while (i <= k) {
      factors.emplace_back(w.alphabet(), std::vector<int>(s.begin() + i, s.begin() + i + (j - k)));
      i += j - k;
    }
  }
  std::vector<std::pair<Word, int>> grouped;
  for (auto& f : factors) {
    if (!grouped.empty() && grouped.back().first == f)
      ++grouped.back().second;
    else
      grouped.emplace_back(f, 1);
  }
  return grouped;
}

std::optional<Word> project_word(const Word& w) {
  if (w.alphabet() == Alphabet::Y) {
    std::vector<int> xs;
    for (int s : w.letters()) {
      xs.insert(xs.end(), s - 1, 0);
      xs.push_back(1);
    }
    return Word(Alphabet::X, std::move(xs));
  }
  if (w.empty()) return Word(Alphabet::Y);
  if (w.letters().back() == 0) return std::nullopt;  // X*x0 is annihilated
  std::vector<int> ys;
  int run = 0;
  for (int l : w.letters()) {
    if (l == 0) {
      ++run;
    } else {
      ys.push_back(run + 1);
      run = 0;
    }
  }
  return Word(Alphabet::Y, std::move(ys));
}

}  // namespace mzv
