#include "mzv/ncpoly.hpp"

#include <mutex>
#include <stdexcept>

namespace mzv {

NcPoly NcPoly::unit(Alphabet a) { return from_word(Word(a)); }

NcPoly NcPoly::from_word(const Word& w, const Rational& c) {
  NcPoly p(w.alphabet());
  p.add_term(w, c);
  return p;
}

Rational NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Rational& c) {
  if (w.alphabet() != alphabet_) throw std::invalid_argument("NcPoly: mixed alphabets");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::set<int> NcPoly::weights() const {
  std::set<int> ws;
  for (auto& [w, c] : terms_) ws.insert(w.weight());
  return ws;
}

std::optional<int> NcPoly::homogeneous_weight() const {
  auto ws = weights();
  if (ws.size() != 1) return std::nullopt;
  return *ws.begin();
}

NcPoly NcPoly::homogeneous_part(int n) const {
  NcPoly out(alphabet_);
  for (auto& [w, c] : terms_)
    if (w.weight() == n) out.add_term(w, c);
  return out;
}

int NcPoly::min_weight() const {
  if (terms_.empty()) throw std::logic_error("NcPoly::min_weight on zero polynomial");
  int m = terms_.begin()->first.weight();
  for (auto& [w, c] : terms_) m = std::min(m, w.weight());
  return m;
}

int NcPoly::max_weight() const {
  if (terms_.empty()) throw std::logic_error("NcPoly::max_weight on zero polynomial");
  int m = 0;
  for (auto& [w, c] : terms_) m = std::max(m, w.weight());
  return m;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  if (o.alphabet_ != alphabet_) throw std::invalid_argument("NcPoly: mixed alphabets");
  for (auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  if (o.alphabet_ != alphabet_) throw std::invalid_argument("NcPoly: mixed alphabets");
  for (auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

std::string NcPoly::pretty() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [w, c] : terms_) {
    std::string cs = c.pretty();
    if (out.empty()) {
      if (cs == "1") {
      } else if (cs == "-1") {
        out += "-";
      } else {
        out += cs + " ";
      }
    } else {
      if (c.sign() > 0) {
        out += " + ";
        if (cs != "1") out += cs + " ";
      } else {
        out += " - ";
        std::string mag = (-c).pretty();
        if (mag != "1") out += mag + " ";
      }
    }
    out += "[" + w.str() + "]";
  }
  return out;
}

NcPoly concat(const NcPoly& a, const NcPoly& b) {
  if (a.alphabet() != b.alphabet()) throw std::invalid_argument("concat: mixed alphabets");
  NcPoly out(a.alphabet());
  for (auto& [u, cu] : a.terms())
    for (auto& [v, cv] : b.terms()) out.add_term(u.concat(v), cu * cv);
  return out;
}

NcPoly bracket(const NcPoly& a, const NcPoly& b) { return concat(a, b) - concat(b, a); }

NcPoly concat_pow(const NcPoly& a, int k) {
  NcPoly out = NcPoly::unit(a.alphabet());
  for (int i = 0; i < k; ++i) out = concat(out, a);
  return out;
}

namespace {

NcPoly prepend_letter(Alphabet a, int letter, const NcPoly& p) {
  NcPoly out(a);
  for (auto& [w, c] : p.terms()) {
    std::vector<int> ls;
    ls.reserve(w.length() + 1);
    ls.push_back(letter);
    ls.insert(ls.end(), w.letters().begin(), w.letters().end());
    out.add_term(Word(a, std::move(ls)), c);
  }
  return out;
}

enum class MulKind { Shuffle, Stuffle };

NcPoly mul_words(MulKind kind, const Word& u, const Word& v);

NcPoly mul_words_uncached(MulKind kind, const Word& u, const Word& v) {
  Alphabet a = u.alphabet();
  if (u.empty()) return NcPoly::from_word(v);
  if (v.empty()) return NcPoly::from_word(u);
  int s = u.letters().front();
  int t = v.letters().front();
  NcPoly out = prepend_letter(a, s, mul_words(kind, u.suffix(1), v));
  out += prepend_letter(a, t, mul_words(kind, u, v.suffix(1)));
  if (kind == MulKind::Stuffle)
    out += prepend_letter(a, s + t, mul_words(kind, u.suffix(1), v.suffix(1)));
  return out;
}

NcPoly mul_words(MulKind kind, const Word& u, const Word& v) {
  // commutative, so normalize the pair before hitting the cache
  const Word* pu = &u;
  const Word* pv = &v;
  if (*pv < *pu) std::swap(pu, pv);
  using Key = std::pair<Word, Word>;
  static std::map<Key, NcPoly> cache[2];
  static std::mutex mu;
  Key key{*pu, *pv};
  auto& c = cache[kind == MulKind::Stuffle ? 1 : 0];
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = c.find(key);
    if (it != c.end()) return it->second;
  }
  NcPoly out = mul_words_uncached(kind, *pu, *pv);
  {
    std::lock_guard<std::mutex> lock(mu);
    c.emplace(std::move(key), out);
  }
  return out;
}

NcPoly mul_polys(MulKind kind, const NcPoly& p, const NcPoly& q) {
  if (p.alphabet() != q.alphabet())
    throw std::invalid_argument("shuffle/stuffle: mixed alphabets");
  if (kind == MulKind::Stuffle && p.alphabet() != Alphabet::Y)
    throw std::invalid_argument("stuffle: defined over Y only");
  NcPoly out(p.alphabet());
  for (auto& [u, cu] : p.terms())
    for (auto& [v, cv] : q.terms()) {
      NcPoly w = mul_words(kind, u, v);
      w *= cu * cv;
      out += w;
    }
  return out;
}

}  // namespace

NcPoly shuffle(const NcPoly& p, const NcPoly& q) { return mul_polys(MulKind::Shuffle, p, q); }

NcPoly stuffle(const NcPoly& p, const NcPoly& q) { return mul_polys(MulKind::Stuffle, p, q); }

NcPoly shuffle_pow(const NcPoly& p, int k) {
  NcPoly out = NcPoly::unit(p.alphabet());
  for (int i = 0; i < k; ++i) out = shuffle(out, p);
  return out;
}

NcPoly stuffle_pow(const NcPoly& p, int k) {
  NcPoly out = NcPoly::unit(p.alphabet());
  for (int i = 0; i < k; ++i) out = stuffle(out, p);
  return out;
}

Rational pairing(const NcPoly& p, const NcPoly& q) {
  if (p.alphabet() != q.alphabet()) throw std::invalid_argument("pairing: mixed alphabets");
  const auto& small = p.size() <= q.size() ? p : q;
  const auto& big = p.size() <= q.size() ? q : p;
  Rational out(0);
  for (auto& [w, c] : small.terms()) out += c * big.coeff(w);
  return out;
}

TensorPoly TensorPoly::unit(Alphabet a) {
  TensorPoly t(a);
  t.add_term(Word(a), Word(a), Rational(1));
  return t;
}

TensorPoly TensorPoly::outer(const NcPoly& a, const NcPoly& b) {
  if (a.alphabet() != b.alphabet()) throw std::invalid_argument("outer: mixed alphabets");
  TensorPoly t(a.alphabet());
  for (auto& [u, cu] : a.terms())
    for (auto& [v, cv] : b.terms()) t.add_term(u, v, cu * cv);
  return t;
}

Rational TensorPoly::coeff(const Word& u, const Word& v) const {
  auto it = terms_.find({u, v});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorPoly::add_term(const Word& u, const Word& v, const Rational& c) {
  if (u.alphabet() != alphabet_ || v.alphabet() != alphabet_)
    throw std::invalid_argument("TensorPoly: mixed alphabets");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(std::make_pair(u, v), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
  for (auto& [uv, c] : o.terms_) add_term(uv.first, uv.second, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
  for (auto& [uv, c] : o.terms_) add_term(uv.first, uv.second, -c);
  return *this;
}

TensorPoly& TensorPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [uv, v] : terms_) v *= c;
  return *this;
}

TensorPoly tensor_concat(const TensorPoly& A, const TensorPoly& B) {
  TensorPoly out(A.alphabet());
  for (auto& [uv, c] : A.terms())
    for (auto& [xy, d] : B.terms())
      out.add_term(uv.first.concat(xy.first), uv.second.concat(xy.second), c * d);
  return out;
}

TensorPoly tensor_mixed_product(const TensorPoly& A, const TensorPoly& B, ProductLaw left_law,
                                int trunc_weight) {
  TensorPoly out(A.alphabet());
  for (auto& [uv, c] : A.terms())
    for (auto& [xy, d] : B.terms()) {
      int wl = uv.first.weight() + xy.first.weight();
      int wr = uv.second.weight() + xy.second.weight();
      if (wl > trunc_weight || wr > trunc_weight) continue;
      Word right = uv.second.concat(xy.second);
      Rational cd = c * d;
      switch (left_law) {
        case ProductLaw::Concat:
          out.add_term(uv.first.concat(xy.first), right, cd);
          break;
        case ProductLaw::Shuffle:
        case ProductLaw::Stuffle: {
          NcPoly lhs = NcPoly::from_word(uv.first);
          NcPoly rhs = NcPoly::from_word(xy.first);
          NcPoly prod = left_law == ProductLaw::Shuffle ? shuffle(lhs, rhs) : stuffle(lhs, rhs);
          for (auto& [w, cw] : prod.terms())
            if (w.weight() <= trunc_weight) out.add_term(w, right, cd * cw);
          break;
        }
      }
    }
  return out;
}

TensorPoly tensor_exp(const TensorPoly& Z, ProductLaw left_law, int trunc_weight) {
  for (auto& [uv, c] : Z.terms())
    if (uv.first.weight() == 0 && uv.second.weight() == 0)
      throw std::invalid_argument("tensor_exp: argument has a constant term");
  TensorPoly acc = TensorPoly::unit(Z.alphabet());
  TensorPoly pow = TensorPoly::unit(Z.alphabet());
  for (int k = 1;; ++k) {
    pow = tensor_mixed_product(pow, Z, left_law, trunc_weight);
    pow *= Rational(1, k);
    if (pow.is_zero()) break;
    acc += pow;
  }
  return acc;
}

Rational pairing(const TensorPoly& T, const NcPoly& left, const NcPoly& right) {
  Rational out(0);
  for (auto& [uv, c] : T.terms()) out += c * left.coeff(uv.first) * right.coeff(uv.second);
  return out;
}

TensorPoly coproduct(const Word& w, CoproductKind kind) {
  Alphabet a = w.alphabet();
  switch (kind) {
    case CoproductKind::Mu: {
      if (a != Alphabet::Y) throw std::invalid_argument("coproduct: mu needs alphabet Y");
      if (w.length() != 1)
        throw std::invalid_argument("coproduct: mu applies to single letters only");
      int s = w.letters()[0];
      TensorPoly out(a);
      for (int i = 1; i < s; ++i) out.add_term(Word(a, {i}), Word(a, {s - i}), Rational(1));
      return out;
    }
    case CoproductKind::Shuffle:
    case CoproductKind::Stuffle: {
      if (kind == CoproductKind::Stuffle && a != Alphabet::Y)
        throw std::invalid_argument("coproduct: stuffle needs alphabet Y");
      TensorPoly out = TensorPoly::unit(a);
      for (int l : w.letters()) {
        Word letter(a, {l});
        TensorPoly factor(a);
        factor.add_term(letter, Word(a), Rational(1));
        factor.add_term(Word(a), letter, Rational(1));
        if (kind == CoproductKind::Stuffle) factor += coproduct(letter, CoproductKind::Mu);
        out = tensor_concat(out, factor);
      }
      return out;
    }
    case CoproductKind::Deconcat: {
      TensorPoly out(a);
      for (int i = 0; i <= w.length(); ++i) out.add_term(w.prefix(i), w.suffix(i), Rational(1));
      return out;
    }
  }
  throw std::logic_error("coproduct: unreachable");
}

TensorPoly coproduct(const NcPoly& p, CoproductKind kind) {
  TensorPoly out(p.alphabet());
  for (auto& [w, c] : p.terms()) {
    TensorPoly t = coproduct(w, kind);
    t *= c;
    out += t;
  }
  return out;
}

namespace {

// Iterated reduced stuffle coproduct: tuples of nonempty words (u_1,...,u_k)
// carrying <w | u_1 st ... st u_k>, built by splitting the last slot.
using Tuples = std::map<std::vector<Word>, Rational>;

Tuples split_last(const Tuples& tier) {
  Tuples next;
  for (auto& [tup, c] : tier) {
    const Word& last = tup.back();
    if (last.length() < 1) continue;
    TensorPoly d = coproduct(last, CoproductKind::Stuffle);
    for (auto& [uv, dc] : d.terms()) {
      if (uv.first.empty() || uv.second.empty()) continue;
      std::vector<Word> t2 = tup;
      t2.back() = uv.first;
      t2.push_back(uv.second);
      auto [it, fresh] = next.emplace(std::move(t2), c * dc);
      if (!fresh) {
        it->second += c * dc;
        if (it->second.is_zero()) next.erase(it);
      }
    }
  }
  return next;
}

NcPoly pi1_uncached(const Word& w) {
  NcPoly result = NcPoly::from_word(w);
  Tuples tier{{{w}, Rational(1)}};
  for (int k = 2; k <= w.weight(); ++k) {
    tier = split_last(tier);
    if (tier.empty()) break;
    Rational scale = Rational(1) / factorial(k);
    for (auto& [tup, c] : tier) {
      NcPoly prod = pi1(tup[0]);
      for (size_t i = 1; i < tup.size(); ++i) prod = concat(prod, pi1(tup[i]));
      prod *= c * scale;
      result -= prod;
    }
  }
  return result;
}

}  // namespace

NcPoly pi1(const Word& w) {
  if (w.alphabet() != Alphabet::Y) throw std::invalid_argument("pi1: alphabet Y only");
  if (w.empty()) return NcPoly::zero(Alphabet::Y);
  static std::map<Word, NcPoly> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }
  NcPoly out = pi1_uncached(w);
  {
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(w, out);
  }
  return out;
}

NcPoly pi1(const NcPoly& p) {
  NcPoly out(Alphabet::Y);
  for (auto& [w, c] : p.terms()) {
    if (w.empty()) continue;
    out += pi1(w) * c;
  }
  return out;
}

const NcPoly& phi_word(const Word& w) {
  if (w.alphabet() != Alphabet::Y) throw std::invalid_argument("phi: alphabet Y only");
  static std::map<Word, NcPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  NcPoly out = NcPoly::unit(Alphabet::Y);
  for (int l : w.letters()) out = concat(out, pi1(Word(Alphabet::Y, {l})));
  return cache.emplace(w, std::move(out)).first->second;
}

NcPoly phi(const NcPoly& p) {
  NcPoly out(Alphabet::Y);
  for (auto& [w, c] : p.terms()) out += phi_word(w) * c;
  return out;
}

NcPoly project_poly(const NcPoly& p, Alphabet target) {
  Alphabet source = target == Alphabet::Y ? Alphabet::X : Alphabet::Y;
  if (p.alphabet() != source)
    throw std::invalid_argument("project_poly: alphabet does not match direction");
  NcPoly out(target);
  for (auto& [w, c] : p.terms()) {
    auto img = project_word(w);
    if (img.has_value()) out.add_term(*img, c);
  }
  return out;
}

}  // namespace mzv
