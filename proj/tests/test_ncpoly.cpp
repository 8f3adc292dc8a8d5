#include "doctest.h"
#include "mzv/ncpoly.hpp"

#include <random>
#include <vector>

using namespace mzv;

namespace {

Word xw(const char* t) { return Word::parse(Alphabet::X, t); }
Word yw(const char* t) { return Word::parse(Alphabet::Y, t); }
NcPoly xp(const char* t) { return NcPoly::from_word(xw(t)); }
NcPoly yp(const char* t) { return NcPoly::from_word(yw(t)); }

// Brute-force shuffle oracle: enumerate all order-preserving interleavings by
// choosing which result slots carry letters of u.
NcPoly shuffle_oracle(const Word& u, const Word& v) {
  int n = u.length(), m = v.length();
  NcPoly out(u.alphabet());
  std::vector<int> pick(n + m, 0);
  std::fill(pick.begin(), pick.begin() + n, 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<int> ls;
    int i = 0, j = 0;
    for (int slot : pick) ls.push_back(slot ? u.letters()[i++] : v.letters()[j++]);
    out.add_term(Word(u.alphabet(), ls), Rational(1));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

void tuples_rec(int remaining, int slots, const std::vector<Word>& acc,
                std::vector<std::vector<Word>>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(acc);
    return;
  }
  for (int j = 1; j + (slots - 1) <= remaining; ++j) {
    for (const Word& u : words_of_weight(Alphabet::Y, j)) {
      auto acc2 = acc;
      acc2.push_back(u);
      tuples_rec(remaining - j, slots - 1, acc2, out);
    }
  }
}

// Direct alternating-sum formula for the primitive projector (the independent
// oracle for the triangular-solve implementation):
//   pi1(w) = w + sum_{k>=2} (-1)^{k-1}/k sum <w | u1 st ... st uk> u1...uk.
NcPoly pi1_oracle(const Word& w) {
  NcPoly out = NcPoly::from_word(w);
  int n = w.weight();
  for (int k = 2; k <= n; ++k) {
    std::vector<std::vector<Word>> tuples;
    tuples_rec(n, k, {}, tuples);
    Rational sign((k - 1) % 2 == 0 ? 1 : -1);
    for (auto& tup : tuples) {
      NcPoly prod = NcPoly::from_word(tup[0]);
      Word cat = tup[0];
      for (size_t i = 1; i < tup.size(); ++i) {
        prod = stuffle(prod, NcPoly::from_word(tup[i]));
        cat = cat.concat(tup[i]);
      }
      Rational c = pairing(prod, NcPoly::from_word(w));
      if (!c.is_zero()) out.add_term(cat, sign * c / Rational(k));
    }
  }
  return out;
}

TensorPoly apply_phi_slotwise(const TensorPoly& t) {
  TensorPoly out(Alphabet::Y);
  for (auto& [uv, c] : t.terms()) {
    NcPoly l = phi(NcPoly::from_word(uv.first));
    NcPoly r = phi(NcPoly::from_word(uv.second));
    TensorPoly o = TensorPoly::outer(l, r);
    o *= c;
    out += o;
  }
  return out;
}

std::vector<Word> all_words_up_to(Alphabet a, int maxw) {
  std::vector<Word> out;
  for (int n = 1; n <= maxw; ++n) {
    auto blk = words_of_weight(a, n);
    out.insert(out.end(), blk.begin(), blk.end());
  }
  return out;
}

}  // namespace

TEST_CASE("shuffle: unit, worked values, brute-force oracle") {
  CHECK(shuffle(xp("1"), xp("01")) == shuffle_oracle(xw("1"), xw("01")));
  NcPoly expect(Alphabet::X);
  expect.add_term(xw("101"), 1);
  expect.add_term(xw("011"), 2);
  CHECK(shuffle(xp("1"), xp("01")) == expect);

  CHECK(shuffle(yp("2,1"), NcPoly::unit(Alphabet::Y)) == yp("2,1"));
  CHECK(shuffle(NcPoly::unit(Alphabet::X), xp("01")) == xp("01"));

  NcPoly e2(Alphabet::X);
  e2.add_term(xw("01"), 1);
  e2.add_term(xw("10"), 1);
  CHECK(shuffle(xp("0"), xp("1")) == e2);

  for (Alphabet a : {Alphabet::X, Alphabet::Y}) {
    for (const Word& u : all_words_up_to(a, 3))
      for (const Word& v : all_words_up_to(a, 3))
        CHECK(shuffle(NcPoly::from_word(u), NcPoly::from_word(v)) == shuffle_oracle(u, v));
  }
}

TEST_CASE("stuffle: worked values and unit") {
  NcPoly expect(Alphabet::Y);
  expect.add_term(yw("1,2"), 1);
  expect.add_term(yw("2,1"), 1);
  expect.add_term(yw("3"), 1);
  CHECK(stuffle(yp("1"), yp("2")) == expect);

  NcPoly e2(Alphabet::Y);
  e2.add_term(yw("2,2"), 2);
  e2.add_term(yw("4"), 1);
  CHECK(stuffle(yp("2"), yp("2")) == e2);

  CHECK(stuffle(yp("3,1"), NcPoly::unit(Alphabet::Y)) == yp("3,1"));
  CHECK_THROWS(stuffle(xp("0"), xp("1")));
}

TEST_CASE("shuffle/stuffle commutative and associative") {
  auto words = all_words_up_to(Alphabet::Y, 4);
  for (const Word& u : words)
    for (const Word& v : words) {
      CHECK(stuffle(NcPoly::from_word(u), NcPoly::from_word(v)) ==
            stuffle(NcPoly::from_word(v), NcPoly::from_word(u)));
      CHECK(shuffle(NcPoly::from_word(u), NcPoly::from_word(v)) ==
            shuffle(NcPoly::from_word(v), NcPoly::from_word(u)));
    }
  for (const Word& u : all_words_up_to(Alphabet::Y, 2))
    for (const Word& v : all_words_up_to(Alphabet::Y, 2))
      for (const Word& w : all_words_up_to(Alphabet::Y, 2)) {
        NcPoly a = NcPoly::from_word(u), b = NcPoly::from_word(v), c = NcPoly::from_word(w);
        CHECK(stuffle(stuffle(a, b), c) == stuffle(a, stuffle(b, c)));
        CHECK(shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c)));
      }
  std::mt19937 rng(20240901);
  auto pool = all_words_up_to(Alphabet::Y, 6);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 100; ++i) {
    NcPoly a = NcPoly::from_word(pool[pick(rng)]);
    NcPoly b = NcPoly::from_word(pool[pick(rng)]);
    NcPoly c = NcPoly::from_word(pool[pick(rng)]);
    CHECK(stuffle(stuffle(a, b), c) == stuffle(a, stuffle(b, c)));
    CHECK(shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c)));
  }
}

TEST_CASE("pairing") {
  NcPoly p = xp("01") - xp("10");
  CHECK(pairing(p, xp("01")) == Rational(1));
  CHECK(pairing(xp("01"), xp("10")) == Rational(0));
  CHECK(pairing(p, NcPoly::zero(Alphabet::X)) == Rational(0));
  CHECK_THROWS(pairing(xp("01"), yp("2")));
}

TEST_CASE("coproducts: letters and small words") {
  TensorPoly d = coproduct(yw("2"), CoproductKind::Stuffle);
  TensorPoly expect(Alphabet::Y);
  expect.add_term(yw("2"), yw(""), 1);
  expect.add_term(yw(""), yw("2"), 1);
  expect.add_term(yw("1"), yw("1"), 1);
  CHECK(d == expect);

  CHECK(coproduct(yw("1"), CoproductKind::Mu).is_zero());
  CHECK_THROWS(coproduct(yw("2,1"), CoproductKind::Mu));
  CHECK_THROWS(coproduct(xw("01"), CoproductKind::Stuffle));

  TensorPoly dsh = coproduct(xw("01"), CoproductKind::Shuffle);
  TensorPoly esh(Alphabet::X);
  esh.add_term(xw("01"), xw(""), 1);
  esh.add_term(xw("0"), xw("1"), 1);
  esh.add_term(xw("1"), xw("0"), 1);
  esh.add_term(xw(""), xw("01"), 1);
  CHECK(dsh == esh);

  TensorPoly dc = coproduct(xw("01"), CoproductKind::Deconcat);
  CHECK(dc.coeff(xw(""), xw("01")) == Rational(1));
  CHECK(dc.coeff(xw("0"), xw("1")) == Rational(1));
  CHECK(dc.coeff(xw("01"), xw("")) == Rational(1));
  CHECK(dc.terms().size() == 3);
}

TEST_CASE("duality contracts of the coproducts, weight <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (const Word& w : words_of_weight(Alphabet::Y, n)) {
      TensorPoly dst = coproduct(w, CoproductKind::Stuffle);
      TensorPoly dsh = coproduct(w, CoproductKind::Shuffle);
      TensorPoly ddc = coproduct(w, CoproductKind::Deconcat);
      NcPoly pw = NcPoly::from_word(w);
      for (int j = 0; j <= n; ++j) {
        for (const Word& u : words_of_weight(Alphabet::Y, j)) {
          for (const Word& v : words_of_weight(Alphabet::Y, n - j)) {
            NcPoly pu = NcPoly::from_word(u), pv = NcPoly::from_word(v);
            CHECK(dst.coeff(u, v) == pairing(stuffle(pu, pv), pw));
            CHECK(dsh.coeff(u, v) == pairing(shuffle(pu, pv), pw));
            CHECK(ddc.coeff(u, v) == pairing(concat(pu, pv), pw));
          }
        }
      }
    }
  }
}

TEST_CASE("pi1: worked examples") {
  CHECK(pi1(yw("1")) == yp("1"));

  NcPoly e2 = yp("2");
  e2.add_term(yw("1,1"), Rational(-1, 2));
  CHECK(pi1(yw("2")) == e2);

  NcPoly e3 = yp("3");
  e3.add_term(yw("1,2"), Rational(-1, 2));
  e3.add_term(yw("2,1"), Rational(-1, 2));
  e3.add_term(yw("1,1,1"), Rational(1, 3));
  CHECK(pi1(yw("3")) == e3);
}

TEST_CASE("pi1 equals the direct alternating-sum oracle, weight <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const Word& w : words_of_weight(Alphabet::Y, n)) {
      CAPTURE(w.str());
      CHECK(pi1(w) == pi1_oracle(w));
    }
}

TEST_CASE("pi1 is stuffle-primitive, weight <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const Word& w : words_of_weight(Alphabet::Y, n)) {
      NcPoly p = pi1(w);
      TensorPoly d = coproduct(p, CoproductKind::Stuffle);
      d -= TensorPoly::outer(p, NcPoly::unit(Alphabet::Y));
      d -= TensorPoly::outer(NcPoly::unit(Alphabet::Y), p);
      CAPTURE(w.str());
      CHECK(d.is_zero());
    }
}

TEST_CASE("exponential reconstruction from pi1, weight <= 4") {
  // w = sum_k 1/k! sum <w | u1 st ... st uk> pi1(u1)...pi1(uk)
  for (int n = 1; n <= 4; ++n)
    for (const Word& w : words_of_weight(Alphabet::Y, n)) {
      NcPoly acc(Alphabet::Y);
      for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<Word>> tuples;
        tuples_rec(n, k, {}, tuples);
        for (auto& tup : tuples) {
          NcPoly st = NcPoly::from_word(tup[0]);
          for (size_t i = 1; i < tup.size(); ++i) st = stuffle(st, NcPoly::from_word(tup[i]));
          Rational c = pairing(st, NcPoly::from_word(w));
          if (c.is_zero()) continue;
          NcPoly prod = pi1(tup[0]);
          for (size_t i = 1; i < tup.size(); ++i) prod = concat(prod, pi1(tup[i]));
          acc += prod * (c / factorial(k));
        }
      }
      CAPTURE(w.str());
      CHECK(acc == NcPoly::from_word(w));
    }
}

TEST_CASE("letter specialization of the reconstruction, s <= 6") {
  // y_s = sum_i 1/i! sum_{s1+...+si=s} pi1(y_{s1})...pi1(y_{si})
  for (int s = 1; s <= 6; ++s) {
    NcPoly acc(Alphabet::Y);
    for (const Word& comp : words_of_weight(Alphabet::Y, s)) {
      NcPoly prod = NcPoly::unit(Alphabet::Y);
      for (int l : comp.letters()) prod = concat(prod, pi1(Word(Alphabet::Y, {l})));
      acc += prod * (Rational(1) / factorial(comp.length()));
    }
    CHECK(acc == NcPoly::from_word(Word(Alphabet::Y, {s})));
  }
}

TEST_CASE("phi: defining values and products") {
  NcPoly e2 = yp("2");
  e2.add_term(yw("1,1"), Rational(-1, 2));
  CHECK(phi(yp("2")) == e2);
  CHECK(phi(yp("1,1")) == yp("1,1"));

  NcPoly e12 = yp("1,2");
  e12.add_term(yw("1,1,1"), Rational(-1, 2));
  CHECK(phi(yp("1,2")) == e12);
}

TEST_CASE("phi transports the shuffle coproduct onto the stuffle coproduct, weight <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const Word& w : words_of_weight(Alphabet::Y, n)) {
      TensorPoly lhs = apply_phi_slotwise(coproduct(w, CoproductKind::Shuffle));
      TensorPoly rhs = coproduct(phi(NcPoly::from_word(w)), CoproductKind::Stuffle);
      CAPTURE(w.str());
      CHECK(lhs == rhs);
    }
}

TEST_CASE("phi is triangular with unit diagonal on each weight block") {
  for (int n = 1; n <= 5; ++n)
    for (const Word& w : words_of_weight(Alphabet::Y, n)) {
      NcPoly img = phi(NcPoly::from_word(w));
      CHECK(img.coeff(w) == Rational(1));
      for (auto& [u, c] : img.terms()) {
        CHECK(u.weight() == n);
        if (u != w) CHECK(compare(u, w) == std::strong_ordering::greater);
      }
    }
}

TEST_CASE("project_poly") {
  CHECK(project_poly(xp("01") - xp("10"), Alphabet::Y) == yp("2"));
  CHECK(project_poly(yp("2,1"), Alphabet::X) == xp("011"));
  CHECK(project_poly(xp("0"), Alphabet::Y).is_zero());
  CHECK_THROWS(project_poly(xp("0"), Alphabet::X));
  // section property on Q + Q<X>x1
  for (int n = 1; n <= 6; ++n)
    for (const Word& w : words_of_weight(Alphabet::X, n)) {
      if (!w.empty() && w.letters().back() == 0) continue;
      NcPoly p = NcPoly::from_word(w);
      CHECK(project_poly(project_poly(p, Alphabet::Y), Alphabet::X) == p);
    }
}

TEST_CASE("homogeneity bookkeeping") {
  NcPoly p = yp("2") + yp("1,1");
  CHECK(p.homogeneous_weight() == 2);
  p += yp("3");
  CHECK_FALSE(p.homogeneous_weight().has_value());
  CHECK(p.homogeneous_part(2) == yp("2") + yp("1,1"));
  CHECK(p.weights() == std::set<int>{2, 3});
}
