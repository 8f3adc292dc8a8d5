#include "doctest.h"
#include "mzv/numeric_oracle.hpp"

#include <cmath>

using namespace mzv;

namespace {

Word yw(const char* t) { return Word::parse(Alphabet::Y, t); }

ZetaVar zv(Side s, const char* w) { return ZetaVar(s, Word::parse(side_alphabet(s), w)); }

Relation make_relation(std::initializer_list<std::pair<Rational, ZetaMonomial>> terms) {
  Relation r;
  for (auto& [c, m] : terms) r.poly.add_term(m, c);
  r.weight = r.poly.homogeneous_weight().value_or(0);
  r.provenance = "test";
  return r;
}

constexpr double kZeta2 = 1.6449340668482264;
constexpr double kZeta3 = 1.2020569031595943;
constexpr double kZeta4 = 1.0823232337111382;

}  // namespace

TEST_CASE("zeta_numeric: single zetas against reference values") {
  auto e2 = zeta_numeric(Composition({2}), 100000);
  CHECK(std::abs(e2.value - kZeta2) <= e2.tail_bound);
  CHECK(e2.tail_bound < 2e-5);

  auto e3 = zeta_numeric(Composition({3}), 10000);
  CHECK(std::abs(e3.value - kZeta3) <= e3.tail_bound);
}

TEST_CASE("zeta_numeric: nested values against classical identities") {
  // zeta(2,1) = zeta(3)
  auto e21 = zeta_numeric(Composition({2, 1}), 100000);
  CHECK(std::abs(e21.value - kZeta3) < 1e-3);
  CHECK(std::abs(e21.value - kZeta3) <= e21.tail_bound);
  // zeta(3,1) = zeta(4)/4
  auto e31 = zeta_numeric(Composition({3, 1}), 100000);
  CHECK(std::abs(e31.value - kZeta4 / 4) < 1e-3);
}

TEST_CASE("zeta_numeric: monotone refinement within the previous tail bound") {
  for (auto parts : {std::vector<int>{2, 1}, std::vector<int>{3, 1, 1}, std::vector<int>{2, 2}}) {
    Composition c(parts);
    auto coarse = zeta_numeric(c, 2000);
    auto fine = zeta_numeric(c, 40000);
    CHECK(std::abs(fine.value - coarse.value) <= coarse.tail_bound);
    CHECK(fine.tail_bound < coarse.tail_bound);
  }
}

TEST_CASE("zeta_numeric: rejects divergent and undersized input") {
  CHECK_THROWS(Composition({1, 2}));
  CHECK_THROWS(zeta_numeric(Composition({2, 1, 1}), 2));
  CHECK_THROWS(Composition(std::vector<int>{}));
  CHECK(Composition::from_word(Word::parse(Alphabet::X, "011")).parts == std::vector<int>{2, 1});
  CHECK_THROWS(Composition::from_word(Word::parse(Alphabet::X, "110")));
}

TEST_CASE("check_relation_numeric: the weight-3 rule, a tautology, and an injected error") {
  Bases bases;
  // zeta(Sigma[2,1]) - 3/2 zeta(Sigma[3]) = 0
  Relation good = make_relation(
      {{Rational(1), ZetaMonomial(zv(Side::Sigma, "2,1"))},
       {Rational(-3, 2), ZetaMonomial(zv(Side::Sigma, "3"))}});
  auto r = check_relation_numeric(good, bases, 100000, 1e-3);
  CHECK(r.pass);

  Relation trivial;
  trivial.weight = 0;
  CHECK(check_relation_numeric(trivial, bases, 1000, 1e-3).pass);

  Relation bad = make_relation(
      {{Rational(1), ZetaMonomial(zv(Side::Sigma, "2,1"))},
       {Rational(-3, 2) - Rational(1, 10), ZetaMonomial(zv(Side::Sigma, "3"))}});
  CHECK_FALSE(check_relation_numeric(bad, bases, 100000, 1e-3).pass);
}

TEST_CASE("check_relation_numeric: demands a cutoff adequate for the tolerance") {
  Bases bases;
  // depth-4 trailing-ones composition: the rigorous tail bound needs a
  // cutoff comfortably above the depth
  Relation deep = make_relation({{Rational(1), ZetaMonomial(zv(Side::Sigma, "2,1,1,1"))}});
  CHECK_THROWS_WITH_AS(check_relation_numeric(deep, bases, 5, 1e-3),
                       doctest::Contains("cutoff"), std::invalid_argument);
}

TEST_CASE("generated relations of weights 3-4 pass the numeric check") {
  Bases bases;
  ZetaAlgebra za(&bases);
  for (int n = 3; n <= 4; ++n) {
    for (auto gen : {ZetaAlgebra::Generator::Bridge, ZetaAlgebra::Generator::DoubleExpression}) {
      for (const Relation& rel : za.relations(gen, n, n)) {
        if (rel.kind == RelationKind::Transport) continue;
        auto r = check_relation_numeric(rel, bases, 20000, 1e-3);
        CAPTURE(rel.provenance);
        CHECK(r.pass);
      }
    }
  }
}
