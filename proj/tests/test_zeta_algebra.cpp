#include "doctest.h"
#include "mzv/zeta_algebra.hpp"

#include <functional>
#include <random>

using namespace mzv;

namespace {

Word xw(const char* t) { return Word::parse(Alphabet::X, t); }
Word yw(const char* t) { return Word::parse(Alphabet::Y, t); }

ZetaVar zv(Side s, const char* w) { return ZetaVar(s, Word::parse(side_alphabet(s), w)); }

struct TermSpec {
  Rational coeff;
  std::vector<std::pair<ZetaVar, int>> factors;
};

ZetaPoly zp(std::initializer_list<TermSpec> terms) {
  ZetaPoly p;
  for (auto& t : terms) {
    ZetaMonomial m;
    for (auto& [v, k] : t.factors) m = m.times(v, k);
    p.add_term(m, t.coeff);
  }
  return p;
}

const Relation* find_rel(const std::vector<Relation>& rels, const std::string& prov) {
  for (auto& r : rels)
    if (r.provenance == prov) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("bridge series coefficients") {
  Bases bases;
  ZetaAlgebra za(&bases);

  for (Side side : {Side::Sigma, Side::S}) {
    auto z = [&](int k) {
      std::string t = side == Side::Sigma ? std::to_string(k) : std::string(k - 1, '0') + "1";
      return zv(side, t.c_str());
    };
    CHECK(za.bprime(0, side) == ZetaPoly::constant(1));
    CHECK(za.bprime(1, side).is_zero());
    CHECK(za.bprime(2, side) == zp({{{-1, 2}, {{z(2), 1}}}}));
    CHECK(za.bprime(3, side) == zp({{{1, 3}, {{z(3), 1}}}}));
    // the exponential expansion fixes the multi-factor constants at 1/i!
    CHECK(za.bprime(4, side) == zp({{{-1, 4}, {{z(4), 1}}}, {{1, 8}, {{z(2), 2}}}}));
    CHECK(za.bprime(5, side) ==
          zp({{{1, 5}, {{z(5), 1}}}, {{-1, 6}, {{z(2), 1}, {z(3), 1}}}}));
  }
  CHECK_THROWS(za.bprime(-1, Side::Sigma));
}

TEST_CASE("zeta character: values, divergence, multiplicativity") {
  Bases bases;
  ZetaAlgebra za(&bases);

  CHECK(za.zeta_character(NcPoly::from_word(yw("2")), Side::Sigma) ==
        zp({{1, {{zv(Side::Sigma, "2"), 1}}}}));
  CHECK(za.zeta_character(NcPoly::from_word(yw("1")), Side::Sigma).is_zero());
  CHECK(za.zeta_character(NcPoly::from_word(yw("2,1")), Side::Sigma) ==
        zp({{1, {{zv(Side::Sigma, "2,1"), 1}}}, {{-1, 2}, {{zv(Side::Sigma, "3"), 1}}}}));

  // multiplicative on stuffle products (Sigma side) / shuffle products (S side)
  for (const char* a : {"2", "3", "2,1"})
    for (const char* b : {"2", "2,1"}) {
      NcPoly pa = bases.basis_Sigma(yw(a)), pb = bases.basis_Sigma(yw(b));
      CHECK(za.zeta_character(stuffle(pa, pb), Side::Sigma) ==
            za.zeta_character(pa, Side::Sigma) * za.zeta_character(pb, Side::Sigma));
    }
  for (const char* a : {"01", "001", "011"})
    for (const char* b : {"01", "011"}) {
      NcPoly pa = bases.basis_S(xw(a)), pb = bases.basis_S(xw(b));
      CHECK(za.zeta_character(shuffle(pa, pb), Side::S) ==
            za.zeta_character(pa, Side::S) * za.zeta_character(pb, Side::S));
    }

  NcPoly mixed = NcPoly::from_word(yw("2")) + NcPoly::from_word(yw("3"));
  CHECK_THROWS(za.zeta_character(mixed, Side::Sigma));
  CHECK_THROWS(za.zeta_character(NcPoly::from_word(xw("01")), Side::Sigma));
}

TEST_CASE("bridge relations on the Pi coordinates: worked examples") {
  Bases bases;
  ZetaAlgebra za(&bases);

  // weight 2: one transport zeta(Sigma_{y2}) = zeta(S_{x0x1}), nothing else
  auto r2 = za.relations_bridge_Pi(2);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].kind == RelationKind::Transport);
  CHECK(r2[0].poly ==
        zp({{1, {{zv(Side::Sigma, "2"), 1}}}, {-1, {{zv(Side::S, "01"), 1}}}}));

  auto r3 = za.relations_bridge_Pi(3);
  const Relation* y1y2 = find_rel(r3, "bridge_Pi:1,2");
  REQUIRE(y1y2 != nullptr);
  CHECK(y1y2->kind == RelationKind::Eliminable);
  CHECK(y1y2->poly == zp({{-1, {{zv(Side::S, "011"), 1}}}, {1, {{zv(Side::S, "001"), 1}}}}));

  const Relation* y111 = find_rel(r3, "bridge_Pi:1,1,1");
  REQUIRE(y111 != nullptr);
  CHECK(y111->poly ==
        zp({{{-1, 2}, {{zv(Side::S, "011"), 1}}}, {{1, 2}, {{zv(Side::S, "001"), 1}}}}));

  // weight 4, v = y1 y1 y2: the homogeneous form carries B^(2) zeta(S_{x0x1})
  auto r4 = za.relations_bridge_Pi(4);
  const Relation* y112 = find_rel(r4, "bridge_Pi:1,1,2");
  REQUIRE(y112 != nullptr);
  CHECK(y112->poly == zp({{1, {{zv(Side::S, "0111"), 1}}},
                          {-1, {{zv(Side::S, "0011"), 1}}},
                          {{1, 2}, {{zv(Side::S, "0001"), 1}}},
                          {{-1, 2}, {{zv(Side::S, "01"), 2}}}}));

  // weight 5, v = y2 y3 (non-Lyndon): product transport minus the projected
  // character, equivalent to the printed cross-side identity
  auto r5 = za.relations_bridge_Pi(5);
  const Relation* y23 = find_rel(r5, "bridge_Pi:2,3");
  REQUIRE(y23 != nullptr);
  CHECK(y23->poly == zp({{2, {{zv(Side::S, "00101"), 1}}},
                         {2, {{zv(Side::S, "00011"), 1}}},
                         {-1, {{zv(Side::S, "00001"), 1}}}}));
}

TEST_CASE("bridge relations on the P coordinates: worked examples") {
  Bases bases;
  ZetaAlgebra za(&bases);

  auto r2 = za.relations_bridge_P(2);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].kind == RelationKind::Transport);
  CHECK(r2[0].poly ==
        zp({{1, {{zv(Side::S, "01"), 1}}}, {-1, {{zv(Side::Sigma, "2"), 1}}}}));

  auto r3 = za.relations_bridge_P(3);
  const Relation* u101 = find_rel(r3, "bridge_P:101");
  REQUIRE(u101 != nullptr);
  CHECK(u101->poly ==
        zp({{1, {{zv(Side::Sigma, "2,1"), 1}}}, {{-3, 2}, {{zv(Side::Sigma, "3"), 1}}}}));

  auto r4 = za.relations_bridge_P(4);
  const Relation* u1101 = find_rel(r4, "bridge_P:1101");
  REQUIRE(u1101 != nullptr);
  CHECK(u1101->poly == zp({{2, {{zv(Side::Sigma, "4"), 1}}},
                           {{-1, 2}, {{zv(Side::Sigma, "2"), 2}}},
                           {-1, {{zv(Side::Sigma, "3,1"), 1}}}}));
}

TEST_CASE("cross-expressed product relations: worked examples") {
  Bases bases;
  ZetaAlgebra za(&bases);
  auto r4 = za.relations_double_expression(4);

  const Relation* sig = find_rel(r4, "double_Sigma(ii):1001");
  REQUIRE(sig != nullptr);
  CHECK(sig->poly == zp({{{-1, 2}, {{zv(Side::Sigma, "2"), 2}}},
                         {-1, {{zv(Side::Sigma, "3,1"), 1}}},
                         {2, {{zv(Side::Sigma, "4"), 1}}}}));

  const Relation* ess = find_rel(r4, "double_S(ii):1,3");
  REQUIRE(ess != nullptr);
  CHECK(ess->poly == zp({{{1, 2}, {{zv(Side::S, "01"), 2}}},
                         {-1, {{zv(Side::S, "0011"), 1}}},
                         {-1, {{zv(Side::S, "0001"), 1}}}}));
}

TEST_CASE("every generated relation is weight-homogeneous, no tautologies, no divergent vars") {
  Bases bases;
  ZetaAlgebra za(&bases);
  for (int n = 2; n <= 5; ++n) {
    for (auto gen : {ZetaAlgebra::Generator::Bridge, ZetaAlgebra::Generator::DoubleExpression}) {
      for (const Relation& r : za.relations(gen, n, n)) {
        CAPTURE(r.provenance);
        CHECK_FALSE(r.poly.is_zero());
        CHECK(r.poly.homogeneous_weight() == n);
        for (auto& [m, c] : r.poly.terms()) CHECK_FALSE(m.has_divergent_factor());
      }
    }
  }
}

TEST_CASE("reduce: base case and the weight 3/4 rules") {
  Bases bases;
  ZetaAlgebra za(&bases);

  RewriteSystem empty_rs = reduce({}, 2);
  REQUIRE(empty_rs.irreducibles(Side::Sigma, 2).size() == 1);
  CHECK(empty_rs.irreducibles(Side::Sigma, 2)[0] == zv(Side::Sigma, "2"));
  CHECK(empty_rs.irreducibles(Side::S, 2)[0] == zv(Side::S, "01"));
  CHECK(empty_rs.dimension(Side::Sigma, 2) == 1);

  RewriteSystem rs = za.build_system(ZetaAlgebra::Generator::Bridge, 4);

  CHECK(rs.rules(Side::Sigma, 2).empty());
  CHECK(rs.dimension(Side::Sigma, 2) == 1);
  CHECK(rs.dimension(Side::S, 2) == 1);

  auto& rules3 = rs.rules(Side::Sigma, 3);
  REQUIRE(rules3.size() == 1);
  CHECK(rules3[0].head == zv(Side::Sigma, "2,1"));
  CHECK(rules3[0].rhs == zp({{{3, 2}, {{zv(Side::Sigma, "3"), 1}}}}));
  REQUIRE(rs.irreducibles(Side::Sigma, 3).size() == 1);
  CHECK(rs.irreducibles(Side::Sigma, 3)[0] == zv(Side::Sigma, "3"));
  CHECK(rs.dimension(Side::Sigma, 3) == 1);

  auto& srules3 = rs.rules(Side::S, 3);
  REQUIRE(srules3.size() == 1);
  CHECK(srules3[0].head == zv(Side::S, "011"));
  CHECK(srules3[0].rhs == zp({{1, {{zv(Side::S, "001"), 1}}}}));

  auto& rules4 = rs.rules(Side::Sigma, 4);
  REQUIRE(rules4.size() == 3);
  CHECK(rules4[0].head == zv(Side::Sigma, "4"));
  CHECK(rules4[0].rhs == zp({{{2, 5}, {{zv(Side::Sigma, "2"), 2}}}}));
  CHECK(rules4[1].head == zv(Side::Sigma, "3,1"));
  CHECK(rules4[1].rhs == zp({{{3, 10}, {{zv(Side::Sigma, "2"), 2}}}}));
  CHECK(rules4[2].head == zv(Side::Sigma, "2,1,1"));
  CHECK(rules4[2].rhs == zp({{{2, 3}, {{zv(Side::Sigma, "2"), 2}}}}));
  CHECK(rs.irreducibles(Side::Sigma, 4).empty());
  CHECK(rs.dimension(Side::Sigma, 4) == 1);

  auto& srules4 = rs.rules(Side::S, 4);
  REQUIRE(srules4.size() == 3);
  CHECK(srules4[0].head == zv(Side::S, "0001"));
  CHECK(srules4[0].rhs == zp({{{2, 5}, {{zv(Side::S, "01"), 2}}}}));
  CHECK(srules4[1].head == zv(Side::S, "0011"));
  CHECK(srules4[1].rhs == zp({{{1, 10}, {{zv(Side::S, "01"), 2}}}}));
  CHECK(srules4[2].head == zv(Side::S, "0111"));
  CHECK(srules4[2].rhs == zp({{{2, 5}, {{zv(Side::S, "01"), 2}}}}));
}

TEST_CASE("bridge and double-expression systems agree rule-for-rule, weight <= 5") {
  Bases bases;
  ZetaAlgebra za(&bases);
  RewriteSystem a = za.build_system(ZetaAlgebra::Generator::Bridge, 5);
  RewriteSystem b = za.build_system(ZetaAlgebra::Generator::DoubleExpression, 5);
  for (int n = 2; n <= 5; ++n) {
    for (Side s : {Side::S, Side::Sigma}) {
      auto& ra = a.rules(s, n);
      auto& rb = b.rules(s, n);
      REQUIRE(ra.size() == rb.size());
      for (size_t i = 0; i < ra.size(); ++i) {
        CAPTURE(n);
        CAPTURE(ra[i].head.str());
        CHECK(ra[i].head == rb[i].head);
        CHECK(ra[i].rhs == rb[i].rhs);
      }
      CHECK(a.irreducibles(s, n) == b.irreducibles(s, n));
    }
  }
}

TEST_CASE("normal forms: no divergent or reducible variables; confluence witness") {
  Bases bases;
  ZetaAlgebra za(&bases);
  RewriteSystem rs = za.build_system(ZetaAlgebra::Generator::Bridge, 6);

  std::mt19937 rng(4242);
  std::vector<ZetaVar> pool;
  for (int n = 2; n <= 6; ++n)
    for (const Word& l : lyndon_words_of_weight(Alphabet::Y, n)) pool.emplace_back(Side::Sigma, l);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coef(-5, 5);

  // randomized-order reducer as the independent confluence check
  auto reduce_random = [&](ZetaPoly p) {
    std::vector<std::pair<ZetaMonomial, Rational>> work(p.terms().begin(), p.terms().end());
    ZetaPoly done;
    while (!work.empty()) {
      std::uniform_int_distribution<size_t> wp(0, work.size() - 1);
      size_t i = wp(rng);
      auto [m, c] = work[i];
      work.erase(work.begin() + static_cast<long>(i));
      std::vector<ZetaVar> reducible;
      for (auto& [v, k] : m.factors())
        if (rs.rule_for(v)) reducible.push_back(v);
      if (reducible.empty()) {
        done.add_term(m, c);
        continue;
      }
      std::uniform_int_distribution<size_t> rp(0, reducible.size() - 1);
      ZetaVar v = reducible[rp(rng)];
      int k = 0;
      for (auto& [u, kk] : m.factors())
        if (u == v) k = kk;
      ZetaPoly repl = rs.rule_for(v)->rhs.pow(k);
      ZetaMonomial rest = m.without(v);
      for (auto& [m2, c2] : repl.terms()) work.push_back({m2 * rest, c2 * c});
    }
    return done;
  };

  for (int trial = 0; trial < 50; ++trial) {
    ZetaPoly p;
    for (int t = 0; t < 3; ++t) {
      ZetaVar v = pool[pick(rng)];
      if (v.weight() <= 3) {
        ZetaVar w = pool[pick(rng)];
        if (v.weight() + w.weight() <= 6)
          p.add_term(ZetaMonomial(v) * ZetaMonomial(w), coef(rng));
        else
          p.add_term(ZetaMonomial(v), coef(rng));
      } else {
        p.add_term(ZetaMonomial(v), coef(rng));
      }
    }
    ZetaPoly nf = rs.normal_form(p);
    for (auto& [m, c] : nf.terms())
      for (auto& [v, k] : m.factors()) {
        CHECK(rs.rule_for(v) == nullptr);
        CHECK_FALSE(v.divergent());
      }
    CHECK(reduce_random(p) == nf);
    CHECK(rs.normal_form(nf) == nf);
  }
}

TEST_CASE("side transport consistency, weight <= 5") {
  Bases bases;
  ZetaAlgebra za(&bases);
  RewriteSystem rs = za.build_system(ZetaAlgebra::Generator::Bridge, 5);

  // transport-to-Sigma of an S-side polynomial, variable by variable
  auto to_sigma = [&](const ZetaPoly& p) {
    ZetaPoly out;
    for (auto& [m, c] : p.terms()) {
      ZetaPoly term = ZetaPoly::constant(c);
      for (auto& [v, k] : m.factors()) {
        NcPoly proj = project_poly(bases.basis_S(v.word), Alphabet::Y);
        term = term * za.zeta_character(proj, Side::Sigma).pow(k);
      }
      out += term;
    }
    return out;
  };

  for (int n = 2; n <= 5; ++n) {
    for (const Word& l : lyndon_words_of_weight(Alphabet::X, n)) {
      // route 1: transport first, then reduce on the Sigma side
      ZetaPoly a = rs.normal_form(
          za.zeta_character(project_poly(bases.basis_S(l), Alphabet::Y), Side::Sigma));
      // route 2: reduce on the S side, then transport the result
      ZetaPoly b = rs.normal_form(
          to_sigma(rs.normal_form(ZetaPoly::variable(ZetaVar(Side::S, l)))));
      CAPTURE(l.str());
      CHECK(a == b);
    }
  }
}

TEST_CASE("dimensions through weight 7") {
  Bases bases;
  ZetaAlgebra za(&bases);
  RewriteSystem rs = za.build_system(ZetaAlgebra::Generator::Bridge, 7);
  auto rows = dimensions(rs, 7);
  REQUIRE(rows.size() == 6);
  std::vector<long long> expect = {1, 1, 1, 2, 2, 3};
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].d == expect[i]);
    CHECK(rs.dimension(Side::S, rows[i].weight) == expect[i]);
    CHECK(rows[i].new_irreducibles_sigma == rows[i].new_irreducibles_s);
  }
  // Lyndon-indexed irreducibles through 7: the single zetas at 2, 3, 5, 7
  CHECK(rs.irreducibles(Side::Sigma, 5) == std::vector<ZetaVar>{zv(Side::Sigma, "5")});
  CHECK(rs.irreducibles(Side::Sigma, 6).empty());
  CHECK(rs.irreducibles(Side::Sigma, 7) == std::vector<ZetaVar>{zv(Side::Sigma, "7")});
  CHECK(rs.irreducibles(Side::S, 7) == std::vector<ZetaVar>{zv(Side::S, "0000001")});
}

TEST_CASE("json forms for relations and rules") {
  Bases bases;
  ZetaAlgebra za(&bases);
  RewriteSystem rs = za.build_system(ZetaAlgebra::Generator::Bridge, 4);
  auto& rule = rs.rules(Side::Sigma, 4)[1];  // zeta(Sigma[3,1]) -> 3/10 zeta(Sigma[2])^2
  Json j = rule_to_json(rule, 4);
  CHECK(j["weight"] == 4);
  CHECK(j["lead"]["side"] == "Sigma");
  CHECK(j["lead"]["word"] == "3,1");
  REQUIRE(j["rhs"].size() == 1);
  CHECK(j["rhs"][0]["coeff"] == "3/10");
  CHECK(j["rhs"][0]["monomial"][0]["side"] == "Sigma");
  CHECK(j["rhs"][0]["monomial"][0]["word"] == "2");
  CHECK(j["rhs"][0]["monomial"][0]["power"] == 2);
}
