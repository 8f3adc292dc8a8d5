#ifndef MZV_ZETA_ALGEBRA_HPP
#define MZV_ZETA_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mzv/bases.hpp"
#include "mzv/json_io.hpp"

namespace mzv {

// Which family of local coordinates a symbol lives in:
//   Side::S     - zeta(S_l),     l Lyndon over X (shuffle side);
//   Side::Sigma - zeta(Sigma_l), l Lyndon over Y (stuffle side).
enum class Side { S, Sigma };

std::string side_name(Side s);
Side parse_side(const std::string& name);
Alphabet side_alphabet(Side s);

// A local coordinate zeta(S_l) / zeta(Sigma_l) indexed by a Lyndon word.
// The weight-one generators (x0, x1, y1) are representable; both characters
// send them to zero, so they never survive into emitted polynomials.
struct ZetaVar {
  Side side;
  Word word;

  ZetaVar(Side s, Word w);
  int weight() const { return word.weight(); }
  bool divergent() const { return weight() == 1; }
  std::string str() const;

  friend bool operator==(const ZetaVar& a, const ZetaVar& b) {
    return a.side == b.side && a.word == b.word;
  }
  friend bool operator<(const ZetaVar& a, const ZetaVar& b) {
    if (a.side != b.side) return a.side < b.side;
    return a.word < b.word;
  }
};

// Commutative monomial in zeta variables: sorted (var, power) factors, all on
// one side (the constant monomial 1 carries no side).
class ZetaMonomial {
 public:
  ZetaMonomial() = default;
  explicit ZetaMonomial(const ZetaVar& v, int power = 1);

  const std::vector<std::pair<ZetaVar, int>>& factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }
  int degree() const;
  int weight() const;
  bool has_divergent_factor() const;
  std::optional<Side> side() const;
  std::string str() const;

  ZetaMonomial times(const ZetaVar& v, int power) const;
  ZetaMonomial without(const ZetaVar& v) const;
  friend ZetaMonomial operator*(const ZetaMonomial& a, const ZetaMonomial& b);
  friend bool operator==(const ZetaMonomial& a, const ZetaMonomial& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator<(const ZetaMonomial& a, const ZetaMonomial& b) {
    return a.factors_ < b.factors_;
  }

 private:
  std::vector<std::pair<ZetaVar, int>> factors_;
};

// Commutative polynomial in zeta variables, graded by total weight. Sums may
// mix sides (transports do), products of mixed sides are rejected.
class ZetaPoly {
 public:
  ZetaPoly() = default;
  static ZetaPoly constant(const Rational& c);
  static ZetaPoly variable(const ZetaVar& v);

  const std::map<ZetaMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const ZetaMonomial& m, const Rational& c);
  Rational coeff(const ZetaMonomial& m) const;
  std::optional<int> homogeneous_weight() const;

  ZetaPoly& operator+=(const ZetaPoly& o);
  ZetaPoly& operator-=(const ZetaPoly& o);
  ZetaPoly& operator*=(const Rational& c);
  friend ZetaPoly operator+(ZetaPoly a, const ZetaPoly& b) { return a += b; }
  friend ZetaPoly operator-(ZetaPoly a, const ZetaPoly& b) { return a -= b; }
  friend ZetaPoly operator*(ZetaPoly a, const Rational& c) { return a *= c; }
  friend ZetaPoly operator*(const Rational& c, ZetaPoly a) { return a *= c; }
  friend ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b);
  friend bool operator==(const ZetaPoly& a, const ZetaPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ZetaPoly& a, const ZetaPoly& b) { return !(a == b); }

  ZetaPoly pow(int k) const;
  std::string str() const;

 private:
  std::map<ZetaMonomial, Rational> terms_;
};

// A homogeneous polynomial identity among local coordinates, asserted = 0.
// Transport relations pin a coordinate of one side to a polynomial of the
// other side (zeta(Sigma_v) = zeta of the projected polynomial); they are
// definitional and excluded from the per-side elimination.
enum class RelationKind { Eliminable, Transport };

struct Relation {
  ZetaPoly poly;
  int weight = 0;
  RelationKind kind = RelationKind::Eliminable;
  std::string provenance;
};

struct RewriteRule {
  ZetaVar head;    // weight-n coordinate, leading in the elimination order
  ZetaPoly rhs;    // over irreducible variables of weight <= n
  std::string provenance;
};

// Pivot-scan policy for the per-weight elimination. The row space of the
// weight-n relations is canonical, so the policy decides only which
// coordinate survives when a block has rank deficit (the irreducible pick).
enum class EliminationOrder {
  GreaterWordFirst,  // scan coordinates from the greatest Lyndon index down
  SmallerWordFirst,  // scan from the least Lyndon index up
};

// Per-weight, per-side rewrite rules plus the surviving (irreducible)
// generators and the dimensions d_n of the weight-n span.
class RewriteSystem {
 public:
  int max_weight() const { return max_weight_; }
  const std::vector<RewriteRule>& rules(Side s, int weight) const;
  const std::vector<ZetaVar>& irreducibles(Side s, int weight) const;
  std::vector<ZetaVar> irreducibles_up_to(Side s, int weight) const;
  const RewriteRule* rule_for(const ZetaVar& v) const;
  long long dimension(Side s, int weight) const;  // d_n

  // Apply rules until no reducible variable remains. Terminates because every
  // substitution replaces a head by strictly smaller material in the
  // elimination order.
  ZetaPoly normal_form(const ZetaPoly& p) const;

  friend RewriteSystem reduce(const std::vector<Relation>& relations, int up_to,
                              EliminationOrder order);

 private:
  int max_weight_ = 1;
  std::map<int, std::vector<RewriteRule>> rules_[2];
  std::map<int, std::vector<ZetaVar>> irreducibles_[2];
  std::map<int, long long> dims_[2];
  std::map<ZetaVar, RewriteRule> rule_index_;
};

// Exact linear elimination, weight by weight: substitute all lower-weight
// rules, run Gauss-Jordan over the weight-n monomials with the weight-n
// variables as the only pivot candidates (scanned per the policy), read off
// rules for the pivot variables and declare the rest irreducible.
// Throws if the relations are inconsistent (a nonzero combination of
// irreducible monomials is forced to vanish), naming the provenance.
RewriteSystem reduce(const std::vector<Relation>& relations, int up_to,
                     EliminationOrder order = EliminationOrder::GreaterWordFirst);

struct DimensionRow {
  int weight;
  long long d;                // dimension of the weight-n span (both sides agree)
  int new_irreducibles_sigma; // count of new Sigma-side irreducibles at this weight
  int new_irreducibles_s;
};

std::vector<DimensionRow> dimensions(const RewriteSystem& rs, int max_weight);

// Relation generation. Owns no state beyond a basis cache handle.
class ZetaAlgebra {
 public:
  explicit ZetaAlgebra(Bases* bases) : bases_(bases) {}

  Bases& bases() { return *bases_; }

  // The shuffle / stuffle character with the weight-one generators sent to
  // zero: decompose p in the side's dual basis and map each basis word
  // l1^{i1}...lk^{ik} to prod zeta(l_j)^{i_j} / prod i_j!.
  ZetaPoly zeta_character(const NcPoly& p, Side side);

  // Coefficients of the bridge series 1 + sum_{m>=2} B^(m) y1^m:
  //   B^(m) = sum_{i<=m/2} sum_{k1+...+ki=m, kj>=2} (-1)^{m-i}
  //           zeta(k1)...zeta(ki)/(k1...ki),
  // with zeta(k) rendered on the requested side.
  ZetaPoly bprime(int m, Side side);

  // Identification of local coordinates on the Pi basis: one relation per
  // Y-word of weight n. Words outside y1 Y* give transports (Lyndon) or
  // product relations (non-Lyndon); words y1^k w give the S-side relations
  //   zchar_S(pi_X Sigma_{y1^k w}) + sum_{m=2..k} B^(m) zchar_S(pi_X Sigma_{y1^{k-m} w}) = 0.
  std::vector<Relation> relations_bridge_Pi(int n);

  // Identification on the P basis: one relation per X-word of weight n ending
  // in x1. Words outside x1 X* give transports (Lyndon) or product relations;
  // x1 w gives zchar_Sigma(pi_Y S_{x1 w}) = 0; x1^k w (k >= 2) gives
  //   B^(k) zeta(S_w) = zchar_Sigma(pi_Y S_{x1^k w}).
  std::vector<Relation> relations_bridge_P(int n);

  // Cross-expressed products: for suitable words, the stuffle product of
  // projected duals and the projection of the shuffle product have the same
  // zeta value, so their difference maps to a relation (and mirrored for the
  // other side).
  std::vector<Relation> relations_double_expression(int n);

  enum class Generator { Bridge, DoubleExpression };
  std::vector<Relation> relations(Generator g, int weight_from, int weight_to);
  RewriteSystem build_system(Generator g, int max_weight,
                             EliminationOrder order = EliminationOrder::GreaterWordFirst);

 private:
  ZetaPoly transport_product(const Word& w, Side target);

  Bases* bases_;
};

Json zeta_poly_to_json(const ZetaPoly& p);
Json relation_to_json(const Relation& r);
Json rule_to_json(const RewriteRule& r, int weight);

}  // namespace mzv

#endif  // MZV_ZETA_ALGEBRA_HPP
