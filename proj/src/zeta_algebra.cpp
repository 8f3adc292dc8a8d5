#include "mzv/zeta_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mzv {

std::string side_name(Side s) { return s == Side::S ? "S" : "Sigma"; }

Side parse_side(const std::string& name) {
  if (name == "S") return Side::S;
  if (name == "Sigma") return Side::Sigma;
  throw std::invalid_argument("unknown side '" + name + "'");
}

Alphabet side_alphabet(Side s) { return s == Side::S ? Alphabet::X : Alphabet::Y; }

ZetaVar::ZetaVar(Side s, Word w) : side(s), word(std::move(w)) {
  if (word.alphabet() != side_alphabet(s))
    throw std::invalid_argument("ZetaVar: word alphabet does not match side");
  if (word.empty() || !is_lyndon(word))
    throw std::invalid_argument("ZetaVar: index word must be Lyndon");
}

std::string ZetaVar::str() const {
  return "zeta(" + side_name(side) + "[" + word.str() + "])";
}

ZetaMonomial::ZetaMonomial(const ZetaVar& v, int power) {
  if (power < 0) throw std::invalid_argument("ZetaMonomial: negative power");
  if (power > 0) factors_.push_back({v, power});
}

int ZetaMonomial::degree() const {
  int d = 0;
  for (auto& [v, k] : factors_) d += k;
  return d;
}

int ZetaMonomial::weight() const {
  int w = 0;
  for (auto& [v, k] : factors_) w += v.weight() * k;
  return w;
}

bool ZetaMonomial::has_divergent_factor() const {
  for (auto& [v, k] : factors_)
    if (v.divergent()) return true;
  return false;
}

std::optional<Side> ZetaMonomial::side() const {
  if (factors_.empty()) return std::nullopt;
  return factors_.front().first.side;
}

std::string ZetaMonomial::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (auto& [v, k] : factors_) {
    if (!out.empty()) out += "*";
    out += v.str();
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

ZetaMonomial ZetaMonomial::times(const ZetaVar& v, int power) const {
  return *this * ZetaMonomial(v, power);
}

ZetaMonomial ZetaMonomial::without(const ZetaVar& v) const {
  ZetaMonomial out;
  for (auto& [u, k] : factors_)
    if (!(u == v)) out.factors_.push_back({u, k});
  return out;
}

ZetaMonomial operator*(const ZetaMonomial& a, const ZetaMonomial& b) {
  if (!a.factors_.empty() && !b.factors_.empty() &&
      a.factors_.front().first.side != b.factors_.front().first.side)
    throw std::invalid_argument("ZetaMonomial: mixed-side product");
  ZetaMonomial out;
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      out.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.push_back({ia->first, ia->second + ib->second});
      ++ia;
      ++ib;
    }
  }
  return out;
}

ZetaPoly ZetaPoly::constant(const Rational& c) {
  ZetaPoly p;
  p.add_term(ZetaMonomial(), c);
  return p;
}

ZetaPoly ZetaPoly::variable(const ZetaVar& v) {
  ZetaPoly p;
  p.add_term(ZetaMonomial(v), Rational(1));
  return p;
}

void ZetaPoly::add_term(const ZetaMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational ZetaPoly::coeff(const ZetaMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> ZetaPoly::homogeneous_weight() const {
  std::set<int> ws;
  for (auto& [m, c] : terms_) ws.insert(m.weight());
  if (ws.size() != 1) return std::nullopt;
  return *ws.begin();
}

ZetaPoly& ZetaPoly::operator+=(const ZetaPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ZetaPoly& ZetaPoly::operator-=(const ZetaPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ZetaPoly& ZetaPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b) {
  ZetaPoly out;
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
  return out;
}

ZetaPoly ZetaPoly::pow(int k) const {
  ZetaPoly out = ZetaPoly::constant(1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string ZetaPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [m, c] : terms_) {
    bool first = out.empty();
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string ms = m.str();
    if (ms == "1") {
      out += mag.pretty();
    } else if (mag == Rational(1)) {
      out += ms;
    } else {
      out += mag.pretty() + "*" + ms;
    }
  }
  return out;
}

ZetaPoly ZetaAlgebra::zeta_character(const NcPoly& p, Side side) {
  if (p.is_zero()) return {};
  if (p.alphabet() != side_alphabet(side))
    throw std::invalid_argument("zeta_character: polynomial alphabet does not match side");
  auto ws = p.weights();
  if (ws.size() != 1) {
    std::ostringstream msg;
    msg << "zeta_character: input not homogeneous; weights present:";
    for (int w : ws) msg << " " << w;
    throw std::invalid_argument(msg.str());
  }
  BasisId id(side == Side::S ? BasisKind::S : BasisKind::Sigma, p.alphabet());
  auto coords = bases_->decompose(p, id);
  ZetaPoly out;
  for (auto& [w, c] : coords) {
    ZetaMonomial mono;
    Rational scale = c;
    bool dead = false;
    for (auto& [l, mult] : lyndon_factorization(w)) {
      if (l.weight() == 1) {  // the weight-one generators evaluate to zero
        dead = true;
        break;
      }
      mono = mono.times(ZetaVar(side, l), mult);
      scale /= factorial(mult);
    }
    if (dead) continue;
    out.add_term(mono, scale);
  }
  return out;
}

namespace {

Word single_zeta_word(Side side, int k) {
  if (side == Side::Sigma) return Word(Alphabet::Y, {k});
  std::vector<int> ls(k - 1, 0);
  ls.push_back(1);
  return Word(Alphabet::X, std::move(ls));
}

void compositions_ge2(int m, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
  if (m == 0) {
    if (!acc.empty()) out.push_back(acc);
    return;
  }
  for (int k = 2; k <= m; ++k) {
    acc.push_back(k);
    compositions_ge2(m - k, acc, out);
    acc.pop_back();
  }
}

}  // namespace

ZetaPoly ZetaAlgebra::bprime(int m, Side side) {
  if (m < 0) throw std::invalid_argument("bprime: negative order");
  if (m == 0) return ZetaPoly::constant(1);
  if (m == 1) return {};
  ZetaPoly out;
  std::vector<std::vector<int>> comps;
  std::vector<int> acc;
  compositions_ge2(m, acc, comps);
  for (auto& comp : comps) {
    int i = static_cast<int>(comp.size());
    // expanding exp(sum_k (-1)^{k-1} zeta(k)/k y1^k): each ordered composition
    // carries the multinomial 1/i!
    Rational coeff((m - i) % 2 == 0 ? 1 : -1);
    coeff /= factorial(i);
    ZetaMonomial mono;
    for (int k : comp) {
      coeff /= Rational(k);
      mono = mono.times(ZetaVar(side, single_zeta_word(side, k)), 1);
    }
    out.add_term(mono, coeff);
  }
  return out;
}

ZetaPoly ZetaAlgebra::transport_product(const Word& w, Side target) {
  ZetaPoly out = ZetaPoly::constant(1);
  for (auto& [l, mult] : lyndon_factorization(w)) {
    NcPoly proj =
        target == Side::Sigma
            ? project_poly(bases_->element({BasisKind::S, Alphabet::X}, l), Alphabet::Y)
            : project_poly(bases_->element({BasisKind::Sigma, Alphabet::Y}, l), Alphabet::X);
    ZetaPoly z = zeta_character(proj, target);
    out = out * z.pow(mult);
    out *= Rational(1) / factorial(mult);
  }
  return out;
}

std::vector<Relation> ZetaAlgebra::relations_bridge_Pi(int n) {
  if (n < 2) throw std::invalid_argument("relations_bridge_Pi: weight must be >= 2");
  std::vector<Relation> out;
  BasisId sigma_id(BasisKind::Sigma, Alphabet::Y);
  for (const Word& v : words_of_weight(Alphabet::Y, n)) {
    std::string prov = "bridge_Pi:" + v.str();
    if (v.letters().front() == 1) {
      int k = 0;
      while (k < v.length() && v.letters()[k] == 1) ++k;
      Word w = v.suffix(k);
      ZetaPoly r =
          zeta_character(project_poly(bases_->element(sigma_id, v), Alphabet::X), Side::S);
      for (int m = 2; m <= k; ++m) {
        std::vector<int> ls(k - m, 1);
        ls.insert(ls.end(), w.letters().begin(), w.letters().end());
        Word vm(Alphabet::Y, std::move(ls));
        r += bprime(m, Side::S) *
             zeta_character(project_poly(bases_->element(sigma_id, vm), Alphabet::X), Side::S);
      }
      if (!r.is_zero()) out.push_back({std::move(r), n, RelationKind::Eliminable, prov});
    } else if (is_lyndon(v)) {
      ZetaPoly expr =
          zeta_character(project_poly(bases_->element(sigma_id, v), Alphabet::X), Side::S);
      ZetaPoly poly = ZetaPoly::variable(ZetaVar(Side::Sigma, v)) - expr;
      out.push_back({std::move(poly), n, RelationKind::Transport, prov});
    } else {
      ZetaPoly r =
          transport_product(v, Side::S) -
          zeta_character(project_poly(bases_->element(sigma_id, v), Alphabet::X), Side::S);
      if (!r.is_zero()) out.push_back({std::move(r), n, RelationKind::Eliminable, prov});
    }
  }
  return out;
}

std::vector<Relation> ZetaAlgebra::relations_bridge_P(int n) {
  if (n < 2) throw std::invalid_argument("relations_bridge_P: weight must be >= 2");
  std::vector<Relation> out;
  BasisId s_id(BasisKind::S, Alphabet::X);
  for (const Word& u : words_of_weight(Alphabet::X, n)) {
    if (u.empty() || u.letters().back() != 1) continue;
    std::string prov = "bridge_P:" + u.str();
    if (u.letters().front() == 1) {
      int k = 0;
      while (k < u.length() && u.letters()[k] == 1) ++k;
      Word w = u.suffix(k);
      ZetaPoly r =
          zeta_character(project_poly(bases_->element(s_id, u), Alphabet::Y), Side::Sigma);
      if (k >= 2) r -= bprime(k, Side::Sigma) * transport_product(w, Side::Sigma);
      if (!r.is_zero()) out.push_back({std::move(r), n, RelationKind::Eliminable, prov});
    } else if (is_lyndon(u)) {
      ZetaPoly expr =
          zeta_character(project_poly(bases_->element(s_id, u), Alphabet::Y), Side::Sigma);
      ZetaPoly poly = ZetaPoly::variable(ZetaVar(Side::S, u)) - expr;
      out.push_back({std::move(poly), n, RelationKind::Transport, prov});
    } else {
      ZetaPoly r =
          transport_product(u, Side::Sigma) -
          zeta_character(project_poly(bases_->element(s_id, u), Alphabet::Y), Side::Sigma);
      if (!r.is_zero()) out.push_back({std::move(r), n, RelationKind::Eliminable, prov});
    }
  }
  return out;
}

std::vector<Relation> ZetaAlgebra::relations_double_expression(int n) {
  if (n < 2) throw std::invalid_argument("relations_double_expression: weight must be >= 2");
  std::vector<Relation> out;
  BasisId s_id(BasisKind::S, Alphabet::X);
  BasisId sigma_id(BasisKind::Sigma, Alphabet::Y);
  const Word x1 = Word::parse(Alphabet::X, "1");
  const Word y1 = Word::parse(Alphabet::Y, "1");

  // Sigma-side relations, from X-words of weight n in x0 X* x1 or x1 x0 X* x1.
  for (const Word& u : words_of_weight(Alphabet::X, n)) {
    if (u.empty() || u.letters().back() != 1) continue;
    NcPoly diff(Alphabet::Y);
    std::string tag;
    if (u.letters().front() == 1) {
      if (u.length() < 2 || u.letters()[1] == 1) continue;  // only single-x1 prefixes
      Word w1 = u.suffix(1);
      NcPoly a = stuffle(project_poly(bases_->element(s_id, x1), Alphabet::Y),
                         project_poly(bases_->element(s_id, w1), Alphabet::Y));
      NcPoly b = project_poly(shuffle(bases_->element(s_id, x1), bases_->element(s_id, w1)),
                              Alphabet::Y);
      diff = a - b;
      tag = "double_Sigma(ii):" + u.str();
    } else if (is_lyndon(u)) {
      auto [l1, l2] = standard_factorization(u);
      // pi_Y annihilates the letter x0, so words whose left standard factor
      // is x0 contribute no cross-expressed pair
      if (l1.length() == 1) continue;
      NcPoly a = stuffle(project_poly(bases_->element(s_id, l1), Alphabet::Y),
                         project_poly(bases_->element(s_id, l2), Alphabet::Y));
      NcPoly b = project_poly(shuffle(bases_->element(s_id, l1), bases_->element(s_id, l2)),
                              Alphabet::Y);
      diff = a - b;
      tag = "double_Sigma(i):" + u.str();
    } else {
      NcPoly a = NcPoly::unit(Alphabet::Y);
      NcPoly b = NcPoly::unit(Alphabet::X);
      for (auto& [l, mult] : lyndon_factorization(u)) {
        a = stuffle(a, stuffle_pow(project_poly(bases_->element(s_id, l), Alphabet::Y), mult));
        b = shuffle(b, shuffle_pow(bases_->element(s_id, l), mult));
      }
      diff = a - project_poly(b, Alphabet::Y);
      tag = "double_Sigma(iii):" + u.str();
    }
    if (diff.is_zero()) continue;
    ZetaPoly r = zeta_character(diff, Side::Sigma);
    if (!r.is_zero()) out.push_back({std::move(r), n, RelationKind::Eliminable, tag});
  }

  // S-side relations, from Y-words of weight n outside y1^2 Y*.
  for (const Word& v : words_of_weight(Alphabet::Y, n)) {
    if (v.empty()) continue;
    NcPoly diff(Alphabet::X);
    std::string tag;
    if (v.letters().front() == 1) {
      if (v.length() < 2 || v.letters()[1] == 1) continue;
      Word w1 = v.suffix(1);
      NcPoly a = shuffle(project_poly(bases_->element(sigma_id, y1), Alphabet::X),
                         project_poly(bases_->element(sigma_id, w1), Alphabet::X));
      NcPoly b = project_poly(stuffle(bases_->element(sigma_id, y1), bases_->element(sigma_id, w1)),
                              Alphabet::X);
      diff = a - b;
      tag = "double_S(ii):" + v.str();
    } else if (is_lyndon(v)) {
      if (v.length() < 2) continue;  // single letters admit no factorization pair
      auto [l1, l2] = standard_factorization(v);
      NcPoly a = shuffle(project_poly(bases_->element(sigma_id, l1), Alphabet::X),
                         project_poly(bases_->element(sigma_id, l2), Alphabet::X));
      NcPoly b = project_poly(stuffle(bases_->element(sigma_id, l1), bases_->element(sigma_id, l2)),
                              Alphabet::X);
      diff = a - b;
      tag = "double_S(i):" + v.str();
    } else {
      NcPoly a = NcPoly::unit(Alphabet::X);
      NcPoly b = NcPoly::unit(Alphabet::Y);
      for (auto& [l, mult] : lyndon_factorization(v)) {
        a = shuffle(a, shuffle_pow(project_poly(bases_->element(sigma_id, l), Alphabet::X), mult));
        b = stuffle(b, stuffle_pow(bases_->element(sigma_id, l), mult));
      }
      diff = a - project_poly(b, Alphabet::X);
      tag = "double_S(iii):" + v.str();
    }
    if (diff.is_zero()) continue;
    ZetaPoly r = zeta_character(diff, Side::S);
    if (!r.is_zero()) out.push_back({std::move(r), n, RelationKind::Eliminable, tag});
  }
  return out;
}

std::vector<Relation> ZetaAlgebra::relations(Generator g, int weight_from, int weight_to) {
  std::vector<Relation> out;
  for (int n = weight_from; n <= weight_to; ++n) {
    std::vector<Relation> batch;
    if (g == Generator::Bridge) {
      batch = relations_bridge_Pi(n);
      auto more = relations_bridge_P(n);
      batch.insert(batch.end(), std::make_move_iterator(more.begin()),
                   std::make_move_iterator(more.end()));
    } else {
      batch = relations_double_expression(n);
    }
    out.insert(out.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return out;
}

RewriteSystem ZetaAlgebra::build_system(Generator g, int max_weight, EliminationOrder order) {
  return reduce(relations(g, 2, max_weight), max_weight, order);
}

const std::vector<RewriteRule>& RewriteSystem::rules(Side s, int weight) const {
  static const std::vector<RewriteRule> empty;
  auto& m = rules_[s == Side::S ? 0 : 1];
  auto it = m.find(weight);
  return it == m.end() ? empty : it->second;
}

const std::vector<ZetaVar>& RewriteSystem::irreducibles(Side s, int weight) const {
  static const std::vector<ZetaVar> empty;
  auto& m = irreducibles_[s == Side::S ? 0 : 1];
  auto it = m.find(weight);
  return it == m.end() ? empty : it->second;
}

std::vector<ZetaVar> RewriteSystem::irreducibles_up_to(Side s, int weight) const {
  std::vector<ZetaVar> out;
  for (int n = 2; n <= weight; ++n) {
    auto& blk = irreducibles(s, n);
    out.insert(out.end(), blk.begin(), blk.end());
  }
  return out;
}

const RewriteRule* RewriteSystem::rule_for(const ZetaVar& v) const {
  auto it = rule_index_.find(v);
  return it == rule_index_.end() ? nullptr : &it->second;
}

long long RewriteSystem::dimension(Side s, int weight) const {
  auto& m = dims_[s == Side::S ? 0 : 1];
  auto it = m.find(weight);
  return it == m.end() ? 0 : it->second;
}

ZetaPoly RewriteSystem::normal_form(const ZetaPoly& p) const {
  ZetaPoly out;
  std::vector<std::pair<ZetaMonomial, Rational>> work(p.terms().begin(), p.terms().end());
  while (!work.empty()) {
    auto [m, c] = work.back();
    work.pop_back();
    const RewriteRule* rule = nullptr;
    int power = 0;
    for (auto& [v, k] : m.factors()) {
      if ((rule = rule_for(v)) != nullptr) {
        power = k;
        break;
      }
    }
    if (!rule) {
      out.add_term(m, c);
      continue;
    }
    ZetaMonomial rest = m.without(rule->head);
    ZetaPoly repl = rule->rhs.pow(power);
    for (auto& [m2, c2] : repl.terms()) work.push_back({m2 * rest, c2 * c});
  }
  return out;
}

namespace {

long long count_weight_n_monomials(const std::vector<int>& irreducible_weights, int n) {
  std::vector<long long> ways(n + 1, 0);
  ways[0] = 1;
  for (int w : irreducible_weights) {
    if (w <= 0) continue;
    for (int j = w; j <= n; ++j) ways[j] += ways[j - w];
  }
  return ways[n];
}

}  // namespace

RewriteSystem reduce(const std::vector<Relation>& relations, int up_to,
                     EliminationOrder order) {
  RewriteSystem rs;
  rs.max_weight_ = up_to;

  std::map<std::pair<int, int>, std::vector<const Relation*>> buckets;
  for (const Relation& r : relations) {
    if (r.kind != RelationKind::Eliminable) continue;
    if (r.weight > up_to) continue;
    if (r.poly.is_zero()) continue;
    auto side = r.poly.terms().begin()->first.side();
    if (!side) throw std::logic_error("reduce: relation with constant leading monomial");
    buckets[{r.weight, *side == Side::S ? 0 : 1}].push_back(&r);
  }

  for (int n = 2; n <= up_to; ++n) {
    for (int si = 0; si < 2; ++si) {
      Side side = si == 0 ? Side::S : Side::Sigma;
      // weight-n coordinates; the greater Lyndon index is eliminated first
      std::vector<ZetaVar> vars;
      for (const Word& l : lyndon_words_of_weight(side_alphabet(side), n))
        vars.emplace_back(side, l);
      if (order == EliminationOrder::GreaterWordFirst)
        std::sort(vars.begin(), vars.end(),
                  [](const ZetaVar& a, const ZetaVar& b) { return b < a; });
      else
        std::sort(vars.begin(), vars.end());

      std::map<ZetaMonomial, int> col_of;
      std::vector<ZetaMonomial> cols;
      for (auto& v : vars) {
        col_of.emplace(ZetaMonomial(v), static_cast<int>(cols.size()));
        cols.emplace_back(v);
      }
      size_t nvars = cols.size();

      std::vector<std::map<int, Rational>> rows;
      std::vector<std::set<std::string>> row_prov;
      auto bit = buckets.find({n, si});
      if (bit != buckets.end()) {
        for (const Relation* rel : bit->second) {
          ZetaPoly p = rs.normal_form(rel->poly);
          if (p.is_zero()) continue;
          if (p.homogeneous_weight() != n)
            throw std::logic_error("reduce: relation not homogeneous of its weight (" +
                                   rel->provenance + ")");
          std::map<int, Rational> row;
          for (auto& [m, c] : p.terms()) {
            auto it = col_of.find(m);
            if (it == col_of.end()) {
              it = col_of.emplace(m, static_cast<int>(cols.size())).first;
              cols.push_back(m);
            }
            row[it->second] = c;
          }
          rows.push_back(std::move(row));
          row_prov.push_back({rel->provenance});
        }
      }

      // Gauss-Jordan; only variable columns may pivot
      std::vector<int> pivot_row(nvars, -1);
      std::vector<bool> used(rows.size(), false);
      for (size_t col = 0; col < nvars; ++col) {
        size_t r = 0;
        for (; r < rows.size(); ++r)
          if (!used[r] && rows[r].count(static_cast<int>(col))) break;
        if (r == rows.size()) continue;
        used[r] = true;
        pivot_row[col] = static_cast<int>(r);
        Rational inv = Rational(1) / rows[r].at(static_cast<int>(col));
        for (auto& [j, v] : rows[r]) v *= inv;
        for (size_t r2 = 0; r2 < rows.size(); ++r2) {
          if (r2 == r) continue;
          auto it = rows[r2].find(static_cast<int>(col));
          if (it == rows[r2].end()) continue;
          Rational f = it->second;
          for (auto& [j, v] : rows[r]) {
            auto [jt, fresh] = rows[r2].emplace(j, Rational(0));
            jt->second -= f * v;
            if (jt->second.is_zero()) rows[r2].erase(jt);
          }
          for (auto& pv : row_prov[r]) row_prov[r2].insert(pv);
        }
      }

      // a leftover nonzero row has support on irreducible products only:
      // the input would force a dependency among lower-weight irreducibles
      for (size_t r = 0; r < rows.size(); ++r) {
        if (used[r] || rows[r].empty()) continue;
        std::ostringstream msg;
        msg << "reduce: inconsistent relations at weight " << n << " on side " << side_name(side)
            << "; derived from:";
        for (auto& pv : row_prov[r]) msg << " " << pv;
        throw std::runtime_error(msg.str());
      }

      std::vector<RewriteRule> rules;
      std::vector<ZetaVar> irreducible;
      for (size_t col = 0; col < nvars; ++col) {
        const ZetaVar& head = cols[col].factors().front().first;
        if (pivot_row[col] < 0) {
          irreducible.push_back(head);
          continue;
        }
        const auto& row = rows[pivot_row[col]];
        ZetaPoly rhs;
        for (auto& [j, v] : row) {
          if (j == static_cast<int>(col)) continue;
          rhs.add_term(cols[j], -v);
        }
        std::string prov;
        for (auto& pv : row_prov[pivot_row[col]]) prov += (prov.empty() ? "" : " ") + pv;
        rules.push_back({head, std::move(rhs), std::move(prov)});
      }
      std::sort(rules.begin(), rules.end(), [](const RewriteRule& a, const RewriteRule& b) {
        return compare(a.head.word, b.head.word) == std::strong_ordering::less;
      });
      std::sort(irreducible.begin(), irreducible.end());

      for (auto& rule : rules) rs.rule_index_.emplace(rule.head, rule);
      rs.rules_[si][n] = std::move(rules);
      rs.irreducibles_[si][n] = std::move(irreducible);

      std::vector<int> irr_weights;
      for (int j = 2; j <= n; ++j)
        for (auto& v : rs.irreducibles_[si][j]) irr_weights.push_back(v.weight());
      rs.dims_[si][n] = count_weight_n_monomials(irr_weights, n);
    }
  }
  return rs;
}

std::vector<DimensionRow> dimensions(const RewriteSystem& rs, int max_weight) {
  std::vector<DimensionRow> out;
  for (int n = 2; n <= max_weight; ++n) {
    DimensionRow row;
    row.weight = n;
    row.d = rs.dimension(Side::Sigma, n);
    row.new_irreducibles_sigma = static_cast<int>(rs.irreducibles(Side::Sigma, n).size());
    row.new_irreducibles_s = static_cast<int>(rs.irreducibles(Side::S, n).size());
    out.push_back(row);
  }
  return out;
}

Json zeta_poly_to_json(const ZetaPoly& p) {
  Json arr = Json::array();
  for (auto& [m, c] : p.terms()) {
    Json mono = Json::array();
    for (auto& [v, k] : m.factors()) {
      mono.push_back({{"side", side_name(v.side)}, {"word", v.word.str()}, {"power", k}});
    }
    arr.push_back({{"monomial", std::move(mono)}, {"coeff", c.str()}});
  }
  return arr;
}

Json relation_to_json(const Relation& r) {
  return Json{{"weight", r.weight},
              {"kind", r.kind == RelationKind::Transport ? "transport" : "eliminable"},
              {"poly", zeta_poly_to_json(r.poly)},
              {"provenance", r.provenance}};
}

Json rule_to_json(const RewriteRule& r, int weight) {
  return Json{{"weight", weight},
              {"lead", Json{{"side", side_name(r.head.side)}, {"word", r.head.word.str()}}},
              {"rhs", zeta_poly_to_json(r.rhs)},
              {"provenance", r.provenance}};
}

}  // namespace mzv
