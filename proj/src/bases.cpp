#include "mzv/bases.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mzv/json_io.hpp"

namespace mzv {

std::string basis_kind_name(BasisKind k) {
  switch (k) {
    case BasisKind::P: return "P";
    case BasisKind::S: return "S";
    case BasisKind::Pi: return "Pi";
    case BasisKind::Sigma: return "Sigma";
  }
  return "?";
}

BasisKind parse_basis_kind(const std::string& name) {
  if (name == "P") return BasisKind::P;
  if (name == "S") return BasisKind::S;
  if (name == "Pi") return BasisKind::Pi;
  if (name == "Sigma") return BasisKind::Sigma;
  throw std::invalid_argument("unknown basis '" + name + "'");
}

BasisId::BasisId(BasisKind k, Alphabet a) : kind(k), alphabet(a) {
  if ((k == BasisKind::Pi || k == BasisKind::Sigma) && a != Alphabet::Y)
    throw std::invalid_argument("Pi/Sigma bases live over Y");
}

int Bases::table_index(BasisId id) {
  int base = id.alphabet == Alphabet::X ? 0 : 1;
  switch (id.kind) {
    case BasisKind::P: return base;
    case BasisKind::S: return 2 + base;
    case BasisKind::Pi: return 4;
    case BasisKind::Sigma: return 5;
  }
  throw std::logic_error("table_index");
}

const NcPoly& Bases::element(BasisId id, const Word& w) {
  if (w.alphabet() != id.alphabet)
    throw std::invalid_argument("Bases::element: word alphabet does not match basis");
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto& tab = tables_[table_index(id)];
  int n = w.weight();
  auto bit = tab.find(n);
  if (bit != tab.end()) {
    auto it = bit->second.find(w);
    if (it != bit->second.end()) return it->second;
  }
  if (cache_dir_) {  // persistent mode works whole blocks at a time
    ensure_block(id, n);
    return tab.at(n).at(w);
  }
  return element_nocache(id, w);
}

const NcPoly& Bases::element_nocache(BasisId id, const Word& w) {
  auto& tab = tables_[table_index(id)];
  int n = w.weight();
  auto bit = tab.find(n);
  if (bit != tab.end()) {
    auto it = bit->second.find(w);
    if (it != bit->second.end()) return it->second;
  }
  NcPoly value(id.alphabet);
  switch (id.kind) {
    case BasisKind::P: value = compute_P(id, w); break;
    case BasisKind::S: value = compute_S(id, w); break;
    case BasisKind::Pi: value = compute_Pi(w); break;
    case BasisKind::Sigma:
      compute_sigma_block(n);
      return tables_[table_index(id)].at(n).at(w);
  }
  return tab[n].emplace(w, std::move(value)).first->second;
}

const std::map<Word, NcPoly>& Bases::block(BasisId id, int weight) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  ensure_block(id, weight);
  return tables_[table_index(id)].at(weight);
}

void Bases::ensure_block(BasisId id, int weight) {
  auto& tab = tables_[table_index(id)];
  auto words = words_of_weight(id.alphabet, weight);
  auto bit = tab.find(weight);
  if (bit != tab.end() && bit->second.size() == words.size()) return;

  std::string cache_path;
  if (cache_dir_) {
    cache_path = *cache_dir_ + "/basis_" + basis_kind_name(id.kind) + "_" +
                 alphabet_name(id.alphabet) + "_w" + std::to_string(weight) + ".json";
    if (auto j = read_json_file(cache_path)) {
      auto blk = basis_block_from_json(*j, id.alphabet);
      if (blk.size() == words.size()) {
        tab[weight] = std::move(blk);
        return;
      }
    }
  }

  if (id.kind == BasisKind::Sigma) {
    compute_sigma_block(weight);
  } else {
    for (const Word& w : words) element_nocache(id, w);
  }
  if (cache_dir_) write_json_file(cache_path, basis_block_to_json(tab.at(weight)));
}

NcPoly Bases::compute_P(BasisId id, const Word& w) {
  if (w.empty()) return NcPoly::unit(id.alphabet);
  if (w.length() == 1) return NcPoly::from_word(w);
  if (is_lyndon(w)) {
    auto [l1, l2] = standard_factorization(w);
    return bracket(element(id, l1), element(id, l2));
  }
  NcPoly out = NcPoly::unit(id.alphabet);
  for (auto& [l, mult] : lyndon_factorization(w))
    out = concat(out, concat_pow(element(id, l), mult));
  return out;
}

NcPoly Bases::compute_S(BasisId id, const Word& w) {
  if (w.empty()) return NcPoly::unit(id.alphabet);
  if (w.length() == 1) return NcPoly::from_word(w);
  if (is_lyndon(w)) {
    Word head(id.alphabet, {w.letters().front()});
    return concat(NcPoly::from_word(head), element(id, w.suffix(1)));
  }
  NcPoly out = NcPoly::unit(id.alphabet);
  for (auto& [l, mult] : lyndon_factorization(w)) {
    out = shuffle(out, shuffle_pow(element(id, l), mult));
    out *= Rational(1) / factorial(mult);
  }
  return out;
}

NcPoly Bases::compute_Pi(const Word& w) {
  BasisId id(BasisKind::Pi, Alphabet::Y);
  if (w.empty()) return NcPoly::unit(Alphabet::Y);
  if (w.length() == 1) return pi1(w);
  if (is_lyndon(w)) {
    auto [l1, l2] = standard_factorization(w);
    return bracket(element(id, l1), element(id, l2));
  }
  NcPoly out = NcPoly::unit(Alphabet::Y);
  for (auto& [l, mult] : lyndon_factorization(w))
    out = concat(out, concat_pow(element(id, l), mult));
  return out;
}

// Sigma solve. Duality against Pi = phi(P) transposes to
//   <phi(u) | Sigma_v> = S_v[u]  for every word u of the block,
// where S is the shuffle dual over Y. phi is triangular with unit diagonal
// (phi(u) = u + greater words), so walking u downward from v determines
//   Sigma_v[u] = S_v[u] - sum_{w > u} phi(u)[w] Sigma_v[w]
// one coefficient at a time. Non-Lyndon entries are divided-power stuffle
// products of the Lyndon ones.
void Bases::compute_sigma_block(int weight) {
  auto& tab = tables_[table_index({BasisKind::Sigma, Alphabet::Y})];
  auto words = words_of_weight(Alphabet::Y, weight);
  auto bit = tab.find(weight);
  if (bit != tab.end() && bit->second.size() == words.size()) return;

  std::map<Word, NcPoly> blk;
  // Lyndon entries, each by back-substitution.
  for (const Word& v : words) {
    if (v.empty()) {
      blk.emplace(v, NcPoly::unit(Alphabet::Y));
      continue;
    }
    if (!is_lyndon(v)) continue;
    NcPoly sv = element({BasisKind::S, Alphabet::Y}, v);
    NcPoly sigma(Alphabet::Y);
    sigma.add_term(v, 1);
    auto pos = std::lower_bound(words.begin(), words.end(), v);
    for (auto it = std::make_reverse_iterator(pos); it != words.rend(); ++it) {
      const Word& u = *it;
      Rational val = sv.coeff(u);
      for (auto& [w2, c] : phi_word(u).terms()) {
        if (w2 == u) continue;
        val -= c * sigma.coeff(w2);
      }
      if (!val.is_zero()) sigma.add_term(u, val);
    }
    blk.emplace(v, std::move(sigma));
  }
  // Non-Lyndon entries from the Lyndon ones at lower weights too, so make
  // sure those blocks exist before filling this one in.
  for (const Word& w : words) {
    if (w.empty() || is_lyndon(w) || blk.count(w)) continue;
    NcPoly out = NcPoly::unit(Alphabet::Y);
    for (auto& [l, mult] : lyndon_factorization(w)) {
      const NcPoly& sl = l.weight() == weight && blk.count(l)
                             ? blk.at(l)
                             : element({BasisKind::Sigma, Alphabet::Y}, l);
      out = stuffle(out, stuffle_pow(sl, mult));
      out *= Rational(1) / factorial(mult);
    }
    blk.emplace(w, std::move(out));
  }
  tab[weight] = std::move(blk);
}

std::map<Word, Rational> Bases::decompose(const NcPoly& p, BasisId basis) {
  if (!p.is_zero() && p.alphabet() != basis.alphabet)
    throw std::invalid_argument("decompose: polynomial alphabet does not match basis");
  std::map<Word, Rational> coords;
  if (p.is_zero()) return coords;
  auto ws = p.weights();
  if (ws.size() != 1) {
    std::ostringstream msg;
    msg << "decompose: input not homogeneous; weights present:";
    for (int w : ws) msg << " " << w;
    throw std::invalid_argument(msg.str());
  }
  bool peel_greatest = basis.kind == BasisKind::S || basis.kind == BasisKind::Sigma;
  NcPoly rest = p;
  while (!rest.is_zero()) {
    auto it = peel_greatest ? std::prev(rest.terms().end()) : rest.terms().begin();
    Word w = it->first;
    Rational c = it->second;
    coords[w] = c;
    rest -= element(basis, w) * c;
  }
  return coords;
}

NcPoly Bases::expand(const std::map<Word, Rational>& coords, BasisId basis, Alphabet a) {
  NcPoly out(a);
  for (auto& [w, c] : coords) out += element(basis, w) * c;
  return out;
}

TensorPoly Bases::schutzenberger_residual(Alphabet a, int max_weight) {
  if (max_weight < 0) throw std::invalid_argument("schutzenberger_residual: negative weight");
  ProductLaw law = a == Alphabet::X ? ProductLaw::Shuffle : ProductLaw::Stuffle;
  BasisId dual_id(a == Alphabet::X ? BasisKind::S : BasisKind::Sigma, a);
  BasisId primal_id(a == Alphabet::X ? BasisKind::P : BasisKind::Pi, a);
  TensorPoly prod = TensorPoly::unit(a);
  if (max_weight >= 1) {
    // decreasing in the word order (lyndon_words sorts by weight first)
    auto lyndon = lyndon_words(a, max_weight);
    std::sort(lyndon.begin(), lyndon.end());
    for (auto it = lyndon.rbegin(); it != lyndon.rend(); ++it) {
      TensorPoly factor =
          tensor_exp(TensorPoly::outer(element(dual_id, *it), element(primal_id, *it)), law,
                     max_weight);
      prod = tensor_mixed_product(prod, factor, law, max_weight);
    }
  }
  for (int n = 0; n <= max_weight; ++n)
    for (const Word& w : words_of_weight(a, n)) prod.add_term(w, w, Rational(-1));
  return prod;
}

}  // namespace mzv
