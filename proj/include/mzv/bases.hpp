#ifndef MZV_BASES_HPP
#define MZV_BASES_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mzv/ncpoly.hpp"

namespace mzv {

enum class BasisKind { P, S, Pi, Sigma };

std::string basis_kind_name(BasisKind k);
BasisKind parse_basis_kind(const std::string& name);

// One of {P, S} over X or Y, or {Pi, Sigma} over Y.
struct BasisId {
  BasisKind kind;
  Alphabet alphabet;

  BasisId(BasisKind k, Alphabet a);
  friend bool operator==(const BasisId& a, const BasisId& b) {
    return a.kind == b.kind && a.alphabet == b.alphabet;
  }
};

// Lazily computed per-weight tables of the four basis families.
//
//   P_w:    PBW family. P_letter = letter, P_l = [P_l1, P_l2] at the standard
//           factorization, P_w = ordered concatenation products along the
//           Lyndon factorization. Upper triangular: P_w = w + greater words.
//   S_w:    dual of P under the word pairing. S_letter = letter, Lyndon
//           S_l = first letter . S_rest, divided-power shuffle products for
//           general words. Lower triangular.
//   Pi_w:   same shape as P with Pi_letter = pi1(letter); equals phi(P_w).
//   Sigma_w: dual of Pi. Lyndon entries come from the triangular solve of
//           <Pi_u | Sigma_v> = delta (via the phi-adjoint, see basis_sigma in
//           the implementation); non-Lyndon entries are divided-power stuffle
//           products of the Lyndon ones.
//
// All accessors are internally synchronized; computed blocks are immutable.
class Bases {
 public:
  Bases() = default;
  explicit Bases(std::optional<std::string> cache_dir) : cache_dir_(std::move(cache_dir)) {}

  const NcPoly& element(BasisId id, const Word& w);
  NcPoly basis_P(const Word& w) { return element({BasisKind::P, w.alphabet()}, w); }
  NcPoly basis_S(const Word& w) { return element({BasisKind::S, w.alphabet()}, w); }
  NcPoly basis_Pi(const Word& w) { return element({BasisKind::Pi, Alphabet::Y}, w); }
  NcPoly basis_Sigma(const Word& w) { return element({BasisKind::Sigma, Alphabet::Y}, w); }

  // Whole weight block, keyed by word.
  const std::map<Word, NcPoly>& block(BasisId id, int weight);

  // Exact coordinates of a homogeneous polynomial in the chosen basis:
  // peel the extreme support word (greatest for S/Sigma, least for P/Pi),
  // subtract its basis element, repeat. Throws on non-homogeneous input,
  // naming the offending weights.
  std::map<Word, Rational> decompose(const NcPoly& p, BasisId basis);
  NcPoly expand(const std::map<Word, Rational>& coords, BasisId basis, Alphabet a);

  // Truncated Schutzenberger factorization residual: the ordered product
  // over Lyndon words (decreasing) of exp(dual (x) primal), minus the
  // truncated diagonal series sum w (x) w. Zero through the truncation
  // weight when the bases are correct.
  TensorPoly schutzenberger_residual(Alphabet a, int max_weight);

 private:
  const NcPoly& element_nocache(BasisId id, const Word& w);
  void ensure_block(BasisId id, int weight);
  NcPoly compute_P(BasisId id, const Word& w);
  NcPoly compute_S(BasisId id, const Word& w);
  NcPoly compute_Pi(const Word& w);
  void compute_sigma_block(int weight);

  static int table_index(BasisId id);

  std::recursive_mutex mutex_;
  std::map<int, std::map<Word, NcPoly>> tables_[6];
  std::optional<std::string> cache_dir_;
};

}  // namespace mzv

#endif  // MZV_BASES_HPP
