#ifndef MZV_NUMERIC_ORACLE_HPP
#define MZV_NUMERIC_ORACLE_HPP

#include <vector>

#include "mzv/bases.hpp"
#include "mzv/zeta_algebra.hpp"

namespace mzv {

// Convergent composition (s1,...,sr) with s1 >= 2, i.e. the index of the
// nested series sum_{n1 > ... > nr > 0} n1^{-s1} ... nr^{-sr}.
struct Composition {
  std::vector<int> parts;

  explicit Composition(std::vector<int> s);
  static Composition from_word(const Word& w);  // Y-word or X-word in x0 X* x1
  int weight() const;
  int depth() const { return static_cast<int>(parts.size()); }
  std::string str() const;
};

struct ZetaEstimate {
  double value = 0.0;
  double tail_bound = 0.0;  // rigorous overestimate of the omitted tail
};

// Truncated nested summation over cutoff >= n1 > ... > nr >= 1, computed by
// one bottom-up sweep per depth (O(depth * cutoff)). The tail bound is the
// crude integral bound sum_{n > N} n^{-s1} * (bound on the inner sums),
// where trailing exponent-1 slots contribute harmonic factors (1 + ln n)
// and the rest geometric zeta(2) factors.
ZetaEstimate zeta_numeric(const Composition& c, long cutoff);

struct RelationCheck {
  std::string provenance;
  double value = 0.0;
  double scale = 1.0;  // largest monomial magnitude
  double tol = 0.0;
  bool pass = false;
};

// Numerical sanity check of a relation: expand every zeta variable through
// its basis polynomial into convergent compositions, evaluate, and require
// |value| <= tol * max(1, largest term). Throws if the cutoff cannot support
// the requested tolerance.
RelationCheck check_relation_numeric(const Relation& rel, Bases& bases, long cutoff, double tol);

}  // namespace mzv

#endif  // MZV_NUMERIC_ORACLE_HPP
