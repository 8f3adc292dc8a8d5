#include "mzv/numeric_oracle.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mzv {

Composition::Composition(std::vector<int> s) : parts(std::move(s)) {
  if (parts.empty()) throw std::invalid_argument("Composition: empty");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("Composition: parts must be positive");
  if (parts.front() < 2)
    throw std::invalid_argument("Composition: s1 >= 2 required for convergence");
}

Composition Composition::from_word(const Word& w) {
  if (w.alphabet() == Alphabet::Y) return Composition(w.letters());
  auto y = project_word(w);
  if (!y.has_value() || y->empty())
    throw std::invalid_argument("Composition: X-word must lie in x0 X* x1");
  return Composition(y->letters());
}

int Composition::weight() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string Composition::str() const {
  std::string out = "zeta(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

ZetaEstimate zeta_numeric(const Composition& c, long cutoff) {
  if (cutoff < c.depth()) throw std::invalid_argument("zeta_numeric: cutoff below depth");
  const auto& s = c.parts;
  int depth = c.depth();
  // B[m] = sum over m >= n_j > ... > n_r >= 1 of the partial products,
  // built from the innermost exponent outward
  std::vector<double> prev(static_cast<size_t>(cutoff) + 1, 0.0);
  for (int j = depth - 1; j >= 0; --j) {
    std::vector<double> cur(static_cast<size_t>(cutoff) + 1, 0.0);
    double acc = 0.0;
    for (long n = 1; n <= cutoff; ++n) {
      double inner = j == depth - 1 ? 1.0 : prev[static_cast<size_t>(n) - 1];
      if (inner != 0.0) acc += std::pow(static_cast<double>(n), -s[static_cast<size_t>(j)]) * inner;
      cur[static_cast<size_t>(n)] = acc;
    }
    prev = std::move(cur);
  }
  ZetaEstimate out;
  out.value = prev[static_cast<size_t>(cutoff)];

  // Tail bound: sum_{n > N} n^{-s1} * prod_{j >= 2} (inner-slot bound); the
  // inner slots are bounded by zeta(2) (exponent >= 2) or 1 + ln n
  // (exponent 1), and the sum by the integral. J(d) below is
  // int_N^inf x^{-s1} (1 + ln x)^d dx via integration by parts.
  int ones = 0;
  double factor = 1.0;
  for (size_t j = 1; j < s.size(); ++j) {
    if (s[j] == 1)
      ++ones;
    else
      factor *= 1.6450;
  }
  double N = static_cast<double>(cutoff);
  if (N < std::exp(1.0 + 0.5 * ones))
    throw std::invalid_argument("zeta_numeric: cutoff too small for a rigorous tail bound");
  double s1 = static_cast<double>(s[0]);
  double base = std::pow(N, 1.0 - s1) / (s1 - 1.0);
  double J = base;  // d = 0
  double lg = 1.0 + std::log(N);
  double lgpow = 1.0;
  for (int d = 1; d <= ones; ++d) {
    lgpow *= lg;
    J = lgpow * base + static_cast<double>(d) / (s1 - 1.0) * J;
  }
  out.tail_bound = factor * J;
  return out;
}

namespace {

ZetaEstimate zeta_cached(const std::vector<int>& parts, long cutoff) {
  static std::map<std::pair<std::vector<int>, long>, ZetaEstimate> cache;
  static std::mutex mu;
  std::pair<std::vector<int>, long> key{parts, cutoff};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  ZetaEstimate e = zeta_numeric(Composition(parts), cutoff);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::move(key), e);
  return e;
}

// expand one coordinate into convergent compositions and evaluate
ZetaEstimate eval_var(const ZetaVar& v, Bases& bases, long cutoff) {
  if (v.divergent()) return {0.0, 0.0};
  NcPoly poly = v.side == Side::Sigma
                    ? bases.element({BasisKind::Sigma, Alphabet::Y}, v.word)
                    : bases.element({BasisKind::S, Alphabet::X}, v.word);
  ZetaEstimate out;
  for (auto& [w, c] : poly.terms()) {
    Composition comp = Composition::from_word(w);
    ZetaEstimate e = zeta_cached(comp.parts, cutoff);
    double cd = c.to_double();
    out.value += cd * e.value;
    out.tail_bound += std::abs(cd) * e.tail_bound;
  }
  return out;
}

}  // namespace

RelationCheck check_relation_numeric(const Relation& rel, Bases& bases, long cutoff, double tol) {
  RelationCheck out;
  out.provenance = rel.provenance;
  out.tol = tol;
  double total = 0.0;
  double err = 0.0;
  double scale = 0.0;
  for (auto& [m, c] : rel.poly.terms()) {
    double val = 1.0;
    double hi = 1.0;  // product of (|value| + tail) upper bounds
    for (auto& [v, k] : m.factors()) {
      ZetaEstimate e = eval_var(v, bases, cutoff);
      for (int i = 0; i < k; ++i) {
        val *= e.value;
        hi *= std::abs(e.value) + e.tail_bound;
      }
    }
    double cd = c.to_double();
    total += cd * val;
    err += std::abs(cd) * (hi - std::abs(val));
    scale = std::max(scale, std::abs(cd * val));
  }
  double threshold = tol * std::max(1.0, scale);
  out.value = total;
  out.scale = std::max(1.0, scale);
  // An exact identity evaluated on partial sums leaves a residual bounded by
  // the certified truncation error, so a residual within max(threshold, err)
  // passes; a residual beyond err + threshold is a certified coefficient
  // error. The strip in between cannot be decided at this cutoff.
  if (std::abs(total) <= threshold || std::abs(total) <= err) {
    out.pass = true;
  } else if (std::abs(total) - err > threshold) {
    out.pass = false;
  } else {
    throw std::invalid_argument(
        "check_relation_numeric: cutoff too small for the requested tolerance; "
        "increase --cutoff");
  }
  return out;
}

}  // namespace mzv
