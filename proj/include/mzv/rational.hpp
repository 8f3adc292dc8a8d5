#ifndef MZV_RATIONAL_HPP
#define MZV_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace mzv {

// Exact rational scalar backed by GMP. Kept canonical at all times:
// gcd(|num|, den) = 1 and den > 0. All kernel arithmetic goes through
// this type; no floating point enters the symbolic layer.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // implicit: integer scalars mix freely
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts "p" or "p/q", arbitrary precision.
  static Rational parse(std::string_view text) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    q.canonicalize();
    return Rational(std::move(q));
  }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  const mpq_class& raw() const { return v_; }

  // Canonical text form "p/q" (q >= 1, reduced), e.g. "3/1", "-17/30".
  std::string str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }
  // Human form: "3", "-17/30".
  std::string pretty() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return str();
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  double to_double() const { return v_.get_d(); }

 private:
  mpq_class v_;
};

inline Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

}  // namespace mzv

#endif  // MZV_RATIONAL_HPP
