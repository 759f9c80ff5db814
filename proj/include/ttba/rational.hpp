#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace ttba {

/// Exact rational scalar. Always canonical: lowest terms, positive denominator.
///
/// Wraps mpq_class but keeps operator results as Rational so that Eigen
/// expressions never see GMP expression templates.
class Rational {
public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long long v) : q_(mpz_class(std::to_string(v))) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class& z) : q_(z) {}

  /// Parses "p/q" or "p"; only the numerator may carry a leading minus.
  /// Throws ParseError on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  std::string str() const;

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class q_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace ttba

namespace Eigen {

template <>
struct NumTraits<ttba::Rational> : GenericNumTraits<ttba::Rational> {
  using Real = ttba::Rational;
  using NonInteger = ttba::Rational;
  using Nested = ttba::Rational;
  using Literal = ttba::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
