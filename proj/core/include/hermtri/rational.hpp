#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

namespace hermtri {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "a", "-a" or "a/b" (b != 0). Throws ParseError otherwise.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Throws std::domain_error on zero.
  Rational inverse() const;
  Rational abs() const { return Rational(::abs(q_)); }

  std::string str() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

/// Number of bits of |z|; bitlength(0) = 0.
std::size_t bitlength(const mpz_class& z);

/// Scalar height: max(bitlength(|num|), bitlength(den)) of the reduced fraction.
std::size_t rat_bitsize(const Rational& q);

/// k! as a rational.
Rational factorial(unsigned k);

/// Binomial coefficient C(n, k) as a rational; zero when k > n.
Rational binomial(unsigned n, unsigned k);

/// q^e for e >= 0.
Rational pow(const Rational& q, unsigned e);

}  // namespace hermtri
