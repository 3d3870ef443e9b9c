#include "hermtri/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "hermtri/errors.hpp"

namespace hermtri {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("invalid integer literal '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), 1);
  const mpz_class num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw ParseError("negative denominator in '" + std::string(text) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t bitlength(const mpz_class& z) {
  if (z == 0) return 0;
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

std::size_t rat_bitsize(const Rational& q) {
  if (q.is_zero()) return 0;
  const std::size_t num_bits = bitlength(q.raw().get_num());
  const std::size_t den_bits = bitlength(q.raw().get_den());
  return num_bits > den_bits ? num_bits : den_bits;
}

Rational factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f, 1);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b, 1);
}

Rational pow(const Rational& q, unsigned e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.raw().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.raw().get_den_mpz_t(), e);
  return Rational(num, den);
}

}  // namespace hermtri
