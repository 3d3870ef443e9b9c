#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hermtri/rational.hpp"

namespace hermtri {

/// Multivariate polynomial over Q in ordered variables x1 < x2 < ... .
///
/// Recursive-dense: a nonconstant polynomial is a dense vector of
/// coefficients in its top variable, each coefficient a polynomial in
/// strictly lower variables. The representation is canonical:
///   - top_var() is the largest variable that actually occurs (0 for constants);
///   - the leading coefficient vector entry is nonzero and there are at least
///     two entries.
/// Canonicity makes operator== structural equality.
class MPoly {
 public:
  MPoly() = default;
  MPoly(Rational c) : constant_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(long c) : constant_(c) {}                 // NOLINT(google-explicit-constructor)

  /// The variable x_index (index >= 1).
  static MPoly var(int index);

  /// sum_k coeffs[k] * x_var^k. Coefficients may involve any variables.
  static MPoly from_coeffs(int var, std::vector<MPoly> coeffs);

  /// coeff * prod_j x_{j+1}^{exponents[j]}.
  static MPoly monomial(std::span<const unsigned> exponents, Rational coeff = Rational(1));

  int top_var() const { return var_; }
  bool is_zero() const { return var_ == 0 && constant_.is_zero(); }
  bool is_constant() const { return var_ == 0; }

  /// Value of a constant polynomial. Precondition: is_constant().
  const Rational& constant() const;

  /// Dense coefficients in the top variable (empty for constants).
  std::span<const MPoly> top_coeffs() const { return coeffs_; }

  /// Degree in x_var; -1 for the zero polynomial.
  int degree(int var) const;

  /// Coefficient of x_var^k, a polynomial not involving x_var.
  MPoly coeff(int var, int k) const;

  /// Dense coefficient list in x_var (length degree(var)+1; empty for zero).
  std::vector<MPoly> coeffs_in(int var) const;

  /// Leading coefficient in the top variable (itself for constants).
  const MPoly& leading_coeff() const;

  /// Substitutes x1 = a[0], ..., xm = a[m-1].
  MPoly eval_prefix(std::span<const Rational> a) const;

  /// Full evaluation; requires a.size() >= top_var().
  Rational eval(std::span<const Rational> a) const;

  std::size_t term_count() const;

  /// Visits every nonzero term as (exponent vector of length top_var(), coeff).
  void for_each_term(const std::function<void(std::span<const unsigned>, const Rational&)>& fn) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);

  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  void normalize();
  void for_each_term_impl(std::vector<unsigned>& exps,
                          const std::function<void(std::span<const unsigned>, const Rational&)>& fn) const;

  int var_ = 0;
  Rational constant_;
  std::vector<MPoly> coeffs_;
};

MPoly pow(const MPoly& f, unsigned e);

/// c * f.
MPoly scale(const MPoly& f, const Rational& c);

/// Formal partial derivative with respect to x_var.
MPoly diff(const MPoly& f, int var);

/// Coefficients c_r with f = sum_r c_r * (x_var - a)^r; each c_r is free of x_var.
std::vector<MPoly> shift(const MPoly& f, int var, const Rational& a);

/// Inverse of shift: sum_r c[r] * (x_var - a)^r expanded in the standard basis.
MPoly unshift(std::span<const MPoly> c, int var, const Rational& a);

/// Taylor coefficient (1/(i1!...im!)) d^{i1+...+im} f / dx1^{i1}...dxm^{im} at
/// the point, computed by iterated differentiation. orders may be shorter than
/// the point (missing orders are 0); the point must cover every variable of f.
Rational taylor_coeff(const MPoly& f, std::span<const unsigned> orders, std::span<const Rational> point);

/// Text form, e.g. "x2^2 - (4*x1 + 1)*x2 + 6*x1". Parses back with parse_poly.
std::string to_string(const MPoly& f);

/// Parses sums/products/powers of x<i>, integers and a/b literals, with
/// parentheses. Throws ParseError.
MPoly parse_poly(std::string_view text);

std::ostream& operator<<(std::ostream& os, const MPoly& f);

}  // namespace hermtri
