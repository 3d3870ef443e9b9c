#include "hermtri/mpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hermtri {

MPoly MPoly::var(int index) {
  if (index < 1) throw std::invalid_argument("variable index must be >= 1");
  MPoly p;
  p.var_ = index;
  p.coeffs_ = {MPoly(0L), MPoly(1L)};
  return p;
}

MPoly MPoly::from_coeffs(int var, std::vector<MPoly> coeffs) {
  if (var < 1) throw std::invalid_argument("variable index must be >= 1");
  const bool lower = std::all_of(coeffs.begin(), coeffs.end(),
                                 [var](const MPoly& c) { return c.var_ < var; });
  if (lower) {
    MPoly p;
    p.var_ = var;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
  }
  MPoly acc;
  const MPoly x = MPoly::var(var);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * x + coeffs[k];
  }
  return acc;
}

MPoly MPoly::monomial(std::span<const unsigned> exponents, Rational coeff) {
  MPoly p(std::move(coeff));
  if (p.is_zero()) return p;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] == 0) continue;
    MPoly q;
    q.var_ = static_cast<int>(j + 1);
    q.coeffs_.assign(exponents[j] + 1, MPoly());
    q.coeffs_.back() = std::move(p);
    p = std::move(q);
  }
  return p;
}

const Rational& MPoly::constant() const {
  if (var_ != 0) throw std::logic_error("constant() on a nonconstant polynomial");
  return constant_;
}

void MPoly::normalize() {
  if (var_ == 0) return;
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.size() >= 2) return;
  MPoly collapsed = coeffs_.empty() ? MPoly() : std::move(coeffs_.front());
  *this = std::move(collapsed);
}

int MPoly::degree(int var) const {
  if (is_zero()) return -1;
  if (var == var_) return static_cast<int>(coeffs_.size()) - 1;
  if (var > var_) return 0;
  int d = 0;
  for (const auto& c : coeffs_) d = std::max(d, c.degree(var));
  return d;
}

MPoly MPoly::coeff(int var, int k) const {
  if (k < 0) return MPoly();
  if (var == var_) {
    return static_cast<std::size_t>(k) < coeffs_.size() ? coeffs_[k] : MPoly();
  }
  if (var > var_) return k == 0 ? *this : MPoly();
  std::vector<MPoly> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(c.coeff(var, k));
  return from_coeffs(var_, std::move(cs));
}

std::vector<MPoly> MPoly::coeffs_in(int var) const {
  if (var == var_ && var_ != 0) return coeffs_;
  const int d = degree(var);
  std::vector<MPoly> out;
  out.reserve(d + 1);
  for (int k = 0; k <= d; ++k) out.push_back(coeff(var, k));
  return out;
}

const MPoly& MPoly::leading_coeff() const { return var_ == 0 ? *this : coeffs_.back(); }

MPoly MPoly::eval_prefix(std::span<const Rational> a) const {
  if (var_ == 0) return *this;
  if (static_cast<std::size_t>(var_) <= a.size()) return MPoly(eval(a));
  MPoly p;
  p.var_ = var_;
  p.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) p.coeffs_.push_back(c.eval_prefix(a));
  p.normalize();
  return p;
}

Rational MPoly::eval(std::span<const Rational> a) const {
  if (var_ == 0) return constant_;
  if (static_cast<std::size_t>(var_) > a.size()) {
    throw std::invalid_argument("eval: point does not cover x" + std::to_string(var_));
  }
  const Rational& x = a[var_ - 1];
  Rational acc;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc *= x;
    acc += coeffs_[k].eval(a);
  }
  return acc;
}

std::size_t MPoly::term_count() const {
  if (var_ == 0) return is_zero() ? 0 : 1;
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += c.term_count();
  return n;
}

void MPoly::for_each_term(
    const std::function<void(std::span<const unsigned>, const Rational&)>& fn) const {
  std::vector<unsigned> exps(var_, 0);
  for_each_term_impl(exps, fn);
}

void MPoly::for_each_term_impl(
    std::vector<unsigned>& exps,
    const std::function<void(std::span<const unsigned>, const Rational&)>& fn) const {
  if (var_ == 0) {
    if (!constant_.is_zero()) fn(exps, constant_);
    return;
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    exps[var_ - 1] = static_cast<unsigned>(k);
    coeffs_[k].for_each_term_impl(exps, fn);
  }
  exps[var_ - 1] = 0;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.is_zero()) return *this;
  if (var_ == 0 && o.var_ == 0) {
    constant_ += o.constant_;
    return *this;
  }
  if (var_ > o.var_) {
    coeffs_.front() += o;
    return *this;
  }
  if (var_ < o.var_) {
    MPoly r = o;
    r.coeffs_.front() += *this;
    *this = std::move(r);
    return *this;
  }
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly operator-(const MPoly& a) {
  if (a.var_ == 0) return MPoly(-a.constant_);
  MPoly r;
  r.var_ = a.var_;
  r.coeffs_.reserve(a.coeffs_.size());
  for (const auto& c : a.coeffs_) r.coeffs_.push_back(-c);
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (a.var_ == 0 && b.var_ == 0) return MPoly(a.constant_ * b.constant_);
  if (a.var_ < b.var_) return b * a;
  MPoly r;
  r.var_ = a.var_;
  if (a.var_ > b.var_) {
    r.coeffs_.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) r.coeffs_.push_back(c * b);
    return r;
  }
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, MPoly());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.var_ != b.var_) return false;
  if (a.var_ == 0) return a.constant_ == b.constant_;
  return a.coeffs_ == b.coeffs_;
}

MPoly pow(const MPoly& f, unsigned e) {
  MPoly result(1L);
  MPoly base = f;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

MPoly scale(const MPoly& f, const Rational& c) {
  if (c.is_zero() || f.is_zero()) return MPoly();
  if (f.is_constant()) return MPoly(f.constant() * c);
  std::vector<MPoly> cs;
  cs.reserve(f.top_coeffs().size());
  for (const auto& k : f.top_coeffs()) cs.push_back(scale(k, c));
  return MPoly::from_coeffs(f.top_var(), std::move(cs));
}

MPoly diff(const MPoly& f, int var) {
  const int top = f.top_var();
  if (top == 0 || var > top) return MPoly();
  const auto cs = f.top_coeffs();
  std::vector<MPoly> out;
  if (var == top) {
    out.reserve(cs.size() - 1);
    for (std::size_t k = 1; k < cs.size(); ++k) {
      out.push_back(scale(cs[k], Rational(static_cast<long>(k))));
    }
  } else {
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(diff(c, var));
  }
  return MPoly::from_coeffs(top, std::move(out));
}

namespace {

// In-place Taylor shift: on return, c holds the coefficients of the same
// polynomial in powers of (x - a).
void taylor_shift(std::vector<MPoly>& c, const Rational& a) {
  if (a.is_zero() || c.size() < 2) return;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) {
      c[j] += scale(c[j + 1], a);
    }
  }
}

}  // namespace

std::vector<MPoly> shift(const MPoly& f, int var, const Rational& a) {
  std::vector<MPoly> c = f.coeffs_in(var);
  taylor_shift(c, a);
  return c;
}

MPoly unshift(std::span<const MPoly> c, int var, const Rational& a) {
  std::vector<MPoly> v(c.begin(), c.end());
  taylor_shift(v, -a);
  return MPoly::from_coeffs(var, std::move(v));
}

Rational taylor_coeff(const MPoly& f, std::span<const unsigned> orders,
                      std::span<const Rational> point) {
  if (orders.size() > point.size()) {
    throw std::invalid_argument("taylor_coeff: more orders than point coordinates");
  }
  MPoly g = f;
  Rational denom(1);
  for (std::size_t j = 0; j < orders.size(); ++j) {
    for (unsigned t = 0; t < orders[j]; ++t) g = diff(g, static_cast<int>(j + 1));
    denom *= factorial(orders[j]);
  }
  return g.eval(point) / denom;
}

}  // namespace hermtri
