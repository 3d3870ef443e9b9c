#include <cctype>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hermtri/errors.hpp"
#include "hermtri/mpoly.hpp"

namespace hermtri {

namespace {

struct Term {
  bool negative = false;
  std::string body;
};

std::string power_text(int var, std::size_t k) {
  std::string s = "x" + std::to_string(var);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

bool leading_is_negative(const MPoly& f) {
  const MPoly* p = &f;
  while (!p->is_constant()) p = &p->leading_coeff();
  return p->constant().sign() < 0;
}

std::string join(const std::vector<Term>& terms);

// Terms of f, highest power of the top variable first. Coefficients with
// several terms are parenthesized, with a negative leading sign pulled out.
std::vector<Term> terms_of(const MPoly& f) {
  std::vector<Term> out;
  if (f.is_constant()) {
    if (!f.is_zero()) out.push_back({f.constant().sign() < 0, f.constant().abs().str()});
    return out;
  }
  const int v = f.top_var();
  const auto cs = f.top_coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    const MPoly& c = cs[k];
    if (c.is_zero()) continue;
    if (k == 0) {
      auto inner = terms_of(c);
      out.insert(out.end(), inner.begin(), inner.end());
      continue;
    }
    const std::string pw = power_text(v, k);
    if (c.is_constant()) {
      const Rational mag = c.constant().abs();
      out.push_back({c.constant().sign() < 0, mag.is_one() ? pw : mag.str() + "*" + pw});
    } else if (c.term_count() == 1) {
      Term t = terms_of(c).front();
      t.body += "*" + pw;
      out.push_back(std::move(t));
    } else {
      const bool neg = leading_is_negative(c);
      out.push_back({neg, "(" + join(terms_of(neg ? -c : c)) + ")*" + pw});
    }
  }
  return out;
}

std::string join(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      if (terms[i].negative) s += "-";
    } else {
      s += terms[i].negative ? " - " : " + ";
    }
    s += terms[i].body;
  }
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MPoly parse() {
    MPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                     " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  MPoly expr() {
    MPoly acc;
    bool first = true;
    for (;;) {
      bool negative = false;
      if (accept('-')) {
        negative = true;
      } else if (!first && !accept('+')) {
        break;
      }
      MPoly t = term();
      acc += negative ? -t : t;
      first = false;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  MPoly factor() {
    MPoly base = primary();
    if (accept('^')) {
      const std::string e = digits();
      if (e.size() > 6) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  MPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      const std::string idx = digits();
      if (idx.size() > 6 || std::stoul(idx) == 0) fail("bad variable index");
      return MPoly::var(static_cast<int>(std::stoul(idx)));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = digits();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::string den = digits();
        return MPoly(Rational::parse(num + "/" + den));
      }
      return MPoly(Rational::parse(num));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const MPoly& f) { return join(terms_of(f)); }

MPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const MPoly& f) { return os << to_string(f); }

}  // namespace hermtri
