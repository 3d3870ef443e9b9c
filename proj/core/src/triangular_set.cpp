#include "hermtri/triangular_set.hpp"

#include <utility>

#include "hermtri/errors.hpp"

namespace hermtri {

TriangularSet::TriangularSet(std::vector<MPoly> polys) : polys_(std::move(polys)) { check(); }

void TriangularSet::check() {
  degrees_.assign(polys_.size(), 0);
  violations_.clear();
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    const int level = static_cast<int>(i + 1);
    const MPoly& p = polys_[i];
    const std::string name = "T" + std::to_string(level);
    if (p.top_var() != level) {
      violations_.push_back(name + " must have x" + std::to_string(level) +
                            " as its main variable (found top variable x" +
                            std::to_string(p.top_var()) + ")");
      continue;
    }
    degrees_[i] = p.degree(level);
    if (!(p.leading_coeff() == MPoly(1L))) {
      violations_.push_back(name + " is not monic in x" + std::to_string(level) +
                            " (leading coefficient " + to_string(p.leading_coeff()) + ")");
    }
  }
  // Reducedness needs the lower degrees, so it runs after the first pass.
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    const int level = static_cast<int>(i + 1);
    const MPoly& p = polys_[i];
    if (p.top_var() != level) continue;
    for (int j = 1; j < level; ++j) {
      const int dj = degrees_[j - 1];
      if (dj <= 0) continue;
      if (p.degree(j) >= dj) {
        violations_.push_back("tail of T" + std::to_string(level) + " not reduced mod T" +
                              std::to_string(j) + " (degree " + std::to_string(p.degree(j)) +
                              " in x" + std::to_string(j) + " >= d" + std::to_string(j) + "=" +
                              std::to_string(dj) + ")");
      }
    }
  }
}

TriangularSet TriangularSet::prefix(std::size_t m) const {
  return TriangularSet(std::vector<MPoly>(polys_.begin(), polys_.begin() + static_cast<std::ptrdiff_t>(m)));
}

TriangularSet TriangularSet::extended(MPoly p) const {
  std::vector<MPoly> v = polys_;
  v.push_back(std::move(p));
  return TriangularSet(std::move(v));
}

std::vector<std::string> validate_triangular(const TriangularSet& t) { return t.violations(); }

namespace {

void require_valid(const TriangularSet& t) {
  if (!t.valid()) throw MalformedInput("triangular set is malformed: " + t.violations().front());
}

// Top variable first, then coefficients; every intermediate product is
// reduced modulo the lower part of the set before it is accumulated.
MPoly reduce(const MPoly& f, std::span<const MPoly> t) {
  const int v = f.top_var();
  if (v == 0) return f;
  const auto cs = f.top_coeffs();
  std::vector<MPoly> c;
  c.reserve(cs.size());
  const std::size_t lower = static_cast<std::size_t>(v - 1) < t.size() ? v - 1 : t.size();
  for (const auto& k : cs) c.push_back(reduce(k, t.first(lower)));
  if (static_cast<std::size_t>(v) > t.size()) return MPoly::from_coeffs(v, std::move(c));

  const auto tv = t[v - 1].top_coeffs();
  const std::size_t d = tv.size() - 1;
  for (std::size_t k = c.size(); k-- > d;) {
    if (c[k].is_zero()) continue;
    const MPoly q = std::move(c[k]);
    c[k] = MPoly();
    for (std::size_t j = 0; j < d; ++j) {
      if (tv[j].is_zero()) continue;
      c[k - d + j] -= reduce(q * tv[j], t.first(v - 1));
    }
  }
  if (c.size() > d) c.resize(d);
  return MPoly::from_coeffs(v, std::move(c));
}

// Plain recursive division: at x_v, divide by the monic T_v over the
// coefficient ring, then recurse into the remainder's coefficients.
void divide(const MPoly& f, std::span<const MPoly> t, MPoly& rem, std::vector<MPoly>& quo) {
  const int v = f.top_var();
  if (v == 0) {
    rem = f;
    return;
  }
  if (static_cast<std::size_t>(v) > t.size()) {
    const auto cs = f.top_coeffs();
    std::vector<MPoly> rs(cs.size());
    const MPoly x = MPoly::var(v);
    MPoly xk(1L);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      std::vector<MPoly> qk(quo.size());
      divide(cs[k], t, rs[k], qk);
      for (std::size_t l = 0; l < quo.size(); ++l) {
        if (!qk[l].is_zero()) quo[l] += qk[l] * xk;
      }
      xk *= x;
    }
    rem = MPoly::from_coeffs(v, std::move(rs));
    return;
  }
  const MPoly& tv = t[v - 1];
  const int d = tv.degree(v);
  std::vector<MPoly> r = f.coeffs_in(v);
  std::vector<MPoly> q(r.size() > static_cast<std::size_t>(d) ? r.size() - d : 0);
  const auto tc = tv.top_coeffs();
  for (std::size_t k = r.size(); k-- > static_cast<std::size_t>(d);) {
    if (r[k].is_zero()) continue;
    const MPoly lead = std::move(r[k]);
    r[k] = MPoly();
    for (int j = 0; j < d; ++j) r[k - d + j] -= lead * tc[j];
    q[k - d] = lead;
  }
  if (r.size() > static_cast<std::size_t>(d)) r.resize(d);
  quo[v - 1] += MPoly::from_coeffs(v, std::move(q));
  const MPoly partial = MPoly::from_coeffs(v, std::move(r));
  divide(partial, t.first(v - 1), rem, quo);
}

}  // namespace

MPoly normal_form(const MPoly& f, const TriangularSet& t) {
  require_valid(t);
  return reduce(f, t.polys());
}

NormalFormWitness normal_form_with_quotients(const MPoly& f, const TriangularSet& t) {
  require_valid(t);
  NormalFormWitness w;
  w.quotients.assign(t.size(), MPoly());
  divide(f, t.polys(), w.remainder, w.quotients);
  return w;
}

MPoly mod_mul(const MPoly& f, const MPoly& g, const TriangularSet& t) { return normal_form(f * g, t); }

}  // namespace hermtri
