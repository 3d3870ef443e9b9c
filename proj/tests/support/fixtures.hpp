#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hermtri/primary.hpp"

namespace hermtri::testing {

inline MPoly P(const char* text) { return parse_poly(text); }
inline Rational Q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

inline PrimaryComponent simple(long coord, unsigned delta = 1) {
  PrimaryComponent c;
  c.point_coord = Rational(coord);
  c.delta = delta;
  return c;
}

/// Radical family over V = {(0,0), (0,1), (1,2), (1,3)}.
inline PrimaryFamily worked_bivariate() {
  PrimaryFamily f(2);
  const auto a0 = f.add_node(PrimaryFamily::kRoot, simple(0));
  const auto a1 = f.add_node(PrimaryFamily::kRoot, simple(1));
  f.add_node(a0, simple(0));
  f.add_node(a0, simple(1));
  f.add_node(a1, simple(2));
  f.add_node(a1, simple(3));
  return f;
}

/// Univariate {x^2, (x-1)^2}.
inline PrimaryFamily double_roots() {
  PrimaryFamily f(1);
  f.add_node(PrimaryFamily::kRoot, simple(0, 2));
  f.add_node(PrimaryFamily::kRoot, simple(1, 2));
  return f;
}

/// One point (2, -1, 3) with exponents (2, 2, 1) and a few mixed terms.
inline PrimaryFamily single_chain() {
  PrimaryFamily f(3);
  const auto a = f.add_node(PrimaryFamily::kRoot, simple(2, 2));
  PrimaryComponent c2 = simple(-1, 2);
  c2.ctable[{1, 1}] = Q(3, 2);
  c2.ctable[{1, 0}] = Q(-5);
  const auto b = f.add_node(a, c2);
  PrimaryComponent c3 = simple(3, 1);
  c3.ctable[{1, 1, 0}] = Q(7);
  c3.ctable[{0, 1, 0}] = Q(1, 3);
  f.add_node(b, c3);
  return f;
}

/// Random polynomial in x1..x_nvars with degree < max_deg in each variable.
inline MPoly random_poly(std::mt19937_64& rng, unsigned nvars, unsigned max_deg, unsigned terms, long bound = 9) {
  std::uniform_int_distribution<unsigned> deg(0, max_deg - 1);
  std::uniform_int_distribution<long> val(-bound, bound);
  std::uniform_int_distribution<long> den(1, 4);
  MPoly p;
  for (unsigned t = 0; t < terms; ++t) {
    std::vector<unsigned> e(nvars);
    for (auto& x : e) x = deg(rng);
    p += MPoly::monomial(e, Q(val(rng), den(rng)));
  }
  return p;
}

/// Corpus member i of the seeded acceptance corpus: n <= 3, fiber degrees
/// <= 6, chain multiplicity <= 8, coefficient and point sizes <= 16 bits.
inline GenSpec corpus_spec(unsigned i, std::uint64_t& seed_out) {
  std::mt19937_64 rng(0x5eed0000ULL + i);
  auto pick = [&rng](unsigned lo, unsigned hi) {
    return lo + static_cast<unsigned>(rng() % (hi - lo + 1));
  };
  GenSpec s;
  s.n = 1 + i % 3;
  for (unsigned l = 0; l < s.n; ++l) s.fibers.push_back(pick(1, 6));
  s.delta_min = 1;
  s.delta_max = pick(1, 4);
  s.max_mu = 8;
  s.coeff_bits = pick(1, 16);
  s.point_bits = pick(3, 16);
  seed_out = rng();
  return s;
}

}  // namespace hermtri::testing
