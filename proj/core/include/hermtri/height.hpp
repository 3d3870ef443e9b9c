#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "hermtri/interp.hpp"
#include "hermtri/mpoly.hpp"
#include "hermtri/primary.hpp"

namespace hermtri {

/// Max scalar height over the coefficients of f; 0 for the zero polynomial.
std::size_t poly_height(const MPoly& f);

/// Whether the monic leading term (x_l - b_l)^delta joins the max defining a
/// component height. It enters with coefficient height 0 (log 1), i.e. it
/// contributes delta * h(b_l).
enum class LeadingTerm { kInclude, kExclude };

const char* to_string(LeadingTerm c);

/// H_l(beta) = max over ctable entries of h(c[i]) + sum_j i_j h(beta_j).
std::size_t component_height(const PrimaryFamily& f, std::size_t node,
                             LeadingTerm convention = LeadingTerm::kInclude);

/// Per-level aggregates: H = sum of component heights at depth l, L = max
/// over depth-l chains of the summed heights along the chain, mu = max chain
/// multiplicity prod delta_i, D = d_1 + ... + d_l. Level 0 gives (0, 0, 1, 0).
struct Aggregates {
  mpz_class H;
  mpz_class L;
  mpz_class mu;
  mpz_class D;
};

Aggregates family_aggregates(const PrimaryFamily& f, unsigned level,
                             LeadingTerm convention = LeadingTerm::kInclude);

/// Dominating terms of the N- and T-bounds with the soft-O replaced by its
/// argument. These are indicators, not certified bounds.
struct BoundIndicators {
  mpz_class bn;
  mpz_class bt;
};

/// bn = H_next + L * D_next * mu, bt = D_next * H_next + L * D_next^2 * mu.
BoundIndicators bound_indicators(const mpz_class& h_next, const mpz_class& l, const mpz_class& d_next,
                                 const mpz_class& mu);

/// Indicators for T_{l+1} and N_{l+1}; requires l + 1 <= n.
BoundIndicators bound_indicators(const PrimaryFamily& f, unsigned level,
                                 LeadingTerm convention = LeadingTerm::kInclude);

struct HeightRow {
  unsigned level = 0;
  mpz_class d, D, mu, H, L;
  std::size_t hT = 0;
  std::size_t hN = 0;
  mpz_class BN, BT;
  Rational ratio;        // hT / hN; zero when hN == 0
  bool ratio_defined = true;
  bool violN = false;    // hN > BN
  bool violT = false;    // hT > BT
};

struct HeightReport {
  LeadingTerm convention = LeadingTerm::kInclude;
  std::vector<HeightRow> rows;
};

HeightReport measure(const PrimaryFamily& f, const ReconstructionResult& r,
                     LeadingTerm convention = LeadingTerm::kInclude);

/// Header "level,d,D,mu,H,L,hT,hN,BN,BT,ratio,violN,violT" then one row per
/// level; ratio is an exact fraction.
std::string report_csv(const HeightReport& report);
std::string report_markdown(const HeightReport& report);
std::string report_json(const HeightReport& report);

}  // namespace hermtri
