#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hermtri/mpoly.hpp"
#include "hermtri/primary.hpp"
#include "hermtri/triangular_set.hpp"

namespace hermtri {

/// Idempotent data for one child gamma of a node alpha at depth l:
///   e       product of the sibling generators t_{l+1}^(beta), beta != gamma,
///           reduced modulo alpha's primary set;
///   u       inverse of e modulo gamma's primary set (deg_{x_{l+1}} u < delta);
///   e_tilde u*e reduced in the algebra A_alpha.
struct IdempotentEntry {
  std::size_t child = 0;
  MPoly e;
  MPoly u;
  MPoly e_tilde;
};

/// All children of one node. algebra is (t_1..t_l of alpha, T_{l+1}[alpha]),
/// the modulus of A_alpha; its last member is the node's branch product.
struct IdempotentSet {
  std::size_t node = 0;
  unsigned level = 1;  // l + 1
  TriangularSet algebra;
  std::vector<IdempotentEntry> entries;

  const MPoly& branch_product() const { return algebra.at(level); }
};

/// T, the non-monic family N and the cofactors F (F_l T_l = N_l mod T_{<l}).
/// idempotents holds one set per internal node in depth-first order (may be
/// empty for results loaded from disk).
struct ReconstructionResult {
  TriangularSet T;
  std::vector<MPoly> N;
  std::vector<MPoly> F;
  std::vector<IdempotentSet> idempotents;
};

/// T_{l+1}[alpha]: product of the children's generators modulo alpha's
/// primary set. For the root this is T_1.
MPoly branch_product(const PrimaryFamily& f, std::size_t node);

MPoly idempotent_e(const PrimaryFamily& f, std::size_t child);
MPoly cofactor_u(const PrimaryFamily& f, std::size_t child);
MPoly idempotent_tilde(const PrimaryFamily& f, std::size_t child);

IdempotentSet idempotent_set(const PrimaryFamily& f, std::size_t node);

/// Full reconstruction. Each level is the chain sum of idempotent products
/// times branch products, reduced modulo the already built T_1..T_l.
/// Throws MalformedInput when the family does not validate.
ReconstructionResult reconstruct(const PrimaryFamily& f);

TriangularSet reconstruct_T(const PrimaryFamily& f);
std::vector<MPoly> reconstruct_N(const PrimaryFamily& f);
std::vector<MPoly> compute_F(const PrimaryFamily& f);

/// One line of the verification report. level is the x-level the check is
/// about (0 for global checks).
struct CheckResult {
  std::string name;
  unsigned level = 0;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  /// First failing check, or nullptr.
  const CheckResult* first_failure() const;
  std::string to_text() const;
};

/// Exact checks, grouped per level:
///   factorization      T_{l+1} mod alpha's primary set == branch product
///   idempotents        sum = 1, pairwise products 0, squares, deg u < delta
///   local_congruences  e_tilde = 1 at its own primary, e and e_tilde = 0 at siblings
///   cofactor_identity  F_l T_l - N_l = 0 mod T_{<l}
///   radical_derivative F_l = prod_{i<l} dT_i/dx_i mod T_{<l} (all delta = 1 only)
/// T, N and F are taken from r; idempotents from r when present.
VerificationReport verify_all(const PrimaryFamily& f, const ReconstructionResult& r);

/// JSON with the text forms of T, N, F per level; audit adds per-node branch
/// products and idempotents.
std::string result_to_json(const PrimaryFamily& f, const ReconstructionResult& r, bool audit);

/// Reads T, N and F back (audit data is ignored). Throws ParseError.
ReconstructionResult result_from_json(std::string_view text);

}  // namespace hermtri
