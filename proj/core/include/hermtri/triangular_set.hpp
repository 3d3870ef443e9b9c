#pragma once

#include <span>
#include <string>
#include <vector>

#include "hermtri/mpoly.hpp"

namespace hermtri {

/// Ordered family (T1(x1), T2(x1,x2), ..., Tm(x1..xm)). Invariants are
/// checked once at construction; violations are kept as data and exposed
/// through violations(). Reduction routines refuse sets with violations.
class TriangularSet {
 public:
  TriangularSet() = default;
  explicit TriangularSet(std::vector<MPoly> polys);

  std::size_t size() const { return polys_.size(); }
  bool empty() const { return polys_.empty(); }

  /// T_{level}, 1-based.
  const MPoly& at(std::size_t level) const { return polys_.at(level - 1); }
  std::span<const MPoly> polys() const { return polys_; }

  /// (d1, ..., dm); entries for malformed members are 0.
  const std::vector<int>& degrees() const { return degrees_; }

  bool valid() const { return violations_.empty(); }
  const std::vector<std::string>& violations() const { return violations_; }

  /// (T1, ..., Tm) for m <= size().
  TriangularSet prefix(std::size_t m) const;

  /// Returns a copy with p appended as T_{size()+1}.
  TriangularSet extended(MPoly p) const;

  friend bool operator==(const TriangularSet& a, const TriangularSet& b) { return a.polys_ == b.polys_; }

 private:
  void check();

  std::vector<MPoly> polys_;
  std::vector<int> degrees_;
  std::vector<std::string> violations_;
};

/// Empty when T is a monic, reduced triangular set; otherwise one message per
/// violated invariant.
std::vector<std::string> validate_triangular(const TriangularSet& t);

/// The unique r with f = r mod <T> and r reduced w.r.t. every T_l. Variables
/// above x_m (m = |T|) are left alone; their coefficients are reduced.
/// Throws MalformedInput if T has violations.
MPoly normal_form(const MPoly& f, const TriangularSet& t);

/// Normal form together with ideal-membership witnesses:
/// f = remainder + sum_l quotients[l-1] * T_l exactly.
struct NormalFormWitness {
  MPoly remainder;
  std::vector<MPoly> quotients;
};

/// Same remainder as normal_form, obtained by plain recursive division so the
/// quotients can be recorded.
NormalFormWitness normal_form_with_quotients(const MPoly& f, const TriangularSet& t);

/// normal_form(f * g, T).
MPoly mod_mul(const MPoly& f, const MPoly& g, const TriangularSet& t);

}  // namespace hermtri
