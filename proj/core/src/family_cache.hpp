#pragma once

#include <optional>
#include <vector>

#include "hermtri/primary.hpp"

namespace hermtri::detail {

// Memoized per-node data of a family: expanded generators, primary sets,
// branch products.
class FamilyCache {
 public:
  explicit FamilyCache(const PrimaryFamily& f)
      : fam_(f), expanded_(f.size()), sets_(f.size()), branch_(f.size()) {}

  const PrimaryFamily& family() const { return fam_; }

  const MPoly& expanded(std::size_t id) {
    if (!expanded_[id]) expanded_[id] = fam_.expanded(id);
    return *expanded_[id];
  }

  const TriangularSet& primary_set(std::size_t id) {
    if (!sets_[id]) sets_[id] = fam_.primary_set(id);
    return *sets_[id];
  }

  const MPoly& branch_product(std::size_t id) {
    if (!branch_[id]) {
      const TriangularSet& base = primary_set(id);
      MPoly p(1L);
      for (std::size_t c : fam_.children(id)) p = normal_form(p * expanded(c), base);
      branch_[id] = std::move(p);
    }
    return *branch_[id];
  }

 private:
  const PrimaryFamily& fam_;
  std::vector<std::optional<MPoly>> expanded_;
  std::vector<std::optional<TriangularSet>> sets_;
  std::vector<std::optional<MPoly>> branch_;
};

}  // namespace hermtri::detail
