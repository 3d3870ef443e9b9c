#include "hermtri/interp.hpp"

#include <utility>

#include "family_cache.hpp"
#include "hermtri/errors.hpp"

namespace hermtri {

namespace {

using detail::FamilyCache;

void require_valid(const PrimaryFamily& f) {
  const FamilyCheck check = validate_family(f);
  if (!check.ok()) throw MalformedInput("invalid primary family: " + check.violations.front());
}

MPoly sibling_product(FamilyCache& cache, std::size_t child) {
  const PrimaryFamily& f = cache.family();
  const std::size_t parent = f.node(child).parent;
  const TriangularSet& base = cache.primary_set(parent);
  MPoly e(1L);
  for (std::size_t s : f.children(parent)) {
    if (s != child) e = normal_form(e * cache.expanded(s), base);
  }
  return e;
}

IdempotentSet build_set(FamilyCache& cache, std::size_t node) {
  const PrimaryFamily& f = cache.family();
  IdempotentSet set;
  set.node = node;
  set.level = f.node(node).depth + 1;
  set.algebra = cache.primary_set(node).extended(cache.branch_product(node));
  for (std::size_t child : f.children(node)) {
    IdempotentEntry entry;
    entry.child = child;
    entry.e = sibling_product(cache, child);
    entry.u = local_inverse(entry.e, cache.primary_set(child), f.point(child));
    entry.e_tilde = normal_form(entry.u * entry.e, set.algebra);
    set.entries.push_back(std::move(entry));
  }
  return set;
}

const IdempotentEntry& entry_for(const IdempotentSet& set, std::size_t child) {
  for (const auto& e : set.entries) {
    if (e.child == child) return e;
  }
  throw std::logic_error("idempotent entry missing for child");
}

}  // namespace

MPoly branch_product(const PrimaryFamily& f, std::size_t node) {
  FamilyCache cache(f);
  return cache.branch_product(node);
}

MPoly idempotent_e(const PrimaryFamily& f, std::size_t child) {
  FamilyCache cache(f);
  return sibling_product(cache, child);
}

MPoly cofactor_u(const PrimaryFamily& f, std::size_t child) {
  FamilyCache cache(f);
  return local_inverse(sibling_product(cache, child), cache.primary_set(child), f.point(child));
}

MPoly idempotent_tilde(const PrimaryFamily& f, std::size_t child) {
  FamilyCache cache(f);
  return entry_for(build_set(cache, f.node(child).parent), child).e_tilde;
}

IdempotentSet idempotent_set(const PrimaryFamily& f, std::size_t node) {
  FamilyCache cache(f);
  return build_set(cache, node);
}

ReconstructionResult reconstruct(const PrimaryFamily& f) {
  require_valid(f);
  FamilyCache cache(f);
  const unsigned n = f.num_vars();
  ReconstructionResult out;

  // One idempotent set per internal node, depth-first; set_of maps node id
  // to its set for the chain accumulation below.
  std::vector<std::size_t> set_of(f.size(), f.size());
  std::vector<std::size_t> internal{PrimaryFamily::kRoot};
  for (std::size_t id : f.depth_first()) {
    if (f.node(id).depth < n) internal.push_back(id);
  }
  for (std::size_t id : internal) {
    set_of[id] = out.idempotents.size();
    out.idempotents.push_back(build_set(cache, id));
  }

  const MPoly& t1 = cache.branch_product(PrimaryFamily::kRoot);
  std::vector<MPoly> t_polys{t1};
  out.N.push_back(t1);
  out.F.emplace_back(1L);

  // Memoized chain products E~(alpha) = prod e~ and E(alpha) = prod e along
  // the root path, each reduced modulo T_1..T_depth.
  std::vector<MPoly> chain_tilde(f.size()), chain_plain(f.size());
  chain_tilde[PrimaryFamily::kRoot] = MPoly(1L);
  chain_plain[PrimaryFamily::kRoot] = MPoly(1L);

  for (unsigned level = 1; level < n; ++level) {
    const TriangularSet base(t_polys);
    MPoly t_next, n_next, f_next;
    for (std::size_t id : f.nodes_at_depth(level)) {
      const std::size_t parent = f.node(id).parent;
      const IdempotentEntry& entry = entry_for(out.idempotents[set_of[parent]], id);
      chain_tilde[id] = normal_form(chain_tilde[parent] * entry.e_tilde, base);
      chain_plain[id] = normal_form(chain_plain[parent] * entry.e, base);
      const MPoly& bp = cache.branch_product(id);
      t_next += chain_tilde[id] * bp;
      n_next += chain_plain[id] * bp;
      f_next += chain_plain[id];
    }
    t_polys.push_back(normal_form(t_next, base));
    out.N.push_back(normal_form(n_next, base));
    out.F.push_back(normal_form(f_next, base));
  }
  out.T = TriangularSet(std::move(t_polys));
  return out;
}

TriangularSet reconstruct_T(const PrimaryFamily& f) { return reconstruct(f).T; }

std::vector<MPoly> reconstruct_N(const PrimaryFamily& f) { return reconstruct(f).N; }

std::vector<MPoly> compute_F(const PrimaryFamily& f) { return reconstruct(f).F; }

}  // namespace hermtri
