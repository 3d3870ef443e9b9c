#include <algorithm>
#include <functional>
#include <sstream>

#include "family_cache.hpp"
#include "hermtri/errors.hpp"
#include "hermtri/interp.hpp"

namespace hermtri {

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed || c.skipped; });
}

const CheckResult* VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed && !c.skipped) return &c;
  }
  return nullptr;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL")) << "  " << c.name;
    if (c.level > 0) os << " level " << c.level;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << (all_passed() ? "all checks passed" : "verification FAILED") << "\n";
  return os.str();
}

namespace {

using detail::FamilyCache;

std::string path_text(const PrimaryFamily& f, std::size_t id) {
  const auto p = f.point(id);
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].str();
  return s + ")";
}

// Runs body, turning exceptions into a failed check. body returns the list
// of failure descriptions (empty = pass).
CheckResult run_check(std::string name, unsigned level, const std::function<std::vector<std::string>()>& body) {
  CheckResult c;
  c.name = std::move(name);
  c.level = level;
  try {
    const auto failures = body();
    c.passed = failures.empty();
    for (std::size_t i = 0; i < failures.size() && i < 4; ++i) c.detail += (i ? "; " : "") + failures[i];
    if (failures.size() > 4) c.detail += "; ... (" + std::to_string(failures.size()) + " total)";
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = std::string("exception: ") + e.what();
  }
  return c;
}

CheckResult skipped(std::string name, unsigned level, std::string why) {
  CheckResult c;
  c.name = std::move(name);
  c.level = level;
  c.skipped = true;
  c.detail = std::move(why);
  return c;
}

}  // namespace

VerificationReport verify_all(const PrimaryFamily& f, const ReconstructionResult& r) {
  VerificationReport report;
  const unsigned n = f.num_vars();

  const FamilyCheck fam_check = validate_family(f);
  report.checks.push_back(run_check("family", 0, [&] { return fam_check.violations; }));
  if (!fam_check.ok()) return report;

  report.checks.push_back(run_check("shape", 0, [&] {
    std::vector<std::string> v;
    if (r.T.size() != n) v.push_back("T has " + std::to_string(r.T.size()) + " members, expected " + std::to_string(n));
    if (r.N.size() != n) v.push_back("N has " + std::to_string(r.N.size()) + " members, expected " + std::to_string(n));
    if (r.F.size() != n) v.push_back("F has " + std::to_string(r.F.size()) + " members, expected " + std::to_string(n));
    return v;
  }));
  if (!report.checks.back().passed) return report;
  report.checks.push_back(run_check("triangular", 0, [&] { return validate_triangular(r.T); }));

  FamilyCache cache(f);

  // (a) T_{l+1} reduced at each node's primary ideal equals its branch product.
  for (unsigned level = 1; level <= n; ++level) {
    report.checks.push_back(run_check("factorization", level, [&] {
      std::vector<std::string> bad;
      for (std::size_t id : f.nodes_at_depth(level - 1)) {
        if (!(normal_form(r.T.at(level), cache.primary_set(id)) == cache.branch_product(id))) {
          bad.push_back("node " + path_text(f, id));
        }
      }
      return bad;
    }));
  }

  std::vector<IdempotentSet> sets = r.idempotents;
  if (sets.empty()) {
    sets.push_back(idempotent_set(f, PrimaryFamily::kRoot));
    for (std::size_t id : f.depth_first()) {
      if (f.node(id).depth < n) sets.push_back(idempotent_set(f, id));
    }
  }

  // (b) complete family of orthogonal idempotents in each A_alpha.
  for (unsigned level = 1; level <= n; ++level) {
    report.checks.push_back(run_check("idempotents", level, [&] {
      std::vector<std::string> bad;
      for (const auto& set : sets) {
        if (set.level != level) continue;
        const std::string at = "node " + path_text(f, set.node);
        MPoly sum;
        for (std::size_t i = 0; i < set.entries.size(); ++i) {
          const auto& ei = set.entries[i];
          sum += ei.e_tilde;
          if (!(mod_mul(ei.e_tilde, ei.e_tilde, set.algebra) == normal_form(ei.e_tilde, set.algebra))) {
            bad.push_back(at + ": e~ of child " + path_text(f, ei.child) + " is not idempotent");
          }
          const int du = ei.u.degree(static_cast<int>(level));
          if (du >= static_cast<int>(f.node(ei.child).component.delta)) {
            bad.push_back(at + ": deg u = " + std::to_string(du) + " >= delta for child " + path_text(f, ei.child));
          }
          for (std::size_t j = i + 1; j < set.entries.size(); ++j) {
            if (!mod_mul(ei.e_tilde, set.entries[j].e_tilde, set.algebra).is_zero()) {
              bad.push_back(at + ": children " + path_text(f, ei.child) + " and " +
                            path_text(f, set.entries[j].child) + " not orthogonal");
            }
          }
        }
        if (!(normal_form(sum, set.algebra) == MPoly(1L))) bad.push_back(at + ": idempotents do not sum to 1");
      }
      return bad;
    }));
  }

  // (c) local congruences: e~(gamma) = 1 at gamma, e and e~ vanish at siblings.
  for (unsigned level = 1; level <= n; ++level) {
    report.checks.push_back(run_check("local_congruences", level, [&] {
      std::vector<std::string> bad;
      for (const auto& set : sets) {
        if (set.level != level) continue;
        for (const auto& ei : set.entries) {
          if (!(normal_form(ei.e_tilde, cache.primary_set(ei.child)) == MPoly(1L))) {
            bad.push_back("e~ of " + path_text(f, ei.child) + " is not 1 at its own primary");
          }
          for (const auto& other : set.entries) {
            if (other.child == ei.child) continue;
            const TriangularSet& there = cache.primary_set(other.child);
            if (!normal_form(ei.e, there).is_zero() || !normal_form(ei.e_tilde, there).is_zero()) {
              bad.push_back("e of " + path_text(f, ei.child) + " does not vanish at " + path_text(f, other.child));
            }
          }
        }
      }
      return bad;
    }));
  }

  // (d) F_l T_l = N_l modulo T_{<l}.
  for (unsigned level = 1; level <= n; ++level) {
    report.checks.push_back(run_check("cofactor_identity", level, [&] {
      const TriangularSet lower = r.T.prefix(level - 1);
      const MPoly residue = normal_form(r.F[level - 1] * r.T.at(level) - r.N[level - 1], lower);
      std::vector<std::string> bad;
      if (!residue.is_zero()) bad.push_back("F*T - N reduces to " + to_string(residue));
      return bad;
    }));
  }

  // (e) radical case: F_l = prod_{i<l} dT_i/dx_i modulo T_{<l}.
  bool radical = true;
  for (std::size_t id : f.depth_first()) radical = radical && f.node(id).component.delta == 1;
  for (unsigned level = 1; level <= n; ++level) {
    if (!radical) {
      report.checks.push_back(skipped("radical_derivative", level, "family is not radical"));
      continue;
    }
    report.checks.push_back(run_check("radical_derivative", level, [&] {
      const TriangularSet lower = r.T.prefix(level - 1);
      MPoly jac(1L);
      for (unsigned i = 1; i < level; ++i) jac = normal_form(jac * diff(r.T.at(i), static_cast<int>(i)), lower);
      std::vector<std::string> bad;
      if (!normal_form(r.F[level - 1] - jac, lower).is_zero()) bad.push_back("F differs from the Jacobian product");
      return bad;
    }));
  }
  return report;
}

}  // namespace hermtri
