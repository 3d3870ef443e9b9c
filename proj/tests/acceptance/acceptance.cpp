// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles/interpolation_oracles.hpp"
#include "../support/fixtures.hpp"
#include "hermtri/height.hpp"
#include "hermtri/interp.hpp"

using namespace hermtri;
using hermtri::testing::P;
using hermtri::testing::Q;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    passed = false;
    if (notes.size() < 8) notes.push_back("failure: " + why);
  }
  void note(const std::string& text) { notes.push_back(text); }
};

struct CorpusMember {
  std::string name;
  PrimaryFamily family;
  ReconstructionResult result;
};

bool is_radical(const PrimaryFamily& f) {
  for (std::size_t id : f.depth_first()) {
    if (f.node(id).component.delta != 1) return false;
  }
  return true;
}

std::string label(const std::string& corpus, unsigned i) { return corpus + "#" + std::to_string(i); }

std::vector<CorpusMember> build_corpus() {
  std::vector<CorpusMember> out;
  for (unsigned i = 0; i < 50; ++i) {
    std::uint64_t seed = 0;
    const GenSpec spec = hermtri::testing::corpus_spec(i, seed);
    PrimaryFamily fam = gen_family(spec, seed);
    ReconstructionResult r = reconstruct(fam);
    out.push_back({label("corpus", i), std::move(fam), std::move(r)});
  }
  return out;
}

// Radical families with at most 20 points: n = 1 and n = 2.
std::vector<CorpusMember> build_radical_corpus() {
  std::vector<CorpusMember> out;
  const std::vector<std::vector<unsigned>> shapes{{1},    {7},    {13},   {20},   {1, 1}, {2, 2}, {4, 5},
                                                  {5, 4}, {2, 10}, {10, 2}, {3, 6}, {6, 3}, {1, 20}, {20, 1},
                                                  {3, 3}, {4, 4}, {2, 7}, {6, 2}, {5, 3}, {3, 5}};
  for (unsigned i = 0; i < shapes.size(); ++i) {
    GenSpec s;
    s.n = static_cast<unsigned>(shapes[i].size());
    s.fibers = shapes[i];
    s.delta_min = s.delta_max = 1;
    s.coeff_bits = 16;
    s.point_bits = 6 + i % 11;
    PrimaryFamily fam = gen_family(s, 9000 + i);
    ReconstructionResult r = reconstruct(fam);
    out.push_back({label("radical", i), std::move(fam), std::move(r)});
  }
  // A few trivariate radical families for the derivative identity.
  for (unsigned i = 0; i < 5; ++i) {
    GenSpec s;
    s.n = 3;
    s.fibers = {2 + i % 3, 3, 2};
    s.point_bits = 8;
    PrimaryFamily fam = gen_family(s, 9100 + i);
    ReconstructionResult r = reconstruct(fam);
    out.push_back({label("radical3", i), std::move(fam), std::move(r)});
  }
  return out;
}

Outcome criterion_idempotents(const std::vector<CorpusMember>& corpus) {
  Outcome o;
  std::size_t sets = 0;
  std::size_t entries = 0;
  for (const auto& m : corpus) {
    for (const auto& set : m.result.idempotents) {
      ++sets;
      MPoly sum;
      for (std::size_t i = 0; i < set.entries.size(); ++i) {
        const auto& ei = set.entries[i];
        ++entries;
        sum += ei.e_tilde;
        if (!(mod_mul(ei.e_tilde, ei.e_tilde, set.algebra) == normal_form(ei.e_tilde, set.algebra))) {
          o.fail(m.name + ": square of an idempotent differs");
        }
        if (ei.u.degree(static_cast<int>(set.level)) >= static_cast<int>(m.family.node(ei.child).component.delta)) {
          o.fail(m.name + ": deg u >= delta");
        }
        for (std::size_t j = i + 1; j < set.entries.size(); ++j) {
          if (!mod_mul(ei.e_tilde, set.entries[j].e_tilde, set.algebra).is_zero()) {
            o.fail(m.name + ": idempotents not orthogonal");
          }
        }
      }
      if (!(normal_form(sum, set.algebra) == MPoly(1L))) o.fail(m.name + ": idempotents do not sum to 1");
    }
  }
  unsigned max_n = 0, max_d = 0, max_mu = 0, radical_count = 0;
  std::size_t max_bits = 0;
  for (const auto& m : corpus) {
    max_n = std::max(max_n, m.family.num_vars());
    for (unsigned d : validate_family(m.family).degrees) max_d = std::max(max_d, d);
    radical_count += is_radical(m.family);
    for (std::size_t id : m.family.depth_first()) {
      unsigned mu = 1;
      for (unsigned d : m.family.deltas(id)) mu *= d;
      max_mu = std::max(max_mu, mu);
      const auto& c = m.family.node(id).component;
      max_bits = std::max(max_bits, rat_bitsize(c.point_coord));
      for (const auto& kv : c.ctable) max_bits = std::max(max_bits, rat_bitsize(kv.second));
    }
  }
  o.note(std::to_string(corpus.size()) + " families (" + std::to_string(radical_count) + " radical), max n " +
         std::to_string(max_n) + ", max d " + std::to_string(max_d) + ", max mu " + std::to_string(max_mu) +
         ", max bits " + std::to_string(max_bits));
  o.note(std::to_string(sets) + " algebras, " + std::to_string(entries) + " idempotents");
  return o;
}

Outcome criterion_factorization(const std::vector<CorpusMember>& corpus) {
  Outcome o;
  std::size_t nodes = 0;
  for (const auto& m : corpus) {
    const unsigned n = m.family.num_vars();
    std::vector<std::size_t> ids{PrimaryFamily::kRoot};
    for (std::size_t id : m.family.depth_first()) {
      if (m.family.node(id).depth < n) ids.push_back(id);
    }
    for (std::size_t id : ids) {
      ++nodes;
      const unsigned depth = m.family.node(id).depth;
      const MPoly reduced = normal_form(m.result.T.at(depth + 1), m.family.primary_set(id));
      if (!(reduced == branch_product(m.family, id))) o.fail(m.name + ": node at depth " + std::to_string(depth));
    }
  }
  o.note(std::to_string(nodes) + " nodes checked");
  return o;
}

Outcome criterion_cofactor(const std::vector<CorpusMember>& corpus) {
  Outcome o;
  std::size_t levels = 0;
  for (const auto& m : corpus) {
    for (unsigned l = 1; l <= m.result.T.size(); ++l) {
      ++levels;
      const TriangularSet lower = m.result.T.prefix(l - 1);
      if (!normal_form(m.result.F[l - 1] * m.result.T.at(l) - m.result.N[l - 1], lower).is_zero()) {
        o.fail(m.name + ": level " + std::to_string(l));
      }
    }
  }
  o.note(std::to_string(levels) + " levels checked");
  return o;
}

MPoly jacobian_product(const TriangularSet& t, unsigned upto, const TriangularSet& modulus) {
  MPoly prod(1L);
  for (unsigned i = 1; i <= upto; ++i) prod = normal_form(prod * diff(t.at(i), static_cast<int>(i)), modulus);
  return prod;
}

Outcome criterion_radical(const std::vector<CorpusMember>& corpus, const std::vector<CorpusMember>& radical) {
  Outcome o;
  std::size_t fams = 0;
  std::size_t levels = 0;
  auto derivative_check = [&](const CorpusMember& m) {
    ++fams;
    // F_1 = 1 is the empty product; F_{l+1} pairs with dT_1/dx_1 ... dT_l/dx_l.
    for (unsigned l = 1; l <= m.result.T.size(); ++l) {
      ++levels;
      const TriangularSet lower = m.result.T.prefix(l - 1);
      if (!normal_form(m.result.F[l - 1] - jacobian_product(m.result.T, l - 1, lower), m.result.T).is_zero()) {
        o.fail(m.name + ": F_" + std::to_string(l) + " differs from the Jacobian product");
      }
    }
  };
  for (const auto& m : corpus) {
    if (is_radical(m.family)) derivative_check(m);
  }
  for (const auto& m : radical) derivative_check(m);

  std::size_t oracle_cases = 0;
  for (const auto& m : radical) {
    const unsigned n = m.family.num_vars();
    if (n > 2 || m.family.nodes_at_depth(n).size() > 20) continue;
    ++oracle_cases;
    const auto degrees = validate_family(m.family).degrees;
    for (unsigned l = 1; l <= n; ++l) {
      const auto t = oracle::lagrange_T(m.family, degrees, l);
      if (!t) {
        o.fail(m.name + ": oracle system singular at level " + std::to_string(l));
      } else if (!(*t == m.result.T.at(l))) {
        o.fail(m.name + ": T_" + std::to_string(l) + " differs from the Lagrange oracle");
      }
    }
  }

  // Diagnostic only: the product up to and including dT_l/dx_l does not match
  // F_l on the worked family (F_2 = 2*x1 - 1 has no x2 term).
  const auto biv = hermtri::testing::worked_bivariate();
  const auto rb = reconstruct(biv);
  const bool inclusive_holds = normal_form(rb.F[1] - jacobian_product(rb.T, 2, rb.T), rb.T).is_zero();
  o.note(std::to_string(fams) + " radical families, " + std::to_string(levels) + " levels; " +
         std::to_string(oracle_cases) + " Lagrange oracle cases");
  o.note(std::string("index check on the worked family: F_2 = dT1/dx1 ") +
         (rb.F[1] == diff(rb.T.at(1), 1) ? "holds" : "FAILS") + ", F_2 = dT1/dx1*dT2/dx2 mod T " +
         (inclusive_holds ? "holds" : "does not hold"));
  if (oracle_cases < 10) o.fail("too few oracle cases");
  return o;
}

Outcome criterion_hermite() {
  Outcome o;
  unsigned instances = 0;
  unsigned max_delta = 0;
  for (std::uint64_t seed = 1; seed <= 24; ++seed) {
    GenSpec s;
    s.n = 1;
    s.fibers = {2 + static_cast<unsigned>(seed % 11)};
    s.delta_min = 1;
    s.delta_max = 4;
    s.point_bits = 16;
    const auto fam = gen_family(s, 7000 + seed);
    const auto kids = fam.children(PrimaryFamily::kRoot);
    std::vector<oracle::HermiteNode> nodes;
    for (std::size_t c : kids) {
      nodes.push_back({fam.node(c).component.point_coord, fam.node(c).component.delta});
      max_delta = std::max(max_delta, fam.node(c).component.delta);
    }
    const auto r = reconstruct(fam);
    ++instances;
    const auto t1 = oracle::hermite_T1(nodes);
    if (!t1 || !(*t1 == r.T.at(1))) o.fail("seed " + std::to_string(seed) + ": T_1 differs");
    if (r.idempotents.size() != 1) {
      o.fail("seed " + std::to_string(seed) + ": expected one idempotent set");
      continue;
    }
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const auto e = oracle::hermite_idempotent(nodes, i);
      const auto& entry = r.idempotents.front().entries.at(i);
      if (entry.child != kids[i]) o.fail("seed " + std::to_string(seed) + ": idempotent order");
      if (!e || !(*e == entry.e_tilde)) o.fail("seed " + std::to_string(seed) + ": idempotent differs");
    }
  }
  o.note(std::to_string(instances) + " instances, largest delta " + std::to_string(max_delta));
  if (max_delta < 4) o.fail("no instance reached delta 4");
  return o;
}

Outcome criterion_golden() {
  Outcome o;
  const auto biv = hermtri::testing::worked_bivariate();
  const auto r = reconstruct(biv);
  if (!(r.T.at(2) == P("x2^2 - (1 + 4*x1)*x2 + 6*x1"))) o.fail("T_2 = " + to_string(r.T.at(2)));
  if (!(r.N[1] == P("(2*x1 - 1)*x2^2 + (1 - 6*x1)*x2 + 6*x1"))) o.fail("N_2 = " + to_string(r.N[1]));
  if (!(r.F[1] == P("2*x1 - 1"))) o.fail("F_2 = " + to_string(r.F[1]));
  const auto uni = hermtri::testing::double_roots();
  const std::size_t g0 = uni.children(PrimaryFamily::kRoot).front();
  const MPoly e = idempotent_tilde(uni, g0);
  if (!(e == P("2*x1^3 - 3*x1^2 + 1"))) o.fail("e~_1(0) = " + to_string(e));
  o.note("T_2 = " + to_string(r.T.at(2)) + "; N_2 = " + to_string(r.N[1]) + "; F_2 = " + to_string(r.F[1]) +
         "; e~_1(0) = " + to_string(e));
  return o;
}

Outcome criterion_heights() {
  Outcome o;
  GenSpec s;
  s.n = 2;
  s.fibers = {6, 6};
  s.delta_min = 1;
  s.delta_max = 3;
  s.coeff_bits = 16;
  s.point_bits = 16;
  Rational ratio_sum;
  unsigned rows = 0;
  unsigned viol_n = 0;
  unsigned viol_t = 0;
  bool mixed = false;
  for (std::uint64_t seed = 42; seed < 52; ++seed) {
    const auto fam = gen_family(s, seed);
    for (std::size_t id : fam.depth_first()) mixed = mixed || fam.node(id).component.delta > 1;
    const auto r = reconstruct(fam);
    const auto rep = measure(fam, r);
    const std::string csv = report_csv(rep);
    const auto fam2 = gen_family(s, seed);
    if (report_csv(measure(fam2, reconstruct(fam2))) != csv ||
        report_markdown(measure(fam2, reconstruct(fam2))) != report_markdown(rep)) {
      o.fail("seed " + std::to_string(seed) + ": report not deterministic");
    }
    for (const auto& row : rep.rows) {
      ++rows;
      if (row.BN > row.BT) o.fail("seed " + std::to_string(seed) + ": BN > BT at level " + std::to_string(row.level));
      viol_n += row.violN;
      viol_t += row.violT;
    }
    const auto& last = rep.rows.back();
    if (!last.ratio_defined) {
      o.fail("seed " + std::to_string(seed) + ": h(N_2) = 0");
      continue;
    }
    ratio_sum += last.ratio;
    std::ostringstream line;
    line << "seed " << seed << ": h(T2) = " << last.hT << ", h(N2) = " << last.hN << ", BN = " << last.BN
         << ", BT = " << last.BT << ", violN = " << last.violN << ", violT = " << last.violT;
    o.note(line.str());
  }
  const Rational mean = ratio_sum / Rational(10);
  if (mean < Rational(1)) o.fail("mean ratio " + mean.str() + " < 1");
  if (!mixed) o.fail("no exponent above 1 in the pinned corpus");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", mean.raw().get_d());
  o.note("mean h(T2)/h(N2) = " + mean.str() + " ~ " + buf + "; violation flags over " + std::to_string(rows) +
         " rows: violN " + std::to_string(viol_n) + ", violT " + std::to_string(viol_t) +
         " (indicator, not certified bound)");
  return o;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  struct Entry {
    const char* title;
    std::function<Outcome()> run;
  };
  const auto t0 = clock::now();
  const auto corpus = build_corpus();
  const auto radical = build_radical_corpus();
  const double corpus_secs = std::chrono::duration<double>(clock::now() - t0).count();
  std::cout << "corpus: 50 generated families + " << radical.size() << " radical families reconstructed in "
            << corpus_secs << " s\n";

  const std::vector<Entry> entries{
      {"criterion 1 (idempotent suite on the 50-family corpus)", [&] { return criterion_idempotents(corpus); }},
      {"criterion 2 (factorization round trip at every node)", [&] { return criterion_factorization(corpus); }},
      {"criterion 3 (F*T = N modulo the lower triangular set)", [&] { return criterion_cofactor(corpus); }},
      {"criterion 4 (radical derivative identity and Lagrange oracle)",
       [&] { return criterion_radical(corpus, radical); }},
      {"criterion 5 (Hermite oracle, n = 1)", criterion_hermite},
      {"criterion 6 (golden micro-examples)", criterion_golden},
      {"criterion 7 (height report on the pinned n = 2, d = (6,6) corpus)", criterion_heights},
  };
  bool all = true;
  for (const auto& e : entries) {
    const auto start = clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(clock::now() - start).count();
    std::cout << (o.passed ? "PASS" : "FAIL") << "  " << e.title << "  [" << secs << " s]\n";
    for (const auto& n : o.notes) std::cout << "      " << n << "\n";
    all = all && o.passed;
  }
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  return all ? 0 : 1;
}
