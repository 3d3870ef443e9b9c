#include <doctest.h>

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "../support/fixtures.hpp"
#include "hermtri/height.hpp"

using namespace hermtri;
using hermtri::testing::P;
using hermtri::testing::Q;
using hermtri::testing::simple;

namespace {

GenSpec pinned_spec() {
  GenSpec s;
  s.n = 2;
  s.fibers = {6, 6};
  s.delta_min = 1;
  s.delta_max = 3;
  s.coeff_bits = 16;
  s.point_bits = 16;
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("height") {

TEST_CASE("poly_height examples") {
  CHECK(poly_height(P("x2^2 - (1 + 4*x1)*x2 + 6*x1")) == 3);
  CHECK(poly_height(MPoly()) == 0);
  CHECK(poly_height(P("x1^7")) == 1);
  CHECK(poly_height(P("x1 + 1000/3")) == 10);
}

TEST_CASE("component_height examples") {
  PrimaryFamily f(1);
  const auto b = f.add_node(PrimaryFamily::kRoot, simple(3));
  CHECK(component_height(f, b) == 2);

  PrimaryFamily g(2);
  const auto a = g.add_node(PrimaryFamily::kRoot, simple(0, 2));
  PrimaryComponent c = simple(0, 2);
  c.ctable[{1, 1}] = Q(1);
  const auto gb = g.add_node(a, c);
  CHECK(component_height(g, gb) == 1);
  CHECK(component_height(g, a) == 0);

  PrimaryFamily z(1);
  const auto zb = z.add_node(PrimaryFamily::kRoot, simple(0, 5));
  CHECK(component_height(z, zb) == 0);
  CHECK(component_height(z, zb, LeadingTerm::kExclude) == 0);
}

TEST_CASE("leading-term convention toggle") {
  // (x1 - 5)^3: the leading term contributes 3 * h(5) = 9, the ctable nothing.
  PrimaryFamily f(1);
  const auto b = f.add_node(PrimaryFamily::kRoot, simple(5, 3));
  CHECK(component_height(f, b, LeadingTerm::kInclude) == 9);
  CHECK(component_height(f, b, LeadingTerm::kExclude) == 0);

  // ctable term 7/2 at index (2, 0) over a1 = 5: 3 + 2 * 3 = 9 vs leading 2 * h(-1) = 2.
  PrimaryFamily g(2);
  const auto a = g.add_node(PrimaryFamily::kRoot, simple(5, 3));
  PrimaryComponent c = simple(-1, 2);
  c.ctable[{2, 0}] = Q(7, 2);
  const auto gb = g.add_node(a, c);
  CHECK(component_height(g, gb, LeadingTerm::kInclude) == 9);
  CHECK(component_height(g, gb, LeadingTerm::kExclude) == 9);
  CHECK(std::string(to_string(LeadingTerm::kExclude)) == "ctable-only");
}

TEST_CASE("family_aggregates examples") {
  const auto biv = hermtri::testing::worked_bivariate();
  const auto a2 = family_aggregates(biv, 2);
  CHECK(a2.mu == 1);
  CHECK(a2.D == 4);
  CHECK(a2.H == 0 + 1 + 2 + 2);
  CHECK(a2.L == 3);  // chain (1, 3): h(1) + h(3)

  const auto uni = family_aggregates(hermtri::testing::double_roots(), 1);
  CHECK(uni.mu == 2);
  CHECK(uni.D == 4);

  PrimaryFamily zeros(2);
  const auto r = zeros.add_node(PrimaryFamily::kRoot, simple(0, 2));
  zeros.add_node(r, simple(0, 3));
  CHECK(family_aggregates(zeros, 1).H == 0);
  CHECK(family_aggregates(zeros, 2).H == 0);
  CHECK(family_aggregates(zeros, 2).mu == 6);

  const auto a0 = family_aggregates(biv, 0);
  CHECK(a0.H == 0);
  CHECK(a0.L == 0);
  CHECK(a0.mu == 1);
  CHECK(a0.D == 0);
}

TEST_CASE("bound_indicators examples") {
  const auto b = bound_indicators(mpz_class(5), mpz_class(3), mpz_class(4), mpz_class(2));
  CHECK(b.bn == 29);
  CHECK(b.bt == 116);

  const auto biv = hermtri::testing::worked_bivariate();
  const auto lo = family_aggregates(biv, 1);
  const auto hi = family_aggregates(biv, 2);
  REQUIRE(lo.mu == 1);
  const auto ind = bound_indicators(biv, 1);
  CHECK(ind.bn == hi.H + lo.L * hi.D);
  CHECK(ind.bt == hi.D * hi.H + lo.L * hi.D * hi.D);
  CHECK_THROWS(bound_indicators(biv, 2));
}

TEST_CASE("measure examples") {
  const auto biv = hermtri::testing::worked_bivariate();
  const auto rep = measure(biv, reconstruct(biv));
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[1].level == 2);
  CHECK(rep.rows[1].hT == 3);
  CHECK(rep.rows[1].hN == 3);
  CHECK(rep.rows[1].ratio == Q(1));

  const auto chain = hermtri::testing::single_chain();
  for (const auto& row : measure(chain, reconstruct(chain)).rows) CHECK(row.hT == row.hN);
}

TEST_CASE("report formats") {
  const auto biv = hermtri::testing::worked_bivariate();
  const auto rep = measure(biv, reconstruct(biv));
  const std::string csv = report_csv(rep);
  CHECK(csv.rfind("level,d,D,mu,H,L,hT,hN,BN,BT,ratio,violN,violT\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  const std::string md = report_markdown(rep);
  CHECK(md.find("indicator, not certified bound") != std::string::npos);
  const auto js = nlohmann::json::parse(report_json(rep));
  CHECK(js["rows"].size() == 2);
  CHECK(report_json(rep).find("indicator, not certified bound") != std::string::npos);
}

TEST_CASE("property: report invariants on generated families") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    GenSpec s;
    s.n = 1 + seed % 3;
    for (unsigned l = 0; l < s.n; ++l) s.fibers.push_back(2 + (seed + l) % 3);
    s.delta_min = 1;
    s.delta_max = seed % 2 ? 1 : 3;
    s.max_mu = 8;
    s.coeff_bits = 12;
    s.point_bits = 10;
    const auto fam = gen_family(s, seed);
    const auto r = reconstruct(fam);
    const auto rep = measure(fam, r);
    REQUIRE(rep.rows.size() == s.n);
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
      const auto& row = rep.rows[i];
      CHECK(row.BN <= row.BT);
      CHECK(row.hT == poly_height(r.T.at(i + 1)));
      CHECK(row.hN == poly_height(r.N[i]));
      CHECK(row.violN == (mpz_class(row.hN) > row.BN));
      if (i > 0) {
        CHECK(row.D >= rep.rows[i - 1].D);
        CHECK(row.L >= rep.rows[i - 1].L);
      }
    }
    CHECK(report_csv(measure(fam, r)) == report_csv(rep));
    CHECK(report_markdown(measure(fam, r)) == report_markdown(rep));

    // Chain-sum definition of L, by brute force over depth-l nodes.
    for (unsigned l = 1; l <= s.n; ++l) {
      mpz_class best = 0;
      for (std::size_t id : fam.nodes_at_depth(l)) {
        mpz_class sum = 0;
        for (std::size_t v = id; v != PrimaryFamily::kRoot; v = fam.node(v).parent) {
          sum += static_cast<unsigned long>(component_height(fam, v));
        }
        if (sum > best) best = sum;
      }
      CHECK(family_aggregates(fam, l).L == best);
    }

    // Radical families: component height is the height of the coordinate.
    if (s.delta_max == 1) {
      for (std::size_t id : fam.depth_first()) {
        CHECK(component_height(fam, id) == rat_bitsize(fam.node(id).component.point_coord));
      }
    }
  }
}

TEST_CASE("pinned seed-42 report matches the golden file") {
  const auto fam = gen_family(pinned_spec(), 42);
  const auto rep = measure(fam, reconstruct(fam));
  CHECK(report_csv(rep) == read_file(std::string(HERMTRI_GOLDEN_DIR) + "/height_n2_d66_seed42.csv"));
  CHECK(family_to_json(fam) == read_file(std::string(HERMTRI_GOLDEN_DIR) + "/family_n2_d66_seed42.json"));
}

}  // TEST_SUITE
