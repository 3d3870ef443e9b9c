#include "hermtri/height.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace hermtri {

std::size_t poly_height(const MPoly& f) {
  std::size_t h = 0;
  f.for_each_term([&h](std::span<const unsigned>, const Rational& c) { h = std::max(h, rat_bitsize(c)); });
  return h;
}

const char* to_string(LeadingTerm c) {
  return c == LeadingTerm::kInclude ? "include-leading-term" : "ctable-only";
}

std::size_t component_height(const PrimaryFamily& f, std::size_t node, LeadingTerm convention) {
  const auto& c = f.node(node).component;
  const auto point = f.point(node);
  std::vector<std::size_t> hp(point.size());
  std::transform(point.begin(), point.end(), hp.begin(), [](const Rational& a) { return rat_bitsize(a); });

  std::size_t best = 0;
  if (convention == LeadingTerm::kInclude) best = c.delta * hp.back();
  for (const auto& [idx, value] : c.ctable) {
    std::size_t h = rat_bitsize(value);
    for (std::size_t j = 0; j < idx.size() && j < hp.size(); ++j) h += idx[j] * hp[j];
    best = std::max(best, h);
  }
  return best;
}

Aggregates family_aggregates(const PrimaryFamily& f, unsigned level, LeadingTerm convention) {
  Aggregates a{0, 0, 1, 0};
  if (level == 0) return a;
  const FamilyCheck check = validate_family(f);
  for (unsigned i = 0; i < level && i < check.degrees.size(); ++i) a.D += check.degrees[i];

  // Chain sums and multiplicities, accumulated top-down.
  std::vector<mpz_class> chain_h(f.size(), 0), chain_mu(f.size(), 1);
  bool first = true;
  for (std::size_t id : f.depth_first()) {
    const auto& node = f.node(id);
    if (node.depth > level) continue;
    const std::size_t h = component_height(f, id, convention);
    chain_h[id] = chain_h[node.parent] + static_cast<unsigned long>(h);
    chain_mu[id] = chain_mu[node.parent] * node.component.delta;
    if (node.depth != level) continue;
    a.H += static_cast<unsigned long>(h);
    if (first) {
      a.L = chain_h[id];
      a.mu = chain_mu[id];
      first = false;
    } else {
      a.L = std::max(a.L, chain_h[id]);
      a.mu = std::max(a.mu, chain_mu[id]);
    }
  }
  return a;
}

BoundIndicators bound_indicators(const mpz_class& h_next, const mpz_class& l, const mpz_class& d_next,
                                 const mpz_class& mu) {
  BoundIndicators b;
  b.bn = h_next + l * d_next * mu;
  b.bt = d_next * h_next + l * d_next * d_next * mu;
  return b;
}

BoundIndicators bound_indicators(const PrimaryFamily& f, unsigned level, LeadingTerm convention) {
  if (level + 1 > f.num_vars()) throw std::invalid_argument("bound_indicators: level + 1 exceeds n");
  const Aggregates here = family_aggregates(f, level, convention);
  const Aggregates next = family_aggregates(f, level + 1, convention);
  return bound_indicators(next.H, here.L, next.D, here.mu);
}

HeightReport measure(const PrimaryFamily& f, const ReconstructionResult& r, LeadingTerm convention) {
  HeightReport report;
  report.convention = convention;
  const FamilyCheck check = validate_family(f);
  Aggregates prev = family_aggregates(f, 0, convention);
  for (unsigned level = 1; level <= f.num_vars(); ++level) {
    const Aggregates cur = family_aggregates(f, level, convention);
    HeightRow row;
    row.level = level;
    row.d = level <= check.degrees.size() ? check.degrees[level - 1] : 0;
    row.D = cur.D;
    row.mu = cur.mu;
    row.H = cur.H;
    row.L = cur.L;
    row.hT = level <= r.T.size() ? poly_height(r.T.at(level)) : 0;
    row.hN = level <= r.N.size() ? poly_height(r.N[level - 1]) : 0;
    const BoundIndicators b = bound_indicators(cur.H, prev.L, cur.D, prev.mu);
    row.BN = b.bn;
    row.BT = b.bt;
    row.ratio_defined = row.hN > 0;
    if (row.ratio_defined) {
      row.ratio = Rational(mpz_class(static_cast<unsigned long>(row.hT)), mpz_class(static_cast<unsigned long>(row.hN)));
    }
    row.violN = mpz_class(static_cast<unsigned long>(row.hN)) > row.BN;
    row.violT = mpz_class(static_cast<unsigned long>(row.hT)) > row.BT;
    report.rows.push_back(std::move(row));
    prev = cur;
  }
  return report;
}

namespace {

const char* const kColumns[] = {"level", "d", "D", "mu", "H", "L", "hT", "hN", "BN", "BT", "ratio", "violN", "violT"};

std::vector<std::string> cells(const HeightRow& r) {
  return {std::to_string(r.level), r.d.get_str(), r.D.get_str(), r.mu.get_str(), r.H.get_str(), r.L.get_str(),
          std::to_string(r.hT), std::to_string(r.hN), r.BN.get_str(), r.BT.get_str(),
          r.ratio_defined ? r.ratio.str() : "undefined", r.violN ? "1" : "0", r.violT ? "1" : "0"};
}

// hT/hN to four decimals, rounded half up, computed in integers.
std::string decimal(const HeightRow& r) {
  if (!r.ratio_defined) return "-";
  const mpz_class scaled = (mpz_class(static_cast<unsigned long>(r.hT)) * 20000 + r.hN) /
                           (2 * mpz_class(static_cast<unsigned long>(r.hN)));
  const mpz_class whole = scaled / 10000;
  std::string frac = mpz_class(scaled % 10000).get_str();
  frac.insert(0, 4 - frac.size(), '0');
  return whole.get_str() + "." + frac;
}

}  // namespace

std::string report_csv(const HeightReport& report) {
  std::ostringstream os;
  for (std::size_t i = 0; i < std::size(kColumns); ++i) os << (i ? "," : "") << kColumns[i];
  os << "\n";
  for (const auto& row : report.rows) {
    const auto c = cells(row);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "\n";
  }
  return os.str();
}

std::string report_markdown(const HeightReport& report) {
  std::vector<std::vector<std::string>> table;
  table.emplace_back(std::begin(kColumns), std::end(kColumns));
  table.back().emplace_back("ratio~");
  for (const auto& row : report.rows) {
    table.push_back(cells(row));
    table.back().push_back(decimal(row));
  }
  std::vector<std::size_t> width(table.front().size(), 0);
  for (const auto& r : table) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream os;
  os << "Component heights: " << to_string(report.convention) << ".\n";
  os << "BN, BT: indicator, not certified bound (soft-O constants and log factors dropped).\n\n";
  auto emit = [&](const std::vector<std::string>& r) {
    os << "|";
    for (std::size_t i = 0; i < r.size(); ++i) os << " " << std::string(width[i] - r[i].size(), ' ') << r[i] << " |";
    os << "\n";
  };
  emit(table.front());
  os << "|";
  for (std::size_t w : width) os << std::string(w + 1, '-') << ":|";
  os << "\n";
  for (std::size_t i = 1; i < table.size(); ++i) emit(table[i]);
  return os.str();
}

std::string report_json(const HeightReport& report) {
  nlohmann::ordered_json doc;
  doc["convention"] = to_string(report.convention);
  doc["bounds"] = "indicator, not certified bound";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    const auto c = cells(row);
    nlohmann::ordered_json o;
    for (std::size_t i = 0; i < c.size(); ++i) o[kColumns[i]] = c[i];
    rows.push_back(std::move(o));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace hermtri
