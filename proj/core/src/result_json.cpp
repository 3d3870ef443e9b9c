#include <json.hpp>

#include "hermtri/errors.hpp"
#include "hermtri/interp.hpp"

namespace hermtri {

using ojson = nlohmann::ordered_json;

namespace {

ojson poly_list(std::span<const MPoly> polys) {
  ojson a = ojson::array();
  for (const auto& p : polys) a.push_back(to_string(p));
  return a;
}

ojson path_json(const PrimaryFamily& f, std::size_t id) {
  ojson a = ojson::array();
  for (const auto& c : f.point(id)) a.push_back(c.str());
  return a;
}

std::vector<MPoly> read_polys(const ojson& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_array()) {
    throw ParseError(std::string("result JSON: missing array '") + key + "'");
  }
  std::vector<MPoly> out;
  for (const auto& s : doc.at(key)) {
    if (!s.is_string()) throw ParseError(std::string("result JSON: '") + key + "' entries must be strings");
    out.push_back(parse_poly(s.get<std::string>()));
  }
  return out;
}

}  // namespace

std::string result_to_json(const PrimaryFamily& f, const ReconstructionResult& r, bool audit) {
  ojson doc;
  doc["n"] = f.num_vars();
  // T_{l+1}, N_{l+1}, F_{l+1} are the chain sums reduced modulo T_1..T_l.
  doc["reduction"] = "global";
  doc["T"] = poly_list(r.T.polys());
  doc["N"] = poly_list(r.N);
  doc["F"] = poly_list(r.F);
  if (audit) {
    ojson nodes = ojson::array();
    for (const auto& set : r.idempotents) {
      ojson node;
      node["path"] = path_json(f, set.node);
      node["branch_product"] = to_string(set.branch_product());
      ojson entries = ojson::array();
      for (const auto& e : set.entries) {
        ojson entry;
        entry["child"] = path_json(f, e.child);
        entry["e"] = to_string(e.e);
        entry["u"] = to_string(e.u);
        entry["e_tilde"] = to_string(e.e_tilde);
        entries.push_back(std::move(entry));
      }
      node["idempotents"] = std::move(entries);
      nodes.push_back(std::move(node));
    }
    doc["audit"] = {{"nodes", std::move(nodes)}};
  }
  return doc.dump(2) + "\n";
}

ReconstructionResult result_from_json(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("result JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("result JSON: top level must be an object");
  ReconstructionResult r;
  r.T = TriangularSet(read_polys(doc, "T"));
  r.N = read_polys(doc, "N");
  r.F = read_polys(doc, "F");
  return r;
}

}  // namespace hermtri
