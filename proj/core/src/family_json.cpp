#include <map>

#include <json.hpp>

#include "hermtri/errors.hpp"
#include "hermtri/primary.hpp"

namespace hermtri {

using ojson = nlohmann::ordered_json;

std::string family_to_json(const PrimaryFamily& f) {
  ojson doc;
  doc["n"] = f.num_vars();
  const FamilyCheck check = validate_family(f);
  doc["degrees"] = check.degrees;
  ojson nodes = ojson::array();
  for (std::size_t id : f.depth_first()) {
    const auto& c = f.node(id).component;
    ojson node;
    ojson path = ojson::array();
    for (const auto& a : f.point(id)) path.push_back(a.str());
    node["path"] = std::move(path);
    node["delta"] = c.delta;
    ojson table = ojson::array();
    for (const auto& [idx, value] : c.ctable) {
      ojson entry;
      entry["idx"] = idx;
      entry["coeff"] = value.str();
      table.push_back(std::move(entry));
    }
    node["ctable"] = std::move(table);
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

namespace {

const ojson& field(const ojson& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

unsigned as_unsigned(const ojson& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 1000000) {
    throw ParseError(where + ": expected a small nonnegative integer");
  }
  return v.get<unsigned>();
}

Rational as_rational(const ojson& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": rationals must be strings like \"a/b\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

PrimaryFamily family_from_json(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("family JSON: ") + e.what());
  }
  const unsigned n = as_unsigned(field(doc, "n", "family"), "family.n");
  if (n == 0) throw ParseError("family.n must be >= 1");
  PrimaryFamily fam(n);

  std::map<std::vector<Rational>, std::size_t> by_path;
  by_path[{}] = PrimaryFamily::kRoot;
  const ojson& nodes = field(doc, "nodes", "family");
  if (!nodes.is_array()) throw ParseError("family.nodes must be an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "family.nodes[" + std::to_string(i) + "]";
    const ojson& node = nodes[i];
    const ojson& path_json = field(node, "path", where);
    if (!path_json.is_array() || path_json.empty() || path_json.size() > n) {
      throw ParseError(where + ".path must be a nonempty array of at most n coordinates");
    }
    std::vector<Rational> path;
    for (std::size_t k = 0; k < path_json.size(); ++k) {
      path.push_back(as_rational(path_json[k], where + ".path[" + std::to_string(k) + "]"));
    }
    std::vector<Rational> parent_path(path.begin(), path.end() - 1);
    const auto parent = by_path.find(parent_path);
    if (parent == by_path.end()) {
      throw ParseError(where + ": parent prefix not listed earlier (nodes must be in depth-first order)");
    }
    PrimaryComponent c;
    c.point_coord = path.back();
    c.delta = as_unsigned(field(node, "delta", where), where + ".delta");
    const ojson& table = field(node, "ctable", where);
    if (!table.is_array()) throw ParseError(where + ".ctable must be an array");
    for (std::size_t k = 0; k < table.size(); ++k) {
      const std::string ew = where + ".ctable[" + std::to_string(k) + "]";
      const ojson& idx_json = field(table[k], "idx", ew);
      if (!idx_json.is_array()) throw ParseError(ew + ".idx must be an array");
      MultiIndex idx;
      for (const auto& e : idx_json) idx.push_back(as_unsigned(e, ew + ".idx"));
      if (!c.ctable.emplace(std::move(idx), as_rational(field(table[k], "coeff", ew), ew + ".coeff")).second) {
        throw ParseError(ew + ": duplicate index");
      }
    }
    const std::size_t id = fam.add_node(parent->second, std::move(c));
    by_path[path] = id;
  }

  const ojson& declared = field(doc, "degrees", "family");
  if (!declared.is_array()) throw ParseError("family.degrees must be an array");
  std::vector<unsigned> given;
  for (const auto& d : declared) given.push_back(as_unsigned(d, "family.degrees"));
  const FamilyCheck check = validate_family(fam);
  if (check.ok() && given != check.degrees) {
    throw ParseError("family.degrees does not match the fiber degrees of the nodes");
  }
  return fam;
}

}  // namespace hermtri
