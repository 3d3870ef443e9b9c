#include "hermtri/primary.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "hermtri/errors.hpp"

namespace hermtri {

namespace {

std::string index_text(const MultiIndex& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s + ")";
}

bool is_pure_top(const MultiIndex& idx) {
  return std::all_of(idx.begin(), idx.end() - 1, [](unsigned i) { return i == 0; });
}

// (x_var - a)^0, ..., (x_var - a)^max
std::vector<MPoly> linear_powers(int var, const Rational& a, unsigned max) {
  std::vector<MPoly> out;
  out.reserve(max + 1);
  out.emplace_back(1L);
  const MPoly lin = MPoly::var(var) - MPoly(a);
  for (unsigned e = 1; e <= max; ++e) out.push_back(out.back() * lin);
  return out;
}

// Full shifted-basis expansion of f at point: entries keyed by the exponent
// of (x_j - a_j) for j = 1..point.size().
void collect_shifted(const MPoly& f, int var, std::span<const Rational> point, MultiIndex& idx,
                     std::map<MultiIndex, Rational>& out) {
  if (var == 0) {
    if (!f.is_zero()) out[idx] = f.constant();
    return;
  }
  const auto s = shift(f, var, point[var - 1]);
  for (std::size_t r = 0; r < s.size(); ++r) {
    idx[var - 1] = static_cast<unsigned>(r);
    collect_shifted(s[r], var - 1, point, idx, out);
  }
  idx[var - 1] = 0;
}

}  // namespace

std::vector<std::string> validate_component(const PrimaryComponent& c,
                                            std::span<const unsigned> lower_deltas) {
  std::vector<std::string> v;
  const std::string where = "level-" + std::to_string(c.level) + " component at " + c.point_coord.str();
  if (c.level < 1) {
    v.push_back(where + ": level must be >= 1");
    return v;
  }
  if (lower_deltas.size() + 1 != c.level) {
    v.push_back(where + ": expected " + std::to_string(c.level > 0 ? c.level - 1 : 0) +
                " ancestor exponents, got " + std::to_string(lower_deltas.size()));
    return v;
  }
  if (c.delta < 1) v.push_back(where + ": delta must be >= 1");
  for (const auto& [idx, value] : c.ctable) {
    if (idx.size() != c.level) {
      v.push_back(where + ": index " + index_text(idx) + " has length " + std::to_string(idx.size()) +
                  ", expected " + std::to_string(c.level));
      continue;
    }
    for (std::size_t j = 0; j + 1 < idx.size(); ++j) {
      if (idx[j] >= lower_deltas[j]) {
        v.push_back(where + ": index " + index_text(idx) + " exceeds delta_" + std::to_string(j + 1) +
                    " = " + std::to_string(lower_deltas[j]));
      }
    }
    if (idx.back() >= c.delta) {
      v.push_back(where + ": index " + index_text(idx) + " has x" + std::to_string(c.level) +
                  "-exponent >= delta = " + std::to_string(c.delta));
    }
    if (is_pure_top(idx) && !value.is_zero()) {
      v.push_back(where + ": pure x" + std::to_string(c.level) + " coefficient at " + index_text(idx) +
                  " is " + value.str() + ", must vanish");
    }
  }
  return v;
}

MPoly expand_component(const PrimaryComponent& c, std::span<const Rational> lower_coords) {
  if (lower_coords.size() + 1 != c.level) {
    throw std::invalid_argument("expand_component: path length does not match level");
  }
  const int top = static_cast<int>(c.level);
  std::vector<unsigned> max_exp(c.level, 0);
  max_exp.back() = c.delta;
  for (const auto& [idx, value] : c.ctable) {
    for (std::size_t j = 0; j < idx.size() && j < max_exp.size(); ++j) max_exp[j] = std::max(max_exp[j], idx[j]);
  }
  std::vector<std::vector<MPoly>> pw;
  pw.reserve(c.level);
  for (int j = 1; j <= top; ++j) {
    const Rational& a = j == top ? c.point_coord : lower_coords[j - 1];
    pw.push_back(linear_powers(j, a, max_exp[j - 1]));
  }
  MPoly t = pw.back()[c.delta];
  for (const auto& [idx, value] : c.ctable) {
    if (value.is_zero()) continue;
    MPoly term(value);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (idx[j] > 0) term *= pw[j][idx[j]];
    }
    t += term;
  }
  return t;
}

PrimaryComponent extract_component(const MPoly& t, std::span<const Rational> point,
                                   std::span<const unsigned> lower_deltas) {
  const auto level = static_cast<unsigned>(point.size());
  if (level == 0) throw std::invalid_argument("extract_component: empty point");
  if (lower_deltas.size() + 1 != level) {
    throw std::invalid_argument("extract_component: need one exponent per lower level");
  }
  const int top = static_cast<int>(level);
  if (t.top_var() != top) {
    throw ShapeError("extract_component: polynomial does not have x" + std::to_string(top) +
                     " as its main variable");
  }
  if (!(t.leading_coeff() == MPoly(1L))) {
    throw ShapeError("extract_component: polynomial is not monic in x" + std::to_string(top));
  }
  PrimaryComponent c;
  c.level = level;
  c.point_coord = point.back();
  c.delta = static_cast<unsigned>(t.degree(top));

  const Rational value = t.eval(point);
  if (!value.is_zero()) {
    throw ShapeError("extract_component: t(point) = " + value.str() + " != 0, not a primary component there");
  }

  std::map<MultiIndex, Rational> shifted;
  MultiIndex idx(level, 0);
  collect_shifted(t, top, point, idx, shifted);
  for (auto& [k, v] : shifted) {
    if (k.back() == c.delta) {
      if (!is_pure_top(k)) {
        throw ShapeError("extract_component: leading x" + std::to_string(top) + "-coefficient is not 1");
      }
      continue;
    }
    for (std::size_t j = 0; j + 1 < k.size(); ++j) {
      if (k[j] >= lower_deltas[j]) {
        throw ShapeError("extract_component: term " + index_text(k) + " not reduced modulo (x" +
                         std::to_string(j + 1) + " - a)^" + std::to_string(lower_deltas[j]));
      }
    }
    if (is_pure_top(k)) {
      throw ShapeError("extract_component: pure x" + std::to_string(top) + " Taylor coefficient " +
                       index_text(k) + " = " + v.str() + " does not vanish");
    }
    c.ctable.emplace(k, std::move(v));
  }
  return c;
}

PrimaryFamily::PrimaryFamily(unsigned num_vars) : num_vars_(num_vars) {
  if (num_vars == 0) throw std::invalid_argument("family needs at least one variable");
  nodes_.emplace_back();
}

std::size_t PrimaryFamily::add_node(std::size_t parent, PrimaryComponent component) {
  if (parent >= nodes_.size()) throw std::out_of_range("add_node: unknown parent");
  const unsigned depth = nodes_[parent].depth + 1;
  if (depth > num_vars_) throw std::invalid_argument("add_node: tree deeper than the variable count");
  component.level = depth;
  Node n;
  n.parent = parent;
  n.depth = depth;
  n.component = std::move(component);
  nodes_.push_back(std::move(n));
  const std::size_t id = nodes_.size() - 1;
  nodes_[parent].children.push_back(id);
  return id;
}

std::vector<std::size_t> PrimaryFamily::depth_first() const {
  std::vector<std::size_t> out;
  out.reserve(nodes_.size() - 1);
  std::vector<std::size_t> stack(nodes_[kRoot].children.rbegin(), nodes_[kRoot].children.rend());
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    out.push_back(id);
    const auto& ch = nodes_[id].children;
    stack.insert(stack.end(), ch.rbegin(), ch.rend());
  }
  return out;
}

std::vector<std::size_t> PrimaryFamily::nodes_at_depth(unsigned depth) const {
  if (depth == 0) return {kRoot};
  std::vector<std::size_t> out;
  for (std::size_t id : depth_first()) {
    if (nodes_[id].depth == depth) out.push_back(id);
  }
  return out;
}

std::vector<Rational> PrimaryFamily::point(std::size_t id) const {
  std::vector<Rational> p(nodes_.at(id).depth);
  for (std::size_t cur = id; cur != kRoot; cur = nodes_[cur].parent) {
    p[nodes_[cur].depth - 1] = nodes_[cur].component.point_coord;
  }
  return p;
}

std::vector<unsigned> PrimaryFamily::deltas(std::size_t id) const {
  std::vector<unsigned> d(nodes_.at(id).depth);
  for (std::size_t cur = id; cur != kRoot; cur = nodes_[cur].parent) {
    d[nodes_[cur].depth - 1] = nodes_[cur].component.delta;
  }
  return d;
}

MPoly PrimaryFamily::expanded(std::size_t id) const {
  const auto p = point(id);
  return expand_component(nodes_.at(id).component, std::span<const Rational>(p).first(p.size() - 1));
}

TriangularSet PrimaryFamily::primary_set(std::size_t id) const {
  std::vector<std::size_t> chain;
  for (std::size_t cur = id; cur != kRoot; cur = nodes_[cur].parent) chain.push_back(cur);
  std::reverse(chain.begin(), chain.end());
  const auto p = point(id);
  std::vector<MPoly> polys;
  polys.reserve(chain.size());
  for (std::size_t j = 0; j < chain.size(); ++j) {
    polys.push_back(expand_component(nodes_[chain[j]].component, std::span<const Rational>(p).first(j)));
  }
  return TriangularSet(std::move(polys));
}

FamilyCheck validate_family(const PrimaryFamily& f) {
  FamilyCheck out;
  auto& v = out.violations;
  const unsigned n = f.num_vars();
  auto path_text = [&f](std::size_t id) {
    const auto p = f.point(id);
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].str();
    return s + ")";
  };

  for (std::size_t id : f.depth_first()) {
    const auto& node = f.node(id);
    const auto lower = f.deltas(node.parent);
    for (auto& msg : validate_component(node.component, lower)) v.push_back(path_text(id) + ": " + msg);
    if (node.component.level != node.depth) {
      v.push_back(path_text(id) + ": component level " + std::to_string(node.component.level) +
                  " does not match depth " + std::to_string(node.depth));
    }
  }

  std::vector<unsigned> degrees(n, 0);
  for (unsigned depth = 0; depth < n; ++depth) {
    bool first = true;
    for (std::size_t id : f.nodes_at_depth(depth)) {
      const auto ch = f.children(id);
      if (ch.empty()) {
        v.push_back("node " + path_text(id) + " at depth " + std::to_string(depth) +
                    " has no children; all leaves must be at depth " + std::to_string(n));
        continue;
      }
      std::vector<Rational> coords;
      unsigned fiber = 0;
      for (std::size_t c : ch) {
        coords.push_back(f.node(c).component.point_coord);
        fiber += f.node(c).component.delta;
      }
      std::sort(coords.begin(), coords.end());
      if (std::adjacent_find(coords.begin(), coords.end()) != coords.end()) {
        v.push_back("children of " + path_text(id) + " repeat a coordinate");
      }
      if (first) {
        degrees[depth] = fiber;
        first = false;
      } else if (fiber != degrees[depth]) {
        v.push_back("fiber over " + path_text(id) + " has degree " + std::to_string(fiber) +
                    " != " + std::to_string(degrees[depth]));
      }
    }
  }
  if (out.ok()) out.degrees = std::move(degrees);
  return out;
}

LocalInverse newton_local_inverse(const MPoly& u, const TriangularSet& local,
                                  std::span<const Rational> point) {
  if (!local.valid()) throw MalformedInput("local_inverse: malformed local triangular set");
  const MPoly u0 = normal_form(u, local);
  const Rational at_point = u0.eval(point);
  if (at_point.is_zero()) throw NonUnitError("local_inverse: element vanishes at the point, not a unit");

  // 1 - u v_0 lies in the maximal ideal, which is nilpotent in the quotient,
  // so the residual squares away to zero.
  LocalInverse out{MPoly(at_point.inverse()), 0};
  const MPoly one(1L);
  for (;;) {
    const MPoly residual = normal_form(one - u0 * out.value, local);
    if (residual.is_zero()) break;
    if (out.steps > 64) throw std::logic_error("local_inverse: Newton iteration failed to converge");
    out.value = normal_form(out.value + out.value * residual, local);
    ++out.steps;
  }
  return out;
}

MPoly local_inverse(const MPoly& u, const TriangularSet& local, std::span<const Rational> point) {
  return newton_local_inverse(u, local, point).value;
}

MPoly local_inverse(const MPoly& u, const PrimaryFamily& f, std::size_t node) {
  return local_inverse(u, f.primary_set(node), f.point(node));
}

}  // namespace hermtri
