#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hermtri/mpoly.hpp"
#include "hermtri/rational.hpp"
#include "hermtri/triangular_set.hpp"

namespace hermtri {

/// Multi-index (i1, ..., i_{l-1}, r) into the shifted basis
/// prod_{j<l} (x_j - a_j)^{i_j} * (x_l - a_l)^r.
using MultiIndex = std::vector<unsigned>;

/// Level-l generator of a primary ideal at a rational point, stored in the
/// shifted basis:
///
///   t = (x_l - a_l)^delta + sum ctable[i] * (x_l - a_l)^r * prod_{j<l} (x_j - a_j)^{i_j}
///
/// with 0 <= i_j < delta_j for the ancestors and 0 <= r < delta, and all
/// pure-x_l entries (0, ..., 0, r) equal to zero.
struct PrimaryComponent {
  unsigned level = 1;
  Rational point_coord;
  unsigned delta = 1;
  std::map<MultiIndex, Rational> ctable;

  friend bool operator==(const PrimaryComponent&, const PrimaryComponent&) = default;
};

/// Index-range and vanishing checks. lower_deltas holds delta_1..delta_{l-1}
/// of the component's ancestors.
std::vector<std::string> validate_component(const PrimaryComponent& c,
                                            std::span<const unsigned> lower_deltas);

/// Standard-basis polynomial of the component; lower_coords supplies
/// a_1..a_{l-1}. Monic of degree delta in x_l.
MPoly expand_component(const PrimaryComponent& c, std::span<const Rational> lower_coords);

/// Inverse of expand_component. point is (a_1, ..., a_l). Throws ShapeError
/// when t is not of primary shape at the point.
PrimaryComponent extract_component(const MPoly& t, std::span<const Rational> point,
                                   std::span<const unsigned> lower_deltas);

/// Prefix tree of primary components. Node 0 is the root (depth 0, no
/// component); a depth-l node carries a level-l component and its root path
/// spells the point prefix (a_1, ..., a_l).
class PrimaryFamily {
 public:
  static constexpr std::size_t kRoot = 0;

  struct Node {
    std::size_t parent = kRoot;
    unsigned depth = 0;
    PrimaryComponent component;
    std::vector<std::size_t> children;
  };

  explicit PrimaryFamily(unsigned num_vars);

  unsigned num_vars() const { return num_vars_; }

  /// Appends a child under parent; the component level is set to the depth.
  std::size_t add_node(std::size_t parent, PrimaryComponent component);

  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t id) const { return nodes_.at(id); }
  std::span<const std::size_t> children(std::size_t id) const { return nodes_.at(id).children; }

  /// Node ids at the given depth in depth-first order (depth 0 gives the root).
  std::vector<std::size_t> nodes_at_depth(unsigned depth) const;

  /// All non-root ids in depth-first order.
  std::vector<std::size_t> depth_first() const;

  /// (a_1, ..., a_l) for a depth-l node.
  std::vector<Rational> point(std::size_t id) const;

  /// (delta_1, ..., delta_l) along the root path.
  std::vector<unsigned> deltas(std::size_t id) const;

  /// Expanded (t_1, ..., t_l) of the node's primary ideal; empty for the root.
  TriangularSet primary_set(std::size_t id) const;

  /// Standard-basis generator of this node's own component.
  MPoly expanded(std::size_t id) const;

 private:
  unsigned num_vars_;
  std::vector<Node> nodes_;
};

/// Outcome of family validation: violations, and the fiber-degree vector
/// (d_1, ..., d_n) when there are none.
struct FamilyCheck {
  std::vector<std::string> violations;
  std::vector<unsigned> degrees;
  bool ok() const { return violations.empty(); }
};

FamilyCheck validate_family(const PrimaryFamily& f);

/// Inverse of a unit u in Q[x_1..x_l] / <local>, where local is the
/// triangular set of a primary ideal at point. Newton iteration
/// v <- v (2 - u v) from v_0 = 1/u(point), stopped by an exact residual test.
struct LocalInverse {
  MPoly value;
  unsigned steps = 0;
};

/// Throws NonUnitError when u(point) = 0.
LocalInverse newton_local_inverse(const MPoly& u, const TriangularSet& local,
                                  std::span<const Rational> point);

MPoly local_inverse(const MPoly& u, const TriangularSet& local, std::span<const Rational> point);

/// Inversion modulo the primary ideal of a family node.
MPoly local_inverse(const MPoly& u, const PrimaryFamily& f, std::size_t node);

/// Random family parameters. fibers[l-1] is the required fiber degree d_l;
/// component exponents are drawn from [delta_min, delta_max], capped so that
/// the multiplicity along every chain stays <= max_mu (0 = no cap).
/// Coordinates are integers with |a| < 2^point_bits; ctable entries are
/// rationals whose numerator and denominator have at most coeff_bits bits.
struct GenSpec {
  unsigned n = 1;
  std::vector<unsigned> fibers;
  unsigned delta_min = 1;
  unsigned delta_max = 1;
  unsigned coeff_bits = 8;
  unsigned point_bits = 4;
  unsigned max_mu = 0;
};

/// Deterministic in (spec, seed). Throws SpecError for unsatisfiable specs.
PrimaryFamily gen_family(const GenSpec& spec, std::uint64_t seed);

/// Family JSON (schema: n, degrees, nodes in depth-first order with path,
/// delta and ctable). Output is canonical, so load/save round-trips bytes.
std::string family_to_json(const PrimaryFamily& f);

/// Throws ParseError on malformed documents. The declared degrees are
/// checked against the computed fiber degrees when the family validates.
PrimaryFamily family_from_json(std::string_view text);

}  // namespace hermtri
