#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <utility>

#include "hermtri/errors.hpp"
#include "hermtri/primary.hpp"

namespace hermtri {

namespace {

// mt19937_64 output is fully specified; the reduction to a range is done here
// rather than with std::uniform_int_distribution so that families are
// reproducible across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t range) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
      x = rng_();
    } while (x >= limit);
    return x % range;
  }

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 rng_;
};

// r can be written as a sum of parts in [lo, hi] (r = 0 is the empty sum).
bool splittable(unsigned r, unsigned lo, unsigned hi) {
  if (r == 0) return true;
  return (r + hi - 1) / hi <= r / lo;
}

std::vector<unsigned> random_composition(Draw& draw, unsigned total, unsigned lo, unsigned hi) {
  if (!splittable(total, lo, hi)) {
    throw SpecError("fiber degree " + std::to_string(total) + " cannot be split into exponents in [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  std::vector<unsigned> parts;
  unsigned rest = total;
  while (rest > 0) {
    std::vector<unsigned> options;
    for (unsigned p = lo; p <= hi && p <= rest; ++p) {
      if (splittable(rest - p, lo, hi)) options.push_back(p);
    }
    const unsigned p = options[draw.below(options.size())];
    parts.push_back(p);
    rest -= p;
  }
  return parts;
}

std::int64_t magnitude_bound(unsigned bits) {
  return bits == 0 ? 0 : static_cast<std::int64_t>((std::uint64_t{1} << bits) - 1);
}

void check_spec(const GenSpec& s) {
  if (s.n == 0) throw SpecError("n must be >= 1");
  if (s.fibers.size() != s.n) {
    throw SpecError("expected " + std::to_string(s.n) + " fiber degrees, got " + std::to_string(s.fibers.size()));
  }
  for (unsigned d : s.fibers) {
    if (d == 0) throw SpecError("fiber degrees must be >= 1");
  }
  if (s.delta_min == 0 || s.delta_min > s.delta_max) throw SpecError("delta range must satisfy 1 <= min <= max");
  if (s.coeff_bits > 62 || s.point_bits > 62) throw SpecError("bit bounds above 62 are not supported");
}

}  // namespace

PrimaryFamily gen_family(const GenSpec& spec, std::uint64_t seed) {
  check_spec(spec);
  Draw draw(seed);
  PrimaryFamily fam(spec.n);
  const std::int64_t coord_max = magnitude_bound(spec.point_bits);
  const std::uint64_t pool = 2 * static_cast<std::uint64_t>(coord_max) + 1;
  const std::int64_t coeff_max = magnitude_bound(spec.coeff_bits);

  std::vector<std::size_t> frontier{PrimaryFamily::kRoot};
  std::vector<unsigned> frontier_mu{1};
  for (unsigned level = 1; level <= spec.n; ++level) {
    std::vector<std::size_t> next;
    std::vector<unsigned> next_mu;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const std::size_t parent = frontier[i];
      unsigned hi = spec.delta_max;
      if (spec.max_mu != 0) hi = std::min(hi, spec.max_mu / frontier_mu[i]);
      if (hi < spec.delta_min) {
        throw SpecError("multiplicity cap " + std::to_string(spec.max_mu) + " leaves no admissible exponent at level " +
                        std::to_string(level));
      }
      const auto parts = random_composition(draw, spec.fibers[level - 1], spec.delta_min, hi);
      if (parts.size() > pool) {
        throw SpecError("need " + std::to_string(parts.size()) + " distinct coordinates but only " +
                        std::to_string(pool) + " fit in " + std::to_string(spec.point_bits) + " bits");
      }
      const auto lower = fam.deltas(parent);
      std::set<std::int64_t> used;
      for (unsigned delta : parts) {
        std::int64_t a;
        do {
          a = draw.between(-coord_max, coord_max);
        } while (!used.insert(a).second);

        PrimaryComponent c;
        c.level = level;
        c.point_coord = Rational(static_cast<long>(a));
        c.delta = delta;
        // Mixed-radix walk over (i_1, ..., i_{l-1}, r); pure x_l slots stay zero.
        MultiIndex idx(level, 0);
        for (;;) {
          const bool pure = std::all_of(idx.begin(), idx.end() - 1, [](unsigned e) { return e == 0; });
          if (!pure && coeff_max > 0) {
            const std::int64_t num = draw.between(-coeff_max, coeff_max);
            const std::int64_t den = draw.between(1, coeff_max);
            if (num != 0) c.ctable.emplace(idx, Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
          }
          std::size_t j = 0;
          for (; j < level; ++j) {
            const unsigned radix = j + 1 < level ? lower[j] : delta;
            if (++idx[j] < radix) break;
            idx[j] = 0;
          }
          if (j == level) break;
        }
        next.push_back(fam.add_node(parent, std::move(c)));
        next_mu.push_back(frontier_mu[i] * delta);
      }
    }
    frontier = std::move(next);
    frontier_mu = std::move(next_mu);
  }
  return fam;
}

}  // namespace hermtri
