#ifndef GSPAN_RANDOM_HPP
#define GSPAN_RANDOM_HPP

#include <cstdint>
#include <optional>
#include <random>

#include "gspan/burnside.hpp"
#include "gspan/operad.hpp"

namespace gspan
{

/// Seeded source of random instances. Draws go through mt19937_64 directly
/// so a seed gives the same instances on every platform.
class Random
{
public:
  explicit Random(std::uint64_t seed)
  : _engine(seed)
  {}

  std::size_t below(std::size_t n)
  { return n == 0 ? 0 : static_cast<std::size_t>(_engine() % n); }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi)
  { return lo + static_cast<std::int64_t>(below(static_cast<std::size_t>(hi - lo + 1))); }

  bool chance(double p)
  { return static_cast<double>(_engine() >> 11) * 0x1.0p-53 < p; }

  Perm perm(std::uint32_t degree);

private:
  std::mt19937_64 _engine;
};

/// Transport of structure along the bijection pi of the carrier.
GSet relabel(GSet const &a, Perm const &pi);
Span relabel_apex(Span const &s, Perm const &pi);

/// A disjoint union of random orbits with total size <= max_size, randomly relabeled.
GSet random_gset(GroupPtr const &group, Random &rng, std::size_t max_size);

/// Every G-set of size <= max_size up to isomorphism, as block-sorted
/// disjoint unions of orbits.
std::vector<GSet> all_gsets(GroupPtr const &group, std::size_t max_size);

/// A random G-map, or nothing when some orbit of `a` has no admissible image.
std::optional<GMap> random_gmap(GSet const &a, GSet const &b, Random &rng);

/// A span src -> tgt with at most max_orbits apex orbits, randomly relabeled.
Span random_span(GSet const &src, GSet const &tgt, Random &rng, std::size_t max_orbits);

/// A combination of basis classes with coefficients in [-2, 2].
BurnsideElt random_elt(GSet const &src, GSet const &tgt, Random &rng, std::size_t max_terms);

OperadObj random_operad(GroupPtr const &group, std::uint32_t arity, Random &rng);

/// A canonical object; each slot is the basepoint with probability base_prob
/// before normalization.
FreeAlgObj random_free_alg(GSet const &over, std::uint32_t level, Random &rng,
                           double base_prob = 0.0);

} // namespace gspan

#endif // GSPAN_RANDOM_HPP
