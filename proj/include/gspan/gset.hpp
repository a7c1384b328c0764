#ifndef GSPAN_GSET_HPP
#define GSPAN_GSET_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gspan/group.hpp"

namespace gspan
{

/// A point of a finite G-set, 0-based.
using Point = std::uint32_t;

/// A finite G-set in normal form (n, alpha): carrier {0..n-1} and, for every
/// group element g, the permutation alpha(g). The action table is stored
/// flat, row g holding alpha(g).
class GSet
{
public:
  GSet() = default;

  /// Takes the full action table (order() rows of length n). Throws
  /// MalformedInput unless each row is a permutation and the rows form a
  /// homomorphism.
  GSet(GroupPtr group, std::uint32_t n, std::vector<Point> action);

  /// Extends images of the generators along the BFS words of the group.
  static GSet from_generator_images(GroupPtr group, std::uint32_t n,
                                    std::vector<Perm> const &generator_images);

  static GSet empty(GroupPtr group);
  static GSet point(GroupPtr group);
  static GSet trivial(GroupPtr group, std::uint32_t n);

  /// G/H for the representative of subgroup class `cls`. Cosets are numbered
  /// in order of their least element index, so eH is point 0.
  static GSet orbit(GroupPtr group, std::size_t cls);
  static GSet coset_space(GroupPtr group, ElemSet const &subgroup);

  GroupPtr const &group() const
  { return _group; }

  std::uint32_t size() const
  { return _n; }

  Point act(Elem g, Point x) const
  { return _action[static_cast<std::size_t>(g) * _n + x]; }

  Perm action_of(Elem g) const;
  std::vector<Point> const &action_table() const
  { return _action; }

  /// Images of the group's generators, in generator order.
  std::vector<Perm> generator_images() const;

  ElemSet stabilizer(Point x) const;

  /// Strict equality of the normal-form data (group, n, action table).
  friend bool operator==(GSet const &a, GSet const &b);

private:
  GroupPtr _group;
  std::uint32_t _n = 0;
  std::vector<Point> _action;
};

/// An equivariant map of G-sets.
class GMap
{
public:
  GMap() = default;
  GMap(GSet source, GSet target, std::vector<Point> images);

  static GMap identity(GSet const &a);

  GSet const &source() const
  { return _source; }
  GSet const &target() const
  { return _target; }
  std::vector<Point> const &images() const
  { return _images; }

  Point operator()(Point x) const
  { return _images[x]; }

  bool is_injective() const;
  bool is_bijective() const;

  /// this after other
  GMap after(GMap const &other) const;
  GMap inverse() const;

  friend bool operator==(GMap const &, GMap const &) = default;

private:
  GSet _source;
  GSet _target;
  std::vector<Point> _images;
};

struct Orbit
{
  std::vector<Point> points; ///< ascending; points.front() is the representative
  std::size_t stabilizer_class = 0;
};

struct OrbitDecomposition
{
  std::vector<Orbit> orbits;       ///< ordered by least point
  std::vector<std::size_t> orbit_of; ///< point -> orbit index
};

GSet disjoint_union(GSet const &d, GSet const &e);

/// Carrier {0..st-1} with (i, j) at i * t + j.
GSet cartesian_product(GSet const &d, GSet const &e);

inline Point pair_index(GSet const &, GSet const &e, Point i, Point j)
{ return i * e.size() + j; }

GMap diagonal(GSet const &a);

/// The G-map D x E -> A x B of two objects over A and B.
GMap external_product(GMap const &d, GMap const &e);

std::vector<Point> fixed_points(GSet const &a, ElemSet const &subgroup);
std::vector<Point> fixed_points(GSet const &a, std::size_t subgroup_class);

OrbitDecomposition orbit_decomposition(GSet const &a);

/// The G-map from the orbit of x to the orbit of y sending x to y, as
/// (point, image) pairs. Requires Stab(x) to be contained in Stab(y).
std::vector<std::pair<Point, Point>> orbit_map(GSet const &a, Point x,
                                               GSet const &b, Point y);

std::optional<GMap> gset_iso(GSet const &a, GSet const &b);

/// Indices of the stabilizer classes of all orbits, sorted: the complete
/// isomorphism invariant of a G-set.
std::vector<std::size_t> orbit_type(GSet const &a);

} // namespace gspan

#endif // GSPAN_GSET_HPP
