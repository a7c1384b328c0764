#include "gspan/gset.hpp"

#include <algorithm>

#include "gspan/error.hpp"

namespace gspan
{

namespace
{

void require_same_group(GSet const &a, GSet const &b, char const *what)
{
  if (!a.group() || !b.group() || !same_group(*a.group(), *b.group()))
    fail(ErrorKind::Shape, std::string(what) + ": G-sets over different groups");
}

} // namespace

GSet::GSet(GroupPtr group, std::uint32_t n, std::vector<Point> action)
: _group(std::move(group)), _n(n), _action(std::move(action))
{
  if (!_group)
    fail(ErrorKind::MalformedInput, "G-set without a group");
  auto const order = _group->order();
  if (_action.size() != order * n)
    fail(ErrorKind::MalformedInput, "action table has wrong size");

  for (Elem g = 0; g < order; ++g) {
    std::vector<std::uint32_t> row(_action.begin() + g * n,
                                   _action.begin() + (g + 1) * n);
    if (!is_permutation(row))
      fail(ErrorKind::MalformedInput, "action row is not a permutation");
  }
  for (Point x = 0; x < n; ++x) {
    if (act(FiniteGroup::identity(), x) != x)
      fail(ErrorKind::MalformedInput, "identity does not act trivially");
  }
  // Every element is a word in the generators, so checking the homomorphism
  // property against generators on the left covers all pairs.
  for (auto s : _group->generator_elems()) {
    for (Elem g = 0; g < order; ++g) {
      auto sg = _group->mul(s, g);
      for (Point x = 0; x < n; ++x) {
        if (act(sg, x) != act(s, act(g, x)))
          fail(ErrorKind::MalformedInput, "action is not a homomorphism");
      }
    }
  }
}

GSet GSet::from_generator_images(GroupPtr group, std::uint32_t n,
                                 std::vector<Perm> const &generator_images)
{
  if (!group)
    fail(ErrorKind::MalformedInput, "G-set without a group");
  if (generator_images.size() != group->generators().size())
    fail(ErrorKind::MalformedInput,
         "expected " + std::to_string(group->generators().size()) +
           " generator images, got " + std::to_string(generator_images.size()));
  for (auto const &p : generator_images) {
    if (p.degree() != n)
      fail(ErrorKind::MalformedInput, "generator image has wrong degree");
  }

  auto const order = group->order();
  std::vector<Point> action(order * n);
  for (Point x = 0; x < n; ++x)
    action[x] = x;
  // BFS order guarantees the parent row is filled before the child.
  for (Elem g = 1; g < order; ++g) {
    auto parent = group->word_parent(g);
    auto const &s = generator_images[group->word_generator(g)];
    for (Point x = 0; x < n; ++x)
      action[g * n + x] = s[action[parent * n + x]];
  }
  return GSet(std::move(group), n, std::move(action));
}

GSet GSet::empty(GroupPtr group)
{ return GSet(std::move(group), 0, {}); }

GSet GSet::point(GroupPtr group)
{ return trivial(std::move(group), 1); }

GSet GSet::trivial(GroupPtr group, std::uint32_t n)
{
  auto const order = group->order();
  std::vector<Point> action(order * n);
  for (std::size_t g = 0; g < order; ++g) {
    for (Point x = 0; x < n; ++x)
      action[g * n + x] = x;
  }
  return GSet(std::move(group), n, std::move(action));
}

GSet GSet::orbit(GroupPtr group, std::size_t cls)
{
  auto const &classes = group->subgroup_classes();
  if (cls >= classes.size())
    fail(ErrorKind::MalformedInput,
         "subgroup class " + std::to_string(cls) + " out of range");
  auto rep = classes[cls].representative;
  return coset_space(std::move(group), rep);
}

GSet GSet::coset_space(GroupPtr group, ElemSet const &subgroup)
{
  auto const order = group->order();
  auto const h_elems = subgroup.elements();

  std::vector<Point> coset_of(order, UINT32_MAX);
  std::vector<Elem> coset_rep;
  for (Elem g = 0; g < order; ++g) {
    if (coset_of[g] != UINT32_MAX)
      continue;
    auto id = static_cast<Point>(coset_rep.size());
    coset_rep.push_back(g);
    for (auto h : h_elems)
      coset_of[group->mul(g, h)] = id;
  }

  auto const n = static_cast<std::uint32_t>(coset_rep.size());
  std::vector<Point> action(order * n);
  for (Elem g = 0; g < order; ++g) {
    for (Point c = 0; c < n; ++c)
      action[g * n + c] = coset_of[group->mul(g, coset_rep[c])];
  }
  return GSet(std::move(group), n, std::move(action));
}

Perm GSet::action_of(Elem g) const
{
  return Perm(std::vector<std::uint32_t>(_action.begin() + g * _n,
                                         _action.begin() + (g + 1) * _n));
}

std::vector<Perm> GSet::generator_images() const
{
  std::vector<Perm> res;
  for (auto s : _group->generator_elems())
    res.push_back(action_of(s));
  return res;
}

ElemSet GSet::stabilizer(Point x) const
{
  ElemSet s(_group->order());
  for (Elem g = 0; g < _group->order(); ++g) {
    if (act(g, x) == x)
      s.insert(g);
  }
  return s;
}

bool operator==(GSet const &a, GSet const &b)
{
  if (a._n != b._n || a._action != b._action)
    return false;
  if (a._group == b._group)
    return true;
  return a._group && b._group && same_group(*a._group, *b._group);
}

GMap::GMap(GSet source, GSet target, std::vector<Point> images)
: _source(std::move(source)), _target(std::move(target)), _images(std::move(images))
{
  require_same_group(_source, _target, "G-map");
  if (_images.size() != _source.size())
    fail(ErrorKind::MalformedInput, "G-map image list has wrong length");
  for (auto y : _images) {
    if (y >= _target.size())
      fail(ErrorKind::MalformedInput, "G-map image out of range");
  }
  for (auto s : _source.group()->generator_elems()) {
    for (Point x = 0; x < _source.size(); ++x) {
      if (_images[_source.act(s, x)] != _target.act(s, _images[x]))
        fail(ErrorKind::MalformedInput, "map is not equivariant");
    }
  }
}

GMap GMap::identity(GSet const &a)
{
  std::vector<Point> images(a.size());
  for (Point x = 0; x < a.size(); ++x)
    images[x] = x;
  return GMap(a, a, std::move(images));
}

bool GMap::is_injective() const
{
  std::vector<bool> hit(_target.size(), false);
  for (auto y : _images) {
    if (hit[y])
      return false;
    hit[y] = true;
  }
  return true;
}

bool GMap::is_bijective() const
{ return _source.size() == _target.size() && is_injective(); }

GMap GMap::after(GMap const &other) const
{
  if (!(other._target == _source))
    fail(ErrorKind::Shape, "G-maps are not composable");
  std::vector<Point> images(other._images.size());
  for (Point x = 0; x < images.size(); ++x)
    images[x] = _images[other._images[x]];
  return GMap(other._source, _target, std::move(images));
}

GMap GMap::inverse() const
{
  if (!is_bijective())
    fail(ErrorKind::MalformedInput, "G-map is not invertible");
  std::vector<Point> images(_images.size());
  for (Point x = 0; x < images.size(); ++x)
    images[_images[x]] = x;
  return GMap(_target, _source, std::move(images));
}

GSet disjoint_union(GSet const &d, GSet const &e)
{
  require_same_group(d, e, "disjoint union");
  std::size_t const s = d.size(), t = e.size(), order = d.group()->order();
  std::vector<Point> action(order * (s + t));
  for (Elem g = 0; g < order; ++g) {
    for (Point x = 0; x < s; ++x)
      action[g * (s + t) + x] = d.act(g, x);
    for (Point y = 0; y < t; ++y)
      action[g * (s + t) + s + y] = s + e.act(g, y);
  }
  return GSet(d.group(), s + t, std::move(action));
}

GSet cartesian_product(GSet const &d, GSet const &e)
{
  require_same_group(d, e, "cartesian product");
  std::size_t const s = d.size(), t = e.size(), order = d.group()->order();
  std::vector<Point> action(order * s * t);
  for (Elem g = 0; g < order; ++g) {
    for (Point i = 0; i < s; ++i) {
      for (Point j = 0; j < t; ++j)
        action[g * s * t + i * t + j] = d.act(g, i) * t + e.act(g, j);
    }
  }
  return GSet(d.group(), s * t, std::move(action));
}

GMap diagonal(GSet const &a)
{
  std::vector<Point> images(a.size());
  for (Point x = 0; x < a.size(); ++x)
    images[x] = x * a.size() + x;
  return GMap(a, cartesian_product(a, a), std::move(images));
}

GMap external_product(GMap const &d, GMap const &e)
{
  auto src = cartesian_product(d.source(), e.source());
  auto tgt = cartesian_product(d.target(), e.target());
  std::vector<Point> images(src.size());
  auto const t = e.source().size();
  for (Point i = 0; i < d.source().size(); ++i) {
    for (Point j = 0; j < t; ++j)
      images[i * t + j] = d(i) * e.target().size() + e(j);
  }
  return GMap(std::move(src), std::move(tgt), std::move(images));
}

std::vector<Point> fixed_points(GSet const &a, ElemSet const &subgroup)
{
  auto const elems = subgroup.elements();
  std::vector<Point> res;
  for (Point x = 0; x < a.size(); ++x) {
    bool fixed = std::all_of(elems.begin(), elems.end(),
                             [&](Elem h) { return a.act(h, x) == x; });
    if (fixed)
      res.push_back(x);
  }
  return res;
}

std::vector<Point> fixed_points(GSet const &a, std::size_t subgroup_class)
{
  auto const &classes = a.group()->subgroup_classes();
  if (subgroup_class >= classes.size())
    fail(ErrorKind::MalformedInput, "subgroup class out of range");
  return fixed_points(a, classes[subgroup_class].representative);
}

OrbitDecomposition orbit_decomposition(GSet const &a)
{
  OrbitDecomposition dec;
  dec.orbit_of.assign(a.size(), SIZE_MAX);
  auto const &grp = *a.group();
  for (Point x = 0; x < a.size(); ++x) {
    if (dec.orbit_of[x] != SIZE_MAX)
      continue;
    Orbit orb;
    auto const id = dec.orbits.size();
    orb.points.push_back(x);
    dec.orbit_of[x] = id;
    for (std::size_t cur = 0; cur < orb.points.size(); ++cur) {
      for (auto s : grp.generator_elems()) {
        auto y = a.act(s, orb.points[cur]);
        if (dec.orbit_of[y] == SIZE_MAX) {
          dec.orbit_of[y] = id;
          orb.points.push_back(y);
        }
      }
    }
    std::sort(orb.points.begin(), orb.points.end());
    orb.stabilizer_class = grp.class_of(a.stabilizer(x));
    dec.orbits.push_back(std::move(orb));
  }
  return dec;
}

std::vector<std::pair<Point, Point>> orbit_map(GSet const &a, Point x,
                                               GSet const &b, Point y)
{
  auto const &grp = *a.group();
  std::vector<std::pair<Point, Point>> res;
  std::vector<bool> seen(a.size(), false);
  for (Elem g = 0; g < grp.order(); ++g) {
    auto gx = a.act(g, x);
    if (!seen[gx]) {
      seen[gx] = true;
      res.emplace_back(gx, b.act(g, y));
    }
  }
  return res;
}

std::optional<GMap> gset_iso(GSet const &a, GSet const &b)
{
  require_same_group(a, b, "gset_iso");
  if (a.size() != b.size())
    return std::nullopt;

  auto da = orbit_decomposition(a);
  auto db = orbit_decomposition(b);
  if (da.orbits.size() != db.orbits.size())
    return std::nullopt;

  std::vector<Point> images(a.size(), UINT32_MAX);
  std::vector<bool> used(db.orbits.size(), false);
  for (auto const &oa : da.orbits) {
    auto const x = oa.points.front();
    auto const stab_x = a.stabilizer(x);
    bool matched = false;
    for (std::size_t k = 0; k < db.orbits.size() && !matched; ++k) {
      if (used[k] || db.orbits[k].stabilizer_class != oa.stabilizer_class)
        continue;
      // Conjugate stabilizers: some point of the orbit has exactly Stab(x).
      for (auto y : db.orbits[k].points) {
        if (b.stabilizer(y) == stab_x) {
          for (auto [p, q] : orbit_map(a, x, b, y))
            images[p] = q;
          used[k] = matched = true;
          break;
        }
      }
    }
    if (!matched)
      return std::nullopt;
  }
  return GMap(a, b, std::move(images));
}

std::vector<std::size_t> orbit_type(GSet const &a)
{
  std::vector<std::size_t> res;
  for (auto const &o : orbit_decomposition(a).orbits)
    res.push_back(o.stabilizer_class);
  std::sort(res.begin(), res.end());
  return res;
}

} // namespace gspan
