#include "gspan/random.hpp"

#include <numeric>

namespace gspan
{

Perm Random::perm(std::uint32_t degree)
{
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint32_t{0});
  for (std::uint32_t i = degree; i > 1; --i)
    std::swap(images[i - 1], images[below(i)]);
  return Perm(std::move(images));
}

GSet relabel(GSet const &a, Perm const &pi)
{
  auto const n = a.size();
  auto const &grp = *a.group();
  std::vector<Point> action(grp.order() * static_cast<std::size_t>(n));
  for (Elem g = 0; g < grp.order(); ++g) {
    for (Point x = 0; x < n; ++x)
      action[g * static_cast<std::size_t>(n) + pi[x]] = pi[a.act(g, x)];
  }
  return GSet(a.group(), n, std::move(action));
}

Span relabel_apex(Span const &s, Perm const &pi)
{
  std::vector<Point> leg(s.leg().size());
  for (Point x = 0; x < leg.size(); ++x)
    leg[pi[x]] = s.leg()[x];
  return Span(s.src(), s.tgt(), relabel(s.apex(), pi), std::move(leg));
}

GSet random_gset(GroupPtr const &group, Random &rng, std::size_t max_size)
{
  auto const &classes = group->subgroup_classes();
  auto const target = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(max_size)));
  auto res = GSet::empty(group);
  while (true) {
    std::vector<std::size_t> fits;
    for (auto const &c : classes) {
      if (res.size() + group->order() / c.order() <= target)
        fits.push_back(c.index);
    }
    if (fits.empty())
      break;
    res = disjoint_union(res, GSet::orbit(group, fits[rng.below(fits.size())]));
  }
  return relabel(res, rng.perm(res.size()));
}

std::vector<GSet> all_gsets(GroupPtr const &group, std::size_t max_size)
{
  auto const nclasses = group->subgroup_classes().size();
  std::vector<GSet> orbits;
  for (std::size_t c = 0; c < nclasses; ++c)
    orbits.push_back(GSet::orbit(group, c));

  std::vector<GSet> res;
  auto extend = [&](auto &&self, GSet const &cur, std::size_t from) -> void {
    res.push_back(cur);
    for (std::size_t c = from; c < nclasses; ++c) {
      if (cur.size() + orbits[c].size() <= max_size)
        self(self, disjoint_union(cur, orbits[c]), c);
    }
  };
  extend(extend, GSet::empty(group), 0);
  return res;
}

std::optional<GMap> random_gmap(GSet const &a, GSet const &b, Random &rng)
{
  std::vector<Point> images(a.size(), 0);
  for (auto const &orb : orbit_decomposition(a).orbits) {
    auto const x = orb.points.front();
    auto const stab = a.stabilizer(x).elements();
    std::vector<Point> candidates;
    for (Point y = 0; y < b.size(); ++y) {
      bool ok = true;
      for (auto h : stab)
        ok = ok && b.act(h, y) == y;
      if (ok)
        candidates.push_back(y);
    }
    if (candidates.empty())
      return std::nullopt;
    for (auto [p, q] : orbit_map(a, x, b, candidates[rng.below(candidates.size())]))
      images[p] = q;
  }
  return GMap(a, b, std::move(images));
}

Span random_span(GSet const &src, GSet const &tgt, Random &rng, std::size_t max_orbits)
{
  auto res = zero_span(src, tgt);
  auto const &grp = *src.group();
  auto const na = src.size();
  auto const npoints = na * tgt.size();
  if (npoints == 0)
    return res;
  auto const k = rng.between(0, static_cast<std::int64_t>(max_orbits));
  for (std::int64_t i = 0; i < k; ++i) {
    auto const &cls = grp.subgroup_classes()[rng.below(grp.subgroup_classes().size())];
    std::vector<Point> fixed;
    for (Point p = 0; p < npoints; ++p) {
      bool ok = true;
      for (auto h : cls.elements)
        ok = ok && tgt.act(h, p / na) * na + src.act(h, p % na) == p;
      if (ok)
        fixed.push_back(p);
    }
    if (fixed.empty())
      continue;
    auto key = BasisKey{static_cast<std::uint32_t>(cls.index), fixed[rng.below(fixed.size())]};
    res = span_disjoint_union(res, basis_span(src, tgt, key));
  }
  return relabel_apex(res, rng.perm(res.apex().size()));
}

BurnsideElt random_elt(GSet const &src, GSet const &tgt, Random &rng, std::size_t max_terms)
{
  BurnsideElt x(src, tgt);
  auto basis = hom_basis(src, tgt);
  if (basis.empty())
    return x;
  auto const k = rng.between(0, static_cast<std::int64_t>(max_terms));
  for (std::int64_t i = 0; i < k; ++i)
    x.add(basis[rng.below(basis.size())], rng.between(-2, 2));
  return x;
}

OperadObj random_operad(GroupPtr const &group, std::uint32_t arity, Random &rng)
{
  std::vector<std::uint32_t> values;
  values.reserve(group->order() * arity);
  for (Elem h = 0; h < group->order(); ++h) {
    auto p = rng.perm(arity);
    values.insert(values.end(), p.images().begin(), p.images().end());
  }
  return OperadObj(group, arity, std::move(values));
}

FreeAlgObj random_free_alg(GSet const &over, std::uint32_t level, Random &rng, double base_prob)
{
  auto op = random_operad(over.group(), level, rng);
  std::vector<BasedPoint> tuple(level);
  for (auto &a : tuple) {
    if (over.size() > 0 && !rng.chance(base_prob))
      a = static_cast<Point>(rng.below(over.size()));
  }
  return normalize(over, op, tuple);
}

} // namespace gspan
