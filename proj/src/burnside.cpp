#include "gspan/burnside.hpp"

#include <algorithm>

#include "gspan/error.hpp"

namespace gspan
{

namespace
{

/// g acting on the index b * |src| + a of tgt x src.
Point act_pair(GSet const &src, GSet const &tgt, Elem g, Point p)
{
  auto const na = src.size();
  return tgt.act(g, p / na) * na + src.act(g, p % na);
}

void require_composable(BurnsideElt const &y, BurnsideElt const &x)
{
  if (!(y.src() == x.tgt()))
    fail(ErrorKind::Shape, "Burnside composition shape mismatch: " +
                             std::to_string(y.src().size()) + "-point source vs " +
                             std::to_string(x.tgt().size()) + "-point target");
}

} // namespace

std::int64_t BurnsideElt::coefficient(BasisKey const &k) const
{
  auto it = _terms.find(k);
  return it == _terms.end() ? 0 : it->second;
}

void BurnsideElt::add(BasisKey const &k, std::int64_t c)
{
  if (c == 0)
    return;
  auto &slot = _terms[k];
  slot += c;
  if (slot == 0)
    _terms.erase(k);
}

BurnsideElt &BurnsideElt::operator+=(BurnsideElt const &other)
{
  if (!(_src == other._src) || !(_tgt == other._tgt))
    fail(ErrorKind::Shape, "sum of Burnside elements with different endpoints");
  for (auto const &[k, c] : other._terms)
    add(k, c);
  return *this;
}

BurnsideElt operator-(BurnsideElt a, BurnsideElt const &b)
{ return a += (-1) * b; }

BurnsideElt operator*(std::int64_t c, BurnsideElt a)
{
  if (c == 0) {
    a._terms.clear();
    return a;
  }
  for (auto &[k, v] : a._terms)
    v *= c;
  return a;
}

BasisKey orbit_key(Span const &s, Point x)
{
  auto const &grp = *s.apex().group();
  auto const stab = s.apex().stabilizer(x);
  auto const cls = grp.class_of(stab);
  auto const g0 = grp.conjugator_to_representative(stab);
  auto const &normalizer = grp.subgroup_classes()[cls].normalizer;

  // Every g with g Stab g^-1 = H lies in N(H) g0.
  auto const p = s.leg()[x];
  Point best = UINT32_MAX;
  for (auto n : normalizer.elements())
    best = std::min(best, act_pair(s.src(), s.tgt(), grp.mul(n, g0), p));
  return BasisKey{static_cast<std::uint32_t>(cls), best};
}

SpanClass span_class(Span const &s)
{
  SpanClass c{s.src(), s.tgt(), {}, s};
  for (auto const &orb : orbit_decomposition(s.apex()).orbits)
    c.invariant.push_back(orbit_key(s, orb.points.front()));
  std::sort(c.invariant.begin(), c.invariant.end());
  return c;
}

BurnsideElt to_elt(SpanClass const &c)
{
  BurnsideElt e(c.src, c.tgt);
  for (auto const &k : c.invariant)
    e.add(k, 1);
  return e;
}

BurnsideElt class_elt(Span const &s)
{ return to_elt(span_class(s)); }

Span basis_span(GSet const &src, GSet const &tgt, BasisKey const &key)
{
  auto const &grp = src.group();
  auto apex = GSet::orbit(grp, key.subgroup_class);
  std::vector<Point> leg(apex.size(), UINT32_MAX);
  for (Elem g = 0; g < grp->order(); ++g) {
    auto k = apex.act(g, 0);
    if (leg[k] == UINT32_MAX)
      leg[k] = act_pair(src, tgt, g, key.point);
  }
  return Span(src, tgt, std::move(apex), std::move(leg));
}

std::vector<BasisKey> hom_basis(GSet const &a, GSet const &b)
{
  auto const &grp = *a.group();
  auto const npoints = a.size() * b.size();
  std::vector<BasisKey> basis;

  for (auto const &cls : grp.subgroup_classes()) {
    std::vector<bool> seen(npoints, false);
    auto const normalizer = cls.normalizer.elements();
    for (Point p = 0; p < npoints; ++p) {
      if (seen[p])
        continue;
      bool fixed = std::all_of(cls.elements.begin(), cls.elements.end(), [&](Elem h) {
        return act_pair(a, b, h, p) == p;
      });
      if (!fixed)
        continue;
      Point least = p;
      for (auto n : normalizer) {
        auto q = act_pair(a, b, n, p);
        seen[q] = true;
        least = std::min(least, q);
      }
      basis.push_back(BasisKey{static_cast<std::uint32_t>(cls.index), least});
    }
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

BurnsideElt zero_elt(GSet const &src, GSet const &tgt)
{ return BurnsideElt(src, tgt); }

BurnsideElt identity_elt(GSet const &a)
{ return class_elt(id_span(a)); }

BurnsideElt compose_elts(BurnsideElt const &y, BurnsideElt const &x)
{
  require_composable(y, x);
  BurnsideElt res(x.src(), y.tgt());

  std::vector<std::pair<Span, std::int64_t>> xs;
  for (auto const &[k, c] : x.terms())
    xs.emplace_back(basis_span(x.src(), x.tgt(), k), c);

  for (auto const &[ky, cy] : y.terms()) {
    auto sy = basis_span(y.src(), y.tgt(), ky);
    for (auto const &[sx, cx] : xs) {
      auto composite = compose_spans(sy, sx);
      for (auto const &k : span_class(composite).invariant)
        res.add(k, cy * cx);
    }
  }
  return res;
}

BurnsideElt external_product_elts(BurnsideElt const &x, BurnsideElt const &y)
{
  BurnsideElt res(cartesian_product(x.src(), y.src()), cartesian_product(x.tgt(), y.tgt()));
  for (auto const &[kx, cx] : x.terms()) {
    auto sx = basis_span(x.src(), x.tgt(), kx);
    for (auto const &[ky, cy] : y.terms()) {
      auto prod = span_external_product(sx, basis_span(y.src(), y.tgt(), ky));
      for (auto const &k : span_class(prod).invariant)
        res.add(k, cx * cy);
    }
  }
  return res;
}

std::vector<std::vector<MarksVector>> burnside_ring(GroupPtr const &group)
{
  auto one = GSet::point(group);
  auto const nclasses = group->subgroup_classes().size();
  std::vector<std::vector<MarksVector>> table(nclasses,
                                              std::vector<MarksVector>(nclasses));
  for (std::size_t i = 0; i < nclasses; ++i) {
    BurnsideElt xi(one, one);
    xi.add({static_cast<std::uint32_t>(i), 0}, 1);
    for (std::size_t j = 0; j < nclasses; ++j) {
      BurnsideElt xj(one, one);
      xj.add({static_cast<std::uint32_t>(j), 0}, 1);
      auto prod = compose_elts(xi, xj);
      MarksVector coeffs(nclasses, 0);
      for (auto const &[k, c] : prod.terms())
        coeffs[k.subgroup_class] = c;
      table[i][j] = std::move(coeffs);
    }
  }
  return table;
}

IntMatrix table_of_marks(GroupPtr const &group)
{
  auto const &classes = group->subgroup_classes();
  IntMatrix m(classes.size(), std::vector<std::int64_t>(classes.size(), 0));
  for (std::size_t k = 0; k < classes.size(); ++k) {
    auto orbit = GSet::orbit(group, k);
    for (std::size_t h = 0; h < classes.size(); ++h)
      m[k][h] = static_cast<std::int64_t>(fixed_points(orbit, classes[h].representative).size());
  }
  return m;
}

MarksVector marks_of(BurnsideElt const &x)
{
  if (x.src().size() != 1 || x.tgt().size() != 1)
    fail(ErrorKind::Shape, "marks are defined on End(1) only");
  auto const &classes = x.src().group()->subgroup_classes();
  MarksVector marks(classes.size(), 0);
  for (auto const &[k, c] : x.terms()) {
    auto apex = basis_span(x.src(), x.tgt(), k).apex();
    for (std::size_t h = 0; h < classes.size(); ++h)
      marks[h] += c * static_cast<std::int64_t>(fixed_points(apex, classes[h].representative).size());
  }
  return marks;
}

BurnsideElt dual_of_gmap(GMap const &f)
{
  auto const &a = f.source();
  auto const &b = f.target();
  auto unit = span_external_product(id_span(b), eta_span(a));
  auto middle = span_external_product(span_external_product(id_span(b), graph_span(f)),
                                      id_span(a));
  auto counit = span_external_product(epsilon_span(b), id_span(a));
  return class_elt(compose_spans(counit, compose_spans(middle, unit)));
}

GMap orbit_projection(GroupPtr const &group, std::size_t sub_class, std::size_t super_class)
{
  auto const &classes = group->subgroup_classes();
  if (sub_class >= classes.size() || super_class >= classes.size())
    fail(ErrorKind::MalformedInput, "subgroup class out of range");
  auto const &h = classes[sub_class];
  auto const &k = classes[super_class];

  // Find g with g^-1 H g inside K; then xH |-> xgK is well defined.
  for (Elem g = 0; g < group->order(); ++g) {
    auto gi = group->inv(g);
    bool inside = std::all_of(h.elements.begin(), h.elements.end(), [&](Elem x) {
      return k.representative.contains(group->conj(gi, x));
    });
    if (!inside)
      continue;
    auto src = GSet::orbit(group, sub_class);
    auto tgt = GSet::orbit(group, super_class);
    std::vector<Point> images(src.size(), UINT32_MAX);
    for (Elem x = 0; x < group->order(); ++x)
      images[src.act(x, 0)] = tgt.act(group->mul(x, g), 0);
    return GMap(std::move(src), std::move(tgt), std::move(images));
  }
  fail(ErrorKind::MalformedInput, "subgroup class " + std::to_string(sub_class) +
                                    " is not subconjugate to class " +
                                    std::to_string(super_class));
}

BurnsideElt transfer(GroupPtr const &group, std::size_t sub_class, std::size_t super_class)
{ return dual_of_gmap(orbit_projection(group, sub_class, super_class)); }

std::vector<std::size_t> presheaf_at_orbits(GSet const &b)
{
  auto const &group = b.group();
  std::vector<std::size_t> ranks;
  for (std::size_t c = 0; c < group->subgroup_classes().size(); ++c)
    ranks.push_back(hom_basis(GSet::orbit(group, c), b).size());
  return ranks;
}

BurnsideElt triangle_left_elt(GSet const &a)
{
  auto eta = class_elt(eta_span(a));
  auto eps = class_elt(epsilon_span(a));
  auto id = identity_elt(a);
  return compose_elts(external_product_elts(id, eps), external_product_elts(eta, id));
}

BurnsideElt triangle_right_elt(GSet const &a)
{
  auto eta = class_elt(eta_span(a));
  auto eps = class_elt(epsilon_span(a));
  auto id = identity_elt(a);
  return compose_elts(external_product_elts(eps, id), external_product_elts(id, eta));
}

} // namespace gspan
