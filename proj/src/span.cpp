#include "gspan/span.hpp"

#include "gspan/error.hpp"

namespace gspan
{

Span::Span(GSet src, GSet tgt, GSet apex, std::vector<Point> leg)
: _src(std::move(src)), _tgt(std::move(tgt)), _apex(std::move(apex)), _leg(std::move(leg))
{
  if (!same_group(*_src.group(), *_tgt.group()) ||
      !same_group(*_src.group(), *_apex.group()))
    fail(ErrorKind::Shape, "span over different groups");
  if (_leg.size() != _apex.size())
    fail(ErrorKind::MalformedInput, "span leg has wrong length");
  auto const nb = _src.size() * _tgt.size();
  for (auto p : _leg) {
    if (p >= nb)
      fail(ErrorKind::MalformedInput, "span leg image out of range");
  }
  for (auto s : _apex.group()->generator_elems()) {
    for (Point d = 0; d < _apex.size(); ++d) {
      auto p = _leg[d];
      auto const na = _src.size();
      auto expected = _tgt.act(s, p / na) * na + _src.act(s, p % na);
      if (_leg[_apex.act(s, d)] != expected)
        fail(ErrorKind::MalformedInput, "span leg is not equivariant");
    }
  }
}

GMap Span::leg_map() const
{ return GMap(_apex, cartesian_product(_tgt, _src), _leg); }

Span id_span(GSet const &a)
{ return Span(a, a, a, diagonal(a).images()); }

Span graph_span(GMap const &f)
{
  auto const &a = f.source();
  std::vector<Point> leg(a.size());
  for (Point x = 0; x < a.size(); ++x)
    leg[x] = f(x) * a.size() + x;
  return Span(a, f.target(), a, std::move(leg));
}

Span reversed_graph_span(GMap const &f)
{
  auto const &a = f.source();
  auto const nb = f.target().size();
  std::vector<Point> leg(a.size());
  for (Point x = 0; x < a.size(); ++x)
    leg[x] = x * nb + f(x);
  return Span(f.target(), a, a, std::move(leg));
}

Span compose_spans(Span const &outer, Span const &inner)
{
  if (!(outer.src() == inner.tgt()))
    fail(ErrorKind::Shape,
         "composition shape mismatch: outer source has " +
           std::to_string(outer.src().size()) + " points, inner target has " +
           std::to_string(inner.tgt().size()));

  auto const &e = outer.apex();
  auto const &d = inner.apex();
  auto const &grp = *e.group();

  // (e, d) with e outer, d inner; keep pairs over the same point of B.
  std::vector<std::uint32_t> index(static_cast<std::size_t>(e.size()) * d.size(), UINT32_MAX);
  std::vector<std::pair<Point, Point>> pairs;
  for (Point x = 0; x < e.size(); ++x) {
    for (Point y = 0; y < d.size(); ++y) {
      if (outer.src_leg(x) == inner.tgt_leg(y)) {
        index[static_cast<std::size_t>(x) * d.size() + y] = static_cast<std::uint32_t>(pairs.size());
        pairs.emplace_back(x, y);
      }
    }
  }

  auto const m = static_cast<std::uint32_t>(pairs.size());
  std::vector<Point> action(grp.order() * m);
  for (Elem g = 0; g < grp.order(); ++g) {
    for (Point k = 0; k < m; ++k) {
      auto [x, y] = pairs[k];
      action[g * m + k] = index[static_cast<std::size_t>(e.act(g, x)) * d.size() + d.act(g, y)];
    }
  }
  GSet apex(e.group(), m, std::move(action));

  auto const na = inner.src().size();
  std::vector<Point> leg(m);
  for (Point k = 0; k < m; ++k) {
    auto [x, y] = pairs[k];
    leg[k] = outer.tgt_leg(x) * na + inner.src_leg(y);
  }
  return Span(inner.src(), outer.tgt(), std::move(apex), std::move(leg));
}

Span span_disjoint_union(Span const &s, Span const &t)
{
  if (!(s.src() == t.src()) || !(s.tgt() == t.tgt()))
    fail(ErrorKind::Shape, "disjoint union of spans with different endpoints");
  auto leg = s.leg();
  leg.insert(leg.end(), t.leg().begin(), t.leg().end());
  return Span(s.src(), s.tgt(), disjoint_union(s.apex(), t.apex()), std::move(leg));
}

Span span_external_product(Span const &s, Span const &t)
{
  auto src = cartesian_product(s.src(), t.src());
  auto tgt = cartesian_product(s.tgt(), t.tgt());
  auto apex = cartesian_product(s.apex(), t.apex());
  auto const ns = src.size();
  std::vector<Point> leg(apex.size());
  for (Point x = 0; x < s.apex().size(); ++x) {
    for (Point y = 0; y < t.apex().size(); ++y) {
      auto b = s.tgt_leg(x) * t.tgt().size() + t.tgt_leg(y);
      auto a = s.src_leg(x) * t.src().size() + t.src_leg(y);
      leg[x * t.apex().size() + y] = b * ns + a;
    }
  }
  return Span(std::move(src), std::move(tgt), std::move(apex), std::move(leg));
}

Span zero_span(GSet const &src, GSet const &tgt)
{ return Span(src, tgt, GSet::empty(src.group()), {}); }

std::optional<TwoCell> span_iso(Span const &s, Span const &t)
{
  if (!(s.src() == t.src()) || !(s.tgt() == t.tgt()))
    fail(ErrorKind::Shape, "span_iso on spans with different endpoints");
  auto const &a = s.apex();
  auto const &b = t.apex();
  if (a.size() != b.size())
    return std::nullopt;

  auto da = orbit_decomposition(a);
  auto db = orbit_decomposition(b);
  if (da.orbits.size() != db.orbits.size())
    return std::nullopt;

  // Two apex orbits are isomorphic over B x A iff one contains a point with
  // the same stabilizer and the same image as the other's representative.
  // That is an equivalence relation, so greedy matching is complete.
  std::vector<Point> images(a.size(), UINT32_MAX);
  std::vector<bool> used(db.orbits.size(), false);
  for (auto const &oa : da.orbits) {
    auto const x = oa.points.front();
    auto const stab_x = a.stabilizer(x);
    bool matched = false;
    for (std::size_t k = 0; k < db.orbits.size() && !matched; ++k) {
      if (used[k] || db.orbits[k].stabilizer_class != oa.stabilizer_class ||
          db.orbits[k].points.size() != oa.points.size())
        continue;
      for (auto y : db.orbits[k].points) {
        if (t.leg()[y] == s.leg()[x] && b.stabilizer(y) == stab_x) {
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
  return TwoCell{s, t, GMap(a, b, std::move(images))};
}

Span epsilon_span(GSet const &a)
{
  auto one = GSet::point(a.group());
  auto aa = cartesian_product(a, a);
  // Target 1 has one point, so the leg index into 1 x (A x A) is the A x A index.
  return Span(std::move(aa), std::move(one), a, diagonal(a).images());
}

Span eta_span(GSet const &a)
{
  auto one = GSet::point(a.group());
  auto aa = cartesian_product(a, a);
  // Source 1 has one point: index into (A x A) x 1 is the A x A index.
  return Span(std::move(one), std::move(aa), a, diagonal(a).images());
}

Span triangle_left(GSet const &a)
{
  auto first = span_external_product(eta_span(a), id_span(a));
  auto second = span_external_product(id_span(a), epsilon_span(a));
  return compose_spans(second, first);
}

Span triangle_right(GSet const &a)
{
  auto first = span_external_product(id_span(a), eta_span(a));
  auto second = span_external_product(epsilon_span(a), id_span(a));
  return compose_spans(second, first);
}

} // namespace gspan
