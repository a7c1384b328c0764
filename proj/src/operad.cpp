#include "gspan/operad.hpp"

#include <algorithm>
#include <numeric>

#include "gspan/error.hpp"

namespace gspan
{

namespace sym
{

Perm gamma(Perm const &sigma, std::vector<Perm> const &taus)
{
  auto const k = sigma.degree();
  if (taus.size() != k)
    fail(ErrorKind::Shape, "gamma: expected " + std::to_string(k) + " inputs, got " +
                             std::to_string(taus.size()));

  std::vector<std::uint32_t> src_off(k + 1, 0);
  for (std::uint32_t i = 0; i < k; ++i)
    src_off[i + 1] = src_off[i] + taus[i].degree();

  auto const inv = sigma.inverse();
  std::vector<std::uint32_t> tgt_off(k, 0);
  std::uint32_t acc = 0;
  for (std::uint32_t pos = 0; pos < k; ++pos) {
    tgt_off[inv[pos]] = acc;
    acc += taus[inv[pos]].degree();
  }

  std::vector<std::uint32_t> images(src_off[k]);
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t t = 0; t < taus[i].degree(); ++t)
      images[src_off[i] + t] = tgt_off[i] + taus[i][t];
  }
  return Perm(std::move(images));
}

Perm omega(Perm const &sigma, Perm const &tau)
{
  auto const m = sigma.degree(), n = tau.degree();
  std::vector<std::uint32_t> images(m * n);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < n; ++j)
      images[i * n + j] = sigma[i] * n + tau[j];
  }
  return Perm(std::move(images));
}

Perm restrict_slots(Perm const &p, std::vector<bool> const &keep)
{
  auto const n = p.degree();
  std::vector<std::uint32_t> rank(n, 0);
  std::vector<bool> kept_value(n, false);
  for (std::uint32_t s = 0; s < n; ++s) {
    if (keep[s])
      kept_value[p[s]] = true;
  }
  std::uint32_t r = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    rank[v] = r;
    if (kept_value[v])
      ++r;
  }
  std::vector<std::uint32_t> images;
  images.reserve(r);
  for (std::uint32_t s = 0; s < n; ++s) {
    if (keep[s])
      images.push_back(rank[p[s]]);
  }
  return Perm(std::move(images));
}

Perm delete_slot(Perm const &p, std::uint32_t i)
{
  std::vector<bool> keep(p.degree(), true);
  keep[i] = false;
  return restrict_slots(p, keep);
}

} // namespace sym

namespace
{

void require_same_group(OperadObj const &a, OperadObj const &b)
{
  if (!a.group() || !b.group() || !same_group(*a.group(), *b.group()))
    fail(ErrorKind::Shape, "operad objects over different groups");
}

template<typename F>
OperadObj pointwise(GroupPtr const &group, std::uint32_t arity, F &&f)
{
  std::vector<std::uint32_t> values;
  values.reserve(group->order() * arity);
  for (Elem h = 0; h < group->order(); ++h) {
    Perm p = f(h);
    values.insert(values.end(), p.images().begin(), p.images().end());
  }
  return OperadObj(group, arity, std::move(values));
}

void check_level(std::size_t level, AlgConfig const &cfg)
{
  if (level > cfg.max_level)
    fail(ErrorKind::SizeLimit, "level " + std::to_string(level) +
                                 " exceeds the configured maximum " +
                                 std::to_string(cfg.max_level));
}

} // namespace

OperadObj::OperadObj(GroupPtr group, std::uint32_t arity, std::vector<std::uint32_t> values)
: _group(std::move(group)), _arity(arity), _values(std::move(values))
{
  if (!_group)
    fail(ErrorKind::MalformedInput, "operad object without a group");
  if (_values.size() != _group->order() * static_cast<std::size_t>(arity))
    fail(ErrorKind::MalformedInput, "operad object value table has wrong size");
  for (Elem h = 0; h < _group->order(); ++h) {
    std::vector<std::uint32_t> row(_values.begin() + h * arity,
                                   _values.begin() + (h + 1) * arity);
    if (!is_permutation(row))
      fail(ErrorKind::MalformedInput, "operad object value is not a permutation");
  }
}

OperadObj OperadObj::constant(GroupPtr group, Perm const &p)
{
  std::vector<std::uint32_t> values;
  values.reserve(group->order() * p.degree());
  for (Elem h = 0; h < group->order(); ++h)
    values.insert(values.end(), p.images().begin(), p.images().end());
  auto arity = p.degree();
  return OperadObj(std::move(group), arity, std::move(values));
}

OperadObj OperadObj::from_action(GSet const &a)
{ return OperadObj(a.group(), a.size(), a.action_table()); }

Perm OperadObj::value(Elem h) const
{
  return Perm(std::vector<std::uint32_t>(_values.begin() + h * _arity,
                                         _values.begin() + (h + 1) * _arity));
}

bool OperadObj::is_homomorphism() const
{
  auto const &grp = *_group;
  for (std::uint32_t i = 0; i < _arity; ++i) {
    if (at(FiniteGroup::identity(), i) != i)
      return false;
  }
  for (auto s : grp.generator_elems()) {
    for (Elem g = 0; g < grp.order(); ++g) {
      auto sg = grp.mul(s, g);
      for (std::uint32_t i = 0; i < _arity; ++i) {
        if (at(sg, i) != at(s, at(g, i)))
          return false;
      }
    }
  }
  return true;
}

OperadObj operad_action(Elem g, OperadObj const &x)
{
  auto const &grp = *x.group();
  return pointwise(x.group(), x.arity(), [&](Elem h) { return x.value(grp.mul(h, g)); });
}

OperadObj operad_sigma_action(OperadObj const &x, Perm const &sigma)
{
  if (sigma.degree() != x.arity())
    fail(ErrorKind::Shape, "sigma action: degree does not match arity");
  return pointwise(x.group(), x.arity(), [&](Elem h) { return x.value(h) * sigma; });
}

OperadObj operad_left_translate(Perm const &sigma, OperadObj const &x)
{
  if (sigma.degree() != x.arity())
    fail(ErrorKind::Shape, "left translate: degree does not match arity");
  return pointwise(x.group(), x.arity(), [&](Elem h) { return sigma * x.value(h); });
}

OperadObj operad_gamma(OperadObj const &x, std::vector<OperadObj> const &ys)
{
  if (ys.size() != x.arity())
    fail(ErrorKind::Shape, "operad_gamma: arity mismatch");
  std::uint32_t total = 0;
  for (auto const &y : ys) {
    require_same_group(x, y);
    total += y.arity();
  }
  return pointwise(x.group(), total, [&](Elem h) {
    std::vector<Perm> taus;
    taus.reserve(ys.size());
    for (auto const &y : ys)
      taus.push_back(y.value(h));
    return sym::gamma(x.value(h), taus);
  });
}

OperadObj sigma_i(OperadObj const &x, std::uint32_t i)
{
  if (i >= x.arity())
    fail(ErrorKind::Domain, "sigma_i: index " + std::to_string(i + 1) +
                              " out of range 1.." + std::to_string(x.arity()));
  return pointwise(x.group(), x.arity() - 1,
                   [&](Elem h) { return sym::delete_slot(x.value(h), i); });
}

OperadObj omega_pair(OperadObj const &x, OperadObj const &y)
{
  require_same_group(x, y);
  return pointwise(x.group(), x.arity() * y.arity(),
                   [&](Elem h) { return sym::omega(x.value(h), y.value(h)); });
}

BasedMap::BasedMap(GSet source, GSet target, std::vector<BasedPoint> images)
: _source(std::move(source)), _target(std::move(target)), _images(std::move(images))
{
  if (_images.size() != _source.size())
    fail(ErrorKind::MalformedInput, "based map image list has wrong length");
  for (auto const &y : _images) {
    if (y && *y >= _target.size())
      fail(ErrorKind::MalformedInput, "based map image out of range");
  }
  auto const &grp = *_source.group();
  for (auto s : grp.generator_elems()) {
    for (Point x = 0; x < _source.size(); ++x) {
      auto lhs = _images[_source.act(s, x)];
      auto rhs = _images[x] ? BasedPoint(_target.act(s, *_images[x])) : std::nullopt;
      if (lhs != rhs)
        fail(ErrorKind::MalformedInput, "based map is not equivariant");
    }
  }
}

BasedMap BasedMap::from_plus_images(GSet source, GSet target,
                                    std::vector<std::int64_t> const &images)
{
  if (images.size() != static_cast<std::size_t>(source.size()) + 1)
    fail(ErrorKind::MalformedInput, "based map needs |A| + 1 images");
  if (images[0] != 0)
    fail(ErrorKind::MalformedInput, "based map does not fix the basepoint");
  std::vector<BasedPoint> res;
  for (std::size_t k = 1; k < images.size(); ++k) {
    auto y = images[k];
    if (y < 0 || y > static_cast<std::int64_t>(target.size()))
      fail(ErrorKind::MalformedInput, "based map image out of range");
    res.push_back(y == 0 ? std::nullopt : BasedPoint(static_cast<Point>(y - 1)));
  }
  return BasedMap(std::move(source), std::move(target), std::move(res));
}

BasedMap BasedMap::from_gmap(GMap const &f)
{
  std::vector<BasedPoint> images(f.images().begin(), f.images().end());
  return BasedMap(f.source(), f.target(), std::move(images));
}

BasedMap BasedMap::retraction(GMap const &inclusion)
{
  if (!inclusion.is_injective())
    fail(ErrorKind::MalformedInput, "retraction requires an injective map");
  std::vector<BasedPoint> images(inclusion.target().size());
  for (Point a = 0; a < inclusion.source().size(); ++a)
    images[inclusion(a)] = a;
  return BasedMap(inclusion.target(), inclusion.source(), std::move(images));
}

FreeAlgObj normalize(GSet const &over, OperadObj const &op,
                     std::vector<BasedPoint> const &tuple, AlgConfig const &cfg)
{
  if (tuple.size() != op.arity())
    fail(ErrorKind::Shape, "tuple length does not match the operad arity");
  if (!same_group(*over.group(), *op.group()))
    fail(ErrorKind::Shape, "operad object and G-set over different groups");
  check_level(op.arity(), cfg);
  for (auto const &a : tuple) {
    if (a && *a >= over.size())
      fail(ErrorKind::MalformedInput, "tuple entry out of range");
  }

  auto const &grp = *op.group();
  auto const n = op.arity();

  // Deleting every basepoint slot at once equals iterating sigma_i from the
  // right: each deletion re-ranks the survivors the same way.
  std::vector<bool> keep(n);
  std::vector<std::uint32_t> kept;
  for (std::uint32_t s = 0; s < n; ++s) {
    keep[s] = tuple[s].has_value();
    if (keep[s])
      kept.push_back(s);
  }
  auto const m = static_cast<std::uint32_t>(kept.size());

  std::vector<std::uint32_t> reduced;
  reduced.reserve(grp.order() * m);
  for (Elem h = 0; h < grp.order(); ++h) {
    auto row = (m == n) ? op.value(h) : sym::restrict_slots(op.value(h), keep);
    reduced.insert(reduced.end(), row.images().begin(), row.images().end());
  }

  // Canonical Sigma_m representative: the least (tuple, op table) is reached by
  // sorting slots by (tuple entry, value at the identity element), since
  // op(e) is injective and e is the first row.
  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), std::uint32_t{0});
  std::sort(order.begin(), order.end(), [&](std::uint32_t u, std::uint32_t v) {
    auto au = *tuple[kept[u]], av = *tuple[kept[v]];
    if (au != av)
      return au < av;
    return reduced[u] < reduced[v];
  });

  std::vector<std::uint32_t> values(grp.order() * m);
  for (Elem h = 0; h < grp.order(); ++h) {
    for (std::uint32_t i = 0; i < m; ++i)
      values[h * m + i] = reduced[h * m + order[i]];
  }
  std::vector<Point> canon(m);
  for (std::uint32_t i = 0; i < m; ++i)
    canon[i] = *tuple[kept[order[i]]];

  FreeAlgObj res;
  res._over = over;
  res._op = OperadObj(op.group(), m, std::move(values));
  res._tuple = std::move(canon);
  return res;
}

FreeAlgObj normalize(GSet const &over, OperadObj const &op,
                     std::vector<Point> const &tuple, AlgConfig const &cfg)
{
  std::vector<BasedPoint> based(tuple.begin(), tuple.end());
  return normalize(over, op, based, cfg);
}

FreeAlgObj level_zero(GSet const &over)
{ return normalize(over, OperadObj::identity(over.group(), 0), std::vector<Point>{}); }

FreeAlgObj act(Elem g, FreeAlgObj const &x)
{
  std::vector<Point> tuple;
  for (auto a : x.tuple())
    tuple.push_back(x.over().act(g, a));
  return normalize(x.over(), operad_action(g, x.op()), tuple,
                   AlgConfig{std::max<std::size_t>(x.level(), 1)});
}

bool is_fixed(FreeAlgObj const &x)
{
  for (auto s : x.over().group()->generator_elems()) {
    if (!(act(s, x) == x))
      return false;
  }
  return true;
}

FreeAlgObj f_lower(BasedMap const &f, FreeAlgObj const &x, AlgConfig const &cfg)
{
  if (!(f.source() == x.over()))
    fail(ErrorKind::Shape, "f_lower: map source differs from the object's G-set");
  std::vector<BasedPoint> tuple;
  tuple.reserve(x.level());
  for (auto a : x.tuple())
    tuple.push_back(f(a));
  return normalize(f.target(), x.op(), tuple, cfg);
}

FreeAlgObj i_upper(GMap const &inclusion, FreeAlgObj const &y, AlgConfig const &cfg)
{
  if (!(inclusion.target() == y.over()))
    fail(ErrorKind::Shape, "i_upper: map target differs from the object's G-set");
  return f_lower(BasedMap::retraction(inclusion), y, cfg);
}

FreeAlgObj omega_obj(FreeAlgObj const &x, FreeAlgObj const &y, AlgConfig const &cfg)
{
  auto over = cartesian_product(x.over(), y.over());
  check_level(static_cast<std::size_t>(x.level()) * y.level(), cfg);
  auto const ny = y.over().size();
  std::vector<Point> tuple;
  tuple.reserve(x.level() * y.level());
  for (auto a : x.tuple()) {
    for (auto b : y.tuple())
      tuple.push_back(a * ny + b);
  }
  return normalize(over, omega_pair(x.op(), y.op()), tuple, cfg);
}

FreeAlgObj unit_object(GSet const &a)
{
  std::vector<Point> tuple(a.size());
  for (Point i = 0; i < a.size(); ++i)
    tuple[i] = i * a.size() + i;
  return normalize(cartesian_product(a, a), OperadObj::from_action(a), tuple,
                   AlgConfig{std::max<std::size_t>(a.size(), 1)});
}

FreeAlgObj ealg_compose(GSet const &c, GSet const &b, GSet const &a,
                        FreeAlgObj const &x, FreeAlgObj const &y, AlgConfig const &cfg)
{
  auto cb = cartesian_product(c, b);
  auto ba = cartesian_product(b, a);
  if (!(x.over() == cb) || !(y.over() == ba))
    fail(ErrorKind::Shape, "ealg_compose: objects are not over C x B and B x A");

  auto paired = omega_obj(x, y, cfg);

  auto const na = a.size(), nb = b.size(), nc = c.size();
  auto cba = cartesian_product(cb, a);
  std::vector<Point> incl(cba.size());
  for (Point ci = 0; ci < nc; ++ci) {
    for (Point bi = 0; bi < nb; ++bi) {
      for (Point ai = 0; ai < na; ++ai)
        incl[(ci * nb + bi) * na + ai] = (ci * nb + bi) * (nb * na) + bi * na + ai;
    }
  }
  GMap diag(cba, paired.over(), std::move(incl));
  auto restricted = i_upper(diag, paired, cfg);

  auto ca = cartesian_product(c, a);
  std::vector<Point> proj(cba.size());
  for (Point ci = 0; ci < nc; ++ci) {
    for (Point bi = 0; bi < nb; ++bi) {
      for (Point ai = 0; ai < na; ++ai)
        proj[(ci * nb + bi) * na + ai] = ci * na + ai;
    }
  }
  return f_lower(BasedMap::from_gmap(GMap(cba, ca, std::move(proj))), restricted, cfg);
}

FreeAlgObj eps_alg(GSet const &a, FreeAlgObj const &x, AlgConfig const &cfg)
{
  auto const n = a.size();
  std::vector<BasedPoint> images(n * n);
  for (Point i = 0; i < n; ++i)
    images[i * n + i] = Point{0};
  BasedMap eps(cartesian_product(a, a), GSet::point(a.group()), std::move(images));
  return f_lower(eps, x, cfg);
}

namespace
{

/// gamma(op; alpha, ..., alpha) with each slot expanded to the block `block(a)`.
template<typename Block>
FreeAlgObj expand_by_action(GSet const &a, GSet const &over, FreeAlgObj const &x,
                            Block &&block, AlgConfig const &cfg)
{
  auto const n = a.size();
  check_level(static_cast<std::size_t>(x.level()) * n, cfg);
  auto alpha = OperadObj::from_action(a);
  std::vector<OperadObj> alphas(x.level(), alpha);
  auto op = operad_gamma(x.op(), alphas);
  std::vector<Point> tuple;
  tuple.reserve(x.level() * n);
  for (auto p : x.tuple()) {
    for (Point i = 0; i < n; ++i)
      tuple.push_back(block(p, i));
  }
  return normalize(over, op, tuple, cfg);
}

} // namespace

FreeAlgObj eta_alg(GSet const &a, FreeAlgObj const &x, AlgConfig const &cfg)
{
  if (x.over().size() != 1)
    fail(ErrorKind::Shape, "eta_alg expects an object over the one-point G-set");
  auto const n = a.size();
  return expand_by_action(a, cartesian_product(a, a), x,
                          [n](Point, Point i) { return i * n + i; }, cfg);
}

FreeAlgObj zeta_left(GSet const &a, FreeAlgObj const &x, AlgConfig const &cfg)
{
  if (!(x.over() == a))
    fail(ErrorKind::Shape, "zeta_left expects an object over A");
  auto const n = a.size();
  return expand_by_action(a, cartesian_product(cartesian_product(a, a), a), x,
                          [n](Point p, Point i) { return (i * n + i) * n + p; }, cfg);
}

FreeAlgObj zeta_right(GSet const &a, FreeAlgObj const &x, AlgConfig const &cfg)
{
  if (!(x.over() == a))
    fail(ErrorKind::Shape, "zeta_right expects an object over A");
  auto const n = a.size();
  return expand_by_action(a, cartesian_product(cartesian_product(a, a), a), x,
                          [n](Point p, Point i) { return (p * n + i) * n + i; }, cfg);
}

BasedMap id_smash_eps(GSet const &a)
{
  auto const n = a.size();
  std::vector<BasedPoint> images(n * n * n);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y)
      images[(x * n + y) * n + y] = x;
  }
  return BasedMap(cartesian_product(cartesian_product(a, a), a), a, std::move(images));
}

BasedMap eps_smash_id(GSet const &a)
{
  auto const n = a.size();
  std::vector<BasedPoint> images(n * n * n);
  for (Point x = 0; x < n; ++x) {
    for (Point z = 0; z < n; ++z)
      images[(x * n + x) * n + z] = z;
  }
  return BasedMap(cartesian_product(cartesian_product(a, a), a), a, std::move(images));
}

GMap fixed_to_gmap(FreeAlgObj const &x)
{
  auto const &grp = x.op().group();
  auto const n = x.level();
  auto const tau = x.op().value(FiniteGroup::identity()).inverse();

  // The representative (op . tau, tau^-1 . tuple) has op(e) = id; x is fixed
  // iff that representative is a homomorphism with an equivariant tuple.
  auto beta = operad_sigma_action(x.op(), tau);
  std::vector<Point> tuple(n);
  for (std::uint32_t i = 0; i < n; ++i)
    tuple[i] = x.tuple()[tau[i]];

  if (!beta.is_homomorphism())
    fail(ErrorKind::NotFixed, "object is not G-fixed: operad part is not a homomorphism");
  for (auto s : grp->generator_elems()) {
    for (std::uint32_t i = 0; i < n; ++i) {
      if (x.over().act(s, tuple[i]) != tuple[beta.at(s, i)])
        fail(ErrorKind::NotFixed, "object is not G-fixed: tuple is not equivariant");
    }
  }
  GSet source(grp, n, beta.values());
  return GMap(std::move(source), x.over(), std::move(tuple));
}

FreeAlgObj gmap_to_fixed(GMap const &p)
{
  return normalize(p.target(), OperadObj::from_action(p.source()), p.images(),
                   AlgConfig{std::max<std::size_t>(p.source().size(), 1)});
}

Perm block_shuffle(std::uint32_t m, std::uint32_t n, std::uint32_t q)
{
  std::vector<std::uint32_t> images(m * n * q);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      for (std::uint32_t k = 0; k < q; ++k)
        images[(i * n + j) * q + k] = (i * q + k) * n + j;
    }
  }
  return Perm(std::move(images));
}

} // namespace gspan
