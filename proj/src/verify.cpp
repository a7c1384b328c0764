#include "gspan/verify.hpp"

#include <cstdio>
#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

#include "gspan/atiyah.hpp"
#include "gspan/error.hpp"
#include "gspan/fixed_objects.hpp"
#include "gspan/random.hpp"

namespace gspan
{

namespace
{

using Witness = std::optional<Json>;

std::uint64_t mix(std::uint64_t seed, std::string const &name)
{
  // FNV-1a over the name, so every identity draws its own stream.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : name)
    h = (h ^ c) * 1099511628211ull;
  return seed ^ h;
}

/// Accumulates one identity's result; the slot is reserved on construction so
/// the report follows declaration order.
class Runner
{
public:
  Runner(SuiteResult &suite, std::string name)
  : _suite(suite), _index(suite.identities.size()), _rng(mix(suite.seed, name))
  {
    _suite.identities.emplace_back();
    result().name = std::move(name);
  }

  Random &rng()
  { return _rng; }

  void trial(std::function<Witness(Random &)> const &f)
  {
    ++result().tried;
    Witness w;
    try {
      w = f(_rng);
    } catch (Error const &e) {
      w = Json{{"error", e.what()}};
    }
    if (w)
      fail_with(std::move(*w));
  }

  void numeric(NumericReport const &r, Json context)
  {
    auto &res = result();
    res.tried += r.samples;
    res.failed += r.failures;
    res.max_discrepancy = std::max({res.max_discrepancy, r.max_discrepancy, 0.0});
    if (r.failures > 0 && res.counterexample.is_null()) {
      context["point"] = r.argmax;
      context["discrepancy"] = r.max_discrepancy;
      context["seed"] = r.seed;
      res.counterexample = std::move(context);
    }
  }

private:
  IdentityResult &result()
  { return _suite.identities[_index]; }

  void fail_with(Json w)
  {
    auto &res = result();
    ++res.failed;
    if (res.counterexample.is_null())
      res.counterexample = std::move(w);
  }

  SuiteResult &_suite;
  std::size_t _index;
  Random _rng;
};

bool valid_two_cell(std::optional<TwoCell> const &cell)
{
  if (!cell || !cell->iso.is_bijective())
    return false;
  for (Point x = 0; x < cell->source.apex().size(); ++x) {
    if (cell->target.leg()[cell->iso(x)] != cell->source.leg()[x])
      return false;
  }
  return true;
}

Witness iso_witness(Span const &lhs, Span const &rhs, Json context)
{
  if (valid_two_cell(span_iso(lhs, rhs)))
    return std::nullopt;
  context["lhs"] = to_json(lhs);
  context["rhs"] = to_json(rhs);
  return context;
}

Witness equal_witness(BurnsideElt const &lhs, BurnsideElt const &rhs, Json context)
{
  if (lhs == rhs)
    return std::nullopt;
  context["lhs"] = to_json(lhs);
  context["rhs"] = to_json(rhs);
  return context;
}

Witness equal_witness(FreeAlgObj const &lhs, FreeAlgObj const &rhs, Json context)
{
  if (lhs == rhs)
    return std::nullopt;
  context["lhs"] = to_json(lhs);
  context["rhs"] = to_json(rhs);
  return context;
}

Json operad_json(OperadObj const &x)
{
  Json rows = Json::array();
  for (Elem h = 0; h < x.group()->order(); ++h)
    rows.push_back(x.value(h).one_based());
  return rows;
}

Witness equal_witness(OperadObj const &lhs, OperadObj const &rhs, Json context)
{
  if (lhs == rhs)
    return std::nullopt;
  context["lhs"] = operad_json(lhs);
  context["rhs"] = operad_json(rhs);
  return context;
}

GSet nonempty_gset(GroupPtr const &group, Random &rng, std::size_t max_size)
{
  while (true) {
    auto a = random_gset(group, rng, std::max<std::size_t>(max_size, 1));
    if (a.size() > 0 && a.size() <= max_size)
      return a;
  }
}

std::size_t trials(VerifyOptions const &o, std::size_t fallback)
{ return o.trials ? o.trials : fallback; }

// ---------------------------------------------------------------- bicategory

void bicategory_suite(SuiteResult &res, GroupPtr const &group, VerifyOptions const &o)
{
  auto const small = std::min<std::size_t>(o.size_bound, 3);
  auto const n = trials(o, 40);
  auto gset = [&](Random &rng) { return random_gset(group, rng, small); };

  {
    Runner r(res, "associativity-up-to-2cell");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto a = gset(rng), b = gset(rng), c = gset(rng), d = gset(rng);
        auto s1 = random_span(a, b, rng, 2);
        auto s2 = random_span(b, c, rng, 2);
        auto s3 = random_span(c, d, rng, 2);
        return iso_witness(compose_spans(s3, compose_spans(s2, s1)),
                           compose_spans(compose_spans(s3, s2), s1),
                           {{"s1", to_json(s1)}, {"s2", to_json(s2)}, {"s3", to_json(s3)}});
      });
    }
  }
  {
    Runner r(res, "unit-up-to-2cell");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) -> Witness {
        auto a = gset(rng), b = gset(rng);
        auto s = random_span(a, b, rng, 3);
        if (auto w = iso_witness(compose_spans(id_span(b), s), s, {{"side", "left"}}))
          return w;
        return iso_witness(compose_spans(s, id_span(a)), s, {{"side", "right"}});
      });
    }
  }
  {
    Runner r(res, "interchange-up-to-2cell");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) -> Witness {
        auto a = gset(rng), b = gset(rng), c = gset(rng);
        auto t1 = random_span(a, b, rng, 2), t2 = random_span(a, b, rng, 2);
        auto s1 = random_span(b, c, rng, 2), s2 = random_span(b, c, rng, 2);
        if (auto w = iso_witness(compose_spans(s1, span_disjoint_union(t1, t2)),
                                 span_disjoint_union(compose_spans(s1, t1), compose_spans(s1, t2)),
                                 {{"side", "right"}}))
          return w;
        return iso_witness(compose_spans(span_disjoint_union(s1, s2), t1),
                           span_disjoint_union(compose_spans(s1, t1), compose_spans(s2, t1)),
                           {{"side", "left"}});
      });
    }
  }
  {
    Runner r(res, "class-detects-iso");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) -> Witness {
        auto a = gset(rng), b = gset(rng);
        auto s = random_span(a, b, rng, 3);
        auto moved = relabel_apex(s, rng.perm(s.apex().size()));
        auto u = random_span(a, b, rng, 3);
        bool ok = span_class(s) == span_class(moved) && valid_two_cell(span_iso(s, moved)) &&
                  span_iso(s, u).has_value() == (span_class(s) == span_class(u));
        if (ok)
          return std::nullopt;
        return Json{{"s", to_json(s)}, {"relabeled", to_json(moved)}, {"other", to_json(u)}};
      });
    }
  }
  {
    Runner r(res, "class-of-composite");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto a = gset(rng), b = gset(rng), c = gset(rng);
        auto s1 = random_span(a, b, rng, 2), s2 = random_span(b, c, rng, 2);
        return equal_witness(class_elt(compose_spans(s2, s1)),
                             compose_elts(class_elt(s2), class_elt(s1)),
                             {{"s1", to_json(s1)}, {"s2", to_json(s2)}});
      });
    }
  }
  {
    Runner r(res, "burnside-associativity");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto a = gset(rng), b = gset(rng), c = gset(rng), d = gset(rng);
        auto x = random_elt(a, b, rng, 3), y = random_elt(b, c, rng, 3),
             z = random_elt(c, d, rng, 3);
        return equal_witness(compose_elts(z, compose_elts(y, x)),
                             compose_elts(compose_elts(z, y), x),
                             {{"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}});
      });
    }
  }
  {
    Runner r(res, "burnside-unit");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) -> Witness {
        auto a = gset(rng), b = gset(rng);
        auto x = random_elt(a, b, rng, 4);
        if (auto w = equal_witness(compose_elts(identity_elt(b), x), x, {{"side", "left"}}))
          return w;
        return equal_witness(compose_elts(x, identity_elt(a)), x, {{"side", "right"}});
      });
    }
  }
  {
    Runner r(res, "burnside-bilinearity");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) -> Witness {
        auto a = gset(rng), b = gset(rng), c = gset(rng);
        auto x1 = random_elt(a, b, rng, 3), x2 = random_elt(a, b, rng, 3);
        auto y1 = random_elt(b, c, rng, 3), y2 = random_elt(b, c, rng, 3);
        if (auto w = equal_witness(compose_elts(y1, x1 + x2),
                                   compose_elts(y1, x1) + compose_elts(y1, x2), {{"side", "right"}}))
          return w;
        return equal_witness(compose_elts(y1 - y2, x1),
                             compose_elts(y1, x1) - compose_elts(y2, x1), {{"side", "left"}});
      });
    }
  }
}

// ------------------------------------------------------------------ duality

void duality_suite(SuiteResult &res, GroupPtr const &group, VerifyOptions const &o)
{
  auto const sets = all_gsets(group, o.size_bound);
  auto const n = trials(o, 40);

  {
    Runner r(res, "triangle-left-span");
    for (auto const &a : sets)
      r.trial([&](Random &) { return iso_witness(triangle_left(a), id_span(a), {{"A", to_json(a)}}); });
  }
  {
    Runner r(res, "triangle-right-span");
    for (auto const &a : sets)
      r.trial([&](Random &) { return iso_witness(triangle_right(a), id_span(a), {{"A", to_json(a)}}); });
  }
  {
    Runner r(res, "triangle-left-class");
    for (auto const &a : sets) {
      r.trial([&](Random &) {
        return equal_witness(triangle_left_elt(a), identity_elt(a), {{"A", to_json(a)}});
      });
    }
  }
  {
    Runner r(res, "triangle-right-class");
    for (auto const &a : sets) {
      r.trial([&](Random &) {
        return equal_witness(triangle_right_elt(a), identity_elt(a), {{"A", to_json(a)}});
      });
    }
  }
  {
    Runner r(res, "dual-of-identity");
    for (auto const &a : sets) {
      r.trial([&](Random &) {
        return equal_witness(dual_of_gmap(GMap::identity(a)), identity_elt(a), {{"A", to_json(a)}});
      });
    }
  }
  auto const small = std::min<std::size_t>(o.size_bound, 4);
  {
    Runner r(res, "dual-is-reversed-graph");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) -> Witness {
        auto a = random_gset(group, rng, small), b = nonempty_gset(group, rng, small);
        auto f = random_gmap(a, b, rng);
        if (!f)
          return std::nullopt;
        return equal_witness(dual_of_gmap(*f), class_elt(reversed_graph_span(*f)),
                             {{"f", to_json(*f)}});
      });
    }
  }
  {
    Runner r(res, "dual-functoriality");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) -> Witness {
        auto a = random_gset(group, rng, small), b = nonempty_gset(group, rng, small),
             c = nonempty_gset(group, rng, small);
        auto f = random_gmap(a, b, rng);
        auto g = random_gmap(b, c, rng);
        if (!f || !g)
          return std::nullopt;
        return equal_witness(dual_of_gmap(g->after(*f)),
                             compose_elts(dual_of_gmap(*f), dual_of_gmap(*g)),
                             {{"f", to_json(*f)}, {"g", to_json(*g)}});
      });
    }
  }
  {
    Runner r(res, "marks-multiplicative");
    auto one = GSet::point(group);
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) -> Witness {
        auto x = random_elt(one, one, rng, 4), y = random_elt(one, one, rng, 4);
        auto mx = marks_of(x), my = marks_of(y), mxy = marks_of(compose_elts(x, y));
        for (std::size_t i = 0; i < mx.size(); ++i) {
          if (mxy[i] != mx[i] * my[i])
            return Json{{"x", to_json(x)}, {"y", to_json(y)}};
        }
        return std::nullopt;
      });
    }
  }
}

// ------------------------------------------------------------------- operad

BasedMap smash(BasedMap const &f, BasedMap const &g)
{
  auto const ns = g.source().size(), nt = g.target().size();
  std::vector<BasedPoint> images(f.source().size() * ns);
  for (Point a = 0; a < f.source().size(); ++a) {
    for (Point b = 0; b < ns; ++b) {
      auto fa = f(a), gb = g(b);
      if (fa && gb)
        images[a * ns + b] = *fa * nt + *gb;
    }
  }
  return BasedMap(cartesian_product(f.source(), g.source()),
                  cartesian_product(f.target(), g.target()), std::move(images));
}

/// A random G-map with some orbits sent to the basepoint.
std::optional<BasedMap> random_based(GSet const &a, GSet const &b, Random &rng)
{
  auto f = random_gmap(a, b, rng);
  if (!f)
    return std::nullopt;
  auto const decomposition = orbit_decomposition(a);
  std::vector<BasedPoint> images(a.size());
  for (auto const &orb : decomposition.orbits) {
    bool keep = !rng.chance(0.3);
    for (auto x : orb.points)
      images[x] = keep ? BasedPoint((*f)(x)) : std::nullopt;
  }
  return BasedMap(a, b, std::move(images));
}

} // namespace

FreeAlgObj left_unit_translate(GSet const &c, GSet const &a, FreeAlgObj const &x)
{
  auto const &grp = *x.op().group();
  auto const m = x.level();
  std::vector<std::uint32_t> values(grp.order() * m);
  for (Elem h = 0; h < grp.order(); ++h) {
    auto const mu = x.op().value(h);
    std::vector<std::uint32_t> order(m);
    std::iota(order.begin(), order.end(), std::uint32_t{0});
    auto key = [&](std::uint32_t i) {
      return std::pair(c.act(h, x.tuple()[i] / static_cast<Point>(a.size())), mu[i]);
    };
    std::sort(order.begin(), order.end(), [&](auto u, auto v) { return key(u) < key(v); });
    for (std::uint32_t r = 0; r < m; ++r)
      values[h * m + order[r]] = r;
  }
  return normalize(x.over(), OperadObj(x.op().group(), m, std::move(values)), x.tuple(),
                   AlgConfig{std::max<std::size_t>(m, 1)});
}

namespace
{

void operad_suite(SuiteResult &res, GroupPtr const &group, VerifyOptions const &o)
{
  auto const n = trials(o, 200);
  auto const lv = static_cast<std::int64_t>(std::min<std::size_t>(o.size_bound, 3));
  auto const small = std::min<std::size_t>(o.size_bound, 4);
  auto const id1 = OperadObj::identity(group, 1);

  {
    Runner r(res, "gamma-associativity");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto k = static_cast<std::uint32_t>(rng.between(0, lv));
        auto x = random_operad(group, k, rng);
        std::vector<OperadObj> ys;
        std::vector<std::vector<OperadObj>> zs(k);
        std::vector<OperadObj> flat;
        for (std::uint32_t i = 0; i < k; ++i) {
          auto j = static_cast<std::uint32_t>(rng.between(0, 2));
          ys.push_back(random_operad(group, j, rng));
          for (std::uint32_t l = 0; l < j; ++l) {
            zs[i].push_back(random_operad(group, static_cast<std::uint32_t>(rng.between(0, 2)), rng));
            flat.push_back(zs[i].back());
          }
        }
        std::vector<OperadObj> inner;
        for (std::uint32_t i = 0; i < k; ++i)
          inner.push_back(operad_gamma(ys[i], zs[i]));
        return equal_witness(operad_gamma(operad_gamma(x, ys), flat), operad_gamma(x, inner),
                             {{"x", operad_json(x)}});
      });
    }
  }
  {
    Runner r(res, "gamma-unit");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) -> Witness {
        auto k = static_cast<std::uint32_t>(rng.between(0, lv + 1));
        auto x = random_operad(group, k, rng);
        if (auto w = equal_witness(operad_gamma(id1, {x}), x, {{"side", "left"}}))
          return w;
        return equal_witness(operad_gamma(x, std::vector<OperadObj>(k, id1)), x, {{"side", "right"}});
      });
    }
  }
  {
    Runner r(res, "action-law");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto x = random_operad(group, static_cast<std::uint32_t>(rng.between(0, lv + 1)), rng);
        auto g = static_cast<Elem>(rng.below(group->order()));
        auto h = static_cast<Elem>(rng.below(group->order()));
        return equal_witness(operad_action(g, operad_action(h, x)),
                             operad_action(group->mul(g, h), x), {{"x", operad_json(x)}});
      });
    }
  }
  {
    Runner r(res, "omega-equivariance");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto x = random_operad(group, static_cast<std::uint32_t>(rng.between(0, lv)), rng);
        auto y = random_operad(group, static_cast<std::uint32_t>(rng.between(0, lv)), rng);
        auto g = static_cast<Elem>(rng.below(group->order()));
        return equal_witness(operad_action(g, omega_pair(x, y)),
                             omega_pair(operad_action(g, x), operad_action(g, y)),
                             {{"x", operad_json(x)}, {"y", operad_json(y)}});
      });
    }
  }
  {
    Runner r(res, "sigma-via-gamma");
    auto const id0 = OperadObj::identity(group, 0);
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto k = static_cast<std::uint32_t>(rng.between(1, lv + 1));
        auto x = random_operad(group, k, rng);
        auto i = static_cast<std::uint32_t>(rng.below(k));
        std::vector<OperadObj> ys(k, id1);
        ys[i] = id0;
        return equal_witness(sigma_i(x, i), operad_gamma(x, ys),
                             {{"x", operad_json(x)}, {"slot", i + 1}});
      });
    }
  }
  {
    Runner r(res, "gamma-omega-shuffle");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto a = nonempty_gset(group, rng, 3);
        auto const m = static_cast<std::uint32_t>(rng.between(1, 3));
        auto const q = static_cast<std::uint32_t>(rng.between(1, 3));
        auto mu = random_operad(group, m, rng);
        auto nu = random_operad(group, q, rng);
        auto alpha = OperadObj::from_action(a);
        auto lhs = operad_gamma(omega_pair(mu, nu), std::vector<OperadObj>(m * q, alpha));
        auto rhs = omega_pair(operad_gamma(mu, std::vector<OperadObj>(m, alpha)), nu);
        auto sigma = block_shuffle(m, a.size(), q);
        return equal_witness(operad_left_translate(sigma.inverse(), operad_sigma_action(lhs, sigma)),
                             rhs, {{"mu", operad_json(mu)}, {"nu", operad_json(nu)}, {"A", to_json(a)}});
      });
    }
  }
  {
    Runner r(res, "zeta-retract-left");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto a = nonempty_gset(group, rng, small);
        auto x = random_free_alg(a, static_cast<std::uint32_t>(rng.between(0, 4)), rng, 0.2);
        return equal_witness(f_lower(id_smash_eps(a), zeta_left(a, x)), x, {{"x", to_json(x)}});
      });
    }
  }
  {
    Runner r(res, "zeta-retract-right");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto a = nonempty_gset(group, rng, small);
        auto x = random_free_alg(a, static_cast<std::uint32_t>(rng.between(0, 4)), rng, 0.2);
        return equal_witness(f_lower(eps_smash_id(a), zeta_right(a, x)), x, {{"x", to_json(x)}});
      });
    }
  }
  {
    Runner r(res, "compose-unit-right");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto a = nonempty_gset(group, rng, 3), c = random_gset(group, rng, 3);
        auto x = random_free_alg(cartesian_product(c, a),
                                 static_cast<std::uint32_t>(rng.between(0, lv + 1)), rng, 0.1);
        return equal_witness(ealg_compose(c, a, a, x, unit_object(a)), x, {{"x", to_json(x)}});
      });
    }
  }
  {
    // On the left the unit's index is the major key of the lexicographic
    // pairing, so the composite is x with its operad part left-translated by
    // the ranking of (alpha_C(h)(c_i), mu(h)(i)). That translate is computed
    // directly here.
    Runner r(res, "compose-unit-left-translate");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto a = random_gset(group, rng, 3), c = nonempty_gset(group, rng, 3);
        auto x = random_free_alg(cartesian_product(c, a),
                                 static_cast<std::uint32_t>(rng.between(0, lv + 1)), rng, 0.1);
        return equal_witness(ealg_compose(c, c, a, unit_object(c), x), left_unit_translate(c, a, x),
                             {{"x", to_json(x)}});
      });
    }
  }
  {
    Runner r(res, "compose-associativity");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto a = random_gset(group, rng, 2), b = random_gset(group, rng, 2),
             c = random_gset(group, rng, 2), d = random_gset(group, rng, 2);
        auto level = [&] { return static_cast<std::uint32_t>(rng.between(0, lv)); };
        auto x = random_free_alg(cartesian_product(d, c), level(), rng);
        auto y = random_free_alg(cartesian_product(c, b), level(), rng);
        auto z = random_free_alg(cartesian_product(b, a), level(), rng);
        return equal_witness(ealg_compose(d, c, a, x, ealg_compose(c, b, a, y, z)),
                             ealg_compose(d, b, a, ealg_compose(d, c, b, x, y), z),
                             {{"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}});
      });
    }
  }
  {
    Runner r(res, "omega-naturality");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) -> Witness {
        auto a = random_gset(group, rng, 3), b = random_gset(group, rng, 3);
        auto a2 = random_gset(group, rng, 3), b2 = random_gset(group, rng, 3);
        auto f = random_based(a, a2, rng);
        auto g = random_based(b, b2, rng);
        if (!f || !g)
          return std::nullopt;
        auto x = random_free_alg(a, static_cast<std::uint32_t>(rng.between(0, lv)), rng);
        auto y = random_free_alg(b, static_cast<std::uint32_t>(rng.between(0, lv)), rng);
        return equal_witness(f_lower(smash(*f, *g), omega_obj(x, y)),
                             omega_obj(f_lower(*f, x), f_lower(*g, y)),
                             {{"x", to_json(x)}, {"y", to_json(y)}});
      });
    }
  }
  {
    Runner r(res, "eps-omega-naturality");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto a = random_gset(group, rng, 2), b = random_gset(group, rng, 2);
        auto one = GSet::point(group);
        auto kron = [&](GSet const &s) {
          std::vector<BasedPoint> images(s.size() * s.size());
          for (Point i = 0; i < s.size(); ++i)
            images[i * s.size() + i] = Point{0};
          return BasedMap(cartesian_product(s, s), one, std::move(images));
        };
        auto x = random_free_alg(cartesian_product(a, a), static_cast<std::uint32_t>(rng.between(0, lv)), rng);
        auto y = random_free_alg(cartesian_product(b, b), static_cast<std::uint32_t>(rng.between(0, lv)), rng);
        return equal_witness(f_lower(smash(kron(a), kron(b)), omega_obj(x, y)),
                             omega_obj(eps_alg(a, x), eps_alg(b, y)),
                             {{"x", to_json(x)}, {"y", to_json(y)}});
      });
    }
  }
  {
    // The two paths around the left square differ by the coordinate shuffle,
    // i.e. by the unique morphism of the chaotic category between them.
    Runner r(res, "left-square-up-to-iso");
    auto one = GSet::point(group);
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto a = nonempty_gset(group, rng, 3);
        auto x = random_free_alg(one, static_cast<std::uint32_t>(rng.between(1, lv)), rng);
        auto y = random_free_alg(a, static_cast<std::uint32_t>(rng.between(1, lv)), rng);
        auto via_eta = omega_obj(eta_alg(a, x), y);
        auto via_zeta = zeta_left(a, omega_obj(x, y));
        if (via_eta.level() != via_zeta.level())
          return equal_witness(via_eta, via_zeta, {{"x", to_json(x)}, {"y", to_json(y)}});
        auto sigma = block_shuffle(x.level(), a.size(), y.level());
        auto moved = normalize(via_zeta.over(),
                               operad_left_translate(sigma.inverse(), via_zeta.op()),
                               via_zeta.tuple());
        return equal_witness(moved, via_eta, {{"x", to_json(x)}, {"y", to_json(y)}});
      });
    }
  }
  {
    Runner r(res, "i-upper-retracts");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto a = random_gset(group, rng, 3), b = random_gset(group, rng, 3);
        auto ab = disjoint_union(a, b);
        std::vector<Point> images(a.size());
        for (Point i = 0; i < a.size(); ++i)
          images[i] = i;
        GMap incl(a, ab, images);
        auto x = random_free_alg(a, static_cast<std::uint32_t>(rng.between(0, lv + 1)), rng);
        return equal_witness(i_upper(incl, f_lower(BasedMap::from_gmap(incl), x)), x,
                             {{"x", to_json(x)}});
      });
    }
  }
  {
    Runner r(res, "canonical-form");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) -> Witness {
        auto a = random_gset(group, rng, 3);
        auto x = random_free_alg(a, static_cast<std::uint32_t>(rng.between(0, lv + 2)), rng);
        if (auto w = equal_witness(normalize(a, x.op(), x.tuple()), x, {{"check", "idempotent"}}))
          return w;
        auto sigma = rng.perm(x.level());
        std::vector<Point> moved(x.level());
        for (std::uint32_t i = 0; i < x.level(); ++i)
          moved[i] = x.tuple()[sigma[i]];
        return equal_witness(normalize(a, operad_sigma_action(x.op(), sigma), moved), x,
                             {{"check", "orbit-invariant"}});
      });
    }
  }
}

// ------------------------------------------------------------------- fixed

void fixed_suite(SuiteResult &res, GroupPtr const &group, VerifyOptions const &o)
{
  auto const n = trials(o, 100);
  auto const max_level = static_cast<std::uint32_t>(std::min<std::size_t>(o.size_bound, 4));
  std::vector<GSet> sets;
  for (auto const &a : all_gsets(group, std::min<std::size_t>(o.size_bound, 3))) {
    if (a.size() > 0)
      sets.push_back(a);
  }

  {
    Runner fixed_ok(res, "fixed-objects-are-fixed");
    Runner counts(res, "iso-classes-match-gsets-over");
    Runner round(res, "round-trip-object");
    for (auto const &a : sets) {
      for (std::uint32_t level = 0; level <= max_level; ++level) {
        auto fixed = fixed_objects(a, level);
        fixed_ok.trial([&](Random &) -> Witness {
          std::set<std::string> distinct;
          for (auto const &x : fixed) {
            if (!is_fixed(x))
              return Json{{"object", to_json(x)}};
            distinct.insert(to_json(x).dump());
          }
          if (distinct.size() != fixed.size())
            return Json{{"A", to_json(a)}, {"level", level}, {"duplicates", true}};
          return std::nullopt;
        });
        counts.trial([&](Random &) -> Witness {
          auto lhs = iso_class_count(fixed);
          auto rhs = gsets_over_count(a, level);
          if (lhs == rhs)
            return std::nullopt;
          return Json{{"A", to_json(a)}, {"level", level}, {"fixed-classes", lhs},
                      {"gsets-over", rhs}};
        });
        for (auto const &x : fixed) {
          round.trial([&](Random &) {
            return equal_witness(gmap_to_fixed(fixed_to_gmap(x)), x, {{"x", to_json(x)}});
          });
        }
      }
    }
  }
  auto const one = GSet::point(group);
  {
    Runner r(res, "fixed-detection");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) -> Witness {
        auto a = sets[rng.below(sets.size())];
        auto x = random_free_alg(a, static_cast<std::uint32_t>(rng.between(0, 3)), rng);
        bool converts = true;
        try {
          (void)fixed_to_gmap(x);
        } catch (Error const &e) {
          if (e.kind() != ErrorKind::NotFixed)
            throw;
          converts = false;
        }
        if (converts == is_fixed(x))
          return std::nullopt;
        return Json{{"x", to_json(x)}, {"is_fixed", is_fixed(x)}};
      });
    }
  }
  {
    Runner r(res, "round-trip-gmap");
    for (std::size_t t = 0; t < n; ++t) {
      r.trial([&](Random &rng) {
        auto a = sets[rng.below(sets.size())];
        auto s = random_span(one, a, rng, 3);
        auto back = fixed_to_span(span_to_fixed(s), one, a);
        return iso_witness(back, s, {{"span", to_json(s)}});
      });
    }
  }
  {
    Runner r(res, "compose-matches-spans");
    for (std::size_t t = 0; t < std::max<std::size_t>(n, 200); ++t) {
      r.trial([&](Random &rng) -> Witness {
        auto a = random_gset(group, rng, 3), b = random_gset(group, rng, 3),
             c = random_gset(group, rng, 3);
        auto s1 = random_span(a, b, rng, 2), s2 = random_span(b, c, rng, 2);
        auto z = ealg_compose(c, b, a, span_to_fixed(s2), span_to_fixed(s1));
        if (!is_fixed(z))
          return Json{{"s1", to_json(s1)}, {"s2", to_json(s2)}, {"not-fixed", to_json(z)}};
        return iso_witness(fixed_to_span(z, a, c), compose_spans(s2, s1),
                           {{"s1", to_json(s1)}, {"s2", to_json(s2)}});
      });
    }
  }
  {
    Runner r(res, "unit-object-is-identity-span");
    for (auto const &a : sets) {
      r.trial([&](Random &) {
        return iso_witness(fixed_to_span(unit_object(a), a, a), id_span(a), {{"A", to_json(a)}});
      });
    }
  }
}

// ------------------------------------------------------------------- atiyah

void atiyah_suite(SuiteResult &res, GroupPtr const &group, VerifyOptions const &o)
{
  std::vector<GSet> sets;
  for (auto const &a : all_gsets(group, std::min<std::size_t>(o.size_bound, 4))) {
    if (a.size() > 0)
      sets.push_back(a);
  }
  std::uint64_t stream = 0;
  auto next_seed = [&] { return o.seed + 0x9E3779B97F4A7C15ull * ++stream; };

  {
    Runner left(res, "unit-diagram-left");
    Runner right(res, "unit-diagram-right");
    for (auto const &a : sets) {
      for (auto const &b : sets) {
        Json ctx{{"A", to_json(a)}, {"B", to_json(b)}};
        left.numeric(check_unit_diagram_left(b, a, o.samples, next_seed(), o.tolerance), ctx);
        right.numeric(check_unit_diagram_right(b, a, o.samples, next_seed(), o.tolerance), ctx);
      }
    }
  }
  auto const equiv_samples = std::max<std::size_t>(o.samples / 10, 1);
  for (std::string map : {"eta", "xi", "eps"}) {
    Runner r(res, "equivariance-" + map);
    for (auto const &a : sets)
      r.numeric(check_equivariance(map, a, equiv_samples, next_seed(), 1e-12), {{"A", to_json(a)}});
  }
  {
    Runner r(res, "equivariance-h");
    for (double t : {0.25, 0.5, 0.9}) {
      for (auto const &a : sets) {
        r.numeric(check_equivariance("h", a, equiv_samples, next_seed(), 1e-12, t),
                  {{"A", to_json(a)}, {"t", t}});
      }
    }
  }
  {
    Runner start(res, "homotopy-start-is-identity");
    Runner end(res, "homotopy-end-is-xi");
    for (auto const &a : sets) {
      start.numeric(check_homotopy_start(a, o.samples, next_seed(), 0.0), {{"A", to_json(a)}});
      end.numeric(check_homotopy_end(a, o.samples, next_seed(), o.tolerance), {{"A", to_json(a)}});
    }
  }
}

std::string fmt(double x)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

} // namespace

bool SuiteResult::passed() const
{
  for (auto const &i : identities) {
    if (i.failed > 0)
      return false;
  }
  return true;
}

std::vector<std::string> const &suite_names()
{
  static std::vector<std::string> const names{"bicategory", "duality", "operad", "fixed",
                                              "atiyah"};
  return names;
}

SuiteResult run_suite(std::string const &suite, GroupPtr const &group, VerifyOptions const &options)
{
  SuiteResult res;
  res.suite = suite;
  res.seed = options.seed;
  res.size_bound = options.size_bound;
  if (suite == "bicategory")
    bicategory_suite(res, group, options);
  else if (suite == "duality")
    duality_suite(res, group, options);
  else if (suite == "operad")
    operad_suite(res, group, options);
  else if (suite == "fixed")
    fixed_suite(res, group, options);
  else if (suite == "atiyah")
    atiyah_suite(res, group, options);
  else
    fail(ErrorKind::Usage, "unknown suite '" + suite +
                             "' (expected bicategory, duality, operad, fixed or atiyah)");
  return res;
}

std::string format_suite(SuiteResult const &r)
{
  std::string out = "suite " + r.suite + " seed=" + std::to_string(r.seed) +
                    " size-bound=" + std::to_string(r.size_bound) + "\n";
  for (auto const &i : r.identities) {
    out += (i.failed ? "FAIL " : "PASS ") + i.name + " tried=" + std::to_string(i.tried) +
           " failed=" + std::to_string(i.failed);
    if (i.max_discrepancy >= 0)
      out += " max=" + fmt(i.max_discrepancy);
    out += "\n";
  }
  for (auto const &i : r.identities) {
    if (!i.counterexample.is_null())
      out += "counterexample " + i.name + ": " + i.counterexample.dump() + "\n";
  }
  out += r.passed() ? "result: pass\n" : "result: FAIL\n";
  return out;
}

Json to_json(SuiteResult const &r)
{
  Json ids = Json::array();
  for (auto const &i : r.identities) {
    Json j{{"name", i.name}, {"tried", i.tried}, {"failed", i.failed}};
    if (i.max_discrepancy >= 0)
      j["max_discrepancy"] = i.max_discrepancy;
    if (!i.counterexample.is_null())
      j["counterexample"] = i.counterexample;
    ids.push_back(std::move(j));
  }
  return Json{{"suite", r.suite}, {"seed", r.seed}, {"size_bound", r.size_bound},
              {"passed", r.passed()}, {"identities", ids}};
}

} // namespace gspan
