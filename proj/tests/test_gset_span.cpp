#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gspan/error.hpp"
#include "gspan/random.hpp"
#include "gspan/span.hpp"
#include "oracles.hpp"

using namespace gspan;

namespace
{

GSet free_c2()
{ return GSet::orbit(groups::cyclic(2), 0); }

GSet fixed_c2()
{ return GSet::orbit(groups::cyclic(2), 1); }

bool iso_by_marks(Span const &s, Span const &t)
{ return oracle::span_marks(s) == oracle::span_marks(t); }

} // namespace

TEST_CASE("GSet validation")
{
  auto c2 = groups::cyclic(2);
  CHECK_NOTHROW(GSet(c2, 2, {0, 1, 1, 0}));
  CHECK_THROWS_AS(GSet(c2, 2, {1, 0, 1, 0}), Error); // identity row not identity
  auto s3 = groups::symmetric(3);
  // Sending both generators to the same transposition is not a homomorphism.
  CHECK_THROWS_AS(GSet::from_generator_images(s3, 2, {Perm({1, 0}), Perm({1, 0})}), Error);
  CHECK_NOTHROW(GSet::from_generator_images(s3, 2, {Perm({0, 1}), Perm({1, 0})}));
}

TEST_CASE("orbits G/H")
{
  auto g = groups::dihedral(4);
  for (std::size_t c = 0; c < g->subgroup_classes().size(); ++c) {
    auto a = GSet::orbit(g, c);
    CHECK(a.size() * g->subgroup_classes()[c].order() == g->order());
    CHECK(a.stabilizer(0) == g->subgroup_classes()[c].representative);
    CHECK(orbit_decomposition(a).orbits.size() == 1);
  }
}

TEST_CASE("disjoint union and product")
{
  auto u = disjoint_union(free_c2(), free_c2());
  CHECK(u.size() == 4);
  CHECK(orbit_decomposition(u).orbits.size() == 2);
  CHECK(disjoint_union(GSet::empty(groups::cyclic(2)), free_c2()) == free_c2());

  auto p = cartesian_product(free_c2(), free_c2());
  CHECK(p.size() == 4);
  auto dec = orbit_decomposition(p);
  REQUIRE(dec.orbits.size() == 2);
  for (auto const &o : dec.orbits)
    CHECK(o.stabilizer_class == 0);
  CHECK(cartesian_product(GSet::point(groups::cyclic(2)), free_c2()) == free_c2());

  auto t2 = GSet::trivial(groups::cyclic(3), 2), t3 = GSet::trivial(groups::cyclic(3), 3);
  CHECK(disjoint_union(t2, t3).size() == 5);
  CHECK(cartesian_product(t2, t3).size() == 6);
}

TEST_CASE("diagonal is lexicographic")
{
  auto a = GSet::trivial(groups::trivial(), 3);
  // point 2 (1-based) goes to (2,2), 1-based index 5
  CHECK(diagonal(a)(1) + 1 == 5);
}

TEST_CASE("fixed points and orbit decomposition")
{
  auto c2 = groups::cyclic(2);
  CHECK(fixed_points(free_c2(), std::size_t{0}).size() == 2);
  CHECK(fixed_points(free_c2(), std::size_t{1}).empty());
  CHECK(fixed_points(disjoint_union(fixed_c2(), free_c2()), std::size_t{1}).size() == 1);

  auto triv = GSet::trivial(c2, 3);
  auto dec = orbit_decomposition(triv);
  CHECK(dec.orbits.size() == 3);
  for (auto const &o : dec.orbits)
    CHECK(o.stabilizer_class == 1);

  auto s3 = groups::symmetric(3);
  auto natural = GSet::from_generator_images(s3, 3, s3->generators());
  auto d = orbit_decomposition(natural);
  REQUIRE(d.orbits.size() == 1);
  CHECK(s3->subgroup_classes()[d.orbits[0].stabilizer_class].order() == 2);
}

TEST_CASE("gset_iso")
{
  auto a = disjoint_union(free_c2(), fixed_c2());
  auto b = disjoint_union(fixed_c2(), free_c2());
  auto iso = gset_iso(a, b);
  REQUIRE(iso);
  CHECK(iso->is_bijective());
  CHECK(gset_iso(a, a)->images() == GMap::identity(a).images());
  CHECK_FALSE(gset_iso(free_c2(), disjoint_union(fixed_c2(), fixed_c2())));
}

TEST_CASE("id_span of a free orbit")
{
  auto s = id_span(free_c2());
  CHECK(s.leg() == std::vector<Point>{0, 3});
  CHECK(id_span(GSet::empty(groups::cyclic(2))).apex().size() == 0);
}

TEST_CASE("pullback sizes match brute force")
{
  auto triv = groups::trivial();
  auto one = GSet::point(triv);
  Span s2(one, one, GSet::trivial(triv, 2), {0, 0});
  Span s1(one, one, GSet::trivial(triv, 3), {0, 0, 0});
  CHECK(compose_spans(s2, s1).apex().size() == 6);

  for (auto g : {groups::cyclic(2), groups::symmetric(3)}) {
    Random rng(7);
    for (int t = 0; t < 30; ++t) {
      auto a = random_gset(g, rng, 3), b = random_gset(g, rng, 3), c = random_gset(g, rng, 3);
      auto x = random_span(a, b, rng, 2), y = random_span(b, c, rng, 2);
      CHECK(compose_spans(y, x).apex().size() == oracle::pullback_size(y, x));
    }
  }
}

TEST_CASE("eps after eta pulls back over A x A")
{
  auto a = disjoint_union(free_c2(), fixed_c2());
  CHECK(compose_spans(epsilon_span(a), eta_span(a)).apex().size() == a.size());
  // The other order factors through the point.
  CHECK(compose_spans(eta_span(a), epsilon_span(a)).apex().size() == a.size() * a.size());
  CHECK(epsilon_span(free_c2()).apex().size() == 2);
  CHECK(eta_span(free_c2()).apex().size() == 2);
}

TEST_CASE("shape errors")
{
  auto a = free_c2(), b = fixed_c2();
  try {
    compose_spans(id_span(a), id_span(b));
    FAIL("expected a shape error");
  } catch (Error const &e) {
    CHECK(e.kind() == ErrorKind::Shape);
  }
  CHECK_THROWS_AS(span_disjoint_union(id_span(a), id_span(b)), Error);
}

TEST_CASE("span_iso agrees with the fixed-point oracle")
{
  for (auto g : {groups::cyclic(2), groups::cyclic(3), groups::symmetric(3)}) {
    Random rng(11);
    for (int t = 0; t < 60; ++t) {
      auto a = random_gset(g, rng, 2), b = random_gset(g, rng, 3);
      auto s = random_span(a, b, rng, 3), u = random_span(a, b, rng, 3);
      auto moved = relabel_apex(s, rng.perm(s.apex().size()));
      CHECK(span_iso(s, moved).has_value());
      CHECK(span_iso(s, u).has_value() == iso_by_marks(s, u));
      CHECK((span_class(s) == span_class(u)) == iso_by_marks(s, u));
    }
  }
}

TEST_CASE("bicategory laws up to 2-cell, checked by the oracle")
{
  auto g = groups::symmetric(3);
  Random rng(3);
  for (int t = 0; t < 20; ++t) {
    auto a = random_gset(g, rng, 3), b = random_gset(g, rng, 3), c = random_gset(g, rng, 3),
         d = random_gset(g, rng, 3);
    auto s1 = random_span(a, b, rng, 2), s2 = random_span(b, c, rng, 2), s3 = random_span(c, d, rng, 2);
    CHECK(iso_by_marks(compose_spans(s3, compose_spans(s2, s1)),
                       compose_spans(compose_spans(s3, s2), s1)));
    CHECK(iso_by_marks(compose_spans(id_span(b), s1), s1));
    CHECK(iso_by_marks(compose_spans(s1, id_span(a)), s1));
    CHECK(iso_by_marks(span_disjoint_union(s1, s1), span_disjoint_union(s1, s1)));
  }
}

TEST_CASE("span classes of free orbits over different points differ")
{
  auto a = free_c2();
  auto one = GSet::point(groups::cyclic(2));
  Span over_first(one, a, free_c2(), {0, 1});
  Span over_second(one, a, free_c2(), {1, 0});
  // Both free orbits map onto all of A, so they are isomorphic.
  CHECK(span_class(over_first) == span_class(over_second));

  Span diag(a, a, free_c2(), {0, 3});
  Span anti(a, a, free_c2(), {1, 2});
  CHECK_FALSE(span_class(diag) == span_class(anti));
  CHECK(span_class(zero_span(a, a)).invariant.empty());
}
