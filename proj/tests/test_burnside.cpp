#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gspan/random.hpp"
#include "oracles.hpp"

using namespace gspan;

namespace
{

std::vector<GroupPtr> test_groups()
{
  return {groups::trivial(), groups::cyclic(2), groups::cyclic(3), groups::cyclic(4),
          groups::klein(),   groups::symmetric(3), groups::dihedral(4)};
}

MarksVector coeffs(BurnsideElt const &x, std::size_t classes)
{
  MarksVector c(classes, 0);
  for (auto const &[k, v] : x.terms())
    c[k.subgroup_class] += v;
  return c;
}

} // namespace

TEST_CASE("tables of marks")
{
  CHECK(table_of_marks(groups::trivial()) == IntMatrix{{1}});
  CHECK(table_of_marks(groups::cyclic(2)) == IntMatrix{{2, 0}, {1, 1}});
  for (auto g : test_groups()) {
    auto m = table_of_marks(g);
    CHECK(m == oracle::marks(*g));
    for (std::size_t k = 0; k < m.size(); ++k) {
      CHECK(m[k][k] != 0);
      for (std::size_t h = k + 1; h < m.size(); ++h)
        CHECK(m[k][h] == 0);
    }
  }
}

TEST_CASE("span-pullback ring agrees with the marks oracle")
{
  for (auto g : test_groups()) {
    auto ring = burnside_ring(g);
    auto m = oracle::marks(*g);
    auto const n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        MarksVector product(n);
        for (std::size_t h = 0; h < n; ++h)
          product[h] = m[i][h] * m[k][h];
        CHECK(ring[i][k] == oracle::decompose(m, product));
      }
    }
  }
}

TEST_CASE("known products")
{
  auto s3 = groups::symmetric(3);
  // classes: e, C2, C3, S3
  CHECK(burnside_ring(s3)[1][2] == MarksVector{1, 0, 0, 0});
  CHECK(burnside_ring(groups::cyclic(2))[0][0] == MarksVector{2, 0});
  CHECK(burnside_ring(groups::trivial()) == std::vector<std::vector<MarksVector>>{{{1}}});

  auto c2 = groups::cyclic(2);
  auto one = GSet::point(c2);
  auto free = class_elt(basis_span(one, one, BasisKey{0, 0}));
  CHECK(compose_elts(free, free) == 2 * free);
  CHECK(marks_of(free) == MarksVector{2, 0});
  CHECK(marks_of(identity_elt(one)) == MarksVector{1, 1});
}

TEST_CASE("hom bases")
{
  auto c2 = groups::cyclic(2);
  CHECK(hom_basis(GSet::point(c2), GSet::point(c2)).size() == 2);
  CHECK(hom_basis(GSet::point(groups::trivial()), GSet::point(groups::trivial())).size() == 1);
  CHECK(hom_basis(GSet::empty(c2), GSet::orbit(c2, 0)).empty());
  for (auto g : test_groups()) {
    Random rng(5);
    for (int t = 0; t < 10; ++t) {
      auto a = random_gset(g, rng, 3), b = random_gset(g, rng, 3);
      CHECK(hom_basis(a, b).size() == oracle::transitive_types_over(cartesian_product(b, a)).size());
    }
  }
}

TEST_CASE("composition of classes")
{
  for (auto g : {groups::cyclic(2), groups::symmetric(3), groups::dihedral(4)}) {
    Random rng(9);
    for (int t = 0; t < 20; ++t) {
      auto a = random_gset(g, rng, 3), b = random_gset(g, rng, 3), c = random_gset(g, rng, 3);
      auto s1 = random_span(a, b, rng, 2), s2 = random_span(b, c, rng, 2);
      CHECK(class_elt(compose_spans(s2, s1)) == compose_elts(class_elt(s2), class_elt(s1)));
      auto x = random_elt(a, b, rng, 3);
      CHECK(compose_elts(identity_elt(b), x) == x);
      CHECK(compose_elts(x, identity_elt(a)) == x);
      CHECK(compose_elts(zero_elt(b, c), x).is_zero());
      CHECK((x - x).is_zero());
      CHECK(to_elt(span_class(s1)) == class_elt(s1));
    }
  }
}

TEST_CASE("triangle identities at class and span level")
{
  for (auto g : {groups::cyclic(2), groups::symmetric(3)}) {
    for (auto const &a : all_gsets(g, 4)) {
      CHECK(triangle_left_elt(a) == identity_elt(a));
      CHECK(triangle_right_elt(a) == identity_elt(a));
      CHECK(oracle::span_marks(triangle_left(a)) == oracle::span_marks(id_span(a)));
      CHECK(oracle::span_marks(triangle_right(a)) == oracle::span_marks(id_span(a)));
    }
  }
}

TEST_CASE("duals")
{
  auto c2 = groups::cyclic(2);
  auto fixed = GSet::orbit(c2, 1), free = GSet::orbit(c2, 0);
  auto both = disjoint_union(fixed, free);
  CHECK(dual_of_gmap(GMap::identity(both)) == identity_elt(both));

  GMap incl(fixed, both, {0});
  CHECK(dual_of_gmap(incl) == class_elt(reversed_graph_span(incl)));

  // The transfer: dual of C2/e -> C2/C2 is the span C2/C2 <- C2/e -> C2/e.
  GMap pi(free, fixed, {0, 0});
  Span expected(fixed, free, free, {0, 1});
  CHECK(dual_of_gmap(pi) == class_elt(expected));
  CHECK(transfer(c2, 0, 1) == class_elt(expected));
}

TEST_CASE("dual functoriality")
{
  auto g = groups::symmetric(3);
  Random rng(13);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    auto a = random_gset(g, rng, 3), b = random_gset(g, rng, 3), c = random_gset(g, rng, 3);
    auto f = random_gmap(a, b, rng);
    auto h = random_gmap(b, c, rng);
    if (!f || !h)
      continue;
    ++checked;
    CHECK(dual_of_gmap(h->after(*f)) == compose_elts(dual_of_gmap(*f), dual_of_gmap(*h)));
  }
  CHECK(checked > 5);
}

TEST_CASE("presheaf ranks")
{
  CHECK(presheaf_at_orbits(GSet::point(groups::cyclic(2))) == std::vector<std::size_t>{1, 2});
  CHECK(presheaf_at_orbits(GSet::point(groups::symmetric(3))) ==
        std::vector<std::size_t>{1, 2, 2, 4});
  CHECK(presheaf_at_orbits(GSet::empty(groups::symmetric(3))) ==
        std::vector<std::size_t>{0, 0, 0, 0});
  for (auto g : test_groups()) {
    Random rng(17);
    auto b = random_gset(g, rng, 3);
    auto ranks = presheaf_at_orbits(b);
    for (std::size_t h = 0; h < ranks.size(); ++h)
      CHECK(ranks[h] == oracle::transitive_types_over(cartesian_product(b, GSet::orbit(g, h))).size());
  }
}

TEST_CASE("describe and coefficients")
{
  auto c2 = groups::cyclic(2);
  auto one = GSet::point(c2);
  auto x = identity_elt(one) + 3 * class_elt(basis_span(one, one, BasisKey{0, 0}));
  CHECK(coeffs(x, 2) == MarksVector{3, 1});
  CHECK(x.coefficient(BasisKey{0, 0}) == 3);
}
