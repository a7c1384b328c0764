#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gspan/error.hpp"
#include "gspan/group.hpp"
#include "oracles.hpp"

using namespace gspan;

namespace
{

std::vector<std::pair<const char *, GroupPtr>> test_groups()
{
  return {{"C1", groups::trivial()},    {"C2", groups::cyclic(2)},  {"C3", groups::cyclic(3)},
          {"C4", groups::cyclic(4)},    {"C2xC2", groups::klein()}, {"S3", groups::symmetric(3)},
          {"D4", groups::dihedral(4)},  {"C6", groups::cyclic(6)}};
}

} // namespace

TEST_CASE("preset orders")
{
  CHECK(groups::trivial()->order() == 1);
  CHECK(groups::cyclic(5)->order() == 5);
  CHECK(groups::dihedral(4)->order() == 8);
  CHECK(groups::dihedral(5)->order() == 10);
  CHECK(groups::symmetric(4)->order() == 24);
  CHECK(groups::klein()->order() == 4);
  CHECK(groups::dihedral(2)->order() == 4);
}

TEST_CASE("group axioms hold for every element triple")
{
  for (auto const &[name, g] : test_groups()) {
    CAPTURE(name);
    CHECK(g->element(FiniteGroup::identity()).is_identity());
    for (Elem a = 0; a < g->order(); ++a) {
      CHECK(g->mul(a, g->inv(a)) == FiniteGroup::identity());
      CHECK(g->mul(FiniteGroup::identity(), a) == a);
      for (Elem b = 0; b < g->order(); ++b) {
        CHECK(g->element(g->mul(a, b)) == g->element(a) * g->element(b));
        for (Elem c = 0; c < g->order(); ++c)
          REQUIRE(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
      }
    }
  }
}

TEST_CASE("BFS words reproduce every element")
{
  auto g = groups::symmetric(4);
  for (Elem x = 1; x < g->order(); ++x) {
    auto const &gen = g->generators()[g->word_generator(x)];
    CHECK(g->element(x) == gen * g->element(g->word_parent(x)));
  }
}

TEST_CASE("subgroup lattice matches subset enumeration")
{
  for (auto const &[name, g] : test_groups()) {
    CAPTURE(name);
    auto brute = oracle::subgroups(*g);
    CHECK(g->all_subgroups().size() == brute.size());
    CHECK(g->subgroup_classes().size() == oracle::class_count(*g));
    for (auto const &s : brute) {
      ElemSet set(g->order());
      for (auto e : s)
        set.insert(e);
      CHECK(g->is_subgroup(set));
      auto cls = g->class_of(set);
      auto rep = g->subgroup_classes()[cls].elements;
      CHECK(oracle::conjugate_subgroups(*g, s, rep));
    }
  }
}

TEST_CASE("subgroup classes: ordering, sizes and normalizers")
{
  for (auto const &[name, g] : test_groups()) {
    CAPTURE(name);
    auto const &classes = g->subgroup_classes();
    CHECK(classes.front().order() == 1);
    CHECK(classes.back().order() == g->order());
    for (std::size_t i = 0; i < classes.size(); ++i) {
      CHECK(classes[i].index == i);
      if (i > 0)
        CHECK(classes[i - 1].order() <= classes[i].order());
      CHECK(classes[i].class_size * classes[i].normalizer.size() == g->order());
      for (std::size_t j = 0; j < i; ++j)
        CHECK_FALSE(oracle::conjugate_subgroups(*g, classes[i].elements, classes[j].elements));
    }
  }
}

TEST_CASE("known class counts")
{
  CHECK(groups::cyclic(3)->subgroup_classes().size() == 2);
  CHECK(groups::trivial()->subgroup_classes().size() == 1);
  CHECK(groups::symmetric(3)->subgroup_classes().size() == 4);
  CHECK(groups::dihedral(4)->subgroup_classes().size() == 8);
  CHECK(groups::klein()->subgroup_classes().size() == 5);
  CHECK(groups::symmetric(4)->subgroup_classes().size() == 11);
}

TEST_CASE("conjugator_to_representative lands on the representative")
{
  auto g = groups::symmetric(3);
  for (auto const &s : g->all_subgroups()) {
    auto x = g->conjugator_to_representative(s);
    CHECK(g->conjugate(s, x) == g->subgroup_classes()[g->class_of(s)].representative);
  }
}

TEST_CASE("size limit and malformed generators")
{
  CHECK_THROWS_AS(FiniteGroup::make(5, {Perm({1, 2, 3, 4, 0}), Perm({1, 0, 2, 3, 4})}, 100), Error);
  try {
    FiniteGroup::make(5, {Perm({1, 2, 3, 4, 0}), Perm({1, 0, 2, 3, 4})}, 100);
  } catch (Error const &e) {
    CHECK(e.kind() == ErrorKind::SizeLimit);
  }
  CHECK_THROWS_AS(Perm({0, 0, 1}), Error);
  CHECK(Perm::from_one_based({2, 3, 1}) == Perm({1, 2, 0}));
  CHECK_THROWS_AS(Perm::from_one_based({0, 1}), Error);
}

TEST_CASE("permutation convention")
{
  Perm g({1, 2, 0}), h({1, 0, 2});
  // (g h)(i) = g(h(i))
  for (std::uint32_t i = 0; i < 3; ++i)
    CHECK((g * h)[i] == g[h[i]]);
  CHECK(g * g.inverse() == Perm::identity(3));
}
