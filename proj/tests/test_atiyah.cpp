#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "gspan/atiyah.hpp"
#include "gspan/error.hpp"
#include "gspan/random.hpp"

using namespace gspan;

namespace
{

ErrorKind kind_of(std::function<void()> const &f)
{
  try {
    f();
  } catch (Error const &e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Usage;
}

GSet free_c2()
{ return GSet::orbit(groups::cyclic(2), 0); }

} // namespace

TEST_CASE("rho and its inverse")
{
  TubularParams p;
  CHECK(p.rho(1.0) == doctest::Approx(0.125));
  CHECK(p.rho(0.0) == 0.0);
  CHECK(p.rho(INFINITY) == 0.25);
  CHECK(p.rho_inv(0.125) == doctest::Approx(1.0));
  for (double t : {0.0, 0.3, 2.0, 17.0})
    CHECK(p.rho_inv(p.rho(t)) == doctest::Approx(t));
  CHECK(kind_of([&] { p.rho_inv(0.25); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { p.rho_inv(-0.1); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { p.rho(-1.0); }) == ErrorKind::Domain);

  CHECK_NOTHROW(TubularParams{0.1}.validate());
  CHECK(kind_of([] { TubularParams{0.0}.validate(); }) == ErrorKind::Domain);
  CHECK(kind_of([] { TubularParams{0.5}.validate(); }) == ErrorKind::Domain);
}

TEST_CASE("eta scales the offset from the nearest basis vector")
{
  auto a = free_c2();
  // v = e_1 + w with |w| = d/2 = 1/8: rho^-1(1/8) = 1, so the image is w / |w| = 8 w.
  SpherePoint v{false, {1.0 + 0.125 * 0.6, 0.125 * 0.8}};
  auto p = eta_space(a, v);
  REQUIRE_FALSE(p.basepoint);
  CHECK(p.labels == std::vector<Point>{0, 0});
  CHECK(p.coords[0] == doctest::Approx(0.6));
  CHECK(p.coords[1] == doctest::Approx(0.8));

  CHECK(eta_space(a, SpherePoint{false, {0.0, 0.0}}).basepoint);
  CHECK(eta_space(a, SpherePoint{false, {0.5, 0.5}}).basepoint);
  CHECK(eta_space(a, SpherePoint::infinity()).basepoint);
  auto centre = eta_space(a, SpherePoint{false, {0.0, 1.0}});
  CHECK(centre.labels == std::vector<Point>{1, 1});
  CHECK(centre.coords == std::vector<double>{0.0, 0.0});
  CHECK(kind_of([&] { eta_space(a, SpherePoint{false, {1.0}}); }) == ErrorKind::Shape);
}

TEST_CASE("xi and the homotopy")
{
  auto a = free_c2();
  auto at_centre = SmashPoint::make({0}, std::vector<double>{1.0, 0.0});
  auto xi = xi_space(a, at_centre);
  CHECK(xi.labels == std::vector<Point>{0});
  CHECK(xi.coords == std::vector<double>{0.0, 0.0});
  CHECK(xi_space(a, SmashPoint::make({1}, std::vector<double>{1.0, 0.0})).basepoint);

  for (double t : {0.0, 0.25, 0.5, 1.0}) {
    auto h = homotopy_h(a, at_centre, t);
    REQUIRE_FALSE(h.basepoint);
    CHECK(h.coords[0] == doctest::Approx(1.0 - t));
    CHECK(h.coords[1] == 0.0);
  }

  Sampler rng(3);
  for (int k = 0; k < 50; ++k) {
    auto p = SmashPoint::make({static_cast<Point>(k % 2)},
                              std::vector<double>{rng.uniform() * 2 - 0.5, rng.uniform() * 2 - 0.5});
    auto start = homotopy_h(a, p, 0.0);
    CHECK(distance(start, p) == 0.0);
    auto end = homotopy_h(a, p, 1.0), target = xi_space(a, p);
    CHECK(distance(end, target) <= 1e-12);
  }
  CHECK(kind_of([&] { homotopy_h(a, at_centre, 1.5); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { homotopy_h(a, at_centre, -0.1); }) == ErrorKind::Domain);
}

TEST_CASE("eps consumes a matching pair of labels")
{
  auto p = SmashPoint::make({2, 2, 1}, std::vector<double>{0.5});
  auto q = eps_labels(p, 0);
  CHECK(q.labels == std::vector<Point>{1});
  CHECK(q.coords == p.coords);
  CHECK(eps_labels(p, 1).basepoint);
  CHECK(eps_labels(SmashPoint::base(), 0).basepoint);
  CHECK(kind_of([&] { eps_labels(p, 2); }) == ErrorKind::Shape);
}

TEST_CASE("group action on spheres")
{
  auto a = free_c2();
  SpherePoint v{false, {0.3, -0.2}};
  CHECK(act_sphere(a, 1, v).coords == std::vector<double>{-0.2, 0.3});
  CHECK(act_sphere(a, 1, SpherePoint::infinity()).at_infinity);
}

TEST_CASE("unit diagram written out by hand")
{
  // B = point, A = C2/e: (eps on labels 2,3) o (id ^ eta) against id ^ xi.
  auto a = free_c2();
  Sampler rng(8);
  for (int k = 0; k < 200; ++k) {
    SpherePoint v{false, {rng.uniform() * 1.6 - 0.3, rng.uniform() * 1.6 - 0.3}};
    Point label = static_cast<Point>(k % 2);
    auto lhs = xi_space(a, SmashPoint::make({0, label}, v.coords), 1);
    auto eta = eta_space(a, v);
    SmashPoint rhs = SmashPoint::base();
    if (!eta.basepoint) {
      auto joined = SmashPoint::make({0, label, eta.labels[0], eta.labels[1]}, eta.coords);
      rhs = eps_labels(joined, 1);
    }
    CHECK(distance(lhs, rhs) <= 1e-9);
  }
}

TEST_CASE("checks pass and are deterministic")
{
  for (auto g : {groups::cyclic(2), groups::cyclic(3)}) {
    for (auto const &a : all_gsets(g, 3)) {
      if (a.size() == 0)
        continue;
      auto b = GSet::orbit(g, 0);
      auto left = check_unit_diagram_left(b, a, 500, 42);
      CHECK(left.passed());
      CHECK(left.samples == 500);
      CHECK(check_unit_diagram_right(b, a, 500, 42).passed());
      for (auto map : {"eta", "xi", "eps", "h"})
        CHECK(check_equivariance(map, a, 200, 42).passed());
      CHECK(check_homotopy_start(a, 300, 42).max_discrepancy == 0.0);
      CHECK(check_homotopy_end(a, 300, 42).passed());

      auto again = check_unit_diagram_left(b, a, 500, 42);
      CHECK(again.max_discrepancy == left.max_discrepancy);
      CHECK(again.argmax == left.argmax);
    }
  }
  CHECK(kind_of([] { check_equivariance("zeta", free_c2(), 1, 1); }) == ErrorKind::Usage);
}

TEST_CASE("invalid radius and failure accounting")
{
  // Overlapping balls are refused before any sampling.
  TubularParams bad{0.75};
  CHECK(kind_of([&] { check_homotopy_end(free_c2(), 10, 1, 1e-9, bad); }) == ErrorKind::Domain);

  NumericReport r;
  r.tolerance = 1e-9;
  r.failures = 1;
  CHECK_FALSE(r.passed());
}

TEST_CASE("sampler is reproducible")
{
  Sampler s1(7), s2(7);
  for (int k = 0; k < 100; ++k) {
    auto v = s1.sphere_point(3, 0.25), w = s2.sphere_point(3, 0.25);
    CHECK(v.at_infinity == w.at_infinity);
    CHECK(v.coords == w.coords);
  }
  Sampler s(11);
  double sum = 0.0;
  for (int k = 0; k < 20000; ++k)
    sum += s.uniform();
  CHECK(std::abs(sum / 20000 - 0.5) < 0.01);
}
