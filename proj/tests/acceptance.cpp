// Acceptance run: one PASS/FAIL line per criterion, with its time against a
// fixed budget. Exit status is 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "gspan/atiyah.hpp"
#include "gspan/document.hpp"
#include "gspan/fixed_objects.hpp"
#include "gspan/random.hpp"
#include "gspan/verify.hpp"
#include "oracles.hpp"

using namespace gspan;

namespace
{

struct Outcome
{
  bool ok = true;
  std::string summary;
  std::vector<std::string> details;

  void require(bool cond, std::string const &what)
  {
    if (cond)
      return;
    ok = false;
    if (details.size() < 3)
      details.push_back(what);
  }
};

std::uint64_t g_seed = 42;

std::vector<std::pair<std::string, GroupPtr>> ring_groups()
{
  return {{"C1", groups::trivial()}, {"C2", groups::cyclic(2)},     {"C3", groups::cyclic(3)},
          {"C4", groups::cyclic(4)}, {"C2xC2", groups::klein()},   {"S3", groups::symmetric(3)},
          {"D4", groups::dihedral(4)}};
}

// ------------------------------------------------------------------ 1

Outcome burnside_ring_vs_marks()
{
  Outcome o;
  std::size_t constants = 0;
  for (auto const &[name, g] : ring_groups()) {
    auto m = oracle::marks(*g);
    auto const n = m.size();
    o.require(n == oracle::class_count(*g), name + ": class count differs from subset enumeration");
    o.require(table_of_marks(g) == m, name + ": table of marks differs from the counting oracle");
    for (std::size_t k = 0; k < n; ++k) {
      o.require(m[k][k] != 0, name + ": zero on the marks diagonal");
      for (std::size_t h = k + 1; h < n; ++h)
        o.require(m[k][h] == 0, name + ": marks matrix not lower triangular");
    }
    auto ring = burnside_ring(g);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::int64_t> product(n);
        for (std::size_t h = 0; h < n; ++h)
          product[h] = m[i][h] * m[k][h];
        auto expected = oracle::decompose(m, product);
        ++constants;
        o.require(ring[i][k] == expected, name + ": structure constant [" + std::to_string(i + 1) +
                                              "][" + std::to_string(k + 1) + "] differs");
      }
    }
    // G/G is the unit of the ring.
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> e(n, 0);
      e[i] = 1;
      o.require(ring[n - 1][i] == e, name + ": G/G is not the unit");
    }
  }
  o.summary = "7 groups, " + std::to_string(constants) + " structure constants match the marks oracle";
  return o;
}

// ------------------------------------------------------------------ 2

Outcome triangle_identities()
{
  Outcome o;
  std::size_t sets = 0;
  for (auto const &[name, g] : ring_groups()) {
    for (auto const &a : all_gsets(g, 6)) {
      ++sets;
      auto id = class_elt(id_span(a));
      auto label = name + " A=" + to_json(a).dump();
      o.require(triangle_left_elt(a) == id, label + ": left triangle");
      o.require(triangle_right_elt(a) == id, label + ": right triangle");
      auto id_marks = oracle::span_marks(id_span(a));
      o.require(oracle::span_marks(triangle_left(a)) == id_marks, label + ": left span not iso to id");
      o.require(oracle::span_marks(triangle_right(a)) == id_marks, label + ": right span not iso to id");
    }
  }
  o.summary = std::to_string(sets) + " G-sets with |A| <= 6, both composites equal [id_A]";
  return o;
}

// ------------------------------------------------------------------ 3

Outcome shuffle_identity()
{
  Outcome o;
  std::vector<GroupPtr> gs;
  for (auto const &entry : ring_groups())
    gs.push_back(entry.second);
  for (std::uint32_t k : {5u, 6u, 7u, 8u})
    gs.push_back(groups::cyclic(k));

  Random rng(g_seed ^ 0x3);
  std::size_t const instances = 1200;
  std::size_t nontrivial = 0;
  for (std::size_t t = 0; t < instances; ++t) {
    auto const &g = gs[rng.below(gs.size())];
    auto const m = static_cast<std::uint32_t>(rng.between(1, 3));
    auto const n = static_cast<std::uint32_t>(rng.between(1, 3));
    auto const q = static_cast<std::uint32_t>(rng.between(1, 3));
    auto mu = random_operad(g, m, rng);
    auto nu = random_operad(g, q, rng);
    // Half the instances use an action homomorphism for alpha, as in E_G(A).
    OperadObj alpha = random_operad(g, n, rng);
    if (t % 2 == 0) {
      auto a = random_gset(g, rng, n);
      if (a.size() > 0)
        alpha = OperadObj::from_action(a);
    }
    auto const na = alpha.arity();
    auto lhs = operad_gamma(omega_pair(mu, nu), std::vector<OperadObj>(m * q, alpha));
    auto rhs = omega_pair(operad_gamma(mu, std::vector<OperadObj>(m, alpha)), nu);
    auto sigma = block_shuffle(m, na, q);
    nontrivial += !(operad_sigma_action(lhs, sigma) == rhs);
    auto conjugated = operad_left_translate(sigma.inverse(), operad_sigma_action(lhs, sigma));
    o.require(conjugated == rhs, "m=" + std::to_string(m) + " n=" + std::to_string(na) +
                                     " q=" + std::to_string(q) + " |G|=" + std::to_string(g->order()));
  }
  o.summary = std::to_string(instances) + " instances, |G| <= 8, m,n,q <= 3; sigma^-1 L sigma = R exactly (" +
              std::to_string(nontrivial) + " where L sigma alone differs)";
  return o;
}

// ------------------------------------------------------------------ 4

Outcome zeta_retractions()
{
  Outcome o;
  std::size_t const per_group = 600;
  for (auto g : {groups::cyclic(2), groups::symmetric(3)}) {
    Random rng(g_seed ^ 0x4 ^ g->order());
    for (std::size_t t = 0; t < per_group; ++t) {
      GSet a;
      do
        a = random_gset(g, rng, 4);
      while (a.size() == 0);
      auto x = random_free_alg(a, static_cast<std::uint32_t>(rng.between(0, 4)), rng, 0.2);
      auto label = to_json(x).dump();
      o.require(f_lower(id_smash_eps(a), zeta_left(a, x)) == x, "left: " + label);
      o.require(f_lower(eps_smash_id(a), zeta_right(a, x)) == x, "right: " + label);
    }
  }
  o.summary = std::to_string(per_group) + " objects per group for C2 and S3, both sides exact";
  return o;
}

// ------------------------------------------------------------------ 5

Outcome unit_laws()
{
  Outcome o;
  std::vector<GroupPtr> gs{groups::trivial(), groups::cyclic(2), groups::cyclic(3),
                           groups::symmetric(3)};
  Random rng(g_seed ^ 0x5);
  std::size_t const instances = 600;
  std::size_t right_ok = 0, left_ok = 0, left_translate = 0;
  for (std::size_t t = 0; t < instances; ++t) {
    auto const &g = gs[t % gs.size()];
    auto a = random_gset(g, rng, 3), c = random_gset(g, rng, 3);
    auto x = random_free_alg(cartesian_product(c, a),
                             static_cast<std::uint32_t>(rng.between(0, 4)), rng, 0.1);
    right_ok += ealg_compose(c, a, a, x, unit_object(a)) == x;
    auto left = ealg_compose(c, c, a, unit_object(c), x);
    left_ok += left == x;
    left_translate += left == left_unit_translate(c, a, x);
    if (!(left == x))
      o.require(false, "left unit: x=" + to_json(x).dump() + " id_C o x=" + to_json(left).dump());
  }
  o.ok = right_ok == instances && left_ok == instances;

  // The smallest witness: trivial group, C = 2 points, A = point.
  auto triv = groups::trivial();
  auto c = GSet::trivial(triv, 2), a = GSet::point(triv);
  auto x = normalize(cartesian_product(c, a), OperadObj::constant(triv, Perm({1, 0})),
                     std::vector<Point>{0, 1});
  auto left = ealg_compose(c, c, a, unit_object(c), x);
  if (!(left == x)) {
    o.details.insert(o.details.begin(), "minimal witness: x=" + to_json(x).dump() +
                                            " id_C o x=" + to_json(left).dump());
  }

  std::ostringstream s;
  s << instances << " instances; right unit exact " << right_ok << "/" << instances
    << "; left unit exact " << left_ok << "/" << instances
    << "; left composite equals x with its operad part left-translated in " << left_translate << "/"
    << instances;
  o.summary = s.str();
  return o;
}

// ------------------------------------------------------------------ 6

Outcome fixed_object_correspondence()
{
  Outcome o;
  std::size_t cases = 0;
  for (auto g : {groups::cyclic(2), groups::cyclic(3), groups::symmetric(3)}) {
    for (auto const &a : all_gsets(g, 3)) {
      for (std::uint32_t n = 0; n <= 4; ++n) {
        ++cases;
        auto fixed = fixed_objects(a, n);
        auto label = "|G|=" + std::to_string(g->order()) + " A=" + to_json(a).dump() +
                     " n=" + std::to_string(n);
        bool all_fixed = true;
        for (auto const &x : fixed)
          all_fixed = all_fixed && is_fixed(x);
        o.require(all_fixed, label + ": non-fixed object listed");
        o.require(iso_class_count(fixed) == oracle::gsets_over(a, n),
                  label + ": iso classes " + std::to_string(iso_class_count(fixed)) + " vs " +
                      std::to_string(oracle::gsets_over(a, n)));
        o.require(fixed.size() == oracle::fixed_pair_count(a, n),
                  label + ": raw count " + std::to_string(fixed.size()) + " vs " +
                      std::to_string(oracle::fixed_pair_count(a, n)));
      }
    }
  }

  std::size_t const compositions = 240;
  Random rng(g_seed ^ 0x6);
  std::vector<GroupPtr> gs{groups::cyclic(2), groups::cyclic(3), groups::symmetric(3)};
  for (std::size_t t = 0; t < compositions; ++t) {
    auto const &g = gs[t % gs.size()];
    auto a = random_gset(g, rng, 3), b = random_gset(g, rng, 3), c = random_gset(g, rng, 3);
    auto s1 = random_span(a, b, rng, 2), s2 = random_span(b, c, rng, 2);
    auto composite = ealg_compose(c, b, a, span_to_fixed(s2), span_to_fixed(s1));
    if (!is_fixed(composite)) {
      o.require(false, "composite of fixed objects is not fixed");
      continue;
    }
    o.require(oracle::span_marks(fixed_to_span(composite, a, c)) ==
                  oracle::span_marks(compose_spans(s2, s1)),
              "composite span differs: s1=" + to_json(s1).dump());
  }
  o.summary = std::to_string(cases) +
              " (G, A, n) cases: fixed objects up to isomorphism = G-sets over A, raw count = "
              "(homomorphism, equivariant tuple) pairs; " +
              std::to_string(compositions) + " compositions match span pullbacks";
  return o;
}

// ------------------------------------------------------------------ 7

Outcome atiyah_diagrams()
{
  Outcome o;
  std::size_t const samples = 10000;
  double worst_diagram = 0.0, worst_equivariance = 0.0, worst_end = 0.0, worst_start = 0.0;
  std::size_t pairs = 0;
  auto note = [&](NumericReport const &r, double limit, bool strict_less, double &worst,
                  std::string const &ctx) {
    worst = std::max(worst, r.max_discrepancy);
    bool good = strict_less ? r.max_discrepancy < limit : r.max_discrepancy <= limit;
    o.require(good && r.samples >= samples,
              ctx + " " + r.name + " max=" + std::to_string(r.max_discrepancy) + " at " + r.argmax);
  };
  for (auto g : {groups::cyclic(2), groups::cyclic(3)}) {
    std::vector<GSet> sets;
    for (auto const &a : all_gsets(g, 4))
      if (a.size() > 0)
        sets.push_back(a);
    std::uint64_t seed = g_seed;
    for (auto const &a : sets) {
      auto ctx = "|G|=" + std::to_string(g->order()) + " A=" + to_json(a).dump();
      for (auto const &b : sets) {
        ++pairs;
        note(check_unit_diagram_left(b, a, samples, ++seed, 1e-9), 1e-9, true, worst_diagram, ctx);
        note(check_unit_diagram_right(b, a, samples, ++seed, 1e-9), 1e-9, true, worst_diagram, ctx);
      }
      note(check_equivariance("eta", a, samples, ++seed, 1e-12), 1e-12, false, worst_equivariance, ctx);
      note(check_equivariance("xi", a, samples, ++seed, 1e-12), 1e-12, false, worst_equivariance, ctx);
      for (double t : {0.25, 0.5, 0.9})
        note(check_equivariance("h", a, samples, ++seed, 1e-12, t), 1e-12, false, worst_equivariance,
             ctx);
      note(check_homotopy_start(a, samples, ++seed, 0.0), 0.0, false, worst_start, ctx);
      note(check_homotopy_end(a, samples, ++seed, 1e-9), 1e-9, true, worst_end, ctx);
    }
  }
  std::ostringstream s;
  s << pairs << " (G, A, B) pairs x " << samples << " samples; diagrams max " << worst_diagram
    << " (< 1e-9); equivariance max " << worst_equivariance << " (<= 1e-12); h(.,0) max "
    << worst_start << " (exact); h(.,1) vs xi max " << worst_end << " (< 1e-9)";
  o.summary = s.str();
  return o;
}

// ------------------------------------------------------------------ 8

/// D(f) for f : A -> B evaluated pointwise: the apex of
/// (eps_B x id_A) o (id_B x graph(f) x id_A) o (id_B x eta_A) is the set of
/// matching triples of apex points, enumerated directly.
Span direct_dual(GMap const &f)
{
  auto const &a = f.source();
  auto const &b = f.target();
  auto const &group = a.group();
  struct Triple
  {
    Point ub, ua;            // unit apex B x A; source b, target (b, a, a)
    Point mb, m1, m2;        // middle apex B x A x A; (b, a', a'') -> (b, f(a'), a'')
    Point cb, ca;            // counit apex B x A; (b', b', a3) -> a3
  };
  std::vector<Triple> apex;
  for (Point ub = 0; ub < b.size(); ++ub)
    for (Point ua = 0; ua < a.size(); ++ua)
      for (Point mb = 0; mb < b.size(); ++mb)
        for (Point m1 = 0; m1 < a.size(); ++m1)
          for (Point m2 = 0; m2 < a.size(); ++m2)
            for (Point cb = 0; cb < b.size(); ++cb)
              for (Point ca = 0; ca < a.size(); ++ca) {
                bool first = ub == mb && ua == m1 && ua == m2;
                bool second = mb == cb && f(m1) == cb && m2 == ca;
                if (first && second)
                  apex.push_back({ub, ua, mb, m1, m2, cb, ca});
              }
  auto const size = static_cast<std::uint32_t>(apex.size());
  std::vector<Point> action(group->order() * size);
  for (Elem g = 0; g < group->order(); ++g) {
    for (std::uint32_t d = 0; d < size; ++d) {
      auto const &p = apex[d];
      Triple moved{b.act(g, p.ub), a.act(g, p.ua), b.act(g, p.mb), a.act(g, p.m1),
                   a.act(g, p.m2), b.act(g, p.cb), a.act(g, p.ca)};
      for (std::uint32_t e = 0; e < size; ++e) {
        auto const &q = apex[e];
        if (q.ub == moved.ub && q.ua == moved.ua && q.mb == moved.mb && q.m1 == moved.m1 &&
            q.m2 == moved.m2 && q.cb == moved.cb && q.ca == moved.ca)
          action[g * size + d] = e;
      }
    }
  }
  std::vector<Point> leg;
  for (auto const &p : apex)
    leg.push_back(p.ca * b.size() + p.ub);
  return Span(b, a, GSet(group, size, action), leg);
}

Outcome transfer_identification()
{
  Outcome o;
  auto c2 = groups::cyclic(2);
  auto free = GSet::orbit(c2, 0), fixed = GSet::orbit(c2, 1);
  GMap pi(free, fixed, {0, 0});
  Span expected(fixed, free, free, {0, 1});

  auto direct = direct_dual(pi);
  o.require(oracle::span_marks(direct) == oracle::span_marks(expected),
            "direct composite is not C2/C2 <- C2/e -> C2/e");
  o.require(dual_of_gmap(pi) == class_elt(direct), "dual_of_gmap differs from the direct composite");
  o.require(dual_of_gmap(pi) == class_elt(expected), "dual_of_gmap differs from the transfer span");
  o.require(transfer(c2, 0, 1) == class_elt(expected), "transfer(e, C2) differs");

  // The same evaluation on random maps of C2- and S3-sets.
  std::size_t maps = 0;
  Random rng(g_seed ^ 0x8);
  for (auto g : {groups::cyclic(2), groups::symmetric(3)}) {
    for (int t = 0; t < 60; ++t) {
      auto a = random_gset(g, rng, 3), b = random_gset(g, rng, 3);
      auto f = random_gmap(a, b, rng);
      if (!f)
        continue;
      ++maps;
      o.require(dual_of_gmap(*f) == class_elt(direct_dual(*f)), "D(f) differs: " + to_json(*f).dump());
    }
  }
  o.summary = "D(C2/e -> C2/C2) = [C2/C2 <- C2/e -> C2/e] by direct triple enumeration; " +
              std::to_string(maps) + " further maps agree";
  return o;
}

// ------------------------------------------------------------------ 9

/// Subgroups of H up to H-conjugacy, i.e. transitive H-sets.
std::size_t subgroups_of_up_to_conjugacy(FiniteGroup const &g, oracle::Subgroup const &h)
{
  std::set<oracle::Subgroup> seen;
  std::size_t classes = 0;
  for (auto const &k : oracle::subgroups(g)) {
    if (!std::includes(h.begin(), h.end(), k.begin(), k.end()) || seen.count(k))
      continue;
    ++classes;
    for (auto x : h)
      seen.insert(oracle::conjugate(g, k, x));
  }
  return classes;
}

Outcome presheaf_ranks()
{
  Outcome o;
  std::string shown;
  for (auto const &[name, g] : std::vector<std::pair<std::string, GroupPtr>>{
         {"C2", groups::cyclic(2)}, {"S3", groups::symmetric(3)}}) {
    auto ranks = presheaf_at_orbits(GSet::point(g));
    auto const &classes = g->subgroup_classes();
    shown += (shown.empty() ? "" : ", ") + name + " [";
    for (std::size_t c = 0; c < classes.size(); ++c) {
      auto h = classes[c].elements;
      std::sort(h.begin(), h.end());
      auto expected = subgroups_of_up_to_conjugacy(*g, h);
      o.require(ranks[c] == expected, name + " H" + std::to_string(c + 1) + ": rank " +
                                          std::to_string(ranks[c]) + " vs " + std::to_string(expected));
      shown += (c ? "," : "") + std::to_string(ranks[c]);
    }
    shown += "]";
  }
  o.summary = "ranks " + shown + " match subgroups of H up to H-conjugacy";
  return o;
}

} // namespace

int main(int argc, char **argv)
{
  if (argc > 1)
    g_seed = std::strtoull(argv[1], nullptr, 10);

  struct Criterion
  {
    int id;
    char const *name;
    double budget;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
    {1, "burnside-ring", 10, burnside_ring_vs_marks},
    {2, "triangle-identities", 60, triangle_identities},
    {3, "gamma-omega-shuffle", 30, shuffle_identity},
    {4, "zeta-retraction", 30, zeta_retractions},
    {5, "unit-laws", 30, unit_laws},
    {6, "fixed-objects", 120, fixed_object_correspondence},
    {7, "atiyah-diagrams", 60, atiyah_diagrams},
    {8, "transfer", 10, transfer_identification},
    {9, "presheaf-ranks", 10, presheaf_ranks},
  };

  std::cout << "acceptance seed=" << g_seed << "\n";
  int failed = 0;
  for (auto const &c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (std::exception const &e) {
      out.ok = false;
      out.summary = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.budget;
    bool ok = out.ok && in_time;
    failed += !ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%gs", secs, c.budget);
    std::cout << (ok ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " [" << timing << "] "
              << out.summary << (in_time ? "" : " (over time budget)") << "\n";
    for (auto const &d : out.details)
      std::cout << "     " << d << "\n";
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criterion(s) failed\n"
                       : std::string("acceptance: all criteria pass\n"));
  return failed ? 1 : 0;
}
