#include "gspan/fixed_objects.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "gspan/error.hpp"

namespace gspan
{

namespace
{

std::vector<Perm> all_perms(std::uint32_t n)
{
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), std::uint32_t{0});
  std::vector<Perm> res;
  do
    res.emplace_back(images);
  while (std::next_permutation(images.begin(), images.end()));
  return res;
}

/// Advances a mixed-radix counter; false once it wraps around.
bool next_digits(std::vector<std::size_t> &digits, std::size_t radix)
{
  for (auto &d : digits) {
    if (++d < radix)
      return true;
    d = 0;
  }
  return false;
}

} // namespace

std::vector<OperadObj> homomorphisms(GroupPtr const &group, std::uint32_t n)
{
  auto const &grp = *group;
  auto const &gens = grp.generator_elems();
  auto const perms = all_perms(n);
  std::vector<OperadObj> res;

  std::vector<std::size_t> choice(gens.size(), 0);
  do {
    std::vector<std::optional<Perm>> value(grp.order());
    value[FiniteGroup::identity()] = Perm::identity(n);
    std::deque<Elem> queue{FiniteGroup::identity()};
    bool ok = true;
    while (!queue.empty() && ok) {
      auto g = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        auto h = grp.mul(gens[k], g);
        auto candidate = perms[choice[k]] * *value[g];
        if (!value[h]) {
          value[h] = candidate;
          queue.push_back(h);
        } else if (*value[h] != candidate) {
          ok = false;
        }
      }
    }
    if (!ok)
      continue;
    std::vector<std::uint32_t> values;
    values.reserve(grp.order() * n);
    for (auto const &p : value)
      values.insert(values.end(), p->images().begin(), p->images().end());
    res.emplace_back(group, n, std::move(values));
  } while (next_digits(choice, perms.size()));
  return res;
}

std::vector<FreeAlgObj> fixed_objects(GSet const &a, std::uint32_t n)
{
  auto const &gens = a.group()->generator_elems();
  std::vector<FreeAlgObj> res;
  if (a.size() == 0 && n > 0)
    return res;
  for (auto const &beta : homomorphisms(a.group(), n)) {
    std::vector<std::size_t> tuple(n, 0);
    do {
      bool equivariant = true;
      for (auto s : gens) {
        for (std::uint32_t i = 0; i < n && equivariant; ++i) {
          equivariant = a.act(s, static_cast<Point>(tuple[i])) == tuple[beta.at(s, i)];
        }
      }
      if (!equivariant)
        continue;
      std::vector<Point> points(tuple.begin(), tuple.end());
      res.push_back(normalize(a, beta, points));
    } while (next_digits(tuple, a.size()));
  }
  return res;
}

Span fixed_to_span(FreeAlgObj const &x, GSet const &src, GSet const &tgt)
{
  if (!(x.over() == cartesian_product(tgt, src)))
    fail(ErrorKind::Shape, "fixed object is not over tgt x src");
  auto f = fixed_to_gmap(x);
  return Span(src, tgt, f.source(), f.images());
}

FreeAlgObj span_to_fixed(Span const &s)
{ return gmap_to_fixed(s.leg_map()); }

std::size_t iso_class_count(std::vector<FreeAlgObj> const &fixed)
{
  std::set<std::vector<BasisKey>> seen;
  for (auto const &x : fixed) {
    auto one = GSet::point(x.over().group());
    seen.insert(span_class(fixed_to_span(x, one, x.over())).invariant);
  }
  return seen.size();
}

std::size_t gsets_over_count(GSet const &a, std::uint32_t n)
{
  auto const &grp = *a.group();
  std::vector<std::size_t> ways(n + 1, 0);
  ways[0] = 1;
  for (auto const &k : hom_basis(GSet::point(a.group()), a)) {
    auto const size = grp.order() / grp.subgroup_classes()[k.subgroup_class].order();
    for (std::size_t total = size; total <= n; ++total)
      ways[total] += ways[total - size];
  }
  return ways[n];
}

} // namespace gspan
