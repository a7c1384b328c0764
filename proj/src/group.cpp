#include "gspan/group.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "gspan/error.hpp"

namespace gspan
{

namespace
{

constexpr std::size_t kTableMaxOrder = 1024;

} // namespace

std::size_t ElemSet::size() const
{
  std::size_t n = 0;
  for (auto w : _words)
    n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<Elem> ElemSet::elements() const
{
  std::vector<Elem> res;
  for (std::size_t i = 0; i < _words.size(); ++i) {
    auto w = _words[i];
    while (w) {
      auto bit = static_cast<std::size_t>(std::countr_zero(w));
      res.push_back(static_cast<Elem>(i * 64 + bit));
      w &= w - 1;
    }
  }
  return res;
}

std::size_t ElemSetHash::operator()(ElemSet const &s) const noexcept
{
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : s.words())
    h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
  return h;
}

GroupPtr FiniteGroup::make(std::uint32_t degree, std::vector<Perm> generators,
                           std::size_t max_order)
{
  for (auto const &g : generators) {
    if (g.degree() != degree)
      fail(ErrorKind::MalformedInput,
           "generator " + g.str() + " does not have degree " +
             std::to_string(degree));
  }

  std::shared_ptr<FiniteGroup> grp(new FiniteGroup());
  grp->_degree = degree;
  grp->_generators = std::move(generators);

  auto &elems = grp->_elements;
  auto &index = grp->_index;

  elems.push_back(Perm::identity(degree));
  index.emplace(elems.back(), 0);
  grp->_parent.push_back(0);
  grp->_parent_gen.push_back(0);

  for (std::size_t cur = 0; cur < elems.size(); ++cur) {
    for (std::size_t s = 0; s < grp->_generators.size(); ++s) {
      Perm next = grp->_generators[s] * elems[cur];
      if (index.contains(next))
        continue;
      if (elems.size() >= max_order)
        fail(ErrorKind::SizeLimit,
             "group closure exceeds the element limit of " +
               std::to_string(max_order));
      index.emplace(next, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(next));
      grp->_parent.push_back(static_cast<Elem>(cur));
      grp->_parent_gen.push_back(s);
    }
  }

  auto const order = elems.size();

  for (auto const &g : grp->_generators)
    grp->_generator_elems.push_back(index.at(g));

  grp->_inverse.resize(order);
  for (Elem g = 0; g < order; ++g)
    grp->_inverse[g] = index.at(elems[g].inverse());

  std::vector<Elem> by_lex(order);
  std::iota(by_lex.begin(), by_lex.end(), Elem{0});
  std::sort(by_lex.begin(), by_lex.end(),
            [&](Elem a, Elem b) { return elems[a] < elems[b]; });
  grp->_lex_rank.resize(order);
  for (std::uint32_t r = 0; r < order; ++r)
    grp->_lex_rank[by_lex[r]] = r;

  if (order <= kTableMaxOrder) {
    grp->_table.resize(order * order);
    for (Elem g = 0; g < order; ++g) {
      for (Elem h = 0; h < order; ++h)
        grp->_table[g * order + h] = index.at(elems[g] * elems[h]);
    }
  }

  return grp;
}

Elem FiniteGroup::mul(Elem g, Elem h) const
{
  if (!_table.empty())
    return _table[g * order() + h];
  return _index.at(_elements[g] * _elements[h]);
}

std::optional<Elem> FiniteGroup::index_of(Perm const &p) const
{
  auto it = _index.find(p);
  if (it == _index.end())
    return std::nullopt;
  return it->second;
}

Perm FiniteGroup::multiply(Perm const &g, Perm const &h) const
{
  if (g.degree() != _degree || h.degree() != _degree)
    fail(ErrorKind::MalformedInput, "degree mismatch: expected degree " +
                                      std::to_string(_degree));
  return g * h;
}

ElemSet FiniteGroup::full_set() const
{
  ElemSet s(order());
  for (Elem g = 0; g < order(); ++g)
    s.insert(g);
  return s;
}

ElemSet FiniteGroup::trivial_set() const
{
  ElemSet s(order());
  s.insert(identity());
  return s;
}

ElemSet FiniteGroup::closure(std::vector<Elem> const &gens) const
{
  ElemSet s(order());
  std::vector<Elem> members{identity()};
  s.insert(identity());
  for (std::size_t cur = 0; cur < members.size(); ++cur) {
    for (auto x : gens) {
      Elem next = mul(x, members[cur]);
      if (!s.contains(next)) {
        s.insert(next);
        members.push_back(next);
      }
    }
  }
  return s;
}

ElemSet FiniteGroup::conjugate(ElemSet const &subgroup, Elem g) const
{
  ElemSet res(order());
  for (auto h : subgroup.elements())
    res.insert(conj(g, h));
  return res;
}

bool FiniteGroup::is_subgroup(ElemSet const &s) const
{
  if (!s.contains(identity()))
    return false;
  auto elems = s.elements();
  for (auto a : elems) {
    for (auto b : elems) {
      if (!s.contains(mul(a, b)))
        return false;
    }
  }
  return true;
}

void FiniteGroup::compute_subgroups() const
{
  auto lattice = std::make_unique<Lattice>();
  auto const n = order();

  // Cyclic extension: every subgroup is the join of cyclic subgroups, so
  // closing {e} under "join with a cyclic subgroup" reaches all of them.
  std::vector<ElemSet> cyclic;
  {
    std::unordered_map<ElemSet, bool, ElemSetHash> seen;
    for (Elem g = 0; g < n; ++g) {
      auto c = closure({g});
      if (seen.emplace(c, true).second)
        cyclic.push_back(std::move(c));
    }
  }

  std::unordered_map<ElemSet, std::size_t, ElemSetHash> found;
  auto &subs = lattice->subgroups;
  subs.push_back(trivial_set());
  found.emplace(subs.back(), 0);
  for (std::size_t cur = 0; cur < subs.size(); ++cur) {
    for (auto const &c : cyclic) {
      bool contained = true;
      for (auto w = std::size_t{0}; w < c.words().size(); ++w) {
        if ((c.words()[w] & ~subs[cur].words()[w]) != 0) {
          contained = false;
          break;
        }
      }
      if (contained)
        continue;
      auto gens = subs[cur].elements();
      auto extra = c.elements();
      gens.insert(gens.end(), extra.begin(), extra.end());
      auto joined = closure(gens);
      if (!found.contains(joined)) {
        found.emplace(joined, subs.size());
        subs.push_back(std::move(joined));
      }
    }
  }

  auto key_of = [&](ElemSet const &s) {
    std::vector<std::uint32_t> key;
    for (auto g : s.elements())
      key.push_back(_lex_rank[g]);
    std::sort(key.begin(), key.end());
    return key;
  };

  // Group subgroups into conjugacy classes and pick minimal conjugates.
  std::vector<std::size_t> class_of_sub(subs.size(), SIZE_MAX);
  struct Pending
  {
    ElemSet rep;
    std::vector<std::uint32_t> key;
    std::vector<std::size_t> members;
  };
  std::vector<Pending> pending;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (class_of_sub[i] != SIZE_MAX)
      continue;
    Pending p;
    for (Elem g = 0; g < n; ++g) {
      auto c = conjugate(subs[i], g);
      auto j = found.at(c);
      if (class_of_sub[j] == SIZE_MAX) {
        class_of_sub[j] = pending.size();
        p.members.push_back(j);
      }
      auto k = key_of(c);
      if (p.key.empty() || k < p.key) {
        p.key = std::move(k);
        p.rep = c;
      }
    }
    pending.push_back(std::move(p));
  }

  std::vector<std::size_t> order_idx(pending.size());
  std::iota(order_idx.begin(), order_idx.end(), std::size_t{0});
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    auto sa = pending[a].key.size(), sb = pending[b].key.size();
    if (sa != sb)
      return sa < sb;
    return pending[a].key < pending[b].key;
  });

  for (std::size_t pos = 0; pos < order_idx.size(); ++pos) {
    auto &p = pending[order_idx[pos]];
    SubgroupClass cls;
    cls.index = pos;
    cls.representative = p.rep;
    cls.elements = p.rep.elements();
    cls.class_size = p.members.size();
    cls.normalizer = ElemSet(n);
    for (Elem g = 0; g < n; ++g) {
      if (conjugate(p.rep, g) == p.rep)
        cls.normalizer.insert(g);
    }
    for (auto j : p.members)
      lattice->class_index.emplace(subs[j], pos);
    lattice->classes.push_back(std::move(cls));
  }

  _lattice = std::move(lattice);
}

std::vector<ElemSet> const &FiniteGroup::all_subgroups() const
{
  std::call_once(_lattice_once, [this] { compute_subgroups(); });
  return _lattice->subgroups;
}

std::vector<SubgroupClass> const &FiniteGroup::subgroup_classes() const
{
  std::call_once(_lattice_once, [this] { compute_subgroups(); });
  return _lattice->classes;
}

std::size_t FiniteGroup::class_of(ElemSet const &subgroup) const
{
  std::call_once(_lattice_once, [this] { compute_subgroups(); });
  auto it = _lattice->class_index.find(subgroup);
  if (it == _lattice->class_index.end())
    fail(ErrorKind::MalformedInput, "element set is not a subgroup");
  return it->second;
}

Elem FiniteGroup::conjugator_to_representative(ElemSet const &subgroup) const
{
  auto const &rep = subgroup_classes()[class_of(subgroup)].representative;
  for (Elem g = 0; g < order(); ++g) {
    if (conjugate(subgroup, g) == rep)
      return g;
  }
  fail(ErrorKind::MalformedInput, "subgroup not conjugate to its class representative");
}

bool same_group(FiniteGroup const &a, FiniteGroup const &b)
{
  if (&a == &b)
    return true;
  return a.degree() == b.degree() && a.order() == b.order() &&
         a.generators() == b.generators();
}

namespace groups
{

GroupPtr trivial()
{ return FiniteGroup::make(1, {}); }

GroupPtr cyclic(std::uint32_t n)
{
  if (n == 0)
    fail(ErrorKind::Usage, "cyclic group needs n >= 1");
  if (n == 1)
    return trivial();
  std::vector<std::uint32_t> rot(n);
  for (std::uint32_t i = 0; i < n; ++i)
    rot[i] = (i + 1) % n;
  return FiniteGroup::make(n, {Perm(rot)});
}

GroupPtr dihedral(std::uint32_t n)
{
  if (n == 0)
    fail(ErrorKind::Usage, "dihedral group needs n >= 1");
  if (n == 1)
    return cyclic(2);
  if (n == 2)
    return klein();
  std::vector<std::uint32_t> rot(n), refl(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return FiniteGroup::make(n, {Perm(rot), Perm(refl)});
}

GroupPtr symmetric(std::uint32_t n)
{
  if (n == 0)
    fail(ErrorKind::Usage, "symmetric group needs n >= 1");
  if (n == 1)
    return trivial();
  if (n == 2)
    return cyclic(2);
  std::vector<std::uint32_t> cyc(n), swap(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    cyc[i] = (i + 1) % n;
    swap[i] = i;
  }
  std::swap(swap[0], swap[1]);
  return FiniteGroup::make(n, {Perm(cyc), Perm(swap)});
}

GroupPtr klein()
{
  return FiniteGroup::make(4, {Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})});
}

} // namespace groups

} // namespace gspan
