#ifndef GSPAN_GROUP_HPP
#define GSPAN_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gspan/perm.hpp"

namespace gspan
{

/// Index of a group element in `FiniteGroup::elements()`; 0 is the identity.
using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 1000000;

/// A subset of a finite group's elements, as a bitset over element indices.
class ElemSet
{
public:
  ElemSet() = default;
  explicit ElemSet(std::size_t universe)
  : _universe(universe), _words((universe + 63) / 64, 0)
  {}

  std::size_t universe() const
  { return _universe; }

  bool contains(Elem g) const
  { return (_words[g / 64] >> (g % 64)) & 1u; }

  void insert(Elem g)
  { _words[g / 64] |= std::uint64_t{1} << (g % 64); }

  std::size_t size() const;
  std::vector<Elem> elements() const;

  friend bool operator==(ElemSet const &, ElemSet const &) = default;

  std::vector<std::uint64_t> const &words() const
  { return _words; }

private:
  std::size_t _universe = 0;
  std::vector<std::uint64_t> _words;
};

struct ElemSetHash
{
  std::size_t operator()(ElemSet const &s) const noexcept;
};

/// One conjugacy class of subgroups. `representative` is the conjugate whose
/// sorted element list is lexicographically least.
struct SubgroupClass
{
  std::size_t index = 0;
  ElemSet representative;
  std::vector<Elem> elements;
  ElemSet normalizer;
  std::size_t class_size = 0;

  std::size_t order() const
  { return elements.size(); }
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<FiniteGroup const>;

/// A finite permutation group, enumerated by breadth-first closure of its
/// generators. Immutable after construction; the subgroup lattice is
/// computed on first use behind a once-flag.
class FiniteGroup
{
public:
  static GroupPtr make(std::uint32_t degree, std::vector<Perm> generators,
                       std::size_t max_order = kDefaultMaxOrder);

  std::uint32_t degree() const
  { return _degree; }

  std::size_t order() const
  { return _elements.size(); }

  std::vector<Perm> const &generators() const
  { return _generators; }

  /// Element indices of the generators (duplicates and identities kept).
  std::vector<Elem> const &generator_elems() const
  { return _generator_elems; }

  std::vector<Perm> const &elements() const
  { return _elements; }

  Perm const &element(Elem g) const
  { return _elements[g]; }

  static constexpr Elem identity()
  { return 0; }

  Elem mul(Elem g, Elem h) const;
  Elem inv(Elem g) const
  { return _inverse[g]; }

  /// g h g^-1
  Elem conj(Elem g, Elem h) const
  { return mul(mul(g, h), inv(g)); }

  std::optional<Elem> index_of(Perm const &p) const;

  /// Product of two elements given as permutations; both must lie in the group.
  Perm multiply(Perm const &g, Perm const &h) const;

  /// BFS tree: element(g) = generators()[word_generator(g)] * element(word_parent(g))
  /// for every g != identity.
  Elem word_parent(Elem g) const
  { return _parent[g]; }
  std::size_t word_generator(Elem g) const
  { return _parent_gen[g]; }

  /// Rank of each element in the lexicographic order of image sequences.
  std::uint32_t lex_rank(Elem g) const
  { return _lex_rank[g]; }

  ElemSet full_set() const;
  ElemSet trivial_set() const;

  /// Subgroup generated by `gens`.
  ElemSet closure(std::vector<Elem> const &gens) const;

  ElemSet conjugate(ElemSet const &subgroup, Elem g) const;
  bool is_subgroup(ElemSet const &s) const;

  /// All subgroups, in discovery order.
  std::vector<ElemSet> const &all_subgroups() const;

  /// Conjugacy classes of subgroups ordered by order, then by the sorted
  /// lexicographic ranks of the minimal conjugate. First is {e}, last is G.
  std::vector<SubgroupClass> const &subgroup_classes() const;

  std::size_t class_of(ElemSet const &subgroup) const;

  /// Some g with g S g^-1 equal to the representative of S's class.
  Elem conjugator_to_representative(ElemSet const &subgroup) const;

private:
  FiniteGroup() = default;

  void compute_subgroups() const;

  std::uint32_t _degree = 0;
  std::vector<Perm> _generators;
  std::vector<Elem> _generator_elems;
  std::vector<Perm> _elements;
  std::unordered_map<Perm, Elem, PermHash> _index;
  std::vector<Elem> _inverse;
  std::vector<Elem> _parent;
  std::vector<std::size_t> _parent_gen;
  std::vector<std::uint32_t> _lex_rank;
  std::vector<Elem> _table; // Cayley table, only for small orders

  struct Lattice
  {
    std::vector<ElemSet> subgroups;
    std::vector<SubgroupClass> classes;
    std::unordered_map<ElemSet, std::size_t, ElemSetHash> class_index;
  };
  mutable std::once_flag _lattice_once;
  mutable std::unique_ptr<Lattice> _lattice;
};

bool same_group(FiniteGroup const &a, FiniteGroup const &b);

namespace groups
{

GroupPtr trivial();
GroupPtr cyclic(std::uint32_t n);
/// Dihedral group of order 2n acting on n points (n >= 3); n = 1, 2 give C2, C2xC2.
GroupPtr dihedral(std::uint32_t n);
GroupPtr symmetric(std::uint32_t n);
/// C2 x C2 acting regularly on 4 points.
GroupPtr klein();

} // namespace groups

} // namespace gspan

#endif // GSPAN_GROUP_HPP
