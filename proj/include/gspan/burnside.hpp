#ifndef GSPAN_BURNSIDE_HPP
#define GSPAN_BURNSIDE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "gspan/span.hpp"

namespace gspan
{

/// Isomorphism type of a span with transitive apex G/H: the subgroup class
/// of H together with the least point of the N(H)-orbit of the image of eH
/// in tgt x src.
struct BasisKey
{
  std::uint32_t subgroup_class = 0;
  Point point = 0;

  friend auto operator<=>(BasisKey const &, BasisKey const &) = default;
  friend bool operator==(BasisKey const &, BasisKey const &) = default;
};

/// The canonical invariant of a span: the multiset (sorted list) of the
/// basis keys of its apex orbits. Equal exactly for isomorphic spans.
struct SpanClass
{
  GSet src;
  GSet tgt;
  std::vector<BasisKey> invariant;
  Span representative;

  friend bool operator==(SpanClass const &a, SpanClass const &b)
  { return a.src == b.src && a.tgt == b.tgt && a.invariant == b.invariant; }
};

/// An element of the hom group Ab[GE](src, tgt): an integer combination of
/// indecomposable span classes.
class BurnsideElt
{
public:
  BurnsideElt() = default;
  BurnsideElt(GSet src, GSet tgt)
  : _src(std::move(src)), _tgt(std::move(tgt))
  {}

  GSet const &src() const
  { return _src; }
  GSet const &tgt() const
  { return _tgt; }
  std::map<BasisKey, std::int64_t> const &terms() const
  { return _terms; }

  bool is_zero() const
  { return _terms.empty(); }

  std::int64_t coefficient(BasisKey const &k) const;
  void add(BasisKey const &k, std::int64_t c);

  BurnsideElt &operator+=(BurnsideElt const &other);
  friend BurnsideElt operator+(BurnsideElt a, BurnsideElt const &b)
  { return a += b; }
  friend BurnsideElt operator-(BurnsideElt a, BurnsideElt const &b);
  friend BurnsideElt operator*(std::int64_t c, BurnsideElt a);

  friend bool operator==(BurnsideElt const &a, BurnsideElt const &b)
  { return a._src == b._src && a._tgt == b._tgt && a._terms == b._terms; }

private:
  GSet _src;
  GSet _tgt;
  std::map<BasisKey, std::int64_t> _terms;
};

using MarksVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Basis key of the orbit of apex point x.
BasisKey orbit_key(Span const &s, Point x);

SpanClass span_class(Span const &s);
BurnsideElt to_elt(SpanClass const &c);
BurnsideElt class_elt(Span const &s);

/// The span G/H -> tgt x src, gH |-> g.point, named by `key`.
Span basis_span(GSet const &src, GSet const &tgt, BasisKey const &key);

/// All indecomposable classes A -> B, sorted by (subgroup class, point).
std::vector<BasisKey> hom_basis(GSet const &a, GSet const &b);

BurnsideElt zero_elt(GSet const &src, GSet const &tgt);
BurnsideElt identity_elt(GSet const &a);

/// y after x, extended bilinearly from compose_spans.
BurnsideElt compose_elts(BurnsideElt const &y, BurnsideElt const &x);

/// Bilinear extension of span_external_product.
BurnsideElt external_product_elts(BurnsideElt const &x, BurnsideElt const &y);

/// Structure constants of End(1): entry [i][j] is the decomposition of
/// [G/H_i] o [G/H_j] as coefficients over the subgroup classes.
std::vector<std::vector<MarksVector>> burnside_ring(GroupPtr const &group);

/// Row K (orbit type G/K), column H: |(G/K)^H|.
IntMatrix table_of_marks(GroupPtr const &group);

MarksVector marks_of(BurnsideElt const &x);

/// Dual of f : A -> B in Ab[GE], evaluated as the composite
/// (eps_B x id_A) o (id_B x graph(f) x id_A) o (id_B x eta_A) of spans.
BurnsideElt dual_of_gmap(GMap const &f);

/// The projection G/H -> G/K for classes with H subconjugate to K.
GMap orbit_projection(GroupPtr const &group, std::size_t sub_class,
                      std::size_t super_class);

/// Dual of orbit_projection(group, sub, super).
BurnsideElt transfer(GroupPtr const &group, std::size_t sub_class,
                     std::size_t super_class);

/// Rank of Ab[GE](G/H, B) for each subgroup class H.
std::vector<std::size_t> presheaf_at_orbits(GSet const &b);

/// The triangle composites at the level of classes.
BurnsideElt triangle_left_elt(GSet const &a);
BurnsideElt triangle_right_elt(GSet const &a);

} // namespace gspan

#endif // GSPAN_BURNSIDE_HPP
