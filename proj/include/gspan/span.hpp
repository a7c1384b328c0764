#ifndef GSPAN_SPAN_HPP
#define GSPAN_SPAN_HPP

#include <optional>
#include <vector>

#include "gspan/gset.hpp"

namespace gspan
{

/// A 1-cell A -> B of the span bicategory: a G-set D over B x A.
///
/// The leg sends an apex point to the index b * |A| + a of cartesian_product(tgt, src).
class Span
{
public:
  Span() = default;
  Span(GSet src, GSet tgt, GSet apex, std::vector<Point> leg);

  GSet const &src() const
  { return _src; }
  GSet const &tgt() const
  { return _tgt; }
  GSet const &apex() const
  { return _apex; }
  std::vector<Point> const &leg() const
  { return _leg; }

  Point src_leg(Point d) const
  { return _leg[d] % _src.size(); }
  Point tgt_leg(Point d) const
  { return _leg[d] / _src.size(); }

  /// The leg as a G-map into tgt x src.
  GMap leg_map() const;

private:
  GSet _src;
  GSet _tgt;
  GSet _apex;
  std::vector<Point> _leg;
};

/// An isomorphism of spans with equal endpoints: an equivariant bijection of
/// apexes commuting with the legs.
struct TwoCell
{
  Span source;
  Span target;
  GMap iso;
};

Span id_span(GSet const &a);

/// The span A -> B with apex A and legs (f, id): the graph of f.
Span graph_span(GMap const &f);

/// The span B -> A with apex A and legs (id, f).
Span reversed_graph_span(GMap const &f);

/// Pullback composite `outer` after `inner`. The pullback is enumerated with
/// the outer apex point as the slow coordinate and renumbered in that order.
/// Throws Shape unless outer.src() and inner.tgt() are identical G-sets.
Span compose_spans(Span const &outer, Span const &inner);

Span span_disjoint_union(Span const &s, Span const &t);

/// s x t : A x A' -> B x B' with apex D x E.
Span span_external_product(Span const &s, Span const &t);

/// The empty span A -> B.
Span zero_span(GSet const &src, GSet const &tgt);

std::optional<TwoCell> span_iso(Span const &s, Span const &t);

/// 1 <- A -> A x A, the counit.
Span epsilon_span(GSet const &a);

/// A x A <- A -> 1, the unit.
Span eta_span(GSet const &a);

/// (id x epsilon) o (eta x id) : A -> A.
Span triangle_left(GSet const &a);

/// (epsilon x id) o (id x eta) : A -> A.
Span triangle_right(GSet const &a);

} // namespace gspan

#endif // GSPAN_SPAN_HPP
