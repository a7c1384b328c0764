#ifndef GSPAN_FIXED_OBJECTS_HPP
#define GSPAN_FIXED_OBJECTS_HPP

#include <vector>

#include "gspan/burnside.hpp"
#include "gspan/operad.hpp"

namespace gspan
{

/// Every homomorphism G -> Sigma_n, as an object of O_G(n). Generator images
/// are enumerated and kept when the graph closes up to a subgroup of G x Sigma_n
/// of order |G|.
std::vector<OperadObj> homomorphisms(GroupPtr const &group, std::uint32_t n);

/// All G-fixed canonical objects of E_G(A) at level n: one for each
/// homomorphism beta with a tuple satisfying g a_i = a_{beta(g)(i)}.
std::vector<FreeAlgObj> fixed_objects(GSet const &a, std::uint32_t n);

/// The span src -> tgt carried by a fixed object over tgt x src.
Span fixed_to_span(FreeAlgObj const &x, GSet const &src, GSet const &tgt);
FreeAlgObj span_to_fixed(Span const &s);

/// Number of isomorphism classes of G-sets over A among fixed objects, i.e.
/// orbits of the chaotic isomorphisms (left Sigma_n translation).
std::size_t iso_class_count(std::vector<FreeAlgObj> const &fixed);

/// Isomorphism classes of n-element G-sets over A, counted as multisets of
/// transitive types from hom_basis(1, A).
std::size_t gsets_over_count(GSet const &a, std::uint32_t n);

} // namespace gspan

#endif // GSPAN_FIXED_OBJECTS_HPP
