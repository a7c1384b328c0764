#ifndef GSPAN_OPERAD_HPP
#define GSPAN_OPERAD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gspan/gset.hpp"

namespace gspan
{

/// Symmetric-group operad structure, on plain permutations.
namespace sym
{

/// gamma(sigma; tau_1, ..., tau_k) = sigma<j_1, ..., j_k> o (tau_1 + ... + tau_k),
/// where sigma<...> moves block i (of size j_i) to block position sigma(i).
Perm gamma(Perm const &sigma, std::vector<Perm> const &taus);

/// Homomorphism Sigma_m x Sigma_n -> Sigma_mn on lexicographically ordered pairs.
Perm omega(Perm const &sigma, Perm const &tau);

/// Deletes slot i and re-ranks the remaining values.
Perm delete_slot(Perm const &p, std::uint32_t i);

/// Keeps the slots flagged in `keep` and re-ranks their values.
Perm restrict_slots(Perm const &p, std::vector<bool> const &keep);

} // namespace sym

/// An object of O_G(j): a function G -> Sigma_j, stored as one row of images
/// per group element. O_G(j) is chaotic, so objects carry all the data.
class OperadObj
{
public:
  OperadObj() = default;
  OperadObj(GroupPtr group, std::uint32_t arity, std::vector<std::uint32_t> values);

  static OperadObj constant(GroupPtr group, Perm const &p);
  static OperadObj identity(GroupPtr group, std::uint32_t arity)
  { return constant(std::move(group), Perm::identity(arity)); }

  /// The action homomorphism of a G-set viewed as an object of O_G(n).
  static OperadObj from_action(GSet const &a);

  GroupPtr const &group() const
  { return _group; }
  std::uint32_t arity() const
  { return _arity; }
  std::vector<std::uint32_t> const &values() const
  { return _values; }

  std::uint32_t at(Elem h, std::uint32_t i) const
  { return _values[static_cast<std::size_t>(h) * _arity + i]; }
  Perm value(Elem h) const;

  bool is_homomorphism() const;

  friend bool operator==(OperadObj const &a, OperadObj const &b)
  { return a._arity == b._arity && a._values == b._values; }

private:
  GroupPtr _group;
  std::uint32_t _arity = 0;
  std::vector<std::uint32_t> _values;
};

/// (g.x)(h) = x(hg)
OperadObj operad_action(Elem g, OperadObj const &x);

/// (x.sigma)(h) = x(h) o sigma
OperadObj operad_sigma_action(OperadObj const &x, Perm const &sigma);

/// (sigma.x)(h) = sigma o x(h); the morphisms of the chaotic category relate x
/// to every such translate.
OperadObj operad_left_translate(Perm const &sigma, OperadObj const &x);

OperadObj operad_gamma(OperadObj const &x, std::vector<OperadObj> const &ys);
OperadObj sigma_i(OperadObj const &x, std::uint32_t i);
OperadObj omega_pair(OperadObj const &x, OperadObj const &y);

struct AlgConfig
{
  std::size_t max_level = 1024;
};

/// A point of A or the basepoint of A_+.
using BasedPoint = std::optional<Point>;

/// A based map A_+ -> B_+; nullopt images go to the basepoint.
class BasedMap
{
public:
  BasedMap(GSet source, GSet target, std::vector<BasedPoint> images);

  /// Images on A_+ with index 0 the basepoint and index k the point k-1;
  /// entries are 0 for the basepoint or k for point k-1. Throws MalformedInput
  /// unless the basepoint goes to the basepoint.
  static BasedMap from_plus_images(GSet source, GSet target,
                                   std::vector<std::int64_t> const &images);

  static BasedMap from_gmap(GMap const &f);

  /// r : B_+ -> A_+ with r(i(a)) = a and everything else to the basepoint.
  static BasedMap retraction(GMap const &inclusion);

  GSet const &source() const
  { return _source; }
  GSet const &target() const
  { return _target; }
  BasedPoint operator()(Point x) const
  { return _images[x]; }

private:
  GSet _source;
  GSet _target;
  std::vector<BasedPoint> _images;
};

/// An object (op; a_1, ..., a_n) of E_G(A), always in canonical form: no
/// basepoint entries, and the representative of its Sigma_n-orbit that is
/// least in (tuple, then op value table).
class FreeAlgObj
{
public:
  GSet const &over() const
  { return _over; }
  std::uint32_t level() const
  { return _op.arity(); }
  OperadObj const &op() const
  { return _op; }
  std::vector<Point> const &tuple() const
  { return _tuple; }

  friend bool operator==(FreeAlgObj const &a, FreeAlgObj const &b)
  { return a._over == b._over && a._op == b._op && a._tuple == b._tuple; }

  friend FreeAlgObj normalize(GSet const &, OperadObj const &,
                              std::vector<BasedPoint> const &, AlgConfig const &);

private:
  GSet _over;
  OperadObj _op;
  std::vector<Point> _tuple;
};

/// Removes basepoint slots (the sigma_i identifications), then picks the
/// canonical Sigma_n representative.
FreeAlgObj normalize(GSet const &over, OperadObj const &op,
                     std::vector<BasedPoint> const &tuple, AlgConfig const &cfg = {});
FreeAlgObj normalize(GSet const &over, OperadObj const &op,
                     std::vector<Point> const &tuple, AlgConfig const &cfg = {});

FreeAlgObj level_zero(GSet const &over);

/// g.(op; a) = (g.op; g a_1, ..., g a_n)
FreeAlgObj act(Elem g, FreeAlgObj const &x);
bool is_fixed(FreeAlgObj const &x);

FreeAlgObj f_lower(BasedMap const &f, FreeAlgObj const &x, AlgConfig const &cfg = {});
FreeAlgObj i_upper(GMap const &inclusion, FreeAlgObj const &y, AlgConfig const &cfg = {});

/// omega on objects: E_G(X) ^ E_G(Y) -> E_G(X x Y).
FreeAlgObj omega_obj(FreeAlgObj const &x, FreeAlgObj const &y, AlgConfig const &cfg = {});

/// id_A = (alpha; (1,1), ..., (n,n)) over A x A.
FreeAlgObj unit_object(GSet const &a);

/// x over C x B, y over B x A; result over C x A.
FreeAlgObj ealg_compose(GSet const &c, GSet const &b, GSet const &a,
                        FreeAlgObj const &x, FreeAlgObj const &y,
                        AlgConfig const &cfg = {});

/// f_! along the Kronecker delta (A x A)_+ -> S^0.
FreeAlgObj eps_alg(GSet const &a, FreeAlgObj const &x, AlgConfig const &cfg = {});

/// The free extension of 1 |-> id_A: E_G(1) -> E_G(A x A).
FreeAlgObj eta_alg(GSet const &a, FreeAlgObj const &x, AlgConfig const &cfg = {});

/// Free extension of a |-> (alpha; (1,1,a), ..., (n,n,a)) into E_G(A x A x A).
FreeAlgObj zeta_left(GSet const &a, FreeAlgObj const &x, AlgConfig const &cfg = {});
/// Free extension of a |-> (alpha; (a,1,1), ..., (a,n,n)).
FreeAlgObj zeta_right(GSet const &a, FreeAlgObj const &x, AlgConfig const &cfg = {});

/// id ^ eps and eps ^ id on (A x A x A)_+ -> A_+.
BasedMap id_smash_eps(GSet const &a);
BasedMap eps_smash_id(GSet const &a);

/// The G-map (n, beta) -> A carried by a G-fixed object; throws NotFixed.
GMap fixed_to_gmap(FreeAlgObj const &x);
FreeAlgObj gmap_to_fixed(GMap const &p);

/// The coordinate-matching shuffle of Sigma_{mnq}: slot (i, j, k) of
/// omega(gamma(mu; alpha^m), nu) goes to slot (i, k, j) of
/// gamma(omega(mu, nu); alpha^{mq}).
Perm block_shuffle(std::uint32_t m, std::uint32_t n, std::uint32_t q);

} // namespace gspan

#endif // GSPAN_OPERAD_HPP
