#ifndef GSPAN_ATIYAH_HPP
#define GSPAN_ATIYAH_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gspan/gset.hpp"

namespace gspan
{

/// Tubular radius d and the homeomorphism rho(t) = d t / (1 + t) onto [0, d).
struct TubularParams
{
  double d = 0.25;

  /// Throws Domain unless 0 < d < 1/2, which keeps the d-balls around the
  /// basis vectors (pairwise sqrt 2 apart) disjoint.
  void validate() const;

  double rho(double t) const;
  /// s / (d - s); throws Domain for s outside [0, d).
  double rho_inv(double s) const;
};

/// A point of S^V for V = R[A]: coordinates indexed by the points of A, or
/// the point at infinity (the basepoint).
struct SpherePoint
{
  bool at_infinity = false;
  std::vector<double> coords;

  static SpherePoint infinity()
  { return SpherePoint{true, {}}; }
};

/// A point of X_1+ ^ ... ^ X_k+ ^ S^V: the basepoint, or labels and a
/// finite sphere coordinate.
struct SmashPoint
{
  bool basepoint = true;
  std::vector<Point> labels;
  std::vector<double> coords;

  static SmashPoint base()
  { return SmashPoint{}; }
  static SmashPoint make(std::vector<Point> labels, std::vector<double> coords)
  { return SmashPoint{false, std::move(labels), std::move(coords)}; }
  static SmashPoint make(std::vector<Point> labels, SpherePoint const &v);
};

std::string to_string(SpherePoint const &v);
std::string to_string(SmashPoint const &p);

/// 0 for equal basepoints, infinity when exactly one side is the basepoint or
/// the labels differ, else the Euclidean distance of the coordinates.
double distance(SmashPoint const &p, SmashPoint const &q);

/// (g v)_{g a} = v_a
SpherePoint act_sphere(GSet const &a, Elem g, SpherePoint const &v);

/// g acting on every label through its own G-set and on the sphere through `sphere`.
SmashPoint act_smash(std::vector<GSet const *> const &labels, GSet const &sphere, Elem g,
                     SmashPoint const &p);

/// The Thom diagonal of the Pontryagin-Thom collapse: S^V -> A+ ^ A+ ^ S^V.
SmashPoint eta_space(GSet const &a, SpherePoint const &v, TubularParams const &params = {});

/// Kronecker delta on labels i and i + 1; both labels are consumed.
SmashPoint eps_labels(SmashPoint const &p, std::size_t i);

/// eps ^ id on A+ ^ A+ ^ S^W.
inline SmashPoint eps_smash_id(SmashPoint const &p)
{ return eps_labels(p, 0); }

/// The wedge of the xi_a, acting on the summand named by label `label`.
SmashPoint xi_space(GSet const &a, SmashPoint const &p, std::size_t label = 0,
                    TubularParams const &params = {});

/// The explicit homotopy from the identity (t = 0) to xi (t = 1).
SmashPoint homotopy_h(GSet const &a, SmashPoint const &p, double t, std::size_t label = 0,
                      TubularParams const &params = {});

/// Deterministic sampler: mt19937_64 with hand-rolled uniform and Box-Muller
/// so the stream does not depend on the standard library's distributions.
class Sampler
{
public:
  explicit Sampler(std::uint64_t seed)
  : _engine(seed)
  {}

  double uniform();
  double gaussian();
  std::size_t below(std::size_t n);

  /// Mixture of balls around basis vectors (biased towards `preferred` when
  /// given), a large ball, exact centres, boundary shells and infinity.
  SpherePoint sphere_point(std::size_t dim, double d, long preferred = -1);

private:
  std::mt19937_64 _engine;
  bool _has_spare = false;
  double _spare = 0.0;
};

struct NumericReport
{
  std::string name;
  std::size_t samples = 0;
  double max_discrepancy = 0.0;
  std::string argmax;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  /// Samples whose discrepancy exceeded the tolerance.
  std::size_t failures = 0;

  bool passed() const
  { return failures == 0; }
};

std::string format_report(NumericReport const &r);

/// id ^ xi_A against (id ^ eps ^ id) o (id ^ eta_A) on B+ ^ A+ ^ S^R[A].
NumericReport check_unit_diagram_left(GSet const &b, GSet const &a, std::size_t samples,
                                      std::uint64_t seed, double tolerance = 1e-9,
                                      TubularParams const &params = {});

/// xi_B ^ id against (eps on the middle labels) o (eta_B ^ id) on
/// S^R[B] ^ B+ ^ A+.
NumericReport check_unit_diagram_right(GSet const &b, GSet const &a, std::size_t samples,
                                       std::uint64_t seed, double tolerance = 1e-9,
                                       TubularParams const &params = {});

/// f(g p) against g f(p) for every g; `map` is eta, xi, eps or h (at time t).
NumericReport check_equivariance(std::string const &map, GSet const &a, std::size_t samples,
                                 std::uint64_t seed, double tolerance = 1e-12, double t = 0.5,
                                 TubularParams const &params = {});

/// h(., 0) against the identity and h(., 1) against xi.
NumericReport check_homotopy_start(GSet const &a, std::size_t samples, std::uint64_t seed,
                                   double tolerance = 0.0, TubularParams const &params = {});
NumericReport check_homotopy_end(GSet const &a, std::size_t samples, std::uint64_t seed,
                                 double tolerance = 1e-9, TubularParams const &params = {});

} // namespace gspan

#endif // GSPAN_ATIYAH_HPP
