#include "gspan/atiyah.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "gspan/error.hpp"

namespace gspan
{

namespace
{

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Norm computed from the sorted squares, so it is bitwise invariant under
/// coordinate permutations; equivariance checks then compare exact values.
double perm_invariant_norm(std::vector<double> const &w)
{
  std::vector<double> sq(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    sq[i] = w[i] * w[i];
  std::sort(sq.begin(), sq.end());
  double s = 0.0;
  for (auto x : sq)
    s += x;
  return std::sqrt(s);
}

std::vector<double> offset_from_basis(std::vector<double> const &v, std::size_t k)
{
  auto w = v;
  w[k] -= 1.0;
  return w;
}

/// (rho^-1(|w|)/|w|) w, which for our rho is w / (d - |w|); the w = 0 value is 0.
std::vector<double> expand(std::vector<double> w, double norm, double d)
{
  if (norm == 0.0)
    return std::vector<double>(w.size(), 0.0);
  double const scale = 1.0 / (d - norm);
  for (auto &x : w)
    x *= scale;
  return w;
}

void require_dim(GSet const &a, std::vector<double> const &coords)
{
  if (coords.size() != a.size())
    fail(ErrorKind::Shape, "sphere coordinate has " + std::to_string(coords.size()) +
                             " entries, expected " + std::to_string(a.size()));
}

void require_label(SmashPoint const &p, std::size_t label, GSet const &a)
{
  if (label >= p.labels.size())
    fail(ErrorKind::Shape, "label index out of range");
  if (p.labels[label] >= a.size())
    fail(ErrorKind::Shape, "label is not a point of the G-set");
}

struct Tracker
{
  NumericReport report;

  void record(double disc, std::string const &where)
  {
    ++report.samples;
    if (!(disc <= report.tolerance))
      ++report.failures;
    if (std::isnan(disc))
      disc = kInf;
    if (disc > report.max_discrepancy || report.argmax.empty()) {
      report.max_discrepancy = disc;
      report.argmax = where;
    }
  }
};

} // namespace

void TubularParams::validate() const
{
  if (!(d > 0.0 && d < 0.5))
    fail(ErrorKind::Domain, "tubular radius must lie in (0, 1/2), got " + fmt(d));
}

double TubularParams::rho(double t) const
{
  if (!(t >= 0.0))
    fail(ErrorKind::Domain, "rho is defined on [0, inf), got " + fmt(t));
  if (std::isinf(t))
    return d;
  return d * t / (1.0 + t);
}

double TubularParams::rho_inv(double s) const
{
  if (!(s >= 0.0 && s < d))
    fail(ErrorKind::Domain, "rho_inv is defined on [0, " + fmt(d) + "), got " + fmt(s));
  return s / (d - s);
}

SmashPoint SmashPoint::make(std::vector<Point> labels, SpherePoint const &v)
{
  if (v.at_infinity)
    return base();
  return make(std::move(labels), v.coords);
}

std::string to_string(SpherePoint const &v)
{
  if (v.at_infinity)
    return "inf";
  std::string s = "(";
  for (std::size_t i = 0; i < v.coords.size(); ++i)
    s += (i ? ", " : "") + fmt(v.coords[i]);
  return s + ")";
}

std::string to_string(SmashPoint const &p)
{
  if (p.basepoint)
    return "*";
  std::string s = "[";
  for (std::size_t i = 0; i < p.labels.size(); ++i)
    s += (i ? " " : "") + std::to_string(p.labels[i] + 1);
  return s + "; " + to_string(SpherePoint{false, p.coords}) + "]";
}

double distance(SmashPoint const &p, SmashPoint const &q)
{
  if (p.basepoint || q.basepoint)
    return p.basepoint == q.basepoint ? 0.0 : kInf;
  if (p.labels != q.labels || p.coords.size() != q.coords.size())
    return kInf;
  double s = 0.0;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    double diff = p.coords[i] - q.coords[i];
    s += diff * diff;
  }
  return std::sqrt(s);
}

SpherePoint act_sphere(GSet const &a, Elem g, SpherePoint const &v)
{
  if (v.at_infinity)
    return v;
  require_dim(a, v.coords);
  SpherePoint res{false, std::vector<double>(v.coords.size())};
  for (Point k = 0; k < a.size(); ++k)
    res.coords[a.act(g, k)] = v.coords[k];
  return res;
}

SmashPoint act_smash(std::vector<GSet const *> const &labels, GSet const &sphere, Elem g,
                     SmashPoint const &p)
{
  if (p.basepoint)
    return p;
  if (labels.size() != p.labels.size())
    fail(ErrorKind::Shape, "smash point has the wrong number of labels");
  SmashPoint res = p;
  for (std::size_t i = 0; i < labels.size(); ++i)
    res.labels[i] = labels[i]->act(g, p.labels[i]);
  res.coords = act_sphere(sphere, g, SpherePoint{false, p.coords}).coords;
  return res;
}

SmashPoint eta_space(GSet const &a, SpherePoint const &v, TubularParams const &params)
{
  params.validate();
  if (v.at_infinity)
    return SmashPoint::base();
  require_dim(a, v.coords);
  for (Point k = 0; k < a.size(); ++k) {
    auto w = offset_from_basis(v.coords, k);
    auto const norm = perm_invariant_norm(w);
    // d < 1/2 makes the balls disjoint, so the first hit is the only one.
    if (norm < params.d)
      return SmashPoint::make({k, k}, expand(std::move(w), norm, params.d));
  }
  return SmashPoint::base();
}

SmashPoint eps_labels(SmashPoint const &p, std::size_t i)
{
  if (p.basepoint)
    return p;
  if (i + 1 >= p.labels.size())
    fail(ErrorKind::Shape, "eps needs two adjacent labels");
  if (p.labels[i] != p.labels[i + 1])
    return SmashPoint::base();
  SmashPoint res = p;
  res.labels.erase(res.labels.begin() + static_cast<std::ptrdiff_t>(i),
                   res.labels.begin() + static_cast<std::ptrdiff_t>(i + 2));
  return res;
}

SmashPoint xi_space(GSet const &a, SmashPoint const &p, std::size_t label,
                    TubularParams const &params)
{
  params.validate();
  if (p.basepoint)
    return p;
  require_label(p, label, a);
  require_dim(a, p.coords);
  auto w = offset_from_basis(p.coords, p.labels[label]);
  auto const norm = perm_invariant_norm(w);
  if (!(norm < params.d))
    return SmashPoint::base();
  return SmashPoint::make(p.labels, expand(std::move(w), norm, params.d));
}

SmashPoint homotopy_h(GSet const &a, SmashPoint const &p, double t, std::size_t label,
                      TubularParams const &params)
{
  params.validate();
  if (!(t >= 0.0 && t <= 1.0))
    fail(ErrorKind::Domain, "homotopy parameter must lie in [0, 1], got " + fmt(t));
  if (p.basepoint || t == 0.0)
    return p;
  require_label(p, label, a);
  require_dim(a, p.coords);
  auto w = offset_from_basis(p.coords, p.labels[label]);
  auto const norm = perm_invariant_norm(w);
  if (!(t * norm < params.d))
    return SmashPoint::base();
  // t rho^-1(t|w|)/|w| = t^2 / (d - t|w|), finite at w = 0.
  double const scale = t * t / (params.d - t * norm);
  SmashPoint res = p;
  for (std::size_t i = 0; i < w.size(); ++i)
    res.coords[i] = (1.0 - t) * p.coords[i] + scale * w[i];
  return res;
}

double Sampler::uniform()
{ return static_cast<double>(_engine() >> 11) * 0x1.0p-53; }

double Sampler::gaussian()
{
  if (_has_spare) {
    _has_spare = false;
    return _spare;
  }
  double u1 = uniform();
  while (u1 == 0.0)
    u1 = uniform();
  double const u2 = uniform();
  double const r = std::sqrt(-2.0 * std::log(u1));
  double const theta = 2.0 * M_PI * u2;
  _spare = r * std::sin(theta);
  _has_spare = true;
  return r * std::cos(theta);
}

std::size_t Sampler::below(std::size_t n)
{ return n == 0 ? 0 : static_cast<std::size_t>(_engine() % n); }

SpherePoint Sampler::sphere_point(std::size_t dim, double d, long preferred)
{
  if (dim == 0)
    return uniform() < 0.1 ? SpherePoint::infinity() : SpherePoint{false, {}};

  auto direction = [&] {
    std::vector<double> u(dim);
    double n = 0.0;
    do {
      n = 0.0;
      for (auto &x : u) {
        x = gaussian();
        n += x * x;
      }
    } while (n == 0.0);
    n = std::sqrt(n);
    for (auto &x : u)
      x /= n;
    return u;
  };
  auto centre = [&] {
    if (preferred >= 0 && uniform() < 0.7)
      return static_cast<std::size_t>(preferred);
    return below(dim);
  };

  double const kind = uniform();
  SpherePoint v{false, std::vector<double>(dim, 0.0)};
  if (kind < 0.45) {
    auto u = direction();
    double const r = 1.5 * d * std::pow(uniform(), 1.0 / static_cast<double>(dim));
    auto k = centre();
    for (std::size_t i = 0; i < dim; ++i)
      v.coords[i] = r * u[i];
    v.coords[k] += 1.0;
  } else if (kind < 0.70) {
    auto u = direction();
    double const r = 2.5 * std::pow(uniform(), 1.0 / static_cast<double>(dim));
    for (std::size_t i = 0; i < dim; ++i)
      v.coords[i] = r * u[i];
  } else if (kind < 0.80) {
    v.coords[centre()] = 1.0;
  } else if (kind < 0.95) {
    static constexpr double shells[] = {0.5, 0.9, 0.999, 1.0, 1.001};
    auto u = direction();
    double const r = d * shells[below(std::size(shells))];
    auto k = centre();
    for (std::size_t i = 0; i < dim; ++i)
      v.coords[i] = r * u[i];
    v.coords[k] += 1.0;
  } else {
    return SpherePoint::infinity();
  }
  return v;
}

std::string format_report(NumericReport const &r)
{
  return r.name + ": samples=" + std::to_string(r.samples) +
         " failures=" + std::to_string(r.failures) +
         " max_discrepancy=" + fmt(r.max_discrepancy) + " tolerance=" + fmt(r.tolerance) +
         " argmax=" + (r.argmax.empty() ? "-" : r.argmax) + " seed=" + std::to_string(r.seed);
}

NumericReport check_unit_diagram_left(GSet const &b, GSet const &a, std::size_t samples,
                                      std::uint64_t seed, double tolerance,
                                      TubularParams const &params)
{
  Tracker tr{{"unit-diagram-left", 0, 0.0, "", seed, tolerance}};
  if (a.size() == 0 || b.size() == 0)
    return tr.report;
  Sampler rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    auto const bl = static_cast<Point>(rng.below(b.size()));
    auto const al = static_cast<Point>(rng.below(a.size()));
    auto v = rng.sphere_point(a.size(), params.d, al);
    auto p = SmashPoint::make({bl, al}, v);

    auto e = eta_space(a, v, params);
    SmashPoint via_eta = SmashPoint::base();
    if (!e.basepoint)
      via_eta = eps_labels(SmashPoint::make({bl, al, e.labels[0], e.labels[1]}, e.coords), 1);
    auto via_xi = xi_space(a, p, 1, params);
    tr.record(distance(via_eta, via_xi), to_string(p));
  }
  return tr.report;
}

NumericReport check_unit_diagram_right(GSet const &b, GSet const &a, std::size_t samples,
                                       std::uint64_t seed, double tolerance,
                                       TubularParams const &params)
{
  Tracker tr{{"unit-diagram-right", 0, 0.0, "", seed, tolerance}};
  if (a.size() == 0 || b.size() == 0)
    return tr.report;
  Sampler rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    auto const bl = static_cast<Point>(rng.below(b.size()));
    auto const al = static_cast<Point>(rng.below(a.size()));
    auto v = rng.sphere_point(b.size(), params.d, bl);
    auto p = SmashPoint::make({bl, al}, v);

    auto e = eta_space(b, v, params);
    SmashPoint via_eta = SmashPoint::base();
    if (!e.basepoint)
      via_eta = eps_labels(SmashPoint::make({e.labels[0], e.labels[1], bl, al}, e.coords), 1);
    auto via_xi = xi_space(b, p, 0, params);
    tr.record(distance(via_eta, via_xi), to_string(p));
  }
  return tr.report;
}

NumericReport check_equivariance(std::string const &map, GSet const &a, std::size_t samples,
                                 std::uint64_t seed, double tolerance, double t,
                                 TubularParams const &params)
{
  if (map != "eta" && map != "xi" && map != "eps" && map != "h")
    fail(ErrorKind::Usage, "unknown map '" + map + "' (expected eta, xi, eps or h)");
  Tracker tr{{"equivariance-" + map, 0, 0.0, "", seed, tolerance}};
  if (map == "h")
    tr.report.name += "(t=" + fmt(t) + ")";
  if (a.size() == 0)
    return tr.report;

  auto const &grp = *a.group();
  std::vector<GSet const *> one{&a}, two{&a, &a};
  Sampler rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    auto const al = static_cast<Point>(rng.below(a.size()));
    auto v = rng.sphere_point(a.size(), params.d, al);
    for (Elem g = 0; g < grp.order(); ++g) {
      double disc = 0.0;
      std::string where;
      if (map == "eta") {
        auto lhs = eta_space(a, act_sphere(a, g, v), params);
        auto rhs = act_smash(two, a, g, eta_space(a, v, params));
        disc = distance(lhs, rhs);
        where = to_string(v);
      } else if (map == "eps") {
        auto bl = rng.uniform() < 0.5 ? al : static_cast<Point>(rng.below(a.size()));
        auto p = SmashPoint::make({al, bl}, v);
        auto lhs = eps_smash_id(act_smash(two, a, g, p));
        auto rhs = act_smash({}, a, g, eps_smash_id(p));
        disc = distance(lhs, rhs);
        where = to_string(p);
      } else {
        auto p = SmashPoint::make({al}, v);
        auto f = [&](SmashPoint const &q) {
          return map == "xi" ? xi_space(a, q, 0, params) : homotopy_h(a, q, t, 0, params);
        };
        disc = distance(f(act_smash(one, a, g, p)), act_smash(one, a, g, f(p)));
        where = to_string(p);
      }
      tr.record(disc, where + " g=" + grp.element(g).str());
    }
  }
  return tr.report;
}

NumericReport check_homotopy_start(GSet const &a, std::size_t samples, std::uint64_t seed,
                                   double tolerance, TubularParams const &params)
{
  Tracker tr{{"homotopy-start", 0, 0.0, "", seed, tolerance}};
  if (a.size() == 0)
    return tr.report;
  Sampler rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    auto const al = static_cast<Point>(rng.below(a.size()));
    auto p = SmashPoint::make({al}, rng.sphere_point(a.size(), params.d, al));
    tr.record(distance(homotopy_h(a, p, 0.0, 0, params), p), to_string(p));
  }
  return tr.report;
}

NumericReport check_homotopy_end(GSet const &a, std::size_t samples, std::uint64_t seed,
                                 double tolerance, TubularParams const &params)
{
  Tracker tr{{"homotopy-end", 0, 0.0, "", seed, tolerance}};
  if (a.size() == 0)
    return tr.report;
  Sampler rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    auto const al = static_cast<Point>(rng.below(a.size()));
    auto p = SmashPoint::make({al}, rng.sphere_point(a.size(), params.d, al));
    tr.record(distance(homotopy_h(a, p, 1.0, 0, params), xi_space(a, p, 0, params)),
              to_string(p));
  }
  return tr.report;
}

} // namespace gspan
