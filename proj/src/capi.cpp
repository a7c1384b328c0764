#include "gspan/gspan.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "gspan/atiyah.hpp"
#include "gspan/document.hpp"
#include "gspan/error.hpp"
#include "gspan/verify.hpp"

using namespace gspan;

struct gspan_group
{
  GroupPtr group;
};

namespace
{

thread_local std::string last_error;

gspan_status status_of(ErrorKind k)
{
  switch (k) {
  case ErrorKind::MalformedInput: return GSPAN_ERR_MALFORMED;
  case ErrorKind::SizeLimit: return GSPAN_ERR_SIZE_LIMIT;
  case ErrorKind::Shape: return GSPAN_ERR_SHAPE;
  case ErrorKind::Domain: return GSPAN_ERR_DOMAIN;
  case ErrorKind::NotFixed: return GSPAN_ERR_NOT_FIXED;
  case ErrorKind::Usage: return GSPAN_ERR_USAGE;
  }
  return GSPAN_ERR_INTERNAL;
}

/// Runs `f`, translating exceptions into status codes and the thread's last error.
template <typename F>
gspan_status guard(F &&f) noexcept
{
  try {
    last_error.clear();
    return f();
  } catch (Error const &e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (std::bad_alloc const &) {
    last_error = "out of memory";
    return GSPAN_ERR_SIZE_LIMIT;
  } catch (std::exception const &e) {
    last_error = e.what();
    return GSPAN_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return GSPAN_ERR_INTERNAL;
  }
}

char *dup(std::string const &s)
{
  auto *p = static_cast<char *>(std::malloc(s.size() + 1));
  if (!p)
    throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(void const *p, char const *what)
{
  if (!p)
    fail(ErrorKind::Usage, std::string(what) + " must not be null");
}

GroupPtr group_of(gspan_group const *g)
{
  need(g, "group");
  return g->group;
}

/// Documents carry their own group, so commands that only read documents
/// accept a null handle.
DocReader reader_for(gspan_group const *g)
{
  if (g)
    return DocReader(g->group, gspan_max_group_order());
  return DocReader(gspan_max_group_order());
}

Json parse(char const *text, char const *what)
{
  need(text, what);
  return load_json(text);
}

VerifyOptions convert(gspan_verify_options const *o)
{
  VerifyOptions v;
  if (o) {
    v.seed = o->seed;
    v.size_bound = o->size_bound;
    v.trials = o->trials;
    v.samples = o->samples;
    v.tolerance = o->tolerance;
  }
  return v;
}

Json report_json(NumericReport const &r)
{
  return Json{{"name", r.name}, {"samples", r.samples}, {"max_discrepancy", r.max_discrepancy},
              {"argmax", r.argmax}, {"seed", r.seed}, {"tolerance", r.tolerance},
              {"failures", r.failures}, {"passed", r.passed()}};
}

Json class_labels(FiniteGroup const &g)
{
  Json labels = Json::array();
  for (auto const &c : g.subgroup_classes())
    labels.push_back("H" + std::to_string(c.index + 1) + " (order " + std::to_string(c.order()) + ")");
  return labels;
}

} // namespace

extern "C" {

const char *gspan_last_error(void)
{ return last_error.c_str(); }

const char *gspan_status_name(gspan_status status)
{
  switch (status) {
  case GSPAN_OK: return "ok";
  case GSPAN_ERR_MALFORMED: return "malformed input";
  case GSPAN_ERR_SIZE_LIMIT: return "size limit";
  case GSPAN_ERR_SHAPE: return "shape mismatch";
  case GSPAN_ERR_DOMAIN: return "domain error";
  case GSPAN_ERR_NOT_FIXED: return "not fixed";
  case GSPAN_ERR_USAGE: return "usage error";
  case GSPAN_ERR_INTERNAL: return "internal error";
  case GSPAN_VERIFY_FAILED: return "verification failed";
  }
  return "unknown status";
}

void gspan_string_free(char *s)
{ std::free(s); }

size_t gspan_max_group_order(void)
{
  if (char const *env = std::getenv("GSPAN_MAX_GROUP_ORDER")) {
    char *end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<size_t>(v);
  }
  return kDefaultMaxOrder;
}

gspan_status gspan_group_create(const char *spec, gspan_group **out)
{
  return guard([&] {
    need(spec, "spec");
    need(out, "out");
    auto group = parse_group_spec(spec, gspan_max_group_order());
    *out = new gspan_group{std::move(group)};
    return GSPAN_OK;
  });
}

void gspan_group_free(gspan_group *group)
{ delete group; }

gspan_status gspan_group_order(const gspan_group *group, size_t *out)
{
  return guard([&] {
    auto g = group_of(group);
    need(out, "out");
    *out = g->order();
    return GSPAN_OK;
  });
}

gspan_status gspan_group_class_count(const gspan_group *group, size_t *out)
{
  return guard([&] {
    auto g = group_of(group);
    need(out, "out");
    *out = g->subgroup_classes().size();
    return GSPAN_OK;
  });
}

gspan_status gspan_group_summary(const gspan_group *group, char **out)
{
  return guard([&] {
    auto g = group_of(group);
    need(out, "out");
    Json classes = Json::array();
    for (auto const &c : g->subgroup_classes()) {
      classes.push_back(Json{{"index", c.index + 1}, {"order", c.order()},
                             {"conjugates", c.class_size}, {"normalizer_order", c.normalizer.size()}});
    }
    Json j{{"order", g->order()}, {"class_count", classes.size()}, {"classes", classes},
           {"document", to_json(*g)}};
    *out = dup(j.dump(2));
    return GSPAN_OK;
  });
}

gspan_status gspan_gset_describe(const gspan_group *group, const char *doc, char **out)
{
  return guard([&] {
    auto reader = reader_for(group);
    need(out, "out");
    auto a = reader.gset(parse(doc, "gset document"));
    Json orbits = Json::array();
    for (auto const &orb : orbit_decomposition(a).orbits) {
      Json points = Json::array();
      for (auto x : orb.points)
        points.push_back(x + 1);
      orbits.push_back(Json{{"points", points}, {"stabilizer_class", orb.stabilizer_class + 1}});
    }
    Json j{{"size", a.size()}, {"orbits", orbits}, {"document", to_json(a)}};
    *out = dup(j.dump(2));
    return GSPAN_OK;
  });
}

gspan_status gspan_marks(const gspan_group *group, char **out)
{
  return guard([&] {
    auto g = group_of(group);
    need(out, "out");
    Json j{{"labels", class_labels(*g)}, {"marks", table_of_marks(g)}};
    *out = dup(j.dump());
    return GSPAN_OK;
  });
}

gspan_status gspan_ring(const gspan_group *group, char **out)
{
  return guard([&] {
    auto g = group_of(group);
    need(out, "out");
    auto const ring = burnside_ring(g);
    auto const marks = table_of_marks(g);
    auto const n = marks.size();
    bool consistent = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t col = 0; col < n; ++col) {
          std::int64_t lhs = 0;
          for (std::size_t c = 0; c < n; ++c)
            lhs += ring[i][k][c] * marks[c][col];
          consistent = consistent && lhs == marks[i][col] * marks[k][col];
        }
      }
    }
    Json j{{"labels", class_labels(*g)}, {"products", ring}, {"marks_consistent", consistent}};
    *out = dup(j.dump());
    return consistent ? GSPAN_OK : GSPAN_VERIFY_FAILED;
  });
}

gspan_status gspan_compose(const gspan_group *group, const char *outer, const char *inner,
                           char **out)
{
  return guard([&] {
    auto reader = reader_for(group);
    need(out, "out");
    auto s2 = reader.span(parse(outer, "outer span"));
    auto s1 = reader.span(parse(inner, "inner span"));
    if (!(s2.src() == s1.tgt())) {
      fail(ErrorKind::Shape, "spans do not compose: inner target has " +
                               std::to_string(s1.tgt().size()) + " points, outer source has " +
                               std::to_string(s2.src().size()));
    }
    auto s = compose_spans(s2, s1);
    auto cls = class_elt(s);
    Json j{{"span", to_json(s)}, {"class", to_json(cls)}, {"description", describe(cls)}};
    *out = dup(j.dump());
    return GSPAN_OK;
  });
}

gspan_status gspan_dual(const gspan_group *group, const char *gmap, char **out)
{
  return guard([&] {
    auto reader = reader_for(group);
    need(out, "out");
    auto f = reader.gmap(parse(gmap, "gmap document"));
    auto d = dual_of_gmap(f);
    Json j{{"class", to_json(d)}, {"description", describe(d)}};
    *out = dup(j.dump());
    return GSPAN_OK;
  });
}

gspan_status gspan_transfer(const gspan_group *group, size_t sub_class, size_t super_class,
                            char **out)
{
  return guard([&] {
    auto g = group_of(group);
    need(out, "out");
    auto const n = g->subgroup_classes().size();
    if (sub_class < 1 || sub_class > n || super_class < 1 || super_class > n)
      fail(ErrorKind::Usage, "subgroup class indices run from 1 to " + std::to_string(n));
    auto t = transfer(g, sub_class - 1, super_class - 1);
    Json j{{"class", to_json(t)}, {"description", describe(t)}};
    *out = dup(j.dump());
    return GSPAN_OK;
  });
}

gspan_status gspan_presheaf(const gspan_group *group, const char *gset, char **out)
{
  return guard([&] {
    auto g = group_of(group);
    DocReader reader(g, gspan_max_group_order());
    need(out, "out");
    auto b = gset ? reader.gset(parse(gset, "gset document")) : GSet::point(g);
    Json j{{"labels", class_labels(*g)}, {"ranks", presheaf_at_orbits(b)}};
    *out = dup(j.dump());
    return GSPAN_OK;
  });
}

gspan_verify_options gspan_verify_defaults(void)
{
  VerifyOptions v;
  return gspan_verify_options{v.seed, v.size_bound, v.trials, v.samples, v.tolerance};
}

gspan_status gspan_verify(const gspan_group *group, const char *suite,
                          const gspan_verify_options *options, char **out_text, char **out_json)
{
  return guard([&] {
    auto g = group_of(group);
    need(suite, "suite");
    auto res = run_suite(suite, g, convert(options));
    if (out_text)
      *out_text = dup(format_suite(res));
    if (out_json)
      *out_json = dup(to_json(res).dump());
    return res.passed() ? GSPAN_OK : GSPAN_VERIFY_FAILED;
  });
}

gspan_status gspan_atiyah_sample(const gspan_group *group, const char *gset_a, const char *gset_b,
                                 const gspan_verify_options *options, char **out_text,
                                 char **out_json)
{
  return guard([&] {
    auto reader = reader_for(group);
    auto a = reader.gset(parse(gset_a, "gset A"));
    auto b = gset_b ? reader.gset(parse(gset_b, "gset B")) : a;
    auto o = convert(options);
    if (o.samples == 0)
      fail(ErrorKind::Usage, "samples must be positive");
    std::vector<NumericReport> reports{
      check_unit_diagram_left(b, a, o.samples, o.seed, o.tolerance),
      check_unit_diagram_right(b, a, o.samples, o.seed + 1, o.tolerance),
      check_equivariance("eta", a, o.samples, o.seed + 2),
      check_equivariance("xi", a, o.samples, o.seed + 3),
      check_equivariance("h", a, o.samples, o.seed + 4),
      check_homotopy_start(a, o.samples, o.seed + 5),
      check_homotopy_end(a, o.samples, o.seed + 6, o.tolerance),
    };
    bool ok = true;
    std::string text;
    Json arr = Json::array();
    for (auto const &r : reports) {
      ok = ok && r.passed();
      text += format_report(r) + "\n";
      arr.push_back(report_json(r));
    }
    text += ok ? "result: pass\n" : "result: FAIL\n";
    if (out_text)
      *out_text = dup(text);
    if (out_json)
      *out_json = dup(Json{{"passed", ok}, {"reports", arr}}.dump());
    return ok ? GSPAN_OK : GSPAN_VERIFY_FAILED;
  });
}

} // extern "C"
