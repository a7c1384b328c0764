#include "gspan/document.hpp"

#include <fstream>
#include <sstream>

#include "gspan/error.hpp"

namespace gspan
{

namespace
{

constexpr char const *kGroupHint =
  "expected a preset (trivial, klein, cyclic N, dihedral N, symmetric N) or "
  "{\"type\":\"group\",\"degree\":N,\"generators\":[[images]]}";

[[noreturn]] void malformed(std::string const &what)
{ fail(ErrorKind::MalformedInput, what); }

Json const &field(Json const &j, char const *name)
{
  if (!j.is_object() || !j.contains(name))
    malformed(std::string("document is missing field '") + name + "'");
  return j.at(name);
}

void expect_type(Json const &j, char const *type)
{
  if (!j.is_object())
    malformed(std::string("expected a ") + type + " object");
  if (j.contains("type") && j.at("type") != type)
    malformed(std::string("expected a document of type '") + type + "', got " +
              j.at("type").dump());
}

std::int64_t integer(Json const &j, char const *what)
{
  if (!j.is_number_integer())
    malformed(std::string(what) + " must be an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> integers(Json const &j, char const *what)
{
  if (!j.is_array())
    malformed(std::string(what) + " must be an array, got " + j.dump());
  std::vector<std::int64_t> res;
  res.reserve(j.size());
  for (auto const &x : j)
    res.push_back(integer(x, what));
  return res;
}

std::vector<Point> points(Json const &j, std::uint32_t bound, char const *what)
{
  std::vector<Point> res;
  for (auto x : integers(j, what)) {
    if (x < 1 || x > static_cast<std::int64_t>(bound))
      malformed(std::string(what) + " entry " + std::to_string(x) + " outside 1.." +
                std::to_string(bound));
    res.push_back(static_cast<Point>(x - 1));
  }
  return res;
}

Json one_based(std::vector<Point> const &v)
{
  Json arr = Json::array();
  for (auto x : v)
    arr.push_back(static_cast<std::int64_t>(x) + 1);
  return arr;
}

template<typename F>
auto guarded(F &&f) -> decltype(f())
{
  try {
    return f();
  } catch (Json::exception const &e) {
    malformed(std::string("bad document: ") + e.what());
  }
}

bool is_file(std::string const &path)
{
  std::ifstream in(path);
  return in.good();
}

} // namespace

Json load_json(std::string const &text)
{
  std::string body = text;
  auto first = text.find_first_not_of(" \t\r\n");
  bool looks_inline = first != std::string::npos &&
                      (text[first] == '{' || text[first] == '[' || text[first] == '"');
  if (!looks_inline) {
    std::ifstream in(text);
    if (!in)
      fail(ErrorKind::Usage, "cannot read '" + text + "': not JSON and not a readable file");
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (Json::parse_error const &e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

GroupPtr parse_group_spec(std::string const &spec, std::size_t max_order)
{
  std::istringstream in(spec);
  std::string name;
  in >> name;
  if (name.empty())
    fail(ErrorKind::Usage, std::string("empty group spec; ") + kGroupHint);
  if (name.front() == '{' || is_file(spec)) {
    DocReader reader(max_order);
    return reader.group(load_json(spec));
  }

  long n = -1;
  if (in >> n) {
    std::string rest;
    if (in >> rest)
      fail(ErrorKind::Usage, "trailing text in group spec '" + spec + "'; " + kGroupHint);
  }
  auto need_param = [&] {
    if (n < 1 || n > 64)
      fail(ErrorKind::Usage, "group spec '" + spec + "' needs a size between 1 and 64; " +
                               kGroupHint);
    return static_cast<std::uint32_t>(n);
  };
  auto checked = [&](GroupPtr g) {
    if (g->order() > max_order)
      fail(ErrorKind::SizeLimit, "group order " + std::to_string(g->order()) +
                                   " exceeds the limit " + std::to_string(max_order));
    return g;
  };

  if (name == "trivial" && n < 0)
    return groups::trivial();
  if (name == "klein" && n < 0)
    return checked(groups::klein());
  if (name == "cyclic")
    return checked(groups::cyclic(need_param()));
  if (name == "dihedral")
    return checked(groups::dihedral(need_param()));
  if (name == "symmetric") {
    auto k = need_param();
    std::size_t order = 1;
    for (std::uint32_t i = 2; i <= k && order <= max_order; ++i)
      order *= i;
    if (order > max_order)
      fail(ErrorKind::SizeLimit, "symmetric " + std::to_string(k) + " exceeds the group order limit " +
                                   std::to_string(max_order));
    return groups::symmetric(k);
  }
  fail(ErrorKind::Usage, "unknown group spec '" + spec + "'; " + kGroupHint);
}

GroupPtr DocReader::group(Json const &j)
{
  if (j.is_string()) {
    auto g = parse_group_spec(j.get<std::string>(), _max_order);
    if (_group && same_group(*_group, *g))
      return _group;
    if (!_group)
      _group = g;
    return g;
  }
  return guarded([&] {
    expect_type(j, "group");
    auto degree = integer(field(j, "degree"), "degree");
    if (degree < 1 || degree > 4096)
      malformed("group degree must lie in 1..4096");
    std::vector<Perm> gens;
    for (auto const &g : field(j, "generators")) {
      auto images = integers(g, "generator");
      if (images.size() != static_cast<std::size_t>(degree))
        malformed("generator " + g.dump() + " does not have degree " + std::to_string(degree));
      gens.push_back(Perm::from_one_based(images));
    }
    if (_group && _group->degree() == degree && _group->generators() == gens)
      return _group;
    auto g = FiniteGroup::make(static_cast<std::uint32_t>(degree), gens, _max_order);
    if (!_group)
      _group = g;
    return g;
  });
}

GSet DocReader::gset(Json const &j)
{
  return guarded([&] {
    expect_type(j, "gset");
    GroupPtr grp;
    if (j.contains("group"))
      grp = group(j.at("group"));
    else if (_group)
      grp = _group;
    else
      malformed("gset document has no group and none is in context");

    auto n = integer(field(j, "n"), "n");
    if (n < 0 || n > 1000000)
      malformed("gset size out of range");
    auto const &action = field(j, "action");
    if (!action.is_array() || action.size() != grp->generators().size())
      malformed("gset action needs one image list per group generator (" +
                std::to_string(grp->generators().size()) + ")");
    std::vector<Perm> images;
    for (auto const &row : action) {
      auto r = integers(row, "action");
      if (r.size() != static_cast<std::size_t>(n))
        malformed("gset action row " + row.dump() + " does not have length " +
                  std::to_string(n));
      images.push_back(Perm::from_one_based(r));
    }
    return GSet::from_generator_images(grp, static_cast<std::uint32_t>(n), images);
  });
}

GMap DocReader::gmap(Json const &j)
{
  return guarded([&] {
    expect_type(j, "gmap");
    auto src = gset(field(j, "source"));
    auto tgt = gset(field(j, "target"));
    auto images = points(field(j, "images"), tgt.size(), "images");
    return GMap(std::move(src), std::move(tgt), std::move(images));
  });
}

Span DocReader::span(Json const &j)
{
  return guarded([&] {
    expect_type(j, "span");
    auto src = gset(field(j, "src"));
    auto tgt = gset(field(j, "tgt"));
    auto apex = gset(field(j, "apex"));
    auto leg = points(field(j, "leg"), src.size() * tgt.size(), "leg");
    return Span(std::move(src), std::move(tgt), std::move(apex), std::move(leg));
  });
}

BurnsideElt DocReader::burnside(Json const &j)
{
  return guarded([&] {
    expect_type(j, "burnside");
    auto src = gset(field(j, "src"));
    auto tgt = gset(field(j, "tgt"));
    BurnsideElt x(src, tgt);
    auto const nclasses = src.group()->subgroup_classes().size();
    for (auto const &term : field(j, "terms")) {
      auto const &cls = field(term, "class");
      auto sub = integer(field(cls, "subgroup"), "subgroup");
      auto pt = integer(field(cls, "point"), "point");
      if (sub < 1 || sub > static_cast<std::int64_t>(nclasses))
        malformed("subgroup class " + std::to_string(sub) + " outside 1.." +
                  std::to_string(nclasses));
      if (pt < 1 || pt > static_cast<std::int64_t>(src.size()) * tgt.size())
        malformed("class point " + std::to_string(pt) + " out of range");
      BasisKey key{static_cast<std::uint32_t>(sub - 1), static_cast<Point>(pt - 1)};
      auto s = basis_span(src, tgt, key);
      if (!(orbit_key(s, 0) == key))
        malformed("class point " + std::to_string(pt) +
                  " is not the least point of its normalizer orbit");
      x.add(key, integer(field(term, "coeff"), "coeff"));
    }
    return x;
  });
}

FreeAlgObj DocReader::freealg(Json const &j)
{
  return guarded([&] {
    expect_type(j, "freealg");
    auto over = gset(field(j, "over"));
    auto const &grp = over.group();
    auto tuple_raw = integers(field(j, "tuple"), "tuple");
    auto const level = static_cast<std::uint32_t>(tuple_raw.size());
    auto const &op = field(j, "op");
    if (!op.is_array() || op.size() != grp->order())
      malformed("freealg op needs one permutation per group element (" +
                std::to_string(grp->order()) + ")");
    std::vector<std::uint32_t> values;
    for (auto const &row : op) {
      auto r = integers(row, "op");
      if (r.size() != level)
        malformed("freealg op row does not match the tuple length");
      auto p = Perm::from_one_based(r);
      values.insert(values.end(), p.images().begin(), p.images().end());
    }
    std::vector<BasedPoint> tuple;
    for (auto x : tuple_raw) {
      if (x < 0 || x > static_cast<std::int64_t>(over.size()))
        malformed("freealg tuple entry out of range (0 is the basepoint)");
      tuple.push_back(x == 0 ? std::nullopt : BasedPoint(static_cast<Point>(x - 1)));
    }
    return normalize(over, OperadObj(grp, level, std::move(values)), tuple,
                     AlgConfig{std::max<std::size_t>(level, 1024)});
  });
}

Json to_json(FiniteGroup const &g)
{
  Json gens = Json::array();
  for (auto const &p : g.generators())
    gens.push_back(p.one_based());
  return Json{{"type", "group"}, {"degree", g.degree()}, {"generators", gens}};
}

Json to_json(GSet const &a)
{
  Json action = Json::array();
  for (auto const &p : a.generator_images())
    action.push_back(p.one_based());
  return Json{{"type", "gset"}, {"group", to_json(*a.group())}, {"n", a.size()},
              {"action", action}};
}

Json to_json(GMap const &f)
{
  return Json{{"type", "gmap"}, {"source", to_json(f.source())},
              {"target", to_json(f.target())}, {"images", one_based(f.images())}};
}

Json to_json(Span const &s)
{
  return Json{{"type", "span"}, {"src", to_json(s.src())}, {"tgt", to_json(s.tgt())},
              {"apex", to_json(s.apex())}, {"leg", one_based(s.leg())}};
}

Json to_json(BurnsideElt const &x)
{
  Json terms = Json::array();
  for (auto const &[k, c] : x.terms()) {
    terms.push_back(Json{{"class", {{"subgroup", k.subgroup_class + 1}, {"point", k.point + 1}}},
                         {"coeff", c}});
  }
  return Json{{"type", "burnside"}, {"src", to_json(x.src())}, {"tgt", to_json(x.tgt())},
              {"terms", terms}};
}

Json to_json(FreeAlgObj const &x)
{
  Json op = Json::array();
  auto const &grp = *x.op().group();
  for (Elem h = 0; h < grp.order(); ++h)
    op.push_back(x.op().value(h).one_based());
  return Json{{"type", "freealg"}, {"over", to_json(x.over())}, {"op", op},
              {"tuple", one_based(x.tuple())}};
}

std::string basis_label(GSet const &src, GSet const &tgt, BasisKey const &k)
{
  (void)tgt;
  auto const na = src.size();
  return "[G/H" + std::to_string(k.subgroup_class + 1) + " @ (" +
         std::to_string(k.point / na + 1) + "," + std::to_string(k.point % na + 1) + ")]";
}

std::string describe(BurnsideElt const &x)
{
  if (x.is_zero())
    return "0";
  std::string s;
  for (auto const &[k, c] : x.terms()) {
    if (!s.empty())
      s += c < 0 ? " - " : " + ";
    else if (c < 0)
      s += "-";
    auto mag = c < 0 ? -c : c;
    if (mag != 1)
      s += std::to_string(mag) + "*";
    s += basis_label(x.src(), x.tgt(), k);
  }
  return s;
}

} // namespace gspan
