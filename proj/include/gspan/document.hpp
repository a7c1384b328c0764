#ifndef GSPAN_DOCUMENT_HPP
#define GSPAN_DOCUMENT_HPP

#include <string>

#include <json.hpp>

#include "gspan/burnside.hpp"
#include "gspan/operad.hpp"

namespace gspan
{

using Json = nlohmann::json;

/// JSON documents for groups, G-sets, G-maps, spans, Burnside elements and
/// free-algebra objects. Every index in a document is 1-based.
///
///   group    {"type":"group","degree":3,"generators":[[2,3,1],[2,1,3]]}
///   gset     {"type":"gset","group":<group>,"n":2,"action":[[2,1]]}
///   gmap     {"type":"gmap","source":<gset>,"target":<gset>,"images":[...]}
///   span     {"type":"span","src":<gset>,"tgt":<gset>,"apex":<gset>,"leg":[...]}
///   burnside {"type":"burnside","src":<gset>,"tgt":<gset>,
///             "terms":[{"class":{"subgroup":1,"point":1},"coeff":2}]}
///   freealg  {"type":"freealg","over":<gset>,"op":[[...] per element],"tuple":[...]}
///
/// A "group" field may also hold a preset string such as "cyclic 3".
class DocReader
{
public:
  explicit DocReader(std::size_t max_order = kDefaultMaxOrder)
  : _max_order(max_order)
  {}

  /// Reuses `group` whenever a document names an equal group.
  DocReader(GroupPtr group, std::size_t max_order = kDefaultMaxOrder)
  : _max_order(max_order), _group(std::move(group))
  {}

  GroupPtr group(Json const &j);
  GSet gset(Json const &j);
  GMap gmap(Json const &j);
  Span span(Json const &j);
  BurnsideElt burnside(Json const &j);
  FreeAlgObj freealg(Json const &j);

private:
  std::size_t _max_order;
  GroupPtr _group;
};

/// A preset ("trivial", "cyclic n", "dihedral n", "symmetric n", "klein"),
/// JSON text, or the path of a JSON file. Throws Usage with a schema hint.
GroupPtr parse_group_spec(std::string const &spec, std::size_t max_order = kDefaultMaxOrder);

/// Parses JSON text, or reads it from a file when `text` names one.
Json load_json(std::string const &text);

Json to_json(FiniteGroup const &g);
Json to_json(GSet const &a);
Json to_json(GMap const &f);
Json to_json(Span const &s);
Json to_json(BurnsideElt const &x);
Json to_json(FreeAlgObj const &x);

/// Short human label of a basis class, e.g. "[G/H2 @ (1,3)]".
std::string basis_label(GSet const &src, GSet const &tgt, BasisKey const &k);
std::string describe(BurnsideElt const &x);

} // namespace gspan

#endif // GSPAN_DOCUMENT_HPP
