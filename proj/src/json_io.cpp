#include "incalg/json_io.hpp"

#include <fstream>
#include <set>

namespace incalg {

namespace {

const Json& require_key(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) fail(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string as_string(const Json& v, const char* what) {
  if (!v.is_string()) fail(ErrorKind::ParseError, std::string(what) + " must be a string");
  return v.get<std::string>();
}

// A ["x","y"] pair of element labels.
std::pair<std::string, std::string> as_label_pair(const Json& v, const char* what) {
  if (!v.is_array() || v.size() != 2)
    fail(ErrorKind::ParseError, std::string(what) + " must be a two-element array");
  return {as_string(v[0], what), as_string(v[1], what)};
}

int basis_index_checked(const Algebra& algebra, const std::string& x, const std::string& y,
                        const char* what) {
  const PreOrder& order = algebra.order();
  int ix = -1, iy = -1;
  for (int i = 0; i < order.size(); ++i) {
    if (order.label(i) == x) ix = i;
    if (order.label(i) == y) iy = i;
  }
  if (ix < 0 || iy < 0 || !order.leq(ix, iy))
    fail(ErrorKind::UnknownBasisElement,
         std::string(what) + " (" + x + "," + y + ") is not a basis element of the set");
  return algebra.basis_index(ix, iy);
}

}  // namespace

PreOrderPtr poset_from_json(const Json& doc) {
  if (!doc.is_object()) fail(ErrorKind::ParseError, "poset document must be a JSON object");
  const Json& elements = require_key(doc, "elements");
  if (!elements.is_array() || elements.empty())
    fail(ErrorKind::ParseError, "\"elements\" must be a nonempty array");
  std::vector<std::string> labels;
  for (const Json& e : elements) labels.push_back(as_string(e, "element"));

  std::vector<std::pair<std::string, std::string>> relation;
  if (auto it = doc.find("relations"); it != doc.end()) {
    if (!it->is_array()) fail(ErrorKind::ParseError, "\"relations\" must be an array");
    for (const Json& pair : *it) relation.push_back(as_label_pair(pair, "relation pair"));
  }
  bool close = false;
  if (auto it = doc.find("transitive_close"); it != doc.end()) {
    if (!it->is_boolean()) fail(ErrorKind::ParseError, "\"transitive_close\" must be a boolean");
    close = it->get<bool>();
  }
  return build_preorder(std::move(labels), relation, close);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, path + ": " + e.what());
  }
}

PreOrderPtr load_poset_file(const std::string& path) { return poset_from_json(load_json_file(path)); }

Json poset_to_json(const PreOrder& order) {
  Json doc = Json::object();
  doc["elements"] = Json::array();
  for (int i = 0; i < order.size(); ++i) doc["elements"].push_back(order.label(i));
  doc["relations"] = Json::array();
  for (auto [u, v] : order.directed_edges())
    doc["relations"].push_back(Json::array({order.label(u), order.label(v)}));
  doc["transitive_close"] = false;
  return doc;
}

Json element_to_json(const Element& element) {
  const Algebra& algebra = *element.algebra();
  Json triples = Json::array();
  for (int b = 0; b < algebra.basis_size(); ++b) {
    const RingValue& v = element.coeff_at(b);
    if (v.is_zero()) continue;
    auto [x, y] = algebra.basis()[static_cast<std::size_t>(b)];
    triples.push_back(Json::array({algebra.order().label(x), algebra.order().label(y), v.str()}));
  }
  return triples;
}

Element element_from_json(const AlgebraPtr& algebra, const Json& triples) {
  if (!triples.is_array()) fail(ErrorKind::ParseError, "element value must be an array of triples");
  std::vector<RingValue> coeffs(static_cast<std::size_t>(algebra->basis_size()),
                                algebra->ring().zero());
  std::set<int> seen;
  for (const Json& t : triples) {
    if (!t.is_array() || t.size() != 3)
      fail(ErrorKind::ParseError, "element entry must be a [\"x\",\"y\",\"coeff\"] triple");
    std::string x = as_string(t[0], "element entry");
    std::string y = as_string(t[1], "element entry");
    int idx = basis_index_checked(*algebra, x, y, "pair");
    if (!seen.insert(idx).second)
      fail(ErrorKind::ParseError, "duplicate pair (" + x + "," + y + ") in element value");
    coeffs[static_cast<std::size_t>(idx)] = algebra->ring().parse(as_string(t[2], "coefficient"));
  }
  return Element(algebra, std::move(coeffs));
}

Json map_to_json(const LinearMap& map) {
  const Algebra& algebra = *map.algebra();
  Json doc = Json::object();
  doc["ring"] = algebra.ring().spec().str();
  Json entries = Json::array();
  for (int b = 0; b < algebra.basis_size(); ++b) {
    const Element& image = map.image_at(b);
    if (image.is_zero()) continue;
    auto [i, j] = algebra.basis()[static_cast<std::size_t>(b)];
    Json entry = Json::object();
    entry["on"] = Json::array({algebra.order().label(i), algebra.order().label(j)});
    entry["value"] = element_to_json(image);
    entries.push_back(std::move(entry));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

RingSpec map_ring_spec(const Json& doc) {
  if (!doc.is_object()) fail(ErrorKind::ParseError, "map document must be a JSON object");
  return RingSpec::parse(as_string(require_key(doc, "ring"), "\"ring\""));
}

LinearMap map_from_json(const AlgebraPtr& algebra, const Json& doc) {
  if (!doc.is_object()) fail(ErrorKind::ParseError, "map document must be a JSON object");
  RingSpec spec = map_ring_spec(doc);
  if (!(spec == algebra->ring().spec()))
    fail(ErrorKind::RingMismatch, "map file declares ring " + spec.str() +
                                      " but the ambient algebra uses " +
                                      algebra->ring().spec().str());
  const Json& entries = require_key(doc, "entries");
  if (!entries.is_array()) fail(ErrorKind::ParseError, "\"entries\" must be an array");
  std::vector<Element> images(static_cast<std::size_t>(algebra->basis_size()), algebra->zero());
  std::set<int> seen;
  for (const Json& entry : entries) {
    if (!entry.is_object()) fail(ErrorKind::ParseError, "map entry must be an object");
    auto [i, j] = as_label_pair(require_key(entry, "on"), "\"on\"");
    int src = basis_index_checked(*algebra, i, j, "source");
    if (!seen.insert(src).second)
      fail(ErrorKind::ParseError, "duplicate entry for source (" + i + "," + j + ")");
    images[static_cast<std::size_t>(src)] =
        element_from_json(algebra, require_key(entry, "value"));
  }
  return LinearMap(algebra, std::move(images));
}

}  // namespace incalg
