#include "tangent_poset/io.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "tangent_poset/error.hpp"

namespace tp::io {
namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::string text_of(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  fail(std::string(what) + " must be a string");
}

Json label_json(Label l) {
  switch (l) {
    case Label::Zero: return "0";
    case Label::Infinity: return "infinity";
    case Label::None: break;
  }
  return nullptr;
}

Label label_from(const Json& j) {
  if (j.is_null()) return Label::None;
  if (j == "0") return Label::Zero;
  if (j == "infinity") return Label::Infinity;
  fail("label must be null, \"0\" or \"infinity\"");
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Json assignment_json(const PosetMap& f) {
  Json out = Json::object();
  for (Index x = 0; x < f.source().size(); ++x) out[f.source().id(x)] = f.target().id(f(x));
  return out;
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Document detect(const Json& j) {
  if (!j.is_object()) fail("document must be a JSON object");
  if (j.contains("elements")) return j.contains("bundle") ? Document::Bundle : Document::Poset;
  if (j.contains("facets")) return Document::Complex;
  if (j.contains("base") && j.contains("objects")) return Document::Coloring;
  fail("unrecognized document: expected a poset, complex or coloring");
}

Json to_json(const Poset& p) {
  Json elements = Json::array();
  for (Index i = 0; i < p.size(); ++i) elements.push_back({{"id", p.id(i)}, {"label", label_json(p.label(i))}});
  Json covers = Json::array();
  for (const auto& [lo, hi] : p.covers()) covers.push_back({p.id(lo), p.id(hi)});
  return {{"elements", std::move(elements)}, {"covers", std::move(covers)}};
}

Poset poset_from_json(const Json& j) {
  const Json& elements = field(j, "elements");
  if (!elements.is_array()) fail("\"elements\" must be an array");
  std::vector<std::string> ids;
  std::vector<Label> labels;
  for (const auto& e : elements) {
    if (e.is_object()) {
      ids.push_back(text_of(field(e, "id"), "element id"));
      labels.push_back(e.contains("label") ? label_from(e.at("label")) : Label::None);
    } else {
      ids.push_back(text_of(e, "element id"));
      labels.push_back(Label::None);
    }
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (j.contains("covers")) {
    const Json& cs = j.at("covers");
    if (!cs.is_array()) fail("\"covers\" must be an array");
    for (const auto& c : cs) {
      if (!c.is_array() || c.size() != 2) fail("each cover must be a [lower, upper] pair");
      covers.emplace_back(text_of(c[0], "cover end"), text_of(c[1], "cover end"));
    }
  }
  return Poset::from_covers(std::move(ids), covers, std::move(labels));
}

Json to_json(const SimplicialComplex& k) {
  Json facets = Json::array();
  for (const auto& f : k.facets()) {
    Json row = Json::array();
    for (Vertex v : f) row.push_back(k.label(v));
    facets.push_back(std::move(row));
  }
  return {{"facets", std::move(facets)}};
}

SimplicialComplex complex_from_json(const Json& j) {
  const Json& facets = field(j, "facets");
  if (!facets.is_array()) fail("\"facets\" must be an array");
  std::vector<std::vector<std::string>> named;
  for (const auto& f : facets) {
    if (!f.is_array()) fail("each facet must be an array of vertex ids");
    std::vector<std::string> row;
    for (const auto& v : f) row.push_back(text_of(v, "vertex id"));
    named.push_back(std::move(row));
  }
  return SimplicialComplex::from_named(named);
}

Json to_json(const TangentBundle& b) {
  Json out = to_json(b.total);
  Json bundle = {{"base", to_json(b.base)},
                 {"projection", assignment_json(b.projection)},
                 {"section0", assignment_json(b.section0)},
                 {"sectionInf", assignment_json(b.section_inf)}};
  if (b.link_reading_witness) bundle["linkReadingWitness"] = *b.link_reading_witness;
  out["bundle"] = std::move(bundle);
  return out;
}

Json to_json(const Coloring& c) {
  Json objects = Json::object();
  for (Index x = 0; x < c.base.size(); ++x) objects[c.base.id(x)] = to_json(c.objects.at(x));
  Json arrows = Json::object();
  for (const auto& [key, f] : c.arrows) arrows[c.base.id(key.first) + ">" + c.base.id(key.second)] = assignment_json(f);
  return {{"base", to_json(c.base)}, {"objects", std::move(objects)}, {"arrows", std::move(arrows)}, {"n", c.n}};
}

Coloring coloring_from_json(const Json& j) {
  Coloring c;
  c.base = poset_from_json(field(j, "base"));
  const Json& objects = field(j, "objects");
  if (!objects.is_object()) fail("\"objects\" must be an object keyed by base element");
  for (Index x = 0; x < c.base.size(); ++x) {
    if (!objects.contains(c.base.id(x))) fail("no object for base element " + c.base.id(x));
    c.objects.push_back(poset_from_json(objects.at(c.base.id(x))));
  }
  if (objects.size() != c.base.size()) fail("objects given for identifiers outside the base");
  c.n = field(j, "n").is_number_integer() ? field(j, "n").get<int>() : (fail("\"n\" must be an integer"), 0);
  const Json arrows = j.contains("arrows") ? j.at("arrows") : Json::object();
  if (!arrows.is_object()) fail("\"arrows\" must be an object keyed by \"lower>upper\"");
  for (const auto& [key, value] : arrows.items()) {
    // Split at the first '>' that leaves two base identifiers.
    std::optional<std::pair<Index, Index>> ends;
    for (auto pos = key.find('>'); pos != std::string::npos && !ends; pos = key.find('>', pos + 1)) {
      auto lo = c.base.find(std::string_view(key).substr(0, pos));
      auto hi = c.base.find(std::string_view(key).substr(pos + 1));
      if (lo && hi) ends.emplace(*lo, *hi);
    }
    if (!ends) fail("arrow key \"" + key + "\" is not lower>upper over base identifiers");
    const auto up = c.base.upper_covers(ends->first);
    if (std::find(up.begin(), up.end(), ends->second) == up.end()) fail("arrow \"" + key + "\" is not on a cover");
    if (!value.is_object()) fail("arrow \"" + key + "\" must map source ids to target ids");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [src, dst] : value.items()) pairs.emplace_back(src, text_of(dst, "arrow target"));
    c.arrows.emplace(*ends, PosetMap::from_ids(c.objects[ends->first], c.objects[ends->second], pairs));
  }
  return c;
}

Json to_json(const Certainty& c) { return {{"verdict", to_string(c.verdict)}, {"evidence", c.evidence}}; }

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"verdict", to_string(c.result.verdict)}, {"evidence", c.result.evidence}});
  return {{"subject", r.subject}, {"overall", to_json(r.overall())}, {"checks", std::move(checks)}, {"notes", r.notes}};
}

std::string to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (Index i = 0; i < p.size(); ++i) {
    os << "  " << quoted(p.id(i));
    if (p.label(i) != Label::None) os << " [xlabel=" << quoted(to_string(p.label(i))) << "]";
    os << ";\n";
  }
  for (const auto& [lo, hi] : p.covers()) os << "  " << quoted(p.id(lo)) << " -> " << quoted(p.id(hi)) << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const SimplicialComplex& k) {
  std::ostringstream os;
  os << "graph skeleton {\n";
  for (Vertex v = 0; v < k.num_vertices(); ++v) os << "  " << quoted(k.label(v)) << ";\n";
  const FaceTable& t = k.faces();
  if (t.faces.size() > 1)
    for (const auto& e : t.faces[1]) os << "  " << quoted(k.label(e[0])) << " -- " << quoted(k.label(e[1])) << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_off(const SimplicialComplex& k, std::uint64_t seed) {
  const int d = k.dimension();
  if (d > 3) throw Error(ErrorKind::InvalidArgument, "OFF export supports dimension <= 3, got " + std::to_string(d));
  std::vector<Simplex> faces;
  if (d == 3) {
    const FaceTable& t = k.faces();
    faces = t.faces[2];
  } else {
    for (const auto& f : k.facets())
      if (f.size() >= 2) faces.push_back(f);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::ostringstream os;
  os << "OFF\n# coordinates are a seeded random embedding for visualization only\n";
  os << k.num_vertices() << " " << faces.size() << " 0\n";
  for (Vertex v = 0; v < k.num_vertices(); ++v) {
    const double x = coord(rng), y = coord(rng), z = coord(rng);
    os << x << " " << y << " " << z << "\n";
  }
  for (const auto& f : faces) {
    os << f.size();
    for (Vertex v : f) os << " " << v;
    os << "\n";
  }
  return os.str();
}

}  // namespace tp::io
