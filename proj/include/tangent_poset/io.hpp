#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tangent_poset/coloring.hpp"
#include "tangent_poset/complex.hpp"
#include "tangent_poset/poset.hpp"
#include "tangent_poset/tangent.hpp"
#include "tangent_poset/verify.hpp"

namespace tp::io {

/// Keys keep insertion order so output is stable.
using Json = nlohmann::ordered_json;

/// Throws ParseError with the parser's message.
Json parse(std::string_view text);
Json read_file(const std::string& path);

enum class Document { Poset, Bundle, Complex, Coloring };
/// Throws ParseError if the document matches no known format.
Document detect(const Json& j);

// {"elements": [{"id": s, "label": null|"0"|"infinity"}], "covers": [[lo, hi], ...]}
Json to_json(const Poset& p);
Poset poset_from_json(const Json& j);

// {"facets": [[vertexId, ...], ...]}; integer vertex ids are read as strings.
Json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);

/// Total space in poset format plus a "bundle" block with the base and the
/// projection / section assignments by identifier.
Json to_json(const TangentBundle& b);

// {"base": poset, "objects": {id: poset}, "arrows": {"lo>hi": {src: dst}}, "n": int}
Json to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

// {"verdict": "verified"|"refuted"|"unknown", "evidence": [...]}
Json to_json(const Certainty& c);
Json to_json(const VerificationReport& r);

/// Hasse diagram, edges from lower to upper element.
std::string to_dot(const Poset& p);
/// 1-skeleton as an undirected graph.
std::string to_dot(const SimplicialComplex& k);
/// Surface/volume mesh for complexes of dimension <= 3 with seeded random
/// coordinates (visualization only). Throws InvalidArgument above dimension 3.
std::string to_off(const SimplicialComplex& k, std::uint64_t seed = 0);

}  // namespace tp::io
