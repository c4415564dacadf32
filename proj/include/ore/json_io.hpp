#pragma once

#include <string>

#include "json.hpp"
#include "ore/complex.hpp"
#include "ore/fraction.hpp"
#include "ore/report.hpp"
#include "ore/rewrite.hpp"

namespace ore {

// Insertion-ordered so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

// Parsing throws InvalidInput with a diagnostic on malformed text, missing
// fields, or type mismatches; the CLI maps that to a format exit code.
Json parse_json_text(const std::string &text);
Json load_json_file(const std::string &path);
void save_json_file(const std::string &path, const Json &j);
std::string json_to_text(const Json &j);

Json forest_to_json(const Forest &f);
Forest forest_from_json(const Json &j);

Json braid_to_json(const BraidWord &w);
BraidWord braid_from_json(const Json &j);
Json perm_to_json(const Permutation &p);
Permutation perm_from_json(const Json &j);
Json rotation_to_json(const Rotation &r);
Rotation rotation_from_json(const Json &j);

// Unit payload shape depends on the family: plain {"n"}, rotation
// {"n","shift"}, permutation {"n","img"}, braided {"n","word"}.
Json unit_to_json(const Unit &u);
Unit unit_from_json(Family f, const Json &j);

Json element_to_json(const Element &x);
Element element_from_json(const Json &j);

Json complex_to_json(const SimplicialComplex &x);
SimplicialComplex complex_from_json(const Json &j);

Json graph_to_json(const LabeledGraph &g);
LabeledGraph graph_from_json(const Json &j);
Json morphism_to_json(const RewriteMorphism &m);
RewriteMorphism morphism_from_json(const Json &j);
Json iso_to_json(const GraphIso &g);
GraphIso iso_from_json(const Json &j);

Json report_to_json(const Report &r);

}  // namespace ore
