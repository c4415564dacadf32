#include "ore/json_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ore/common.hpp"
#include "ore/zs.hpp"

namespace ore {

namespace {

const Json &field(const Json &j, const char *key) {
  if (!j.is_object()) throw InvalidInput("json: expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw InvalidInput(std::string("json: missing field '") + key + "'");
  return *it;
}

int int_field(const Json &j, const char *key) {
  const Json &v = field(j, key);
  if (!v.is_number_integer())
    throw InvalidInput(std::string("json: field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string str_field(const Json &j, const char *key) {
  const Json &v = field(j, key);
  if (!v.is_string())
    throw InvalidInput(std::string("json: field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<int> int_array_field(const Json &j, const char *key) {
  const Json &v = field(j, key);
  if (!v.is_array())
    throw InvalidInput(std::string("json: field '") + key + "' must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const Json &e : v) {
    if (!e.is_number_integer())
      throw InvalidInput(std::string("json: field '") + key +
                         "' must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::map<std::string, std::string> str_map_field(const Json &j, const char *key) {
  const Json &v = field(j, key);
  if (!v.is_object())
    throw InvalidInput(std::string("json: field '") + key + "' must be an object");
  std::map<std::string, std::string> out;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (!it.value().is_string())
      throw InvalidInput(std::string("json: field '") + key +
                         "' must map strings to strings");
    out[it.key()] = it.value().get<std::string>();
  }
  return out;
}

}  // namespace

Json parse_json_text(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw InvalidInput(std::string("json parse error: ") + e.what());
  }
}

Json load_json_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error &e) {
    throw InvalidInput("json parse error in " + path + ": " + e.what());
  }
}

void save_json_file(const std::string &path, const Json &j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open output file: " + path);
  out << json_to_text(j);
}

std::string json_to_text(const Json &j) { return j.dump(2) + "\n"; }

Json forest_to_json(const Forest &f) {
  return Json{{"arity", f.arity}, {"roots", f.roots}, {"word", f.word}};
}

Forest forest_from_json(const Json &j) {
  Forest f;
  f.arity = int_field(j, "arity");
  f.roots = int_field(j, "roots");
  f.word = int_array_field(j, "word");
  if (f.arity < 2) throw InvalidInput("forest: arity must be at least 2");
  if (f.roots < 1) throw InvalidInput("forest: need at least one root");
  if (!valid_raw_word(f.arity, f.roots, f.word))
    throw InvalidInput("forest: caret word runs out of range");
  f.word = normal_form_by_rewriting(f.arity, f.roots, f.word);
  return f;
}

Json braid_to_json(const BraidWord &w) {
  return Json{{"n", w.strands}, {"word", w.letters}};
}

BraidWord braid_from_json(const Json &j) {
  BraidWord w;
  w.strands = int_field(j, "n");
  w.letters = int_array_field(j, "word");
  if (w.strands < 1) throw InvalidInput("braid: need at least one strand");
  for (int l : w.letters)
    if (l == 0 || std::abs(l) >= w.strands)
      throw InvalidInput("braid: letter out of range");
  return w;
}

Json perm_to_json(const Permutation &p) { return Json{{"n", p.degree()}, {"img", p.img}}; }

Permutation perm_from_json(const Json &j) {
  Permutation p{int_array_field(j, "img")};
  const int n = int_field(j, "n");
  if (n != p.degree()) throw InvalidInput("permutation: degree does not match image");
  std::vector<char> hit(n, 0);
  for (int v : p.img) {
    if (v < 1 || v > n || hit[v - 1])
      throw InvalidInput("permutation: image is not a bijection");
    hit[v - 1] = 1;
  }
  return p;
}

Json rotation_to_json(const Rotation &r) { return Json{{"n", r.n}, {"shift", r.shift}}; }

Rotation rotation_from_json(const Json &j) {
  const int n = int_field(j, "n");
  const int shift = int_field(j, "shift");
  if (n < 1) throw InvalidInput("rotation: degree must be positive");
  return Rotation{n, ((shift % n) + n) % n};
}

Json unit_to_json(const Unit &u) {
  switch (u.family) {
    case Family::F:
      return Json{{"n", u.degree}};
    case Family::T:
      return rotation_to_json(u.rot);
    case Family::V:
      return perm_to_json(u.perm);
    default:
      return braid_to_json(u.braid);
  }
}

Unit unit_from_json(Family f, const Json &j) {
  switch (f) {
    case Family::F: {
      const int n = int_field(j, "n");
      if (n < 1) throw InvalidInput("unit: degree must be positive");
      return unit_identity(f, n);
    }
    case Family::T:
      return unit_from_rotation(f, rotation_from_json(j));
    case Family::V:
      return unit_from_perm(perm_from_json(j));
    default: {
      Unit u = unit_from_braid(f, braid_from_json(j));
      if (!unit_member(u))
        throw InvalidInput("unit: braid is not a member of the family groupoid");
      return u;
    }
  }
}

Json element_to_json(const Element &x) {
  return Json{{"family", family_name(x.family)},
              {"base", frac_source(x)},
              {"num", forest_to_json(x.num)},
              {"unit", unit_to_json(x.unit)},
              {"den", forest_to_json(x.den)}};
}

Element element_from_json(const Json &j) {
  const Family f = family_from_name(str_field(j, "family"));
  Forest num = forest_from_json(field(j, "num"));
  Forest den = forest_from_json(field(j, "den"));
  Unit u = unit_from_json(f, field(j, "unit"));
  Element x = make_element(f, std::move(num), std::move(u), std::move(den), false);
  if (j.contains("base") && int_field(j, "base") != frac_source(x))
    throw InvalidInput("element: base does not match the denominator roots");
  return x;
}

Json complex_to_json(const SimplicialComplex &x) {
  return Json{{"vertices", x.labels}, {"facets", x.facets}};
}

SimplicialComplex complex_from_json(const Json &j) {
  SimplicialComplex x;
  const Json &verts = field(j, "vertices");
  if (!verts.is_array()) throw InvalidInput("complex: vertices must be an array");
  for (const Json &v : verts) {
    if (!v.is_string()) throw InvalidInput("complex: vertex labels must be strings");
    x.labels.push_back(v.get<std::string>());
  }
  const Json &facets = field(j, "facets");
  if (!facets.is_array()) throw InvalidInput("complex: facets must be an array");
  const int n = static_cast<int>(x.labels.size());
  for (const Json &f : facets) {
    if (!f.is_array()) throw InvalidInput("complex: each facet must be an array");
    std::vector<int> s;
    for (const Json &v : f) {
      if (!v.is_number_integer())
        throw InvalidInput("complex: facets must hold vertex indices");
      const int idx = v.get<int>();
      if (idx < 0 || idx >= n)
        throw InvalidInput("complex: facet vertex out of range");
      s.push_back(idx);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InvalidInput("complex: facet repeats a vertex");
    if (s.empty()) throw InvalidInput("complex: facets must be nonempty");
    x.facets.push_back(std::move(s));
  }
  std::sort(x.facets.begin(), x.facets.end());
  return x;
}

Json graph_to_json(const LabeledGraph &g) {
  Json edges = Json::array();
  for (const GraphEdge &e : g.edges)
    edges.push_back(Json{{"id", e.id}, {"src", e.src}, {"dst", e.dst}});
  return Json{{"vertices", g.vertices}, {"edges", edges}};
}

LabeledGraph graph_from_json(const Json &j) {
  LabeledGraph g;
  const Json &verts = field(j, "vertices");
  if (!verts.is_array()) throw InvalidInput("graph: vertices must be an array");
  for (const Json &v : verts) {
    if (!v.is_string()) throw InvalidInput("graph: vertex names must be strings");
    g.vertices.push_back(v.get<std::string>());
  }
  const Json &edges = field(j, "edges");
  if (!edges.is_array()) throw InvalidInput("graph: edges must be an array");
  for (const Json &e : edges)
    g.edges.push_back({str_field(e, "id"), str_field(e, "src"), str_field(e, "dst")});
  if (!graph_valid(g)) throw InvalidInput("graph: malformed (duplicate ids or dangling endpoints)");
  return g;
}

Json morphism_to_json(const RewriteMorphism &m) {
  return Json{{"base", graph_to_json(m.base)},
              {"addresses", std::vector<std::string>(m.addresses.begin(),
                                                     m.addresses.end())}};
}

RewriteMorphism morphism_from_json(const Json &j) {
  RewriteMorphism m;
  m.base = graph_from_json(field(j, "base"));
  const Json &addrs = field(j, "addresses");
  if (!addrs.is_array()) throw InvalidInput("morphism: addresses must be an array");
  for (const Json &a : addrs) {
    if (!a.is_string()) throw InvalidInput("morphism: addresses must be strings");
    m.addresses.insert(a.get<std::string>());
  }
  return m;
}

Json iso_to_json(const GraphIso &g) {
  return Json{{"vertex_map", g.vertex_map}, {"edge_map", g.edge_map}};
}

GraphIso iso_from_json(const Json &j) {
  GraphIso g;
  g.vertex_map = str_map_field(j, "vertex_map");
  g.edge_map = str_map_field(j, "edge_map");
  return g;
}

Json report_to_json(const Report &r) {
  Json records = Json::array();
  for (const CheckRecord &rec : r.records)
    records.push_back(Json{{"name", rec.name},
                           {"instance", rec.instance},
                           {"expected", rec.expected},
                           {"got", rec.got},
                           {"pass", rec.pass}});
  return Json{{"command", r.command},
              {"schema_version", kReportSchemaVersion},
              {"seed", r.seed},
              {"records", records},
              {"summary", Json{{"total", r.total()},
                               {"passed", r.total() - r.failed()},
                               {"failed", r.failed()}}}};
}

}  // namespace ore
