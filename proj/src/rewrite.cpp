#include "ore/rewrite.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

#include "ore/common.hpp"
#include "ore/zs.hpp"

namespace ore {

namespace {

const GraphEdge *find_edge(const LabeledGraph &g, const std::string &id) {
  for (const GraphEdge &e : g.edges)
    if (e.id == id) return &e;
  return nullptr;
}

bool has_vertex(const LabeledGraph &g, const std::string &v) {
  return std::find(g.vertices.begin(), g.vertices.end(), v) != g.vertices.end();
}

// Renames a hereditary name whose head is a base edge id: addresses, child
// edge ids, and fresh vertex names all have the form <base-id>(.suffix)*.
// Names without such a head are returned unchanged.
std::string rename_derived(const std::map<std::string, std::string> &edge_map,
                           const std::string &name) {
  const std::string *head = nullptr;
  std::size_t len = 0;
  for (const auto &[p, q] : edge_map) {
    if (p.size() > name.size() || name.compare(0, p.size(), p) != 0) continue;
    if (p.size() != name.size() && name[p.size()] != '.') continue;
    if (p.size() >= len) {
      len = p.size();
      head = &q;
    }
  }
  if (head == nullptr) return name;
  return *head + name.substr(len);
}

void check_rule(const RewriteRule &rule) {
  if (!graph_valid(rule.replacement))
    throw InvalidInput("rewrite rule: invalid replacement graph");
  if (!has_vertex(rule.replacement, "v") || !has_vertex(rule.replacement, "w"))
    throw InvalidInput("rewrite rule: replacement must keep vertices v and w");
  if (rule.replacement.edges.size() < 2)
    throw InvalidInput("rewrite rule: replacement needs at least two edges");
  for (const GraphEdge &e : rule.replacement.edges)
    if (e.id.find('.') != std::string::npos)
      throw InvalidInput("rewrite rule: replacement ids must not contain dots");
}

}  // namespace

bool graph_valid(const LabeledGraph &g) {
  std::set<std::string> vs;
  for (const std::string &v : g.vertices) {
    if (v.empty() || !vs.insert(v).second) return false;
  }
  std::set<std::string> ids;
  for (const GraphEdge &e : g.edges) {
    if (e.id.empty() || !ids.insert(e.id).second) return false;
    if (!vs.count(e.src) || !vs.count(e.dst)) return false;
  }
  return true;
}

bool graph_equal(const LabeledGraph &a, const LabeledGraph &b) {
  std::vector<std::string> va = a.vertices, vb = b.vertices;
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  if (va != vb) return false;
  std::vector<GraphEdge> ea = a.edges, eb = b.edges;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

int graph_height(const LabeledGraph &g) { return static_cast<int>(g.edges.size()); }

RewriteRule builtin_rule(const std::string &name) {
  if (name == "L2")
    return {"L2", {{"v", "u", "w"}, {{"1", "v", "u"}, {"2", "u", "w"}}}};
  if (name == "D2") return {"D2", {{"v", "w"}, {{"1", "v", "w"}, {"2", "v", "w"}}}};
  if (name == "basilica")
    return {"basilica",
            {{"v", "u", "w"}, {{"1", "v", "u"}, {"2", "u", "u"}, {"3", "u", "w"}}}};
  throw InvalidInput("builtin_rule: unknown rule " + name);
}

std::vector<std::string> builtin_rule_names() { return {"L2", "D2", "basilica"}; }

LabeledGraph basilica_graph() {
  return {{"x", "y"},
          {{"lx", "x", "x"}, {"ly", "y", "y"}, {"a", "x", "y"}, {"b", "y", "x"}}};
}

LabeledGraph bad_graph(int chain) {
  if (chain < 1) throw InvalidInput("bad_graph: chain length must be positive");
  LabeledGraph g;
  g.vertices = {"A", "P", "Q", "B", "L", "M"};
  g.edges = {{"ap", "A", "P"}, {"pq", "P", "Q"}, {"qa", "Q", "A"},
             {"lp", "P", "P"}, {"lq", "Q", "Q"},
             {"bl", "B", "L"}, {"lm", "L", "M"}, {"mb", "M", "B"},
             {"el", "L", "L"}, {"em", "M", "M"}};
  std::vector<std::string> stops{"A"};
  for (int i = 1; i < chain; ++i) {
    g.vertices.push_back("c" + std::to_string(i));
    stops.push_back(g.vertices.back());
  }
  stops.push_back("B");
  for (int i = 0; i < chain; ++i) {
    g.edges.push_back({"f" + std::to_string(i), stops[i], stops[i + 1]});
    g.edges.push_back({"r" + std::to_string(i), stops[i + 1], stops[i]});
  }
  return g;
}

LabeledGraph expand_edge(const RewriteRule &rule, const LabeledGraph &g,
                         const std::string &edge_id) {
  check_rule(rule);
  const GraphEdge *e = find_edge(g, edge_id);
  if (e == nullptr) throw InvalidInput("expand_edge: no edge " + edge_id);
  auto map_vertex = [&](const std::string &rv) -> std::string {
    if (rv == "v") return e->src;
    if (rv == "w") return e->dst;
    return edge_id + "." + rv;
  };
  LabeledGraph out;
  out.vertices = g.vertices;
  for (const std::string &rv : rule.replacement.vertices)
    if (rv != "v" && rv != "w") out.vertices.push_back(edge_id + "." + rv);
  for (const GraphEdge &old : g.edges)
    if (old.id != edge_id) out.edges.push_back(old);
  for (const GraphEdge &re : rule.replacement.edges)
    out.edges.push_back(
        {edge_id + "." + re.id, map_vertex(re.src), map_vertex(re.dst)});
  return out;
}

LabeledGraph rewrite_source(const RewriteRule &rule, const RewriteMorphism &m) {
  LabeledGraph cur = m.base;
  // Lexicographic order puts every expanded id before its children, so an
  // ancestor-closed set can be replayed in one pass.
  for (const std::string &addr : m.addresses) cur = expand_edge(rule, cur, addr);
  return cur;
}

bool morphism_valid(const RewriteRule &rule, const RewriteMorphism &m) {
  if (!graph_valid(m.base)) return false;
  try {
    rewrite_source(rule, m);
  } catch (const InvalidInput &) {
    return false;
  }
  return true;
}

bool morphism_eq(const RewriteMorphism &a, const RewriteMorphism &b) {
  return a.addresses == b.addresses && graph_equal(a.base, b.base);
}

RewriteMorphism rewrite_compose(const RewriteRule &rule, const RewriteMorphism &f,
                                const RewriteMorphism &g) {
  if (!graph_equal(g.base, rewrite_source(rule, f)))
    throw InvalidInput("rewrite_compose: inner base must be the outer source");
  RewriteMorphism r{f.base, f.addresses};
  r.addresses.insert(g.addresses.begin(), g.addresses.end());
  return r;
}

RewriteMorphism rewrite_lcm(const RewriteMorphism &a, const RewriteMorphism &b) {
  if (!graph_equal(a.base, b.base))
    throw InvalidInput("rewrite_lcm: morphisms must share a base");
  RewriteMorphism r{a.base, a.addresses};
  r.addresses.insert(b.addresses.begin(), b.addresses.end());
  return r;
}

RewriteMorphism rewrite_gcd(const RewriteMorphism &a, const RewriteMorphism &b) {
  if (!graph_equal(a.base, b.base))
    throw InvalidInput("rewrite_gcd: morphisms must share a base");
  RewriteMorphism r{a.base, {}};
  for (const std::string &addr : a.addresses)
    if (b.addresses.count(addr)) r.addresses.insert(addr);
  return r;
}

bool iso_valid(const LabeledGraph &a, const LabeledGraph &b, const GraphIso &g) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size())
    return false;
  std::set<std::string> vtargets, etargets;
  for (const std::string &v : a.vertices) {
    auto it = g.vertex_map.find(v);
    if (it == g.vertex_map.end() || !has_vertex(b, it->second) ||
        !vtargets.insert(it->second).second)
      return false;
  }
  if (g.vertex_map.size() != a.vertices.size()) return false;
  for (const GraphEdge &e : a.edges) {
    auto it = g.edge_map.find(e.id);
    if (it == g.edge_map.end() || !etargets.insert(it->second).second) return false;
    const GraphEdge *img = find_edge(b, it->second);
    if (img == nullptr) return false;
    if (img->src != g.vertex_map.at(e.src) || img->dst != g.vertex_map.at(e.dst))
      return false;
  }
  return g.edge_map.size() == a.edges.size();
}

GraphIso iso_identity(const LabeledGraph &g) {
  GraphIso out;
  for (const std::string &v : g.vertices) out.vertex_map[v] = v;
  for (const GraphEdge &e : g.edges) out.edge_map[e.id] = e.id;
  return out;
}

GraphIso iso_compose(const GraphIso &a, const GraphIso &b) {
  GraphIso out;
  for (const auto &[k, v] : b.vertex_map) out.vertex_map[k] = a.vertex_map.at(v);
  for (const auto &[k, v] : b.edge_map) out.edge_map[k] = a.edge_map.at(v);
  return out;
}

GraphIso iso_inverse(const GraphIso &g) {
  GraphIso out;
  for (const auto &[k, v] : g.vertex_map) out.vertex_map[v] = k;
  for (const auto &[k, v] : g.edge_map) out.edge_map[v] = k;
  return out;
}

LabeledGraph iso_apply(const GraphIso &g, const LabeledGraph &a) {
  LabeledGraph out;
  for (const std::string &v : a.vertices) out.vertices.push_back(g.vertex_map.at(v));
  for (const GraphEdge &e : a.edges)
    out.edges.push_back(
        {g.edge_map.at(e.id), g.vertex_map.at(e.src), g.vertex_map.at(e.dst)});
  return out;
}

std::vector<GraphIso> graph_automorphisms(const LabeledGraph &g) {
  if (!graph_valid(g)) throw InvalidInput("graph_automorphisms: invalid graph");
  const int n = static_cast<int>(g.vertices.size());
  std::map<std::string, std::array<int, 3>> sig;  // out, in, loops
  for (const std::string &v : g.vertices) sig[v] = {0, 0, 0};
  std::map<std::pair<std::string, std::string>, std::vector<int>> classes;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const GraphEdge &e = g.edges[i];
    if (e.src == e.dst)
      ++sig[e.src][2];
    else {
      ++sig[e.src][0];
      ++sig[e.dst][1];
    }
    classes[{e.src, e.dst}].push_back(static_cast<int>(i));
  }

  std::vector<GraphIso> out;
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t budget_used = 0;

  auto emit_edges = [&](auto &&self, std::size_t ci,
                        std::vector<std::pair<std::vector<int>, std::vector<int>>>
                            &pairs,
                        GraphIso &iso) -> void {
    if (ci == pairs.size()) {
      charge_budget(budget_used, 1, "graph automorphisms");
      out.push_back(iso);
      return;
    }
    auto &[ids, targets] = pairs[ci];
    std::vector<int> perm = targets;  // sorted: next_permutation covers all
    do {
      for (std::size_t k = 0; k < ids.size(); ++k)
        iso.edge_map[g.edges[ids[k]].id] = g.edges[perm[k]].id;
      self(self, ci + 1, pairs, iso);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };

  auto at_leaf = [&]() {
    GraphIso iso;
    for (int i = 0; i < n; ++i) iso.vertex_map[g.vertices[i]] = g.vertices[img[i]];
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
    for (const auto &[key, ids] : classes) {
      auto it = classes.find({iso.vertex_map.at(key.first), iso.vertex_map.at(key.second)});
      if (it == classes.end() || it->second.size() != ids.size()) return;
      pairs.emplace_back(ids, it->second);
    }
    emit_edges(emit_edges, 0, pairs, iso);
  };

  auto rec = [&](auto &&self, int i) -> void {
    if (i == n) {
      at_leaf();
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j] || sig[g.vertices[i]] != sig[g.vertices[j]]) continue;
      used[j] = 1;
      img[i] = j;
      self(self, i + 1);
      used[j] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

RewriteMorphism iso_act(const GraphIso &g, const RewriteMorphism &m) {
  RewriteMorphism out;
  out.base = iso_apply(g, m.base);
  for (const std::string &addr : m.addresses)
    out.addresses.insert(rename_derived(g.edge_map, addr));
  return out;
}

GraphIso iso_clone(const RewriteRule &rule, const GraphIso &g,
                   const RewriteMorphism &m) {
  const LabeledGraph src = rewrite_source(rule, m);
  GraphIso out;
  for (const std::string &v : src.vertices) {
    auto it = g.vertex_map.find(v);
    out.vertex_map[v] =
        it != g.vertex_map.end() ? it->second : rename_derived(g.edge_map, v);
  }
  for (const GraphEdge &e : src.edges)
    out.edge_map[e.id] = rename_derived(g.edge_map, e.id);
  return out;
}

namespace {

std::string show_addresses(const RewriteMorphism &m) {
  std::string s = "{";
  bool first = true;
  for (const std::string &a : m.addresses) {
    if (!first) s += ",";
    s += a;
    first = false;
  }
  return s + "}";
}

std::string show_graph(const LabeledGraph &g) {
  std::string s = "[";
  bool first = true;
  for (const GraphEdge &e : g.edges) {
    if (!first) s += " ";
    s += e.id;
    first = false;
  }
  return s + "]";
}

std::string show_iso(const GraphIso &g) {
  std::string s = "(";
  bool first = true;
  for (const auto &[k, v] : g.edge_map) {
    if (!first) s += ",";
    s += k + ">" + v;
    first = false;
  }
  return s + ")";
}

struct GraphSystem {
  const RewriteRule &rule;
  std::vector<LabeledGraph> objs;

  const std::vector<LabeledGraph> &objects() const { return objs; }
  std::vector<RewriteMorphism> generators(const LabeledGraph &x) const {
    std::vector<RewriteMorphism> out;
    for (const GraphEdge &e : x.edges) out.push_back({x, {e.id}});
    return out;
  }
  std::vector<GraphIso> units(const LabeledGraph &x) const {
    return graph_automorphisms(x);
  }
  LabeledGraph forest_source(const RewriteMorphism &f) const {
    return rewrite_source(rule, f);
  }
  RewriteMorphism compose_f(const RewriteMorphism &a, const RewriteMorphism &b) const {
    return rewrite_compose(rule, a, b);
  }
  RewriteMorphism id_forest(const LabeledGraph &x) const { return {x, {}}; }
  bool eq_f(const RewriteMorphism &a, const RewriteMorphism &b) const {
    return morphism_eq(a, b);
  }
  GraphIso compose_u(const GraphIso &a, const GraphIso &b) const {
    return iso_compose(a, b);
  }
  GraphIso inverse_u(const GraphIso &a) const { return iso_inverse(a); }
  GraphIso id_unit(const LabeledGraph &x) const { return iso_identity(x); }
  bool eq_u(const GraphIso &a, const GraphIso &b) const { return a == b; }
  RewriteMorphism act(const GraphIso &g, const RewriteMorphism &m) const {
    return iso_act(g, m);
  }
  GraphIso clone(const GraphIso &g, const RewriteMorphism &m) const {
    return iso_clone(rule, g, m);
  }
  std::string show_obj(const LabeledGraph &x) const { return show_graph(x); }
  std::string show_f(const RewriteMorphism &m) const { return show_addresses(m); }
  std::string show_u(const GraphIso &u) const { return show_iso(u); }
};

}  // namespace

Report check_graph_ip_axioms(const RewriteRule &rule, const LabeledGraph &base,
                             int depth) {
  check_rule(rule);
  if (!graph_valid(base)) throw InvalidInput("check_graph_ip_axioms: invalid base");
  std::vector<LabeledGraph> objs{base};
  std::vector<LabeledGraph> frontier{base};
  std::uint64_t used = 0;
  for (int d = 0; d < depth; ++d) {
    std::vector<LabeledGraph> next;
    for (const LabeledGraph &g : frontier)
      for (const GraphEdge &e : g.edges) {
        LabeledGraph h = expand_edge(rule, g, e.id);
        charge_budget(used, h.edges.size(), "graph object enumeration");
        bool fresh = true;
        for (const LabeledGraph &o : objs)
          if (graph_equal(o, h)) {
            fresh = false;
            break;
          }
        if (fresh) {
          objs.push_back(h);
          next.push_back(std::move(h));
        }
      }
    frontier = std::move(next);
  }
  GraphSystem sys{rule, std::move(objs)};
  Report rep = check_ip_axioms_generic(sys);
  rep.command = "verify-graph-ip(" + rule.name + ")";
  rep.finalize();
  return rep;
}

std::vector<Pattern> find_patterns(const RewriteRule &rule, const LabeledGraph &g) {
  check_rule(rule);
  if (!graph_valid(g)) throw InvalidInput("find_patterns: invalid graph");
  const LabeledGraph &rep = rule.replacement;
  std::set<std::string> internal(rep.vertices.begin(), rep.vertices.end());
  internal.erase("v");
  internal.erase("w");
  std::map<std::string, int> incid_rule;
  for (const std::string &u : internal) incid_rule[u] = 0;
  for (const GraphEdge &e : rep.edges) {
    if (internal.count(e.src)) ++incid_rule[e.src];
    if (internal.count(e.dst)) ++incid_rule[e.dst];
  }
  std::map<std::string, int> incid_g;
  for (const GraphEdge &e : g.edges) {
    ++incid_g[e.src];
    ++incid_g[e.dst];
  }

  std::map<std::tuple<std::vector<std::string>, std::string, std::string>, Pattern>
      found;
  std::map<std::string, std::string> vmap;
  std::vector<int> emap(rep.edges.size(), -1);
  std::vector<char> used(g.edges.size(), 0);

  auto at_leaf = [&]() {
    if (!vmap.count("v") || !vmap.count("w")) return;
    std::set<std::string> fresh_imgs;
    for (const std::string &u : internal) {
      auto it = vmap.find(u);
      if (it == vmap.end()) return;
      const std::string &x = it->second;
      if (x == vmap.at("v") || x == vmap.at("w")) return;
      if (!fresh_imgs.insert(x).second) return;
      if (incid_g.at(x) != incid_rule.at(u)) return;
    }
    Pattern p;
    for (std::size_t i = 0; i < rep.edges.size(); ++i) {
      p.edge_ids.push_back(g.edges[emap[i]].id);
      p.edge_map[rep.edges[i].id] = g.edges[emap[i]].id;
    }
    std::sort(p.edge_ids.begin(), p.edge_ids.end());
    p.v_img = vmap.at("v");
    p.w_img = vmap.at("w");
    found.emplace(std::tuple(p.edge_ids, p.v_img, p.w_img), std::move(p));
  };

  auto rec = [&](auto &&self, std::size_t i) -> void {
    if (i == rep.edges.size()) {
      at_leaf();
      return;
    }
    const GraphEdge &re = rep.edges[i];
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
      if (used[j]) continue;
      const GraphEdge &ge = g.edges[j];
      auto its = vmap.find(re.src);
      if (its != vmap.end() && its->second != ge.src) continue;
      auto itd = vmap.find(re.dst);
      if (itd != vmap.end() && itd->second != ge.dst) continue;
      const bool new_s = its == vmap.end();
      if (new_s) vmap[re.src] = ge.src;
      // Re-check dst after binding src (they may be the same rule vertex).
      auto itd2 = vmap.find(re.dst);
      const bool new_d = itd2 == vmap.end();
      if (new_d)
        vmap[re.dst] = ge.dst;
      else if (itd2->second != ge.dst) {
        if (new_s) vmap.erase(re.src);
        continue;
      }
      used[j] = 1;
      emap[i] = static_cast<int>(j);
      self(self, i + 1);
      used[j] = 0;
      emap[i] = -1;
      if (new_d) vmap.erase(re.dst);
      if (new_s) vmap.erase(re.src);
    }
  };
  rec(rec, 0);

  std::vector<Pattern> out;
  out.reserve(found.size());
  for (auto &[key, p] : found) out.push_back(std::move(p));
  return out;
}

std::optional<LabeledGraph> collapse_pattern(const RewriteRule &rule,
                                             const LabeledGraph &g,
                                             const Pattern &p) {
  check_rule(rule);
  // The pattern must consist of the children parent.rid of a single parent.
  std::string parent;
  for (const auto &[rid, gid] : p.edge_map) {
    const std::string tail = "." + rid;
    if (gid.size() <= tail.size() ||
        gid.compare(gid.size() - tail.size(), tail.size(), tail) != 0)
      return std::nullopt;
    const std::string head = gid.substr(0, gid.size() - tail.size());
    if (parent.empty())
      parent = head;
    else if (parent != head)
      return std::nullopt;
  }
  if (p.edge_map.size() != rule.replacement.edges.size()) return std::nullopt;
  LabeledGraph out;
  std::set<std::string> fresh;
  for (const std::string &rv : rule.replacement.vertices)
    if (rv != "v" && rv != "w") fresh.insert(parent + "." + rv);
  for (const std::string &v : g.vertices)
    if (!fresh.count(v)) out.vertices.push_back(v);
  std::set<std::string> drop(p.edge_ids.begin(), p.edge_ids.end());
  for (const GraphEdge &e : g.edges)
    if (!drop.count(e.id)) out.edges.push_back(e);
  out.edges.push_back({parent, p.v_img, p.w_img});
  return out;
}

SimplicialComplex reduction_complex(const RewriteRule &rule, const LabeledGraph &g) {
  const std::vector<Pattern> pats = find_patterns(rule, g);
  std::vector<std::string> labels;
  labels.reserve(pats.size());
  for (const Pattern &p : pats) {
    std::string s;
    for (const std::string &id : p.edge_ids) s += id + "+";
    s += p.v_img + ">" + p.w_img;
    labels.push_back(std::move(s));
  }
  std::vector<std::vector<char>> adj(pats.size(), std::vector<char>(pats.size(), 0));
  for (std::size_t i = 0; i < pats.size(); ++i)
    for (std::size_t j = i + 1; j < pats.size(); ++j) {
      std::vector<std::string> common;
      std::set_intersection(pats[i].edge_ids.begin(), pats[i].edge_ids.end(),
                            pats[j].edge_ids.begin(), pats[j].edge_ids.end(),
                            std::back_inserter(common));
      adj[i][j] = adj[j][i] = common.empty() ? 1 : 0;
    }
  return flag_complex_from_adjacency(std::move(labels), adj);
}

}  // namespace ore
