#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ore/complex.hpp"
#include "ore/report.hpp"

namespace ore {

struct GraphEdge {
  std::string id, src, dst;
  auto operator<=>(const GraphEdge &) const = default;
};

// Directed multigraph with hereditary edge ids: expanding edge e introduces
// child edges e.1, e.2, ... and fresh vertices e.u, so every name records
// its own derivation history.
struct LabeledGraph {
  std::vector<std::string> vertices;
  std::vector<GraphEdge> edges;
};

bool graph_valid(const LabeledGraph &g);
// Equality up to reordering of the vertex and edge lists (names literal).
bool graph_equal(const LabeledGraph &a, const LabeledGraph &b);
int graph_height(const LabeledGraph &g);  // edge count

// A rewriting rule: an edge v -> w is replaced by `replacement`, whose
// boundary vertices are literally "v" and "w"; all other vertices are
// internal and created fresh at each expansion.  Replacement edge ids
// ("1", "2", ...) name the children of the expanded edge.
struct RewriteRule {
  std::string name;
  LabeledGraph replacement;
};

RewriteRule builtin_rule(const std::string &name);  // "L2", "D2", "basilica"
std::vector<std::string> builtin_rule_names();

LabeledGraph basilica_graph();
// Two loop-bearing 3-cycles joined by a chain of `chain` 2-cycles.
LabeledGraph bad_graph(int chain);

LabeledGraph expand_edge(const RewriteRule &rule, const LabeledGraph &g,
                         const std::string &edge_id);

// A morphism of the expansion category: the target (base) graph together
// with the ancestor-closed set of edge ids that were expanded.  The source
// object is the fully expanded graph.
struct RewriteMorphism {
  LabeledGraph base;
  std::set<std::string> addresses;
};

bool morphism_valid(const RewriteRule &rule, const RewriteMorphism &m);
LabeledGraph rewrite_source(const RewriteRule &rule, const RewriteMorphism &m);
bool morphism_eq(const RewriteMorphism &a, const RewriteMorphism &b);
// f ∘ g (g acts first): g's base must equal f's source graph.
RewriteMorphism rewrite_compose(const RewriteRule &rule, const RewriteMorphism &f,
                                const RewriteMorphism &g);
// Least common multiple / greatest common divisor over a shared base:
// union / intersection of the expansion sets.
RewriteMorphism rewrite_lcm(const RewriteMorphism &a, const RewriteMorphism &b);
RewriteMorphism rewrite_gcd(const RewriteMorphism &a, const RewriteMorphism &b);

// Graph isomorphisms: the units of the expansion groupoid.
struct GraphIso {
  std::map<std::string, std::string> vertex_map, edge_map;
  bool operator==(const GraphIso &) const = default;
};

bool iso_valid(const LabeledGraph &a, const LabeledGraph &b, const GraphIso &g);
GraphIso iso_identity(const LabeledGraph &g);
GraphIso iso_compose(const GraphIso &a, const GraphIso &b);  // a ∘ b
GraphIso iso_inverse(const GraphIso &g);
LabeledGraph iso_apply(const GraphIso &g, const LabeledGraph &a);
std::vector<GraphIso> graph_automorphisms(const LabeledGraph &g);

// Indirect-product structure: a base iso acts on a morphism by renaming the
// base letters of its addresses (and transporting the base graph); the
// cloned unit is the induced iso of the source graphs.
RewriteMorphism iso_act(const GraphIso &g, const RewriteMorphism &m);
GraphIso iso_clone(const RewriteRule &rule, const GraphIso &g,
                   const RewriteMorphism &m);

// Checks the indirect-product axioms on all expansions of `base` up to
// `depth` single-edge steps, with graph automorphisms as the units.
Report check_graph_ip_axioms(const RewriteRule &rule, const LabeledGraph &base,
                             int depth);

// An embedded copy of the replacement graph that collapsing one edge could
// have produced: edge-injective, internal vertices fresh and degree-exact,
// boundary images arbitrary (v_img may equal w_img).
struct Pattern {
  std::vector<std::string> edge_ids;                   // sorted
  std::map<std::string, std::string> edge_map;         // replacement id -> image
  std::string v_img, w_img;
};

std::vector<Pattern> find_patterns(const RewriteRule &rule, const LabeledGraph &g);
// Undo an expansion: defined when the pattern's edges are exactly the
// children e.1 .. e.k of a single id e.
std::optional<LabeledGraph> collapse_pattern(const RewriteRule &rule,
                                             const LabeledGraph &g,
                                             const Pattern &p);

// Descending complex of reductions: vertices are the patterns, simplices
// the pairwise edge-disjoint families.
SimplicialComplex reduction_complex(const RewriteRule &rule, const LabeledGraph &g);

}  // namespace ore
