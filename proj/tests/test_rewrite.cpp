#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ore/homology.hpp"
#include "ore/rewrite.hpp"

using namespace ore;

namespace {

std::set<std::string> edge_ids(const LabeledGraph &g) {
  std::set<std::string> out;
  for (const GraphEdge &e : g.edges) out.insert(e.id);
  return out;
}

const Pattern *pattern_with_edges(const std::vector<Pattern> &ps,
                                  const std::vector<std::string> &ids) {
  for (const Pattern &p : ps)
    if (p.edge_ids == ids) return &p;
  return nullptr;
}

}  // namespace

TEST_CASE("builtin rules and graphs") {
  CHECK(builtin_rule_names() ==
        std::vector<std::string>{"L2", "D2", "basilica"});
  CHECK_THROWS_AS(builtin_rule("nope"), InvalidInput);
  CHECK(builtin_rule("basilica").replacement.edges.size() == 3);

  const LabeledGraph bas = basilica_graph();
  CHECK(graph_valid(bas));
  CHECK(graph_height(bas) == 4);
  CHECK(graph_height(bad_graph(1)) == 12);
  CHECK(graph_height(bad_graph(2)) == 14);
  CHECK(graph_height(bad_graph(3)) == 16);
  CHECK(bad_graph(3).vertices.size() == 8);
  CHECK_THROWS_AS(bad_graph(0), InvalidInput);

  LabeledGraph broken = bas;
  broken.edges.push_back({"z", "x", "ghost"});
  CHECK_FALSE(graph_valid(broken));
}

TEST_CASE("expansion introduces hereditary names") {
  const RewriteRule rule = builtin_rule("basilica");
  const LabeledGraph g = expand_edge(rule, basilica_graph(), "a");
  CHECK(graph_height(g) == 6);
  CHECK(std::count(g.vertices.begin(), g.vertices.end(), "a.u") == 1);
  const std::set<std::string> ids = edge_ids(g);
  CHECK(ids.count("a.1"));
  CHECK(ids.count("a.2"));
  CHECK(ids.count("a.3"));
  CHECK_FALSE(ids.count("a"));
  CHECK(ids.count("lx"));
  CHECK_THROWS_AS(expand_edge(rule, basilica_graph(), "zz"), InvalidInput);
}

TEST_CASE("expand then collapse is the identity") {
  for (const std::string &name : builtin_rule_names()) {
    const RewriteRule rule = builtin_rule(name);
    const LabeledGraph base = basilica_graph();
    for (const GraphEdge &e : base.edges) {
      const LabeledGraph big = expand_edge(rule, base, e.id);
      std::vector<std::string> children;
      for (const GraphEdge &re : rule.replacement.edges)
        children.push_back(e.id + "." + re.id);
      std::sort(children.begin(), children.end());
      const auto patterns = find_patterns(rule, big);
      const Pattern *p = pattern_with_edges(patterns, children);
      REQUIRE(p != nullptr);
      const auto back = collapse_pattern(rule, big, *p);
      REQUIRE(back.has_value());
      CHECK(graph_equal(*back, base));
    }
  }
}

TEST_CASE("patterns demand exact degrees at internal vertices") {
  const RewriteRule rule = builtin_rule("basilica");
  const auto ps = find_patterns(rule, basilica_graph());
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].edge_ids == std::vector<std::string>{"a", "b", "lx"});
  CHECK(ps[0].v_img == "y");
  CHECK(ps[0].w_img == "y");
  CHECK(ps[1].edge_ids == std::vector<std::string>{"a", "b", "ly"});
  CHECK(ps[1].v_img == "x");
  CHECK(ps[1].w_img == "x");

  // hanging an extra edge off the internal vertex kills the pattern
  LabeledGraph big = expand_edge(rule, basilica_graph(), "a");
  big.edges.push_back({"z", "a.u", "x"});
  CHECK(pattern_with_edges(find_patterns(rule, big),
                           {"a.1", "a.2", "a.3"}) == nullptr);

  // patterns that are not children of one edge do not collapse
  const auto stray = find_patterns(rule, bad_graph(1));
  REQUIRE(!stray.empty());
  CHECK_FALSE(collapse_pattern(rule, bad_graph(1), stray[0]).has_value());
}

TEST_CASE("reduction complexes") {
  const RewriteRule rule = builtin_rule("basilica");
  // the two basilica patterns share edges a and b: two isolated vertices
  const SimplicialComplex rb = reduction_complex(rule, basilica_graph());
  CHECK(f_vector(rb) == std::vector<std::int64_t>{2});

  for (int chain = 1; chain <= 3; ++chain) {
    const SimplicialComplex rc = reduction_complex(rule, bad_graph(chain));
    CHECK(f_vector(rc) == std::vector<std::int64_t>{4, 4});
    CHECK(is_flag(rc));
    const auto h = reduced_homology(rc, 1);
    CHECK(h[0].trivial());
    CHECK(h[1].rank == 1);
    CHECK(h[1].torsion.empty());
  }
}

TEST_CASE("expansion morphisms: validity, sources, composition") {
  const RewriteRule rule = builtin_rule("basilica");
  const LabeledGraph base = basilica_graph();

  const RewriteMorphism ma{base, {"a"}};
  CHECK(morphism_valid(rule, ma));
  CHECK(graph_equal(rewrite_source(rule, ma), expand_edge(rule, base, "a")));
  CHECK(morphism_valid(rule, RewriteMorphism{base, {}}));
  CHECK(graph_equal(rewrite_source(rule, RewriteMorphism{base, {}}), base));
  CHECK_FALSE(morphism_valid(rule, RewriteMorphism{base, {"a.1"}}));
  CHECK(morphism_valid(rule, RewriteMorphism{base, {"a", "a.1"}}));
  CHECK_FALSE(morphism_valid(rule, RewriteMorphism{base, {"zz"}}));

  const RewriteMorphism g{rewrite_source(rule, ma), {"b", "a.1"}};
  CHECK(morphism_valid(rule, g));
  const RewriteMorphism fg = rewrite_compose(rule, ma, g);
  CHECK(fg.addresses == std::set<std::string>{"a", "a.1", "b"});
  CHECK(graph_equal(fg.base, base));
  CHECK(morphism_valid(rule, fg));
  CHECK(graph_equal(rewrite_source(rule, fg), rewrite_source(rule, g)));

  // composing with a mismatched middle object is rejected
  CHECK_THROWS_AS(rewrite_compose(rule, ma, RewriteMorphism{base, {"b"}}),
                  InvalidInput);
}

TEST_CASE("lcm and gcd act on expansion sets") {
  const RewriteRule rule = builtin_rule("basilica");
  const LabeledGraph base = basilica_graph();
  const RewriteMorphism a{base, {"a", "a.2"}};
  const RewriteMorphism b{base, {"a", "b"}};
  const RewriteMorphism l = rewrite_lcm(a, b);
  const RewriteMorphism g = rewrite_gcd(a, b);
  CHECK(l.addresses == std::set<std::string>{"a", "a.2", "b"});
  CHECK(g.addresses == std::set<std::string>{"a"});
  CHECK(morphism_valid(rule, l));
  CHECK(morphism_valid(rule, g));
  CHECK(morphism_eq(rewrite_lcm(b, a), l));
}

TEST_CASE("graph automorphism groups") {
  CHECK(graph_automorphisms(basilica_graph()).size() == 2);
  CHECK(graph_automorphisms(bad_graph(1)).size() == 2);

  const LabeledGraph cyc{{"1", "2", "3"},
                         {{"e1", "1", "2"}, {"e2", "2", "3"}, {"e3", "3", "1"}}};
  CHECK(graph_automorphisms(cyc).size() == 3);

  const LabeledGraph dbl{{"v", "w"}, {{"e1", "v", "w"}, {"e2", "v", "w"}}};
  CHECK(graph_automorphisms(dbl).size() == 2);

  const LabeledGraph loop{{"v"}, {{"l", "v", "v"}}};
  CHECK(graph_automorphisms(loop).size() == 1);

  for (const GraphIso &g : graph_automorphisms(basilica_graph())) {
    CHECK(iso_valid(basilica_graph(), iso_apply(g, basilica_graph()), g));
    CHECK(iso_compose(g, iso_inverse(g)) == iso_identity(basilica_graph()));
  }
}

TEST_CASE("base isomorphisms act on morphisms and clone upstairs") {
  const RewriteRule rule = builtin_rule("basilica");
  const LabeledGraph base = basilica_graph();
  GraphIso swap;
  for (const auto &g : graph_automorphisms(base))
    if (g.vertex_map.at("x") == "y") swap = g;
  REQUIRE(swap.vertex_map.at("x") == "y");
  CHECK(swap.edge_map.at("a") == "b");
  CHECK(swap.edge_map.at("lx") == "ly");

  const RewriteMorphism m{base, {"a"}};
  const RewriteMorphism moved = iso_act(swap, m);
  CHECK(moved.addresses == std::set<std::string>{"b"});
  CHECK(graph_equal(moved.base, base));

  const GraphIso up = iso_clone(rule, swap, m);
  CHECK(iso_valid(rewrite_source(rule, m), rewrite_source(rule, moved), up));
  CHECK(up.vertex_map.at("a.u") == "b.u");

  // deeper addresses transport too
  const RewriteMorphism m2{base, {"a", "a.3"}};
  const RewriteMorphism moved2 = iso_act(swap, m2);
  CHECK(moved2.addresses == std::set<std::string>{"b", "b.3"});
  CHECK(iso_valid(rewrite_source(rule, m2), rewrite_source(rule, moved2),
                  iso_clone(rule, swap, m2)));
}

TEST_CASE("indirect-product axioms hold over graph expansions") {
  CHECK(check_graph_ip_axioms(builtin_rule("basilica"), basilica_graph(), 2)
            .all_pass());
  const LabeledGraph dbl{{"v", "w"}, {{"e1", "v", "w"}, {"e2", "v", "w"}}};
  CHECK(check_graph_ip_axioms(builtin_rule("L2"), dbl, 2).all_pass());
  CHECK(check_graph_ip_axioms(builtin_rule("D2"), dbl, 2).all_pass());
}
