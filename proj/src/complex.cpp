#include "ore/complex.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "ore/common.hpp"
#include "ore/zs.hpp"

namespace ore {

namespace {

std::string brace_label(int a, int b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

std::string pair_label(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Maximal cliques (Bron-Kerbosch with pivoting); deterministic order.
void bron_kerbosch(const std::vector<std::vector<char>> &adj, std::vector<int> &r,
                   std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>> &out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  for (const auto *side : {&p, &x})
    for (int v : *side) {
      int cnt = 0;
      for (int w : p) cnt += adj[v][w];
      if (cnt > best) {
        best = cnt;
        pivot = v;
      }
    }
  std::vector<int> cand;
  for (int v : p)
    if (!adj[pivot][v]) cand.push_back(v);
  for (int v : cand) {
    std::vector<int> p2, x2;
    for (int w : p)
      if (adj[v][w]) p2.push_back(w);
    for (int w : x)
      if (adj[v][w]) x2.push_back(w);
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

void subsets_of_size(const std::vector<int> &facet, int k, std::size_t from,
                     std::vector<int> &cur, std::set<std::vector<int>> &out) {
  if (static_cast<int>(cur.size()) == k) {
    out.insert(cur);
    return;
  }
  for (std::size_t i = from; i < facet.size(); ++i) {
    cur.push_back(facet[i]);
    subsets_of_size(facet, k, i + 1, cur, out);
    cur.pop_back();
  }
}

bool supports_disjoint(const Arc &x, const Arc &y) {
  return x.from != y.from && x.from != y.to && x.to != y.from && x.to != y.to;
}

SimplicialComplex complex_from_arcs(const std::vector<Arc> &arcs) {
  std::vector<std::string> labels;
  labels.reserve(arcs.size());
  for (const Arc &a : arcs) labels.push_back(pair_label(a.from, a.to));
  std::vector<std::vector<char>> adj(arcs.size(), std::vector<char>(arcs.size(), 0));
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      adj[i][j] = adj[j][i] = supports_disjoint(arcs[i], arcs[j]) ? 1 : 0;
  return flag_complex_from_adjacency(std::move(labels), adj);
}

std::vector<std::vector<char>> adjacency_of(const SimplicialComplex &x) {
  const int n = static_cast<int>(x.labels.size());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto &facet : x.facets)
    for (std::size_t i = 0; i < facet.size(); ++i)
      for (std::size_t j = i + 1; j < facet.size(); ++j)
        adj[facet[i]][facet[j]] = adj[facet[j]][facet[i]] = 1;
  return adj;
}

std::vector<Arc> family_arcs(Family f, int n) {
  std::vector<Arc> arcs;
  switch (f) {
    case Family::F:
      for (int i = 1; i < n; ++i) arcs.push_back({i, i + 1});
      break;
    case Family::T:
      if (n >= 2)
        for (int a = 1; a <= n; ++a) arcs.push_back({a, a % n + 1});
      break;
    default:  // Family::V
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          if (a != b) arcs.push_back({a, b});
      break;
  }
  return arcs;
}

}  // namespace

SimplicialComplex flag_complex_from_adjacency(std::vector<std::string> labels,
                                              const std::vector<std::vector<char>> &adj) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> facets;
  std::vector<int> r;
  if (n > 0) bron_kerbosch(adj, r, std::move(p), {}, facets);
  for (auto &f : facets) std::sort(f.begin(), f.end());
  std::sort(facets.begin(), facets.end());
  return {std::move(labels), std::move(facets)};
}

int complex_dimension(const SimplicialComplex &x) {
  int d = -1;
  for (const auto &f : x.facets) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<std::vector<std::vector<int>>> simplices_by_dim(
    const SimplicialComplex &x, int max_dim) {
  int top = complex_dimension(x);
  if (max_dim >= 0) top = std::min(top, max_dim);
  std::vector<std::vector<std::vector<int>>> result;
  if (top < 0) return result;
  result.resize(top + 1);
  for (int d = 0; d <= top; ++d) {
    std::set<std::vector<int>> seen;
    std::vector<int> cur;
    for (const auto &facet : x.facets)
      if (static_cast<int>(facet.size()) >= d + 1)
        subsets_of_size(facet, d + 1, 0, cur, seen);
    result[d].assign(seen.begin(), seen.end());
  }
  return result;
}

std::vector<std::int64_t> f_vector(const SimplicialComplex &x) {
  std::vector<std::int64_t> f;
  for (const auto &level : simplices_by_dim(x, -1))
    f.push_back(static_cast<std::int64_t>(level.size()));
  return f;
}

bool is_simplex(const SimplicialComplex &x, std::vector<int> simplex) {
  std::sort(simplex.begin(), simplex.end());
  if (std::adjacent_find(simplex.begin(), simplex.end()) != simplex.end())
    return false;
  if (simplex.empty()) return true;
  for (const auto &facet : x.facets)
    if (std::includes(facet.begin(), facet.end(), simplex.begin(), simplex.end()))
      return true;
  return false;
}

bool is_flag(const SimplicialComplex &x) {
  const int n = static_cast<int>(x.labels.size());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto &facet : x.facets)
    for (std::size_t i = 0; i < facet.size(); ++i)
      for (std::size_t j = i + 1; j < facet.size(); ++j)
        adj[facet[i]][facet[j]] = adj[facet[j]][facet[i]] = 1;
  std::set<std::vector<int>> used;  // vertices of the complex
  for (const auto &facet : x.facets)
    for (int v : facet) used.insert({v});
  std::vector<int> verts;
  for (const auto &s : used) verts.push_back(s[0]);
  std::vector<std::vector<int>> cliques;
  std::vector<int> r;
  if (!verts.empty()) bron_kerbosch(adj, r, std::move(verts), {}, cliques);
  for (auto &c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());
  std::vector<std::vector<int>> facets = x.facets;
  for (auto &f : facets) std::sort(f.begin(), f.end());
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return cliques == facets;
}

SimplicialComplex complex_from_simplices(std::vector<std::string> labels,
                                         std::vector<std::vector<int>> simplices) {
  for (auto &s : simplices) std::sort(s.begin(), s.end());
  std::sort(simplices.begin(), simplices.end(),
            [](const std::vector<int> &a, const std::vector<int> &b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  std::vector<std::vector<int>> facets;
  for (const auto &s : simplices) {
    bool covered = false;
    for (const auto &f : facets)
      if (std::includes(f.begin(), f.end(), s.begin(), s.end())) {
        covered = true;
        break;
      }
    if (!covered) facets.push_back(s);
  }
  std::sort(facets.begin(), facets.end());
  return {std::move(labels), std::move(facets)};
}

int find_vertex(const SimplicialComplex &x, const std::string &label) {
  for (std::size_t i = 0; i < x.labels.size(); ++i)
    if (x.labels[i] == label) return static_cast<int>(i);
  return -1;
}

bool is_isomorphism(const SimplicialComplex &a, const SimplicialComplex &b,
                    const std::vector<int> &vertex_map) {
  const int n = static_cast<int>(a.labels.size());
  if (static_cast<int>(b.labels.size()) != n) return false;
  if (static_cast<int>(vertex_map.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int v : vertex_map) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  std::vector<std::vector<int>> lhs;
  for (const auto &f : a.facets) {
    std::vector<int> g;
    g.reserve(f.size());
    for (int v : f) g.push_back(vertex_map[v]);
    std::sort(g.begin(), g.end());
    lhs.push_back(std::move(g));
  }
  std::sort(lhs.begin(), lhs.end());
  std::vector<std::vector<int>> rhs = b.facets;
  for (auto &f : rhs) std::sort(f.begin(), f.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

SimpleGraph path_graph(int n) {
  if (n < 1) throw InvalidInput("path_graph: need at least one vertex");
  SimpleGraph g{n, {}};
  for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle_graph: need at least three vertices");
  SimpleGraph g{n, {}};
  for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
  g.edges.emplace_back(1, n);
  return g;
}

SimpleGraph complete_graph(int n) {
  if (n < 1) throw InvalidInput("complete_graph: need at least one vertex");
  SimpleGraph g{n, {}};
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) g.edges.emplace_back(a, b);
  return g;
}

namespace {

struct MatchingSearch {
  const SimpleGraph &g;
  std::vector<std::vector<std::pair<int, int>>> nbr;  // vertex -> (other, edge idx)
  std::vector<char> covered, banned;
  std::vector<int> cur;
  std::vector<std::vector<int>> out;
  std::uint64_t used = 0;

  explicit MatchingSearch(const SimpleGraph &graph) : g(graph) {
    nbr.assign(g.n + 1, {});
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto [a, b] = g.edges[e];
      if (a < 1 || b < 1 || a > g.n || b > g.n || a == b)
        throw InvalidInput("maximal_matchings: bad edge");
      nbr[a].emplace_back(b, static_cast<int>(e));
      nbr[b].emplace_back(a, static_cast<int>(e));
    }
    covered.assign(g.n + 1, 0);
    banned.assign(g.n + 1, 0);
  }

  bool maximal() const {
    for (auto [a, b] : g.edges)
      if (!covered[a] && !covered[b]) return false;
    return true;
  }

  void recurse(int v) {
    while (v <= g.n && covered[v]) ++v;
    if (v > g.n) {
      charge_budget(used, 1, "matching enumeration");
      if (maximal()) {
        std::vector<int> m = cur;
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
      }
      return;
    }
    banned[v] = 1;
    recurse(v + 1);
    banned[v] = 0;
    for (auto [w, e] : nbr[v]) {
      if (covered[w] || banned[w]) continue;
      covered[v] = covered[w] = 1;
      cur.push_back(e);
      recurse(v + 1);
      cur.pop_back();
      covered[v] = covered[w] = 0;
    }
  }
};

}  // namespace

std::vector<std::vector<int>> maximal_matchings(const SimpleGraph &g) {
  MatchingSearch search(g);
  if (g.n >= 1) search.recurse(1);
  std::sort(search.out.begin(), search.out.end());
  return search.out;
}

SimplicialComplex matching_complex(const SimpleGraph &g) {
  std::vector<std::string> labels;
  labels.reserve(g.edges.size());
  for (auto [a, b] : g.edges) labels.push_back(brace_label(a, b));
  std::vector<std::vector<int>> facets = maximal_matchings(g);
  // An edgeless graph has only the empty matching; the complex is empty.
  std::erase_if(facets, [](const std::vector<int> &m) { return m.empty(); });
  return {std::move(labels), std::move(facets)};
}

SimplicialComplex oriented_matching_complex(int n) {
  std::vector<Arc> arcs;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (a != b) arcs.push_back({a, b});
  return complex_from_arcs(arcs);
}

std::vector<Arc> descent_arcs(const Forest &e, const Unit &u) {
  if (e.arity != 2) throw InvalidInput("descent_arcs: binary forests only");
  if (!is_elementary(e)) throw InvalidInput("descent_arcs: forest must be elementary");
  if (e.leaves() != u.degree)
    throw InvalidInput("descent_arcs: unit degree must match the leaf count");
  Permutation pinv = perm_inverse(unit_perm(u));
  std::vector<Arc> arcs;
  int off = 0;
  for (int c : tree_leaf_counts(e)) {
    if (c == 2) arcs.push_back({pinv(off + 1), pinv(off + 2)});
    off += c;
  }
  return arcs;
}

SimplicialComplex descending_complex(Family f, int n) {
  if (family_braided(f))
    throw InvalidInput("descending_complex: coarse models cover F, T, V");
  if (n < 1) throw InvalidInput("descending_complex: need a positive object");
  return complex_from_arcs(family_arcs(f, n));
}

bool same_descent_class(const Element &m, const Element &mp) {
  Element z = frac_mul(mp, frac_inv(m));
  return z.num.is_identity() && z.den.is_identity();
}

namespace {

struct DescentClasses {
  std::vector<std::vector<Arc>> keys;  // sorted arc families, (size, lex) order
  std::vector<Element> reps;           // one representative descent per class
};

// Enumerates every elementary descent (e, u) from the object, groups them by
// the arc invariant, and certifies with the fraction groupoid that the
// grouping is exactly unit-coset equality.
DescentClasses descent_classes_certified(Family f, int n) {
  if (family_braided(f))
    throw InvalidInput("descent classes: coarse models cover F, T, V");
  if (n < 1) throw InvalidInput("descent classes: need a positive object");
  std::vector<Forest> elems;
  for (const Forest &e : enumerate_elementary(2, n))
    if (e.carets() > 0) elems.push_back(e);
  std::vector<Unit> units = enumerate_units(f, n, 0);
  std::uint64_t used = 0;
  charge_budget(used, elems.size() * units.size(), "descent enumeration");

  std::map<std::vector<Arc>, std::vector<Element>> classes;
  const Forest id_den = identity_forest(2, n);
  for (const Forest &e : elems)
    for (const Unit &u : units) {
      std::vector<Arc> key = descent_arcs(e, u);
      std::sort(key.begin(), key.end());
      classes[key].push_back(make_element(f, e, u, id_den, false));
    }
  for (const auto &[key, members] : classes)
    for (std::size_t i = 1; i < members.size(); ++i)
      if (!same_descent_class(members[0], members[i]))
        throw std::logic_error("descent arc invariant is not complete");

  DescentClasses out;
  for (auto &[key, members] : classes) {
    out.keys.push_back(key);
    out.reps.push_back(std::move(members[0]));
  }
  std::vector<std::size_t> order(out.keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (out.keys[a].size() != out.keys[b].size())
      return out.keys[a].size() < out.keys[b].size();
    return out.keys[a] < out.keys[b];
  });
  DescentClasses sorted;
  for (std::size_t i : order) {
    sorted.keys.push_back(std::move(out.keys[i]));
    sorted.reps.push_back(std::move(out.reps[i]));
  }
  for (std::size_t i = 0; i < sorted.keys.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.keys.size(); ++j) {
      if (sorted.keys[i].size() != sorted.keys[j].size()) continue;
      if (same_descent_class(sorted.reps[i], sorted.reps[j]))
        throw std::logic_error("descent arc invariant is not sound");
    }
  return sorted;
}

}  // namespace

SimplicialComplex descending_complex_bruteforce(Family f, int n) {
  DescentClasses classes = descent_classes_certified(f, n);

  // Vertices are the one-caret classes; every class names a simplex.
  std::map<Arc, int> vertex_of;
  std::vector<std::string> labels;
  for (const auto &key : classes.keys)
    if (key.size() == 1 && !vertex_of.count(key[0])) {
      vertex_of[key[0]] = static_cast<int>(labels.size());
      labels.push_back(pair_label(key[0].from, key[0].to));
    }
  std::vector<std::vector<int>> simplices;
  for (const auto &key : classes.keys) {
    std::vector<int> s;
    for (const Arc &a : key) {
      auto it = vertex_of.find(a);
      if (it == vertex_of.end())
        throw std::logic_error("descent face is missing its vertex class");
      s.push_back(it->second);
    }
    simplices.push_back(std::move(s));
  }
  return complex_from_simplices(std::move(labels), std::move(simplices));
}

DescentPoset descent_poset(Family f, int n) {
  if (family_braided(f))
    throw InvalidInput("descent_poset: coarse models cover F, T, V");
  if (n < 1) throw InvalidInput("descent_poset: need a positive object");
  const std::vector<Arc> arcs = family_arcs(f, n);
  const SimplicialComplex x = complex_from_arcs(arcs);

  DescentPoset p;
  for (const auto &level : simplices_by_dim(x, -1))
    for (const auto &sigma : level) {
      std::vector<Arc> family;
      family.reserve(sigma.size());
      for (int v : sigma) family.push_back(arcs[v]);
      std::sort(family.begin(), family.end());
      if (family.size() == 1) p.atoms.push_back(static_cast<int>(p.elements.size()));
      p.elements.push_back(std::move(family));
    }
  const int m = static_cast<int>(p.elements.size());
  p.less.assign(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (p.elements[i].size() >= p.elements[j].size()) continue;
      p.less[i][j] = std::includes(p.elements[j].begin(), p.elements[j].end(),
                                   p.elements[i].begin(), p.elements[i].end())
                         ? 1
                         : 0;
    }
  return p;
}

DescentPoset descent_poset_bruteforce(Family f, int n) {
  DescentClasses classes = descent_classes_certified(f, n);
  DescentPoset p;
  p.elements = classes.keys;
  for (std::size_t i = 0; i < p.elements.size(); ++i)
    if (p.elements[i].size() == 1) p.atoms.push_back(static_cast<int>(i));

  // a < b iff b divided by a is a genuine category morphism with a non-unit
  // elementary forest part; decided on representatives, independently of the
  // arc families.
  const int m = static_cast<int>(p.elements.size());
  p.less.assign(m, std::vector<char>(m, 0));
#pragma omp parallel for schedule(dynamic) if (m > 32)
  for (int i = 0; i < m; ++i) {
    const Element inv_i = frac_inv(classes.reps[i]);
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      const Element z = frac_mul(classes.reps[j], inv_i);
      p.less[i][j] = z.den.is_identity() && z.num.carets() > 0 &&
                             is_elementary(z.num)
                         ? 1
                         : 0;
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (p.less[i][j] && p.less[j][i])
        throw std::logic_error("descent order is not antisymmetric");
  return p;
}

std::vector<std::int64_t> poset_chain_counts(const DescentPoset &p) {
  const int m = static_cast<int>(p.elements.size());
  // Elements are listed by size and the order only increases size, so index
  // order is topological; ways[j][L] counts chains of L+1 elements ending at j.
  std::vector<std::vector<std::int64_t>> ways(m);
  for (int j = 0; j < m; ++j) {
    ways[j] = {1};
    for (int i = 0; i < j; ++i) {
      if (!p.less[i][j]) continue;
      if (ways[j].size() < ways[i].size() + 1) ways[j].resize(ways[i].size() + 1, 0);
      for (std::size_t len = 0; len < ways[i].size(); ++len)
        ways[j][len + 1] += ways[i][len];
    }
  }
  std::vector<std::int64_t> counts;
  for (int j = 0; j < m; ++j) {
    if (counts.size() < ways[j].size()) counts.resize(ways[j].size(), 0);
    for (std::size_t len = 0; len < ways[j].size(); ++len)
      counts[len] += ways[j][len];
  }
  return counts;
}

std::vector<std::int64_t> face_chain_counts(const SimplicialComplex &x) {
  std::vector<std::vector<int>> faces;
  for (const auto &level : simplices_by_dim(x, -1))
    for (const auto &sigma : level) faces.push_back(sigma);
  const int m = static_cast<int>(faces.size());
  std::vector<std::vector<std::int64_t>> ways(m);
  for (int j = 0; j < m; ++j) {
    ways[j] = {1};
    for (int i = 0; i < j; ++i) {
      if (faces[i].size() >= faces[j].size()) continue;
      if (!std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(),
                         faces[i].end()))
        continue;
      if (ways[j].size() < ways[i].size() + 1) ways[j].resize(ways[i].size() + 1, 0);
      for (std::size_t len = 0; len < ways[i].size(); ++len)
        ways[j][len + 1] += ways[i][len];
    }
  }
  std::vector<std::int64_t> counts;
  for (int j = 0; j < m; ++j) {
    if (counts.size() < ways[j].size()) counts.resize(ways[j].size(), 0);
    for (std::size_t len = 0; len < ways[j].size(); ++len)
      counts[len] += ways[j][len];
  }
  return counts;
}

EComplex build_E(Family f, int n, int v_bound) {
  if (f == Family::V && n > v_bound)
    throw BudgetExceeded("build_E: object exceeds the permutation-family bound");
  return {descent_poset(f, n), descending_complex(f, n)};
}

FiberReport e_to_matching_fibers(const SimplicialComplex &ev, int n) {
  if (n < 2) throw InvalidInput("e_to_matching_fibers: need at least two points");
  FiberReport rep;
  const SimplicialComplex mk = matching_complex(complete_graph(n));

  rep.vertex_map.assign(ev.labels.size(), -1);
  std::vector<std::array<int, 2>> lifts_of(mk.labels.size(), {-1, -1});
  for (std::size_t v = 0; v < ev.labels.size(); ++v) {
    int a = 0, b = 0;
    if (std::sscanf(ev.labels[v].c_str(), "(%d,%d)", &a, &b) != 2)
      throw InvalidInput("e_to_matching_fibers: vertices must be ordered pairs");
    const int img = find_vertex(mk, brace_label(std::min(a, b), std::max(a, b)));
    if (img < 0) throw InvalidInput("e_to_matching_fibers: pair out of range");
    rep.vertex_map[v] = img;
    lifts_of[img][a < b ? 0 : 1] = static_cast<int>(v);
  }

  rep.simplicial = true;
  for (const auto &facet : ev.facets) {
    std::vector<int> image;
    for (int v : facet) image.push_back(rep.vertex_map[v]);
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end() ||
        !is_simplex(mk, image))
      rep.simplicial = false;
  }
  rep.surjective = true;
  for (const auto &pair : lifts_of)
    if (pair[0] < 0 || pair[1] < 0) rep.surjective = false;

  rep.fibers_spherical = rep.surjective;
  if (rep.fibers_spherical)
    for (const auto &level : simplices_by_dim(mk, -1))
      for (const auto &tau : level) {
        ++rep.simplices_checked;
        const std::size_t count = std::size_t{1} << tau.size();
        for (std::size_t mask = 0; mask < count; ++mask) {
          std::vector<int> lift;
          for (std::size_t t = 0; t < tau.size(); ++t)
            lift.push_back(lifts_of[tau[t]][(mask >> t) & 1]);
          ++rep.lifts_checked;
          if (!is_simplex(ev, lift)) rep.fibers_spherical = false;
        }
      }
  return rep;
}

SimplicialComplex descending_link_of_tree(const Forest &tree) {
  if (tree.arity != 2 || tree.roots != 1)
    throw InvalidInput("descending_link_of_tree: need a single binary tree");
  const int n = tree.leaves();
  if (n < 2) return {{}, {}};
  // Vertex i is the fraction tree ∘ λ_i⁻¹, the λ-caret merging leaves i, i+1.
  std::vector<Element> verts;
  std::vector<int> pos;
  const Unit id_unit = unit_identity(Family::F, n);
  for (int i = 1; i <= n - 1; ++i) {
    Element v = make_element(Family::F, tree, id_unit, single_caret(2, n - 1, i), false);
    bool fresh = true;
    for (const Element &w : verts)
      if (frac_eq(w, v)) {
        fresh = false;
        break;
      }
    if (fresh) {
      verts.push_back(std::move(v));
      pos.push_back(i);
    }
  }
  std::vector<std::string> labels;
  for (int i : pos) labels.push_back(pair_label(i, i + 1));
  std::vector<std::vector<char>> adj(pos.size(), std::vector<char>(pos.size(), 0));
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j)
      adj[i][j] = adj[j][i] = std::abs(pos[i] - pos[j]) >= 2 ? 1 : 0;
  return flag_complex_from_adjacency(std::move(labels), adj);
}

SimplicialComplex sublevel_complex(int bound) {
  if (bound < 2) return {{}, {}};
  std::vector<Forest> verts;
  for (int leaves = 1; leaves < bound; ++leaves)
    for (const Forest &t : all_trees(2, leaves)) verts.push_back(t);
  const int n = static_cast<int>(verts.size());
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const Forest &t : verts) labels.push_back(forest_to_text(t));
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || verts[i].word == verts[j].word) continue;
      if (!left_divides(verts[i], verts[j])) continue;
      if (is_elementary(left_quotient(verts[i], verts[j]))) adj[i][j] = adj[j][i] = 1;
    }
  return flag_complex_from_adjacency(std::move(labels), adj);
}

std::vector<Forest> divisibility_interval(const Forest &lo, const Forest &hi) {
  if (!left_divides(lo, hi))
    throw InvalidInput("divisibility_interval: lower bound must divide upper bound");
  const Forest q = left_quotient(lo, hi);
  const CaretSet q_carets = carets_of(q);
  std::vector<NodeAddress> carets(q_carets.begin(), q_carets.end());
  std::vector<Forest> out;
  std::set<NodeAddress> picked;
  auto parent_ok = [&](const NodeAddress &a) {
    if (a.path.empty()) return true;
    NodeAddress p = a;
    p.path.pop_back();
    return picked.count(p) > 0;
  };
  // Carets are visited in preorder, so a parent precedes its children and the
  // ancestor-closed subsets are exactly the reachable `picked` sets.
  auto rec = [&](auto &&self, std::size_t i) -> void {
    if (i == carets.size()) {
      out.push_back(compose(lo, forest_from_carets(2, q.roots, picked)));
      return;
    }
    self(self, i + 1);
    if (parent_ok(carets[i])) {
      picked.insert(carets[i]);
      self(self, i + 1);
      picked.erase(carets[i]);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Forest &a, const Forest &b) {
    return std::pair(a.carets(), a.word) < std::pair(b.carets(), b.word);
  });
  return out;
}

GroundedCertificate grounded_connectivity(const SimplicialComplex &x) {
  GroundedCertificate cert;
  auto levels = simplices_by_dim(x, -1);
  if (levels.empty()) return cert;  // empty complex: no claim beyond -2
  cert.connectivity = -1;           // nonempty

  const std::vector<std::vector<char>> adj = adjacency_of(x);
  std::vector<int> verts;
  for (const auto &s : levels[0]) verts.push_back(s[0]);

  for (const auto &level : levels)
    for (const auto &sigma : level) {
      int k = 0;
      for (int v : verts) {
        int miss = 0;
        for (int w : sigma)
          if (w != v && !adj[v][w]) ++miss;
        k = std::max(k, miss);
      }
      const int dim = static_cast<int>(sigma.size()) - 1;
      if (k == 0) {
        // Every vertex is adjacent to all of sigma: the complex is a cone.
        cert.contractible = true;
        cert.connectivity = std::numeric_limits<int>::max();
        cert.witness = sigma;
        cert.witness_miss = 0;
        return cert;
      }
      const int claim = dim / k - 1;
      if (claim > cert.connectivity) {
        cert.connectivity = claim;
        cert.witness = sigma;
        cert.witness_miss = k;
      }
    }
  return cert;
}

bool is_k_ground(const SimplicialComplex &x, const std::vector<int> &simplex,
                 int k) {
  if (!is_simplex(x, simplex)) return false;
  const std::vector<std::vector<char>> adj = adjacency_of(x);
  for (const auto &level : simplices_by_dim(x, 0))
    for (const auto &s : level) {
      const int v = s[0];
      int miss = 0;
      for (int w : simplex)
        if (w != v && !adj[v][w]) ++miss;
      if (miss > k) return false;
    }
  return true;
}

int grounded_bound(const SimplicialComplex &x) {
  return grounded_connectivity(x).connectivity;
}

}  // namespace ore
