#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ore/fraction.hpp"
#include "ore/forest.hpp"

namespace ore {

// Abstract simplicial complex.  `labels` names the vertices; `facets` lists
// the maximal simplices as strictly increasing 0-based vertex index vectors.
// Isolated vertices appear as singleton facets.
struct SimplicialComplex {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> facets;
};

int complex_dimension(const SimplicialComplex &x);  // -1 when empty
// All simplices of dimension 0..max_dim (max_dim < 0: up to the dimension of
// the complex), grouped by dimension, each list sorted lexicographically.
std::vector<std::vector<std::vector<int>>> simplices_by_dim(
    const SimplicialComplex &x, int max_dim = -1);
std::vector<std::int64_t> f_vector(const SimplicialComplex &x);
bool is_simplex(const SimplicialComplex &x, std::vector<int> simplex);
// Every pairwise-adjacent vertex set spans a simplex (checked exhaustively;
// meant for small complexes).
bool is_flag(const SimplicialComplex &x);
// Builds a complex from an arbitrary simplex list (keeps the maximal ones).
SimplicialComplex complex_from_simplices(std::vector<std::string> labels,
                                         std::vector<std::vector<int>> simplices);
// The flag complex on a symmetric adjacency matrix: facets are the maximal
// cliques, enumerated deterministically.
SimplicialComplex flag_complex_from_adjacency(std::vector<std::string> labels,
                                              const std::vector<std::vector<char>> &adj);
int find_vertex(const SimplicialComplex &x, const std::string &label);
// vertex_map[i] = image of vertex i in b; checks a bijective simplicial map
// whose image is exactly the simplex set of b.
bool is_isomorphism(const SimplicialComplex &a, const SimplicialComplex &b,
                    const std::vector<int> &vertex_map);

// --- graphs and matching complexes ---

struct SimpleGraph {
  int n = 0;                               // vertices 1..n
  std::vector<std::pair<int, int>> edges;  // stored with first < second
};

SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph complete_graph(int n);

// All maximal matchings, each a sorted list of edge indices.
std::vector<std::vector<int>> maximal_matchings(const SimpleGraph &g);
// Vertices: edges of g, labelled "{a,b}"; simplices: matchings.
SimplicialComplex matching_complex(const SimpleGraph &g);

// Vertices: ordered pairs (a,b), a != b, labelled "(a,b)"; a set spans a
// simplex iff the underlying unordered supports are pairwise disjoint.
// This is the coarse descending complex of the permutation family.
SimplicialComplex oriented_matching_complex(int n);

// --- descending complexes from the category machinery ---

// Each one-caret descent from width n — a caret at position p of the next
// row, preceded by a unit g — merges the two points g⁻¹(p), g⁻¹(p+1); the
// ordered pair is a complete invariant of the descent's unit coset.
struct Arc {
  int from = 0, to = 0;
  auto operator<=>(const Arc &) const = default;
};

// Arcs of the descent (e, u): e elementary with at least one caret.
std::vector<Arc> descent_arcs(const Forest &e, const Unit &u);

// Coarse descending complex of the object n: vertices are the one-caret
// descent classes, simplices the jointly realizable disjoint families.
// Families F, T, V (binary).
SimplicialComplex descending_complex(Family f, int n);
// The same complex assembled by enumerating descents (e, u) and grouping
// them with the fraction groupoid; cross-check for small n.
SimplicialComplex descending_complex_bruteforce(Family f, int n);

// Descents m, m' from the same object land on the same vertex iff m' m⁻¹ is
// a pure unit (identity forests around a groupoid unit).
bool same_descent_class(const Element &m, const Element &mp);

// Poset of descent classes of the object: elements are the unit cosets of
// multi-caret elementary descents, recorded by their sorted arc families and
// listed by (size, lex); a < b iff some elementary morphism carries a to b.
// Its chains are the simplices of the barycentric subdivision of the coarse
// complex.
struct DescentPoset {
  std::vector<std::vector<Arc>> elements;
  std::vector<std::vector<char>> less;  // less[i][j]: element i strictly below j
  std::vector<int> atoms;               // indices of the one-arc elements
};

// Arc-model poset: elements are the realizable disjoint arc families, the
// order is strict containment.
DescentPoset descent_poset(Family f, int n);
// The same poset assembled from the category: descents (e, u) are enumerated
// and classed with the fraction groupoid, and each order/non-order pair is
// certified by dividing class representatives.  Cross-check for small n.
DescentPoset descent_poset_bruteforce(Family f, int n);

// counts[k] = number of (k+1)-element chains, i.e. the f-vector of the order
// complex; for a face poset this is the barycentric subdivision's f-vector.
std::vector<std::int64_t> poset_chain_counts(const DescentPoset &p);
// Chains of nonempty simplices under strict inclusion — the f-vector of the
// barycentric subdivision of x.
std::vector<std::int64_t> face_chain_counts(const SimplicialComplex &x);

// The coarse descending complex together with its descent-class poset.
struct EComplex {
  DescentPoset poset;
  SimplicialComplex complex;
};
// v_bound guards the quadratic vertex blow-up of the permutation family.
EComplex build_E(Family f, int n, int v_bound = 9);

// The support map from the oriented descending complex of the permutation
// family at n onto the matching complex of the complete graph (forgets arc
// orientation).  The report certifies that the map is simplicial and
// surjective and that the fiber over every k-simplex carries all 2^(k+1)
// oriented lifts — the join of k+1 two-point sets, a k-sphere.
struct FiberReport {
  std::vector<int> vertex_map;  // oriented vertex -> unordered vertex
  bool surjective = false;
  bool simplicial = false;
  bool fibers_spherical = false;
  std::int64_t simplices_checked = 0;
  std::int64_t lifts_checked = 0;
};
FiberReport e_to_matching_fibers(const SimplicialComplex &ev, int n);

// Descending link of a binary tree with n leaves: vertices are the distinct
// fractions tree·λ_i⁻¹ (labelled "(i,i+1)"), simplices the families with
// pairwise disjoint caret supports.
SimplicialComplex descending_link_of_tree(const Forest &tree);

// Vertices: binary trees with fewer than `bound` leaves; simplices: chains
// t_0 < ... < t_k (left divisibility) with left_quotient(t_0, t_k)
// elementary.
SimplicialComplex sublevel_complex(int bound);

// Trees in the closed divisibility interval [lo, hi].
std::vector<Forest> divisibility_interval(const Forest &lo, const Forest &hi);

// --- grounded connectivity certificate (flag complexes) ---

// A simplex σ is a k-ground if every vertex of the complex is adjacent to
// all but at most k vertices of σ.  A flag complex with an (m·k)-simplex
// k-ground (k >= 1) is (m-1)-connected; a 0-ground makes it a cone.  The
// certificate scans every simplex and reports the best sound claim.
struct GroundedCertificate {
  bool contractible = false;  // some facet is a 0-ground
  int connectivity = -2;      // proven: -2 empty, -1 nonempty, else m-1
  std::vector<int> witness;   // the grounding facet
  int witness_miss = 0;       // its k
};

GroundedCertificate grounded_connectivity(const SimplicialComplex &x);

// Does every vertex of x miss at most k vertices of the simplex?
bool is_k_ground(const SimplicialComplex &x, const std::vector<int> &simplex,
                 int k);
// Best connectivity proven by the certificate: -2 empty (no claim), -1
// nonempty, m-1 from an (m·k)-dimensional k-ground, INT_MAX contractible.
int grounded_bound(const SimplicialComplex &x);

}  // namespace ore
