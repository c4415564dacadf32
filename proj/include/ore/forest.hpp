#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ore/common.hpp"

namespace ore {

// A morphism of the d-ary forest category: a forest with `roots` roots and
// roots + (d-1)*word.size() leaves.  `word` is the canonical caret word: the
// unique non-decreasing sequence (i_1, ..., i_c) with
// 1 <= i_j <= roots + (d-1)*(j-1), where i_j splits the i_j-th leaf of the
// partial forest built so far into d children.
//
// Composition compose(f, g) glues the roots of g onto the leaves of f; in
// categorical terms f goes from its leaf object to its root object, and
// compose(f, g) = f∘g with g acting first.
struct Forest {
  int arity = 2;
  int roots = 1;
  std::vector<int> word;

  int carets() const { return static_cast<int>(word.size()); }
  int leaves() const { return roots + (arity - 1) * carets(); }
  bool is_identity() const { return word.empty(); }
  auto operator<=>(const Forest &) const = default;
};

// A node address inside a forest: 1-based root index plus a path of child
// digits in {1..d}.  Lexicographic order on (root, path) is exactly preorder.
struct NodeAddress {
  int root = 1;
  std::vector<int> path;
  auto operator<=>(const NodeAddress &) const = default;
};

using CaretSet = std::set<NodeAddress>;

// --- construction / canonical form ---

// Builds a forest from a raw caret word, normalising it.  Throws InvalidInput
// when an index is out of range for its step.
Forest make_forest(int arity, int roots, std::vector<int> raw_word);
Forest identity_forest(int arity, int roots);
// The generator λ_i at `roots` roots: splits leaf i, 1 <= i <= roots.
Forest single_caret(int arity, int roots, int i);

bool valid_raw_word(int arity, int roots, const std::vector<int> &raw);

// Normalises a raw caret word by exchange rewriting: an adjacent pair (a, b)
// with b < a rewrites to (b, a+d-1).  If `order_rng` is given, the position to
// rewrite at each step is chosen at random instead of leftmost-first; every
// order reaches the same canonical word.
std::vector<int> normal_form_by_rewriting(int arity, int roots,
                                          std::vector<int> raw,
                                          Rng *order_rng = nullptr);

// --- structural view (lossless in both directions) ---

CaretSet carets_of(const Forest &f);
Forest forest_from_carets(int arity, int roots, const CaretSet &cs);
// Leaf addresses of the forest, in left-to-right order.
std::vector<NodeAddress> leaf_addresses(const Forest &f);

// --- category / lattice operations ---

Forest compose(const Forest &f, const Forest &g);  // leaves(f) == roots(g)
Forest compose(const Forest &f, const Forest &g, const Forest &h);

// a left-divides f iff carets_of(a) ⊆ carets_of(f).
bool left_divides(const Forest &a, const Forest &f);
// The unique q with compose(a, q) == f; requires left_divides(a, f).
Forest left_quotient(const Forest &a, const Forest &f);

Forest forest_lcm(const Forest &a, const Forest &b);  // caret-set union
Forest forest_gcd(const Forest &a, const Forest &b);  // caret-set intersection

// --- Garside structure ---

// Δ(n): every root carries a single caret.
Forest garside_delta(int arity, int n);
bool is_elementary(const Forest &f);  // every tree trivial or a single caret
// head(f) = gcd(f, Δ(roots f)): the root carets of f.
Forest garside_head(const Forest &f);
// Greedy head factorisation; empty for the identity.
std::vector<Forest> garside_factorization(const Forest &f);

// --- connectivity of the category / misc ---

// F_d(m, n) is nonempty iff m <= n and n ≡ m (mod d-1).
bool component_reachable(int arity, int m, int n);
// Noetherianity height of an object (number of leaves).
int object_height(int n);
// leaves - roots, the drop witnessing Noetherianity of a morphism.
int morphism_drop(const Forest &f);

// --- decomposition into trees ---

// The `roots` many trees of f, each returned with roots == 1.
std::vector<Forest> trees_of(const Forest &f);
Forest forest_from_trees(int arity, const std::vector<Forest> &trees);
// Leaf counts per tree, in order.
std::vector<int> tree_leaf_counts(const Forest &f);

// Leaf row positions (1-based, leftmost child) of carets of f whose children
// are all leaves.  These are the carets that can split off as a final factor
// f = f0 · λ_i.
std::vector<int> bottom_caret_positions(const Forest &f);
// Removes the bottom caret whose leftmost child sits at leaf position i;
// returns nothing if there is no such bottom caret.
std::optional<Forest> strip_bottom_caret(const Forest &f, int i);

// --- enumeration (test/report support) ---

// All elementary forests with the given number of leaves (roots vary).
std::vector<Forest> enumerate_elementary(int arity, int leaves);
// All forests with `roots` roots and at most max_carets carets.
std::vector<Forest> all_forests(int arity, int roots, int max_carets);
// All trees (roots == 1) with exactly `leaves` leaves.
std::vector<Forest> all_trees(int arity, int leaves);
Forest random_forest(int arity, int roots, int carets, Rng &rng);

// Text encoding "F(roots;i1,i2,...)" for arity 2, "F<d>(roots;...)" otherwise.
std::string forest_to_text(const Forest &f);
Forest forest_from_text(const std::string &text);

}  // namespace ore
