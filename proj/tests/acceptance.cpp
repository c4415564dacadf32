// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion re-derives its expected values independently of
// the library internals it exercises.

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ore/braid.hpp"
#include "ore/complex.hpp"
#include "ore/forest.hpp"
#include "ore/fraction.hpp"
#include "ore/homology.hpp"
#include "ore/rewrite.hpp"
#include "ore/zs.hpp"

using namespace ore;

namespace {

struct Tally {
  bool pass = true;
  std::int64_t checks = 0;
  std::string detail;

  void require(bool ok, const std::string &what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  void note(const std::string &what) {
    if (detail.empty()) detail = what;
  }
};

// --- criterion 1: confluence of caret-word rewriting ----------------------

// Independent growth oracle: apply the raw word to explicit leaf addresses;
// the set of caret addresses is the order-invariant content of the word.
CaretSet grow_caret_set(int arity, int roots, const std::vector<int> &raw) {
  std::vector<NodeAddress> leaves;
  for (int r = 1; r <= roots; ++r) leaves.push_back({r, {}});
  CaretSet out;
  for (int pos : raw) {
    const NodeAddress at = leaves[pos - 1];
    out.insert(at);
    std::vector<NodeAddress> kids;
    for (int c = 1; c <= arity; ++c) {
      NodeAddress k = at;
      k.path.push_back(c);
      kids.push_back(k);
    }
    leaves.erase(leaves.begin() + (pos - 1));
    leaves.insert(leaves.begin() + (pos - 1), kids.begin(), kids.end());
  }
  return out;
}

// Every maximal rewrite sequence from `raw`, collected by exhaustive DFS.
void all_rewrite_results(int arity, std::vector<int> word,
                         std::set<std::vector<int>> &seen,
                         std::set<std::vector<int>> &terminal) {
  if (!seen.insert(word).second) return;
  bool any = false;
  for (std::size_t j = 0; j + 1 < word.size(); ++j) {
    const int a = word[j], b = word[j + 1];
    if (b < a) {
      any = true;
      std::vector<int> next = word;
      next[j] = b;
      next[j + 1] = a + arity - 1;
      all_rewrite_results(arity, std::move(next), seen, terminal);
    }
  }
  if (!any) terminal.insert(word);
}

void enumerate_raw_words(int roots, int len, std::vector<int> &word,
                         const std::function<void(const std::vector<int> &)> &f) {
  if ((int)word.size() == len) {
    f(word);
    return;
  }
  const int bound = roots + (int)word.size();
  for (int p = 1; p <= bound; ++p) {
    word.push_back(p);
    enumerate_raw_words(roots, len, word, f);
    word.pop_back();
  }
}

Tally criterion_normal_form() {
  Tally t;
  // Exhaustive short words, exhaustive rewrite orders.
  for (int roots = 1; roots <= 3; ++roots)
    for (int len = 0; len <= 5; ++len) {
      std::vector<int> w;
      enumerate_raw_words(roots, len, w, [&](const std::vector<int> &raw) {
        const std::vector<int> nf = normal_form_by_rewriting(2, roots, raw);
        t.require(std::is_sorted(nf.begin(), nf.end()),
                  "normal form not non-decreasing");
        t.require(carets_of(make_forest(2, roots, nf)) ==
                      grow_caret_set(2, roots, raw),
                  "normal form changes the caret set");
        std::set<std::vector<int>> seen, terminal;
        all_rewrite_results(2, raw, seen, terminal);
        t.require(terminal == std::set<std::vector<int>>{nf},
                  "some rewrite order reaches a different terminal word");
      });
    }
  // Seeded samples at full length, random rewrite orders.
  Rng rng(20260817);
  for (int trial = 0; trial < 10000; ++trial) {
    const int roots = rand_int(rng, 1, 3);
    const int len = rand_int(rng, 0, 8);
    std::vector<int> raw;
    for (int j = 0; j < len; ++j)
      raw.push_back(rand_int(rng, 1, roots + j));
    const std::vector<int> nf = normal_form_by_rewriting(2, roots, raw);
    t.require(carets_of(make_forest(2, roots, nf)) == grow_caret_set(2, roots, raw),
              "sampled word: caret set mismatch");
    for (int rep = 0; rep < 3; ++rep)
      t.require(normal_form_by_rewriting(2, roots, raw, &rng) == nf,
                "sampled word: rewrite order changed the result");
  }
  return t;
}

// --- criterion 2: gcd/lcm are the divisibility lattice ---------------------

Tally criterion_lattice() {
  Tally t;
  std::vector<Forest> trees;
  for (int n = 1; n <= 6; ++n)
    for (const Forest &x : all_trees(2, n)) trees.push_back(x);
  for (const Forest &x : trees)
    for (const Forest &y : trees) {
      const Forest g = forest_gcd(x, y);
      const Forest l = forest_lcm(x, y);
      CaretSet cx = carets_of(x), cy = carets_of(y), inter, uni = cx;
      for (const NodeAddress &a : cx)
        if (cy.count(a)) inter.insert(a);
      uni.insert(cy.begin(), cy.end());
      t.require(carets_of(g) == inter, "gcd is not the caret intersection");
      t.require(carets_of(l) == uni, "lcm is not the caret union");
      t.require(left_divides(g, x) && left_divides(g, y), "gcd does not divide");
      t.require(left_divides(x, l) && left_divides(y, l), "lcm not a multiple");
      for (const Forest &z : trees) {
        if (left_divides(z, x) && left_divides(z, y))
          t.require(left_divides(z, g), "a common divisor escapes the gcd");
        if (left_divides(x, z) && left_divides(y, z))
          t.require(left_divides(l, z), "a common multiple escapes the lcm");
      }
    }
  std::ostringstream os;
  os << trees.size() << " trees, all pairs with all witnesses";
  t.note(os.str());
  return t;
}

// --- criterion 3: indirect-product axioms ----------------------------------

Tally criterion_ip_axioms() {
  Tally t;
  CheckerOptions deg5;
  deg5.max_degree = 5;
  const Report rt = check_ip_axioms(builtin_table(Family::T, 2), deg5);
  t.require(rt.all_pass(), "rotation table fails an axiom");
  t.checks += (std::int64_t)rt.total() - 1;
  const Report rv = check_ip_axioms(builtin_table(Family::V, 2), deg5);
  t.require(rv.all_pass(), "permutation table fails an axiom");
  t.checks += (std::int64_t)rv.total() - 1;
  CheckerOptions braided;
  braided.max_degree = 4;
  braided.braid_len = 3;
  const Report rb = check_ip_axioms(builtin_table(Family::BV, 2), braided);
  t.require(rb.all_pass(), "braid table fails an axiom");
  t.checks += (std::int64_t)rb.total() - 1;
  const Report rel = check_bv_relations(4);
  t.require(rel.all_pass(), "a defining braided relation fails");
  t.checks += (std::int64_t)rel.total() - 1;
  return t;
}

// --- criterion 4: the worked rotation/caret example -------------------------

Tally criterion_worked_example() {
  Tally t;
  const Unit g = unit_from_rotation(Family::T, make_rotation(3, 1));
  const Forest f = single_caret(2, 3, 3);
  t.require(act_unit_on_forest(g, f) == single_caret(2, 3, 1),
            "g.f is not the caret at position 1");
  t.require(act_forest_on_unit(g, f) ==
                unit_from_rotation(Family::T, make_rotation(4, 2)),
            "g^f is not rotation by 2 of degree 4");
  t.note("rot(1)@3 across the caret at 3 -> caret at 1, rot(2)@4");
  return t;
}

// --- criterion 5: projection equivariance -----------------------------------

Tally criterion_pi_equivariance() {
  Tally t;
  const Report r = check_pi_equivariance(4, 3, 500, 20260817);
  t.require(r.all_pass(), "a braided clone projects to the wrong permutation");
  t.checks += (std::int64_t)r.total() - 1;
  return t;
}

// --- criterion 6: group laws and torsion ------------------------------------

Forest comb(int leaves) {
  std::vector<int> w(leaves - 1);
  std::iota(w.begin(), w.end(), 1);
  return make_forest(2, 1, w);
}

Tally criterion_group_laws() {
  Tally t;
  const Family fams[] = {Family::F,  Family::T,  Family::V,
                         Family::BF, Family::BT, Family::BV};
  Rng rng(20260817);
  for (Family fam : fams) {
    for (int trial = 0; trial < 1000; ++trial) {
      const Element x = random_element(fam, 2, 1, rand_int(rng, 0, 4), 3, rng);
      const Element y = random_element(fam, 2, 1, rand_int(rng, 0, 4), 3, rng);
      const Element z = random_element(fam, 2, 1, rand_int(rng, 0, 4), 3, rng);
      t.require(frac_eq(frac_mul(frac_mul(x, y), z), frac_mul(x, frac_mul(y, z))),
                "associativity fails");
      t.require(frac_is_identity(frac_mul(x, frac_inv(x))), "x * x^-1 != 1");
      t.require(frac_eq(frac_mul(frac_mul(x, y), frac_inv(y)), x),
                "right cancellation fails");
    }
    // The inverse of a forest pair is the swapped pair.
    for (int trial = 0; trial < 200; ++trial) {
      const int carets = rand_int(rng, 0, 4);
      const Forest plus = random_forest(2, 1, carets, rng);
      const Forest minus = random_forest(2, 1, carets, rng);
      t.require(frac_eq(frac_inv(frac_from_forest_pair(fam, plus, minus)),
                        frac_from_forest_pair(fam, minus, plus)),
                "pair inverse is not the swapped pair");
    }
  }
  for (int n = 2; n <= 5; ++n) {
    const Element rot = make_element(
        Family::T, comb(n), unit_from_rotation(Family::T, make_rotation(n, 1)),
        comb(n));
    t.require(frac_order(rot, 64) == n, "conjugated rotation has wrong order");
  }
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i) {
      const Element swap = make_element(
          Family::V, comb(n), unit_from_perm(transposition(n, i)), comb(n));
      t.require(frac_order(swap, 64) == 2, "transposition conjugate order != 2");
    }
  const Element cyc = make_element(Family::V, comb(3),
                                   unit_from_perm(Permutation{{2, 3, 1}}), comb(3));
  t.require(frac_order(cyc, 64) == 3, "3-cycle conjugate order != 3");
  return t;
}

// --- criterion 7: descending complexes vs matching complexes ----------------

std::string unordered_label(const std::string &pair_label) {
  int a = 0, b = 0;
  if (std::sscanf(pair_label.c_str(), "(%d,%d)", &a, &b) != 2) return {};
  return "{" + std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b)) +
         "}";
}

// Label-translating isomorphism check: vertices biject along the support map
// and the facet sets coincide.
bool complexes_isomorphic(const SimplicialComplex &e, const SimplicialComplex &m,
                          Tally &t, const char *what) {
  if (e.labels.size() != m.labels.size()) {
    t.require(false, std::string(what) + ": vertex counts differ");
    return false;
  }
  std::vector<int> to_m(e.labels.size(), -1);
  std::set<int> hit;
  for (std::size_t v = 0; v < e.labels.size(); ++v) {
    const int w = find_vertex(m, unordered_label(e.labels[v]));
    if (w < 0 || !hit.insert(w).second) {
      t.require(false, std::string(what) + ": support map is not a bijection");
      return false;
    }
    to_m[v] = w;
  }
  std::set<std::vector<int>> e_facets, m_facets(m.facets.begin(), m.facets.end());
  for (std::vector<int> s : e.facets) {
    for (int &v : s) v = to_m[v];
    std::sort(s.begin(), s.end());
    e_facets.insert(s);
  }
  t.require(e_facets == m_facets, std::string(what) + ": facet sets differ");
  return true;
}

Tally criterion_descending_complexes() {
  Tally t;
  for (int n = 2; n <= 8; ++n)
    complexes_isomorphic(descending_complex(Family::F, n),
                         matching_complex(path_graph(n)), t, "linear");
  for (int n = 3; n <= 8; ++n)
    complexes_isomorphic(descending_complex(Family::T, n),
                         matching_complex(cycle_graph(n)), t, "cyclic");
  for (int n = 2; n <= 6; ++n) {
    const SimplicialComplex ev = descending_complex(Family::V, n);
    const FiberReport fr = e_to_matching_fibers(ev, n);
    t.require(fr.surjective, "support map not surjective");
    t.require(fr.simplicial, "support map not simplicial");
    t.require(fr.fibers_spherical, "a fiber is missing an oriented lift");
    const std::vector<std::int64_t> f = f_vector(matching_complex(complete_graph(n)));
    std::int64_t simplices = 0, lifts = 0;
    for (std::size_t d = 0; d < f.size(); ++d) {
      simplices += f[d];
      lifts += f[d] << (d + 1);
    }
    t.require(fr.simplices_checked == simplices, "fiber base count wrong");
    t.require(fr.lifts_checked == lifts, "oriented lift count wrong");
  }
  return t;
}

// --- criterion 8: connectivity growth and grounded soundness ----------------

Tally criterion_connectivity() {
  Tally t;
  std::vector<std::pair<std::string, SimplicialComplex>> zoo;
  const std::pair<char, SimpleGraph (*)(int)> kinds[] = {
      {'L', path_graph}, {'C', cycle_graph}, {'K', complete_graph}};
  for (const auto &[kind, make] : kinds)
    for (int n = 5; n <= 12; ++n) {
      SimplicialComplex m = matching_complex(make(n));
      const int want = n / 4 - 1;
      const int got = homological_connectivity(m, want);
      std::ostringstream what;
      what << "M(" << kind << "_" << n << ") connectivity " << got << " < " << want;
      t.require(got >= want, what.str());
      zoo.emplace_back("M(" + std::string(1, kind) + "_" + std::to_string(n) + ")",
                       std::move(m));
    }
  // The linear n = 4 complex is disconnected; report it, do not fail it.
  const SimplicialComplex l4 = matching_complex(path_graph(4));
  if (homological_connectivity(l4, 0) < 0)
    std::printf("        [note] M(L_4) is disconnected; the growth bound starts at n = 5\n");
  zoo.emplace_back("M(L_4)", l4);
  zoo.emplace_back("E_F(7)", descending_complex(Family::F, 7));
  zoo.emplace_back("E_T(7)", descending_complex(Family::T, 7));
  zoo.emplace_back("E_V(4)", descending_complex(Family::V, 4));
  zoo.emplace_back("sublevel(5)", sublevel_complex(5));
  // Grounded certificates must never claim more than exact homology allows.
  for (const auto &[name, x] : zoo) {
    const int g = grounded_bound(x);
    const int dim = complex_dimension(x);
    const int cap = g == INT_MAX ? std::min(2, dim) : std::min(g, std::min(2, dim));
    if (cap < 0) continue;
    const int conn = homological_connectivity(x, cap);
    t.require(conn == cap, name + ": grounded bound " + std::to_string(g) +
                               " exceeds homology connectivity " +
                               std::to_string(conn));
  }
  return t;
}

// --- criterion 9: descending links and sublevel complexes -------------------

Tally criterion_links_and_sublevels() {
  Tally t;
  for (int n = 2; n <= 7; ++n) {
    const SimplicialComplex e = descending_complex(Family::F, n);
    const std::set<std::string> e_labels(e.labels.begin(), e.labels.end());
    std::set<std::set<std::string>> e_facets;
    for (const std::vector<int> &s : e.facets) {
      std::set<std::string> f;
      for (int v : s) f.insert(e.labels[v]);
      e_facets.insert(f);
    }
    for (const Forest &tree : all_trees(2, n)) {
      const SimplicialComplex link = descending_link_of_tree(tree);
      t.require(std::set<std::string>(link.labels.begin(), link.labels.end()) ==
                    e_labels,
                "a tree's link has the wrong vertex labels");
      std::set<std::set<std::string>> link_facets;
      for (const std::vector<int> &s : link.facets) {
        std::set<std::string> f;
        for (int v : s) f.insert(link.labels[v]);
        link_facets.insert(f);
      }
      t.require(link_facets == e_facets, "a tree's link has the wrong facets");
    }
  }
  for (int bound = 2; bound <= 6; ++bound) {
    const SimplicialComplex x = sublevel_complex(bound);
    const int md = std::min(2, complex_dimension(x));
    if (md < 0) continue;
    for (const HomologyGroup &h : reduced_homology(x, md))
      t.require(h.trivial(), "a sublevel complex has nontrivial homology");
  }
  return t;
}

// --- criterion 10: chain-family reduction complexes are circles --------------

Tally criterion_reduction_circle() {
  Tally t;
  const RewriteRule rule = builtin_rule("basilica");
  for (int chain = 1; chain <= 3; ++chain) {
    const SimplicialComplex x = reduction_complex(rule, bad_graph(chain));
    t.require(f_vector(x) == std::vector<std::int64_t>{4, 4},
              "reduction complex is not 4 vertices and 4 edges");
    const auto h = reduced_homology(x, 1);
    t.require(h[0].trivial(), "reduction complex is disconnected");
    t.require(h[1].rank == 1 && h[1].torsion.empty(),
              "reduction complex is not a circle");
  }
  return t;
}

// --- criterion 11: braid normal-form kernel ----------------------------------

Tally criterion_braid_kernel() {
  Tally t;
  t.require(braid_eq(BraidWord{3, {1, 2, 1}}, BraidWord{3, {2, 1, 2}}),
            "the braid relation fails");
  t.require(braid_eq(BraidWord{4, {1, 3}}, BraidWord{4, {3, 1}}),
            "far generators do not commute");
  for (int n = 2; n <= 6; ++n) {
    const BraidWord delta = braid_half_twist(n);
    t.require((int)delta.letters.size() == n * (n - 1) / 2,
              "half twist does not cross every pair once");
    t.require(std::all_of(delta.letters.begin(), delta.letters.end(),
                          [](int l) { return l > 0; }),
              "half twist is not positive");
  }
  for (int n = 2; n <= 5; ++n) {
    const BraidWord delta = braid_half_twist(n);
    const BraidWord delta2 = braid_multiply(delta, delta);
    for (int i = 1; i < n; ++i) {
      const BraidWord gen{n, {i}};
      t.require(braid_eq(braid_multiply(delta2, gen), braid_multiply(gen, delta2)),
                "the full twist is not central");
    }
  }
  return t;
}

// --- criterion 12: ternary objects connect along parity ----------------------

Tally criterion_components() {
  Tally t;
  for (int m = 1; m <= 10; ++m)
    for (int n = 1; n <= 10; ++n)
      t.require(component_reachable(3, m, n) == (n >= m && (n - m) % 2 == 0),
                "ternary reachability disagrees with parity");
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    const char *name;
    Tally (*run)();
  };
  const Criterion criteria[] = {
      {"caret word rewriting is confluent onto canonical normal forms",
       criterion_normal_form},
      {"forest gcd and lcm realize the divisibility lattice", criterion_lattice},
      {"indirect-product axioms hold for rotation, permutation, and braid tables",
       criterion_ip_axioms},
      {"rotation cloning through a caret reproduces the worked example",
       criterion_worked_example},
      {"braided-to-permutation projection is cloning-equivariant",
       criterion_pi_equivariance},
      {"fraction groups satisfy group laws and exact torsion orders",
       criterion_group_laws},
      {"descending complexes match matching complexes along support maps",
       criterion_descending_complexes},
      {"matching-complex connectivity grows and grounded bounds stay sound",
       criterion_connectivity},
      {"descending links see only the leaf count and sublevels are trivial",
       criterion_links_and_sublevels},
      {"chain-family reduction complexes are circles", criterion_reduction_circle},
      {"braid normal forms verify the defining relations and central twist",
       criterion_braid_kernel},
      {"ternary forest objects connect exactly along parity", criterion_components},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion &c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception &e) {
      t.pass = false;
      t.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%s] %2d. %s (%lld checks, %.2fs)%s%s\n",
                t.pass ? "PASS" : "FAIL", index, c.name,
                (long long)t.checks, secs, t.detail.empty() ? "" : " -- ",
                t.detail.c_str());
    std::fflush(stdout);
    if (!t.pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
