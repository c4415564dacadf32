#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ore/braid.hpp"
#include "ore/forest.hpp"
#include "ore/perm.hpp"
#include "ore/report.hpp"

namespace ore {

enum class Family { F, T, V, BF, BT, BV };

bool family_braided(Family f);
Family shadow_family(Family f);  // BF→F, BT→T, BV→V, plain families fixed
std::string family_name(Family f);
Family family_from_name(const std::string &s);

// An invertible decoration sitting between the leaves of the two forests of
// an element: trivial for F, a rotation class for T, a permutation for V and
// a braid for the braided families.
struct Unit {
  Family family = Family::F;
  int degree = 1;
  Rotation rot{1, 0};       // T
  Permutation perm;         // V
  BraidWord braid{2, {}};   // BF, BT, BV

  auto operator<=>(const Unit &) const = default;  // structural; use unit_eq
};

Unit unit_identity(Family f, int degree);
Unit unit_from_rotation(Family f, const Rotation &r);
Unit unit_from_perm(const Permutation &p);
Unit unit_from_braid(Family f, const BraidWord &w);

bool valid_unit(const Unit &u);
// Membership in the family's unit groupoid: BT needs π(β) a rotation, BF a
// pure braid; T, V, F, BV impose nothing beyond validity.
bool unit_member(const Unit &u);
Unit unit_compose(const Unit &a, const Unit &b);
Unit unit_inverse(const Unit &a);
bool unit_eq(const Unit &a, const Unit &b);  // braids compared by normal form
bool unit_is_identity(const Unit &a);
// The underlying permutation (rotations embedded, braids projected).
Permutation unit_perm(const Unit &u);
// Projection of a braided unit to the shadow family (π on the decoration).
Unit unit_project(const Unit &u);

std::vector<Unit> enumerate_units(Family f, int degree, int braid_len);
Unit random_unit(Family f, int degree, int braid_len, Rng &rng);
std::string unit_to_text(const Unit &u);

// --- the two action halves ---
// A unit g of degree roots(f) and a forest f compose as g∘f = (g·f)∘g^f with
// g·f a forest on the same objects and g^f a unit of degree leaves(f).

// g·f: the g(j)-th tree of the result is the j-th tree of f.
Forest act_unit_on_forest(const Unit &g, const Forest &f);
// g^f: leaf bookkeeping for T and V, strand cloning for braids.
Unit act_forest_on_unit(const Unit &g, const Forest &f);

// Inverse of single-caret cloning: the unique g with g^{λ_i} = gp, if any.
// For braids this deletes the (i+1)-st strand; always re-clones to verify.
// recover_unit throws InvalidInput when gp is not a clone at position i.
Unit recover_unit(const Unit &gp, int i, int arity);
std::optional<Unit> try_recover_unit(const Unit &gp, int i, int arity);

// Permutation cloning (the image of λ_i-cloning in Sym): total and bijective
// onto its image by construction.
Permutation clone_perm(const Permutation &g, int i, int arity);
// b^{λ_j} for a braid word via the strand cloning table
// σ_i ↦ σ_{i+1} (j<i), σ_iσ_{i+1} (j=i), σ_{i+1}σ_i (j=i+1), σ_i (j>i+1).
BraidWord clone_braid(const BraidWord &b, int j);

// --- indirect product morphisms ---

// (f, u) denotes f∘u with u nearest the source: degree(u) == leaves(f).
struct IndirectMorphism {
  Forest forest;
  Unit unit;
};

IndirectMorphism zs_identity(Family f, int arity, int object);
IndirectMorphism zs_compose(const IndirectMorphism &a, const IndirectMorphism &b);
bool zs_eq(const IndirectMorphism &a, const IndirectMorphism &b);

// --- generator-level action tables ---

// The two generator maps that determine an action of the forest category on
// a unit groupoid.  Checkers evaluate the axioms through a table, so a
// corrupted table is detected; extensions to words use the axioms themselves.
struct ActionTable {
  Family family = Family::V;
  int arity = 2;
  std::string name;
  // g · λ_i at width m: index of the caret in the resulting forest.
  std::function<int(const Unit &, int i, int m)> act_caret;
  // g ^ λ_i at width m: the cloned unit of degree m + arity - 1.
  std::function<Unit(const Unit &, int i, int m)> clone_caret;
};

ActionTable builtin_table(Family f, int arity);
// Extends a table to arbitrary forests along the canonical caret word.
Forest table_act(const ActionTable &t, const Unit &g, const Forest &f);
Unit table_clone(const ActionTable &t, const Unit &g, const Forest &f);

// --- cloning systems ---

// (ρ_n, κ^n_k) presentation of an action: ρ the projection to Sym and κ the
// cloning maps.  The induced table is g·λ^n_k = λ^{n+1}_{ρ_n(g)(k)},
// g^{λ^n_k} = (g)κ^n_k.
struct CloningSystem {
  Family family = Family::V;
  std::function<Permutation(const Unit &)> rho;
  std::function<Unit(const Unit &, int k)> kappa;
};

ActionTable cloning_system_adapter(const CloningSystem &cs, int arity);
CloningSystem builtin_cloning_system(Family f, int arity);

// --- checkers (all return deterministic reports) ---

struct CheckerOptions {
  int min_degree = 1;
  int max_degree = 4;
  int braid_len = 2;     // unit word length bound for braided families
  std::uint64_t seed = 0;
  int samples = 0;       // extra randomised instances where supported
};

Report check_ip_axioms(const ActionTable &t, const CheckerOptions &opt);
// Compatibility of the strand-cloning table with the braid relations and the
// caret exchange relation (the six defining identities of the BV action).
Report check_bv_relations(int max_width);
// π(β^f) == π(β)^f exhaustively for small widths plus seeded random cases.
Report check_pi_equivariance(int max_width, int braid_len, int samples,
                             std::uint64_t seed);
// g ↦ g^f is injective on units for each fixed small f.
Report check_injectivity(Family f, const CheckerOptions &opt);
// CS1-CS3 for the family's cloning system, and agreement of the induced
// table with the built-in one.
Report check_cloning_system(Family f, int arity, const CheckerOptions &opt);

// --- generic axiom checker over any indirect-product system ---
//
// Sys supplies:
//   using Obj, For, Un;
//   std::vector<Obj> objects();
//   std::vector<For> generators(const Obj &);   // forests whose target is the object
//   std::vector<Un> units(const Obj &);
//   Obj forest_source(const For &);             // object the forest points away from
//   For compose_f(const For &, const For &);
//   For id_forest(const Obj &);
//   bool eq_f(const For &, const For &);
//   Un compose_u(const Un &, const Un &), inverse_u(const Un &), id_unit(const Obj &);
//   bool eq_u(const Un &, const Un &);
//   For act(const Un &, const For &);
//   Un clone(const Un &, const For &);
//   std::string show_obj/show_f/show_u(...);

template <class Sys>
Report check_ip_axioms_generic(Sys &sys) {
  Report rep;
  for (const auto &x : sys.objects()) {
    const auto units = sys.units(x);
    const auto gens = sys.generators(x);
    const std::string ox = sys.show_obj(x);
    for (const auto &f : gens) {
      rep.check("ip1-unit-acts-trivially", ox + " f=" + sys.show_f(f),
                sys.eq_f(sys.act(sys.id_unit(x), f), f));
      rep.check("ip5-identity-clones-to-identity", ox + " f=" + sys.show_f(f),
                sys.eq_u(sys.clone(sys.id_unit(x), f),
                         sys.id_unit(sys.forest_source(f))));
    }
    for (const auto &g : units) {
      const std::string sg = ox + " g=" + sys.show_u(g);
      rep.check("ip2-identity-forest-clones-trivially", sg,
                sys.eq_u(sys.clone(g, sys.id_forest(x)), g));
      rep.check("ip6-identity-forest-is-fixed", sg,
                sys.eq_f(sys.act(g, sys.id_forest(x)), sys.id_forest(x)));
    }
    // IP3 / IP7: composed units.
    for (size_t a = 0; a < units.size(); ++a)
      for (size_t b = 0; b < units.size(); ++b) {
        const auto g12 = sys.compose_u(units[a], units[b]);
        for (const auto &f : gens) {
          const std::string inst = ox + " g1=" + sys.show_u(units[a]) +
                                   " g2=" + sys.show_u(units[b]) +
                                   " f=" + sys.show_f(f);
          const auto g2f = sys.act(units[b], f);
          rep.check("ip3-product-acts-by-stages", inst,
                    sys.eq_f(sys.act(g12, f), sys.act(units[a], g2f)));
          rep.check("ip7-product-clones-by-stages", inst,
                    sys.eq_u(sys.clone(g12, f),
                             sys.compose_u(sys.clone(units[a], g2f),
                                           sys.clone(units[b], f))));
        }
      }
    // IP4 / IP8: composed forests (generator pairs; composition normalises,
    // so this also exercises compatibility with the defining relations).
    for (const auto &f1 : gens) {
      const auto y = sys.forest_source(f1);
      for (const auto &f2 : sys.generators(y)) {
        const auto ff = sys.compose_f(f1, f2);
        for (const auto &g : units) {
          const std::string inst = ox + " g=" + sys.show_u(g) +
                                   " f1=" + sys.show_f(f1) +
                                   " f2=" + sys.show_f(f2);
          const auto gf1 = sys.clone(g, f1);
          rep.check("ip8-action-distributes-over-composition", inst,
                    sys.eq_f(sys.act(g, ff),
                             sys.compose_f(sys.act(g, f1), sys.act(gf1, f2))));
          rep.check("ip4-cloning-iterates-over-composition", inst,
                    sys.eq_u(sys.clone(g, ff), sys.clone(gf1, f2)));
        }
      }
    }
  }
  return rep;  // not finalized: callers may merge several runs first
}

}  // namespace ore
