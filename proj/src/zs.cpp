#include "ore/zs.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ore/common.hpp"

namespace ore {

bool family_braided(Family f) {
  return f == Family::BF || f == Family::BT || f == Family::BV;
}

Family shadow_family(Family f) {
  switch (f) {
    case Family::BF: return Family::F;
    case Family::BT: return Family::T;
    case Family::BV: return Family::V;
    default: return f;
  }
}

std::string family_name(Family f) {
  switch (f) {
    case Family::F: return "F";
    case Family::T: return "T";
    case Family::V: return "V";
    case Family::BF: return "BF";
    case Family::BT: return "BT";
    case Family::BV: return "BV";
  }
  throw InvalidInput("unknown family");
}

Family family_from_name(const std::string &s) {
  if (s == "F") return Family::F;
  if (s == "T") return Family::T;
  if (s == "V") return Family::V;
  if (s == "BF") return Family::BF;
  if (s == "BT") return Family::BT;
  if (s == "BV") return Family::BV;
  throw InvalidInput("unknown family name: " + s);
}

Unit unit_identity(Family f, int degree) {
  if (degree < 1) throw InvalidInput("unit degree must be positive");
  Unit u;
  u.family = f;
  u.degree = degree;
  u.rot = Rotation{degree, 0};
  u.perm = perm_identity(degree);
  u.braid = BraidWord{degree, {}};
  return u;
}

Unit unit_from_rotation(Family f, const Rotation &r) {
  if (f != Family::T) throw InvalidInput("rotation units belong to family T");
  Unit u = unit_identity(f, r.n);
  u.rot = make_rotation(r.n, r.shift);
  return u;
}

Unit unit_from_perm(const Permutation &p) {
  if (!valid_perm(p)) throw InvalidInput("not a permutation");
  Unit u = unit_identity(Family::V, p.degree());
  u.perm = p;
  return u;
}

Unit unit_from_braid(Family f, const BraidWord &w) {
  if (!family_braided(f)) throw InvalidInput("braid units need a braided family");
  if (!valid_braid_word(w)) throw InvalidInput("invalid braid word");
  Unit u = unit_identity(f, w.strands);
  u.braid = w;
  return u;
}

bool valid_unit(const Unit &u) {
  if (u.degree < 1) return false;
  switch (u.family) {
    case Family::F: return true;
    case Family::T:
      return u.rot.n == u.degree && 0 <= u.rot.shift && u.rot.shift < u.rot.n;
    case Family::V:
      return u.perm.degree() == u.degree && valid_perm(u.perm);
    default:
      return u.braid.strands == u.degree && valid_braid_word(u.braid);
  }
}

bool unit_member(const Unit &u) {
  if (!valid_unit(u)) return false;
  if (u.family == Family::BF) return is_pure(u.braid);
  if (u.family == Family::BT) return cyclic_class(u.braid).has_value();
  return true;
}

Unit unit_compose(const Unit &a, const Unit &b) {
  if (a.family != b.family || a.degree != b.degree)
    throw InvalidInput("unit_compose: mismatched units");
  Unit r = unit_identity(a.family, a.degree);
  switch (a.family) {
    case Family::F: break;
    case Family::T: r.rot = rotation_compose(a.rot, b.rot); break;
    case Family::V: r.perm = perm_compose(a.perm, b.perm); break;
    default: r.braid = braid_multiply(a.braid, b.braid); break;
  }
  return r;
}

Unit unit_inverse(const Unit &a) {
  Unit r = unit_identity(a.family, a.degree);
  switch (a.family) {
    case Family::F: break;
    case Family::T: r.rot = rotation_inverse(a.rot); break;
    case Family::V: r.perm = perm_inverse(a.perm); break;
    default: r.braid = braid_inverse(a.braid); break;
  }
  return r;
}

bool unit_eq(const Unit &a, const Unit &b) {
  if (a.family != b.family || a.degree != b.degree) return false;
  switch (a.family) {
    case Family::F: return true;
    case Family::T: return a.rot == b.rot;
    case Family::V: return a.perm == b.perm;
    default: return braid_eq(a.braid, b.braid);
  }
}

bool unit_is_identity(const Unit &a) {
  return unit_eq(a, unit_identity(a.family, a.degree));
}

Permutation unit_perm(const Unit &u) {
  switch (u.family) {
    case Family::F: return perm_identity(u.degree);
    case Family::T: return rotation_perm(u.rot);
    case Family::V: return u.perm;
    default: return braid_project(u.braid);
  }
}

Unit unit_project(const Unit &u) {
  if (!family_braided(u.family)) return u;
  const Permutation p = braid_project(u.braid);
  if (u.family == Family::BV) return unit_from_perm(p);
  if (u.family == Family::BT) {
    auto r = rotation_from_perm(p);
    if (!r) throw InvalidInput("braid does not project to a rotation");
    return unit_from_rotation(Family::T, *r);
  }
  if (!perm_is_identity(p)) throw InvalidInput("braid is not pure");
  return unit_identity(Family::F, u.degree);
}

std::vector<Unit> enumerate_units(Family f, int degree, int braid_len) {
  std::vector<Unit> out;
  switch (f) {
    case Family::F:
      out.push_back(unit_identity(f, degree));
      break;
    case Family::T:
      for (int s = 0; s < degree; ++s)
        out.push_back(unit_from_rotation(f, make_rotation(degree, s)));
      break;
    case Family::V:
      for (const Permutation &p : all_perms(degree)) out.push_back(unit_from_perm(p));
      break;
    default: {
      std::map<BraidNormalForm, bool> seen;
      for (const BraidWord &w : all_braid_words(degree, braid_len, true)) {
        Unit u = unit_from_braid(f, w);
        if (!unit_member(u)) continue;
        if (seen.emplace(braid_normal_form(w), true).second) out.push_back(u);
      }
      break;
    }
  }
  return out;
}

Unit random_unit(Family f, int degree, int braid_len, Rng &rng) {
  switch (f) {
    case Family::F:
      return unit_identity(f, degree);
    case Family::T:
      return unit_from_rotation(f, make_rotation(degree, rand_int(rng, 0, degree - 1)));
    case Family::V: {
      std::vector<int> img(degree);
      for (int i = 0; i < degree; ++i) img[i] = i + 1;
      std::shuffle(img.begin(), img.end(), rng);
      return unit_from_perm(Permutation{img});
    }
    default: {
      BraidWord base{degree, {}};
      if (degree >= 2)
        base = random_braid_word(degree, rand_int(rng, 0, braid_len), rng);
      if (f == Family::BV) return unit_from_braid(f, base);
      Permutation target = perm_identity(degree);
      if (f == Family::BT)
        target = rotation_perm(make_rotation(degree, rand_int(rng, 0, degree - 1)));
      const Permutation fix =
          perm_compose(perm_inverse(braid_project(base)), target);
      return unit_from_braid(f, braid_multiply(base, braid_lift(fix)));
    }
  }
}

std::string unit_to_text(const Unit &u) {
  std::ostringstream os;
  switch (u.family) {
    case Family::F:
      os << "id@" << u.degree;
      break;
    case Family::T:
      os << "rot(" << u.rot.shift << ")@" << u.degree;
      break;
    case Family::V: {
      os << "perm(";
      for (int i = 1; i <= u.degree; ++i) os << (i > 1 ? " " : "") << u.perm(i);
      os << ")";
      break;
    }
    default: {
      os << family_name(u.family) << "@" << u.degree << "[";
      for (size_t i = 0; i < u.braid.letters.size(); ++i)
        os << (i ? " " : "") << u.braid.letters[i];
      os << "]";
      break;
    }
  }
  return os.str();
}

Forest act_unit_on_forest(const Unit &g, const Forest &f) {
  if (g.degree != f.roots)
    throw InvalidInput("act_unit_on_forest: degree(g) != roots(f)");
  const Permutation p = unit_perm(g);
  const auto trees = trees_of(f);
  // The p(j)-th tree of the result is the j-th tree of f.
  std::vector<Forest> moved(trees.size());
  for (int j = 1; j <= f.roots; ++j) moved[p(j) - 1] = trees[j - 1];
  return forest_from_trees(f.arity, moved);
}

Unit act_forest_on_unit(const Unit &g, const Forest &f) {
  if (g.degree != f.roots)
    throw InvalidInput("act_forest_on_unit: degree(g) != roots(f)");
  const int n = f.leaves();
  switch (g.family) {
    case Family::F:
      return unit_identity(Family::F, n);
    case Family::T: {
      // rot(s)^f = rot(k) where k counts the leaves of the last s trees of f.
      const auto counts = tree_leaf_counts(f);
      int k = 0;
      for (int j = f.roots - g.rot.shift + 1; j <= f.roots; ++j) k += counts[j - 1];
      return unit_from_rotation(Family::T, make_rotation(n, k));
    }
    case Family::V: {
      // The k-th leaf of tree j goes to the k-th leaf of tree g(j) of g·f.
      const auto counts = tree_leaf_counts(f);
      std::vector<int> offset(f.roots + 1, 0);  // leaf offsets in g·f, by slot
      for (int j = 1; j <= f.roots; ++j) offset[g.perm(j)] = counts[j - 1];
      for (int s = 1; s <= f.roots; ++s) offset[s] += offset[s - 1];
      std::vector<int> img(n);
      int i = 0;
      for (int j = 1; j <= f.roots; ++j)
        for (int k = 1; k <= counts[j - 1]; ++k) img[i++] = offset[g.perm(j) - 1] + k;
      return unit_from_perm(Permutation{img});
    }
    default: {
      if (f.arity != 2)
        throw InvalidInput("braided families are defined over binary forests");
      BraidWord b = g.braid;
      for (int idx : f.word) b = clone_braid(b, idx);
      return unit_from_braid(g.family, b);
    }
  }
}

Permutation clone_perm(const Permutation &g, int i, int arity) {
  const int m = g.degree(), d = arity;
  if (i < 1 || i > m) throw InvalidInput("clone_perm: position out of range");
  const int gi = g(i);
  std::vector<int> img(m + d - 1);
  for (int j = 1; j <= m + d - 1; ++j) {
    // j0: the preimage point of g that leaf j descends from.
    const int j0 = (j <= i) ? j : (j < i + d ? i : j - (d - 1));
    img[j - 1] = (j0 == i) ? gi + (j - i)
                           : (g(j0) < gi ? g(j0) : g(j0) + d - 1);
  }
  return Permutation{img};
}

namespace {

int swap_adjacent(int k, int t) { return t == k ? k + 1 : (t == k + 1 ? k : t); }

// σ_i cloned at leaf j, as a word fragment.
std::vector<int> clone_positive_letter(int i, int j) {
  if (j < i) return {i + 1};
  if (j == i) return {i, i + 1};
  if (j == i + 1) return {i + 1, i};
  return {i};
}

}  // namespace

BraidWord clone_braid(const BraidWord &b, int j) {
  if (j < 1 || j > b.strands) throw InvalidInput("clone_braid: position out of range");
  // Letters clone one at a time, rightmost (source side) first; the cloning
  // position moves through each letter's underlying transposition.
  std::vector<std::vector<int>> frags;
  int cur = j;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
    const int k = *it > 0 ? *it : -*it;
    std::vector<int> frag =
        clone_positive_letter(k, *it > 0 ? cur : swap_adjacent(k, cur));
    if (*it < 0) {
      std::reverse(frag.begin(), frag.end());
      for (int &x : frag) x = -x;
    }
    frags.push_back(std::move(frag));
    cur = swap_adjacent(k, cur);
  }
  BraidWord out{b.strands + 1, {}};
  for (auto it = frags.rbegin(); it != frags.rend(); ++it)
    out.letters.insert(out.letters.end(), it->begin(), it->end());
  return out;
}

std::optional<Unit> try_recover_unit(const Unit &gp, int i, int arity) {
  const int d = arity;
  const int m = gp.degree - (d - 1);
  if (m < 1 || i < 1 || i > m) return std::nullopt;
  switch (gp.family) {
    case Family::F:
      return unit_identity(Family::F, m);
    case Family::T: {
      const Forest caret = single_caret(d, m, i);
      for (int s = 0; s < m; ++s) {
        Unit cand = unit_from_rotation(Family::T, make_rotation(m, s));
        if (unit_eq(act_forest_on_unit(cand, caret), gp)) return cand;
      }
      return std::nullopt;
    }
    case Family::V: {
      // Undo the clone: skip the inserted block at the source, collapse the
      // image block back onto its anchor c = gp(i).
      const int c = gp.perm(i);
      std::vector<int> img(m);
      for (int j = 1; j <= m; ++j) {
        const int t = gp.perm(j <= i ? j : j + d - 1);
        img[j - 1] = t <= c ? t : t - (d - 1);
      }
      Permutation cand{img};
      if (!valid_perm(cand)) return std::nullopt;
      if (clone_perm(cand, i, d) != gp.perm) return std::nullopt;
      return unit_from_perm(cand);
    }
    default: {
      if (d != 2) return std::nullopt;
      // Delete the duplicated strand, which sits at source position i+1.
      std::vector<int> rev;
      int t = i + 1;
      for (auto it = gp.braid.letters.rbegin(); it != gp.braid.letters.rend(); ++it) {
        const int k = *it > 0 ? *it : -*it;
        if (t == k || t == k + 1) {
          t = swap_adjacent(k, t);
          continue;
        }
        rev.push_back((*it > 0 ? 1 : -1) * (k - (t < k ? 1 : 0)));
      }
      std::reverse(rev.begin(), rev.end());
      BraidWord cand{gp.degree - 1, std::move(rev)};
      if (!braid_eq(clone_braid(cand, i), gp.braid)) return std::nullopt;
      return unit_from_braid(gp.family, cand);
    }
  }
}

Unit recover_unit(const Unit &gp, int i, int arity) {
  auto r = try_recover_unit(gp, i, arity);
  if (!r) throw InvalidInput("unit is not a clone at position " + std::to_string(i));
  return *r;
}

IndirectMorphism zs_identity(Family f, int arity, int object) {
  return {identity_forest(arity, object), unit_identity(f, object)};
}

IndirectMorphism zs_compose(const IndirectMorphism &a, const IndirectMorphism &b) {
  if (a.unit.family != b.unit.family || a.forest.arity != b.forest.arity)
    throw InvalidInput("zs_compose: mismatched kinds");
  if (a.unit.degree != b.forest.roots)
    throw InvalidInput("zs_compose: shape mismatch");
  // f1 u1 f2 u2 = f1 (u1·f2) (u1^{f2}) u2
  return {compose(a.forest, act_unit_on_forest(a.unit, b.forest)),
          unit_compose(act_forest_on_unit(a.unit, b.forest), b.unit)};
}

bool zs_eq(const IndirectMorphism &a, const IndirectMorphism &b) {
  return a.forest == b.forest && unit_eq(a.unit, b.unit);
}

ActionTable builtin_table(Family f, int arity) {
  if (family_braided(f) && arity != 2)
    throw InvalidInput("braided families are defined over binary forests");
  ActionTable t;
  t.family = f;
  t.arity = arity;
  t.name = family_name(f) + "-builtin";
  t.act_caret = [](const Unit &g, int i, int m) {
    if (g.degree != m) throw InvalidInput("act_caret: width mismatch");
    return unit_perm(g)(i);
  };
  switch (f) {
    case Family::F:
      t.clone_caret = [arity](const Unit &g, int, int m) {
        if (g.degree != m) throw InvalidInput("clone_caret: width mismatch");
        return unit_identity(Family::F, m + arity - 1);
      };
      break;
    case Family::T:
      t.clone_caret = [arity](const Unit &g, int i, int m) {
        if (g.degree != m) throw InvalidInput("clone_caret: width mismatch");
        return act_forest_on_unit(g, single_caret(arity, m, i));
      };
      break;
    case Family::V:
      t.clone_caret = [arity](const Unit &g, int i, int m) {
        if (g.degree != m) throw InvalidInput("clone_caret: width mismatch");
        return unit_from_perm(clone_perm(g.perm, i, arity));
      };
      break;
    default:
      t.clone_caret = [f](const Unit &g, int i, int m) {
        if (g.degree != m) throw InvalidInput("clone_caret: width mismatch");
        return unit_from_braid(f, clone_braid(g.braid, i));
      };
      break;
  }
  return t;
}

Forest table_act(const ActionTable &t, const Unit &g, const Forest &f) {
  if (t.family != g.family || t.arity != f.arity)
    throw InvalidInput("table_act: table does not match arguments");
  if (g.degree != f.roots) throw InvalidInput("table_act: degree(g) != roots(f)");
  std::vector<int> raw;
  raw.reserve(f.word.size());
  Unit cur = g;
  int m = f.roots;
  for (int idx : f.word) {
    raw.push_back(t.act_caret(cur, idx, m));
    cur = t.clone_caret(cur, idx, m);
    m += t.arity - 1;
  }
  return make_forest(f.arity, f.roots, std::move(raw));
}

Unit table_clone(const ActionTable &t, const Unit &g, const Forest &f) {
  if (t.family != g.family || t.arity != f.arity)
    throw InvalidInput("table_clone: table does not match arguments");
  if (g.degree != f.roots) throw InvalidInput("table_clone: degree(g) != roots(f)");
  Unit cur = g;
  int m = f.roots;
  for (int idx : f.word) {
    cur = t.clone_caret(cur, idx, m);
    m += t.arity - 1;
  }
  return cur;
}

CloningSystem builtin_cloning_system(Family f, int arity) {
  CloningSystem cs;
  cs.family = f;
  const ActionTable t = builtin_table(f, arity);
  cs.rho = [](const Unit &g) { return unit_perm(g); };
  cs.kappa = [t](const Unit &g, int k) { return t.clone_caret(g, k, g.degree); };
  return cs;
}

ActionTable cloning_system_adapter(const CloningSystem &cs, int arity) {
  ActionTable t;
  t.family = cs.family;
  t.arity = arity;
  t.name = family_name(cs.family) + "-cloning-adapter";
  const auto rho = cs.rho;
  const auto kappa = cs.kappa;
  t.act_caret = [rho](const Unit &g, int i, int m) {
    if (g.degree != m) throw InvalidInput("act_caret: width mismatch");
    return rho(g)(i);
  };
  t.clone_caret = [kappa](const Unit &g, int i, int m) {
    if (g.degree != m) throw InvalidInput("clone_caret: width mismatch");
    return kappa(g, i);
  };
  return t;
}

namespace {

// The forest category acting on one of the built-in unit groupoids, packaged
// for the generic axiom checker.
struct ThompsonSystem {
  ActionTable table;
  int degree_lo = 1, degree_hi = 1, braid_len = 2;

  using Obj = int;
  using For = Forest;
  using Un = Unit;

  std::vector<int> objects() const {
    std::vector<int> out;
    for (int m = degree_lo; m <= degree_hi; ++m) out.push_back(m);
    return out;
  }
  std::vector<Forest> generators(int m) const {
    std::vector<Forest> out;
    for (int i = 1; i <= m; ++i) out.push_back(single_caret(table.arity, m, i));
    return out;
  }
  std::vector<Unit> units(int m) const {
    return enumerate_units(table.family, m, braid_len);
  }
  int forest_source(const Forest &f) const { return f.leaves(); }
  Forest compose_f(const Forest &a, const Forest &b) const { return compose(a, b); }
  Forest id_forest(int m) const { return identity_forest(table.arity, m); }
  bool eq_f(const Forest &a, const Forest &b) const { return a == b; }
  Unit compose_u(const Unit &a, const Unit &b) const { return unit_compose(a, b); }
  Unit inverse_u(const Unit &a) const { return unit_inverse(a); }
  Unit id_unit(int m) const { return unit_identity(table.family, m); }
  bool eq_u(const Unit &a, const Unit &b) const { return unit_eq(a, b); }
  Forest act(const Unit &g, const Forest &f) const { return table_act(table, g, f); }
  Unit clone(const Unit &g, const Forest &f) const { return table_clone(table, g, f); }
  std::string show_obj(int m) const { return std::to_string(m); }
  std::string show_f(const Forest &f) const { return forest_to_text(f); }
  std::string show_u(const Unit &u) const { return unit_to_text(u); }
};

std::string unit_key(const Unit &u) {
  std::ostringstream os;
  os << family_name(u.family) << ":" << u.degree << ":";
  switch (u.family) {
    case Family::F:
      break;
    case Family::T:
      os << u.rot.shift;
      break;
    case Family::V:
      for (int v : u.perm.img) os << v << ",";
      break;
    default: {
      const BraidNormalForm nf = braid_normal_form(u.braid);
      os << nf.delta_power << "|";
      for (const Permutation &p : nf.factors) {
        for (int v : p.img) os << v << ",";
        os << ";";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace

Report check_ip_axioms(const ActionTable &t, const CheckerOptions &opt) {
  std::vector<int> degrees;
  for (int m = opt.min_degree; m <= opt.max_degree; ++m) degrees.push_back(m);
  std::vector<Report> parts(degrees.size());
  std::vector<std::string> errors(degrees.size());
#pragma omp parallel for schedule(dynamic)
  for (int di = 0; di < static_cast<int>(degrees.size()); ++di) {
    try {
      ThompsonSystem sys{t, degrees[di], degrees[di], opt.braid_len};
      parts[di] = check_ip_axioms_generic(sys);
    } catch (const std::exception &e) {
      errors[di] = e.what();
    }
  }
  Report rep;
  rep.command = "verify-ip-axioms(" + t.name + ")";
  for (size_t di = 0; di < parts.size(); ++di) {
    rep.merge(parts[di]);
    if (!errors[di].empty())
      rep.note("checker-ran-without-errors", "degree " + std::to_string(degrees[di]),
               "no exception", errors[di], false);
  }
  rep.finalize();
  return rep;
}

Report check_bv_relations(int max_width) {
  Report rep;
  rep.command = "verify-bv-relations";
  const ActionTable bv = builtin_table(Family::BV, 2);
  for (int m = 2; m <= max_width; ++m) {
    const auto unit = [m](std::vector<int> letters) {
      return unit_from_braid(Family::BV, BraidWord{m, std::move(letters)});
    };
    const auto caret = [m](int k) { return single_caret(2, m, k); };
    const auto tag = [m](int a, int b) {
      return "m=" + std::to_string(m) + " i=" + std::to_string(a) +
             " k=" + std::to_string(b);
    };
    for (int i = 1; i + 1 <= m - 1; ++i)
      for (int k = 1; k <= m; ++k) {
        const Unit lhs = unit({i, i + 1, i}), rhs = unit({i + 1, i, i + 1});
        rep.check("braid-relation-acts-consistently", tag(i, k),
                  table_act(bv, lhs, caret(k)) == table_act(bv, rhs, caret(k)));
        rep.check("braid-relation-clones-consistently", tag(i, k),
                  unit_eq(table_clone(bv, lhs, caret(k)),
                          table_clone(bv, rhs, caret(k))));
      }
    for (int i = 1; i <= m - 1; ++i)
      for (int j = i + 2; j <= m - 1; ++j)
        for (int k = 1; k <= m; ++k) {
          const std::string inst = tag(i, k) + " j=" + std::to_string(j);
          const Unit lhs = unit({i, j}), rhs = unit({j, i});
          rep.check("distant-letters-commute-acting", inst,
                    table_act(bv, lhs, caret(k)) == table_act(bv, rhs, caret(k)));
          rep.check("distant-letters-commute-cloning", inst,
                    unit_eq(table_clone(bv, lhs, caret(k)),
                            table_clone(bv, rhs, caret(k))));
        }
    // The defining caret exchange λ_l λ_k = λ_k λ_{l+1} (k < l), pushed
    // through one letter both ways.
    for (int l = 1; l <= m; ++l)
      for (int k = 1; k < l; ++k)
        for (int i = 1; i <= m - 1; ++i) {
          const std::string inst = tag(i, k) + " l=" + std::to_string(l);
          const Unit s = unit({i});
          const Forest a1 = table_act(bv, s, caret(l));
          const Unit s1 = table_clone(bv, s, caret(l));
          const Forest a2 = table_act(bv, s, caret(k));
          const Unit s2 = table_clone(bv, s, caret(k));
          const Forest lhs =
              compose(a1, table_act(bv, s1, single_caret(2, m + 1, k)));
          const Forest rhs =
              compose(a2, table_act(bv, s2, single_caret(2, m + 1, l + 1)));
          rep.check("caret-exchange-acts-consistently", inst, lhs == rhs);
          rep.check("caret-exchange-clones-consistently", inst,
                    unit_eq(table_clone(bv, s1, single_caret(2, m + 1, k)),
                            table_clone(bv, s2, single_caret(2, m + 1, l + 1))));
        }
  }
  rep.finalize();
  return rep;
}

Report check_pi_equivariance(int max_width, int braid_len, int samples,
                             std::uint64_t seed) {
  Report rep;
  rep.command = "verify-pi-equivariance";
  rep.seed = seed;
  const ActionTable vt = builtin_table(Family::V, 2);
  const ActionTable bvt = builtin_table(Family::BV, 2);
  const auto check_one = [&](const BraidWord &w, const Forest &f,
                             const std::string &inst) {
    const Unit beta = unit_from_braid(Family::BV, w);
    const Unit proj = unit_from_perm(braid_project(w));
    rep.check("projection-commutes-with-cloning", inst,
              unit_perm(table_clone(bvt, beta, f)) ==
                  table_clone(vt, proj, f).perm);
    rep.check("projection-commutes-with-tree-action", inst,
              table_act(bvt, beta, f) == table_act(vt, proj, f));
  };
  for (int m = 1; m <= max_width; ++m)
    for (const BraidWord &w : all_braid_words(m, braid_len, true))
      for (const Forest &f : all_forests(2, m, 2)) {
        std::ostringstream inst;
        inst << "m=" << m << " beta=" << unit_to_text(unit_from_braid(Family::BV, w))
             << " f=" << forest_to_text(f);
        check_one(w, f, inst.str());
      }
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const int m = rand_int(rng, 1, max_width + 2);
    BraidWord w{m, {}};
    if (m >= 2) w = random_braid_word(m, rand_int(rng, 0, braid_len + 2), rng);
    const Forest f = random_forest(2, m, rand_int(rng, 0, 4), rng);
    check_one(w, f, "random sample " + std::to_string(s));
  }
  rep.finalize();
  return rep;
}

Report check_injectivity(Family f, const CheckerOptions &opt) {
  Report rep;
  rep.command = "verify-injectivity(" + family_name(f) + ")";
  const int arity = 2;
  const ActionTable t = builtin_table(f, arity);
  for (int m = opt.min_degree; m <= opt.max_degree; ++m) {
    const auto units = enumerate_units(f, m, opt.braid_len);
    for (int i = 1; i <= m; ++i) {
      std::map<std::string, size_t> image;
      for (size_t a = 0; a < units.size(); ++a) {
        const Unit cloned = t.clone_caret(units[a], i, m);
        const std::string inst = "m=" + std::to_string(m) +
                                 " i=" + std::to_string(i) +
                                 " g=" + unit_to_text(units[a]);
        const auto [it, fresh] = image.emplace(unit_key(cloned), a);
        rep.check("cloning-is-injective", inst, fresh, "distinct image",
                  "collides with " + (fresh ? "" : unit_to_text(units[it->second])));
        const auto back = try_recover_unit(cloned, i, arity);
        rep.check("recovered-unit-matches", inst,
                  back.has_value() && unit_eq(*back, units[a]));
      }
    }
  }
  rep.finalize();
  return rep;
}

Report check_cloning_system(Family f, int arity, const CheckerOptions &opt) {
  Report rep;
  rep.command = "verify-cloning-system(" + family_name(f) + ")";
  const CloningSystem cs = builtin_cloning_system(f, arity);
  const ActionTable tab = builtin_table(f, arity);
  const ActionTable ad = cloning_system_adapter(cs, arity);
  for (int m = opt.min_degree; m <= opt.max_degree; ++m) {
    const auto units = enumerate_units(f, m, opt.braid_len);
    const auto tag = [m](const Unit &g, int k) {
      return "m=" + std::to_string(m) + " g=" + unit_to_text(g) +
             " k=" + std::to_string(k);
    };
    for (const Unit &g : units) {
      for (const Unit &h : units)
        for (int k = 1; k <= m; ++k)
          rep.check("composition-clones-by-stages",
                    tag(g, k) + " h=" + unit_to_text(h),
                    unit_eq(cs.kappa(unit_compose(g, h), k),
                            unit_compose(cs.kappa(g, cs.rho(h)(k)),
                                         cs.kappa(h, k))));
      for (int l = 1; l <= m; ++l)
        for (int k = 1; k < l; ++k)
          rep.check("iterated-cloning-exchange",
                    tag(g, k) + " l=" + std::to_string(l),
                    unit_eq(cs.kappa(cs.kappa(g, l), k),
                            cs.kappa(cs.kappa(g, k), l + 1)));
      for (int k = 1; k <= m; ++k) {
        const Permutation lp = cs.rho(cs.kappa(g, k));
        const Permutation rp = clone_perm(cs.rho(g), k, arity);
        bool ok = true;
        for (int i = 1; i <= m + arity - 1; ++i) {
          if (i >= k && i <= k + arity - 1) continue;  // the cloned block
          ok = ok && lp(i) == rp(i);
        }
        rep.check("projection-respects-cloning-off-block", tag(g, k), ok);
        rep.check("adapter-matches-builtin-action", tag(g, k),
                  ad.act_caret(g, k, m) == tab.act_caret(g, k, m));
        rep.check("adapter-matches-builtin-cloning", tag(g, k),
                  unit_eq(ad.clone_caret(g, k, m), tab.clone_caret(g, k, m)));
      }
    }
  }
  rep.finalize();
  return rep;
}

}  // namespace ore
