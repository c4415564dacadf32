#include "ore/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ore/braid.hpp"
#include "ore/common.hpp"
#include "ore/complex.hpp"
#include "ore/forest.hpp"
#include "ore/fraction.hpp"
#include "ore/homology.hpp"
#include "ore/json_io.hpp"
#include "ore/report.hpp"
#include "ore/rewrite.hpp"
#include "ore/zs.hpp"

namespace ore {

namespace {

struct Args {
  std::string op;
  std::string family = "F";
  int n = 0;
  int bound = 0;
  int arity = 2;
  int base = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> in;
  std::string out;
  int max_dim = -1;
  std::string rule;
  std::string graph;
  std::string edge;
};

template <class T>
std::string seq_text(const std::vector<T> &v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

std::string braid_text(const BraidWord &w) {
  return "B" + std::to_string(w.strands) + seq_text(w.letters);
}

std::string labels_text(const SimplicialComplex &x, const std::vector<int> &s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i)
    os << (i ? " " : "") << x.labels[s[i]];
  return os.str();
}

// Informational record: the value is the point, so expected == got.
void info(Report &rep, const std::string &name, const std::string &instance,
          const std::string &got) {
  rep.note(name, instance, got, got, true);
}

const Json &need_in(const Args &a, const std::vector<Json> &inputs, std::size_t i,
                    std::size_t total) {
  if (inputs.size() != total)
    throw InvalidInput(a.op + ": expected " + std::to_string(total) +
                       " --in file(s), got " + std::to_string(inputs.size()));
  return inputs[i];
}

Family cli_family(const Args &a) { return family_from_name(a.family); }

SimpleGraph kind_graph(const std::string &kind, int n) {
  if (kind == "L") return path_graph(n);
  if (kind == "C") return cycle_graph(n);
  if (kind == "K") return complete_graph(n);
  throw InvalidInput("matching: --graph must be one of L, C, K");
}

RewriteRule cli_rule(const Args &a) {
  return builtin_rule(a.rule.empty() ? "basilica" : a.rule);
}

LabeledGraph cli_graph_file(const Args &a) {
  if (a.graph.empty()) throw InvalidInput(a.op + ": --graph file required");
  return graph_from_json(load_json_file(a.graph));
}

int require_n(const Args &a, const char *what) {
  if (a.n < 1) throw InvalidInput(std::string(what) + ": --n required");
  return a.n;
}

// --- subcommand handlers ------------------------------------------------

Report run_forest(const Args &a, const std::vector<Json> &inputs,
                  std::optional<Json> &payload) {
  Report rep;
  auto forest_out = [&](const Forest &f, const std::string &name,
                        const std::string &instance) {
    payload = forest_to_json(f);
    info(rep, name, instance, forest_to_text(f));
  };
  if (a.op == "compose") {
    const Forest f = forest_from_json(need_in(a, inputs, 0, 2));
    const Forest g = forest_from_json(need_in(a, inputs, 1, 2));
    forest_out(compose(f, g), "compose",
               forest_to_text(f) + " * " + forest_to_text(g));
  } else if (a.op == "nf") {
    const Json &j = need_in(a, inputs, 0, 1);
    // Read the raw caret word directly so the rewriting is visible.
    Forest f;
    f.arity = j.contains("arity") ? j.at("arity").get<int>() : 2;
    f.roots = j.contains("roots") ? j.at("roots").get<int>() : 1;
    std::vector<int> raw;
    if (!j.contains("word") || !j.at("word").is_array())
      throw InvalidInput("nf: forest json needs a word array");
    for (const Json &v : j.at("word")) {
      if (!v.is_number_integer())
        throw InvalidInput("nf: caret word must hold integers");
      raw.push_back(v.get<int>());
    }
    if (!valid_raw_word(f.arity, f.roots, raw))
      throw InvalidInput("nf: caret word runs out of range");
    f.word = normal_form_by_rewriting(f.arity, f.roots, raw);
    payload = forest_to_json(f);
    rep.note("normal-form", seq_text(raw), seq_text(raw), seq_text(f.word), true);
  } else if (a.op == "lcm" || a.op == "gcd") {
    const Forest f = forest_from_json(need_in(a, inputs, 0, 2));
    const Forest g = forest_from_json(need_in(a, inputs, 1, 2));
    const Forest r = a.op == "lcm" ? forest_lcm(f, g) : forest_gcd(f, g);
    forest_out(r, a.op, forest_to_text(f) + " , " + forest_to_text(g));
  } else if (a.op == "quotient") {
    const Forest f = forest_from_json(need_in(a, inputs, 0, 2));
    const Forest g = forest_from_json(need_in(a, inputs, 1, 2));
    forest_out(left_quotient(f, g), "left-quotient",
               forest_to_text(f) + " \\ " + forest_to_text(g));
  } else if (a.op == "delta") {
    const int n = require_n(a, "delta");
    forest_out(garside_delta(a.arity, n), "garside-delta", std::to_string(n));
  } else if (a.op == "head") {
    const Forest f = forest_from_json(need_in(a, inputs, 0, 1));
    forest_out(garside_head(f), "garside-head", forest_to_text(f));
  } else if (a.op == "elementary") {
    const int n = require_n(a, "elementary");
    const auto all = enumerate_elementary(a.arity, n);
    Json list = Json::array();
    for (const Forest &e : all) list.push_back(forest_to_json(e));
    payload = list;
    info(rep, "elementary-count", std::to_string(n), std::to_string(all.size()));
  } else if (a.op == "height") {
    const int n = require_n(a, "height");
    info(rep, "object-height", std::to_string(n), std::to_string(object_height(n)));
  } else {  // reachable
    const int m = require_n(a, "reachable");
    if (a.bound < 1) throw InvalidInput("reachable: --bound (target object) required");
    const bool ok = component_reachable(a.arity, m, a.bound);
    info(rep, "component-reachable",
         std::to_string(m) + "->" + std::to_string(a.bound), ok ? "true" : "false");
  }
  return rep;
}

Report run_braid(const Args &a, const std::vector<Json> &inputs,
                 std::optional<Json> &payload) {
  Report rep;
  if (a.op == "nf") {
    const BraidWord w = braid_from_json(need_in(a, inputs, 0, 1));
    const BraidWord nf = nf_to_word(braid_normal_form(w));
    payload = braid_to_json(nf);
    rep.note("braid-nf", braid_text(w), braid_text(w), braid_text(nf), true);
  } else if (a.op == "mul") {
    const BraidWord x = braid_from_json(need_in(a, inputs, 0, 2));
    const BraidWord y = braid_from_json(need_in(a, inputs, 1, 2));
    const BraidWord r = braid_multiply(x, y);
    payload = braid_to_json(r);
    info(rep, "braid-mul", braid_text(x) + " * " + braid_text(y), braid_text(r));
  } else if (a.op == "inv") {
    const BraidWord x = braid_from_json(need_in(a, inputs, 0, 1));
    const BraidWord r = braid_inverse(x);
    payload = braid_to_json(r);
    info(rep, "braid-inv", braid_text(x), braid_text(r));
  } else if (a.op == "eq") {
    const BraidWord x = braid_from_json(need_in(a, inputs, 0, 2));
    const BraidWord y = braid_from_json(need_in(a, inputs, 1, 2));
    rep.note("braid-eq", braid_text(x) + " ~ " + braid_text(y), "equal",
             braid_eq(x, y) ? "equal" : "different", braid_eq(x, y));
  } else if (a.op == "project") {
    const BraidWord x = braid_from_json(need_in(a, inputs, 0, 1));
    const Permutation p = braid_project(x);
    payload = perm_to_json(p);
    info(rep, "braid-project", braid_text(x), seq_text(p.img));
  } else if (a.op == "lift") {
    const Permutation p = perm_from_json(need_in(a, inputs, 0, 1));
    const BraidWord w = braid_lift(p);
    payload = braid_to_json(w);
    info(rep, "braid-lift", seq_text(p.img), braid_text(w));
  } else if (a.op == "pure") {
    const BraidWord x = braid_from_json(need_in(a, inputs, 0, 1));
    info(rep, "braid-pure", braid_text(x), is_pure(x) ? "true" : "false");
  } else {  // cyclic
    const BraidWord x = braid_from_json(need_in(a, inputs, 0, 1));
    const auto rot = cyclic_class(x);
    info(rep, "braid-cyclic", braid_text(x),
         rot ? "rot(" + std::to_string(rot->shift) + ") mod " + std::to_string(rot->n)
             : "not cyclic");
  }
  return rep;
}

Report run_group(const Args &a, const std::vector<Json> &inputs,
                 std::optional<Json> &payload) {
  Report rep;
  const Family fam = cli_family(a);
  auto element_out = [&](const Element &x, const std::string &name,
                         const std::string &instance) {
    payload = element_to_json(x);
    info(rep, name, instance, element_to_text(x));
  };
  if (a.op == "mul") {
    const Element x = element_from_json(need_in(a, inputs, 0, 2));
    const Element y = element_from_json(need_in(a, inputs, 1, 2));
    element_out(frac_mul(x, y), "mul",
                element_to_text(x) + " * " + element_to_text(y));
  } else if (a.op == "inv") {
    const Element x = element_from_json(need_in(a, inputs, 0, 1));
    element_out(frac_inv(x), "inv", element_to_text(x));
  } else if (a.op == "eq") {
    const Element x = element_from_json(need_in(a, inputs, 0, 2));
    const Element y = element_from_json(need_in(a, inputs, 1, 2));
    const bool equal = frac_eq(x, y);
    rep.note("eq", element_to_text(x) + " ~ " + element_to_text(y), "equal",
             equal ? "equal" : "different", equal);
  } else if (a.op == "order") {
    const Element x = element_from_json(need_in(a, inputs, 0, 1));
    const int bound = a.bound > 0 ? a.bound : 64;
    const int k = frac_order(x, bound);
    info(rep, "order", element_to_text(x),
         k > 0 ? std::to_string(k) : "none within " + std::to_string(bound));
  } else if (a.op == "reduce") {
    const Element x = element_from_json(need_in(a, inputs, 0, 1));
    const Element r = reduce(x);
    element_out(r, "reduce", element_to_text(x));
    rep.note("reduced", element_to_text(r), "true",
             is_reduced(r) ? "true" : "false", is_reduced(r));
  } else if (a.op == "expand") {
    const Element x = element_from_json(need_in(a, inputs, 0, 2));
    const Forest h = forest_from_json(need_in(a, inputs, 1, 2));
    const Element y = expand(x, h);
    element_out(y, "expand", element_to_text(x) + " by " + forest_to_text(h));
    rep.note("expand-equivalent", element_to_text(y), "equal",
             frac_eq(x, y) ? "equal" : "different", frac_eq(x, y));
  } else if (a.op == "project") {
    const Element x = element_from_json(need_in(a, inputs, 0, 1));
    element_out(frac_project(x), "project", element_to_text(x));
  } else if (a.op == "act") {
    const Unit u = unit_from_json(fam, need_in(a, inputs, 0, 2));
    const Forest f = forest_from_json(need_in(a, inputs, 1, 2));
    const Forest r = act_unit_on_forest(u, f);
    payload = forest_to_json(r);
    info(rep, "act", unit_to_text(u) + " on " + forest_to_text(f),
         forest_to_text(r));
  } else if (a.op == "clone") {
    const Unit u = unit_from_json(fam, need_in(a, inputs, 0, 2));
    const Forest f = forest_from_json(need_in(a, inputs, 1, 2));
    const Unit r = act_forest_on_unit(u, f);
    payload = unit_to_json(r);
    info(rep, "clone", unit_to_text(u) + " ^ " + forest_to_text(f),
         unit_to_text(r));
  } else if (a.op == "zs-compose") {
    auto read = [&](const Json &j) {
      IndirectMorphism m;
      if (!j.contains("forest") || !j.contains("unit"))
        throw InvalidInput("zs-compose: input needs forest and unit fields");
      m.forest = forest_from_json(j.at("forest"));
      m.unit = unit_from_json(fam, j.at("unit"));
      return m;
    };
    const IndirectMorphism x = read(need_in(a, inputs, 0, 2));
    const IndirectMorphism y = read(need_in(a, inputs, 1, 2));
    const IndirectMorphism r = zs_compose(x, y);
    payload = Json{{"forest", forest_to_json(r.forest)}, {"unit", unit_to_json(r.unit)}};
    info(rep, "zs-compose",
         forest_to_text(x.forest) + "." + unit_to_text(x.unit) + " * " +
             forest_to_text(y.forest) + "." + unit_to_text(y.unit),
         forest_to_text(r.forest) + "." + unit_to_text(r.unit));
  } else {  // recover
    const Unit u = unit_from_json(fam, need_in(a, inputs, 0, 1));
    const int i = require_n(a, "recover");
    const auto u0 = try_recover_unit(u, i, a.arity);
    if (u0) payload = unit_to_json(*u0);
    rep.note("recover", unit_to_text(u) + " at " + std::to_string(i),
             "a unit cloning to the input",
             u0 ? unit_to_text(*u0) : "not a clone at this position",
             u0.has_value());
  }
  return rep;
}

Report run_complex(const Args &a, const std::vector<Json> &inputs,
                   std::optional<Json> &payload) {
  Report rep;
  auto complex_out = [&](const SimplicialComplex &x) {
    payload = complex_to_json(x);
    info(rep, "vertices", "count", std::to_string(x.labels.size()));
    info(rep, "f-vector", "all dimensions", seq_text(f_vector(x)));
  };
  if (a.op == "E") {
    const Family fam = cli_family(a);
    const int n = require_n(a, "E");
    const EComplex e = a.bound > 0 ? build_E(fam, n, a.bound) : build_E(fam, n);
    complex_out(e.complex);
    info(rep, "poset-elements", "count", std::to_string(e.poset.elements.size()));
    info(rep, "poset-atoms", "count", std::to_string(e.poset.atoms.size()));
    const auto chains = poset_chain_counts(e.poset);
    const auto faces = face_chain_counts(e.complex);
    rep.note("barycentric-f-vector", "poset chains vs face chains",
             seq_text(faces), seq_text(chains), chains == faces);
  } else if (a.op == "matching") {
    if (a.graph.empty()) throw InvalidInput("matching: --graph (L, C, K) required");
    complex_out(matching_complex(kind_graph(a.graph, require_n(a, "matching"))));
  } else if (a.op == "fibers") {
    const int n = require_n(a, "fibers");
    const SimplicialComplex ev = descending_complex(Family::V, n);
    const FiberReport fr = e_to_matching_fibers(ev, n);
    rep.note("fibers-surjective", std::to_string(n), "true",
             fr.surjective ? "true" : "false", fr.surjective);
    rep.note("fibers-simplicial", std::to_string(n), "true",
             fr.simplicial ? "true" : "false", fr.simplicial);
    rep.note("fibers-spherical", std::to_string(n) + ": every k-simplex lifts 2^(k+1) ways",
             "true", fr.fibers_spherical ? "true" : "false", fr.fibers_spherical);
    info(rep, "fibers-checked",
         std::to_string(fr.simplices_checked) + " simplices",
         std::to_string(fr.lifts_checked) + " lifts");
  } else if (a.op == "link") {
    const Forest tree = forest_from_json(need_in(a, inputs, 0, 1));
    complex_out(descending_link_of_tree(tree));
  } else if (a.op == "sublevel") {
    if (a.bound < 2) throw InvalidInput("sublevel: --bound of at least 2 required");
    complex_out(sublevel_complex(a.bound));
  } else {  // flag
    const SimplicialComplex x = complex_from_json(need_in(a, inputs, 0, 1));
    const bool flag = is_flag(x);
    rep.note("flag", "complex", "true", flag ? "true" : "false", flag);
  }
  return rep;
}

Report run_homology(const Args &a, const std::vector<Json> &inputs,
                    std::optional<Json> &payload) {
  Report rep;
  const SimplicialComplex x = complex_from_json(need_in(a, inputs, 0, 1));
  const int top = complex_dimension(x);
  if (top < 0) {
    info(rep, "homology", "empty complex", "no groups");
    info(rep, "connectivity", "empty complex", "-2");
    return rep;
  }
  const int md = a.max_dim >= 0 ? a.max_dim : top;
  const auto groups = reduced_homology(x, md);
  Json betti = Json::array();
  for (std::size_t k = 0; k < groups.size(); ++k) {
    info(rep, "homology", "H~" + std::to_string(k), homology_to_text(groups[k]));
    betti.push_back(groups[k].rank);
  }
  payload = Json{{"betti", betti}};
  info(rep, "connectivity", "through dim " + std::to_string(md),
       std::to_string(homological_connectivity(x, md)));
  return rep;
}

Report run_grounded(const Args &a, const std::vector<Json> &inputs,
                    std::optional<Json> &payload) {
  Report rep;
  const SimplicialComplex x = complex_from_json(need_in(a, inputs, 0, 1));
  const GroundedCertificate cert = grounded_connectivity(x);
  info(rep, "contractible", "cone point found", cert.contractible ? "true" : "false");
  const int bound = grounded_bound(x);
  info(rep, "grounded-bound", "proven connectivity",
       cert.contractible ? "infinity" : std::to_string(bound));
  if (!cert.witness.empty()) {
    info(rep, "witness", "grounding simplex", labels_text(x, cert.witness));
    info(rep, "witness-miss", "k", std::to_string(cert.witness_miss));
    const bool ok = is_k_ground(x, cert.witness, cert.witness_miss);
    rep.note("witness-grounded", labels_text(x, cert.witness), "true",
             ok ? "true" : "false", ok);
  }
  payload = Json{{"contractible", cert.contractible},
                 {"connectivity", cert.contractible ? Json("infinity") : Json(bound)},
                 {"witness", cert.witness},
                 {"witness_miss", cert.witness_miss}};
  return rep;
}

Report run_verify(const Args &a) {
  const int bound = a.bound > 0 ? a.bound : 4;
  if (a.op == "ip-axioms" || a.op == "injectivity" || a.op == "cloning-system") {
    const Family fam = cli_family(a);
    CheckerOptions opt;
    opt.max_degree = bound;
    opt.braid_len = a.n > 0 ? a.n : 2;
    opt.seed = a.seed;
    if (a.op == "ip-axioms") return check_ip_axioms(builtin_table(fam, a.arity), opt);
    if (a.op == "injectivity") return check_injectivity(fam, opt);
    return check_cloning_system(fam, a.arity, opt);
  }
  if (a.op == "bv-relations") return check_bv_relations(bound);
  if (a.op == "pi-equivariance")
    return check_pi_equivariance(bound, a.n > 0 ? a.n : 3, 100, a.seed);
  // graph-ip
  const RewriteRule rule = cli_rule(a);
  const LabeledGraph base =
      a.graph.empty() ? basilica_graph() : graph_from_json(load_json_file(a.graph));
  return check_graph_ip_axioms(rule, base, a.bound > 0 ? a.bound : 2);
}

Report run_rewrite(const Args &a, const std::vector<Json> &inputs,
                   std::optional<Json> &payload) {
  Report rep;
  if (a.op == "apply") {
    const RewriteRule rule = cli_rule(a);
    const LabeledGraph g = cli_graph_file(a);
    if (a.edge.empty()) throw InvalidInput("apply: --edge required");
    const LabeledGraph r = expand_edge(rule, g, a.edge);
    payload = graph_to_json(r);
    info(rep, "apply", rule.name + " at " + a.edge,
         "height " + std::to_string(graph_height(g)) + " -> " +
             std::to_string(graph_height(r)));
  } else if (a.op == "compose") {
    const RewriteRule rule = cli_rule(a);
    const RewriteMorphism f = morphism_from_json(need_in(a, inputs, 0, 2));
    const RewriteMorphism g = morphism_from_json(need_in(a, inputs, 1, 2));
    const RewriteMorphism r = rewrite_compose(rule, f, g);
    payload = morphism_to_json(r);
    info(rep, "compose", "address sets " + std::to_string(f.addresses.size()) +
                             " + " + std::to_string(g.addresses.size()),
         std::to_string(r.addresses.size()) + " addresses");
  } else if (a.op == "lcm" || a.op == "gcd") {
    const RewriteMorphism x = morphism_from_json(need_in(a, inputs, 0, 2));
    const RewriteMorphism y = morphism_from_json(need_in(a, inputs, 1, 2));
    const RewriteMorphism r = a.op == "lcm" ? rewrite_lcm(x, y) : rewrite_gcd(x, y);
    payload = morphism_to_json(r);
    info(rep, a.op, std::to_string(x.addresses.size()) + " , " +
                        std::to_string(y.addresses.size()),
         std::to_string(r.addresses.size()) + " addresses");
  } else if (a.op == "act") {
    const RewriteRule rule = cli_rule(a);
    const GraphIso g = iso_from_json(need_in(a, inputs, 0, 2));
    const RewriteMorphism m = morphism_from_json(need_in(a, inputs, 1, 2));
    if (!iso_valid(m.base, m.base, g))
      throw InvalidInput("act: the map is not an automorphism of the base graph");
    const RewriteMorphism moved = iso_act(g, m);
    const GraphIso cloned = iso_clone(rule, g, m);
    payload = morphism_to_json(moved);
    const bool ok = iso_valid(rewrite_source(rule, m), rewrite_source(rule, moved), cloned);
    rep.note("cloned-iso-valid", "source graphs", "true", ok ? "true" : "false", ok);
    info(rep, "act", std::to_string(m.addresses.size()) + " addresses",
         std::to_string(moved.addresses.size()) + " addresses");
  } else if (a.op == "patterns") {
    const RewriteRule rule = cli_rule(a);
    const LabeledGraph g = cli_graph_file(a);
    const auto pats = find_patterns(rule, g);
    info(rep, "patterns", rule.name, std::to_string(pats.size()));
    for (const Pattern &p : pats)
      info(rep, "pattern", seq_text(p.edge_ids), p.v_img + ">" + p.w_img);
  } else if (a.op == "eh") {
    const RewriteRule rule = cli_rule(a);
    const LabeledGraph g = cli_graph_file(a);
    const SimplicialComplex x = reduction_complex(rule, g);
    payload = complex_to_json(x);
    info(rep, "vertices", "count", std::to_string(x.labels.size()));
    const int top = complex_dimension(x);
    if (top < 0) {
      info(rep, "homology", "empty complex", "no groups");
    } else {
      const int md = a.max_dim >= 0 ? a.max_dim : top;
      const auto groups = reduced_homology(x, md);
      for (std::size_t k = 0; k < groups.size(); ++k) {
        info(rep, "homology", "H~" + std::to_string(k), homology_to_text(groups[k]));
        info(rep, "betti", std::to_string(k), std::to_string(groups[k].rank));
      }
    }
  } else {  // height
    const LabeledGraph g = cli_graph_file(a);
    info(rep, "height", "edge count", std::to_string(graph_height(g)));
  }
  return rep;
}

}  // namespace

const std::vector<CliCommand> &cli_command_table() {
  static const std::vector<CliCommand> table = {
      {"forest", "compose", {"compose"}},
      {"forest", "nf", {"normal_form_by_rewriting"}},
      {"forest", "lcm", {"forest_lcm"}},
      {"forest", "gcd", {"forest_gcd"}},
      {"forest", "quotient", {"left_quotient"}},
      {"forest", "delta", {"garside_delta"}},
      {"forest", "head", {"garside_head"}},
      {"forest", "elementary", {"enumerate_elementary"}},
      {"forest", "height", {"object_height"}},
      {"forest", "reachable", {"component_reachable"}},
      {"braid", "nf", {"braid_normal_form"}},
      {"braid", "mul", {"braid_multiply"}},
      {"braid", "inv", {"braid_inverse"}},
      {"braid", "eq", {"braid_eq"}},
      {"braid", "project", {"braid_project"}},
      {"braid", "lift", {"braid_lift"}},
      {"braid", "pure", {"is_pure"}},
      {"braid", "cyclic", {"cyclic_class"}},
      {"group", "mul", {"frac_mul"}},
      {"group", "inv", {"frac_inv"}},
      {"group", "eq", {"frac_eq"}},
      {"group", "order", {"frac_order"}},
      {"group", "reduce", {"reduce", "is_reduced"}},
      {"group", "expand", {"expand"}},
      {"group", "project", {"frac_project"}},
      {"group", "act", {"act_unit_on_forest"}},
      {"group", "clone", {"act_forest_on_unit"}},
      {"group", "zs-compose", {"zs_compose"}},
      {"group", "recover", {"recover_unit"}},
      {"complex", "E", {"build_E", "poset_chain_counts", "face_chain_counts"}},
      {"complex", "matching", {"matching_complex"}},
      {"complex", "fibers", {"e_to_matching_fibers"}},
      {"complex", "link", {"descending_link_of_tree"}},
      {"complex", "sublevel", {"sublevel_complex"}},
      {"complex", "flag", {"is_flag"}},
      {"homology", "", {"reduced_homology", "homological_connectivity"}},
      {"grounded", "", {"grounded_connectivity", "grounded_bound", "is_k_ground"}},
      {"verify", "ip-axioms", {"check_ip_axioms"}},
      {"verify", "bv-relations", {"check_bv_relations"}},
      {"verify", "pi-equivariance", {"check_pi_equivariance"}},
      {"verify", "injectivity", {"check_injectivity"}},
      {"verify", "cloning-system", {"check_cloning_system"}},
      {"verify", "graph-ip", {"check_graph_ip_axioms"}},
      {"rewrite", "apply", {"expand_edge"}},
      {"rewrite", "compose", {"rewrite_compose"}},
      {"rewrite", "lcm", {"rewrite_lcm"}},
      {"rewrite", "gcd", {"rewrite_gcd"}},
      {"rewrite", "act", {"iso_act", "iso_clone"}},
      {"rewrite", "patterns", {"find_patterns"}},
      {"rewrite", "eh", {"reduction_complex", "reduced_homology"}},
      {"rewrite", "height", {"graph_height"}},
  };
  return table;
}

int cli_run(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"exact arithmetic, word problems, and descending complexes "
               "for forest-fraction groups"};
  app.name("ore");
  app.require_subcommand(1);

  Args a;
  std::map<std::string, CLI::App *> subs;
  std::map<std::string, std::vector<std::string>> ops;
  for (const CliCommand &c : cli_command_table())
    if (!c.op.empty()) ops[c.subcommand].push_back(c.op);

  auto add_common = [&](CLI::App *s) {
    s->add_option("--seed", a.seed, "seed recorded in the report");
    s->add_option("--in", a.in, "input json file(s)");
    s->add_option("--out", a.out, "write the result payload to this file");
  };
  auto make_sub = [&](const std::string &name, const std::string &desc) {
    CLI::App *s = app.add_subcommand(name, desc);
    add_common(s);
    auto it = ops.find(name);
    if (it != ops.end())
      s->add_option("op", a.op, "operation")
          ->required()
          ->check(CLI::IsMember(it->second));
    subs[name] = s;
    return s;
  };

  CLI::App *forest = make_sub("forest", "forest-category arithmetic");
  forest->add_option("--n", a.n, "object (leaf count or position)");
  forest->add_option("--bound", a.bound, "target object for reachability");
  forest->add_option("--arity", a.arity, "caret arity");

  make_sub("braid", "braid words: normal forms, projection, lifting");

  CLI::App *group = make_sub("group", "fraction-group arithmetic");
  group->add_option("--family", a.family, "F, T, V, BF, BT or BV");
  group->add_option("--n", a.n, "caret position for recover");
  group->add_option("--bound", a.bound, "order search bound");
  group->add_option("--arity", a.arity, "caret arity");
  group->add_option("--base", a.base, "basepoint object");

  CLI::App *complex = make_sub("complex", "descending and matching complexes");
  complex->add_option("--family", a.family, "F, T or V");
  complex->add_option("--n", a.n, "object / point count");
  complex->add_option("--bound", a.bound, "size bound (sublevel, permutation family)");
  complex->add_option("--graph", a.graph, "graph kind for matching: L, C or K");

  CLI::App *homology = make_sub("homology", "reduced integral homology of a complex");
  homology->add_option("--max-dim", a.max_dim, "top homology degree");

  make_sub("grounded", "grounded-connectivity certificate of a complex");

  CLI::App *verify = make_sub("verify", "axiom and relation checkers");
  verify->add_option("--family", a.family, "family under test");
  verify->add_option("--n", a.n, "unit word length bound (braided families)");
  verify->add_option("--bound", a.bound, "degree / width bound");
  verify->add_option("--arity", a.arity, "caret arity");
  verify->add_option("--rule", a.rule, "rewriting rule for graph-ip");
  verify->add_option("--graph", a.graph, "base graph json file for graph-ip");

  CLI::App *rewrite = make_sub("rewrite", "graph rewriting: expansions and reductions");
  rewrite->add_option("--rule", a.rule, "rewriting rule (L2, D2, basilica)");
  rewrite->add_option("--graph", a.graph, "graph json file");
  rewrite->add_option("--edge", a.edge, "edge id to expand");
  rewrite->add_option("--max-dim", a.max_dim, "top homology degree");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::vector<Json> inputs;
    for (const std::string &path : a.in) inputs.push_back(load_json_file(path));
    std::optional<Json> payload;
    Report rep;
    std::string sub;
    for (const auto &[name, s] : subs)
      if (s->parsed()) sub = name;
    if (sub == "forest") rep = run_forest(a, inputs, payload);
    else if (sub == "braid") rep = run_braid(a, inputs, payload);
    else if (sub == "group") rep = run_group(a, inputs, payload);
    else if (sub == "complex") rep = run_complex(a, inputs, payload);
    else if (sub == "homology") rep = run_homology(a, inputs, payload);
    else if (sub == "grounded") rep = run_grounded(a, inputs, payload);
    else if (sub == "verify") rep = run_verify(a);
    else rep = run_rewrite(a, inputs, payload);
    rep.command = a.op.empty() ? sub : sub + " " + a.op;
    rep.seed = a.seed;
    rep.finalize();
    if (!a.out.empty()) save_json_file(a.out, payload ? *payload : report_to_json(rep));
    out << json_to_text(report_to_json(rep));
    return rep.all_pass() ? 0 : 1;
  } catch (const InvalidInput &e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded &e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception &e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error &e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ore
