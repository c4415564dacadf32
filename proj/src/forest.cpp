#include "ore/forest.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>

namespace ore {

namespace {
std::atomic<std::uint64_t> g_budget{0};
}

std::uint64_t size_budget() {
  std::uint64_t b = g_budget.load(std::memory_order_relaxed);
  if (b == 0) {
    const char *env = std::getenv("ORE_SIZE_BUDGET");
    b = env ? std::strtoull(env, nullptr, 10) : 0;
    if (b == 0) b = 50'000'000;
    g_budget.store(b, std::memory_order_relaxed);
  }
  return b;
}

void set_size_budget(std::uint64_t b) {
  g_budget.store(b ? b : 50'000'000, std::memory_order_relaxed);
}

void charge_budget(std::uint64_t &used, std::uint64_t amount, const char *what) {
  used += amount;
  if (used > size_budget())
    throw BudgetExceeded(std::string(what) + ": enumeration exceeds size budget " +
                         std::to_string(size_budget()));
}

bool valid_raw_word(int arity, int roots, const std::vector<int> &raw) {
  if (arity < 2 || roots < 1) return false;
  int width = roots;
  for (int i : raw) {
    if (i < 1 || i > width) return false;
    width += arity - 1;
  }
  return true;
}

static void require_valid(int arity, int roots, const std::vector<int> &raw) {
  if (!valid_raw_word(arity, roots, raw))
    throw InvalidInput("invalid caret word for arity " + std::to_string(arity) +
                       ", roots " + std::to_string(roots));
}

std::vector<int> normal_form_by_rewriting(int arity, int roots,
                                          std::vector<int> raw, Rng *order_rng) {
  require_valid(arity, roots, raw);
  for (;;) {
    std::vector<int> spots;
    for (size_t k = 0; k + 1 < raw.size(); ++k)
      if (raw[k + 1] < raw[k]) spots.push_back(static_cast<int>(k));
    if (spots.empty()) return raw;
    int k = order_rng ? spots[rand_int(*order_rng, 0, (int)spots.size() - 1)]
                      : spots.front();
    int a = raw[k], b = raw[k + 1];
    raw[k] = b;
    raw[k + 1] = a + arity - 1;
  }
}

Forest make_forest(int arity, int roots, std::vector<int> raw_word) {
  std::vector<int> nf = normal_form_by_rewriting(arity, roots, std::move(raw_word));
  return Forest{arity, roots, std::move(nf)};
}

Forest identity_forest(int arity, int roots) {
  if (arity < 2 || roots < 1) throw InvalidInput("bad arity/roots");
  return Forest{arity, roots, {}};
}

Forest single_caret(int arity, int roots, int i) {
  if (i < 1 || i > roots) throw InvalidInput("caret index out of range");
  return Forest{arity, roots, {i}};
}

CaretSet carets_of(const Forest &f) {
  // Replay the word against a row of node addresses.
  std::vector<NodeAddress> row;
  row.reserve(f.leaves());
  for (int r = 1; r <= f.roots; ++r) row.push_back({r, {}});
  CaretSet cs;
  for (int i : f.word) {
    NodeAddress at = row[i - 1];
    cs.insert(at);
    std::vector<NodeAddress> kids;
    for (int c = 1; c <= f.arity; ++c) {
      NodeAddress k = at;
      k.path.push_back(c);
      kids.push_back(std::move(k));
    }
    row.erase(row.begin() + (i - 1));
    row.insert(row.begin() + (i - 1), kids.begin(), kids.end());
  }
  return cs;
}

std::vector<NodeAddress> leaf_addresses(const Forest &f) {
  std::vector<NodeAddress> row;
  for (int r = 1; r <= f.roots; ++r) row.push_back({r, {}});
  for (int i : f.word) {
    NodeAddress at = row[i - 1];
    std::vector<NodeAddress> kids;
    for (int c = 1; c <= f.arity; ++c) {
      NodeAddress k = at;
      k.path.push_back(c);
      kids.push_back(std::move(k));
    }
    row.erase(row.begin() + (i - 1));
    row.insert(row.begin() + (i - 1), kids.begin(), kids.end());
  }
  return row;
}

static bool ancestor_closed(const CaretSet &cs) {
  for (const NodeAddress &a : cs) {
    if (a.path.empty()) continue;
    NodeAddress parent = a;
    parent.path.pop_back();
    if (!cs.count(parent)) return false;
  }
  return true;
}

Forest forest_from_carets(int arity, int roots, const CaretSet &cs) {
  if (!ancestor_closed(cs)) throw InvalidInput("caret set not ancestor-closed");
  for (const NodeAddress &a : cs) {
    if (a.root < 1 || a.root > roots) throw InvalidInput("caret root out of range");
    for (int d : a.path)
      if (d < 1 || d > arity) throw InvalidInput("caret path digit out of range");
  }
  // Leaves: children of carets that are not carets, plus caret-free roots.
  std::vector<NodeAddress> leaves;
  for (int r = 1; r <= roots; ++r)
    if (!cs.count({r, {}})) leaves.push_back({r, {}});
  for (const NodeAddress &a : cs) {
    for (int c = 1; c <= arity; ++c) {
      NodeAddress k = a;
      k.path.push_back(c);
      if (!cs.count(k)) leaves.push_back(std::move(k));
    }
  }
  std::sort(leaves.begin(), leaves.end());
  // Preorder (= lexicographic) caret order; each index is the number of
  // leaves strictly to the left plus one.
  std::vector<int> word;
  word.reserve(cs.size());
  for (const NodeAddress &a : cs) {
    size_t lo = std::lower_bound(leaves.begin(), leaves.end(), a) - leaves.begin();
    word.push_back(static_cast<int>(lo) + 1);
  }
  Forest f{arity, roots, word};
  if (!valid_raw_word(arity, roots, word) ||
      !std::is_sorted(word.begin(), word.end()))
    throw InvalidInput("caret set does not define a canonical forest");
  return f;
}

Forest compose(const Forest &f, const Forest &g) {
  if (f.arity != g.arity) throw InvalidInput("compose: arity mismatch");
  if (f.leaves() != g.roots)
    throw InvalidInput("compose: leaves(f) != roots(g)");
  std::vector<NodeAddress> fl = leaf_addresses(f);
  CaretSet cs = carets_of(f);
  for (const NodeAddress &c : carets_of(g)) {
    NodeAddress graft = fl[c.root - 1];
    graft.path.insert(graft.path.end(), c.path.begin(), c.path.end());
    cs.insert(std::move(graft));
  }
  return forest_from_carets(f.arity, f.roots, cs);
}

Forest compose(const Forest &f, const Forest &g, const Forest &h) {
  return compose(compose(f, g), h);
}

bool left_divides(const Forest &a, const Forest &f) {
  if (a.arity != f.arity || a.roots != f.roots) return false;
  CaretSet ca = carets_of(a), cf = carets_of(f);
  return std::includes(cf.begin(), cf.end(), ca.begin(), ca.end());
}

Forest left_quotient(const Forest &a, const Forest &f) {
  if (!left_divides(a, f)) throw InvalidInput("left_quotient: a does not divide f");
  CaretSet ca = carets_of(a), cf = carets_of(f);
  std::vector<NodeAddress> al = leaf_addresses(a);
  auto leaf_of = [&](const NodeAddress &node) -> std::pair<int, NodeAddress> {
    // The unique leaf of `a` that is a prefix of `node`.
    for (size_t i = 0; i < al.size(); ++i) {
      const NodeAddress &l = al[i];
      if (l.root != node.root || l.path.size() > node.path.size()) continue;
      if (std::equal(l.path.begin(), l.path.end(), node.path.begin())) {
        NodeAddress rest;
        rest.root = static_cast<int>(i) + 1;
        rest.path.assign(node.path.begin() + l.path.size(), node.path.end());
        return {static_cast<int>(i), rest};
      }
    }
    throw InvalidInput("left_quotient: caret below no leaf of a");
  };
  CaretSet rest;
  for (const NodeAddress &c : cf)
    if (!ca.count(c)) rest.insert(leaf_of(c).second);
  return forest_from_carets(a.arity, a.leaves(), rest);
}

Forest forest_lcm(const Forest &a, const Forest &b) {
  if (a.arity != b.arity || a.roots != b.roots)
    throw InvalidInput("lcm: object mismatch");
  CaretSet u = carets_of(a);
  CaretSet cb = carets_of(b);
  u.insert(cb.begin(), cb.end());
  return forest_from_carets(a.arity, a.roots, u);
}

Forest forest_gcd(const Forest &a, const Forest &b) {
  if (a.arity != b.arity || a.roots != b.roots)
    throw InvalidInput("gcd: object mismatch");
  CaretSet ca = carets_of(a), cb = carets_of(b), out;
  std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                        std::inserter(out, out.begin()));
  return forest_from_carets(a.arity, a.roots, out);
}

Forest garside_delta(int arity, int n) {
  std::vector<int> word;
  for (int i = 0; i < n; ++i) word.push_back(i * arity + 1);
  return Forest{arity, n, word};
}

bool is_elementary(const Forest &f) {
  for (const NodeAddress &c : carets_of(f))
    if (!c.path.empty()) return false;
  return true;
}

Forest garside_head(const Forest &f) {
  return forest_gcd(f, garside_delta(f.arity, f.roots));
}

std::vector<Forest> garside_factorization(const Forest &f) {
  std::vector<Forest> factors;
  Forest rest = f;
  while (!rest.is_identity()) {
    Forest h = garside_head(rest);
    factors.push_back(h);
    rest = left_quotient(h, rest);
  }
  return factors;
}

bool component_reachable(int arity, int m, int n) {
  if (m < 1 || n < 1) return false;
  return m <= n && (n - m) % (arity - 1) == 0;
}

int object_height(int n) { return n; }

int morphism_drop(const Forest &f) { return f.leaves() - f.roots; }

std::vector<int> tree_leaf_counts(const Forest &f) {
  std::vector<int> counts(f.roots, 0);
  for (const NodeAddress &l : leaf_addresses(f)) counts[l.root - 1]++;
  return counts;
}

std::vector<Forest> trees_of(const Forest &f) {
  std::vector<CaretSet> per(f.roots);
  for (const NodeAddress &c : carets_of(f)) {
    NodeAddress local = c;
    local.root = 1;
    per[c.root - 1].insert(std::move(local));
  }
  std::vector<Forest> trees;
  trees.reserve(f.roots);
  for (int r = 0; r < f.roots; ++r)
    trees.push_back(forest_from_carets(f.arity, 1, per[r]));
  return trees;
}

Forest forest_from_trees(int arity, const std::vector<Forest> &trees) {
  CaretSet cs;
  for (size_t r = 0; r < trees.size(); ++r) {
    if (trees[r].arity != arity || trees[r].roots != 1)
      throw InvalidInput("forest_from_trees: each tree must have one root");
    for (NodeAddress c : carets_of(trees[r])) {
      c.root = static_cast<int>(r) + 1;
      cs.insert(std::move(c));
    }
  }
  return forest_from_carets(arity, static_cast<int>(trees.size()), cs);
}

std::vector<int> bottom_caret_positions(const Forest &f) {
  CaretSet cs = carets_of(f);
  std::vector<NodeAddress> leaves = leaf_addresses(f);
  std::vector<int> out;
  for (const NodeAddress &c : cs) {
    bool bottom = true;
    for (int ch = 1; ch <= f.arity && bottom; ++ch) {
      NodeAddress k = c;
      k.path.push_back(ch);
      if (cs.count(k)) bottom = false;
    }
    if (!bottom) continue;
    size_t lo = std::lower_bound(leaves.begin(), leaves.end(), c) - leaves.begin();
    out.push_back(static_cast<int>(lo) + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Forest> strip_bottom_caret(const Forest &f, int i) {
  CaretSet cs = carets_of(f);
  std::vector<NodeAddress> leaves = leaf_addresses(f);
  if (i < 1 || i > static_cast<int>(leaves.size())) return std::nullopt;
  // The caret above leaf i: parent of the i-th leaf, whose children must all
  // be leaves and whose leftmost child is exactly leaf i.
  NodeAddress leaf = leaves[i - 1];
  if (leaf.path.empty() || leaf.path.back() != 1) return std::nullopt;
  NodeAddress parent = leaf;
  parent.path.pop_back();
  if (!cs.count(parent)) return std::nullopt;
  for (int ch = 2; ch <= f.arity; ++ch) {
    NodeAddress k = parent;
    k.path.push_back(ch);
    if (cs.count(k)) return std::nullopt;
    if (static_cast<size_t>(i - 1 + ch - 1) >= leaves.size() ||
        leaves[i - 1 + ch - 1] != k)
      return std::nullopt;
  }
  cs.erase(parent);
  return forest_from_carets(f.arity, f.roots, cs);
}

std::vector<Forest> enumerate_elementary(int arity, int leaves) {
  // Compositions of `leaves` into parts 1 (trivial tree) and `arity` (caret).
  std::vector<Forest> out;
  std::vector<int> parts;
  std::uint64_t used = 0;
  auto rec = [&](auto &&self, int rest) -> void {
    if (rest == 0) {
      charge_budget(used, 1, "enumerate_elementary");
      std::vector<Forest> trees;
      for (int p : parts)
        trees.push_back(p == 1 ? identity_forest(arity, 1)
                               : make_forest(arity, 1, {1}));
      out.push_back(forest_from_trees(arity, trees));
      return;
    }
    parts.push_back(1);
    self(self, rest - 1);
    parts.pop_back();
    if (rest >= arity) {
      parts.push_back(arity);
      self(self, rest - arity);
      parts.pop_back();
    }
  };
  rec(rec, leaves);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Forest> all_forests(int arity, int roots, int max_carets) {
  std::vector<Forest> out{identity_forest(arity, roots)};
  std::uint64_t used = 0;
  size_t lo = 0;
  for (int c = 1; c <= max_carets; ++c) {
    size_t hi = out.size();
    std::set<Forest> next;
    for (size_t k = lo; k < hi; ++k) {
      for (int i = 1; i <= out[k].leaves(); ++i) {
        charge_budget(used, 1, "all_forests");
        std::vector<int> w = out[k].word;
        w.push_back(i);
        next.insert(make_forest(arity, roots, std::move(w)));
      }
    }
    lo = hi;
    out.insert(out.end(), next.begin(), next.end());
  }
  return out;
}

std::vector<Forest> all_trees(int arity, int leaves) {
  std::vector<Forest> out;
  if ((leaves - 1) % (arity - 1) != 0) return out;
  int carets = (leaves - 1) / (arity - 1);
  for (const Forest &f : all_forests(arity, 1, carets))
    if (f.carets() == carets) out.push_back(f);
  return out;
}

Forest random_forest(int arity, int roots, int carets, Rng &rng) {
  std::vector<int> w;
  int width = roots;
  for (int c = 0; c < carets; ++c) {
    w.push_back(rand_int(rng, 1, width));
    width += arity - 1;
  }
  return make_forest(arity, roots, std::move(w));
}

std::string forest_to_text(const Forest &f) {
  std::ostringstream os;
  os << 'F';
  if (f.arity != 2) os << f.arity;
  os << '(' << f.roots << ';';
  for (size_t i = 0; i < f.word.size(); ++i) {
    if (i) os << ',';
    os << f.word[i];
  }
  os << ')';
  return os.str();
}

Forest forest_from_text(const std::string &text) {
  size_t p = 0;
  auto fail = [&]() -> InvalidInput {
    return InvalidInput("bad forest text: " + text);
  };
  if (p >= text.size() || text[p] != 'F') throw fail();
  ++p;
  int arity = 2;
  if (p < text.size() && std::isdigit((unsigned char)text[p])) {
    arity = 0;
    while (p < text.size() && std::isdigit((unsigned char)text[p]))
      arity = arity * 10 + (text[p++] - '0');
  }
  if (p >= text.size() || text[p] != '(') throw fail();
  ++p;
  auto read_int = [&]() {
    if (p >= text.size() || !std::isdigit((unsigned char)text[p])) throw fail();
    int v = 0;
    while (p < text.size() && std::isdigit((unsigned char)text[p]))
      v = v * 10 + (text[p++] - '0');
    return v;
  };
  int roots = read_int();
  if (p >= text.size() || text[p] != ';') throw fail();
  ++p;
  std::vector<int> word;
  if (p < text.size() && text[p] != ')') {
    word.push_back(read_int());
    while (p < text.size() && text[p] == ',') {
      ++p;
      word.push_back(read_int());
    }
  }
  if (p >= text.size() || text[p] != ')') throw fail();
  return make_forest(arity, roots, std::move(word));
}

}  // namespace ore
