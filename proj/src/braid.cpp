#include "ore/braid.hpp"

#include <algorithm>
#include <cstdlib>

namespace ore {

bool valid_braid_word(const BraidWord &w) {
  if (w.strands < 1) return false;
  for (int l : w.letters)
    if (l == 0 || std::abs(l) > w.strands - 1) return false;
  return true;
}

static void require_valid(const BraidWord &w) {
  if (!valid_braid_word(w)) throw InvalidInput("invalid braid word");
}

Permutation braid_project(const BraidWord &w) {
  require_valid(w);
  Permutation p = perm_identity(w.strands);
  for (int l : w.letters) p = perm_compose(p, transposition(w.strands, std::abs(l)));
  return p;
}

Permutation half_twist_perm(int n) {
  Permutation p;
  p.img.resize(n);
  for (int i = 1; i <= n; ++i) p.img[i - 1] = n + 1 - i;
  return p;
}

// Left descents: σ_i left-divides the permutation braid of x.
static std::vector<int> left_descents(const Permutation &x) {
  Permutation inv = perm_inverse(x);
  std::vector<int> out;
  for (int i = 1; i < x.degree(); ++i)
    if (inv(i) > inv(i + 1)) out.push_back(i);
  return out;
}

// Right descents: σ_i right-divides the permutation braid of x.
static bool right_descent(const Permutation &x, int i) { return x(i) > x(i + 1); }

// Makes the adjacent pair (a, b) left-weighted by sliding generators from the
// front of b to the back of a.  Returns true if anything moved.
static bool make_left_weighted(Permutation &a, Permutation &b) {
  int n = a.degree();
  bool changed = false, progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i < n; ++i) {
      Permutation binv = perm_inverse(b);
      if (binv(i) > binv(i + 1) && !right_descent(a, i)) {
        a = perm_compose(a, transposition(n, i));
        b = perm_compose(transposition(n, i), b);
        changed = progress = true;
      }
    }
  }
  return changed;
}

namespace {

struct NormalFormBuilder {
  int strands;
  int delta_power = 0;
  std::vector<Permutation> factors;

  void settle() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::erase_if(factors, perm_is_identity);
      for (size_t j = 1; j < factors.size(); ++j)
        if (make_left_weighted(factors[j - 1], factors[j])) changed = true;
    }
    Permutation delta = half_twist_perm(strands);
    size_t lead = 0;
    while (lead < factors.size() && factors[lead] == delta) ++lead;
    delta_power += static_cast<int>(lead);
    factors.erase(factors.begin(), factors.begin() + lead);
  }

  void push_letter(int l) {
    int i = std::abs(l);
    Permutation s = transposition(strands, i);
    if (l > 0) {
      factors.push_back(s);
    } else {
      Permutation delta = half_twist_perm(strands);
      delta_power -= 1;
      for (Permutation &f : factors) f = perm_compose(delta, perm_compose(f, delta));
      factors.push_back(perm_compose(delta, s));
    }
    settle();
  }
};

}  // namespace

BraidNormalForm braid_normal_form(const BraidWord &w) {
  require_valid(w);
  NormalFormBuilder b{w.strands};
  for (int l : w.letters) b.push_letter(l);
  return BraidNormalForm{w.strands, b.delta_power, std::move(b.factors)};
}

BraidWord braid_lift(const Permutation &p) {
  if (!valid_perm(p)) throw InvalidInput("braid_lift: not a permutation");
  BraidWord w{p.degree(), {}};
  Permutation q = p;
  for (;;) {
    std::vector<int> d = left_descents(q);
    if (d.empty()) break;
    w.letters.push_back(d.front());
    q = perm_compose(transposition(q.degree(), d.front()), q);
  }
  return w;
}

BraidWord braid_half_twist(int n) { return braid_lift(half_twist_perm(n)); }

BraidWord nf_to_word(const BraidNormalForm &nf) {
  BraidWord out{nf.strands, {}};
  BraidWord delta = braid_half_twist(nf.strands);
  if (nf.delta_power >= 0) {
    for (int k = 0; k < nf.delta_power; ++k)
      out.letters.insert(out.letters.end(), delta.letters.begin(), delta.letters.end());
  } else {
    BraidWord dinv = braid_inverse(delta);
    for (int k = 0; k < -nf.delta_power; ++k)
      out.letters.insert(out.letters.end(), dinv.letters.begin(), dinv.letters.end());
  }
  for (const Permutation &f : nf.factors) {
    BraidWord fw = braid_lift(f);
    out.letters.insert(out.letters.end(), fw.letters.begin(), fw.letters.end());
  }
  return out;
}

BraidWord braid_multiply(const BraidWord &a, const BraidWord &b) {
  if (a.strands != b.strands) throw InvalidInput("braid_multiply: strand mismatch");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord braid_inverse(const BraidWord &a) {
  BraidWord out{a.strands, {}};
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    out.letters.push_back(-*it);
  return out;
}

bool braid_eq(const BraidWord &a, const BraidWord &b) {
  if (a.strands != b.strands) return false;
  return braid_normal_form(a) == braid_normal_form(b);
}

bool braid_is_identity(const BraidWord &a) {
  BraidNormalForm nf = braid_normal_form(a);
  return nf.delta_power == 0 && nf.factors.empty();
}

bool is_pure(const BraidWord &w) { return perm_is_identity(braid_project(w)); }

std::optional<Rotation> cyclic_class(const BraidWord &w) {
  return rotation_from_perm(braid_project(w));
}

// --- Artin action on the free group ---

static void free_reduce(std::vector<int> &w) {
  std::vector<int> out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  w = std::move(out);
}

static std::vector<int> substitute(const std::vector<int> &w, int i, bool inverse) {
  std::vector<int> out;
  for (int l : w) {
    int g = std::abs(l);
    bool neg = l < 0;
    std::vector<int> img;
    if (!inverse) {
      if (g == i)
        img = {i, i + 1, -i};
      else if (g == i + 1)
        img = {i};
      else
        img = {g};
    } else {
      if (g == i)
        img = {i + 1};
      else if (g == i + 1)
        img = {-(i + 1), i, i + 1};
      else
        img = {g};
    }
    if (neg) {
      std::reverse(img.begin(), img.end());
      for (int &x : img) x = -x;
    }
    out.insert(out.end(), img.begin(), img.end());
  }
  free_reduce(out);
  return out;
}

std::vector<std::vector<int>> artin_images(const BraidWord &w) {
  require_valid(w);
  std::vector<std::vector<int>> img(w.strands);
  for (int j = 1; j <= w.strands; ++j) img[j - 1] = {j};
  // Rightmost letter acts first, so substitute from the right end inward.
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    for (auto &x : img) x = substitute(x, std::abs(*it), *it < 0);
  return img;
}

std::vector<BraidWord> all_braid_words(int strands, int max_len, bool signed_letters) {
  std::vector<BraidWord> out{{strands, {}}};
  std::uint64_t used = 0;
  size_t lo = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t hi = out.size();
    for (size_t k = lo; k < hi; ++k) {
      for (int i = 1; i < strands; ++i) {
        charge_budget(used, 1, "all_braid_words");
        BraidWord w = out[k];
        w.letters.push_back(i);
        out.push_back(std::move(w));
        if (signed_letters) {
          BraidWord v = out[k];
          v.letters.push_back(-i);
          out.push_back(std::move(v));
        }
      }
    }
    lo = hi;
  }
  return out;
}

BraidWord random_braid_word(int strands, int len, Rng &rng) {
  BraidWord w{strands, {}};
  for (int k = 0; k < len; ++k) {
    int i = rand_int(rng, 1, strands - 1);
    w.letters.push_back(rand_int(rng, 0, 1) ? i : -i);
  }
  return w;
}

}  // namespace ore
