#include "ore/perm.hpp"

#include <algorithm>
#include <numeric>

namespace ore {

Permutation perm_identity(int n) {
  Permutation p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 1);
  return p;
}

bool valid_perm(const Permutation &p) {
  std::vector<bool> seen(p.img.size(), false);
  for (int v : p.img) {
    if (v < 1 || v > p.degree() || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

Permutation perm_compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree()) throw InvalidInput("perm_compose: degree mismatch");
  Permutation r;
  r.img.resize(p.degree());
  for (int i = 1; i <= p.degree(); ++i) r.img[i - 1] = p(q(i));
  return r;
}

Permutation perm_inverse(const Permutation &p) {
  Permutation r;
  r.img.resize(p.degree());
  for (int i = 1; i <= p.degree(); ++i) r.img[p(i) - 1] = i;
  return r;
}

Permutation transposition(int n, int i) {
  if (i < 1 || i + 1 > n) throw InvalidInput("transposition index out of range");
  Permutation p = perm_identity(n);
  std::swap(p.img[i - 1], p.img[i]);
  return p;
}

bool perm_is_identity(const Permutation &p) {
  for (int i = 1; i <= p.degree(); ++i)
    if (p(i) != i) return false;
  return true;
}

int perm_order(const Permutation &p) {
  Permutation q = p;
  int k = 1;
  while (!perm_is_identity(q)) {
    q = perm_compose(q, p);
    ++k;
  }
  return k;
}

Rotation make_rotation(int n, int shift) {
  if (n < 1) throw InvalidInput("rotation degree must be positive");
  return Rotation{n, ((shift % n) + n) % n};
}

Permutation rotation_perm(const Rotation &r) {
  Permutation p;
  p.img.resize(r.n);
  for (int i = 1; i <= r.n; ++i) p.img[i - 1] = ((i - 1 + r.shift) % r.n) + 1;
  return p;
}

std::optional<Rotation> rotation_from_perm(const Permutation &p) {
  if (p.degree() == 0) return std::nullopt;
  Rotation r = make_rotation(p.degree(), p(1) - 1);
  if (rotation_perm(r) == p) return r;
  return std::nullopt;
}

Rotation rotation_compose(const Rotation &a, const Rotation &b) {
  if (a.n != b.n) throw InvalidInput("rotation_compose: degree mismatch");
  return make_rotation(a.n, a.shift + b.shift);
}

Rotation rotation_inverse(const Rotation &a) { return make_rotation(a.n, -a.shift); }

std::vector<Permutation> all_perms(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation{base});
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace ore
