#pragma once

#include <optional>
#include <vector>

#include "ore/common.hpp"

namespace ore {

// A permutation of {1..n}, stored as the image table img[i-1] = p(i).
// Composition is right-to-left: (p∘q)(i) = p(q(i)).
struct Permutation {
  std::vector<int> img;

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i - 1]; }
  auto operator<=>(const Permutation &) const = default;
};

Permutation perm_identity(int n);
Permutation perm_compose(const Permutation &p, const Permutation &q);
Permutation perm_inverse(const Permutation &p);
Permutation transposition(int n, int i);  // (i, i+1)
bool perm_is_identity(const Permutation &p);
int perm_order(const Permutation &p);
bool valid_perm(const Permutation &p);

// The rotation class shift + Z/n.  Embeds into Permutation as
// i ↦ ((i-1+shift) mod n) + 1.
struct Rotation {
  int n = 1;
  int shift = 0;  // reduced mod n
  auto operator<=>(const Rotation &) const = default;
};

Rotation make_rotation(int n, int shift);
Permutation rotation_perm(const Rotation &r);
std::optional<Rotation> rotation_from_perm(const Permutation &p);
Rotation rotation_compose(const Rotation &a, const Rotation &b);
Rotation rotation_inverse(const Rotation &a);

std::vector<Permutation> all_perms(int n);

}  // namespace ore
