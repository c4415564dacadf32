#pragma once

#include <optional>
#include <vector>

#include "ore/perm.hpp"

namespace ore {

// A braid group element given as a word in the Artin generators: letter +i is
// σ_i, letter -i is σ_i^{-1}, 1 <= i < strands.  As with all morphisms here,
// the rightmost letter acts first; the projection to the symmetric group is
// a homomorphism for (p∘q)(x) = p(q(x)).
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;
  auto operator<=>(const BraidWord &) const = default;
};

// Left-greedy normal form Δ^p · A_1 ⋯ A_r: p is the (possibly negative) power
// of the half twist and each factor A_j is a permutation braid, encoded by its
// permutation, with id < A_j < Δ and S(A_{j+1}) ⊆ F(A_j).
struct BraidNormalForm {
  int strands = 2;
  int delta_power = 0;
  std::vector<Permutation> factors;
  auto operator<=>(const BraidNormalForm &) const = default;
};

bool valid_braid_word(const BraidWord &w);

BraidNormalForm braid_normal_form(const BraidWord &w);
BraidWord nf_to_word(const BraidNormalForm &nf);

BraidWord braid_multiply(const BraidWord &a, const BraidWord &b);
BraidWord braid_inverse(const BraidWord &a);
bool braid_eq(const BraidWord &a, const BraidWord &b);
bool braid_is_identity(const BraidWord &a);

// π: Braid_n -> Sym_n, σ_i ↦ (i, i+1).
Permutation braid_project(const BraidWord &w);
// A positive reduced word lifting p (length = number of inversions);
// π(braid_lift(p)) == p, and on permutation braids it inverts π.
BraidWord braid_lift(const Permutation &p);

// The positive half twist Δ_n as a reduced word with n(n-1)/2 crossings.
BraidWord braid_half_twist(int n);
Permutation half_twist_perm(int n);

bool is_pure(const BraidWord &w);                 // π(w) == id
std::optional<Rotation> cyclic_class(const BraidWord &w);  // π(w) a rotation?

// The action on the free group F_n (σ_i: x_i ↦ x_i x_{i+1} x_i^{-1},
// x_{i+1} ↦ x_i).  Faithful, so comparing generator images decides the word
// problem; kept as an independent cross-check for braid_eq.
std::vector<std::vector<int>> artin_images(const BraidWord &w);

// All words over signed generators with length exactly/up to `len`.
std::vector<BraidWord> all_braid_words(int strands, int max_len, bool signed_letters);
BraidWord random_braid_word(int strands, int len, Rng &rng);

}  // namespace ore
