#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "ore/braid.hpp"

using namespace ore;

namespace {

// Independent word-problem oracle: the action on the free group F_n, written
// from scratch.  Words are vectors of signed generator indices with free
// reduction; sigma_i maps x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i.
using FWord = std::vector<int>;

void fpush(FWord &w, int g) {
  if (!w.empty() && w.back() == -g)
    w.pop_back();
  else
    w.push_back(g);
}

FWord subst(const FWord &w, const std::vector<FWord> &images) {
  FWord out;
  for (int g : w) {
    const FWord &img = images[std::abs(g) - 1];
    if (g > 0)
      for (int x : img) fpush(out, x);
    else
      for (auto it = img.rbegin(); it != img.rend(); ++it) fpush(out, -*it);
  }
  return out;
}

std::vector<FWord> letter_images(int n, int letter) {
  std::vector<FWord> im(n);
  for (int g = 1; g <= n; ++g) im[g - 1] = {g};
  const int i = std::abs(letter);
  if (letter > 0) {
    im[i - 1] = {i, i + 1, -i};
    im[i] = {i};
  } else {
    im[i - 1] = {i + 1};
    im[i] = {-(i + 1), i, i + 1};
  }
  return im;
}

std::vector<FWord> free_group_images(const BraidWord &w) {
  std::vector<FWord> psi(w.strands);
  for (int g = 1; g <= w.strands; ++g) psi[g - 1] = {g};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const auto phi = letter_images(w.strands, *it);
    for (FWord &img : psi) img = subst(img, phi);
  }
  return psi;
}

bool oracle_eq(const BraidWord &a, const BraidWord &b) {
  return a.strands == b.strands && free_group_images(a) == free_group_images(b);
}

// Rewrites a word with one randomly placed relator; the braid is unchanged.
BraidWord insert_relator(const BraidWord &w, Rng &rng) {
  BraidWord out = w;
  const int pos = rand_int(rng, 0, (int)out.letters.size());
  std::vector<int> ins;
  switch (rand_int(rng, 0, 2)) {
    case 0: {  // g g^{-1}
      const int i = rand_int(rng, 1, w.strands - 1);
      ins = {i, -i};
      break;
    }
    case 1: {  // braid relation as a trivial word
      const int i = rand_int(rng, 1, std::max(1, w.strands - 2));
      if (i + 1 < w.strands) {
        ins = {i, i + 1, i, -(i + 1), -i, -(i + 1)};
        break;
      }
      [[fallthrough]];
    }
    default: {  // far commutation as a trivial word
      if (w.strands >= 4) {
        ins = {1, 3, -1, -3};
      } else {
        const int i = rand_int(rng, 1, w.strands - 1);
        ins = {-i, i};
      }
    }
  }
  out.letters.insert(out.letters.begin() + pos, ins.begin(), ins.end());
  return out;
}

BraidWord bw(int strands, std::vector<int> letters) {
  return BraidWord{strands, std::move(letters)};
}

}  // namespace

TEST_CASE("defining relations hold, neighbours do not commute") {
  CHECK(braid_eq(bw(3, {1, 2, 1}), bw(3, {2, 1, 2})));
  CHECK(braid_eq(bw(4, {1, 3}), bw(4, {3, 1})));
  CHECK_FALSE(braid_eq(bw(3, {1, 2}), bw(3, {2, 1})));
  CHECK_FALSE(braid_eq(bw(2, {1}), bw(2, {-1})));
  CHECK(braid_eq(bw(2, {1, -1}), bw(2, {})));
  CHECK(braid_is_identity(bw(3, {1, 2, -2, -1})));
  CHECK_FALSE(braid_is_identity(bw(3, {1, 2, -1, -2})));
  CHECK(valid_braid_word(bw(3, {2, -1})));
  CHECK_FALSE(valid_braid_word(bw(3, {3})));
  CHECK_FALSE(valid_braid_word(bw(3, {0})));
}

TEST_CASE("braid_eq agrees with the free-group oracle") {
  Rng rng(123457);
  int eq_seen = 0, neq_seen = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = rand_int(rng, 2, 4);
    const BraidWord a = random_braid_word(n, rand_int(rng, 0, 6), rng);
    // a deliberately equal partner, made by inserting relators
    BraidWord b = insert_relator(a, rng);
    if (rand_int(rng, 0, 1)) b = insert_relator(b, rng);
    REQUIRE(oracle_eq(a, b));
    CHECK(braid_eq(a, b));
    CHECK(braid_normal_form(a) == braid_normal_form(b));
    ++eq_seen;

    // and an unrelated word, judged by the oracle alone
    const BraidWord c = random_braid_word(n, rand_int(rng, 0, 6), rng);
    const bool want = oracle_eq(a, c);
    CHECK(braid_eq(a, c) == want);
    CHECK((braid_normal_form(a) == braid_normal_form(c)) == want);
    if (!want) ++neq_seen;
  }
  CHECK(eq_seen == 150);
  CHECK(neq_seen > 100);
}

TEST_CASE("normal form round trips and is canonical") {
  Rng rng(888);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = rand_int(rng, 2, 5);
    const BraidWord w = random_braid_word(n, rand_int(rng, 0, 8), rng);
    const BraidNormalForm nf = braid_normal_form(w);
    CHECK(nf.strands == n);
    const BraidWord back = nf_to_word(nf);
    CHECK(braid_eq(back, w));
    CHECK(braid_normal_form(back) == nf);
    // factors are strictly between the identity and the half twist
    for (const Permutation &p : nf.factors) {
      CHECK_FALSE(perm_is_identity(p));
      CHECK(p != half_twist_perm(n));
    }
    // w * w^{-1} normalises to the trivial form
    const BraidNormalForm triv = braid_normal_form(braid_multiply(w, braid_inverse(w)));
    CHECK(triv.delta_power == 0);
    CHECK(triv.factors.empty());
  }

  CHECK(braid_normal_form(bw(2, {-1})) == BraidNormalForm{2, -1, {}});
  CHECK(braid_normal_form(bw(3, {1, 2, 1})) == BraidNormalForm{3, 1, {}});
  CHECK(braid_normal_form(bw(3, {})) == BraidNormalForm{3, 0, {}});
}

TEST_CASE("half twist: length, permutation, conjugation rule, central square") {
  for (int n = 2; n <= 6; ++n) {
    const BraidWord d = braid_half_twist(n);
    CHECK((int)d.letters.size() == n * (n - 1) / 2);
    for (int l : d.letters) CHECK(l > 0);
    const Permutation rev = half_twist_perm(n);
    for (int i = 1; i <= n; ++i) CHECK(rev(i) == n + 1 - i);
    CHECK(braid_project(d) == rev);
  }
  for (int n = 2; n <= 5; ++n) {
    const BraidWord d = braid_half_twist(n);
    const BraidWord d2 = braid_multiply(d, d);
    for (int i = 1; i < n; ++i) {
      const BraidWord gen = bw(n, {i});
      // delta conjugates sigma_i to sigma_{n-i}; delta^2 is central
      CHECK(braid_eq(braid_multiply(d, gen), braid_multiply(bw(n, {n - i}), d)));
      CHECK(braid_eq(braid_multiply(d2, gen), braid_multiply(gen, d2)));
    }
  }
}

TEST_CASE("projection to the symmetric group and its section") {
  CHECK(braid_project(bw(3, {1})) == Permutation{{2, 1, 3}});
  CHECK(braid_project(bw(3, {1, 2})) == Permutation{{2, 3, 1}});

  Rng rng(5150);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rand_int(rng, 2, 5);
    const BraidWord a = random_braid_word(n, rand_int(rng, 0, 6), rng);
    const BraidWord b = random_braid_word(n, rand_int(rng, 0, 6), rng);
    CHECK(braid_project(braid_multiply(a, b)) ==
          perm_compose(braid_project(a), braid_project(b)));
    CHECK(perm_is_identity(
        perm_compose(braid_project(a), braid_project(braid_inverse(a)))));
  }

  for (const Permutation &p : all_perms(4)) {
    const BraidWord w = braid_lift(p);
    CHECK(braid_project(w) == p);
    int inversions = 0;
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        if (p(i) > p(j)) ++inversions;
    CHECK((int)w.letters.size() == inversions);
    for (int l : w.letters) CHECK(l > 0);
  }
  CHECK(braid_lift(perm_identity(3)).letters.empty());
  CHECK(braid_lift(Permutation{{2, 3, 4, 1}}) == bw(4, {1, 2, 3}));
}

TEST_CASE("purity and cyclic classes") {
  CHECK(is_pure(bw(3, {1, 1})));
  CHECK_FALSE(is_pure(bw(3, {1})));
  CHECK(is_pure(bw(4, {1, 2, -1, -2, 1, 2, -1, -2})) ==
        perm_is_identity(braid_project(bw(4, {1, 2, -1, -2, 1, 2, -1, -2}))));

  const auto r = cyclic_class(braid_lift(rotation_perm(make_rotation(4, 1))));
  REQUIRE(r.has_value());
  CHECK(*r == make_rotation(4, 1));
  CHECK(cyclic_class(bw(3, {1})) == std::nullopt);  // (1 2) is no rotation of 3
  const auto id_rot = cyclic_class(bw(3, {}));
  REQUIRE(id_rot.has_value());
  CHECK(*id_rot == make_rotation(3, 0));
}

TEST_CASE("library free-group images match the local oracle") {
  Rng rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = rand_int(rng, 2, 4);
    const BraidWord w = random_braid_word(n, rand_int(rng, 0, 5), rng);
    CHECK(artin_images(w) == free_group_images(w));
  }
}

TEST_CASE("word enumeration covers the expected counts") {
  CHECK(all_braid_words(2, 2, true).size() == 1 + 2 + 4);
  CHECK(all_braid_words(3, 2, false).size() == 1 + 2 + 4);
  const auto ws = all_braid_words(3, 3, true);
  CHECK(ws.size() == 1 + 4 + 16 + 64);
  CHECK(std::set<BraidWord>(ws.begin(), ws.end()).size() == ws.size());
}
