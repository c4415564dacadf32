#pragma once

#include <string>

#include "ore/forest.hpp"
#include "ore/zs.hpp"

namespace ore {

// A fraction num ∘ unit ∘ den⁻¹ in the groupoid of the family's fraction
// category: num and den are forests with a common number of leaves, the unit
// sits between them with that degree.  As a morphism it runs from object
// roots(den) to object roots(num); group elements have both equal to `base`.
struct Element {
  Family family = Family::F;
  Forest num;
  Unit unit;
  Forest den;
};

int frac_source(const Element &x);  // roots(den)
int frac_target(const Element &x);  // roots(num)
bool valid_element(const Element &x);

Element frac_identity(Family f, int arity, int object);
// Validates, optionally reduces.  Throws InvalidInput on shape mismatch.
Element make_element(Family f, Forest num, Unit unit, Forest den,
                     bool do_reduce = true);
Element frac_from_forest_pair(Family f, const Forest &num, const Forest &den);

// Right-expansion by a forest h with roots(h) == leaves(den): represents the
// same fraction with both forests composed past h.
Element expand(const Element &x, const Forest &h);
// Cancels all common bottom carets (den caret + matching num caret through
// the unit), deterministically; the result is the unique reduced form.
Element reduce(Element x);
bool is_reduced(const Element &x);

Element frac_mul(const Element &x, const Element &y);  // x ∘ y, y acts first
Element frac_inv(const Element &x);
bool frac_eq(const Element &x, const Element &y);
bool frac_is_identity(const Element &x);
Element frac_pow(const Element &x, int k);  // k may be negative
Element frac_conjugate(const Element &a, const Element &b);  // a b a⁻¹
// Smallest 1 <= k <= max_order with x^k == 1, or 0 if none found.
int frac_order(const Element &x, int max_order);

// Braided families map onto their shadow family (BF→F, BT→T, BV→V) by
// projecting the unit; this is a group homomorphism under frac_eq.  Plain
// families are returned unchanged.
Element frac_project(const Element &x);

Element random_element(Family f, int arity, int base, int carets, int braid_len,
                       Rng &rng);
std::string element_to_text(const Element &x);

// When enabled, every frac_mul checks the certificate (x·y)·y⁻¹ == x and
// throws std::logic_error on failure.  Off by default; tests switch it on.
void set_frac_certificates(bool on);
bool frac_certificates();

}  // namespace ore
