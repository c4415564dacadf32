#include "ore/fraction.hpp"

#include <sstream>
#include <stdexcept>

namespace ore {

namespace {

bool g_certificates = false;
thread_local int cert_depth = 0;

struct CertScope {
  CertScope() { ++cert_depth; }
  ~CertScope() { --cert_depth; }
};

void validate(const Element &x) {
  if (x.num.arity != x.den.arity)
    throw InvalidInput("element: forests of mixed arity");
  if (x.num.leaves() != x.den.leaves())
    throw InvalidInput("element: numerator and denominator leaf counts differ");
  if (x.unit.family != x.family)
    throw InvalidInput("element: unit family mismatch");
  if (x.unit.degree != x.num.leaves())
    throw InvalidInput("element: unit degree must match the leaf count");
  if (family_braided(x.family) && x.num.arity != 2)
    throw InvalidInput("braided families are defined over binary forests");
  if (!unit_member(x.unit))
    throw InvalidInput("element: unit is not a member of the family groupoid");
}

}  // namespace

void set_frac_certificates(bool on) { g_certificates = on; }
bool frac_certificates() { return g_certificates; }

int frac_source(const Element &x) { return x.den.roots; }
int frac_target(const Element &x) { return x.num.roots; }

bool valid_element(const Element &x) {
  try {
    validate(x);
    return true;
  } catch (const InvalidInput &) {
    return false;
  }
}

Element frac_identity(Family f, int arity, int object) {
  return {f, identity_forest(arity, object), unit_identity(f, object),
          identity_forest(arity, object)};
}

Element make_element(Family f, Forest num, Unit unit, Forest den, bool do_reduce) {
  Element x{f, std::move(num), std::move(unit), std::move(den)};
  validate(x);
  return do_reduce ? reduce(std::move(x)) : x;
}

Element frac_from_forest_pair(Family f, const Forest &num, const Forest &den) {
  return make_element(f, num, unit_identity(f, num.leaves()), den);
}

Element expand(const Element &x, const Forest &h) {
  if (h.roots != x.den.leaves())
    throw InvalidInput("expand: roots(h) must match the current leaf count");
  Element y;
  y.family = x.family;
  y.num = compose(x.num, act_unit_on_forest(x.unit, h));
  y.unit = act_forest_on_unit(x.unit, h);
  y.den = compose(x.den, h);
  return y;
}

Element reduce(Element x) {
  validate(x);
  const int d = x.num.arity;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i : bottom_caret_positions(x.den)) {
      const auto u0 = try_recover_unit(x.unit, i, d);
      if (!u0) continue;
      const auto f0 = strip_bottom_caret(x.num, unit_perm(*u0)(i));
      if (!f0) continue;
      const auto g0 = strip_bottom_caret(x.den, i);
      x.num = *f0;
      x.unit = *u0;
      x.den = *g0;
      progress = true;
      break;
    }
  }
  return x;
}

bool is_reduced(const Element &x) {
  const int d = x.num.arity;
  for (int i : bottom_caret_positions(x.den)) {
    const auto u0 = try_recover_unit(x.unit, i, d);
    if (!u0) continue;
    if (strip_bottom_caret(x.num, unit_perm(*u0)(i))) return false;
  }
  return true;
}

Element frac_mul(const Element &x, const Element &y) {
  if (x.family != y.family || x.num.arity != y.num.arity)
    throw InvalidInput("frac_mul: mixed families or arities");
  if (frac_source(x) != frac_target(y))
    throw InvalidInput("frac_mul: objects do not match");
  // x y = fx ux gx⁻¹ fy uy gy⁻¹; resolve gx⁻¹ fy = s t⁻¹ over the lcm, then
  // push the units outward past s and t.
  const Forest l = forest_lcm(x.den, y.num);
  const Forest s = left_quotient(x.den, l);
  const Forest t = left_quotient(y.num, l);
  const Unit uyi = unit_inverse(y.unit);
  Element r;
  r.family = x.family;
  r.num = compose(x.num, act_unit_on_forest(x.unit, s));
  r.unit = unit_compose(act_forest_on_unit(x.unit, s),
                        unit_inverse(act_forest_on_unit(uyi, t)));
  r.den = compose(y.den, act_unit_on_forest(uyi, t));
  r = reduce(std::move(r));
  if (g_certificates && cert_depth == 0) {
    CertScope scope;
    if (!frac_eq(frac_mul(r, frac_inv(y)), x))
      throw std::logic_error("frac_mul certificate failed: (x*y)*y^-1 != x");
  }
  return r;
}

Element frac_inv(const Element &x) {
  Element r;
  r.family = x.family;
  r.num = x.den;
  r.unit = unit_inverse(x.unit);
  r.den = x.num;
  return r;
}

bool frac_eq(const Element &x, const Element &y) {
  if (x.family != y.family || x.num.arity != y.num.arity) return false;
  if (frac_source(x) != frac_source(y) || frac_target(x) != frac_target(y))
    return false;
  // Expand both to the lcm denominator; there the factorisation into forest
  // and unit is unique, so componentwise comparison decides equality.
  const Forest l = forest_lcm(x.den, y.den);
  const Forest hx = left_quotient(x.den, l);
  const Forest hy = left_quotient(y.den, l);
  return compose(x.num, act_unit_on_forest(x.unit, hx)) ==
             compose(y.num, act_unit_on_forest(y.unit, hy)) &&
         unit_eq(act_forest_on_unit(x.unit, hx), act_forest_on_unit(y.unit, hy));
}

bool frac_is_identity(const Element &x) {
  if (frac_source(x) != frac_target(x)) return false;
  return frac_eq(x, frac_identity(x.family, x.num.arity, frac_target(x)));
}

Element frac_pow(const Element &x, int k) {
  if (frac_source(x) != frac_target(x))
    throw InvalidInput("frac_pow: element is not an automorphism");
  Element base = k < 0 ? frac_inv(x) : x;
  Element acc = frac_identity(x.family, x.num.arity, frac_target(x));
  for (int n = k < 0 ? -k : k; n > 0; --n) acc = frac_mul(acc, base);
  return acc;
}

Element frac_conjugate(const Element &a, const Element &b) {
  return frac_mul(frac_mul(a, b), frac_inv(a));
}

int frac_order(const Element &x, int max_order) {
  Element y = x;
  for (int k = 1; k <= max_order; ++k) {
    if (frac_is_identity(y)) return k;
    y = frac_mul(y, x);
  }
  return 0;
}

Element frac_project(const Element &x) {
  return make_element(shadow_family(x.family), x.num, unit_project(x.unit),
                      x.den, false);
}

Element random_element(Family f, int arity, int base, int carets, int braid_len,
                       Rng &rng) {
  const Forest num = random_forest(arity, base, carets, rng);
  const Forest den = random_forest(arity, base, carets, rng);
  const Unit u = random_unit(f, num.leaves(), braid_len, rng);
  return make_element(f, num, u, den);
}

std::string element_to_text(const Element &x) {
  std::ostringstream os;
  os << family_name(x.family) << ": " << forest_to_text(x.num) << " "
     << unit_to_text(x.unit) << " / " << forest_to_text(x.den);
  return os.str();
}

}  // namespace ore
