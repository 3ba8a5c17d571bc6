#include "stg/weyl.hpp"

#include <cmath>

namespace stg {

namespace {
constexpr double kPruneTol = 1e-14;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

AlgebraElement AlgebraElement::zero(const FgAbelianGroup& G) {
  return AlgebraElement{G, {}};
}

AlgebraElement AlgebraElement::unit(const FgAbelianGroup& G) {
  return basis(G, identity_element(G));
}

AlgebraElement AlgebraElement::basis(const FgAbelianGroup& G,
                                     const GroupElement& g, Cplx coeff) {
  AlgebraElement a{G, {}};
  a.add_term(reduce(G, g), coeff);
  return a;
}

AlgebraElement& AlgebraElement::add_term(const GroupElement& g, Cplx coeff) {
  auto it = terms.find(g);
  if (it == terms.end()) {
    if (std::abs(coeff) > kPruneTol) terms.emplace(g, coeff);
  } else {
    it->second += coeff;
    if (std::abs(it->second) <= kPruneTol) terms.erase(it);
  }
  return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (group != o.group) throw DimensionMismatch("algebra group mismatch");
  AlgebraElement r = *this;
  for (const auto& [g, c] : o.terms) r.add_term(g, c);
  return r;
}

AlgebraElement AlgebraElement::scaled(Cplx c) const {
  AlgebraElement r{group, {}};
  for (const auto& [g, v] : terms) r.add_term(g, v * c);
  return r;
}

Cocycle::Cocycle(PreSymplecticForm f, SymbolEnv e, CocycleConvention c)
    : form(std::move(f)), env(std::move(e)), convention(c) {
  if (convention == CocycleConvention::half &&
      !form.group.is_torsion_free())
    throw HalfConventionOnTorsion(
        "the half-exponent lift is only bilinear on torsion-free groups");
}

Cplx cocycle_phase(const Cocycle& c, const GroupElement& x,
                   const GroupElement& y) {
  if (c.convention == CocycleConvention::half) {
    double l = lift_evaluate(c.form, x, y, c.env);
    return std::polar(1.0, kPi * l);
  }
  double v = tvalue_eval(evaluate(c.form, x, y), c.env);
  return std::polar(1.0, 2.0 * kPi * v);
}

AlgebraElement multiply(const Cocycle& c, const AlgebraElement& a,
                        const AlgebraElement& b) {
  if (a.group != c.form.group || b.group != c.form.group)
    throw DimensionMismatch("algebra/cocycle group mismatch");
  const FgAbelianGroup& G = a.group;
  AlgebraElement out{G, {}};
  for (const auto& [h, alpha] : a.terms)
    for (const auto& [k, beta] : b.terms) {
      GroupElement g = compose(G, h, k);  // h^-1 g = k
      out.add_term(g, cocycle_phase(c, g, h) * alpha * beta);
    }
  return out;
}

AlgebraElement involute(const AlgebraElement& a) {
  AlgebraElement out{a.group, {}};
  for (const auto& [g, c] : a.terms)
    out.add_term(inverse(a.group, g), std::conj(c));
  return out;
}

AlgebraElement apply_automorphism(const PreSymplecticForm& f,
                                  const GroupMap& theta,
                                  const AlgebraElement& a) {
  if (a.group != f.group) throw DimensionMismatch("algebra/form group mismatch");
  if (!is_symplectic_map(f, theta))
    throw NonSymplecticMap("map does not preserve the form");
  AlgebraElement out{a.group, {}};
  for (const auto& [g, c] : a.terms)
    out.add_term(apply(a.group, theta, g), c);
  return out;
}

bool cocycle_identity_check(const Cocycle& c, const GroupElement& g1,
                            const GroupElement& g2, const GroupElement& g3) {
  const FgAbelianGroup& G = c.form.group;
  Cplx lhs = cocycle_phase(c, g1, g2) *
             cocycle_phase(c, compose(G, g1, g2), g3);
  Cplx rhs = cocycle_phase(c, g1, compose(G, g2, g3)) *
             cocycle_phase(c, g2, g3);
  return std::abs(lhs - rhs) <= 1e-12;
}

}  // namespace stg
