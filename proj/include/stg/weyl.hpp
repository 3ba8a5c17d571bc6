#ifndef STG_WEYL_HPP
#define STG_WEYL_HPP

#include <complex>
#include <map>

#include "stg/forms.hpp"
#include "stg/symplectic.hpp"

namespace stg {

using Cplx = std::complex<double>;

// finite C-linear combination of group elements; zero coefficients pruned
struct AlgebraElement {
  FgAbelianGroup group;
  std::map<GroupElement, Cplx> terms;

  static AlgebraElement zero(const FgAbelianGroup& G);
  static AlgebraElement unit(const FgAbelianGroup& G);
  static AlgebraElement basis(const FgAbelianGroup& G, const GroupElement& g,
                              Cplx coeff = Cplx(1, 0));

  AlgebraElement& add_term(const GroupElement& g, Cplx coeff);
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement scaled(Cplx c) const;
};

// How the T-valued form becomes a unit-modulus phase.
//
// full:  exp(2 pi i * sigma(x,y) mod 1) — always well-defined on T.
// half:  exp(pi i * L(x,y)) with L the Z-bilinear lift taken from the raw
//        matrix entries — only available on torsion-free groups, where the
//        lift is bilinear and the phase well-defined.  The half phases on
//        (Z^2, 2*theta*sigma_2) are exp(+-2 pi i theta), the commutation
//        phases of the noncommutative torus with angle theta.
enum class CocycleConvention { full, half };

struct Cocycle {
  PreSymplecticForm form;
  SymbolEnv env;
  CocycleConvention convention = CocycleConvention::full;

  Cocycle(PreSymplecticForm f, SymbolEnv e,
          CocycleConvention c = CocycleConvention::full);
};

Cplx cocycle_phase(const Cocycle& c, const GroupElement& x,
                   const GroupElement& y);

// twisted product: ab = sum_g ( sum_h Omega(g, h) alpha_h beta_{h^-1 g} ) g;
// for basis elements x*y = Omega(xy, x) * (xy)
AlgebraElement multiply(const Cocycle& c, const AlgebraElement& a,
                        const AlgebraElement& b);

// a* = sum conj(alpha_g) g^-1
AlgebraElement involute(const AlgebraElement& a);

// Phi_Theta(a) = sum alpha_g Theta(g); Theta must preserve the form
AlgebraElement apply_automorphism(const PreSymplecticForm& f,
                                  const GroupMap& theta,
                                  const AlgebraElement& a);

// Omega(g1,g2) Omega(g1g2,g3) == Omega(g1,g2g3) Omega(g2,g3) within 1e-12
bool cocycle_identity_check(const Cocycle& c, const GroupElement& g1,
                            const GroupElement& g2, const GroupElement& g3);

}  // namespace stg

#endif
