#ifndef STG_FORMS_HPP
#define STG_FORMS_HPP

#include <vector>

#include "stg/group.hpp"
#include "stg/intmat.hpp"

namespace stg {

// T-valued pre-symplectic form on a fixed generating basis of G.  The
// matrix is kept raw-skew (m[j][i] is the exact negation of m[i][j], zero
// diagonal) so that a Z-bilinear lift is always available on torsion-free
// groups; T-level skewness of the input is validated and then normalized
// to this shape.  Torsion compatibility n_i * m[i][j] = 0 in T is enforced.
struct PreSymplecticForm {
  FgAbelianGroup group;
  std::vector<std::vector<TValue>> m;

  PreSymplecticForm() = default;
  PreSymplecticForm(FgAbelianGroup g, std::vector<std::vector<TValue>> entries);

  int dim() const { return group.dim(); }
  const TValue& entry(int i, int j) const { return m[i][j]; }
};

// external direct sum ([+]): one group, several forms evaluated in parallel
struct MultiForm {
  std::vector<PreSymplecticForm> components;  // nonempty, same group
};

TValue evaluate(const PreSymplecticForm& f, const GroupElement& x,
                const GroupElement& y);
std::vector<TValue> evaluate(const MultiForm& f, const GroupElement& x,
                             const GroupElement& y);

// raw bilinear lift sum_{ij} x_i y_j L_ij with L_ij the unreduced entry
// lifts; only meaningful on torsion-free groups
double lift_evaluate(const PreSymplecticForm& f, const GroupElement& x,
                     const GroupElement& y, const SymbolEnv& env);

// generating set of G^perp = { x : sigma(x,.) = 0 }; empty iff non-degenerate
std::vector<GroupElement> radical(const PreSymplecticForm& f);
bool is_nondegenerate(const PreSymplecticForm& f);

// generators of { x : sigma(x, a) = 0 for all a in elems }
std::vector<GroupElement> orthogonal_complement(
    const PreSymplecticForm& f, const std::vector<GroupElement>& elems);

// sigma((a,b),(c,d)) = (ad - bc)/l on (Z/l)^2
PreSymplecticForm weil_pairing_form(long long l);

// image of sigma meets Q/Z only in 0
bool is_irrational(const PreSymplecticForm& f);

PreSymplecticForm direct_sum(const std::vector<PreSymplecticForm>& fs);
// coordinates of an element of summand `idx` inside the direct-sum group
GroupElement direct_sum_embed(const std::vector<PreSymplecticForm>& fs,
                              size_t idx, const GroupElement& g);

MultiForm box_sum(const PreSymplecticForm& f1, const PreSymplecticForm& f2);

// some y with sigma(x,y) != 0: basis scan, then coordinate vectors with
// entries in [-bound, bound]
GroupElement find_hyperbolic_partner(const PreSymplecticForm& f,
                                     const GroupElement& x, long long bound = 3);

// convenience constructors
PreSymplecticForm zero_form(const FgAbelianGroup& G);
// r times the canonical symplectic form [[0, I],[-I, 0]] on Z^(2n)
PreSymplecticForm canonical_form(int n, const TValue& r);
// r times the hyperbolic-block form sigma_2 (+) ... (+) sigma_2, pairs
// (e_{2i}, e_{2i+1}); group may be Z^(2n) or (Z/m)^(2n)
PreSymplecticForm block_form(const FgAbelianGroup& G, const TValue& r);
// form from an integer matrix scaled by r
PreSymplecticForm scaled_form(const FgAbelianGroup& G, const IMat& A,
                              const TValue& r);

}  // namespace stg

#endif
