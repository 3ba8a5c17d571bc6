#ifndef STG_NORMAL_FORM_HPP
#define STG_NORMAL_FORM_HPP

#include <vector>

#include "stg/forms.hpp"

namespace stg {

// Congruence normal form of a skew integer matrix: U^T A U is the exact
// block-diagonal r_1*sigma_2 (+) ... (+) r_m*sigma_2 (+) 0 with det U = +-1
// and r_1 | r_2 | ... positive.
struct SkewNormalForm {
  IMat transform;                  // U
  std::vector<TValue> block_values;  // r_1, ..., r_m
  int null_rank = 0;

  std::vector<Int> integer_blocks() const;  // blocks as plain integers
};

SkewNormalForm skew_normal_form(const IMat& A);

// factor a rank-1-valued form as q_sigma * M with M integer, then reduce M;
// blocks are reported as q_sigma * r_i
std::pair<SkewNormalForm, TValue> diagonalize_rank1_form(
    const PreSymplecticForm& f);

// all pairwise products commute
bool simultaneous_diagonalizable(const std::vector<IMat>& ms);

// p-primary pieces of a finite symplectic group, with cross-primary
// pairings verified to vanish
struct PrimaryPart {
  Int prime;
  PreSymplecticForm form;                // on the p-primary subgroup G_p
  std::vector<GroupElement> generators;  // of G_p inside the original G
};
std::vector<PrimaryPart> primary_decompose(const PreSymplecticForm& f);

}  // namespace stg

#endif
