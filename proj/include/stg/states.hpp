#ifndef STG_STATES_HPP
#define STG_STATES_HPP

#include <Eigen/Dense>
#include <optional>

#include "stg/weyl.hpp"

namespace stg {

// Normalized hermitian functional, given by explicit values, an optional
// subgroup rule (one value on a generated subgroup) and a default for
// everything else.  The default may be left unassigned for partially
// constrained states.
struct State {
  struct SubgroupRule {
    std::vector<GroupElement> gens;
    Cplx value;
  };

  FgAbelianGroup group;
  std::map<GroupElement, Cplx> values;
  std::optional<Cplx> default_value;
  std::optional<SubgroupRule> rule;

  bool has_value(const GroupElement& g) const;
  Cplx value(const GroupElement& g) const;  // throws on unassigned elements
};

// membership in the subgroup generated by gens
bool in_subgroup(const FgAbelianGroup& G, const std::vector<GroupElement>& gens,
                 const GroupElement& x);

State tracial_state(const PreSymplecticForm& f);
State constant_state(const PreSymplecticForm& f, double q);  // q in [-1,1]
// 1 at the identity, q on the radical subgroup, 0 elsewhere; q in (0,1)
State radical_state(const PreSymplecticForm& f, double q);

struct GramMatrix {
  std::vector<GroupElement> elems;
  Eigen::MatrixXcd h;
};

// H[i][j] = Omega(g_i^-1 g_j, g_i^-1) * omega(g_i^-1 g_j), the phase of the
// twisted product g_i^-1 * g_j, so that omega(a* a) = conj(alpha)^T H alpha
GramMatrix gram_matrix(const State& s, const std::vector<GroupElement>& elems,
                       const Cocycle& c);

double min_eigenvalue(const GramMatrix& g);
bool is_positive_on(const State& s, const std::vector<GroupElement>& elems,
                    const Cocycle& c, double tol = 1e-9);

// omega(theta g) = omega(g) for every generator and listed element
bool check_invariance(const State& s, const PreSymplecticForm& f,
                      const std::vector<GroupMap>& gens,
                      const std::vector<GroupElement>& elems);

// 1 on the diagonal, p on the first row/column, q elsewhere
Eigen::MatrixXcd build_M_matrix(int n, Cplx p, Cplx q);

// exact PSD test for rational symmetric matrices (principal pivoting with
// kernel deflation)
bool exact_psd(std::vector<std::vector<Rat>> a);

struct StateSearchResult {
  std::vector<GroupElement> orbit_reps;  // nontrivial orbits, sorted
  // grid point (one value per nontrivial orbit) -> full-group Gram PSD
  std::vector<std::pair<std::vector<double>, bool>> grid;
  // for a single nontrivial orbit: feasible interval refined by bisection
  std::optional<std::pair<double, double>> interval;
};

StateSearchResult invariant_state_search(const PreSymplecticForm& f,
                                         const std::vector<GroupMap>& gens,
                                         double grid_step = 0.01,
                                         Int cap = Int(4096));

}  // namespace stg

#endif
