#ifndef STG_CHERN_SIMONS_HPP
#define STG_CHERN_SIMONS_HPP

#include "stg/states.hpp"

namespace stg {

// surfaces whose compactly supported first cohomology feeds the functor
struct Surface {
  enum class Kind { sphere, cylinder, torus2, genus };
  Kind kind = Kind::sphere;
  int g = 0;  // for Kind::genus, g >= 2

  static Surface sphere() { return {Kind::sphere, 0}; }
  static Surface cylinder() { return {Kind::cylinder, 0}; }
  static Surface torus2() { return {Kind::torus2, 0}; }
  static Surface genus(int g);

  int h1c_rank() const;
  std::string str() const;
};

// group and form underlying the algebra of a surface: sphere -> 0,
// cylinder -> Z with the zero form, torus -> (Z^2, 2*theta*sigma_2),
// genus g -> (Z^2g, 2*theta*sigma_2g); theta is a formal symbol
std::pair<FgAbelianGroup, PreSymplecticForm> cs_algebra(const Surface& s,
                                                        int theta_symbol);

// Solve the naturality constraint omega_target(f(g)) = omega_source(g) for
// the target state, starting from the forced state of the source surface.
// `embedding` lists the images of the source generators in the target group.
State pushforward_state(const Surface& source, const Surface& target,
                        const std::vector<GroupElement>& embedding);

struct ObstructionWitness {
  std::vector<GroupElement> elems;
  double min_eig = 0;
};

// Extend omega((n,0)) = 1 over the gcd orbit classes to all of Z^2, then
// refute positivity on a greedily grown Gram subset.  theta must not be a
// small-denominator rational.
ObstructionWitness natural_state_obstruction(double theta_binding);

// the 3x3 probe Gram on {0, e1, e2} for an explicitly bound theta
GramMatrix obstruction_probe(double theta_binding);

}  // namespace stg

#endif
