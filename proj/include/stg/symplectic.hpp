#ifndef STG_SYMPLECTIC_HPP
#define STG_SYMPLECTIC_HPP

#include <string>
#include <vector>

#include "stg/forms.hpp"

namespace stg {

// Integer matrix acting on coordinates; torsion coordinates are reduced
// after application.  Valid maps are automorphisms: unimodular on the free
// block, zero from torsion into free, order-compatible and invertible on
// the torsion block.
struct GroupMap {
  std::vector<std::vector<long long>> m;

  int dim() const { return static_cast<int>(m.size()); }
  static GroupMap from_rows(std::vector<std::vector<long long>> rows);
  IMat imat() const;
  bool operator==(const GroupMap& o) const { return m == o.m; }
};

GroupElement apply(const FgAbelianGroup& G, const GroupMap& M,
                   const GroupElement& x);
GroupMap map_compose(const GroupMap& A, const GroupMap& B);  // A after B
GroupMap inversion_map(int dim);                             // g -> -g

// M is an automorphism of G
bool is_automorphism(const FgAbelianGroup& G, const GroupMap& M);

// sigma(Mx, My) = sigma(x, y); basis pairs suffice by bilinearity
bool is_symplectic_map(const PreSymplecticForm& f, const GroupMap& M);
bool is_symplectic_map(const MultiForm& f, const GroupMap& M);

// block generators T_S, R_U, D_Q of Sp(2n, Z) for the canonical form
// [[0, I],[-I, 0]]; includes Inv via R_{-I}
std::vector<GroupMap> sp2nZ_generators(int n);

// gcd of the coordinates; complete Sp(2n,Z)-orbit invariant on Z^(2n)
long long free_orbit_invariant(const std::vector<long long>& x);

// element of SL(2, F_q) mapping n to m, by the four case formulas
GroupMap fq2_mapping(const std::vector<long long>& m,
                     const std::vector<long long>& n, long long q);

// small prime-power field, for the same mapping over F_{p^f}
struct Fq {
  long long p = 2;
  int f = 1;
  std::vector<long long> modulus;  // irreducible, degree f, monic

  explicit Fq(long long q);
  long long q() const;
  // elements encoded as base-p digit strings packed into [0, q)
  long long add(long long a, long long b) const;
  long long sub(long long a, long long b) const;
  long long mul(long long a, long long b) const;
  long long inv(long long a) const;
};
// 2x2 matrix over F_q as {a,b,c,d}, det = 1, mapping n to m
std::array<long long, 4> fq2_mapping_fq(const std::array<long long, 2>& m,
                                        const std::array<long long, 2>& n,
                                        const Fq& F);

struct OrbitPartition {
  std::vector<std::vector<GroupElement>> orbits;   // sorted internally
  std::vector<GroupElement> representatives;       // lexicographically least

  std::vector<size_t> sizes() const;
};

// BFS closure of every element of a finite group under the given symplectic
// generators (inverses are adjoined automatically)
OrbitPartition enumerate_orbits(const PreSymplecticForm& f,
                                const std::vector<GroupMap>& gens);

// the 4x4 stacking automorphism embedded into the first two hyperbolic
// blocks of (F_p^2)^(+k); maps (x,x,0,...) to (x,x,x,x,0,...)
GroupMap stacking_map(int k, long long p);

// block swap of hyperbolic blocks i and i+1 (2x2 coordinate blocks)
GroupMap block_swap_map(int k, int i);

// generator set used by `enumerate_orbits` when none is supplied: images of
// the Sp(2m, Z) generators for canonical forms, per-block SL(2, Z) images
// plus swaps and the stacking map for hyperbolic block forms, always Inv
std::vector<GroupMap> auto_generators(const PreSymplecticForm& f);

enum class Ergodicity { yes, no, unknown };
Ergodicity is_ergodic(const PreSymplecticForm& f);
std::string to_string(Ergodicity e);

// H = <h1, h2> with non-degenerate restriction; true iff G = H (+) H^perp
bool is_split_hyperbolic(const PreSymplecticForm& f, const GroupElement& h1,
                         const GroupElement& h2);

// BFS closure within the coordinate box [-box, box]^dim (free groups)
std::vector<GroupElement> bfs_orbit_in_box(const PreSymplecticForm& f,
                                           const std::vector<GroupMap>& gens,
                                           const GroupElement& start,
                                           long long box);

}  // namespace stg

#endif
