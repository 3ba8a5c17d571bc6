#ifndef STG_GROUP_HPP
#define STG_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "stg/tvalue.hpp"

namespace stg {

// Z^r (+) Z/n1 (+) ... (+) Z/nk, free coordinates first.
struct FgAbelianGroup {
  int free_rank = 0;
  std::vector<long long> torsion_orders;  // each >= 2

  FgAbelianGroup() = default;
  FgAbelianGroup(int r, std::vector<long long> orders);

  int dim() const { return free_rank + static_cast<int>(torsion_orders.size()); }
  bool is_finite() const { return free_rank == 0; }
  bool is_torsion_free() const { return torsion_orders.empty(); }
  Int order() const;     // |G| for finite G
  Int exponent() const;  // lcm of torsion orders (1 if none)
  // n_1 | n_2 | ... (vacuously true when k <= 1)
  bool canonical_chain() const;

  bool operator==(const FgAbelianGroup& o) const {
    return free_rank == o.free_rank && torsion_orders == o.torsion_orders;
  }
  bool operator!=(const FgAbelianGroup& o) const { return !(*this == o); }

  std::string str() const;  // "Z^r x Z/n1 x Z/n2 ..."
};

struct GroupElement {
  std::vector<long long> c;  // free coords, then torsion residues in [0,n_i)

  bool operator==(const GroupElement& o) const { return c == o.c; }
  bool operator!=(const GroupElement& o) const { return c != o.c; }
  bool operator<(const GroupElement& o) const { return c < o.c; }

  std::string str() const;  // "(c1,c2,...)"
};

enum class GroupOpMode { compose, inverse, identity };

// reduce torsion coordinates into [0, n_i); free coords unchanged
GroupElement reduce(const FgAbelianGroup& G, GroupElement g);
GroupElement identity_element(const FgAbelianGroup& G);
GroupElement make_element(const FgAbelianGroup& G, std::vector<long long> coords);

GroupElement group_op(const FgAbelianGroup& G, const GroupElement& x,
                      const GroupElement& y, GroupOpMode mode);
GroupElement compose(const FgAbelianGroup& G, const GroupElement& x,
                     const GroupElement& y);
GroupElement inverse(const FgAbelianGroup& G, const GroupElement& x);
GroupElement scalar_mul(const FgAbelianGroup& G, long long n,
                        const GroupElement& x);

bool is_identity(const FgAbelianGroup& G, const GroupElement& g);

// least m >= 1 with m*g = 0, or nullopt when the free part is nonzero
std::optional<long long> element_order(const FgAbelianGroup& G,
                                       const GroupElement& g);

// all |G| elements of a finite group, lexicographically sorted
std::vector<GroupElement> enumerate_elements(const FgAbelianGroup& G,
                                             Int cap = Int(1) << 20);

FgAbelianGroup group_parse(const std::string& text);
GroupElement element_parse(const FgAbelianGroup& G, const std::string& text);

}  // namespace stg

#endif
