#ifndef STG_TESTS_SUPPORT_HPP
#include <set>
#define STG_TESTS_SUPPORT_HPP

#include <random>

#include "stg/states.hpp"

namespace stg::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0xC0FFEE);
  return gen;
}

inline long long rand_int(long long lo, long long hi) {
  std::uniform_int_distribution<long long> d(lo, hi);
  return d(rng());
}

inline double rand_real(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng());
}

inline GroupElement rand_element(const FgAbelianGroup& G, long long box = 4) {
  std::vector<long long> c(G.dim());
  for (int i = 0; i < G.free_rank; ++i) c[i] = rand_int(-box, box);
  for (size_t i = 0; i < G.torsion_orders.size(); ++i)
    c[G.free_rank + i] = rand_int(0, G.torsion_orders[i] - 1);
  return make_element(G, std::move(c));
}

inline AlgebraElement rand_algebra_element(const FgAbelianGroup& G,
                                           int max_terms = 5,
                                           long long box = 2) {
  AlgebraElement a = AlgebraElement::zero(G);
  int n = static_cast<int>(rand_int(1, max_terms));
  for (int i = 0; i < n; ++i)
    a.add_term(rand_element(G, box), Cplx(rand_real(-1, 1), rand_real(-1, 1)));
  return a;
}

// independent transcription of the twisted double-sum product, used as the
// oracle against the library implementation
inline AlgebraElement naive_multiply(const Cocycle& c, const AlgebraElement& a,
                                     const AlgebraElement& b) {
  const FgAbelianGroup& G = a.group;
  AlgebraElement out = AlgebraElement::zero(G);
  // collect the support of the product first
  std::set<GroupElement> support;
  for (const auto& [h, alpha] : a.terms)
    for (const auto& [k, beta] : b.terms) support.insert(compose(G, h, k));
  for (const auto& g : support) {
    Cplx acc(0, 0);
    for (const auto& [h, alpha] : a.terms) {
      GroupElement rest = compose(G, inverse(G, h), g);
      auto it = b.terms.find(rest);
      if (it == b.terms.end()) continue;
      acc += cocycle_phase(c, g, h) * alpha * it->second;
    }
    out.add_term(g, acc);
  }
  return out;
}

inline double max_term_distance(const AlgebraElement& a,
                                const AlgebraElement& b) {
  double m = 0;
  for (const auto& [g, c] : a.terms) {
    auto it = b.terms.find(g);
    Cplx other = it == b.terms.end() ? Cplx(0, 0) : it->second;
    m = std::max(m, std::abs(c - other));
  }
  for (const auto& [g, c] : b.terms)
    if (!a.terms.count(g)) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace stg::testing

#endif
