#include "stg/chern_simons.hpp"

#include <algorithm>
#include <cmath>

namespace stg {

Surface Surface::genus(int g) {
  if (g < 2) throw OutOfRange("genus surface needs g >= 2");
  return {Kind::genus, g};
}

int Surface::h1c_rank() const {
  switch (kind) {
    case Kind::sphere:
      return 0;
    case Kind::cylinder:
      return 1;
    case Kind::torus2:
      return 2;
    case Kind::genus:
      return 2 * g;
  }
  return 0;
}

std::string Surface::str() const {
  switch (kind) {
    case Kind::sphere:
      return "sphere";
    case Kind::cylinder:
      return "cylinder";
    case Kind::torus2:
      return "torus";
    case Kind::genus:
      return "genus" + std::to_string(g);
  }
  return "?";
}

std::pair<FgAbelianGroup, PreSymplecticForm> cs_algebra(const Surface& s,
                                                        int theta_symbol) {
  TValue two_theta = tvalue_symbol(theta_symbol, Rat(2));
  switch (s.kind) {
    case Surface::Kind::sphere: {
      FgAbelianGroup G(0, {});
      return {G, zero_form(G)};
    }
    case Surface::Kind::cylinder: {
      FgAbelianGroup G(1, {});
      return {G, zero_form(G)};  // skew forms on rank 1 vanish
    }
    case Surface::Kind::torus2: {
      PreSymplecticForm f = canonical_form(1, two_theta);
      return {f.group, f};
    }
    case Surface::Kind::genus: {
      PreSymplecticForm f = canonical_form(s.g, two_theta);
      return {f.group, f};
    }
  }
  throw Error("unreachable");
}

State pushforward_state(const Surface& source, const Surface& target,
                        const std::vector<GroupElement>& embedding) {
  auto [tg, tf] = cs_algebra(target, 1);
  if (static_cast<int>(embedding.size()) != source.h1c_rank())
    throw DimensionMismatch("embedding must list one image per generator");
  for (const auto& e : embedding)
    if (static_cast<int>(e.c.size()) != tg.dim())
      throw DimensionMismatch("embedded element has wrong dimension");

  State out;
  out.group = tg;
  out.values.emplace(identity_element(tg), Cplx(1, 0));

  if (source.kind == Surface::Kind::sphere) {
    // the algebra map into the sphere algebra kills every generator, so the
    // constraint forces value 1 everywhere on the target
    out.default_value = Cplx(1, 0);
    return out;
  }
  if (source.kind == Surface::Kind::cylinder) {
    // source state is identically 1 (forced from the sphere); the target is
    // pinned to 1 exactly on the image subgroup, unassigned elsewhere
    State::SubgroupRule rule;
    rule.gens = embedding;
    rule.value = Cplx(1, 0);
    out.rule = std::move(rule);
    out.default_value = std::nullopt;
    return out;
  }
  throw InconsistentConstraint(
      "no canonical natural state on the source surface");
}

GramMatrix obstruction_probe(double theta_binding) {
  auto [G, f] = cs_algebra(Surface::torus2(), 1);
  SymbolEnv env;
  env.bindings[1] = theta_binding;
  // the half-exponent phases are not well-defined against the gcd-forced
  // state when 2*theta is integral; the torus probe therefore uses the
  // always-defined full convention
  Cocycle c(f, env, CocycleConvention::full);
  State omega;
  omega.group = G;
  omega.default_value = Cplx(1, 0);
  std::vector<GroupElement> probe{make_element(G, {0, 0}),
                                  make_element(G, {1, 0}),
                                  make_element(G, {0, 1})};
  return gram_matrix(omega, probe, c);
}

namespace {

bool small_denominator_rational(double x, long long max_den, double tol) {
  for (long long q = 1; q <= max_den; ++q) {
    double scaled = x * static_cast<double>(q);
    if (std::abs(scaled - std::llround(scaled)) < tol) return true;
  }
  return false;
}

}  // namespace

ObstructionWitness natural_state_obstruction(double theta_binding) {
  if (small_denominator_rational(theta_binding, 100, 1e-9))
    throw OutOfRange("theta binding looks rational (denominator <= 100)");
  auto [G, f] = cs_algebra(Surface::torus2(), 1);
  SymbolEnv env;
  env.bindings[1] = theta_binding;
  Cocycle c(f, env, CocycleConvention::full);

  // omega((n,0)) = 1 is forced by naturality; Sp(2,Z)-invariance is constant
  // on gcd classes and every class k contains (k,0), so omega = 1 on all of
  // Z^2.  (The gcd is a complete orbit invariant for the free case.)
  State omega;
  omega.group = G;
  omega.default_value = Cplx(1, 0);

  // greedy subset growth over a small coordinate pool
  std::vector<GroupElement> pool;
  for (long long a = -2; a <= 2; ++a)
    for (long long b = -2; b <= 2; ++b) {
      if (a == 0 && b == 0) continue;
      pool.push_back(make_element(G, {a, b}));
    }
  std::sort(pool.begin(), pool.end());
  std::vector<GroupElement> subset{identity_element(G)};
  double best_eig = 0;
  for (int step = 0; step < 11; ++step) {
    double best = 1e300;
    const GroupElement* pick = nullptr;
    for (const auto& cand : pool) {
      if (std::find(subset.begin(), subset.end(), cand) != subset.end())
        continue;
      auto trial = subset;
      trial.push_back(cand);
      double e = min_eigenvalue(gram_matrix(omega, trial, c));
      if (e < best) {
        best = e;
        pick = &cand;
      }
    }
    if (!pick) break;
    subset.push_back(*pick);
    best_eig = best;
    if (best_eig < -1e-6) {
      std::sort(subset.begin(), subset.end());
      double final_eig = min_eigenvalue(gram_matrix(omega, subset, c));
      return ObstructionWitness{subset, final_eig};
    }
  }
  throw NoWitnessFound("no negative Gram subset within 12 elements");
}

}  // namespace stg
