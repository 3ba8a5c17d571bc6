#include "stg/states.hpp"

#include <algorithm>
#include <cmath>

namespace stg {

bool in_subgroup(const FgAbelianGroup& G, const std::vector<GroupElement>& gens,
                 const GroupElement& x) {
  int d = G.dim();
  int k = static_cast<int>(gens.size());
  int t = static_cast<int>(G.torsion_orders.size());
  IMat A(d, k + t);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < d; ++i) A.at(i, j) = gens[j].c[i];
  for (int j = 0; j < t; ++j)
    A.at(G.free_rank + j, k + j) = G.torsion_orders[j];
  std::vector<Int> b(d);
  for (int i = 0; i < d; ++i) b[i] = x.c[i];
  return solve_int(A, b).has_value();
}

bool State::has_value(const GroupElement& g) const {
  if (values.count(g)) return true;
  if (rule && in_subgroup(group, rule->gens, g)) return true;
  return default_value.has_value();
}

Cplx State::value(const GroupElement& g) const {
  auto it = values.find(g);
  if (it != values.end()) return it->second;
  if (rule && in_subgroup(group, rule->gens, g)) return rule->value;
  if (default_value) return *default_value;
  throw Error("state value unassigned at " + g.str());
}

State tracial_state(const PreSymplecticForm& f) {
  State s;
  s.group = f.group;
  s.values.emplace(identity_element(f.group), Cplx(1, 0));
  s.default_value = Cplx(0, 0);
  return s;
}

State constant_state(const PreSymplecticForm& f, double q) {
  if (!(q >= -1.0 && q <= 1.0))
    throw OutOfRange("constant state needs q in [-1,1]");
  State s;
  s.group = f.group;
  s.values.emplace(identity_element(f.group), Cplx(1, 0));
  s.default_value = Cplx(q, 0);
  return s;
}

State radical_state(const PreSymplecticForm& f, double q) {
  auto rad = radical(f);
  if (rad.empty()) throw NonDegenerateForm("radical is trivial");
  if (!(q > 0.0 && q < 1.0)) throw OutOfRange("radical state needs q in (0,1)");
  State s;
  s.group = f.group;
  s.values.emplace(identity_element(f.group), Cplx(1, 0));
  s.rule = State::SubgroupRule{std::move(rad), Cplx(q, 0)};
  s.default_value = Cplx(0, 0);
  return s;
}

GramMatrix gram_matrix(const State& s, const std::vector<GroupElement>& elems,
                       const Cocycle& c) {
  const FgAbelianGroup& G = c.form.group;
  if (s.group != G) throw DimensionMismatch("state/cocycle group mismatch");
  int n = static_cast<int>(elems.size());
  GramMatrix out;
  out.elems = elems;
  out.h.resize(n, n);
  for (int i = 0; i < n; ++i) {
    GroupElement gi_inv = inverse(G, elems[i]);
    for (int j = 0; j < n; ++j) {
      GroupElement gij = compose(G, gi_inv, elems[j]);
      Cplx w = s.value(gij);
      Cplx wback = s.value(inverse(G, gij));
      if (std::abs(std::conj(w) - wback) > 1e-12)
        throw NonHermitianState("omega(g^-1) != conj(omega(g)) at " +
                                gij.str());
      out.h(i, j) = cocycle_phase(c, gij, gi_inv) * w;
    }
  }
  return out;
}

double min_eigenvalue(const GramMatrix& g) {
  if (g.elems.empty()) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g.h,
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_positive_on(const State& s, const std::vector<GroupElement>& elems,
                    const Cocycle& c, double tol) {
  return min_eigenvalue(gram_matrix(s, elems, c)) >= -tol;
}

bool check_invariance(const State& s, const PreSymplecticForm& f,
                      const std::vector<GroupMap>& gens,
                      const std::vector<GroupElement>& elems) {
  for (const auto& M : gens) {
    if (!is_symplectic_map(f, M))
      throw NonSymplecticMap("generator does not preserve the form");
    for (const auto& g : elems)
      if (s.value(apply(f.group, M, g)) != s.value(g)) return false;
  }
  return true;
}

Eigen::MatrixXcd build_M_matrix(int n, Cplx p, Cplx q) {
  if (n < 1) throw OutOfRange("matrix size must be positive");
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        m(i, j) = Cplx(1, 0);
      else if (i == 0)
        m(i, j) = p;
      else if (j == 0)
        m(i, j) = p;
      else
        m(i, j) = q;
    }
  return m;
}

bool exact_psd(std::vector<std::vector<Rat>> a) {
  size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw DimensionMismatch("matrix not square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (a[i][j] != a[j][i]) throw Error("matrix not symmetric");
  std::vector<bool> done(n, false);
  for (;;) {
    // kernel deflation: a zero diagonal entry with a nonzero row is a
    // negative 2x2 principal minor
    int pivot = -1;
    for (size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (a[i][i] < 0) return false;
      if (a[i][i] == 0) {
        for (size_t j = 0; j < n; ++j)
          if (!done[j] && j != i && a[i][j] != 0) return false;
        done[i] = true;
      } else if (pivot < 0) {
        pivot = static_cast<int>(i);
      }
    }
    if (pivot < 0) return true;  // everything deflated, PSD
    size_t pv = static_cast<size_t>(pivot);
    Rat p = a[pv][pv];
    for (size_t i = 0; i < n; ++i) {
      if (done[i] || i == pv) continue;
      for (size_t j = 0; j < n; ++j) {
        if (done[j] || j == pv) continue;
        a[i][j] -= a[i][pv] * a[pv][j] / p;
      }
    }
    for (size_t j = 0; j < n; ++j)
      if (j != pv) {
        a[pv][j] = 0;
        a[j][pv] = 0;
      }
    done[pv] = true;
  }
}

StateSearchResult invariant_state_search(const PreSymplecticForm& f,
                                         const std::vector<GroupMap>& gens,
                                         double grid_step, Int cap) {
  const FgAbelianGroup& G = f.group;
  if (!G.is_finite()) throw NotFinite("search needs a finite group");
  if (G.order() > cap) throw GroupTooLarge("group order exceeds cap");
  auto orbits = enumerate_orbits(f, gens);
  auto all = enumerate_elements(G);
  // map element -> nontrivial orbit index
  std::map<GroupElement, int> orbit_of;
  StateSearchResult out;
  GroupElement id = identity_element(G);
  for (size_t o = 0; o < orbits.orbits.size(); ++o) {
    if (orbits.orbits[o].size() == 1 && orbits.orbits[o][0] == id) continue;
    int idx = static_cast<int>(out.orbit_reps.size());
    out.orbit_reps.push_back(orbits.representatives[o]);
    for (const auto& g : orbits.orbits[o]) orbit_of.emplace(g, idx);
  }
  int t = static_cast<int>(out.orbit_reps.size());
  Cocycle c(f, SymbolEnv{}, CocycleConvention::full);

  auto feasible_at = [&](const std::vector<double>& vals) {
    State s;
    s.group = G;
    s.values.emplace(id, Cplx(1, 0));
    for (const auto& [g, o] : orbit_of) s.values.emplace(g, Cplx(vals[o], 0));
    s.default_value = Cplx(0, 0);
    return is_positive_on(s, all, c, 1e-9);
  };

  // grid sweep
  int steps = static_cast<int>(std::llround(2.0 / grid_step));
  std::vector<int> idx(t, 0);
  for (;;) {
    std::vector<double> vals(t);
    for (int i = 0; i < t; ++i) vals[i] = -1.0 + grid_step * idx[i];
    out.grid.emplace_back(vals, feasible_at(vals));
    int i = t - 1;
    while (i >= 0 && idx[i] == steps) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
    if (t == 0) break;
  }
  if (t == 0) return out;

  if (t == 1) {
    double lo = 2, hi = -2;
    for (const auto& [vals, ok] : out.grid)
      if (ok) {
        lo = std::min(lo, vals[0]);
        hi = std::max(hi, vals[0]);
      }
    if (lo <= hi) {
      // refine each endpoint by bisection to 1e-6
      auto refine = [&](double inside, double outside) {
        if (outside < -1.0 || outside > 1.0) return inside;
        while (std::abs(outside - inside) > 1e-6) {
          double mid = 0.5 * (inside + outside);
          if (feasible_at({mid}))
            inside = mid;
          else
            outside = mid;
        }
        return inside;
      };
      lo = refine(lo, lo - grid_step);
      hi = refine(hi, hi + grid_step);
      out.interval = std::make_pair(lo, hi);
    }
  }
  return out;
}

}  // namespace stg
