#include "stg/symplectic.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "stg/normal_form.hpp"

namespace stg {

GroupMap GroupMap::from_rows(std::vector<std::vector<long long>> rows) {
  GroupMap g;
  g.m = std::move(rows);
  for (const auto& r : g.m)
    if (r.size() != g.m.size()) throw DimensionMismatch("group map not square");
  return g;
}

IMat GroupMap::imat() const { return IMat::from_rows(m); }

GroupElement apply(const FgAbelianGroup& G, const GroupMap& M,
                   const GroupElement& x) {
  int d = G.dim();
  if (M.dim() != d || static_cast<int>(x.c.size()) != d)
    throw DimensionMismatch("map/element dimension");
  std::vector<long long> y(d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) y[i] += M.m[i][j] * x.c[j];
  return make_element(G, std::move(y));
}

GroupMap map_compose(const GroupMap& A, const GroupMap& B) {
  int d = A.dim();
  if (B.dim() != d) throw DimensionMismatch("map composition");
  GroupMap C;
  C.m.assign(d, std::vector<long long>(d, 0));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) C.m[i][j] += A.m[i][k] * B.m[k][j];
  return C;
}

GroupMap inversion_map(int dim) {
  GroupMap g;
  g.m.assign(dim, std::vector<long long>(dim, 0));
  for (int i = 0; i < dim; ++i) g.m[i][i] = -1;
  return g;
}

bool is_automorphism(const FgAbelianGroup& G, const GroupMap& M) {
  int d = G.dim(), r = G.free_rank;
  if (M.dim() != d) return false;
  // torsion may not leak into the free part
  for (int i = 0; i < r; ++i)
    for (int j = r; j < d; ++j)
      if (M.m[i][j] != 0) return false;
  // order compatibility on torsion entries: n_i | M_ij * n_j
  for (int i = r; i < d; ++i)
    for (int j = r; j < d; ++j) {
      long long ni = G.torsion_orders[i - r], nj = G.torsion_orders[j - r];
      if ((static_cast<Int>(M.m[i][j]) * nj) % ni != 0) return false;
    }
  if (r > 0) {
    IMat F(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) F.at(i, j) = M.m[i][j];
    Int dF = det(F);
    if (dF != 1 && dF != -1) return false;
  }
  if (d > r) {
    IMat T(d - r, d - r);
    for (int i = r; i < d; ++i)
      for (int j = r; j < d; ++j) T.at(i - r, j - r) = M.m[i][j];
    Int dT = det(T);
    // invertible on the torsion part: det coprime to every order
    for (long long n : G.torsion_orders)
      if (boost::multiprecision::gcd(dT, Int(n)) != 1) return false;
  }
  return true;
}

bool is_symplectic_map(const PreSymplecticForm& f, const GroupMap& M) {
  if (!is_automorphism(f.group, M)) return false;
  int d = f.dim();
  std::vector<GroupElement> images(d);
  for (int j = 0; j < d; ++j) {
    GroupElement e = identity_element(f.group);
    e.c[j] = 1;
    images[j] = apply(f.group, M, e);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (!(evaluate(f, images[i], images[j]) == f.m[i][j])) return false;
  return true;
}

bool is_symplectic_map(const MultiForm& f, const GroupMap& M) {
  for (const auto& c : f.components)
    if (!is_symplectic_map(c, M)) return false;
  return true;
}

namespace {

std::vector<std::vector<long long>> zero_mat(int d) {
  return std::vector<std::vector<long long>>(d,
                                             std::vector<long long>(d, 0));
}

}  // namespace

std::vector<GroupMap> sp2nZ_generators(int n) {
  if (n < 1) throw OutOfRange("n must be positive");
  std::vector<GroupMap> out;
  auto push_block = [&](const std::vector<std::vector<long long>>& A,
                        const std::vector<std::vector<long long>>& B,
                        const std::vector<std::vector<long long>>& C,
                        const std::vector<std::vector<long long>>& D) {
    auto m = zero_mat(2 * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m[i][j] = A[i][j];
        m[i][n + j] = B[i][j];
        m[n + i][j] = C[i][j];
        m[n + i][n + j] = D[i][j];
      }
    out.push_back(GroupMap::from_rows(std::move(m)));
  };
  auto id = zero_mat(n), z = zero_mat(n);
  for (int i = 0; i < n; ++i) id[i][i] = 1;

  // T_S over a basis of symmetric matrices
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      auto S = zero_mat(n);
      S[i][j] = S[j][i] = 1;
      push_block(id, S, z, id);
    }
  // R_U for a generating set of GL(n, Z)
  std::vector<std::vector<std::vector<long long>>> us;
  {
    auto negfirst = id;
    negfirst[0][0] = -1;
    us.push_back(negfirst);
    for (int i = 0; i + 1 < n; ++i) {
      auto sw = id;
      sw[i][i] = sw[i + 1][i + 1] = 0;
      sw[i][i + 1] = sw[i + 1][i] = 1;
      us.push_back(sw);
    }
    if (n >= 2) {
      auto tv = id;
      tv[0][1] = 1;
      us.push_back(tv);
    }
  }
  for (const auto& U : us) {
    IMat Ui = inverse_unimodular(transpose(IMat::from_rows(U)));
    auto Dm = zero_mat(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        Dm[i][j] = static_cast<long long>(Ui.at(i, j));
    push_block(U, z, z, Dm);
  }
  // D_Q over diagonal 0/1 matrices Q
  for (int mask = 0; mask < (1 << n); ++mask) {
    auto Q = zero_mat(n), B = zero_mat(n), C = zero_mat(n);
    for (int i = 0; i < n; ++i) {
      Q[i][i] = (mask >> i) & 1;
      B[i][i] = 1 - Q[i][i];
      C[i][i] = Q[i][i] - 1;
    }
    push_block(Q, B, C, Q);
  }
  return out;
}

long long free_orbit_invariant(const std::vector<long long>& x) {
  long long g = 0;
  for (long long v : x) g = std::gcd(g, v < 0 ? -v : v);
  return g;
}

namespace {

long long mod_inverse(long long a, long long q) {
  long long t = 0, nt = 1, r = q, nr = ((a % q) + q) % q;
  while (nr != 0) {
    long long qq = r / nr;
    t = std::exchange(nt, t - qq * nt);
    r = std::exchange(nr, r - qq * nr);
  }
  if (r != 1) throw Error("not invertible");
  return ((t % q) + q) % q;
}

}  // namespace

GroupMap fq2_mapping(const std::vector<long long>& m,
                     const std::vector<long long>& n, long long q) {
  if (m.size() != 2 || n.size() != 2) throw DimensionMismatch("need vectors in F_q^2");
  auto red = [&](long long v) { return ((v % q) + q) % q; };
  long long m1 = red(m[0]), m2 = red(m[1]), n1 = red(n[0]), n2 = red(n[1]);
  if ((m1 == 0 && m2 == 0) || (n1 == 0 && n2 == 0))
    throw ZeroVector("mapping needs nonzero vectors");
  long long a, b, c, d;
  // four cases in order; the off-pivot sign is chosen so that det = 1
  if (n1 != 0 && m1 != 0) {
    b = 0;
    a = red(m1 * mod_inverse(n1, q));
    d = red(n1 * mod_inverse(m1, q));
    c = red((m2 - red(n2 * d)) * mod_inverse(n1, q));
  } else if (n1 != 0 && m2 != 0) {
    d = 0;
    c = red(m2 * mod_inverse(n1, q));
    b = red(q - red(n1 * mod_inverse(m2, q)));
    a = red((m1 - red(b * n2)) * mod_inverse(n1, q));
  } else if (n2 != 0 && m1 != 0) {
    a = 0;
    b = red(m1 * mod_inverse(n2, q));
    c = red(q - red(n2 * mod_inverse(m1, q)));
    d = red((m2 - red(c * n1)) * mod_inverse(n2, q));
  } else {
    c = 0;
    d = red(m2 * mod_inverse(n2, q));
    a = red(n2 * mod_inverse(m2, q));
    b = red((m1 - red(a * n1)) * mod_inverse(n2, q));
  }
  return GroupMap::from_rows({{a, b}, {c, d}});
}

Fq::Fq(long long qq) {
  long long n = qq;
  p = 0;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = n;
  f = 0;
  long long t = 1;
  while (t < qq) {
    t *= p;
    ++f;
  }
  if (t != qq) throw OutOfRange("q is not a prime power");
  if (f == 1) {
    modulus = {0, 1};  // x
    return;
  }
  // search a monic irreducible of degree f over F_p (no roots suffices for
  // f <= 3, checked by full root scan plus factor scan for f = 4)
  std::vector<long long> cand(f + 1, 0);
  cand[f] = 1;
  auto eval = [&](const std::vector<long long>& poly, long long x) {
    long long acc = 0;
    for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
      acc = (acc * x + poly[i]) % p;
    return acc;
  };
  long long total = 1;
  for (int i = 0; i < f; ++i) total *= p;
  for (long long code = 0; code < total; ++code) {
    long long cc = code;
    for (int i = 0; i < f; ++i) {
      cand[i] = cc % p;
      cc /= p;
    }
    if (cand[0] == 0) continue;
    bool has_root = false;
    for (long long x = 0; x < p && !has_root; ++x)
      if (eval(cand, x) == 0) has_root = true;
    if (has_root) continue;
    if (f >= 4) continue;  // degrees used here are <= 3
    modulus = cand;
    return;
  }
  throw Error("no irreducible polynomial found");
}

long long Fq::q() const {
  long long t = 1;
  for (int i = 0; i < f; ++i) t *= p;
  return t;
}

namespace {

std::vector<long long> fq_digits(long long a, long long p, int f) {
  std::vector<long long> d(f, 0);
  for (int i = 0; i < f; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

long long fq_pack(const std::vector<long long>& d, long long p) {
  long long a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

}  // namespace

long long Fq::add(long long a, long long b) const {
  auto da = fq_digits(a, p, f), db = fq_digits(b, p, f);
  for (int i = 0; i < f; ++i) da[i] = (da[i] + db[i]) % p;
  return fq_pack(da, p);
}

long long Fq::sub(long long a, long long b) const {
  auto da = fq_digits(a, p, f), db = fq_digits(b, p, f);
  for (int i = 0; i < f; ++i) da[i] = ((da[i] - db[i]) % p + p) % p;
  return fq_pack(da, p);
}

long long Fq::mul(long long a, long long b) const {
  auto da = fq_digits(a, p, f), db = fq_digits(b, p, f);
  std::vector<long long> prod(2 * f - 1, 0);
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  // reduce mod the monic modulus
  for (int i = 2 * f - 2; i >= f; --i) {
    long long c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < f; ++j)
      prod[i - f + j] = ((prod[i - f + j] - c * modulus[j]) % p + p) % p;
  }
  prod.resize(f);
  return fq_pack(prod, p);
}

long long Fq::inv(long long a) const {
  if (a == 0) throw Error("division by zero in F_q");
  long long e = q() - 2, acc = 1, base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::array<long long, 4> fq2_mapping_fq(const std::array<long long, 2>& m,
                                        const std::array<long long, 2>& n,
                                        const Fq& F) {
  long long m1 = m[0], m2 = m[1], n1 = n[0], n2 = n[1];
  if ((m1 == 0 && m2 == 0) || (n1 == 0 && n2 == 0))
    throw ZeroVector("mapping needs nonzero vectors");
  long long a, b, c, d;
  if (n1 != 0 && m1 != 0) {
    b = 0;
    a = F.mul(m1, F.inv(n1));
    d = F.mul(n1, F.inv(m1));
    c = F.mul(F.sub(m2, F.mul(n2, d)), F.inv(n1));
  } else if (n1 != 0 && m2 != 0) {
    d = 0;
    c = F.mul(m2, F.inv(n1));
    b = F.sub(0, F.mul(n1, F.inv(m2)));
    a = F.mul(F.sub(m1, F.mul(b, n2)), F.inv(n1));
  } else if (n2 != 0 && m1 != 0) {
    a = 0;
    b = F.mul(m1, F.inv(n2));
    c = F.sub(0, F.mul(n2, F.inv(m1)));
    d = F.mul(F.sub(m2, F.mul(c, n1)), F.inv(n2));
  } else {
    c = 0;
    d = F.mul(m2, F.inv(n2));
    a = F.mul(n2, F.inv(m2));
    b = F.mul(F.sub(m1, F.mul(a, n1)), F.inv(n2));
  }
  return {a, b, c, d};
}

std::vector<size_t> OrbitPartition::sizes() const {
  std::vector<size_t> s;
  for (const auto& o : orbits) s.push_back(o.size());
  return s;
}

OrbitPartition enumerate_orbits(const PreSymplecticForm& f,
                                const std::vector<GroupMap>& gens) {
  const FgAbelianGroup& G = f.group;
  if (!G.is_finite()) throw NotFinite("orbit enumeration needs a finite group");
  std::vector<GroupMap> maps;
  for (const auto& g : gens) {
    if (!is_symplectic_map(f, g))
      throw NonSymplecticGenerator("generator does not preserve the form");
    maps.push_back(g);
  }
  auto all = enumerate_elements(G, Int(1) << 16);
  std::set<GroupElement> seen;
  OrbitPartition out;
  for (const auto& start : all) {
    if (seen.count(start)) continue;
    std::vector<GroupElement> frontier{start};
    std::set<GroupElement> orbit{start};
    while (!frontier.empty()) {
      std::vector<GroupElement> next;
      for (const auto& x : frontier)
        for (const auto& M : maps) {
          GroupElement y = apply(G, M, x);
          if (orbit.insert(y).second) next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
    // generators of a finite group closure: forward images suffice since
    // each map has finite order on G, but guard by closing under the set
    std::vector<GroupElement> sorted(orbit.begin(), orbit.end());
    for (const auto& x : sorted) seen.insert(x);
    out.representatives.push_back(sorted.front());
    out.orbits.push_back(std::move(sorted));
  }
  return out;
}

GroupMap stacking_map(int k, long long /*p*/) {
  if (k < 2) throw OutOfRange("stacking map needs k >= 2 blocks");
  static const long long M4[4][4] = {
      {1, 0, 0, 0}, {0, 1, 1, -1}, {1, 0, 1, 0}, {1, 0, 0, 1}};
  auto m = zero_mat(2 * k);
  for (int i = 0; i < 2 * k; ++i) m[i][i] = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = M4[i][j];
  return GroupMap::from_rows(std::move(m));
}

GroupMap block_swap_map(int k, int i) {
  if (i < 0 || i + 1 >= k) throw OutOfRange("block index");
  auto m = zero_mat(2 * k);
  for (int j = 0; j < 2 * k; ++j) m[j][j] = 1;
  for (int t = 0; t < 2; ++t) {
    int a = 2 * i + t, b = 2 * (i + 1) + t;
    m[a][a] = m[b][b] = 0;
    m[a][b] = m[b][a] = 1;
  }
  return GroupMap::from_rows(std::move(m));
}

namespace {

// the form is r times the canonical [[0,I],[-I,0]] pattern
bool matches_canonical(const PreSymplecticForm& f, TValue& r_out) {
  int d = f.dim();
  if (d % 2 != 0 || d == 0) return false;
  int n = d / 2;
  TValue r = f.m[0][n];
  if (r == TValue()) return false;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const TValue& want = (j == n + i) ? r : TValue();
      if (!(f.m[i][j] == want)) return false;
    }
  r_out = r;
  return true;
}

// the form is r times sigma_2 on consecutive pairs
bool matches_blocks(const PreSymplecticForm& f, TValue& r_out) {
  int d = f.dim();
  if (d % 2 != 0 || d == 0) return false;
  TValue r = f.m[0][1];
  if (r == TValue()) return false;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const TValue& want = (i % 2 == 0 && j == i + 1) ? r : TValue();
      if (!(f.m[i][j] == want)) return false;
    }
  r_out = r;
  return true;
}

}  // namespace

std::vector<GroupMap> auto_generators(const PreSymplecticForm& f) {
  int d = f.dim();
  std::vector<GroupMap> gens{inversion_map(d)};
  TValue r;
  if (matches_canonical(f, r)) {
    for (auto& g : sp2nZ_generators(d / 2)) gens.push_back(std::move(g));
  } else if (matches_blocks(f, r)) {
    int k = d / 2;
    // SL(2, Z) images in each hyperbolic block
    for (int blk = 0; blk < k; ++blk) {
      for (const auto& g2 : sp2nZ_generators(1)) {
        auto m = zero_mat(d);
        for (int i = 0; i < d; ++i) m[i][i] = 1;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) m[2 * blk + i][2 * blk + j] = g2.m[i][j];
        gens.push_back(GroupMap::from_rows(std::move(m)));
      }
    }
    for (int i = 0; i + 1 < k; ++i) gens.push_back(block_swap_map(k, i));
    if (k >= 2) gens.push_back(stacking_map(k, 0));
  }
  // drop generators that fail membership (e.g. identity duplicates are fine)
  std::vector<GroupMap> ok;
  for (auto& g : gens)
    if (is_symplectic_map(f, g)) ok.push_back(std::move(g));
  return ok;
}

Ergodicity is_ergodic(const PreSymplecticForm& f) {
  const FgAbelianGroup& G = f.group;
  if (G.is_finite()) {
    return (G.order() == 1) ? Ergodicity::yes : Ergodicity::no;
  }
  if (!radical(f).empty()) return Ergodicity::no;
  if (G.is_torsion_free()) {
    // detect r * sigma_2n with r non-torsion, up to a change of basis
    try {
      auto [snf, scale] = diagonalize_rank1_form(f);
      if (!scale.is_torsion() && snf.null_rank == 0) {
        bool unit_blocks = true;
        for (const auto& b : snf.block_values)
          if (!(b == scale) && !(b == -scale)) unit_blocks = false;
        if (unit_blocks) return Ergodicity::yes;
      }
    } catch (const NotRankOne&) {
    }
  }
  return Ergodicity::unknown;
}

std::string to_string(Ergodicity e) {
  switch (e) {
    case Ergodicity::yes:
      return "yes";
    case Ergodicity::no:
      return "no";
    case Ergodicity::unknown:
      return "unknown";
  }
  return "unknown";
}

bool is_split_hyperbolic(const PreSymplecticForm& f, const GroupElement& h1,
                         const GroupElement& h2) {
  if (!is_nondegenerate(f)) throw DegenerateForm("form must be symplectic");
  if (evaluate(f, h1, h2) == TValue())
    throw DegenerateRestriction("restriction to <h1,h2> is degenerate");
  const FgAbelianGroup& G = f.group;
  auto comp = orthogonal_complement(f, {h1, h2});
  if (G.is_torsion_free()) {
    int d = G.dim();
    std::vector<std::vector<Int>> rows;
    auto to_row = [&](const GroupElement& g) {
      std::vector<Int> r(d);
      for (int i = 0; i < d; ++i) r[i] = g.c[i];
      return r;
    };
    rows.push_back(to_row(h1));
    rows.push_back(to_row(h2));
    size_t comp_rank = row_hnf_basis(
        [&] {
          std::vector<std::vector<Int>> cr;
          for (const auto& g : comp) cr.push_back(to_row(g));
          return cr;
        }())
        .size();
    for (const auto& g : comp) rows.push_back(to_row(g));
    auto basis = row_hnf_basis(rows);
    // direct internal sum: ranks add up and the joint lattice is everything
    return 2 + comp_rank == basis.size() &&
           lattice_is_full({basis.begin(), basis.end()}, d);
  }
  if (G.is_finite()) {
    // enumerate both subgroups
    auto span = [&](const std::vector<GroupElement>& gens) {
      std::set<GroupElement> sub{identity_element(G)};
      std::vector<GroupElement> frontier{identity_element(G)};
      while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier)
          for (const auto& g : gens) {
            GroupElement y = compose(G, x, g);
            if (sub.insert(y).second) next.push_back(std::move(y));
          }
        frontier = std::move(next);
      }
      return sub;
    };
    auto H = span({h1, h2});
    auto K = span(comp);
    std::vector<GroupElement> inter;
    std::set_intersection(H.begin(), H.end(), K.begin(), K.end(),
                          std::back_inserter(inter));
    return inter.size() == 1 &&
           Int(H.size()) * Int(K.size()) == G.order();
  }
  throw Error("mixed free/torsion groups are not supported here");
}

std::vector<GroupElement> bfs_orbit_in_box(const PreSymplecticForm& f,
                                           const std::vector<GroupMap>& gens,
                                           const GroupElement& start,
                                           long long box) {
  const FgAbelianGroup& G = f.group;
  std::vector<GroupMap> maps;
  for (const auto& g : gens) {
    if (!is_symplectic_map(f, g))
      throw NonSymplecticGenerator("generator does not preserve the form");
    maps.push_back(g);
    maps.push_back(GroupMap{[&] {
      IMat inv = inverse_unimodular(g.imat());
      std::vector<std::vector<long long>> rows(G.dim(),
                                               std::vector<long long>(G.dim()));
      for (int i = 0; i < G.dim(); ++i)
        for (int j = 0; j < G.dim(); ++j)
          rows[i][j] = static_cast<long long>(inv.at(i, j));
      return rows;
    }()});
  }
  auto in_box = [&](const GroupElement& g) {
    for (long long v : g.c)
      if (v < -box || v > box) return false;
    return true;
  };
  std::set<GroupElement> seen;
  std::vector<GroupElement> frontier;
  if (in_box(start)) {
    seen.insert(start);
    frontier.push_back(start);
  }
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& M : maps) {
        GroupElement y = apply(G, M, x);
        if (!in_box(y)) continue;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace stg
