#include "stg/normal_form.hpp"

#include <algorithm>

namespace stg {

std::vector<Int> SkewNormalForm::integer_blocks() const {
  std::vector<Int> out;
  for (const auto& b : block_values) {
    if (!b.irr.empty() || rat_den(b.lift) != 1)
      throw Error("blocks are not integers");
    out.push_back(rat_num(b.lift));
  }
  return out;
}

namespace {

struct Reducer {
  IMat a;  // working copy, kept skew throughout
  IMat u;  // accumulated transform, a == u^T a0 u

  explicit Reducer(const IMat& m) : a(m), u(IMat::identity(m.rows)) {}

  // each elementary column operation is applied congruently: the matching
  // row operation keeps a = u^T a0 u and a skew
  void swap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < a.rows; ++r) std::swap(a.at(i, r), a.at(j, r));
    for (int r = 0; r < a.rows; ++r) std::swap(u.at(r, i), u.at(r, j));
  }
  void addmul(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < a.rows; ++r) a.at(r, dst) += q * a.at(r, src);
    for (int r = 0; r < a.rows; ++r) a.at(dst, r) += q * a.at(src, r);
    for (int r = 0; r < a.rows; ++r) u.at(r, dst) += q * u.at(r, src);
  }
  void negate(int j) {
    for (int r = 0; r < a.rows; ++r) a.at(r, j) = -a.at(r, j);
    for (int r = 0; r < a.rows; ++r) a.at(j, r) = -a.at(j, r);
    for (int r = 0; r < a.rows; ++r) u.at(r, j) = -u.at(r, j);
  }
};

Int floordiv(const Int& x, const Int& y) {
  Int q = x / y;
  if (q * y != x && ((x < 0) != (y < 0))) --q;
  return q;
}

}  // namespace

SkewNormalForm skew_normal_form(const IMat& A) {
  if (A.rows != A.cols || !A.is_skew())
    throw NotSkew("input is not an integer skew matrix");
  int n = A.rows;
  Reducer w(A);
  std::vector<Int> blocks;
  int k = 0;
  while (k + 1 < n) {
    // pivot: minimal |value|, ties by lowest (row, col); by skewness the
    // minimum is always attained in the upper triangle first
    int pi = -1, pj = -1;
    for (int i = k; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (w.a.at(i, j) == 0) continue;
        if (pi < 0 || abs(w.a.at(i, j)) < abs(w.a.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // remaining block is zero
    // move pivot to (k, k+1); pj > pi >= k keeps the indices stable
    if (pi != k) w.swap(pi, k);
    if (pj != k + 1) w.swap(pj, k + 1);
    if (w.a.at(k, k + 1) < 0) w.negate(k + 1);

    // clear rows k and k+1 beyond column k+1
    bool clean = true;
    Int d = w.a.at(k, k + 1);
    for (int j = k + 2; j < n; ++j) {
      Int q = floordiv(w.a.at(k, j), d);
      w.addmul(j, k + 1, -q);
      if (w.a.at(k, j) != 0) clean = false;
    }
    d = w.a.at(k, k + 1);
    for (int j = k + 2; j < n; ++j) {
      // a[k+1][k] = -d; use column k to clear a[k+1][j]
      Int q = floordiv(w.a.at(k + 1, j), d);
      w.addmul(j, k, q);
      if (w.a.at(k + 1, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; re-pivot

    // divisibility sweep over the trailing block
    d = w.a.at(k, k + 1);
    bool divides = true;
    for (int i = k + 2; i < n && divides; ++i)
      for (int j = k + 2; j < n; ++j)
        if (w.a.at(i, j) % d != 0) {
          w.addmul(k, i, Int(1));  // pulls a non-multiple into row k
          divides = false;
          break;
        }
    if (!divides) continue;

    blocks.push_back(d);
    k += 2;
  }
  SkewNormalForm out;
  out.transform = w.u;
  for (const auto& b : blocks) out.block_values.push_back(TValue(Rat(b)));
  out.null_rank = n - 2 * static_cast<int>(blocks.size());
  return out;
}

std::pair<SkewNormalForm, TValue> diagonalize_rank1_form(
    const PreSymplecticForm& f) {
  if (!f.group.is_torsion_free() || f.dim() % 2 != 0)
    throw NotRankOne("rank-1 diagonalization expects a form on Z^(2n)");
  int d = f.dim();
  // gather nonzero upper entries; all must be rational multiples of one
  // generator value (raw-lift semantics)
  const TValue* ref = nullptr;
  for (int i = 0; i < d && !ref; ++i)
    for (int j = i + 1; j < d; ++j)
      if (!(f.m[i][j] == TValue())) {
        ref = &f.m[i][j];
        break;
      }
  if (!ref) {
    // zero form
    SkewNormalForm out;
    out.transform = IMat::identity(d);
    out.null_rank = d;
    return {std::move(out), TValue()};
  }
  auto multiplier = [&](const TValue& e) -> std::optional<Rat> {
    // t with e = t * ref, exact on raw lifts and coefficients
    Rat t;
    bool have = false;
    if (!ref->irr.empty()) {
      const auto& [id, c] = *ref->irr.begin();
      auto it = e.irr.find(id);
      if (it == e.irr.end()) {
        if (e.irr.empty() && e.lift == 0) return Rat(0);
        return std::nullopt;
      }
      t = it->second / c;
      have = true;
    } else if (ref->lift != 0) {
      t = e.lift / ref->lift;
      have = true;
    }
    if (!have) return std::nullopt;
    // verify proportionality entirely
    if (e.lift != t * ref->lift) return std::nullopt;
    if (e.irr.size() != (t == 0 ? 0 : ref->irr.size())) return std::nullopt;
    for (const auto& [id, c] : ref->irr) {
      auto it = e.irr.find(id);
      if (t == 0) {
        if (it != e.irr.end()) return std::nullopt;
      } else {
        if (it == e.irr.end() || it->second != t * c) return std::nullopt;
      }
    }
    return t;
  };
  std::vector<std::vector<Rat>> t(d, std::vector<Rat>(d, Rat(0)));
  Int den = 1;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      auto m = multiplier(f.m[i][j]);
      if (!m)
        throw NotRankOne("entries do not lie in a cyclic subgroup");
      t[i][j] = *m;
      den = boost::multiprecision::lcm(den, rat_den(*m));
    }
  Int g = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      g = boost::multiprecision::gcd(g, rat_num(t[i][j]) *
                                            (den / rat_den(t[i][j])));
  if (g == 0) g = 1;
  TValue scale = (*ref) * g;
  scale.lift /= Rat(den);
  for (auto& [id, c] : scale.irr) c /= Rat(den);
  IMat M(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Int mij = rat_num(t[i][j]) * (den / rat_den(t[i][j])) / g;
      M.at(i, j) = mij;
      M.at(j, i) = -mij;
    }
  auto snf = skew_normal_form(M);
  // report blocks as scale * r_i
  for (auto& b : snf.block_values) {
    Int r = rat_num(b.lift);
    b = scale * r;
  }
  return {std::move(snf), std::move(scale)};
}

bool simultaneous_diagonalizable(const std::vector<IMat>& ms) {
  for (const auto& m : ms) {
    if (m.rows != m.cols || (ms.size() && m.rows != ms[0].rows))
      throw DimensionMismatch("matrices must share one square size");
    if (!m.is_skew()) throw NotSkew("non-skew matrix in list");
  }
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = i + 1; j < ms.size(); ++j)
      if (!(mul(ms[i], ms[j]) == mul(ms[j], ms[i]))) return false;
  return true;
}

std::vector<PrimaryPart> primary_decompose(const PreSymplecticForm& f) {
  const FgAbelianGroup& G = f.group;
  if (!G.is_finite()) throw NotFinite("primary decomposition needs finite G");
  if (!is_nondegenerate(f)) throw DegenerateForm("form is degenerate");
  int k = static_cast<int>(G.torsion_orders.size());
  // primes dividing exp(G)
  Int e = G.exponent();
  std::vector<Int> primes;
  Int m = e;
  for (Int p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) primes.push_back(m);

  std::vector<PrimaryPart> parts;
  for (const Int& p : primes) {
    std::vector<long long> orders;
    std::vector<long long> mult;  // m_i = n_i / p^{v_i}
    std::vector<int> idx;
    for (int i = 0; i < k; ++i) {
      Int n = G.torsion_orders[i];
      Int pv = 1;
      while (n % p == 0) {
        n /= p;
        pv *= p;
      }
      if (pv > 1) {
        orders.push_back(static_cast<long long>(pv));
        mult.push_back(static_cast<long long>(n));
        idx.push_back(i);
      }
    }
    if (orders.empty()) continue;
    FgAbelianGroup Gp(0, orders);
    int dp = static_cast<int>(orders.size());
    std::vector<std::vector<TValue>> mm(dp, std::vector<TValue>(dp));
    for (int a = 0; a < dp; ++a)
      for (int b = 0; b < dp; ++b)
        mm[a][b] = f.m[idx[a]][idx[b]] * (Int(mult[a]) * Int(mult[b]));
    PrimaryPart part;
    part.prime = p;
    part.form = PreSymplecticForm(Gp, std::move(mm));
    for (int a = 0; a < dp; ++a) {
      GroupElement g = identity_element(G);
      g.c[G.free_rank + idx[a]] = mult[a];
      part.generators.push_back(reduce(G, std::move(g)));
    }
    parts.push_back(std::move(part));
  }
  // cross-primary pairings must vanish (coprime torsion)
  for (size_t s = 0; s < parts.size(); ++s)
    for (size_t t = s + 1; t < parts.size(); ++t)
      for (const auto& x : parts[s].generators)
        for (const auto& y : parts[t].generators)
          if (!(evaluate(f, x, y) == TValue()))
            throw DegenerateForm("nonzero pairing across coprime parts");
  return parts;
}

}  // namespace stg
