#include "stg/forms.hpp"

#include <algorithm>

namespace stg {

PreSymplecticForm::PreSymplecticForm(FgAbelianGroup g,
                                     std::vector<std::vector<TValue>> entries)
    : group(std::move(g)), m(std::move(entries)) {
  int d = group.dim();
  if (static_cast<int>(m.size()) != d)
    throw DimensionMismatch("form matrix size");
  for (auto& row : m)
    if (static_cast<int>(row.size()) != d)
      throw DimensionMismatch("form matrix size");
  for (int i = 0; i < d; ++i) {
    if (!(m[i][i] == TValue())) throw NotSkew("nonzero diagonal entry");
    m[i][i] = TValue();
    for (int j = i + 1; j < d; ++j) {
      if (!(m[j][i] == -m[i][j])) throw NotSkew("matrix is not skew in T");
      m[j][i] = -m[i][j];  // normalize the raw lift
    }
  }
  // well-definedness on torsion generators
  for (size_t t = 0; t < group.torsion_orders.size(); ++t) {
    int i = group.free_rank + static_cast<int>(t);
    for (int j = 0; j < d; ++j)
      if (!(m[i][j] * Int(group.torsion_orders[t]) == TValue()))
        throw Error("form is not compatible with torsion order of generator " +
                    std::to_string(i));
  }
}

TValue evaluate(const PreSymplecticForm& f, const GroupElement& x,
                const GroupElement& y) {
  int d = f.dim();
  if (static_cast<int>(x.c.size()) != d || static_cast<int>(y.c.size()) != d)
    throw DimensionMismatch("evaluate dimension");
  TValue acc;
  for (int i = 0; i < d; ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (y.c[j] == 0) continue;
      acc = acc + f.m[i][j] * (Int(x.c[i]) * Int(y.c[j]));
    }
  }
  return acc;
}

std::vector<TValue> evaluate(const MultiForm& f, const GroupElement& x,
                             const GroupElement& y) {
  std::vector<TValue> out;
  out.reserve(f.components.size());
  for (const auto& c : f.components) out.push_back(evaluate(c, x, y));
  return out;
}

double lift_evaluate(const PreSymplecticForm& f, const GroupElement& x,
                     const GroupElement& y, const SymbolEnv& env) {
  int d = f.dim();
  if (static_cast<int>(x.c.size()) != d || static_cast<int>(y.c.size()) != d)
    throw DimensionMismatch("evaluate dimension");
  double acc = 0;
  for (int i = 0; i < d; ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (y.c[j] == 0) continue;
      acc += static_cast<double>(x.c[i]) * static_cast<double>(y.c[j]) *
             tvalue_eval_raw(f.m[i][j], env);
    }
  }
  return acc;
}

namespace {

// Collect the integer linear system for sigma(x, e_j) = 0 over all basis
// elements e_j.  Unknowns: the d coordinates of x plus one slack integer per
// column with a rational part (the "mod 1" congruence).  Symbol coefficients
// give exact equations after clearing denominators.
std::vector<GroupElement> solve_orthogonality(
    const PreSymplecticForm& f, const std::vector<GroupElement>& targets) {
  const FgAbelianGroup& G = f.group;
  int d = f.dim();
  // pairing values sigma(e_i, t) for each target t
  std::vector<std::vector<TValue>> cols;
  for (const auto& t : targets) {
    std::vector<TValue> col(d);
    for (int i = 0; i < d; ++i) {
      GroupElement ei = identity_element(G);
      ei.c[i] = 1;
      col[i] = evaluate(f, ei, t);
    }
    cols.push_back(std::move(col));
  }

  std::vector<std::vector<Int>> rows;  // equations over (x_1..x_d, slacks...)
  int slacks = 0;
  std::vector<std::vector<Int>> pending_rational;  // rows needing one slack
  for (const auto& col : cols) {
    // symbol equations
    std::map<int, bool> symbols;
    for (const auto& e : col)
      for (const auto& [id, c] : e.irr) symbols[id] = true;
    for (const auto& [id, unused] : symbols) {
      Int den = 1;
      for (const auto& e : col) {
        auto it = e.irr.find(id);
        if (it != e.irr.end())
          den = boost::multiprecision::lcm(den, rat_den(it->second));
      }
      std::vector<Int> row(d, 0);
      for (int i = 0; i < d; ++i) {
        auto it = col[i].irr.find(id);
        if (it != col[i].irr.end())
          row[i] = rat_num(it->second) * (den / rat_den(it->second));
      }
      rows.push_back(std::move(row));
    }
    // rational congruence: sum_i x_i lift_i = 0 mod 1
    Int den = 1;
    for (const auto& e : col)
      den = boost::multiprecision::lcm(den, rat_den(e.lift));
    std::vector<Int> row(d, 0);
    bool nonzero = false;
    for (int i = 0; i < d; ++i) {
      row[i] = rat_num(col[i].lift) * (den / rat_den(col[i].lift));
      if (row[i] != 0) nonzero = true;
    }
    if (nonzero && den > 1) {
      row.push_back(den);  // slack coefficient, fixed up below
      pending_rational.push_back(std::move(row));
      ++slacks;
    } else if (nonzero && den == 1) {
      // integer-valued lifts: always 0 mod 1, no constraint
    }
  }
  int n = d + slacks;
  IMat A(static_cast<int>(rows.size() + pending_rational.size()), n);
  int r = 0;
  for (const auto& row : rows) {
    for (int i = 0; i < d; ++i) A.at(r, i) = row[i];
    ++r;
  }
  int s = 0;
  for (const auto& row : pending_rational) {
    for (int i = 0; i < d; ++i) A.at(r, i) = row[i];
    A.at(r, d + s) = row[d];
    ++s;
    ++r;
  }

  std::vector<std::vector<Int>> sols;
  if (A.rows == 0) {
    // no constraints at all
    for (int i = 0; i < d; ++i) {
      std::vector<Int> v(d, 0);
      v[i] = 1;
      sols.push_back(std::move(v));
    }
  } else {
    for (const auto& k : int_kernel(A)) {
      std::vector<Int> v(k.begin(), k.begin() + d);
      sols.push_back(std::move(v));
    }
  }
  // add the torsion relations so the Hermite basis is canonical in G
  for (size_t t = 0; t < G.torsion_orders.size(); ++t) {
    std::vector<Int> v(d, 0);
    v[G.free_rank + t] = G.torsion_orders[t];
    sols.push_back(std::move(v));
  }
  auto basis = row_hnf_basis(std::move(sols));
  std::vector<GroupElement> out;
  for (const auto& b : basis) {
    std::vector<long long> coords(d);
    for (int i = 0; i < d; ++i) coords[i] = static_cast<long long>(b[i]);
    GroupElement g = make_element(G, std::move(coords));
    if (!is_identity(G, g)) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<GroupElement> orthogonal_complement(
    const PreSymplecticForm& f, const std::vector<GroupElement>& elems) {
  return solve_orthogonality(f, elems);
}

std::vector<GroupElement> radical(const PreSymplecticForm& f) {
  std::vector<GroupElement> basis;
  for (int j = 0; j < f.dim(); ++j) {
    GroupElement e = identity_element(f.group);
    e.c[j] = 1;
    basis.push_back(std::move(e));
  }
  return solve_orthogonality(f, basis);
}

bool is_nondegenerate(const PreSymplecticForm& f) { return radical(f).empty(); }

PreSymplecticForm weil_pairing_form(long long l) {
  if (l < 2) throw OutOfRange("weil pairing needs l >= 2");
  FgAbelianGroup G(0, {l, l});
  std::vector<std::vector<TValue>> m(2, std::vector<TValue>(2));
  m[0][1] = TValue(Rat(1, l));
  m[1][0] = -m[0][1];
  return PreSymplecticForm(std::move(G), std::move(m));
}

bool is_irrational(const PreSymplecticForm& f) {
  // entries generate sigma(G (x) G); check integer combinations whose symbol
  // part vanishes via the kernel of the symbol-coefficient matrix
  std::vector<TValue> entries;
  for (int i = 0; i < f.dim(); ++i)
    for (int j = i + 1; j < f.dim(); ++j)
      if (!(f.m[i][j] == TValue())) entries.push_back(f.m[i][j]);
  if (entries.empty()) return true;
  std::map<int, int> symcol;
  for (const auto& e : entries)
    for (const auto& [id, c] : e.irr)
      if (!symcol.count(id)) {
        int k = static_cast<int>(symcol.size());
        symcol[id] = k;
      }
  int me = static_cast<int>(entries.size());
  int sc = static_cast<int>(symcol.size());
  // common denominator per symbol column
  std::vector<Int> den(sc, 1);
  for (const auto& e : entries)
    for (const auto& [id, c] : e.irr) {
      int j = symcol[id];
      den[j] = boost::multiprecision::lcm(den[j], rat_den(c));
    }
  // kernel of the (entries x symbols) coefficient matrix acting on the left:
  // want n with n^T C = 0, i.e. right kernel of C^T
  IMat Ct(sc, me);
  for (int i = 0; i < me; ++i)
    for (const auto& [id, c] : entries[i].irr) {
      int j = symcol[id];
      Ct.at(j, i) = rat_num(c) * (den[j] / rat_den(c));
    }
  auto ker = (sc == 0) ? std::vector<std::vector<Int>>() : int_kernel(Ct);
  if (sc == 0) {
    for (int i = 0; i < me; ++i) {
      std::vector<Int> v(me, 0);
      v[i] = 1;
      ker.push_back(std::move(v));
    }
  }
  for (const auto& n : ker) {
    Rat sum(0);
    for (int i = 0; i < me; ++i) sum += Rat(n[i]) * entries[i].lift;
    if (rat_den(sum) != 1) return false;
  }
  return true;
}

PreSymplecticForm direct_sum(const std::vector<PreSymplecticForm>& fs) {
  int free_total = 0;
  std::vector<long long> torsion;
  for (const auto& f : fs) free_total += f.group.free_rank;
  for (const auto& f : fs)
    torsion.insert(torsion.end(), f.group.torsion_orders.begin(),
                   f.group.torsion_orders.end());
  FgAbelianGroup G(free_total, std::move(torsion));
  int d = G.dim();
  std::vector<std::vector<TValue>> m(d, std::vector<TValue>(d));
  int free_off = 0, tors_off = 0;
  for (const auto& f : fs) {
    auto pos = [&](int i) {
      return i < f.group.free_rank ? free_off + i
                                   : free_total + tors_off +
                                         (i - f.group.free_rank);
    };
    for (int i = 0; i < f.dim(); ++i)
      for (int j = 0; j < f.dim(); ++j) m[pos(i)][pos(j)] = f.m[i][j];
    free_off += f.group.free_rank;
    tors_off += static_cast<int>(f.group.torsion_orders.size());
  }
  return PreSymplecticForm(std::move(G), std::move(m));
}

GroupElement direct_sum_embed(const std::vector<PreSymplecticForm>& fs,
                              size_t idx, const GroupElement& g) {
  int free_total = 0, tors_total = 0;
  for (const auto& f : fs) {
    free_total += f.group.free_rank;
    tors_total += static_cast<int>(f.group.torsion_orders.size());
  }
  int free_off = 0, tors_off = 0;
  for (size_t s = 0; s < idx; ++s) {
    free_off += fs[s].group.free_rank;
    tors_off += static_cast<int>(fs[s].group.torsion_orders.size());
  }
  const auto& fg = fs[idx].group;
  if (static_cast<int>(g.c.size()) != fg.dim())
    throw DimensionMismatch("embed dimension");
  GroupElement out;
  out.c.assign(free_total + tors_total, 0);
  for (int i = 0; i < fg.free_rank; ++i) out.c[free_off + i] = g.c[i];
  for (size_t i = 0; i < fg.torsion_orders.size(); ++i)
    out.c[free_total + tors_off + i] = g.c[fg.free_rank + i];
  return out;
}

MultiForm box_sum(const PreSymplecticForm& f1, const PreSymplecticForm& f2) {
  if (f1.group != f2.group)
    throw DimensionMismatch("box sum needs one common group");
  return MultiForm{{f1, f2}};
}

GroupElement find_hyperbolic_partner(const PreSymplecticForm& f,
                                     const GroupElement& x, long long bound) {
  int d = f.dim();
  for (int j = 0; j < d; ++j) {
    GroupElement e = identity_element(f.group);
    e.c[j] = 1;
    if (!(evaluate(f, x, e) == TValue())) return e;
  }
  // odometer over [-bound, bound]^d
  std::vector<long long> v(d, -bound);
  for (;;) {
    GroupElement y = make_element(f.group, v);
    if (!(evaluate(f, x, y) == TValue())) return y;
    int i = d - 1;
    while (i >= 0 && v[i] == bound) v[i--] = -bound;
    if (i < 0) break;
    ++v[i];
  }
  throw NotFoundWithinBound("no hyperbolic partner within bound");
}

PreSymplecticForm zero_form(const FgAbelianGroup& G) {
  std::vector<std::vector<TValue>> m(G.dim(), std::vector<TValue>(G.dim()));
  return PreSymplecticForm(G, std::move(m));
}

PreSymplecticForm canonical_form(int n, const TValue& r) {
  FgAbelianGroup G(2 * n, {});
  std::vector<std::vector<TValue>> m(2 * n, std::vector<TValue>(2 * n));
  for (int i = 0; i < n; ++i) {
    m[i][n + i] = r;
    m[n + i][i] = -r;
  }
  return PreSymplecticForm(std::move(G), std::move(m));
}

PreSymplecticForm block_form(const FgAbelianGroup& G, const TValue& r) {
  int d = G.dim();
  if (d % 2 != 0) throw DimensionMismatch("block form needs even dimension");
  std::vector<std::vector<TValue>> m(d, std::vector<TValue>(d));
  for (int i = 0; i < d; i += 2) {
    m[i][i + 1] = r;
    m[i + 1][i] = -r;
  }
  return PreSymplecticForm(G, std::move(m));
}

PreSymplecticForm scaled_form(const FgAbelianGroup& G, const IMat& A,
                              const TValue& r) {
  int d = G.dim();
  if (A.rows != d || A.cols != d) throw DimensionMismatch("scaled form size");
  std::vector<std::vector<TValue>> m(d, std::vector<TValue>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m[i][j] = r * A.at(i, j);
  return PreSymplecticForm(G, std::move(m));
}

}  // namespace stg
