#include <doctest.h>

#include "stg/normal_form.hpp"
#include "support.hpp"

using namespace stg;
using namespace stg::testing;

namespace {

const std::vector<std::vector<long long>> kSigma1{
    {0, 1, 1, 0}, {-1, 0, 0, 0}, {-1, 0, 0, 1}, {0, 0, -1, 0}};
const std::vector<std::vector<long long>> kSigma2{
    {0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
const std::vector<std::vector<long long>> kCommutator{
    {0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}};

IMat block_diagonal(const std::vector<Int>& blocks, int null_rank) {
  int n = 2 * static_cast<int>(blocks.size()) + null_rank;
  IMat b(n, n);
  for (size_t i = 0; i < blocks.size(); ++i) {
    b.at(2 * i, 2 * i + 1) = blocks[i];
    b.at(2 * i + 1, 2 * i) = -blocks[i];
  }
  return b;
}

// the oracle: re-multiply the congruence and check every claimed property
void verify_snf(const IMat& a, const SkewNormalForm& snf) {
  Int d = det(snf.transform);
  CHECK((d == 1 || d == -1));
  auto blocks = snf.integer_blocks();
  IMat expect = block_diagonal(blocks, snf.null_rank);
  IMat got = mul(transpose(snf.transform), mul(a, snf.transform));
  CHECK(got == expect);
  for (const auto& b : blocks) CHECK(b > 0);
  for (size_t i = 0; i + 1 < blocks.size(); ++i)
    CHECK(blocks[i + 1] % blocks[i] == 0);
  CHECK(2 * static_cast<int>(blocks.size()) + snf.null_rank == a.rows);
}

IMat random_skew(int n, long long box) {
  IMat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      a.at(i, j) = rand_int(-box, box);
      a.at(j, i) = -a.at(i, j);
    }
  return a;
}

IMat random_unimodular(int n, int steps) {
  IMat u = IMat::identity(n);
  for (int s = 0; s < steps; ++s) {
    int i = static_cast<int>(rand_int(0, n - 1));
    int j = static_cast<int>(rand_int(0, n - 1));
    if (i == j) continue;
    Int q = rand_int(-2, 2);
    for (int r = 0; r < n; ++r) u.at(r, i) += q * u.at(r, j);
  }
  return u;
}

}  // namespace

TEST_CASE("skew normal form of sigma_2") {
  IMat a = IMat::from_rows({{0, 1}, {-1, 0}});
  auto snf = skew_normal_form(a);
  CHECK(snf.transform == IMat::identity(2));
  CHECK(snf.integer_blocks() == std::vector<Int>{1});
  CHECK(snf.null_rank == 0);
  verify_snf(a, snf);
}

TEST_CASE("skew normal form recovers scrambled blocks") {
  IMat base = block_diagonal({2, 6}, 0);
  for (int iter = 0; iter < 25; ++iter) {
    IMat u = random_unimodular(4, 12);
    IMat a = mul(transpose(u), mul(base, u));
    auto snf = skew_normal_form(a);
    CHECK(snf.integer_blocks() == std::vector<Int>{2, 6});
    verify_snf(a, snf);
  }
}

TEST_CASE("skew normal form of the printed 4x4 matrix") {
  IMat a = IMat::from_rows(kSigma1);
  auto snf = skew_normal_form(a);
  CHECK(snf.integer_blocks() == std::vector<Int>{1, 1});
  CHECK(snf.null_rank == 0);
  verify_snf(a, snf);
}

TEST_CASE("skew normal form with null directions") {
  IMat a = block_diagonal({3}, 2);
  auto snf = skew_normal_form(a);
  CHECK(snf.integer_blocks() == std::vector<Int>{3});
  CHECK(snf.null_rank == 2);
  verify_snf(a, snf);

  IMat z(3, 3);
  auto zf = skew_normal_form(z);
  CHECK(zf.integer_blocks().empty());
  CHECK(zf.null_rank == 3);
}

TEST_CASE("skew normal form rejects non-skew input") {
  CHECK_THROWS_AS(skew_normal_form(IMat::from_rows({{0, 1}, {1, 0}})), NotSkew);
}

TEST_CASE("random skew matrices reduce correctly") {
  for (int iter = 0; iter < 60; ++iter) {
    int n = static_cast<int>(rand_int(1, 7));
    IMat a = random_skew(n, 9);
    auto snf = skew_normal_form(a);
    verify_snf(a, snf);
  }
}

TEST_CASE("rank-1 diagonalization with a symbol scale") {
  PreSymplecticForm f = canonical_form(1, tvalue_symbol(1));
  auto [snf, scale] = diagonalize_rank1_form(f);
  CHECK(scale == tvalue_symbol(1));
  REQUIRE(snf.block_values.size() == 1);
  CHECK(snf.block_values[0] == tvalue_symbol(1));
  CHECK(snf.null_rank == 0);
}

TEST_CASE("rank-1 diagonalization of theta times the printed matrix") {
  FgAbelianGroup z4(4, {});
  PreSymplecticForm f =
      scaled_form(z4, IMat::from_rows(kSigma1), tvalue_symbol(1));
  auto [snf, scale] = diagonalize_rank1_form(f);
  CHECK(scale == tvalue_symbol(1));
  REQUIRE(snf.block_values.size() == 2);
  CHECK(snf.block_values[0] == tvalue_symbol(1));
  CHECK(snf.block_values[1] == tvalue_symbol(1));
  // oracle: the congruence transform carries f onto the block shape
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      GroupElement ei = identity_element(z4), ej = identity_element(z4);
      for (int r = 0; r < 4; ++r) {
        ei.c[r] = static_cast<long long>(snf.transform.at(r, i));
        ej.c[r] = static_cast<long long>(snf.transform.at(r, j));
      }
      TValue want;
      if (i % 2 == 0 && j == i + 1) want = snf.block_values[i / 2];
      CHECK(evaluate(f, ei, ej) == want);
    }
}

TEST_CASE("rank-1 diagonalization with rational scales") {
  PreSymplecticForm f = direct_sum({canonical_form(1, TValue(Rat(1, 3))),
                                    canonical_form(1, TValue(Rat(2, 3)))});
  auto [snf, scale] = diagonalize_rank1_form(f);
  CHECK(scale == TValue(Rat(1, 3)));
  REQUIRE(snf.block_values.size() == 2);
  CHECK(snf.block_values[0] == TValue(Rat(1, 3)));
  CHECK(snf.block_values[1] == TValue(Rat(2, 3)));
}

TEST_CASE("rank-1 detection rejects genuinely mixed entries") {
  FgAbelianGroup z4(4, {});
  std::vector<std::vector<TValue>> m(4, std::vector<TValue>(4));
  m[0][1] = tvalue_symbol(1);
  m[1][0] = -m[0][1];
  m[2][3] = tvalue_symbol(2);  // independent symbol
  m[3][2] = -m[2][3];
  CHECK_THROWS_AS(diagonalize_rank1_form(PreSymplecticForm(z4, m)),
                  NotRankOne);
}

TEST_CASE("simultaneous diagonalizability") {
  IMat s1 = IMat::from_rows(kSigma1), s2 = IMat::from_rows(kSigma2);
  CHECK_FALSE(simultaneous_diagonalizable({s1, s2}));
  CHECK(sub(mul(s1, s2), mul(s2, s1)) == IMat::from_rows(kCommutator));

  CHECK(simultaneous_diagonalizable({s1, s1}));
  CHECK(simultaneous_diagonalizable({s2, s2}));

  IMat a = block_diagonal({1, 1}, 0), b = block_diagonal({1, 2}, 0);
  CHECK(simultaneous_diagonalizable({a, b}));
  CHECK(simultaneous_diagonalizable({b, a}));  // symmetry of the test

  CHECK_THROWS_AS(
      simultaneous_diagonalizable({s1, IMat::from_rows({{0, 1}, {-1, 0}})}),
      DimensionMismatch);
}

TEST_CASE("primary decomposition of (Z/6)^2") {
  FgAbelianGroup g(0, {6, 6});
  std::vector<std::vector<TValue>> m(2, std::vector<TValue>(2));
  m[0][1] = TValue(Rat(1, 6));
  m[1][0] = -m[0][1];
  PreSymplecticForm f(g, m);
  auto parts = primary_decompose(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].prime == 2);
  CHECK(parts[0].generators[0] == make_element(g, {3, 0}));
  CHECK(parts[0].generators[1] == make_element(g, {0, 3}));
  CHECK(parts[0].form.m[0][1] == TValue(Rat(1, 2)));  // 9/6 = 3/2 = 1/2 mod 1
  CHECK(parts[1].prime == 3);
  CHECK(parts[1].generators[0] == make_element(g, {2, 0}));
  CHECK(parts[1].form.m[0][1] == TValue(Rat(2, 3)));  // 4/6 = 2/3
  // oracle: evaluate the original form on the stated generators
  CHECK(evaluate(f, make_element(g, {3, 0}), make_element(g, {0, 3})) ==
        TValue(Rat(1, 2)));
  CHECK(evaluate(f, make_element(g, {2, 0}), make_element(g, {0, 2})) ==
        TValue(Rat(2, 3)));
  // cross-part pairings vanish
  for (const auto& x : parts[0].generators)
    for (const auto& y : parts[1].generators)
      CHECK(evaluate(f, x, y) == TValue());
  // parts have coprime exponents and their orders multiply back to |G|
  CHECK(boost::multiprecision::gcd(parts[0].form.group.exponent(),
                                   parts[1].form.group.exponent()) == 1);
  CHECK(parts[0].form.group.order() * parts[1].form.group.order() ==
        g.order());
  CHECK(parts[0].form.group.str() == "Z/2 x Z/2");
  CHECK(parts[1].form.group.str() == "Z/3 x Z/3");
}

TEST_CASE("primary decomposition of a prime-power group is itself") {
  PreSymplecticForm w5 = weil_pairing_form(5);
  auto parts = primary_decompose(w5);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].prime == 5);
  CHECK(parts[0].form.group == w5.group);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(parts[0].form.m[i][j] == w5.m[i][j]);
}

TEST_CASE("primary decomposition rejects the degenerate and infinite") {
  CHECK_THROWS_AS(primary_decompose(zero_form({0, {4, 4}})), DegenerateForm);
  CHECK_THROWS_AS(primary_decompose(canonical_form(1, tvalue_symbol(1))),
                  NotFinite);
}
