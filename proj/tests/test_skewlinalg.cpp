#include <gtest/gtest.h>

#include "skewknh/skewlinalg.hpp"
#include "test_util.hpp"

using namespace skewknh;
using namespace skewknh::testing;

namespace {

SkewPolyVec vec(const FieldPtr& f, std::initializer_list<Coeffs> entries) {
  return SkewPolyVec(f, RawRow(entries));
}

SkewPolyMat random_mat(const FieldPtr& f, Rng& rng, std::size_t r, std::size_t c, int maxdeg) {
  RawMat m(r, RawRow(c));
  for (auto& row : m)
    for (auto& e : row) e = random_poly(f, rng, static_cast<int>(rng.below(maxdeg + 2)) - 1).coeffs();
  return SkewPolyMat(f, m);
}

}  // namespace

TEST(SkewLinalg, WeightedDegreeByHand) {
  auto f = f4();
  EXPECT_EQ(w_degree(vec(f, {{0, 1}, {1}}), {0, 3}), 3);
  EXPECT_EQ(w_degree(SkewPolyVec::zero(f, 2), {0, 0}), kDegNegInf);
  EXPECT_EQ(w_degree(vec(f, {{}, {kZ}}), {5, 0}), 0);
  EXPECT_THROW(w_degree(vec(f, {{1}}), {0, 0}), LengthMismatch);
}

TEST(SkewLinalg, PivotByHand) {
  auto f = f4();
  EXPECT_EQ(w_pivot(vec(f, {{0, 1}, {0, 1}}), {0, 0}), 1);
  EXPECT_EQ(w_pivot(vec(f, {{0, 0, 1}, {1}}), {0, 0}), 0);
  EXPECT_EQ(w_pivot(vec(f, {{1}, {}, {1}}), {0, 0, 0}), 2);
  EXPECT_THROW(w_pivot(SkewPolyVec::zero(f, 2), {0, 0}), ZeroVector);
}

TEST(SkewLinalg, WeakPopovByHand) {
  auto f = f4();
  EXPECT_TRUE(is_weak_popov(SkewPolyMat::identity(f, 3), {2, 2, 2}));
  SkewPolyMat worked(f, RawMat{{{1, 1}, {}}, {{kZ}, {1}}});
  EXPECT_TRUE(is_weak_popov(worked, {0, 0}));
  SkewPolyMat same(f, RawMat{{{1}, {kZ}}, {{1}, {kZ}}});
  EXPECT_FALSE(is_weak_popov(same, {0, 0}));
  SkewPolyMat zero_row(f, RawMat{{{1}, {}}, {{}, {}}});
  EXPECT_FALSE(is_weak_popov(zero_row, {0, 0}));
}

TEST(SkewLinalg, MatMulByHand) {
  auto f = f4();
  Rng rng(2);
  auto a = random_mat(f, rng, 3, 3, 4);
  EXPECT_EQ(mat_mul(a, SkewPolyMat::identity(f, 3)), a);
  EXPECT_EQ(mat_mul(SkewPolyMat::identity(f, 3), a), a);
  for (int it = 0; it < 20; ++it) {
    auto p = random_poly(f, rng, 5), q = random_poly(f, rng, 4);
    SkewPolyMat mp(f, RawMat{{p.coeffs()}}), mq(f, RawMat{{q.coeffs()}});
    EXPECT_EQ(mat_mul(mp, mq).at(0, 0), sp_mul(p, q));
  }
  EXPECT_THROW(mat_mul(random_mat(f, rng, 2, 3, 1), random_mat(f, rng, 2, 3, 1)), DimensionMismatch);
}

TEST(SkewLinalg, MatMulAssociative) {
  auto f = FieldCtx::create_default(2, 1, 5);
  Rng rng(8);
  for (int it = 0; it < 20; ++it) {
    auto a = random_mat(f, rng, 2, 3, 5), b = random_mat(f, rng, 3, 3, 5), c = random_mat(f, rng, 3, 2, 5);
    ASSERT_EQ(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)));
  }
}

TEST(SkewLinalg, VecModByHand) {
  auto f = f4();
  auto v = vec(f, {{0, 0, 1}, {0, 1}});
  EXPECT_TRUE(vec_mod_r(v, vec(f, {{1}, {1}})).is_zero());
  EXPECT_EQ(vec_mod_r(v, vec(f, {{kZ, 1}, {0, 1}})), vec(f, {{1}, {}}));
  EXPECT_EQ(vec_mod_r(v, vec(f, {{0, 0, 0, 1}, {0, 0, 1}})), v);
  EXPECT_THROW(vec_mod_r(v, vec(f, {{1}, {}})), ZeroModulus);
}

TEST(SkewLinalg, VecLclmByHand) {
  auto f = f4();
  auto a = vec(f, {{1, 1}, {kZ, 1}});
  auto b = vec(f, {{kZ, 1}, {1, 1}});
  EXPECT_EQ(vec_lclm(a, b), vec(f, {{1, 0, 1}, {1, 0, 1}}));
  auto v = vec(f, {{kZ, kZ1}, {1, 0, kZ}});
  auto mv = SkewPolyVec(std::vector<SkewPoly>{sp_monic(v[0]), sp_monic(v[1])});
  EXPECT_EQ(vec_lclm(v, v), mv);
  EXPECT_EQ(vec_lclm(v, vec(f, {{1}, {1}})), mv);
}

TEST(SkewLinalg, DegreeAtPivot) {
  auto f = FieldCtx::create_default(3, 1, 3);
  Rng rng(4);
  for (int it = 0; it < 200; ++it) {
    auto m = random_mat(f, rng, 1, 4, 6);
    WeightVec w(4);
    for (auto& e : w) e = static_cast<int>(rng.below(5));
    if (m[0].is_zero()) continue;
    int p = w_pivot(m[0], w);
    ASSERT_EQ(w_degree(m[0], w), m[0][p].degree() + w[p]);
  }
}

// A weak Popov matrix has no nonzero left combination sum u_i b_i = 0 with
// deg u_i < 3; checked by F_q-linear algebra over the coefficients of u.
TEST(SkewLinalg, WeakPopovRowsIndependent) {
  auto f = FieldCtx::create_default(2, 1, 2);
  Rng rng(6);
  int checked = 0;
  for (int it = 0; it < 200 && checked < 15; ++it) {
    auto m = random_mat(f, rng, 2, 2, 2);
    WeightVec w{0, 1};
    if (!is_weak_popov(m, w)) continue;
    ++checked;
    const int ub = 3;
    const std::size_t unk = 2 * ub * 2;
    int maxdeg = 0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) maxdeg = std::max(maxdeg, m.at(i, j).degree());
    const std::size_t outlen = 2 * (ub + maxdeg) * 2;
    FqMatrix a(outlen, unk);
    for (std::size_t i = 0; i < 2; ++i)
      for (int t = 0; t < ub; ++t)
        for (std::uint32_t u = 0; u < 2; ++u) {
          Coeffs mono(t + 1, 0);
          mono[t] = u == 0 ? 1 : kZ;
          for (std::size_t j = 0; j < 2; ++j) {
            auto prod = sp::mul(*f, mono, m.at(i, j).coeffs());
            for (std::size_t c = 0; c < prod.size(); ++c)
              for (std::uint32_t v = 0; v < 2; ++v)
                a.at((j * (ub + maxdeg) + c) * 2 + v, (i * ub + t) * 2 + u) = f->coord(prod[c], v);
          }
        }
    ASSERT_EQ(a.rank(f->fq()), unk);
  }
  EXPECT_GE(checked, 5);
}
