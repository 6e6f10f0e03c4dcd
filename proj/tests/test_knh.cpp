#include <gtest/gtest.h>

#include "skewknh/families.hpp"
#include "skewknh/knh.hpp"
#include "test_util.hpp"

using namespace skewknh;
using namespace skewknh::testing;

namespace {

OpMapFamily worked_family() { return OpMapFamily(f4(), PointSet{{1, kZ}}, {1}); }

FieldPtr with_derivation(std::uint32_t m) {
  FieldSpec s = FieldCtx::create_default(2, 1, m)->spec();
  s.der_coeff.assign(m, 0);
  s.der_coeff[0] = 1;
  s.der_coeff[m - 1] = 1;
  return FieldCtx::create(s);
}

int max_entry_degree(const SkewPolyMat& b) {
  int d = 0;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) d = std::max(d, b.at(i, j).degree());
  return d;
}

}  // namespace

TEST(Knh, WorkedExampleIterative) {
  auto maps = worked_family();
  auto f = maps.ctx();
  KnhStats st;
  auto b = knh_iterative(maps, {0, 0}, &st);
  EXPECT_EQ(b, SkewPolyMat(f, RawMat{{{1, 1}, {}}, {{kZ}, {1}}}));
  EXPECT_EQ(st.degrees, (std::vector<int>{1, 0}));
  EXPECT_TRUE(kernel_check(b, maps));
  EXPECT_TRUE(is_weak_popov(b, {0, 0}));
  EXPECT_EQ(knh_dac(maps, {0, 0}), b);
}

TEST(Knh, EmptyFamilyGivesIdentity) {
  OpMapFamily maps(f4(), PointSet{}, {}, 1);
  EXPECT_EQ(knh_iterative(maps, {0, 0}), SkewPolyMat::identity(f4(), 2));
  EXPECT_EQ(knh_dac(maps, {0, 0}), SkewPolyMat::identity(f4(), 2));
}

TEST(Knh, VanishingFamilyLeavesIdentity) {
  // all points zero: every functional kills every unit row
  OpMapFamily maps(f4(), PointSet{{0, 0}, {0, 0}, {0, 0}}, {1, kZ, 1});
  EXPECT_EQ(knh_iterative(maps, {0, 2}), SkewPolyMat::identity(f4(), 2));
}

TEST(Knh, InterpolatePointByHand) {
  auto maps = worked_family();
  auto f = maps.ctx();
  auto step = interpolate_point(maps, 0, raw::identity(2), {0, 0});
  EXPECT_EQ(SkewPolyMat(f, step.T), SkewPolyMat(f, RawMat{{{1, 1}, {}}, {{kZ}, {1}}}));
  EXPECT_EQ(step.d, (std::vector<int>{1, 0}));
  // once the basis already annihilates E_0 nothing changes
  auto again = interpolate_point(maps, 0, step.T, step.d);
  EXPECT_EQ(again.T, raw::identity(2));
  EXPECT_EQ(again.d, step.d);
  // a single nonzero discrepancy only touches the diagonal
  OpMapFamily one(f, PointSet{{0, kZ}}, {1});
  auto s1 = interpolate_point(one, 0, raw::identity(2), {0, 0});
  EXPECT_EQ(SkewPolyMat(f, s1.T), SkewPolyMat(f, RawMat{{{1}, {}}, {{}, {kZ, 1}}}));
}

TEST(Knh, TreeTwoPointsMatchesIterative) {
  auto f = f4();
  OpMapFamily maps(f, PointSet{{1, kZ}, {kZ, kZ1}}, {1, 1});
  const std::size_t saved = TreeTuning::leaf_points;
  TreeTuning::leaf_points = 1;
  EXPECT_EQ(knh_dac(maps, {0, 0}), knh_iterative(maps, {0, 0}));
  auto mins = precompute_min_vectors(maps, 0, 1);
  auto st = interpolate_tree(maps, 0, 0, raw::identity(2), {0, 0}, mins);
  auto pt = interpolate_point(maps, 0, raw::identity(2), {0, 0});
  EXPECT_EQ(st.T, pt.T);
  TreeTuning::leaf_points = saved;
}

TEST(Knh, PrecomputeByHand) {
  auto f = f4();
  OpMapFamily maps(f, PointSet{{kZ, 1}, {kZ1, 0}}, {1, 1});
  auto mins = precompute_min_vectors(maps, 0, 1);
  std::vector<Elem> pts{kZ, kZ1}, ones{1, 1};
  auto expect = minpoly_op(f, pts, ones);
  EXPECT_EQ(expect.degree(), 2);
  EXPECT_EQ(mins.vec(0, 1)[0], expect);
  EXPECT_EQ(mins.vec(0, 1)[1], SkewPoly::linear(f, 1));
  EXPECT_EQ(mins.vec(1, 1)[1], SkewPoly::constant(f, 1));
  auto single = precompute_min_vectors(maps, 1, 1);
  EXPECT_EQ(single.vec(1, 1), maps.min_vector(1, 1));
}

TEST(Knh, PrecomputeRootVanishes) {
  auto f = FieldCtx::create_default(2, 1, 6);
  Rng rng(21);
  for (int it = 0; it < 10; ++it) {
    auto maps = random_op_family(f, rng, 20 + rng.below(30), 2);
    auto mins = precompute_min_vectors(maps, 0, maps.n() - 1);
    auto root = mins.vec(0, maps.n() - 1);
    for (std::size_t i = 0; i < maps.n(); ++i)
      for (std::size_t j = 0; j < 3; ++j) ASSERT_EQ(op_eval(root[j], maps.points()[i][j], maps.params()[i]), 0u);
    ASSERT_EQ(root, maps.min_vector(0, maps.n() - 1));
  }
}

TEST(Knh, BatchEvalMatchesSingle) {
  std::vector<FieldPtr> fields{FieldCtx::create_default(2, 1, 8), FieldCtx::create_default(3, 1, 4),
                               with_derivation(5)};
  for (const auto& f : fields) {
    Rng rng(f->m());
    OpMapFamily op = random_op_family(f, rng, 10, 2);
    RemMapFamily rem = random_rem_family(f, rng, 10, 2);
    for (int it = 0; it < 20; ++it) {
      RawMat rows(3, RawRow(3));
      for (auto& r : rows)
        for (auto& e : r) e = random_poly(f, rng, static_cast<int>(rng.below(12)) - 1).coeffs();
      for (std::size_t i = 0; i < 10; ++i) {
        std::vector<Elem> a, b;
        op.eval_rows(i, rows, a);
        rem.eval_rows(i, rows, b);
        for (std::size_t r = 0; r < 3; ++r) {
          ASSERT_EQ(a[r], op.eval(i, rows[r]));
          ASSERT_EQ(b[r], rem.eval(i, rows[r]));
          // product-rule shortcut against direct evaluation of x Q
          ASSERT_EQ(op.eval_shifted(i, rows[r], a[r]), op.EvalMapFamily::eval_shifted(i, rows[r], a[r]));
          ASSERT_EQ(rem.eval_shifted(i, rows[r], b[r]), rem.EvalMapFamily::eval_shifted(i, rows[r], b[r]));
        }
      }
    }
  }
}

TEST(Knh, FunctionalsAreLinear) {
  auto f = FieldCtx::create_default(3, 1, 3);
  Rng rng(31);
  auto op = random_op_family(f, rng, 6, 2);
  auto rem = random_rem_family(f, rng, 6, 2);
  for (int it = 0; it < 50; ++it) {
    RawRow p(3), q(3), comb(3);
    Elem al = f->random(rng), be = f->random(rng);
    for (std::size_t j = 0; j < 3; ++j) {
      p[j] = random_poly(f, rng, 5).coeffs();
      q[j] = random_poly(f, rng, 5).coeffs();
      comb[j] = sp::add(*f, sp::scale_left(*f, al, p[j]), sp::scale_left(*f, be, q[j]));
    }
    for (std::size_t i = 0; i < 6; ++i) {
      ASSERT_EQ(op.eval(i, comb), f->add(f->mul(al, op.eval(i, p)), f->mul(be, op.eval(i, q))));
      ASSERT_EQ(rem.eval(i, comb), f->add(f->mul(al, rem.eval(i, p)), f->mul(be, rem.eval(i, q))));
    }
  }
}

TEST(Knh, RemainderFamilyZeroEntries) {
  auto f = FieldCtx::create_default(2, 1, 4);
  Rng rng(3);
  RemMapFamily maps(f, PointSet{{kZ, 0, 0}});
  for (int it = 0; it < 20; ++it) {
    RawRow q{random_poly(f, rng, 4).coeffs(), random_poly(f, rng, 4).coeffs(), random_poly(f, rng, 4).coeffs()};
    ASSERT_EQ(maps.eval(0, q), sp::rem_eval(*f, q[0], kZ));
  }
  RemMapFamily two(f, PointSet{{kZ, 1}, {kZ1, 1}});
  std::vector<Elem> col0{kZ, kZ1};
  RawRow q{minpoly_rem(f, col0).coeffs(), {}};
  EXPECT_EQ(two.eval(0, q), 0u);
  EXPECT_EQ(two.eval(1, q), 0u);
}

// Reduction modulo each tree node keeps the evaluations of that range, both families.
TEST(Knh, MinimalVectorsPreserveEvaluations) {
  std::vector<FieldPtr> fields{FieldCtx::create_default(2, 1, 4), FieldCtx::create_default(3, 1, 3),
                               with_derivation(4)};
  for (const auto& f : fields) {
    Rng rng(f->m() * 9 + f->p());
    for (int fam = 0; fam < 2; ++fam) {
      std::unique_ptr<EvalMapFamily> maps;
      if (fam == 0)
        maps = std::make_unique<OpMapFamily>(random_op_family(f, rng, 13, 2));
      else
        maps = std::make_unique<RemMapFamily>(random_rem_family(f, rng, 13, 2));
      auto mins = precompute_min_vectors(*maps, 0, 12);
      std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 12}};
      while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        ASSERT_TRUE(mins.has(lo, hi));
        auto mv = mins.vec(lo, hi);
        for (int it = 0; it < 5; ++it) {
          std::vector<SkewPoly> qe;
          for (int j = 0; j < 3; ++j) qe.push_back(random_poly(f, rng, static_cast<int>(rng.below(25))));
          SkewPolyVec q(qe);
          auto red = vec_mod_r(q, mv);
          for (std::size_t l = lo; l <= hi; ++l) ASSERT_EQ(maps->eval(l, q), maps->eval(l, red));
        }
        if (lo < hi) {
          std::size_t mid = (lo + hi) / 2;
          stack.push_back({lo, mid});
          stack.push_back({mid + 1, hi});
        }
      }
    }
  }
}

TEST(Knh, DacEqualsIterativeRandomized) {
  std::vector<FieldPtr> fields{FieldCtx::create_default(2, 1, 4), FieldCtx::create_default(2, 1, 8),
                               FieldCtx::create_default(5, 1, 3), with_derivation(5)};
  for (const auto& f : fields) {
    Rng rng(f->m() * 3 + f->p());
    for (int it = 0; it < 12; ++it) {
      std::size_t n = 1 + rng.below(64), s = 1 + rng.below(3);
      int k = 1 + static_cast<int>(rng.below(5));
      auto w = decoding_weights(s, k);
      for (int fam = 0; fam < 2; ++fam) {
        std::unique_ptr<EvalMapFamily> maps;
        if (fam == 0)
          maps = std::make_unique<OpMapFamily>(random_op_family(f, rng, n, s));
        else
          maps = std::make_unique<RemMapFamily>(random_rem_family(f, rng, n, s));
        KnhStats si, sd;
        auto bi = knh_iterative(*maps, w, &si);
        auto bd = knh_dac(*maps, w, &sd);
        ASSERT_EQ(bi, bd);
        ASSERT_EQ(knh_dac(*maps, w, nullptr, MulStrategy::schoolbook), bi);
        ASSERT_EQ(si.degrees, sd.degrees);
        ASSERT_EQ(si.updates, sd.updates);
        ASSERT_TRUE(kernel_check(bi, *maps));
        ASSERT_TRUE(is_weak_popov(bi, w));
        int total = 0;
        for (std::size_t j = 0; j <= s; ++j) {
          ASSERT_EQ(si.degrees[j], w_degree(bi[j], w));
          total += si.degrees[j] - w[j];
        }
        ASSERT_EQ(static_cast<std::size_t>(total), si.updates);
      }
    }
  }
}

// Long enough for the fast division and Karatsuba paths inside the tree.
TEST(Knh, DacEqualsIterativeLarge) {
  const std::size_t kt = PolyTuning::karatsuba_threshold, dt = PolyTuning::div_threshold;
  const std::size_t ls = MinpolyTree::leaf_size;
  for (auto f : {FieldCtx::create_default(65537, 1, 2), FieldCtx::create_default(2, 1, 16)}) {
    Rng rng(f->p());
    auto maps = random_op_family(f, rng, 300, 2);
    auto rmaps = random_rem_family(f, rng, 300, 2);
    auto w = decoding_weights(2, 40);
    auto bi = knh_iterative(maps, w), ri = knh_iterative(rmaps, w);
    for (std::size_t th : {8, 128}) {
      PolyTuning::karatsuba_threshold = PolyTuning::div_threshold = th;
      MinpolyTree::leaf_size = th == 8 ? 1 : 4;
      EXPECT_EQ(knh_dac(maps, w, nullptr, MulStrategy::karatsuba), bi);
      EXPECT_EQ(knh_dac(rmaps, w, nullptr, MulStrategy::karatsuba), ri);
    }
  }
  PolyTuning::karatsuba_threshold = kt;
  PolyTuning::div_threshold = dt;
  MinpolyTree::leaf_size = ls;
}

TEST(Knh, TreeOnSubrangeMatchesPointFold) {
  auto f = FieldCtx::create_default(2, 1, 6);
  Rng rng(5);
  auto maps = random_rem_family(f, rng, 40, 2);
  auto mins = precompute_min_vectors(maps, 0, 39);
  RawMat b = raw::identity(3);
  std::vector<int> d{0, 3, 3};
  // first half by single-point steps
  for (std::size_t i = 0; i <= 19; ++i) {
    auto st = interpolate_point(maps, i, b, d);
    b = raw::mat_mul(*f, st.T, b);
    d = st.d;
  }
  auto tail = interpolate_tree(maps, 20, 39, b, d, mins);
  RawMat via_tree = raw::mat_mul(*f, tail.T, b);
  for (std::size_t i = 20; i <= 39; ++i) {
    auto st = interpolate_point(maps, i, b, d);
    b = raw::mat_mul(*f, st.T, b);
    d = st.d;
  }
  EXPECT_EQ(via_tree, b);
  EXPECT_EQ(tail.d, d);
  EXPECT_EQ(SkewPolyMat(f, b), knh_iterative(maps, {0, 3, 3}));
}

TEST(Knh, KernelContainmentWorkedExample) {
  auto maps = worked_family();
  auto b = knh_iterative(maps, {0, 0});
  EXPECT_TRUE(basis_contains_kernel_check(b, maps, {0, 0}, 2));
  EXPECT_FALSE(basis_contains_kernel_check(SkewPolyMat::identity(maps.ctx(), 2), maps, {0, 0}, 2));
  auto big = FieldCtx::create_default(2, 1, 16);
  OpMapFamily large(big, PointSet{{1, 1, 1, 1}}, {1});
  EXPECT_THROW(basis_contains_kernel_check(SkewPolyMat::identity(big, 4), large, {0, 0, 0, 0}, 300),
               InstanceTooLarge);
}

TEST(Knh, MinimalityAgainstBruteForce) {
  Rng rng(77);
  int done = 0;
  for (int it = 0; it < 40; ++it) {
    auto f = FieldCtx::create_default(2, 1, 2 + static_cast<std::uint32_t>(rng.below(3)));
    std::size_t s = 1 + rng.below(2), n = 1 + rng.below(6);
    int k = 1 + static_cast<int>(rng.below(3));
    auto w = decoding_weights(s, k);
    std::unique_ptr<EvalMapFamily> maps;
    if (rng.below(2) == 0)
      maps = std::make_unique<OpMapFamily>(random_op_family(f, rng, n, s));
    else
      maps = std::make_unique<RemMapFamily>(random_rem_family(f, rng, n, s));
    KnhStats st;
    auto b = knh_iterative(*maps, w, &st);
    int bound = max_entry_degree(b) + 2;
    ASSERT_TRUE(basis_contains_kernel_check(b, *maps, w, bound));
    auto best = brute_force_min_degrees(*maps, w, bound);
    for (std::size_t r = 0; r <= s; ++r) {
      int p = w_pivot(b[r], w);
      ASSERT_EQ(p, static_cast<int>(r));
      ASSERT_EQ(best[p], st.degrees[r]);
    }
    ++done;
  }
  EXPECT_EQ(done, 40);
}

TEST(Knh, PivotsInvariantUnderWeightScaling) {
  auto f = FieldCtx::create_default(2, 1, 6);
  Rng rng(12);
  for (int it = 0; it < 10; ++it) {
    auto maps = random_op_family(f, rng, 20, 2);
    WeightVec w{0, 3, 3};
    auto b = knh_iterative(maps, w);
    for (int c = 2; c <= 4; ++c) {
      WeightVec wc{0, 3 * c, 3 * c};
      for (std::size_t r = 0; r < 3; ++r) {
        SkewPolyVec scaled(std::vector<SkewPoly>{b[r][0], b[r][1], b[r][2]});
        // scaling w and every entry degree by c keeps the argmax
        int best = kDegNegInf, piv = -1;
        for (std::size_t j = 0; j < 3; ++j) {
          if (scaled[j].is_zero()) continue;
          int v = c * scaled[j].degree() + wc[j];
          if (v >= best) best = v, piv = static_cast<int>(j);
        }
        ASSERT_EQ(piv, w_pivot(b[r], w));
      }
    }
  }
}
