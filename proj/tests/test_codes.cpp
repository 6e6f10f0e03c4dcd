#include <gtest/gtest.h>

#include <functional>

#include "skewknh/codes.hpp"
#include "skewknh/io.hpp"
#include "test_util.hpp"

namespace skewknh {
namespace {

using testing::kZ;
using testing::kZ1;

CodeParams params(CodeKind kind, std::uint32_t p, std::uint32_t m, std::size_t n, std::size_t k, std::size_t s,
                  std::vector<std::size_t> blocks = {}, std::uint64_t seed = 1) {
  CodeParams c;
  c.kind = kind;
  c.p = p;
  c.m = m;
  c.n = n;
  c.k = k;
  c.s = s;
  c.blocks = std::move(blocks);
  c.seed = seed;
  return c;
}

std::vector<CodeSpec> small_codes(std::size_t s) {
  return {make_code(params(CodeKind::gabidulin, 2, 8, 8, 3, s)),
          make_code(params(CodeKind::ilrs, 3, 3, 6, 2, s, {3, 3})),
          make_code(params(CodeKind::isrs, 2, 8, 8, 3, s))};
}

TEST(Codes, DegreeBoundAndRadius) {
  EXPECT_EQ(interp_degree_bound(16, 4, 2), 8u);
  EXPECT_EQ(interp_degree_bound(1, 1, 1), 1u);
  EXPECT_EQ(interp_degree_bound(8, 4, 1), 6u);
  EXPECT_EQ(decoding_radius(16, 4, 2), 8u);
  EXPECT_EQ(decoding_radius(5, 5, 3), 0u);
  for (std::size_t n = 1; n <= 20; ++n)
    for (std::size_t k = 1; k <= n; ++k) EXPECT_EQ(decoding_radius(n, k, 1), (n - k) / 2);
}

TEST(Codes, GabidulinF4Example) {
  CodeParams p = params(CodeKind::gabidulin, 2, 2, 2, 1, 1);
  p.beta = {1, kZ};
  CodeSpec c = make_code(p);
  EXPECT_EQ(encode(c, Message{{{1}}}), (CodewordMatrix{{1, kZ}}));
  for (Elem v : {kZ, kZ1}) {
    const FieldCtx& f = *c.field;
    EXPECT_EQ(encode(c, Message{{{v}}}), (CodewordMatrix{{v, f.mul(v, kZ)}}));
  }
  EXPECT_EQ(encode(c, Message{{{}}}), (CodewordMatrix{{0, 0}}));
  EXPECT_THROW(encode(c, Message{{{0, 1}}}), DegreeTooHigh);
}

TEST(Codes, IsrsVanishesAtRoot) {
  CodeSpec c = make_code(params(CodeKind::isrs, 2, 6, 5, 2, 1));
  const FieldCtx& f = *c.field;
  auto cw = encode(c, Message{{{f.neg(c.b[0]), 1}}});
  EXPECT_EQ(cw[0][0], 0u);
  for (std::size_t i = 1; i < c.n; ++i) EXPECT_NE(cw[0][i], 0u);
}

TEST(Codes, EncoderLinearity) {
  Rng rng(3);
  for (const auto& c : small_codes(2)) {
    const FieldCtx& f = *c.field;
    for (int it = 0; it < 20; ++it) {
      Message m1 = random_message(c, rng), m2 = random_message(c, rng);
      const Elem lam = f.random(rng);
      const std::uint32_t mu = static_cast<std::uint32_t>(rng.below(f.q()));
      Message sum, scaled, fq_scaled;
      for (std::size_t j = 0; j < c.s; ++j) {
        sum.polys.push_back(sp::add(f, m1.polys[j], m2.polys[j]));
        scaled.polys.push_back(sp::scale_left(f, lam, m1.polys[j]));
        fq_scaled.polys.push_back(sp::scale_left(f, f.embed(mu), m1.polys[j]));
      }
      auto c1 = encode(c, m1), c2 = encode(c, m2), cs = encode(c, sum);
      auto cl = encode(c, scaled), cq = encode(c, fq_scaled);
      for (std::size_t j = 0; j < c.s; ++j)
        for (std::size_t i = 0; i < c.n; ++i) {
          ASSERT_EQ(cs[j][i], f.add(c1[j][i], c2[j][i]));
          ASSERT_EQ(cq[j][i], f.scale(mu, c1[j][i]));
          if (c.kind != CodeKind::isrs) ASSERT_EQ(cl[j][i], f.mul(lam, c1[j][i]));
        }
    }
  }
}

TEST(Codes, WeightExamples) {
  FieldPtr f4 = testing::f4();
  EXPECT_EQ(rank_weight(*f4, CodewordMatrix{{1, kZ, kZ1}}, 0, 3), 2u);
  EXPECT_EQ(sum_rank_weight(*f4, CodewordMatrix{{0, 0, 0, 0}}, {2, 2}), 0u);
  EXPECT_EQ(sum_rank_weight(*f4, CodewordMatrix{{1, kZ, 1, kZ1}}, {2, 2}), 4u);
  EXPECT_EQ(sum_rank_weight(*f4, CodewordMatrix{{1, kZ, 1, 1}}, {2, 2}), 3u);
  EXPECT_EQ(hamming_weight(CodewordMatrix{{1, 0, 0}, {0, 0, 2}}), 2u);
}

TEST(Codes, WeightsBoundedByHamming) {
  Rng rng(5);
  for (std::size_t s : {1, 2, 3})
    for (const auto& c : small_codes(s)) {
      const FieldCtx& f = *c.field;
      for (int it = 0; it < 100; ++it) {
        CodewordMatrix x(c.s, std::vector<Elem>(c.n, 0));
        for (auto& row : x)
          for (auto& e : row)
            if (rng.below(3) == 0) e = f.random(rng);
        const std::size_t wh = hamming_weight(x);
        const std::size_t w = weight(c, x);
        EXPECT_LE(w, wh);
        if (c.kind != CodeKind::isrs) EXPECT_LE(rank_weight(f, x, 0, c.n), w);
        EXPECT_EQ(w == 0, wh == 0);
      }
    }
}

// For s = 1 the conjugator rank must equal the lclm degree.
TEST(Codes, SkewWeightRoutesAgree) {
  Rng rng(11);
  for (auto [p, m] : {std::pair{2u, 6u}, {3u, 4u}, {5u, 3u}}) {
    CodeParams cp = params(CodeKind::isrs, p, m, m, 1, 1);
    FieldPtr f = FieldCtx::create_default(p, 1, m);
    for (int rep = 0; rep < 5; ++rep) {
      cp.a = f->random_nonzero(rng);
      cp.seed = rep;
      CodeSpec c = make_code(cp);
      for (int it = 0; it < 50; ++it) {
        std::vector<Elem> x(c.n, 0);
        for (auto& e : x)
          if (rng.below(2)) e = f->random(rng);
        ASSERT_EQ(skew_weight_lclm(c, x), skew_weight_rank(c, CodewordMatrix{x}));
      }
    }
  }
}

// Minimum distance n - k + 1 by enumerating every nonzero message.
void check_min_distance(const CodeSpec& c) {
  const FieldCtx& f = *c.field;
  const std::uint64_t total = [&] {
    std::uint64_t t = 1;
    for (std::size_t i = 0; i < c.k; ++i) t *= f.size();
    return t;
  }();
  std::size_t best = c.n + 1;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    Coeffs poly(c.k);
    std::uint64_t v = idx;
    for (auto& e : poly) {
      e = f.element_at(v % f.size());
      v /= f.size();
    }
    sp::trim(poly);
    best = std::min(best, weight(c, encode(c, Message{{poly}})));
  }
  EXPECT_EQ(best, c.n - c.k + 1) << to_string(c.kind);
}

TEST(Codes, MrdExhaustive) { check_min_distance(make_code(params(CodeKind::gabidulin, 2, 4, 4, 2, 1))); }
TEST(Codes, MsrdExhaustive) { check_min_distance(make_code(params(CodeKind::ilrs, 3, 2, 4, 2, 1, {2, 2}))); }
TEST(Codes, MsdExhaustive) { check_min_distance(make_code(params(CodeKind::isrs, 2, 4, 4, 2, 1))); }

TEST(Codes, ConstructorChecks) {
  EXPECT_THROW(make_code(params(CodeKind::gabidulin, 2, 8, 9, 2, 1)), InvalidCode);
  EXPECT_THROW(make_code(params(CodeKind::gabidulin, 2, 8, 4, 5, 1)), InvalidCode);
  EXPECT_THROW(make_code(params(CodeKind::ilrs, 2, 6, 12, 3, 2, {6, 6})), InvalidCode);
  EXPECT_THROW(make_code(params(CodeKind::ilrs, 3, 6, 12, 3, 2, {6, 5})), InvalidCode);
  EXPECT_THROW(make_code(params(CodeKind::ilrs, 3, 6, 21, 3, 2, {7, 7, 7})), InvalidCode);
  EXPECT_THROW(make_code(params(CodeKind::isrs, 2, 6, 7, 2, 1)), InvalidCode);
  CodeParams dup = params(CodeKind::ilrs, 3, 2, 4, 2, 1, {2, 2});
  FieldPtr f9 = FieldCtx::create_default(3, 1, 2);
  dup.xi = {1, f9->conj(1, kZ)};  // same class
  EXPECT_THROW(make_code(dup), InvalidCode);
}

TEST(Codes, GeneratedPointsIndependent) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CodeSpec ilrs = make_code(params(CodeKind::ilrs, 3, 6, 12, 3, 2, {6, 6}, seed));
    ASSERT_EQ(minpoly_op(ilrs.field, ilrs.beta, ilrs.params).degree(), 12);
    ASSERT_NE(norm(*ilrs.field, ilrs.xi[0]), norm(*ilrs.field, ilrs.xi[1]));
    CodeSpec isrs = make_code(params(CodeKind::isrs, 2, 12, 12, 3, 2, {}, seed));
    ASSERT_EQ(minpoly_rem(isrs.field, isrs.b).degree(), 12);
  }
}

TEST(Codes, ChannelWeights) {
  Rng rng(17);
  for (std::size_t s : {1, 2})
    for (const auto& c : small_codes(s)) {
      Message msg = random_message(c, rng);
      auto cw = encode(c, msg);
      EXPECT_EQ(channel(c, cw, 0, rng).received, cw);
      for (std::size_t t = 1; t <= c.n && t <= 5; ++t) {
        auto out = channel(c, cw, t, rng);
        EXPECT_EQ(out.t, t);
        EXPECT_EQ(weight(c, out.error), t);
        EXPECT_EQ(mat_sub(*c.field, out.received, cw), out.error);
      }
      EXPECT_THROW(channel(c, cw, c.n + 1, rng), WeightInfeasible);
    }
}

TEST(Codes, SingleErrorHasSkewWeightOne) {
  Rng rng(19);
  CodeSpec c = make_code(params(CodeKind::isrs, 2, 8, 8, 3, 1));
  for (std::size_t i = 0; i < c.n; ++i) {
    std::vector<Elem> x(c.n, 0);
    x[i] = c.field->random_nonzero(rng);
    EXPECT_EQ(skew_weight_lclm(c, x), 1u);
  }
}

// The range tree used by the fast interpolation, (a + b) / 2 splits.
void for_each_range(std::size_t lo, std::size_t hi, const std::function<void(std::size_t, std::size_t)>& fn) {
  fn(lo, hi);
  if (lo == hi) return;
  const std::size_t mid = (lo + hi) / 2;
  for_each_range(lo, mid, fn);
  for_each_range(mid + 1, hi, fn);
}

TEST(Codes, MapFamiliesReduceModuloMinimalVectors) {
  Rng rng(23);
  for (const auto& c : small_codes(2)) {
    const FieldPtr& f = c.field;
    auto cw = encode(c, random_message(c, rng));
    auto r = channel(c, cw, 2, rng).received;
    r[1][0] = 0;  // exercise the zero-point convention
    auto maps = make_map_family(c, r);
    EXPECT_EQ(maps->eval(0, SkewPolyVec::zero(f, c.s + 1)), 0u);
    MinVectorTree tree = precompute_min_vectors(*maps, 0, c.n - 1);
    for_each_range(0, c.n - 1, [&](std::size_t i, std::size_t j) {
      ASSERT_TRUE(tree.has(i, j));
      SkewPolyVec mv = tree.vec(i, j);
      ASSERT_EQ(mv, maps->min_vector(i, j));
      for (int it = 0; it < 5; ++it) {
        std::vector<SkewPoly> q;
        for (std::size_t col = 0; col <= c.s; ++col) q.push_back(testing::random_poly(f, rng, 2 * c.n));
        SkewPolyVec Q(q), R = vec_mod_r(Q, mv);
        for (std::size_t l = i; l <= j; ++l) ASSERT_EQ(maps->eval(l, Q), maps->eval(l, R));
      }
      for (std::size_t col = 0; col <= c.s; ++col) {
        std::vector<SkewPoly> q(c.s + 1, SkewPoly(f));
        q[col] = mv[col];
        for (std::size_t l = i; l <= j; ++l) ASSERT_EQ(maps->eval(l, SkewPolyVec(q)), 0u);
      }
    });
  }
}

TEST(Codes, OperatorMinimalVectorColumns) {
  Rng rng(29);
  CodeSpec c = make_code(params(CodeKind::ilrs, 3, 3, 6, 2, 2, {3, 3}));
  auto r = encode(c, random_message(c, rng));
  auto maps = make_op_map_family(c, r);
  for (std::size_t i = 0; i < c.n; ++i)
    for (std::size_t j = i; j < c.n; ++j) {
      SkewPolyVec mv = maps->min_vector(i, j);
      for (std::size_t col = 0; col <= c.s; ++col) {
        std::vector<Elem> pts, as;
        for (std::size_t l = i; l <= j; ++l) {
          pts.push_back(col == 0 ? c.beta[l] : r[col - 1][l]);
          as.push_back(c.params[l]);
        }
        ASSERT_EQ(mv[col], minpoly_op(c.field, pts, as));
      }
    }
}

TEST(Codes, RemainderMapZeroEntries) {
  Rng rng(31);
  CodeSpec c = make_code(params(CodeKind::isrs, 2, 8, 6, 2, 2));
  CodewordMatrix r(2, std::vector<Elem>(c.n, 0));
  for (std::size_t i = 1; i < c.n; ++i) r[0][i] = r[1][i] = c.field->random_nonzero(rng);
  auto maps = make_rem_map_family(c, r);
  std::vector<SkewPoly> q;
  for (int col = 0; col < 3; ++col) q.push_back(testing::random_poly(c.field, rng, 5));
  EXPECT_EQ(maps->eval(0, SkewPolyVec(q).raw()), rem_eval(q[0], c.b[0]));
}

// E_i(x Q) = sigma(E_i(Q)) a_i for the operator maps, sigma(E_i(Q)) p_{i,0} for remainder maps.
TEST(Codes, ShiftedEvaluationProductRule) {
  Rng rng(37);
  for (const auto& c : small_codes(2)) {
    const FieldCtx& f = *c.field;
    auto r = channel(c, encode(c, random_message(c, rng)), 2, rng).received;
    auto maps = make_map_family(c, r);
    for (int it = 0; it < 20; ++it) {
      RawRow q, xq;
      for (std::size_t col = 0; col <= c.s; ++col) {
        q.push_back(testing::random_poly(c.field, rng, 6).coeffs());
        xq.push_back(sp::mul(f, Coeffs{0, 1}, q.back()));
      }
      for (std::size_t i = 0; i < c.n; ++i) {
        const Elem e = maps->eval(i, q);
        ASSERT_EQ(maps->eval_shifted(i, q, e), maps->eval(i, xq));
        const Elem p0 = c.kind == CodeKind::isrs ? c.b[i] : c.params[i];
        ASSERT_EQ(maps->eval(i, xq), f.mul(f.aut(e, 1), p0));
      }
    }
  }
}

TEST(Codes, RootFindInconsistentRow) {
  CodeSpec c = make_code(params(CodeKind::gabidulin, 2, 8, 8, 2, 1));
  SkewPolyMat b(std::vector<SkewPolyVec>{SkewPolyVec({SkewPoly::constant(c.field, 1), SkewPoly(c.field)})});
  auto rf = root_find(c, b, CodewordMatrix{std::vector<Elem>(8, 0)});
  EXPECT_EQ(rf.rows_used, 1u);
  EXPECT_TRUE(rf.messages.empty());
}

TEST(Codes, ZeroErrorDecodes) {
  Rng rng(41);
  for (std::size_t s : {1, 2, 3})
    for (const auto& c : small_codes(s)) {
      Message msg = random_message(c, rng);
      auto cw = encode(c, msg);
      for (Algo a : {Algo::iter, Algo::dac}) {
        auto rep = decode(c, cw, a);
        ASSERT_TRUE(rep.success);
        EXPECT_EQ(*rep.message, msg);
      }
    }
}

TEST(Codes, UniqueRegimeAlwaysDecodes) {
  CodeSpec c = make_code(params(CodeKind::gabidulin, 2, 8, 8, 2, 1));
  for (std::uint64_t trial = 0; trial < 100; ++trial) ASSERT_TRUE(run_trial(c, 3, 5, trial, Algo::dac).success);
  for (const auto& sc : small_codes(1)) {
    const std::size_t t = (sc.n - sc.k) / 2;
    for (std::uint64_t trial = 0; trial < 50; ++trial) ASSERT_TRUE(run_trial(sc, t, 6, trial, Algo::iter).success);
  }
}

TEST(Codes, EnginesGiveIdenticalReportsAndValidBases) {
  Rng rng(43);
  for (const auto& c : small_codes(2)) {
    const std::size_t t = decoding_radius(c.n, c.k, c.s);
    for (int it = 0; it < 10; ++it) {
      auto r = channel(c, encode(c, random_message(c, rng)), t, rng).received;
      auto ri = decode(c, r, Algo::iter), rd = decode(c, r, Algo::dac);
      EXPECT_EQ(ri.success, rd.success);
      EXPECT_EQ(ri.message, rd.message);
      EXPECT_EQ(ri.interp_degrees, rd.interp_degrees);
      EXPECT_EQ(ri.list_size_bound, rd.list_size_bound);

      auto maps = make_map_family(c, r);
      const WeightVec w = decoding_weight_vec(c.s, c.k);
      KnhStats st;
      SkewPolyMat basis = knh_dac(*maps, w, &st);
      EXPECT_TRUE(kernel_check(basis, *maps));
      EXPECT_TRUE(is_weak_popov(basis, w));
      int sum = 0, wsum = 0;
      for (int d : st.degrees) sum += d;
      for (int x : w) wsum += x;
      EXPECT_LE(sum, static_cast<int>(c.n) + wsum);
    }
  }
}

TEST(Codes, BeyondUniqueRadiusMostlyDecodes) {
  const std::vector<std::pair<CodeParams, std::size_t>> cases = {
      {params(CodeKind::gabidulin, 2, 16, 16, 4, 2), 8},
      {params(CodeKind::ilrs, 3, 6, 12, 3, 2, {6, 6}), 6},
      {params(CodeKind::isrs, 2, 12, 12, 3, 2), 6},
  };
  for (const auto& [p, t] : cases) {
    CodeSpec c = make_code(p);
    ASSERT_EQ(t, decoding_radius(c.n, c.k, c.s));
    int ok = 0;
    for (std::uint64_t trial = 0; trial < 40; ++trial) ok += run_trial(c, t, 9, trial, Algo::dac).success;
    EXPECT_GE(ok, 36) << to_string(c.kind);
  }
}

TEST(Io, PolyTextRoundTrip) {
  FieldPtr f4 = testing::f4();
  EXPECT_EQ(poly_from_text(*f4, "[[1,0],[0,1]]"), (Coeffs{1, kZ}));
  EXPECT_EQ(poly_to_text(*f4, Coeffs{1, kZ}), "[[1,0],[0,1]]");
  EXPECT_EQ(poly_to_text(*f4, Coeffs{}), "[]");
  EXPECT_THROW(poly_from_text(*f4, "[[2,0]]"), ParseError);
  EXPECT_THROW(poly_from_text(*f4, "[[1]"), ParseError);
  Rng rng(47);
  for (auto f : {FieldCtx::create_default(3, 2, 3), FieldCtx::create_default(7, 1, 4)})
    for (int it = 0; it < 50; ++it) {
      Coeffs a = testing::random_poly(f, rng, static_cast<int>(rng.below(6))).coeffs();
      EXPECT_EQ(poly_from_text(*f, poly_to_text(*f, a)), a);
    }
}

TEST(Io, CodeParamsJson) {
  CodeParams p = code_params_from_json(R"({"kind":"ilrs","p":2,"r":1,"m":6,"n":12,"k":3,"s":2,"blocks":[6,6],"seed":42})");
  EXPECT_EQ(p.kind, CodeKind::ilrs);
  EXPECT_EQ(p.blocks, (std::vector<std::size_t>{6, 6}));
  EXPECT_EQ(p.seed, 42u);
  EXPECT_THROW(make_code(p), InvalidCode);  // F_2 has a single nonzero class
  p.p = 3;
  CodeSpec c = make_code(p);
  CodeParams q = p;
  q.beta = c.beta;
  q.xi = c.xi;
  CodeParams back = code_params_from_json(code_params_to_json(q));
  EXPECT_EQ(back.beta, c.beta);
  EXPECT_EQ(back.xi, c.xi);
  EXPECT_EQ(make_code(back).params, c.params);
  EXPECT_THROW(code_params_from_json("{\"kind\":\"bch\"}"), InvalidCode);
  EXPECT_THROW(code_params_from_json("{\"n\":\"x\"}"), ParseError);
}

TEST(Io, FieldSpecJson) {
  FieldSpec s = field_spec_from_json(R"({"p":2,"r":1,"m":3,"modulus":[1,1,0,1],"aut_exp":1,"der_coeff":[0,0,0]})");
  FieldPtr f = FieldCtx::create(s);
  EXPECT_EQ(f->m(), 3u);
  EXPECT_FALSE(f->has_derivation());
  EXPECT_EQ(field_spec_from_json(field_spec_to_json(s)).modulus, s.modulus);
}

}  // namespace
}  // namespace skewknh
