#include "skewknh/selftest.hpp"

#include "skewknh/bench.hpp"
#include "skewknh/codes.hpp"

namespace skewknh {

namespace {

FieldPtr with_derivation(std::uint32_t p, std::uint32_t m) {
  FieldSpec s = FieldCtx::create_default(p, 1, m)->spec();
  s.der_coeff.assign(m, 0);
  s.der_coeff[0] = 1;
  s.der_coeff[1 % m] = 1;
  return FieldCtx::create(s);
}

Coeffs random_coeffs(const FieldCtx& f, Rng& rng, std::size_t deg) {
  Coeffs c(deg + 1);
  for (auto& e : c) e = f.random(rng);
  c.back() = f.random_nonzero(rng);
  return c;
}

bool field_axioms(const FieldCtx& f) {
  Rng rng(f.size());
  for (int it = 0; it < 200; ++it) {
    const Elem a = f.random(rng), b = f.random(rng), c = f.random(rng);
    if (f.mul(f.add(a, b), c) != f.add(f.mul(a, c), f.mul(b, c))) return false;
    if (f.sub(f.add(a, b), b) != a) return false;
    if (a != 0 && f.mul(a, f.inv(a)) != 1) return false;
    if (f.aut(f.mul(a, b)) != f.mul(f.aut(a), f.aut(b))) return false;
    if (f.aut(f.add(a, b)) != f.add(f.aut(a), f.aut(b))) return false;
    if (f.der(f.mul(a, b)) != f.add(f.mul(f.der(a), b), f.mul(f.aut(a), f.der(b)))) return false;
  }
  return true;
}

bool division(const FieldCtx& f) {
  Rng rng(7);
  for (int it = 0; it < 50; ++it) {
    Coeffs a = random_coeffs(f, rng, rng.below(20)), g = random_coeffs(f, rng, rng.below(8));
    Coeffs q, r;
    sp::divrem_right(f, a, g, &q, &r);
    if (sp::degree(r) >= sp::degree(g) || sp::add(f, sp::mul(f, q, g, MulStrategy::schoolbook), r) != a) return false;
    sp::divrem_left(f, a, g, &q, &r);
    if (sp::degree(r) >= sp::degree(g) || sp::add(f, sp::mul(f, g, q, MulStrategy::schoolbook), r) != a) return false;
  }
  return true;
}

bool karatsuba(const FieldCtx& f) {
  Rng rng(11);
  for (std::size_t deg : {0, 5, 130, 300}) {
    Coeffs a = random_coeffs(f, rng, deg), b = random_coeffs(f, rng, deg + 7);
    if (sp::mul_karatsuba(f, a, b) != sp::mul_schoolbook(f, a, b)) return false;
  }
  return true;
}

bool lclm_divisible(const FieldCtx& f) {
  Rng rng(13);
  for (int it = 0; it < 30; ++it) {
    Coeffs a = random_coeffs(f, rng, 1 + rng.below(5)), b = random_coeffs(f, rng, 1 + rng.below(5));
    Coeffs l = sp::lclm(f, a, b);
    if (!sp::mod_right(f, l, a).empty() || !sp::mod_right(f, l, b).empty()) return false;
    if (sp::degree(l) > sp::degree(a) + sp::degree(b)) return false;
  }
  return true;
}

bool connection(const FieldPtr& f) {
  Rng rng(17);
  for (int it = 0; it < 200; ++it) {
    SkewPoly p(f, random_coeffs(*f, rng, rng.below(10)));
    if (!eval_connection_check(p, f->random_nonzero(rng), f->random(rng))) return false;
  }
  return true;
}

bool minpoly_degree(const FieldPtr& f) {
  Rng rng(19);
  for (int it = 0; it < 20; ++it) {
    const std::size_t cnt = 1 + rng.below(f->m());
    auto pts = sample_independent(*f, cnt, rng.next());
    std::vector<Elem> a(cnt, f->random_nonzero(rng));
    SkewPoly mp = minpoly_op(f, pts, a);
    if (mp.degree() != static_cast<int>(cnt)) return false;
    for (std::size_t i = 0; i < cnt; ++i)
      if (op_eval(mp, pts[i], a[i]) != 0) return false;
  }
  return true;
}

bool engine_equivalence(const FieldPtr& f) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 1 + seed * 5, s = 1 + seed % 3;
    const WeightVec w = decoding_weight_vec(s, 1 + seed % 4);
    OpMapFamily op = random_op_instance(f, n, s, seed);
    RemMapFamily rem = random_rem_instance(f, n, s, seed);
    if (knh_iterative(op, w) != knh_dac(op, w) || knh_iterative(rem, w) != knh_dac(rem, w)) return false;
  }
  return true;
}

bool kernel_and_shape(const FieldPtr& f) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 2 + seed * 3, s = 1 + seed % 3;
    const WeightVec w = decoding_weight_vec(s, 1 + seed % 3);
    OpMapFamily op = random_op_instance(f, n, s, seed);
    SkewPolyMat b = knh_dac(op, w);
    if (!kernel_check(b, op) || !is_weak_popov(b, w)) return false;
  }
  return true;
}

bool reduction_preserves_evals(const FieldPtr& f) {
  Rng rng(23);
  RemMapFamily rem = random_rem_instance(f, 9, 2, 5);
  OpMapFamily op = random_op_instance(f, 9, 2, 5);
  for (const EvalMapFamily* maps : {static_cast<const EvalMapFamily*>(&rem), static_cast<const EvalMapFamily*>(&op)})
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = i; j < 9; ++j) {
        std::vector<SkewPoly> q;
        for (int c = 0; c < 3; ++c) q.push_back(SkewPoly(f, random_coeffs(*f, rng, 15)));
        SkewPolyVec Q(q), R = vec_mod_r(Q, maps->min_vector(i, j));
        for (std::size_t l = i; l <= j; ++l)
          if (maps->eval(l, Q) != maps->eval(l, R)) return false;
      }
  return true;
}

CodeParams code(CodeKind kind, std::uint32_t p, std::uint32_t m, std::size_t n, std::size_t k, std::size_t s,
                std::vector<std::size_t> blocks = {}) {
  CodeParams c;
  c.kind = kind;
  c.p = p;
  c.m = m;
  c.n = n;
  c.k = k;
  c.s = s;
  c.blocks = std::move(blocks);
  return c;
}

bool unique_decoding() {
  CodeSpec c = make_code(code(CodeKind::gabidulin, 2, 8, 8, 2, 1));
  for (std::uint64_t t = 0; t < 30; ++t)
    if (!run_trial(c, 3, 1, t, Algo::dac).success) return false;
  return true;
}

bool beyond_unique() {
  for (auto p : {code(CodeKind::gabidulin, 2, 8, 8, 3, 2), code(CodeKind::ilrs, 3, 4, 8, 2, 2, {4, 4}),
                 code(CodeKind::isrs, 2, 8, 8, 3, 2)}) {
    CodeSpec c = make_code(p);
    int ok = 0;
    for (std::uint64_t t = 0; t < 30; ++t) ok += run_trial(c, decoding_radius(c.n, c.k, c.s), 2, t, Algo::dac).success;
    if (ok < 27) return false;
  }
  return true;
}

bool min_distance() {
  CodeSpec c = make_code(code(CodeKind::gabidulin, 2, 4, 4, 2, 1));
  const FieldCtx& f = *c.field;
  std::size_t best = c.n + 1;
  for (std::uint64_t idx = 1; idx < f.size() * f.size(); ++idx) {
    Coeffs poly{f.element_at(idx % f.size()), f.element_at(idx / f.size())};
    sp::trim(poly);
    best = std::min(best, weight(c, encode(c, Message{{poly}})));
  }
  return best == c.n - c.k + 1;
}

}  // namespace

std::vector<SelfCheck> selftest_checks(const std::vector<FieldPtr>& extra) {
  const std::vector<FieldPtr> plain = {FieldCtx::create_default(2, 1, 2), FieldCtx::create_default(3, 1, 3),
                                       FieldCtx::create_default(2, 2, 3), FieldCtx::create_default(2, 1, 8)};
  std::vector<FieldPtr> all = plain;
  all.push_back(with_derivation(3, 3));
  all.push_back(with_derivation(2, 4));

  std::vector<SelfCheck> out;
  auto each = [](const std::vector<FieldPtr>& fs, auto fn) {
    return [fs, fn] {
      for (const auto& f : fs)
        if (!fn(f)) return false;
      return true;
    };
  };
  out.push_back({"galois.field_axioms", each(all, [](const FieldPtr& f) { return field_axioms(*f); })});
  out.push_back({"skewpoly.division", each(all, [](const FieldPtr& f) { return division(*f); })});
  out.push_back({"skewpoly.karatsuba", each(plain, [](const FieldPtr& f) { return karatsuba(*f); })});
  out.push_back({"skewpoly.lclm", each(all, [](const FieldPtr& f) { return lclm_divisible(*f); })});
  out.push_back({"skewpoly.eval_connection", each(plain, connection)});
  out.push_back({"skewpoly.minpoly_degree", each(plain, minpoly_degree)});
  out.push_back({"knh.dac_equals_iterative", each(all, engine_equivalence)});
  out.push_back({"knh.kernel_weak_popov", each(all, kernel_and_shape)});
  out.push_back({"knh.modular_reduction", each(all, reduction_preserves_evals)});
  out.push_back({"codes.unique_decoding", unique_decoding});
  out.push_back({"codes.beyond_unique_decoding", beyond_unique});
  out.push_back({"codes.min_rank_distance", min_distance});
  for (std::size_t i = 0; i < extra.size(); ++i) {
    const FieldPtr f = extra[i];
    const std::string tag = "[" + std::to_string(i) + "]";
    out.push_back({"galois.field_axioms" + tag, [f] { return field_axioms(*f); }});
    out.push_back({"skewpoly.division" + tag, [f] { return division(*f); }});
    out.push_back({"knh.dac_equals_iterative" + tag, [f] { return engine_equivalence(f); }});
  }
  return out;
}

}  // namespace skewknh
