// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "skewknh/bench.hpp"
#include "skewknh/codes.hpp"
#include "skewknh/errors.hpp"
#include "skewknh/knh.hpp"

using namespace skewknh;

namespace {

// Tolerances and sizes.
constexpr int kEquivInstances = 200;             // per family
constexpr double kEquivBudgetSec = 120.0;
constexpr int kMinimalityInstances = 50;
constexpr int kConnectionDraws = 1000;
constexpr int kUniqueTrials = 200;
constexpr int kBeyondTrials = 500;
constexpr double kBeyondRate = 0.95;
constexpr double kDacSlopeMax = 1.9;
constexpr double kIterSlopeMin = 1.9;
constexpr double kSpeedupMin = 2.0;
constexpr int kBenchReps = 3;
constexpr double kBenchBudgetSec = 600.0;
constexpr int kMinpolyDraws = 100;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

PointSet random_points(const FieldCtx& f, Rng& rng, std::size_t n, std::size_t s) {
  PointSet pts(n, std::vector<Elem>(s + 1));
  for (auto& p : pts)
    for (auto& e : p) e = rng.below(6) == 0 ? 0 : f.random(rng);
  return pts;
}

std::unique_ptr<EvalMapFamily> random_family(const FieldPtr& f, Rng& rng, std::size_t n, std::size_t s, int fam) {
  if (fam == 0) {
    std::vector<Elem> a(n);
    for (auto& e : a) e = f->random_nonzero(rng);
    return std::make_unique<OpMapFamily>(f, random_points(*f, rng, n, s), a);
  }
  return std::make_unique<RemMapFamily>(f, random_points(*f, rng, n, s));
}

SkewPoly random_poly(const FieldPtr& f, Rng& rng, int deg) {
  Coeffs c(deg + 1);
  for (auto& e : c) e = f->random(rng);
  return SkewPoly(f, c);
}

FieldPtr with_derivation(std::uint32_t m) {
  FieldSpec s = FieldCtx::create_default(2, 1, m)->spec();
  s.der_coeff.assign(m, 0);
  s.der_coeff[0] = 1;
  s.der_coeff[m - 1] = 1;
  return FieldCtx::create(s);
}

// Criteria 1 and 2 share the instances.
struct EquivResult {
  Outcome equal, kernel;
};

EquivResult engine_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint32_t ms[] = {4, 6, 8};
  std::map<std::uint32_t, FieldPtr> fields;
  for (auto m : ms) fields[m] = FieldCtx::create_default(2, 1, m);
  Rng rng(1001);
  int equal = 0, good = 0, total = 0;
  for (int fam = 0; fam < 2; ++fam)
    for (int it = 0; it < kEquivInstances; ++it) {
      const auto& f = fields[ms[rng.below(3)]];
      const std::size_t n = 1 + rng.below(64), s = 1 + rng.below(3);
      const std::size_t k = 1 + rng.below(std::max<std::size_t>(1, n / 2));
      const WeightVec w = decoding_weight_vec(s, k);
      auto maps = random_family(f, rng, n, s, fam);
      SkewPolyMat bi = knh_iterative(*maps, w);
      SkewPolyMat bd = knh_dac(*maps, w);
      ++total;
      if (bi == bd) ++equal;
      if (kernel_check(bd, *maps) && is_weak_popov(bd, w)) ++good;
    }
  const double sec = seconds_since(t0);
  EquivResult r;
  r.equal.pass = equal == total && sec < kEquivBudgetSec;
  r.equal.detail = std::to_string(equal) + "/" + std::to_string(total) + " identical, " + std::to_string(sec) +
                   " s (budget " + std::to_string(static_cast<int>(kEquivBudgetSec)) + " s)";
  r.kernel.pass = good == total;
  r.kernel.detail = std::to_string(good) + "/" + std::to_string(total) + " in kernel and weak Popov";
  return r;
}

int max_entry_degree(const SkewPolyMat& b) {
  int d = 0;
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) d = std::max(d, b[r][c].degree());
  return d;
}

Outcome minimality() {
  Rng rng(2002);
  int ok = 0;
  for (int it = 0; it < kMinimalityInstances; ++it) {
    auto f = FieldCtx::create_default(2, 1, 2 + static_cast<std::uint32_t>(rng.below(3)));
    const std::size_t s = 1 + rng.below(2), n = 1 + rng.below(6);
    const std::size_t k = 1 + rng.below(3);
    const WeightVec w = decoding_weight_vec(s, k);
    auto maps = random_family(f, rng, n, s, static_cast<int>(rng.below(2)));
    KnhStats st;
    SkewPolyMat b = knh_dac(*maps, w, &st);
    const int bound = max_entry_degree(b) + 2;
    if (!basis_contains_kernel_check(b, *maps, w, bound)) continue;
    auto best = brute_force_min_degrees(*maps, w, bound);
    bool match = true;
    for (std::size_t r = 0; r <= s; ++r) {
      const int p = w_pivot(b[r], w);
      if (p < 0 || best[p] != st.degrees[r]) match = false;
    }
    if (match) ++ok;
  }
  return {ok == kMinimalityInstances,
          std::to_string(ok) + "/" + std::to_string(kMinimalityInstances) + " bases contain the kernel with minimal pivot degrees"};
}

Outcome modular_reduction() {
  const std::vector<FieldPtr> fields{FieldCtx::create_default(2, 1, 4), FieldCtx::create_default(3, 1, 3),
                                     with_derivation(5)};
  Rng rng(3003);
  std::size_t nodes = 0, bad = 0;
  for (const auto& f : fields)
    for (int fam = 0; fam < 2; ++fam)
      for (int inst = 0; inst < 3; ++inst) {
        const std::size_t n = 5 + rng.below(30), s = 1 + rng.below(3);
        auto maps = random_family(f, rng, n, s, fam);
        auto mins = precompute_min_vectors(*maps, 0, n - 1);
        std::vector<std::pair<std::size_t, std::size_t>> stack{{0, n - 1}};
        while (!stack.empty()) {
          auto [lo, hi] = stack.back();
          stack.pop_back();
          ++nodes;
          auto mv = mins.vec(lo, hi);
          std::vector<SkewPoly> qe;
          for (std::size_t j = 0; j <= s; ++j) qe.push_back(random_poly(f, rng, static_cast<int>(rng.below(3 * n))));
          SkewPolyVec q(qe);
          SkewPolyVec red = vec_mod_r(q, mv);
          for (std::size_t l = lo; l <= hi; ++l)
            if (maps->eval(l, q) != maps->eval(l, red)) {
              ++bad;
              break;
            }
          if (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            stack.push_back({lo, mid});
            stack.push_back({mid + 1, hi});
          }
        }
      }
  return {bad == 0, std::to_string(nodes - bad) + "/" + std::to_string(nodes) + " tree nodes preserve all evaluations"};
}

Outcome connection() {
  const std::vector<FieldPtr> fields{FieldCtx::create_default(2, 1, 8), FieldCtx::create_default(5, 1, 3),
                                     FieldCtx::create_default(3, 2, 4)};
  Rng rng(4004);
  int ok = 0;
  for (int it = 0; it < kConnectionDraws; ++it) {
    const auto& f = fields[rng.below(fields.size())];
    SkewPoly p = random_poly(f, rng, static_cast<int>(rng.below(12)));
    const Elem b = f->random_nonzero(rng), a = f->random(rng);
    if (eval_connection_check(p, b, a)) ++ok;
  }
  return {ok == kConnectionDraws, std::to_string(ok) + "/" + std::to_string(kConnectionDraws) + " draws agree"};
}

std::size_t successes(const CodeSpec& spec, std::size_t t, int trials, std::uint64_t seed) {
  std::size_t ok = 0;
  for (int i = 0; i < trials; ++i)
    if (run_trial(spec, t, seed, static_cast<std::uint64_t>(i), Algo::dac).success) ++ok;
  return ok;
}

Outcome unique_regime() {
  const std::pair<std::size_t, std::size_t> nk[] = {{8, 2}, {8, 4}, {16, 4}};
  bool pass = true;
  std::string detail;
  for (auto [n, k] : nk) {
    CodeParams p;
    p.kind = CodeKind::gabidulin;
    p.p = 2;
    p.m = 16;
    p.n = n;
    p.k = k;
    p.s = 1;
    p.seed = 6000 + n * 10 + k;
    const std::size_t t = (n - k) / 2;
    const std::size_t ok = successes(make_code(p), t, kUniqueTrials, p.seed);
    pass = pass && ok == static_cast<std::size_t>(kUniqueTrials);
    detail += "(" + std::to_string(n) + "," + std::to_string(k) + ",t=" + std::to_string(t) +
              ") " + std::to_string(ok) + "/" + std::to_string(kUniqueTrials) + "; ";
  }
  detail.resize(detail.size() - 2);
  return {pass, detail};
}

Outcome beyond_unique() {
  struct Case {
    const char* name;
    CodeParams p;
    std::size_t t;
  };
  std::vector<Case> cases;
  {
    CodeParams p;
    p.kind = CodeKind::gabidulin;
    p.p = 2, p.m = 16, p.n = 16, p.k = 4, p.s = 2, p.seed = 7001;
    cases.push_back({"gab", p, 8});
  }
  {
    CodeParams p;
    p.kind = CodeKind::ilrs;
    p.p = 3, p.m = 6, p.n = 12, p.k = 3, p.s = 2, p.blocks = {6, 6}, p.seed = 7002;
    cases.push_back({"ilrs", p, 6});
  }
  {
    CodeParams p;
    p.kind = CodeKind::isrs;
    p.p = 2, p.m = 12, p.n = 12, p.k = 3, p.s = 2, p.seed = 7003;
    cases.push_back({"isrs", p, 6});
  }
  bool pass = true;
  std::string detail;
  for (const auto& c : cases) {
    CodeSpec spec = make_code(c.p);
    const double rate = static_cast<double>(successes(spec, c.t, kBeyondTrials, c.p.seed)) / kBeyondTrials;
    pass = pass && rate >= kBeyondRate;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s t=%zu rate %.3f; ", c.name, c.t, rate);
    detail += buf;
  }
  detail += "threshold " + std::to_string(kBeyondRate).substr(0, 4);
  return {pass, detail};
}

Outcome scaling() {
  const auto t0 = std::chrono::steady_clock::now();
  auto f = FieldCtx::create_default(65537, 1, 2);
  const std::size_t sizes[] = {128, 256, 512, 1024};
  std::map<Algo, std::vector<std::pair<double, double>>> pts;
  bool verified = true;
  for (Algo algo : {Algo::iter, Algo::dac})
    for (std::size_t n : sizes) {
      std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
      for (int r = 0; r < kBenchReps; ++r) {
        BenchRecord rec = bench_once(f, n, 2, algo, MulStrategy::karatsuba, 8000 + n);
        verified = verified && rec.verified;
        best = std::min(best, rec.wall_ns);
      }
      pts[algo].push_back({static_cast<double>(n), static_cast<double>(best)});
    }
  const double si = loglog_slope(pts[Algo::iter]), sd = loglog_slope(pts[Algo::dac]);
  const double speedup = pts[Algo::iter].back().second / pts[Algo::dac].back().second;
  const double sec = seconds_since(t0);
  char buf[200];
  std::snprintf(buf, sizeof buf, "dac slope %.3f (<= %.1f), iter slope %.3f (>= %.1f), speedup at 1024 %.2fx (>= %.1fx), %.1f s",
                sd, kDacSlopeMax, si, kIterSlopeMin, speedup, kSpeedupMin, sec);
  const bool pass = verified && sd <= kDacSlopeMax && si >= kIterSlopeMin && speedup >= kSpeedupMin &&
                    sec < kBenchBudgetSec;
  return {pass, std::string(buf) + (verified ? "" : ", unverified output")};
}

Outcome minpoly_degrees() {
  const std::vector<FieldPtr> fields{FieldCtx::create_default(2, 1, 8), FieldCtx::create_default(3, 1, 5),
                                     FieldCtx::create_default(2, 1, 12), with_derivation(6)};
  Rng rng(9009);
  int op_ok = 0, rem_ok = 0;
  for (int it = 0; it < kMinpolyDraws; ++it) {
    const auto& f = fields[rng.below(fields.size())];
    const std::size_t cnt = 1 + rng.below(f->m());
    auto pts = sample_independent(*f, cnt, rng.next());
    std::vector<Elem> a(cnt, f->random_nonzero(rng));
    if (minpoly_op(f, pts, a).degree() == static_cast<int>(cnt)) ++op_ok;
  }
  for (int it = 0; it < kMinpolyDraws; ++it) {
    CodeParams p;
    p.kind = CodeKind::isrs;
    p.p = 2;
    p.m = 4 + static_cast<std::uint32_t>(rng.below(9));
    p.n = 1 + rng.below(p.m);
    p.k = 1;
    p.s = 1 + rng.below(3);
    p.seed = rng.next();
    CodeSpec spec = make_code(p);
    if (minpoly_rem(spec.field, spec.b).degree() == static_cast<int>(spec.n)) ++rem_ok;
  }
  return {op_ok == kMinpolyDraws && rem_ok == kMinpolyDraws,
          "operator " + std::to_string(op_ok) + "/" + std::to_string(kMinpolyDraws) + ", remainder " +
              std::to_string(rem_ok) + "/" + std::to_string(kMinpolyDraws)};
}

// Frozen output of tools/degree_table.py: n, k, s, degree bound, radius.
struct FormulaRow {
  std::size_t n, k, s, bound, radius;
};
constexpr FormulaRow kFormulaTable[] = {
    {8, 2, 1, 5, 3},       {8, 4, 1, 6, 2},       {16, 4, 1, 10, 6},    {16, 4, 2, 8, 8},
    {12, 3, 2, 6, 6},      {8, 2, 2, 4, 4},       {121, 24, 6, 38, 83}, {149, 78, 2, 102, 47},
    {186, 105, 6, 116, 70}, {195, 68, 5, 89, 106}, {63, 41, 6, 44, 19},  {128, 91, 4, 98, 30},
    {135, 56, 3, 76, 59},  {140, 85, 5, 94, 46},  {20, 7, 6, 9, 11},    {193, 187, 4, 188, 5},
    {182, 168, 2, 173, 9}, {137, 55, 4, 71, 66},  {15, 13, 3, 13, 2},   {161, 107, 4, 118, 43},
};

Outcome formulas() {
  int ok = 0, total = 0;
  for (const auto& r : kFormulaTable) {
    ++total;
    if (interp_degree_bound(r.n, r.k, r.s) == r.bound && decoding_radius(r.n, r.k, r.s) == r.radius) ++ok;
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " triples match"};
}

Outcome guarded(const std::function<Outcome()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const char* name, const Outcome& o) {
    std::printf("[%s] %2d %-22s %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  };

  EquivResult eq;
  try {
    eq = engine_equivalence();
  } catch (const std::exception& e) {
    eq.equal = eq.kernel = {false, std::string("exception: ") + e.what()};
  }
  report(1, "engine_equivalence", eq.equal);
  report(2, "kernel_and_shape", eq.kernel);
  report(3, "minimality", guarded(minimality));
  report(4, "modular_reduction", guarded(modular_reduction));
  report(5, "eval_connection", guarded(connection));
  report(6, "unique_decoding", guarded(unique_regime));
  report(7, "beyond_unique", guarded(beyond_unique));
  report(8, "complexity_scaling", guarded(scaling));
  report(9, "minpoly_degrees", guarded(minpoly_degrees));
  report(10, "degree_formulas", guarded(formulas));
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
