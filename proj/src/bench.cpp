#include "skewknh/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "skewknh/errors.hpp"

namespace skewknh {

const char* to_string(MulStrategy s) {
  switch (s) {
    case MulStrategy::schoolbook: return "schoolbook";
    case MulStrategy::karatsuba: return "karatsuba";
    case MulStrategy::automatic: return "auto";
  }
  return "?";
}

MulStrategy parse_mul(const std::string& s) {
  if (s == "schoolbook") return MulStrategy::schoolbook;
  if (s == "karatsuba") return MulStrategy::karatsuba;
  if (s == "auto") return MulStrategy::automatic;
  throw StrategyUnsupported("unknown multiplication strategy '" + s + "'");
}

namespace {

PointSet nonzero_points(const FieldCtx& f, Rng& rng, std::size_t n, std::size_t s) {
  PointSet pts(n, std::vector<Elem>(s + 1));
  for (auto& p : pts)
    for (auto& e : p) e = f.random_nonzero(rng);
  return pts;
}

}  // namespace

OpMapFamily random_op_instance(const FieldPtr& f, std::size_t n, std::size_t s, std::uint64_t seed) {
  Rng rng(seed);
  PointSet pts = nonzero_points(*f, rng, n, s);
  std::vector<Elem> a(n);
  for (auto& e : a) e = f->random_nonzero(rng);
  return OpMapFamily(f, std::move(pts), std::move(a), s);
}

RemMapFamily random_rem_instance(const FieldPtr& f, std::size_t n, std::size_t s, std::uint64_t seed) {
  Rng rng(seed);
  return RemMapFamily(f, nonzero_points(*f, rng, n, s), s);
}

BenchRecord bench_once(const FieldPtr& f, std::size_t n, std::size_t s, Algo algo, MulStrategy mul,
                       std::uint64_t seed) {
  BenchRecord r{n, s, std::max<std::size_t>(1, n / 4), algo, mul, seed, 0, false};
  OpMapFamily maps = random_op_instance(f, n, s, seed);
  const WeightVec w = decoding_weight_vec(s, r.k);
  const auto t0 = std::chrono::steady_clock::now();
  SkewPolyMat b = algo == Algo::iter ? knh_iterative(maps, w) : knh_dac(maps, w, nullptr, mul);
  const auto t1 = std::chrono::steady_clock::now();
  r.wall_ns = std::max<std::uint64_t>(1, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  r.verified = kernel_check(b, maps) && is_weak_popov(b, w);
  return r;
}

std::string csv_header() { return "n,s,k,algo,mul_strategy,seed,wall_ns,verified"; }

std::string to_csv(const BenchRecord& r) {
  std::ostringstream os;
  os << r.n << ',' << r.s << ',' << r.k << ',' << to_string(r.algo) << ',' << to_string(r.mul) << ',' << r.seed
     << ',' << r.wall_ns << ',' << (r.verified ? "true" : "false");
  return os.str();
}

double loglog_slope(const std::vector<std::pair<double, double>>& xy) {
  const double n = static_cast<double>(xy.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : xy) {
    const double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  return den == 0 ? NAN : (n * sxy - sx * sy) / den;
}

}  // namespace skewknh
