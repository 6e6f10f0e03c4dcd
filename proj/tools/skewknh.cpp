// Command line front end: selftest, decode, bench, interpolate.
#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "skewknh/bench.hpp"
#include "skewknh/codes.hpp"
#include "skewknh/io.hpp"
#include "skewknh/selftest.hpp"

using namespace skewknh;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kVerifyFail = 1, kBadArgs = 2;

struct Opts {
  std::string kind = "gab";
  std::uint32_t p = 2, r = 1, m = 8;
  std::size_t n = 8, k = 2, s = 1, t = 0, trials = 100, reps = 1, jobs = 1;
  std::vector<std::size_t> blocks;
  std::uint64_t seed = 1;
  std::string algo = "dac", mul = "auto", sizes, out, filter, spec, field, points, params, weights, family = "op";
  bool dump = false;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("SKEWKNH_SEED");
  if (!env || !*env) return 1;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    return 1;
  }
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string read_spec(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw ParseError("cannot read " + arg.substr(1));
  return std::string(std::istreambuf_iterator<char>(in), {});
}

CodeParams code_params(const Opts& o) {
  if (!o.spec.empty()) return code_params_from_json(read_spec(o.spec));
  CodeParams p;
  p.kind = parse_code_kind(o.kind);
  p.p = o.p;
  p.r = o.r;
  p.m = o.m;
  p.n = o.n;
  p.k = o.k;
  p.s = o.s;
  p.blocks = o.blocks;
  p.seed = o.seed;
  return p;
}

// Output goes to --out when given.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot open " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_selftest(const Opts& o) {
  std::vector<FieldPtr> extra;
  json failures = json::array();
  if (!o.field.empty()) {
    try {
      extra.push_back(FieldCtx::create(field_spec_from_json(read_spec(o.field))));
    } catch (const Error& e) {
      failures.push_back({{"check", "galois.field_spec"}, {"error", e.name()}, {"message", e.what()}});
    }
  }
  std::size_t run = 0;
  for (const auto& c : selftest_checks(extra)) {
    if (!o.filter.empty() && c.name.find(o.filter) == std::string::npos) continue;
    ++run;
    bool ok = false;
    json line{{"check", c.name}};
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      line["error"] = e.what();
    }
    line["pass"] = ok;
    std::cout << line.dump() << '\n';
    if (!ok) failures.push_back(line);
  }
  std::cout << json{{"checks", run}, {"failures", failures}}.dump() << '\n';
  return failures.empty() ? kOk : kVerifyFail;
}

int cmd_decode(const Opts& o) {
  CodeSpec spec;
  Algo algo;
  try {
    algo = parse_algo(o.algo);
    spec = make_code(code_params(o));
    if (o.t > spec.n) throw WeightInfeasible("t exceeds n");
    Rng probe(0);
    channel(spec, encode(spec, random_message(spec, probe)), o.t, probe);
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << '\n';
    return kBadArgs;
  }
  std::vector<TrialResult> results(o.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < o.trials;) results[i] = run_trial(spec, o.t, o.seed, i, algo);
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < std::max<std::size_t>(1, o.jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Sink sink(o.out);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < o.trials; ++i) {
    const auto& r = results[i];
    ok += r.success;
    sink.os() << json{{"trial", i}, {"success", r.success}, {"t", r.report.t_actual}, {"algo", to_string(algo)},
                      {"candidates", r.report.candidates}}
                     .dump()
              << '\n';
  }
  const double rate = o.trials ? static_cast<double>(ok) / o.trials : 1.0;
  sink.os() << json{{"summary", {{"kind", to_string(spec.kind)}, {"q", spec.field->q()}, {"m", spec.field->m()},
                                  {"n", spec.n}, {"k", spec.k}, {"s", spec.s}, {"t", o.t},
                                  {"radius", decoding_radius(spec.n, spec.k, spec.s)}, {"algo", to_string(algo)},
                                  {"seed", o.seed}, {"trials", o.trials}, {"successes", ok}, {"rate", rate}}}}
                       .dump()
            << '\n';
  return kOk;
}

int cmd_bench(const Opts& o) {
  std::vector<std::size_t> sizes;
  std::vector<Algo> algos;
  std::vector<MulStrategy> muls;
  FieldPtr f;
  try {
    for (const auto& s : split(o.sizes)) {
      std::size_t pos = 0;
      const long long v = std::stoll(s, &pos);
      if (pos != s.size() || v <= 0) throw ParseError("bad size '" + s + "'");
      sizes.push_back(static_cast<std::size_t>(v));
    }
    if (sizes.empty()) throw ParseError("--sizes is empty");
    for (const auto& a : split(o.algo)) algos.push_back(parse_algo(a));
    for (const auto& m : split(o.mul)) muls.push_back(parse_mul(m));
    if (o.reps < 1 || o.s < 1) throw ParseError("--reps and --s must be positive");
    f = FieldCtx::create_default(o.p, o.r, o.m);
    if (f->has_derivation()) throw StrategyUnsupported("bench field must have zero derivation");
  } catch (const std::logic_error&) {
    std::cerr << "ParseError: malformed --sizes\n";
    return kBadArgs;
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << '\n';
    return kBadArgs;
  }

  Sink sink(o.out);
  sink.os() << csv_header() << '\n';
  std::map<std::pair<int, int>, std::map<std::size_t, std::uint64_t>> best;
  for (std::size_t n : sizes)
    for (Algo a : algos)
      for (MulStrategy m : muls)
        for (std::size_t rep = 0; rep < o.reps; ++rep) {
          BenchRecord r = bench_once(f, n, o.s, a, m, o.seed + rep);
          sink.os() << to_csv(r) << std::endl;
          if (!r.verified) {
            std::cerr << "verification failed: " << to_csv(r) << '\n';
            return kVerifyFail;
          }
          auto& b = best[{static_cast<int>(a), static_cast<int>(m)}][n];
          b = b ? std::min(b, r.wall_ns) : r.wall_ns;
        }
  for (const auto& [key, series] : best) {
    if (series.size() < 2) continue;
    std::vector<std::pair<double, double>> xy;
    for (auto [n, ns] : series) xy.emplace_back(static_cast<double>(n), static_cast<double>(ns));
    std::cout << (o.out.empty() ? "# " : "") << "slope algo=" << to_string(static_cast<Algo>(key.first))
        << " mul=" << to_string(static_cast<MulStrategy>(key.second)) << " value=" << loglog_slope(xy) << '\n';
  }
  return kOk;
}

// Explicit instance from --points/--params/--weights over --p/--r/--m, or a
// received word of the code described by the decode flags.
int cmd_interpolate(const Opts& o) {
  std::unique_ptr<EvalMapFamily> maps;
  WeightVec w;
  FieldPtr f;
  Algo algo;
  try {
    algo = parse_algo(o.algo);
    if (!o.points.empty()) {
      f = FieldCtx::create_default(o.p, o.r, o.m);
      json pj = json::parse(o.points);
      PointSet pts;
      for (const auto& row : pj) {
        pts.emplace_back();
        for (const auto& e : row) pts.back().push_back(elem_from_text(*f, e.dump()));
      }
      const std::size_t s = pts.empty() ? o.s : pts.front().size() - 1;
      for (auto& row : pts) row.resize(s + 1, 0);
      if (o.family == "rem") {
        maps = std::make_unique<RemMapFamily>(f, pts, s);
      } else {
        std::vector<Elem> a(pts.size(), 1);
        if (!o.params.empty()) {
          a.clear();
          for (const auto& e : json::parse(o.params)) a.push_back(elem_from_text(*f, e.dump()));
        }
        maps = std::make_unique<OpMapFamily>(f, pts, a, s);
      }
      w = o.weights.empty() ? WeightVec(s + 1, 0) : json::parse(o.weights).get<WeightVec>();
    } else if (o.n == 0) {
      f = FieldCtx::create_default(o.p, o.r, o.m);
      maps = std::make_unique<OpMapFamily>(f, PointSet{}, std::vector<Elem>{}, o.s);
      w = decoding_weight_vec(o.s, o.k);
    } else {
      CodeSpec spec = make_code(code_params(o));
      f = spec.field;
      Rng rng = Rng::derive(o.seed, 0);
      auto ch = channel(spec, encode(spec, random_message(spec, rng)), o.t, rng);
      maps = make_map_family(spec, ch.received);
      w = decoding_weight_vec(spec.s, spec.k);
    }
    if (w.size() != maps->s() + 1) throw DimensionMismatch("weights need s+1 entries");
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << '\n';
    return kBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "ParseError: " << e.what() << '\n';
    return kBadArgs;
  }

  KnhStats st;
  const MulStrategy mul = parse_mul(o.mul);
  SkewPolyMat b = algo == Algo::iter ? knh_iterative(*maps, w, &st) : knh_dac(*maps, w, &st, mul);
  std::vector<int> piv;
  for (std::size_t r = 0; r < b.rows(); ++r) piv.push_back(w_pivot(b[r], w));
  const bool kernel = kernel_check(b, *maps), popov = is_weak_popov(b, w);
  if (o.dump) std::cout << "basis " << mat_to_text(b) << '\n';
  std::cout << "degrees " << json(st.degrees).dump() << '\n';
  std::cout << "pivots " << json(piv).dump() << '\n';
  std::cout << "kernel " << (kernel ? "ok" : "FAIL") << '\n';
  std::cout << "weak_popov " << (popov ? "ok" : "FAIL") << '\n';
  return kernel && popov ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew polynomial KNH interpolation and decoding of interleaved codes"};
  app.require_subcommand(1);
  Opts o;
  o.seed = default_seed();

  auto code_flags = [&](CLI::App* c) {
    c->add_option("--kind", o.kind, "gab, ilrs or isrs");
    c->add_option("--p", o.p, "characteristic");
    c->add_option("--r", o.r, "base field degree over F_p");
    c->add_option("--m", o.m, "extension degree");
    c->add_option("--n", o.n, "code length");
    c->add_option("--k", o.k, "dimension");
    c->add_option("--s", o.s, "interleaving order");
    c->add_option("--blocks", o.blocks, "ilrs block lengths")->delimiter(',');
    c->add_option("--t", o.t, "error weight");
    c->add_option("--seed", o.seed, "seed (default $SKEWKNH_SEED or 1)");
    c->add_option("--algo", o.algo, "iter or dac");
    c->add_option("--spec", o.spec, "CodeSpec JSON, or @file");
  };

  auto* selftest = app.add_subcommand("selftest", "run the built-in property checks");
  selftest->add_option("--filter", o.filter, "only checks whose name contains this");
  selftest->add_option("--field", o.field, "extra field spec JSON, or @file");

  auto* decode = app.add_subcommand("decode", "Monte Carlo decoding trials, JSON lines");
  code_flags(decode);
  decode->add_option("--trials", o.trials, "number of trials");
  decode->add_option("--jobs", o.jobs, "worker threads");
  decode->add_option("--out", o.out, "output file");

  auto* bench = app.add_subcommand("bench", "interpolation timing, CSV");
  bench->add_option("--sizes", o.sizes, "comma separated n values")->required();
  bench->add_option("--s", o.s, "interleaving order");
  bench->add_option("--algo,--algos", o.algo, "comma list of iter, dac");
  bench->add_option("--mul", o.mul, "comma list of schoolbook, karatsuba");
  bench->add_option("--reps", o.reps, "repetitions per cell, seeds seed..seed+reps-1");
  bench->add_option("--seed", o.seed, "seed (default $SKEWKNH_SEED or 1)");
  bench->add_option("--p", o.p, "characteristic");
  bench->add_option("--r", o.r, "base field degree over F_p");
  bench->add_option("--m", o.m, "extension degree");
  bench->add_option("--jobs", o.jobs, "accepted for symmetry; timing is single-threaded");
  bench->add_option("--out", o.out, "CSV output file");

  auto* interp = app.add_subcommand("interpolate", "one interpolation with verification");
  code_flags(interp);
  interp->add_option("--mul", o.mul, "schoolbook, karatsuba or auto");
  interp->add_flag("--dump", o.dump, "print the basis");
  interp->add_option("--points", o.points, "explicit points, JSON list of coordinate-list rows");
  interp->add_option("--params", o.params, "operator parameters, JSON list of coordinate lists");
  interp->add_option("--weights", o.weights, "JSON weight vector");
  interp->add_option("--family", o.family, "op or rem for explicit points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadArgs;
  }
  if (bench->parsed() && o.algo == "dac" && !bench->count("--algo")) o.algo = "iter,dac";
  if (bench->parsed() && o.mul == "auto" && !bench->count("--mul")) o.mul = "karatsuba";
  if (bench->parsed() && !bench->count("--p") && !bench->count("--m")) {
    o.p = 65537;
    o.m = 2;
  }

  try {
    if (selftest->parsed()) return cmd_selftest(o);
    if (decode->parsed()) return cmd_decode(o);
    if (bench->parsed()) return cmd_bench(o);
    return cmd_interpolate(o);
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << '\n';
    return kVerifyFail;
  }
}
