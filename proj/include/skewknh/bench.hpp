#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skewknh/codes.hpp"

namespace skewknh {

const char* to_string(MulStrategy s);
MulStrategy parse_mul(const std::string& s);

// Random operator-evaluation instance: nonzero points and parameters.
OpMapFamily random_op_instance(const FieldPtr& f, std::size_t n, std::size_t s, std::uint64_t seed);
RemMapFamily random_rem_instance(const FieldPtr& f, std::size_t n, std::size_t s, std::uint64_t seed);

struct BenchRecord {
  std::size_t n = 0, s = 0, k = 0;
  Algo algo = Algo::dac;
  MulStrategy mul = MulStrategy::karatsuba;
  std::uint64_t seed = 0;
  std::uint64_t wall_ns = 0;
  bool verified = false;
};

// Times one interpolation with w = (0, k-1, ..., k-1), k = max(1, n/4),
// precompute included. The output is checked (kernel and weak Popov form)
// after the clock stops.
BenchRecord bench_once(const FieldPtr& f, std::size_t n, std::size_t s, Algo algo, MulStrategy mul,
                       std::uint64_t seed);

std::string csv_header();
std::string to_csv(const BenchRecord& r);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<std::pair<double, double>>& xy);

}  // namespace skewknh
