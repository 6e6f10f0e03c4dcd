#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewknh/families.hpp"

namespace skewknh {

enum class CodeKind { gabidulin, ilrs, isrs };
enum class Algo { iter, dac };

const char* to_string(CodeKind k);
CodeKind parse_code_kind(const std::string& s);  // accepts "gab" for gabidulin
const char* to_string(Algo a);
Algo parse_algo(const std::string& s);

// s rows of length n.
using CodewordMatrix = std::vector<std::vector<Elem>>;

// f^(1)..f^(s), trimmed, each of degree < k.
struct Message {
  std::vector<Coeffs> polys;
  bool operator==(const Message& o) const { return polys == o.polys; }
};

// User-facing parameters. Empty point lists are generated from the seed.
struct CodeParams {
  CodeKind kind = CodeKind::gabidulin;
  std::uint32_t p = 2, r = 1, m = 8;
  std::size_t n = 8, k = 2, s = 1;
  std::vector<std::size_t> blocks;  // ilrs only
  std::uint64_t seed = 0;
  std::vector<Elem> beta;  // gab/ilrs: evaluation points; isrs: conjugators c_i
  std::vector<Elem> xi;    // ilrs: one class representative per block
  std::optional<Elem> a;   // isrs: base point, default 1
};

struct CodeSpec {
  CodeKind kind;
  FieldPtr field;
  std::size_t n, k, s;
  // Block lengths: {n} for gabidulin, the sum-rank blocks for ilrs, empty for isrs.
  std::vector<std::size_t> blocks;
  std::vector<Elem> beta;
  std::vector<Elem> xi;
  // isrs: b_i = a^{c_i}; beta holds the c_i.
  Elem a = 1;
  std::vector<Elem> b;
  // evaluation parameter per position (operator codes)
  std::vector<Elem> params;
  std::uint64_t seed = 0;
};

// Validates and completes the parameters; throws InvalidCode.
CodeSpec make_code(const CodeParams& p);

// a sigma(a) ... sigma^(m-1)(a), an element of F_q.
Elem norm(const FieldCtx& f, Elem a);

Message random_message(const CodeSpec& spec, Rng& rng);
CodewordMatrix encode(const CodeSpec& spec, const Message& msg);

struct ChannelOutput {
  CodewordMatrix received;
  CodewordMatrix error;
  std::size_t t = 0;
};
ChannelOutput channel(const CodeSpec& spec, const CodewordMatrix& codeword, std::size_t t, Rng& rng);

// F_q-rank of the (s m) x |cols| expansion of columns [lo, hi).
std::size_t rank_weight(const FieldCtx& f, const CodewordMatrix& x, std::size_t lo, std::size_t hi);
std::size_t sum_rank_weight(const FieldCtx& f, const CodewordMatrix& x, const std::vector<std::size_t>& blocks);
std::size_t hamming_weight(const CodewordMatrix& x);
// Degree of lclm over nonzero x_i of (x - b_i^{x_i}); single row.
std::size_t skew_weight_lclm(const CodeSpec& spec, const std::vector<Elem>& x);
// Same weight through the conjugators: rank of the columns c_i (x_{0,i}, ..., x_{s-1,i}).
std::size_t skew_weight_rank(const CodeSpec& spec, const CodewordMatrix& x);
// Weight in the metric of the code.
std::size_t weight(const CodeSpec& spec, const CodewordMatrix& x);

CodewordMatrix mat_sub(const FieldCtx& f, const CodewordMatrix& a, const CodewordMatrix& b);

std::unique_ptr<OpMapFamily> make_op_map_family(const CodeSpec& spec, const CodewordMatrix& received);
std::unique_ptr<RemMapFamily> make_rem_map_family(const CodeSpec& spec, const CodewordMatrix& received);
std::unique_ptr<EvalMapFamily> make_map_family(const CodeSpec& spec, const CodewordMatrix& received);

WeightVec decoding_weight_vec(std::size_t s, std::size_t k);
// ceil((n + s(k-1) + 1) / (s+1))
std::size_t interp_degree_bound(std::size_t n, std::size_t k, std::size_t s);
// largest t with t < s (n-k+1) / (s+1)
std::size_t decoding_radius(std::size_t n, std::size_t k, std::size_t s);

struct RootFindResult {
  std::vector<Message> messages;  // within the decoding radius
  std::size_t rows_used = 0;
  std::size_t solutions = 0;      // affine solutions of the stacked system
  bool overflow = false;          // solution space exceeded the enumeration cap
};

// Solutions f of Q_0 + sum_j Q_j f^(j) = 0 jointly for all rows of w-degree
// below the interpolation bound, kept when they re-encode within the radius.
RootFindResult root_find(const CodeSpec& spec, const SkewPolyMat& basis, const CodewordMatrix& received);

struct RootFindTuning {
  static std::size_t max_solutions;
};

struct DecodeReport {
  bool success = false;
  std::optional<Message> message;
  std::size_t t_actual = 0;
  std::vector<int> interp_degrees;
  std::size_t list_size_bound = 0;
  std::size_t candidates = 0;
};

DecodeReport decode(const CodeSpec& spec, const CodewordMatrix& received, Algo algo,
                    MulStrategy mul = MulStrategy::automatic);

// One seeded encode / channel / decode round; success also requires the
// decoded message to match the transmitted one.
struct TrialResult {
  bool success = false;
  DecodeReport report;
};
TrialResult run_trial(const CodeSpec& spec, std::size_t t, std::uint64_t seed, std::uint64_t trial, Algo algo);

}  // namespace skewknh
