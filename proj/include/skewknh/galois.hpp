#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "skewknh/errors.hpp"
#include "skewknh/rng.hpp"

namespace skewknh {

// Packed element of F_{q^m}: coordinate i (coefficient of z^i in the
// polynomial basis) lives in bits [i*w, (i+1)*w) with w = ceil(log2 q).
using Elem = std::uint64_t;

// F_q with q = p^r. Elements are integers in [0, q); for r > 1 the digits
// base p are the coordinates over F_p in the basis 1, y, ..., y^(r-1).
class BaseField {
 public:
  BaseField() = default;
  BaseField(std::uint32_t p, std::uint32_t r);

  std::uint32_t p() const { return p_; }
  std::uint32_t r() const { return r_; }
  std::uint32_t q() const { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (r_ == 1) {
      std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return digit_add(a, b, false);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (r_ == 1) return a >= b ? a - b : a + p_ - b;
    return digit_add(a, b, true);
  }
  std::uint32_t neg(std::uint32_t a) const { return sub(0, a); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (r_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t digit_add(std::uint32_t a, std::uint32_t b, bool subtract) const;

  std::uint32_t p_ = 2, r_ = 1, q_ = 2;
  std::vector<std::uint32_t> log_, exp_;
};

// Dense matrix over F_q with Gaussian elimination helpers.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  // In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref(const BaseField& f);
  std::size_t rank(const BaseField& f) const;
  // Basis of {x : A x = 0}.
  std::vector<std::vector<std::uint32_t>> kernel(const BaseField& f) const;
  // One solution of A x = b, or false when inconsistent.
  bool solve(const BaseField& f, std::span<const std::uint32_t> b,
             std::vector<std::uint32_t>& x) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> a_;
};

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t r = 1;
  std::uint32_t m = 1;
  std::vector<std::uint32_t> modulus;    // ascending, length m+1, over F_q
  std::uint32_t aut_exp = 1;             // sigma(a) = a^(q^aut_exp)
  std::vector<std::uint32_t> der_coeff;  // ascending, length m; empty = 0
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

// F_{q^m} = F_q[z]/(modulus) together with sigma = Frobenius^e and the inner
// derivation delta(a) = b (sigma(a) - a). Immutable after construction.
class FieldCtx {
 public:
  static FieldPtr create(const FieldSpec& spec);
  // Uses the first irreducible monic modulus in lexicographic order.
  static FieldPtr create_default(std::uint32_t p, std::uint32_t r, std::uint32_t m,
                                 std::uint32_t aut_exp = 1);
  static std::vector<std::uint32_t> find_irreducible(const BaseField& fq, std::uint32_t m);

  const FieldSpec& spec() const { return spec_; }
  const BaseField& fq() const { return fq_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t q() const { return fq_.q(); }
  std::uint32_t m() const { return spec_.m; }
  std::uint32_t aut_exp() const { return spec_.aut_exp; }
  // Order of sigma as an automorphism of F_{q^m}.
  std::uint32_t sigma_order() const { return ord_; }
  // q^m, saturated at 2^64-1.
  std::uint64_t size() const { return size_; }
  bool has_derivation() const { return der_ != 0; }
  Elem der_coeff() const { return der_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem embed(std::uint32_t c) const { return c; }

  Elem add(Elem a, Elem b) const {
    if (fq_.p() == 2) return a ^ b;
    if (fq_.r() != 1) return add_slow(a, b, false);
    const std::uint64_t p = fq_.p();
    Elem out = 0;
    for (std::uint32_t sh = 0; sh < nbits_; sh += bits_) {
      std::uint64_t t = ((a >> sh) & cmask_) + ((b >> sh) & cmask_);
      out |= (t >= p ? t - p : t) << sh;
    }
    return out;
  }
  Elem sub(Elem a, Elem b) const {
    if (fq_.p() == 2) return a ^ b;
    if (fq_.r() != 1) return add_slow(a, b, true);
    const std::uint64_t p = fq_.p();
    Elem out = 0;
    for (std::uint32_t sh = 0; sh < nbits_; sh += bits_) {
      std::uint64_t x = (a >> sh) & cmask_, y = (b >> sh) & cmask_;
      out |= (x >= y ? x - y : x + p - y) << sh;
    }
    return out;
  }
  Elem neg(Elem a) const { return fq_.p() == 2 ? a : add_slow(0, a, true); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
      std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
      return exp_[s];
    }
    return mul_slow(a, b);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  // c * a for c in F_q.
  Elem scale(std::uint32_t c, Elem a) const;

  // Unreduced accumulation, available for prime q < 2^20: the product of
  // coordinate vectors is summed into 2m-1 uint64 slots and reduced once.
  bool lazy() const { return lazy_; }
  Elem lazy_reduce(std::uint64_t* slots) const;

  // sigma^k(a); negative k is taken modulo the order of sigma.
  Elem aut(Elem a, long long k = 1) const {
    long long kk = k % static_cast<long long>(ord_);
    if (kk < 0) kk += ord_;
    if (kk == 0 || a == 0) return a;
    if (!log_.empty()) return exp_[std::uint64_t{log_[a]} * autmul_[kk] % (size_ - 1)];
    return aut_matrix(a, static_cast<std::size_t>(kk));
  }
  // sigma^k through the precomputed coordinate matrices, regardless of tables.
  Elem aut_matrix(Elem a, std::size_t k) const;
  Elem der(Elem a) const { return der_ == 0 ? 0 : mul(der_, sub(aut(a, 1), a)); }
  // a^c = sigma(c) a c^-1 + delta(c) c^-1.
  Elem conj(Elem a, Elem c) const;

  std::uint32_t coord(Elem a, std::uint32_t i) const {
    return static_cast<std::uint32_t>((a >> (i * bits_)) & cmask_);
  }
  std::vector<std::uint32_t> coords(Elem a) const;
  Elem from_coords(std::span<const std::uint32_t> c) const;
  bool valid(Elem a) const;
  // Enumeration of all q^m elements, idx in [0, q^m).
  Elem element_at(std::uint64_t idx) const;

  Elem random(Rng& rng) const;
  Elem random_nonzero(Rng& rng) const;

  std::string to_string(Elem a) const;

 private:
  FieldCtx() = default;
  void init(const FieldSpec& spec);
  Elem add_slow(Elem a, Elem b, bool subtract) const;
  Elem mul_slow(Elem a, Elem b) const;
  Elem pow_slow(Elem a, std::uint64_t e) const;

  FieldSpec spec_;
  BaseField fq_;
  std::uint32_t bits_ = 1;
  std::uint32_t nbits_ = 1;  // bits_ * m
  bool lazy_ = false;
  std::uint64_t cmask_ = 1;
  std::uint32_t ord_ = 1;
  std::uint64_t size_ = 2;
  std::vector<std::uint32_t> mod_;  // monic modulus, length m+1
  Elem der_ = 0;
  // aut_img_[k][i] = sigma^k(z^i)
  std::vector<std::vector<Elem>> aut_img_;
  // Log tables when the packed representation fits in 20 bits.
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint64_t> autmul_;
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr ctx, Elem rep);

  const FieldPtr& ctx() const { return ctx_; }
  Elem rep() const { return rep_; }
  bool is_zero() const { return rep_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  bool operator==(const FieldElement& o) const;

  std::string to_string() const { return ctx_ ? ctx_->to_string(rep_) : "?"; }

 private:
  FieldPtr ctx_;
  Elem rep_ = 0;
};

enum class ArithKind { add, sub, mul, div };

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithKind kind);
FieldElement apply_aut(const FieldElement& a, long long k);
FieldElement apply_der(const FieldElement& a);
FieldElement conjugate(const FieldElement& a, const FieldElement& c);

// F_q-rank of the m x n coordinate expansion.
std::size_t rank_over_base(const FieldCtx& ctx, std::span<const Elem> v);
std::size_t rank_over_base(const std::vector<FieldElement>& v);

// count F_q-linearly independent elements; deterministic in seed.
std::vector<Elem> sample_independent(const FieldCtx& ctx, std::size_t count, std::uint64_t seed);

void check_same(const FieldCtx* a, const FieldCtx* b);

}  // namespace skewknh
