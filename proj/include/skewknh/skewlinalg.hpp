#pragma once

#include <vector>

#include "skewknh/skewpoly.hpp"

namespace skewknh {

using WeightVec = std::vector<int>;

// Raw row / matrix forms used by the interpolation engine.
using RawRow = std::vector<Coeffs>;
using RawMat = std::vector<RawRow>;

class SkewPolyVec {
 public:
  SkewPolyVec() = default;
  explicit SkewPolyVec(std::vector<SkewPoly> entries);
  SkewPolyVec(const FieldPtr& ctx, const RawRow& raw);
  static SkewPolyVec zero(const FieldPtr& ctx, std::size_t len);

  std::size_t size() const { return e_.size(); }
  const SkewPoly& operator[](std::size_t i) const { return e_[i]; }
  const std::vector<SkewPoly>& entries() const { return e_; }
  const FieldPtr& ctx() const { return e_.front().ctx(); }
  bool is_zero() const;
  RawRow raw() const;

  bool operator==(const SkewPolyVec& o) const { return e_ == o.e_; }

 private:
  std::vector<SkewPoly> e_;
};

class SkewPolyMat {
 public:
  SkewPolyMat() = default;
  explicit SkewPolyMat(std::vector<SkewPolyVec> rows);
  SkewPolyMat(const FieldPtr& ctx, const RawMat& raw);
  static SkewPolyMat identity(const FieldPtr& ctx, std::size_t n);

  std::size_t rows() const { return r_.size(); }
  std::size_t cols() const { return r_.empty() ? 0 : r_.front().size(); }
  const SkewPolyVec& operator[](std::size_t i) const { return r_[i]; }
  const SkewPoly& at(std::size_t i, std::size_t j) const { return r_[i][j]; }
  const std::vector<SkewPolyVec>& row_list() const { return r_; }
  RawMat raw() const;

  bool operator==(const SkewPolyMat& o) const { return r_ == o.r_; }

 private:
  std::vector<SkewPolyVec> r_;
};

// max_j (deg v_j + w_j); kDegNegInf for the zero vector.
int w_degree(const SkewPolyVec& v, const WeightVec& w);
int w_pivot(const SkewPolyVec& v, const WeightVec& w);
bool is_weak_popov(const SkewPolyMat& m, const WeightVec& w);
SkewPolyMat mat_mul(const SkewPolyMat& a, const SkewPolyMat& b);
SkewPolyVec vec_mod_r(const SkewPolyVec& v, const SkewPolyVec& m);
SkewPolyVec vec_lclm(const SkewPolyVec& a, const SkewPolyVec& b);

namespace raw {

int w_degree(const RawRow& v, const WeightVec& w);
int w_pivot(const RawRow& v, const WeightVec& w);
RawMat identity(std::size_t n);
RawMat mat_mul(const FieldCtx& f, const RawMat& a, const RawMat& b, MulStrategy s = MulStrategy::automatic);
// every entry of column k reduced modulo m[k]
RawMat mod_columns(const FieldCtx& f, const RawMat& a, const std::vector<const Coeffs*>& m,
                   MulStrategy s = MulStrategy::automatic);

}  // namespace raw

}  // namespace skewknh
