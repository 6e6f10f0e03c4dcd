#include "skewknh/skewlinalg.hpp"

#include <algorithm>

#include "skewknh/errors.hpp"

namespace skewknh {

SkewPolyVec::SkewPolyVec(std::vector<SkewPoly> entries) : e_(std::move(entries)) {
  if (e_.empty()) throw LengthMismatch("skew vector must have at least one entry");
  for (const auto& p : e_) check_same(e_.front().ctx().get(), p.ctx().get());
}

SkewPolyVec::SkewPolyVec(const FieldPtr& ctx, const RawRow& raw) {
  if (raw.empty()) throw LengthMismatch("skew vector must have at least one entry");
  e_.reserve(raw.size());
  for (const auto& c : raw) e_.emplace_back(ctx, c);
}

SkewPolyVec SkewPolyVec::zero(const FieldPtr& ctx, std::size_t len) { return SkewPolyVec(ctx, RawRow(len)); }

bool SkewPolyVec::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const SkewPoly& p) { return p.is_zero(); });
}

RawRow SkewPolyVec::raw() const {
  RawRow out;
  out.reserve(e_.size());
  for (const auto& p : e_) out.push_back(p.coeffs());
  return out;
}

SkewPolyMat::SkewPolyMat(std::vector<SkewPolyVec> rows) : r_(std::move(rows)) {
  for (const auto& r : r_) {
    if (r.size() != r_.front().size()) throw DimensionMismatch("ragged matrix");
    check_same(r_.front().ctx().get(), r.ctx().get());
  }
}

SkewPolyMat::SkewPolyMat(const FieldPtr& ctx, const RawMat& raw) {
  r_.reserve(raw.size());
  for (const auto& row : raw) r_.emplace_back(ctx, row);
  for (const auto& r : r_)
    if (r.size() != r_.front().size()) throw DimensionMismatch("ragged matrix");
}

SkewPolyMat SkewPolyMat::identity(const FieldPtr& ctx, std::size_t n) { return SkewPolyMat(ctx, raw::identity(n)); }

RawMat SkewPolyMat::raw() const {
  RawMat out;
  out.reserve(r_.size());
  for (const auto& r : r_) out.push_back(r.raw());
  return out;
}

namespace raw {

int w_degree(const RawRow& v, const WeightVec& w) {
  if (v.size() != w.size()) throw LengthMismatch("weight vector length differs from vector length");
  int best = kDegNegInf;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].empty()) best = std::max(best, static_cast<int>(v[j].size()) - 1 + w[j]);
  return best;
}

int w_pivot(const RawRow& v, const WeightVec& w) {
  int d = w_degree(v, w);
  if (d == kDegNegInf) throw ZeroVector("pivot of the zero vector");
  for (std::size_t j = v.size(); j-- > 0;)
    if (!v[j].empty() && static_cast<int>(v[j].size()) - 1 + w[j] == d) return static_cast<int>(j);
  return -1;
}

RawMat identity(std::size_t n) {
  RawMat m(n, RawRow(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Coeffs{1};
  return m;
}

RawMat mat_mul(const FieldCtx& f, const RawMat& a, const RawMat& b, MulStrategy s) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  RawMat out(a.size(), RawRow(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw DimensionMismatch("inner dimensions differ");
    for (std::size_t k = 0; k < cols; ++k) {
      Coeffs acc;
      for (std::size_t j = 0; j < inner; ++j) {
        if (a[i][j].empty() || b[j][k].empty()) continue;
        Coeffs prod = sp::mul(f, a[i][j], b[j][k], s);
        acc = acc.empty() ? std::move(prod) : sp::add(f, acc, prod);
      }
      out[i][k] = std::move(acc);
    }
  }
  return out;
}

RawMat mod_columns(const FieldCtx& f, const RawMat& a, const std::vector<const Coeffs*>& m, MulStrategy s) {
  RawMat out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].resize(a[i].size());
    for (std::size_t k = 0; k < a[i].size(); ++k) {
      if (m[k]->empty()) throw ZeroModulus("zero modulus in column reduction");
      out[i][k] = a[i][k].size() < m[k]->size() ? a[i][k] : sp::mod_right(f, a[i][k], *m[k], s);
    }
  }
  return out;
}

}  // namespace raw

int w_degree(const SkewPolyVec& v, const WeightVec& w) {
  if (v.size() != w.size()) throw LengthMismatch("weight vector length differs from vector length");
  int best = kDegNegInf;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) best = std::max(best, v[j].degree() + w[j]);
  return best;
}

int w_pivot(const SkewPolyVec& v, const WeightVec& w) {
  int d = w_degree(v, w);
  if (d == kDegNegInf) throw ZeroVector("pivot of the zero vector");
  for (std::size_t j = v.size(); j-- > 0;)
    if (!v[j].is_zero() && v[j].degree() + w[j] == d) return static_cast<int>(j);
  return -1;
}

bool is_weak_popov(const SkewPolyMat& m, const WeightVec& w) {
  int last = -1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m[i].is_zero()) return false;
    int p = w_pivot(m[i], w);
    if (p <= last) return false;
    last = p;
  }
  return true;
}

SkewPolyMat mat_mul(const SkewPolyMat& a, const SkewPolyMat& b) {
  if (a.rows() == 0 || b.rows() == 0) throw DimensionMismatch("empty matrix");
  if (a.cols() != b.rows()) throw DimensionMismatch("inner dimensions differ");
  check_same(a[0].ctx().get(), b[0].ctx().get());
  const auto& ctx = a[0].ctx();
  return SkewPolyMat(ctx, raw::mat_mul(*ctx, a.raw(), b.raw()));
}

SkewPolyVec vec_mod_r(const SkewPolyVec& v, const SkewPolyVec& m) {
  if (v.size() != m.size()) throw LengthMismatch("vector lengths differ");
  std::vector<SkewPoly> out;
  out.reserve(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (m[j].is_zero()) throw ZeroModulus("zero modulus entry");
    out.push_back(sp_mod_r(v[j], m[j]));
  }
  return SkewPolyVec(std::move(out));
}

SkewPolyVec vec_lclm(const SkewPolyVec& a, const SkewPolyVec& b) {
  if (a.size() != b.size()) throw LengthMismatch("vector lengths differ");
  std::vector<SkewPoly> out;
  out.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out.push_back(sp_lclm(a[j], b[j]));
  return SkewPolyVec(std::move(out));
}

}  // namespace skewknh
