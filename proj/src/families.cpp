#include "skewknh/families.hpp"

#include <algorithm>

#include "skewknh/errors.hpp"

namespace skewknh {

namespace {

std::size_t check_points(const PointSet& pts, std::size_t s) {
  if (pts.empty()) return s;
  const std::size_t w = pts.front().size();
  if (w < 1) throw LengthMismatch("interpolation points need at least one coordinate");
  for (const auto& p : pts)
    if (p.size() != w) throw LengthMismatch("interpolation points of unequal length");
  return w - 1;
}

// v_0 = start, v_{k+1} = sigma(v_k) t + delta(v_k), for k < count.
void orbit(const FieldCtx& f, Elem start, Elem t, std::size_t count, std::vector<Elem>& out) {
  out.resize(count);
  Elem v = start;
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = v;
    Elem nv = f.mul(f.aut(v, 1), t);
    if (f.has_derivation()) nv = f.add(nv, f.der(v));
    v = nv;
  }
}

std::size_t max_len(const RawMat& rows, std::size_t col) {
  std::size_t len = 0;
  for (const auto& r : rows) len = std::max(len, r[col].size());
  return len;
}

Elem dot(const FieldCtx& f, const Coeffs& c, const std::vector<Elem>& v) {
  Elem acc = 0;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) acc = f.add(acc, f.mul(c[k], v[k]));
  return acc;
}

}  // namespace

OpMapFamily::OpMapFamily(FieldPtr ctx, PointSet points, std::vector<Elem> params, std::size_t s)
    : ctx_(std::move(ctx)), pts_(std::move(points)), a_(std::move(params)) {
  if (a_.size() != pts_.size()) throw LengthMismatch("one evaluation parameter per point required");
  s_ = check_points(pts_, s);
}

Elem OpMapFamily::eval(std::size_t i, const RawRow& q) const {
  const FieldCtx& f = *ctx_;
  Elem acc = 0;
  for (std::size_t j = 0; j < q.size(); ++j) acc = f.add(acc, sp::op_eval(f, q[j], pts_[i][j], a_[i]));
  return acc;
}

Elem OpMapFamily::eval_shifted(std::size_t i, const RawRow&, Elem e) const {
  const FieldCtx& f = *ctx_;
  Elem r = f.mul(f.aut(e, 1), a_[i]);
  return f.has_derivation() ? f.add(r, f.der(e)) : r;
}

void OpMapFamily::eval_rows(std::size_t i, const RawMat& rows, std::vector<Elem>& out) const {
  const FieldCtx& f = *ctx_;
  thread_local std::vector<Elem> pw;
  out.assign(rows.size(), 0);
  for (std::size_t j = 0; j <= s_; ++j) {
    const std::size_t len = max_len(rows, j);
    if (len == 0 || pts_[i][j] == 0) continue;
    orbit(f, pts_[i][j], a_[i], len, pw);
    for (std::size_t r = 0; r < rows.size(); ++r) out[r] = f.add(out[r], dot(f, rows[r][j], pw));
  }
}

std::vector<Elem> OpMapFamily::leaf_roots(std::size_t i, std::size_t col) const {
  const Elem b = pts_[i][col];
  if (b == 0) return {};
  return {ctx_->conj(a_[i], b)};
}

RemMapFamily::RemMapFamily(FieldPtr ctx, PointSet points, std::size_t s) : ctx_(std::move(ctx)), pts_(std::move(points)) {
  s_ = check_points(pts_, s);
  conj_ = pts_;
  for (auto& row : conj_)
    for (std::size_t j = 1; j < row.size(); ++j)
      if (row[j] != 0) row[j] = ctx_->conj(row[0], row[j]);
}

Elem RemMapFamily::eval(std::size_t i, const RawRow& q) const {
  const FieldCtx& f = *ctx_;
  Elem acc = sp::rem_eval(f, q[0], pts_[i][0]);
  for (std::size_t j = 1; j < q.size(); ++j) {
    if (pts_[i][j] == 0) continue;
    acc = f.add(acc, f.mul(sp::rem_eval(f, q[j], conj_[i][j]), pts_[i][j]));
  }
  return acc;
}

Elem RemMapFamily::eval_shifted(std::size_t i, const RawRow&, Elem e) const {
  const FieldCtx& f = *ctx_;
  Elem r = f.mul(f.aut(e, 1), pts_[i][0]);
  return f.has_derivation() ? f.add(r, f.der(e)) : r;
}

void RemMapFamily::eval_rows(std::size_t i, const RawMat& rows, std::vector<Elem>& out) const {
  const FieldCtx& f = *ctx_;
  thread_local std::vector<Elem> pw;
  out.assign(rows.size(), 0);
  for (std::size_t j = 0; j <= s_; ++j) {
    const std::size_t len = max_len(rows, j);
    if (len == 0 || (j > 0 && pts_[i][j] == 0)) continue;
    orbit(f, 1, conj_[i][j], len, pw);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Elem v = dot(f, rows[r][j], pw);
      out[r] = f.add(out[r], j == 0 ? v : f.mul(v, pts_[i][j]));
    }
  }
}

std::vector<Elem> RemMapFamily::leaf_roots(std::size_t i, std::size_t col) const {
  if (col > 0 && pts_[i][col] == 0) return {};
  return {conj_[i][col]};
}

}  // namespace skewknh
