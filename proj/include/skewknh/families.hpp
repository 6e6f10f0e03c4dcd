#pragma once

#include <vector>

#include "skewknh/knh.hpp"

namespace skewknh {

// points[i] = (p_{i,0}, ..., p_{i,s}); one row per functional.
using PointSet = std::vector<std::vector<Elem>>;

// E_i(Q) = sum_j Q_j(p_{i,j})_{a_i} (generalized operator evaluation).
class OpMapFamily final : public EvalMapFamily {
 public:
  // s is taken from the points; it must be given when there are none.
  OpMapFamily(FieldPtr ctx, PointSet points, std::vector<Elem> params, std::size_t s = 0);

  const FieldPtr& ctx() const override { return ctx_; }
  std::size_t n() const override { return pts_.size(); }
  std::size_t s() const override { return s_; }
  Elem eval(std::size_t i, const RawRow& q) const override;
  Elem eval_shifted(std::size_t i, const RawRow& q, Elem e) const override;
  void eval_rows(std::size_t i, const RawMat& rows, std::vector<Elem>& out) const override;
  std::vector<Elem> leaf_roots(std::size_t i, std::size_t col) const override;

  const PointSet& points() const { return pts_; }
  const std::vector<Elem>& params() const { return a_; }

 private:
  FieldPtr ctx_;
  PointSet pts_;
  std::vector<Elem> a_;
  std::size_t s_;
};

// E_i(Q) = Q_0(p_{i,0}) + sum_{j>=1, p_{i,j} != 0} Q_j(p_{i,0}^{p_{i,j}}) p_{i,j}
// (remainder evaluation).
class RemMapFamily final : public EvalMapFamily {
 public:
  RemMapFamily(FieldPtr ctx, PointSet points, std::size_t s = 0);

  const FieldPtr& ctx() const override { return ctx_; }
  std::size_t n() const override { return pts_.size(); }
  std::size_t s() const override { return s_; }
  Elem eval(std::size_t i, const RawRow& q) const override;
  Elem eval_shifted(std::size_t i, const RawRow& q, Elem e) const override;
  void eval_rows(std::size_t i, const RawMat& rows, std::vector<Elem>& out) const override;
  std::vector<Elem> leaf_roots(std::size_t i, std::size_t col) const override;

  const PointSet& points() const { return pts_; }

 private:
  FieldPtr ctx_;
  PointSet pts_;
  // conjugated evaluation points; column 0 holds p_{i,0}
  PointSet conj_;
  std::size_t s_;
};

}  // namespace skewknh
