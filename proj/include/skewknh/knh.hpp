#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "skewknh/skewlinalg.hpp"

namespace skewknh {

// An ordered family of F_q-linear functionals E_0..E_{n-1} on skew vectors
// of length s+1. Minimal vectors are described through their roots: column
// c of M_{[i,j]} is the remainder-evaluation minimal polynomial of the union
// of leaf_roots(l, c) over l in [i, j].
class EvalMapFamily {
 public:
  virtual ~EvalMapFamily() = default;

  virtual const FieldPtr& ctx() const = 0;
  virtual std::size_t n() const = 0;
  virtual std::size_t s() const = 0;

  virtual Elem eval(std::size_t i, const RawRow& q) const = 0;
  // E_i(x Q), given e = E_i(Q). Default evaluates x Q directly.
  virtual Elem eval_shifted(std::size_t i, const RawRow& q, Elem e) const;
  // out[r] = E_i(rows[r]).
  virtual void eval_rows(std::size_t i, const RawMat& rows, std::vector<Elem>& out) const;
  virtual std::vector<Elem> leaf_roots(std::size_t i, std::size_t col) const = 0;

  Elem eval(std::size_t i, const SkewPolyVec& q) const { return eval(i, q.raw()); }
  // Direct construction of M_{[i,j]}, without the tree.
  SkewPolyVec min_vector(std::size_t i, std::size_t j) const;
};

struct KnhStats {
  std::vector<int> degrees;
  // points with at least one nonzero discrepancy
  std::size_t updates = 0;
};

SkewPolyMat knh_iterative(const EvalMapFamily& maps, const WeightVec& w, KnhStats* stats = nullptr);

struct InterpStep {
  RawMat T;
  std::vector<int> d;
};

// One point update: T B annihilates E_i. T is the identity when every
// discrepancy vanishes.
InterpStep interpolate_point(const EvalMapFamily& maps, std::size_t i, const RawMat& b, const std::vector<int>& d);

// Minimal vectors for every node of the binary range tree over [lo, hi]
// (node [a, b] splits at (a + b) / 2).
class MinVectorTree {
 public:
  MinVectorTree(const EvalMapFamily& maps, std::size_t lo, std::size_t hi);

  std::size_t lo() const { return lo_; }
  std::size_t hi() const { return hi_; }
  bool has(std::size_t i, std::size_t j) const;
  // column moduli of M_{[i,j]}
  std::vector<const Coeffs*> columns(std::size_t i, std::size_t j) const;
  SkewPolyVec vec(std::size_t i, std::size_t j) const;

 private:
  FieldPtr ctx_;
  std::size_t lo_, hi_;
  std::vector<std::unique_ptr<MinpolyTree>> cols_;
};

MinVectorTree precompute_min_vectors(const EvalMapFamily& maps, std::size_t lo, std::size_t hi);

// Ranges with fewer points than this run the point updates directly.
struct TreeTuning {
  static std::size_t leaf_points;
};

InterpStep interpolate_tree(const EvalMapFamily& maps, std::size_t i1, std::size_t i2, const RawMat& b,
                            const std::vector<int>& d, const MinVectorTree& mins,
                            MulStrategy mul = MulStrategy::automatic);

// Precompute plus tree over all points, starting from the identity. `mul`
// selects the product and division kernels of the tree.
SkewPolyMat knh_dac(const EvalMapFamily& maps, const WeightVec& w, KnhStats* stats = nullptr,
                    MulStrategy mul = MulStrategy::automatic);

// True iff every row of b is annihilated by all functionals.
bool kernel_check(const SkewPolyMat& b, const EvalMapFamily& maps);

// Brute force over vectors with entries of degree < degree_bound: true iff
// the F_q-kernel of all functionals lies in the row module of b (b in
// w-ordered weak Popov form).
bool basis_contains_kernel_check(const SkewPolyMat& b, const EvalMapFamily& maps, const WeightVec& w,
                                 int degree_bound);

// For each pivot index j, the least w-degree of a kernel vector with pivot j
// and entries of degree < degree_bound (kDegNegInf when there is none).
std::vector<int> brute_force_min_degrees(const EvalMapFamily& maps, const WeightVec& w, int degree_bound);

}  // namespace skewknh
