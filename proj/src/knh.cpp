#include "skewknh/knh.hpp"

#include <algorithm>

#include "skewknh/errors.hpp"

namespace skewknh {

std::size_t TreeTuning::leaf_points = 8;

Elem EvalMapFamily::eval_shifted(std::size_t i, const RawRow& q, Elem) const {
  const FieldCtx& f = *ctx();
  RawRow xq(q.size());
  const Coeffs x{0, 1};
  for (std::size_t j = 0; j < q.size(); ++j) xq[j] = sp::mul(f, x, q[j], MulStrategy::schoolbook);
  return eval(i, xq);
}

void EvalMapFamily::eval_rows(std::size_t i, const RawMat& rows, std::vector<Elem>& out) const {
  out.resize(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) out[r] = eval(i, rows[r]);
}

SkewPolyVec EvalMapFamily::min_vector(std::size_t i, std::size_t j) const {
  std::vector<SkewPoly> cols;
  for (std::size_t c = 0; c <= s(); ++c) {
    std::vector<Elem> roots;
    for (std::size_t l = i; l <= j; ++l) {
      auto r = leaf_roots(l, c);
      roots.insert(roots.end(), r.begin(), r.end());
    }
    cols.push_back(minpoly_rem(ctx(), roots));
  }
  return SkewPolyVec(std::move(cols));
}

namespace {

// Point updates for i in [lo, hi] applied to `work`; `track` (if any)
// receives the same row operations.
void run_points(const EvalMapFamily& maps, std::size_t lo, std::size_t hi, RawMat& work, RawMat* track,
                std::vector<int>& d, std::size_t* updates) {
  const FieldCtx& f = *maps.ctx();
  const std::size_t rows = work.size();
  std::vector<Elem> delta;
  for (std::size_t i = lo; i <= hi; ++i) {
    maps.eval_rows(i, work, delta);
    int js = -1;
    for (std::size_t j = 0; j < rows; ++j)
      if (delta[j] != 0 && (js < 0 || d[j] < d[js])) js = static_cast<int>(j);
    if (js < 0) continue;
    if (updates) ++*updates;
    const Elem inv = f.inv(delta[js]);
    const Elem gamma = f.mul(maps.eval_shifted(i, work[js], delta[js]), inv);
    for (std::size_t j = 0; j < rows; ++j) {
      if (static_cast<int>(j) == js || delta[j] == 0) continue;
      const Elem c = f.mul(delta[j], inv);
      for (std::size_t k = 0; k < work[j].size(); ++k) sp::sub_scaled(f, work[j][k], c, work[js][k]);
      if (track)
        for (std::size_t k = 0; k < (*track)[j].size(); ++k) sp::sub_scaled(f, (*track)[j][k], c, (*track)[js][k]);
    }
    for (auto& e : work[js]) e = sp::mul_linear(f, gamma, e);
    if (track)
      for (auto& e : (*track)[js]) e = sp::mul_linear(f, gamma, e);
    ++d[js];
  }
}

InterpStep tree_rec(const EvalMapFamily& maps, std::size_t i1, std::size_t i2, const RawMat& b,
                    const std::vector<int>& d, const MinVectorTree& mins, MulStrategy mul, std::size_t* updates) {
  const FieldCtx& f = *maps.ctx();
  const std::size_t rows = b.size();
  if (i2 - i1 + 1 < std::max<std::size_t>(TreeTuning::leaf_points, 2)) {
    InterpStep out{raw::identity(rows), d};
    RawMat work = b;
    run_points(maps, i1, i2, work, &out.T, out.d, updates);
    return out;
  }
  const std::size_t z = (i1 + i2) / 2;
  RawMat b1 = raw::mod_columns(f, b, mins.columns(i1, z), mul);
  InterpStep s1 = tree_rec(maps, i1, z, b1, d, mins, mul, updates);
  const auto right = mins.columns(z + 1, i2);
  RawMat b2 = raw::mod_columns(f, raw::mat_mul(f, s1.T, raw::mod_columns(f, b, right, mul), mul), right, mul);
  InterpStep s2 = tree_rec(maps, z + 1, i2, b2, s1.d, mins, mul, updates);
  return {raw::mat_mul(f, s2.T, s1.T, mul), std::move(s2.d)};
}

}  // namespace

SkewPolyMat knh_iterative(const EvalMapFamily& maps, const WeightVec& w, KnhStats* stats) {
  const std::size_t rows = maps.s() + 1;
  if (w.size() != rows) throw LengthMismatch("weight vector must have s+1 entries");
  RawMat b = raw::identity(rows);
  std::vector<int> d(w.begin(), w.end());
  std::size_t updates = 0;
  if (maps.n() > 0) run_points(maps, 0, maps.n() - 1, b, nullptr, d, &updates);
  if (stats) *stats = KnhStats{d, updates};
  return SkewPolyMat(maps.ctx(), b);
}

InterpStep interpolate_point(const EvalMapFamily& maps, std::size_t i, const RawMat& b, const std::vector<int>& d) {
  InterpStep out{raw::identity(b.size()), d};
  RawMat work = b;
  run_points(maps, i, i, work, &out.T, out.d, nullptr);
  return out;
}

MinVectorTree::MinVectorTree(const EvalMapFamily& maps, std::size_t lo, std::size_t hi)
    : ctx_(maps.ctx()), lo_(lo), hi_(hi) {
  if (hi < lo || hi >= maps.n()) throw LengthMismatch("range outside the family");
  for (std::size_t c = 0; c <= maps.s(); ++c) {
    std::vector<std::vector<Elem>> leaves(hi - lo + 1);
    for (std::size_t l = lo; l <= hi; ++l) leaves[l - lo] = maps.leaf_roots(l, c);
    cols_.push_back(std::make_unique<MinpolyTree>(*ctx_, std::move(leaves)));
  }
}

bool MinVectorTree::has(std::size_t i, std::size_t j) const {
  return i >= lo_ && j <= hi_ && i <= j && cols_.front()->has(i - lo_, j - lo_);
}

std::vector<const Coeffs*> MinVectorTree::columns(std::size_t i, std::size_t j) const {
  std::vector<const Coeffs*> out;
  for (const auto& t : cols_) out.push_back(&t->poly(i - lo_, j - lo_));
  return out;
}

SkewPolyVec MinVectorTree::vec(std::size_t i, std::size_t j) const {
  std::vector<SkewPoly> out;
  for (const auto* c : columns(i, j)) out.emplace_back(ctx_, *c);
  return SkewPolyVec(std::move(out));
}

MinVectorTree precompute_min_vectors(const EvalMapFamily& maps, std::size_t lo, std::size_t hi) {
  return MinVectorTree(maps, lo, hi);
}

InterpStep interpolate_tree(const EvalMapFamily& maps, std::size_t i1, std::size_t i2, const RawMat& b,
                            const std::vector<int>& d, const MinVectorTree& mins, MulStrategy mul) {
  if (i1 < mins.lo() || i2 > mins.hi() || i2 < i1) throw LengthMismatch("range outside the precomputed tree");
  return tree_rec(maps, i1, i2, b, d, mins, mul, nullptr);
}

SkewPolyMat knh_dac(const EvalMapFamily& maps, const WeightVec& w, KnhStats* stats, MulStrategy mul) {
  const std::size_t rows = maps.s() + 1;
  if (w.size() != rows) throw LengthMismatch("weight vector must have s+1 entries");
  std::vector<int> d(w.begin(), w.end());
  if (maps.n() == 0) {
    if (stats) *stats = KnhStats{d, 0};
    return SkewPolyMat::identity(maps.ctx(), rows);
  }
  MinVectorTree mins(maps, 0, maps.n() - 1);
  std::size_t updates = 0;
  InterpStep st = tree_rec(maps, 0, maps.n() - 1, raw::identity(rows), d, mins, mul, &updates);
  if (stats) *stats = KnhStats{st.d, updates};
  return SkewPolyMat(maps.ctx(), st.T);
}

bool kernel_check(const SkewPolyMat& b, const EvalMapFamily& maps) {
  for (std::size_t r = 0; r < b.rows(); ++r) {
    RawRow row = b[r].raw();
    for (std::size_t i = 0; i < maps.n(); ++i)
      if (maps.eval(i, row) != 0) return false;
  }
  return true;
}

namespace {

// Images of the F_q-basis {z^u x^t e_j : t < bound} under every functional,
// as an (n m) x ((s+1) bound m) matrix over F_q. Column index (j*bound + t)*m + u.
FqMatrix functional_matrix(const EvalMapFamily& maps, int bound) {
  const FieldCtx& f = *maps.ctx();
  const std::size_t m = f.m(), cols = maps.s() + 1;
  const std::size_t nunk = cols * static_cast<std::size_t>(bound) * m;
  if (nunk > (1u << 14)) throw InstanceTooLarge("brute-force instance exceeds 2^14 base-field unknowns");
  FqMatrix a(maps.n() * m, nunk);
  std::vector<std::uint32_t> unit(m, 0);
  for (std::size_t j = 0; j < cols; ++j)
    for (int t = 0; t < bound; ++t)
      for (std::size_t u = 0; u < m; ++u) {
        std::fill(unit.begin(), unit.end(), 0);
        unit[u] = 1;
        RawRow q(cols);
        q[j].assign(t + 1, 0);
        q[j][t] = f.from_coords(unit);
        const std::size_t col = (j * bound + t) * m + u;
        for (std::size_t i = 0; i < maps.n(); ++i) {
          auto c = f.coords(maps.eval(i, q));
          for (std::size_t v = 0; v < m; ++v) a.at(i * m + v, col) = c[v];
        }
      }
  return a;
}

RawRow vector_from_unknowns(const FieldCtx& f, std::size_t cols, int bound, const std::vector<std::uint32_t>& x) {
  const std::size_t m = f.m();
  RawRow q(cols);
  std::vector<std::uint32_t> c(m);
  for (std::size_t j = 0; j < cols; ++j) {
    q[j].assign(bound, 0);
    for (int t = 0; t < bound; ++t) {
      for (std::size_t u = 0; u < m; ++u) c[u] = x[(j * bound + t) * m + u];
      q[j][t] = f.from_coords(c);
    }
    sp::trim(q[j]);
  }
  return q;
}

// Dimension of the kernel restricted to entries with deg Q_j <= caps[j]
// (cap < 0 forces the entry to zero).
std::size_t restricted_kernel_dim(const BaseField& fq, const FqMatrix& a, std::size_t m, int bound,
                                  const std::vector<int>& caps) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < caps.size(); ++j)
    for (int t = 0; t <= std::min(caps[j], bound - 1); ++t)
      for (std::size_t u = 0; u < m; ++u) keep.push_back((j * bound + t) * m + u);
  if (keep.empty()) return 0;
  FqMatrix sub(a.rows(), keep.size());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < keep.size(); ++k) sub.at(r, k) = a.at(r, keep[k]);
  return keep.size() - sub.rank(fq);
}

}  // namespace

bool basis_contains_kernel_check(const SkewPolyMat& b, const EvalMapFamily& maps, const WeightVec& w,
                                 int degree_bound) {
  const FieldCtx& f = *maps.ctx();
  const std::size_t cols = maps.s() + 1;
  if (b.rows() != cols || b.cols() != cols || w.size() != cols) throw DimensionMismatch("basis must be square");
  FqMatrix a = functional_matrix(maps, degree_bound);
  if (!is_weak_popov(b, w) || !kernel_check(b, maps)) return false;
  RawMat rows = b.raw();
  std::vector<int> by_pivot(cols, -1), row_deg(cols);
  for (std::size_t r = 0; r < cols; ++r) {
    by_pivot[raw::w_pivot(rows[r], w)] = static_cast<int>(r);
    row_deg[r] = raw::w_degree(rows[r], w);
  }
  for (const auto& x : a.kernel(f.fq())) {
    RawRow v = vector_from_unknowns(f, cols, degree_bound, x);
    while (true) {
      const int dv = raw::w_degree(v, w);
      if (dv == kDegNegInf) break;
      const int p = raw::w_pivot(v, w);
      const int r = by_pivot[p];
      const int shift = dv - row_deg[r];
      if (shift < 0) return false;
      const Elem lead = rows[r][p].back();
      const Elem c = f.div(v[p].back(), f.aut(lead, shift));
      Coeffs mono(shift + 1, 0);
      mono[shift] = c;
      for (std::size_t j = 0; j < cols; ++j) {
        if (rows[r][j].empty()) continue;
        v[j] = sp::sub(f, v[j], sp::mul(f, mono, rows[r][j], MulStrategy::schoolbook));
      }
    }
  }
  return true;
}

std::vector<int> brute_force_min_degrees(const EvalMapFamily& maps, const WeightVec& w, int degree_bound) {
  const FieldCtx& f = *maps.ctx();
  const std::size_t cols = maps.s() + 1;
  if (w.size() != cols) throw LengthMismatch("weight vector must have s+1 entries");
  FqMatrix a = functional_matrix(maps, degree_bound);
  std::vector<int> out(cols, kDegNegInf);
  for (std::size_t j = 0; j < cols; ++j) {
    for (int dd = w[j]; dd < degree_bound + w[j]; ++dd) {
      // kernel vectors with deg_w <= dd, strictly below dd past index j
      std::vector<int> caps(cols), caps_lower(cols);
      for (std::size_t t = 0; t < cols; ++t) {
        caps[t] = dd - w[t] - (t > j ? 1 : 0);
        caps_lower[t] = caps[t] - (t == j ? 1 : 0);
      }
      if (restricted_kernel_dim(f.fq(), a, f.m(), degree_bound, caps) >
          restricted_kernel_dim(f.fq(), a, f.m(), degree_bound, caps_lower)) {
        out[j] = dd;
        break;
      }
    }
  }
  return out;
}

}  // namespace skewknh
