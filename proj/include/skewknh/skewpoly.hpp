#pragma once

#include <climits>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewknh/galois.hpp"

namespace skewknh {

// Degree of the zero polynomial / zero vector.
inline constexpr int kDegNegInf = INT_MIN;

using Coeffs = std::vector<Elem>;

enum class MulStrategy { schoolbook, karatsuba, automatic };
enum class Side { right, left };

// Tuning knobs. Karatsuba falls back to schoolbook below this many
// coefficients; fast right division falls back below div_threshold.
struct PolyTuning {
  static std::size_t karatsuba_threshold;
  static std::size_t div_threshold;
};

// Raw coefficient-vector kernels. All take ascending coefficients and return
// trimmed results. Contexts are not checked here.
namespace sp {

void trim(Coeffs& a);
int degree(const Coeffs& a);
Coeffs add(const FieldCtx& f, const Coeffs& a, const Coeffs& b);
Coeffs sub(const FieldCtx& f, const Coeffs& a, const Coeffs& b);
// dst -= c * src * x^shift (c multiplies from the left)
void sub_scaled(const FieldCtx& f, Coeffs& dst, Elem c, const Coeffs& src, std::size_t shift = 0);
Coeffs scale_left(const FieldCtx& f, Elem c, const Coeffs& a);
// sigma^k applied to every coefficient
Coeffs twist(const FieldCtx& f, const Coeffs& a, long long k);
// (x - c) * a
Coeffs mul_linear(const FieldCtx& f, Elem c, const Coeffs& a);
Coeffs mul_schoolbook(const FieldCtx& f, const Coeffs& a, const Coeffs& b);
Coeffs mul_karatsuba(const FieldCtx& f, const Coeffs& a, const Coeffs& b);
Coeffs mul(const FieldCtx& f, const Coeffs& a, const Coeffs& b,
           MulStrategy s = MulStrategy::automatic);
// f = q g + r; schoolbook skips the fast (multiplication based) division
void divrem_right(const FieldCtx& f, const Coeffs& a, const Coeffs& g, Coeffs* q, Coeffs* r,
                  MulStrategy s = MulStrategy::automatic);
// f = g q + r
void divrem_left(const FieldCtx& f, const Coeffs& a, const Coeffs& g, Coeffs* q, Coeffs* r);
Coeffs mod_right(const FieldCtx& f, const Coeffs& a, const Coeffs& g, MulStrategy s = MulStrategy::automatic);
Coeffs monic(const FieldCtx& f, const Coeffs& a);
Coeffs lclm(const FieldCtx& f, const Coeffs& a, const Coeffs& b);

Elem op_eval(const FieldCtx& f, const Coeffs& a, Elem b, Elem param);
Elem rem_eval(const FieldCtx& f, const Coeffs& a, Elem b);

// lclm of (x - c) over the given points, by successive left factors.
Coeffs minpoly_rem_seq(const FieldCtx& f, std::span<const Elem> pts);
Coeffs minpoly_rem_fast(const FieldCtx& f, std::span<const Elem> pts);

}  // namespace sp

class SkewPoly {
 public:
  SkewPoly() = default;
  explicit SkewPoly(FieldPtr ctx) : ctx_(std::move(ctx)) {}
  SkewPoly(FieldPtr ctx, Coeffs c);

  static SkewPoly constant(FieldPtr ctx, Elem c) { return SkewPoly(std::move(ctx), Coeffs{c}); }
  static SkewPoly monomial(FieldPtr ctx, Elem c, std::size_t k);
  static SkewPoly x(FieldPtr ctx) { return monomial(std::move(ctx), 1, 1); }
  // x - b
  static SkewPoly linear(FieldPtr ctx, Elem b);

  const FieldPtr& ctx() const { return ctx_; }
  const FieldCtx& field() const { return *ctx_; }
  const Coeffs& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  int degree() const { return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  bool operator==(const SkewPoly& o) const;
  bool operator!=(const SkewPoly& o) const { return !(*this == o); }

 private:
  FieldPtr ctx_;
  Coeffs c_;
};

SkewPoly sp_add(const SkewPoly& f, const SkewPoly& g);
SkewPoly sp_sub(const SkewPoly& f, const SkewPoly& g);
SkewPoly sp_mul(const SkewPoly& f, const SkewPoly& g, MulStrategy s = MulStrategy::automatic);
SkewPoly sp_scale(Elem c, const SkewPoly& f);

struct DivResult {
  SkewPoly quotient;
  SkewPoly remainder;
};
DivResult sp_divide(const SkewPoly& f, const SkewPoly& g, Side side);
SkewPoly sp_mod_r(const SkewPoly& f, const SkewPoly& g);
SkewPoly sp_monic(const SkewPoly& f);
SkewPoly sp_lclm(const SkewPoly& f, const SkewPoly& g);

Elem op_eval(const SkewPoly& f, Elem b, Elem a);
Elem rem_eval(const SkewPoly& f, Elem b);
FieldElement op_eval(const SkewPoly& f, const FieldElement& b, const FieldElement& a);
FieldElement rem_eval(const SkewPoly& f, const FieldElement& b);

SkewPoly minpoly_op(const FieldPtr& ctx, std::span<const Elem> points, std::span<const Elem> params);
SkewPoly minpoly_rem(const FieldPtr& ctx, std::span<const Elem> points);

// rem_eval(f, D_a(b) b^-1) * b == op_eval(f, b, a); requires delta = 0.
bool eval_connection_check(const SkewPoly& f, Elem b, Elem a);

// Remainder-evaluation minimal polynomials over a binary range tree of
// leaves, each leaf carrying a (possibly empty) set of roots. A node
// [lo, hi] splits at mid = (lo + hi) / 2 into [lo, mid] and [mid+1, hi].
// Internal nodes are merged as lclm(M_L, M_R) = M' * M_L, where M' is the
// minimal polynomial of the conjugated images of the right roots under M_L.
// That one is built down the right subtree: for X = X1 u X2 and a prefix P,
// minpoly(img_P(X)) = minpoly(img_{N1 P}(X2)) * N1 with N1 = minpoly(img_P(X1)),
// and P only enters through P mod_r M_X.
class MinpolyTree {
 public:
  MinpolyTree(const FieldCtx& f, std::vector<std::vector<Elem>> leaf_roots);

  std::size_t leaves() const { return leaves_.size(); }
  const Coeffs& poly(std::size_t lo, std::size_t hi) const;
  const Coeffs& root() const { return nodes_[0].poly; }
  bool has(std::size_t lo, std::size_t hi) const { return index_.count({lo, hi}) > 0; }

  // Roots per node below which polynomials are built by successive factors.
  static std::size_t leaf_size;

 private:
  struct Node {
    std::size_t lo, hi;
    int left = -1, right = -1;
    std::size_t nroots = 0;
    Coeffs poly;
  };
  int build(std::size_t lo, std::size_t hi);
  void roots_of(const Node& n, std::vector<Elem>& out) const;
  // minimal polynomial of {c^{r(c)} : c root of node, r(c) != 0}, r = P mod_r M_node.
  Coeffs images_minpoly(int node, Coeffs r) const;

  const FieldCtx* f_;
  std::vector<std::vector<Elem>> leaves_;
  std::vector<Node> nodes_;
  std::map<std::pair<std::size_t, std::size_t>, int> index_;
};

}  // namespace skewknh
