#include "skewknh/skewpoly.hpp"

#include <algorithm>

namespace skewknh {

std::size_t PolyTuning::karatsuba_threshold = 128;
std::size_t PolyTuning::div_threshold = 128;

namespace sp {

namespace {

// sigma^k(b) for k in [0, count), cached as whole coefficient vectors.
std::vector<Coeffs> twists(const FieldCtx& f, const Elem* b, std::size_t nb, std::size_t count) {
  std::vector<Coeffs> tw(count);
  tw[0].assign(b, b + nb);
  for (std::size_t k = 1; k < count; ++k) {
    tw[k].resize(nb);
    for (std::size_t j = 0; j < nb; ++j) tw[k][j] = f.aut(tw[k - 1][j], 1);
  }
  return tw;
}

void unpack(const FieldCtx& f, const Elem* a, std::size_t n, std::uint32_t* out) {
  const std::uint32_t m = f.m();
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint32_t u = 0; u < m; ++u) out[u * n + i] = f.coord(a[i], u);
}

// Slot-major accumulators: acc[d * len + k] holds z^d of coefficient k.
struct LazyBuf {
  std::vector<std::uint64_t> acc;
  std::size_t len = 0, w = 0;
  LazyBuf(const FieldCtx& f, std::size_t n) : acc((2 * f.m() - 1) * n, 0), len(n), w(2 * f.m() - 1) {}
  Elem take(const FieldCtx& f, std::size_t k) {
    std::uint64_t t[128];
    for (std::size_t d = 0; d < w; ++d) t[d] = acc[d * len + k];
    return f.lazy_reduce(t);
  }
};

// acc[k + j] += c * B[j] in the slot layout; C holds the coordinates of c,
// B the coordinate-major unpacking of nb coefficients.
void lazy_axpy(std::uint32_t m, const std::uint32_t* C, const std::uint32_t* B, std::size_t nb,
               LazyBuf& buf, std::size_t k) {
  std::uint64_t* acc = buf.acc.data();
  const std::size_t len = buf.len;
  if (m == 2) {
    const std::uint64_t c0 = C[0], c1 = C[1];
    const std::uint32_t *b0 = B, *b1 = B + nb;
    std::uint64_t *s0 = acc + k, *s1 = acc + len + k, *s2 = acc + 2 * len + k;
    for (std::size_t j = 0; j < nb; ++j) {
      s0[j] += c0 * b0[j];
      s1[j] += c0 * b1[j] + c1 * b0[j];
      s2[j] += c1 * b1[j];
    }
    return;
  }
  for (std::uint32_t u = 0; u < m; ++u) {
    const std::uint64_t cu = C[u];
    if (!cu) continue;
    for (std::uint32_t v = 0; v < m; ++v) {
      const std::uint32_t* bv = B + v * nb;
      std::uint64_t* sl = acc + (u + v) * len + k;
      for (std::size_t j = 0; j < nb; ++j) sl[j] += cu * bv[j];
    }
  }
}

void school_lazy(const FieldCtx& f, const Elem* a, std::size_t na, const Elem* b, std::size_t nb,
                 Elem* out) {
  const std::uint32_t m = f.m();
  const std::size_t ord = std::min<std::size_t>(f.sigma_order(), na);
  std::vector<std::uint32_t> bt(ord * m * nb);
  Coeffs cur(b, b + nb);
  for (std::size_t k = 0; k < ord; ++k) {
    if (k > 0)
      for (auto& e : cur) e = f.aut(e, 1);
    unpack(f, cur.data(), nb, bt.data() + k * m * nb);
  }
  LazyBuf buf(f, na + nb - 1);
  std::uint32_t c[64];
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t u = 0; u < m; ++u) c[u] = f.coord(a[i], u);
    lazy_axpy(m, c, bt.data() + (i % f.sigma_order()) * m * nb, nb, buf, i);
  }
  for (std::size_t k = 0; k < buf.len; ++k) out[k] = f.add(out[k], buf.take(f, k));
}

// out[i+j] += a_i sigma^i(b_j); delta = 0.
void school_acc(const FieldCtx& f, const Elem* a, std::size_t na, const Elem* b, std::size_t nb,
                Elem* out) {
  if (na == 0 || nb == 0) return;
  if (f.lazy() && na * nb >= 16) {
    school_lazy(f, a, na, b, nb, out);
    return;
  }
  const std::size_t ord = f.sigma_order();
  auto tw = twists(f, b, nb, std::min<std::size_t>(ord, na));
  for (std::size_t i = 0; i < na; ++i) {
    const Elem ai = a[i];
    if (ai == 0) continue;
    const Elem* t = tw[i % ord].data();
    Elem* o = out + i;
    for (std::size_t j = 0; j < nb; ++j) o[j] = f.add(o[j], f.mul(ai, t[j]));
  }
}

void kara_acc(const FieldCtx& f, const Elem* a, std::size_t na, const Elem* b, std::size_t nb,
              Elem* out) {
  if (na == 0 || nb == 0) return;
  const std::size_t ord = f.sigma_order();
  const std::size_t n = std::max(na, nb);
  const std::size_t h = (n / 2) / ord * ord;
  if (std::min(na, nb) < PolyTuning::karatsuba_threshold || h == 0) {
    school_acc(f, a, na, b, nb, out);
    return;
  }
  // x^h is central since sigma^h = id, so the halves commute with it.
  if (nb <= h) {
    kara_acc(f, a, std::min(na, h), b, nb, out);
    if (na > h) kara_acc(f, a + h, na - h, b, nb, out + h);
    return;
  }
  if (na <= h) {
    kara_acc(f, a, na, b, h, out);
    kara_acc(f, a, na, b + h, nb - h, out + h);
    return;
  }
  const std::size_t na1 = na - h, nb1 = nb - h;
  Coeffs p0(2 * h - 1, 0), p2(na1 + nb1 - 1, 0);
  kara_acc(f, a, h, b, h, p0.data());
  kara_acc(f, a + h, na1, b + h, nb1, p2.data());
  const std::size_t sa = std::max(h, na1), sb = std::max(h, nb1);
  Coeffs as(a, a + h), bs(b, b + h);
  as.resize(sa, 0);
  bs.resize(sb, 0);
  for (std::size_t i = 0; i < na1; ++i) as[i] = f.add(as[i], a[h + i]);
  for (std::size_t i = 0; i < nb1; ++i) bs[i] = f.add(bs[i], b[h + i]);
  Coeffs p1(sa + sb - 1, 0);
  kara_acc(f, as.data(), sa, bs.data(), sb, p1.data());
  for (std::size_t i = 0; i < p0.size(); ++i) {
    out[i] = f.add(out[i], p0[i]);
    p1[i] = f.sub(p1[i], p0[i]);
  }
  for (std::size_t i = 0; i < p2.size(); ++i) {
    out[2 * h + i] = f.add(out[2 * h + i], p2[i]);
    p1[i] = f.sub(p1[i], p2[i]);
  }
  for (std::size_t i = 0; i < p1.size(); ++i) out[h + i] = f.add(out[h + i], p1[i]);
}

// Quotient of the monic-divisor division on the top coefficients; f is
// reduced in place to the remainder. delta = 0.
void rdiv_rec(const FieldCtx& f, Coeffs& a, const Coeffs& g, Coeffs& q, std::size_t qoff);

void rdiv_lazy(const FieldCtx& f, Coeffs& a, const Coeffs& g, Coeffs& q, std::size_t qoff) {
  const std::uint32_t m = f.m();
  const std::size_t ng = g.size(), k = a.size() - ng, ord = std::min<std::size_t>(f.sigma_order(), k + 1);
  const std::size_t nl = ng - 1;
  std::vector<std::uint32_t> gt(ord * m * nl);
  Coeffs cur(g.begin(), g.end() - 1);
  for (std::size_t t = 0; t < ord; ++t) {
    if (t > 0)
      for (auto& e : cur) e = f.aut(e, 1);
    unpack(f, cur.data(), nl, gt.data() + t * m * nl);
  }
  LazyBuf buf(f, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::uint32_t u = 0; u < m; ++u) buf.acc[u * buf.len + i] = f.coord(a[i], u);
  std::uint32_t c[64];
  for (std::size_t t = k + 1; t-- > 0;) {
    const Elem top = buf.take(f, t + nl);
    if (top == 0) continue;
    q[qoff + t] = f.add(q[qoff + t], top);
    const Elem nt = f.neg(top);
    for (std::uint32_t u = 0; u < m; ++u) c[u] = f.coord(nt, u);
    lazy_axpy(m, c, gt.data() + (t % f.sigma_order()) * m * nl, nl, buf, t);
  }
  a.resize(nl);
  for (std::size_t j = 0; j < nl; ++j) a[j] = buf.take(f, j);
  trim(a);
}

void rdiv_school(const FieldCtx& f, Coeffs& a, const Coeffs& g, Coeffs& q, std::size_t qoff) {
  trim(a);
  const std::size_t ng = g.size();
  if (a.size() < ng) return;
  const std::size_t k = a.size() - ng;
  if (f.lazy() && ng > 1 && (k + 1) * ng >= 16) {
    rdiv_lazy(f, a, g, q, qoff);
    return;
  }
  const std::size_t ord = f.sigma_order();
  auto tw = twists(f, g.data(), ng, std::min<std::size_t>(ord, k + 1));
  for (std::size_t t = k + 1; t-- > 0;) {
    const Elem c = a[t + ng - 1];
    if (c == 0) continue;
    q[qoff + t] = f.add(q[qoff + t], c);
    const Elem* gt = tw[t % ord].data();
    Elem* o = a.data() + t;
    for (std::size_t j = 0; j + 1 < ng; ++j) o[j] = f.sub(o[j], f.mul(c, gt[j]));
    a[t + ng - 1] = 0;
  }
  trim(a);
}

void rdiv_rec(const FieldCtx& f, Coeffs& a, const Coeffs& g, Coeffs& q, std::size_t qoff) {
  trim(a);
  const std::size_t d = g.size() - 1;
  if (a.size() <= d) return;
  const std::size_t k = a.size() - 1 - d;
  const std::size_t T = PolyTuning::div_threshold;
  if (k < T || d < T) {
    rdiv_school(f, a, g, q, qoff);
    return;
  }
  const std::size_t u = std::min(k / 2, d);
  const std::size_t h = k - u;
  // q = q_lo + q_hi x^h, and q_hi x^h g = q_hi sigma^h(g) x^h. The top u+1
  // coefficients of q_hi sigma^h(g) only see the top u+1 of sigma^h(g).
  Coeffs gh = twist(f, g, static_cast<long long>(h));
  Coeffs gt(gh.begin() + (d - u), gh.end());
  Coeffs ft(a.begin() + (h + d - u), a.begin() + (h + d + u + 1));
  Coeffs qt(u + 1, 0);
  rdiv_rec(f, ft, gt, qt, 0);
  for (std::size_t i = 0; i <= u; ++i) q[qoff + h + i] = f.add(q[qoff + h + i], qt[i]);
  trim(qt);
  Coeffs prod = mul(f, qt, gh, MulStrategy::karatsuba);
  for (std::size_t i = 0; i < prod.size(); ++i) a[h + i] = f.sub(a[h + i], prod[i]);
  trim(a);
  rdiv_rec(f, a, g, q, qoff);
}

}  // namespace

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Coeffs& a) { return a.empty() ? kDegNegInf : static_cast<int>(a.size()) - 1; }

Coeffs add(const FieldCtx& f, const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.add(out[i], b[i]);
  trim(out);
  return out;
}

Coeffs sub(const FieldCtx& f, const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.sub(out[i], b[i]);
  trim(out);
  return out;
}

void sub_scaled(const FieldCtx& f, Coeffs& dst, Elem c, const Coeffs& src, std::size_t shift) {
  if (c == 0 || src.empty()) return;
  if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0);
  for (std::size_t i = 0; i < src.size(); ++i)
    dst[i + shift] = f.sub(dst[i + shift], f.mul(c, src[i]));
  trim(dst);
}

Coeffs scale_left(const FieldCtx& f, Elem c, const Coeffs& a) {
  if (c == 0) return {};
  Coeffs out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

Coeffs twist(const FieldCtx& f, const Coeffs& a, long long k) {
  Coeffs out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.aut(a[i], k);
  return out;
}

Coeffs mul_linear(const FieldCtx& f, Elem c, const Coeffs& a) {
  if (a.empty()) return {};
  Coeffs out(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i + 1] = f.add(out[i + 1], f.aut(a[i], 1));
    Elem low = f.mul(c, a[i]);
    if (f.has_derivation()) low = f.sub(low, f.der(a[i]));
    out[i] = f.sub(out[i], low);
  }
  trim(out);
  return out;
}

Coeffs mul_schoolbook(const FieldCtx& f, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  if (!f.has_derivation()) {
    school_acc(f, a.data(), a.size(), b.data(), b.size(), out.data());
  } else {
    // x * h = sigma(h) x + delta(h), pushed through one power at a time.
    Coeffs cur = b;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i > 0) {
        Coeffs nxt(cur.size() + 1, 0);
        for (std::size_t k = 0; k < cur.size(); ++k) {
          nxt[k + 1] = f.add(nxt[k + 1], f.aut(cur[k], 1));
          nxt[k] = f.add(nxt[k], f.der(cur[k]));
        }
        cur = std::move(nxt);
      }
      if (a[i] == 0) continue;
      for (std::size_t k = 0; k < cur.size(); ++k) out[k] = f.add(out[k], f.mul(a[i], cur[k]));
    }
  }
  trim(out);
  return out;
}

Coeffs mul_karatsuba(const FieldCtx& f, const Coeffs& a, const Coeffs& b) {
  if (f.has_derivation()) throw StrategyUnsupported("karatsuba requires a zero derivation");
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  kara_acc(f, a.data(), a.size(), b.data(), b.size(), out.data());
  trim(out);
  return out;
}

Coeffs mul(const FieldCtx& f, const Coeffs& a, const Coeffs& b, MulStrategy s) {
  switch (s) {
    case MulStrategy::schoolbook:
      return mul_schoolbook(f, a, b);
    case MulStrategy::karatsuba:
      return mul_karatsuba(f, a, b);
    case MulStrategy::automatic:
      if (!f.has_derivation() && std::min(a.size(), b.size()) >= PolyTuning::karatsuba_threshold)
        return mul_karatsuba(f, a, b);
      return mul_schoolbook(f, a, b);
  }
  return {};
}

void divrem_right(const FieldCtx& f, const Coeffs& a, const Coeffs& g, Coeffs* q, Coeffs* r, MulStrategy s) {
  if (g.empty()) throw DivisionByZeroPoly("right division by the zero polynomial");
  const std::size_t ng = g.size();
  Coeffs rem = a;
  trim(rem);
  if (rem.size() < ng) {
    if (q) q->clear();
    if (r) *r = std::move(rem);
    return;
  }
  const std::size_t k = rem.size() - ng;
  Coeffs quo(k + 1, 0);
  const Elem lc = g.back();
  if (!f.has_derivation()) {
    auto run = s == MulStrategy::schoolbook ? rdiv_school : rdiv_rec;
    if (lc == 1) {
      run(f, rem, g, quo, 0);
    } else {
      // f = q' (lc^-1 g) + r, then q = q' lc^-1.
      const Elem li = f.inv(lc);
      Coeffs gm = scale_left(f, li, g);
      run(f, rem, gm, quo, 0);
      for (std::size_t i = 0; i < quo.size(); ++i) quo[i] = f.mul(quo[i], f.aut(li, static_cast<long long>(i)));
    }
  } else {
    // x^t g for every shift, leading coefficient sigma^t(lc).
    std::vector<Coeffs> xg(k + 1);
    xg[0] = g;
    for (std::size_t t = 1; t <= k; ++t) {
      const Coeffs& c = xg[t - 1];
      Coeffs nxt(c.size() + 1, 0);
      for (std::size_t j = 0; j < c.size(); ++j) {
        nxt[j + 1] = f.add(nxt[j + 1], f.aut(c[j], 1));
        nxt[j] = f.add(nxt[j], f.der(c[j]));
      }
      xg[t] = std::move(nxt);
    }
    for (std::size_t t = k + 1; t-- > 0;) {
      if (rem.size() < t + ng) continue;
      const Elem top = rem[t + ng - 1];
      if (top == 0) continue;
      const Elem c = f.div(top, xg[t].back());
      quo[t] = c;
      sub_scaled(f, rem, c, xg[t]);
    }
  }
  trim(quo);
  trim(rem);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

void divrem_left(const FieldCtx& f, const Coeffs& a, const Coeffs& g, Coeffs* q, Coeffs* r) {
  if (g.empty()) throw DivisionByZeroPoly("left division by the zero polynomial");
  const std::size_t ng = g.size();
  const long long d = static_cast<long long>(ng) - 1;
  Coeffs rem = a;
  trim(rem);
  Coeffs quo;
  if (rem.size() >= ng) quo.assign(rem.size() - ng + 1, 0);
  const Elem li = f.inv(g.back());
  // lc(g c x^t) = lc(g) sigma^d(c)
  while (rem.size() >= ng) {
    const std::size_t t = rem.size() - ng;
    const Elem c = f.aut(f.mul(li, rem.back()), -d);
    quo[t] = f.add(quo[t], c);
    Coeffs gc = mul(f, g, Coeffs{c}, MulStrategy::schoolbook);
    Coeffs shifted(t, 0);
    shifted.insert(shifted.end(), gc.begin(), gc.end());
    rem = sub(f, rem, shifted);
  }
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

Coeffs mod_right(const FieldCtx& f, const Coeffs& a, const Coeffs& g, MulStrategy s) {
  Coeffs r;
  divrem_right(f, a, g, nullptr, &r, s);
  return r;
}

Coeffs monic(const FieldCtx& f, const Coeffs& a) {
  if (a.empty() || a.back() == 1) return a;
  return scale_left(f, f.inv(a.back()), a);
}

Coeffs lclm(const FieldCtx& f, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) throw ZeroInput("lclm of a zero polynomial");
  // Right Euclid with left cofactors: r_i = s_i a + t_i b. At termination
  // s_{N+1} a = -t_{N+1} b is the least common left multiple.
  Coeffs r0 = a, r1 = b;
  Coeffs s0{1}, s1;
  while (!r1.empty()) {
    Coeffs q, r;
    divrem_right(f, r0, r1, &q, &r);
    Coeffs s2 = sub(f, s0, mul(f, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return monic(f, mul(f, s1, a));
}

Elem op_eval(const FieldCtx& f, const Coeffs& a, Elem b, Elem param) {
  Elem acc = 0, t = b;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (t == 0) break;
    acc = f.add(acc, f.mul(a[i], t));
    if (i + 1 < a.size()) {
      Elem nt = f.mul(f.aut(t, 1), param);
      if (f.has_derivation()) nt = f.add(nt, f.der(t));
      t = nt;
    }
  }
  return acc;
}

Elem rem_eval(const FieldCtx& f, const Coeffs& a, Elem b) {
  Elem acc = 0, n = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc = f.add(acc, f.mul(a[i], n));
    if (i + 1 < a.size()) {
      Elem nn = f.mul(f.aut(n, 1), b);
      if (f.has_derivation()) nn = f.add(nn, f.der(n));
      n = nn;
    }
  }
  return acc;
}

Coeffs minpoly_rem_seq(const FieldCtx& f, std::span<const Elem> pts) {
  Coeffs m{1};
  for (Elem c : pts) {
    Elem y = rem_eval(f, m, c);
    if (y == 0) continue;
    // (x - c^y) m vanishes at c by the product rule.
    m = mul_linear(f, f.conj(c, y), m);
  }
  return m;
}

Coeffs minpoly_rem_fast(const FieldCtx& f, std::span<const Elem> pts) {
  if (pts.size() <= MinpolyTree::leaf_size) return minpoly_rem_seq(f, pts);
  std::vector<std::vector<Elem>> leaves(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) leaves[i] = {pts[i]};
  MinpolyTree t(f, std::move(leaves));
  return t.root();
}

}  // namespace sp

// ---------------------------------------------------------------- SkewPoly

SkewPoly::SkewPoly(FieldPtr ctx, Coeffs c) : ctx_(std::move(ctx)), c_(std::move(c)) {
  for (Elem e : c_)
    if (!ctx_->valid(e)) throw InvalidField("coefficient out of range");
  sp::trim(c_);
}

SkewPoly SkewPoly::monomial(FieldPtr ctx, Elem c, std::size_t k) {
  Coeffs v(k + 1, 0);
  v[k] = c;
  return SkewPoly(std::move(ctx), std::move(v));
}

SkewPoly SkewPoly::linear(FieldPtr ctx, Elem b) {
  Elem nb = ctx->neg(b);
  return SkewPoly(std::move(ctx), Coeffs{nb, 1});
}

bool SkewPoly::operator==(const SkewPoly& o) const {
  check_same(ctx_.get(), o.ctx_.get());
  return c_ == o.c_;
}

SkewPoly sp_add(const SkewPoly& f, const SkewPoly& g) {
  check_same(f.ctx().get(), g.ctx().get());
  return SkewPoly(f.ctx(), sp::add(f.field(), f.coeffs(), g.coeffs()));
}

SkewPoly sp_sub(const SkewPoly& f, const SkewPoly& g) {
  check_same(f.ctx().get(), g.ctx().get());
  return SkewPoly(f.ctx(), sp::sub(f.field(), f.coeffs(), g.coeffs()));
}

SkewPoly sp_mul(const SkewPoly& f, const SkewPoly& g, MulStrategy s) {
  check_same(f.ctx().get(), g.ctx().get());
  if (s == MulStrategy::karatsuba && f.field().has_derivation())
    throw StrategyUnsupported("karatsuba requires a zero derivation");
  return SkewPoly(f.ctx(), sp::mul(f.field(), f.coeffs(), g.coeffs(), s));
}

SkewPoly sp_scale(Elem c, const SkewPoly& f) {
  return SkewPoly(f.ctx(), sp::scale_left(f.field(), c, f.coeffs()));
}

DivResult sp_divide(const SkewPoly& f, const SkewPoly& g, Side side) {
  check_same(f.ctx().get(), g.ctx().get());
  if (g.is_zero()) throw DivisionByZeroPoly("division by the zero polynomial");
  Coeffs q, r;
  if (side == Side::right)
    sp::divrem_right(f.field(), f.coeffs(), g.coeffs(), &q, &r);
  else
    sp::divrem_left(f.field(), f.coeffs(), g.coeffs(), &q, &r);
  return {SkewPoly(f.ctx(), std::move(q)), SkewPoly(f.ctx(), std::move(r))};
}

SkewPoly sp_mod_r(const SkewPoly& f, const SkewPoly& g) { return sp_divide(f, g, Side::right).remainder; }

SkewPoly sp_monic(const SkewPoly& f) { return SkewPoly(f.ctx(), sp::monic(f.field(), f.coeffs())); }

SkewPoly sp_lclm(const SkewPoly& f, const SkewPoly& g) {
  check_same(f.ctx().get(), g.ctx().get());
  return SkewPoly(f.ctx(), sp::lclm(f.field(), f.coeffs(), g.coeffs()));
}

Elem op_eval(const SkewPoly& f, Elem b, Elem a) { return sp::op_eval(f.field(), f.coeffs(), b, a); }
Elem rem_eval(const SkewPoly& f, Elem b) { return sp::rem_eval(f.field(), f.coeffs(), b); }

FieldElement op_eval(const SkewPoly& f, const FieldElement& b, const FieldElement& a) {
  check_same(f.ctx().get(), b.ctx().get());
  check_same(f.ctx().get(), a.ctx().get());
  return FieldElement(f.ctx(), op_eval(f, b.rep(), a.rep()));
}

FieldElement rem_eval(const SkewPoly& f, const FieldElement& b) {
  check_same(f.ctx().get(), b.ctx().get());
  return FieldElement(f.ctx(), rem_eval(f, b.rep()));
}

SkewPoly minpoly_op(const FieldPtr& ctx, std::span<const Elem> points, std::span<const Elem> params) {
  if (points.size() != params.size()) throw LengthMismatch("points and parameters differ in length");
  // Root of x - c under operator evaluation at (b, a): c = D_a(b) / b.
  std::vector<Elem> roots;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] != 0) roots.push_back(ctx->conj(params[i], points[i]));
  return SkewPoly(ctx, sp::minpoly_rem_fast(*ctx, roots));
}

SkewPoly minpoly_rem(const FieldPtr& ctx, std::span<const Elem> points) {
  return SkewPoly(ctx, sp::minpoly_rem_fast(*ctx, points));
}

bool eval_connection_check(const SkewPoly& f, Elem b, Elem a) {
  const FieldCtx& F = f.field();
  if (b == 0) throw ZeroPoint("connection check needs a nonzero point");
  if (F.has_derivation()) throw StrategyUnsupported("connection check is stated for delta = 0");
  Elem dab = F.mul(F.aut(b, 1), a);
  Elem lhs = F.mul(rem_eval(f, F.div(dab, b)), b);
  return lhs == op_eval(f, b, a);
}

// ------------------------------------------------------------- MinpolyTree

std::size_t MinpolyTree::leaf_size = 4;

MinpolyTree::MinpolyTree(const FieldCtx& f, std::vector<std::vector<Elem>> leaf_roots)
    : f_(&f), leaves_(std::move(leaf_roots)) {
  if (leaves_.empty()) {
    nodes_.push_back(Node{0, 0, -1, -1, 0, Coeffs{1}});
    return;
  }
  nodes_.reserve(2 * leaves_.size());
  build(0, leaves_.size() - 1);
}

const Coeffs& MinpolyTree::poly(std::size_t lo, std::size_t hi) const {
  auto it = index_.find({lo, hi});
  if (it == index_.end()) throw DimensionMismatch("range is not a node of the tree");
  return nodes_[it->second].poly;
}

void MinpolyTree::roots_of(const Node& n, std::vector<Elem>& out) const {
  for (std::size_t i = n.lo; i <= n.hi; ++i)
    out.insert(out.end(), leaves_[i].begin(), leaves_[i].end());
}

int MinpolyTree::build(std::size_t lo, std::size_t hi) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{lo, hi, -1, -1, 0, {}});
  index_[{lo, hi}] = id;
  std::size_t nroots = 0;
  for (std::size_t i = lo; i <= hi; ++i) nroots += leaves_[i].size();
  nodes_[id].nroots = nroots;
  if (lo == hi) {
    nodes_[id].poly = sp::minpoly_rem_seq(*f_, leaves_[lo]);
    return id;
  }
  const std::size_t mid = (lo + hi) / 2;
  const int l = build(lo, mid);
  const int r = build(mid + 1, hi);
  nodes_[id].left = l;
  nodes_[id].right = r;
  if (nroots <= leaf_size) {
    std::vector<Elem> roots;
    roots_of(nodes_[id], roots);
    nodes_[id].poly = sp::minpoly_rem_seq(*f_, roots);
    return id;
  }
  const Coeffs& ml = nodes_[l].poly;
  const Coeffs& mr = nodes_[r].poly;
  if (mr.size() <= 1) {
    nodes_[id].poly = ml;
    return id;
  }
  if (ml.size() <= 1) {
    nodes_[id].poly = mr;
    return id;
  }
  Coeffs mp = images_minpoly(r, sp::mod_right(*f_, ml, mr));
  nodes_[id].poly = sp::mul(*f_, mp, ml);
  return id;
}

Coeffs MinpolyTree::images_minpoly(int node, Coeffs r) const {
  const Node& n = nodes_[node];
  if (n.left < 0 || n.nroots <= leaf_size) {
    std::vector<Elem> rs, images;
    roots_of(n, rs);
    for (Elem c : rs) {
      Elem v = sp::rem_eval(*f_, r, c);
      if (v != 0) images.push_back(f_->conj(c, v));
    }
    return sp::minpoly_rem_seq(*f_, images);
  }
  Coeffs n1 = images_minpoly(n.left, sp::mod_right(*f_, r, nodes_[n.left].poly));
  Coeffs r2 = sp::mod_right(*f_, sp::mul(*f_, n1, r), nodes_[n.right].poly);
  Coeffs n2 = images_minpoly(n.right, std::move(r2));
  return sp::mul(*f_, n2, n1);
}

}  // namespace skewknh
