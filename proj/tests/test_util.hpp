#pragma once

#include <cmath>
#include <set>
#include <vector>

#include "skewknh/families.hpp"
#include "skewknh/galois.hpp"
#include "skewknh/skewpoly.hpp"

namespace skewknh::testing {

// F_4 = F_2[z]/(z^2 + z + 1), sigma = Frobenius, delta = 0.
inline constexpr Elem kZ = 2;
inline constexpr Elem kZ1 = 3;

inline FieldPtr f4() { return FieldCtx::create(FieldSpec{2, 1, 2, {1, 1, 1}, 1, {}}); }

// Product through integer convolution and long division by the modulus;
// shares no code with the field's multiplier. Prime base fields only.
inline Elem naive_mul(const FieldCtx& f, Elem a, Elem b) {
  const long long p = f.p();
  const auto ca = f.coords(a), cb = f.coords(b);
  const auto& mod = f.spec().modulus;
  const std::size_t m = f.m();
  std::vector<long long> t(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i + j] = (t[i + j] + static_cast<long long>(ca[i]) * cb[j]) % p;
  for (std::size_t d = 2 * m - 1; d-- > m;) {
    long long c = t[d] % p;
    for (std::size_t i = 0; i <= m; ++i) t[d - m + i] = ((t[d - m + i] - c * mod[i]) % p + p) % p;
  }
  std::vector<std::uint32_t> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(t[i] % p);
  return f.from_coords(out);
}

// Rank by counting the F_q-span: |span| = q^rank.
inline std::size_t naive_rank(const FieldCtx& f, const std::vector<Elem>& v) {
  std::set<Elem> span{0};
  for (Elem e : v) {
    std::set<Elem> next;
    for (Elem s : span)
      for (std::uint32_t c = 0; c < f.q(); ++c) next.insert(f.add(s, f.scale(c, e)));
    span.swap(next);
  }
  std::size_t r = 0;
  for (std::size_t sz = 1; sz < span.size(); sz *= f.q()) ++r;
  return r;
}

inline SkewPoly random_poly(const FieldPtr& f, Rng& rng, int deg) {
  Coeffs c(deg + 1);
  for (auto& e : c) e = f->random(rng);
  if (deg >= 0) c.back() = f->random_nonzero(rng);
  return SkewPoly(f, c);
}

inline SkewPoly poly(const FieldPtr& f, std::initializer_list<Elem> c) { return SkewPoly(f, Coeffs(c)); }

// Random interpolation points; each coordinate is zero with probability 1/zero_rate.
inline PointSet random_points(const FieldCtx& f, Rng& rng, std::size_t n, std::size_t s, unsigned zero_rate = 6) {
  PointSet pts(n, std::vector<Elem>(s + 1));
  for (auto& p : pts)
    for (auto& e : p) e = rng.below(zero_rate) == 0 ? 0 : f.random(rng);
  return pts;
}

inline OpMapFamily random_op_family(const FieldPtr& f, Rng& rng, std::size_t n, std::size_t s) {
  std::vector<Elem> a(n);
  for (auto& e : a) e = f->random_nonzero(rng);
  return OpMapFamily(f, random_points(*f, rng, n, s), a);
}

inline RemMapFamily random_rem_family(const FieldPtr& f, Rng& rng, std::size_t n, std::size_t s) {
  return RemMapFamily(f, random_points(*f, rng, n, s));
}

inline WeightVec decoding_weights(std::size_t s, int k) {
  WeightVec w(s + 1, k - 1);
  w[0] = 0;
  return w;
}

}  // namespace skewknh::testing
