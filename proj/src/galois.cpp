#include "skewknh/galois.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace skewknh {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomials over F_q, ascending coefficients. Only used for field
// construction, so clarity over speed.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(const BaseField& f, Poly a, const Poly& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t li = f.inv(m.back());
  while (a.size() >= m.size()) {
    std::uint32_t c = f.mul(a.back(), li);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const BaseField& f, const Poly& a, const Poly& b, const Poly& m) {
  if (a.empty() || b.empty()) return {};
  Poly t(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) t[i + j] = f.add(t[i + j], f.mul(a[i], b[j]));
  return poly_mod(f, std::move(t), m);
}

Poly poly_powmod(const BaseField& f, Poly a, std::uint64_t e, const Poly& m) {
  Poly r{1};
  a = poly_mod(f, std::move(a), m);
  while (e) {
    if (e & 1) r = poly_mulmod(f, r, a, m);
    e >>= 1;
    if (e) a = poly_mulmod(f, a, a, m);
  }
  return r;
}

Poly poly_gcd(const BaseField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: monic m of degree d is irreducible iff gcd(z^(q^i) - z, m) = 1
// for 1 <= i <= d/2.
bool is_irreducible(const BaseField& f, const Poly& m) {
  const std::size_t d = m.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  Poly h{0, 1};
  for (std::size_t i = 1; i <= d / 2; ++i) {
    h = poly_powmod(f, h, f.q(), m);
    Poly t = h;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = f.sub(t[1], 1);
    trim(t);
    Poly g = poly_gcd(f, t, m);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- BaseField

BaseField::BaseField(std::uint32_t p, std::uint32_t r) : p_(p), r_(r) {
  if (!is_prime(p) || p > (1u << 30)) throw InvalidField("characteristic must be a prime below 2^30");
  if (r == 0) throw InvalidField("base extension exponent must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > (1u << 30)) throw InvalidField("q too large");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (r == 1) return;
  if (q_ > (1u << 16)) throw InvalidField("q = p^r with r > 1 must not exceed 2^16");

  BaseField fp(p, 1);
  Poly g = FieldCtx::find_irreducible(fp, r);
  auto to_poly = [&](std::uint32_t a) {
    Poly v(r, 0);
    for (std::uint32_t i = 0; i < r; ++i, a /= p) v[i] = a % p;
    return v;
  };
  auto from_poly = [&](const Poly& v) {
    std::uint32_t a = 0;
    for (std::size_t i = v.size(); i-- > 0;) a = a * p + v[i];
    return a;
  };
  log_.assign(q_, 0);
  exp_.assign(2 * (q_ - 1), 0);
  for (std::uint32_t cand = 2; cand < q_; ++cand) {
    Poly gp = to_poly(cand);
    Poly cur{1};
    std::uint32_t k = 0;
    bool ok = true;
    for (; k < q_ - 1; ++k) {
      std::uint32_t v = from_poly(cur);
      if (k > 0 && v == 1) {
        ok = false;
        break;
      }
      exp_[k] = v;
      cur = poly_mulmod(fp, cur, gp, g);
      cur.resize(r, 0);
    }
    if (!ok) continue;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i + q_ - 1] = exp_[i];
      log_[exp_[i]] = i;
    }
    return;
  }
  throw InvalidField("no primitive element found");
}

std::uint32_t BaseField::digit_add(std::uint32_t a, std::uint32_t b, bool subtract) const {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < r_; ++i, scale *= p_) {
    std::uint32_t x = a % p_, y = b % p_;
    a /= p_;
    b /= p_;
    std::uint32_t d = subtract ? (x + p_ - y) % p_ : (x + y) % p_;
    out += d * scale;
  }
  return out;
}

std::uint32_t BaseField::inv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in F_q");
  if (r_ == 1) {
    // Fermat: a^(p-2)
    std::uint64_t res = 1, b = a, e = p_ - 2;
    while (e) {
      if (e & 1) res = res * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(res);
  }
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

// ----------------------------------------------------------------- FqMatrix

std::vector<std::size_t> FqMatrix::rref(const BaseField& f) {
  std::vector<std::size_t> pivots;
  const bool gf2 = f.q() == 2;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      std::swap_ranges(a_.begin() + piv * cols_, a_.begin() + (piv + 1) * cols_,
                       a_.begin() + r * cols_);
    std::uint32_t* pr = &a_[r * cols_];
    if (!gf2) {
      std::uint32_t iv = f.inv(pr[c]);
      for (std::size_t j = c; j < cols_; ++j) pr[j] = f.mul(pr[j], iv);
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      std::uint32_t* pi = &a_[i * cols_];
      std::uint32_t fac = pi[c];
      if (fac == 0) continue;
      if (gf2) {
        for (std::size_t j = c; j < cols_; ++j) pi[j] ^= pr[j];
      } else {
        for (std::size_t j = c; j < cols_; ++j)
          if (pr[j]) pi[j] = f.sub(pi[j], f.mul(fac, pr[j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t FqMatrix::rank(const BaseField& f) const {
  FqMatrix t = *this;
  return t.rref(f).size();
}

std::vector<std::vector<std::uint32_t>> FqMatrix::kernel(const BaseField& f) const {
  FqMatrix t = *this;
  auto piv = t.rref(f);
  std::vector<char> is_piv(cols_, 0);
  for (auto c : piv) is_piv[c] = 1;
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t fc = 0; fc < cols_; ++fc) {
    if (is_piv[fc]) continue;
    std::vector<std::uint32_t> x(cols_, 0);
    x[fc] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = f.neg(t.at(k, fc));
    out.push_back(std::move(x));
  }
  return out;
}

bool FqMatrix::solve(const BaseField& f, std::span<const std::uint32_t> b,
                     std::vector<std::uint32_t>& x) const {
  FqMatrix t(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::copy(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_, &t.at(i, 0));
    t.at(i, cols_) = b[i];
  }
  auto piv = t.rref(f);
  if (!piv.empty() && piv.back() == cols_) return false;
  x.assign(cols_, 0);
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = t.at(k, cols_);
  return true;
}

// ----------------------------------------------------------------- FieldCtx

std::vector<std::uint32_t> FieldCtx::find_irreducible(const BaseField& fq, std::uint32_t m) {
  if (m == 0) throw InvalidField("extension degree must be positive");
  Poly cand(m + 1, 0);
  cand[m] = 1;
  // Enumerate the lower coefficients as base-q digits, lowest varying fastest.
  while (true) {
    if (m == 1 || cand[0] != 0)
      if (is_irreducible(fq, cand)) return cand;
    std::uint32_t i = 0;
    while (i < m) {
      if (++cand[i] < fq.q()) break;
      cand[i] = 0;
      ++i;
    }
    if (i == m) throw InvalidField("no irreducible polynomial found");
  }
}

FieldPtr FieldCtx::create(const FieldSpec& spec) {
  std::shared_ptr<FieldCtx> f(new FieldCtx());
  f->init(spec);
  return f;
}

FieldPtr FieldCtx::create_default(std::uint32_t p, std::uint32_t r, std::uint32_t m,
                                  std::uint32_t aut_exp) {
  FieldSpec s;
  s.p = p;
  s.r = r;
  s.m = m;
  s.aut_exp = aut_exp;
  s.modulus = find_irreducible(BaseField(p, r), m);
  return create(s);
}

void FieldCtx::init(const FieldSpec& spec) {
  spec_ = spec;
  fq_ = BaseField(spec.p, spec.r);
  const std::uint32_t q = fq_.q(), m = spec.m;
  if (m == 0) throw InvalidField("extension degree must be positive");
  bits_ = 1;
  while ((1ull << bits_) < q) ++bits_;
  if (std::uint64_t{bits_} * m > 62) throw InvalidField("q^m too large for the packed representation");
  cmask_ = (1ull << bits_) - 1;
  nbits_ = bits_ * m;
  lazy_ = spec.r == 1 && spec.p > 2 && spec.p < (1u << 20);

  if (spec.modulus.size() != m + 1) throw InvalidField("modulus must have m+1 coefficients");
  for (auto c : spec.modulus)
    if (c >= q) throw InvalidField("modulus coefficient out of range");
  if (spec.modulus.back() == 0) throw InvalidField("modulus must have degree m");
  mod_ = spec.modulus;
  {
    std::uint32_t li = fq_.inv(mod_.back());
    for (auto& c : mod_) c = fq_.mul(c, li);
  }
  if (!is_irreducible(fq_, mod_)) throw InvalidField("modulus is reducible over F_q");
  spec_.modulus = mod_;

  size_ = 1;
  for (std::uint32_t i = 0; i < m; ++i) size_ *= q;

  if (spec.aut_exp >= m) throw InvalidField("aut_exp must lie in [0, m)");
  ord_ = m / std::gcd(spec.aut_exp, m);
  if (spec.aut_exp == 0) ord_ = 1;

  // Log tables for small fields, built with the slow multiplier.
  if (std::uint64_t{bits_} * m <= 20 && size_ > 2) {
    const std::uint64_t N = size_ - 1;
    auto factors = prime_factors(N);
    for (std::uint64_t idx = 2; idx < size_; ++idx) {
      Elem g = element_at(idx);
      bool prim = true;
      for (auto l : factors)
        if (pow_slow(g, N / l) == 1) {
          prim = false;
          break;
        }
      if (!prim) continue;
      std::vector<std::uint32_t> lg(std::size_t{1} << (bits_ * m), 0);
      std::vector<std::uint32_t> ex(2 * N, 0);
      Elem cur = 1;
      for (std::uint64_t k = 0; k < N; ++k) {
        ex[k] = ex[k + N] = static_cast<std::uint32_t>(cur);
        lg[cur] = static_cast<std::uint32_t>(k);
        cur = mul_slow(cur, g);
      }
      log_ = std::move(lg);
      exp_ = std::move(ex);
      break;
    }
  }

  // sigma^k(z^i) for k in [0, ord).
  aut_img_.assign(ord_, std::vector<Elem>(m, 0));
  for (std::uint32_t i = 0; i < m; ++i) {
    std::vector<std::uint32_t> c(m, 0);
    c[i] = 1;
    aut_img_[0][i] = from_coords(c);
  }
  if (ord_ > 1) {
    for (std::uint32_t i = 0; i < m; ++i) {
      Elem v = aut_img_[0][i];
      for (std::uint32_t t = 0; t < spec.aut_exp; ++t) v = pow_slow(v, q);
      aut_img_[1][i] = v;
    }
    for (std::uint32_t k = 2; k < ord_; ++k)
      for (std::uint32_t i = 0; i < m; ++i) aut_img_[k][i] = aut_matrix(aut_img_[k - 1][i], 1);
  }
  if (!log_.empty()) {
    const std::uint64_t N = size_ - 1;
    autmul_.assign(ord_, 1);
    std::uint64_t qe = 1;
    for (std::uint32_t t = 0; t < spec.aut_exp; ++t) qe = qe * q % N;
    for (std::uint32_t k = 1; k < ord_; ++k) autmul_[k] = autmul_[k - 1] * qe % N;
  }

  if (!spec.der_coeff.empty()) {
    if (spec.der_coeff.size() != m) throw InvalidField("der_coeff must have m coordinates");
    for (auto c : spec.der_coeff)
      if (c >= q) throw InvalidField("der_coeff coordinate out of range");
    der_ = from_coords(spec.der_coeff);
  }
  // sigma = id forces delta = 0.
  if (ord_ == 1) der_ = 0;
  spec_.der_coeff = coords(der_);
}

Elem FieldCtx::add_slow(Elem a, Elem b, bool subtract) const {
  Elem out = 0;
  for (std::uint32_t i = 0; i < spec_.m; ++i) {
    std::uint32_t x = coord(a, i), y = coord(b, i);
    std::uint64_t d = subtract ? fq_.sub(x, y) : fq_.add(x, y);
    out |= d << (i * bits_);
  }
  return out;
}

Elem FieldCtx::lazy_reduce(std::uint64_t* t) const {
  const std::uint32_t m = spec_.m;
  const std::uint64_t p = fq_.p();
  for (int d = 2 * static_cast<int>(m) - 2; d >= static_cast<int>(m); --d) {
    std::uint64_t c = t[d] % p;
    if (!c) continue;
    c = p - c;
    for (std::uint32_t i = 0; i < m; ++i) t[d - m + i] += c * mod_[i];
  }
  Elem out = 0;
  for (std::uint32_t i = 0; i < m; ++i) out |= (t[i] % p) << (i * bits_);
  return out;
}

Elem FieldCtx::mul_slow(Elem a, Elem b) const {
  const std::uint32_t m = spec_.m;
  if (fq_.q() == 2) {
    unsigned __int128 t = 0;
    Elem bb = b;
    while (bb) {
      int k = __builtin_ctzll(bb);
      t ^= static_cast<unsigned __int128>(a) << k;
      bb &= bb - 1;
    }
    unsigned __int128 modbits = 0;
    for (std::uint32_t i = 0; i <= m; ++i)
      if (mod_[i]) modbits |= static_cast<unsigned __int128>(1) << i;
    for (int d = 2 * static_cast<int>(m) - 2; d >= static_cast<int>(m); --d)
      if ((t >> d) & 1) t ^= modbits << (d - m);
    return static_cast<Elem>(t);
  }
  std::uint64_t ca[64], cb[64], t[128];
  for (std::uint32_t i = 0; i < m; ++i) {
    ca[i] = coord(a, i);
    cb[i] = coord(b, i);
  }
  const std::uint64_t p = fq_.p();
  if (spec_.r == 1 && 2 * std::uint64_t{m} * (p - 1) * (p - 1) < (1ull << 63)) {
    std::fill(t, t + 2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i)
      if (ca[i])
        for (std::uint32_t j = 0; j < m; ++j) t[i + j] += ca[i] * cb[j];
    for (int d = 2 * static_cast<int>(m) - 2; d >= static_cast<int>(m); --d) {
      std::uint64_t c = t[d] % p;
      if (!c) continue;
      for (std::uint32_t i = 0; i < m; ++i) t[d - m + i] += c * ((p - mod_[i]) % p);
    }
    Elem out = 0;
    for (std::uint32_t i = 0; i < m; ++i) out |= (t[i] % p) << (i * bits_);
    return out;
  }
  std::fill(t, t + 2 * m, 0);
  for (std::uint32_t i = 0; i < m; ++i)
    if (ca[i])
      for (std::uint32_t j = 0; j < m; ++j)
        t[i + j] = fq_.add(static_cast<std::uint32_t>(t[i + j]),
                           fq_.mul(static_cast<std::uint32_t>(ca[i]), static_cast<std::uint32_t>(cb[j])));
  for (int d = 2 * static_cast<int>(m) - 2; d >= static_cast<int>(m); --d) {
    std::uint32_t c = static_cast<std::uint32_t>(t[d]);
    if (!c) continue;
    for (std::uint32_t i = 0; i < m; ++i)
      t[d - m + i] = fq_.sub(static_cast<std::uint32_t>(t[d - m + i]), fq_.mul(c, mod_[i]));
  }
  Elem out = 0;
  for (std::uint32_t i = 0; i < m; ++i) out |= t[i] << (i * bits_);
  return out;
}

Elem FieldCtx::pow_slow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul_slow(r, a);
    e >>= 1;
    if (e) a = mul_slow(a, a);
  }
  return r;
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

Elem FieldCtx::inv(Elem a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  if (!log_.empty()) {
    const std::uint64_t N = size_ - 1;
    return exp_[(N - log_[a]) % N];
  }
  if (ord_ == spec_.m && spec_.m > 1) {
    // r = prod_{k>0} sigma^k(a); a r is the norm, which lies in F_q.
    Elem r = aut_matrix(a, 1);
    for (std::uint32_t k = 2; k < ord_; ++k) r = mul(r, aut_matrix(a, k));
    const std::uint32_t nrm = coord(mul(a, r), 0);
    return scale(fq_.inv(nrm), r);
  }
  return pow(a, size_ - 2);
}

Elem FieldCtx::scale(std::uint32_t c, Elem a) const {
  if (c == 0) return 0;
  if (c == 1) return a;
  Elem out = 0;
  for (std::uint32_t i = 0; i < spec_.m; ++i)
    out |= std::uint64_t{fq_.mul(c, coord(a, i))} << (i * bits_);
  return out;
}

Elem FieldCtx::aut_matrix(Elem a, std::size_t k) const {
  k %= ord_;
  if (k == 0) return a;
  const auto& img = aut_img_[k];
  Elem out = 0;
  if (fq_.q() == 2) {
    while (a) {
      int i = __builtin_ctzll(a);
      out ^= img[i];
      a &= a - 1;
    }
    return out;
  }
  for (std::uint32_t i = 0; i < spec_.m; ++i) {
    std::uint32_t c = coord(a, i);
    if (c) out = add(out, scale(c, img[i]));
  }
  return out;
}

Elem FieldCtx::conj(Elem a, Elem c) const {
  if (c == 0) throw ZeroConjugator("conjugation by zero");
  Elem ci = inv(c);
  Elem v = mul(mul(aut(c, 1), a), ci);
  if (der_) v = add(v, mul(der(c), ci));
  return v;
}

std::vector<std::uint32_t> FieldCtx::coords(Elem a) const {
  std::vector<std::uint32_t> c(spec_.m);
  for (std::uint32_t i = 0; i < spec_.m; ++i) c[i] = coord(a, i);
  return c;
}

Elem FieldCtx::from_coords(std::span<const std::uint32_t> c) const {
  if (c.size() > spec_.m) throw InvalidField("too many coordinates");
  Elem out = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= fq_.q()) throw InvalidField("coordinate out of range");
    out |= std::uint64_t{c[i]} << (i * bits_);
  }
  return out;
}

bool FieldCtx::valid(Elem a) const {
  if (bits_ * spec_.m < 64 && (a >> (bits_ * spec_.m)) != 0) return false;
  for (std::uint32_t i = 0; i < spec_.m; ++i)
    if (coord(a, i) >= fq_.q()) return false;
  return true;
}

Elem FieldCtx::element_at(std::uint64_t idx) const {
  Elem out = 0;
  for (std::uint32_t i = 0; i < spec_.m; ++i, idx /= fq_.q())
    out |= (idx % fq_.q()) << (i * bits_);
  return out;
}

Elem FieldCtx::random(Rng& rng) const {
  if ((q() & (q() - 1)) == 0) return rng.next() & ((bits_ * spec_.m >= 64) ? ~0ull : ((1ull << (bits_ * spec_.m)) - 1));
  Elem out = 0;
  for (std::uint32_t i = 0; i < spec_.m; ++i) out |= rng.below(q()) << (i * bits_);
  return out;
}

Elem FieldCtx::random_nonzero(Rng& rng) const {
  Elem a;
  do {
    a = random(rng);
  } while (a == 0);
  return a;
}

std::string FieldCtx::to_string(Elem a) const {
  std::ostringstream os;
  os << '[';
  for (std::uint32_t i = 0; i < spec_.m; ++i) os << (i ? "," : "") << coord(a, i);
  os << ']';
  return os.str();
}

// ------------------------------------------------------------ FieldElement

void check_same(const FieldCtx* a, const FieldCtx* b) {
  if (a == b) return;
  if (!a || !b) throw ContextMismatch("missing field context");
  const auto &x = a->spec(), &y = b->spec();
  if (x.p != y.p || x.r != y.r || x.m != y.m || x.modulus != y.modulus || x.aut_exp != y.aut_exp ||
      x.der_coeff != y.der_coeff)
    throw ContextMismatch("operands belong to different fields");
}

FieldElement::FieldElement(FieldPtr ctx, Elem rep) : ctx_(std::move(ctx)), rep_(rep) {
  if (!ctx_->valid(rep_)) throw InvalidField("element representation out of range");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return field_arith(*this, o, ArithKind::add);
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return field_arith(*this, o, ArithKind::sub);
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return field_arith(*this, o, ArithKind::mul);
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return field_arith(*this, o, ArithKind::div);
}
FieldElement FieldElement::operator-() const { return FieldElement(ctx_, ctx_->neg(rep_)); }
bool FieldElement::operator==(const FieldElement& o) const {
  check_same(ctx_.get(), o.ctx_.get());
  return rep_ == o.rep_;
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithKind kind) {
  check_same(a.ctx().get(), b.ctx().get());
  const FieldCtx& f = *a.ctx();
  switch (kind) {
    case ArithKind::add:
      return FieldElement(a.ctx(), f.add(a.rep(), b.rep()));
    case ArithKind::sub:
      return FieldElement(a.ctx(), f.sub(a.rep(), b.rep()));
    case ArithKind::mul:
      return FieldElement(a.ctx(), f.mul(a.rep(), b.rep()));
    case ArithKind::div:
      if (b.is_zero()) throw DivisionByZero("division by zero element");
      return FieldElement(a.ctx(), f.div(a.rep(), b.rep()));
  }
  return {};
}

FieldElement apply_aut(const FieldElement& a, long long k) {
  return FieldElement(a.ctx(), a.ctx()->aut(a.rep(), k));
}

FieldElement apply_der(const FieldElement& a) { return FieldElement(a.ctx(), a.ctx()->der(a.rep())); }

FieldElement conjugate(const FieldElement& a, const FieldElement& c) {
  check_same(a.ctx().get(), c.ctx().get());
  return FieldElement(a.ctx(), a.ctx()->conj(a.rep(), c.rep()));
}

std::size_t rank_over_base(const FieldCtx& ctx, std::span<const Elem> v) {
  if (v.empty()) return 0;
  FqMatrix a(ctx.m(), v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::uint32_t i = 0; i < ctx.m(); ++i) a.at(i, j) = ctx.coord(v[j], i);
  return a.rank(ctx.fq());
}

std::size_t rank_over_base(const std::vector<FieldElement>& v) {
  if (v.empty()) return 0;
  std::vector<Elem> reps;
  for (const auto& e : v) {
    check_same(v[0].ctx().get(), e.ctx().get());
    reps.push_back(e.rep());
  }
  return rank_over_base(*v[0].ctx(), reps);
}

std::vector<Elem> sample_independent(const FieldCtx& ctx, std::size_t count, std::uint64_t seed) {
  if (count > ctx.m()) throw CountExceedsDegree("cannot sample more than m independent elements");
  Rng rng(seed);
  std::vector<Elem> out;
  while (out.size() < count) {
    out.push_back(ctx.random_nonzero(rng));
    if (rank_over_base(ctx, out) != out.size()) out.pop_back();
  }
  return out;
}

}  // namespace skewknh
