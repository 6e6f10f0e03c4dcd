#include "skewknh/codes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "skewknh/errors.hpp"

namespace skewknh {

std::size_t RootFindTuning::max_solutions = 4096;

const char* to_string(CodeKind k) {
  switch (k) {
    case CodeKind::gabidulin: return "gabidulin";
    case CodeKind::ilrs: return "ilrs";
    case CodeKind::isrs: return "isrs";
  }
  return "?";
}

CodeKind parse_code_kind(const std::string& s) {
  if (s == "gab" || s == "gabidulin") return CodeKind::gabidulin;
  if (s == "ilrs") return CodeKind::ilrs;
  if (s == "isrs") return CodeKind::isrs;
  throw InvalidCode("unknown code kind '" + s + "'");
}

const char* to_string(Algo a) { return a == Algo::iter ? "iter" : "dac"; }

Algo parse_algo(const std::string& s) {
  if (s == "iter") return Algo::iter;
  if (s == "dac") return Algo::dac;
  throw InvalidCode("unknown algorithm '" + s + "'");
}

namespace {

// Seed streams for the generated parts of a code.
enum Stream : std::uint64_t { kBeta = 1, kXi = 2, kConj = 3, kBlock = 16 };

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t s) { return Rng::derive(seed, s).next(); }

void check_elems(const FieldCtx& f, const std::vector<Elem>& v, const char* what) {
  for (Elem e : v)
    if (!f.valid(e)) throw InvalidCode(std::string(what) + " contains an element outside the field");
}

// Columns of x in [lo, hi) expanded into (s m) x (hi - lo) over F_q.
FqMatrix expand_columns(const FieldCtx& f, const CodewordMatrix& x, std::size_t lo, std::size_t hi) {
  const std::size_t m = f.m();
  FqMatrix a(x.size() * m, hi - lo);
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t c = 0; c < m; ++c) a.at(j * m + c, i - lo) = f.coord(x[j][i], c);
  return a;
}

// s x n error of rank exactly t: D (s x t, independent expanded columns) times
// F (t x n over F_q, full row rank).
CodewordMatrix rank_error(const FieldCtx& f, std::size_t s, std::size_t n, std::size_t t, Rng& rng) {
  CodewordMatrix d(s, std::vector<Elem>(t, 0));
  for (std::size_t u = 0; u < t; ++u) {
    do {
      for (std::size_t j = 0; j < s; ++j) d[j][u] = f.random(rng);
    } while (expand_columns(f, d, 0, u + 1).rank(f.fq()) != u + 1);
  }
  FqMatrix fm(t, n);
  do {
    for (std::size_t u = 0; u < t; ++u)
      for (std::size_t i = 0; i < n; ++i) fm.at(u, i) = static_cast<std::uint32_t>(rng.below(f.q()));
  } while (fm.rank(f.fq()) != t);
  CodewordMatrix e(s, std::vector<Elem>(n, 0));
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t u = 0; u < t; ++u)
        if (fm.at(u, i)) e[j][i] = f.add(e[j][i], f.scale(fm.at(u, i), d[j][u]));
  return e;
}

PointSet interpolation_points(const std::vector<Elem>& first, const CodewordMatrix& r) {
  PointSet pts(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    pts[i].push_back(first[i]);
    for (const auto& row : r) pts[i].push_back(row[i]);
  }
  return pts;
}

void check_received(const CodeSpec& spec, const CodewordMatrix& r) {
  if (r.size() != spec.s) throw DimensionMismatch("received word needs s rows");
  for (const auto& row : r)
    if (row.size() != spec.n) throw DimensionMismatch("received word needs n columns");
}

}  // namespace

Elem norm(const FieldCtx& f, Elem a) {
  Elem r = a;
  for (std::uint32_t k = 1; k < f.m(); ++k) r = f.mul(r, f.aut(a, k));
  return r;
}

CodeSpec make_code(const CodeParams& p) {
  if (p.s < 1) throw InvalidCode("interleaving order must be positive");
  if (p.k < 1 || p.k > p.n) throw InvalidCode("need 1 <= k <= n");
  CodeSpec c{p.kind, FieldCtx::create_default(p.p, p.r, p.m), p.n, p.k, p.s, {}, {}, {}, 1, {}, {}, p.seed};
  const FieldCtx& f = *c.field;
  check_elems(f, p.beta, "beta");
  check_elems(f, p.xi, "xi");

  switch (p.kind) {
    case CodeKind::gabidulin: {
      if (p.n > p.m) throw InvalidCode("gabidulin codes need n <= m");
      c.blocks = {p.n};
      c.beta = p.beta.empty() ? sample_independent(f, p.n, stream_seed(p.seed, kBeta)) : p.beta;
      if (c.beta.size() != p.n || rank_over_base(f, c.beta) != p.n)
        throw InvalidCode("beta must hold n F_q-independent elements");
      c.params.assign(p.n, 1);
      break;
    }
    case CodeKind::ilrs: {
      c.blocks = p.blocks.empty() ? std::vector<std::size_t>{p.n} : p.blocks;
      const std::size_t ell = c.blocks.size();
      if (std::accumulate(c.blocks.begin(), c.blocks.end(), std::size_t{0}) != p.n)
        throw InvalidCode("block lengths must sum to n");
      for (auto nl : c.blocks)
        if (nl < 1 || nl > p.m) throw InvalidCode("ilrs blocks need 1 <= n_l <= m");
      // Conjugacy classes of nonzero elements are the fibres of the norm.
      if (ell > f.q() - 1) throw InvalidCode("only q-1 nonzero conjugacy classes exist");
      if (!p.xi.empty()) {
        if (p.xi.size() != ell) throw InvalidCode("one xi per block required");
        c.xi = p.xi;
      } else {
        Rng rng(stream_seed(p.seed, kXi));
        while (c.xi.size() < ell) c.xi.push_back(f.random_nonzero(rng));
        std::set<Elem> used;
        for (auto& x : c.xi) {
          while (used.count(norm(f, x))) x = f.random_nonzero(rng);
          used.insert(norm(f, x));
        }
      }
      std::set<Elem> norms;
      for (Elem x : c.xi)
        if (x == 0 || !norms.insert(norm(f, x)).second) throw InvalidCode("xi must come from distinct nonzero classes");
      if (!p.beta.empty()) {
        c.beta = p.beta;
        if (c.beta.size() != p.n) throw InvalidCode("beta must hold n elements");
      }
      std::size_t off = 0;
      for (std::size_t l = 0; l < ell; ++l) {
        const std::size_t nl = c.blocks[l];
        if (p.beta.empty()) {
          auto bl = sample_independent(f, nl, stream_seed(p.seed, kBlock + l));
          c.beta.insert(c.beta.end(), bl.begin(), bl.end());
        } else if (rank_over_base(f, std::span<const Elem>(c.beta).subspan(off, nl)) != nl) {
          throw InvalidCode("each beta block must be F_q-independent");
        }
        c.params.insert(c.params.end(), nl, c.xi[l]);
        off += nl;
      }
      if (minpoly_op(c.field, c.beta, c.params).degree() != static_cast<int>(p.n))
        throw InvalidCode("ilrs evaluation points are not independent");
      break;
    }
    case CodeKind::isrs: {
      if (p.n > p.m) throw InvalidCode("isrs points from one conjugacy class need n <= m");
      c.a = p.a.value_or(1);
      if (c.a == 0 || !f.valid(c.a)) throw InvalidCode("base point must be a nonzero field element");
      c.beta = p.beta.empty() ? sample_independent(f, p.n, stream_seed(p.seed, kConj)) : p.beta;
      if (c.beta.size() != p.n || rank_over_base(f, c.beta) != p.n)
        throw InvalidCode("conjugators must be n F_q-independent elements");
      for (Elem ci : c.beta) c.b.push_back(f.conj(c.a, ci));
      if (minpoly_rem(c.field, c.b).degree() != static_cast<int>(p.n))
        throw InvalidCode("isrs points are not P-independent");
      break;
    }
  }
  return c;
}

Message random_message(const CodeSpec& spec, Rng& rng) {
  Message msg;
  for (std::size_t j = 0; j < spec.s; ++j) {
    Coeffs c(spec.k);
    for (auto& e : c) e = spec.field->random(rng);
    sp::trim(c);
    msg.polys.push_back(std::move(c));
  }
  return msg;
}

CodewordMatrix encode(const CodeSpec& spec, const Message& msg) {
  const FieldCtx& f = *spec.field;
  if (msg.polys.size() != spec.s) throw LengthMismatch("message needs s polynomials");
  CodewordMatrix c(spec.s, std::vector<Elem>(spec.n, 0));
  for (std::size_t j = 0; j < spec.s; ++j) {
    const Coeffs& fj = msg.polys[j];
    if (sp::degree(fj) >= static_cast<int>(spec.k)) throw DegreeTooHigh("message polynomial degree must be < k");
    for (std::size_t i = 0; i < spec.n; ++i)
      c[j][i] = spec.kind == CodeKind::isrs ? sp::rem_eval(f, fj, spec.b[i])
                                            : sp::op_eval(f, fj, spec.beta[i], spec.params[i]);
  }
  return c;
}

ChannelOutput channel(const CodeSpec& spec, const CodewordMatrix& codeword, std::size_t t, Rng& rng) {
  const FieldCtx& f = *spec.field;
  const std::size_t s = spec.s, n = spec.n, sm = s * f.m();
  check_received(spec, codeword);
  ChannelOutput out{codeword, CodewordMatrix(s, std::vector<Elem>(n, 0)), t};
  if (t == 0) return out;
  switch (spec.kind) {
    case CodeKind::gabidulin:
      if (t > std::min(n, sm)) throw WeightInfeasible("rank error weight exceeds min(n, s m)");
      out.error = rank_error(f, s, n, t, rng);
      break;
    case CodeKind::ilrs: {
      const std::size_t ell = spec.blocks.size();
      std::vector<std::size_t> cap(ell), tl(ell, 0);
      std::size_t total = 0;
      for (std::size_t l = 0; l < ell; ++l) total += cap[l] = std::min(spec.blocks[l], sm);
      if (t > total) throw WeightInfeasible("sum-rank error weight exceeds the block capacities");
      for (std::size_t u = 0; u < t; ++u) {
        std::vector<std::size_t> open;
        for (std::size_t l = 0; l < ell; ++l)
          if (tl[l] < cap[l]) open.push_back(l);
        ++tl[open[rng.below(open.size())]];
      }
      std::size_t off = 0;
      for (std::size_t l = 0; l < ell; ++l) {
        auto el = rank_error(f, s, spec.blocks[l], tl[l], rng);
        for (std::size_t j = 0; j < s; ++j) std::copy(el[j].begin(), el[j].end(), out.error[j].begin() + off);
        off += spec.blocks[l];
      }
      break;
    }
    case CodeKind::isrs: {
      if (t > std::min(n, sm)) throw WeightInfeasible("skew error weight exceeds min(n, s m)");
      std::vector<std::size_t> pos(n);
      std::iota(pos.begin(), pos.end(), 0);
      for (int attempt = 0;; ++attempt) {
        if (attempt == 10000) throw WeightInfeasible("no error of the requested skew weight found");
        for (auto& row : out.error) std::fill(row.begin(), row.end(), 0);
        for (std::size_t u = 0; u < t; ++u) {
          std::swap(pos[u], pos[u + rng.below(n - u)]);
          bool nonzero = false;
          while (!nonzero)
            for (std::size_t j = 0; j < s; ++j) nonzero |= (out.error[j][pos[u]] = f.random(rng)) != 0;
        }
        if (weight(spec, out.error) == t) break;
      }
      break;
    }
  }
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < n; ++i) out.received[j][i] = f.add(codeword[j][i], out.error[j][i]);
  out.t = weight(spec, out.error);
  return out;
}

std::size_t rank_weight(const FieldCtx& f, const CodewordMatrix& x, std::size_t lo, std::size_t hi) {
  if (x.empty() || hi <= lo) return 0;
  return expand_columns(f, x, lo, hi).rank(f.fq());
}

std::size_t sum_rank_weight(const FieldCtx& f, const CodewordMatrix& x, const std::vector<std::size_t>& blocks) {
  std::size_t w = 0, off = 0;
  for (auto nl : blocks) {
    w += rank_weight(f, x, off, off + nl);
    off += nl;
  }
  return w;
}

std::size_t hamming_weight(const CodewordMatrix& x) {
  if (x.empty()) return 0;
  std::size_t w = 0;
  for (std::size_t i = 0; i < x.front().size(); ++i) {
    bool nz = false;
    for (const auto& row : x) nz |= row[i] != 0;
    w += nz;
  }
  return w;
}

std::size_t skew_weight_lclm(const CodeSpec& spec, const std::vector<Elem>& x) {
  const FieldCtx& f = *spec.field;
  std::vector<Elem> roots;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) roots.push_back(f.conj(spec.b[i], x[i]));
  return static_cast<std::size_t>(std::max(0, sp::degree(sp::minpoly_rem_fast(f, roots))));
}

std::size_t skew_weight_rank(const CodeSpec& spec, const CodewordMatrix& x) {
  const FieldCtx& f = *spec.field;
  CodewordMatrix y = x;
  for (auto& row : y)
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = f.mul(spec.beta[i], row[i]);
  return rank_weight(f, y, 0, spec.n);
}

std::size_t weight(const CodeSpec& spec, const CodewordMatrix& x) {
  switch (spec.kind) {
    case CodeKind::gabidulin:
      return rank_weight(*spec.field, x, 0, spec.n);
    case CodeKind::ilrs:
      return sum_rank_weight(*spec.field, x, spec.blocks);
    case CodeKind::isrs:
      return spec.s == 1 ? skew_weight_lclm(spec, x[0]) : skew_weight_rank(spec, x);
  }
  return 0;
}

CodewordMatrix mat_sub(const FieldCtx& f, const CodewordMatrix& a, const CodewordMatrix& b) {
  CodewordMatrix c = a;
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t i = 0; i < c[j].size(); ++i) c[j][i] = f.sub(a[j][i], b[j][i]);
  return c;
}

std::unique_ptr<OpMapFamily> make_op_map_family(const CodeSpec& spec, const CodewordMatrix& received) {
  if (spec.kind == CodeKind::isrs) throw InvalidCode("operator maps belong to gabidulin and ilrs codes");
  check_received(spec, received);
  return std::make_unique<OpMapFamily>(spec.field, interpolation_points(spec.beta, received), spec.params, spec.s);
}

std::unique_ptr<RemMapFamily> make_rem_map_family(const CodeSpec& spec, const CodewordMatrix& received) {
  if (spec.kind != CodeKind::isrs) throw InvalidCode("remainder maps belong to isrs codes");
  check_received(spec, received);
  return std::make_unique<RemMapFamily>(spec.field, interpolation_points(spec.b, received), spec.s);
}

std::unique_ptr<EvalMapFamily> make_map_family(const CodeSpec& spec, const CodewordMatrix& received) {
  if (spec.kind == CodeKind::isrs) return make_rem_map_family(spec, received);
  return make_op_map_family(spec, received);
}

WeightVec decoding_weight_vec(std::size_t s, std::size_t k) {
  WeightVec w(s + 1, static_cast<int>(k) - 1);
  w[0] = 0;
  return w;
}

std::size_t interp_degree_bound(std::size_t n, std::size_t k, std::size_t s) {
  return (n + s * (k - 1) + 1 + s) / (s + 1);
}

std::size_t decoding_radius(std::size_t n, std::size_t k, std::size_t s) {
  const std::size_t num = s * (n - k + 1);
  return num == 0 ? 0 : (num - 1) / (s + 1);
}

RootFindResult root_find(const CodeSpec& spec, const SkewPolyMat& basis, const CodewordMatrix& received) {
  const FieldCtx& f = *spec.field;
  const BaseField& fq = f.fq();
  const std::size_t m = f.m(), s = spec.s, k = spec.k, nu = s * k * m;
  const int bound = static_cast<int>(interp_degree_bound(spec.n, k, s));
  const WeightVec w = decoding_weight_vec(s, k);
  RootFindResult res;

  std::vector<RawRow> rows;
  for (const auto& row : basis.row_list())
    if (!row.is_zero() && w_degree(row, w) < bound) rows.push_back(row.raw());
  res.rows_used = rows.size();
  if (rows.empty()) return res;

  std::vector<Elem> unit(m);
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<std::uint32_t> e(m, 0);
    e[c] = 1;
    unit[c] = f.from_coords(e);
  }

  // Unknown (j, l, c) is coordinate c of the x^l coefficient of f^(j+1);
  // Q_j x^u f_l = Q_{j,u} sigma^u(f_l) x^(u+l). Last column holds -Q_0.
  std::size_t neq = 0;
  std::vector<std::size_t> offset;
  for (const auto& q : rows) {
    int top = sp::degree(q[0]);
    for (std::size_t j = 1; j <= s; ++j)
      if (!q[j].empty()) top = std::max(top, sp::degree(q[j]) + static_cast<int>(k) - 1);
    offset.push_back(neq);
    neq += static_cast<std::size_t>(top + 1) * m;
  }
  FqMatrix a(neq, nu + 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const RawRow& q = rows[r];
    const std::size_t o = offset[r];
    for (std::size_t d = 0; d < q[0].size(); ++d)
      for (std::size_t cc = 0; cc < m; ++cc) a.at(o + d * m + cc, nu) = f.coord(f.neg(q[0][d]), cc);
    for (std::size_t j = 1; j <= s; ++j)
      for (std::size_t u = 0; u < q[j].size(); ++u) {
        if (q[j][u] == 0) continue;
        for (std::size_t c = 0; c < m; ++c) {
          const Elem v = f.mul(q[j][u], f.aut(unit[c], static_cast<long long>(u)));
          for (std::size_t l = 0; l < k; ++l) {
            const std::size_t col = ((j - 1) * k + l) * m + c, eq = o + (u + l) * m;
            for (std::size_t cc = 0; cc < m; ++cc) a.at(eq + cc, col) = f.coord(v, cc);
          }
        }
      }
  }

  auto piv = a.rref(fq);
  if (!piv.empty() && piv.back() == nu) return res;
  std::vector<char> is_piv(nu, 0);
  for (auto c : piv) is_piv[c] = 1;
  std::vector<std::uint32_t> x0(nu, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) x0[piv[r]] = a.at(r, nu);
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < nu; ++c)
    if (!is_piv[c]) free.push_back(c);

  std::size_t total = 1;
  for (std::size_t i = 0; i < free.size(); ++i) {
    if (total > RootFindTuning::max_solutions / fq.q()) {
      res.overflow = true;
      return res;
    }
    total *= fq.q();
  }
  res.solutions = total;

  const std::size_t radius = decoding_radius(spec.n, k, s);
  std::vector<std::uint32_t> digit(free.size(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint32_t> x = x0;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (digit[i] == 0) continue;
      x[free[i]] = digit[i];
      for (std::size_t r = 0; r < piv.size(); ++r)
        x[piv[r]] = fq.sub(x[piv[r]], fq.mul(digit[i], a.at(r, free[i])));
    }
    Message msg;
    for (std::size_t j = 0; j < s; ++j) {
      Coeffs fj(k);
      for (std::size_t l = 0; l < k; ++l)
        fj[l] = f.from_coords(std::span<const std::uint32_t>(x).subspan((j * k + l) * m, m));
      sp::trim(fj);
      msg.polys.push_back(std::move(fj));
    }
    if (weight(spec, mat_sub(f, received, encode(spec, msg))) <= radius) res.messages.push_back(std::move(msg));
    for (std::size_t i = 0; i < digit.size() && ++digit[i] == fq.q(); ++i) digit[i] = 0;
  }
  return res;
}

DecodeReport decode(const CodeSpec& spec, const CodewordMatrix& received, Algo algo, MulStrategy mul) {
  auto maps = make_map_family(spec, received);
  const WeightVec w = decoding_weight_vec(spec.s, spec.k);
  KnhStats st;
  SkewPolyMat basis = algo == Algo::iter ? knh_iterative(*maps, w, &st) : knh_dac(*maps, w, &st, mul);
  RootFindResult rf = root_find(spec, basis, received);
  DecodeReport rep;
  rep.interp_degrees = st.degrees;
  rep.list_size_bound = rf.rows_used;
  rep.candidates = rf.messages.size();
  rep.success = rf.messages.size() == 1;
  if (rep.success) rep.message = rf.messages.front();
  return rep;
}

TrialResult run_trial(const CodeSpec& spec, std::size_t t, std::uint64_t seed, std::uint64_t trial, Algo algo) {
  Rng rng = Rng::derive(seed, trial);
  Message msg = random_message(spec, rng);
  ChannelOutput ch = channel(spec, encode(spec, msg), t, rng);
  TrialResult out;
  out.report = decode(spec, ch.received, algo);
  out.report.t_actual = ch.t;
  out.success = out.report.success && *out.report.message == msg;
  return out;
}

}  // namespace skewknh
