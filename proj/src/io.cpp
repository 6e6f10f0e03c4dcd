#include "skewknh/io.hpp"

#include <json.hpp>

#include "skewknh/errors.hpp"

namespace skewknh {

using nlohmann::json;

namespace {

json elem_json(const FieldCtx& f, Elem a) { return f.coords(a); }

Elem elem_from(const FieldCtx& f, const json& j) {
  if (!j.is_array() || j.size() != f.m()) throw ParseError("field element needs m coordinates");
  std::vector<std::uint32_t> c;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= f.q()) throw ParseError("coordinate outside F_q");
    c.push_back(v.get<std::uint32_t>());
  }
  return f.from_coords(c);
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

template <class T>
T get_or(const json& j, const char* key, T dflt) {
  if (!j.contains(key)) return dflt;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("bad value for '") + key + "'");
  }
}

}  // namespace

std::string poly_to_text(const FieldCtx& f, const Coeffs& a) {
  json j = json::array();
  for (Elem c : a) j.push_back(elem_json(f, c));
  return j.dump();
}

Coeffs poly_from_text(const FieldCtx& f, const std::string& text) {
  json j = parse(text);
  if (!j.is_array()) throw ParseError("polynomial must be a list of coefficients");
  Coeffs c;
  for (const auto& e : j) c.push_back(elem_from(f, e));
  sp::trim(c);
  return c;
}

Elem elem_from_text(const FieldCtx& f, const std::string& text) { return elem_from(f, parse(text)); }

std::string mat_to_text(const SkewPolyMat& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += poly_to_text(m.at(i, j).field(), m.at(i, j).coeffs());
    }
    out += ']';
  }
  return out + "]";
}

FieldSpec field_spec_from_json(const std::string& text) {
  json j = parse(text);
  FieldSpec s;
  s.p = get_or<std::uint32_t>(j, "p", 2);
  s.r = get_or<std::uint32_t>(j, "r", 1);
  s.m = get_or<std::uint32_t>(j, "m", 1);
  s.modulus = get_or<std::vector<std::uint32_t>>(j, "modulus", {});
  s.aut_exp = get_or<std::uint32_t>(j, "aut_exp", 1);
  s.der_coeff = get_or<std::vector<std::uint32_t>>(j, "der_coeff", {});
  return s;
}

std::string field_spec_to_json(const FieldSpec& s) {
  json j{{"p", s.p}, {"r", s.r}, {"m", s.m}, {"modulus", s.modulus}, {"aut_exp", s.aut_exp}};
  j["der_coeff"] = s.der_coeff.empty() ? std::vector<std::uint32_t>(s.m, 0) : s.der_coeff;
  return j.dump();
}

CodeParams code_params_from_json(const std::string& text) {
  json j = parse(text);
  CodeParams p;
  p.kind = parse_code_kind(get_or<std::string>(j, "kind", "gabidulin"));
  p.p = get_or<std::uint32_t>(j, "p", p.p);
  p.r = get_or<std::uint32_t>(j, "r", p.r);
  p.m = get_or<std::uint32_t>(j, "m", p.m);
  p.n = get_or<std::size_t>(j, "n", p.n);
  p.k = get_or<std::size_t>(j, "k", p.k);
  p.s = get_or<std::size_t>(j, "s", p.s);
  p.blocks = get_or<std::vector<std::size_t>>(j, "blocks", {});
  p.seed = get_or<std::uint64_t>(j, "seed", 0);
  if (j.contains("beta") || j.contains("xi") || j.contains("a")) {
    FieldPtr f = FieldCtx::create_default(p.p, p.r, p.m);
    for (const char* key : {"beta", "xi"}) {
      if (!j.contains(key)) continue;
      if (!j[key].is_array()) throw ParseError(std::string(key) + " must be a list");
      auto& dst = std::string(key) == "beta" ? p.beta : p.xi;
      for (const auto& e : j[key]) dst.push_back(elem_from(*f, e));
    }
    if (j.contains("a")) p.a = elem_from(*f, j["a"]);
  }
  return p;
}

std::string code_params_to_json(const CodeParams& p) {
  json j{{"kind", to_string(p.kind)}, {"p", p.p}, {"r", p.r}, {"m", p.m}, {"n", p.n},
         {"k", p.k}, {"s", p.s}, {"seed", p.seed}};
  if (!p.blocks.empty()) j["blocks"] = p.blocks;
  if (!p.beta.empty() || !p.xi.empty() || p.a) {
    FieldPtr f = FieldCtx::create_default(p.p, p.r, p.m);
    auto list = [&](const std::vector<Elem>& v) {
      json a = json::array();
      for (Elem e : v) a.push_back(elem_json(*f, e));
      return a;
    };
    if (!p.beta.empty()) j["beta"] = list(p.beta);
    if (!p.xi.empty()) j["xi"] = list(p.xi);
    if (p.a) j["a"] = elem_json(*f, *p.a);
  }
  return j.dump();
}

}  // namespace skewknh
