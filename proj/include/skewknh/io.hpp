#pragma once

#include <string>

#include "skewknh/codes.hpp"

namespace skewknh {

// Polynomials as ascending coefficient lists, each coefficient a coordinate
// list: "[[1,0],[0,1]]" is 1 + z x over F_4. The zero polynomial is "[]".
std::string poly_to_text(const FieldCtx& f, const Coeffs& a);
Coeffs poly_from_text(const FieldCtx& f, const std::string& text);
// Row-major nesting of poly_to_text.
std::string mat_to_text(const SkewPolyMat& m);
// A single coordinate list, "[0,1]".
Elem elem_from_text(const FieldCtx& f, const std::string& text);

// {"p":2,"r":1,"m":3,"modulus":[1,1,0,1],"aut_exp":1,"der_coeff":[0,0,0]}
FieldSpec field_spec_from_json(const std::string& text);
std::string field_spec_to_json(const FieldSpec& spec);

// {"kind":"ilrs","p":3,"r":1,"m":6,"n":12,"k":3,"s":2,"blocks":[6,6],"seed":42}
// with optional "beta", "xi" (lists of coordinate lists) and "a".
CodeParams code_params_from_json(const std::string& text);
std::string code_params_to_json(const CodeParams& p);

}  // namespace skewknh
