#pragma once

#include "hpl/hpptest.hpp"
#include "hpl/matroid.hpp"
#include "hpl/polycore.hpp"
#include "hpl/representations.hpp"

#include <json.hpp>

#include <string>

namespace hpl {

using json = nlohmann::json;

// Polynomials: {"n": int, "terms": [{"subset": [..] | "exponents": [..], "re": x, "im": y}]}.
json poly_to_json(const MaPoly& p);
json poly_to_json(const GenPoly& p);
// Accepts both term forms; exponent terms above 1 raise std::invalid_argument
// for the multiaffine reader.
MaPoly ma_poly_from_json(const json& j);
GenPoly gen_poly_from_json(const json& j);

// Matroids: {"n": int, "bases": [[..], ..]}.
json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const json& j);

// Matrices: {"rows", "cols", "entries": [[{"re","im"} | number, ..], ..]}.
ComplexMatrix complex_matrix_from_json(const json& j);
NonnegMatrix nonneg_matrix_from_json(const json& j);
json matrix_to_json(const ComplexMatrix& a);

// Presentations: {"n": int, "sets": [[..], ..]}.
json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

std::string rational_string(const Rational& q);

json counterexample_to_json(const Counterexample& c);
json report_to_json(const HppReport& r);
json niceness_to_json(const NicenessSolution& s);
json transversal_to_json(const TransversalCheck& t);

}  // namespace hpl
