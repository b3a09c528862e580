#pragma once

#include <json.hpp>

#include "hyp2/hahn_banach.hpp"
#include "hyp2/two_functional.hpp"
#include "hyp2/two_norm.hpp"

// JSON encodings. Every parse_* function throws Error(ParseError) on
// malformed input; domain validation errors (antisymmetry, dimensions)
// surface with their own error codes.
namespace hyp2::json {

using nlohmann::json;

// {"p": .., "q": ..}; {"a": .., "b": ..} is accepted on input.
json encode(Hyperbolic z);
Hyperbolic parse_hyperbolic(const json& j);

json encode(const RealVec& v);
RealVec parse_real_vector(const json& j);

json encode(const RealMat& m);
RealMat parse_real_matrix(const json& j);

// List of scalar encodings.
json encode(const DVector& x);
DVector parse_dvector(const json& j);

// {"n": .., "basis1": [[..]], "basis2": [[..]]}
json encode(const DSubmodule& m);
DSubmodule parse_submodule(const json& j);

// {"C1": [[..]], "C2": [[..]]}
json encode(const DBilinear2Functional& f);
DBilinear2Functional parse_functional(const json& j);

// {"kind": "gramdet"}
json encode(const D2Norm& norm);
D2Norm parse_norm(const json& j);

json encode(const NormCertificate& cert);
json encode(const AxiomReport& report);
json encode(const ExtensionStep& step);
json encode(const ExtensionTrace& trace);

}  // namespace hyp2::json
