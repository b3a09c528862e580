#pragma once

#include <cstdint>

#include "hyp2/json_io.hpp"

namespace hyp2 {

// On-disk problem instance shared by the CLI subcommands:
//   {"n", "M": {..}, "z": [..], "functional": {"C1", "C2"},
//    "norm": {"kind": "gramdet"}, "seed"}
struct InstanceFile {
    int n = 0;
    DSubmodule m;
    DVector z;
    DBilinear2Functional functional;
    D2Norm norm = D2Norm::gram_det();
    std::uint64_t seed = 0;

    ExtensionProblem problem(bool swap_domain = false) const { return {m, z, functional, norm, swap_domain}; }
};

struct GenOptions {
    std::uint64_t seed = 1;
    int n = 3;
    int dim1 = 1;  // dimension of M1
    int dim2 = 1;  // dimension of M2
    bool degenerate_z = false;
};

// Deterministic random instance. Throws BadDims unless 2 <= n <= 8 and
// 0 <= dim1, dim2 <= n.
InstanceFile generate_instance(const GenOptions& opts);

json::json encode(const InstanceFile& inst);
// Validates dimensions and antisymmetry.
InstanceFile parse_instance(const json::json& j);

}  // namespace hyp2
