#include "hyp2/instance.hpp"

#include "hyp2/sampling.hpp"

namespace hyp2 {

InstanceFile generate_instance(const GenOptions& opts) {
    if (opts.n < 2 || opts.n > 8) throw Error(ErrorCode::BadDims, "n must lie in [2, 8]");
    if (opts.dim1 < 0 || opts.dim1 > opts.n || opts.dim2 < 0 || opts.dim2 > opts.n) {
        throw Error(ErrorCode::BadDims, "component dimensions of M must lie in [0, n]");
    }
    Rng rng(opts.seed);
    const int n = opts.n;

    InstanceFile inst;
    inst.n = n;
    inst.seed = opts.seed;
    for (;;) {
        std::vector<RealVec> b1, b2;
        for (int i = 0; i < opts.dim1; ++i) b1.push_back(random_real_vector(rng, n));
        for (int i = 0; i < opts.dim2; ++i) b2.push_back(random_real_vector(rng, n));
        try {
            inst.m = DSubmodule(n, std::move(b1), std::move(b2));
            break;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::InvalidSubmodule) throw;
        }
    }
    RealVec z1 = random_real_vector(rng, n);
    RealVec z2 = random_real_vector(rng, n);
    if (opts.degenerate_z) {
        // Alternate which idempotent component vanishes.
        (opts.seed % 2 == 0 ? z2 : z1).setZero();
    }
    inst.z = DVector(std::move(z1), std::move(z2));
    const RealMat c1 = random_antisymmetric(rng, n);
    const RealMat c2 = random_antisymmetric(rng, n);
    inst.functional = DBilinear2Functional(c1, c2);
    return inst;
}

json::json encode(const InstanceFile& inst) {
    return {{"n", inst.n},
            {"M", json::encode(inst.m)},
            {"z", json::encode(inst.z)},
            {"functional", json::encode(inst.functional)},
            {"norm", json::encode(inst.norm)},
            {"seed", inst.seed}};
}

InstanceFile parse_instance(const json::json& j) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "instance must be a JSON object");
    auto require = [&](const char* key) -> const json::json& {
        const auto it = j.find(key);
        if (it == j.end()) throw Error(ErrorCode::ParseError, std::string("instance is missing \"") + key + "\"");
        return *it;
    };
    InstanceFile inst;
    const auto& nj = require("n");
    if (!nj.is_number_integer()) throw Error(ErrorCode::ParseError, "n must be an integer");
    inst.n = nj.get<int>();
    inst.m = json::parse_submodule(require("M"));
    inst.z = json::parse_dvector(require("z"));
    inst.functional = json::parse_functional(require("functional"));
    if (j.contains("norm")) inst.norm = json::parse_norm(j["norm"]);
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw Error(ErrorCode::ParseError, "seed must be a non-negative integer");
        inst.seed = j["seed"].get<std::uint64_t>();
    }
    if (inst.m.dim() != inst.n || inst.z.size() != inst.n || inst.functional.dim() != inst.n) {
        throw Error(ErrorCode::DimensionMismatch, "M, z and functional must all have dimension n");
    }
    return inst;
}

}  // namespace hyp2
