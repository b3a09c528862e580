#include "hyp2/json_io.hpp"

#include <string>

namespace hyp2::json {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double number(const json& j, const char* what) {
    if (!j.is_number()) fail(std::string(what) + " must be a number");
    return j.get<double>();
}

const json& field(const json& j, const char* key) {
    if (!j.is_object()) fail(std::string("expected an object holding \"") + key + "\"");
    const auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
    return *it;
}

}  // namespace

json encode(Hyperbolic z) { return {{"p", z.p}, {"q", z.q}}; }

Hyperbolic parse_hyperbolic(const json& j) {
    if (!j.is_object()) fail("scalar must be an object {\"p\",\"q\"} or {\"a\",\"b\"}");
    if (j.contains("p") || j.contains("q")) {
        return {number(field(j, "p"), "p"), number(field(j, "q"), "q")};
    }
    if (j.contains("a") || j.contains("b")) {
        return Hyperbolic::from_cartesian(number(field(j, "a"), "a"), number(field(j, "b"), "b"));
    }
    fail("scalar needs either p/q or a/b fields");
}

json encode(const RealVec& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

RealVec parse_real_vector(const json& j) {
    if (!j.is_array()) fail("real vector must be an array of numbers");
    RealVec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = number(j[i], "vector entry");
    return v;
}

json encode(const RealMat& m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(encode(RealVec(m.row(i).transpose())));
    return out;
}

RealMat parse_real_matrix(const json& j) {
    if (!j.is_array()) fail("matrix must be an array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j[0].size());
    RealMat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const RealVec r = parse_real_vector(j[static_cast<std::size_t>(i)]);
        if (r.size() != cols) fail("matrix rows differ in length");
        m.row(i) = r.transpose();
    }
    return m;
}

json encode(const DVector& x) {
    json out = json::array();
    for (int i = 0; i < x.size(); ++i) out.push_back(encode(x.coord(i)));
    return out;
}

DVector parse_dvector(const json& j) {
    if (!j.is_array()) fail("DVector must be an array of scalars");
    std::vector<Hyperbolic> coords;
    for (const auto& c : j) coords.push_back(parse_hyperbolic(c));
    return DVector(coords);
}

json encode(const DSubmodule& m) {
    json b1 = json::array(), b2 = json::array();
    for (const auto& v : m.basis1()) b1.push_back(encode(v));
    for (const auto& v : m.basis2()) b2.push_back(encode(v));
    return {{"n", m.dim()}, {"basis1", b1}, {"basis2", b2}};
}

DSubmodule parse_submodule(const json& j) {
    const json& nj = field(j, "n");
    if (!nj.is_number_integer()) fail("submodule n must be an integer");
    const int n = nj.get<int>();
    auto basis = [&](const char* key) {
        const json& list = field(j, key);
        if (!list.is_array()) fail(std::string(key) + " must be an array of vectors");
        std::vector<RealVec> out;
        for (const auto& v : list) {
            RealVec r = parse_real_vector(v);
            if (r.size() != n) throw Error(ErrorCode::DimensionMismatch, std::string(key) + " vector length differs from n");
            out.push_back(std::move(r));
        }
        return out;
    };
    return DSubmodule(n, basis("basis1"), basis("basis2"));
}

json encode(const DBilinear2Functional& f) { return {{"C1", encode(f.c1())}, {"C2", encode(f.c2())}}; }

DBilinear2Functional parse_functional(const json& j) {
    const RealMat c1 = parse_real_matrix(field(j, "C1"));
    const RealMat c2 = parse_real_matrix(field(j, "C2"));
    if (c1.rows() != c2.rows()) throw Error(ErrorCode::DimensionMismatch, "C1 and C2 differ in size");
    return DBilinear2Functional(c1, c2);
}

json encode(const D2Norm& norm) {
    if (norm.is_gram_det()) return {{"kind", "gramdet"}};
    return {{"kind", norm.norm1.kind() + "/" + norm.norm2.kind()}};
}

D2Norm parse_norm(const json& j) {
    const json& kind = field(j, "kind");
    if (!kind.is_string()) fail("norm kind must be a string");
    if (kind.get<std::string>() != "gramdet") {
        throw Error(ErrorCode::UnsupportedNorm, "unknown norm kind \"" + kind.get<std::string>() + "\"");
    }
    return D2Norm::gram_det();
}

json encode(const NormCertificate& cert) {
    return {{"method", to_string(cert.method)},
            {"value", encode(cert.value)},
            {"witness", {{"x", encode(cert.witness_x)}, {"y", encode(cert.witness_y)}}}};
}

json encode(const AxiomReport& report) {
    json out;
    for (int a = 0; a < 4; ++a) out[kAxiomNames[a]] = report.worst[a];
    json pass;
    for (int a = 0; a < 4; ++a) pass[kAxiomNames[a]] = report.pass[a];
    out["pass"] = pass;
    out["independent_zero_hits"] = report.independent_zero_hits;
    out["n"] = report.dim;
    out["samples"] = report.samples;
    out["all_pass"] = report.all_pass();
    return out;
}

json encode(const ExtensionStep& step) {
    return {{"x_prime", encode(step.x_prime)},
            {"m0", encode(step.m0)},
            {"m", encode(step.m)},
            {"r", encode(step.r)}};
}

json encode(const ExtensionTrace& trace) {
    json steps = json::array();
    for (const auto& s : trace.steps) steps.push_back(encode(s));
    return {{"steps", steps},
            {"z_used", encode(trace.z_used)},
            {"normalized_z", trace.normalized_z},
            {"zero_branch", trace.zero_branch},
            {"swap_domain", trace.swapped},
            {"final", {{"F", encode(trace.F)}, {"norm_f", encode(trace.norm_f)}, {"norm_F", encode(trace.norm_F)}}}};
}

}  // namespace hyp2::json
