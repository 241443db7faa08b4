#pragma once

// JSON file formats: bodies, arrangements, point sets, chains, per-pair
// diagnostics and packing certificates. Numbers are read either as JSON
// numbers or as "p/q" / decimal strings; exact mode writes "p/q" strings.

#include "minkarr/arrangement.hpp"
#include "minkarr/kdistance.hpp"
#include "minkarr/lifting.hpp"
#include "minkarr/packing.hpp"
#include "minkarr/search.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace minkarr::io {

using json = nlohmann::json;

class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <Scalar S>
S scalar_from_json(const json& j)
{
    try {
        if (j.is_number_integer()) return num::from_int<S>(j.get<long>());
        if (j.is_number_float()) return num::parse<S>(j.dump());
        if (j.is_string()) return num::parse<S>(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw input_error(e.what());
    }
    throw input_error("expected a number or a rational string, got " + j.dump());
}

template <Scalar S>
json scalar_to_json(const S& x)
{
    if constexpr (scalar_traits<S>::exact) {
        return x.get_str();
    } else {
        return x == 0.0 ? 0.0 : x;  // no "-0.0" in output
    }
}

template <Scalar S>
Vector<S> vector_from_json(const json& j, std::optional<std::size_t> dim = std::nullopt)
{
    if (!j.is_array()) throw input_error("expected a coordinate array, got " + j.dump());
    Vector<S> v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = scalar_from_json<S>(j[i]);
    if (dim && v.dim() != *dim)
        throw input_error("coordinate array has length " + std::to_string(v.dim()) + ", expected " +
                          std::to_string(*dim));
    return v;
}

template <Scalar S>
json vector_to_json(const Vector<S>& v)
{
    json a = json::array();
    for (const auto& c : v) a.push_back(scalar_to_json(c));
    return a;
}

inline const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw input_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <Scalar S>
SymmetricBody<S> body_from_json(const json& j)
{
    const auto& dim_field = field(j, "dim");
    if (!dim_field.is_number_integer() || dim_field.get<long>() < 1) throw input_error("'dim' must be a positive integer");
    const auto dim = dim_field.get<std::size_t>();
    const auto type = field(j, "type").get<std::string>();
    try {
        if (type == "hpoly") {
            std::vector<Facet<S>> facets;
            for (const auto& f : field(j, "facets"))
                facets.push_back({vector_from_json<S>(field(f, "normal"), dim), scalar_from_json<S>(field(f, "offset"))});
            return SymmetricBody<S>::hpolytope(std::move(facets));
        }
        if (type == "vpoly") {
            std::vector<Vector<S>> vs;
            for (const auto& v : field(j, "vertices")) vs.push_back(vector_from_json<S>(v, dim));
            return SymmetricBody<S>::vpolytope(std::move(vs));
        }
        if (type == "ball") return SymmetricBody<S>::ball(dim);
    } catch (const geometry_error& e) {
        throw input_error(std::string("invalid body: ") + e.what());
    }
    throw input_error("unknown body type '" + type + "'");
}

template <Scalar S>
json body_to_json(const SymmetricBody<S>& b)
{
    json j{{"dim", b.dim()}, {"type", to_string(b.kind())}};
    if (b.kind() == BodyKind::hpoly) {
        json fs = json::array();
        for (const auto& f : b.facets()) fs.push_back({{"normal", vector_to_json(f.normal)}, {"offset", scalar_to_json(f.offset)}});
        j["facets"] = fs;
    } else if (b.kind() == BodyKind::vpoly) {
        json vs = json::array();
        for (const auto& v : b.vertices()) vs.push_back(vector_to_json(v));
        j["vertices"] = vs;
    }
    return j;
}

template <Scalar S>
Arrangement<S> arrangement_from_json(const json& j)
{
    auto body = body_from_json<S>(field(j, "body"));
    std::vector<Homothet<S>> members;
    const auto& hs = field(j, "homothets");
    if (!hs.is_array()) throw input_error("'homothets' must be an array");
    try {
        for (const auto& h : hs)
            members.emplace_back(vector_from_json<S>(field(h, "center"), body.dim()), scalar_from_json<S>(field(h, "ratio")));
        return Arrangement<S>(std::move(body), std::move(members));
    } catch (const geometry_error& e) {
        throw input_error(std::string("invalid arrangement: ") + e.what());
    }
}

template <Scalar S>
json arrangement_to_json(const Arrangement<S>& a)
{
    json hs = json::array();
    for (const auto& h : a.members()) hs.push_back({{"center", vector_to_json(h.center)}, {"ratio", scalar_to_json(h.ratio)}});
    return {{"body", body_to_json(a.body())}, {"homothets", hs}};
}

template <Scalar S>
PointSet<S> pointset_from_json(const json& j)
{
    const auto dim = field(j, "dim").get<std::size_t>();
    std::vector<Vector<S>> pts;
    for (const auto& p : field(j, "points")) pts.push_back(vector_from_json<S>(p, dim));
    try {
        return PointSet<S>(dim, std::move(pts));
    } catch (const geometry_error& e) {
        throw input_error(std::string("invalid point set: ") + e.what());
    }
}

template <Scalar S>
json pointset_to_json(const PointSet<S>& s)
{
    json pts = json::array();
    for (const auto& p : s.points()) pts.push_back(vector_to_json(p));
    return {{"dim", s.dim()}, {"points", pts}};
}

template <Scalar S>
json spectrum_to_json(const DistanceSpectrum<S>& sp)
{
    json a = json::array();
    for (const auto& e : sp) a.push_back({{"distance", scalar_to_json(e.distance)}, {"multiplicity", e.multiplicity}});
    return a;
}

template <Scalar S>
json chain_to_json(const ChainResult<S>& c, const PairCheck& verdict)
{
    json pts = json::array(), ls = json::array();
    for (const auto& p : c.points) pts.push_back(vector_to_json(p));
    for (const auto& l : c.lambdas) ls.push_back(scalar_to_json(l));
    json j{{"indices", c.indices}, {"points", pts}, {"lambdas", ls}, {"target", c.target},
           {"complete", c.complete()}, {"guaranteed", c.guaranteed}, {"backtracked", c.backtracked},
           {"verified", verdict.ok}};
    if (verdict.witness) j["offending_pair"] = {verdict.witness->first, verdict.witness->second};
    return j;
}

template <Scalar S>
json ratio_to_json(const SlabRatio<S>& r)
{
    switch (r.kind) {
    case SlabRatio<S>::Kind::finite: return scalar_to_json(r.value);
    case SlabRatio<S>::Kind::unbounded: return "unbounded";
    case SlabRatio<S>::Kind::invalid: return "invalid";
    }
    return nullptr;
}

template <Scalar S>
json pair_to_json(const PairAnalysis<S>& pa, const LiftedConfig<S>& lifted)
{
    json alphas = json::array(), intervals = json::array();
    for (const auto& a : pa.shadow.alphas) alphas.push_back(scalar_to_json(a));
    for (const auto& t : pa.shadow.t) intervals.push_back({scalar_to_json(t.lo), scalar_to_json(t.hi)});
    json j{{"pair", {pa.frame.i, pa.frame.j}},
           {"frame",
            {{"r", vector_to_json(pa.frame.r_vec)},
             {"f_normal", vector_to_json(pa.frame.f_normal)},
             {"f_offset", scalar_to_json(pa.frame.f_offset)}}},
           {"alphas", alphas},
           {"intervals", intervals},
           {"common", {scalar_to_json(pa.shadow.common.lo), scalar_to_json(pa.shadow.common.hi)}},
           {"x", scalar_to_json(pa.shadow.x_coord)},
           {"u_i", scalar_to_json(pa.shadow.u_i)},
           {"u_j", scalar_to_json(pa.shadow.u_j)},
           {"ratio", ratio_to_json(pa.value)},
           {"slab",
            {{"normal", vector_to_json(pa.slab.normal)},
             {"k_ij", scalar_to_json(pa.slab.k_ij)},
             {"k_ji", scalar_to_json(pa.slab.k_ji)},
             {"g_ij", scalar_to_json(pa.slab.g_ij)},
             {"g_ji", scalar_to_json(pa.slab.g_ji)}}},
           {"slab_contains_all", pa.containment.ok}};
    if (pa.containment.offending) j["slab_offending_point"] = *pa.containment.offending;
    if (pa.value.finite() && pa.slab.s_i) {
        const auto id = verify_ratio_identity(pa.slab, lifted.points[pa.frame.i], lifted.points[pa.frame.j], pa.value.value);
        j["ratio_identity"] = id.holds;
    }
    return j;
}

template <Scalar S>
json certificate_to_json(const PackingCertificate<S>& c)
{
    json stages = json::array(), eq1 = json::array();
    for (const auto& s : c.stages) stages.push_back({{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
    for (const auto& p : c.eq1)
        eq1.push_back({{"pair", {p.i, p.j}}, {"ratio", p.ratio ? scalar_to_json(*p.ratio) : json("infinite")}, {"ok", p.ok}});
    json j{{"lambda", scalar_to_json(c.lambda)},
           {"dim", c.dim},
           {"affine_dim", c.affine_dim},
           {"n", c.n},
           {"bound", scalar_to_json(c.bound)},
           {"stages", stages},
           {"eq1", eq1},
           {"verdict", c.verdict ? "pass" : "fail"}};
    if (!c.verdict) j["failed_stage"] = c.failed_stage();
    if (c.offending_pair) j["offending_pair"] = {c.offending_pair->first, c.offending_pair->second};
    if (c.volume_hull) {
        json vols = json::array();
        for (const auto& v : c.volume_copies) vols.push_back(scalar_to_json(v));
        j["volumes"] = {{"hull", scalar_to_json(*c.volume_hull)},
                        {"copies", vols},
                        {"sum", scalar_to_json(*c.volume_sum)},
                        {"hull_vertices", c.hull_vertices}};
    }
    return j;
}

template <Scalar S>
json theorem1_to_json(const Theorem1Report<S>& r)
{
    json pairs = json::array();
    for (const auto& p : r.pairs)
        pairs.push_back({{"pair", {p.i, p.j}}, {"ratio", ratio_to_json(p.value)}, {"slab_ok", p.slab_ok},
                         {"ratio_ok", p.ratio_ok}, {"identity_ok", p.identity_ok}});
    json j{{"n", r.n}, {"bound", r.bound}, {"minkowski", r.minkowski.ok}, {"pairwise_intersecting", r.intersecting.ok},
           {"pairs", pairs}, {"verdict", r.passed ? "pass" : "fail"}};
    if (!r.failure.empty()) j["failure"] = r.failure;
    if (r.offending_pair) j["offending_pair"] = {r.offending_pair->first, r.offending_pair->second};
    if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
    return j;
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw input_error("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << text;
}

}  // namespace minkarr::io
