// Command-line front end. Exit codes: 0 pass, 1 check failure, 2 input error.

#include "minkarr/minkarr.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace minkarr;
using io::json;

namespace {

struct RunConfig {
    std::string mode = "exact";
    double eps = 1e-9;
    std::uint64_t seed = 0;
    std::size_t iters = 1000;
};

struct Paths {
    std::string input;
    std::string body;
    std::string output;
    std::string certificate;
    std::string svg;
    std::string warm;
};

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;

void header(std::ostream& out, const RunConfig& rc)
{
    out << "seed: " << rc.seed << "\n";
    out << "mode: " << rc.mode << "\n";
}

std::string pair_str(const std::optional<IndexPair>& p)
{
    if (!p) return "";
    return " (pair " + std::to_string(p->first) + " " + std::to_string(p->second) + ")";
}

template <Scalar S>
int cmd_verify(const RunConfig& rc, const Paths& paths)
{
    const auto arr = io::arrangement_from_json<S>(io::read_json_file(paths.input));
    std::ostringstream out;
    header(out, rc);
    out << "homothets: " << arr.size() << "\n";
    out << "dimension: " << arr.dim() << "\n";
    bool passed = true;
    json cert;
    if (arr.dim() == 2) {
        const auto rep = theorem1_pipeline(arr);
        out << "minkowski: " << (rep.minkowski.ok ? "pass" : "fail") << pair_str(rep.minkowski.witness) << "\n";
        out << "pairwise-intersecting: " << (rep.intersecting.ok ? "pass" : "fail")
            << pair_str(rep.intersecting.witness) << "\n";
        if (!rep.pairs.empty()) {
            std::size_t ok = 0;
            for (const auto& p : rep.pairs) ok += p.slab_ok && p.ratio_ok && p.identity_ok;
            out << "pair slabs: " << ok << "/" << rep.pairs.size() << " pass\n";
        }
        if (rep.certificate) {
            const auto& c = *rep.certificate;
            out << "packing certificate: " << (c.verdict ? "pass" : "fail at " + c.failed_stage())
                << " (lifted dimension " << c.dim << ", affine dimension " << c.affine_dim << ")\n";
        }
        out << "bound: " << rep.n << (rep.n <= rep.bound ? " <= " : " > ") << rep.bound << "\n";
        if (!rep.passed) out << "failure: " << rep.failure << pair_str(rep.offending_pair) << "\n";
        passed = rep.passed;
        cert = io::theorem1_to_json(rep);
    } else {
        const auto mk = is_minkowski_arrangement(arr);
        const auto pi = is_pairwise_intersecting(arr);
        out << "minkowski: " << (mk.ok ? "pass" : "fail") << pair_str(mk.witness) << "\n";
        out << "pairwise-intersecting: " << (pi.ok ? "pass" : "fail") << pair_str(pi.witness) << "\n";
        out << "packing pipeline: skipped (planar arrangements only)\n";
        const auto bound = kappa_upper_bound(static_cast<int>(arr.dim()));
        out << "bound: " << arr.size() << (arr.size() <= bound ? " <= " : " > ") << bound << "\n";
        passed = mk.ok && pi.ok && arr.size() <= bound;
        cert = {{"n", arr.size()}, {"bound", bound}, {"minkowski", mk.ok}, {"pairwise_intersecting", pi.ok},
                {"verdict", passed ? "pass" : "fail"}};
        if (!mk.ok) cert["offending_pair"] = {mk.witness->first, mk.witness->second};
        else if (!pi.ok) cert["offending_pair"] = {pi.witness->first, pi.witness->second};
    }
    out << "verdict: " << (passed ? "pass" : "fail") << "\n";
    if (!paths.certificate.empty()) {
        cert["seed"] = rc.seed;
        cert["mode"] = rc.mode;
        io::write_text_file(paths.certificate, cert.dump(2) + "\n");
    }
    std::cout << out.str();
    return passed ? exit_pass : exit_fail;
}

template <Scalar S>
int cmd_lift(const RunConfig& rc, const Paths& paths, const std::vector<std::size_t>& pair, DiagramSpec diagram)
{
    const auto arr = io::arrangement_from_json<S>(io::read_json_file(paths.input));
    if (pair.size() != 2 || pair[0] >= arr.size() || pair[1] >= arr.size() || pair[0] == pair[1])
        throw io::input_error("--pair needs two distinct indices below " + std::to_string(arr.size()));
    const auto pa = analyze_pair(arr, pair[0], pair[1]);
    const auto lifted = lift(arr);
    json j = io::pair_to_json(pa, lifted);
    const auto l6 = check_lemma6(pa.shadow, arr[pair[0]].ratio, arr[pair[1]].ratio);
    j["lemma6_premise"] = l6.premise;
    j["ratio_at_most_2"] = l6.value.finite() && num::le(l6.value.value, S(2));
    j["seed"] = rc.seed;
    j["mode"] = rc.mode;
    if (!paths.svg.empty()) {
        diagram.i = pair[0];
        diagram.j = pair[1];
        io::write_text_file(paths.svg, render_pair_svg(arr, pa.shadow, diagram));
    }
    std::cout << j.dump(2) << "\n";
    const bool identity = !j.contains("ratio_identity") || j["ratio_identity"].get<bool>();
    return pa.containment.ok && identity ? exit_pass : exit_fail;
}

template <Scalar S>
int cmd_search(const RunConfig& rc, const Paths& paths, std::size_t dim)
{
    const auto body = io::body_from_json<S>(io::read_json_file(paths.body));
    if (dim != body.dim())
        throw io::input_error("--dim " + std::to_string(dim) + " does not match the body dimension " +
                              std::to_string(body.dim()));
    std::optional<Arrangement<S>> warm;
    if (!paths.warm.empty()) warm = io::arrangement_from_json<S>(io::read_json_file(paths.warm));
    SearchConfig cfg;
    cfg.seed = rc.seed;
    cfg.iterations = rc.iters;
    const auto res = search_arrangement(body, dim, cfg, warm);
    const auto bound = kappa_upper_bound(static_cast<int>(dim));
    io::write_text_file(paths.output, io::arrangement_to_json(*res.best).dump(2) + "\n");
    std::ostringstream out;
    header(out, rc);
    out << "iterations: " << res.iterations << "\n";
    out << "accepted moves: " << res.accepted << "\n";
    out << "removals: " << res.removals << "\n";
    out << "size: " << res.size << "\n";
    out << "bound: " << res.size << (res.size <= bound ? " <= " : " > ") << bound << "\n";
    out << "output: " << paths.output << "\n";
    std::cout << out.str();
    return res.size <= bound ? exit_pass : exit_fail;
}

template <Scalar S>
int cmd_kdist(const RunConfig& rc, const Paths& paths, const std::string& what, std::size_t dim, std::size_t k,
              std::size_t target)
{
    if (what == "grid") {
        if (dim == 0 || k == 0) throw io::input_error("grid needs --dim and --k");
        const auto g = grid_set<S>(dim, k);
        const auto text = io::pointset_to_json(g).dump(2) + "\n";
        if (paths.output.empty()) std::cout << text;
        else io::write_text_file(paths.output, text);
        return exit_pass;
    }
    const auto set = io::pointset_from_json<S>(io::read_json_file(paths.input));
    if (paths.body.empty()) throw io::input_error("--body is required");
    const auto body = io::body_from_json<S>(io::read_json_file(paths.body));
    if (body.dim() != set.dim()) throw io::input_error("point set and body dimensions differ");
    json j{{"seed", rc.seed}, {"mode", rc.mode}, {"n", set.size()}};
    if (what == "spectrum") {
        const auto sp = spectrum(body, set);
        j["k"] = sp.size();
        j["spectrum"] = io::spectrum_to_json(sp);
        std::cout << j.dump(2) << "\n";
        return exit_pass;
    }
    // chain
    if (k == 0) k = spectrum(body, set).size();
    if (target == 0) {
        std::size_t e = 0, p = 1;
        while (p < set.size() && k > 1) {
            p *= k;
            ++e;
        }
        target = e + 1;
    }
    const auto ch = greedy_chain(body, set, k, target);
    const auto verdict = verify_chain(body, ch);
    j["k"] = k;
    j["chain"] = io::chain_to_json(ch, verdict);
    const bool pairwise = ch.points.empty() ||
                          is_pairwise_intersecting(chain_to_arrangement(ch.points, ch.lambdas, body)).ok;
    j["arrangement_pairwise_intersecting"] = pairwise;
    const auto text = j.dump(2) + "\n";
    if (paths.output.empty()) std::cout << text;
    else io::write_text_file(paths.output, text);
    return verdict.ok && ch.complete() && pairwise ? exit_pass : exit_fail;
}

template <Scalar S>
int cmd_cube(const Paths& paths, std::size_t dim)
{
    const auto text = io::arrangement_to_json(cube_arrangement<S>(dim)).dump(2) + "\n";
    if (paths.output.empty()) std::cout << text;
    else io::write_text_file(paths.output, text);
    return exit_pass;
}

int cmd_bounds(int d)
{
    json j{{"d", d}};
    j["kappa_upper_bound"] = kappa_upper_bound(d);
    if (d >= 2) {
        const auto t2 = theorem2_bound(d);
        if (std::holds_alternative<Infinite>(t2)) j["theorem2_bound"] = "infinite";
        else j["theorem2_bound"] = static_cast<double>(std::get<long double>(t2));
        const auto f = f_of_d(d);
        if (std::holds_alternative<Undefined>(f)) j["f"] = "undefined";
        else j["f"] = std::get<mpz_class>(f).get_str();
    }
    std::cout << j.dump(2) << "\n";
    return exit_pass;
}

template <class Fn>
int dispatch(const RunConfig& rc, Fn&& fn)
{
    if (rc.mode == "float") {
        scalar_traits<double>::epsilon() = rc.eps;
        return fn(double{});
    }
    return fn(mpq_class{});
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Pairwise-intersecting Minkowski arrangements: verification, lifting, search, k-distance tools"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig rc;
    Paths paths;
    app.add_option("--mode", rc.mode, "scalar mode")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
    app.add_option("--eps", rc.eps, "absolute tolerance in float mode")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--seed", rc.seed, "random seed")->capture_default_str();
    app.add_option("--iters", rc.iters, "iteration budget")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "check an arrangement file");
    verify->add_option("file", paths.input, "arrangement JSON")->required();
    verify->add_option("--certificate", paths.certificate, "write the certificate JSON here");

    std::vector<std::size_t> pair;
    DiagramSpec diagram;
    bool no_segments = false, no_x = false, no_lines = false, no_slab = false;
    auto* liftc = app.add_subcommand("lift", "per-pair shadow, slab and ratio diagnostics");
    liftc->add_option("file", paths.input, "arrangement JSON")->required();
    liftc->add_option("--pair", pair, "pair indices i j")->expected(2)->required();
    liftc->add_option("--svg", paths.svg, "write the plane diagram here");
    liftc->add_option("--width", diagram.width, "canvas width")->capture_default_str();
    liftc->add_option("--height", diagram.height, "canvas height")->capture_default_str();
    liftc->add_flag("--no-segments", no_segments, "hide the segments t_k");
    liftc->add_flag("--no-x", no_x, "hide the common point x");
    liftc->add_flag("--no-lines", no_lines, "hide the lines a_i, b_i, a_j, b_j");
    liftc->add_flag("--no-slab", no_slab, "hide the wedge");

    std::size_t dim = 0;
    auto* search = app.add_subcommand("search", "seeded local search for large arrangements");
    search->add_option("body", paths.body, "body JSON")->required();
    search->add_option("--dim", dim, "dimension")->required();
    search->add_option("--warm", paths.warm, "warm-start arrangement JSON");
    search->add_option("-o,--output", paths.output, "best arrangement JSON")->required();

    std::string kwhat;
    std::size_t k = 0, target = 0;
    auto* kdist = app.add_subcommand("kdist", "k-distance tools: spectrum, chain, grid");
    kdist->add_option("what", kwhat, "spectrum | chain | grid")->required()->check(CLI::IsMember({"spectrum", "chain", "grid"}));
    kdist->add_option("points", paths.input, "point set JSON");
    kdist->add_option("--body", paths.body, "body JSON");
    kdist->add_option("--dim", dim, "grid dimension");
    kdist->add_option("--k", k, "number of distances (grid side for 'grid')");
    kdist->add_option("--target", target, "chain length; default ceil(log_k n) + 1");
    kdist->add_option("-o,--output", paths.output, "output file");

    auto* cube = app.add_subcommand("cube", "the 3^d unit-cube arrangement");
    cube->add_option("--dim", dim, "dimension")->required();
    cube->add_option("-o,--output", paths.output, "output file");

    int bdim = 0;
    auto* bounds = app.add_subcommand("bounds", "numeric bounds for a dimension");
    bounds->add_option("--dim", bdim, "dimension")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*verify) return dispatch(rc, [&](auto tag) { return cmd_verify<decltype(tag)>(rc, paths); });
        if (*liftc) {
            diagram.segments = !no_segments;
            diagram.point_x = !no_x;
            diagram.lines = !no_lines;
            diagram.slab = !no_slab;
            return dispatch(rc, [&](auto tag) { return cmd_lift<decltype(tag)>(rc, paths, pair, diagram); });
        }
        if (*search) return dispatch(rc, [&](auto tag) { return cmd_search<decltype(tag)>(rc, paths, dim); });
        if (*kdist) {
            if (kwhat != "grid" && paths.input.empty()) throw io::input_error("a point set file is required");
            return dispatch(rc, [&](auto tag) { return cmd_kdist<decltype(tag)>(rc, paths, kwhat, dim, k, target); });
        }
        if (*cube) return dispatch(rc, [&](auto tag) { return cmd_cube<decltype(tag)>(paths, dim); });
        if (*bounds) return cmd_bounds(bdim);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
