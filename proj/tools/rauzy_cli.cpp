#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "rauzy/export.hpp"
#include "rauzy/render.hpp"

using namespace rauzy;
using nlohmann::json;

namespace {

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct ParamArgs {
    int a = 1;
    int b = 1;
    void add(CLI::App* cmd)
    {
        cmd->add_option("a", a, "parameter a (a >= b)")->required();
        cmd->add_option("b", b, "parameter b (b >= 1)")->required();
    }
    Params params() const { return Params(a, b); }
};

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::ofstream open_output(const std::string& path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    return f;
}

RenderOptions::Format parse_format(const std::string& s)
{
    if (s == "svg") return RenderOptions::Format::Svg;
    if (s == "csv") return RenderOptions::Format::Csv;
    throw UsageError("unknown format " + s);
}

int cmd_graph(const Params& p, bool full, bool ordered, bool gamma, const std::string& format)
{
    const bool dot = format == "dot";
    if (gamma) {
        const auto g = prefix_suffix_graph(p);
        dot ? void(std::cout << to_dot(g)) : print(to_json(g));
    } else if (ordered) {
        const auto g = ordered_graph(p);
        dot ? void(std::cout << to_dot(g)) : print(to_json(g));
    } else if (full) {
        const Embedding emb(p);
        const auto fg = build_full_boundary_graph(emb);
        if (dot) {
            std::cout << to_dot(fg.graph, "G0full");
        } else {
            json j = to_json(fg.graph);
            j["candidates"] = fg.candidate_count;
            j["flagged"] = fg.flagged_count();
            print(j);
        }
    } else {
        const auto c = contact_graph(p);
        dot ? void(std::cout << to_dot(c.graph, "G0")) : print(to_json(c.graph));
    }
    return 0;
}

int cmd_param(const Params& p, const std::string& t_text, int depth)
{
    if (depth < 1) throw UsageError("depth must be positive");
    mpf_class t(0, 320);
    if (t.set_str(t_text, 10) != 0) throw UsageError("cannot parse t = " + t_text);
    if (t < 0 || t > 1) throw UsageError("t must lie in [0, 1]");
    const Embedding emb(p);
    const auto g = ordered_graph(p);
    const Numeration num(g, perron_data(g));
    const BoundaryPoint bp = boundary_point(emb, num, t, depth);
    const Lasso l = normalize(g, bp.walk);
    print({{"t", t_text},
           {"depth", depth},
           {"walk", walk_json(g, bp.walk)},
           {"digits", to_json(left_digits(g, l))},
           {"point", {double(bp.point.u), double(bp.point.v)}},
           {"error_bound", double(emb.candidate_bound() * std::pow(emb.max_abs_alpha(), depth))}});
    return 0;
}

int cmd_verify_tables(const Params& p)
{
    const auto c = contact_graph(p);
    const auto g = ordered_graph(p);
    const auto r = verify_tables(p, c, g);
    print({{"a", p.a}, {"b", p.b}, {"ok", r.ok()}, {"failures", r.failures}});
    return r.ok() ? 0 : kExitVerification;
}

int cmd_verify_appendix(const Params& p, double tol)
{
    const Embedding emb(p);
    const auto g = ordered_graph(p);
    const auto full = build_full_boundary_graph(emb);
    auto pairs = identification_pairs(g);
    check_identification(emb, g, pairs, &full.graph);
    json rows = json::array();
    bool ok = true;
    for (const auto& q : pairs) {
        const bool pass = q.distance < tol && q.certified.value_or(false);
        ok = ok && pass;
        rows.push_back({{"row", q.label},
                        {"kind", q.kind},
                        {"left", walk_to_string(g, q.left)},
                        {"right", walk_to_string(g, q.right)},
                        {"distance", double(q.distance)},
                        {"certified", q.certified.value_or(false)},
                        {"pass", pass}});
    }
    print({{"a", p.a}, {"b", p.b}, {"ok", ok}, {"rows", rows}});
    return ok ? 0 : kExitVerification;
}

int cmd_disklike(const Params& p, bool verify, const std::string& dot_prefix)
{
    const DiskEvidence e = is_disklike(p, verify ? DiskMode::Verified : DiskMode::Fast);
    const auto g = ordered_graph(p);
    print(to_json(g, e));
    if (!dot_prefix.empty()) {
        const Embedding emb(p);
        for (auto kind : {ProductKind::Psi, ProductKind::Sl}) {
            const auto pruned = prune_admissible(build_product(emb, g, kind));
            open_output(dot_prefix + (kind == ProductKind::Psi ? "_psi.dot" : "_sl.dot")) << to_dot(g, pruned);
        }
    }
    return 0;
}

int cmd_dim(const Params& p)
{
    const Embedding emb(p);
    const auto g = ordered_graph(p);
    const auto d = perron_data(g);
    const Numeration num(g, d);
    const auto dim = hausdorff_dimension(emb, d.lambda);
    print({{"a", p.a},
           {"b", p.b},
           {"lambda", double(d.lambda)},
           {"beta", double(emb.beta())},
           {"holder_exponent", double(holder_exponent(emb, d.lambda))},
           {"holder_constant", double(holder_constant_bound(emb, num))},
           {"hausdorff_dimension", dim ? json(double(*dim)) : json(nullptr)}});
    return 0;
}

int cmd_sweep(int amax, bool verify)
{
    if (amax < 1) throw UsageError("amax must be positive");
    json rows = json::array();
    for (int a = 1; a <= amax; ++a)
        for (int b = 1; b <= a; ++b) {
            const Params p(a, b);
            const auto t0 = std::chrono::steady_clock::now();
            const DiskEvidence e = is_disklike(p, verify ? DiskMode::Verified : DiskMode::Fast);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            json row = {{"a", a}, {"b", b}, {"criterion", criterion(p)}, {"disklike", e.result}, {"seconds", secs}};
            if (verify) row["graph_equal"] = e.graph_equal;
            rows.push_back(row);
        }
    print(rows);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Boundary of the Rauzy fractals of 1 -> 1^a 2, 2 -> 1^b 3, 3 -> 1"};
    app.require_subcommand(1);

    ParamArgs info_p, graph_p, perron_p, param_p, approx_p, tile_p, disk_p, dim_p, tables_p, appendix_p;

    auto* info = app.add_subcommand("info", "number-theoretic data of the embedding");
    info_p.add(info);

    auto* graph = app.add_subcommand("graph", "export a graph (contact graph by default)");
    graph_p.add(graph);
    bool g_full = false, g_contact = false, g_ordered = false, g_gamma = false;
    std::string g_format = "json";
    auto* of = graph->add_flag("--full", g_full, "boundary graph computed from the definition");
    auto* oc = graph->add_flag("--contact", g_contact, "contact graph from the tables");
    auto* oo = graph->add_flag("--ordered", g_ordered, "ordered graph with edge orders");
    auto* og = graph->add_flag("--gamma", g_gamma, "prefix-suffix graph");
    of->excludes(oc, oo, og);
    oc->excludes(oo, og);
    oo->excludes(og);
    graph->add_option("--format", g_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    auto* perron = app.add_subcommand("perron", "Perron eigenvalue and eigenvector of the ordered graph");
    perron_p.add(perron);

    auto* param = app.add_subcommand("param", "boundary point C(t)");
    param_p.add(param);
    std::string t_text;
    int depth = 64;
    param->add_option("t", t_text, "parameter in [0, 1] (decimal)")->required();
    param->add_option("--depth", depth, "number of orders expanded");

    RenderOptions ropt;
    std::string out_path, r_format = "svg";
    auto add_render = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", out_path, "output file")->required();
        cmd->add_option("--format", r_format, "svg or csv")->check(CLI::IsMember({"svg", "csv"}));
        cmd->add_option("--width", ropt.width, "image width in pixels");
        cmd->add_option("--height", ropt.height, "image height in pixels");
        cmd->add_option("--stroke", ropt.stroke, "stroke width");
        cmd->add_option("--margin", ropt.margin, "margin as a fraction of the image");
    };
    auto* approx = app.add_subcommand("boundary-approx", "n-th polygonal approximation of the boundary");
    approx_p.add(approx);
    int level = 0;
    approx->add_option("n", level, "approximation level")->required();
    add_render(approx);

    auto* tile = app.add_subcommand("tile", "point cloud of the three subtiles");
    tile_p.add(tile);
    int tile_depth = 10;
    tile->add_option("depth", tile_depth, "iteration depth")->required();
    add_render(tile);

    auto* disk = app.add_subcommand("disklike", "decide whether the fractal is homeomorphic to a closed disk");
    disk_p.add(disk);
    bool verify = false;
    std::string dot_prefix;
    disk->add_flag("--verify", verify, "establish the answer independently of the criterion");
    disk->add_option("--dot", dot_prefix, "write the pruned automata to PREFIX_psi.dot and PREFIX_sl.dot");

    auto* dim = app.add_subcommand("dim", "Hoelder exponent and boundary dimension");
    dim_p.add(dim);

    auto* tables = app.add_subcommand("verify-tables", "check the contact graph tables");
    tables_p.add(tables);

    auto* appendix = app.add_subcommand("verify-appendix", "check the identification pairs of the numeration");
    appendix_p.add(appendix);
    double tol = 1e-9;
    appendix->add_option("--tol", tol, "distance tolerance");

    auto* sweep = app.add_subcommand("sweep", "disk-likeness over all a >= b >= 1 with a <= AMAX");
    int amax = 8;
    bool sweep_verify = false;
    sweep->add_option("--amax", amax, "largest a");
    sweep->add_flag("--verify", sweep_verify, "verified mode");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*info) {
            print(info_json(Embedding(info_p.params())));
            return 0;
        }
        if (*graph) return cmd_graph(graph_p.params(), g_full, g_ordered, g_gamma, g_format);
        if (*perron) {
            print(to_json(perron_data(ordered_graph(perron_p.params()))));
            return 0;
        }
        if (*param) return cmd_param(param_p.params(), t_text, depth);
        if (*approx) {
            ropt.format = parse_format(r_format);
            const Params p = approx_p.params();
            const Embedding emb(p);
            const auto g = ordered_graph(p);
            const Numeration num(g, perron_data(g));
            auto f = open_output(out_path);
            render_boundary(emb, num, level, ropt, f);
            return 0;
        }
        if (*tile) {
            ropt.format = parse_format(r_format);
            const Embedding emb(tile_p.params());
            auto f = open_output(out_path);
            render_tiles(emb, tile_depth, ropt, f);
            return 0;
        }
        if (*disk) return cmd_disklike(disk_p.params(), verify, dot_prefix);
        if (*dim) return cmd_dim(dim_p.params());
        if (*tables) return cmd_verify_tables(tables_p.params());
        if (*appendix) return cmd_verify_appendix(appendix_p.params(), tol);
        if (*sweep) return cmd_sweep(amax, sweep_verify);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
