// latgon: minimal-perimeter convex lattice n-gons for arbitrary (possibly
// asymmetric) planar norms, their limit shape, and the growth constant.
//
// Exit codes: 0 success, 2 validation error, 3 numeric non-convergence.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latgon/analysis.hpp"
#include "latgon/body_io.hpp"
#include "latgon/errors.hpp"
#include "latgon/minimizer.hpp"
#include "latgon/polygon.hpp"
#include "latgon/svg.hpp"
#include "latgon/variational.hpp"

namespace {

namespace fs = std::filesystem;
using namespace latgon;

struct GlobalArgs {
    std::string body_path;
    std::size_t grid = 2048;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool json = false;
    bool reflect_body = false;
};

ConvexBody require_body(const GlobalArgs& g) {
    if (g.body_path.empty()) throw ValidationError("--body FILE is required");
    const ConvexBody body = load_body(g.body_path);
    // Anticlockwise minimization under -D equals clockwise under D.
    return g.reflect_body ? reflect(body) : body;
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory '" + dir + "': " + ec.message());
}

void maybe_write(const GlobalArgs& g, const std::string& name, const std::string& content) {
    if (g.out_dir.empty()) return;
    ensure_out_dir(g.out_dir);
    write_text_file((fs::path(g.out_dir) / name).string(), content);
}

std::vector<Vec2> body_boundary(const ConvexBody& body, std::size_t samples = 512) {
    std::vector<Vec2> pts(samples);
    const double step = 6.283185307179586 / static_cast<double>(samples);
    for (std::size_t j = 0; j < samples; ++j) {
        const double t = step * static_cast<double>(j);
        pts[j] = radial_eval(body, t) * unit_dir(t);
    }
    return pts;
}

int run_solve_vp(const GlobalArgs& g) {
    const VPSolution sol = solve_vp(require_body(g), g.grid);
    const std::string doc = vp_solution_to_json(sol);
    maybe_write(g, "vp_solution.json", doc + "\n");
    if (g.json) {
        std::printf("%s\n", doc.c_str());
    } else {
        std::printf("a         = %.12g\n", sol.a);
        std::printf("b         = %.12g\n", sol.b);
        std::printf("c         = %.12g\n", sol.c);
        std::printf("objective = %.12g\n", sol.objective);
        std::printf("alpha     = %.12g\n", sol.alpha);
        std::printf("residuals = %.3g %.3g %.3g  (%d iterations)\n", sol.residuals[0],
                    sol.residuals[1], sol.residuals[2], sol.iterations);
    }
    return 0;
}

int run_limit_shape(const GlobalArgs& g) {
    const ConvexBody body = require_body(g);
    const VPSolution sol = solve_vp(body, g.grid);
    const LimitPolygon lp = limit_polygon(sol);
    const std::string doc = limit_polygon_to_json(lp);
    maybe_write(g, "limit_polygon.json", doc + "\n");
    if (!g.out_dir.empty()) {
        const ConvexBody unit = scale_to_unit_area(body);
        std::vector<SvgPath> paths;
        paths.push_back({body_boundary(unit), true, "shape"});
        paths.push_back({shape_boundary(sol.r), true, "polygon"});
        paths.push_back({lp.boundary, true, "curve"});
        render_svg(paths, (fs::path(g.out_dir) / "limit_shape.svg").string());
    }
    std::printf("%s\n", doc.c_str());
    return 0;
}

int run_minimizer(const GlobalArgs& g, Method method, int n, const std::string& shape_path,
                  std::int64_t budget) {
    const ConvexBody body = scale_to_unit_area(require_body(g));
    MinimizerResult result = [&] {
        switch (method) {
            case Method::exact: {
                ExactOptions opt;
                if (budget > 0) opt.node_budget = budget;
                return exact_minimizer(body, n, opt);
            }
            case Method::greedy:
                return greedy_polygon(body, n);
            case Method::shape_guided: {
                if (!shape_path.empty()) {
                    RadialFunction rf = to_radial(load_body(shape_path), g.grid);
                    rf = rf.scaled(1.0 / std::sqrt(area(rf)));  // discrete unit area
                    return shape_guided_polygon(body, rf, n);
                }
                const VPSolution sol = solve_vp(body, g.grid);
                return shape_guided_polygon(body, sol.r, n);
            }
        }
        throw ValidationError("unknown method");
    }();
    const std::string doc = minimizer_result_to_json(result);
    maybe_write(g, method_name(method) + "_result.json", doc + "\n");
    std::printf("%s\n", doc.c_str());
    return 0;
}

int run_converge(const GlobalArgs& g, const std::vector<int>& n_values,
                 const std::string& method_str) {
    ExperimentConfig config;
    config.body_path = g.body_path;
    config.n_values = n_values;
    config.grid = g.grid;
    config.seed = g.seed;
    config.output_dir = g.out_dir;
    if (method_str == "exact") config.method = Method::exact;
    else if (method_str == "greedy") config.method = Method::greedy;
    else if (method_str == "shape-guided" || method_str == "shape_guided")
        config.method = Method::shape_guided;
    else throw ValidationError("unknown method '" + method_str + "'");

    const auto records = run_convergence(require_body(g), config);
    maybe_write(g, "records.jsonl", convergence_records_to_jsonl(records));
    maybe_write(g, "summary.txt", convergence_table(records));
    if (g.json) std::printf("%s", convergence_records_to_jsonl(records).c_str());
    else std::printf("%s", convergence_table(records).c_str());
    return 0;
}

int run_alpha(const GlobalArgs& g) {
    const ConvexBody body = require_body(g);
    const VPSolution sol = solve_vp(body, g.grid);
    const auto [by_area_integral, by_sector] = alpha_two_ways(sol, body);
    if (g.json) {
        std::printf("{\"alpha_area_integral\":%.17g,\"alpha_sector\":%.17g}\n", by_area_integral,
                    by_sector);
    } else {
        std::printf("alpha (2-D integral of the norm over the limit shape) = %.12f\n",
                    by_area_integral);
        std::printf("alpha (sector form, pi/(3 sqrt 6) * objective)        = %.12f\n", by_sector);
        std::printf("relative difference = %.3g\n",
                    std::abs(by_area_integral - by_sector) / by_sector);
    }
    return 0;
}

int run_render(const GlobalArgs& g, const std::string& polygon_path, const std::string& limit_path,
               bool grid_lines, std::string svg_path) {
    std::vector<SvgPath> paths;
    if (!g.body_path.empty()) paths.push_back({body_boundary(load_body(g.body_path)), true, "shape"});
    if (!polygon_path.empty()) {
        const LatticePolygon poly = load_lattice_polygon(polygon_path);
        std::vector<Vec2> pts;
        for (const LatticeVector& v : poly.vertices()) pts.push_back(v.to_vec2());
        paths.push_back({std::move(pts), true, "polygon"});
    }
    if (!limit_path.empty())
        paths.push_back({limit_polygon_from_json(read_text_file(limit_path)).boundary, true, "curve"});
    if (paths.empty()) throw ValidationError("render: nothing to draw (give --body/--polygon/--limit)");

    if (svg_path.empty()) {
        if (g.out_dir.empty()) throw ValidationError("render: need --svg FILE or --out DIR");
        ensure_out_dir(g.out_dir);
        svg_path = (fs::path(g.out_dir) / "render.svg").string();
    }
    SvgOptions options;
    options.lattice_grid = grid_lines;
    render_svg(paths, svg_path, options);
    std::printf("wrote %s\n", svg_path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal-perimeter convex lattice n-gons under planar (possibly asymmetric) norms"};
    app.require_subcommand(1);

    GlobalArgs g;
    app.add_option("--body", g.body_path, "body JSON file")->envname("LATGON_BODY");
    app.add_option("--grid", g.grid, "quadrature grid size (power of two)");
    app.add_option("--out", g.out_dir, "output directory for result files");
    app.add_option("--seed", g.seed, "seed for randomized experiments");
    app.add_flag("--json", g.json, "machine-readable JSON output");
    app.add_flag("--reflect", g.reflect_body,
                 "reflect the body through the origin (clockwise-orientation minimization)");

    auto* solve_cmd = app.add_subcommand("solve-vp", "solve the limit-shape problem for a body");
    auto* limit_cmd = app.add_subcommand("limit-shape", "limit shape and limit polygon of a body");

    int n_exact = 0, n_greedy = 0, n_shape = 0;
    std::int64_t budget = 0;
    std::string shape_path;
    auto* exact_cmd = app.add_subcommand("exact", "certified minimal n-gon (3 <= n <= 10)");
    exact_cmd->add_option("--n", n_exact, "vertex count")->required();
    exact_cmd->add_option("--budget", budget, "branch-and-bound node budget");
    auto* greedy_cmd = app.add_subcommand("greedy", "n shortest primitive vectors construction");
    greedy_cmd->add_option("--n", n_greedy, "vertex count")->required();
    auto* shape_cmd = app.add_subcommand("shape-guided", "shape-guided construction");
    shape_cmd->add_option("--n", n_shape, "vertex count")->required();
    shape_cmd->add_option("--shape", shape_path, "guide shape body JSON (default: solved limit shape)");

    std::vector<int> n_values;
    std::string method_str = "shape-guided";
    auto* conv_cmd = app.add_subcommand("converge", "scaled-perimeter and limit-shape convergence sweep");
    conv_cmd->add_option("--n", n_values, "vertex counts (strictly increasing)")
        ->required()
        ->delimiter(',');
    conv_cmd->add_option("--method", method_str, "exact | greedy | shape-guided");

    auto* alpha_cmd = app.add_subcommand("alpha", "growth constant, computed two ways");

    std::string polygon_path, limit_path, svg_path;
    bool grid_lines = false;
    auto* render_cmd = app.add_subcommand("render", "render bodies/polygons/curves to SVG");
    render_cmd->add_option("--polygon", polygon_path, "lattice polygon JSON");
    render_cmd->add_option("--limit", limit_path, "limit polygon JSON");
    render_cmd->add_option("--svg", svg_path, "output SVG file");
    render_cmd->add_flag("--grid-lines", grid_lines, "draw lattice gridlines");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (solve_cmd->parsed()) return run_solve_vp(g);
        if (limit_cmd->parsed()) return run_limit_shape(g);
        if (exact_cmd->parsed()) return run_minimizer(g, Method::exact, n_exact, "", budget);
        if (greedy_cmd->parsed()) return run_minimizer(g, Method::greedy, n_greedy, "", 0);
        if (shape_cmd->parsed()) return run_minimizer(g, Method::shape_guided, n_shape, shape_path, 0);
        if (conv_cmd->parsed()) return run_converge(g, n_values, method_str);
        if (alpha_cmd->parsed()) return run_alpha(g);
        if (render_cmd->parsed()) return run_render(g, polygon_path, limit_path, grid_lines, svg_path);
    } catch (const NumericError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
