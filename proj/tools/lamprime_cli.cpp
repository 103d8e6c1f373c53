#include "lamprime/analytic.hpp"
#include "lamprime/exact_oracle.hpp"
#include "lamprime/io.hpp"
#include "lamprime/rounding.hpp"
#include "lamprime/sweeps.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

using namespace lamprime;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
    } else {
        write_file_atomic(path, content);
    }
}

struct Options {
    int k = 3;
    int n = 5;
    std::string p_text = "0.5";
    std::uint64_t seed = 1;
    std::string out;
    std::string graph;
    std::string lambda_text;
    std::string epsilon_text;
    std::string algo = "fe";
    std::string objective = "lamprime";
    std::string cover;
    std::string family;
    std::string samples;
    int grid = 100;
    int sample_grid = 200;
    bool json = false;
    bool no_vectors = false;
};

Graph read_graph(const std::string& path) { return load_graph_file(path); }

int run_gen(const std::string& kind, const Options& o) {
    Graph g = kind == "ring"   ? gen_ring(o.k)
              : kind == "star" ? gen_star(o.n)
              : kind == "path" ? gen_path(o.n)
                               : gen_gnp(o.n, to_double(parse_rational(o.p_text)), o.seed);
    emit(o.out, save_graph(g));
    return 0;
}

int run_curve_exact(const Options& o) {
    Graph g = read_graph(o.graph);
    ExactCurve curve = exact_opt_curve(g);
    emit(o.out, curve_pieces_csv(curve.curve));
    std::string family_path = o.family;
    if (family_path.empty() && !o.out.empty() && o.out != "-") family_path = o.out + ".family.json";
    if (!family_path.empty()) emit(family_path, exact_family_json(curve).dump(2) + "\n");
    if (!o.samples.empty()) emit(o.samples, curve_samples_csv(curve.curve, o.sample_grid));
    return 0;
}

int run_lp_solve(const Options& o) {
    Graph g = read_graph(o.graph);
    LpSolution s = solve_lp(g, parse_rational(o.lambda_text), parse_objective(o.objective));
    if (o.json || !o.out.empty()) {
        emit(o.out, lp_solution_json(s).dump(2) + "\n");
    } else {
        std::cout << "lambda " << to_string(s.lambda) << "\n"
                  << "value " << to_string(s.value) << " (" << to_double(s.value) << ")\n"
                  << "P " << to_string(s.line.P) << "\n"
                  << "N " << to_string(s.line.N) << "\n"
                  << "certified " << (s.certified ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_sweep(const Options& o) {
    Graph g = read_graph(o.graph);
    Rational eps = parse_rational(o.epsilon_text);
    Objective obj = parse_objective(o.objective);
    CoverFamily family = o.algo == "geometric" ? sweep_geometric(g, eps, obj)
                         : o.algo == "fe"      ? sweep_fe(g, eps, obj)
                                               : sweep_febe(g, eps, obj);
    emit(o.out, cover_json(family, !o.no_vectors).dump(2) + "\n");
    std::cerr << family.algorithm << ": " << family.members.size() << " members, " << family.lp_solve_count
              << " LP solves, " << family.orlp_solve_count << " ORLP solves\n";
    return 0;
}

int run_round(const Options& o) {
    Graph g = read_graph(o.graph);
    CoverFamily cover = cover_from_json(parse_json_text(read_text_file(o.cover)));
    emit(o.out, clustering_family_json(build_clustering_family(cover, g)).dump(2) + "\n");
    return 0;
}

int run_verify_cover(const Options& o) {
    Graph g = read_graph(o.graph);
    CoverFamily cover = cover_from_json(parse_json_text(read_text_file(o.cover)));
    CoverReport report = certify_cover(cover, g, o.grid);
    if (!o.out.empty()) emit(o.out, cover_report_json(report).dump(2) + "\n");
    std::cout << "members " << cover.members.size() << "\n"
              << "intervals_cover " << (report.intervals_cover ? "yes" : "no") << "\n";
    for (const auto& gap : report.gaps) std::cout << "gap " << to_string(gap.lo) << " " << to_string(gap.hi) << "\n";
    std::cout << "grid_points " << report.grid_points << "\n"
              << "worst_ratio " << to_string(report.worst_ratio) << " at lambda " << to_string(report.worst_lambda)
              << "\n"
              << "bound " << to_string(1 + cover.epsilon) << "\n"
              << (report.ok() ? "PASS" : "FAIL") << "\n";
    if (!report.ok()) throw VerificationFailure("cover failed certification");
    return 0;
}

int run_verify_ring(const Options& o) {
    RingSandwichReport report = ring_sandwich(o.k, o.grid);
    int bad = 0;
    for (const auto& p : report.points) {
        if (!p.ok) {
            ++bad;
            std::cout << "violation at lambda " << to_string(p.lambda) << "\n";
        }
    }
    std::cout << "k " << o.k << " points " << report.points.size() << " violations " << bad << " worst_relative_excess "
              << report.worst_violation << "\n"
              << (report.ok() ? "PASS" : "FAIL") << "\n";
    if (!report.ok()) throw VerificationFailure("ring sandwich bounds violated");
    return 0;
}

int run_bounds_ring(const Options& o) {
    double p = to_double(parse_rational(o.p_text));
    RingLowerBound b = ring_lower_bound(o.k, p);
    std::cout << "B " << b.B << "\n";
    std::cout.precision(17);
    std::cout << "gamma " << b.gamma << "\n"
              << "M " << b.M << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parametric graph clustering: exact curves, LP sweeps, covers and certificates"};
    app.require_subcommand(1);
    Options o;
    std::string gen_kind;
    std::function<int()> action;

    auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
    gen->require_subcommand(1);
    auto* gen_ring_cmd = gen->add_subcommand("ring", "Cycle on 2^k nodes");
    gen_ring_cmd->add_option("--k", o.k, "log2 of the node count")->required();
    auto* gen_star_cmd = gen->add_subcommand("star", "Star on n nodes, centre 0");
    gen_star_cmd->add_option("--n", o.n, "node count")->required();
    auto* gen_path_cmd = gen->add_subcommand("path", "Path on n nodes");
    gen_path_cmd->add_option("--n", o.n, "node count")->required();
    auto* gen_gnp_cmd = gen->add_subcommand("gnp", "Erdos-Renyi G(n, p)");
    gen_gnp_cmd->add_option("--n", o.n, "node count")->required();
    gen_gnp_cmd->add_option("--p", o.p_text, "edge probability");
    gen_gnp_cmd->add_option("--seed", o.seed, "random seed");
    gen->add_option("--out", o.out, "output file (stdout if omitted)");
    for (auto* sub : {gen_ring_cmd, gen_star_cmd, gen_path_cmd, gen_gnp_cmd}) {
        sub->add_option("--out", o.out, "output file (stdout if omitted)");
        sub->callback([&, sub] {
            gen_kind = sub->get_name();
            action = [&] { return run_gen(gen_kind, o); };
        });
    }

    auto* curve = app.add_subcommand("curve", "Exact optimal curve");
    curve->require_subcommand(1);
    auto* curve_exact = curve->add_subcommand("exact", "Enumerate all partitions (n <= 12)");
    curve_exact->add_option("--graph", o.graph, "edge-list file")->required();
    curve_exact->add_option("--out", o.out, "piece CSV (stdout if omitted)");
    curve_exact->add_option("--family", o.family, "family JSON (default: <out>.family.json)");
    curve_exact->add_option("--samples", o.samples, "also write lambda,value samples to this CSV");
    curve_exact->add_option("--sample-grid", o.sample_grid, "uniform sample count for --samples");
    curve_exact->callback([&] { action = [&] { return run_curve_exact(o); }; });

    auto* lp = app.add_subcommand("lp", "Metric LP relaxation");
    lp->require_subcommand(1);
    auto* lp_solve = lp->add_subcommand("solve", "Exact solve at one lambda");
    lp_solve->add_option("--graph", o.graph, "edge-list file")->required();
    lp_solve->add_option("--lambda", o.lambda_text, "lambda as decimal or num/den")->required();
    lp_solve->add_option("--objective", o.objective, "lamprime or lamcc");
    lp_solve->add_flag("--json", o.json, "print the solution as JSON");
    lp_solve->add_option("--out", o.out, "write JSON here");
    lp_solve->callback([&] { action = [&] { return run_lp_solve(o); }; });

    auto* sweep = app.add_subcommand("sweep", "Build a certified cover of the lambda domain");
    sweep->add_option("--graph", o.graph, "edge-list file")->required();
    sweep->add_option("--epsilon", o.epsilon_text, "approximation slack")->required();
    sweep->add_option("--algo", o.algo, "geometric, fe or febe")
        ->check(CLI::IsMember({"geometric", "fe", "febe"}));
    sweep->add_option("--objective", o.objective, "lamprime or lamcc");
    sweep->add_option("--out", o.out, "cover JSON (stdout if omitted)");
    sweep->add_flag("--no-vectors", o.no_vectors, "omit distance vectors from the JSON");
    sweep->callback([&] { action = [&] { return run_sweep(o); }; });

    auto* round = app.add_subcommand("round", "Round every cover member to a clustering");
    round->add_option("--cover", o.cover, "cover JSON with distance vectors")->required();
    round->add_option("--graph", o.graph, "edge-list file")->required();
    round->add_option("--out", o.out, "clustering family JSON (stdout if omitted)");
    round->callback([&] { action = [&] { return run_round(o); }; });

    auto* verify = app.add_subcommand("verify", "Certificate checks");
    verify->require_subcommand(1);
    auto* verify_cover = verify->add_subcommand("cover", "Re-certify a cover");
    verify_cover->add_option("--cover", o.cover, "cover JSON")->required();
    verify_cover->add_option("--graph", o.graph, "edge-list file")->required();
    verify_cover->add_option("--grid", o.grid, "geometric audit points");
    verify_cover->add_option("--out", o.out, "write the report as JSON");
    verify_cover->callback([&] { action = [&] { return run_verify_cover(o); }; });
    auto* verify_ring = verify->add_subcommand("ring", "Check the ring bound chain on a grid");
    verify_ring->add_option("--k", o.k, "log2 of the ring size")->required();
    verify_ring->add_option("--grid", o.grid, "grid points");
    verify_ring->callback([&] { action = [&] { return run_verify_ring(o); }; });

    auto* bounds = app.add_subcommand("bounds", "Analytic bounds");
    bounds->require_subcommand(1);
    auto* bounds_ring = bounds->add_subcommand("ring", "Lower bound on the cover size for the ring");
    bounds_ring->add_option("--k", o.k, "log2 of the ring size")->required();
    bounds_ring->add_option("--p", o.p_text, "approximation factor p > 1")->required();
    bounds_ring->callback([&] { action = [&] { return run_bounds_ring(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        return action ? action() : kExitParse;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
