#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cubicity/builder.hpp"
#include "cubicity/dump.hpp"
#include "cubicity/generator.hpp"
#include "cubicity/graph_io.hpp"
#include "cubicity/randunit.hpp"
#include "cubicity/survival.hpp"
#include "json.hpp"

namespace cubicity::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

enum class Format { Human, Machine };

struct Options {
    std::optional<std::uint64_t> seed;
    std::optional<int> t;
    int max_retries = 16;
    unsigned threads = 1;
    std::int64_t trials = 10000;
    std::int64_t failure_trials = 200;
    int repeats = 20;
    std::string format = "human";
    std::string out_path;

    int n1 = 0;
    int n2 = 0;
    double p = 0.0;
    std::string graph_path;
    std::string dump_path;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Format format_of(const Options& o) { return o.format == "machine" ? Format::Machine : Format::Human; }

std::uint64_t resolve_seed(const Options& o, std::ostream& err) {
    std::uint64_t seed = 0;
    if (o.seed) {
        seed = *o.seed;
    } else {
        std::random_device rd;
        seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
    err << "seed: " << seed << '\n';
    return seed;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

json violations_json(const std::vector<Violation>& vs, int a_count) {
    json arr = json::array();
    for (const auto& v : vs)
        arr.push_back({{"kind", to_string(v.kind)},
                       {"u", vertex_name(v.u, a_count)},
                       {"v", vertex_name(v.v, a_count)}});
    return arr;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
    const std::uint64_t seed = resolve_seed(o, err);
    BipartiteGraph g = [&] {
        try {
            return gen_random_bipartite(o.n1, o.n2, o.p, seed);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    if (o.out_path.empty())
        out << serialize_graph(g);
    else
        write_graph_file(o.out_path, g);
    err << "generated " << g.a_count() << " x " << g.b_count() << " with " << g.edge_count()
        << " edges\n";
    return kOk;
}

int cmd_build(const Options& o, std::ostream& out, std::ostream& err) {
    const BipartiteGraph original = read_graph_file(o.graph_path);
    BuildParams params;
    params.master_seed = resolve_seed(o, err);
    params.t_override = o.t;
    params.max_retries = o.max_retries;
    params.threads = o.threads;
    if (params.max_retries < 1) throw UsageError("--max-retries must be at least 1");
    if (o.t && *o.t < 0) throw UsageError("--t must be non-negative");

    const NormalizedGraph norm = normalize_sides(original);
    const int a_count = original.a_count();
    BuildResult result;
    try {
        result = build_representation(norm.graph, params);
    } catch (const BuildError& e) {
        err << "build failed: " << e.what() << '\n';
        for (Violation v : e.violations()) {
            if (norm.swapped) {
                // relabel from the normalized graph back onto the input
                const int na = norm.graph.a_count();
                auto back = [&](int id) { return id < na ? id + a_count : id - na; };
                int u = back(v.u), w = back(v.v);
                v.u = std::min(u, w);
                v.v = std::max(u, w);
            }
            err << "  violation " << describe(v, a_count) << '\n';
        }
        return kVerifyFailed;
    }

    CubeRepresentation rep = norm.swapped ? swap_sides(result.representation) : result.representation;
    result.report.sides_swapped = norm.swapped;
    if (!verify(rep, original).ok()) {
        err << "internal error: relabelled representation does not verify\n";
        return kVerifyFailed;
    }

    const std::string dump = dump_representation(rep, result.report);
    const std::string report = format_of(o) == Format::Machine ? report_machine(result.report, true)
                                                               : report_human(result.report, true);
    if (o.out_path.empty()) {
        out << dump;
        err << report;
    } else {
        write_text(o.out_path, dump);
        out << report;
    }
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
    const BipartiteGraph g = read_graph_file(o.graph_path);
    const CubeRepresentation rep = read_representation_file(o.dump_path);
    VerifyResult check;
    try {
        check = verify(rep, g);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("vertex mismatch: ") + e.what());
    }
    if (format_of(o) == Format::Machine) {
        out << json{{"k", rep.dimension()},
                    {"ok", check.ok()},
                    {"violations", violations_json(check.violations, g.a_count())}}
                   .dump()
            << '\n';
    } else if (check.ok()) {
        out << "ok: " << rep.dimension() << "-cube representation reproduces the graph exactly\n";
    } else {
        out << "FAILED: " << check.violations.size() << " violating pair(s)\n";
        for (const auto& v : check.violations) out << "  " << describe(v, g.a_count()) << '\n';
    }
    return check.ok() ? kOk : kVerifyFailed;
}

int cmd_probe(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.trials < 1 || o.failure_trials < 1) throw UsageError("trial counts must be positive");
    const BipartiteGraph g = read_graph_file(o.graph_path);
    const std::uint64_t seed = resolve_seed(o, err);

    const auto estimates = survival_frequencies(g, o.trials, seed);
    const Rational bound = survival_bound(g);
    const double q = bound.to_double();
    const double limit = q + 3.0 * std::sqrt(q * (1.0 - q) / static_cast<double>(o.trials));

    const NormalizedGraph norm = normalize_sides(g);
    BuildParams params;
    params.master_seed = derive_seed(seed, 0xfa11);
    params.t_override = o.t;
    const FailureEstimate failure = estimate_failure_rate(norm.graph, params, o.failure_trials);
    const int t = o.t.value_or(default_t(norm.graph));
    const double failure_bound = 1.0 / norm.graph.b_count();

    bool all_within = true;
    for (const auto& e : estimates) all_within = all_within && e.frequency() <= limit;

    if (format_of(o) == Format::Machine) {
        json rows = json::array();
        for (const auto& e : estimates)
            rows.push_back({{"a", e.pair.a},
                            {"b", e.pair.b},
                            {"closed_form", to_string(e.closed_form)},
                            {"frequency", e.frequency()},
                            {"survived", e.survived}});
        out << json{{"bound", to_string(bound)},
                    {"bound_limit", limit},
                    {"failure_rate",
                     {{"bound", failure_bound},
                      {"failures", failure.failures},
                      {"fraction", failure.fraction()},
                      {"t", t},
                      {"trials", failure.trials}}},
                    {"non_edges", rows},
                    {"permuted_side", std::string(1, side_letter(randunit_side(g)))},
                    {"seed", seed},
                    {"trials", o.trials},
                    {"within_bound", all_within}}
                   .dump()
            << '\n';
    } else {
        out << "permuted side " << side_letter(randunit_side(g)) << ", " << o.trials
            << " trials, bound D'/(D'+1) = " << to_string(bound) << " (limit with 3 sd "
            << std::setprecision(4) << std::fixed << limit << ")\n";
        out << "    a     b   frequency   closed form\n";
        for (const auto& e : estimates) {
            out << std::setw(5) << e.pair.a << ' ' << std::setw(5) << e.pair.b << "   " << std::setw(9)
                << e.frequency() << "   " << to_string(e.closed_form)
                << (e.frequency() > limit ? "   ABOVE BOUND" : "") << '\n';
        }
        if (estimates.empty()) out << "  (no cross non-edges)\n";
        out << "failure rate with t = " << t << ": " << failure.failures << "/" << failure.trials
            << " = " << failure.fraction() << " (bound 1/n2 = " << failure_bound << ")\n";
    }
    return kOk;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.repeats < 1) throw UsageError("--repeats must be positive");
    const BipartiteGraph g = normalize_sides(read_graph_file(o.graph_path)).graph;
    const std::uint64_t seed = resolve_seed(o, err);
    const int t = o.t.value_or(default_t(g));

    // construction: best of `repeats`, the phase with the O(t(m+n)) claim
    double construct = 1e300;
    CubeRepresentation rep;
    for (int r = 0; r < o.repeats; ++r) {
        const auto start = Clock::now();
        rep = build_attempt(g, t, derive_seed(seed, static_cast<std::uint64_t>(r)), o.threads);
        construct = std::min(construct, std::chrono::duration<double>(Clock::now() - start).count());
    }
    const auto start = Clock::now();
    const bool ok = verify(rep, g).ok();
    const double verify_s = std::chrono::duration<double>(Clock::now() - start).count();
    const double per_randunit = t > 0 ? construct / t : 0.0;

    if (format_of(o) == Format::Machine) {
        out << json{{"construct_seconds", construct},
                    {"edges", g.edge_count()},
                    {"k", rep.dimension()},
                    {"last_attempt_ok", ok},
                    {"per_randunit_seconds", per_randunit},
                    {"repeats", o.repeats},
                    {"seed", seed},
                    {"t", t},
                    {"vertices", g.vertex_count()},
                    {"verify_seconds", verify_s}}
                   .dump()
            << '\n';
    } else {
        out << "graph            " << g.a_count() << " x " << g.b_count() << ", m = " << g.edge_count()
            << '\n';
        out << "t                " << t << " (k = " << rep.dimension() << ")\n";
        out << std::scientific << std::setprecision(3);
        out << "construction     " << construct << " s (best of " << o.repeats << ")\n";
        out << "per RANDUNIT     " << per_randunit << " s\n";
        out << "verification     " << verify_s << " s (" << (ok ? "exact" : "not exact") << ")\n";
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Random unit-cube representations of bipartite graphs", "cubicity"};
    app.require_subcommand(1);
    Options o;

    auto add_seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "Master seed (random if omitted)"); };
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"human", "machine"}));
    };

    auto* gen = app.add_subcommand("gen", "Generate a random bipartite graph");
    gen->add_option("n1", o.n1, "Size of side A")->required()->check(CLI::PositiveNumber);
    gen->add_option("n2", o.n2, "Size of side B")->required()->check(CLI::PositiveNumber);
    gen->add_option("p", o.p, "Edge probability")->required();
    add_seed(gen);
    gen->add_option("--out", o.out_path, "Output graph file (stdout if omitted)");

    auto* build = app.add_subcommand("build", "Build and verify a cube representation");
    build->add_option("graph", o.graph_path, "Graph file")->required();
    add_seed(build);
    build->add_option("--t", o.t, "Number of RANDUNIT dimensions");
    build->add_option("--max-retries", o.max_retries, "Attempts before giving up");
    build->add_option("--threads", o.threads, "Workers for the random phase");
    add_format(build);
    build->add_option("--out", o.out_path, "Representation dump (stdout if omitted)");

    auto* ver = app.add_subcommand("verify", "Re-check a dump against a graph");
    ver->add_option("graph", o.graph_path, "Graph file")->required();
    ver->add_option("dump", o.dump_path, "Representation dump")->required();
    add_format(ver);

    auto* probe = app.add_subcommand("probe", "Survival frequencies of cross non-edges");
    probe->add_option("graph", o.graph_path, "Graph file")->required();
    add_seed(probe);
    probe->add_option("--trials", o.trials, "RANDUNIT draws");
    probe->add_option("--failure-trials", o.failure_trials, "Single build attempts for the failure rate");
    probe->add_option("--t", o.t, "RANDUNIT dimensions per failure-rate attempt");
    add_format(probe);

    auto* bench = app.add_subcommand("bench", "Time construction and verification separately");
    bench->add_option("graph", o.graph_path, "Graph file")->required();
    add_seed(bench);
    bench->add_option("--t", o.t, "Number of RANDUNIT dimensions");
    bench->add_option("--repeats", o.repeats, "Construction repetitions");
    bench->add_option("--threads", o.threads, "Workers for the random phase");
    add_format(bench);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*gen) return cmd_gen(o, out, err);
        if (*build) return cmd_build(o, out, err);
        if (*ver) return cmd_verify(o, out, err);
        if (*probe) return cmd_probe(o, out, err);
        if (*bench) return cmd_bench(o, out, err);
    } catch (const ParseError& e) {
        err << "graph format error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DumpError& e) {
        err << "dump format error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace cubicity::cli
