#include "cubicity/builder.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "cubicity/bit_encoding.hpp"
#include "cubicity/randunit.hpp"
#include "cubicity/rng.hpp"
#include "cubicity/vertex_graph.hpp"

namespace cubicity {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::int64_t ceil_ln(int n) { return static_cast<std::int64_t>(std::ceil(std::log(n))); }

}  // namespace

int default_t(const BipartiteGraph& g) {
    const int dp = degree_profile(g).delta_prime;
    const double t = std::ceil(3.0 * (dp + 1) * std::log(static_cast<double>(g.b_count())));
    return std::max(1, static_cast<int>(t));
}

std::int64_t nominal_bound(const BipartiteGraph& g) {
    return 3 * (degree_profile(g).delta_prime + 2) * ceil_ln(g.b_count());
}

std::int64_t nominal_existence_bound(const BipartiteGraph& g) {
    return 2 * (degree_profile(g).delta_prime + 2) * ceil_ln(g.b_count());
}

std::string to_string(Violation::Kind kind) {
    return kind == Violation::Kind::MissingEdge ? "missing-edge" : "extra-edge";
}

std::string vertex_name(int id, int a_count) {
    return id < a_count ? to_string(Vertex{Side::A, id + 1}) : to_string(Vertex{Side::B, id - a_count + 1});
}

std::string describe(const Violation& violation, int a_count) {
    return vertex_name(violation.u, a_count) + "-" + vertex_name(violation.v, a_count) + " " +
           to_string(violation.kind);
}

VerifyResult verify(const CubeRepresentation& rep, const BipartiteGraph& g) {
    if (rep.a_count != g.a_count() || rep.b_count != g.b_count())
        throw std::invalid_argument("representation vertex set (" + std::to_string(rep.a_count) +
                                    ", " + std::to_string(rep.b_count) +
                                    ") does not match graph (" + std::to_string(g.a_count()) +
                                    ", " + std::to_string(g.b_count()) + ")");
    const int n = g.vertex_count();
    for (const Dimension& d : rep.dims) {
        if (d.rep.placement.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("dimension placement does not cover the vertex set");
        if (d.rep.threshold <= 0) throw std::invalid_argument("threshold must be positive");
    }

    const VertexGraph target = VertexGraph::from_bipartite(g);
    VerifyResult result;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const bool want = target.has_edge(u, v);
            const bool got = rep.adjacent(u, v);
            if (want != got)
                result.violations.push_back(
                    {u, v, want ? Violation::Kind::MissingEdge : Violation::Kind::ExtraEdge});
        }
    }
    return result;
}

CubeRepresentation build_attempt(const BipartiteGraph& g, int t, std::uint64_t attempt_seed,
                                 unsigned threads, PhaseTimings* timings) {
    if (t < 0) throw std::invalid_argument("t must be non-negative");
    CubeRepresentation rep;
    rep.a_count = g.a_count();
    rep.b_count = g.b_count();

    auto start = Clock::now();
    const Side side = randunit_side(g);
    std::vector<Dimension> random_dims(static_cast<std::size_t>(t));
    auto make_dims = [&](unsigned worker, unsigned stride) {
        for (std::size_t i = worker; i < random_dims.size(); i += stride) {
            Rng rng(derive_seed(attempt_seed, i));
            random_dims[i] = randunit(g, side, rng);
        }
    };
    const unsigned workers = std::clamp<unsigned>(threads, 1U, std::max(1, t));
    if (workers == 1) {
        make_dims(0, 1);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(make_dims, w, workers);
    }
    if (timings) timings->randunit_seconds += seconds_since(start);

    start = Clock::now();
    rep.dims = std::move(random_dims);
    for (Side s : {Side::A, Side::B}) {
        auto fam = build_h_family(g, s).dimensions();
        rep.dims.insert(rep.dims.end(), std::make_move_iterator(fam.begin()),
                        std::make_move_iterator(fam.end()));
    }
    if (timings) timings->families_seconds += seconds_since(start);
    return rep;
}

BuildResult build_representation(const BipartiteGraph& g, const BuildParams& params) {
    if (g.a_count() > g.b_count())
        throw std::invalid_argument("graph must be normalized (a_count <= b_count)");
    if (params.max_retries < 1) throw std::invalid_argument("max_retries must be at least 1");
    if (params.t_override && *params.t_override < 0) throw std::invalid_argument("t must be >= 0");

    const DegreeProfile profile = degree_profile(g);
    BuildReport report;
    report.t = params.t_override.value_or(default_t(g));
    report.bits_a = bit_count_for(g.a_count());
    report.bits_b = bit_count_for(g.b_count());
    report.seed = params.master_seed;
    report.delta_prime = profile.delta_prime;
    report.nominal_bound = nominal_bound(g);
    report.nominal_existence_bound = nominal_existence_bound(g);

    // With no random dimension the outcome is fixed, so one attempt decides.
    const bool deterministic = report.t == 0;
    const int max_attempts = deterministic ? 1 : params.max_retries;

    std::vector<Violation> last;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const std::uint64_t seed = derive_seed(params.master_seed, static_cast<std::uint64_t>(attempt));
        CubeRepresentation rep = build_attempt(g, report.t, seed, params.threads, &report.timings);

        const auto start = Clock::now();
        VerifyResult check = verify(rep, g);
        report.timings.verify_seconds += seconds_since(start);
        report.attempts = attempt + 1;

        if (check.ok()) {
            report.retries = attempt;
            report.attempt_seed = seed;
            report.k = rep.dimension();
            return {std::move(rep), report};
        }
        last = std::move(check.violations);
    }

    std::string what = deterministic && cross_non_edge_count(g) > 0
                           ? "t = 0 leaves cross non-edges uncovered"
                           : "no exact representation after " + std::to_string(max_attempts) +
                                 " attempt(s)";
    what += "; " + std::to_string(last.size()) + " violating pair(s), first: " +
            describe(last.front(), g.a_count());
    throw BuildError(what, std::move(last), max_attempts);
}

FailureEstimate estimate_failure_rate(const BipartiteGraph& g, const BuildParams& params,
                                      std::int64_t trials) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    const int t = params.t_override.value_or(default_t(g));
    FailureEstimate est;
    est.trials = trials;
    for (std::int64_t i = 0; i < trials; ++i) {
        const std::uint64_t seed = derive_seed(params.master_seed, static_cast<std::uint64_t>(i));
        const CubeRepresentation rep = build_attempt(g, t, seed, params.threads);
        if (!verify(rep, g).ok()) ++est.failures;
    }
    return est;
}

}  // namespace cubicity
