#include <cmath>

#include "cubicity/bit_encoding.hpp"
#include "cubicity/builder.hpp"
#include "cubicity/generator.hpp"
#include "doctest.h"

using namespace cubicity;

namespace {

bool has_violation(const VerifyResult& r, int u, int v, Violation::Kind kind) {
    for (const auto& x : r.violations)
        if (x.u == u && x.v == v && x.kind == kind) return true;
    return false;
}

}  // namespace

TEST_CASE("default t") {
    // K_{1,1}: ln 1 = 0, clamped to 1
    CHECK(default_t(BipartiteGraph(1, 1, {{1, 1}})) == 1);
    // empty 3x20: Δ' = 0, ⌈3 ln 20⌉ = ⌈8.987⌉ = 9
    CHECK(default_t(BipartiteGraph(3, 20)) == 9);
    // star K_{1,5}: Δ' = 1, ⌈6 ln 5⌉ = ⌈9.657⌉ = 10
    CHECK(default_t(BipartiteGraph(1, 5, {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}})) == 10);
}

TEST_CASE("nominal bounds") {
    BipartiteGraph star(1, 5, {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}});
    // Δ' = 1, ⌈ln 5⌉ = 2
    CHECK(nominal_bound(star) == 3 * 3 * 2);
    CHECK(nominal_existence_bound(star) == 2 * 3 * 2);
}

TEST_CASE("K_{1,1} builds on the first attempt") {
    BipartiteGraph g(1, 1, {{1, 1}});
    BuildResult r = build_representation(g, {});
    CHECK(r.report.attempts == 1);
    CHECK(r.report.retries == 0);
    CHECK(r.report.k == r.report.t);
    CHECK(r.report.bits_a == 0);
    CHECK(r.report.bits_b == 0);
    CHECK(verify(r.representation, g).ok());
}

TEST_CASE("K_{3,3} needs nothing random but gets t + 2 + 2 dims") {
    BipartiteGraph g = gen_random_bipartite(3, 3, 1.0, 0);
    for (int t : {0, 1, 5}) {
        BuildParams p;
        p.t_override = t;
        BuildResult r = build_representation(g, p);
        CHECK(r.report.k == t + 2 + 2);
        CHECK(r.representation.dimension() == t + 4);
        CHECK(verify(r.representation, g).ok());
    }
}

TEST_CASE("random 10 x 20 graph with default params") {
    BipartiteGraph g = gen_random_bipartite(10, 20, 0.3, 2024);
    BuildParams p;
    p.master_seed = 7;
    BuildResult r = build_representation(g, p);
    CHECK(verify(r.representation, g).ok());
    CHECK(r.report.t == default_t(g));
    CHECK(r.report.k == r.report.t + bit_count_for(10) + bit_count_for(20));
    CHECK(r.report.bits_a == 4);
    CHECK(r.report.bits_b == 5);
}

TEST_CASE("verify catches a dropped H2 family") {
    BipartiteGraph g(2, 3, {{1, 1}, {2, 2}});
    BuildResult r = build_representation(g, {});
    CubeRepresentation broken = r.representation;
    std::erase_if(broken.dims, [](const Dimension& d) { return d.provenance.kind == DimKind::H2Bit; });
    VerifyResult check = verify(broken, g);
    REQUIRE_FALSE(check.ok());
    for (const auto& v : check.violations) {
        CHECK(v.kind == Violation::Kind::ExtraEdge);
        CHECK(v.u >= 2);  // both endpoints in B
    }
    CHECK(has_violation(check, 2, 3, Violation::Kind::ExtraEdge));
}

TEST_CASE("verify flags cross non-edges when no random dims exist") {
    BipartiteGraph g(2, 2, {{1, 1}, {2, 2}});
    CubeRepresentation rep{2, 2, {}};
    for (Side s : {Side::A, Side::B}) {
        auto dims = build_h_family(g, s).dimensions();
        rep.dims.insert(rep.dims.end(), dims.begin(), dims.end());
    }
    VerifyResult check = verify(rep, g);
    CHECK(check.violations.size() == 2);
    CHECK(has_violation(check, 0, 3, Violation::Kind::ExtraEdge));  // a1-b2
    CHECK(has_violation(check, 1, 2, Violation::Kind::ExtraEdge));  // a2-b1
    CHECK(describe(check.violations[0], 2) == "A1-B2 extra-edge");
}

TEST_CASE("verify reports missing edges and vertex mismatches") {
    BipartiteGraph g(1, 1, {{1, 1}});
    CubeRepresentation rep{1, 1, {{UnitIntervalRep{{0, 5}, 1}, {}}}};
    VerifyResult check = verify(rep, g);
    REQUIRE(check.violations.size() == 1);
    CHECK(check.violations[0].kind == Violation::Kind::MissingEdge);
    CHECK_THROWS_AS(verify(CubeRepresentation{1, 2, {}}, g), std::invalid_argument);
}

TEST_CASE("t = 0 with a cross non-edge is a build error naming the pair") {
    BipartiteGraph g(2, 2, {{1, 1}});
    BuildParams p;
    p.t_override = 0;
    try {
        build_representation(g, p);
        FAIL("expected BuildError");
    } catch (const BuildError& e) {
        CHECK(e.attempts() == 1);
        CHECK(e.violations().size() == 3);
        CHECK(std::string(e.what()).find("A1-B2") != std::string::npos);
    }
}

TEST_CASE("retries exhausted") {
    // t = 1 on a 6 x 6 perfect matching cannot kill all 30 cross non-edges.
    std::vector<Edge> matching;
    for (int i = 1; i <= 6; ++i) matching.push_back({i, i});
    BipartiteGraph g(6, 6, matching);
    BuildParams p;
    p.t_override = 1;
    p.max_retries = 3;
    CHECK_THROWS_AS(build_representation(g, p), BuildError);
}

TEST_CASE("precondition checks") {
    CHECK_THROWS_AS(build_representation(BipartiteGraph(3, 2), {}), std::invalid_argument);
    BuildParams p;
    p.max_retries = 0;
    CHECK_THROWS_AS(build_representation(BipartiteGraph(2, 2), p), std::invalid_argument);
}

TEST_CASE("serial and parallel builds are identical") {
    BipartiteGraph g = gen_random_bipartite(12, 25, 0.25, 99);
    BuildParams serial;
    serial.master_seed = 1234;
    BuildParams parallel = serial;
    parallel.threads = 4;
    BuildResult x = build_representation(g, serial);
    BuildResult y = build_representation(g, parallel);
    CHECK(x.representation == y.representation);
    CHECK(x.report.attempt_seed == y.report.attempt_seed);
}

TEST_CASE("random dims alone kill every cross non-edge; families alone kill same-side pairs") {
    BipartiteGraph g = gen_random_bipartite(8, 16, 0.3, 4);
    BuildResult r = build_representation(g, {});
    CubeRepresentation random_only{g.a_count(), g.b_count(), {}};
    for (const auto& d : r.representation.dims)
        if (d.provenance.kind == DimKind::RandUnit) random_only.dims.push_back(d);
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= 16; ++b)
            CHECK(random_only.adjacent(g.vertex_id(Side::A, a), g.vertex_id(Side::B, b)) == g.has_edge(a, b));
}

TEST_CASE("estimate_failure_rate") {
    CHECK(estimate_failure_rate(gen_random_bipartite(4, 6, 1.0, 0), {}, 20).failures == 0);

    // one random dim on a dense non-complete graph almost always fails
    BipartiteGraph dense = gen_random_bipartite(10, 12, 0.7, 3);
    BuildParams p;
    p.t_override = 1;
    CHECK(estimate_failure_rate(dense, p, 50).fraction() >= 0.9);
}
