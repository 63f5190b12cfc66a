#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicity/graph.hpp"
#include "cubicity/interval_rep.hpp"

namespace cubicity {

struct BuildParams {
    /// Number of RANDUNIT dimensions; defaults to default_t(g).
    std::optional<int> t_override;
    std::uint64_t master_seed = 0;
    int max_retries = 16;
    /// Workers for the RANDUNIT phase. Output does not depend on this.
    unsigned threads = 1;
};

/// max(1, ⌈3(Δ'+1) ln n2⌉), natural log.
int default_t(const BipartiteGraph& g);

/// 3(Δ'+2)⌈ln n2⌉, the closed-form dimension bound for t = 3(Δ'+1) ln n2.
std::int64_t nominal_bound(const BipartiteGraph& g);
/// 2(Δ'+2)⌈ln n2⌉, the existence bound on cub(G).
std::int64_t nominal_existence_bound(const BipartiteGraph& g);

struct PhaseTimings {
    double randunit_seconds = 0.0;
    double families_seconds = 0.0;
    double verify_seconds = 0.0;
};

struct BuildReport {
    int k = 0;
    int t = 0;
    int bits_a = 0;
    int bits_b = 0;
    int attempts = 0;
    int retries = 0;  // attempts - 1
    std::uint64_t seed = 0;
    std::uint64_t attempt_seed = 0;
    int delta_prime = 0;
    std::int64_t nominal_bound = 0;
    std::int64_t nominal_existence_bound = 0;
    bool sides_swapped = false;  // set by callers that normalized the input
    PhaseTimings timings;  // summed over attempts; not reproducible
};

struct Violation {
    enum class Kind : std::uint8_t { MissingEdge, ExtraEdge };
    int u = 0;  // dense ids, u < v
    int v = 0;
    Kind kind = Kind::ExtraEdge;

    friend auto operator<=>(const Violation&, const Violation&) = default;
};

std::string to_string(Violation::Kind kind);
/// "A3" / "B7" for a dense id.
std::string vertex_name(int id, int a_count);
/// "A3-B7 extra-edge"
std::string describe(const Violation& violation, int a_count);

struct VerifyResult {
    std::vector<Violation> violations;  // sorted by (u, v)
    bool ok() const noexcept { return violations.empty(); }
};

/// Compares the intersection graph of every dimension with g, pair by pair.
/// Throws std::invalid_argument if rep and g disagree on the vertex set.
VerifyResult verify(const CubeRepresentation& rep, const BipartiteGraph& g);

class BuildError : public std::runtime_error {
  public:
    BuildError(const std::string& what, std::vector<Violation> violations, int attempts)
        : std::runtime_error(what), violations_(std::move(violations)), attempts_(attempts) {}

    const std::vector<Violation>& violations() const noexcept { return violations_; }
    int attempts() const noexcept { return attempts_; }

  private:
    std::vector<Violation> violations_;
    int attempts_;
};

/// One attempt without verification: t RANDUNIT dims (dim i seeded with
/// derive_seed(attempt_seed, i)), then the H1 and H2 families.
CubeRepresentation build_attempt(const BipartiteGraph& g, int t, std::uint64_t attempt_seed,
                                 unsigned threads = 1, PhaseTimings* timings = nullptr);

struct BuildResult {
    CubeRepresentation representation;
    BuildReport report;
};

/**
 * Las Vegas construction of a cube representation of g.
 *
 * Attempt r (0-based) uses seed derive_seed(master_seed, r); each attempt is
 * verified and the first exact one is returned. Requires a_count <= b_count.
 * Throws BuildError, carrying every violating pair of the last attempt, when
 * max_retries attempts fail or when t = 0 leaves a cross non-edge standing.
 */
BuildResult build_representation(const BipartiteGraph& g, const BuildParams& params);

struct FailureEstimate {
    std::int64_t failures = 0;
    std::int64_t trials = 0;
    double fraction() const noexcept {
        return trials == 0 ? 0.0 : static_cast<double>(failures) / static_cast<double>(trials);
    }
};

/// Runs `trials` single attempts (seeds as in build_representation, no
/// retry) and counts how many fail verification.
FailureEstimate estimate_failure_rate(const BipartiteGraph& g, const BuildParams& params,
                                      std::int64_t trials);

}  // namespace cubicity
