#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cubicity/builder.hpp"
#include "cubicity/interval_rep.hpp"

namespace cubicity {

class DumpError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kDumpFormat = "cubicity-representation/1";

/**
 * Representation dump, JSON with sorted keys:
 *
 *   {"a_count", "b_count", "k", "format",
 *    "dims":  [{"provenance", "threshold", "placement": {"A": [...], "B": [...]}}],
 *    "cubes": {"A": [[["lo","hi"], ...k], ...], "B": [...]},
 *    "report": {...}}                      // optional, no timings
 *
 * Cube endpoints are exact rationals "num/den" in lowest terms. The output is
 * a pure function of its inputs, so equal builds give byte-equal dumps.
 */
std::string dump_representation(const CubeRepresentation& rep,
                                 const std::optional<BuildReport>& report = std::nullopt);

/// Throws DumpError on malformed or truncated input, or when the cubes view
/// disagrees with the placements.
CubeRepresentation parse_representation(std::string_view text);

CubeRepresentation read_representation_file(const std::filesystem::path& path);

/// Machine form: one JSON object, canonical key order.
std::string report_machine(const BuildReport& report, bool with_timings);
/// Human form: aligned "key: value" lines.
std::string report_human(const BuildReport& report, bool with_timings);

}  // namespace cubicity
