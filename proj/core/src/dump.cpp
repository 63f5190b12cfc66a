#include "cubicity/dump.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "cubicity/rng.hpp"
#include "json.hpp"

namespace cubicity {

namespace {

using nlohmann::json;

json report_json(const BuildReport& r, bool with_timings) {
    json j;
    j["attempt_seed"] = r.attempt_seed;
    j["attempts"] = r.attempts;
    j["bits_a"] = r.bits_a;
    j["bits_b"] = r.bits_b;
    j["delta_prime"] = r.delta_prime;
    j["k"] = r.k;
    j["nominal_bound"] = r.nominal_bound;
    j["nominal_existence_bound"] = r.nominal_existence_bound;
    j["retries"] = r.retries;
    j["rng"] = Rng::kName;
    j["seed"] = r.seed;
    j["sides_swapped"] = r.sides_swapped;
    j["t"] = r.t;
    if (with_timings) {
        j["timings_seconds"] = {{"randunit", r.timings.randunit_seconds},
                                {"families", r.timings.families_seconds},
                                {"verify", r.timings.verify_seconds}};
    }
    return j;
}

json interval_json(const Interval& iv) { return json::array({to_string(iv.lo), to_string(iv.hi)}); }

template <typename T>
T field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw DumpError(std::string("missing field '") + key + "'");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw DumpError(std::string("field '") + key + "' has the wrong type");
    }
}

}  // namespace

std::string dump_representation(const CubeRepresentation& rep, const std::optional<BuildReport>& report) {
    const auto a = static_cast<std::ptrdiff_t>(rep.a_count);
    json dims = json::array();
    for (const Dimension& d : rep.dims) {
        json placement;
        placement["A"] = std::vector<std::int64_t>(d.rep.placement.begin(), d.rep.placement.begin() + a);
        placement["B"] = std::vector<std::int64_t>(d.rep.placement.begin() + a, d.rep.placement.end());
        dims.push_back({{"placement", placement},
                        {"provenance", to_string(d.provenance)},
                        {"threshold", d.rep.threshold}});
    }

    const UnitCubes cubes = to_unit_cubes(rep);
    json cubes_a = json::array();
    json cubes_b = json::array();
    for (std::size_t v = 0; v < cubes.size(); ++v) {
        json cube = json::array();
        for (const Interval& iv : cubes[v]) cube.push_back(interval_json(iv));
        (static_cast<int>(v) < rep.a_count ? cubes_a : cubes_b).push_back(std::move(cube));
    }

    // Hand-laid top level: one dimension / one cube per line keeps dumps diffable.
    std::ostringstream os;
    os << "{\n";
    os << "\"a_count\": " << rep.a_count << ",\n";
    os << "\"b_count\": " << rep.b_count << ",\n";
    os << "\"cubes\": {\n";
    for (const auto& [label, list] : {std::pair{"A", &cubes_a}, std::pair{"B", &cubes_b}}) {
        os << "  \"" << label << "\": [";
        for (std::size_t i = 0; i < list->size(); ++i)
            os << (i ? ",\n    " : "\n    ") << (*list)[i].dump();
        os << (list->empty() ? "]" : "\n  ]") << (label[0] == 'A' ? ",\n" : "\n");
    }
    os << "},\n";
    os << "\"dims\": [";
    for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? ",\n  " : "\n  ") << dims[i].dump();
    os << (dims.empty() ? "]" : "\n]") << ",\n";
    os << "\"format\": " << json(std::string(kDumpFormat)).dump() << ",\n";
    os << "\"k\": " << rep.dimension();
    if (report) os << ",\n\"report\": " << report_json(*report, false).dump();
    os << "\n}\n";
    return os.str();
}

namespace {

CubeRepresentation representation_from_json(const json& doc) {
    if (!doc.is_object()) throw DumpError("dump must be a JSON object");
    if (field<std::string>(doc, "format") != kDumpFormat) throw DumpError("unsupported dump format");

    CubeRepresentation rep;
    rep.a_count = field<int>(doc, "a_count");
    rep.b_count = field<int>(doc, "b_count");
    if (rep.a_count < 1 || rep.b_count < 1) throw DumpError("side sizes must be positive");

    const json& dims = doc.at("dims");
    if (!dims.is_array()) throw DumpError("'dims' must be an array");
    for (const json& d : dims) {
        Dimension dim;
        try {
            dim.provenance = parse_provenance(field<std::string>(d, "provenance"));
        } catch (const std::invalid_argument& e) {
            throw DumpError(e.what());
        }
        dim.rep.threshold = field<std::int64_t>(d, "threshold");
        if (dim.rep.threshold <= 0) throw DumpError("threshold must be positive");
        const json& placement = d.at("placement");
        auto pa = field<std::vector<std::int64_t>>(placement, "A");
        auto pb = field<std::vector<std::int64_t>>(placement, "B");
        if (pa.size() != static_cast<std::size_t>(rep.a_count) ||
            pb.size() != static_cast<std::size_t>(rep.b_count))
            throw DumpError("placement does not cover the vertex set");
        dim.rep.placement = std::move(pa);
        dim.rep.placement.insert(dim.rep.placement.end(), pb.begin(), pb.end());
        rep.dims.push_back(std::move(dim));
    }
    if (field<int>(doc, "k") != rep.dimension()) throw DumpError("'k' disagrees with the number of dims");

    if (doc.contains("cubes")) {
        const UnitCubes expect = to_unit_cubes(rep);
        const json& cubes = doc.at("cubes");
        auto listed = [&](const char* label) {
            std::vector<std::vector<std::vector<std::string>>> out;
            if (!cubes.is_object() || !cubes.contains(label)) throw DumpError("cubes view incomplete");
            try {
                out = cubes.at(label).get<decltype(out)>();
            } catch (const json::exception&) {
                throw DumpError("cubes view malformed");
            }
            return out;
        };
        auto a = listed("A");
        auto b = listed("B");
        a.insert(a.end(), b.begin(), b.end());
        if (a.size() != expect.size()) throw DumpError("cubes view does not cover the vertex set");
        for (std::size_t v = 0; v < a.size(); ++v) {
            if (a[v].size() != expect[v].size()) throw DumpError("cube dimension mismatch");
            for (std::size_t i = 0; i < a[v].size(); ++i) {
                if (a[v][i].size() != 2 || a[v][i][0] != to_string(expect[v][i].lo) ||
                    a[v][i][1] != to_string(expect[v][i].hi))
                    throw DumpError("cubes view disagrees with placements");
            }
        }
    }
    return rep;
}

}  // namespace

CubeRepresentation parse_representation(std::string_view text) {
    try {
        return representation_from_json(json::parse(text.begin(), text.end()));
    } catch (const json::exception& e) {
        throw DumpError(std::string("malformed dump: ") + e.what());
    }
}

CubeRepresentation read_representation_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DumpError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_representation(buf.str());
}

std::string report_machine(const BuildReport& report, bool with_timings) {
    return report_json(report, with_timings).dump() + "\n";
}

std::string report_human(const BuildReport& r, bool with_timings) {
    std::ostringstream os;
    os << "dimension k           " << r.k << "  (t=" << r.t << " random + " << r.bits_a << " H1 + "
       << r.bits_b << " H2)\n";
    os << "delta'                " << r.delta_prime << '\n';
    os << "nominal bound         " << r.nominal_bound << "  (3(D'+2)ceil(ln n2))\n";
    os << "existence bound       " << r.nominal_existence_bound << "  (2(D'+2)ceil(ln n2))\n";
    os << "attempts              " << r.attempts << "  (retries " << r.retries << ")\n";
    os << "seed                  " << r.seed << "  (" << Rng::kName << ", attempt seed "
       << r.attempt_seed << ")\n";
    if (r.sides_swapped) os << "sides swapped         yes\n";
    if (with_timings) {
        os << std::fixed << std::setprecision(6);
        os << "time randunit         " << r.timings.randunit_seconds << " s\n";
        os << "time families         " << r.timings.families_seconds << " s\n";
        os << "time verify           " << r.timings.verify_seconds << " s\n";
    }
    return os.str();
}

}  // namespace cubicity
