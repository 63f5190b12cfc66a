#include "cubicity/interval_rep.hpp"

#include <charconv>
#include <stdexcept>

namespace cubicity {

VertexGraph induced_graph(const UnitIntervalRep& rep, int vertex_count) {
    if (rep.placement.size() != static_cast<std::size_t>(vertex_count))
        throw std::invalid_argument("placement covers " + std::to_string(rep.placement.size()) +
                                    " vertices, expected " + std::to_string(vertex_count));
    if (rep.threshold <= 0) throw std::invalid_argument("threshold must be positive");
    VertexGraph g(vertex_count);
    for (int u = 0; u < vertex_count; ++u)
        for (int v = u + 1; v < vertex_count; ++v)
            if (rep.adjacent(u, v)) g.add_edge(u, v);
    return g;
}

std::string to_string(const Provenance& p) {
    switch (p.kind) {
        case DimKind::RandUnit:
            return std::string("randunit:") + side_letter(p.permuted);
        case DimKind::H1Bit:
            return "h1-bit-" + std::to_string(p.bit);
        case DimKind::H2Bit:
            return "h2-bit-" + std::to_string(p.bit);
    }
    return "?";
}

Provenance parse_provenance(std::string_view text) {
    if (text == "randunit:A") return {DimKind::RandUnit, Side::A, 0};
    if (text == "randunit:B") return {DimKind::RandUnit, Side::B, 0};
    auto parse_bit = [&](std::string_view rest) {
        int bit = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), bit);
        if (ec != std::errc{} || ptr != rest.data() + rest.size() || bit < 1)
            throw std::invalid_argument("bad provenance '" + std::string(text) + "'");
        return bit;
    };
    if (text.starts_with("h1-bit-")) return {DimKind::H1Bit, Side::A, parse_bit(text.substr(7))};
    if (text.starts_with("h2-bit-")) return {DimKind::H2Bit, Side::A, parse_bit(text.substr(7))};
    throw std::invalid_argument("bad provenance '" + std::string(text) + "'");
}

bool CubeRepresentation::adjacent(int u, int v) const noexcept {
    for (const Dimension& d : dims)
        if (!d.rep.adjacent(u, v)) return false;
    return true;
}

VertexGraph intersection_graph(const CubeRepresentation& rep) {
    VertexGraph out = VertexGraph::complete(rep.vertex_count());
    for (const Dimension& d : rep.dims) out.intersect_with(induced_graph(d.rep, rep.vertex_count()));
    return out;
}

CubeRepresentation swap_sides(const CubeRepresentation& rep) {
    CubeRepresentation out;
    out.a_count = rep.b_count;
    out.b_count = rep.a_count;
    out.dims.reserve(rep.dims.size());
    const auto a = static_cast<std::ptrdiff_t>(rep.a_count);
    for (const Dimension& d : rep.dims) {
        Dimension m;
        m.rep.threshold = d.rep.threshold;
        m.rep.placement.reserve(d.rep.placement.size());
        m.rep.placement.insert(m.rep.placement.end(), d.rep.placement.begin() + a, d.rep.placement.end());
        m.rep.placement.insert(m.rep.placement.end(), d.rep.placement.begin(), d.rep.placement.begin() + a);
        m.provenance = d.provenance;
        switch (d.provenance.kind) {
            case DimKind::RandUnit:
                m.provenance.permuted = other(d.provenance.permuted);
                break;
            case DimKind::H1Bit:
                m.provenance.kind = DimKind::H2Bit;
                break;
            case DimKind::H2Bit:
                m.provenance.kind = DimKind::H1Bit;
                break;
        }
        out.dims.push_back(std::move(m));
    }
    return out;
}

UnitCubes to_unit_cubes(const CubeRepresentation& rep) {
    UnitCubes cubes(static_cast<std::size_t>(rep.vertex_count()));
    for (auto& c : cubes) c.reserve(rep.dims.size());
    for (const Dimension& d : rep.dims) {
        if (d.rep.threshold <= 0) throw std::invalid_argument("threshold must be positive");
        for (std::size_t v = 0; v < cubes.size(); ++v) {
            Rational lo(d.rep.placement.at(v), d.rep.threshold);
            cubes[v].push_back({lo, lo + Rational(1)});
        }
    }
    return cubes;
}

bool cubes_intersect(const std::vector<Interval>& x, const std::vector<Interval>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("cube dimension mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!intersects(x[i], y[i])) return false;
    return true;
}

}  // namespace cubicity
