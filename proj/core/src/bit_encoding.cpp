#include "cubicity/bit_encoding.hpp"

#include <bit>
#include <stdexcept>

namespace cubicity {

int bit_count_for(int side_size) noexcept {
    if (side_size <= 1) return 0;
    return static_cast<int>(std::bit_width(static_cast<unsigned>(side_size - 1)));
}

BitEncodingFamily build_h_family(int a_count, int b_count, Side side) {
    if (a_count < 1 || b_count < 1) throw std::invalid_argument("both sides need a vertex");
    BitEncodingFamily fam{side, a_count, b_count, {}};
    const int side_size = side == Side::A ? a_count : b_count;
    const int offset = side == Side::A ? 0 : a_count;
    const int bits = bit_count_for(side_size);

    fam.reps.reserve(static_cast<std::size_t>(bits));
    for (int bit = 0; bit < bits; ++bit) {
        UnitIntervalRep rep;
        rep.threshold = 1;
        rep.placement.assign(static_cast<std::size_t>(a_count + b_count), 1);
        for (int j = 1; j <= side_size; ++j) {
            const bool set = ((static_cast<unsigned>(j - 1) >> bit) & 1U) != 0;
            rep.placement[static_cast<std::size_t>(offset + j - 1)] = set ? 2 : 0;
        }
        fam.reps.push_back(std::move(rep));
    }
    return fam;
}

std::vector<Dimension> BitEncodingFamily::dimensions() const {
    std::vector<Dimension> out;
    out.reserve(reps.size());
    const DimKind kind = side == Side::A ? DimKind::H1Bit : DimKind::H2Bit;
    for (std::size_t i = 0; i < reps.size(); ++i)
        out.push_back({reps[i], Provenance{kind, Side::A, static_cast<int>(i) + 1}});
    return out;
}

VertexGraph intersection_of_family(const BitEncodingFamily& family) {
    VertexGraph out = VertexGraph::complete(family.vertex_count());
    for (const UnitIntervalRep& rep : family.reps)
        out.intersect_with(induced_graph(rep, family.vertex_count()));
    return out;
}

}  // namespace cubicity
