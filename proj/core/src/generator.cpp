#include "cubicity/generator.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cubicity/rng.hpp"

namespace cubicity {

BipartiteGraph gen_random_bipartite(int n1, int n2, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("side sizes must be positive");

    const std::int64_t pairs = static_cast<std::int64_t>(n1) * n2;
    std::vector<Edge> edges;
    auto emit = [&](std::int64_t k) {
        edges.push_back({static_cast<int>(k / n2) + 1, static_cast<int>(k % n2) + 1});
    };

    if (p == 1.0) {
        edges.reserve(static_cast<std::size_t>(pairs));
        for (std::int64_t k = 0; k < pairs; ++k) emit(k);
    } else if (p > 0.0) {
        // Geometric skipping over the pair sequence: the gap before the next
        // success of a Bernoulli(p) process is Geometric(p).
        Rng rng(seed);
        edges.reserve(static_cast<std::size_t>(static_cast<double>(pairs) * p * 1.1) + 16);
        const double log_q = std::log1p(-p);
        std::int64_t k = -1;
        while (true) {
            const double u = rng.unit();
            const double skip = std::floor(std::log1p(-u) / log_q);
            if (skip >= static_cast<double>(pairs - k)) break;
            k += 1 + static_cast<std::int64_t>(skip);
            if (k >= pairs) break;
            emit(k);
        }
    }
    return BipartiteGraph(n1, n2, std::move(edges));
}

}  // namespace cubicity
