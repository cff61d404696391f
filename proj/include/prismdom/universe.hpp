#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "prismdom/graph.hpp"
#include "prismdom/permutation.hpp"

namespace prismdom {

// splitmix64: reproducible across platforms, which std::uniform_int_distribution
// is not. Every sweep seeds one of these and reports the seed.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint32_t below(std::uint32_t bound) { return bound ? std::uint32_t(next() % bound) : 0; }

    double unit() { return double(next() >> 11) * 0x1.0p-53; }
};

// All labeled graphs on n vertices, one per subset of the possible edges.
template <class F>
inline void for_each_graph(int n, F&& f) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    if (pairs.size() > 28) throw std::invalid_argument("for_each_graph: too many edge subsets");
    std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<std::pair<int, int>> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (size_t i = 0; i < pairs.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) edges.push_back(pairs[i]);
        f(make_graph(n, edges));
    }
}

template <class F>
inline void for_each_connected_graph(int n, F&& f) {
    for_each_graph(n, [&](const Graph& g) {
        if (is_connected(g)) f(g);
    });
}

// Uniform random permutation by Fisher-Yates over the seeded generator.
inline Permutation random_permutation(Rng& rng, int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(img[i], img[rng.below(std::uint32_t(i + 1))]);
    return Permutation(std::move(img));
}

// Random spanning tree (each vertex attaches to a random earlier one) plus
// every remaining pair independently with probability extra_edge_prob.
inline Graph random_connected_graph(Rng& rng, int n, double extra_edge_prob = 0.3) {
    if (n < 1) throw std::invalid_argument("random_connected_graph: n must be at least 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(int(rng.below(std::uint32_t(v))), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < extra_edge_prob) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

}  // namespace prismdom
