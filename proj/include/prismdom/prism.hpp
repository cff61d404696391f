#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "prismdom/graph.hpp"
#include "prismdom/permutation.hpp"

namespace prismdom {

// The prism of G under a permutation: two copies of G joined by the perfect
// matching {v, copy(perm(v))}. Base vertex v keeps its id; its copy is n+v.
struct PrismGraph {
    Graph graph;  // order 2*base_n
    Permutation perm;
    int base_n = 0;

    int copy_of(int base_v) const { return base_v + base_n; }
    int base_of(int prism_v) const { return prism_v < base_n ? prism_v : prism_v - base_n; }
    bool is_copy(int prism_v) const { return prism_v >= base_n; }

    std::string vertex_name(int prism_v) const {
        return std::to_string(base_of(prism_v)) + (is_copy(prism_v) ? "'" : "");
    }
    std::string vertex_name(int prism_v, const std::vector<std::string>& base_labels) const {
        return base_labels.at(base_of(prism_v)) + (is_copy(prism_v) ? "'" : "");
    }
};

inline PrismGraph build_prism(const Graph& g, const Permutation& p) {
    if (p.n() != g.n) throw std::invalid_argument("build_prism: permutation size != graph order");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * g.edges.size() + g.n);
    for (auto [u, v] : g.edges) {
        edges.emplace_back(u, v);
        edges.emplace_back(u + g.n, v + g.n);
    }
    for (int v = 0; v < g.n; ++v) edges.emplace_back(v, g.n + p(v));
    PrismGraph out;
    out.graph = make_graph(2 * g.n, edges);
    out.perm = p;
    out.base_n = g.n;
    return out;
}

inline PrismGraph identity_prism(const Graph& g) { return build_prism(g, Permutation::identity(g.n)); }

// base ∪ {copies of `copy`} as a vertex set of the prism.
inline VertexSet lift_set(const PrismGraph& pg, const VertexSet& base, const VertexSet& copy) {
    if (base.universe() != pg.base_n || copy.universe() != pg.base_n)
        throw std::invalid_argument("lift_set: sets must live on the base vertex ids");
    VertexSet out(2 * pg.base_n);
    base.for_each([&](int v) { out.add(v); });
    copy.for_each([&](int v) { out.add(pg.copy_of(v)); });
    return out;
}

// D ∩ V as a base-universe set.
inline VertexSet base_part(const PrismGraph& pg, const VertexSet& d) {
    if (d.universe() != 2 * pg.base_n) throw std::invalid_argument("base_part: set universe != prism order");
    VertexSet out(pg.base_n);
    d.for_each([&](int v) {
        if (!pg.is_copy(v)) out.add(v);
    });
    return out;
}

// {v : v' ∈ D} as a base-universe set, i.e. D ∩ V' pulled back to base ids.
inline VertexSet copy_part(const PrismGraph& pg, const VertexSet& d) {
    if (d.universe() != 2 * pg.base_n) throw std::invalid_argument("copy_part: set universe != prism order");
    VertexSet out(pg.base_n);
    d.for_each([&](int v) {
        if (pg.is_copy(v)) out.add(pg.base_of(v));
    });
    return out;
}

inline std::vector<std::string> prism_labels(const PrismGraph& pg, const std::vector<std::string>& base_labels) {
    std::vector<std::string> out(2 * pg.base_n);
    for (int v = 0; v < 2 * pg.base_n; ++v) out[v] = pg.vertex_name(v, base_labels);
    return out;
}

inline std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out(n);
    for (int v = 0; v < n; ++v) out[v] = std::to_string(v);
    return out;
}

}  // namespace prismdom
