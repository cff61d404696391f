#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "prismdom/graph.hpp"

namespace prismdom {

// I[u,v]: every vertex lying on at least one shortest u-v path.
inline VertexSet interval(const DistanceMatrix& d, int u, int v) {
    auto duv = d.get(u, v);
    if (!duv) throw std::invalid_argument("interval: endpoints are in different components");
    VertexSet out(d.n());
    for (int w = 0; w < d.n(); ++w) {
        auto a = d.get(u, w), b = d.get(w, v);
        if (a && b && *a + *b == *duv) out.add(w);
    }
    return out;
}

// Empty sets and singletons count as connected.
inline bool is_connected_set(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n) throw std::invalid_argument("is_connected_set: universe mismatch");
    int start = s.first();
    if (start < 0) return true;
    VertexSet seen(g.n);
    seen.add(start);
    std::vector<int> stack = {start};
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.adj[v])
            if (s.contains(w) && !seen.contains(w)) {
                seen.add(w);
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == s.size();
}

// Distance-preservation criterion: S is weakly convex iff the distance inside
// the induced subgraph equals the distance in G for every pair of members.
inline bool is_weakly_convex(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
    if (s.universe() != g.n) throw std::invalid_argument("is_weakly_convex: universe mismatch");
    auto members = s.to_vector();
    if (members.size() <= 1) return true;
    std::vector<int> dist(g.n);
    std::vector<int> queue;
    queue.reserve(members.size());
    for (int u : members) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(u);
        dist[u] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : g.adj[v])
                if (s.contains(w) && dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        for (int v : members) {
            auto global = d.get(u, v);
            if (!global) throw std::invalid_argument("is_weakly_convex: members are in different components of G");
            if (dist[v] != *global) return false;
        }
    }
    return true;
}

// Interval criterion: no vertex outside S sits on a geodesic between members.
inline bool is_convex(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
    if (s.universe() != g.n) throw std::invalid_argument("is_convex: universe mismatch");
    auto members = s.to_vector();
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j) {
            int u = members[i], v = members[j];
            auto duv = d.get(u, v);
            if (!duv) throw std::invalid_argument("is_convex: members are in different components of G");
            for (int w = 0; w < g.n; ++w) {
                if (s.contains(w)) continue;
                auto a = d.get(u, w), b = d.get(w, v);
                if (a && b && *a + *b == *duv) return false;
            }
        }
    return true;
}

class EnumerationOverflow : public std::runtime_error {
public:
    explicit EnumerationOverflow(const std::string& msg) : std::runtime_error(msg) {}
};

// All shortest u-v paths, by depth-first expansion along distance-decreasing
// edges. Guarded: used as an oracle in tests, not meant for long geodesics.
inline std::vector<std::vector<int>> enumerate_geodesics(const Graph& g, int u, int v,
                                                         int max_length = 15,
                                                         long long max_count = 1000000) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n)
        throw std::invalid_argument("enumerate_geodesics: vertex out of range");
    std::vector<int> dist_to_v(g.n, -1);
    std::vector<int> queue = {v};
    dist_to_v[v] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int w : g.adj[x])
            if (dist_to_v[w] < 0) {
                dist_to_v[w] = dist_to_v[x] + 1;
                queue.push_back(w);
            }
    }
    if (dist_to_v[u] < 0) throw std::invalid_argument("enumerate_geodesics: endpoints are in different components");
    if (dist_to_v[u] > max_length)
        throw EnumerationOverflow("enumerate_geodesics: distance " + std::to_string(dist_to_v[u]) +
                                  " exceeds the guard " + std::to_string(max_length));

    std::vector<std::vector<int>> out;
    std::vector<int> path = {u};
    long long count = 0;
    auto dfs = [&](auto&& self, int cur) -> void {
        if (cur == v) {
            if (++count > max_count)
                throw EnumerationOverflow("enumerate_geodesics: more than " + std::to_string(max_count) + " geodesics");
            out.push_back(path);
            return;
        }
        for (int w : g.adj[cur])
            if (dist_to_v[w] == dist_to_v[cur] - 1) {
                path.push_back(w);
                self(self, w);
                path.pop_back();
            }
    };
    dfs(dfs, u);
    return out;
}

inline bool is_connected_dominating(const Graph& g, const VertexSet& s) {
    return is_dominating(g, s) && is_connected_set(g, s);
}

inline bool is_weakly_convex_dominating(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
    return is_dominating(g, s) && is_weakly_convex(g, d, s);
}

inline bool is_convex_dominating(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
    return is_dominating(g, s) && is_convex(g, d, s);
}

}  // namespace prismdom
