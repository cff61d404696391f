#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prismdom {

// Subset of {0,...,n-1} backed by a word array. Iteration is always in
// ascending vertex order, which is what makes witness reports reproducible.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
        n_ = universe;
        words_.assign((universe + 63) / 64, 0);
    }

    static VertexSet of(int universe, std::initializer_list<int> ids) {
        VertexSet s(universe);
        for (int v : ids) s.add(v);
        return s;
    }

    static VertexSet from_vector(int universe, const std::vector<int>& ids) {
        VertexSet s(universe);
        for (int v : ids) s.add(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~uint64_t{0};
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    int size() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool contains(int v) const {
        return v >= 0 && v < n_ && (words_[v >> 6] >> (v & 63)) & 1;
    }

    void add(int v) {
        check_range(v);
        words_[v >> 6] |= uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        check_range(v);
        words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    VertexSet& operator|=(const VertexSet& o) {
        check_same(o);
        for (size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        check_same(o);
        for (size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }
    // set difference
    VertexSet& operator-=(const VertexSet& o) {
        check_same(o);
        for (size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r = full(n_);
        r -= *this;
        return r;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool is_subset_of(const VertexSet& o) const {
        check_same(o);
        for (size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_same(o);
        for (size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    // Smallest member, or -1 when empty.
    int first() const {
        for (size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return int(w * 64 + std::countr_zero(words_[w]));
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                f(int(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    // Lexicographic order on the ascending member sequences; a strict prefix
    // compares smaller. Returns <0, 0, >0.
    static int compare_lex(const VertexSet& a, const VertexSet& b) {
        auto va = a.to_vector(), vb = b.to_vector();
        if (va == vb) return 0;
        return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end()) ? -1 : 1;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        bool first_el = true;
        for_each([&](int v) {
            if (!first_el) os << ',';
            os << v;
            first_el = false;
        });
        os << '}';
        return os.str();
    }

private:
    void check_range(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("VertexSet: vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }
    void check_same(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }
    void trim() {
        if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

// Immutable undirected simple graph on dense vertex ids 0..n-1.
// Neighbor lists are sorted ascending; edges are stored once with u < v.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return int(edges.size()); }
    int degree(int v) const { return int(adj.at(v).size()); }

    int max_degree() const {
        int d = 0;
        for (const auto& a : adj) d = std::max(d, int(a.size()));
        return d;
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
        const auto& a = adj[u];
        return std::binary_search(a.begin(), a.end(), v);
    }
};

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0) throw std::invalid_argument("make_graph: negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    std::vector<std::pair<int, int>> es;
    es.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("make_graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("make_graph: edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" + std::to_string(n));
        es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    g.edges = std::move(es);
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.n;
}

// N[S]: S together with every neighbor of a member.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n) throw std::invalid_argument("closed_neighborhood: set universe != graph order");
    VertexSet r = s;
    s.for_each([&](int v) {
        for (int w : g.adj[v]) r.add(w);
    });
    return r;
}

inline bool is_dominating(const Graph& g, const VertexSet& s) {
    return closed_neighborhood(g, s) == VertexSet::full(g.n);
}

// Hop distances for every ordered pair; unreachable pairs carry a dedicated
// marker that is never a valid distance.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> flat) : n_(n), d_(std::move(flat)) {}

    int n() const { return n_; }

    bool reachable(int u, int v) const { return raw(u, v) >= 0; }

    // Distance of a reachable pair.
    int at(int u, int v) const {
        int d = raw(u, v);
        if (d < 0) throw std::invalid_argument("DistanceMatrix: pair (" + std::to_string(u) + "," + std::to_string(v) + ") is unreachable");
        return d;
    }

    std::optional<int> get(int u, int v) const {
        int d = raw(u, v);
        if (d < 0) return std::nullopt;
        return d;
    }

private:
    int raw(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("DistanceMatrix: vertex out of range");
        return d_[size_t(u) * n_ + v];
    }

    int n_ = 0;
    std::vector<int> d_;
};

inline constexpr int kMaxDistanceMatrixOrder = 4096;

inline DistanceMatrix all_pairs_distances(const Graph& g) {
    if (g.n > kMaxDistanceMatrixOrder)
        throw std::invalid_argument("all_pairs_distances: n=" + std::to_string(g.n) + " exceeds limit " + std::to_string(kMaxDistanceMatrixOrder));
    std::vector<int> d(size_t(g.n) * g.n, -1);
    std::vector<int> queue;
    queue.reserve(g.n);
    for (int s = 0; s < g.n; ++s) {
        int* row = d.data() + size_t(s) * g.n;
        queue.clear();
        queue.push_back(s);
        row[s] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : g.adj[v])
                if (row[w] < 0) {
                    row[w] = row[v] + 1;
                    queue.push_back(w);
                }
        }
    }
    return DistanceMatrix(g.n, std::move(d));
}

// Largest finite distance; nullopt when some pair is unreachable.
inline std::optional<int> diameter(const Graph& g) {
    DistanceMatrix d = all_pairs_distances(g);
    int best = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            auto duv = d.get(u, v);
            if (!duv) return std::nullopt;
            best = std::max(best, *duv);
        }
    return best;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;    // new id -> original id, ascending
    std::vector<int> from_original;  // original id -> new id, -1 outside
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n) throw std::invalid_argument("induced_subgraph: set universe != graph order");
    InducedSubgraph out;
    out.to_original = s.to_vector();
    out.from_original.assign(g.n, -1);
    for (size_t i = 0; i < out.to_original.size(); ++i) out.from_original[out.to_original[i]] = int(i);
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges)
        if (out.from_original[u] >= 0 && out.from_original[v] >= 0)
            es.emplace_back(out.from_original[u], out.from_original[v]);
    out.graph = make_graph(int(out.to_original.size()), es);
    return out;
}

}  // namespace prismdom
