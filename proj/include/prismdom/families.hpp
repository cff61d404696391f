#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prismdom/graph.hpp"
#include "prismdom/permutation.hpp"

namespace prismdom {

// A generated paper family: the graph, the paper's vertex labels, and the
// permutation the paper pairs with it (when it names one).
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;  // id -> label
    std::map<std::string, int> label_to_id;
    std::optional<Permutation> canonical_perm;
    std::string name;

    int id_of(const std::string& label) const {
        auto it = label_to_id.find(perm_detail::normalize_label(label));
        if (it == label_to_id.end())
            throw std::invalid_argument(name + ": unknown vertex label \"" + label + "\"");
        return it->second;
    }

    Permutation parse_perm(const std::string& text) const {
        return parse_permutation(graph.n, text, label_to_id);
    }
};

namespace family_detail {

inline void finish_labels(LabeledGraph& lg) {
    for (int v = 0; v < lg.graph.n; ++v)
        lg.label_to_id[perm_detail::normalize_label(lg.labels[v])] = v;
}

inline std::string tuple_label(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace family_detail

inline LabeledGraph path(int n) {
    if (n < 1) throw std::invalid_argument("path: n must be at least 1");
    LabeledGraph lg;
    lg.name = "path(" + std::to_string(n) + ")";
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    lg.graph = make_graph(n, edges);
    for (int v = 0; v < n; ++v) lg.labels.push_back(std::to_string(v));
    family_detail::finish_labels(lg);
    if (n == 3) lg.canonical_perm = parse_permutation(3, "(0 1)");
    if (n == 6) lg.canonical_perm = parse_permutation(6, "(1 4)(2 3)");
    return lg;
}

inline LabeledGraph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
    LabeledGraph lg;
    lg.name = "cycle(" + std::to_string(n) + ")";
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    lg.graph = make_graph(n, edges);
    for (int v = 0; v < n; ++v) lg.labels.push_back(std::to_string(v));
    family_detail::finish_labels(lg);
    if (n == 7) lg.canonical_perm = parse_permutation(7, "(1 3)(4 6)");
    return lg;
}

// K_{1,k}: vertex 0 is the center.
inline LabeledGraph star(int k) {
    if (k < 1) throw std::invalid_argument("star: k must be at least 1");
    LabeledGraph lg;
    lg.name = "star(" + std::to_string(k) + ")";
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= k; ++v) edges.emplace_back(0, v);
    lg.graph = make_graph(k + 1, edges);
    for (int v = 0; v <= k; ++v) lg.labels.push_back(std::to_string(v));
    family_detail::finish_labels(lg);
    lg.canonical_perm = parse_permutation(k + 1, "(0 1)");
    return lg;
}

inline LabeledGraph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be at least 1");
    LabeledGraph lg;
    lg.name = "complete(" + std::to_string(n) + ")";
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    lg.graph = make_graph(n, edges);
    for (int v = 0; v < n; ++v) lg.labels.push_back(std::to_string(v));
    family_detail::finish_labels(lg);
    return lg;
}

// G_k of the C7 construction: k seven-cycles sharing the vertex (0,0).
// Vertex (i,j), j=1..6, gets id 1+(i-1)*6+(j-1). The bundled permutation
// acts as (1 3)(4 6) inside every copy.
inline LabeledGraph cycle_gadget(int k) {
    if (k < 1) throw std::invalid_argument("cycle_gadget: k must be at least 1");
    LabeledGraph lg;
    lg.name = "cycle_gadget(" + std::to_string(k) + ")";
    int n = 6 * k + 1;
    auto id = [&](int i, int j) { return 1 + (i - 1) * 6 + (j - 1); };
    std::vector<std::pair<int, int>> edges;
    lg.labels.assign(n, "");
    lg.labels[0] = family_detail::tuple_label(0, 0);
    for (int i = 1; i <= k; ++i) {
        edges.emplace_back(0, id(i, 1));
        for (int j = 1; j < 6; ++j) edges.emplace_back(id(i, j), id(i, j + 1));
        edges.emplace_back(id(i, 6), 0);
        for (int j = 1; j <= 6; ++j) lg.labels[id(i, j)] = family_detail::tuple_label(i, j);
    }
    lg.graph = make_graph(n, edges);
    family_detail::finish_labels(lg);
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) img[v] = v;
    for (int i = 1; i <= k; ++i) {
        std::swap(img[id(i, 1)], img[id(i, 3)]);
        std::swap(img[id(i, 4)], img[id(i, 6)]);
    }
    lg.canonical_perm = Permutation(img);
    return lg;
}

// H_k: k six-vertex paths sharing their former 0-end as the hub (0,0).
// The bundled permutation acts as (1 4)(2 3) inside every copy.
inline LabeledGraph path_gadget(int k) {
    if (k < 1) throw std::invalid_argument("path_gadget: k must be at least 1");
    LabeledGraph lg;
    lg.name = "path_gadget(" + std::to_string(k) + ")";
    int n = 5 * k + 1;
    auto id = [&](int i, int j) { return 1 + (i - 1) * 5 + (j - 1); };
    std::vector<std::pair<int, int>> edges;
    lg.labels.assign(n, "");
    lg.labels[0] = family_detail::tuple_label(0, 0);
    for (int i = 1; i <= k; ++i) {
        edges.emplace_back(0, id(i, 1));
        for (int j = 1; j < 5; ++j) edges.emplace_back(id(i, j), id(i, j + 1));
        for (int j = 1; j <= 5; ++j) lg.labels[id(i, j)] = family_detail::tuple_label(i, j);
    }
    lg.graph = make_graph(n, edges);
    family_detail::finish_labels(lg);
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) img[v] = v;
    for (int i = 1; i <= k; ++i) {
        std::swap(img[id(i, 1)], img[id(i, 4)]);
        std::swap(img[id(i, 2)], img[id(i, 3)]);
    }
    lg.canonical_perm = Permutation(img);
    return lg;
}

// T_{k,l}: center 0, middles 1..k, and l leaves (i,j) on each middle.
// The bundled permutation is the k-cycle (1 2 ... k) on the middles.
inline LabeledGraph spider_tree(int k, int l) {
    if (k < 2) throw std::invalid_argument("spider_tree: k must be at least 2");
    if (l < 1) throw std::invalid_argument("spider_tree: l must be at least 1");
    LabeledGraph lg;
    lg.name = "spider_tree(" + std::to_string(k) + "," + std::to_string(l) + ")";
    int n = 1 + k + k * l;
    auto leaf_id = [&](int i, int j) { return 1 + k + (i - 1) * l + (j - 1); };
    std::vector<std::pair<int, int>> edges;
    lg.labels.assign(n, "");
    lg.labels[0] = "0";
    for (int i = 1; i <= k; ++i) {
        lg.labels[i] = std::to_string(i);
        edges.emplace_back(0, i);
        for (int j = 1; j <= l; ++j) {
            edges.emplace_back(i, leaf_id(i, j));
            lg.labels[leaf_id(i, j)] = family_detail::tuple_label(i, j);
        }
    }
    lg.graph = make_graph(n, edges);
    family_detail::finish_labels(lg);
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) img[v] = v;
    for (int i = 1; i <= k; ++i) img[i] = i == k ? 1 : i + 1;
    lg.canonical_perm = Permutation(img);
    return lg;
}

// G_k of the P7 construction: k seven-vertex paths sharing their first two
// and last two vertices (labels 1,2,6,7), plus the cross edges
// (4,1)(4,i). The bundled permutation is the 4-cycle (2 6 (5,1) (3,1)).
inline LabeledGraph sept_path_gadget(int k) {
    if (k < 3) throw std::invalid_argument("sept_path_gadget: k must be at least 3");
    LabeledGraph lg;
    lg.name = "sept_path_gadget(" + std::to_string(k) + ")";
    int n = 4 + 3 * k;
    // shared endpoints first, then the three interior vertices of each copy
    auto inner_id = [&](int j, int i) { return 4 + (i - 1) * 3 + (j - 3); };  // j in {3,4,5}
    lg.labels = {"1", "2", "6", "7"};
    lg.labels.resize(n);
    std::vector<std::pair<int, int>> edges;
    edges.emplace_back(0, 1);  // 1-2
    edges.emplace_back(2, 3);  // 6-7
    for (int i = 1; i <= k; ++i) {
        for (int j = 3; j <= 5; ++j) lg.labels[inner_id(j, i)] = family_detail::tuple_label(j, i);
        edges.emplace_back(1, inner_id(3, i));             // 2-(3,i)
        edges.emplace_back(inner_id(3, i), inner_id(4, i));
        edges.emplace_back(inner_id(4, i), inner_id(5, i));
        edges.emplace_back(inner_id(5, i), 2);             // (5,i)-6
        if (i >= 2) edges.emplace_back(inner_id(4, 1), inner_id(4, i));
    }
    lg.graph = make_graph(n, edges);
    family_detail::finish_labels(lg);
    lg.canonical_perm = lg.parse_perm("(2 6 (5,1) (3,1))");
    return lg;
}

// Dispatch by the CLI-visible family name.
inline LabeledGraph make_family(const std::string& name, std::optional<int> k, std::optional<int> l) {
    auto need_k = [&](const char* what) {
        if (!k) throw std::invalid_argument(std::string("family ") + what + " requires --k");
        return *k;
    };
    if (name == "path") return path(need_k("path"));
    if (name == "cycle") return cycle(need_k("cycle"));
    if (name == "star") return star(need_k("star"));
    if (name == "complete") return complete(need_k("complete"));
    if (name == "cycle-gadget") return cycle_gadget(need_k("cycle-gadget"));
    if (name == "path-gadget") return path_gadget(need_k("path-gadget"));
    if (name == "spider-tree") {
        if (!l) throw std::invalid_argument("family spider-tree requires --l");
        return spider_tree(need_k("spider-tree"), *l);
    }
    if (name == "sept-path-gadget") return sept_path_gadget(need_k("sept-path-gadget"));
    throw std::invalid_argument("unknown family \"" + name +
                                "\" (expected path|cycle|star|complete|cycle-gadget|path-gadget|spider-tree|sept-path-gadget)");
}

}  // namespace prismdom
