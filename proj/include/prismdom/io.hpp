#pragma once

#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "prismdom/graph.hpp"

namespace prismdom {

// Error raised by the text readers; carries the 1-based position so the CLI
// can point at the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Edge-list text with optional metadata carried in structured comments:
//   line 1: "n m", then m lines "u v" (0-based ids)
//   "# label <id> <text>"  and  "# perm <cycles>"  are recognized comments,
//   every other "#" line and blank lines are skipped.
struct LoadedGraph {
    Graph graph;
    std::optional<std::vector<std::string>> labels;
    std::optional<std::string> perm_text;
};

namespace io_detail {

inline bool parse_int_token(const std::string& line, size_t& pos, int line_no, const char* what, int& out) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos >= line.size()) return false;
    size_t start = pos;
    if (line[pos] == '-' || line[pos] == '+') ++pos;
    size_t digits = pos;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == digits)
        throw ParseError(std::string("expected ") + what, line_no, int(start) + 1);
    try {
        out = std::stoi(line.substr(start, pos - start));
    } catch (const std::out_of_range&) {
        throw ParseError(std::string(what) + " out of range", line_no, int(start) + 1);
    }
    return true;
}

inline int require_int(const std::string& line, size_t& pos, int line_no, const char* what) {
    int v = 0;
    if (!parse_int_token(line, pos, line_no, what, v))
        throw ParseError(std::string("expected ") + what, line_no, int(line.size()) + 1);
    return v;
}

inline void require_line_end(const std::string& line, size_t pos, int line_no) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos < line.size() && line[pos] == '#') return;
    if (pos < line.size())
        throw ParseError("unexpected trailing text", line_no, int(pos) + 1);
}

inline std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace io_detail

inline LoadedGraph read_edge_list(std::istream& in) {
    using namespace io_detail;
    LoadedGraph out;
    std::map<int, std::string> label_map;
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0, m = 0, edges_read = 0;
    std::vector<std::pair<int, int>> edges;
    std::optional<std::string> perm_text;

    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            std::istringstream cs(t.substr(1));
            std::string kind;
            cs >> kind;
            if (kind == "label") {
                int id;
                if (cs >> id) {
                    std::string rest;
                    std::getline(cs, rest);
                    label_map[id] = trim(rest);
                }
            } else if (kind == "perm") {
                std::string rest;
                std::getline(cs, rest);
                perm_text = trim(rest);
            }
            continue;
        }
        size_t pos = 0;
        if (!have_header) {
            n = require_int(line, pos, line_no, "vertex count");
            m = require_int(line, pos, line_no, "edge count");
            require_line_end(line, pos, line_no);
            if (n < 0) throw ParseError("vertex count is negative", line_no, 1);
            if (m < 0) throw ParseError("edge count is negative", line_no, 1);
            have_header = true;
            continue;
        }
        if (edges_read == m)
            throw ParseError("more edge lines than the declared edge count " + std::to_string(m), line_no, 1);
        size_t upos = pos;
        int u = require_int(line, pos, line_no, "vertex id");
        int v = require_int(line, pos, line_no, "vertex id");
        require_line_end(line, pos, line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex id out of range [0," + std::to_string(n) + ")", line_no, int(upos) + 1);
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no, int(upos) + 1);
        edges.emplace_back(u, v);
        ++edges_read;
    }
    if (!have_header) throw ParseError("missing \"n m\" header line", std::max(line_no, 1), 1);
    if (edges_read != m)
        throw ParseError("declared " + std::to_string(m) + " edges but found " + std::to_string(edges_read), line_no, 1);

    out.graph = make_graph(n, edges);
    if (!label_map.empty()) {
        std::vector<std::string> labels(n);
        for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
        for (auto& [id, lab] : label_map)
            if (id >= 0 && id < n) labels[id] = lab;
        out.labels = std::move(labels);
    }
    out.perm_text = perm_text;
    return out;
}

inline void write_edge_list(std::ostream& os, const Graph& g,
                            const std::vector<std::string>* labels = nullptr,
                            const std::string* perm_text = nullptr) {
    os << g.n << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges) os << u << ' ' << v << '\n';
    if (labels)
        for (int v = 0; v < g.n; ++v) os << "# label " << v << ' ' << (*labels)[v] << '\n';
    if (perm_text && !perm_text->empty()) os << "# perm " << *perm_text << '\n';
}

// graph6: the standard bit-packed format for undirected simple graphs.
// Writing is byte-exact; reading also tolerates the optional ">>graph6<<"
// header.
inline std::string to_graph6(const Graph& g) {
    std::string out;
    int n = g.n;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    } else {
        throw std::invalid_argument("to_graph6: n too large");
    }
    long long nbits = (long long)n * (n - 1) / 2;
    std::vector<uint8_t> bits((nbits + 5) / 6, 0);
    for (auto [u, v] : g.edges) {
        // bit index of pair (u,v), u < v, in column-major upper-triangle order
        long long idx = (long long)v * (v - 1) / 2 + u;
        bits[idx / 6] |= uint8_t(1u << (5 - idx % 6));
    }
    for (uint8_t b : bits) out.push_back(char(b + 63));
    return out;
}

inline Graph from_graph6(std::string_view s) {
    const std::string header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty graph6 string", 1, 1);
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw ParseError("graph6 string truncated", 1, int(pos) + 1);
        unsigned char c = s[pos];
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", 1, int(pos) + 1);
        ++pos;
        return c - 63;
    };
    long long n = next();
    if (n == 63) {
        long long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
        if (n == 63) throw ParseError("graph6 orders above 258047 are not supported", 1, 1);
    }
    if (n > kMaxDistanceMatrixOrder)
        throw ParseError("graph6 order " + std::to_string(n) + " exceeds supported limit", 1, 1);
    long long nbits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    int have = 0, buf = 0;
    long long idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx) {
            if (have == 0) {
                buf = next();
                have = 6;
            }
            if (buf & (1 << (have - 1))) edges.emplace_back(u, v);
            --have;
        }
    (void)nbits;
    if (pos != s.size()) throw ParseError("trailing bytes after graph6 data", 1, int(pos) + 1);
    return make_graph(int(n), edges);
}

inline void write_dot(std::ostream& os, const Graph& g, const std::vector<std::string>* labels = nullptr) {
    os << "graph g {\n";
    for (int v = 0; v < g.n; ++v) {
        os << "  " << v;
        if (labels) os << " [label=\"" << (*labels)[v] << "\"]";
        os << ";\n";
    }
    for (auto [u, v] : g.edges) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
}

inline nlohmann::json sidecar_json(int base_n, const std::vector<int>* perm_image,
                                   const std::vector<std::string>* labels) {
    nlohmann::json j;
    j["n"] = base_n;
    if (perm_image) j["perm_image"] = *perm_image;
    if (labels) j["labels"] = *labels;
    return j;
}

}  // namespace prismdom
