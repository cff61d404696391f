#pragma once

#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prismdom/graph.hpp"

namespace prismdom {

class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
        std::vector<char> seen(image_.size(), 0);
        for (int v : image_) {
            if (v < 0 || v >= int(image_.size()) || seen[v])
                throw std::invalid_argument("Permutation: image is not a bijection");
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    int n() const { return int(image_.size()); }
    int operator()(int v) const { return image_.at(v); }
    const std::vector<int>& image() const { return image_; }

    bool is_identity() const {
        for (int v = 0; v < n(); ++v)
            if (image_[v] != v) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> img(image_.size());
        for (int v = 0; v < n(); ++v) img[image_[v]] = v;
        return Permutation(std::move(img));
    }

    // Composition: apply this first, then `second`.
    Permutation then(const Permutation& second) const {
        if (second.n() != n()) throw std::invalid_argument("Permutation: size mismatch in composition");
        std::vector<int> img(image_.size());
        for (int v = 0; v < n(); ++v) img[v] = second(image_[v]);
        return Permutation(std::move(img));
    }

    VertexSet apply(const VertexSet& s) const {
        if (s.universe() != n()) throw std::invalid_argument("Permutation: set universe mismatch");
        VertexSet r(n());
        s.for_each([&](int v) { r.add(image_[v]); });
        return r;
    }

    bool operator==(const Permutation& o) const { return image_ == o.image_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }

    // Nontrivial cycles, each written from its smallest element, ordered by
    // that element.
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(image_.size(), 0);
        for (int v = 0; v < n(); ++v) {
            if (seen[v] || image_[v] == v) continue;
            std::vector<int> cyc;
            for (int w = v; !seen[w]; w = image_[w]) {
                seen[w] = 1;
                cyc.push_back(w);
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    // "()" for the identity, otherwise e.g. "(1 3)(4 6)".
    std::string to_cycle_string() const {
        return to_cycle_string_impl(nullptr);
    }
    std::string to_cycle_string(const std::vector<std::string>& labels) const {
        if (int(labels.size()) != n()) throw std::invalid_argument("Permutation: label count mismatch");
        return to_cycle_string_impl(&labels);
    }

private:
    std::string to_cycle_string_impl(const std::vector<std::string>* labels) const {
        auto cs = cycles();
        if (cs.empty()) return "()";
        std::ostringstream os;
        for (const auto& cyc : cs) {
            os << '(';
            for (size_t i = 0; i < cyc.size(); ++i) {
                if (i) os << ' ';
                if (labels)
                    os << (*labels)[cyc[i]];
                else
                    os << cyc[i];
            }
            os << ')';
        }
        return os.str();
    }

    std::vector<int> image_;
};

namespace perm_detail {

inline std::string normalize_label(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

// Splits cycle notation into cycles of element tokens. An element is either a
// run of digits or a parenthesized tuple label such as "(5,1)"; tuples only
// make sense when a label map is supplied, but tokenizing them is uniform.
inline std::vector<std::vector<std::string>> tokenize_cycles(std::string_view text) {
    std::vector<std::vector<std::string>> cycles;
    size_t i = 0;
    auto skip_ws = [&]() {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    };
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '(')
            throw std::invalid_argument("parse_permutation: expected '(' at position " + std::to_string(i + 1));
        ++i;
        std::vector<std::string> cycle;
        while (true) {
            skip_ws();
            if (i >= text.size()) throw std::invalid_argument("parse_permutation: unterminated cycle");
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (text[i] == '(') {
                size_t start = i;
                ++i;
                while (i < text.size() && text[i] != ')' && text[i] != '(') ++i;
                if (i >= text.size() || text[i] != ')')
                    throw std::invalid_argument("parse_permutation: unterminated tuple label");
                ++i;
                cycle.push_back(normalize_label(text.substr(start, i - start)));
            } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                size_t start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                cycle.push_back(std::string(text.substr(start, i - start)));
            } else {
                throw std::invalid_argument(std::string("parse_permutation: unexpected character '") + text[i] + "' at position " + std::to_string(i + 1));
            }
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

inline Permutation from_cycle_tokens(int n, const std::vector<std::vector<std::string>>& cycles,
                                     const std::map<std::string, int>* label_to_id) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(n, 0);
    auto resolve = [&](const std::string& tok) -> int {
        if (label_to_id) {
            auto it = label_to_id->find(tok);
            if (it == label_to_id->end())
                throw std::invalid_argument("parse_permutation: unknown vertex label \"" + tok + "\"");
            return it->second;
        }
        if (!tok.empty() && tok[0] == '(')
            throw std::invalid_argument("parse_permutation: tuple label \"" + tok + "\" without a label map");
        int id = std::stoi(tok);
        if (id < 0 || id >= n)
            throw std::invalid_argument("parse_permutation: id " + tok + " out of range [0," + std::to_string(n) + ")");
        return id;
    };
    for (const auto& cycle : cycles) {
        std::vector<int> ids;
        ids.reserve(cycle.size());
        for (const auto& tok : cycle) {
            int id = resolve(tok);
            if (used[id])
                throw std::invalid_argument("parse_permutation: vertex " + tok + " appears twice (overlapping cycles are rejected)");
            used[id] = 1;
            ids.push_back(id);
        }
        for (size_t i = 0; i < ids.size(); ++i) img[ids[i]] = ids[(i + 1) % ids.size()];
    }
    return Permutation(std::move(img));
}

}  // namespace perm_detail

// Cycle notation over integer ids: "(1 3)(4 6)". Whitespace and commas
// between elements are interchangeable; unlisted ids stay fixed; the empty
// string is the identity. Cycles must be disjoint.
inline Permutation parse_permutation(int n, std::string_view text) {
    if (n < 0) throw std::invalid_argument("parse_permutation: negative size");
    return perm_detail::from_cycle_tokens(n, perm_detail::tokenize_cycles(text), nullptr);
}

// Same grammar but every element is looked up in the label map, which also
// admits tuple labels like "(5,1)".
inline Permutation parse_permutation(int n, std::string_view text, const std::map<std::string, int>& label_to_id) {
    if (n < 0) throw std::invalid_argument("parse_permutation: negative size");
    return perm_detail::from_cycle_tokens(n, perm_detail::tokenize_cycles(text), &label_to_id);
}

inline Permutation invert(const Permutation& p) { return p.inverse(); }

}  // namespace prismdom
