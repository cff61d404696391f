#pragma once

#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "prismdom/geodesic.hpp"
#include "prismdom/graph.hpp"
#include "prismdom/permutation.hpp"
#include "prismdom/prism.hpp"

namespace prismdom {

enum class GammaVariant { plain, connected, weakly_convex, convex };

inline const char* variant_name(GammaVariant v) {
    switch (v) {
        case GammaVariant::plain: return "dom";
        case GammaVariant::connected: return "connected";
        case GammaVariant::weakly_convex: return "wcon";
        case GammaVariant::convex: return "con";
    }
    return "?";
}

inline GammaVariant variant_from_name(const std::string& s) {
    if (s == "dom" || s == "plain") return GammaVariant::plain;
    if (s == "connected" || s == "c") return GammaVariant::connected;
    if (s == "wcon" || s == "weakly-convex") return GammaVariant::weakly_convex;
    if (s == "con" || s == "convex") return GammaVariant::convex;
    throw std::invalid_argument("unknown variant \"" + s + "\" (expected dom|connected|wcon|con)");
}

struct SolveOptions {
    std::optional<std::chrono::milliseconds> budget;
    int threads = 1;
};

// Exact answer with a reproducible witness: minimum cardinality first, then
// the lexicographically smallest sorted member sequence. When the budget runs
// out the report is explicitly inconclusive instead of carrying a value.
struct GammaReport {
    GammaVariant variant = GammaVariant::plain;
    bool conclusive = true;
    int value = -1;  // meaningful only when conclusive
    VertexSet witness;
    int lower_bound = 0;
    int upper_bound = -1;
    uint64_t explored = 0;
    double elapsed_ms = 0.0;

    nlohmann::json to_json(const std::vector<std::string>* labels = nullptr) const {
        nlohmann::json j;
        j["variant"] = variant_name(variant);
        j["status"] = conclusive ? "exact" : "inconclusive";
        if (conclusive) {
            j["value"] = value;
            j["witness"] = witness.to_vector();
            if (labels) {
                std::vector<std::string> wl;
                witness.for_each([&](int v) { wl.push_back(labels->at(v)); });
                j["witness_labels"] = wl;
            }
        } else {
            j["lower_bound"] = lower_bound;
            j["upper_bound"] = upper_bound;
        }
        j["explored"] = explored;
        j["elapsed_ms"] = elapsed_ms;
        return j;
    }
};

inline constexpr int kMaxSolverOrder = 64;

namespace detail {

using u64 = std::uint64_t;

inline u64 bit(int v) { return u64{1} << v; }
inline int ctz(u64 x) { return std::countr_zero(x); }
inline int pc(u64 x) { return std::popcount(x); }

// Ascending-sequence lexicographic order for equal-size sets: the owner of
// the lowest differing bit is the smaller set.
inline bool lex_less(u64 a, u64 b) {
    u64 x = a ^ b;
    if (!x) return false;
    return a & (x & (~x + 1));
}

struct BudgetExceeded {};

struct Deadline {
    bool enabled = false;
    std::chrono::steady_clock::time_point end{};
    mutable std::uint32_t tick = 0;
    const std::atomic<bool>* abort = nullptr;

    static Deadline from(const std::optional<std::chrono::milliseconds>& budget) {
        Deadline d;
        if (budget) {
            d.enabled = true;
            d.end = std::chrono::steady_clock::now() + *budget;
        }
        return d;
    }

    bool expired() const {
        if ((++tick & 0x3FF) != 0) return false;
        if (abort && abort->load(std::memory_order_relaxed)) return true;
        return enabled && std::chrono::steady_clock::now() >= end;
    }
};

struct MaskGraph {
    int n = 0;
    int max_deg = 0;
    u64 full = 0;
    std::array<u64, 64> adj{};  // open neighborhoods
    std::array<u64, 64> cn{};   // closed neighborhoods

    static MaskGraph from(const Graph& g) {
        if (g.n > kMaxSolverOrder)
            throw std::invalid_argument("solver: n=" + std::to_string(g.n) + " exceeds the hard cap " + std::to_string(kMaxSolverOrder));
        MaskGraph mg;
        mg.n = g.n;
        mg.max_deg = g.max_degree();
        mg.full = g.n == 64 ? ~u64{0} : (bit(g.n) - 1);
        for (int v = 0; v < g.n; ++v) {
            u64 a = 0;
            for (int w : g.adj[v]) a |= bit(w);
            mg.adj[v] = a;
            mg.cn[v] = a | bit(v);
        }
        return mg;
    }
};

struct MaskDist {
    std::array<std::array<int8_t, 64>, 64> d{};

    static MaskDist from(const MaskGraph& mg) {
        MaskDist md;
        for (int s = 0; s < mg.n; ++s) {
            auto& row = md.d[s];
            row.fill(-1);
            row[s] = 0;
            u64 seen = bit(s), frontier = bit(s);
            int dist = 0;
            while (frontier) {
                u64 nf = 0, f = frontier;
                while (f) {
                    int v = ctz(f);
                    f &= f - 1;
                    nf |= mg.adj[v];
                }
                nf &= mg.full & ~seen;
                ++dist;
                u64 chk = nf;
                while (chk) {
                    int v = ctz(chk);
                    chk &= chk - 1;
                    row[v] = int8_t(dist);
                }
                seen |= nf;
                frontier = nf;
            }
        }
        return md;
    }
};

inline bool mask_connected(const MaskGraph& mg, u64 s) {
    if (!s) return true;
    u64 seen = s & (~s + 1);
    u64 frontier = seen;
    while (frontier) {
        u64 nf = 0, f = frontier;
        while (f) {
            int v = ctz(f);
            f &= f - 1;
            nf |= mg.adj[v];
        }
        nf &= s & ~seen;
        seen |= nf;
        frontier = nf;
    }
    return seen == s;
}

inline u64 cn_union(const MaskGraph& mg, u64 s) {
    u64 r = 0;
    while (s) {
        int v = ctz(s);
        s &= s - 1;
        r |= mg.cn[v];
    }
    return r;
}

inline u64 perm_image_mask(const Permutation& p, u64 s) {
    u64 r = 0;
    while (s) {
        int v = ctz(s);
        s &= s - 1;
        r |= bit(p(v));
    }
    return r;
}

inline VertexSet mask_to_set(u64 s, int n) {
    VertexSet out(n);
    while (s) {
        int v = ctz(s);
        s &= s - 1;
        out.add(v);
    }
    return out;
}

inline u64 set_to_mask(const VertexSet& s) {
    u64 r = 0;
    s.for_each([&](int v) { r |= bit(v); });
    return r;
}

// Weak convexity on masks: BFS inside S from each member must reproduce the
// global distances.
inline bool mask_weakly_convex(const MaskGraph& mg, const MaskDist& md, u64 s) {
    if ((s & (s - 1)) == 0) return true;
    u64 it = s;
    while (it) {
        int u = ctz(it);
        it &= it - 1;
        u64 seen = bit(u), frontier = bit(u);
        int dist = 0;
        while (frontier) {
            u64 nf = 0, f = frontier;
            while (f) {
                int v = ctz(f);
                f &= f - 1;
                nf |= mg.adj[v];
            }
            nf &= s & ~seen;
            if (!nf) break;
            ++dist;
            u64 chk = nf;
            while (chk) {
                int v = ctz(chk);
                chk &= chk - 1;
                if (md.d[u][v] != dist) return false;
            }
            seen |= nf;
            frontier = nf;
        }
        if (seen != s) return false;
    }
    return true;
}

// Convexity on masks: no outside vertex may sit on a geodesic between members.
inline bool mask_convex(const MaskGraph& mg, const MaskDist& md, u64 s) {
    u64 outside = mg.full & ~s;
    if (!outside) return true;
    u64 itu = s;
    while (itu) {
        int u = ctz(itu);
        itu &= itu - 1;
        u64 itv = itu;
        while (itv) {
            int v = ctz(itv);
            itv &= itv - 1;
            int duv = md.d[u][v];
            u64 itw = outside;
            while (itw) {
                int w = ctz(itw);
                itw &= itw - 1;
                if (md.d[u][w] + md.d[w][v] == duv) return false;
            }
        }
    }
    return true;
}

// Branch and bound feasibility: is there a dominating completion of size at
// most `budget` drawn from `allowed`? Branches over the allowed coverers of
// an undominated vertex with the fewest of them; coverers already tried are
// banned from the rest of the subtree so no set is explored twice.
inline bool can_dominate(const MaskGraph& mg, u64 dominated, int budget, u64 allowed,
                         std::uint64_t& explored, const Deadline& dl) {
    ++explored;
    if (dl.expired()) throw BudgetExceeded{};
    if (dominated == mg.full) return true;
    if (budget <= 0) return false;
    u64 undom = mg.full & ~dominated;
    if (std::uint64_t(budget) * std::uint64_t(mg.max_deg + 1) < std::uint64_t(pc(undom))) return false;
    int pick = -1, pick_cov = 65;
    u64 it = undom;
    while (it) {
        int v = ctz(it);
        it &= it - 1;
        int c = pc(mg.cn[v] & allowed);
        if (c < pick_cov) {
            pick_cov = c;
            pick = v;
            if (c <= 1) break;
        }
    }
    if (pick_cov == 0) return false;
    u64 covers = mg.cn[pick] & allowed;
    u64 remaining = allowed;
    while (covers) {
        int w = ctz(covers);
        covers &= covers - 1;
        remaining &= ~bit(w);
        if (can_dominate(mg, dominated | mg.cn[w], budget - 1, remaining, explored, dl)) return true;
    }
    return false;
}

inline int gamma_value_masks(const MaskGraph& mg, std::uint64_t& explored, const Deadline& dl,
                             int* proven_lb = nullptr) {
    int lb = (mg.n + mg.max_deg) / (mg.max_deg + 1);
    for (int t = lb; t <= mg.n; ++t) {
        if (proven_lb) *proven_lb = t;
        if (can_dominate(mg, 0, t, mg.full, explored, dl)) return t;
    }
    return mg.n;
}

// Lexicographically least dominating set of the known optimal size: grow the
// prefix greedily, testing each candidate with a feasibility search that is
// restricted to strictly larger vertex ids.
inline u64 lex_min_dominating(const MaskGraph& mg, int value, std::uint64_t& explored, const Deadline& dl) {
    u64 chosen = 0, dominated = 0;
    int last = -1;
    for (int slot = 0; slot < value; ++slot) {
        bool placed = false;
        for (int v = last + 1; v < mg.n; ++v) {
            u64 rest = (v >= 63) ? 0 : ((~u64{0} << (v + 1)) & mg.full);
            if (can_dominate(mg, dominated | mg.cn[v], value - slot - 1, rest, explored, dl)) {
                chosen |= bit(v);
                dominated |= mg.cn[v];
                last = v;
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("lex_min_dominating: no extension found");
    }
    return chosen;
}

// One level of the connected-set sweep: every connected induced set of size
// exactly k is generated once (smallest member as root, binary
// include/forbid extension), then filtered by domination and the variant
// predicate. Tracks the lexicographically least hit.
struct LevelScanner {
    const MaskGraph& mg;
    const MaskDist* md;
    GammaVariant variant;
    int k;
    Deadline dl;

    bool found = false;
    u64 best = 0;
    std::uint64_t explored = 0;

    void run_root(int r) {
        if (k == 1) {
            ++explored;
            consider(bit(r), mg.cn[r]);
            return;
        }
        u64 avail = (r >= 63) ? 0 : ((~u64{0} << (r + 1)) & mg.full);
        rec(bit(r), mg.adj[r] & avail, avail, mg.cn[r], 1);
    }

    void rec(u64 s, u64 cand, u64 avail, u64 dom, int size) {
        ++explored;
        if (dl.expired()) throw BudgetExceeded{};
        if (size == k) {
            consider(s, dom);
            return;
        }
        if (std::uint64_t(pc(dom)) + std::uint64_t(k - size) * std::uint64_t(mg.max_deg + 1) < std::uint64_t(mg.n))
            return;
        if (!cand) return;
        if (size + pc(avail) < k) return;
        u64 reach = s | cand, frontier = cand;
        while (frontier) {
            u64 nf = 0, f = frontier;
            while (f) {
                int v = ctz(f);
                f &= f - 1;
                nf |= mg.adj[v];
            }
            nf &= avail & ~reach;
            reach |= nf;
            frontier = nf;
        }
        if (pc(reach) < k) return;
        int v = ctz(cand);
        u64 bv = bit(v);
        u64 avail2 = avail & ~bv;
        rec(s | bv, (cand & ~bv) | (mg.adj[v] & avail2), avail2, dom | mg.cn[v], size + 1);
        rec(s, cand & ~bv, avail2, dom, size);
    }

    void consider(u64 s, u64 dom) {
        if (dom != mg.full) return;
        if (variant == GammaVariant::weakly_convex && !mask_weakly_convex(mg, *md, s)) return;
        if (variant == GammaVariant::convex && !mask_convex(mg, *md, s)) return;
        if (!found || lex_less(s, best)) {
            found = true;
            best = s;
        }
    }
};

struct LevelResult {
    bool found = false;
    u64 best = 0;
    std::uint64_t explored = 0;
};

inline LevelResult scan_level(const MaskGraph& mg, const MaskDist* md, GammaVariant variant, int k,
                              const Deadline& dl, int threads) {
    if (threads <= 1) {
        LevelScanner sc{mg, md, variant, k, dl};
        for (int r = 0; r < mg.n; ++r) sc.run_root(r);
        return {sc.found, sc.best, sc.explored};
    }
    std::atomic<bool> abort{false};
    std::atomic<bool> budget_hit{false};
    std::vector<LevelResult> partial(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int tid = 0; tid < threads; ++tid) {
        pool.emplace_back([&, tid] {
            Deadline local = dl;
            local.abort = &abort;
            LevelScanner sc{mg, md, variant, k, local};
            try {
                for (int r = tid; r < mg.n; r += threads) sc.run_root(r);
            } catch (const BudgetExceeded&) {
                budget_hit.store(true);
                abort.store(true);
            }
            partial[tid] = {sc.found, sc.best, sc.explored};
        });
    }
    for (auto& t : pool) t.join();
    if (budget_hit.load()) throw BudgetExceeded{};
    LevelResult out;
    for (const auto& p : partial) {
        out.explored += p.explored;
        if (p.found && (!out.found || lex_less(p.best, out.best))) {
            out.found = true;
            out.best = p.best;
        }
    }
    return out;
}

}  // namespace detail

// Exact domination number by iterative-deepening branch and bound, with the
// lexicographically least gamma-set as witness.
inline GammaReport gamma(const Graph& g, const SolveOptions& opts = {}) {
    if (g.n == 0) throw std::invalid_argument("gamma: graph has no vertices");
    auto t0 = std::chrono::steady_clock::now();
    auto mg = detail::MaskGraph::from(g);
    auto dl = detail::Deadline::from(opts.budget);
    GammaReport rep;
    rep.variant = GammaVariant::plain;
    rep.witness = VertexSet(g.n);
    rep.upper_bound = g.n;
    std::uint64_t explored = 0;
    try {
        int value = detail::gamma_value_masks(mg, explored, dl, &rep.lower_bound);
        detail::u64 w = detail::lex_min_dominating(mg, value, explored, dl);
        rep.value = value;
        rep.lower_bound = rep.upper_bound = value;
        rep.witness = detail::mask_to_set(w, g.n);
    } catch (const detail::BudgetExceeded&) {
        rep.conclusive = false;
    }
    rep.explored = explored;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// Exact gamma for any variant. The three connected variants sweep connected
// induced sets by increasing cardinality, starting at the plain domination
// number; V itself answers the final level, so the sweep always terminates.
inline GammaReport gamma_variant(const Graph& g, GammaVariant variant, const SolveOptions& opts = {}) {
    if (variant == GammaVariant::plain) {
        auto rep = gamma(g, opts);
        return rep;
    }
    if (g.n == 0) throw std::invalid_argument("gamma_variant: graph has no vertices");
    if (!is_connected(g))
        throw std::invalid_argument("gamma_variant: the " + std::string(variant_name(variant)) + " variant requires a connected graph");
    auto t0 = std::chrono::steady_clock::now();
    auto mg = detail::MaskGraph::from(g);
    detail::MaskDist md;
    if (variant != GammaVariant::connected) md = detail::MaskDist::from(mg);
    auto dl = detail::Deadline::from(opts.budget);
    GammaReport rep;
    rep.variant = variant;
    rep.witness = VertexSet(g.n);
    rep.upper_bound = g.n;
    std::uint64_t explored = 0;
    try {
        int start = detail::gamma_value_masks(mg, explored, dl);
        for (int c = start; c <= g.n; ++c) {
            rep.lower_bound = c;
            if (c == g.n) {
                rep.value = g.n;
                rep.witness = VertexSet::full(g.n);
                break;
            }
            auto level = detail::scan_level(mg, variant == GammaVariant::connected ? nullptr : &md, variant, c, dl,
                                            std::max(1, opts.threads));
            explored += level.explored;
            if (level.found) {
                rep.value = c;
                rep.witness = detail::mask_to_set(level.best, g.n);
                break;
            }
        }
        rep.lower_bound = rep.upper_bound = rep.value;
    } catch (const detail::BudgetExceeded&) {
        rep.conclusive = false;
    }
    rep.explored = explored;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline constexpr int kMaxOracleOrder = 16;

// Independent oracle: sweep all subsets in cardinality-then-lexicographic
// order and test with the general-purpose predicates. Same contract as
// gamma_variant, deliberately none of the same machinery.
inline GammaReport oracle_gamma_variant(const Graph& g, GammaVariant variant) {
    if (g.n == 0) throw std::invalid_argument("oracle_gamma_variant: graph has no vertices");
    if (g.n > kMaxOracleOrder)
        throw std::invalid_argument("oracle_gamma_variant: n=" + std::to_string(g.n) + " exceeds the oracle cap " + std::to_string(kMaxOracleOrder));
    if (variant != GammaVariant::plain && !is_connected(g))
        throw std::invalid_argument("oracle_gamma_variant: the " + std::string(variant_name(variant)) + " variant requires a connected graph");
    auto t0 = std::chrono::steady_clock::now();
    DistanceMatrix dm;
    if (variant == GammaVariant::weakly_convex || variant == GammaVariant::convex) dm = all_pairs_distances(g);
    GammaReport rep;
    rep.variant = variant;
    std::uint64_t explored = 0;
    auto qualifies = [&](const VertexSet& s) {
        if (!is_dominating(g, s)) return false;
        switch (variant) {
            case GammaVariant::plain: return true;
            case GammaVariant::connected: return is_connected_set(g, s);
            case GammaVariant::weakly_convex: return is_weakly_convex(g, dm, s);
            case GammaVariant::convex: return is_convex(g, dm, s);
        }
        return false;
    };
    for (int c = 0; c <= g.n; ++c) {
        std::vector<int> comb(c);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            ++explored;
            VertexSet s = VertexSet::from_vector(g.n, comb);
            if (qualifies(s)) {
                rep.value = c;
                rep.witness = s;
                rep.lower_bound = rep.upper_bound = c;
                rep.explored = explored;
                rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                return rep;
            }
            int i = c - 1;
            while (i >= 0 && comb[i] == g.n - c + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < c; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    throw std::logic_error("oracle_gamma_variant: no dominating set found");  // V always dominates
}

// ---- Observation 2 and Proposition 3 machinery ----

class Obs2ConditionError : public std::invalid_argument {
public:
    Obs2ConditionError(int condition, const std::string& msg) : std::invalid_argument(msg), condition_(condition) {}
    int condition() const { return condition_; }

private:
    int condition_;
};

// Raised when the four listed conditions hold but the built set fails to be a
// connected dominating set of the stated size; only possible with an empty
// A2, where the matching edge between the two layers disappears.
class Obs2BoundaryError : public std::runtime_error {
public:
    explicit Obs2BoundaryError(const std::string& msg) : std::runtime_error(msg) {}
};

inline VertexSet build_connected_dom_from_partition(const Graph& g, const Permutation& p,
                                                    const VertexSet& a1, const VertexSet& a2,
                                                    const VertexSet& a3) {
    if (a1.universe() != g.n || a2.universe() != g.n || a3.universe() != g.n)
        throw std::invalid_argument("build_connected_dom_from_partition: sets must live on the base graph");
    if (p.n() != g.n) throw std::invalid_argument("build_connected_dom_from_partition: permutation size mismatch");
    if (a1.intersects(a2) || a1.intersects(a3) || a2.intersects(a3))
        throw std::invalid_argument("build_connected_dom_from_partition: parts are not disjoint");
    VertexSet a = a1 | a2 | a3;
    if (!is_dominating(g, a))
        throw Obs2ConditionError(0, "A = A1 ∪ A2 ∪ A3 is not a dominating set of G");
    VertexSet a12 = a1 | a2;
    VertexSet pa23 = p.apply(a2 | a3);
    if (!(VertexSet::full(g.n) - a3).is_subset_of(closed_neighborhood(g, a12)))
        throw Obs2ConditionError(1, "condition (1) failed: A1 ∪ A2 does not dominate V - A3");
    if (!is_connected_set(g, a12))
        throw Obs2ConditionError(2, "condition (2) failed: A1 ∪ A2 is not connected");
    if (!is_connected_set(g, pa23))
        throw Obs2ConditionError(3, "condition (3) failed: pi(A2 ∪ A3) is not connected");
    if (!(VertexSet::full(g.n) - p.apply(a1)).is_subset_of(closed_neighborhood(g, pa23)))
        throw Obs2ConditionError(4, "condition (4) failed: pi(A2 ∪ A3) does not dominate V - pi(A1)");

    PrismGraph pg = build_prism(g, p);
    VertexSet d = lift_set(pg, a12, pa23);
    int expected = a.size() + a2.size();
    if (d.size() != expected || !is_connected_dominating(pg.graph, d))
        throw Obs2BoundaryError("conditions (1)-(4) hold but the built set is not a connected dominating set of size |A|+|A2| (empty-A2 boundary case)");
    return d;
}

struct Prop3Certificate {
    VertexSet a1, a2;
    int v = -1;
};

namespace detail {

// Search over every gamma-set A of G, every split A = A1 ∪ A2 and every
// v ∈ A1 for the four conditions of the gamma(G)+1 characterization.
inline std::optional<Prop3Certificate> prop3_search(const Graph& g, const Permutation& p,
                                                    std::uint64_t* explored_out = nullptr) {
    if (g.n > kMaxOracleOrder)
        throw std::invalid_argument("prop3_search: n exceeds the oracle cap");
    auto mg = MaskGraph::from(g);
    Deadline dl;
    std::uint64_t explored = 0;
    int gv = gamma_value_masks(mg, explored, dl);
    std::vector<int> comb(gv);
    std::iota(comb.begin(), comb.end(), 0);
    std::optional<Prop3Certificate> found;
    while (!found) {
        u64 a = 0;
        for (int v : comb) a |= bit(v);
        if (cn_union(mg, a) == mg.full) {
            for (u64 a1 = a; a1; a1 = (a1 - 1) & a) {
                ++explored;
                u64 a2 = a & ~a1;
                if ((mg.full & ~a2 & ~cn_union(mg, a1)) != 0) continue;  // (1) A1 must dominate V - A2
                if (!mask_connected(mg, a1)) continue;                   // (2)
                u64 pa1 = perm_image_mask(p, a1);
                u64 cands = a1;
                while (cands) {
                    int v = ctz(cands);
                    cands &= cands - 1;
                    u64 pav = perm_image_mask(p, a2 | bit(v));
                    if ((mg.full & ~pa1 & ~cn_union(mg, pav)) != 0) continue;  // (3) pi(A2+v) must dominate V - pi(A1)
                    if (!mask_connected(mg, pav)) continue;                    // (4)
                    found = Prop3Certificate{mask_to_set(a1, g.n), mask_to_set(a2, g.n), v};
                    break;
                }
                if (found) break;
            }
        }
        if (found) break;
        int i = gv - 1;
        while (i >= 0 && comb[i] == g.n - gv + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < gv; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (explored_out) *explored_out = explored;
    return found;
}

}  // namespace detail

// Certificate for gamma_c(piG) = gamma(G) + 1, under the hypothesis stated
// with the characterization: G connected and gamma_con(G) != |V_G|.
inline std::optional<Prop3Certificate> min_connected_dominating_plus_one_certificate(const Graph& g,
                                                                                     const Permutation& p) {
    if (!is_connected(g))
        throw std::invalid_argument("min_connected_dominating_plus_one_certificate: G must be connected");
    auto con = gamma_variant(g, GammaVariant::convex);
    if (con.value == g.n)
        throw std::invalid_argument("min_connected_dominating_plus_one_certificate: hypothesis gamma_con(G) != |V_G| fails");
    return detail::prop3_search(g, p);
}

}  // namespace prismdom
