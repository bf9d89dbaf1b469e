#pragma once

#include <random>
#include <set>

#include "pauvc/classify.hpp"
#include "pauvc/dp.hpp"
#include "pauvc/expr.hpp"
#include "pauvc/generators.hpp"
#include "pauvc/graph.hpp"
#include "pauvc/oracle.hpp"
#include "pauvc/split.hpp"
#include "pauvc/unit_interval.hpp"

namespace testutil {

using namespace pauvc;

inline Graph mk(int n, std::vector<std::pair<int, int>> edges) {
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = std::to_string(i + 1);
    return Graph::from_vertices_edges(std::move(names), std::move(edges));
}

inline Graph mk_named(std::vector<std::string> names, std::vector<std::pair<int, int>> edges) {
    return Graph::from_vertices_edges(std::move(names), std::move(edges));
}

// Plain subset scan over all vertex sets; the reference for everything else.
struct ExhaustiveVc {
    std::int64_t size = 0;
    std::vector<std::uint32_t> covers;  // all minimum covers as vertex masks
};

inline ExhaustiveVc exhaustive_min_vcs(const Graph& g) {
    int n = g.vertex_count();
    ExhaustiveVc out;
    out.size = n;
    std::uint32_t all = n == 0 ? 0 : (1u << n) - 1;
    for (std::uint32_t x = 0;; ++x) {
        bool cover = true;
        for (auto [u, v] : g.edges())
            if (!((x >> u) & 1) && !((x >> v) & 1)) {
                cover = false;
                break;
            }
        if (cover) {
            int sz = __builtin_popcount(x);
            if (sz < out.size) {
                out.size = sz;
                out.covers.clear();
            }
            if (sz == out.size) out.covers.push_back(x);
        }
        if (x == all) break;
    }
    return out;
}

inline int exhaustive_unique_count(const Graph& g, std::uint32_t smask, int cap = 2) {
    auto ex = exhaustive_min_vcs(g);
    int count = 0;
    for (std::uint32_t x : ex.covers)
        if ((x & smask) == smask && ++count >= cap) break;
    return count;
}

// Independent linear-time minimum vertex cover on forests (leaf-up take/skip).
inline std::int64_t forest_min_vc(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> parent(n, -2), order;
    std::vector<std::int64_t> take(n, 1), skip(n, 0);
    std::int64_t total = 0;
    for (int s = 0; s < n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        order.clear();
        order.push_back(s);
        for (std::size_t q = 0; q < order.size(); ++q)
            for (int w : g.neighbors(order[q]))
                if (w != parent[order[q]]) {
                    parent[w] = order[q];
                    order.push_back(w);
                }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int v = *it;
            take[v] = 1;
            skip[v] = 0;
            for (int w : g.neighbors(v))
                if (parent[w] == v) {
                    take[v] += std::min(take[w], skip[w]);
                    skip[v] += take[w];
                }
        }
        total += std::min(take[s], skip[s]);
    }
    return total;
}

// Quadratic reference for the unit-interval recurrence: sets are materialized
// straight from the definitions, with no incremental updates.
struct QuadUiResult {
    std::vector<std::vector<std::int64_t>> s;
    std::vector<std::vector<std::set<int>>> sets;
    std::int64_t answer = 0;
};

inline QuadUiResult quadratic_unit_interval(const IntervalRep& rep) {
    QuadUiResult out;
    int n = static_cast<int>(rep.intervals.size());
    if (n == 0) return out;
    auto meets = [&](int a, int b) {
        return Rat::within_unit(rep.intervals[a].left, rep.intervals[b].left);
    };
    // greedy representatives and groups, by definition
    std::vector<std::pair<int, int>> groups;
    int begin = 0;
    while (begin < n) {
        int end = begin + 1;
        while (end < n && meets(begin, end)) ++end;
        groups.push_back({begin, end});
        begin = end;
    }
    int m = static_cast<int>(groups.size());
    auto idx = [&](int level, int j) { return groups[level].first + j; };
    auto size_of = [&](int level) { return groups[level].second - groups[level].first; };

    out.s.resize(m);
    out.sets.resize(m);
    out.s[0].resize(size_of(0));
    out.sets[0].resize(size_of(0));
    for (int j = 0; j < size_of(0); ++j) {
        for (int t = 0; t < j; ++t) out.sets[0][j].insert(idx(0, t));
        out.s[0][j] = j;
    }
    for (int level = 1; level < m; ++level) {
        int sz = size_of(level), psz = size_of(level - 1);
        out.s[level].assign(sz, -1);
        out.sets[level].resize(sz);
        for (int j = 0; j < sz; ++j) {
            for (int a = 0; a < psz; ++a) {
                if (meets(idx(level - 1, a), idx(level, j))) continue;  // must be disjoint
                std::set<int> cand = out.sets[level - 1][a];
                for (int x = a + 1; x < psz; ++x)
                    if (!meets(idx(level - 1, x), idx(level, j))) cand.insert(idx(level - 1, x));
                for (int y = 0; y < j; ++y)
                    if (!meets(idx(level, y), idx(level - 1, a))) cand.insert(idx(level, y));
                if (out.s[level][j] < 0 || (std::int64_t)cand.size() < out.s[level][j]) {
                    out.s[level][j] = cand.size();
                    out.sets[level][j] = std::move(cand);
                }
            }
        }
    }
    out.answer = -1;
    for (int j = 0; j < size_of(m - 1); ++j) {
        std::int64_t v = out.s[m - 1][j] + (size_of(m - 1) - 1 - j);
        if (out.answer < 0 || v < out.answer) out.answer = v;
    }
    return out;
}

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return n ? rng() % n : 0; }

inline CwExpr random_cw_expr(std::mt19937_64& rng, int max_leaves, int k) {
    CwExpr e;
    e.k = k;
    int counter = 0;
    // builds a subtree using between 1 and `budget` leaves, returns node id
    auto build = [&](auto&& self, int budget) -> int {
        if (budget <= 1 || below(rng, 5) == 0) {
            CwExpr::Node nd{};
            nd.kind = CwExpr::Kind::Leaf;
            nd.a = 1 + static_cast<int>(below(rng, k));
            nd.name = counter;
            e.names.push_back("v" + std::to_string(++counter));
            e.nodes.push_back(nd);
            return static_cast<int>(e.nodes.size()) - 1;
        }
        switch (below(rng, 3)) {
            case 0: {  // union
                int lb = 1 + static_cast<int>(below(rng, budget - 1));
                int l = self(self, lb);
                int r = self(self, budget - lb);
                CwExpr::Node nd{};
                nd.kind = CwExpr::Kind::Union;
                nd.child0 = l;
                nd.child1 = r;
                e.nodes.push_back(nd);
                return static_cast<int>(e.nodes.size()) - 1;
            }
            case 1: {  // join
                int c = self(self, budget);
                int i = 1 + static_cast<int>(below(rng, k));
                int j = 1 + static_cast<int>(below(rng, k - 1));
                if (j >= i) ++j;
                CwExpr::Node nd{};
                nd.kind = CwExpr::Kind::Join;
                nd.a = i;
                nd.b = j;
                nd.child0 = c;
                e.nodes.push_back(nd);
                return static_cast<int>(e.nodes.size()) - 1;
            }
            default: {  // relabel
                int c = self(self, budget);
                CwExpr::Node nd{};
                nd.kind = CwExpr::Kind::Relabel;
                nd.a = 1 + static_cast<int>(below(rng, k));
                nd.b = 1 + static_cast<int>(below(rng, k));
                nd.child0 = c;
                e.nodes.push_back(nd);
                return static_cast<int>(e.nodes.size()) - 1;
            }
        }
    };
    e.root = build(build, std::max(1, max_leaves));
    return e;
}

inline NlcExpr random_nlc_expr(std::mt19937_64& rng, int max_leaves, int k) {
    NlcExpr e;
    e.k = k;
    int counter = 0;
    auto build = [&](auto&& self, int budget) -> int {
        if (budget <= 1 || below(rng, 5) == 0) {
            NlcExpr::Node nd{};
            nd.kind = NlcExpr::Kind::Leaf;
            nd.label = 1 + static_cast<int>(below(rng, k));
            nd.name = counter;
            e.names.push_back("v" + std::to_string(++counter));
            e.nodes.push_back(std::move(nd));
            return static_cast<int>(e.nodes.size()) - 1;
        }
        if (below(rng, 2) == 0) {
            int lb = 1 + static_cast<int>(below(rng, budget - 1));
            int l = self(self, lb);
            int r = self(self, budget - lb);
            NlcExpr::Node nd{};
            nd.kind = NlcExpr::Kind::Product;
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= k; ++j)
                    if (below(rng, 10) < 3) nd.pairs.push_back({i, j});
            nd.child0 = l;
            nd.child1 = r;
            e.nodes.push_back(std::move(nd));
            return static_cast<int>(e.nodes.size()) - 1;
        }
        int c = self(self, budget);
        NlcExpr::Node nd{};
        nd.kind = NlcExpr::Kind::Relabel;
        nd.map.resize(k + 1);
        nd.map[0] = 0;
        for (int i = 1; i <= k; ++i) nd.map[i] = 1 + static_cast<int>(below(rng, k));
        nd.child0 = c;
        e.nodes.push_back(std::move(nd));
        return static_cast<int>(e.nodes.size()) - 1;
    };
    e.root = build(build, std::max(1, max_leaves));
    return e;
}

// All simple graphs on n labeled vertices, one per edge mask.
inline std::vector<std::pair<int, int>> pair_list(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    return pairs;
}

inline Graph graph_from_mask(int n, std::uint32_t mask) {
    auto pairs = pair_list(n);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
        if ((mask >> b) & 1) edges.push_back(pairs[b]);
    return mk(n, std::move(edges));
}

inline bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

// One label per vertex, unions, then one join per edge: a k=n expression for
// any small graph, used to drive the expression solver outside forests.
inline CwExpr trivial_cw_expr(const Graph& g) {
    CwExpr e;
    e.k = std::max(1, g.vertex_count());
    e.names = g.names();
    int prev = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        CwExpr::Node leaf{};
        leaf.kind = CwExpr::Kind::Leaf;
        leaf.a = v + 1;
        leaf.name = v;
        e.nodes.push_back(leaf);
        int id = static_cast<int>(e.nodes.size()) - 1;
        if (prev >= 0) {
            CwExpr::Node un{};
            un.kind = CwExpr::Kind::Union;
            un.child0 = prev;
            un.child1 = id;
            e.nodes.push_back(un);
            id = static_cast<int>(e.nodes.size()) - 1;
        }
        prev = id;
    }
    for (auto [u, v] : g.edges()) {
        CwExpr::Node jn{};
        jn.kind = CwExpr::Kind::Join;
        jn.a = u + 1;
        jn.b = v + 1;
        jn.child0 = prev;
        e.nodes.push_back(jn);
        prev = static_cast<int>(e.nodes.size()) - 1;
    }
    e.root = prev;
    return e;
}

inline std::uint32_t mask_of(const Graph& g, const std::vector<std::string>& names) {
    std::uint32_t m = 0;
    for (const auto& name : names) m |= 1u << *g.index_of(name);
    return m;
}

}  // namespace testutil
