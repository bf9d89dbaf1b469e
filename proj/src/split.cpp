#include "pauvc/split.hpp"

#include <algorithm>
#include <numeric>

namespace pauvc {

namespace {

constexpr long long kWitnessWorkCap = 60'000'000;

// Two disjoint edges with no connection between them.
bool find_2k2(const Graph& g, SplitWitness& w) {
    long long work = 0;
    std::vector<char> mark(g.vertex_count(), 0);
    for (auto [a, b] : g.edges()) {
        std::fill(mark.begin(), mark.end(), 0);
        mark[a] = mark[b] = 1;
        for (int x : g.neighbors(a)) mark[x] = 1;
        for (int x : g.neighbors(b)) mark[x] = 1;
        for (auto [c, d] : g.edges()) {
            ++work;
            if (!mark[c] && !mark[d]) {
                w.kind = SplitWitness::Kind::TwoK2;
                w.vertices = {g.name(a), g.name(b), g.name(c), g.name(d)};
                return true;
            }
        }
        work += g.degree(a) + g.degree(b);
        if (work > kWitnessWorkCap) return false;
    }
    return false;
}

bool find_induced_c4(const Graph& g, SplitWitness& w) {
    long long work = 0;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            // two non-adjacent common neighbors close a C4
            std::vector<int> common;
            auto nu = g.neighbors(u), nv = g.neighbors(v);
            std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                                  std::back_inserter(common));
            work += nu.size() + nv.size();
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j) {
                    ++work;
                    if (!g.has_edge(common[i], common[j])) {
                        w.kind = SplitWitness::Kind::C4;
                        w.vertices = {g.name(u), g.name(common[i]), g.name(v),
                                      g.name(common[j])};
                        return true;
                    }
                }
            if (work > kWitnessWorkCap) return false;
        }
    }
    return false;
}

bool find_induced_c5(const Graph& g, SplitWitness& w) {
    long long work = 0;
    int n = g.vertex_count();
    // a-b-c-d-e with exactly the five cycle edges present
    for (int a = 0; a < n && work < kWitnessWorkCap; ++a) {
        for (int b : g.neighbors(a)) {
            for (int c : g.neighbors(b)) {
                if (c == a || g.has_edge(a, c)) continue;
                for (int d : g.neighbors(c)) {
                    if (d == a || d == b || g.has_edge(a, d) || g.has_edge(b, d)) continue;
                    for (int e : g.neighbors(d)) {
                        ++work;
                        if (e == a || e == b || e == c) continue;
                        if (g.has_edge(a, e) && !g.has_edge(b, e) && !g.has_edge(c, e)) {
                            w.kind = SplitWitness::Kind::C5;
                            w.vertices = {g.name(a), g.name(b), g.name(c), g.name(d), g.name(e)};
                            return true;
                        }
                    }
                    work += g.degree(d);
                    if (work > kWitnessWorkCap) return false;
                }
            }
        }
    }
    return false;
}

}  // namespace

std::optional<SplitPartition> recognize_split(const Graph& g, SplitWitness* witness) {
    int n = g.vertex_count();
    std::vector<int> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return g.canonical_rank(a) < g.canonical_rank(b);
    });
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(by_degree[i]) >= i) m = i + 1;

    std::int64_t top = 0, rest = 0;
    for (int i = 0; i < n; ++i) {
        if (i < m) top += g.degree(by_degree[i]);
        else rest += g.degree(by_degree[i]);
    }
    if (top == static_cast<std::int64_t>(m) * (m - 1) + rest) {
        SplitPartition part;
        part.clique.assign(by_degree.begin(), by_degree.begin() + m);
        part.independent.assign(by_degree.begin() + m, by_degree.end());
        auto canon = [&](int a, int b) { return g.canonical_rank(a) < g.canonical_rank(b); };
        std::sort(part.clique.begin(), part.clique.end(), canon);
        std::sort(part.independent.begin(), part.independent.end(), canon);
        return part;
    }
    if (witness) {
        witness->kind = SplitWitness::Kind::None;
        witness->vertices.clear();
        if (!find_2k2(g, *witness) && !find_induced_c4(g, *witness)) find_induced_c5(g, *witness);
    }
    return std::nullopt;
}

SplitReduction reduce_split(const Graph& g, const SplitPartition& partition) {
    int n = g.vertex_count();
    std::vector<char> in_b(n, 0);
    for (int v : partition.independent) in_b[v] = 1;

    std::vector<char> removed(n, 0);
    std::vector<int> forced, isolated;
    for (int a : partition.clique) {
        int bn = 0;
        for (int w : g.neighbors(a))
            if (in_b[w] && ++bn >= 2) break;
        if (bn >= 2) {
            forced.push_back(a);
            removed[a] = 1;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (removed[v]) continue;
        bool alive = false;
        for (int w : g.neighbors(v))
            if (!removed[w]) {
                alive = true;
                break;
            }
        if (!alive) isolated.push_back(v);
    }
    std::vector<int> gone = forced;
    gone.insert(gone.end(), isolated.begin(), isolated.end());

    SplitReduction red;
    red.graph = remove_vertices(g, gone);
    for (int v : partition.clique)
        if (auto idx = red.graph.index_of(g.name(v))) red.partition.clique.push_back(*idx);
    for (int v : partition.independent)
        if (auto idx = red.graph.index_of(g.name(v))) red.partition.independent.push_back(*idx);
    red.forced = sorted_names(g, forced);
    red.isolated = sorted_names(g, isolated);
    return red;
}

PreassignmentSolution solve_split(const Graph& g) {
    auto part = recognize_split(g);
    if (!part) throw ClassError("graph is not a split graph");
    SplitReduction red = reduce_split(g, *part);
    const Graph& h = red.graph;

    PreassignmentSolution sol;
    sol.method = Method::Split;
    std::vector<std::string> cover = red.forced;
    std::int64_t min_vc = static_cast<std::int64_t>(red.forced.size());

    if (h.vertex_count() > 0) {
        if (red.partition.clique.empty())
            throw std::logic_error("reduced split graph has vertices but an empty clique side");
        std::vector<char> in_b(h.vertex_count(), 0);
        for (int v : red.partition.independent) in_b[v] = 1;

        std::vector<int> a0;
        for (int a : red.partition.clique) {
            int bn = 0;
            for (int w : h.neighbors(a))
                if (in_b[w]) ++bn;
            if (bn == 0) a0.push_back(a);
            else if (bn > 1)
                throw std::logic_error("reduction left a clique vertex with two independent neighbors");
        }
        auto canon_min = [&](const std::vector<int>& vs) {
            int best = vs[0];
            for (int v : vs)
                if (h.canonical_rank(v) < h.canonical_rank(best)) best = v;
            return best;
        };
        if (!a0.empty()) {
            int v = canon_min(a0);
            for (int a : a0)
                if (a != v) sol.preassign.push_back(h.name(a));
            for (int a : red.partition.clique)
                if (a != v) cover.push_back(h.name(a));
            min_vc += static_cast<std::int64_t>(red.partition.clique.size()) - 1;
        } else {
            int bstar = -1;
            for (int b : red.partition.independent) {
                if (bstar < 0 || h.degree(b) < h.degree(bstar) ||
                    (h.degree(b) == h.degree(bstar) &&
                     h.canonical_rank(b) < h.canonical_rank(bstar)))
                    bstar = b;
            }
            std::vector<int> nb(h.neighbors(bstar).begin(), h.neighbors(bstar).end());
            int v = canon_min(nb);
            for (int a : nb)
                if (a != v) sol.preassign.push_back(h.name(a));
            sol.preassign.push_back(h.name(bstar));
            for (int a : red.partition.clique)
                if (a != v) cover.push_back(h.name(a));
            cover.push_back(h.name(bstar));
            min_vc += static_cast<std::int64_t>(red.partition.clique.size());
        }
    }

    std::sort(sol.preassign.begin(), sol.preassign.end(), name_less);
    std::sort(cover.begin(), cover.end(), name_less);
    sol.unique_cover = std::move(cover);
    sol.preassign_size = static_cast<std::int64_t>(sol.preassign.size());
    sol.min_vc_size = min_vc;
    return sol;
}

}  // namespace pauvc
