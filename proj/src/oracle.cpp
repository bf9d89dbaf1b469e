#include "pauvc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace pauvc {

std::vector<int> pauvc_bruteforce_indices(const Graph& g, const OracleBudget& budget) {
    int n = g.vertex_count();
    if (n > budget.max_vertices)
        throw ResourceError("oracle budget exceeded: " + std::to_string(n) + " vertices > budget " +
                            std::to_string(budget.max_vertices));
    ExactBudget exact{std::max<std::int64_t>(64, n)};
    const auto& order = g.canonical_order();

    std::vector<int> pick;
    for (int size = 0; size <= n; ++size) {
        // combinations over the canonical order, in lexicographic order
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        while (true) {
            pick.clear();
            for (int i : comb) pick.push_back(order[i]);
            if (verify_preassignment_indices(g, pick, exact).num_min_vcs_capped == 1) {
                std::sort(pick.begin(), pick.end(),
                          [&](int a, int b) { return g.canonical_rank(a) < g.canonical_rank(b); });
                return pick;
            }
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && comb[i] == n - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    throw std::logic_error("no pre-assignment found; exact counting is broken");
}

std::vector<std::string> pauvc_bruteforce(const Graph& g, const OracleBudget& budget) {
    return sorted_names(g, pauvc_bruteforce_indices(g, budget));
}

DpTable labeled_tables_oracle(const LabeledGraph& lg, const TableOracleBudget& budget) {
    int n = lg.graph.vertex_count();
    int k = lg.k;
    if (n > budget.max_vertices)
        throw ResourceError("table oracle budget exceeded: " + std::to_string(n) + " vertices");
    if (k > budget.max_k || k > 5)
        throw ResourceError("table oracle budget exceeded: k=" + std::to_string(k));

    std::uint32_t class_mask[33] = {0};
    for (int v = 0; v < n; ++v) class_mask[lg.labels[v]] |= 1u << v;
    std::uint32_t ne = 0;
    for (int i = 1; i <= k; ++i)
        if (class_mask[i]) ne |= 1u << (i - 1);

    DpTable t;
    t.k = k;
    t.ne = ne;
    t.vertex_count = n;
    t.mu.assign(1u << k, -1);

    const auto& edges = lg.graph.edges();
    std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;

    auto full_of = [&](std::uint32_t x) {
        std::uint32_t f = 0;
        for (int i = 1; i <= k; ++i)
            if (class_mask[i] && (class_mask[i] & ~x) == 0) f |= 1u << (i - 1);
        return f;
    };

    std::vector<std::uint32_t> fulls(all + 1ull);
    std::vector<char> covers(all + 1ull, 0);
    for (std::uint32_t x = 0;; ++x) {
        bool cover = true;
        for (auto [u, v] : edges)
            if (!((x >> u) & 1) && !((x >> v) & 1)) {
                cover = false;
                break;
            }
        covers[x] = cover;
        if (cover) {
            std::uint32_t f = full_of(x);
            fulls[x] = f;
            int sz = std::popcount(x);
            if (t.mu[f] < 0 || sz < t.mu[f]) t.mu[f] = sz;
        }
        if (x == all) break;
    }
    std::vector<std::vector<std::uint32_t>> min_covers(1u << k);
    for (std::uint32_t x = 0;; ++x) {
        if (covers[x] && std::popcount(x) == t.mu[fulls[x]]) min_covers[fulls[x]].push_back(x);
        if (x == all) break;
    }

    std::map<std::uint64_t, std::int64_t> best;
    std::uint8_t vals[64];
    for (std::uint32_t s = 0;; ++s) {
        std::fill(vals, vals + (1u << k), 0);
        for (std::uint32_t m = 0; m < (1u << k); ++m) {
            if (m & ~ne) continue;
            if (t.mu[m] < 0) continue;
            int count = 0;
            for (std::uint32_t x : min_covers[m]) {
                if ((x & s) == s) {
                    if (++count == 2) break;
                }
            }
            vals[m] = static_cast<std::uint8_t>(count);
        }
        std::uint64_t beta = pack_beta(vals, ne, k);
        int sz = std::popcount(s);
        auto it = best.find(beta);
        if (it == best.end() || sz < it->second) best[beta] = sz;
        if (s == all) break;
    }
    for (auto& [beta, size] : best) t.chars.push_back({beta, size, SetArena::kEmpty});
    return t;
}

bool tables_semantically_equal(const DpTable& a, const DpTable& b) {
    if (a.k != b.k || a.ne != b.ne || a.vertex_count != b.vertex_count) return false;
    if (a.mu != b.mu) return false;
    if (a.chars.size() != b.chars.size()) return false;
    for (std::size_t i = 0; i < a.chars.size(); ++i)
        if (a.chars[i].beta != b.chars[i].beta || a.chars[i].size != b.chars[i].size) return false;
    return true;
}

}  // namespace pauvc
