#include "pauvc/dp.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace pauvc {

std::vector<int> SetArena::expand(std::int32_t ref) const {
    std::vector<int> out;
    std::vector<std::int32_t> stack{ref};
    while (!stack.empty()) {
        std::int32_t r = stack.back();
        stack.pop_back();
        if (r == kEmpty) continue;
        const Node& nd = nodes_[r];
        if (nd.name >= 0) out.push_back(nd.name);
        else {
            stack.push_back(nd.l);
            stack.push_back(nd.r);
        }
    }
    return out;
}

std::uint64_t pack_beta(const std::uint8_t* values, std::uint32_t ne, int k) {
    std::uint64_t out = 0;
    int shift = 0;
    for (std::uint32_t m = 0; m < (1u << k); ++m) {
        if (m & ~ne) continue;
        out |= static_cast<std::uint64_t>(values[m] & 3u) << shift;
        shift += 2;
    }
    return out;
}

void unpack_beta(std::uint64_t beta, std::uint32_t ne, int k, std::uint8_t* values) {
    int shift = 0;
    for (std::uint32_t m = 0; m < (1u << k); ++m) {
        if (m & ~ne) {
            values[m] = 0;
            continue;
        }
        values[m] = static_cast<std::uint8_t>((beta >> shift) & 3u);
        shift += 2;
    }
}

int beta_at(std::uint64_t beta, std::uint32_t ne, int k, std::uint32_t subset) {
    int shift = 0;
    for (std::uint32_t m = 0; m < (1u << k); ++m) {
        if (m & ~ne) continue;
        if (m == subset) return static_cast<int>((beta >> shift) & 3u);
        shift += 2;
    }
    return 0;
}

namespace {

std::atomic<std::uint64_t> g_invariant_checks{0};

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Open-addressing accumulator: keeps the minimum-size candidate per packed
// characteristic. Digest 0 is impossible (the value at ne is always 1), so it
// doubles as the empty slot marker.
struct CharAcc {
    struct Cand {
        std::uint64_t beta;
        std::int64_t size;
        std::int32_t wl, wr;
    };
    std::vector<std::uint64_t> keys;
    std::vector<int> at;
    std::vector<Cand> cands;
    std::size_t mask = 0;

    void init(std::size_t expected) {
        std::size_t cap = 16;
        while (cap < expected * 2) cap <<= 1;
        keys.assign(cap, 0);
        at.assign(cap, -1);
        cands.clear();
        mask = cap - 1;
    }
    void add(std::uint64_t beta, std::int64_t size, std::int32_t wl, std::int32_t wr) {
        std::size_t h = mix64(beta) & mask;
        while (true) {
            if (keys[h] == 0) {
                keys[h] = beta;
                at[h] = static_cast<int>(cands.size());
                cands.push_back({beta, size, wl, wr});
                return;
            }
            if (keys[h] == beta) {
                Cand& c = cands[at[h]];
                if (size < c.size) c = {beta, size, wl, wr};
                return;
            }
            h = (h + 1) & mask;
        }
    }
};

std::vector<CharRow> finish_rows(CharAcc& acc, SetArena& arena) {
    std::sort(acc.cands.begin(), acc.cands.end(),
              [](const CharAcc::Cand& a, const CharAcc::Cand& b) { return a.beta < b.beta; });
    std::vector<CharRow> rows;
    rows.reserve(acc.cands.size());
    for (const auto& c : acc.cands)
        rows.push_back({c.beta, c.size, c.wr < 0 ? c.wl : arena.make_union(c.wl, c.wr)});
    return rows;
}

std::vector<std::uint32_t> subsets_of(std::uint32_t ne, int k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << k); ++m)
        if (!(m & ~ne)) out.push_back(m);
    return out;
}

}  // namespace

void check_table_invariants(const DpTable& t) {
    g_invariant_checks.fetch_add(1, std::memory_order_relaxed);
    if (t.ne >= t.mu.size() || t.mu[t.ne] != t.vertex_count)
        throw std::logic_error("table invariant violated: mu(ne) != |V|");
    if (t.chars.empty()) throw std::logic_error("table invariant violated: no characteristics");
    std::uint8_t vals[64];
    for (const auto& row : t.chars) {
        unpack_beta(row.beta, t.ne, t.k, vals);
        if (vals[t.ne] != 1) throw std::logic_error("table invariant violated: beta(ne) != 1");
        for (std::uint32_t m = 0; m < (1u << t.k); ++m) {
            if (m & ~t.ne) continue;
            if (vals[m] > 0 && t.mu[m] < 0)
                throw std::logic_error("table invariant violated: beta positive where mu absent");
        }
        if (row.size > t.vertex_count)
            throw std::logic_error("table invariant violated: witness larger than |V|");
    }
}

std::uint64_t table_invariant_check_count() { return g_invariant_checks.load(); }

DpTable leaf_table(int k, int label, int name_id, SetArena& arena) {
    if (label < 1 || label > k) throw std::invalid_argument("leaf label out of range");
    DpTable t;
    t.k = k;
    t.ne = 1u << (label - 1);
    t.vertex_count = 1;
    t.mu.assign(1u << k, -1);
    t.mu[0] = 0;
    t.mu[t.ne] = 1;
    std::uint8_t vals[64] = {0};
    // empty pre-assignment: the empty cover and {x} are each unique
    vals[0] = 1;
    vals[t.ne] = 1;
    std::uint64_t b0 = pack_beta(vals, t.ne, k);
    // pre-assignment {x}: only the full cover contains it
    vals[0] = 0;
    std::uint64_t b1 = pack_beta(vals, t.ne, k);
    std::int32_t leaf_ref = arena.make_leaf(name_id);
    if (b0 < b1) {
        t.chars.push_back({b0, 0, SetArena::kEmpty});
        t.chars.push_back({b1, 1, leaf_ref});
    } else {
        t.chars.push_back({b1, 1, leaf_ref});
        t.chars.push_back({b0, 0, SetArena::kEmpty});
    }
    return t;
}

DpTable combine_product(const DpTable& a, const DpTable& b,
                        const std::vector<std::pair<int, int>>& pairs, SetArena& arena) {
    if (a.k != b.k) throw std::invalid_argument("operand tables disagree on k");
    int k = a.k;
    DpTable t;
    t.k = k;
    t.ne = a.ne | b.ne;
    t.vertex_count = a.vertex_count + b.vertex_count;
    t.mu.assign(1u << k, -1);

    std::uint32_t row_mask[33] = {0};
    for (auto [i, j] : pairs) {
        if (i < 1 || i > k || j < 1 || j > k)
            throw std::invalid_argument("product pair label out of range");
        row_mask[i] |= 1u << (j - 1);
    }

    auto subs_a = subsets_of(a.ne, k);
    auto subs_b = subsets_of(b.ne, k);
    std::vector<std::uint32_t> bad_h(subs_a.size(), 0);
    for (std::size_t ia = 0; ia < subs_a.size(); ++ia) {
        std::uint32_t missing = a.ne & ~subs_a[ia];
        std::uint32_t bad = 0;
        for (int i = 1; i <= k; ++i)
            if (missing & (1u << (i - 1))) bad |= row_mask[i];
        bad_h[ia] = bad;
    }

    // valid pairs with finite cost, grouped by the full set they induce
    struct Pair {
        std::uint32_t jg, jh;
        std::int64_t cost;
    };
    std::vector<std::vector<Pair>> by_full(1u << k);
    for (std::size_t ia = 0; ia < subs_a.size(); ++ia) {
        std::uint32_t jg = subs_a[ia];
        if (a.mu[jg] < 0) continue;
        for (std::uint32_t jh : subs_b) {
            if (b.mu[jh] < 0) continue;
            if (bad_h[ia] & b.ne & ~jh) continue;
            std::uint32_t f = ((~a.ne | jg) & (~b.ne | jh)) & t.ne;
            std::int64_t cost = a.mu[jg] + b.mu[jh];
            if (t.mu[f] < 0 || cost < t.mu[f]) t.mu[f] = cost;
            by_full[f].push_back({jg, jh, cost});
        }
    }
    std::vector<std::uint32_t> live;  // full sets with a minimum attained
    for (std::uint32_t m = 0; m < (1u << k); ++m) {
        if (t.mu[m] < 0) continue;
        auto& lst = by_full[m];
        lst.erase(std::remove_if(lst.begin(), lst.end(),
                                 [&](const Pair& p) { return p.cost != t.mu[m]; }),
                  lst.end());
        live.push_back(m);
    }

    std::size_t stride = 1u << k;
    std::vector<std::uint8_t> ua(a.chars.size() * stride), ub(b.chars.size() * stride);
    for (std::size_t r = 0; r < a.chars.size(); ++r)
        unpack_beta(a.chars[r].beta, a.ne, k, ua.data() + r * stride);
    for (std::size_t r = 0; r < b.chars.size(); ++r)
        unpack_beta(b.chars[r].beta, b.ne, k, ub.data() + r * stride);

    CharAcc acc;
    acc.init(a.chars.size() * b.chars.size());
    std::uint8_t vals[64];
    for (std::size_t ra = 0; ra < a.chars.size(); ++ra) {
        const std::uint8_t* va = ua.data() + ra * stride;
        for (std::size_t rb = 0; rb < b.chars.size(); ++rb) {
            const std::uint8_t* vb = ub.data() + rb * stride;
            std::fill(vals, vals + stride, 0);
            for (std::uint32_t m : live) {
                int s = 0;
                for (const Pair& p : by_full[m]) {
                    s += va[p.jg] * vb[p.jh];
                    if (s >= 2) {
                        s = 2;
                        break;
                    }
                }
                vals[m] = static_cast<std::uint8_t>(s);
            }
            acc.add(pack_beta(vals, t.ne, k), a.chars[ra].size + b.chars[rb].size,
                    a.chars[ra].witness, b.chars[rb].witness);
        }
    }
    t.chars = finish_rows(acc, arena);
    return t;
}

DpTable apply_relabel(const DpTable& a, const std::vector<int>& map, SetArena& arena) {
    int k = a.k;
    if ((int)map.size() != k + 1) throw std::invalid_argument("relabel map must be total on [k]");
    for (int i = 1; i <= k; ++i)
        if (map[i] < 1 || map[i] > k) throw std::invalid_argument("relabel target out of range");
    DpTable t;
    t.k = k;
    t.vertex_count = a.vertex_count;
    t.ne = 0;
    for (int i = 1; i <= k; ++i)
        if (a.ne & (1u << (i - 1))) t.ne |= 1u << (map[i] - 1);
    t.mu.assign(1u << k, -1);

    // preimage(i') within the old nonempty labels
    std::uint32_t pre[33] = {0};
    for (int i = 1; i <= k; ++i)
        if (a.ne & (1u << (i - 1))) pre[map[i]] |= 1u << (i - 1);

    auto subs = subsets_of(a.ne, k);
    std::vector<std::uint32_t> image(subs.size());
    for (std::size_t s = 0; s < subs.size(); ++s) {
        std::uint32_t h = 0;
        for (int i = 1; i <= k; ++i)
            if ((t.ne & (1u << (i - 1))) && (pre[i] & ~subs[s]) == 0) h |= 1u << (i - 1);
        image[s] = h;
    }
    std::vector<std::vector<std::uint32_t>> sources(1u << k);
    for (std::size_t s = 0; s < subs.size(); ++s) {
        if (a.mu[subs[s]] < 0) continue;
        std::uint32_t h = image[s];
        if (t.mu[h] < 0 || a.mu[subs[s]] < t.mu[h]) t.mu[h] = a.mu[subs[s]];
        sources[h].push_back(subs[s]);
    }
    std::vector<std::uint32_t> live;
    for (std::uint32_t m = 0; m < (1u << k); ++m) {
        if (t.mu[m] < 0) continue;
        auto& lst = sources[m];
        lst.erase(std::remove_if(lst.begin(), lst.end(),
                                 [&](std::uint32_t j) { return a.mu[j] != t.mu[m]; }),
                  lst.end());
        live.push_back(m);
    }

    CharAcc acc;
    acc.init(a.chars.size());
    std::uint8_t old_vals[64], vals[64];
    for (const auto& row : a.chars) {
        unpack_beta(row.beta, a.ne, k, old_vals);
        std::fill(vals, vals + (1u << k), 0);
        for (std::uint32_t m : live) {
            int s = 0;
            for (std::uint32_t j : sources[m]) {
                s += old_vals[j];
                if (s >= 2) {
                    s = 2;
                    break;
                }
            }
            vals[m] = static_cast<std::uint8_t>(s);
        }
        acc.add(pack_beta(vals, t.ne, k), row.size, row.witness, -1);
    }
    t.chars = finish_rows(acc, arena);
    return t;
}

DpTable apply_join(const DpTable& a, int i, int j) {
    if (i == j) throw std::invalid_argument("join labels must differ");
    int k = a.k;
    if (i < 1 || i > k || j < 1 || j > k) throw std::invalid_argument("join label out of range");
    std::uint32_t bi = 1u << (i - 1), bj = 1u << (j - 1);
    if (!(a.ne & bi) || !(a.ne & bj)) return a;  // an empty class adds no edges

    DpTable t;
    t.k = k;
    t.ne = a.ne;
    t.vertex_count = a.vertex_count;
    t.mu = a.mu;
    for (std::uint32_t m = 0; m < (1u << k); ++m)
        if (!(m & (bi | bj))) t.mu[m] = -1;

    CharAcc acc;
    acc.init(a.chars.size());
    std::uint8_t vals[64];
    for (const auto& row : a.chars) {
        unpack_beta(row.beta, a.ne, k, vals);
        for (std::uint32_t m = 0; m < (1u << k); ++m) {
            if (m & ~a.ne) continue;
            if (!(m & (bi | bj))) vals[m] = 0;
        }
        acc.add(pack_beta(vals, t.ne, k), row.size, row.witness, -1);
    }
    SetArena unused;  // rows reuse child witnesses; no unions are created
    t.chars = finish_rows(acc, unused);
    return t;
}

ExtractResult extract_solution(const DpTable& root, const SetArena& arena,
                               const std::vector<std::string>& names) {
    std::int64_t best = -1;
    for (std::uint32_t m = 0; m < root.mu.size(); ++m)
        if (root.mu[m] >= 0 && (best < 0 || root.mu[m] < best)) best = root.mu[m];
    std::vector<std::uint32_t> gamma;
    for (std::uint32_t m = 0; m < root.mu.size(); ++m)
        if (root.mu[m] == best) gamma.push_back(m);

    std::uint8_t vals[64];
    std::int64_t best_size = -1;
    std::vector<const CharRow*> candidates;
    for (const auto& row : root.chars) {
        unpack_beta(row.beta, root.ne, root.k, vals);
        int s = 0;
        for (std::uint32_t m : gamma) {
            s += vals[m];
            if (s >= 2) break;
        }
        if (s != 1) continue;
        if (best_size < 0 || row.size < best_size) {
            best_size = row.size;
            candidates.assign(1, &row);
        } else if (row.size == best_size) {
            candidates.push_back(&row);
        }
    }
    if (candidates.empty())
        throw std::logic_error("no valid characteristic at root; table corrupt");

    auto reconstruct = [&](const CharRow* row) {
        std::vector<int> ids = arena.expand(row->witness);
        std::sort(ids.begin(), ids.end(),
                  [&](int x, int y) { return name_less(names[x], names[y]); });
        return ids;
    };
    std::vector<int> best_ids = reconstruct(candidates[0]);
    const CharRow* best_row = candidates[0];
    for (std::size_t c = 1; c < candidates.size(); ++c) {
        std::vector<int> ids = reconstruct(candidates[c]);
        bool smaller = std::lexicographical_compare(
            ids.begin(), ids.end(), best_ids.begin(), best_ids.end(),
            [&](int x, int y) { return name_less(names[x], names[y]); });
        if (smaller) {
            best_ids = std::move(ids);
            best_row = candidates[c];
        }
    }
    return {std::move(best_ids), best, best_row->beta};
}

namespace {

// Normalized bottom-up operation sequence shared by both algebras.
struct Step {
    enum Op { Leaf, Product, Relabel, Join } op;
    int node_id;
    int label = 0, name = -1;
    int a = 0, b = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> map;
    int child0 = -1, child1 = -1;  // step indices
};

std::vector<Step> linearize(const CwExpr& e) {
    std::vector<Step> steps;
    steps.reserve(e.nodes.size());
    std::vector<int> step_of(e.nodes.size(), -1);
    std::vector<std::pair<int, bool>> stack{{e.root, false}};
    while (!stack.empty()) {
        auto [node, expanded] = stack.back();
        stack.pop_back();
        const auto& nd = e.nodes[node];
        if (!expanded) {
            stack.push_back({node, true});
            if (nd.child0 >= 0) stack.push_back({nd.child0, false});
            if (nd.child1 >= 0) stack.push_back({nd.child1, false});
            continue;
        }
        Step s;
        s.node_id = node;
        switch (nd.kind) {
            case CwExpr::Kind::Leaf:
                s.op = Step::Leaf;
                s.label = nd.a;
                s.name = nd.name;
                break;
            case CwExpr::Kind::Union:
                s.op = Step::Product;  // disjoint union = product with empty M
                s.child0 = step_of[nd.child0];
                s.child1 = step_of[nd.child1];
                break;
            case CwExpr::Kind::Join:
                s.op = Step::Join;
                s.a = nd.a;
                s.b = nd.b;
                s.child0 = step_of[nd.child0];
                break;
            case CwExpr::Kind::Relabel:
                s.op = Step::Relabel;
                s.map.resize(e.k + 1);
                for (int i = 0; i <= e.k; ++i) s.map[i] = i;
                s.map[nd.a] = nd.b;
                s.child0 = step_of[nd.child0];
                break;
        }
        step_of[node] = static_cast<int>(steps.size());
        steps.push_back(std::move(s));
    }
    return steps;
}

std::vector<Step> linearize(const NlcExpr& e) {
    std::vector<Step> steps;
    steps.reserve(e.nodes.size());
    std::vector<int> step_of(e.nodes.size(), -1);
    std::vector<std::pair<int, bool>> stack{{e.root, false}};
    while (!stack.empty()) {
        auto [node, expanded] = stack.back();
        stack.pop_back();
        const auto& nd = e.nodes[node];
        if (!expanded) {
            stack.push_back({node, true});
            if (nd.child0 >= 0) stack.push_back({nd.child0, false});
            if (nd.child1 >= 0) stack.push_back({nd.child1, false});
            continue;
        }
        Step s;
        s.node_id = node;
        switch (nd.kind) {
            case NlcExpr::Kind::Leaf:
                s.op = Step::Leaf;
                s.label = nd.label;
                s.name = nd.name;
                break;
            case NlcExpr::Kind::Product:
                s.op = Step::Product;
                s.pairs = nd.pairs;
                s.child0 = step_of[nd.child0];
                s.child1 = step_of[nd.child1];
                break;
            case NlcExpr::Kind::Relabel:
                s.op = Step::Relabel;
                s.map = nd.map;
                s.child0 = step_of[nd.child0];
                break;
        }
        step_of[node] = static_cast<int>(steps.size());
        steps.push_back(std::move(s));
    }
    return steps;
}

void check_k_budget(int k, const DpOptions& options) {
    if (k > 5)
        throw ResourceError("expression uses k=" + std::to_string(k) +
                            " labels; the solver supports at most 5");
    if (k > options.max_k)
        throw ResourceError("expression uses k=" + std::to_string(k) +
                            " labels, above the configured budget max_k=" +
                            std::to_string(options.max_k));
}

DpTable run_tables(const std::vector<Step>& steps, int k, SetArena& arena,
                   const DpOptions& options) {
    std::vector<DpTable> slot(steps.size());
    static const std::vector<std::pair<int, int>> no_pairs;
    for (std::size_t s = 0; s < steps.size(); ++s) {
        const Step& st = steps[s];
        DpTable t;
        switch (st.op) {
            case Step::Leaf:
                t = leaf_table(k, st.label, st.name, arena);
                break;
            case Step::Product:
                t = combine_product(slot[st.child0], slot[st.child1],
                                    st.pairs.empty() ? no_pairs : st.pairs, arena);
                slot[st.child0] = DpTable{};
                slot[st.child1] = DpTable{};
                break;
            case Step::Relabel:
                t = apply_relabel(slot[st.child0], st.map, arena);
                slot[st.child0] = DpTable{};
                break;
            case Step::Join:
                t = apply_join(slot[st.child0], st.a, st.b);
                slot[st.child0] = DpTable{};
                break;
        }
        check_table_invariants(t);
        if (options.observer) options.observer(st.node_id, t);
        slot[s] = std::move(t);
    }
    return std::move(slot.back());
}

// Second pass: minimum cover sizes (and one witness) with a set of leaves
// forced into the cover. Used to materialize the unique cover containing the
// chosen pre-assignment without re-running an exact solver.
struct MuTable {
    std::uint32_t ne = 0;
    std::vector<std::int64_t> mu;
    std::vector<std::int32_t> wit;
};

MuTable forced_leaf(int k, int label, int name_id, bool forced, SetArena& arena) {
    MuTable t;
    t.ne = 1u << (label - 1);
    t.mu.assign(1u << k, -1);
    t.wit.assign(1u << k, SetArena::kEmpty);
    if (!forced) t.mu[0] = 0;
    t.mu[t.ne] = 1;
    t.wit[t.ne] = arena.make_leaf(name_id);
    return t;
}

std::pair<std::int64_t, std::int32_t> run_forced_cover(const std::vector<Step>& steps, int k,
                                                       const std::vector<char>& forced,
                                                       SetArena& arena) {
    std::vector<MuTable> slot(steps.size());
    for (std::size_t s = 0; s < steps.size(); ++s) {
        const Step& st = steps[s];
        MuTable t;
        switch (st.op) {
            case Step::Leaf:
                t = forced_leaf(k, st.label, st.name, forced[st.name], arena);
                break;
            case Step::Product: {
                MuTable& a = slot[st.child0];
                MuTable& b = slot[st.child1];
                t.ne = a.ne | b.ne;
                t.mu.assign(1u << k, -1);
                t.wit.assign(1u << k, SetArena::kEmpty);
                std::uint32_t row_mask[33] = {0};
                for (auto [i, j] : st.pairs) row_mask[i] |= 1u << (j - 1);
                for (std::uint32_t jg = 0; jg < (1u << k); ++jg) {
                    if ((jg & ~a.ne) || a.mu[jg] < 0) continue;
                    std::uint32_t missing = a.ne & ~jg, bad = 0;
                    for (int i = 1; i <= k; ++i)
                        if (missing & (1u << (i - 1))) bad |= row_mask[i];
                    for (std::uint32_t jh = 0; jh < (1u << k); ++jh) {
                        if ((jh & ~b.ne) || b.mu[jh] < 0) continue;
                        if (bad & b.ne & ~jh) continue;
                        std::uint32_t f = ((~a.ne | jg) & (~b.ne | jh)) & t.ne;
                        std::int64_t cost = a.mu[jg] + b.mu[jh];
                        if (t.mu[f] < 0 || cost < t.mu[f]) {
                            t.mu[f] = cost;
                            t.wit[f] = arena.make_union(a.wit[jg], b.wit[jh]);
                        }
                    }
                }
                slot[st.child0] = MuTable{};
                slot[st.child1] = MuTable{};
                break;
            }
            case Step::Relabel: {
                MuTable& a = slot[st.child0];
                t.mu.assign(1u << k, -1);
                t.wit.assign(1u << k, SetArena::kEmpty);
                t.ne = 0;
                std::uint32_t pre[33] = {0};
                for (int i = 1; i <= k; ++i)
                    if (a.ne & (1u << (i - 1))) {
                        t.ne |= 1u << (st.map[i] - 1);
                        pre[st.map[i]] |= 1u << (i - 1);
                    }
                for (std::uint32_t j = 0; j < (1u << k); ++j) {
                    if ((j & ~a.ne) || a.mu[j] < 0) continue;
                    std::uint32_t h = 0;
                    for (int i = 1; i <= k; ++i)
                        if ((t.ne & (1u << (i - 1))) && (pre[i] & ~j) == 0) h |= 1u << (i - 1);
                    if (t.mu[h] < 0 || a.mu[j] < t.mu[h]) {
                        t.mu[h] = a.mu[j];
                        t.wit[h] = a.wit[j];
                    }
                }
                slot[st.child0] = MuTable{};
                break;
            }
            case Step::Join: {
                t = std::move(slot[st.child0]);
                std::uint32_t bi = 1u << (st.a - 1), bj = 1u << (st.b - 1);
                if ((t.ne & bi) && (t.ne & bj))
                    for (std::uint32_t m = 0; m < (1u << k); ++m)
                        if (!(m & (bi | bj))) t.mu[m] = -1;
                slot[st.child0] = MuTable{};
                break;
            }
        }
        slot[s] = std::move(t);
    }
    MuTable& root = slot.back();
    std::int64_t best = -1;
    std::int32_t wit = SetArena::kEmpty;
    for (std::uint32_t m = 0; m < (1u << k); ++m)
        if (root.mu[m] >= 0 && (best < 0 || root.mu[m] < best)) {
            best = root.mu[m];
            wit = root.wit[m];
        }
    return {best, wit};
}

template <typename ExprT>
PreassignmentSolution solve_steps(const ExprT& expr, Method method, const DpOptions& options) {
    check_k_budget(expr.k, options);
    std::vector<Step> steps = linearize(expr);
    SetArena arena;
    DpTable root = run_tables(steps, expr.k, arena, options);
    ExtractResult ex = extract_solution(root, arena, expr.names);

    std::vector<char> forced(expr.names.size(), 0);
    for (int id : ex.preassign) forced[id] = 1;
    SetArena cover_arena;
    auto [cover_size, cover_ref] = run_forced_cover(steps, expr.k, forced, cover_arena);
    if (cover_size != ex.min_vc_size)
        throw std::logic_error("cover back-trace disagrees with extracted optimum");
    std::vector<int> cover_ids = cover_arena.expand(cover_ref);

    PreassignmentSolution sol;
    sol.method = method;
    sol.min_vc_size = ex.min_vc_size;
    sol.preassign_size = static_cast<std::int64_t>(ex.preassign.size());
    for (int id : ex.preassign) sol.preassign.push_back(expr.names[id]);
    for (int id : cover_ids) sol.unique_cover.push_back(expr.names[id]);
    std::sort(sol.preassign.begin(), sol.preassign.end(), name_less);
    std::sort(sol.unique_cover.begin(), sol.unique_cover.end(), name_less);
    return sol;
}

}  // namespace

PreassignmentSolution solve_cw(const CwExpr& e, const DpOptions& options) {
    return solve_steps(e, Method::FptCw, options);
}

PreassignmentSolution solve_nlc(const NlcExpr& e, const DpOptions& options) {
    return solve_steps(e, Method::FptNlc, options);
}

}  // namespace pauvc
