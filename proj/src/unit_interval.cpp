#include "pauvc/unit_interval.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace pauvc {

namespace {

std::vector<std::pair<int, std::string_view>> split_data_lines(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> out;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++lineno;
        size_t b = line.find_first_not_of(" \t\r");
        if (b != std::string_view::npos && line[b] != '#') out.push_back({lineno, line});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

}  // namespace

IntervalRep parse_intervals(std::string_view text) {
    IntervalRep rep;
    std::unordered_map<std::string, int> seen;
    for (auto [lineno, line] : split_data_lines(text)) {
        std::istringstream iss{std::string(line)};
        std::string name, left, extra;
        if (!(iss >> name >> left) || (iss >> extra))
            throw ParseError("parse error at line " + std::to_string(lineno) +
                             ": expected 'name left'");
        if (!seen.emplace(name, lineno).second)
            throw ParseError("parse error at line " + std::to_string(lineno) +
                             ": duplicate interval name '" + name + "'");
        try {
            rep.intervals.push_back({name, parse_rational(left)});
        } catch (const std::invalid_argument& e) {
            throw ParseError("parse error at line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    std::sort(rep.intervals.begin(), rep.intervals.end(), [](const Interval& a, const Interval& b) {
        if (a.left == b.left) return name_less(a.name, b.name);
        return a.left < b.left;
    });
    return rep;
}

std::string serialize_intervals(const IntervalRep& rep) {
    std::ostringstream out;
    for (const auto& iv : rep.intervals) out << iv.name << " " << iv.left.str() << "\n";
    return out.str();
}

Graph intervals_to_graph(const IntervalRep& rep) {
    int n = static_cast<int>(rep.intervals.size());
    std::vector<std::string> names;
    names.reserve(n);
    for (const auto& iv : rep.intervals) names.push_back(iv.name);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0, j = 0; i < n; ++i) {
        if (j < i + 1) j = i + 1;
        while (j < n && Rat::within_unit(rep.intervals[i].left, rep.intervals[j].left)) ++j;
        for (int t = i + 1; t < j; ++t) edges.push_back({i, t});
    }
    return Graph::from_vertices_edges(std::move(names), std::move(edges));
}

namespace {

// LexBFS with '+' tie-breaking: among lexicographically maximal vertices,
// pick the one latest in `prev`. Buckets are doubly linked lists kept in
// priority order; splitting moves marked vertices into a partner bucket
// placed in front, which preserves the order invariant.
std::vector<int> lexbfs_plus(const Graph& g, const std::vector<int>& prev) {
    int n = g.vertex_count();
    std::vector<int> prio(n);
    for (int i = 0; i < n; ++i) prio[prev[i]] = i;

    std::vector<std::vector<int>> adj_desc(n);
    for (int r = n - 1; r >= 0; --r) {
        int v = prev[r];
        for (int w : g.neighbors(v)) adj_desc[w].push_back(v);
    }

    struct Bucket {
        int head = -1, tail = -1;
        int next = -1, prev = -1;
        int partner = -1;
        int stamp = -1;
    };
    std::vector<Bucket> buckets;
    std::vector<int> vnext(n, -1), vprev(n, -1), bucket_of(n, 0);
    buckets.push_back({});
    int first_bucket = 0;
    {
        Bucket& b0 = buckets[0];
        int last = -1;
        for (int r = n - 1; r >= 0; --r) {
            int v = prev[r];
            if (last < 0) b0.head = v;
            else {
                vnext[last] = v;
                vprev[v] = last;
            }
            last = v;
        }
        b0.tail = last;
    }

    auto detach_vertex = [&](int v) {
        Bucket& b = buckets[bucket_of[v]];
        if (vprev[v] >= 0) vnext[vprev[v]] = vnext[v];
        else b.head = vnext[v];
        if (vnext[v] >= 0) vprev[vnext[v]] = vprev[v];
        else b.tail = vprev[v];
        vprev[v] = vnext[v] = -1;
    };
    auto drop_if_empty = [&](int bi) {
        Bucket& b = buckets[bi];
        if (b.head >= 0) return;
        if (b.prev >= 0) buckets[b.prev].next = b.next;
        else first_bucket = b.next;
        if (b.next >= 0) buckets[b.next].prev = b.prev;
    };

    std::vector<char> visited(n, 0);
    std::vector<int> out;
    out.reserve(n);
    for (int step = 0; step < n; ++step) {
        int bi = first_bucket;
        int p = buckets[bi].head;
        detach_vertex(p);
        drop_if_empty(bi);
        visited[p] = 1;
        out.push_back(p);
        for (int w : adj_desc[p]) {
            if (visited[w]) continue;
            int wb = bucket_of[w];
            if (buckets[wb].stamp != step) {
                buckets.push_back({});
                int nb = static_cast<int>(buckets.size()) - 1;
                Bucket& b = buckets[wb];
                b.stamp = step;
                b.partner = nb;
                buckets[nb].next = wb;
                buckets[nb].prev = b.prev;
                if (b.prev >= 0) buckets[b.prev].next = nb;
                else first_bucket = nb;
                b.prev = nb;
            }
            detach_vertex(w);
            int nb = buckets[wb].partner;
            Bucket& pb = buckets[nb];
            if (pb.tail < 0) pb.head = pb.tail = w;
            else {
                vnext[pb.tail] = w;
                vprev[w] = pb.tail;
                pb.tail = w;
            }
            bucket_of[w] = nb;
            drop_if_empty(wb);
        }
    }
    return out;
}

}  // namespace

std::optional<IntervalRep> recognize_unit_interval(const Graph& g, UiRejection* why) {
    int n = g.vertex_count();
    if (n == 0) return IntervalRep{};

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    order = lexbfs_plus(g, order);
    order = lexbfs_plus(g, order);
    order = lexbfs_plus(g, order);

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    // closed neighborhoods must be contiguous in the candidate order
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        int lo = i, hi = i;
        for (int w : g.neighbors(v)) {
            lo = std::min(lo, pos[w]);
            hi = std::max(hi, pos[w]);
        }
        if (hi - lo != g.degree(v)) {
            if (why) {
                why->reason = "neighborhood of '" + g.name(v) +
                              "' is not contiguous in the candidate ordering";
                std::vector<char> nb(n, 0);
                for (int w : g.neighbors(v)) nb[pos[w]] = 1;
                for (int t = lo; t <= hi; ++t)
                    if (t != i && !nb[t]) {
                        why->witness = {g.name(v), g.name(order[t])};
                        break;
                    }
            }
            return std::nullopt;
        }
    }

    // rightmost neighbor position; components are contiguous runs
    std::vector<int> rmax(n);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        int hi = i;
        for (int w : g.neighbors(v)) hi = std::max(hi, pos[w]);
        rmax[i] = hi;
    }
    const std::int64_t unit = n + 1;
    std::vector<std::int64_t> ticks(n, 0);
    int comp_begin = 0;
    std::int64_t base = 0;
    while (comp_begin < n) {
        int end = comp_begin;
        int reach = rmax[comp_begin];
        while (end < reach) {
            ++end;
            reach = std::max(reach, rmax[end]);
        }
        // difference constraints on ticks: consecutive gap >= 1,
        // x[rmax(t)] <= x[t] + unit, x[rmax(t)+1] >= x[t] + unit + 1
        int len = end - comp_begin + 1;
        std::vector<std::int64_t> x(len, 0);
        struct Edge {
            int from, to;
            std::int64_t w;
        };
        std::vector<std::vector<Edge>> cons(len);
        for (int t = 0; t < len; ++t) {
            int gt = comp_begin + t;
            if (t + 1 < len) cons[t].push_back({t, t + 1, 1});
            int r = rmax[gt] - comp_begin;
            if (r > t) {
                cons[r].push_back({r, t, -unit});
                if (r + 1 < len) cons[t].push_back({t, r + 1, unit + 1});
            }
        }
        std::deque<int> queue;
        std::vector<char> inq(len, 0);
        queue.push_back(0);
        inq[0] = 1;
        long long relaxations = 0, limit = 4LL * len * len + 64;
        bool feasible = true;
        while (!queue.empty()) {
            int t = queue.front();
            queue.pop_front();
            inq[t] = 0;
            for (const Edge& e : cons[t]) {
                if (x[e.from] + e.w > x[e.to]) {
                    x[e.to] = x[e.from] + e.w;
                    if (++relaxations > limit) {
                        feasible = false;
                        break;
                    }
                    if (!inq[e.to]) {
                        inq[e.to] = 1;
                        queue.push_back(e.to);
                    }
                }
            }
            if (!feasible) break;
        }
        // verify realized right extents against the graph
        if (feasible) {
            int j = 0;
            for (int t = 0; t < len && feasible; ++t) {
                if (j < t + 1) j = t + 1;
                while (j < len && x[j] - x[t] <= unit) ++j;
                if (j - 1 != rmax[comp_begin + t] - comp_begin) feasible = false;
            }
        }
        if (!feasible) {
            if (why) why->reason = "candidate ordering admits no unit realization";
            return std::nullopt;
        }
        for (int t = 0; t < len; ++t) ticks[comp_begin + t] = base + x[t];
        base += x[len - 1] + 2 * unit;
        comp_begin = end + 1;
    }

    IntervalRep rep;
    rep.intervals.reserve(n);
    for (int i = 0; i < n; ++i) rep.intervals.push_back({g.name(order[i]), Rat(ticks[i], unit)});
    return rep;
}

CliquePartition build_clique_partition(const IntervalRep& rep) {
    CliquePartition part;
    int n = static_cast<int>(rep.intervals.size());
    int begin = 0;
    while (begin < n) {
        int end = begin + 1;
        while (end < n && Rat::within_unit(rep.intervals[begin].left, rep.intervals[end].left))
            ++end;
        part.groups.push_back({begin, end});
        part.representatives.push_back(begin);
        begin = end;
    }
    part.m = static_cast<int>(part.groups.size());
    return part;
}

PreassignmentSolution solve_unit_interval(const IntervalRep& rep, UiStats* stats,
                                          std::vector<std::vector<std::int64_t>>* s_table) {
    PreassignmentSolution sol;
    sol.method = Method::UnitInterval;
    int n = static_cast<int>(rep.intervals.size());
    if (n == 0) return sol;
    UiStats local;
    UiStats& st = stats ? *stats : local;

    CliquePartition part = build_clique_partition(rep);
    int m = part.m;
    auto left_of = [&](int level, int j) {
        return rep.intervals[part.groups[level].first + j].left;
    };
    auto size_of = [&](int level) {
        return part.groups[level].second - part.groups[level].first;
    };

    // s[level][j]: size of the smallest set forcing, in the prefix graph ending
    // at interval (level, j), a unique minimum cover that excludes (level, j).
    std::vector<std::vector<std::int64_t>> s(m);
    std::vector<std::vector<int>> pred(m), kptr(m);
    s[0].resize(size_of(0));
    for (int j = 0; j < size_of(0); ++j) s[0][j] = j;

    for (int level = 1; level < m; ++level) {
        int sz = size_of(level), psz = size_of(level - 1);
        s[level].assign(sz, 0);
        pred[level].assign(sz, -1);
        kptr[level].assign(sz, 0);
        int k = 0;  // count of previous-level intervals disjoint from (level, j)
        for (int j = 0; j < sz; ++j) {
            while (k < psz && !Rat::within_unit(left_of(level - 1, k), left_of(level, j))) {
                ++k;
                ++st.ops;
            }
            kptr[level][j] = k;
            std::int64_t best = -1;
            int bestp = -1;
            if (j > 0) {
                // every predecessor valid for j-1 gains the same increment
                std::int64_t carry = s[level][j - 1] + (k - kptr[level][j - 1]) + 1;
                best = carry;
                bestp = pred[level][j - 1];
            }
            int from = j > 0 ? kptr[level][j - 1] : 0;
            for (int p = from; p < k; ++p) {
                ++st.ops;
                std::int64_t cand = s[level - 1][p] + (k - 1 - p);
                if (best < 0 || cand < best) {
                    best = cand;
                    bestp = p;
                }
            }
            s[level][j] = best;
            pred[level][j] = bestp;
            ++st.ops;
        }
    }

    if (s_table) *s_table = s;

    int last = m - 1, jstar = 0;
    std::int64_t answer = -1;
    for (int j = 0; j < size_of(last); ++j) {
        ++st.ops;
        std::int64_t v = s[last][j] + (size_of(last) - 1 - j);
        if (answer < 0 || v < answer) {
            answer = v;
            jstar = j;
        }
    }

    std::vector<int> chosen(m);
    chosen[last] = jstar;
    for (int level = last; level >= 1; --level) chosen[level - 1] = pred[level][chosen[level]];

    std::vector<int> picks;  // global interval indices of the pre-assignment
    for (int j = 0; j < chosen[0]; ++j) {
        picks.push_back(part.groups[0].first + j);
        ++st.ops;
    }
    for (int level = 0; level + 1 < m; ++level) {
        int a = chosen[level], b = chosen[level + 1];
        for (int xx = a + 1; xx < kptr[level + 1][b]; ++xx) {
            picks.push_back(part.groups[level].first + xx);
            ++st.ops;
        }
        for (int y = b - 1; y >= 0 && !Rat::within_unit(left_of(level, a), left_of(level + 1, y));
             --y) {
            picks.push_back(part.groups[level + 1].first + y);
            ++st.ops;
        }
    }
    for (int j = chosen[last] + 1; j < size_of(last); ++j) {
        picks.push_back(part.groups[last].first + j);
        ++st.ops;
    }
    if ((std::int64_t)picks.size() != answer)
        throw std::logic_error("reconstructed pre-assignment size disagrees with the table");

    std::vector<char> excluded(n, 0);
    for (int level = 0; level < m; ++level)
        excluded[part.groups[level].first + chosen[level]] = 1;

    sol.preassign.reserve(picks.size());
    for (int idx : picks) sol.preassign.push_back(rep.intervals[idx].name);
    for (int i = 0; i < n; ++i)
        if (!excluded[i]) sol.unique_cover.push_back(rep.intervals[i].name);
    std::sort(sol.preassign.begin(), sol.preassign.end(), name_less);
    std::sort(sol.unique_cover.begin(), sol.unique_cover.end(), name_less);
    sol.preassign_size = static_cast<std::int64_t>(sol.preassign.size());
    sol.min_vc_size = n - m;
    return sol;
}

}  // namespace pauvc
