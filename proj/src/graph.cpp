#include "pauvc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "pauvc/rational.hpp"

namespace pauvc {

Rat parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto parse_i64 = [](std::string_view s) -> std::int64_t {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size())
            throw std::invalid_argument("bad integer '" + std::string(s) + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        return Rat(parse_i64(text.substr(0, slash)), parse_i64(text.substr(slash + 1)));
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rat::integer(parse_i64(text));
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15)
        throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg) whole.remove_prefix(1);
    std::int64_t w = whole.empty() ? 0 : parse_i64(whole);
    std::int64_t f = parse_i64(frac);
    if (f < 0) throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    std::int64_t den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::int64_t num = w * den + f;
    return Rat(neg ? -num : num, den);
}

bool name_less(const std::string& a, const std::string& b) {
    auto all_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return s.size() <= 18;
    };
    if (all_digits(a) && all_digits(b)) {
        if (a.size() != b.size()) {
            // equal lengths compare by string below; strip leading zeros first
            auto sa = a.find_first_not_of('0'), sb = b.find_first_not_of('0');
            std::string_view va = sa == std::string::npos ? "" : std::string_view(a).substr(sa);
            std::string_view vb = sb == std::string::npos ? "" : std::string_view(b).substr(sb);
            if (va.size() != vb.size()) return va.size() < vb.size();
            if (va != vb) return va < vb;
            return a < b;
        }
        return a < b;
    }
    return a < b;
}

Graph Graph::from_vertices_edges(std::vector<std::string> names,
                                 std::vector<std::pair<int, int>> edges, bool dedupe_edges) {
    Graph g;
    g.names_ = std::move(names);
    int n = g.vertex_count();
    g.index_.reserve(n * 2);
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = g.index_.emplace(g.names_[i], i);
        (void)it;
        if (!fresh) throw std::invalid_argument("duplicate vertex name '" + g.names_[i] + "'");
    }
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop at vertex '" + g.names_[u] + "'");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (dedupe_edges) {
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    } else {
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end())
            throw std::invalid_argument("duplicate edge " + g.names_[dup->first] + "-" +
                                        g.names_[dup->second]);
    }
    g.edges_ = std::move(edges);

    g.adj_off_.assign(n + 1, 0);
    for (auto [u, v] : g.edges_) {
        ++g.adj_off_[u + 1];
        ++g.adj_off_[v + 1];
    }
    for (int i = 0; i < n; ++i) g.adj_off_[i + 1] += g.adj_off_[i];
    g.adj_.resize(g.edges_.size() * 2);
    std::vector<int> cursor(g.adj_off_.begin(), g.adj_off_.end() - 1);
    for (auto [u, v] : g.edges_) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (int i = 0; i < n; ++i)
        std::sort(g.adj_.begin() + g.adj_off_[i], g.adj_.begin() + g.adj_off_[i + 1]);

    g.canonical_.resize(n);
    for (int i = 0; i < n; ++i) g.canonical_[i] = i;
    std::sort(g.canonical_.begin(), g.canonical_.end(),
              [&](int a, int b) { return name_less(g.names_[a], g.names_[b]); });
    g.canonical_rank_.resize(n);
    for (int i = 0; i < n; ++i) g.canonical_rank_[g.canonical_[i]] = i;
    return g;
}

std::optional<int> Graph::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::span<const int> Graph::neighbors(int v) const {
    return {adj_.data() + adj_off_[v], adj_.data() + adj_off_[v + 1]};
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

struct Line {
    int number;
    std::string_view text;
};

std::vector<Line> data_lines(std::string_view text, char comment) {
    std::vector<Line> out;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                              : nl - pos);
        ++lineno;
        size_t b = line.find_first_not_of(" \t\r");
        if (b != std::string_view::npos && line[b] != comment)
            out.push_back({lineno, line});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw ParseError("parse error at line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> tokens_of(std::string_view line) {
    std::vector<std::string_view> toks;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

int parse_int_tok(std::string_view tok, int line, const std::string& what) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) parse_fail(line, "bad " + what);
    return v;
}

Graph build_numbered(int n, int m, const std::vector<std::pair<int, std::pair<int, int>>>& raw) {
    if (n < 0 || m < 0) throw ParseError("parse error: negative vertex or edge count");
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = std::to_string(i + 1);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw.size());
    // sort a copy tagged with line numbers so duplicate reports name the later line
    std::vector<std::pair<std::pair<int, int>, int>> tagged;
    tagged.reserve(raw.size());
    for (auto& [line, e] : raw) {
        auto [u, v] = e;
        if (u < 1 || u > n || v < 1 || v > n) parse_fail(line, "endpoint out of range 1.." + std::to_string(n));
        if (u == v) parse_fail(line, "self-loop at vertex " + std::to_string(u));
        int a = std::min(u, v) - 1, b = std::max(u, v) - 1;
        tagged.push_back({{a, b}, line});
    }
    std::sort(tagged.begin(), tagged.end());
    for (size_t i = 0; i + 1 < tagged.size(); ++i)
        if (tagged[i].first == tagged[i + 1].first)
            parse_fail(tagged[i + 1].second,
                       "duplicate edge " + std::to_string(tagged[i].first.first + 1) + " " +
                           std::to_string(tagged[i].first.second + 1));
    for (auto& [e, line] : tagged) {
        (void)line;
        edges.push_back(e);
    }
    return Graph::from_vertices_edges(std::move(names), std::move(edges));
}

}  // namespace

Graph parse_graph(std::string_view text) {
    // Detect format from the first significant character: '#' means native
    // comments, a digit means the native "n m" header, 'c'/'p' means DIMACS.
    size_t probe = text.find_first_not_of(" \t\r\n");
    bool dimacs = false;
    {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t nl = text.find('\n', pos);
            std::string_view line =
                text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            size_t b = line.find_first_not_of(" \t\r");
            if (b != std::string_view::npos) {
                char c = line[b];
                if (c == '#') {
                    // native comment; keep scanning for the first data line
                } else {
                    dimacs = (c == 'c' || c == 'p');
                    break;
                }
            }
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
    }
    (void)probe;

    if (!dimacs) {
        auto lines = data_lines(text, '#');
        if (lines.empty()) throw ParseError("parse error: no data lines");
        auto head = tokens_of(lines[0].text);
        if (head.size() != 2) parse_fail(lines[0].number, "expected header 'n m'");
        int n = parse_int_tok(head[0], lines[0].number, "vertex count");
        int m = parse_int_tok(head[1], lines[0].number, "edge count");
        if ((int)lines.size() - 1 != m)
            parse_fail(lines.back().number,
                       "expected " + std::to_string(m) + " edge lines, found " +
                           std::to_string(lines.size() - 1));
        std::vector<std::pair<int, std::pair<int, int>>> raw;
        for (size_t i = 1; i < lines.size(); ++i) {
            auto toks = tokens_of(lines[i].text);
            if (toks.size() != 2) parse_fail(lines[i].number, "expected 'u v'");
            raw.push_back({lines[i].number,
                           {parse_int_tok(toks[0], lines[i].number, "endpoint"),
                            parse_int_tok(toks[1], lines[i].number, "endpoint")}});
        }
        return build_numbered(n, m, raw);
    }

    auto lines = data_lines(text, 'c');
    size_t i = 0;
    int n = -1, m = -1;
    for (; i < lines.size(); ++i) {
        auto toks = tokens_of(lines[i].text);
        if (toks.empty()) continue;
        if (toks[0] == "p") {
            if (toks.size() != 4 || toks[1] != "edge")
                parse_fail(lines[i].number, "expected 'p edge n m'");
            n = parse_int_tok(toks[2], lines[i].number, "vertex count");
            m = parse_int_tok(toks[3], lines[i].number, "edge count");
            ++i;
            break;
        }
        parse_fail(lines[i].number, "expected problem line 'p edge n m'");
    }
    if (n < 0) throw ParseError("parse error: missing 'p edge' line");
    std::vector<std::pair<int, std::pair<int, int>>> raw;
    for (; i < lines.size(); ++i) {
        auto toks = tokens_of(lines[i].text);
        if (toks.size() != 3 || toks[0] != "e") parse_fail(lines[i].number, "expected 'e u v'");
        raw.push_back({lines[i].number,
                       {parse_int_tok(toks[1], lines[i].number, "endpoint"),
                        parse_int_tok(toks[2], lines[i].number, "endpoint")}});
    }
    if ((int)raw.size() != m)
        throw ParseError("parse error: expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(raw.size()));
    return build_numbered(n, m, raw);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    bool natural = true;
    for (int i = 0; i < g.vertex_count(); ++i)
        if (g.name(i) != std::to_string(i + 1)) {
            natural = false;
            break;
        }
    if (!natural)
        for (int i = 0; i < g.vertex_count(); ++i) out << "# " << (i + 1) << " = " << g.name(i) << "\n";
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

Graph remove_vertices(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> gone(g.vertex_count(), 0);
    for (int v : verts) gone[v] = 1;
    std::vector<std::string> names;
    std::vector<int> remap(g.vertex_count(), -1);
    for (int i = 0; i < g.vertex_count(); ++i)
        if (!gone[i]) {
            remap[i] = static_cast<int>(names.size());
            names.push_back(g.name(i));
        }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (!gone[u] && !gone[v]) edges.push_back({remap[u], remap[v]});
    return Graph::from_vertices_edges(std::move(names), std::move(edges));
}

bool is_forest(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> parent(n, -2);
    for (int s = 0; s < n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (w == parent[v]) continue;
                if (parent[w] != -2) return false;
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    return true;
}

bool is_vertex_cover_indices(const Graph& g, const std::vector<int>& s) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : s) in[v] = 1;
    for (auto [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

namespace {

std::vector<int> to_indices(const Graph& g, const std::vector<std::string>& s) {
    std::vector<int> out;
    out.reserve(s.size());
    for (const auto& name : s) {
        auto idx = g.index_of(name);
        if (!idx) throw std::invalid_argument("unknown vertex name '" + name + "'");
        out.push_back(*idx);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::invalid_argument("repeated vertex in set");
    return out;
}

void check_budget(const Graph& g, const ExactBudget& budget) {
    if (g.vertex_count() > budget.max_vertices)
        throw ResourceError("exact solve budget exceeded: " + std::to_string(g.vertex_count()) +
                            " vertices > budget " + std::to_string(budget.max_vertices));
}

// Shared branch-and-bound state. Vertices are tri-state: 0 undecided,
// 1 in cover, 2 excluded. Excluding a vertex immediately forces its
// undecided neighbors into the cover.
struct Search {
    const Graph& g;
    std::vector<std::int8_t> state;

    explicit Search(const Graph& gr) : g(gr), state(gr.vertex_count(), 0) {}

    bool edge_uncovered(int u, int v) const { return state[u] != 1 && state[v] != 1; }

    // Greedy matching over uncovered edges: each matched edge needs its own
    // cover vertex, so the matching size lower-bounds the remaining cost.
    std::int64_t lower_bound() const {
        std::vector<char> used(g.vertex_count(), 0);
        std::int64_t lb = 0;
        for (auto [u, v] : g.edges())
            if (edge_uncovered(u, v) && !used[u] && !used[v]) {
                used[u] = used[v] = 1;
                ++lb;
            }
        return lb;
    }
};

struct MinVcSearch : Search {
    std::int64_t best;
    explicit MinVcSearch(const Graph& gr) : Search(gr), best(gr.vertex_count()) {}

    void run(std::int64_t chosen) {
        if (chosen >= best) return;
        // degree-0 / degree-1 reductions on the uncovered subgraph
        std::vector<int> trail;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (state[v] != 0) continue;
                int deg = 0, last = -1;
                for (int w : g.neighbors(v))
                    if (state[w] == 0) {
                        ++deg;
                        last = w;
                        if (deg > 1) break;
                    } else if (state[w] == 2 && edge_uncovered(v, w)) {
                        deg = 2;  // v is forced by an excluded neighbor
                        break;
                    }
                if (deg == 0) {
                    bool forced = false;
                    for (int w : g.neighbors(v))
                        if (edge_uncovered(v, w)) forced = true;
                    if (forced) {
                        state[v] = 1;
                        trail.push_back(v);
                        ++chosen;
                    } else {
                        state[v] = 2;
                        trail.push_back(v);
                    }
                    changed = true;
                } else if (deg == 1) {
                    bool pending = false;
                    for (int w : g.neighbors(v))
                        if (state[w] == 2 && edge_uncovered(v, w)) pending = true;
                    if (!pending) {
                        state[last] = 1;  // taking the neighbor dominates taking v
                        trail.push_back(last);
                        ++chosen;
                        changed = true;
                    }
                }
            }
        }
        int pick = -1, pickdeg = -1;
        for (int i = 0; i < g.vertex_count(); ++i) {
            int v = g.canonical_order()[i];
            if (state[v] != 0) continue;
            int deg = 0;
            for (int w : g.neighbors(v))
                if (edge_uncovered(v, w) && state[w] != 1) ++deg;
            if (deg > pickdeg) {
                pickdeg = deg;
                pick = v;
            }
        }
        if (pick == -1 || pickdeg == 0) {
            bool covered = true;
            for (auto [u, v] : g.edges())
                if (edge_uncovered(u, v)) covered = false;
            if (covered) best = std::min(best, chosen);
        } else if (chosen + lower_bound() < best) {
            state[pick] = 1;
            run(chosen + 1);
            state[pick] = 2;
            std::vector<int> forced;
            std::int64_t extra = 0;
            bool ok = true;
            for (int w : g.neighbors(pick)) {
                if (state[w] == 1) continue;
                if (state[w] == 2) {
                    ok = false;
                    break;
                }
                state[w] = 1;
                forced.push_back(w);
                ++extra;
            }
            if (ok) run(chosen + extra);
            for (int w : forced) state[w] = 0;
            state[pick] = 0;
        }
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) state[*it] = 0;
    }
};

// Counts vertex covers of exactly `target` vertices, capped at `cap`.
struct ExactCountSearch : Search {
    std::int64_t target, cap, count = 0;
    std::vector<int> chosen;
    std::vector<int>* witness = nullptr;

    ExactCountSearch(const Graph& gr, std::int64_t t, std::int64_t c) : Search(gr), target(t), cap(c) {}

    std::int64_t undecided() const {
        std::int64_t u = 0;
        for (auto s : state)
            if (s == 0) ++u;
        return u;
    }

    void run(std::int64_t left) {
        if (count >= cap || left < 0 || left > undecided()) return;
        int eu = -1;
        for (auto [u, v] : g.edges())
            if (edge_uncovered(u, v) && state[u] == 0 && state[v] == 0) {
                eu = u;
                break;
            }
        // an edge with an excluded endpoint forces the other endpoint
        for (auto [u, v] : g.edges()) {
            if (!edge_uncovered(u, v)) continue;
            if (state[u] == 2 && state[v] == 2) return;
            if (state[u] == 2 && state[v] == 0) {
                state[v] = 1;
                chosen.push_back(v);
                run(left - 1);
                chosen.pop_back();
                state[v] = 0;
                return;
            }
            if (state[v] == 2 && state[u] == 0) {
                state[u] = 1;
                chosen.push_back(u);
                run(left - 1);
                chosen.pop_back();
                state[u] = 0;
                return;
            }
        }
        if (eu == -1) {
            // all edges covered; any `left` of the undecided vertices pad the cover
            std::int64_t free = undecided();
            std::int64_t ways;
            if (left > free) ways = 0;
            else if (left == 0 || left == free) ways = 1;
            else ways = 2;  // C(free,left) >= 2 in every other case
            if (ways > 0 && witness && count == 0) {
                *witness = chosen;
                std::int64_t need = left;
                for (int i = 0; i < g.vertex_count() && need > 0; ++i) {
                    int v = g.canonical_order()[i];
                    if (state[v] == 0) {
                        witness->push_back(v);
                        --need;
                    }
                }
            }
            count = std::min(cap, count + ways);
            return;
        }
        if (lower_bound() > left) return;
        state[eu] = 1;
        chosen.push_back(eu);
        run(left - 1);
        chosen.pop_back();
        state[eu] = 0;
        state[eu] = 2;
        run(left);
        state[eu] = 0;
    }
};

}  // namespace

bool is_vertex_cover(const Graph& g, const std::vector<std::string>& s) {
    return is_vertex_cover_indices(g, to_indices(g, s));
}

std::int64_t min_vc_size(const Graph& g, const ExactBudget& budget) {
    check_budget(g, budget);
    if (g.edge_count() == 0) return 0;
    MinVcSearch search(g);
    search.run(0);
    return search.best;
}

std::vector<std::vector<int>> enumerate_min_vcs_indices(const Graph& g, std::int64_t cap,
                                                        const ExactBudget& budget) {
    check_budget(g, budget);
    if (cap <= 0) return {};
    std::int64_t t = min_vc_size(g, budget);
    std::vector<std::vector<int>> out;
    int n = g.vertex_count();
    std::vector<std::int8_t> state(n, 0);  // by canonical position: 0 undecided, 1 in, 2 out
    std::vector<int> chosen;

    // include-first DFS over canonical positions emits covers in lexicographic
    // order of their sorted vertex sets (all covers have equal size t)
    auto uncoverable = [&](int v) {
        for (int w : g.neighbors(v))
            if (state[g.canonical_rank(w)] == 2) return true;
        return false;
    };
    std::vector<char> used(n);
    auto lb_rest = [&]() {
        std::fill(used.begin(), used.end(), 0);
        std::int64_t lb = 0;
        for (auto [u, v] : g.edges()) {
            int ru = g.canonical_rank(u), rv = g.canonical_rank(v);
            if (state[ru] == 1 || state[rv] == 1) continue;
            if (!used[ru] && !used[rv]) {
                used[ru] = used[rv] = 1;
                ++lb;
            }
        }
        return lb;
    };

    auto rec = [&](auto&& self, int pos) -> void {
        if ((std::int64_t)out.size() >= cap) return;
        if ((std::int64_t)chosen.size() > t || (std::int64_t)chosen.size() + lb_rest() > t) return;
        if (pos == n) {
            if ((std::int64_t)chosen.size() == t) out.push_back(chosen);
            return;
        }
        int v = g.canonical_order()[pos];
        state[pos] = 1;
        chosen.push_back(v);
        self(self, pos + 1);
        chosen.pop_back();
        state[pos] = 2;
        if (!uncoverable(v)) self(self, pos + 1);
        state[pos] = 0;
    };
    rec(rec, 0);
    for (auto& cover : out) {
        std::sort(cover.begin(), cover.end(),
                  [&](int a, int b) { return g.canonical_rank(a) < g.canonical_rank(b); });
    }
    return out;
}

std::vector<std::vector<std::string>> enumerate_min_vcs(const Graph& g, std::int64_t cap,
                                                        const ExactBudget& budget) {
    auto idx = enumerate_min_vcs_indices(g, cap, budget);
    std::vector<std::vector<std::string>> out;
    out.reserve(idx.size());
    for (auto& cover : idx) {
        std::vector<std::string> names;
        names.reserve(cover.size());
        for (int v : cover) names.push_back(g.name(v));
        out.push_back(std::move(names));
    }
    return out;
}

VcVerdict verify_preassignment_indices(const Graph& g, const std::vector<int>& s,
                                       const ExactBudget& budget) {
    check_budget(g, budget);
    for (int v : s)
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex index out of range");
    VcVerdict verdict;
    verdict.is_cover = is_vertex_cover_indices(g, s);
    std::int64_t t = min_vc_size(g, budget);
    verdict.min_vc_size = t;
    if ((std::int64_t)s.size() > t) {
        verdict.num_min_vcs_capped = 0;
        return verdict;
    }
    // Minimum covers of g containing s correspond to covers of g - s of size
    // exactly t - |s| (edges incident to s are already met).
    Graph rest = remove_vertices(g, s);
    ExactCountSearch counter(rest, t - (std::int64_t)s.size(), 2);
    std::vector<int> witness_rest;
    counter.witness = &witness_rest;
    counter.run(t - (std::int64_t)s.size());
    verdict.num_min_vcs_capped = static_cast<int>(counter.count);
    if (counter.count == 1) {
        std::vector<int> cover = s;
        for (int v : witness_rest) cover.push_back(*g.index_of(rest.name(v)));
        verdict.unique_cover = sorted_names(g, cover);
    }
    return verdict;
}

VcVerdict verify_preassignment(const Graph& g, const std::vector<std::string>& s,
                               const ExactBudget& budget) {
    return verify_preassignment_indices(g, to_indices(g, s), budget);
}

std::vector<std::string> sorted_names(const Graph& g, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end(),
              [&](int a, int b) { return g.canonical_rank(a) < g.canonical_rank(b); });
    std::vector<std::string> out;
    out.reserve(verts.size());
    for (int v : verts) out.push_back(g.name(v));
    return out;
}

}  // namespace pauvc
