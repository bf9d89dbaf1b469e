#include "pauvc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace pauvc {

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return n ? rng() % n : 0; }

// engine output mapped to [0,1) by hand so results do not depend on the
// standard library's distribution implementations
double unit(std::mt19937_64& rng) { return (rng() >> 11) * (1.0 / 9007199254740992.0); }

std::vector<std::string> numbered(int n) {
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = std::to_string(i + 1);
    return names;
}

}  // namespace

Graph random_gnp(int n, std::uint64_t seed, double p) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("bad gnp parameters");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit(rng) < p) edges.push_back({i, j});
    return Graph::from_vertices_edges(numbered(n), std::move(edges));
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int i = 1; i < n; ++i) edges.push_back({static_cast<int>(below(rng, i)), i});
    return Graph::from_vertices_edges(numbered(n), std::move(edges));
}

Graph random_split_graph(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("split graph needs at least one vertex");
    std::mt19937_64 rng(seed);
    // keep the clique side near sqrt(n) so edge counts stay linear-ish
    int amax = std::min<std::int64_t>(n, 2 + 2 * (std::int64_t)std::sqrt((double)n));
    int a = 1 + static_cast<int>(below(rng, amax));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) edges.push_back({i, j});
    for (int b = a; b < n; ++b) {
        int want = static_cast<int>(below(rng, std::min(a, 3) + 1));
        std::vector<int> targets;
        while ((int)targets.size() < want) {
            int t = static_cast<int>(below(rng, a));
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (int t : targets) edges.push_back({t, b});
    }
    return Graph::from_vertices_edges(numbered(n), std::move(edges));
}

IntervalRep random_unit_intervals(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("bad interval count");
    std::mt19937_64 rng(seed);
    // lefts on a 1/100 grid spread over ~n/4 units: around four per window
    std::uint64_t span = 25ull * std::max(1, n) + 1;
    IntervalRep rep;
    rep.intervals.reserve(n);
    for (int i = 0; i < n; ++i)
        rep.intervals.push_back(
            {std::to_string(i + 1), Rat(static_cast<std::int64_t>(below(rng, span)), 100)});
    std::sort(rep.intervals.begin(), rep.intervals.end(),
              [](const Interval& a, const Interval& b) {
                  if (a.left == b.left) return name_less(a.name, b.name);
                  return a.left < b.left;
              });
    return rep;
}

}  // namespace pauvc
