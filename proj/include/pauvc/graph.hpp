#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pauvc {

/// Input or expression text could not be parsed; message names the position.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact computation would exceed its configured budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A solver was invoked on a graph outside the class it handles.
class ClassError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Name order used for all deterministic choices: all-digit names compare as
/// integers ("2" < "10"), everything else as plain strings.
bool name_less(const std::string& a, const std::string& b);

/// Immutable simple graph over named vertices. Vertices keep their input
/// (declaration) order; `canonical_order` gives the name-sorted permutation
/// used for enumeration and output.
class Graph {
public:
    Graph() = default;

    /// Builds a graph, validating: endpoints in range, no self-loops, no
    /// duplicate edges (unless dedupe_edges), unique names.
    static Graph from_vertices_edges(std::vector<std::string> names,
                                     std::vector<std::pair<int, int>> edges,
                                     bool dedupe_edges = false);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_[v]; }
    std::optional<int> index_of(const std::string& name) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::span<const int> neighbors(int v) const;
    int degree(int v) const { return adj_off_[v + 1] - adj_off_[v]; }
    bool has_edge(int u, int v) const;

    /// Vertex ids sorted by name_less.
    const std::vector<int>& canonical_order() const { return canonical_; }
    int canonical_rank(int v) const { return canonical_rank_[v]; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::pair<int, int>> edges_;  // u < v, sorted
    std::vector<int> adj_off_;
    std::vector<int> adj_;
    std::vector<int> canonical_;
    std::vector<int> canonical_rank_;
};

/// Parses either the native format ("n m" header then "u v" lines, '#'
/// comments) or DIMACS ("p edge n m" then "e u v" lines, 'c' comments),
/// auto-detected from the first data line. Errors name the offending line.
Graph parse_graph(std::string_view text);

/// Native-format text; parse(serialize(parse(t))) == parse(t). When names are
/// not simply "1".."n", a comment block records the numbering.
std::string serialize_graph(const Graph& g);

/// Induced subgraph after deleting `verts`; names preserved.
Graph remove_vertices(const Graph& g, const std::vector<int>& verts);

bool is_forest(const Graph& g);

/// Budget for the exact solvers below (branch and bound on up to this many
/// vertices; exponential beyond toy sizes).
struct ExactBudget {
    std::int64_t max_vertices = 64;
};

bool is_vertex_cover(const Graph& g, const std::vector<std::string>& s);
bool is_vertex_cover_indices(const Graph& g, const std::vector<int>& s);

/// Exact minimum vertex cover size (branch on a max-degree vertex with
/// degree-0/1 reductions).
std::int64_t min_vc_size(const Graph& g, const ExactBudget& budget = {});

/// Up to `cap` minimum vertex covers in lexicographic order of the
/// canonically sorted vertex sets; stops as soon as `cap` are found.
std::vector<std::vector<int>> enumerate_min_vcs_indices(const Graph& g, std::int64_t cap,
                                                        const ExactBudget& budget = {});
std::vector<std::vector<std::string>> enumerate_min_vcs(const Graph& g, std::int64_t cap,
                                                        const ExactBudget& budget = {});

/// Outcome of checking a pre-assignment: how many minimum vertex covers
/// contain it (0, 1, or 2 meaning "two or more").
struct VcVerdict {
    bool is_cover = false;
    std::optional<std::int64_t> min_vc_size;
    int num_min_vcs_capped = 0;
    std::optional<std::vector<std::string>> unique_cover;  // attached iff capped count is 1
};

VcVerdict verify_preassignment(const Graph& g, const std::vector<std::string>& s,
                               const ExactBudget& budget = {});
VcVerdict verify_preassignment_indices(const Graph& g, const std::vector<int>& s,
                                       const ExactBudget& budget = {});

/// Names of `verts`, canonically sorted.
std::vector<std::string> sorted_names(const Graph& g, std::vector<int> verts);

}  // namespace pauvc
