#pragma once

#include <optional>

#include "pauvc/graph.hpp"
#include "pauvc/solution.hpp"

namespace pauvc {

/// Partition of the vertex set into a clique and an independent set.
struct SplitPartition {
    std::vector<int> clique;       // pairwise adjacent
    std::vector<int> independent;  // pairwise non-adjacent
};

struct SplitWitness {
    enum class Kind { None, TwoK2, C4, C5 } kind = Kind::None;
    std::vector<std::string> vertices;
};

/// Degree-sequence test (O(n + m) after a counting sort). On rejection, an
/// induced 2K2, C4, or C5 is located when the search caps allow it.
std::optional<SplitPartition> recognize_split(const Graph& g, SplitWitness* witness = nullptr);

struct SplitReduction {
    Graph graph;
    SplitPartition partition;
    std::vector<std::string> forced;    // clique vertices in every minimum cover
    std::vector<std::string> isolated;  // removed after the forced vertices
};

/// Removes clique vertices with two or more independent-side neighbors (they
/// are in every minimum cover, so answers transfer unchanged), then isolated
/// vertices. One pass of each reaches the fixed point.
SplitReduction reduce_split(const Graph& g, const SplitPartition& partition);

/// Linear-time solve; throws ClassError when g is not split.
PreassignmentSolution solve_split(const Graph& g);

}  // namespace pauvc
