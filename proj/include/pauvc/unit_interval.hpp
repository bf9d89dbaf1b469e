#pragma once

#include <optional>
#include <string_view>

#include "pauvc/graph.hpp"
#include "pauvc/rational.hpp"
#include "pauvc/solution.hpp"

namespace pauvc {

struct Interval {
    std::string name;
    Rat left;  // unit length: the interval is [left, left+1]
};

/// Intervals in strictly increasing order by (left, name). Ties in value are
/// broken in the ORDER only; intersection tests always use the exact values,
/// so the represented graph is never changed by tie-breaking.
struct IntervalRep {
    std::vector<Interval> intervals;
};

/// Lines "name left" with rational lefts ("2", "0.5", "7/4"); '#' comments.
IntervalRep parse_intervals(std::string_view text);
std::string serialize_intervals(const IntervalRep& rep);

/// Closed-interval intersection graph: [a,a+1] meets [b,b+1] iff |a-b| <= 1.
Graph intervals_to_graph(const IntervalRep& rep);

struct UiRejection {
    std::string reason;
    std::vector<std::string> witness;
};

/// Three LexBFS sweeps produce a candidate order; if every closed
/// neighborhood is contiguous in it, intervals are realized on an integer
/// tick grid and re-verified against g. Returns nullopt (with a rejection
/// witness) when no unit-interval representation exists.
std::optional<IntervalRep> recognize_unit_interval(const Graph& g, UiRejection* why = nullptr);

struct CliquePartition {
    int m = 0;
    std::vector<std::pair<int, int>> groups;  // [begin,end) ranges into the interval list
    std::vector<int> representatives;         // leftmost interval of each group
};

/// Greedy sweep. The representatives form a maximum independent set; each
/// group is a clique, and groups two or more apart never intersect.
CliquePartition build_clique_partition(const IntervalRep& rep);

struct UiStats {
    long long ops = 0;  // inner-loop work; linear in the interval count
};

/// `s_table`, when given, receives the per-group size table (sizes only; no
/// set is ever materialized during the sweep).
PreassignmentSolution solve_unit_interval(const IntervalRep& rep, UiStats* stats = nullptr,
                                          std::vector<std::vector<std::int64_t>>* s_table = nullptr);

}  // namespace pauvc
