#pragma once

#include "pauvc/dp.hpp"
#include "pauvc/expr.hpp"
#include "pauvc/graph.hpp"

namespace pauvc {

struct OracleBudget {
    std::int64_t max_vertices = 16;
};

/// Ground-truth solver: tries candidate pre-assignments in increasing size,
/// lexicographic within a size, and returns the first whose capped count of
/// containing minimum covers is exactly 1. A minimum cover itself always
/// qualifies, so this terminates.
std::vector<std::string> pauvc_bruteforce(const Graph& g, const OracleBudget& budget = {});
std::vector<int> pauvc_bruteforce_indices(const Graph& g, const OracleBudget& budget = {});

struct TableOracleBudget {
    int max_vertices = 12;
    int max_k = 5;
};

/// Reference table built by enumerating every vertex subset: exact mu per
/// full-label subset and the characteristic of every candidate set with its
/// minimum size. Shares no combine logic with the expression-driven tables.
DpTable labeled_tables_oracle(const LabeledGraph& lg, const TableOracleBudget& budget = {});

/// Equality on the semantic content (ne, mu, characteristic keys and minimum
/// sizes); witnesses are ignored.
bool tables_semantically_equal(const DpTable& a, const DpTable& b);

}  // namespace pauvc
