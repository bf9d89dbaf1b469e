#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pauvc/expr.hpp"
#include "pauvc/solution.hpp"

namespace pauvc {

/// Immutable DAG of vertex sets shared across table entries: each entry holds
/// one reference, unions cost O(1), and a set is expanded to explicit names
/// only once at extraction.
class SetArena {
public:
    static constexpr std::int32_t kEmpty = 0;

    SetArena() { nodes_.push_back({-1, -1, -1}); }

    std::int32_t make_leaf(int name_id) {
        nodes_.push_back({name_id, -1, -1});
        return static_cast<std::int32_t>(nodes_.size()) - 1;
    }
    std::int32_t make_union(std::int32_t l, std::int32_t r) {
        if (l == kEmpty) return r;
        if (r == kEmpty) return l;
        nodes_.push_back({-1, l, r});
        return static_cast<std::int32_t>(nodes_.size()) - 1;
    }
    /// Name ids of the set, unsorted.
    std::vector<int> expand(std::int32_t ref) const;
    std::size_t size() const { return nodes_.size(); }

private:
    struct Node {
        int name;  // >= 0 for leaves
        std::int32_t l, r;
    };
    std::vector<Node> nodes_;
};

/// One achievable characteristic: a packed map from subsets of NE to {0,1,2}
/// (2 bits per subset, subsets in ascending bitmask order), the minimum size
/// of a set with that characteristic, and one witness set.
struct CharRow {
    std::uint64_t beta = 0;
    std::int64_t size = 0;
    std::int32_t witness = SetArena::kEmpty;
};

/// Bottom-up table for one subexpression: which labels are nonempty (ne),
/// the minimum cover size per exactly-full label subset (mu, -1 = absent),
/// and the achievable characteristics with minimum witness sizes.
struct DpTable {
    int k = 1;
    std::uint32_t ne = 0;
    std::int64_t vertex_count = 0;
    std::vector<std::int64_t> mu;  // indexed by label subset mask, size 1<<k
    std::vector<CharRow> chars;    // sorted by beta
};

/// Packs per-subset values (indexed by full label mask; only entries with
/// mask a subset of ne are read) into the canonical 2-bit encoding over ne.
std::uint64_t pack_beta(const std::uint8_t* values, std::uint32_t ne, int k);
void unpack_beta(std::uint64_t beta, std::uint32_t ne, int k, std::uint8_t* values);
/// Value of the packed characteristic at one subset of ne.
int beta_at(std::uint64_t beta, std::uint32_t ne, int k, std::uint32_t subset);

/// Throws std::logic_error if a structural invariant fails: mu(ne) must equal
/// the vertex count, every characteristic must be 1 at ne, and a positive
/// characteristic value requires mu to be present. Cheap; runs on every table.
void check_table_invariants(const DpTable& t);
std::uint64_t table_invariant_check_count();

DpTable leaf_table(int k, int label, int name_id, SetArena& arena);
DpTable combine_product(const DpTable& a, const DpTable& b,
                        const std::vector<std::pair<int, int>>& pairs, SetArena& arena);
DpTable apply_relabel(const DpTable& a, const std::vector<int>& map, SetArena& arena);
DpTable apply_join(const DpTable& a, int i, int j);

struct DpOptions {
    int max_k = 4;
    /// Called with (expression node id, finished table) for every node.
    std::function<void(int, const DpTable&)> observer;
};

struct ExtractResult {
    std::vector<int> preassign;  // name ids
    std::int64_t min_vc_size = 0;
    std::uint64_t chosen_beta = 0;
};

/// Final step at the root table: the optimum cover size is min mu(I); among
/// characteristics summing to exactly 1 over the argmin subsets, picks the
/// smallest witness (ties by lexicographic name order).
ExtractResult extract_solution(const DpTable& root, const SetArena& arena,
                               const std::vector<std::string>& names);

PreassignmentSolution solve_cw(const CwExpr& e, const DpOptions& options = {});
PreassignmentSolution solve_nlc(const NlcExpr& e, const DpOptions& options = {});

}  // namespace pauvc
