#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pauvc/graph.hpp"

namespace pauvc {

/// A graph together with a total labeling into [k].
struct LabeledGraph {
    Graph graph;
    int k = 1;
    std::vector<int> labels;  // per vertex index, values in 1..k
};

/// Clique-width expression. Nodes live in a flat arena (child indices), so
/// deep expressions for big trees need no recursion to build, walk, or free.
struct CwExpr {
    enum class Kind { Leaf, Union, Join, Relabel };
    struct Node {
        Kind kind;
        int a = 0, b = 0;       // Join(i,j) / Relabel(i->j) labels; Leaf label in a
        int name = -1;          // Leaf: index into names
        int child0 = -1, child1 = -1;
    };
    int k = 1;
    std::vector<Node> nodes;
    int root = -1;
    std::vector<std::string> names;  // one per leaf, unique
};

/// NLC expression: leaves, labeled product x_M, and total relabel p_R.
/// M is directional: (i,j) joins label i on the LEFT operand to label j on
/// the RIGHT operand.
struct NlcExpr {
    enum class Kind { Leaf, Product, Relabel };
    struct Node {
        Kind kind;
        int label = 0;  // Leaf
        int name = -1;
        std::vector<std::pair<int, int>> pairs;  // Product
        std::vector<int> map;                    // Relabel: map[i] for i in 1..k (index 0 unused)
        int child0 = -1, child1 = -1;
    };
    int k = 1;
    std::vector<Node> nodes;
    int root = -1;
    std::vector<std::string> names;
};

/// Grammar (whitespace-insensitive, optional leading "k <INT>" header):
///   expr := INT '(' NAME ')' | 'u' '(' expr ',' expr ')'
///         | 'e' '(' INT ',' INT ',' expr ')' | 'r' '(' INT ',' INT ',' expr ')'
/// e(i,j,.) joins labels i,j (i != j); r(i,j,.) relabels i to j.
CwExpr parse_cw_expr(std::string_view text);

/// Grammar:
///   nexpr := INT '(' NAME ')' | 'x' '(' '[' pairs? ']' ',' nexpr ',' nexpr ')'
///          | 'p' '(' '[' maps? ']' ',' nexpr ')'
///   pairs := '(' INT ',' INT ')' (',' pair)*   maps := INT '->' INT (',' map)*
/// Unlisted labels map to themselves.
NlcExpr parse_nlc_expr(std::string_view text);

std::string serialize_cw_expr(const CwExpr& e);
std::string serialize_nlc_expr(const NlcExpr& e);

LabeledGraph eval_cw(const CwExpr& e);
LabeledGraph eval_nlc(const NlcExpr& e);
/// Evaluates the subexpression rooted at `node`.
LabeledGraph eval_cw_node(const CwExpr& e, int node);
LabeledGraph eval_nlc_node(const NlcExpr& e, int node);

/// Builds a clique-width (<=3)-expression denoting the given forest: each
/// component is rooted and children are folded in with a join through a
/// transient label. Throws ClassError if the graph has a cycle.
CwExpr tree_to_cw_expr(const Graph& g);

}  // namespace pauvc
