#include "pauvc/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace pauvc {

namespace {

struct Tok {
    enum Type { Int, Word, LPar, RPar, Comma, LBrack, RBrack, Arrow, End };
    Type type;
    std::string text;
    long value = 0;
    size_t pos = 0;
};

[[noreturn]] void expr_fail(size_t pos, const std::string& what) {
    throw ParseError("expression parse error at position " + std::to_string(pos) + ": " + what);
}

std::vector<Tok> lex(std::string_view text) {
    std::vector<Tok> toks;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '(') toks.push_back({Tok::LPar, "(", 0, i++});
        else if (c == ')') toks.push_back({Tok::RPar, ")", 0, i++});
        else if (c == ',') toks.push_back({Tok::Comma, ",", 0, i++});
        else if (c == '[') toks.push_back({Tok::LBrack, "[", 0, i++});
        else if (c == ']') toks.push_back({Tok::RBrack, "]", 0, i++});
        else if (c == '-') {
            if (i + 1 >= text.size() || text[i + 1] != '>') expr_fail(i, "expected '->'");
            toks.push_back({Tok::Arrow, "->", 0, i});
            i += 2;
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            bool digits = true;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                if (!std::isdigit(static_cast<unsigned char>(text[j]))) digits = false;
                ++j;
            }
            Tok t{digits ? Tok::Int : Tok::Word, std::string(text.substr(i, j - i)), 0, i};
            if (digits) t.value = std::stol(t.text);
            toks.push_back(std::move(t));
            i = j;
        } else {
            expr_fail(i, std::string("unexpected character '") + c + "'");
        }
    }
    toks.push_back({Tok::End, "", 0, text.size()});
    return toks;
}

struct TokStream {
    std::vector<Tok> toks;
    size_t at = 0;
    const Tok& peek() const { return toks[at]; }
    Tok take() { return toks[at == toks.size() - 1 ? at : at++]; }
    Tok expect(Tok::Type t, const std::string& what) {
        if (peek().type != t) expr_fail(peek().pos, "expected " + what);
        return take();
    }
    int expect_label(const std::string& what) {
        Tok t = expect(Tok::Int, what);
        if (t.value < 1) expr_fail(t.pos, what + " must be at least 1");
        if (t.value > 32) expr_fail(t.pos, what + " too large");
        return static_cast<int>(t.value);
    }
    std::string expect_name() {
        if (peek().type != Tok::Int && peek().type != Tok::Word)
            expr_fail(peek().pos, "expected vertex name");
        return take().text;
    }
};

std::optional<int> take_header(TokStream& ts) {
    if (ts.peek().type == Tok::Word && ts.peek().text == "k") {
        ts.take();
        Tok t = ts.expect(Tok::Int, "label budget after 'k'");
        if (t.value < 1 || t.value > 32) expr_fail(t.pos, "label budget out of range");
        return static_cast<int>(t.value);
    }
    return std::nullopt;
}

template <typename ExprT>
int add_leaf(ExprT& e, std::unordered_set<std::string>& seen, int label, const std::string& name,
             size_t pos) {
    if (!seen.insert(name).second) expr_fail(pos, "duplicate vertex name '" + name + "'");
    e.names.push_back(name);
    typename ExprT::Node node{};
    node.kind = ExprT::Kind::Leaf;
    node.name = static_cast<int>(e.names.size()) - 1;
    if constexpr (std::is_same_v<ExprT, CwExpr>) node.a = label;
    else node.label = label;
    e.nodes.push_back(std::move(node));
    return static_cast<int>(e.nodes.size()) - 1;
}

void finish_k(int& k, std::optional<int> declared, int max_label, size_t fail_pos) {
    if (declared) {
        if (max_label > *declared)
            expr_fail(fail_pos, "label " + std::to_string(max_label) + " exceeds declared k " +
                                    std::to_string(*declared));
        k = *declared;
    } else {
        k = std::max(1, max_label);
    }
}

}  // namespace

CwExpr parse_cw_expr(std::string_view text) {
    CwExpr e;
    TokStream ts{lex(text)};
    auto declared = take_header(ts);
    std::unordered_set<std::string> seen;
    int max_label = 0;

    struct Frame {
        char op;  // 'u', 'e', 'r'
        int a = 0, b = 0;
        int child0 = -1;
        bool have_first = false;
        size_t pos;
    };
    std::vector<Frame> frames;
    int value = -1;

    while (true) {
        // parse one expression head
        const Tok& t = ts.peek();
        if (t.type == Tok::Int) {
            Tok lab = ts.take();
            if (lab.value < 1) expr_fail(lab.pos, "label must be at least 1");
            ts.expect(Tok::LPar, "'('");
            std::string name = ts.expect_name();
            ts.expect(Tok::RPar, "')'");
            max_label = std::max<int>(max_label, static_cast<int>(lab.value));
            value = add_leaf(e, seen, static_cast<int>(lab.value), name, lab.pos);
        } else if (t.type == Tok::Word && (t.text == "u" || t.text == "e" || t.text == "r")) {
            Tok op = ts.take();
            ts.expect(Tok::LPar, "'('");
            Frame f{op.text[0], 0, 0, -1, false, op.pos};
            if (f.op != 'u') {
                f.a = ts.expect_label("label");
                ts.expect(Tok::Comma, "','");
                f.b = ts.expect_label("label");
                ts.expect(Tok::Comma, "','");
                if (f.op == 'e' && f.a == f.b) expr_fail(op.pos, "join labels must differ");
                max_label = std::max({max_label, f.a, f.b});
            }
            frames.push_back(f);
            continue;
        } else {
            expr_fail(t.pos, "expected expression");
        }

        // fold the produced value into pending frames
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.op == 'u' && !f.have_first) {
                ts.expect(Tok::Comma, "','");
                f.child0 = value;
                f.have_first = true;
                break;  // parse the second operand
            }
            ts.expect(Tok::RPar, "')'");
            CwExpr::Node node{};
            if (f.op == 'u') {
                node.kind = CwExpr::Kind::Union;
                node.child0 = f.child0;
                node.child1 = value;
            } else {
                node.kind = f.op == 'e' ? CwExpr::Kind::Join : CwExpr::Kind::Relabel;
                node.a = f.a;
                node.b = f.b;
                node.child0 = value;
            }
            e.nodes.push_back(node);
            value = static_cast<int>(e.nodes.size()) - 1;
            frames.pop_back();
        }
        if (frames.empty()) break;
    }
    ts.expect(Tok::End, "end of input");
    e.root = value;
    finish_k(e.k, declared, max_label, 0);
    return e;
}

NlcExpr parse_nlc_expr(std::string_view text) {
    NlcExpr e;
    TokStream ts{lex(text)};
    auto declared = take_header(ts);
    std::unordered_set<std::string> seen;
    int max_label = 0;

    struct Frame {
        char op;  // 'x', 'p'
        std::vector<std::pair<int, int>> entries;
        int child0 = -1;
        bool have_first = false;
        size_t pos;
    };
    std::vector<Frame> frames;
    int value = -1;

    while (true) {
        const Tok& t = ts.peek();
        if (t.type == Tok::Int) {
            Tok lab = ts.take();
            if (lab.value < 1) expr_fail(lab.pos, "label must be at least 1");
            ts.expect(Tok::LPar, "'('");
            std::string name = ts.expect_name();
            ts.expect(Tok::RPar, "')'");
            max_label = std::max<int>(max_label, static_cast<int>(lab.value));
            value = add_leaf(e, seen, static_cast<int>(lab.value), name, lab.pos);
        } else if (t.type == Tok::Word && (t.text == "x" || t.text == "p")) {
            Tok op = ts.take();
            ts.expect(Tok::LPar, "'('");
            ts.expect(Tok::LBrack, "'['");
            Frame f{op.text[0], {}, -1, false, op.pos};
            if (op.text == "x") {
                while (ts.peek().type == Tok::LPar) {
                    ts.take();
                    int a = ts.expect_label("label");
                    ts.expect(Tok::Comma, "','");
                    int b = ts.expect_label("label");
                    ts.expect(Tok::RPar, "')'");
                    f.entries.push_back({a, b});
                    max_label = std::max({max_label, a, b});
                    if (ts.peek().type == Tok::Comma) ts.take();
                    else break;
                }
            } else {
                while (ts.peek().type == Tok::Int) {
                    int a = ts.expect_label("label");
                    ts.expect(Tok::Arrow, "'->'");
                    int b = ts.expect_label("label");
                    for (auto& [src, dst] : f.entries) {
                        (void)dst;
                        if (src == a) expr_fail(op.pos, "duplicate relabel source " + std::to_string(a));
                    }
                    f.entries.push_back({a, b});
                    max_label = std::max({max_label, a, b});
                    if (ts.peek().type == Tok::Comma) ts.take();
                    else break;
                }
            }
            ts.expect(Tok::RBrack, "']'");
            ts.expect(Tok::Comma, "','");
            frames.push_back(std::move(f));
            continue;
        } else {
            expr_fail(t.pos, "expected expression");
        }

        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.op == 'x' && !f.have_first) {
                ts.expect(Tok::Comma, "','");
                f.child0 = value;
                f.have_first = true;
                break;
            }
            ts.expect(Tok::RPar, "')'");
            NlcExpr::Node node{};
            if (f.op == 'x') {
                node.kind = NlcExpr::Kind::Product;
                node.pairs = std::move(f.entries);
                std::sort(node.pairs.begin(), node.pairs.end());
                node.pairs.erase(std::unique(node.pairs.begin(), node.pairs.end()),
                                 node.pairs.end());
                node.child0 = f.child0;
                node.child1 = value;
            } else {
                node.kind = NlcExpr::Kind::Relabel;
                node.pairs = std::move(f.entries);  // raw entries; map built below
                node.child0 = value;
            }
            e.nodes.push_back(std::move(node));
            value = static_cast<int>(e.nodes.size()) - 1;
            frames.pop_back();
        }
        if (frames.empty()) break;
    }
    ts.expect(Tok::End, "end of input");
    e.root = value;
    finish_k(e.k, declared, max_label, 0);

    // now that k is known, expand relabel entries into total maps
    for (auto& node : e.nodes) {
        if (node.kind != NlcExpr::Kind::Relabel) continue;
        node.map.resize(e.k + 1);
        for (int i = 0; i <= e.k; ++i) node.map[i] = i;
        for (auto [src, dst] : node.pairs) node.map[src] = dst;
        node.pairs.clear();
    }
    return e;
}

namespace {

// Iterative post-order serialization shared by both algebras.
template <typename ExprT, typename EmitHead, typename EmitMid, typename EmitTail>
std::string serialize_walk(const ExprT& e, int max_label, EmitHead head, EmitMid mid,
                           EmitTail tail) {
    std::ostringstream out;
    if (e.k != std::max(1, max_label)) out << "k " << e.k << "\n";
    struct Item {
        int node;
        int stage;
    };
    std::vector<Item> stack{{e.root, 0}};
    while (!stack.empty()) {
        auto& [node, stage] = stack.back();
        const auto& nd = e.nodes[node];
        int next_child = -1;
        if (stage == 0) {
            next_child = head(out, nd);
        } else if (stage == 1) {
            next_child = mid(out, nd);
        } else {
            tail(out, nd);
        }
        if (next_child >= 0) {
            ++stage;
            stack.push_back({next_child, 0});
        } else {
            stack.pop_back();
        }
    }
    return out.str();
}

}  // namespace

std::string serialize_cw_expr(const CwExpr& e) {
    int max_label = 0;
    for (const auto& nd : e.nodes) {
        if (nd.kind == CwExpr::Kind::Leaf) max_label = std::max(max_label, nd.a);
        else if (nd.kind != CwExpr::Kind::Union) max_label = std::max({max_label, nd.a, nd.b});
    }
    return serialize_walk(
        e, max_label,
        [&](std::ostringstream& out, const CwExpr::Node& nd) -> int {
            switch (nd.kind) {
                case CwExpr::Kind::Leaf:
                    out << nd.a << "(" << e.names[nd.name] << ")";
                    return -1;
                case CwExpr::Kind::Union:
                    out << "u(";
                    return nd.child0;
                case CwExpr::Kind::Join:
                    out << "e(" << nd.a << "," << nd.b << ",";
                    return nd.child0;
                case CwExpr::Kind::Relabel:
                    out << "r(" << nd.a << "," << nd.b << ",";
                    return nd.child0;
            }
            return -1;
        },
        [&](std::ostringstream& out, const CwExpr::Node& nd) -> int {
            if (nd.kind == CwExpr::Kind::Union) {
                out << ",";
                return nd.child1;
            }
            out << ")";
            return -1;
        },
        [&](std::ostringstream& out, const CwExpr::Node& nd) {
            (void)nd;
            out << ")";
        });
}

std::string serialize_nlc_expr(const NlcExpr& e) {
    int max_label = 0;
    for (const auto& nd : e.nodes) {
        if (nd.kind == NlcExpr::Kind::Leaf) max_label = std::max(max_label, nd.label);
        else if (nd.kind == NlcExpr::Kind::Product)
            for (auto [a, b] : nd.pairs) max_label = std::max({max_label, a, b});
        else
            for (size_t i = 1; i < nd.map.size(); ++i)
                if (nd.map[i] != (int)i) max_label = std::max({max_label, (int)i, nd.map[i]});
    }
    return serialize_walk(
        e, max_label,
        [&](std::ostringstream& out, const NlcExpr::Node& nd) -> int {
            switch (nd.kind) {
                case NlcExpr::Kind::Leaf:
                    out << nd.label << "(" << e.names[nd.name] << ")";
                    return -1;
                case NlcExpr::Kind::Product: {
                    out << "x([";
                    bool first = true;
                    for (auto [a, b] : nd.pairs) {
                        if (!first) out << ",";
                        first = false;
                        out << "(" << a << "," << b << ")";
                    }
                    out << "],";
                    return nd.child0;
                }
                case NlcExpr::Kind::Relabel: {
                    out << "p([";
                    bool first = true;
                    for (size_t i = 1; i < nd.map.size(); ++i)
                        if (nd.map[i] != (int)i) {
                            if (!first) out << ",";
                            first = false;
                            out << i << "->" << nd.map[i];
                        }
                    out << "],";
                    return nd.child0;
                }
            }
            return -1;
        },
        [&](std::ostringstream& out, const NlcExpr::Node& nd) -> int {
            if (nd.kind == NlcExpr::Kind::Product) {
                out << ",";
                return nd.child1;
            }
            out << ")";
            return -1;
        },
        [&](std::ostringstream& out, const NlcExpr::Node& nd) {
            (void)nd;
            out << ")";
        });
}

namespace {

// Per-subexpression evaluation state: vertex lists by label (global name ids).
struct EvalState {
    std::vector<std::vector<int>> by_label;
};

void merge_into(std::vector<int>& big, std::vector<int>& small) {
    if (big.size() < small.size()) big.swap(small);
    big.insert(big.end(), small.begin(), small.end());
    small.clear();
    small.shrink_to_fit();
}

template <typename ExprT, typename Combine>
LabeledGraph eval_generic(const ExprT& e, int start, Combine combine) {
    std::vector<std::optional<EvalState>> slot(e.nodes.size());
    std::vector<std::pair<int, bool>> stack{{start, false}};
    std::vector<std::pair<int, int>> edges;
    while (!stack.empty()) {
        auto [node, expanded] = stack.back();
        stack.pop_back();
        const auto& nd = e.nodes[node];
        if (!expanded) {
            stack.push_back({node, true});
            if (nd.child0 >= 0) stack.push_back({nd.child0, false});
            if (nd.child1 >= 0) stack.push_back({nd.child1, false});
        } else {
            slot[node] = combine(nd, slot, edges);
            if (nd.child0 >= 0) slot[nd.child0].reset();
            if (nd.child1 >= 0) slot[nd.child1].reset();
        }
    }
    EvalState final_state = std::move(*slot[start]);

    std::vector<int> used;
    std::vector<int> label_of;
    for (int lab = 1; lab < (int)final_state.by_label.size(); ++lab)
        for (int id : final_state.by_label[lab]) used.push_back(id);
    std::sort(used.begin(), used.end());
    std::vector<int> remap(e.names.size(), -1);
    std::vector<std::string> names;
    names.reserve(used.size());
    for (int id : used) {
        remap[id] = static_cast<int>(names.size());
        names.push_back(e.names[id]);
    }
    label_of.assign(used.size(), 0);
    for (int lab = 1; lab < (int)final_state.by_label.size(); ++lab)
        for (int id : final_state.by_label[lab]) label_of[remap[id]] = lab;
    std::vector<std::pair<int, int>> local_edges;
    local_edges.reserve(edges.size());
    for (auto [u, v] : edges) local_edges.push_back({remap[u], remap[v]});
    LabeledGraph lg;
    lg.graph = Graph::from_vertices_edges(std::move(names), std::move(local_edges), true);
    lg.k = e.k;
    lg.labels = std::move(label_of);
    return lg;
}

}  // namespace

LabeledGraph eval_cw_node(const CwExpr& e, int node) {
    return eval_generic(e, node,
                        [&](const CwExpr::Node& nd, std::vector<std::optional<EvalState>>& slot,
                            std::vector<std::pair<int, int>>& edges) -> EvalState {
                            switch (nd.kind) {
                                case CwExpr::Kind::Leaf: {
                                    EvalState s;
                                    s.by_label.resize(e.k + 1);
                                    s.by_label[nd.a].push_back(nd.name);
                                    return s;
                                }
                                case CwExpr::Kind::Union: {
                                    EvalState s = std::move(*slot[nd.child0]);
                                    EvalState& t = *slot[nd.child1];
                                    for (int lab = 1; lab <= e.k; ++lab)
                                        merge_into(s.by_label[lab], t.by_label[lab]);
                                    return s;
                                }
                                case CwExpr::Kind::Join: {
                                    EvalState s = std::move(*slot[nd.child0]);
                                    for (int u : s.by_label[nd.a])
                                        for (int v : s.by_label[nd.b]) edges.push_back({u, v});
                                    return s;
                                }
                                case CwExpr::Kind::Relabel: {
                                    EvalState s = std::move(*slot[nd.child0]);
                                    if (nd.a != nd.b)
                                        merge_into(s.by_label[nd.b], s.by_label[nd.a]);
                                    return s;
                                }
                            }
                            return EvalState{};
                        });
}

LabeledGraph eval_cw(const CwExpr& e) { return eval_cw_node(e, e.root); }

LabeledGraph eval_nlc_node(const NlcExpr& e, int node) {
    return eval_generic(e, node,
                        [&](const NlcExpr::Node& nd, std::vector<std::optional<EvalState>>& slot,
                            std::vector<std::pair<int, int>>& edges) -> EvalState {
                            switch (nd.kind) {
                                case NlcExpr::Kind::Leaf: {
                                    EvalState s;
                                    s.by_label.resize(e.k + 1);
                                    s.by_label[nd.label].push_back(nd.name);
                                    return s;
                                }
                                case NlcExpr::Kind::Product: {
                                    EvalState s = std::move(*slot[nd.child0]);
                                    EvalState& t = *slot[nd.child1];
                                    for (auto [i, j] : nd.pairs)
                                        for (int u : s.by_label[i])
                                            for (int v : t.by_label[j]) edges.push_back({u, v});
                                    for (int lab = 1; lab <= e.k; ++lab)
                                        merge_into(s.by_label[lab], t.by_label[lab]);
                                    return s;
                                }
                                case NlcExpr::Kind::Relabel: {
                                    EvalState s = std::move(*slot[nd.child0]);
                                    EvalState out;
                                    out.by_label.resize(e.k + 1);
                                    for (int lab = 1; lab <= e.k; ++lab)
                                        merge_into(out.by_label[nd.map[lab]], s.by_label[lab]);
                                    return out;
                                }
                            }
                            return EvalState{};
                        });
}

LabeledGraph eval_nlc(const NlcExpr& e) { return eval_nlc_node(e, e.root); }

CwExpr tree_to_cw_expr(const Graph& g) {
    if (!is_forest(g)) throw ClassError("graph contains a cycle; not a forest");
    CwExpr e;
    e.names = g.names();
    int n = g.vertex_count();

    auto leaf = [&](int v) {
        CwExpr::Node nd{};
        nd.kind = CwExpr::Kind::Leaf;
        nd.a = 1;
        nd.name = v;
        e.nodes.push_back(nd);
        return static_cast<int>(e.nodes.size()) - 1;
    };
    auto op1 = [&](CwExpr::Kind kind, int a, int b, int child) {
        CwExpr::Node nd{};
        nd.kind = kind;
        nd.a = a;
        nd.b = b;
        nd.child0 = child;
        e.nodes.push_back(nd);
        return static_cast<int>(e.nodes.size()) - 1;
    };
    auto unite = [&](int l, int r) {
        CwExpr::Node nd{};
        nd.kind = CwExpr::Kind::Union;
        nd.child0 = l;
        nd.child1 = r;
        e.nodes.push_back(nd);
        return static_cast<int>(e.nodes.size()) - 1;
    };

    std::vector<int> parent(n, -2);
    std::vector<int> expr_of(n, -1);
    bool any_edge = false;
    int forest_expr = -1;
    for (int s = 0; s < n; ++s) {
        if (parent[s] != -2) continue;
        // BFS to set parents, then fold children into parents in reverse order
        std::vector<int> order;
        parent[s] = -1;
        order.push_back(s);
        for (size_t q = 0; q < order.size(); ++q) {
            int v = order[q];
            for (int w : g.neighbors(v)) {
                if (w == parent[v]) continue;
                parent[w] = v;
                order.push_back(w);
            }
        }
        for (int v : order) expr_of[v] = leaf(v);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int v = *it;
            if (parent[v] < 0) continue;
            int p = parent[v];
            // attach subtree of v (root labeled 1, rest 3) under p:
            // relabel v's root to the transient label, join, retire it to 3
            int child = op1(CwExpr::Kind::Relabel, 1, 2, expr_of[v]);
            int joined = op1(CwExpr::Kind::Join, 1, 2, unite(expr_of[p], child));
            expr_of[p] = op1(CwExpr::Kind::Relabel, 2, 3, joined);
            any_edge = true;
        }
        forest_expr = forest_expr < 0 ? expr_of[s] : unite(forest_expr, expr_of[s]);
    }
    if (forest_expr < 0) throw std::invalid_argument("empty graph has no expression");
    e.root = forest_expr;
    e.k = any_edge ? 3 : 1;
    return e;
}

}  // namespace pauvc
