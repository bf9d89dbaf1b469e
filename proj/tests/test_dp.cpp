#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"

using namespace pauvc;
using testutil::mk;
using testutil::mk_named;

namespace {

// runs the table pipeline and checks every node against the subset-scan oracle
template <typename ExprT, typename SolveFn, typename EvalNodeFn>
void check_all_nodes(const ExprT& e, SolveFn solve_fn, EvalNodeFn eval_node, int max_k = 4) {
    DpOptions opts;
    opts.max_k = max_k;
    bool all_equal = true;
    opts.observer = [&](int node, const DpTable& table) {
        LabeledGraph lg = eval_node(e, node);
        DpTable ref = labeled_tables_oracle(lg, {12, 5});
        if (!tables_semantically_equal(table, ref)) all_equal = false;
    };
    solve_fn(e, opts);
    CHECK(all_equal);
}

DpTable k2_table(SetArena& arena) {
    DpTable x = leaf_table(2, 1, 0, arena);
    DpTable y = leaf_table(2, 2, 1, arena);
    return combine_product(x, y, {{1, 2}}, arena);
}

}  // namespace

TEST_CASE("leaf table") {
    SetArena arena;
    DpTable t = leaf_table(2, 1, 0, arena);
    CHECK(t.ne == 0b01u);
    CHECK(t.mu[0b00] == 0);
    CHECK(t.mu[0b01] == 1);
    CHECK(t.mu[0b10] == -1);
    REQUIRE(t.chars.size() == 2);
    for (const auto& row : t.chars) {
        CHECK(beta_at(row.beta, t.ne, t.k, 0b01) == 1);
        CHECK(beta_at(row.beta, t.ne, t.k, 0b00) == (row.size == 0 ? 1 : 0));
    }
    CHECK_THROWS_AS(leaf_table(2, 3, 0, arena), std::invalid_argument);
}

TEST_CASE("product: K2 from two labeled leaves") {
    SetArena arena;
    DpTable t = k2_table(arena);
    CHECK(t.mu[0b00] == -1);
    CHECK(t.mu[0b01] == 1);
    CHECK(t.mu[0b10] == 1);
    CHECK(t.mu[0b11] == 2);

    LabeledGraph lg{mk_named({"x", "y"}, {{0, 1}}), 2, {1, 2}};
    CHECK(tables_semantically_equal(t, labeled_tables_oracle(lg)));

    // the pre-assignment {x} leaves exactly one cover with full set {1} and one with {1,2}
    bool found = false;
    for (const auto& row : t.chars) {
        if (row.size == 1 && beta_at(row.beta, t.ne, t.k, 0b01) == 1 &&
            beta_at(row.beta, t.ne, t.k, 0b10) == 0 && beta_at(row.beta, t.ne, t.k, 0b11) == 1) {
            found = true;
            auto ids = arena.expand(row.witness);
            REQUIRE(ids.size() == 1);
            CHECK(ids[0] == 0);
        }
    }
    CHECK(found);
}

TEST_CASE("product with empty pair set is disjoint union") {
    SetArena arena;
    DpTable x = leaf_table(1, 1, 0, arena);
    DpTable y = leaf_table(1, 1, 1, arena);
    DpTable t = combine_product(x, y, {}, arena);
    CHECK(t.mu[0b0] == 0);
    CHECK(t.mu[0b1] == 2);
    LabeledGraph lg{mk_named({"x", "y"}, {}), 1, {1, 1}};
    CHECK(tables_semantically_equal(t, labeled_tables_oracle(lg)));
}

TEST_CASE("relabel merges classes with aggregation over merged preimages") {
    SetArena arena;
    DpTable t = k2_table(arena);

    // identity relabel changes nothing
    DpTable same = apply_relabel(t, {0, 1, 2}, arena);
    CHECK(tables_semantically_equal(t, same));

    DpTable merged = apply_relabel(t, {0, 1, 1}, arena);
    CHECK(merged.ne == 0b01u);
    CHECK(merged.mu[0b00] == 1);  // the literal preimage formula would say "absent"
    CHECK(merged.mu[0b01] == 2);
    LabeledGraph lg{mk_named({"x", "y"}, {{0, 1}}), 2, {1, 1}};
    CHECK(tables_semantically_equal(merged, labeled_tables_oracle(lg)));
    bool saw_empty_set_char = false;
    for (const auto& row : merged.chars)
        if (row.size == 0) {
            saw_empty_set_char = true;
            CHECK(beta_at(row.beta, merged.ne, merged.k, 0b00) == 2);
            CHECK(beta_at(row.beta, merged.ne, merged.k, 0b01) == 1);
        }
    CHECK(saw_empty_set_char);
}

TEST_CASE("relabel on two isolated vertices") {
    SetArena arena;
    DpTable x = leaf_table(2, 1, 0, arena);
    DpTable y = leaf_table(2, 2, 1, arena);
    DpTable t = combine_product(x, y, {}, arena);
    DpTable merged = apply_relabel(t, {0, 1, 1}, arena);
    CHECK(merged.mu[0b00] == 0);
    CHECK(merged.mu[0b01] == 2);
    LabeledGraph lg{mk_named({"x", "y"}, {}), 2, {1, 1}};
    CHECK(tables_semantically_equal(merged, labeled_tables_oracle(lg)));
}

TEST_CASE("join filters covers that miss both classes") {
    SetArena arena;
    DpTable x = leaf_table(2, 1, 0, arena);
    DpTable y = leaf_table(2, 2, 1, arena);
    DpTable un = combine_product(x, y, {}, arena);
    DpTable joined = apply_join(un, 1, 2);
    CHECK(tables_semantically_equal(joined, k2_table(arena)));

    // join against an absent class is the identity
    DpTable leaf = leaf_table(2, 1, 0, arena);
    CHECK(tables_semantically_equal(apply_join(leaf, 1, 2), leaf));

    CHECK_THROWS_AS(apply_join(un, 1, 1), std::invalid_argument);
}

TEST_CASE("join is idempotent") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        CwExpr e = testutil::random_cw_expr(rng, 1 + rng() % 8, 3);
        SetArena arena;
        // build the root table by hand
        DpOptions opts;
        opts.max_k = 3;
        DpTable root;
        opts.observer = [&](int node, const DpTable& t) {
            if (node == e.root) root = t;
        };
        solve_cw(e, opts);
        DpTable once = apply_join(root, 1, 2);
        DpTable twice = apply_join(once, 1, 2);
        CHECK(tables_semantically_equal(once, twice));
    }
}

TEST_CASE("4-path expression: every node table matches the oracle") {
    CwExpr e = parse_cw_expr("e(2,3,u(e(1,2,u(1(a),2(b))),e(1,3,u(3(c),1(d)))))");
    check_all_nodes(
        e, [](const CwExpr& x, const DpOptions& o) { return solve_cw(x, o); },
        [](const CwExpr& x, int node) { return eval_cw_node(x, node); });
}

TEST_CASE("solve: frozen examples") {
    PreassignmentSolution p4 =
        solve_cw(parse_cw_expr("e(2,3,u(e(1,2,u(1(a),2(b))),e(1,3,u(3(c),1(d)))))"));
    CHECK(p4.preassign_size == 1);
    CHECK(p4.min_vc_size == 2);
    CHECK(p4.method == Method::FptCw);
    // solution names are expression leaves
    Graph g = eval_cw(parse_cw_expr("e(2,3,u(e(1,2,u(1(a),2(b))),e(1,3,u(3(c),1(d)))))")).graph;
    auto verdict = verify_preassignment(g, p4.preassign);
    CHECK(verdict.num_min_vcs_capped == 1);
    CHECK(*verdict.unique_cover == p4.unique_cover);

    CHECK(solve_cw(parse_cw_expr("1(x)")).preassign_size == 0);
    CHECK(solve_cw(parse_cw_expr("1(x)")).min_vc_size == 0);

    PreassignmentSolution k2 = solve_nlc(parse_nlc_expr("x([(1,2)],1(a),2(b))"));
    CHECK(k2.preassign_size == 1);
    CHECK(k2.method == Method::FptNlc);
}

TEST_CASE("random expressions: tables equal the oracle at every node") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        CwExpr e = testutil::random_cw_expr(rng, 1 + rng() % 8, 3);
        check_all_nodes(
            e, [](const CwExpr& x, const DpOptions& o) { return solve_cw(x, o); },
            [](const CwExpr& x, int node) { return eval_cw_node(x, node); });
        NlcExpr ne = testutil::random_nlc_expr(rng, 1 + rng() % 8, 3);
        check_all_nodes(
            ne, [](const NlcExpr& x, const DpOptions& o) { return solve_nlc(x, o); },
            [](const NlcExpr& x, int node) { return eval_nlc_node(x, node); });
    }
}

TEST_CASE("random expressions: end to end against brute force") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        PreassignmentSolution sol;
        Graph g;
        if (trial % 2 == 0) {
            CwExpr e = testutil::random_cw_expr(rng, 1 + rng() % 9, 3);
            sol = solve_cw(e);
            g = eval_cw(e).graph;
        } else {
            NlcExpr e = testutil::random_nlc_expr(rng, 1 + rng() % 9, 3);
            sol = solve_nlc(e);
            g = eval_nlc(e).graph;
        }
        CHECK(sol.preassign_size == (std::int64_t)pauvc_bruteforce(g).size());
        auto verdict = verify_preassignment(g, sol.preassign);
        CHECK(verdict.num_min_vcs_capped == 1);
        CHECK(*verdict.unique_cover == sol.unique_cover);
        CHECK(sol.min_vc_size == *verdict.min_vc_size);
        CHECK(std::includes(sol.unique_cover.begin(), sol.unique_cover.end(),
                            sol.preassign.begin(), sol.preassign.end(), name_less));
    }
}

TEST_CASE("tree pipeline matches brute force on small trees") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(testutil::below(rng, 14));
        Graph tree = random_tree(n, rng());
        PreassignmentSolution sol = solve_cw(tree_to_cw_expr(tree));
        CHECK(sol.preassign_size == (std::int64_t)pauvc_bruteforce_indices(tree).size());
        CHECK(verify_preassignment(tree, sol.preassign).num_min_vcs_capped == 1);
    }
}

TEST_CASE("tree pipeline verifies on a 50-vertex tree") {
    Graph tree = random_tree(50, 99);
    PreassignmentSolution sol = solve_cw(tree_to_cw_expr(tree));
    ExactBudget big{64};
    auto verdict = verify_preassignment(tree, sol.preassign, big);
    CHECK(verdict.num_min_vcs_capped == 1);
    CHECK(*verdict.unique_cover == sol.unique_cover);
    CHECK(testutil::forest_min_vc(tree) == sol.min_vc_size);
}

TEST_CASE("label budget errors") {
    std::string six = "u(1(a),u(2(b),u(3(c),u(4(d),u(5(e),6(f))))))";
    CHECK_THROWS_WITH_AS(solve_cw(parse_cw_expr(six), DpOptions{6, nullptr}),
                         doctest::Contains("at most 5"), ResourceError);
    std::string five = "u(1(a),u(2(b),u(3(c),u(4(d),5(e)))))";
    CHECK_THROWS_WITH_AS(solve_cw(parse_cw_expr(five)), doctest::Contains("max_k"), ResourceError);
    DpOptions wide;
    wide.max_k = 5;
    CHECK(solve_cw(parse_cw_expr(five), wide).preassign_size == 0);
}

TEST_CASE("invariant checks run on every constructed table") {
    std::uint64_t before = table_invariant_check_count();
    solve_cw(parse_cw_expr("e(1,2,u(1(a),2(b)))"));
    CHECK(table_invariant_check_count() >= before + 4);
}
