#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"

using namespace pauvc;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(PAUVC_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

struct TempDir {
    std::filesystem::path dir;
    TempDir() {
        dir = std::filesystem::temp_directory_path() /
              ("pauvc_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string file(const std::string& name, const std::string& content) const {
        auto p = dir / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve a graph file and stay byte-identical across runs") {
    TempDir tmp;
    std::string p4 = tmp.file("p4.g", "4 3\n1 2\n2 3\n3 4\n");
    RunResult r1 = run("solve --graph " + p4);
    RunResult r2 = run("solve --graph " + p4);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK(contains(r1.out, "preassign_size: 1"));
    CHECK(contains(r1.out, "min_vc_size: 2"));
    CHECK(contains(r1.out, "digest: "));
}

TEST_CASE("solve the 4-path expression with verification") {
    TempDir tmp;
    std::string cwx = tmp.file("p4.cwx", "e(2,3,u(e(1,2,u(1(a),2(b))),e(1,3,u(3(c),1(d)))))\n");
    RunResult r = run("solve --cw-expr " + cwx + " --verify");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "class: expression-given"));
    CHECK(contains(r.out, "method: fpt-cw"));
    CHECK(contains(r.out, "preassign_size: 1"));
    CHECK(contains(r.out, "verified: unique"));
}

TEST_CASE("dispatch picks split for a two-leaf star and forest for a bigger path") {
    TempDir tmp;
    std::string star = tmp.file("star.g", "3 2\n1 2\n1 3\n");
    RunResult r = run("solve --graph " + star + " --verify");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "class: split"));
    CHECK(contains(r.out, "method: split"));
    CHECK(contains(r.out, "preassign_size: 0"));
    CHECK(contains(r.out, "verified: unique"));

    std::string tree = tmp.file("tree.g", "7 6\n1 2\n1 3\n2 4\n2 5\n3 6\n3 7\n");
    RunResult t = run("solve --graph " + tree + " --class forest --verify");
    CHECK(t.exit_code == 0);
    CHECK(contains(t.out, "class: forest"));
    CHECK(contains(t.out, "method: fpt-cw"));
    CHECK(contains(t.out, "verified: unique"));
}

TEST_CASE("classification honors recognizer verdicts") {
    TempDir tmp;
    std::string c4 = tmp.file("c4.g", "4 4\n1 2\n2 3\n3 4\n1 4\n");
    RunResult r = run("solve --graph " + c4);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "class: brute-fallback"));
    CHECK(contains(r.out, "method: brute"));

    std::string c5 = tmp.file("c5.g", "5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n");
    RunResult s = run("solve --graph " + c5);
    CHECK(s.exit_code == 0);
    CHECK(contains(s.out, "class: brute-fallback"));
}

TEST_CASE("forcing an inapplicable class exits 2; exhausted budgets exit 3") {
    TempDir tmp;
    std::string c4 = tmp.file("c4.g", "4 4\n1 2\n2 3\n3 4\n1 4\n");
    CHECK(run("solve --graph " + c4 + " --class split").exit_code == 2);
    CHECK(run("solve --graph " + c4 + " --class unit-interval").exit_code == 2);
    CHECK(run("solve --graph " + c4 + " --class forest").exit_code == 2);
    std::string c5 = tmp.file("c5.g", "5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n");
    CHECK(run("solve --graph " + c5 + " --budget 3").exit_code == 3);
}

TEST_CASE("agreeing methods report the same optimum size") {
    TempDir tmp;
    std::string p3 = tmp.file("p3.g", "3 2\n1 2\n2 3\n");
    std::vector<std::string> sizes;
    for (const char* cls : {"split", "unit-interval", "forest", "brute-fallback"}) {
        RunResult r = run("solve --graph " + p3 + " --class " + cls);
        CHECK(r.exit_code == 0);
        auto at = r.out.find("preassign_size: ");
        REQUIRE(at != std::string::npos);
        sizes.push_back(r.out.substr(at, r.out.find('\n', at) - at));
    }
    for (const auto& s : sizes) CHECK(s == sizes[0]);
}

TEST_CASE("verify subcommand counts and gates the exit code") {
    TempDir tmp;
    std::string p4 = tmp.file("p4.g", "4 3\n1 2\n2 3\n3 4\n");
    std::string pre_a = tmp.file("a.pre", "1\n");
    RunResult ok = run("verify --graph " + p4 + " --preassign " + pre_a);
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "count: 1"));
    CHECK(contains(ok.out, "witness: 1 3"));

    std::string k3 = tmp.file("k3.g", "3 3\n1 2\n2 3\n1 3\n");
    std::string pre_u = tmp.file("u.pre", "1\n");
    RunResult two = run("verify --graph " + k3 + " --preassign " + pre_u);
    CHECK(two.exit_code == 1);
    CHECK(contains(two.out, "count: 2+"));

    std::string pre_ab = tmp.file("ab.pre", "1 2\n");
    RunResult zero = run("verify --graph " + p4 + " --preassign " + pre_ab);
    CHECK(zero.exit_code == 1);
    CHECK(contains(zero.out, "count: 0"));
}

TEST_CASE("generate emits a vertex-deleted instance with a checkable certificate") {
    TempDir tmp;
    std::string p4 = tmp.file("p4.g", "4 3\n1 2\n2 3\n3 4\n");
    std::string prefix = tmp.path("out");
    RunResult r = run("generate --graph " + p4 + " --out " + prefix);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "output_verified: unique"));

    std::ifstream gf(prefix + ".graph");
    REQUIRE(gf.good());
    std::stringstream gbuf;
    gbuf << gf.rdbuf();
    Graph reduced = parse_graph(gbuf.str());
    CHECK(reduced.vertex_count() == 3);  // one vertex deleted from the 4-path

    RunResult check = run("verify --graph " + prefix + ".graph --preassign " + prefix + ".cert");
    CHECK(check.exit_code == 0);
    CHECK(contains(check.out, "count: 1"));
}

TEST_CASE("random instances are deterministic and land in their class") {
    TempDir tmp;
    RunResult t1 = run("random --family tree --n 5 --seed 1");
    RunResult t2 = run("random --family tree --n 5 --seed 1");
    CHECK(t1.exit_code == 0);
    CHECK(t1.out == t2.out);
    CHECK(is_forest(parse_graph(t1.out)));

    RunResult sp = run("random --family split --n 10 --seed 7");
    CHECK(recognize_split(parse_graph(sp.out)).has_value());

    RunResult ui = run("random --family unit-interval --n 10 --seed 7");
    IntervalRep rep = parse_intervals(ui.out);
    CHECK(recognize_unit_interval(intervals_to_graph(rep)).has_value());

    RunResult gnp = run("random --family gnp --n 6 --seed 3 --p 0.5");
    CHECK(parse_graph(gnp.out).vertex_count() == 6);
}

TEST_CASE("oracle subcommand runs the brute-force reference") {
    TempDir tmp;
    std::string k3 = tmp.file("k3.g", "3 3\n1 2\n2 3\n1 3\n");
    RunResult r = run("oracle --graph " + k3);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "method: brute"));
    CHECK(contains(r.out, "preassign_size: 2"));
}

TEST_CASE("tables subcommand dumps per-node rows") {
    TempDir tmp;
    std::string cwx = tmp.file("k2.cwx", "e(1,2,u(1(a),2(b)))\n");
    RunResult r = run("tables --cw-expr " + cwx);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "node 0 mu "));
    CHECK(contains(r.out, " beta "));
}

TEST_CASE("json reports carry the same fields") {
    TempDir tmp;
    std::string p4 = tmp.file("p4.g", "4 3\n1 2\n2 3\n3 4\n");
    RunResult r = run("solve --graph " + p4 + " --verify --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["preassign_size"] == 1);
    CHECK(j["min_vc_size"] == 2);
    CHECK(j["verified"] == "unique");
    CHECK(j["preassign"].is_array());
    CHECK(j["class"] == "split");
}

TEST_CASE("interval file input solves directly") {
    TempDir tmp;
    std::string iv = tmp.file("three.iv", "a 0\nb 0.5\nc 2\n");
    RunResult r = run("solve --intervals " + iv + " --verify");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "class: unit-interval"));
    CHECK(contains(r.out, "method: unit-interval"));
    CHECK(contains(r.out, "preassign_size: 1"));
    CHECK(contains(r.out, "verified: unique"));
    CHECK(run("solve --intervals " + iv + " --class split").exit_code == 2);
}

TEST_CASE("dump-tables and timing flags") {
    TempDir tmp;
    std::string cwx = tmp.file("k2.cwx", "e(1,2,u(1(a),2(b)))\n");
    RunResult r = run("solve --cw-expr " + cwx + " --dump-tables");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "node 0 mu "));
    CHECK(contains(r.out, "preassign_size: 1"));

    RunResult timed = run("solve --cw-expr " + cwx + " --timing");
    CHECK(contains(timed.out, "wall_ms: "));
    RunResult plain = run("solve --cw-expr " + cwx);
    CHECK(!contains(plain.out, "wall_ms"));
}

TEST_CASE("empty and DIMACS graphs solve") {
    TempDir tmp;
    std::string empty = tmp.file("empty.g", "0 0\n");
    RunResult r = run("solve --graph " + empty);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "preassign_size: 0"));
    CHECK(contains(r.out, "min_vc_size: 0"));

    std::string dimacs = tmp.file("k2.col", "c tiny\np edge 2 1\ne 1 2\n");
    RunResult d = run("solve --graph " + dimacs);
    CHECK(d.exit_code == 0);
    CHECK(contains(d.out, "preassign_size: 1"));

    std::string bad = tmp.file("bad.g", "1 1\n1 1\n");
    CHECK(run("solve --graph " + bad).exit_code == 1);
}

TEST_CASE("generate on a large split instance uses the structural check") {
    TempDir tmp;
    RunResult gen = run("random --family split --n 5000 --seed 9 --out " + tmp.path("big.g"));
    REQUIRE(gen.exit_code == 0);
    RunResult r = run("generate --graph " + tmp.path("big.g") + " --out " + tmp.path("big") +
                      " --seed 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "method: split"));
    CHECK(contains(r.out, "output_verified: structural"));
    std::ifstream cf(tmp.path("big.cert"));
    CHECK(cf.good());
}

TEST_CASE("a 5-path dispatches to the unit-interval solver") {
    TempDir tmp;
    std::string p5 = tmp.file("p5.g", "5 4\n1 2\n2 3\n3 4\n4 5\n");
    RunResult r = run("solve --graph " + p5 + " --verify");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "class: unit-interval"));
    CHECK(contains(r.out, "method: unit-interval"));
    CHECK(contains(r.out, "verified: unique"));
}

TEST_CASE("classify follows the fixed dispatch order") {
    using testutil::mk;
    CHECK(classify(mk(4, {{0, 1}, {0, 2}, {0, 3}})) == ClassTag::Split);  // star
    CHECK(classify(mk(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})) == ClassTag::UnitInterval);  // path
    // spider with three 2-paths: neither split nor unit interval, but a tree
    CHECK(classify(mk(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}})) == ClassTag::Forest);
    CHECK(classify(mk(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) == ClassTag::BruteFallback);  // C4
    CHECK(classify(mk(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})) ==
          ClassTag::BruteFallback);  // C5
}
