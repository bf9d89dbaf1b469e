#include "pauvc/classify.hpp"

#include <sstream>

#include "json.hpp"
#include "pauvc/dp.hpp"
#include "pauvc/oracle.hpp"
#include "pauvc/split.hpp"
#include "pauvc/unit_interval.hpp"

namespace pauvc {

const char* class_name(ClassTag tag) {
    switch (tag) {
        case ClassTag::Split: return "split";
        case ClassTag::UnitInterval: return "unit-interval";
        case ClassTag::Forest: return "forest";
        case ClassTag::ExpressionGiven: return "expression-given";
        case ClassTag::BruteFallback: return "brute-fallback";
    }
    return "?";
}

std::optional<ClassTag> class_from_name(std::string_view name) {
    if (name == "split") return ClassTag::Split;
    if (name == "unit-interval") return ClassTag::UnitInterval;
    if (name == "forest") return ClassTag::Forest;
    if (name == "expression-given") return ClassTag::ExpressionGiven;
    if (name == "brute-fallback") return ClassTag::BruteFallback;
    return std::nullopt;
}

ClassTag classify(const Graph& g) {
    if (recognize_split(g)) return ClassTag::Split;
    if (recognize_unit_interval(g)) return ClassTag::UnitInterval;
    if (is_forest(g)) return ClassTag::Forest;
    return ClassTag::BruteFallback;
}

PreassignmentSolution solve_graph(const Graph& g, std::optional<ClassTag> forced,
                                  const SolveBudgets& budgets) {
    ClassTag tag = forced ? *forced : classify(g);
    switch (tag) {
        case ClassTag::Split:
            return solve_split(g);
        case ClassTag::UnitInterval: {
            auto rep = recognize_unit_interval(g);
            if (!rep) throw ClassError("graph is not a unit interval graph");
            return solve_unit_interval(*rep);
        }
        case ClassTag::Forest: {
            if (!is_forest(g)) throw ClassError("graph is not a forest");
            DpOptions opts;
            opts.max_k = budgets.max_k;
            return solve_cw(tree_to_cw_expr(g), opts);
        }
        case ClassTag::ExpressionGiven:
            throw ClassError("class 'expression-given' requires an expression input");
        case ClassTag::BruteFallback: {
            PreassignmentSolution sol;
            sol.method = Method::Brute;
            sol.preassign = pauvc_bruteforce(g, OracleBudget{budgets.oracle});
            sol.preassign_size = static_cast<std::int64_t>(sol.preassign.size());
            ExactBudget exact{std::max<std::int64_t>(budgets.exact, g.vertex_count())};
            VcVerdict verdict = verify_preassignment(g, sol.preassign, exact);
            if (verdict.num_min_vcs_capped != 1 || !verdict.unique_cover)
                throw std::logic_error("brute-force answer failed its own verification");
            sol.min_vc_size = *verdict.min_vc_size;
            sol.unique_cover = *verdict.unique_cover;
            return sol;
        }
    }
    throw std::logic_error("unreachable class tag");
}

std::uint64_t fnv1a_digest(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += " ";
        out += names[i];
    }
    return out;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 15];
        v >>= 4;
    }
    return out;
}

const char* verified_word(int count) {
    if (count == 0) return "none";
    if (count == 1) return "unique";
    return "multiple";
}

}  // namespace

std::string render_report_text(const RunReport& r) {
    std::ostringstream out;
    out << "input: " << r.input << "\n";
    out << "digest: " << hex64(r.digest) << "\n";
    out << "class: " << r.class_tag << "\n";
    out << "method: " << method_name(r.solution.method) << "\n";
    out << "preassign_size: " << r.solution.preassign_size << "\n";
    out << "preassign: " << join_names(r.solution.preassign) << "\n";
    out << "min_vc_size: " << r.solution.min_vc_size << "\n";
    out << "unique_cover: " << join_names(r.solution.unique_cover) << "\n";
    if (r.verified_count) out << "verified: " << verified_word(*r.verified_count) << "\n";
    if (r.wall_ms) out << "wall_ms: " << static_cast<long long>(*r.wall_ms) << "\n";
    return out.str();
}

std::string render_report_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["input"] = r.input;
    j["digest"] = hex64(r.digest);
    j["class"] = r.class_tag;
    j["method"] = method_name(r.solution.method);
    j["preassign_size"] = r.solution.preassign_size;
    j["preassign"] = r.solution.preassign;
    j["min_vc_size"] = r.solution.min_vc_size;
    j["unique_cover"] = r.solution.unique_cover;
    if (r.verified_count) j["verified"] = verified_word(*r.verified_count);
    if (r.wall_ms) j["wall_ms"] = static_cast<long long>(*r.wall_ms);
    return j.dump(2) + "\n";
}

}  // namespace pauvc
