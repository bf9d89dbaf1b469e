#pragma once

#include <optional>
#include <string_view>

#include "pauvc/graph.hpp"
#include "pauvc/solution.hpp"

namespace pauvc {

enum class ClassTag { Split, UnitInterval, Forest, ExpressionGiven, BruteFallback };

const char* class_name(ClassTag tag);
std::optional<ClassTag> class_from_name(std::string_view name);

/// First matching class in the fixed dispatch order: split, unit-interval,
/// forest, brute-fallback. Decisions come from the recognizers, not from
/// hand-coded rules about particular graphs.
ClassTag classify(const Graph& g);

struct SolveBudgets {
    std::int64_t exact = 64;   // exact counting / verification
    std::int64_t oracle = 16;  // brute-force fallback
    int max_k = 4;             // expression label budget
};

/// Dispatches to the solver for `forced` (or the classified tag). Forcing a
/// class whose recognition fails raises ClassError.
PreassignmentSolution solve_graph(const Graph& g, std::optional<ClassTag> forced = {},
                                  const SolveBudgets& budgets = {});

std::uint64_t fnv1a_digest(std::string_view bytes);

/// Everything a solve run reports. Field order in the rendered text is fixed;
/// wall time is only attached when timing was requested, so default reports
/// are byte-identical across runs.
struct RunReport {
    std::string input;
    std::uint64_t digest = 0;
    std::string class_tag;
    PreassignmentSolution solution;
    std::optional<int> verified_count;
    std::optional<double> wall_ms;
};

std::string render_report_text(const RunReport& r);
std::string render_report_json(const RunReport& r);

}  // namespace pauvc
