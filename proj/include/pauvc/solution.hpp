#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pauvc {

enum class Method { FptCw, FptNlc, UnitInterval, Split, Brute };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::FptCw: return "fpt-cw";
        case Method::FptNlc: return "fpt-nlc";
        case Method::UnitInterval: return "unit-interval";
        case Method::Split: return "split";
        case Method::Brute: return "brute";
    }
    return "?";
}

/// Answer to the uniquification problem: the smallest pre-assignment S such
/// that exactly one minimum vertex cover contains it, plus that cover.
struct PreassignmentSolution {
    std::vector<std::string> preassign;     // canonically sorted
    std::int64_t preassign_size = 0;
    std::int64_t min_vc_size = 0;
    std::vector<std::string> unique_cover;  // canonically sorted, size == min_vc_size
    Method method = Method::Brute;
};

}  // namespace pauvc
