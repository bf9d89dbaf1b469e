#pragma once

#include <cstdint>

#include "pauvc/graph.hpp"
#include "pauvc/unit_interval.hpp"

namespace pauvc {

/// Deterministic benchmark-instance generators: identical (family, n, seed)
/// inputs give byte-identical instances on every run.
Graph random_gnp(int n, std::uint64_t seed, double p);
Graph random_tree(int n, std::uint64_t seed);
Graph random_split_graph(int n, std::uint64_t seed);
IntervalRep random_unit_intervals(int n, std::uint64_t seed);

}  // namespace pauvc
