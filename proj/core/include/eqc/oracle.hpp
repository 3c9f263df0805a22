#pragma once

#include <vector>

#include "eqc/gamma.hpp"
#include "eqc/graph.hpp"

namespace eqc {

// Hard ceiling for the exhaustive reference algorithms below; the tables
// they build are 2^n entries, so inputs above max_n are refused outright.
struct OracleLimit {
    Vertex max_n = 20;
};

struct OracleResult {
    std::uint64_t size = 0;
    std::vector<Vertex> witness; // lexicographically smallest optimum, sorted
};

// Maximum feasible set by checking all 2^n subsets against an edge-count
// table built in one DP pass. Ground truth for the iterative frameworks.
OracleResult brute_max_quasi_clique(const Graph& g, const Gamma& gamma,
                                    OracleLimit limit = {});

// Same enumeration for the largest set missing at most k edges.
OracleResult brute_max_defective_clique(const Graph& g, std::uint64_t k,
                                        OracleLimit limit = {});

} // namespace eqc
