#pragma once

#include <optional>
#include <vector>

#include "ptw/decomp.hpp"
#include "ptw/graph.hpp"

namespace ptw {

enum class Prune { None, NonCrossing };

struct DpOptions {
    int workers = 1;
    bool assert_table_bound = false;  // throw on a violated size bound
};

struct TableStat {
    int node = 0;
    int mid_size = 0;
    long long states = 0;
    double bound = 0;  // the size bound this table is checked against
};

// (X, M, l) over a middle set
struct CPState {
    std::vector<int> X;  // sorted
    std::vector<Edge> M;  // normalized pairs, sorted
    int l = 0;
    bool operator==(const CPState&) const = default;
};

struct CpResult {
    bool decision = false;
    int best = 0;  // largest l reached at the root, capped at l0
    std::vector<std::vector<int>> cycles;  // witness when decision holds
    std::vector<TableStat> tables;
    long long pruned = 0;
    long long bound_violations = 0;
};

// Decides whether g has l0 vertex-disjoint cycles. rs is required for
// Prune::NonCrossing.
CpResult solve_cycle_packing(const Graph& g, int l0, const RootedBranchDecomposition& rbd, Prune prune = Prune::None,
                             const RotationSystem* rs = nullptr, const DpOptions& opt = {});

// Convenience: maximum packing size, decomposition built internally.
int max_cycle_packing_dp(const Graph& g, Prune prune = Prune::None, const RotationSystem* rs = nullptr);

// Combines two sibling states into the state they induce over mid_e.
// Empty when G[S1,S2] is undefined or leaves a dangling path end.
std::vector<CPState> merge_cp_states(const CPState& s1, const CPState& s2, const std::vector<int>& mid_e, int l0);

}  // namespace ptw
