#pragma once

#include <map>
#include <vector>

#include "ptw/cycle_packing.hpp"
#include "ptw/decomp.hpp"
#include "ptw/graph.hpp"

namespace ptw {

// (X, P, M, L, gamma0, phi) view of a boundary state
struct MDPState {
    std::vector<int> X;
    std::vector<int> P;
    std::vector<Edge> M;
    std::vector<Edge> L;
    std::map<int, int> gamma0;
    std::map<int, int> phi;  // request ids are 1-based
    bool operator==(const MDPState&) const = default;
};

struct MdpResult {
    bool decision = false;
    std::vector<std::vector<int>> paths;  // path i joins request i
    std::vector<TableStat> tables;
    long long bound_exceeded = 0;  // tables above 5^k (C+1)^k k^k, logged only
};

MdpResult solve_mdp(const ColoredGraph& cg, const RequestSet& req, const RootedBranchDecomposition& rbd,
                    const DpOptions& opt = {});
MdpResult solve_disjoint_paths(const Graph& g, const RequestSet& req, const RootedBranchDecomposition& rbd,
                               const DpOptions& opt = {});

// builds a decomposition from a min-fill tree decomposition
MdpResult solve_mdp_auto(const ColoredGraph& cg, const RequestSet& req, const DpOptions& opt = {});

// States of the leaf for edge {x,y} whose middle set is mid.
std::vector<MDPState> mdp_leaf_states(const ColoredGraph& cg, const RequestSet& req, int x, int y,
                                      const std::vector<int>& mid);

}  // namespace ptw
