#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptw/decomp.hpp"
#include "ptw/graph.hpp"
#include "ptw/oracle.hpp"

namespace ptw {

// One gadget instance. Leaf gadgets (SC, expel, double-expel) ask for one
// cycle or one request each; composites sum over their leaves.
struct GadgetRecord {
    std::string kind;
    std::string owner;  // "v3", "e1-2", "row2", ...
    int parent = -1;
    int asks = 0;
    std::vector<std::pair<std::string, int>> vertices;  // symbolic name -> id
    // logical cycles (CP) or s..t paths (DP); crossing edges expand via routes
    std::vector<std::vector<int>> options;
    int request = -1;  // 0-based, DP leaves only
};

struct ReductionOutput {
    std::string name;
    Instance instance;  // rotation always set
    int l0 = 0;         // cycle packing only
    std::vector<GadgetRecord> registry;
    std::vector<std::pair<std::string, int>> id_map;  // source object -> target id
    std::optional<TreeDecomposition> decomposition;   // hitting set only (a path)
    // drawn edge {a,b} (a<b) -> vertex path a..b through path-crossing gadgets
    std::map<Edge, std::vector<int>> routes;

    int id(const std::string& key) const;  // throws if missing
    std::string registry_jsonl() const;
    std::string id_map_text() const;
};

// raised by forward mappers when the gadget choices collide
struct WitnessConflict : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ReductionOutput reduce_3col_to_planar3col(const Graph& g);
ReductionOutput reduce_planar3col_to_cycle_packing(const Graph& g, const RotationSystem& rs);
ReductionOutput reduce_planar3col_to_disjoint_paths(const Graph& g, const RotationSystem& rs);
ReductionOutput reduce_hs_to_mdp(const HittingSetInstance& inst);

// colourings are 1-based vectors with values in {1,2,3}
std::vector<int> forward_3col_planar(const ReductionOutput& out, const Graph& g, const std::vector<int>& col);
std::vector<int> backward_3col_planar(const ReductionOutput& out, const std::vector<int>& colh);

std::vector<std::vector<int>> forward_cycle_packing(const ReductionOutput& out, const std::vector<int>& col);
std::vector<int> backward_cycle_packing(const ReductionOutput& out, const std::vector<std::vector<int>>& cycles);

std::vector<std::vector<int>> forward_disjoint_paths(const ReductionOutput& out, const std::vector<int>& col);
std::vector<int> backward_disjoint_paths(const ReductionOutput& out, const std::vector<std::vector<int>>& paths);

// sel[r-1] = chosen column of row r
std::vector<std::vector<int>> forward_hs_paths(const ReductionOutput& out, const HittingSetInstance& inst,
                                               const std::vector<int>& sel);
std::vector<int> backward_hs_paths(const ReductionOutput& out, const std::vector<std::vector<int>>& paths);

struct ReductionReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::pair<std::string, std::string>> facts;  // logged measurements
};

// checks: "planar", "degree", "size", "requests", "asks", "decomposition"
ReductionReport validate_reduction(const ReductionOutput& out, int source_n, const std::vector<std::string>& checks,
                                   int source_k = 0, int source_m = 0);

}  // namespace ptw
