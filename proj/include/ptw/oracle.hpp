#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptw/graph.hpp"

namespace ptw {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Timeout : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleFamily {
    int count = 0;
    std::vector<std::vector<int>> cycles;
};

CycleFamily brute_cycle_packing(const Graph& g, int cap = 12);

struct PathSystem {
    bool found = false;
    std::vector<std::vector<int>> paths;  // path i runs s_i .. t_i
};

PathSystem brute_mono_disjoint_paths(const ColoredGraph& cg, const RequestSet& req, int cap = 40);

// coloring[v] in {1,2,3}; index 0 unused. fixed pre-assigns colours;
// without it the first vertex is pinned to colour 1.
std::optional<std::vector<int>> brute_3coloring(const Graph& g, long long timeout_ms = 60000,
                                                const std::map<int, int>& fixed = {});

struct HittingSetInstance {
    int k = 0;
    std::vector<std::vector<Edge>> sets;  // cells (row, column), 1-based
};

void validate_hs(const HittingSetInstance& inst);
HittingSetInstance parse_hs(const std::string& text);
std::string serialize_hs(const HittingSetInstance& inst);

// selection[r-1] = column picked in row r
std::optional<std::vector<int>> brute_hitting_set(const HittingSetInstance& inst, int cap = 6);

enum class WitnessKind { CyclePacking, DisjointPaths, MonoDisjointPaths, ThreeColoring, HittingSet };

struct Verdict {
    bool ok = true;
    std::string reason;  // machine-readable tag
    std::string detail;
};

Verdict verify_cycle_packing(const Graph& g, const std::vector<std::vector<int>>& cycles, int l0);
Verdict verify_paths(const ColoredGraph& cg, const RequestSet& req, const std::vector<std::vector<int>>& paths,
                     bool monochromatic);
Verdict verify_3coloring(const Graph& g, const std::vector<int>& coloring);
Verdict verify_hitting_set(const HittingSetInstance& inst, const std::vector<int>& selection);

}  // namespace ptw
