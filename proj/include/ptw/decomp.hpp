#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptw/graph.hpp"

namespace ptw {

// Tree nodes are 0-based internally and 1-based in files.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;  // sorted vertex lists
    std::vector<Edge> tree_edges;
    int width() const;
    bool is_path() const;
};

struct TdReport {
    bool ok = false;
    int width = -1;
    std::string violation;  // "tree", "vertex-coverage", "edge-coverage", "connectivity"
    std::string witness;
};

TdReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

struct BranchDecomposition {
    int nodes = 0;
    std::vector<Edge> tree_edges;
    std::vector<int> leaf_edge;  // per node: index into g.edges(), or -1 for internal nodes
};

// throws std::invalid_argument with a reason
void validate_branch_decomposition(const Graph& g, const BranchDecomposition& bd);

struct MiddleSets {
    std::vector<std::vector<int>> mid;  // parallel to bd.tree_edges
    int width = 0;
};

MiddleSets middle_sets(const Graph& g, const BranchDecomposition& bd);

// Rooted binary form used by the dynamic programs. Each non-root node
// stands for the tree edge to its parent.
struct RootedBranchDecomposition {
    struct Node {
        int parent = -1;
        std::vector<int> children;  // 0 (leaf), 1 (root r) or 2
        int graph_edge = -1;        // leaves only
        std::vector<int> mid;       // middle set of the edge to the parent
        int min_leaf = 0;           // smallest graph edge index below
    };
    std::vector<Node> nodes;
    int root = -1;  // r; its single child s has an empty middle set
    int width = 0;
    std::vector<int> postorder;  // children before parents, root last
};

RootedBranchDecomposition root_decomposition(const Graph& g, const BranchDecomposition& bd);

enum class BdStrategy { Caterpillar, FromTreeDecomposition };

TreeDecomposition min_fill_tree_decomposition(const Graph& g);
BranchDecomposition tree_to_branch_decomposition(const Graph& g, const TreeDecomposition& td);
BranchDecomposition build_branch_decomposition(const Graph& g, BdStrategy strategy);

struct WidthRelation {
    int bw = 0;
    int tw = 0;
    bool lower_holds = false;  // bw - 1 <= tw
    bool upper_holds = false;  // tw <= floor(3 bw / 2) - 1
    bool upper_asserted = false;  // false when bw <= 1: logged only
    bool ok() const { return lower_holds && (!upper_asserted || upper_holds); }
};

WidthRelation check_width_relation(const Graph& g, const BranchDecomposition& bd, const TreeDecomposition& td);

// Per rooted node: the cyclic order of mid along a noose if the edge is
// sc-ok, nothing otherwise. Root entry is always nothing.
std::vector<std::optional<std::vector<int>>> check_sc_candidate(const Graph& g, const RotationSystem& rs,
                                                                 const RootedBranchDecomposition& rbd);

std::string serialize_branch_decomposition(const Graph& g, const BranchDecomposition& bd);
BranchDecomposition parse_branch_decomposition(const Graph& g, const std::string& text);
std::string serialize_tree_decomposition(const TreeDecomposition& td);
TreeDecomposition parse_tree_decomposition(const std::string& text);

}  // namespace ptw
