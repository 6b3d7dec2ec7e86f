#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ptw {

using Edge = std::pair<int, int>;  // always stored with first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// Simple undirected graph on vertices 1..n.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n + 1) {}
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    // sorted lexicographically
    const std::vector<Edge>& edges() const { return edges_; }
    // sorted ascending
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;
    // index into edges(), -1 if absent
    int edge_index(int u, int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

struct ColoredGraph {
    Graph graph;
    std::vector<int> colors;  // size n+1, colors[0] unused

    ColoredGraph() = default;
    explicit ColoredGraph(Graph g) : graph(std::move(g)), colors(graph.n() + 1, 0) {}
    int color(int v) const { return colors[v]; }
    int max_color() const;
};

struct RequestSet {
    std::vector<Edge> pairs;  // (s_i, t_i) in input order, not normalized
    int size() const { return static_cast<int>(pairs.size()); }
};

// colour compatibility: 0 is a wildcard
inline bool compatible(int c1, int c2) { return c1 == 0 || c2 == 0 || c1 == c2; }

// Per-vertex counter-clockwise cyclic order of neighbours.
struct RotationSystem {
    std::vector<std::vector<int>> order;  // size n+1
    bool empty() const { return order.empty(); }
};

struct Instance {
    ColoredGraph cg;
    RequestSet requests;
    std::optional<RotationSystem> rotation;
};

Instance parse_instance(const std::string& text);
Instance read_instance_file(const std::string& path);
RotationSystem parse_rotation(const std::string& text, int n);
std::string serialize_instance(const Instance& inst);
std::string serialize_graph(const Graph& g);
std::string serialize_rotation(const RotationSystem& rs);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

// a_{i,j} has id (i-1)*k + j
Graph grid(int m, int k);
RotationSystem grid_rotation(int m, int k);

// Throws std::invalid_argument if rs does not match g's edges.
void check_rotation(const Graph& g, const RotationSystem& rs);

// Face tracing. A face is a list of darts (u,v); after (u,v) comes (v,w)
// with w the neighbour preceding u in v's ccw order.
std::vector<std::vector<Edge>> trace_faces(const Graph& g, const RotationSystem& rs);

struct EulerReport {
    int faces = 0;
    bool planar = false;
    int components = 0;
    std::vector<int> bad_components;  // component representatives failing V-E+F=2
};

EulerReport euler_check(const Graph& g, const RotationSystem& rs);

// component id per vertex (index 0 unused), ids from 0
std::vector<int> components(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

// Exhaustive search over rotation systems; returns one with V-E+F=2 per
// component, or nothing. Only for tiny graphs.
std::optional<RotationSystem> find_planar_rotation(const Graph& g, long long max_tries = 5'000'000);

struct PlanarSample {
    Graph graph;
    RotationSystem rotation;
};

// Random planar graph with embedding: a grid with random diagonals and
// random edge deletions, relabelled by a random permutation.
PlanarSample random_planar(int rows, int cols, std::uint64_t seed, double keep = 0.7);

// Remove a vertex set and renumber densely. id_map[old] = new id or 0.
Graph induced_subgraph(const Graph& g, const std::vector<char>& keep, std::vector<int>* id_map);

}  // namespace ptw
