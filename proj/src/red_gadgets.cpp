#include <algorithm>
#include <array>
#include <stdexcept>

#include "plane.hpp"
#include "ptw/reductions.hpp"
#include "ptw_gadgets.hpp"
#include "red_common.hpp"

namespace ptw {

using detail::Affine;
using detail::Plane;
using detail::Variant;

namespace {

using Triple = std::array<int, 3>;  // colour ports (a, b, c)

// Collects frames into one graph. Ports shared by two frames get the
// outer-face pieces of both rotations concatenated.
struct Assembler {
    explicit Assembler(ReductionOutput& o) : out(o) {}
    ReductionOutput& out;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rot{{}};
    std::vector<std::vector<std::vector<int>>> pieces{{}};
    std::vector<Edge> requests;

    int fresh() {
        rot.emplace_back();
        pieces.emplace_back();
        return static_cast<int>(rot.size()) - 1;
    }

    // ports: local id -> existing global id (or 0 for a new port vertex)
    std::vector<int> merge(const Plane& pl, std::map<int, int> ports) {
        std::vector<int> g(pl.n() + 1);
        for (int v = 1; v <= pl.n(); ++v) {
            auto it = ports.find(v);
            g[v] = (it != ports.end() && it->second > 0) ? it->second : fresh();
        }
        auto rs = pl.rotation();
        for (int v = 1; v <= pl.n(); ++v) {
            std::vector<int> lin = ports.count(v) ? pl.outer_linear(v) : rs.order[v];
            for (int& w : lin) w = g[w];
            if (ports.count(v))
                pieces[g[v]].push_back(lin);
            else
                rot[g[v]] = lin;
            for (int w : rs.order[v])
                if (v < w) edges.push_back(make_edge(g[v], g[w]));
        }
        int base = static_cast<int>(out.registry.size());
        int rbase = static_cast<int>(requests.size());
        for (auto r : pl.recs) {
            if (r.parent >= 0) r.parent += base;
            for (auto& [nm, v] : r.vertices) v = g[v];
            for (auto& o : r.options)
                for (int& v : o) v = g[v];
            if (r.request >= 0) r.request += rbase;
            out.registry.push_back(r);
        }
        for (auto [s, t] : pl.requests) requests.emplace_back(g[s], g[t]);
        for (auto& [e, path] : pl.routes) {
            std::vector<int> p;
            for (int v : path) p.push_back(g[v]);
            if (p.front() > p.back()) std::reverse(p.begin(), p.end());
            out.routes[make_edge(p.front(), p.back())] = p;
        }
        return g;
    }

    void finish() {
        int n = static_cast<int>(rot.size()) - 1;
        for (int v = 1; v <= n; ++v)
            if (!pieces[v].empty()) {
                rot[v].clear();
                for (auto& p : pieces[v]) rot[v].insert(rot[v].end(), p.begin(), p.end());
            }
        std::sort(edges.begin(), edges.end());
        out.instance.cg = ColoredGraph(Graph(n, edges));
        out.instance.rotation = RotationSystem{rot};
        out.instance.requests.pairs = requests;
    }
};

ReductionOutput build(const Graph& g, const RotationSystem& rs, Variant var) {
    if (g.max_degree() > 5) throw std::invalid_argument("degree > 5");
    try {
        check_rotation(g, rs);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("planarity certificate fails: ") + e.what());
    }
    if (!euler_check(g, rs).planar) throw std::invalid_argument("planarity certificate fails: rotation system is not planar");
    bool cyc = var == Variant::Cycles;
    const char* sc_t = cyc ? gadget_data::cp_sc : gadget_data::dp_sc;
    const char* bif_t = cyc ? gadget_data::cp_bifurcate : gadget_data::dp_bifurcate;
    const char* edge_t = cyc ? gadget_data::cp_edge : gadget_data::dp_edge;

    ReductionOutput out;
    out.name = cyc ? "planar3col-to-cycle-packing" : "planar3col-to-disjoint-paths";
    Assembler as(out);
    std::map<Edge, Triple> toward;  // (i, j) -> triple of v_i facing v_j
    for (int i = 1; i <= g.n(); ++i) {
        std::string own = "v" + std::to_string(i);
        int d = g.degree(i);
        Plane pl(var);
        auto sc = pl.place(sc_t, {}, {}, own);
        std::vector<Triple> tri;
        if (d == 1) tri.push_back({sc["a"], sc["b"], sc["c"]});
        if (d >= 2) {
            Triple cur{sc["a"], sc["b"], sc["c"]};
            std::vector<Triple> top;
            for (int k = 0; k + 1 < d; ++k) {
                auto b = pl.place(bif_t, Affine::shift(12 * k, -k), {{"xa", cur[0]}, {"xb", cur[1]}, {"xc", cur[2]}}, own);
                top.push_back({b["a1"], b["b1"], b["c1"]});
                cur = {b["a2"], b["b2"], b["c2"]};
            }
            // ccw from the east side
            tri.push_back(cur);
            tri.insert(tri.end(), top.rbegin(), top.rend());
        }
        pl.resolve();
        pl.finish_asks();
        std::map<int, int> ports;
        for (auto& t : tri)
            for (int v : t) ports[v] = 0;
        auto gid = as.merge(pl, ports);
        for (const char* c : {"a", "b", "c"}) out.id_map.emplace_back(own + "." + c, gid[sc[c]]);
        for (int k = 0; k < d; ++k) {
            int j = rs.order[i][k];
            toward[{i, j}] = {gid[tri[k][0]], gid[tri[k][1]], gid[tri[k][2]]};
        }
    }
    for (auto [i, j] : g.edges()) {
        std::string own = "e" + std::to_string(i) + "-" + std::to_string(j);
        Plane pl(var);
        auto e = pl.place(edge_t, {}, {}, own);
        pl.resolve();
        pl.finish_asks();
        auto ti = toward.at({i, j}), tj = toward.at({j, i});
        std::map<int, int> ports{{e["ai"], ti[0]}, {e["bi"], ti[1]}, {e["ci"], ti[2]},
                                 {e["aj"], tj[0]}, {e["bj"], tj[1]}, {e["cj"], tj[2]}};
        as.merge(pl, ports);
        for (const char* c : {"ai", "bi", "ci", "aj", "bj", "cj"}) out.id_map.emplace_back(own + "." + c, ports[e[c]]);
    }
    as.finish();
    for (auto& r : out.registry)
        if (detail::is_leaf(r)) ++out.l0;
    if (!cyc) out.l0 = 0;
    return out;
}

int sc_record(const ReductionOutput& out, int i) {
    std::string own = "v" + std::to_string(i);
    for (int r = 0; r < static_cast<int>(out.registry.size()); ++r)
        if (out.registry[r].kind == "SC" && out.registry[r].owner == own) return r;
    throw std::out_of_range("no SC gadget for " + own);
}

int vertex_of(const GadgetRecord& r, const std::string& nm) {
    for (auto& [k, v] : r.vertices)
        if (k == nm) return v;
    throw std::out_of_range("gadget vertex " + nm);
}

int source_n(const ReductionOutput& out) {
    int n = 0;
    for (auto& r : out.registry)
        if (r.kind == "SC") ++n;
    return n;
}

// colour read off the SC gadget: smallest colour port on the given vertex set
int read_colour(const GadgetRecord& sc, const std::vector<std::vector<int>>& sets) {
    for (int c = 0; c < 3; ++c) {
        int port = vertex_of(sc, std::string(1, static_cast<char>('a' + c)));
        for (auto& s : sets)
            if (std::find(s.begin(), s.end(), port) != s.end()) return c + 1;
    }
    return 0;
}

std::map<int, int> forced_sc(const ReductionOutput& out, const std::vector<int>& col) {
    std::map<int, int> forced;
    for (int i = 1; i <= source_n(out); ++i) {
        if (col.at(i) < 1 || col[i] > 3) throw std::invalid_argument("colour out of range");
        forced[sc_record(out, i)] = col[i] - 1;
    }
    return forced;
}

}  // namespace

ReductionOutput reduce_planar3col_to_cycle_packing(const Graph& g, const RotationSystem& rs) {
    return build(g, rs, Variant::Cycles);
}

ReductionOutput reduce_planar3col_to_disjoint_paths(const Graph& g, const RotationSystem& rs) {
    return build(g, rs, Variant::Paths);
}

std::vector<std::vector<int>> forward_cycle_packing(const ReductionOutput& out, const std::vector<int>& col) {
    auto pick = detail::greedy_leaves(out, forced_sc(out, col), true);
    std::vector<std::vector<int>> cycles;
    for (auto& p : pick)
        if (!p.empty()) cycles.push_back(p);
    return cycles;
}

std::vector<int> backward_cycle_packing(const ReductionOutput& out, const std::vector<std::vector<int>>& cycles) {
    int n = source_n(out);
    std::vector<int> col(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        auto& sc = out.registry[sc_record(out, i)];
        int u0 = vertex_of(sc, "u0");
        std::vector<std::vector<int>> own;
        for (auto& c : cycles)
            if (std::find(c.begin(), c.end(), u0) != c.end()) own.push_back(c);
        col[i] = read_colour(sc, own.empty() ? cycles : own);
    }
    return col;
}

std::vector<std::vector<int>> forward_disjoint_paths(const ReductionOutput& out, const std::vector<int>& col) {
    auto pick = detail::greedy_leaves(out, forced_sc(out, col), false);
    std::vector<std::vector<int>> paths(out.instance.requests.size());
    for (std::size_t r = 0; r < pick.size(); ++r)
        if (out.registry[r].request >= 0) paths[out.registry[r].request] = pick[r];
    return paths;
}

std::vector<int> backward_disjoint_paths(const ReductionOutput& out, const std::vector<std::vector<int>>& paths) {
    int n = source_n(out);
    std::vector<int> col(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        auto& sc = out.registry[sc_record(out, i)];
        if (sc.request < 0 || sc.request >= static_cast<int>(paths.size())) continue;
        col[i] = read_colour(sc, {paths[sc.request]});
    }
    return col;
}

}  // namespace ptw
