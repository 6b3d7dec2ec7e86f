#include <algorithm>
#include <array>
#include <stdexcept>

#include "plane.hpp"
#include "ptw/reductions.hpp"
#include "ptw_gadgets.hpp"

namespace ptw {

using detail::Affine;
using detail::Plane;
using detail::Pt;

namespace {

std::string pair_name(const char* p, int i, int j) { return std::string(p) + std::to_string(i) + "_" + std::to_string(j); }

// Two chained C gadgets split a vertex of degree 6 or 7 into three of degree <= 5.
void split_vertex(std::vector<std::vector<int>>& rot, int v, std::vector<GadgetRecord>& reg, const std::string& name) {
    auto e = rot[v];
    int d = static_cast<int>(e.size());
    int n = static_cast<int>(rot.size()) - 1;
    int x1 = v, x2 = n + 1, x3 = n + 2, a1 = n + 3, b1 = n + 4, a2 = n + 5, b2 = n + 6;
    rot.resize(n + 7);
    auto move = [&](int w, int to) { std::replace(rot[w].begin(), rot[w].end(), v, to); };
    rot[x1] = {a1, e[0], e[1], e[2], b1};
    rot[x2] = {a2, a1, b1};
    if (d == 7) {
        rot[x2].push_back(e[3]);
        move(e[3], x2);
    }
    rot[x2].push_back(b2);
    rot[x3] = {a2, b2};
    for (int i = d - 3; i < d; ++i) {
        rot[x3].push_back(e[i]);
        move(e[i], x3);
    }
    rot[a1] = {x1, b1, x2};
    rot[b1] = {x2, a1, x1};
    rot[a2] = {x2, b2, x3};
    rot[b2] = {x3, a2, x2};
    for (auto [p, q, t, b] : {std::array<int, 4>{x1, x2, a1, b1}, std::array<int, 4>{x2, x3, a2, b2}}) {
        GadgetRecord r;
        r.kind = "C";
        r.owner = "split:" + name;
        r.vertices = {{"u", p}, {"t", t}, {"b", b}, {"u2", q}};
        reg.push_back(r);
    }
}

}  // namespace

ReductionOutput reduce_3col_to_planar3col(const Graph& g) {
    int n = g.n();
    ReductionOutput out;
    out.name = "3col-to-planar3col";
    if (n == 0) {
        out.instance.rotation = RotationSystem{{{}}};
        return out;
    }
    Plane pl(detail::Variant::Plain);
    std::map<std::string, int> ids;
    auto port = [&](const std::string& nm, double x, double y) {
        ids[nm] = pl.vertex({x, y}, nm);
        out.id_map.emplace_back(nm, ids[nm]);
    };
    for (int i = 1; i <= n; ++i) port("u" + std::to_string(i), 6 * i, -6 * i);
    for (int i = 1; i <= n; ++i) port("v" + std::to_string(i), 3, -6 * i);
    for (int i = 1; i <= n; ++i) port("w" + std::to_string(i), 6 * i, -6 * n - 3);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            port(pair_name("alpha", i, j), 6 * i, -6 * j + 3);
            port(pair_name("beta", i, j), 6 * i + 3, -6 * j);
        }
    auto U = [&](int i) { return ids.at("u" + std::to_string(i)); };
    auto V = [&](int i) { return ids.at("v" + std::to_string(i)); };
    auto W = [&](int i) { return ids.at("w" + std::to_string(i)); };
    auto A = [&](int i, int j) { return ids.at(pair_name("alpha", i, j)); };
    auto B = [&](int i, int j) { return ids.at(pair_name("beta", i, j)); };
    const Affine left{{0, 0}, {-1, 0}, {0, -1}}, down{{0, 0}, {0, -1}, {1, 0}};
    for (int i = 1; i <= n; ++i) {
        Pt o = pl.points()[U(i)];
        Affine l = left, d = down;
        l.o = d.o = o;
        std::string own = "u" + std::to_string(i);
        pl.place(gadget_data::c, l, {{"u", U(i)}, {"u2", i == 1 ? V(1) : B(i - 1, i)}}, own);
        pl.place(gadget_data::c, d, {{"u", U(i)}, {"u2", i == n ? W(n) : A(i, i + 1)}}, own);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            pl.place(gadget_data::cc, Affine::shift(6 * i, -6 * j),
                     {{"u", A(i, j)}, {"u2", j == n ? W(i) : A(i, j + 1)}, {"v", i == 1 ? V(j) : B(i - 1, j)}, {"v2", B(i, j)}},
                     pair_name("cc", i, j));
    for (auto [i, j] : g.edges()) pl.edge(A(i, j), B(i, j));
    if (pl.crossings() != 0) throw std::logic_error("3col-to-planar3col: drawing is not plane");

    auto rs = pl.rotation();
    out.registry = pl.recs;
    int n0 = pl.n();
    for (int v = 1; v <= n0; ++v) {
        int d = static_cast<int>(rs.order[v].size());
        if (d == 6 || d == 7) split_vertex(rs.order, v, out.registry, pl.names()[v]);
    }
    std::vector<Edge> es;
    for (int v = 1; v < static_cast<int>(rs.order.size()); ++v)
        for (int w : rs.order[v])
            if (v < w) es.emplace_back(v, w);
    out.instance.cg = ColoredGraph(Graph(static_cast<int>(rs.order.size()) - 1, es));
    out.instance.rotation = rs;
    return out;
}

std::vector<int> forward_3col_planar(const ReductionOutput& out, const Graph& g, const std::vector<int>& col) {
    int n = g.n();
    const Graph& h = out.instance.cg.graph;
    if (n == 0) return std::vector<int>(h.n() + 1, 0);
    std::map<int, int> fixed;
    for (int i = 1; i <= n; ++i) {
        auto s = std::to_string(i);
        for (const char* p : {"u", "v", "w"}) fixed[out.id(p + s)] = col[i];
        for (int j = i + 1; j <= n; ++j) {
            fixed[out.id(pair_name("alpha", i, j))] = col[i];
            fixed[out.id(pair_name("beta", i, j))] = col[j];
        }
    }
    auto c = brute_3coloring(h, 60000, fixed);
    if (!c) throw WitnessConflict("colouring does not extend to the gadgets");
    return *c;
}

std::vector<int> backward_3col_planar(const ReductionOutput& out, const std::vector<int>& colh) {
    int n = 0;
    for (auto& [k, v] : out.id_map)
        if (k[0] == 'u') ++n;
    std::vector<int> col(n + 1, 0);
    for (int i = 1; i <= n; ++i) col[i] = colh[out.id("u" + std::to_string(i))];
    return col;
}

}  // namespace ptw
