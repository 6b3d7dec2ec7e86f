#include <algorithm>
#include <stdexcept>

#include "plane.hpp"
#include "ptw/reductions.hpp"

namespace ptw {

using detail::Plane;

namespace {

std::string nm(const std::string& p, std::initializer_list<int> idx) {
    std::string s = p;
    bool first = true;
    for (int i : idx) {
        s += (first ? "" : "_") + std::to_string(i);
        first = false;
    }
    return s;
}

// column chosen for row r in set i, 0 if the row misses S_i
int cell(const HittingSetInstance& inst, int i, int r) {
    for (auto [rr, c] : inst.sets[i - 1])
        if (rr == r) return c;
    return 0;
}

}  // namespace

ReductionOutput reduce_hs_to_mdp(const HittingSetInstance& inst) {
    validate_hs(inst);
    int k = inst.k, m = static_cast<int>(inst.sets.size());
    ReductionOutput out;
    out.name = "hs-to-mdp";
    Plane pl(detail::Variant::Paths);
    std::map<std::string, int> id;
    std::vector<int> colour{0};
    auto add = [&](const std::string& name, double x, double y, int c = 0) {
        id[name] = pl.vertex({x, y}, name);
        colour.push_back(c);
        out.id_map.emplace_back(name, id[name]);
        return id[name];
    };
    auto has = [&](const std::string& name) { return id.count(name) > 0; };
    auto record = [&](const std::string& kind, const std::string& owner, int parent, std::vector<std::string> names) {
        GadgetRecord g;
        g.kind = kind;
        g.owner = owner;
        g.parent = parent;
        for (auto& s : names)
            if (has(s)) g.vertices.emplace_back(s, id[s]);
        pl.recs.push_back(g);
        return static_cast<int>(pl.recs.size()) - 1;
    };
    auto y = [](int r) { return -4.0 * r; };

    // colour-selection gadgets and the row paths
    for (int r = 1; r <= k; ++r) {
        add(nm("s", {r}), 0, y(r));
        std::vector<std::string> names{nm("s", {r})};
        for (int c = 1; c <= k; ++c) {
            double dy = k == 1 ? 0 : 1.5 - 3.0 * (c - 1) / (k - 1);
            add(nm("u", {r, c}), 2, y(r) + dy, c);
            names.push_back(nm("u", {r, c}));
        }
        for (int i = 0; i <= m; ++i) add(nm("v", {r, i}), 4 + 4 * i, y(r));
        add(nm("t", {r}), 6 + 4 * m, y(r));
        names.push_back(nm("v", {r, 0}));
        int rec = record("color-selection", nm("row", {r}), -1, names);
        pl.recs[rec].request = static_cast<int>(pl.requests.size());
        pl.requests.emplace_back(id[nm("s", {r})], id[nm("t", {r})]);
        for (int c = 1; c <= k; ++c) {
            pl.edge(id[nm("s", {r})], id[nm("u", {r, c})]);
            pl.edge(id[nm("u", {r, c})], id[nm("v", {r, 0})]);
        }
        pl.edge(id[nm("v", {r, m})], id[nm("t", {r})]);
    }
    // set gadgets
    for (int i = 1; i <= m; ++i) {
        double x0 = 4 + 4 * (i - 1);
        std::vector<std::string> names;
        for (int r = 1; r <= k; ++r) {
            int c = cell(inst, i, r);
            if (c) add(nm("a", {r, i}), x0 + 2, y(r), c);
            if (r > 1) add(nm("w", {r, i, 1}), x0 + 2, y(r) + 1);
            if (r < k) add(nm("w", {r, i, 2}), x0 + 2, y(r) - 1);
            for (auto s : {nm("a", {r, i}), nm("w", {r, i, 1}), nm("w", {r, i, 2})}) {
                if (!has(s)) continue;
                names.push_back(s);
                pl.edge(id[nm("v", {r, i - 1})], id[s]);
                pl.edge(id[s], id[nm("v", {r, i})]);
            }
        }
        for (int r = 1; r < k; ++r) {
            add(nm("s", {r, i}), x0 + 1.5, y(r) - 2);
            add(nm("t", {r, i}), x0 + 2.5, y(r) - 2);
            names.push_back(nm("s", {r, i}));
            names.push_back(nm("t", {r, i}));
        }
        int set = record("set", nm("set", {i}), -1, names);
        for (int r = 1; r < k; ++r) {
            int u = id[nm("w", {r, i, 2})], u2 = id[nm("w", {r + 1, i, 1})];
            int s = id[nm("s", {r, i})], t = id[nm("t", {r, i})];
            int e = record("expel", nm("set", {i}), set, {});
            pl.recs[e].vertices = {{"u", u}, {"u2", u2}, {"s", s}, {"t", t}};
            pl.recs[e].options = {{s, u, t}, {s, u2, t}};
            pl.recs[e].request = static_cast<int>(pl.requests.size());
            pl.requests.emplace_back(s, t);
            for (int x : {u, u2}) {
                pl.edge(s, x);
                pl.edge(t, x);
            }
        }
    }
    if (pl.crossings() != 0) throw std::logic_error("hs-to-mdp: drawing is not plane");
    pl.finish_asks();

    out.registry = pl.recs;
    out.instance.cg = ColoredGraph(pl.graph());
    out.instance.cg.colors = colour;
    out.instance.rotation = pl.rotation();
    out.instance.requests.pairs = pl.requests;

    // path decomposition: B_{0,r,c} ..., B_1, ..., B_{m+1}
    TreeDecomposition td;
    std::vector<int> base;
    for (int r = 1; r <= k; ++r) {
        base.push_back(id[nm("s", {r})]);
        base.push_back(id[nm("v", {r, 0})]);
    }
    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= k; ++c) {
            auto b = base;
            b.push_back(id[nm("u", {r, c})]);
            td.bags.push_back(b);
        }
    for (int i = 1; i <= m + 1; ++i) {
        std::vector<int> b;
        for (int r = 1; r <= k; ++r) {
            b.push_back(id[nm("v", {r, i - 1})]);
            if (i == m + 1) {
                b.push_back(id[nm("t", {r})]);
                continue;
            }
            b.push_back(id[nm("v", {r, i})]);
            for (auto s : {nm("a", {r, i}), nm("w", {r, i, 1}), nm("w", {r, i, 2}), nm("s", {r, i}), nm("t", {r, i})})
                if (has(s)) b.push_back(id[s]);
        }
        td.bags.push_back(b);
    }
    for (auto& b : td.bags) std::sort(b.begin(), b.end());
    for (int x = 0; x + 1 < static_cast<int>(td.bags.size()); ++x) td.tree_edges.emplace_back(x, x + 1);
    out.decomposition = td;
    return out;
}

std::vector<std::vector<int>> forward_hs_paths(const ReductionOutput& out, const HittingSetInstance& inst,
                                               const std::vector<int>& sel) {
    int k = inst.k, m = static_cast<int>(inst.sets.size());
    if (static_cast<int>(sel.size()) != k) throw std::invalid_argument("selection size differs from k");
    auto at = [&](const std::string& p, std::initializer_list<int> idx) { return out.id(nm(p, idx)); };
    std::vector<std::vector<int>> paths(out.instance.requests.size());
    std::vector<std::vector<int>> mid(k + 1, std::vector<int>(m + 1, 0));
    int req = k;
    for (int i = 1; i <= m; ++i) {
        int hit = 0;
        for (int r = 1; r <= k && !hit; ++r)
            if (cell(inst, i, r) == sel[r - 1]) hit = r;
        if (!hit) throw WitnessConflict("set " + std::to_string(i) + " is not hit");
        for (int r = 1; r <= k; ++r)
            mid[r][i] = r == hit ? at("a", {r, i}) : r < hit ? at("w", {r, i, 2}) : at("w", {r, i, 1});
        for (int r = 1; r < k; ++r) {
            int free = r < hit ? at("w", {r + 1, i, 1}) : at("w", {r, i, 2});
            paths[req++] = {at("s", {r, i}), free, at("t", {r, i})};
        }
    }
    for (int r = 1; r <= k; ++r) {
        auto& p = paths[r - 1];
        p = {at("s", {r}), at("u", {r, sel[r - 1]}), at("v", {r, 0})};
        for (int i = 1; i <= m; ++i) {
            p.push_back(mid[r][i]);
            p.push_back(at("v", {r, i}));
        }
        p.push_back(at("t", {r}));
    }
    return paths;
}

std::vector<int> backward_hs_paths(const ReductionOutput& out, const std::vector<std::vector<int>>& paths) {
    int k = 0;
    for (auto& r : out.registry)
        if (r.kind == "color-selection") ++k;
    std::vector<int> sel(k, 0);
    const auto& col = out.instance.cg.colors;
    for (int r = 0; r < k && r < static_cast<int>(paths.size()); ++r)
        for (int v : paths[r])
            if (col[v] != 0) {
                sel[r] = col[v];
                break;
            }
    return sel;
}

}  // namespace ptw
