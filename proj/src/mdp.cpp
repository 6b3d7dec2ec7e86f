#include "ptw/mdp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "dp_table.hpp"

namespace ptw {

using detail::Entry;
using detail::Table;

namespace {

// Key: four bytes per middle-set position
//   degree (0..2), kind, value, colour
// kind: none, partner end at position value, partner end is the
// forgotten terminal of request value, or a terminal whose path is done.
enum : unsigned char { kNone = 0, kPos = 1, kTok = 2, kDone = 3 };

struct Comp {
    int e1, e2;  // union index, or -(r+1) for a forgotten terminal of request r
    int color;
};

struct Raw {
    std::vector<int> deg;
    std::vector<char> done;
    std::vector<Comp> comps;
};

struct Boundary {
    std::vector<int> uni;     // sorted union of the child middle sets
    std::vector<int> target;  // union index -> position in the parent set, or -1
    size_t out_size = 0;

    Boundary(std::vector<int> u, const std::vector<int>& mid) : uni(std::move(u)), out_size(mid.size()) {
        target.assign(uni.size(), -1);
        for (size_t i = 0; i < mid.size(); ++i) {
            auto it = std::lower_bound(uni.begin(), uni.end(), mid[i]);
            if (it == uni.end() || *it != mid[i]) throw std::logic_error("middle set not covered by its children");
            target[it - uni.begin()] = static_cast<int>(i);
        }
    }
    int index(int v) const { return static_cast<int>(std::lower_bound(uni.begin(), uni.end(), v) - uni.begin()); }
};

// Close finished requests, forget vertices outside the parent set and
// encode. False when the partial solution can no longer be completed.
bool finalize(Raw& raw, const Boundary& b, const std::vector<int>& termreq, std::string& out) {
    int U = static_cast<int>(b.uni.size());
    auto req_of = [&](int e) { return e < 0 ? -e - 1 : termreq[b.uni[e]]; };
    std::vector<Comp> keep;
    for (auto& c : raw.comps) {
        int r1 = req_of(c.e1), r2 = req_of(c.e2);
        if (r1 >= 0 && r2 >= 0) {
            if (r1 != r2) return false;
            if (c.e1 >= 0) raw.done[c.e1] = 1;
            if (c.e2 >= 0) raw.done[c.e2] = 1;
            continue;
        }
        keep.push_back(c);
    }
    for (auto& c : keep)
        for (int* e : {&c.e1, &c.e2})
            if (*e >= 0 && b.target[*e] < 0) {
                int r = termreq[b.uni[*e]];
                if (r < 0) return false;  // an open end leaves the boundary
                *e = -(r + 1);
            }
    for (int u = 0; u < U; ++u)
        if (b.target[u] < 0 && raw.deg[u] == 0 && termreq[b.uni[u]] >= 0) return false;
    out.assign(b.out_size * 4, 0);
    for (int u = 0; u < U; ++u) {
        int t = b.target[u];
        if (t < 0) continue;
        out[4 * t] = static_cast<char>(raw.deg[u]);
        if (raw.done[u]) out[4 * t + 1] = static_cast<char>(kDone);
    }
    for (auto& c : keep) {
        auto put = [&](int e, int other) {
            if (e < 0) return;
            int t = b.target[e];
            if (other >= 0) {
                out[4 * t + 1] = static_cast<char>(kPos);
                out[4 * t + 2] = static_cast<char>(b.target[other]);
            } else {
                out[4 * t + 1] = static_cast<char>(kTok);
                out[4 * t + 2] = static_cast<char>(-other - 1);
            }
            out[4 * t + 3] = static_cast<char>(c.color);
        };
        put(c.e1, c.e2);
        put(c.e2, c.e1);
    }
    return true;
}

struct MdpMerger {
    const Boundary& b;
    const std::vector<int>& termreq;
    std::vector<int> map1, map2;

    MdpMerger(const Boundary& bb, const std::vector<int>& tr, const std::vector<int>& mid1, const std::vector<int>& mid2)
        : b(bb), termreq(tr) {
        for (int v : mid1) map1.push_back(b.index(v));
        for (int v : mid2) map2.push_back(b.index(v));
    }

    struct Half {
        int a, z, color;  // z < 0: token
    };

    bool merge(const std::string& k1, const std::string& k2, std::string& out) const {
        int U = static_cast<int>(b.uni.size());
        Raw raw;
        raw.deg.assign(U, 0);
        raw.done.assign(U, 0);
        std::vector<Half> edges;
        auto load = [&](const std::string& k, const std::vector<int>& mp) {
            for (size_t i = 0; i < mp.size(); ++i) {
                auto d = static_cast<unsigned char>(k[4 * i]);
                auto kind = static_cast<unsigned char>(k[4 * i + 1]);
                int val = static_cast<unsigned char>(k[4 * i + 2]);
                int col = static_cast<unsigned char>(k[4 * i + 3]);
                int u = mp[i];
                raw.deg[u] += d;
                if (raw.deg[u] > (termreq[b.uni[u]] >= 0 ? 1 : 2)) return false;
                if (kind == kDone) raw.done[u] = 1;
                else if (kind == kPos && static_cast<size_t>(val) > i) edges.push_back({u, mp[val], col});
                else if (kind == kTok) edges.push_back({u, -(val + 1), col});
            }
            return true;
        };
        if (!load(k1, map1) || !load(k2, map2)) return false;
        // glue halves through shared vertices
        std::vector<std::vector<int>> inc(U);
        for (size_t e = 0; e < edges.size(); ++e) {
            inc[edges[e].a].push_back(static_cast<int>(e));
            if (edges[e].z >= 0) inc[edges[e].z].push_back(static_cast<int>(e));
        }
        std::vector<char> used(edges.size(), 0);
        auto walk = [&](int from, int e) -> bool {
            int start = from >= 0 ? from : edges[e].z;
            int colour = 0;
            while (true) {
                used[e] = 1;
                if (!compatible(colour, edges[e].color)) return false;
                colour = std::max(colour, edges[e].color);
                int to = edges[e].a == from ? edges[e].z : edges[e].a;
                if (to < 0 || inc[to].size() == 1) {
                    raw.comps.push_back({start, to, colour});
                    return true;
                }
                e = inc[to][0] == e ? inc[to][1] : inc[to][0];
                from = to;
            }
        };
        for (size_t e = 0; e < edges.size(); ++e)
            if (!used[e] && edges[e].z < 0) {
                // enter from the token side
                if (!walk(edges[e].z, static_cast<int>(e))) return false;
            }
        for (int u = 0; u < U; ++u)
            if (inc[u].size() == 1 && !used[inc[u][0]])
                if (!walk(u, inc[u][0])) return false;
        for (char x : used)
            if (!x) return false;  // closed cycle
        return finalize(raw, b, termreq, out);
    }
};

std::vector<std::string> leaf_keys(const ColoredGraph& cg, const std::vector<int>& termreq, int x, int y,
                                   const std::vector<int>& mid, std::vector<int>* options) {
    Boundary b({std::min(x, y), std::max(x, y)}, mid);
    std::vector<std::string> keys;
    std::string out;
    Raw r0{{0, 0}, {0, 0}, {}};
    if (finalize(r0, b, termreq, out)) {
        keys.push_back(out);
        if (options) options->push_back(0);
    }
    int cx = cg.colors[x], cy = cg.colors[y];
    if (compatible(cx, cy)) {
        Raw r1{{1, 1}, {0, 0}, {{0, 1, std::max(cx, cy)}}};
        if (finalize(r1, b, termreq, out)) {
            keys.push_back(out);
            if (options) options->push_back(1);
        }
    }
    return keys;
}

MDPState to_paper_tuple(const std::string& k, const std::vector<int>& mid, const std::vector<int>& termreq,
                        const ColoredGraph& cg) {
    MDPState s;
    std::map<int, std::vector<int>> by_req;
    for (size_t i = 0; i < mid.size(); ++i) {
        int v = mid[i];
        auto d = static_cast<unsigned char>(k[4 * i]);
        auto kind = static_cast<unsigned char>(k[4 * i + 1]);
        int val = static_cast<unsigned char>(k[4 * i + 2]);
        int col = static_cast<unsigned char>(k[4 * i + 3]);
        if (d == 0) {
            if (termreq[v] >= 0) {
                by_req[termreq[v]].push_back(v);
                s.gamma0[v] = cg.colors[v];
            }
            continue;
        }
        if (d == 2 || kind == kDone || termreq[v] >= 0) {
            s.X.push_back(v);
            continue;
        }
        int other_req = kind == kTok ? val : termreq[mid[val]];
        if (other_req >= 0) {
            by_req[other_req].push_back(v);
            s.gamma0[v] = col;
        } else if (mid[val] > v) {
            s.L.push_back({v, mid[val]});
            s.gamma0[v] = s.gamma0[mid[val]] = col;
        }
    }
    for (auto& [r, vs] : by_req) {
        if (vs.size() == 2) {
            s.M.push_back(make_edge(vs[0], vs[1]));
        } else {
            s.P.push_back(vs[0]);
            s.phi[vs[0]] = r + 1;
        }
    }
    std::sort(s.P.begin(), s.P.end());
    std::sort(s.M.begin(), s.M.end());
    return s;
}

std::vector<int> terminal_map(const Graph& g, const RequestSet& req, bool* clash) {
    std::vector<int> termreq(g.n() + 1, -1);
    *clash = false;
    for (int i = 0; i < req.size(); ++i)
        for (int t : {req.pairs[i].first, req.pairs[i].second}) {
            if (t < 1 || t > g.n()) throw std::invalid_argument("request endpoint is not a vertex");
            if (termreq[t] >= 0 && termreq[t] != i) *clash = true;
            termreq[t] = i;
        }
    return termreq;
}

}  // namespace

std::vector<MDPState> mdp_leaf_states(const ColoredGraph& cg, const RequestSet& req, int x, int y,
                                      const std::vector<int>& mid) {
    bool clash;
    auto termreq = terminal_map(cg.graph, req, &clash);
    std::vector<MDPState> out;
    for (auto& k : leaf_keys(cg, termreq, x, y, mid, nullptr)) out.push_back(to_paper_tuple(k, mid, termreq, cg));
    return out;
}

MdpResult solve_mdp(const ColoredGraph& cg, const RequestSet& req, const RootedBranchDecomposition& rbd,
                    const DpOptions& opt) {
    const Graph& g = cg.graph;
    MdpResult res;
    if (req.size() > 250) throw std::invalid_argument("too many requests for the table encoding");
    int C = cg.max_color();
    if (C > 255) throw std::invalid_argument("colour out of range");
    bool clash;
    auto termreq = terminal_map(g, req, &clash);
    for (auto [s, t] : req.pairs)
        if (s == t) throw std::invalid_argument("request with s = t");
    if (req.size() == 0) {
        res.decision = true;
        return res;
    }
    if (clash) return res;
    for (auto [s, t] : req.pairs)
        if (g.degree(s) == 0 || g.degree(t) == 0) return res;
    {
        int leaves = 0;
        for (auto& nd : rbd.nodes) leaves += nd.graph_edge >= 0;
        if (leaves != g.m() || rbd.root < 0) throw std::invalid_argument("decomposition does not match the graph");
    }
    int total = static_cast<int>(rbd.nodes.size());
    std::vector<Table> tab(total);
    for (int x : rbd.postorder) {
        if (x == rbd.root) break;
        const auto& nd = rbd.nodes[x];
        const auto& mid = nd.mid;
        if (mid.size() > 255) throw std::invalid_argument("middle set too large");
        Table t;
        if (nd.children.empty()) {
            auto [u, v] = g.edges()[nd.graph_edge];
            std::vector<int> options;
            auto keys = leaf_keys(cg, termreq, u, v, mid, &options);
            detail::Acc acc;
            for (size_t i = 0; i < keys.size(); ++i) detail::offer(acc, keys[i], Entry{0, options[i], -1});
            t.assign(acc.begin(), acc.end());
        } else {
            if (nd.children.size() != 2) throw std::invalid_argument("internal node without two children");
            int c1 = nd.children[0], c2 = nd.children[1];
            const auto& m1 = rbd.nodes[c1].mid;
            const auto& m2 = rbd.nodes[c2].mid;
            std::vector<int> uni;
            std::set_union(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(uni));
            Boundary b(uni, mid);
            MdpMerger mg(b, termreq, m1, m2);
            const Table& t1 = tab[c1];
            const Table& t2 = tab[c2];
            t = detail::product_table(static_cast<int>(t1.size()), opt.workers, [&](int i, detail::Acc& acc) {
                std::string out;
                for (size_t j = 0; j < t2.size(); ++j)
                    if (mg.merge(t1[i].first, t2[j].first, out)) detail::offer(acc, out, Entry{0, i, static_cast<int>(j)});
            });
        }
        double k = static_cast<double>(mid.size());
        double bound = std::pow(5.0, k) * std::pow(C + 1.0, k) * (k > 0 ? std::pow(k, k) : 1.0);
        TableStat st{x, static_cast<int>(mid.size()), static_cast<long long>(t.size()), bound};
        if (static_cast<double>(st.states) > bound) ++res.bound_exceeded;
        res.tables.push_back(st);
        tab[x] = std::move(t);
    }
    int top = rbd.nodes[rbd.root].children.at(0);
    int idx = detail::find_key(tab[top], std::string());
    if (idx < 0) return res;
    res.decision = true;
    std::vector<std::vector<int>> adj(g.n() + 1);
    std::function<void(int, int)> collect = [&](int x, int i) {
        const auto& nd = rbd.nodes[x];
        const Entry& e = tab[x][i].second;
        if (nd.children.empty()) {
            if (e.a == 1) {
                auto [u, v] = g.edges()[nd.graph_edge];
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
            return;
        }
        collect(nd.children[0], e.a);
        collect(nd.children[1], e.b);
    };
    collect(top, idx);
    for (auto [s, t] : req.pairs) {
        std::vector<int> p{s};
        int prev = 0, cur = s;
        while (cur != t) {
            int nxt = 0;
            for (int w : adj[cur])
                if (w != prev) nxt = w;
            if (!nxt || p.size() > static_cast<size_t>(g.n())) throw std::logic_error("broken path witness");
            prev = cur;
            cur = nxt;
            p.push_back(cur);
        }
        res.paths.push_back(std::move(p));
    }
    return res;
}

MdpResult solve_disjoint_paths(const Graph& g, const RequestSet& req, const RootedBranchDecomposition& rbd,
                               const DpOptions& opt) {
    return solve_mdp(ColoredGraph(g), req, rbd, opt);
}

MdpResult solve_mdp_auto(const ColoredGraph& cg, const RequestSet& req, const DpOptions& opt) {
    if (cg.graph.m() == 0) {
        MdpResult r;
        r.decision = req.size() == 0;
        return r;
    }
    auto rbd = root_decomposition(cg.graph, build_branch_decomposition(cg.graph, BdStrategy::FromTreeDecomposition));
    return solve_mdp(cg, req, rbd, opt);
}

}  // namespace ptw
