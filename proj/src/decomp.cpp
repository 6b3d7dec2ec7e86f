#include "ptw/decomp.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ptw {

namespace {

// adjacency of a tree given by edges; throws if not a tree on n nodes
std::vector<std::vector<int>> tree_adjacency(int n, const std::vector<Edge>& edges, const char* what) {
    std::vector<std::vector<int>> adj(n);
    if (n == 0) throw std::invalid_argument(std::string(what) + ": empty tree");
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument(std::string(what) + ": tree needs nodes-1 edges");
    std::set<Edge> seen;
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b)
            throw std::invalid_argument(std::string(what) + ": bad tree edge");
        if (!seen.insert(make_edge(a, b)).second) throw std::invalid_argument(std::string(what) + ": repeated tree edge");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> vis(n, 0);
    std::vector<int> st{0};
    vis[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int y : adj[x])
            if (!vis[y]) {
                vis[y] = 1;
                ++cnt;
                st.push_back(y);
            }
    }
    if (cnt != n) throw std::invalid_argument(std::string(what) + ": tree is disconnected");
    return adj;
}

// mid set of the edge (x, parent[x]) for every non-root x
std::vector<std::vector<int>> mids_from_parents(const Graph& g, const std::vector<int>& parent,
                                                const std::vector<int>& leaf_edge, int root) {
    int N = static_cast<int>(parent.size());
    std::vector<std::vector<int>> mid(N);
    std::vector<std::vector<int>> leaves_of(g.n() + 1);
    for (int x = 0; x < N; ++x)
        if (leaf_edge[x] >= 0) {
            auto [u, v] = g.edges()[leaf_edge[x]];
            leaves_of[u].push_back(x);
            leaves_of[v].push_back(x);
        }
    std::vector<int> cnt(N, 0);
    std::vector<int> touched;
    for (int v = 1; v <= g.n(); ++v) {
        int total = static_cast<int>(leaves_of[v].size());
        if (total < 2) continue;
        for (int leaf : leaves_of[v])
            for (int x = leaf; x != -1; x = parent[x]) {
                if (cnt[x] == 0) touched.push_back(x);
                ++cnt[x];
            }
        for (int x : touched) {
            if (x != root && cnt[x] > 0 && cnt[x] < total) mid[x].push_back(v);
            cnt[x] = 0;
        }
        touched.clear();
    }
    return mid;
}

}  // namespace

// ---------------------------------------------------------------- tree decompositions

int TreeDecomposition::width() const {
    int w = -1;
    for (auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

bool TreeDecomposition::is_path() const {
    std::vector<int> deg(bags.size(), 0);
    for (auto [a, b] : tree_edges) {
        ++deg[a];
        ++deg[b];
    }
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
}

TdReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    TdReport r;
    int N = static_cast<int>(td.bags.size());
    std::vector<std::vector<int>> adj;
    try {
        adj = tree_adjacency(N, td.tree_edges, "tree decomposition");
    } catch (const std::invalid_argument& e) {
        r.violation = "tree";
        r.witness = e.what();
        return r;
    }
    std::vector<std::vector<int>> holders(g.n() + 1);
    for (int x = 0; x < N; ++x)
        for (int v : td.bags[x]) {
            if (v < 1 || v > g.n()) {
                r.violation = "vertex-coverage";
                r.witness = "bag " + std::to_string(x + 1) + " holds unknown vertex " + std::to_string(v);
                return r;
            }
            holders[v].push_back(x);
        }
    for (int v = 1; v <= g.n(); ++v)
        if (holders[v].empty()) {
            r.violation = "vertex-coverage";
            r.witness = "vertex " + std::to_string(v);
            return r;
        }
    std::vector<std::vector<char>> in(N);
    for (int x = 0; x < N; ++x) {
        in[x].assign(g.n() + 1, 0);
        for (int v : td.bags[x]) in[x][v] = 1;
    }
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (int x : holders[u])
            if (in[x][v]) ok = true;
        if (!ok) {
            r.violation = "edge-coverage";
            r.witness = "edge " + std::to_string(u) + " " + std::to_string(v);
            return r;
        }
    }
    for (int v = 1; v <= g.n(); ++v) {
        std::vector<char> vis(N, 0);
        std::vector<int> st{holders[v][0]};
        vis[holders[v][0]] = 1;
        size_t cnt = 1;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : adj[x])
                if (!vis[y] && in[y][v]) {
                    vis[y] = 1;
                    ++cnt;
                    st.push_back(y);
                }
        }
        if (cnt != holders[v].size()) {
            int far = -1;
            for (int x : holders[v])
                if (!vis[x]) far = x;
            r.violation = "connectivity";
            r.witness = "vertex " + std::to_string(v) + " in bags " + std::to_string(holders[v][0] + 1) + " and " +
                        std::to_string(far + 1) + " but not on the path between them";
            return r;
        }
    }
    r.ok = true;
    r.width = td.width();
    return r;
}

TreeDecomposition min_fill_tree_decomposition(const Graph& g) {
    int n = g.n();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    std::vector<std::set<int>> adj(n + 1);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    auto fill_of = [&](int v) {
        long long f = 0;
        for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
            for (auto b = std::next(a); b != adj[v].end(); ++b)
                if (!adj[*a].count(*b)) ++f;
        return f;
    };
    std::set<std::pair<long long, int>> pq;
    std::vector<long long> fill(n + 1);
    for (int v = 1; v <= n; ++v) pq.insert({fill[v] = fill_of(v), v});
    std::vector<int> pos(n + 1, -1), order;
    std::vector<std::vector<int>> nb(n + 1);
    while (!pq.empty()) {
        int v = pq.begin()->second;
        pq.erase(pq.begin());
        pos[v] = static_cast<int>(order.size());
        order.push_back(v);
        nb[v].assign(adj[v].begin(), adj[v].end());
        std::set<int> affected(adj[v].begin(), adj[v].end());
        for (size_t i = 0; i < nb[v].size(); ++i)
            for (size_t j = i + 1; j < nb[v].size(); ++j) {
                int a = nb[v][i], b = nb[v][j];
                if (adj[a].insert(b).second) {
                    adj[b].insert(a);
                    for (int c : adj[a]) affected.insert(c);
                    for (int c : adj[b]) affected.insert(c);
                }
            }
        for (int w : nb[v]) adj[w].erase(v);
        adj[v].clear();
        for (int w : nb[v])
            for (int c : adj[w]) affected.insert(c);
        affected.erase(v);
        for (int w : affected) {
            if (pos[w] >= 0) continue;
            pq.erase({fill[w], w});
            pq.insert({fill[w] = fill_of(w), w});
        }
    }
    // node i holds the bag of order[i]
    td.bags.resize(n);
    int prev_root = -1;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        auto bag = nb[v];
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags[i] = bag;
        int par = -1;
        for (int w : nb[v])
            if (par < 0 || pos[w] < par) par = pos[w];
        if (par >= 0) {
            td.tree_edges.emplace_back(i, par);
        } else {
            if (prev_root >= 0) td.tree_edges.emplace_back(prev_root, i);
            prev_root = i;
        }
    }
    return td;
}

// ---------------------------------------------------------------- branch decompositions

void validate_branch_decomposition(const Graph& g, const BranchDecomposition& bd) {
    if (g.m() == 0) throw std::invalid_argument("branch decomposition of an edgeless graph");
    if (static_cast<int>(bd.leaf_edge.size()) != bd.nodes) throw std::invalid_argument("leaf map size mismatch");
    auto adj = tree_adjacency(bd.nodes, bd.tree_edges, "branch decomposition");
    std::vector<char> hit(g.m(), 0);
    for (int x = 0; x < bd.nodes; ++x) {
        int d = static_cast<int>(adj[x].size());
        if (d <= 1) {
            int e = bd.leaf_edge[x];
            if (e < 0 || e >= g.m()) throw std::invalid_argument("leaf " + std::to_string(x + 1) + " has no graph edge");
            if (hit[e]) throw std::invalid_argument("leaf map is not injective");
            hit[e] = 1;
        } else {
            if (d != 3) throw std::invalid_argument("internal node " + std::to_string(x + 1) + " has degree " + std::to_string(d));
            if (bd.leaf_edge[x] >= 0) throw std::invalid_argument("internal node mapped to an edge");
        }
    }
    for (int e = 0; e < g.m(); ++e)
        if (!hit[e]) throw std::invalid_argument("leaf map misses a graph edge");
}

MiddleSets middle_sets(const Graph& g, const BranchDecomposition& bd) {
    validate_branch_decomposition(g, bd);
    auto adj = tree_adjacency(bd.nodes, bd.tree_edges, "branch decomposition");
    std::vector<int> parent(bd.nodes, -1);
    std::vector<char> vis(bd.nodes, 0);
    std::deque<int> q{0};
    vis[0] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : adj[x])
            if (!vis[y]) {
                vis[y] = 1;
                parent[y] = x;
                q.push_back(y);
            }
    }
    auto mid = mids_from_parents(g, parent, bd.leaf_edge, 0);
    MiddleSets ms;
    for (auto [a, b] : bd.tree_edges) {
        int child = parent[a] == b ? a : b;
        ms.mid.push_back(mid[child]);
        ms.width = std::max(ms.width, static_cast<int>(mid[child].size()));
    }
    return ms;
}

RootedBranchDecomposition root_decomposition(const Graph& g, const BranchDecomposition& bd) {
    validate_branch_decomposition(g, bd);
    auto adj = tree_adjacency(bd.nodes, bd.tree_edges, "branch decomposition");
    RootedBranchDecomposition r;
    int N = bd.nodes;
    int first = static_cast<int>(std::find(bd.leaf_edge.begin(), bd.leaf_edge.end(), 0) - bd.leaf_edge.begin());
    r.nodes.resize(N + 2);
    for (int x = 0; x < N; ++x) r.nodes[x].graph_edge = bd.leaf_edge[x];
    int s = N, root = N + 1;
    std::vector<int> parent(N + 2, -1);
    if (N == 1) {
        // nothing to subdivide: r sits directly above the only leaf
        r.nodes.resize(N + 1);
        parent.resize(N + 1);
        root = N;
        parent[0] = root;
    } else {
        int p = adj[first][0];
        parent[first] = s;
        parent[p] = s;
        parent[s] = root;
        std::vector<int> st{p};
        std::vector<char> vis(N, 0);
        vis[first] = vis[p] = 1;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : adj[x])
                if (!vis[y]) {
                    vis[y] = 1;
                    parent[y] = x;
                    st.push_back(y);
                }
        }
    }
    int total = static_cast<int>(r.nodes.size());
    r.root = root;
    for (int x = 0; x < total; ++x) {
        r.nodes[x].parent = parent[x];
        if (parent[x] >= 0) r.nodes[parent[x]].children.push_back(x);
    }
    // postorder and min_leaf, children sorted by smallest leaf below
    std::function<void(int)> dfs = [&](int x) {
        auto& nd = r.nodes[x];
        nd.min_leaf = nd.graph_edge >= 0 ? nd.graph_edge : g.m();
        for (int c : nd.children) {
            dfs(c);
            nd.min_leaf = std::min(nd.min_leaf, r.nodes[c].min_leaf);
        }
        std::sort(nd.children.begin(), nd.children.end(),
                  [&](int a, int b) { return r.nodes[a].min_leaf < r.nodes[b].min_leaf; });
        r.postorder.push_back(x);
    };
    dfs(root);
    std::vector<int> leaf_edge(total, -1);
    for (int x = 0; x < total; ++x) leaf_edge[x] = r.nodes[x].graph_edge;
    auto mid = mids_from_parents(g, parent, leaf_edge, root);
    for (int x = 0; x < total; ++x) {
        r.nodes[x].mid = std::move(mid[x]);
        r.width = std::max(r.width, static_cast<int>(r.nodes[x].mid.size()));
    }
    return r;
}

BranchDecomposition tree_to_branch_decomposition(const Graph& g, const TreeDecomposition& td) {
    if (g.m() == 0) throw std::invalid_argument("branch decomposition of an edgeless graph");
    int T = static_cast<int>(td.bags.size());
    int total = T + g.m();
    std::vector<std::set<int>> adj(total);
    for (auto [a, b] : td.tree_edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges()[e];
        int host = -1;
        for (int x = 0; x < T && host < 0; ++x)
            if (std::binary_search(td.bags[x].begin(), td.bags[x].end(), u) &&
                std::binary_search(td.bags[x].begin(), td.bags[x].end(), v))
                host = x;
        if (host < 0) throw std::invalid_argument("tree decomposition misses an edge");
        adj[host].insert(T + e);
        adj[T + e].insert(host);
    }
    std::vector<char> alive(total, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < T; ++x) {
            if (!alive[x]) continue;
            if (adj[x].size() <= 1) {
                for (int y : adj[x]) adj[y].erase(x);
                adj[x].clear();
                alive[x] = 0;
                changed = true;
            } else if (adj[x].size() == 2) {
                int a = *adj[x].begin(), b = *std::next(adj[x].begin());
                adj[a].erase(x);
                adj[b].erase(x);
                adj[a].insert(b);
                adj[b].insert(a);
                adj[x].clear();
                alive[x] = 0;
                changed = true;
            }
        }
    }
    // split high-degree nodes into chains of degree-3 nodes
    std::vector<std::set<int>> extra;
    for (int x = 0; x < T; ++x) {
        if (!alive[x] || adj[x].size() <= 3) continue;
        std::vector<int> nb(adj[x].begin(), adj[x].end());
        for (size_t i = 2; i < nb.size(); ++i) {
            adj[x].erase(nb[i]);
            adj[nb[i]].erase(x);
        }
        int cur = x;
        for (size_t i = 2; i < nb.size(); ++i) {
            if (i + 2 == nb.size()) {
                // last two neighbours go to one fresh node
                int z = static_cast<int>(adj.size());
                adj.emplace_back();
                alive.push_back(1);
                adj[cur].insert(z);
                adj[z].insert(cur);
                for (int y : {nb[i], nb[i + 1]}) {
                    adj[z].insert(y);
                    adj[y].insert(z);
                }
                break;
            }
            int z = static_cast<int>(adj.size());
            adj.emplace_back();
            alive.push_back(1);
            adj[cur].insert(z);
            adj[z].insert(cur);
            adj[z].insert(nb[i]);
            adj[nb[i]].insert(z);
            cur = z;
        }
    }
    std::vector<int> id(adj.size(), -1);
    BranchDecomposition bd;
    for (size_t x = 0; x < adj.size(); ++x)
        if (alive[x]) {
            id[x] = bd.nodes++;
            bd.leaf_edge.push_back(static_cast<int>(x) >= T && static_cast<int>(x) < total ? static_cast<int>(x) - T : -1);
        }
    for (size_t x = 0; x < adj.size(); ++x)
        if (alive[x])
            for (int y : adj[x])
                if (static_cast<int>(x) < y) bd.tree_edges.emplace_back(id[x], id[y]);
    return bd;
}

BranchDecomposition build_branch_decomposition(const Graph& g, BdStrategy strategy) {
    if (g.m() == 0) throw std::invalid_argument("branch decomposition of an edgeless graph");
    if (strategy == BdStrategy::FromTreeDecomposition) {
        auto bd = tree_to_branch_decomposition(g, min_fill_tree_decomposition(g));
        validate_branch_decomposition(g, bd);
        return bd;
    }
    // BFS edge order, then a caterpillar over it
    std::vector<int> order;
    std::vector<char> seen_v(g.n() + 1, 0), seen_e(g.m(), 0);
    for (int s = 1; s <= g.n(); ++s) {
        if (seen_v[s]) continue;
        std::deque<int> q{s};
        seen_v[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v)) {
                int e = g.edge_index(v, w);
                if (!seen_e[e]) {
                    seen_e[e] = 1;
                    order.push_back(e);
                }
                if (!seen_v[w]) {
                    seen_v[w] = 1;
                    q.push_back(w);
                }
            }
        }
    }
    int m = g.m();
    BranchDecomposition bd;
    if (m == 1) {
        bd.nodes = 1;
        bd.leaf_edge = {order[0]};
        return bd;
    }
    if (m == 2) {
        bd.nodes = 2;
        bd.leaf_edge = {order[0], order[1]};
        bd.tree_edges = {{0, 1}};
        return bd;
    }
    // leaves 0..m-1 in order, spine m..2m-3
    bd.nodes = 2 * m - 2;
    bd.leaf_edge.assign(bd.nodes, -1);
    for (int i = 0; i < m; ++i) bd.leaf_edge[i] = order[i];
    int spine = m - 2;
    for (int i = 0; i + 1 < spine; ++i) bd.tree_edges.emplace_back(m + i, m + i + 1);
    bd.tree_edges.emplace_back(0, m);
    for (int i = 1; i < m - 1; ++i) bd.tree_edges.emplace_back(i, m + i - 1);
    bd.tree_edges.emplace_back(m - 1, m + spine - 1);
    return bd;
}

WidthRelation check_width_relation(const Graph& g, const BranchDecomposition& bd, const TreeDecomposition& td) {
    if (g.m() < 3) throw std::invalid_argument("width relation needs at least 3 edges");
    WidthRelation w;
    w.bw = middle_sets(g, bd).width;
    w.tw = td.width();
    w.lower_holds = w.bw - 1 <= w.tw;
    w.upper_holds = w.tw <= (3 * w.bw) / 2 - 1;
    w.upper_asserted = w.bw >= 2;
    return w;
}

// ---------------------------------------------------------------- nooses

std::vector<std::optional<std::vector<int>>> check_sc_candidate(const Graph& g, const RotationSystem& rs,
                                                                 const RootedBranchDecomposition& rbd) {
    auto faces = trace_faces(g, rs);
    if (!euler_check(g, rs).planar) throw std::invalid_argument("embedding is not planar");
    std::map<Edge, int> dart_face;
    for (size_t f = 0; f < faces.size(); ++f)
        for (auto d : faces[f]) dart_face[d] = static_cast<int>(f);
    int total = static_cast<int>(rbd.nodes.size());
    if (total > 0) {
        int leaves = 0;
        for (auto& nd : rbd.nodes) leaves += nd.graph_edge >= 0;
        if (leaves != g.m()) throw std::invalid_argument("decomposition does not match the embedded graph");
    }
    bool connected = is_connected(g);

    // leaf intervals: edge e lies below x iff lo[x] <= rank[e] < hi[x]
    std::vector<int> lo(total), hi(total), rank(g.m(), -1);
    int counter = 0;
    for (int x : rbd.postorder) {
        auto& nd = rbd.nodes[x];
        if (nd.children.empty()) {
            lo[x] = counter;
            rank[nd.graph_edge] = counter++;
            hi[x] = counter;
        } else {
            lo[x] = lo[nd.children.front()];
            hi[x] = hi[nd.children.front()];
            for (int c : nd.children) {
                lo[x] = std::min(lo[x], lo[c]);
                hi[x] = std::max(hi[x], hi[c]);
            }
        }
    }

    std::vector<std::optional<std::vector<int>>> out(total);
    for (int x = 0; x < total; ++x) {
        if (x == rbd.root) continue;
        const auto& mid = rbd.nodes[x].mid;
        if (mid.empty()) {
            out[x] = std::vector<int>{};
            continue;
        }
        if (!connected) continue;
        auto below = [&](int u, int v) {
            int rk = rank[g.edge_index(u, v)];
            return lo[x] <= rk && rk < hi[x];
        };
        struct Corner {
            int v, f;
        };
        std::vector<Corner> corners;
        std::map<int, std::vector<int>> at_vertex, at_face;
        bool ok = true;
        for (int v : mid) {
            const auto& o = rs.order[v];
            int d = static_cast<int>(o.size());
            for (int i = 0; i < d && ok; ++i) {
                int w = o[i], u = o[(i + 1) % d];
                if (below(v, w) == below(v, u)) continue;
                int f = dart_face.at({u, v});
                int id = static_cast<int>(corners.size());
                corners.push_back({v, f});
                at_vertex[v].push_back(id);
                at_face[f].push_back(id);
            }
            if (at_vertex[v].size() != 2) ok = false;
        }
        for (auto& [f, cs] : at_face)
            if (cs.size() != 2) ok = false;
        if (!ok) continue;
        // walk the closed curve
        std::vector<int> cyc;
        std::set<int> visited;
        int c = at_vertex[mid[0]][0];
        int start = c;
        do {
            int v = corners[c].v;
            if (!visited.insert(v).second) {
                ok = false;
                break;
            }
            cyc.push_back(v);
            // leave v through its other corner, cross the face
            int c2 = at_vertex[v][0] == c ? at_vertex[v][1] : at_vertex[v][0];
            int f = corners[c2].f;
            c = at_face[f][0] == c2 ? at_face[f][1] : at_face[f][0];
        } while (c != start);
        if (ok && cyc.size() == mid.size()) out[x] = cyc;
    }
    return out;
}

// ---------------------------------------------------------------- file formats

std::string serialize_branch_decomposition(const Graph& g, const BranchDecomposition& bd) {
    std::ostringstream os;
    os << "p branchdec " << bd.nodes << ' ' << bd.tree_edges.size() << '\n';
    for (auto [a, b] : bd.tree_edges) os << "t " << a + 1 << ' ' << b + 1 << '\n';
    for (int x = 0; x < bd.nodes; ++x)
        if (bd.leaf_edge[x] >= 0) {
            auto [u, v] = g.edges()[bd.leaf_edge[x]];
            os << "l " << x + 1 << ' ' << u << ' ' << v << '\n';
        }
    return os.str();
}

BranchDecomposition parse_branch_decomposition(const Graph& g, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    BranchDecomposition bd;
    bool header = false;
    int declared_edges = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind[0] == '#') continue;
        if (kind == "p") {
            std::string what;
            if (!(ls >> what >> bd.nodes >> declared_edges) || what != "branchdec" || bd.nodes < 1)
                throw ParseError(line_no, "expected 'p branchdec <nodes> <edges>'");
            bd.leaf_edge.assign(bd.nodes, -1);
            header = true;
            continue;
        }
        if (!header) throw ParseError(line_no, "missing header");
        int a, b, c;
        if (kind == "t") {
            if (!(ls >> a >> b) || a < 1 || b < 1 || a > bd.nodes || b > bd.nodes) throw ParseError(line_no, "bad tree edge");
            bd.tree_edges.emplace_back(a - 1, b - 1);
        } else if (kind == "l") {
            if (!(ls >> a >> b >> c) || a < 1 || a > bd.nodes) throw ParseError(line_no, "bad leaf line");
            int e = g.edge_index(b, c);
            if (e < 0) throw ParseError(line_no, "leaf maps to a non-edge");
            bd.leaf_edge[a - 1] = e;
        } else {
            throw ParseError(line_no, "unknown line type '" + kind + "'");
        }
    }
    if (!header) throw ParseError(line_no, "missing header");
    if (static_cast<int>(bd.tree_edges.size()) != declared_edges) throw ParseError(line_no, "tree edge count mismatch");
    return bd;
}

std::string serialize_tree_decomposition(const TreeDecomposition& td) {
    std::ostringstream os;
    os << "p treedec " << td.bags.size() << ' ' << td.tree_edges.size() << '\n';
    for (size_t x = 0; x < td.bags.size(); ++x) {
        os << "b " << x + 1;
        for (int v : td.bags[x]) os << ' ' << v;
        os << '\n';
    }
    for (auto [a, b] : td.tree_edges) os << "t " << a + 1 << ' ' << b + 1 << '\n';
    return os.str();
}

TreeDecomposition parse_tree_decomposition(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    TreeDecomposition td;
    std::map<int, std::vector<int>> bags;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind[0] == '#' || kind == "p" || kind == "s" || kind == "c") continue;
        if (kind == "b") {
            int x, v;
            if (!(ls >> x) || x < 1) throw ParseError(line_no, "bad bag line");
            auto& bag = bags[x];
            while (ls >> v) bag.push_back(v);
            std::sort(bag.begin(), bag.end());
        } else if (kind == "t") {
            int a, b;
            if (!(ls >> a >> b) || a < 1 || b < 1) throw ParseError(line_no, "bad tree edge");
            edges.emplace_back(a - 1, b - 1);
        } else {
            throw ParseError(line_no, "unknown line type '" + kind + "'");
        }
    }
    int N = bags.empty() ? 0 : bags.rbegin()->first;
    td.bags.resize(N);
    for (auto& [x, b] : bags) td.bags[x - 1] = b;
    td.tree_edges = edges;
    return td;
}

}  // namespace ptw
