#include "ptw/cycle_packing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "dp_table.hpp"

namespace ptw {

using detail::Entry;
using detail::Table;

namespace {

// Key layout: one byte per middle-set position.
//   0 untouched, 1 in X, 2+p path end paired with position p.
constexpr char kFree = 0, kInner = 1;

struct CpMerger {
    std::vector<int> map1, map2;  // child position -> union position
    std::vector<int> target;      // union position -> target position or -1
    int usize = 0;

    CpMerger(const std::vector<int>& mid1, const std::vector<int>& mid2, const std::vector<int>& mid) {
        std::vector<int> uni;
        std::set_union(mid1.begin(), mid1.end(), mid2.begin(), mid2.end(), std::back_inserter(uni));
        usize = static_cast<int>(uni.size());
        auto pos = [&](int v) { return static_cast<int>(std::lower_bound(uni.begin(), uni.end(), v) - uni.begin()); };
        for (int v : mid1) map1.push_back(pos(v));
        for (int v : mid2) map2.push_back(pos(v));
        target.assign(usize, -1);
        for (size_t i = 0; i < mid.size(); ++i) {
            int p = pos(mid[i]);
            if (p >= usize || uni[p] != mid[i]) throw std::logic_error("middle set not covered by its children");
            target[p] = static_cast<int>(i);
        }
    }

    // scratch
    mutable std::vector<int> deg, p1, p2;
    mutable std::vector<char> seen;

    bool merge(const std::string& k1, const std::string& k2, size_t out_size, std::string& out, int& closed) const {
        deg.assign(usize, 0);
        p1.assign(usize, -1);
        p2.assign(usize, -1);
        for (size_t i = 0; i < k1.size(); ++i) {
            int u = map1[i];
            char c = k1[i];
            if (c == kInner) deg[u] += 2;
            else if (c >= 2) {
                deg[u] += 1;
                p1[u] = map1[c - 2];
            }
        }
        for (size_t i = 0; i < k2.size(); ++i) {
            int u = map2[i];
            char c = k2[i];
            if (c == kInner) deg[u] += 2;
            else if (c >= 2) {
                deg[u] += 1;
                p2[u] = map2[c - 2];
            }
            if (deg[u] > 2) return false;
        }
        out.assign(out_size, kFree);
        seen.assign(usize, 0);
        closed = 0;
        // open paths: start at vertices with exactly one link
        for (int u = 0; u < usize; ++u) {
            if (seen[u] || deg[u] != 1) continue;
            int side = p1[u] >= 0 ? 1 : 2;
            int cur = u;
            seen[u] = 1;
            while (true) {
                int nxt = side == 1 ? p1[cur] : p2[cur];
                seen[nxt] = 1;
                int other = side == 1 ? p2[nxt] : p1[nxt];
                if (other < 0) {
                    cur = nxt;
                    break;
                }
                cur = nxt;
                side = 3 - side;
            }
            int a = target[u], b = target[cur];
            if (a < 0 || b < 0) return false;  // dangling end leaves the middle set
            out[a] = static_cast<char>(2 + b);
            out[b] = static_cast<char>(2 + a);
        }
        // what is left with links lies on closed cycles
        for (int u = 0; u < usize; ++u) {
            if (seen[u] || p1[u] < 0) continue;
            int cur = u, side = 1;
            do {
                seen[cur] = 1;
                cur = side == 1 ? p1[cur] : p2[cur];
                side = 3 - side;
            } while (cur != u);
            ++closed;
        }
        for (int u = 0; u < usize; ++u)
            if (deg[u] == 2 && target[u] >= 0) out[target[u]] = kInner;
        return true;
    }
};

bool key_crosses(const std::string& key, const std::vector<int>& cyc_pos) {
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < key.size(); ++i)
        if (key[i] >= 2 && static_cast<size_t>(key[i] - 2) > i) {
            int a = cyc_pos[i], b = cyc_pos[key[i] - 2];
            if (a > b) std::swap(a, b);
            pairs.emplace_back(a, b);
        }
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return true;
        }
    return false;
}

std::string encode(const CPState& s, const std::vector<int>& mid) {
    auto pos = [&](int v) {
        auto it = std::lower_bound(mid.begin(), mid.end(), v);
        if (it == mid.end() || *it != v) throw std::invalid_argument("state vertex outside its middle set");
        return static_cast<int>(it - mid.begin());
    };
    std::string k(mid.size(), kFree);
    for (int v : s.X) k[pos(v)] = kInner;
    for (auto [a, b] : s.M) {
        int pa = pos(a), pb = pos(b);
        if (k[pa] != kFree || k[pb] != kFree || pa == pb) throw std::invalid_argument("malformed state");
        k[pa] = static_cast<char>(2 + pb);
        k[pb] = static_cast<char>(2 + pa);
    }
    return k;
}

CPState decode(const std::string& k, const std::vector<int>& mid, int l) {
    CPState s;
    s.l = l;
    for (size_t i = 0; i < k.size(); ++i) {
        if (k[i] == kInner) s.X.push_back(mid[i]);
        else if (k[i] >= 2 && static_cast<size_t>(k[i] - 2) > i) s.M.push_back(make_edge(mid[i], mid[k[i] - 2]));
    }
    std::sort(s.M.begin(), s.M.end());
    return s;
}

std::vector<int> state_vertices(const CPState& s) {
    std::vector<int> v = s.X;
    for (auto [a, b] : s.M) {
        v.push_back(a);
        v.push_back(b);
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<std::vector<int>> cycles_from_edges(const Graph& g, const std::vector<int>& used) {
    std::vector<std::vector<int>> adj(g.n() + 1);
    for (int e : used) {
        auto [u, v] = g.edges()[e];
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(g.n() + 1, 0);
    std::vector<std::vector<int>> cycles;
    for (int s = 1; s <= g.n(); ++s) {
        if (seen[s] || adj[s].empty()) continue;
        if (adj[s].size() != 2) throw std::logic_error("witness edges do not form cycles");
        std::vector<int> cyc{s};
        seen[s] = 1;
        int prev = s, cur = std::min(adj[s][0], adj[s][1]);
        while (cur != s) {
            if (adj[cur].size() != 2) throw std::logic_error("witness edges do not form cycles");
            seen[cur] = 1;
            cyc.push_back(cur);
            int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

double cp_bound(int mid, int l0) { return std::pow(6.0, mid) * std::max(l0, 1); }

}  // namespace

std::vector<CPState> merge_cp_states(const CPState& s1, const CPState& s2, const std::vector<int>& mid_e, int l0) {
    auto m1 = state_vertices(s1), m2 = state_vertices(s2);
    std::vector<int> mid = mid_e;
    std::sort(mid.begin(), mid.end());
    // target vertices untouched by either side are still legal members
    std::vector<int> m2x = m2;
    for (int v : mid)
        if (!std::binary_search(m1.begin(), m1.end(), v) && !std::binary_search(m2.begin(), m2.end(), v)) m2x.push_back(v);
    std::sort(m2x.begin(), m2x.end());
    CPState s2x = s2;
    CpMerger mg(m1, m2x, mid);
    std::string out;
    int closed = 0;
    if (!mg.merge(encode(s1, m1), encode(s2x, m2x), mid.size(), out, closed)) return {};
    return {decode(out, mid, std::min(s1.l + s2.l + closed, l0))};
}

CpResult solve_cycle_packing(const Graph& g, int l0, const RootedBranchDecomposition& rbd, Prune prune,
                             const RotationSystem* rs, const DpOptions& opt) {
    if (l0 < 0) throw std::invalid_argument("l0 must be nonnegative");
    if (l0 > 120) throw std::invalid_argument("l0 too large for the table encoding");
    CpResult res;
    if (g.m() == 0) {
        res.decision = l0 == 0;
        return res;
    }
    int total = static_cast<int>(rbd.nodes.size());
    {
        int leaves = 0;
        for (auto& nd : rbd.nodes) leaves += nd.graph_edge >= 0;
        if (leaves != g.m() || rbd.root < 0) throw std::invalid_argument("decomposition does not match the graph");
    }
    std::vector<std::optional<std::vector<int>>> sc;
    if (prune == Prune::NonCrossing) {
        if (!rs) throw std::invalid_argument("noncrossing pruning needs an embedding");
        sc = check_sc_candidate(g, *rs, rbd);
    }
    std::vector<Table> tab(total);
    for (int x : rbd.postorder) {
        const auto& nd = rbd.nodes[x];
        if (x == rbd.root) break;
        const auto& mid = nd.mid;
        if (mid.size() > 120) throw std::invalid_argument("middle set too large");
        Table t;
        if (nd.children.empty()) {
            auto [u, v] = g.edges()[nd.graph_edge];
            t.push_back({std::string(mid.size(), kFree), Entry{0, 0, -1}});
            auto pu = std::lower_bound(mid.begin(), mid.end(), u);
            auto pv = std::lower_bound(mid.begin(), mid.end(), v);
            if (pu != mid.end() && *pu == u && pv != mid.end() && *pv == v) {
                std::string k(mid.size(), kFree);
                k[pu - mid.begin()] = static_cast<char>(2 + (pv - mid.begin()));
                k[pv - mid.begin()] = static_cast<char>(2 + (pu - mid.begin()));
                t.push_back({k, Entry{0, 1, -1}});
                std::sort(t.begin(), t.end(), [](auto& a, auto& b) { return a.first < b.first; });
            }
        } else {
            if (nd.children.size() != 2) throw std::invalid_argument("internal node without two children");
            int c1 = nd.children[0], c2 = nd.children[1];
            const Table& t1 = tab[c1];
            const Table& t2 = tab[c2];
            CpMerger proto(rbd.nodes[c1].mid, rbd.nodes[c2].mid, mid);
            t = detail::product_table(static_cast<int>(t1.size()), opt.workers, [&](int i, detail::Acc& acc) {
                CpMerger mg = proto;
                std::string out;
                int closed;
                for (size_t j = 0; j < t2.size(); ++j) {
                    if (!mg.merge(t1[i].first, t2[j].first, mid.size(), out, closed)) continue;
                    int l = std::min(t1[i].second.l + t2[j].second.l + closed, l0);
                    detail::offer(acc, out, Entry{l, i, static_cast<int>(j)});
                }
            });
        }
        if (prune == Prune::NonCrossing && sc[x] && !mid.empty()) {
            std::vector<int> cyc_pos(mid.size());
            for (size_t i = 0; i < sc[x]->size(); ++i) {
                int v = (*sc[x])[i];
                cyc_pos[std::lower_bound(mid.begin(), mid.end(), v) - mid.begin()] = static_cast<int>(i);
            }
            Table kept;
            for (auto& kv : t) {
                if (key_crosses(kv.first, cyc_pos)) ++res.pruned;
                else kept.push_back(kv);
            }
            t.swap(kept);
        }
        TableStat st{x, static_cast<int>(mid.size()), static_cast<long long>(t.size()), cp_bound(static_cast<int>(mid.size()), l0)};
        if (static_cast<double>(st.states) > st.bound) {
            ++res.bound_violations;
            if (opt.assert_table_bound) throw std::logic_error("cycle packing table exceeds 6^|mid| * l0");
        }
        res.tables.push_back(st);
        tab[x] = std::move(t);
    }
    int top = rbd.nodes[rbd.root].children.at(0);
    int idx = detail::find_key(tab[top], std::string());
    if (idx < 0) throw std::logic_error("root table lacks the empty state");
    res.best = tab[top][idx].second.l;
    res.decision = res.best >= l0;
    if (res.decision && l0 > 0) {
        std::vector<int> used;
        std::function<void(int, int)> collect = [&](int x, int i) {
            const auto& nd = rbd.nodes[x];
            const Entry& e = tab[x][i].second;
            if (nd.children.empty()) {
                if (e.a == 1) used.push_back(nd.graph_edge);
                return;
            }
            collect(nd.children[0], e.a);
            collect(nd.children[1], e.b);
        };
        collect(top, idx);
        auto cycles = cycles_from_edges(g, used);
        if (static_cast<int>(cycles.size()) < l0) throw std::logic_error("witness has too few cycles");
        cycles.resize(l0);
        res.cycles = std::move(cycles);
    }
    return res;
}

int max_cycle_packing_dp(const Graph& g, Prune prune, const RotationSystem* rs) {
    if (g.m() == 0) return 0;
    auto rbd = root_decomposition(g, build_branch_decomposition(g, BdStrategy::FromTreeDecomposition));
    return solve_cycle_packing(g, g.n() / 3, rbd, prune, rs).best;
}

}  // namespace ptw
