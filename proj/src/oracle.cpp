#include "ptw/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace ptw {

// ---------------------------------------------------------------- cycle packing

namespace {

struct CycleSearch {
    const Graph& g;
    std::vector<std::uint64_t> nb;  // neighbour masks, bit v-1
    std::unordered_map<std::uint64_t, int> memo;

    explicit CycleSearch(const Graph& graph) : g(graph), nb(graph.n() + 1, 0) {
        for (auto [u, v] : g.edges()) {
            nb[u] |= 1ull << (v - 1);
            nb[v] |= 1ull << (u - 1);
        }
    }

    // drop vertices that cannot lie on a cycle inside mask
    std::uint64_t core(std::uint64_t mask) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::uint64_t m = mask; m; m &= m - 1) {
                int v = std::countr_zero(m) + 1;
                if (std::popcount(nb[v] & mask) < 2) {
                    mask &= ~(1ull << (v - 1));
                    changed = true;
                }
            }
        }
        return mask;
    }

    // every cycle through s inside mask, once per orientation pair
    template <class F>
    void cycles_through(int s, std::uint64_t mask, F&& f) const {
        std::vector<int> path{s};
        std::function<void(int, std::uint64_t)> dfs = [&](int v, std::uint64_t used) {
            for (std::uint64_t m = nb[v] & mask; m; m &= m - 1) {
                int w = std::countr_zero(m) + 1;
                if (w == s && path.size() >= 3 && path[1] < path.back()) f(path, used);
                if (used >> (w - 1) & 1) continue;
                path.push_back(w);
                dfs(w, used | 1ull << (w - 1));
                path.pop_back();
            }
        };
        dfs(s, 1ull << (s - 1));
    }

    int best(std::uint64_t mask) {
        mask = core(mask);
        if (!mask) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int s = std::countr_zero(mask) + 1;
        int r = best(mask & ~(1ull << (s - 1)));
        cycles_through(s, mask, [&](const std::vector<int>&, std::uint64_t used) {
            if (r * 3 >= std::popcount(mask)) return;  // cannot improve
            r = std::max(r, 1 + best(mask & ~used));
        });
        memo[mask] = r;
        return r;
    }

    void rebuild(std::uint64_t mask, std::vector<std::vector<int>>& out) {
        mask = core(mask);
        if (!mask) return;
        int target = best(mask);
        if (target == 0) return;
        int s = std::countr_zero(mask) + 1;
        std::uint64_t rest = mask & ~(1ull << (s - 1));
        if (best(rest) == target) return rebuild(rest, out);
        std::vector<int> pick;
        std::uint64_t pick_used = 0;
        cycles_through(s, mask, [&](const std::vector<int>& path, std::uint64_t used) {
            if (!pick.empty()) return;
            if (1 + best(mask & ~used) == target) {
                pick = path;
                pick_used = used;
            }
        });
        out.push_back(pick);
        rebuild(mask & ~pick_used, out);
    }
};

}  // namespace

CycleFamily brute_cycle_packing(const Graph& g, int cap) {
    if (g.n() > cap || g.n() > 64) throw CapExceeded("cycle packing oracle: too many vertices");
    CycleSearch cs(g);
    std::uint64_t all = g.n() == 64 ? ~0ull : ((1ull << g.n()) - 1);
    CycleFamily fam;
    fam.count = cs.best(all);
    cs.rebuild(all, fam.cycles);
    return fam;
}

// ---------------------------------------------------------------- disjoint paths

PathSystem brute_mono_disjoint_paths(const ColoredGraph& cg, const RequestSet& req, int cap) {
    const Graph& g = cg.graph;
    if (g.n() > cap || req.size() > cap) throw CapExceeded("path oracle: instance above cap");
    int m = req.size();
    PathSystem res;
    std::vector<int> owner(g.n() + 1, -1);  // request owning a terminal
    for (int i = 0; i < m; ++i)
        for (int t : {req.pairs[i].first, req.pairs[i].second}) {
            if (owner[t] >= 0 && owner[t] != i) return res;
            owner[t] = i;
        }
    std::vector<char> used(g.n() + 1, 0);
    std::vector<std::vector<int>> paths(m);

    // every pending request still has a colour-blind route
    auto reachable = [&](int from) {
        for (int i = from; i < m; ++i) {
            auto [s, t] = req.pairs[i];
            std::vector<char> vis(g.n() + 1, 0);
            std::vector<int> st{s};
            vis[s] = 1;
            bool ok = false;
            while (!st.empty() && !ok) {
                int v = st.back();
                st.pop_back();
                for (int w : g.neighbors(v)) {
                    if (w == t) {
                        ok = true;
                        break;
                    }
                    if (vis[w] || used[w] || owner[w] >= 0) continue;
                    vis[w] = 1;
                    st.push_back(w);
                }
            }
            if (!ok) return false;
        }
        return true;
    };

    std::function<bool(int)> route = [&](int i) -> bool {
        if (i == m) return true;
        if (!reachable(i)) return false;
        auto [s, t] = req.pairs[i];
        std::vector<int> path{s};
        used[s] = used[t] = 1;
        std::function<bool(int, int)> dfs = [&](int v, int colour) -> bool {
            for (int w : g.neighbors(v)) {
                int cw = cg.colors[w];
                if (!compatible(colour, cw)) continue;
                int nc = colour ? colour : cw;
                if (w == t) {
                    path.push_back(t);
                    paths[i] = path;
                    if (route(i + 1)) return true;
                    path.pop_back();
                    continue;
                }
                if (used[w] || owner[w] >= 0) continue;
                used[w] = 1;
                path.push_back(w);
                if (dfs(w, nc)) return true;
                path.pop_back();
                used[w] = 0;
            }
            return false;
        };
        if (dfs(s, cg.colors[s])) return true;
        used[s] = used[t] = 0;
        return false;
    };
    if (route(0)) {
        res.found = true;
        res.paths = paths;
    }
    return res;
}

// ---------------------------------------------------------------- 3-colouring

std::optional<std::vector<int>> brute_3coloring(const Graph& g, long long timeout_ms, const std::map<int, int>& fixed) {
    int n = g.n();
    std::vector<int> col(n + 1, 0);
    std::vector<std::array<int, 4>> cnt(n + 1, {0, 0, 0, 0});
    auto mask = [&](int v) { return (cnt[v][1] > 0) + (cnt[v][2] > 0) + (cnt[v][3] > 0); };
    auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
    long long nodes = 0;

    auto assign = [&](int v, int c) {
        col[v] = c;
        bool ok = true;
        for (int w : g.neighbors(v)) {
            ++cnt[w][c];
            if (col[w] == c) ok = false;
            if (!col[w] && mask(w) == 3) ok = false;
        }
        return ok;
    };
    auto unassign = [&](int v) {
        for (int w : g.neighbors(v)) --cnt[w][col[v]];
        col[v] = 0;
    };
    for (auto [v, c] : fixed) {
        if (v < 1 || v > n || c < 1 || c > 3) throw std::invalid_argument("bad fixed colour");
        if (!assign(v, c)) return std::nullopt;
    }

    // Uncoloured vertices that no longer touch each other are solved
    // independently; a failed piece fails the whole branch.
    std::vector<int> trail, stamp(n + 1, 0);
    int epoch = 0;
    auto undo_to = [&](std::size_t mark) {
        while (trail.size() > mark) {
            unassign(trail.back());
            trail.pop_back();
        }
    };
    std::function<bool(const std::vector<int>&)> search = [&](const std::vector<int>& piece) -> bool {
        if (piece.empty()) return true;
        if ((++nodes & 1023) == 0 && std::chrono::steady_clock::now() > deadline)
            throw Timeout("3-colouring search timed out");
        ++epoch;
        for (int v : piece) stamp[v] = epoch;
        std::vector<std::vector<int>> comps;
        for (int s : piece) {
            if (stamp[s] != epoch) continue;
            comps.push_back({s});
            stamp[s] = -epoch;
            for (std::size_t q = 0; q < comps.back().size(); ++q)
                for (int w : g.neighbors(comps.back()[q]))
                    if (stamp[w] == epoch) {
                        stamp[w] = -epoch;
                        comps.back().push_back(w);
                    }
        }
        if (comps.size() > 1) {
            std::size_t mark = trail.size();
            for (auto& c : comps)
                if (!search(c)) {
                    undo_to(mark);
                    return false;
                }
            return true;
        }
        int best = -1, bs = -1, bd = -1;
        for (int v : piece) {
            int s = mask(v), d = g.degree(v);
            if (s > bs || (s == bs && d > bd)) {
                best = v;
                bs = s;
                bd = d;
            }
        }
        std::vector<int> rest;
        for (int v : piece)
            if (v != best) rest.push_back(v);
        // a piece with no coloured neighbour carries the colour symmetry
        int hi = bs == 0 ? 1 : 3;
        for (int c = 1; c <= hi; ++c) {
            if (cnt[best][c]) continue;
            std::size_t mark = trail.size();
            trail.push_back(best);
            if (assign(best, c) && search(rest)) return true;
            undo_to(mark);
        }
        return false;
    };
    std::vector<int> all;
    for (int v = 1; v <= n; ++v)
        if (!col[v]) all.push_back(v);
    if (!search(all)) return std::nullopt;
    return col;
}

// ---------------------------------------------------------------- hitting set

void validate_hs(const HittingSetInstance& inst) {
    if (inst.k < 1) throw std::invalid_argument("hitting set: k must be positive");
    for (auto& s : inst.sets) {
        std::set<int> rows;
        for (auto [r, c] : s) {
            if (r < 1 || r > inst.k || c < 1 || c > inst.k) throw std::invalid_argument("hitting set: cell out of range");
            if (!rows.insert(r).second) throw std::invalid_argument("hitting set: two cells of one row in a set");
        }
    }
}

HittingSetInstance parse_hs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0, m = -1;
    HittingSetInstance inst;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind[0] == '#') continue;
        if (kind == "p") {
            std::string what;
            if (!(ls >> what >> inst.k >> m) || what != "hs" || m < 0) throw ParseError(line_no, "expected 'p hs <k> <m>'");
        } else if (kind == "s") {
            if (m < 0) throw ParseError(line_no, "missing header");
            std::vector<Edge> set;
            int r, c;
            while (ls >> r) {
                if (!(ls >> c)) throw ParseError(line_no, "odd number of coordinates");
                set.emplace_back(r, c);
            }
            if (!ls.eof()) throw ParseError(line_no, "bad coordinate");
            std::sort(set.begin(), set.end());
            inst.sets.push_back(set);
        } else {
            throw ParseError(line_no, "unknown line type '" + kind + "'");
        }
    }
    if (m < 0) throw ParseError(line_no, "missing header");
    if (static_cast<int>(inst.sets.size()) != m) throw ParseError(line_no, "set count mismatch");
    try {
        validate_hs(inst);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
    return inst;
}

std::string serialize_hs(const HittingSetInstance& inst) {
    std::ostringstream os;
    os << "p hs " << inst.k << ' ' << inst.sets.size() << '\n';
    for (auto& s : inst.sets) {
        os << 's';
        for (auto [r, c] : s) os << ' ' << r << ' ' << c;
        os << '\n';
    }
    return os.str();
}

std::optional<std::vector<int>> brute_hitting_set(const HittingSetInstance& inst, int cap) {
    validate_hs(inst);
    if (inst.k > cap) throw CapExceeded("hitting set oracle: k above cap");
    int k = inst.k;
    std::vector<int> sel(k, 1);
    while (true) {
        if (verify_hitting_set(inst, sel).ok) return sel;
        int r = k - 1;
        while (r >= 0 && sel[r] == k) sel[r--] = 1;
        if (r < 0) return std::nullopt;
        ++sel[r];
    }
}

// ---------------------------------------------------------------- verifiers

namespace {
Verdict fail(const std::string& reason, const std::string& detail) { return {false, reason, detail}; }
}  // namespace

Verdict verify_cycle_packing(const Graph& g, const std::vector<std::vector<int>>& cycles, int l0) {
    std::vector<char> used(g.n() + 1, 0);
    for (size_t i = 0; i < cycles.size(); ++i) {
        const auto& c = cycles[i];
        if (c.size() < 3) return fail("not-a-cycle", "cycle " + std::to_string(i + 1) + " has fewer than 3 vertices");
        for (size_t j = 0; j < c.size(); ++j) {
            int v = c[j], w = c[(j + 1) % c.size()];
            if (v < 1 || v > g.n()) return fail("vertex-range", "vertex " + std::to_string(v));
            if (used[v]) return fail("disjointness", "vertex " + std::to_string(v) + " used twice");
            used[v] = 1;
            if (!g.has_edge(v, w))
                return fail("missing-edge", "edge " + std::to_string(v) + " " + std::to_string(w));
        }
    }
    if (static_cast<int>(cycles.size()) < l0)
        return fail("too-few-cycles", std::to_string(cycles.size()) + " < " + std::to_string(l0));
    return {};
}

Verdict verify_paths(const ColoredGraph& cg, const RequestSet& req, const std::vector<std::vector<int>>& paths,
                     bool monochromatic) {
    const Graph& g = cg.graph;
    if (static_cast<int>(paths.size()) != req.size())
        return fail("path-count", std::to_string(paths.size()) + " paths for " + std::to_string(req.size()) + " requests");
    std::vector<char> used(g.n() + 1, 0);
    for (int i = 0; i < req.size(); ++i) {
        const auto& p = paths[i];
        auto [s, t] = req.pairs[i];
        if (p.size() < 2) return fail("endpoints", "path " + std::to_string(i + 1) + " is too short");
        if (!((p.front() == s && p.back() == t) || (p.front() == t && p.back() == s)))
            return fail("endpoints", "path " + std::to_string(i + 1) + " does not join its request");
        int colour = 0;
        for (size_t j = 0; j < p.size(); ++j) {
            int v = p[j];
            if (v < 1 || v > g.n()) return fail("vertex-range", "vertex " + std::to_string(v));
            if (used[v]) return fail("disjointness", "vertex " + std::to_string(v) + " used twice");
            used[v] = 1;
            if (j + 1 < p.size() && !g.has_edge(v, p[j + 1]))
                return fail("missing-edge", "edge " + std::to_string(v) + " " + std::to_string(p[j + 1]));
            int c = cg.colors[v];
            if (monochromatic) {
                if (!compatible(colour, c))
                    return fail("monochromatic", "path " + std::to_string(i + 1) + " mixes colours " +
                                                     std::to_string(colour) + " and " + std::to_string(c));
                if (c) colour = c;
            }
        }
    }
    return {};
}

Verdict verify_3coloring(const Graph& g, const std::vector<int>& col) {
    if (static_cast<int>(col.size()) != g.n() + 1) return fail("size", "colouring does not cover the vertices");
    for (int v = 1; v <= g.n(); ++v)
        if (col[v] < 1 || col[v] > 3) return fail("colour-range", "vertex " + std::to_string(v));
    for (auto [u, v] : g.edges())
        if (col[u] == col[v]) return fail("conflict", "edge " + std::to_string(u) + " " + std::to_string(v));
    return {};
}

Verdict verify_hitting_set(const HittingSetInstance& inst, const std::vector<int>& sel) {
    if (static_cast<int>(sel.size()) != inst.k) return fail("size", "one column per row expected");
    for (int c : sel)
        if (c < 1 || c > inst.k) return fail("column-range", "column " + std::to_string(c));
    for (size_t i = 0; i < inst.sets.size(); ++i) {
        bool hit = false;
        for (auto [r, c] : inst.sets[i])
            if (sel[r - 1] == c) hit = true;
        if (!hit) return fail("unhit-set", "set " + std::to_string(i + 1));
    }
    return {};
}

}  // namespace ptw
