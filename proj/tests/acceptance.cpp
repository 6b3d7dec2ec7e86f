// One PASS/FAIL line per criterion. Pass criterion numbers to run a subset.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <unistd.h>

#include "plane.hpp"
#include "ptw/cycle_packing.hpp"
#include "ptw/decomp.hpp"
#include "ptw/mdp.hpp"
#include "ptw/noncross.hpp"
#include "ptw/oracle.hpp"
#include "ptw/reductions.hpp"

using namespace ptw;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;  // counts on success, first failure otherwise
    int fails = 0;

    void fail(const std::string& s) {
        if (fails++ == 0) note << "first failure: " << s << "; ";
        ok = false;
    }
};

// ------------------------------------------------------------ graph helpers

Graph from_mask(int n, std::uint32_t mask) {
    std::vector<Edge> e;
    int b = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v, ++b)
            if (mask >> b & 1) e.emplace_back(u, v);
    return Graph(n, e);
}

// smallest edge mask over all relabellings
std::uint32_t canonical(int n, std::uint32_t mask) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    int b = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++b)
            if (mask >> b & 1) adj[u][v] = adj[v][u] = 1;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::uint32_t best = UINT32_MAX;
    do {
        std::uint32_t m = 0;
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (adj[p[u]][p[v]]) m |= 1u << bit;
        best = std::min(best, m);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

// all graphs on n vertices up to isomorphism, grown one vertex at a time
std::vector<std::vector<std::uint32_t>> graph_classes(int max_n) {
    std::vector<std::vector<std::uint32_t>> out(max_n + 1);
    out[1] = {0};
    for (int n = 2; n <= max_n; ++n) {
        std::set<std::uint32_t> seen;
        for (std::uint32_t prev : out[n - 1]) {
            // re-index bits of the (n-1)-vertex mask into the n-vertex layout
            std::uint32_t base = 0;
            int b = 0;
            for (int u = 0; u < n - 1; ++u)
                for (int v = u + 1; v < n - 1; ++v, ++b)
                    if (prev >> b & 1) {
                        int nb = u * n - u * (u + 1) / 2 + (v - u - 1);
                        base |= 1u << nb;
                    }
            for (std::uint32_t nbr = 0; nbr < (1u << (n - 1)); ++nbr) {
                std::uint32_t m = base;
                for (int u = 0; u < n - 1; ++u)
                    if (nbr >> u & 1) m |= 1u << (u * n - u * (u + 1) / 2 + (n - 1 - u - 1));
                seen.insert(canonical(n, m));
            }
        }
        out[n].assign(seen.begin(), seen.end());
    }
    return out;
}

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// ------------------------------------------------------------ 1 and 4

struct CpStats {
    long long tables = 0, states = 0, violations = 0;
};

// truth < 0: ask the oracle
void check_cp(const Graph& g, const RotationSystem* rs, const std::string& tag, Outcome& o, CpStats& st,
              int truth = -1) {
    if (truth < 0) truth = brute_cycle_packing(g, 12).count;
    auto bd = build_branch_decomposition(g, BdStrategy::FromTreeDecomposition);
    auto rbd = root_decomposition(g, bd);
    DpOptions opt;
    opt.assert_table_bound = true;
    for (Prune p : {Prune::None, Prune::NonCrossing}) {
        if (p == Prune::NonCrossing && !rs) continue;
        std::string t = tag + (p == Prune::None ? "" : " noncrossing");
        try {
            int best = max_cycle_packing_dp(g, p, rs);
            if (best != truth)
                o.fail(t + ": dp max " + std::to_string(best) + " vs oracle " + std::to_string(truth));
            for (int l0 : {truth, truth + 1}) {
                auto r = solve_cycle_packing(g, l0, rbd, p, rs, opt);
                if (r.decision != (l0 <= truth)) o.fail(t + ": decision at l0=" + std::to_string(l0));
                if (r.decision && !verify_cycle_packing(g, r.cycles, l0).ok) o.fail(t + ": witness rejected");
                for (auto& s : r.tables) {
                    ++st.tables;
                    st.states += s.states;
                    if (static_cast<double>(s.states) > static_cast<double>(pow_ll(6, s.mid_size)) * std::max(l0, 1))
                        ++st.violations;
                }
                st.violations += r.bound_violations;
            }
        } catch (const std::exception& e) {
            ++st.violations;
            o.fail(t + ": " + e.what());
        }
    }
}

std::pair<int, int> planar_shape(std::uint64_t seed) {
    static const std::pair<int, int> shapes[] = {{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 2}};
    return shapes[seed % 5];
}

Outcome crit1() {
    Outcome o;
    CpStats st;
    auto classes = graph_classes(7);
    int graphs = 0;
    for (int n = 1; n <= 7; ++n)
        for (auto m : classes[n]) {
            Graph g = from_mask(n, m);
            if (!is_connected(g) || g.m() == 0) continue;
            ++graphs;
            check_cp(g, nullptr, "n=" + std::to_string(n) + " mask=" + std::to_string(m), o, st);
        }
    if (graphs != 995) o.fail("expected 995 connected graphs on 2..7 vertices, got " + std::to_string(graphs));
    int planar = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto [r, c] = planar_shape(seed);
        auto s = random_planar(r, c, seed, 0.8);
        if (s.graph.m() == 0) continue;
        ++planar;
        check_cp(s.graph, &s.rotation, "planar seed " + std::to_string(seed), o, st);
    }
    o.note << graphs << " connected graphs (2..7 vertices, up to isomorphism) and " << planar
           << " random planar graphs (n<=10) agree with the oracle";
    return o;
}

Outcome crit4() {
    Outcome o, sink;
    CpStats st;
    auto classes = graph_classes(6);
    for (int n = 2; n <= 6; ++n)
        for (auto m : classes[n]) {
            Graph g = from_mask(n, m);
            if (g.m() > 0) check_cp(g, nullptr, "", sink, st);
        }
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto [r, c] = planar_shape(seed);
        auto s = random_planar(r, c, seed, 0.8);
        if (s.graph.m() > 0) check_cp(s.graph, &s.rotation, "", sink, st);
    }
    for (int r = 2; r <= 4; ++r)
        for (int c = 2; c <= 5; ++c) {
            Graph g = grid(r, c);
            auto rs = grid_rotation(r, c);
            // past the oracle cap; the bound check only needs a reference maximum
            check_cp(g, &rs, "", sink, st, max_cycle_packing_dp(g));
        }
    if (st.violations) o.fail(std::to_string(st.violations) + " tables above 6^|mid| * max(l0,1)");
    o.note << st.tables << " tables, " << st.states << " states, " << st.violations << " bound violations";
    return o;
}

// ------------------------------------------------------------ 2

Outcome crit2() {
    Outcome o;
    std::mt19937_64 rng(2024);
    int yes = 0;
    for (int it = 0; it < 500; ++it) {
        int n = 2 + static_cast<int>(rng() % 7);
        int dens = 25 + static_cast<int>(rng() % 50);
        std::vector<Edge> e;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (static_cast<int>(rng() % 100) < dens) e.emplace_back(u, v);
        if (e.empty()) e.emplace_back(1, 2);
        ColoredGraph cg(Graph(n, e));
        for (int v = 1; v <= n; ++v) cg.colors[v] = static_cast<int>(rng() % 4);
        RequestSet req;
        int k = 1 + static_cast<int>(rng() % 3);
        while (static_cast<int>(req.pairs.size()) < k) {
            int s = 1 + static_cast<int>(rng() % n), t = 1 + static_cast<int>(rng() % n);
            if (s != t) req.pairs.emplace_back(s, t);
        }
        std::string tag = "instance " + std::to_string(it);
        try {
            auto dp = solve_mdp_auto(cg, req);
            auto bf = brute_mono_disjoint_paths(cg, req);
            if (dp.decision != bf.found) o.fail(tag + ": decision differs");
            if (dp.decision && !verify_paths(cg, req, dp.paths, true).ok) o.fail(tag + ": witness rejected");
            yes += dp.decision;
        } catch (const std::exception& ex) {
            o.fail(tag + ": " + ex.what());
        }
    }
    o.note << "500 instances, " << yes << " yes, " << o.fails << " mismatches";
    return o;
}

// ------------------------------------------------------------ 3

std::uint64_t binom_catalan(int k) {
    std::uint64_t c = 1;  // C(2k,k)/(k+1) by the product formula
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

bool partition_crosses(const Partition& p) {
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y)
            if (x != y)
                for (int a : p[x])
                    for (int c : p[x])
                        for (int b : p[y])
                            for (int d : p[y])
                                if (a < b && b < c && c < d) return true;
    return false;
}

Outcome crit3() {
    Outcome o;
    for (int k = 1; k <= 10; ++k) {
        std::set<Partition> want;
        // restricted growth strings
        std::vector<int> rgs(k, 0);
        std::function<void(int, int)> rec = [&](int i, int blocks) {
            if (i == k) {
                Partition p(blocks);
                for (int j = 0; j < k; ++j) p[rgs[j]].push_back(j + 1);
                bool nc = !partition_crosses(p);
                if (nc != is_noncrossing_partition(p)) o.fail("recognizer disagrees at k=" + std::to_string(k));
                if (nc) want.insert(p);
                return;
            }
            for (int b = 0; b <= blocks; ++b) {
                rgs[i] = b;
                rec(i + 1, std::max(blocks, b + 1));
            }
        };
        rec(0, 0);
        auto got = enumerate_noncrossing_partitions(k);
        std::set<Partition> gs(got.begin(), got.end());
        if (gs != want || got.size() != want.size()) o.fail("partitions differ at k=" + std::to_string(k));
        if (got.size() != binom_catalan(k) || got.size() > static_cast<std::size_t>(pow_ll(4, k)))
            o.fail("partition count at k=" + std::to_string(k));
    }
    for (int m = 1; m <= 8; ++m) {
        OrderedGround ground;
        for (int i = 1; i <= 2 * m; ++i) ground.push_back(i);
        std::set<Matching> want;
        Matching cur;
        std::vector<char> used(2 * m + 1, 0);
        std::function<void()> rec = [&]() {
            int a = 1;
            while (a <= 2 * m && used[a]) ++a;
            if (a > 2 * m) {
                bool nc = true;
                for (auto [p, q] : cur)
                    for (auto [r, s] : cur)
                        if (p < r && r < q && q < s) nc = false;
                if (nc != is_noncrossing_matching(cur, ground)) o.fail("matching recognizer disagrees");
                if (nc) {
                    auto s = cur;
                    std::sort(s.begin(), s.end());
                    want.insert(s);
                }
                return;
            }
            used[a] = 1;
            for (int b = a + 1; b <= 2 * m; ++b) {
                if (used[b]) continue;
                used[b] = 1;
                cur.emplace_back(a, b);
                rec();
                cur.pop_back();
                used[b] = 0;
            }
            used[a] = 0;
        };
        rec();
        auto got = enumerate_noncrossing_perfect_matchings(ground);
        std::set<Matching> gs;
        for (auto g : got) {
            std::sort(g.begin(), g.end());
            gs.insert(g);
        }
        if (gs != want || got.size() != want.size()) o.fail("matchings differ at m=" + std::to_string(m));
        if (got.size() != binom_catalan(m) || got.size() > static_cast<std::size_t>(pow_ll(2, 2 * m)))
            o.fail("matching count at m=" + std::to_string(m));
    }
    o.note << "partitions k<=10 and matchings m<=8 equal the filtered brute force; sizes are Catalan numbers";
    return o;
}

// ------------------------------------------------------------ 5 and 6

void check_hs(const HittingSetInstance& inst, const std::string& tag, Outcome& o, int& yes) {
    auto truth = brute_hitting_set(inst);
    auto out = reduce_hs_to_mdp(inst);
    const auto& cg = out.instance.cg;
    const auto& req = out.instance.requests;
    auto dp = solve_mdp_auto(cg, req);
    if (dp.decision != truth.has_value()) o.fail(tag + ": MDP decision differs from hitting set");
    if (dp.decision) {
        ++yes;
        if (!verify_paths(cg, req, dp.paths, true).ok) o.fail(tag + ": DP paths rejected");
        if (!verify_hitting_set(inst, backward_hs_paths(out, dp.paths)).ok) o.fail(tag + ": backward selection fails");
    }
    if (truth) {
        auto fw = forward_hs_paths(out, inst, *truth);
        if (!verify_paths(cg, req, fw, true).ok) o.fail(tag + ": forward paths rejected");
    }
}

std::vector<Edge> random_set(std::mt19937_64& rng, int k) {
    std::vector<Edge> s;
    for (int r = 1; r <= k; ++r) {
        int c = static_cast<int>(rng() % (k + 1));
        if (c) s.emplace_back(r, c);
    }
    return s;
}

Outcome crit5() {
    Outcome o;
    int yes = 0, count = 0;
    // k = 2: each set picks, per row, nothing or one of two columns
    std::vector<std::vector<Edge>> sets;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            std::vector<Edge> s;
            if (a) s.emplace_back(1, a);
            if (b) s.emplace_back(2, b);
            sets.push_back(s);
        }
    std::vector<HittingSetInstance> all{{2, {}}};
    for (std::size_t i = 0; i < sets.size(); ++i) {
        all.push_back({2, {sets[i]}});
        for (std::size_t j = i + 1; j < sets.size(); ++j) all.push_back({2, {sets[i], sets[j]}});
    }
    for (auto& inst : all) check_hs(inst, "k=2 #" + std::to_string(count++), o, yes);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 50; ++it) {
        HittingSetInstance inst{3, {}};
        int m = static_cast<int>(rng() % 3);
        for (int i = 0; i < m; ++i) inst.sets.push_back(random_set(rng, 3));
        check_hs(inst, "k=3 seed " + std::to_string(it), o, yes);
        ++count;
    }
    o.note << count << " instances (" << all.size() << " exhaustive with k=2, 50 with k=3), " << yes << " yes, "
           << o.fails << " mismatches";
    return o;
}

Outcome crit6() {
    Outcome o;
    std::mt19937_64 rng(6);
    int count = 0, worst = 0;
    for (int k = 1; k <= 5; ++k)
        for (int m = 0; m <= 5; ++m)
            for (int rep = 0; rep < 3; ++rep) {
                HittingSetInstance inst{k, {}};
                for (int i = 0; i < m; ++i) inst.sets.push_back(random_set(rng, k));
                auto out = reduce_hs_to_mdp(inst);
                ++count;
                std::string tag = "k=" + std::to_string(k) + " m=" + std::to_string(m);
                if (out.instance.requests.size() != k + (k - 1) * m) o.fail(tag + ": request count");
                if (!out.decomposition) {
                    o.fail(tag + ": no decomposition");
                    continue;
                }
                auto td = validate_tree_decomposition(out.instance.cg.graph, *out.decomposition);
                if (!td.ok) o.fail(tag + ": decomposition invalid (" + td.violation + ")");
                if (!out.decomposition->is_path()) o.fail(tag + ": decomposition is not a path");
                if (td.width + 1 > 2 * (k - 1) + 5 * k - 2) o.fail(tag + ": bag of size " + std::to_string(td.width + 1));
                worst = std::max(worst, td.width + 1 - (7 * k - 4));
            }
    o.note << count << " reductions with k<=5, m<=5; largest bag minus bound = " << worst;
    return o;
}

// ------------------------------------------------------------ 7

Outcome crit7() {
    Outcome o;
    auto classes = graph_classes(4);
    int count = 0, yes = 0;
    long long slowest = 0;
    for (int n = 1; n <= 4; ++n)
        for (auto mask : classes[n]) {
            Graph g = from_mask(n, mask);
            std::string tag = "n=" + std::to_string(n) + " mask=" + std::to_string(mask);
            ++count;
            auto out = reduce_3col_to_planar3col(g);
            const Graph& h = out.instance.cg.graph;
            if (h.max_degree() > 5) o.fail(tag + ": degree " + std::to_string(h.max_degree()));
            if (h.n() > 65 * n * n) o.fail(tag + ": |V(H)| = " + std::to_string(h.n()));
            auto t0 = std::chrono::steady_clock::now();
            try {
                auto cg = brute_3coloring(g);
                auto ch = brute_3coloring(h, 60000);
                if (cg.has_value() != ch.has_value()) o.fail(tag + ": 3-colourability differs");
                if (ch && !verify_3coloring(g, backward_3col_planar(out, *ch)).ok) o.fail(tag + ": backward colouring");
                if (cg && !verify_3coloring(h, forward_3col_planar(out, g, *cg)).ok) o.fail(tag + ": forward colouring");
                yes += cg.has_value();
            } catch (const Timeout&) {
                o.fail(tag + ": oracle timed out after 60 s");
            }
            slowest = std::max<long long>(
                slowest,
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
        }
    o.note << count << " graphs (n<=4, up to isomorphism), " << yes << " 3-colourable, slowest oracle run " << slowest
           << " ms";
    return o;
}

// ------------------------------------------------------------ 8

void forward_suite(const Graph& g, const RotationSystem& rs, const std::string& tag, Outcome& o, int& runs) {
    auto cp = reduce_planar3col_to_cycle_packing(g, rs);
    auto dp = reduce_planar3col_to_disjoint_paths(g, rs);
    std::vector<int> col(g.n() + 1, 1);
    int total = 1;
    for (int v = 1; v <= g.n(); ++v) total *= 3;
    for (int code = 0; code < total; ++code) {
        for (int v = 1, x = code; v <= g.n(); ++v, x /= 3) col[v] = 1 + x % 3;
        if (!verify_3coloring(g, col).ok) continue;
        ++runs;
        auto cyc = forward_cycle_packing(cp, col);
        if (static_cast<int>(cyc.size()) != cp.l0 || !verify_cycle_packing(cp.instance.cg.graph, cyc, cp.l0).ok)
            o.fail(tag + ": forward cycles");
        if (!verify_3coloring(g, backward_cycle_packing(cp, cyc)).ok) o.fail(tag + ": backward from cycles");
        auto paths = forward_disjoint_paths(dp, col);
        if (!verify_paths(dp.instance.cg, dp.instance.requests, paths, false).ok) o.fail(tag + ": forward paths");
        if (!verify_3coloring(g, backward_disjoint_paths(dp, paths)).ok) o.fail(tag + ": backward from paths");
    }
}

Graph plus_edge(const Graph& g, int a, int b) {
    auto e = g.edges();
    e.push_back(make_edge(a, b));
    return Graph(g.n(), e);
}

void gadget_suite(Outcome& o) {
    using detail::Plane;
    using detail::Variant;
    // path-crossing: two straight drawn edges crossing once
    auto cross = [](Variant v, std::map<std::string, int>& id) {
        Plane pl(v);
        id["L"] = pl.vertex({-1, 0}, "L");
        id["R"] = pl.vertex({1, 0}, "R");
        id["T"] = pl.vertex({0, 1}, "T");
        id["B"] = pl.vertex({0, -1}, "B");
        pl.edge(id["L"], id["R"]);
        pl.edge(id["B"], id["T"]);
        pl.resolve();
        pl.finish_asks();
        return pl;
    };
    std::map<std::string, int> id;
    auto pc = cross(Variant::Cycles, id);
    Graph g = pc.graph();
    if (g.n() != 25) o.fail("path-crossing: expected 21 gadget vertices");
    int base = brute_cycle_packing(g, 64).count;
    int straight = brute_cycle_packing(plus_edge(g, id["L"], id["R"]), 64).count;
    int turn = brute_cycle_packing(plus_edge(g, id["L"], id["T"]), 64).count;
    if (base != 4 || straight != 5 || turn != 4)
        o.fail("path-crossing cycles: " + std::to_string(base) + "/" + std::to_string(straight) + "/" +
               std::to_string(turn));
    std::map<std::string, int> jd;
    auto pd = cross(Variant::Paths, jd);
    ColoredGraph cg(pd.graph());
    RequestSet go{pd.requests}, tr{pd.requests};
    go.pairs.emplace_back(jd["L"], jd["R"]);
    tr.pairs.emplace_back(jd["L"], jd["T"]);
    if (!brute_mono_disjoint_paths(cg, go, 80).found) o.fail("path-crossing: straight request unroutable");
    if (brute_mono_disjoint_paths(cg, tr, 80).found) o.fail("path-crossing: turning request routable");

    // expel: u and u2 each close a triangle; only one of them may be used
    Plane ex(Variant::Cycles);
    ex.place("frame test\nv u 0 0\nv u2 4 0\nv p 2 1\nv q 2 -1\nv a -1 1\nv b -1 -1\nv c 5 1\nv d 5 -1\n"
             "e u a\ne a b\ne b u\ne u2 c\ne c d\ne d u2\nexpel u u2 p q\n",
             {}, {}, "t");
    if (brute_cycle_packing(ex.graph(), 64).count != 2) o.fail("expel exclusion");
    Plane dx(Variant::Cycles);
    dx.place("frame test\nv u 0 0\nv u2 3 1\nv u3 3 -1\nv p 1 1\nv q 1 -1\nv a -1 1\nv b -1 -1\nv c 4 0\n"
             "e u a\ne a b\ne b u\ne u2 c\ne c u3\ndexpel u u2 u3 p q\n",
             {}, {}, "t");
    if (brute_cycle_packing(dx.graph(), 64).count != 2) o.fail("double-expel exclusion");

    // SC: one cycle, always through a colour port
    Graph one(1, {});
    RotationSystem r1{{{}, {}}};
    auto sc = reduce_planar3col_to_cycle_packing(one, r1);
    std::vector<char> keep(sc.instance.cg.graph.n() + 1, 1);
    for (const char* c : {"v1.a", "v1.b", "v1.c"}) keep[sc.id(c)] = 0;
    if (brute_cycle_packing(sc.instance.cg.graph).count != 1 ||
        brute_cycle_packing(induced_subgraph(sc.instance.cg.graph, keep, nullptr)).count != 0)
        o.fail("SC selection (cycles)");
    auto sd = reduce_planar3col_to_disjoint_paths(one, r1);
    for (int c = 0; c <= 3; ++c) {
        ColoredGraph h = sd.instance.cg;
        std::vector<char> k2(h.graph.n() + 1, 1);
        for (int d = 1; d <= 3; ++d)
            if (d != c) k2[sd.id(std::string("v1.") + static_cast<char>('a' + d - 1))] = 0;
        std::vector<int> ids;
        ColoredGraph sub(induced_subgraph(h.graph, k2, &ids));
        RequestSet req;
        for (auto [s, t] : sd.instance.requests.pairs) req.pairs.emplace_back(ids[s], ids[t]);
        // c = 0 drops every colour port
        if (brute_mono_disjoint_paths(sub, req, 80).found != (c > 0))
            o.fail("SC selection (paths), colour " + std::to_string(c));
    }
}

Outcome crit8() {
    Outcome o;
    int runs = 0;
    forward_suite(Graph(1, {}), RotationSystem{{{}, {}}}, "single vertex", o, runs);
    forward_suite(Graph(2, {{1, 2}}), RotationSystem{{{}, {2}, {1}}}, "single edge", o, runs);
    gadget_suite(o);
    o.note << runs << " colourings mapped forward and back in both reductions; gadget suite run";
    return o;
}

// ------------------------------------------------------------ 9

std::string slurp(const fs::path& p) { return fs::exists(p) ? read_file(p.string()) : std::string("<missing>"); }

Outcome crit9() {
    Outcome o;
    fs::path dir = fs::temp_directory_path() / ("ptw_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::string cli = PTW_CLI_PATH;
    auto run = [&](const std::string& args) {
        std::string cmd = "\"" + cli + "\" " + args + " 2>/dev/null >/dev/null";
        return std::system(cmd.c_str());
    };
    auto d = [&](const std::string& f) { return (dir / f).string(); };
    run("gen planar --rows 3 --cols 4 --seed 9 --output " + d("p.g"));
    run("gen grid --rows 4 --cols 4 --output " + d("grid.g"));
    run("gen hs --k 3 --m 2 --seed 4 --output " + d("hs.txt"));
    run("reduce hs-to-mdp --input " + d("hs.txt") + " --output " + d("hsr"));
    std::vector<std::pair<std::string, std::vector<std::string>>> cfgs{
        {"gen planar --rows 3 --cols 4 --seed 9 --output @", {""}},
        {"solve cycle-packing --input " + d("p.g") + " --prune noncrossing --output @", {""}},
        {"solve cycle-packing --input " + d("grid.g") + " --l0 3 --format json --output @", {""}},
        {"solve mdp --input " + d("hsr.instance") + " --output @", {""}},
        {"solve disjoint-paths --input " + d("grid.g") + " --output @", {""}},
        {"decomp-build --input " + d("grid.g") + " --output @", {""}},
        {"reduce 3col-to-cycle-packing --input " + d("p.g") + " --output @",
         {".instance", ".registry.jsonl", ".idmap", ".meta"}},
        {"reduce hs-to-mdp --input " + d("hs.txt") + " --output @",
         {".instance", ".registry.jsonl", ".idmap", ".meta", ".treedec"}},
    };
    int compared = 0;
    for (std::size_t i = 0; i < cfgs.size(); ++i) {
        auto& [tmpl, suffixes] = cfgs[i];
        std::vector<std::vector<std::string>> outs;
        std::vector<std::string> worker_flag{"", "", " --workers 4", " --workers 4"};
        bool solve = tmpl.rfind("solve", 0) == 0;
        for (int r = 0; r < 4; ++r) {
            if (r >= 2 && !solve) break;
            std::string out = d("run" + std::to_string(i) + "_" + std::to_string(r));
            std::string cmd = tmpl;
            cmd.replace(cmd.find('@'), 1, out);
            int rc = run(cmd + worker_flag[r]);
            std::vector<std::string> files;
            for (auto& s : suffixes) files.push_back(slurp(out + s));
            files.push_back(std::to_string(rc));
            outs.push_back(files);
        }
        for (std::size_t r = 1; r < outs.size(); ++r) {
            ++compared;
            if (outs[r] != outs[0]) o.fail("config " + std::to_string(i) + " run " + std::to_string(r) + " differs");
        }
        if (outs[0][0] == "<missing>") o.fail("config " + std::to_string(i) + " wrote nothing");
    }
    fs::remove_all(dir);
    o.note << cfgs.size() << " configurations, " << compared << " repeat comparisons (solves also with --workers 4)";
    return o;
}

// ------------------------------------------------------------ 10

Outcome crit10() {
    Outcome o;
    int count = 0;
    auto check = [&](const Graph& g, const std::optional<RotationSystem>& rs, const std::string& tag) {
        ++count;
        if (!rs) {
            o.fail(tag + ": no rotation system");
            return;
        }
        try {
            auto rep = euler_check(g, *rs);
            if (!rep.planar) o.fail(tag + ": V-E+F != 2 on some component");
        } catch (const std::exception& e) {
            o.fail(tag + ": " + e.what());
        }
    };
    for (int r = 1; r <= 6; ++r)
        for (int c = 1; c <= 6; ++c) check(grid(r, c), grid_rotation(r, c), "grid");
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto s = random_planar(2 + seed % 4, 2 + (seed / 4) % 4, seed, 0.5 + 0.05 * (seed % 10));
        check(s.graph, s.rotation, "random planar " + std::to_string(seed));
        if (seed < 12 && s.graph.max_degree() <= 5) {
            auto cp = reduce_planar3col_to_cycle_packing(s.graph, s.rotation);
            check(cp.instance.cg.graph, cp.instance.rotation, "cycle-packing reduction");
            auto dp = reduce_planar3col_to_disjoint_paths(s.graph, s.rotation);
            check(dp.instance.cg.graph, dp.instance.rotation, "disjoint-paths reduction");
        }
    }
    auto classes = graph_classes(5);
    for (int n = 1; n <= 5; ++n)
        for (auto m : classes[n]) {
            auto out = reduce_3col_to_planar3col(from_mask(n, m));
            check(out.instance.cg.graph, out.instance.rotation, "planar 3col n=" + std::to_string(n));
        }
    std::mt19937_64 rng(10);
    for (int k = 1; k <= 5; ++k)
        for (int m = 0; m <= 4; ++m) {
            HittingSetInstance inst{k, {}};
            for (int i = 0; i < m; ++i) inst.sets.push_back(random_set(rng, k));
            auto out = reduce_hs_to_mdp(inst);
            check(out.instance.cg.graph, out.instance.rotation, "hs-to-mdp");
        }
    o.note << count << " emitted embeddings pass the Euler check";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    struct Crit {
        int no;
        const char* name;
        Outcome (*run)();
    };
    const Crit crits[] = {
        {1, "cycle packing DP matches the oracle", crit1},
        {2, "MDP DP matches the oracle", crit2},
        {3, "non-crossing enumerations have Catalan size", crit3},
        {4, "cycle packing tables within 6^|mid| * max(l0,1)", crit4},
        {5, "hitting set reduction preserves answers", crit5},
        {6, "hitting set reduction request count and pathwidth", crit6},
        {7, "planarising 3-colouring reduction", crit7},
        {8, "gadget reductions: forward and backward witnesses, gadget suite", crit8},
        {9, "CLI output is byte-identical across runs", crit9},
        {10, "emitted embeddings pass the Euler check", crit10},
    };
    std::set<int> pick;
    for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));
    bool all_ok = true;
    for (auto& c : crits) {
        if (!pick.empty() && !pick.count(c.no)) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("uncaught: ") + e.what());
        }
        auto s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all_ok &= o.ok;
        std::printf("%s criterion %d: %s (%s; %.1f s)\n", o.ok ? "PASS" : "FAIL", c.no, c.name, o.note.str().c_str(), s);
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
