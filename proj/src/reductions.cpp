#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "ptw/reductions.hpp"
#include "red_common.hpp"

namespace ptw {

int ReductionOutput::id(const std::string& key) const {
    for (auto& [k, v] : id_map)
        if (k == key) return v;
    throw std::out_of_range("id_map: no entry " + key);
}

std::string ReductionOutput::registry_jsonl() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < registry.size(); ++i) {
        auto& r = registry[i];
        nlohmann::ordered_json j;
        j["gadget"] = i;
        j["kind"] = r.kind;
        j["owner"] = r.owner;
        j["parent"] = r.parent;
        j["asks"] = r.asks;
        nlohmann::ordered_json vs = nlohmann::ordered_json::object();
        for (auto& [nm, v] : r.vertices) vs[nm] = v;
        j["vertices"] = vs;
        if (r.request >= 0) j["request"] = r.request + 1;
        os << j.dump() << "\n";
    }
    return os.str();
}

std::string ReductionOutput::id_map_text() const {
    std::ostringstream os;
    for (auto& [k, v] : id_map) os << k << " " << v << "\n";
    return os.str();
}

namespace detail {

bool is_leaf(const GadgetRecord& r) { return !r.options.empty(); }

std::vector<int> expand(const ReductionOutput& out, const std::vector<int>& seq, bool cyclic) {
    std::vector<int> res;
    if (seq.empty()) return res;
    res.push_back(seq[0]);
    std::size_t steps = cyclic ? seq.size() : seq.size() - 1;
    for (std::size_t i = 0; i < steps; ++i) {
        int x = seq[i], y = seq[(i + 1) % seq.size()];
        std::vector<int> hop{x, y};
        auto it = out.routes.find(make_edge(x, y));
        if (it != out.routes.end()) {
            hop = it->second;
            if (hop.front() != x) std::reverse(hop.begin(), hop.end());
        }
        bool last = cyclic && i + 1 == steps;
        res.insert(res.end(), hop.begin() + 1, last ? hop.end() - 1 : hop.end());
    }
    return res;
}

std::vector<std::vector<int>> greedy_leaves(const ReductionOutput& out, const std::map<int, int>& forced, bool cyclic) {
    const auto& reg = out.registry;
    std::vector<int> order;
    for (auto& [r, o] : forced) order.push_back(r);
    auto inner = [&](int r) { return reg[r].parent >= 0 && reg[reg[r].parent].kind == "path-crossing"; };
    for (int pass = 0; pass < 2; ++pass)
        for (int r = 0; r < static_cast<int>(reg.size()); ++r)
            if (is_leaf(reg[r]) && !forced.count(r) && inner(r) == (pass == 1)) order.push_back(r);
    std::vector<char> used(out.instance.cg.graph.n() + 1, 0);
    std::vector<std::vector<int>> pick(reg.size());
    for (int r : order) {
        std::vector<int> cand;
        if (auto f = forced.find(r); f != forced.end())
            cand.push_back(f->second);
        else
            for (int o = 0; o < static_cast<int>(reg[r].options.size()); ++o) cand.push_back(o);
        bool done = false;
        for (int o : cand) {
            auto seq = expand(out, reg[r].options.at(o), cyclic);
            if (std::any_of(seq.begin(), seq.end(), [&](int v) { return used[v]; })) continue;
            for (int v : seq) used[v] = 1;
            pick[r] = seq;
            done = true;
            break;
        }
        if (!done) throw WitnessConflict("gadget " + std::to_string(r) + " (" + reg[r].kind + " of " + reg[r].owner + ") has no free option");
    }
    return pick;
}

}  // namespace detail

ReductionReport validate_reduction(const ReductionOutput& out, int source_n, const std::vector<std::string>& checks,
                                   int source_k, int source_m) {
    ReductionReport rep;
    const Graph& h = out.instance.cg.graph;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.failures.push_back(s);
    };
    auto has = [&](const char* c) { return std::find(checks.begin(), checks.end(), c) != checks.end(); };
    rep.facts.emplace_back("vertices", std::to_string(h.n()));
    rep.facts.emplace_back("edges", std::to_string(h.m()));
    if (has("planar")) {
        if (!out.instance.rotation) {
            fail("planar: no embedding");
        } else {
            try {
                if (!euler_check(h, *out.instance.rotation).planar) fail("planar: euler check failed");
            } catch (const std::exception& e) {
                fail(std::string("planar: ") + e.what());
            }
        }
    }
    if (has("degree") && h.max_degree() > 5) fail("degree: max degree " + std::to_string(h.max_degree()) + " > 5");
    if (has("size")) {
        if (out.name == "3col-to-planar3col") {
            if (h.n() > 65LL * source_n * source_n) fail("size: |V(H)| above 65 n^2");
        } else if (source_n > 0) {
            std::ostringstream os;
            os << static_cast<double>(h.n()) / source_n;
            rep.facts.emplace_back("vertices-per-source-vertex", os.str());
        }
    }
    int leaves = 0;
    for (auto& r : out.registry)
        if (detail::is_leaf(r)) ++leaves;
    if (has("asks")) {
        static const std::map<std::string, int> want{{"bifurcate", 57}, {"edge", 51}, {"path-crossing", 4},
                                                     {"expel", 1}, {"double-expel", 1}, {"SC", 1}};
        for (std::size_t i = 0; i < out.registry.size(); ++i) {
            auto& r = out.registry[i];
            auto it = want.find(r.kind);
            if (it != want.end() && r.asks != it->second)
                fail("asks: gadget " + std::to_string(i) + " (" + r.kind + ") asks " + std::to_string(r.asks));
        }
        int roots = 0;
        for (auto& r : out.registry)
            if (r.parent < 0) roots += r.asks;
        if (roots != leaves) fail("asks: root total differs from leaf count");
        if (out.name == "planar3col-to-cycle-packing" && out.l0 != leaves) fail("asks: l0 differs from registry");
    }
    if (has("requests")) {
        int want = out.name == "hs-to-mdp" ? source_k + (source_k - 1) * source_m
                   : out.name == "planar3col-to-disjoint-paths" ? leaves : 0;
        if (out.instance.requests.size() != want)
            fail("requests: " + std::to_string(out.instance.requests.size()) + " != " + std::to_string(want));
    }
    if (has("decomposition")) {
        if (!out.decomposition) {
            fail("decomposition: missing");
        } else {
            auto td = validate_tree_decomposition(h, *out.decomposition);
            if (!td.ok) fail("decomposition: " + td.violation);
            if (!out.decomposition->is_path()) fail("decomposition: not a path");
            int bag = td.width + 1;
            rep.facts.emplace_back("max-bag", std::to_string(bag));
            if (bag > 2 * (source_k - 1) + 5 * source_k - 2)
                fail("decomposition: bag of size " + std::to_string(bag));
        }
    }
    return rep;
}

}  // namespace ptw
