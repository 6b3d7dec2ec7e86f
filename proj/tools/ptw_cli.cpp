#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptw/cycle_packing.hpp"
#include "ptw/decomp.hpp"
#include "ptw/graph.hpp"
#include "ptw/mdp.hpp"
#include "ptw/oracle.hpp"
#include "ptw/reductions.hpp"

using namespace ptw;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kSolved = 0, kViolation = 1, kBadInput = 2, kCap = 3, kYes = 10, kNo = 20 };

struct Cfg {
    std::string problem, input, output, witness, decomposition, format = "text", prune = "none";
    std::string strategy = "treedec", kind = "branch", what;
    int l0 = -1, cap = -1, workers = 1;
    long long timeout_ms = 60000;
    std::uint64_t seed = 1;
    int rows = 3, cols = 3, k = 2, m = 2;
    double keep = 0.7;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered key/value result; lists become repeated lines in text mode.
struct Result {
    json j = json::object();

    std::string text() const {
        std::ostringstream os;
        for (auto& [key, v] : j.items()) {
            if (v.is_array() && (v.empty() || v[0].is_array())) {
                for (auto& row : v) {
                    os << key;
                    for (auto& x : row) os << ' ' << x;
                    os << '\n';
                }
            } else if (v.is_array()) {
                os << key;
                for (auto& x : v) os << ' ' << x;
                os << '\n';
            } else {
                os << key << ' ' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
            }
        }
        return os.str();
    }
};

void emit(const Cfg& c, const Result& r) {
    std::string s = c.format == "json" ? r.j.dump(2) + "\n" : r.text();
    if (c.output.empty())
        std::cout << s;
    else
        write_file(c.output, s);
}

std::string need(const std::string& v, const char* flag) {
    if (v.empty()) throw PreconditionError(std::string("missing ") + flag);
    return v;
}

void table_stats(Result& r, const std::vector<TableStat>& t) {
    long long mx = 0, total = 0;
    int wide = 0;
    for (auto& s : t) {
        mx = std::max(mx, s.states);
        total += s.states;
        wide = std::max(wide, s.mid_size);
    }
    r.j["tables"] = t.size();
    r.j["max-mid"] = wide;
    r.j["max-states"] = mx;
    r.j["total-states"] = total;
}

json paths_json(const std::vector<std::vector<int>>& paths) {
    json a = json::array();
    for (std::size_t i = 0; i < paths.size(); ++i) {
        json row = json::array({static_cast<int>(i) + 1});
        for (int v : paths[i]) row.push_back(v);
        a.push_back(row);
    }
    return a;
}

int cmd_solve(const Cfg& c) {
    Result r;
    r.j["problem"] = c.problem;
    DpOptions opt;
    opt.workers = c.workers;
    if (c.problem == "hitting-set") {
        auto inst = parse_hs(read_file(need(c.input, "--input")));
        auto sel = brute_hitting_set(inst, c.cap > 0 ? c.cap : 6);
        r.j["decision"] = sel ? "yes" : "no";
        if (sel) {
            json a = json::array();
            for (std::size_t i = 0; i < sel->size(); ++i) a.push_back(json::array({i + 1, (*sel)[i]}));
            r.j["select"] = a;
        }
        emit(c, r);
        return sel ? kYes : kNo;
    }
    auto inst = read_instance_file(need(c.input, "--input"));
    const Graph& g = inst.cg.graph;
    if (c.problem == "3col") {
        auto col = brute_3coloring(g, c.timeout_ms);
        r.j["decision"] = col ? "yes" : "no";
        if (col) r.j["coloring"] = json(std::vector<int>(col->begin() + 1, col->end()));
        emit(c, r);
        return col ? kYes : kNo;
    }
    if (c.problem == "cycle-packing") {
        Prune p = c.prune == "noncrossing" ? Prune::NonCrossing : Prune::None;
        const RotationSystem* rs = inst.rotation ? &*inst.rotation : nullptr;
        if (p == Prune::NonCrossing && !rs) throw PreconditionError("--prune noncrossing needs a rotation system");
        auto rbd = root_decomposition(g, build_branch_decomposition(g, BdStrategy::FromTreeDecomposition));
        int l0 = c.l0;
        bool maximise = l0 < 0;
        if (maximise) l0 = max_cycle_packing_dp(g, p, rs);
        auto res = solve_cycle_packing(g, l0, rbd, p, rs, opt);
        if (maximise) r.j["maximum"] = l0;
        else r.j["decision"] = res.decision ? "yes" : "no";
        r.j["l0"] = l0;
        if (res.decision) r.j["cycle"] = res.cycles;
        table_stats(r, res.tables);
        r.j["pruned"] = res.pruned;
        r.j["bound-violations"] = res.bound_violations;
        emit(c, r);
        return maximise ? kSolved : res.decision ? kYes : kNo;
    }
    if (c.problem == "mdp" || c.problem == "disjoint-paths") {
        MdpResult res;
        if (c.problem == "mdp") {
            res = solve_mdp_auto(inst.cg, inst.requests, opt);
        } else {
            auto rbd = root_decomposition(g, build_branch_decomposition(g, BdStrategy::FromTreeDecomposition));
            res = solve_disjoint_paths(g, inst.requests, rbd, opt);
        }
        r.j["decision"] = res.decision ? "yes" : "no";
        r.j["requests"] = inst.requests.size();
        if (res.decision) r.j["path"] = paths_json(res.paths);
        table_stats(r, res.tables);
        r.j["bound-exceeded"] = res.bound_exceeded;
        emit(c, r);
        return res.decision ? kYes : kNo;
    }
    throw PreconditionError("unknown problem " + c.problem);
}

// witness lines: "cycle ...", "path i ...", "coloring ...", "select r c", "l0 N"
struct Witness {
    std::vector<std::vector<int>> cycles, paths;
    std::vector<int> coloring{0}, selection;
    int l0 = -1;
};

Witness read_witness(const std::string& path) {
    std::string text = read_file(path);
    Witness w;
    std::vector<std::pair<int, std::vector<int>>> paths;
    std::vector<std::pair<int, int>> sel;
    auto take = [&](const std::string& key, const std::vector<int>& row) {
        if (key == "cycle") w.cycles.push_back(row);
        if (key == "l0" && !row.empty()) w.l0 = row[0];
        if (key == "coloring") w.coloring.insert(w.coloring.end(), row.begin(), row.end());
        if (key == "path" && !row.empty()) paths.emplace_back(row[0], std::vector<int>(row.begin() + 1, row.end()));
        if (key == "select" && row.size() == 2) sel.emplace_back(row[0], row[1]);
    };
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        auto j = json::parse(text);
        for (auto& [key, v] : j.items()) {
            if (v.is_number_integer()) take(key, {v.get<int>()});
            if (!v.is_array()) continue;
            if (!v.empty() && v[0].is_array())
                for (auto& row : v) take(key, row.get<std::vector<int>>());
            else
                take(key, v.get<std::vector<int>>());
        }
    } else {
        std::istringstream in(text);
        std::string line;
        int no = 0;
        while (std::getline(in, line)) {
            ++no;
            std::istringstream ls(line);
            std::string key;
            if (!(ls >> key) || key[0] == '#') continue;
            std::vector<int> row;
            std::string tok;
            bool numeric = true;
            while (ls >> tok) {
                try {
                    std::size_t used = 0;
                    row.push_back(std::stoi(tok, &used));
                    if (used != tok.size()) numeric = false;
                } catch (const std::exception&) {
                    numeric = false;
                }
            }
            if (!numeric) {
                if (key == "cycle" || key == "path" || key == "coloring" || key == "select")
                    throw ParseError(no, "bad witness line");
                continue;
            }
            take(key, row);
        }
    }
    std::sort(paths.begin(), paths.end());
    for (auto& [i, p] : paths) w.paths.push_back(p);
    std::sort(sel.begin(), sel.end());
    for (auto& [row, col] : sel) w.selection.push_back(col);
    return w;
}

int cmd_verify(const Cfg& c) {
    auto w = read_witness(need(c.witness, "--witness"));
    Verdict v;
    if (c.problem == "hitting-set") {
        v = verify_hitting_set(parse_hs(read_file(need(c.input, "--input"))), w.selection);
    } else {
        auto inst = read_instance_file(need(c.input, "--input"));
        if (c.problem == "cycle-packing") {
            int l0 = c.l0 >= 0 ? c.l0 : w.l0;
            if (l0 < 0) throw PreconditionError("cycle-packing verification needs --l0");
            v = verify_cycle_packing(inst.cg.graph, w.cycles, l0);
        } else if (c.problem == "mdp") {
            v = verify_paths(inst.cg, inst.requests, w.paths, true);
        } else if (c.problem == "disjoint-paths") {
            v = verify_paths(inst.cg, inst.requests, w.paths, false);
        } else if (c.problem == "3col") {
            v = verify_3coloring(inst.cg.graph, w.coloring);
        } else {
            throw PreconditionError("unknown problem " + c.problem);
        }
    }
    Result r;
    r.j["problem"] = c.problem;
    r.j["verdict"] = v.ok ? "ok" : "violation";
    if (!v.ok) {
        r.j["reason"] = v.reason;
        if (!v.detail.empty()) r.j["detail"] = v.detail;
    }
    emit(c, r);
    return v.ok ? kSolved : kViolation;
}

int cmd_reduce(const Cfg& c) {
    ReductionOutput out;
    ReductionReport rep;
    if (c.problem == "hs-to-mdp") {
        auto inst = parse_hs(read_file(need(c.input, "--input")));
        try {
            validate_hs(inst);
        } catch (const std::exception& e) {
            throw PreconditionError(e.what());
        }
        out = reduce_hs_to_mdp(inst);
        rep = validate_reduction(out, 0, {"planar", "requests", "decomposition"}, inst.k,
                                 static_cast<int>(inst.sets.size()));
    } else {
        auto inst = read_instance_file(need(c.input, "--input"));
        const Graph& g = inst.cg.graph;
        if (c.problem == "3col-to-planar3col") {
            out = reduce_3col_to_planar3col(g);
            rep = validate_reduction(out, g.n(), {"planar", "degree", "size"});
        } else if (c.problem == "3col-to-cycle-packing" || c.problem == "3col-to-disjoint-paths") {
            std::optional<RotationSystem> rs = inst.rotation;
            if (!rs) rs = find_planar_rotation(g);
            if (!rs) throw PreconditionError("input is not planar (no rotation system found)");
            try {
                out = c.problem == "3col-to-cycle-packing" ? reduce_planar3col_to_cycle_packing(g, *rs)
                                                           : reduce_planar3col_to_disjoint_paths(g, *rs);
            } catch (const std::invalid_argument& e) {
                throw PreconditionError(e.what());
            }
            rep = validate_reduction(out, g.n(), {"planar", "asks", "requests", "size"});
        } else {
            throw PreconditionError("unknown reduction " + c.problem);
        }
    }
    Result r;
    r.j["reduction"] = out.name;
    r.j["vertices"] = out.instance.cg.graph.n();
    r.j["edges"] = out.instance.cg.graph.m();
    r.j["requests"] = out.instance.requests.size();
    if (out.name == "planar3col-to-cycle-packing") r.j["l0"] = out.l0;
    r.j["gadgets"] = out.registry.size();
    for (auto& [k, v] : rep.facts)
        if (k != "vertices" && k != "edges") r.j[k] = v;
    r.j["checks"] = rep.ok ? "ok" : "failed";
    for (auto& f : rep.failures) r.j["failure"].push_back(f);
    if (!c.output.empty()) {
        write_file(c.output + ".instance", serialize_instance(out.instance));
        write_file(c.output + ".registry.jsonl", out.registry_jsonl());
        write_file(c.output + ".idmap", out.id_map_text());
        if (out.decomposition) write_file(c.output + ".treedec", serialize_tree_decomposition(*out.decomposition));
        Cfg meta = c;
        meta.output = c.output + ".meta";
        emit(meta, r);
    }
    Cfg screen = c;
    screen.output.clear();
    emit(screen, r);
    return rep.ok ? kSolved : kViolation;
}

int cmd_decomp_build(const Cfg& c) {
    auto inst = read_instance_file(need(c.input, "--input"));
    const Graph& g = inst.cg.graph;
    std::string text;
    int width;
    if (c.kind == "tree") {
        auto td = min_fill_tree_decomposition(g);
        text = serialize_tree_decomposition(td);
        width = td.width();
    } else {
        auto bd = build_branch_decomposition(g, c.strategy == "caterpillar" ? BdStrategy::Caterpillar
                                                                            : BdStrategy::FromTreeDecomposition);
        text = serialize_branch_decomposition(g, bd);
        width = middle_sets(g, bd).width;
    }
    if (c.output.empty()) {
        std::cout << text;
    } else {
        write_file(c.output, text);
        std::cout << "width " << width << '\n';
    }
    return kSolved;
}

int cmd_decomp_validate(const Cfg& c) {
    auto inst = read_instance_file(need(c.input, "--input"));
    const Graph& g = inst.cg.graph;
    std::string text = read_file(need(c.decomposition, "--decomposition"));
    Result r;
    if (text.find("p treedec") != std::string::npos) {
        auto rep = validate_tree_decomposition(g, parse_tree_decomposition(text));
        r.j["kind"] = "treedec";
        r.j["verdict"] = rep.ok ? "ok" : "violation";
        if (rep.ok) r.j["width"] = rep.width;
        else r.j["reason"] = rep.violation, r.j["detail"] = rep.witness;
        emit(c, r);
        return rep.ok ? kSolved : kViolation;
    }
    auto bd = parse_branch_decomposition(g, text);
    r.j["kind"] = "branchdec";
    try {
        validate_branch_decomposition(g, bd);
        r.j["verdict"] = "ok";
        r.j["width"] = middle_sets(g, bd).width;
    } catch (const std::invalid_argument& e) {
        r.j["verdict"] = "violation";
        r.j["reason"] = e.what();
    }
    emit(c, r);
    return r.j["verdict"] == "ok" ? kSolved : kViolation;
}

int cmd_gen(const Cfg& c) {
    std::string text;
    if (c.what == "grid") {
        Instance inst;
        inst.cg = ColoredGraph(grid(c.rows, c.cols));
        inst.rotation = grid_rotation(c.rows, c.cols);
        text = serialize_instance(inst);
    } else if (c.what == "planar") {
        auto s = random_planar(c.rows, c.cols, c.seed, c.keep);
        Instance inst;
        inst.cg = ColoredGraph(s.graph);
        inst.rotation = s.rotation;
        text = serialize_instance(inst);
    } else if (c.what == "hs") {
        std::mt19937_64 rng(c.seed);
        HittingSetInstance hs{c.k, {}};
        for (int i = 0; i < c.m; ++i) {
            std::vector<Edge> s;
            for (int r = 1; r <= c.k; ++r)
                if (rng() % 2) s.emplace_back(r, 1 + static_cast<int>(rng() % c.k));
            hs.sets.push_back(s);
        }
        text = serialize_hs(hs);
    } else {
        throw PreconditionError("unknown generator " + c.what);
    }
    if (c.output.empty())
        std::cout << text;
    else
        write_file(c.output, text);
    return kSolved;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"treewidth DP solvers, oracles and hardness reductions"};
    app.require_subcommand(1);
    Cfg c;
    auto common = [&](CLI::App* s) {
        s->add_option("--input", c.input, "input file");
        s->add_option("--output", c.output, "output file (or prefix for reduce)");
        s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto knobs = [&](CLI::App* s) {
        s->add_option("--l0", c.l0, "number of cycles asked");
        s->add_option("--prune", c.prune, "none or noncrossing")->check(CLI::IsMember({"none", "noncrossing"}));
        s->add_option("--cap", c.cap, "oracle size cap");
        s->add_option("--timeout-ms", c.timeout_ms, "oracle timeout");
        s->add_option("--workers", c.workers, "merge threads")->check(CLI::PositiveNumber);
        s->add_option("--seed", c.seed, "RNG seed");
    };
    const std::vector<std::string> problems{"cycle-packing", "mdp", "disjoint-paths", "3col", "hitting-set"};
    auto* solve = app.add_subcommand("solve", "solve an instance");
    solve->add_option("problem", c.problem)->required()->check(CLI::IsMember(problems));
    common(solve);
    knobs(solve);
    auto* reduce = app.add_subcommand("reduce", "generate a reduction");
    reduce->add_option("name", c.problem)
        ->required()
        ->check(CLI::IsMember({"3col-to-planar3col", "3col-to-cycle-packing", "3col-to-disjoint-paths", "hs-to-mdp"}));
    common(reduce);
    auto* verify = app.add_subcommand("verify", "check a witness");
    verify->add_option("problem", c.problem)->required()->check(CLI::IsMember(problems));
    verify->add_option("--witness", c.witness, "witness file");
    verify->add_option("--l0", c.l0, "number of cycles asked");
    common(verify);
    auto* dbuild = app.add_subcommand("decomp-build", "build a decomposition");
    common(dbuild);
    dbuild->add_option("--kind", c.kind, "branch or tree")->check(CLI::IsMember({"branch", "tree"}));
    dbuild->add_option("--strategy", c.strategy, "caterpillar or treedec")->check(CLI::IsMember({"caterpillar", "treedec"}));
    auto* dval = app.add_subcommand("decomp-validate", "validate a decomposition");
    common(dval);
    dval->add_option("--decomposition", c.decomposition, "decomposition file");
    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->add_option("what", c.what)->required()->check(CLI::IsMember({"grid", "planar", "hs"}));
    gen->add_option("--output", c.output, "output file");
    gen->add_option("--rows", c.rows)->check(CLI::PositiveNumber);
    gen->add_option("--cols", c.cols)->check(CLI::PositiveNumber);
    gen->add_option("--keep", c.keep)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--k", c.k)->check(CLI::PositiveNumber);
    gen->add_option("--m", c.m)->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", c.seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kBadInput;
    }
    auto t0 = std::chrono::steady_clock::now();
    int rc;
    try {
        if (*solve) rc = cmd_solve(c);
        else if (*reduce) rc = cmd_reduce(c);
        else if (*verify) rc = cmd_verify(c);
        else if (*dbuild) rc = cmd_decomp_build(c);
        else if (*dval) rc = cmd_decomp_validate(c);
        else rc = cmd_gen(c);
    } catch (const CapExceeded& e) {
        std::cerr << "cap: " << e.what() << '\n';
        return kCap;
    } catch (const Timeout& e) {
        std::cerr << "timeout: " << e.what() << '\n';
        return kCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    // timing goes to stderr so result files stay byte-identical
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "time_ms " << ms << '\n';
    return rc;
}
