#include "ptw/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace ptw {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n + 1) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("vertex id out of range");
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (!seen.insert(make_edge(u, v)).second)
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 1; v <= n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::edge_index(int u, int v) const {
    auto e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

int ColoredGraph::max_color() const {
    int c = 0;
    for (size_t v = 1; v < colors.size(); ++v) c = std::max(c, colors[v]);
    return c;
}

// ---------------------------------------------------------------- parsing

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int to_int(const std::string& s, int line) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size() || v < INT32_MIN || v > INT32_MAX) throw std::invalid_argument("");
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw ParseError(line, "not an integer: '" + s + "'");
    }
}

}  // namespace

Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, m_decl = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::vector<std::pair<int, int>> colors;
    RequestSet req;
    std::vector<std::pair<int, std::vector<int>>> rots;

    auto vertex = [&](const std::string& s) {
        int v = to_int(s, line_no);
        if (v < 1 || v > n) throw ParseError(line_no, "vertex id out of range: " + s);
        return v;
    };

    while (std::getline(in, line)) {
        ++line_no;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok[0] == "p") {
            if (n >= 0) throw ParseError(line_no, "second header");
            if (tok.size() != 4 || tok[1] != "graph") throw ParseError(line_no, "expected 'p graph <n> <m>'");
            n = to_int(tok[2], line_no);
            m_decl = to_int(tok[3], line_no);
            if (n < 0 || m_decl < 0) throw ParseError(line_no, "negative size");
            continue;
        }
        if (n < 0) throw ParseError(line_no, "missing header");
        if (tok[0] == "e") {
            if (tok.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
            int u = vertex(tok[1]), v = vertex(tok[2]);
            if (u == v) throw ParseError(line_no, "loop at vertex " + tok[1]);
            if (!seen.insert(make_edge(u, v)).second) throw ParseError(line_no, "duplicate edge");
            edges.emplace_back(u, v);
        } else if (tok[0] == "c") {
            if (tok.size() != 3) throw ParseError(line_no, "expected 'c <v> <color>'");
            int v = vertex(tok[1]), c = to_int(tok[2], line_no);
            if (c < 0) throw ParseError(line_no, "negative color");
            colors.emplace_back(v, c);
        } else if (tok[0] == "r") {
            if (tok.size() != 3) throw ParseError(line_no, "expected 'r <s> <t>'");
            int s = vertex(tok[1]), t = vertex(tok[2]);
            if (s == t) throw ParseError(line_no, "request with s = t");
            req.pairs.emplace_back(s, t);
        } else if (tok[0] == "rot") {
            if (tok.size() < 2) throw ParseError(line_no, "expected 'rot <v> ...'");
            int v = vertex(tok[1]);
            std::vector<int> ord;
            for (size_t i = 2; i < tok.size(); ++i) ord.push_back(vertex(tok[i]));
            rots.emplace_back(v, std::move(ord));
        } else {
            throw ParseError(line_no, "unknown line type '" + tok[0] + "'");
        }
    }
    if (n < 0) throw ParseError(line_no, "missing header");
    if (static_cast<int>(edges.size()) != m_decl)
        throw ParseError(line_no, "edge count mismatch: header says " + std::to_string(m_decl) + ", found " +
                                      std::to_string(edges.size()));
    Instance inst;
    inst.cg = ColoredGraph(Graph(n, edges));
    for (auto [v, c] : colors) inst.cg.colors[v] = c;
    inst.requests = std::move(req);
    if (!rots.empty()) {
        RotationSystem rs;
        rs.order.assign(n + 1, {});
        for (auto& [v, ord] : rots) rs.order[v] = std::move(ord);
        try {
            check_rotation(inst.cg.graph, rs);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        inst.rotation = std::move(rs);
    }
    return inst;
}

RotationSystem parse_rotation(const std::string& text, int n) {
    RotationSystem rs;
    rs.order.assign(n + 1, {});
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok[0] != "rot" || tok.size() < 2) throw ParseError(line_no, "expected 'rot <v> ...'");
        int v = to_int(tok[1], line_no);
        if (v < 1 || v > n) throw ParseError(line_no, "vertex id out of range");
        for (size_t i = 2; i < tok.size(); ++i) {
            int w = to_int(tok[i], line_no);
            if (w < 1 || w > n) throw ParseError(line_no, "vertex id out of range");
            rs.order[v].push_back(w);
        }
    }
    return rs;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream os;
    os << "p graph " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
    return os.str();
}

std::string serialize_rotation(const RotationSystem& rs) {
    std::ostringstream os;
    for (size_t v = 1; v < rs.order.size(); ++v) {
        os << "rot " << v;
        for (int w : rs.order[v]) os << ' ' << w;
        os << '\n';
    }
    return os.str();
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream os;
    os << serialize_graph(inst.cg.graph);
    for (int v = 1; v <= inst.cg.graph.n(); ++v)
        if (inst.cg.colors[v] != 0) os << "c " << v << ' ' << inst.cg.colors[v] << '\n';
    for (auto [s, t] : inst.requests.pairs) os << "r " << s << ' ' << t << '\n';
    if (inst.rotation) os << serialize_rotation(*inst.rotation);
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << data;
}

Instance read_instance_file(const std::string& path) { return parse_instance(read_file(path)); }

// ---------------------------------------------------------------- grids

Graph grid(int m, int k) {
    if (m < 1 || k < 1) throw std::invalid_argument("grid dimensions must be positive");
    auto id = [k](int i, int j) { return (i - 1) * k + j; };
    std::vector<Edge> e;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= k; ++j) {
            if (i < m) e.emplace_back(id(i, j), id(i + 1, j));
            if (j < k) e.emplace_back(id(i, j), id(i, j + 1));
        }
    return Graph(m * k, e);
}

RotationSystem grid_rotation(int m, int k) {
    // row i drawn at y = -i, column j at x = j; ccw from east
    auto id = [k](int i, int j) { return (i - 1) * k + j; };
    RotationSystem rs;
    rs.order.assign(m * k + 1, {});
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= k; ++j) {
            auto& o = rs.order[id(i, j)];
            if (j < k) o.push_back(id(i, j + 1));
            if (i > 1) o.push_back(id(i - 1, j));
            if (j > 1) o.push_back(id(i, j - 1));
            if (i < m) o.push_back(id(i + 1, j));
        }
    return rs;
}

// ---------------------------------------------------------------- embeddings

void check_rotation(const Graph& g, const RotationSystem& rs) {
    if (static_cast<int>(rs.order.size()) != g.n() + 1)
        throw std::invalid_argument("rotation system size does not match graph");
    for (int v = 1; v <= g.n(); ++v) {
        auto o = rs.order[v];
        std::sort(o.begin(), o.end());
        if (o != g.neighbors(v))
            throw std::invalid_argument("rotation at vertex " + std::to_string(v) + " does not list its neighbours");
    }
}

namespace {

// pos[v][w] = index of w in rs.order[v]
std::vector<std::map<int, int>> rotation_index(const RotationSystem& rs) {
    std::vector<std::map<int, int>> pos(rs.order.size());
    for (size_t v = 1; v < rs.order.size(); ++v)
        for (size_t i = 0; i < rs.order[v].size(); ++i) pos[v][rs.order[v][i]] = static_cast<int>(i);
    return pos;
}

}  // namespace

std::vector<std::vector<Edge>> trace_faces(const Graph& g, const RotationSystem& rs) {
    check_rotation(g, rs);
    auto pos = rotation_index(rs);
    std::set<Edge> used;
    std::vector<std::vector<Edge>> faces;
    for (int u = 1; u <= g.n(); ++u)
        for (int v : rs.order[u]) {
            if (used.count({u, v})) continue;
            std::vector<Edge> face;
            int a = u, b = v;
            while (!used.count({a, b})) {
                used.insert({a, b});
                face.emplace_back(a, b);
                const auto& ob = rs.order[b];
                int d = static_cast<int>(ob.size());
                int w = ob[(pos[b].at(a) + d - 1) % d];
                a = b;
                b = w;
            }
            faces.push_back(std::move(face));
        }
    return faces;
}

std::vector<int> components(const Graph& g, int* count) {
    std::vector<int> comp(g.n() + 1, -1);
    int c = 0;
    for (int s = 1; s <= g.n(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> st{s};
        comp[s] = c;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = c;
                    st.push_back(w);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

bool is_connected(const Graph& g) {
    int c = 0;
    components(g, &c);
    return c <= 1;
}

EulerReport euler_check(const Graph& g, const RotationSystem& rs) {
    auto faces = trace_faces(g, rs);
    EulerReport rep;
    auto comp = components(g, &rep.components);
    std::vector<long long> V(rep.components), E(rep.components), F(rep.components);
    for (int v = 1; v <= g.n(); ++v) ++V[comp[v]];
    for (auto [u, v] : g.edges()) ++E[comp[u]];
    for (auto& f : faces) ++F[comp[f[0].first]];
    rep.faces = static_cast<int>(faces.size());
    for (int c = 0; c < rep.components; ++c) {
        if (E[c] == 0) F[c] = 1;  // isolated vertex: one face, no darts
        if (V[c] - E[c] + F[c] != 2) rep.bad_components.push_back(c);
    }
    // isolated vertices contribute a face each
    for (int c = 0; c < rep.components; ++c)
        if (E[c] == 0) ++rep.faces;
    rep.planar = rep.bad_components.empty();
    return rep;
}

std::optional<RotationSystem> find_planar_rotation(const Graph& g, long long max_tries) {
    RotationSystem rs;
    rs.order.assign(g.n() + 1, {});
    for (int v = 1; v <= g.n(); ++v) rs.order[v] = g.neighbors(v);
    // odometer over permutations fixing the first neighbour
    long long tries = 0;
    while (true) {
        if (euler_check(g, rs).planar) return rs;
        if (++tries >= max_tries) return std::nullopt;
        int v = 1;
        for (; v <= g.n(); ++v) {
            auto& o = rs.order[v];
            if (o.size() > 2 && std::next_permutation(o.begin() + 1, o.end())) break;
            if (o.size() > 2) std::sort(o.begin() + 1, o.end());
        }
        if (v > g.n()) return std::nullopt;
    }
}

// ---------------------------------------------------------------- random planar

PlanarSample random_planar(int rows, int cols, std::uint64_t seed, double keep) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int n = rows * cols;
    auto id = [cols](int i, int j) { return i * cols + j + 1; };
    std::vector<std::pair<double, double>> pt(n + 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) pt[id(i, j)] = {double(j), double(-i)};
    std::vector<Edge> e;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (j + 1 < cols && unit(rng) < keep) e.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < rows && unit(rng) < keep) e.emplace_back(id(i, j), id(i + 1, j));
            if (i + 1 < rows && j + 1 < cols) {
                double r = unit(rng);
                if (r < keep / 3) e.emplace_back(id(i, j), id(i + 1, j + 1));
                else if (r < 2 * keep / 3) e.emplace_back(id(i, j + 1), id(i + 1, j));
            }
        }
    std::vector<int> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    std::vector<Edge> re;
    for (auto [u, v] : e) re.emplace_back(perm[u], perm[v]);
    PlanarSample s{Graph(n, re), {}};
    s.rotation.order.assign(n + 1, {});
    for (int v = 1; v <= n; ++v) {
        std::vector<std::pair<double, int>> ang;
        for (auto [a, b] : e) {
            if (a == v) ang.push_back({std::atan2(pt[b].second - pt[v].second, pt[b].first - pt[v].first), b});
            if (b == v) ang.push_back({std::atan2(pt[a].second - pt[v].second, pt[a].first - pt[v].first), a});
        }
        std::sort(ang.begin(), ang.end());
        for (auto& [_, w] : ang) s.rotation.order[perm[v]].push_back(perm[w]);
    }
    return s;
}

Graph induced_subgraph(const Graph& g, const std::vector<char>& keep, std::vector<int>* id_map) {
    std::vector<int> mp(g.n() + 1, 0);
    int k = 0;
    for (int v = 1; v <= g.n(); ++v)
        if (keep[v]) mp[v] = ++k;
    std::vector<Edge> e;
    for (auto [u, v] : g.edges())
        if (mp[u] && mp[v]) e.emplace_back(mp[u], mp[v]);
    if (id_map) *id_map = mp;
    return Graph(k, e);
}

}  // namespace ptw
