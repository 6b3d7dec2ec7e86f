#include "plane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ptw_gadgets.hpp"

namespace ptw::detail {

namespace {

double cross(Pt a, Pt b) { return a.x * b.y - a.y * b.x; }
Pt sub(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
double norm(Pt a) { return std::hypot(a.x, a.y); }

double orient(Pt a, Pt b, Pt c) { return cross(sub(b, a), sub(c, a)); }

bool near_zero(double v, Pt a, Pt b, Pt c) { return std::abs(v) <= 1e-9 * (norm(sub(b, a)) * norm(sub(c, a)) + 1); }

// c strictly inside segment ab, given collinear
bool inside(Pt a, Pt b, Pt c) {
    double t = ((c.x - a.x) * (b.x - a.x) + (c.y - a.y) * (b.y - a.y)) / std::pow(norm(sub(b, a)), 2);
    return t > 1e-9 && t < 1 - 1e-9;
}

double seg_dist(Pt p, Pt a, Pt b) {
    Pt d = sub(b, a);
    double l2 = d.x * d.x + d.y * d.y;
    double t = std::clamp(((p.x - a.x) * d.x + (p.y - a.y) * d.y) / l2, 0.0, 1.0);
    return norm(sub(p, {a.x + t * d.x, a.y + t * d.y}));
}

Pt unit(Pt a) {
    double l = norm(a);
    return {a.x / l, a.y / l};
}

}  // namespace

int Plane::vertex(Pt p, const std::string& name) {
    pts_.push_back(p);
    names_.push_back(name);
    return n();
}

void Plane::edge(int a, int b, int owner) {
    if (a == b) throw std::logic_error("plane: loop at " + names_[a]);
    edges_.emplace_back(a, b);
    owner_.push_back(owner);
}

int Plane::new_record(const std::string& kind, const std::string& owner, int parent) {
    GadgetRecord r;
    r.kind = kind;
    r.owner = owner;
    r.parent = parent;
    recs.push_back(std::move(r));
    return static_cast<int>(recs.size()) - 1;
}

int Plane::frame_of(int rec) const {
    if (rec < 0) return -1;
    const auto& k = recs[rec].kind;
    if (k == "expel" || k == "double-expel") return recs[rec].parent;
    return rec;
}

std::map<std::string, int> Plane::place(const std::string& text, const Affine& t,
                                        const std::map<std::string, int>& bind, const std::string& owner,
                                        int parent) {
    std::map<std::string, int> id;
    int frame = -1, cur = -1;
    std::istringstream in(text);
    std::string line;
    auto get = [&](const std::string& nm) {
        auto it = id.find(nm);
        if (it == id.end()) throw std::logic_error("gadget template: unknown vertex " + nm);
        return it->second;
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op) || op[0] == '#') continue;
        std::vector<std::string> a;
        for (std::string w; ls >> w;) a.push_back(w);
        if (op == "frame") {
            frame = cur = new_record(a.at(0), owner, parent);
        } else if (op == "v") {
            auto b = bind.find(a.at(0));
            id[a[0]] = b != bind.end() ? b->second : vertex(t.apply(std::stod(a.at(1)), std::stod(a.at(2))), owner + ":" + a[0]);
            recs[frame].vertices.emplace_back(a[0], id[a[0]]);
        } else if (op == "e") {
            edge(get(a.at(0)), get(a.at(1)), frame);
        } else if (op == "opt") {
            std::vector<int> o;
            for (auto& w : a) o.push_back(get(w));
            recs[cur].options.push_back(o);
        } else if (op == "request") {
            recs[cur].request = static_cast<int>(requests.size());
            requests.emplace_back(get(a.at(0)), get(a.at(1)));
        } else if (op == "expel" || op == "dexpel") {
            if (var_ == Variant::Plain) throw std::logic_error("expel gadget in a plain drawing");
            bool dbl = op == "dexpel";
            std::vector<int> v;
            for (auto& w : a) v.push_back(get(w));
            if (v.size() != (dbl ? 5u : 4u)) throw std::logic_error("gadget template: bad " + op);
            int r = new_record(dbl ? "double-expel" : "expel", owner, frame);
            auto& rec = recs[r];
            int u = v[0], u2 = v[1], u3 = dbl ? v[2] : 0, p = v[dbl ? 3 : 2], q = v[dbl ? 4 : 3];
            bool cyc = var_ == Variant::Cycles;
            rec.vertices = {{"u", u}, {"u2", u2}};
            if (dbl) rec.vertices.emplace_back("u3", u3);
            rec.vertices.emplace_back(cyc ? "v" : "s", p);
            rec.vertices.emplace_back(cyc ? "v2" : "t", q);
            if (cyc) {
                if (dbl) {
                    for (auto [x, y] : std::vector<Edge>{{u, p}, {u, q}, {u2, p}, {u3, q}, {u2, u3}, {p, q}}) edge(x, y, r);
                    rec.options = {{u, p, q}, {p, u2, u3, q}};
                } else {
                    for (auto [x, y] : std::vector<Edge>{{u, p}, {u, q}, {u2, p}, {u2, q}, {p, q}}) edge(x, y, r);
                    rec.options = {{u, p, q}, {u2, p, q}};
                }
            } else {
                if (dbl) {
                    for (auto [x, y] : std::vector<Edge>{{p, u}, {p, u2}, {u2, u3}, {u3, q}, {q, u}}) edge(x, y, r);
                    rec.options = {{p, u, q}, {p, u2, u3, q}};
                } else {
                    for (auto [x, y] : std::vector<Edge>{{p, u}, {p, u2}, {q, u}, {q, u2}}) edge(x, y, r);
                    rec.options = {{p, u, q}, {p, u2, q}};
                }
                rec.request = static_cast<int>(requests.size());
                requests.emplace_back(p, q);
            }
        } else {
            throw std::logic_error("gadget template: unknown directive " + op);
        }
    }
    return id;
}

std::vector<Plane::Crossing> Plane::find_crossings() const {
    std::set<std::pair<long long, long long>> seen;
    for (int v = 1; v <= n(); ++v) {
        auto key = std::make_pair(std::llround(pts_[v].x * 1e6), std::llround(pts_[v].y * 1e6));
        if (!seen.insert(key).second) throw std::logic_error("plane: two vertices at one point (" + names_[v] + ")");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [a, b] = edges_[i];
        for (int v = 1; v <= n(); ++v) {
            if (v == a || v == b) continue;
            if (near_zero(orient(pts_[a], pts_[b], pts_[v]), pts_[a], pts_[b], pts_[v]) &&
                inside(pts_[a], pts_[b], pts_[v]))
                throw std::logic_error("plane: vertex " + names_[v] + " lies on an edge");
        }
    }
    std::vector<Crossing> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (std::size_t j = i + 1; j < edges_.size(); ++j) {
            auto [a, b] = edges_[i];
            auto [c, d] = edges_[j];
            if (a == c || a == d || b == c || b == d) {
                if (make_edge(a, b) == make_edge(c, d)) throw std::logic_error("plane: parallel edge");
                continue;  // collinear overlap would put a vertex on an edge, caught above
            }
            Pt p = pts_[a], q = pts_[b], r = pts_[c], s = pts_[d];
            double o1 = orient(p, q, r), o2 = orient(p, q, s), o3 = orient(r, s, p), o4 = orient(r, s, q);
            if ((o1 > 0) == (o2 > 0) || (o3 > 0) == (o4 > 0)) continue;
            double den = cross(sub(q, p), sub(s, r));
            double t1 = cross(sub(r, p), sub(s, r)) / den;
            double t2 = cross(sub(r, p), sub(q, p)) / den;
            out.push_back({static_cast<int>(i), static_cast<int>(j), {p.x + t1 * (q.x - p.x), p.y + t1 * (q.y - p.y)}, t1, t2});
        }
    return out;
}

int Plane::crossings() const { return static_cast<int>(find_crossings().size()); }

int Plane::resolve() {
    auto cr = find_crossings();
    if (cr.empty()) return 0;
    // per crossed edge: (t, entry, exit, inner path)
    struct Hit {
        double t;
        std::vector<int> path;
    };
    std::map<int, std::vector<Hit>> hits;
    std::vector<Pt> spots;
    for (auto& c : cr) spots.push_back(c.at);
    for (std::size_t k = 0; k < cr.size(); ++k) {
        auto& c = cr[k];
        double dmin = std::numeric_limits<double>::infinity();
        for (int v = 1; v <= n(); ++v) dmin = std::min(dmin, norm(sub(pts_[v], c.at)));
        for (std::size_t o = 0; o < cr.size(); ++o)
            if (o != k) dmin = std::min(dmin, norm(sub(spots[o], c.at)));
        for (std::size_t e = 0; e < edges_.size(); ++e)
            if (static_cast<int>(e) != c.e1 && static_cast<int>(e) != c.e2)
                dmin = std::min(dmin, seg_dist(c.at, pts_[edges_[e].first], pts_[edges_[e].second]));
        double s = dmin / 8;
        auto [a, b] = edges_[c.e1];
        auto [p, q] = edges_[c.e2];
        Pt u = unit(sub(pts_[b], pts_[a])), w = unit(sub(pts_[q], pts_[p]));
        Affine t{c.at, {s * u.x, s * u.y}, {s * w.x, s * w.y}};
        int f1 = frame_of(owner_[c.e1]), f2 = frame_of(owner_[c.e2]);
        int parent = (f1 == f2 && f1 >= 0 && recs[f1].kind != "SC") ? f1 : -1;
        std::string own = f1 >= 0 ? recs[f1].owner : "plane";
        auto id = place(gadget_data::path_crossing, t, {}, own, parent);
        hits[c.e1].push_back({c.t1, {id["pc1"], id["w11"], id["w12"], id["w0"], id["w32"], id["w31"], id["pc3"]}});
        hits[c.e2].push_back({c.t2, {id["pc4"], id["w41"], id["w42"], id["w0"], id["w22"], id["w21"], id["pc2"]}});
    }
    std::vector<Edge> keep;
    std::vector<int> keep_owner;
    std::vector<std::pair<Edge, int>> links;
    std::vector<std::vector<int>> chains;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto it = hits.find(static_cast<int>(e));
        if (it == hits.end()) {
            keep.push_back(edges_[e]);
            keep_owner.push_back(owner_[e]);
            continue;
        }
        auto& hs = it->second;
        std::sort(hs.begin(), hs.end(), [](const Hit& x, const Hit& y) { return x.t < y.t; });
        std::vector<int> path{edges_[e].first};
        for (auto& h : hs) {
            links.push_back({{path.back(), h.path.front()}, owner_[e]});
            path.insert(path.end(), h.path.begin(), h.path.end());
        }
        links.push_back({{path.back(), edges_[e].second}, owner_[e]});
        path.push_back(edges_[e].second);
        chains.push_back(path);
    }
    edges_ = keep;
    owner_ = keep_owner;
    for (auto& [e, own] : links) edge(e.first, e.second, own);
    for (auto& path : chains) {
        if (path.front() > path.back()) std::reverse(path.begin(), path.end());
        routes[make_edge(path.front(), path.back())] = path;
    }
    if (crossings() != 0) throw std::logic_error("plane: crossings left after gadget insertion");
    return static_cast<int>(cr.size());
}

Graph Plane::graph() const {
    std::vector<Edge> es;
    for (auto [a, b] : edges_) es.push_back(make_edge(a, b));
    return Graph(n(), es);
}

RotationSystem Plane::rotation() const {
    RotationSystem rs;
    rs.order.assign(n() + 1, {});
    for (auto [a, b] : edges_) {
        rs.order[a].push_back(b);
        rs.order[b].push_back(a);
    }
    for (int v = 1; v <= n(); ++v) {
        auto ang = [&](int w) {
            double t = std::atan2(pts_[w].y - pts_[v].y, pts_[w].x - pts_[v].x);
            return t < 0 ? t + 2 * M_PI : t;
        };
        std::sort(rs.order[v].begin(), rs.order[v].end(), [&](int x, int y) { return ang(x) < ang(y); });
    }
    return rs;
}

std::vector<int> Plane::outer_linear(int v) const {
    auto rs = rotation();
    auto faces = trace_faces(graph(), rs);
    const std::vector<Edge>* outer = nullptr;
    double best = std::numeric_limits<double>::infinity();
    for (auto& f : faces) {
        double area = 0;
        for (auto [a, b] : f) area += cross(pts_[a], pts_[b]);
        if (area < best) best = area, outer = &f;
    }
    auto ord = rs.order[v];
    if (outer)
        for (auto [a, b] : *outer)
            if (b == v) {
                std::rotate(ord.begin(), std::find(ord.begin(), ord.end(), a), ord.end());
                return ord;
            }
    throw std::logic_error("plane: port " + names_[v] + " is not on the outer face");
}

void Plane::finish_asks() {
    for (auto& r : recs) {
        bool leaf = r.kind == "expel" || r.kind == "double-expel" || r.kind == "SC";
        r.asks = leaf ? 1 : 0;
    }
    for (int i = static_cast<int>(recs.size()) - 1; i >= 0; --i)
        if (recs[i].parent >= 0) recs[recs[i].parent].asks += recs[i].asks;
}

}  // namespace ptw::detail
