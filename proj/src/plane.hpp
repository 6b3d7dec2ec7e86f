#pragma once

#include <map>
#include <string>
#include <vector>

#include "ptw/graph.hpp"
#include "ptw/reductions.hpp"

namespace ptw::detail {

enum class Variant { Plain, Cycles, Paths };

struct Pt {
    double x = 0, y = 0;
};

struct Affine {
    Pt o{0, 0}, ex{1, 0}, ey{0, 1};
    Pt apply(double x, double y) const { return {o.x + x * ex.x + y * ey.x, o.y + x * ex.y + y * ey.y}; }
    static Affine shift(double dx, double dy) { return {{dx, dy}, {1, 0}, {0, 1}}; }
};

// Straight-line drawing with gadget bookkeeping. Ids are 1-based.
class Plane {
public:
    explicit Plane(Variant v) : var_(v), pts_(1), names_(1) {}

    int vertex(Pt p, const std::string& name);
    void edge(int a, int b, int owner = -1);
    // Template text (see data/gadgets). Names found in bind reuse those
    // vertices; the rest are created. Returns name -> id.
    std::map<std::string, int> place(const std::string& text, const Affine& t,
                                     const std::map<std::string, int>& bind, const std::string& owner,
                                     int parent = -1);
    // Every proper crossing becomes a path-crossing gadget. Returns the count.
    int resolve();
    int crossings() const;

    int n() const { return static_cast<int>(pts_.size()) - 1; }
    Graph graph() const;
    RotationSystem rotation() const;
    // rotation of v rotated to start right after the outer face corner
    std::vector<int> outer_linear(int v) const;
    void finish_asks();

    const std::vector<Pt>& points() const { return pts_; }
    const std::vector<std::string>& names() const { return names_; }
    std::vector<GadgetRecord> recs;
    std::vector<Edge> requests;  // indexed by GadgetRecord::request
    std::map<Edge, std::vector<int>> routes;

private:
    struct Crossing {
        int e1, e2;
        Pt at;
        double t1, t2;
    };
    std::vector<Crossing> find_crossings() const;
    int frame_of(int rec) const;
    int new_record(const std::string& kind, const std::string& owner, int parent);

    Variant var_;
    std::vector<Pt> pts_;
    std::vector<std::string> names_;
    std::vector<Edge> edges_;  // drawn segments, not normalized
    std::vector<int> owner_;
};

}  // namespace ptw::detail
