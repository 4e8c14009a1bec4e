#include "ctk/covering.hpp"

#include <algorithm>

namespace ctk {

std::string CoverDiagram::name_of(Vertex v) const
{
    Vertex b = projection.at(v);
    return std::to_string(b) + (v == b ? "" : "'");
}

bool CoverDiagram::connected() const
{
    if (cover.vertices.empty()) return true;
    std::set<Vertex> seen{cover.vertices.front()};
    std::vector<Vertex> queue{cover.vertices.front()};
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        for (Vertex u : cover.neighbors(v))
            if (seen.insert(u).second) queue.push_back(u);
    }
    return seen.size() == cover.vertices.size();
}

CoverDiagram build_double_cover(const AmalgamSpec& spec)
{
    CoverDiagram c;
    c.base = spec.diagram;
    auto [lo, hi] = std::minmax_element(c.base.vertices.begin(), c.base.vertices.end());
    c.offset = *hi - *lo + 1;

    std::vector<Vertex> verts;
    for (Vertex v : c.base.vertices) verts.push_back(v);
    for (Vertex v : c.base.vertices) verts.push_back(v + c.offset);
    for (Vertex v : c.base.vertices) {
        c.projection[v] = v;
        c.projection[v + c.offset] = v;
        c.theta[v] = v + c.offset;
        c.theta[v + c.offset] = v;
    }

    std::vector<EdgePair> edges;
    for (const auto& [i, j] : c.base.edges) {
        auto it = spec.omega.find({i, j});
        int sign = it != spec.omega.end() ? it->second.sign : 1;
        if (sign == 1) {
            edges.push_back(make_edge(i, j));
            edges.push_back(make_edge(i + c.offset, j + c.offset));
        } else {
            edges.push_back(make_edge(i, j + c.offset));
            edges.push_back(make_edge(i + c.offset, j));
        }
    }
    c.cover = Diagram(verts, edges);
    if (is_orientable(spec))
        c.warnings.push_back("omega is orientable; the cover is two disjoint copies of the base");
    return c;
}

LiftedOmega lift_omega(const AmalgamSpec& spec, const CoverDiagram& c)
{
    if (c.base != spec.diagram || c.cover.edges != build_double_cover(spec).cover.edges)
        throw PreconditionError("cover was built from a different spec");
    LiftedOmega out;
    for (const auto& e : c.cover.edges) {
        EdgePair base_edge = make_edge(c.projection.at(e.first), c.projection.at(e.second));
        auto it = spec.omega.find(base_edge);
        Twist t = it != spec.omega.end() ? it->second : identity_twist(spec.field);
        t.sign = 1; // strip the <tau> component; the sheets already encode it
        out[e] = t;
    }
    return out;
}

Diagram theta_orbit_diagram(const CoverDiagram& c)
{
    if (!c.connected())
        throw PreconditionError("theta-orbit contraction requires a connected cover");
    std::vector<EdgePair> edges;
    std::set<EdgePair> seen;
    for (const auto& [a, b] : c.cover.edges) {
        EdgePair e = make_edge(c.projection.at(a), c.projection.at(b));
        if (seen.insert(e).second) edges.push_back(e);
    }
    return Diagram(c.base.vertices, edges);
}

} // namespace ctk
