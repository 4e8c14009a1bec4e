#include "ctk/diagram.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace ctk {

EdgePair make_edge(Vertex a, Vertex b)
{
    return a < b ? EdgePair{a, b} : EdgePair{b, a};
}

Diagram::Diagram(std::vector<Vertex> verts, const std::vector<EdgePair>& edge_list)
    : vertices(std::move(verts))
{
    for (const auto& e : edge_list) edges.insert(make_edge(e.first, e.second));
}

bool Diagram::has_vertex(Vertex v) const
{
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool Diagram::has_edge(Vertex a, Vertex b) const
{
    return edges.count(make_edge(a, b)) != 0;
}

int Diagram::index_of(Vertex v) const
{
    auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end())
        throw PreconditionError("vertex " + std::to_string(v) + " not in diagram");
    return (int)(it - vertices.begin());
}

std::vector<Vertex> Diagram::neighbors(Vertex v) const
{
    std::vector<Vertex> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        else if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ValidationReport validate(const Diagram& d)
{
    ValidationReport rep;
    std::set<Vertex> vs(d.vertices.begin(), d.vertices.end());
    if (vs.size() != d.vertices.size())
        rep.violations.push_back("repeated vertex label");
    if ((int)vs.size() < 3)
        rep.violations.push_back("fewer than 3 vertices");
    for (const auto& [a, b] : d.edges) {
        if (a == b) rep.violations.push_back("self-loop at " + std::to_string(a));
        if (!vs.count(a) || !vs.count(b))
            rep.violations.push_back("edge {" + std::to_string(a) + "," + std::to_string(b) +
                                     "} uses unknown vertex");
    }
    // 3-cycles
    for (const auto& [a, b] : d.edges)
        for (Vertex c : d.vertices)
            if (c > b && d.has_edge(a, c) && d.has_edge(b, c))
                rep.violations.push_back("3-cycle {" + std::to_string(a) + "," +
                                         std::to_string(b) + "," + std::to_string(c) + "}");
    // connectivity
    if (!d.vertices.empty()) {
        std::set<Vertex> seen{d.vertices.front()};
        std::deque<Vertex> q{d.vertices.front()};
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            for (Vertex u : d.neighbors(v))
                if (seen.insert(u).second) q.push_back(u);
        }
        if (seen.size() != vs.size()) rep.violations.push_back("disconnected");
    }
    return rep;
}

void require_valid(const Diagram& d)
{
    ValidationReport rep = validate(d);
    if (rep.ok()) return;
    std::string msg = "invalid diagram:";
    for (const auto& v : rep.violations) msg += " " + v + ";";
    throw ValidationError(msg);
}

SpanningTree spanning_tree(const Diagram& d, Vertex root)
{
    if (!d.has_vertex(root))
        throw PreconditionError("spanning tree root " + std::to_string(root) + " not in diagram");
    SpanningTree t;
    t.root = root;
    std::set<Vertex> seen{root};
    std::deque<Vertex> q{root};
    t.bfs_order.push_back(root);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        for (Vertex u : d.neighbors(v)) { // ascending label order
            if (!seen.insert(u).second) continue;
            t.parent[u] = v;
            t.tree_edges.insert(make_edge(v, u));
            t.bfs_order.push_back(u);
            q.push_back(u);
        }
    }
    if ((int)t.bfs_order.size() != d.size())
        throw ValidationError("diagram is disconnected; no spanning tree");
    for (int i = 0; i < (int)t.bfs_order.size(); ++i) t.order_index[t.bfs_order[i]] = i;
    return t;
}

std::vector<EdgePair> SpanningTree::chords(const Diagram& d) const
{
    std::vector<EdgePair> out;
    for (const auto& e : d.edges)
        if (!tree_edges.count(e)) out.push_back(e);
    return out;
}

bool SpanningTree::precedes(Vertex a, Vertex b) const
{
    return order_index.at(a) < order_index.at(b);
}

std::vector<CycleGenerator> fundamental_generators(const Diagram& d, const SpanningTree& t)
{
    auto path_to_root = [&](Vertex v) {
        std::vector<Vertex> path{v};
        while (path.back() != t.root) path.push_back(t.parent.at(path.back()));
        return path;
    };
    std::vector<CycleGenerator> out;
    for (const auto& chord : t.chords(d)) {
        // direct the chord from the endpoint that comes first in internal order
        Vertex i = chord.first, j = chord.second;
        if (!t.precedes(i, j)) std::swap(i, j);
        std::vector<Vertex> pi = path_to_root(i), pj = path_to_root(j);
        // strip the common tail to find the meeting point in the tree
        while (pi.size() > 1 && pj.size() > 1 && pi[pi.size() - 2] == pj[pj.size() - 2]) {
            pi.pop_back();
            pj.pop_back();
        }
        // i -> j over the chord, then j back to i through the tree: descend
        // pj to the meeting point, ascend pi (meeting point excluded).
        CycleGenerator gen;
        gen.chord = chord;
        gen.cycle.push_back(i);
        for (std::size_t k = 0; k < pj.size(); ++k) gen.cycle.push_back(pj[k]);
        for (std::size_t k = pi.size() - 1; k-- > 0;) gen.cycle.push_back(pi[k]);
        if (gen.cycle.back() != i) gen.cycle.push_back(i);
        out.push_back(std::move(gen));
    }
    return out;
}

Partition Partition::singletons(const std::vector<Vertex>& vs)
{
    std::vector<EdgePair> none;
    return from_pairs(vs, none);
}

Partition Partition::from_pairs(const std::vector<Vertex>& vs, const std::vector<EdgePair>& pairs)
{
    // union-find over vertex positions
    std::vector<Vertex> sorted(vs.begin(), vs.end());
    std::sort(sorted.begin(), sorted.end());
    auto idx = [&](Vertex v) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        if (it == sorted.end() || *it != v)
            throw PreconditionError("partition pair uses unknown vertex " + std::to_string(v));
        return (int)(it - sorted.begin());
    };
    std::vector<int> up(sorted.size());
    std::iota(up.begin(), up.end(), 0);
    auto find = [&](int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    };
    for (const auto& [a, b] : pairs) up[find(idx(a))] = find(idx(b));

    std::map<int, std::vector<Vertex>> groups;
    for (std::size_t k = 0; k < sorted.size(); ++k) groups[find((int)k)].push_back(sorted[k]);
    Partition p;
    for (auto& [rep, blk] : groups) p.blocks.push_back(std::move(blk));
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return p;
}

std::vector<Vertex> Partition::domain() const
{
    std::vector<Vertex> out;
    for (const auto& blk : blocks) out.insert(out.end(), blk.begin(), blk.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool Partition::same_block(Vertex a, Vertex b) const
{
    for (const auto& blk : blocks) {
        bool ha = std::binary_search(blk.begin(), blk.end(), a);
        bool hb = std::binary_search(blk.begin(), blk.end(), b);
        if (ha || hb) return ha && hb;
    }
    return false;
}

bool Partition::is_discrete() const
{
    for (const auto& blk : blocks)
        if (blk.size() > 1) return false;
    return true;
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << "|";
        os << "{";
        for (std::size_t k = 0; k < blocks[i].size(); ++k) {
            if (k) os << ",";
            os << blocks[i][k];
        }
        os << "}";
    }
    return os.str();
}

Partition sim0(const Diagram& d)
{
    std::vector<EdgePair> pairs;
    for (std::size_t x = 0; x < d.vertices.size(); ++x)
        for (std::size_t y = x + 1; y < d.vertices.size(); ++y) {
            Vertex i = d.vertices[x], j = d.vertices[y];
            if (d.has_edge(i, j)) continue; // (B1) non-adjacent
            auto ni = d.neighbors(i), nj = d.neighbors(j);
            std::vector<Vertex> common;
            std::set_intersection(ni.begin(), ni.end(), nj.begin(), nj.end(),
                                  std::back_inserter(common));
            if (common.empty()) continue; // (B1) common neighbor
            if (ni == nj) pairs.push_back(make_edge(i, j)); // (B2)
        }
    return Partition::from_pairs(d.vertices, pairs);
}

bool refines(const Partition& p, const Partition& q)
{
    if (p.domain() != q.domain())
        throw PreconditionError("refines: partitions have different vertex sets");
    for (const auto& blk : p.blocks)
        for (std::size_t k = 1; k < blk.size(); ++k)
            if (!q.same_block(blk[0], blk[k])) return false;
    return true;
}

} // namespace ctk
