#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ctk/errors.hpp"

namespace ctk {

using Vertex = int;
using EdgePair = std::pair<Vertex, Vertex>; // normalized: first < second

EdgePair make_edge(Vertex a, Vertex b);

// Simply-laced diagram: undirected graph, no loops, no parallel edges, and
// for valid inputs connected, triangle-free, with at least 3 vertices.
struct Diagram {
    std::vector<Vertex> vertices; // ordered list of labels
    std::set<EdgePair> edges;

    Diagram() = default;
    Diagram(std::vector<Vertex> verts, const std::vector<EdgePair>& edge_list);

    int size() const { return (int)vertices.size(); }
    bool has_vertex(Vertex v) const;
    bool has_edge(Vertex a, Vertex b) const;
    int index_of(Vertex v) const; // position in `vertices`; throws if absent
    std::vector<Vertex> neighbors(Vertex v) const; // ascending
    bool operator==(const Diagram&) const = default;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Diagram& d);
void require_valid(const Diagram& d); // throws ValidationError listing violations

// BFS spanning tree; neighbors explored in ascending label order, so the
// tree, the internal order, and the chord set are all reproducible.
struct SpanningTree {
    Vertex root = 0;
    std::set<EdgePair> tree_edges;
    std::map<Vertex, Vertex> parent;    // root absent
    std::vector<Vertex> bfs_order;      // internal order, root first
    std::map<Vertex, int> order_index;  // vertex -> position in bfs_order

    std::vector<EdgePair> chords(const Diagram& d) const; // ascending
    bool precedes(Vertex a, Vertex b) const;              // a before b in bfs_order
};

SpanningTree spanning_tree(const Diagram& d, Vertex root);

// One generator of the free group pi(Gamma, root) per chord: the unique
// minimal loop through the chord, directed so the chord is traversed from
// the endpoint nearer the root.
struct CycleGenerator {
    EdgePair chord;
    std::vector<Vertex> cycle; // closed walk: cycle.front() == cycle.back()
};

std::vector<CycleGenerator> fundamental_generators(const Diagram& d, const SpanningTree& t);

// Canonical partition: blocks sorted ascending, ordered by smallest element.
struct Partition {
    std::vector<std::vector<Vertex>> blocks;

    static Partition singletons(const std::vector<Vertex>& vs);
    static Partition from_pairs(const std::vector<Vertex>& vs,
                                const std::vector<EdgePair>& pairs);

    std::vector<Vertex> domain() const; // sorted union of blocks
    bool same_block(Vertex a, Vertex b) const;
    int block_count() const { return (int)blocks.size(); }
    bool is_discrete() const; // all singletons
    std::string to_string() const; // {1,3}|{2}
    bool operator==(const Partition&) const = default;
};

// The relation pairing non-adjacent vertices that have a common neighbor
// and identical neighborhoods.
Partition sim0(const Diagram& d);

bool refines(const Partition& p, const Partition& q);

} // namespace ctk
