#pragma once

#include "ctk/amalgam.hpp"

namespace ctk {

// 2-sheeted cover of the base diagram determined by the sign holonomy of
// omega. Sheet-0 lifts keep the base label; sheet-1 lifts are shifted by a
// fixed offset and print with a prime.
struct CoverDiagram {
    Diagram base;
    Diagram cover;
    Vertex offset = 0;                  // sheet-1 label = base label + offset
    std::map<Vertex, Vertex> projection; // cover vertex -> base vertex
    std::map<Vertex, Vertex> theta;      // sheet swap
    std::vector<std::string> warnings;   // set when the input was orientable

    int sheet(Vertex v) const { return projection.at(v) == v ? 0 : 1; }
    std::string name_of(Vertex v) const; // "i" or "i'"
    bool connected() const;
};

// Orientable twist data on the cover: each cover edge carries the sign-free
// part of its base edge's assigned omega.
using LiftedOmega = std::map<EdgePair, Twist>;

// Tree edges and sign +1 chords lift within-sheet; sign -1 chords lift
// cross-sheet. Orientable input yields two disjoint copies plus a warning.
CoverDiagram build_double_cover(const AmalgamSpec& spec);

LiftedOmega lift_omega(const AmalgamSpec& spec, const CoverDiagram& c);

// Contract theta-orbits; the result is the base diagram again.
Diagram theta_orbit_diagram(const CoverDiagram& c); // throws if disconnected

} // namespace ctk
