#pragma once

#include <map>

#include "ctk/diagram.hpp"
#include "ctk/twist.hpp"

namespace ctk {

// Twist assignment on the chords of the spanning tree: e -> omega(gamma(e)).
using OmegaSpec = std::map<EdgePair, Twist>;

// A Curtis-Tits amalgam presented by its diagram, field, twist data and the
// relation recording which non-edge pairs are central-product quotients.
struct AmalgamSpec {
    Diagram diagram;
    FieldSpec field;
    Vertex root = 0;         // spanning tree root
    SpanningTree tree;
    OmegaSpec omega;         // keyed by chord
    Partition bad_pairs;     // the input relation; equality for the standard amalgam

    // Validates the diagram, checks omega's domain is exactly the chord set,
    // and bad_pairs partitions the vertex set. In characteristic 2 bad_pairs
    // must be discrete.
    AmalgamSpec(Diagram d, FieldSpec f, OmegaSpec om, Partition bp, Vertex root);
    // Standard amalgam: discrete bad_pairs.
    AmalgamSpec(Diagram d, FieldSpec f, OmegaSpec om, Vertex root);
};

// Subspace of GF(2)^I spanned by indicator vectors e_i + e_j. Vertices are
// indexed by position in the diagram's vertex list.
struct ZVectorSpace {
    int dim = 0;
    std::vector<std::vector<int>> basis; // reduced row echelon over GF(2)

    static ZVectorSpace zero(int dim);
    static ZVectorSpace span_of(int dim, const std::vector<std::vector<int>>& vectors);

    int dimension() const { return (int)basis.size(); }
    bool contains(std::vector<int> v) const;
    ZVectorSpace extended(const std::vector<std::vector<int>>& more) const;
    bool operator==(const ZVectorSpace&) const = default;
};

// omega({j,i}) when {i,j} is a chord and i precedes j in the internal order;
// identity otherwise. Throws on non-edges.
Twist omega_edge(const AmalgamSpec& spec, Vertex j, Vertex i);

// rho(j,i) = omega(i,j)^{-1} omega(j,i).
Twist rho(const AmalgamSpec& spec, Vertex j, Vertex i);

bool is_orientable(const AmalgamSpec& spec);

// A non-trivial universal completion exists iff bad_pairs
// refines sim0. Characteristic 2 always answers true.
bool has_nontrivial_completion(const AmalgamSpec& spec);

// Span of z1's vectors together with e_k + e_l over intra-block pairs.
// Rejects even characteristic.
ZVectorSpace z_span(const FieldSpec& f, const Diagram& d, const Partition& relation,
                    const ZVectorSpace& z1);

// Partition generated by the sim0-pairs whose z-vector lies in
// z_span(bad_pairs, z1). Idempotent. Characteristic 2 returns bad_pairs.
Partition closure(const AmalgamSpec& spec, const ZVectorSpace& z1);
Partition closure(const AmalgamSpec& spec); // z1 = zero subspace

// The amalgam injects into its completion iff bad_pairs is
// closed. Requires has_nontrivial_completion; characteristic 2 answers true.
bool injects_into_completion(const AmalgamSpec& spec, const ZVectorSpace& z1);
bool injects_into_completion(const AmalgamSpec& spec);

// Upper bound 2^(|I| - #blocks) on the relevant central quotient.
Int isogeny_bound(const AmalgamSpec& spec);

// (2m)^{b1} twist assignments up to the classification bijection.
Int count_omega_types(const Diagram& d, const FieldSpec& f);

} // namespace ctk
