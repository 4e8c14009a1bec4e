#pragma once

#include "ctk/cartan.hpp"
#include "ctk/covering.hpp"

namespace ctk {

// Subgroup of (Z/modulus)^dim in canonical (Howell) form, so subgroup
// equality is basis equality.
struct TorusSubgroup {
    int dim = 0;
    Int modulus;
    std::vector<Vec> basis; // Howell form rows

    static TorusSubgroup from_generators(int dim, const Int& modulus,
                                         const std::vector<Vec>& gens);
    static TorusSubgroup full(int dim, const Int& modulus);

    Int order() const;
    bool contains(const Vec& v) const;
    bool operator==(const TorusSubgroup&) const = default;
};

TorusSubgroup subgroup_intersect(const TorusSubgroup& a, const TorusSubgroup& b);

// Index permutation of theta on the cover's vertex order.
std::vector<int> theta_permutation(const CoverDiagram& c);

// nu(x) = x - theta(x); image of S under nu.
TorusSubgroup nu_image(const TorusSubgroup& s, const std::vector<int>& perm);

// Cartan operator of the lifted (orientable) twist data over the cover.
CartanOperator lifted_cartan(const AmalgamSpec& spec, const CoverDiagram& c,
                             RhoConvention conv = RhoConvention::definition);

// K = ker of the lifted Cartan operator; requires a connected cover.
TorusSubgroup compute_K(const AmalgamSpec& spec, const CoverDiagram& c,
                        RhoConvention conv = RhoConvention::definition);

struct ConditionDReport {
    Int K_order, MK_order, nuK_order, quotient_order;
    int quotient_rank = 0;  // the quotient is elementary abelian 2
    bool condition_D = false;
    std::vector<std::string> warnings;

    std::string to_text() const;
};

// The snake-lemma quotient (M cap K) / nu(K) inside (Z/(q-1))^{2n}.
// Errors on orientable input; q < 7 warns but proceeds.
ConditionDReport condition_D_quotient(const AmalgamSpec& spec,
                                      RhoConvention conv = RhoConvention::definition);

} // namespace ctk
