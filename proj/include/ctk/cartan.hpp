#pragma once

#include <functional>

#include "ctk/amalgam.hpp"
#include "ctk/zmodn.hpp"

namespace ctk {

// Convention for the additive representative of an inverted Frobenius twist.
// `definition` uses the actual inverse p^{m-s}; `remark` writes -p^s instead
// (pure Frobenius chords only). The two differ mod q-1 in general; both are
// provided for comparison.
enum class RhoConvention { definition, remark };

// Generalized Cartan operator on (Z/(q-1))^n: diagonal -2, off-diagonal
// entries the additive multipliers of the rho twists, zero off the diagram.
struct CartanOperator {
    std::vector<Vertex> order; // row/column i corresponds to order[i]
    Int modulus;               // q-1
    Mat lift;                  // signed integer entries (-2, +-p^e, 0)
    Mat entries;               // lift reduced mod q-1

    int n() const { return (int)order.size(); }
};

// Entry lifts supplied per ordered adjacent pair: lift_fn(i, j) is the signed
// representative of rho(j, i)'s multiplier, placed at row i, column j.
CartanOperator build_cartan_generic(const Diagram& d, const Int& modulus,
                                    const std::function<Int(Vertex, Vertex)>& lift_fn);

CartanOperator build_cartan(const AmalgamSpec& spec,
                            RhoConvention conv = RhoConvention::definition);

Vec apply(const CartanOperator& k, const Vec& a); // mod q-1

// Kernel of the operator as a finite abelian group. Generators are scaled to
// the lexicographically least unit multiple for readable patterns.
struct AbelianGroupPresentation {
    std::vector<Vec> generators;
    std::vector<Int> invariant_factors; // divisor chain
    Int order;
};

AbelianGroupPresentation kernel(const CartanOperator& k);

Int determinant_of_lift(const CartanOperator& k);

struct CenterReport {
    CartanOperator cartan;
    AbelianGroupPresentation ker;
    Int image_order;        // from the Howell form of the column span
    bool rank_nullity_ok;   // |ker| * |im| == (q-1)^n
    RhoConvention convention;

    std::string to_text() const; // stable key order
};

CenterReport center_report(const AmalgamSpec& spec,
                           RhoConvention conv = RhoConvention::definition);
CenterReport center_report_for(const CartanOperator& k, RhoConvention conv);

} // namespace ctk
