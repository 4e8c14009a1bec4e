#pragma once

#include <set>

#include "ctk/cartan.hpp"
#include "ctk/twist.hpp"

namespace ctk {

// Concrete F_q arithmetic for the brute-force side. Elements are encoded as
// base-p digit strings of their coefficient vectors (0 is zero, 1 is one);
// the modulus is the lexicographically smallest monic irreducible of degree m.
class Fq {
public:
    explicit Fq(const FieldSpec& f);

    const FieldSpec& spec() const { return field_; }
    long q() const { return field_.q; }
    long generator() const { return gen_; }
    const std::vector<int>& modulus_poly() const { return modpoly_; } // low-to-high, degree m

    long add(long a, long b) const;
    long sub(long a, long b) const;
    long neg(long a) const;
    long mul(long a, long b) const;
    long inv(long a) const;    // throws on zero
    long pow(long a, long e) const;
    long frobenius(long a, int times) const; // x -> x^{p^times}
    long dlog(long a) const;   // exponent of the generator; throws on zero
    long from_dlog(long e) const;

private:
    FieldSpec field_;
    std::vector<int> modpoly_;
    long gen_ = 0;
    std::vector<long> dlog_;
    std::vector<long> pow_;
};

// Dense matrix over F_q.
struct MatFq {
    const Fq* f = nullptr;
    std::vector<std::vector<long>> a;

    static MatFq identity(const Fq& f, int n);
    int n() const { return (int)a.size(); }
    long det() const;
    MatFq mul(const MatFq& other) const;
    MatFq inverse() const;
    MatFq transpose() const;
    bool operator==(const MatFq& other) const { return a == other.a; }
};

MatFq upper_unipotent(const Fq& f, long t); // (1 t; 0 1)
MatFq lower_unipotent(const Fq& f, long t); // (1 0; t 1)
MatFq diag2(const Fq& f, long x);           // (x 0; 0 x^{-1})

// Apply a twist to a 2x2 matrix: Frobenius entrywise, tau as transpose
// inverse.
MatFq twisted(const MatFq& m, const Twist& tw);

enum class EmbedSide { first, second };

// Block embedding SL_2 -> SL_3 with the twist applied before placement.
MatFq embed_edge(const MatFq& m, EmbedSide side, const Twist& tw);

// Embedding of SL_2 at node i (1-based) of the A_n path into SL_{n+1}.
MatFq embed_node(const MatFq& m, int i, int n);

// d(a) = prod_i diag-embedding of (a_i, a_i^{-1}) at node i.
MatFq torus_element(const Fq& f, const std::vector<long>& a, int n);

// Verifies the conjugation law for g at node i of the untwisted A_n path:
// conjugating the embedded g by the embedded d(a) multiplies the upper entry
// by the field element whose dlog is apply(Cartan, dlog a)_i, the lower entry
// by its inverse, and fixes the diagonal. Only A_n paths are supported.
bool torus_conjugation_check(const Diagram& d, const Fq& f, int i,
                             const std::vector<long>& a, const MatFq& g);

// All a in (F_q*)^n whose torus element is central in SL_{n+1}, decided by
// commutation with the unipotent generators. Returned as dlog vectors.
std::set<std::vector<long>> brute_force_central_torus(int n, const Fq& f);

// Brute-force central torus == enumerated kernel of the symbolic Cartan
// operator of the untwisted A_n path.
bool oracle_vs_symbolic(int n, const Fq& f);

} // namespace ctk
