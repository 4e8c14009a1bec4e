#pragma once

#include <string>

#include "ctk/errors.hpp"
#include "ctk/zmodn.hpp"

namespace ctk {

// Finite field F_q with q = p^m. Only the sizes matter here: the
// multiplicative group is handled additively as Z/(q-1).
struct FieldSpec {
    long p = 0;
    int m = 0;
    long q = 0;

    FieldSpec() = default;
    FieldSpec(long p_, int m_); // validates primality (trial division) and q >= 4

    Int units() const { return q - 1; } // |F_q*|
    bool operator==(const FieldSpec&) const = default;
};

FieldSpec field_from_q(long q); // factor q as p^m; throws if not a prime power

// Element of <tau> x Aut(F_q): inversion (sign -1) composed with a power of
// the Frobenius x -> x^p. Acts on residues mod q-1 by x -> sign * p^frob * x.
struct Twist {
    int sign = 1;   // +1 or -1
    int frob = 0;   // exponent in Z/m
    FieldSpec field;

    bool is_identity() const { return sign == 1 && frob == 0; }
    bool operator==(const Twist&) const = default;
};

Twist identity_twist(const FieldSpec& f);
Twist tau_twist(const FieldSpec& f);
Twist frob_twist(const FieldSpec& f, int e);

Twist compose(const Twist& a, const Twist& b); // throws on field mismatch
Twist invert(const Twist& a);
Int act(const Twist& a, const Int& x); // sign * p^frob * x mod (q-1)

// Additive multiplier of the action: sign * p^frob mod (q-1).
Int multiplier(const Twist& a);
// Signed integer representative sign * p^frob, for exact lifts.
Int multiplier_lift(const Twist& a);

// Literals: `id`, `tau`, `frob^e`, `tau*frob^e`.
Twist parse_twist(const std::string& s, const FieldSpec& f); // ValidationError on bad syntax
std::string format_twist(const Twist& a);

} // namespace ctk
