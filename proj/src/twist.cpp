#include "ctk/twist.hpp"

namespace ctk {

namespace {

bool is_prime(long p)
{
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long checked_pow(long p, int m)
{
    long q = 1;
    for (int i = 0; i < m; ++i) {
        if (q > (1L << 40) / p) throw ValidationError("field size out of range");
        q *= p;
    }
    return q;
}

} // namespace

FieldSpec::FieldSpec(long p_, int m_) : p(p_), m(m_)
{
    if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw ValidationError("field exponent must be positive");
    q = checked_pow(p, m);
    if (q < 4) throw ValidationError("field must have at least 4 elements");
}

FieldSpec field_from_q(long q)
{
    if (q < 4) throw ValidationError("field must have at least 4 elements");
    for (long p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        int m = 0;
        long r = q;
        while (r % p == 0) { r /= p; ++m; }
        if (r != 1) throw ValidationError(std::to_string(q) + " is not a prime power");
        return FieldSpec(p, m);
    }
    return FieldSpec(q, 1); // q itself prime
}

Twist identity_twist(const FieldSpec& f) { return Twist{1, 0, f}; }
Twist tau_twist(const FieldSpec& f) { return Twist{-1, 0, f}; }

Twist frob_twist(const FieldSpec& f, int e)
{
    int r = e % f.m;
    if (r < 0) r += f.m;
    return Twist{1, r, f};
}

Twist compose(const Twist& a, const Twist& b)
{
    if (a.field != b.field) throw PreconditionError("twist field mismatch");
    return Twist{a.sign * b.sign, (a.frob + b.frob) % a.field.m, a.field};
}

Twist invert(const Twist& a)
{
    return Twist{a.sign, (a.field.m - a.frob) % a.field.m, a.field};
}

Int act(const Twist& a, const Int& x)
{
    Int n = a.field.units();
    Int r = (multiplier(a) * x) % n;
    if (r < 0) r += n;
    return r;
}

Int multiplier(const Twist& a)
{
    Int n = a.field.units();
    Int r = multiplier_lift(a) % n;
    if (r < 0) r += n;
    return r;
}

Int multiplier_lift(const Twist& a)
{
    Int pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), (unsigned long)a.field.p, (unsigned long)a.frob);
    return a.sign < 0 ? -pe : pe;
}

Twist parse_twist(const std::string& s, const FieldSpec& f)
{
    auto bad = [&]() -> ValidationError {
        return ValidationError("bad twist literal '" + s + "' (expected id, tau, frob^e, tau*frob^e)");
    };
    if (s == "id") return identity_twist(f);
    std::string rest = s;
    int sign = 1;
    if (rest.rfind("tau", 0) == 0) {
        sign = -1;
        rest = rest.substr(3);
        if (rest.empty()) return tau_twist(f);
        if (rest[0] != '*') throw bad();
        rest = rest.substr(1);
    }
    if (rest.rfind("frob^", 0) != 0) throw bad();
    rest = rest.substr(5);
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) throw bad();
    int e;
    try {
        e = std::stoi(rest);
    } catch (const std::exception&) {
        throw bad();
    }
    Twist t = frob_twist(f, e);
    t.sign = sign;
    return t;
}

std::string format_twist(const Twist& a)
{
    if (a.is_identity()) return "id";
    std::string s;
    if (a.sign < 0) s = "tau";
    if (a.frob != 0) {
        if (!s.empty()) s += "*";
        s += "frob^" + std::to_string(a.frob);
    }
    return s;
}

} // namespace ctk
