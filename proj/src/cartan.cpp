#include "ctk/cartan.hpp"

#include <sstream>

namespace ctk {

namespace {

Int mod_norm(Int x, const Int& n)
{
    Int r = x % n;
    if (r < 0) r += n;
    return r;
}

} // namespace

CartanOperator build_cartan_generic(const Diagram& d, const Int& modulus,
                                    const std::function<Int(Vertex, Vertex)>& lift_fn)
{
    CartanOperator k;
    k.order = d.vertices;
    k.modulus = modulus;
    int n = d.size();
    k.lift.assign(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) {
        k.lift[i][i] = -2;
        for (Vertex j : d.neighbors(k.order[i]))
            k.lift[i][d.index_of(j)] = lift_fn(k.order[i], j);
    }
    k.entries = k.lift;
    for (auto& row : k.entries)
        for (auto& x : row) x = mod_norm(x, modulus);
    return k;
}

CartanOperator build_cartan(const AmalgamSpec& spec, RhoConvention conv)
{
    auto lift_fn = [&spec, conv](Vertex i, Vertex j) -> Int {
        Twist t = rho(spec, j, i);
        if (conv == RhoConvention::remark && t.sign == 1 && t.frob != 0) {
            // write the later-direction value as minus the chord's p^s
            Twist inv = invert(t);
            if (!spec.tree.precedes(i, j)) return -multiplier_lift(inv);
        }
        return multiplier_lift(t);
    };
    return build_cartan_generic(spec.diagram, spec.field.units(), lift_fn);
}

Vec apply(const CartanOperator& k, const Vec& a)
{
    if ((int)a.size() != k.n()) throw PreconditionError("cartan apply: dimension mismatch");
    return mat_apply_mod(k.entries, a, k.modulus);
}

namespace {

// Lexicographically least unit multiple of g mod n.
Vec normalize_generator(const Vec& g, const Int& n)
{
    Vec best = g;
    for (Int u = 1; u < n; ++u) {
        if (gcd(u, n) != 1) continue;
        Vec cand(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) cand[i] = mod_norm(u * g[i], n);
        if (cand < best) best = cand;
    }
    return best;
}

} // namespace

AbelianGroupPresentation kernel(const CartanOperator& k)
{
    KernelModN km = kernel_mod(k.entries, k.modulus);
    AbelianGroupPresentation p;
    p.invariant_factors = km.annihilators;
    p.order = km.order();
    for (const auto& g : km.generators)
        p.generators.push_back(normalize_generator(g, k.modulus));
    return p;
}

Int determinant_of_lift(const CartanOperator& k)
{
    return det_exact(k.lift);
}

CenterReport center_report_for(const CartanOperator& k, RhoConvention conv)
{
    CenterReport r;
    r.cartan = k;
    r.ker = kernel(k);
    r.convention = conv;
    // column span order via the Howell form of the transposed matrix
    Mat cols(k.n(), Vec(k.n()));
    for (int i = 0; i < k.n(); ++i)
        for (int j = 0; j < k.n(); ++j) cols[j][i] = k.entries[i][j];
    auto h = howell_form(cols, k.modulus, k.n());
    r.image_order = howell_span_order(h, k.modulus);
    Int total;
    mpz_pow_ui(total.get_mpz_t(), k.modulus.get_mpz_t(), (unsigned long)k.n());
    r.rank_nullity_ok = (r.ker.order * r.image_order == total);
    return r;
}

CenterReport center_report(const AmalgamSpec& spec, RhoConvention conv)
{
    return center_report_for(build_cartan(spec, conv), conv);
}

std::string CenterReport::to_text() const
{
    std::ostringstream os;
    os << "convention: "
       << (convention == RhoConvention::definition ? "definition" : "remark") << "\n";
    os << "matrix:";
    for (int i = 0; i < cartan.n(); ++i) {
        os << "\n ";
        for (int j = 0; j < cartan.n(); ++j) os << " " << cartan.lift[i][j];
    }
    os << "\ndet_lift: " << determinant_of_lift(cartan) << "\n";
    os << "kernel_order: " << ker.order << "\n";
    os << "invariant_factors:";
    for (const auto& f : ker.invariant_factors) os << " " << f;
    os << "\ngenerators:";
    if (ker.generators.empty()) os << " none";
    for (const auto& g : ker.generators) {
        os << "\n  (";
        for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
        os << ")";
    }
    os << "\nimage_order: " << image_order << "\n";
    os << "rank_nullity: " << (rank_nullity_ok ? "consistent" : "INCONSISTENT") << "\n";
    return os.str();
}

} // namespace ctk
