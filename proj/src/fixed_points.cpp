#include "ctk/fixed_points.hpp"

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

TorusSubgroup TorusSubgroup::from_generators(int dim, const Int& modulus,
                                             const std::vector<Vec>& gens)
{
    for (const auto& g : gens)
        if ((int)g.size() != dim) throw PreconditionError("torus generator has wrong dimension");
    return TorusSubgroup{dim, modulus, howell_form(gens, modulus, dim)};
}

TorusSubgroup TorusSubgroup::full(int dim, const Int& modulus)
{
    std::vector<Vec> gens;
    for (int i = 0; i < dim; ++i) {
        Vec e(dim, 0);
        e[i] = 1;
        gens.push_back(e);
    }
    return from_generators(dim, modulus, gens);
}

Int TorusSubgroup::order() const { return howell_span_order(basis, modulus); }

bool TorusSubgroup::contains(const Vec& v) const
{
    if ((int)v.size() != dim) throw PreconditionError("membership test dimension mismatch");
    return howell_contains(basis, modulus, v);
}

TorusSubgroup subgroup_intersect(const TorusSubgroup& a, const TorusSubgroup& b)
{
    if (a.dim != b.dim || a.modulus != b.modulus)
        throw PreconditionError("subgroup intersection: ambient mismatch");
    // left kernel of the stacked matrix [A; -B]: rows (alpha, beta) with
    // alpha*A = beta*B, i.e. exactly the elements of the intersection
    Mat stacked;
    for (const auto& r : a.basis) stacked.push_back(r);
    for (const auto& r : b.basis) {
        Vec neg(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) neg[i] = mod_norm(-r[i], a.modulus);
        stacked.push_back(neg);
    }
    if (stacked.empty()) return TorusSubgroup::from_generators(a.dim, a.modulus, {});
    std::vector<Vec> gens;
    for (const auto& y : left_kernel_mod(stacked, a.modulus)) {
        Vec x(a.dim, 0);
        for (std::size_t i = 0; i < a.basis.size(); ++i)
            for (int j = 0; j < a.dim; ++j)
                x[j] = mod_norm(x[j] + y[i] * a.basis[i][j], a.modulus);
        gens.push_back(x);
    }
    return TorusSubgroup::from_generators(a.dim, a.modulus, gens);
}

std::vector<int> theta_permutation(const CoverDiagram& c)
{
    std::vector<int> perm(c.cover.size());
    for (int i = 0; i < c.cover.size(); ++i)
        perm[i] = c.cover.index_of(c.theta.at(c.cover.vertices[i]));
    return perm;
}

TorusSubgroup nu_image(const TorusSubgroup& s, const std::vector<int>& perm)
{
    if ((int)perm.size() != s.dim) throw PreconditionError("nu_image: ambient mismatch");
    std::vector<Vec> gens;
    for (const auto& g : s.basis) {
        Vec v(s.dim);
        for (int j = 0; j < s.dim; ++j) v[j] = mod_norm(g[j] - g[perm[j]], s.modulus);
        gens.push_back(v);
    }
    return TorusSubgroup::from_generators(s.dim, s.modulus, gens);
}

CartanOperator lifted_cartan(const AmalgamSpec& spec, const CoverDiagram& c, RhoConvention conv)
{
    // rho over the cover is the sign-free part of the base rho; the remark
    // convention follows the base chord direction
    auto lift_fn = [&](Vertex u, Vertex v) -> Int {
        Vertex bi = c.projection.at(u), bj = c.projection.at(v);
        Twist t = rho(spec, bj, bi);
        t.sign = 1;
        if (conv == RhoConvention::remark && t.frob != 0 && !spec.tree.precedes(bi, bj))
            return -multiplier_lift(invert(t));
        return multiplier_lift(t);
    };
    return build_cartan_generic(c.cover, spec.field.units(), lift_fn);
}

TorusSubgroup compute_K(const AmalgamSpec& spec, const CoverDiagram& c, RhoConvention conv)
{
    if (!c.connected())
        throw PreconditionError("cover is disconnected (orientable input); K is undefined here");
    CartanOperator k = lifted_cartan(spec, c, conv);
    KernelModN km = kernel_mod(k.entries, k.modulus);
    return TorusSubgroup::from_generators(k.n(), k.modulus, km.generators);
}

ConditionDReport condition_D_quotient(const AmalgamSpec& spec, RhoConvention conv)
{
    if (is_orientable(spec))
        throw PreconditionError("condition (D) analysis requires non-orientable omega");
    ConditionDReport r;
    if (spec.field.q < 7)
        r.warnings.push_back("q < 7 is outside the supported hypotheses; proceeding anyway");

    CoverDiagram c = build_double_cover(spec);
    std::vector<int> perm = theta_permutation(c);
    TorusSubgroup K = compute_K(spec, c, conv);

    // theta-stability of K: the permuted kernel is the same subgroup
    {
        std::vector<Vec> permuted;
        for (const auto& g : K.basis) {
            Vec v(K.dim);
            for (int j = 0; j < K.dim; ++j) v[j] = g[perm[j]];
            permuted.push_back(v);
        }
        if (TorusSubgroup::from_generators(K.dim, K.modulus, permuted) != K)
            throw PreconditionError("internal: kernel is not theta-stable");
    }

    TorusSubgroup M = nu_image(TorusSubgroup::full(K.dim, K.modulus), perm);
    TorusSubgroup MK = subgroup_intersect(M, K);
    TorusSubgroup nuK = nu_image(K, perm);

    // nu(K) <= M cap K, and every coset squares into nu(K)
    for (const auto& g : nuK.basis)
        if (!MK.contains(g)) throw PreconditionError("internal: nu(K) not inside M cap K");
    for (const auto& g : MK.basis) {
        Vec twice(g.size());
        for (std::size_t j = 0; j < g.size(); ++j) twice[j] = mod_norm(2 * g[j], K.modulus);
        if (!nuK.contains(twice))
            throw PreconditionError("internal: quotient element of order > 2");
    }

    r.K_order = K.order();
    r.MK_order = MK.order();
    r.nuK_order = nuK.order();
    r.quotient_order = r.MK_order / r.nuK_order;
    r.condition_D = (r.quotient_order == 1);
    Int qo = r.quotient_order;
    while (qo > 1) {
        if (qo % 2 != 0) throw PreconditionError("internal: quotient not elementary abelian 2");
        qo /= 2;
        ++r.quotient_rank;
    }
    return r;
}

std::string ConditionDReport::to_text() const
{
    std::ostringstream os;
    for (const auto& w : warnings) os << "warning: " << w << "\n";
    os << "K_order: " << K_order << "\n"
       << "MK_order: " << MK_order << "\n"
       << "nuK_order: " << nuK_order << "\n"
       << "quotient_order: " << quotient_order << "\n"
       << "quotient_rank: " << quotient_rank << "\n"
       << "condition_D: " << (condition_D ? "true" : "false") << "\n";
    return os.str();
}

} // namespace ctk
