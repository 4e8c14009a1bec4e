#include <doctest.h>

#include <random>

#include "ctk/fixed_points.hpp"

using namespace ctk;

namespace {

Diagram e6_loop()
{
    return Diagram({1, 2, 3, 4, 5, 6}, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}, {3, 6}});
}

AmalgamSpec loop_tau(long q)
{
    FieldSpec f = field_from_q(q);
    return AmalgamSpec(e6_loop(), f, {{{4, 5}, tau_twist(f)}}, 6);
}

} // namespace

TEST_CASE("torus subgroup canonical form and order")
{
    Int n = 4;
    auto a = TorusSubgroup::from_generators(2, n, {{1, 1}});
    auto b = TorusSubgroup::from_generators(2, n, {{3, 3}, {2, 2}});
    CHECK(a == b); // same subgroup, same Howell basis
    CHECK(a.order() == 4);
    CHECK(a.contains({2, 2}));
    CHECK(!a.contains({1, 2}));
    CHECK(TorusSubgroup::full(3, 6).order() == 216);
    CHECK(TorusSubgroup::from_generators(2, n, {}).order() == 1);
}

TEST_CASE("subgroup intersection")
{
    Int n = 4;
    auto s20 = TorusSubgroup::from_generators(2, n, {{2, 0}});
    auto s02 = TorusSubgroup::from_generators(2, n, {{0, 2}});
    CHECK(subgroup_intersect(s20, s02).order() == 1);

    auto d = TorusSubgroup::from_generators(2, n, {{1, 1}});
    auto ad = TorusSubgroup::from_generators(2, n, {{1, 3}}); // (1,-1)
    auto meet = subgroup_intersect(d, ad);
    CHECK(meet == TorusSubgroup::from_generators(2, n, {{2, 2}}));
    CHECK(subgroup_intersect(d, d) == d);

    CHECK_THROWS_AS(subgroup_intersect(d, TorusSubgroup::full(3, n)), PreconditionError);
}

TEST_CASE("intersection agrees with enumeration on random subgroups")
{
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        long n = 2 + (long)(rng() % 9);
        int dim = 2 + (int)(rng() % 2);
        auto rand_sub = [&] {
            std::vector<Vec> gens;
            int cnt = 1 + (int)(rng() % 2);
            for (int i = 0; i < cnt; ++i) {
                Vec g(dim);
                for (auto& x : g) x = (long)(rng() % n);
                gens.push_back(g);
            }
            return TorusSubgroup::from_generators(dim, n, gens);
        };
        auto a = rand_sub(), b = rand_sub();
        auto meet = subgroup_intersect(a, b);
        // enumerate the ambient and compare memberships
        std::vector<long> x(dim, 0);
        Int count = 0;
        while (true) {
            Vec v(x.begin(), x.end());
            bool in_both = a.contains(v) && b.contains(v);
            CHECK(meet.contains(v) == in_both);
            if (in_both) ++count;
            int j = 0;
            while (j < dim && ++x[j] == n) x[j++] = 0;
            if (j == dim) break;
        }
        CHECK(meet.order() == count);
    }
}

TEST_CASE("theta permutation and nu image")
{
    CoverDiagram c = build_double_cover(loop_tau(7));
    auto perm = theta_permutation(c);
    CHECK(perm.size() == 12);
    for (int i = 0; i < 12; ++i) {
        CHECK(perm[perm[i]] == i); // involution
        CHECK(perm[i] != i);       // fixed-point-free
        CHECK(perm[i] == (i + 6) % 12);
    }

    // one orbit, ambient (Z/4)^2: M = {(t,-t)} of order 4
    auto m = nu_image(TorusSubgroup::full(2, 4), {1, 0});
    CHECK(m.order() == 4);
    CHECK(m.contains({1, 3}));
    CHECK(m.contains({3, 1}));
    CHECK(!m.contains({1, 1}));
    // nu vanishes on the diagonal (theta-fixed) subgroup
    auto diag = TorusSubgroup::from_generators(2, 4, {{1, 1}});
    CHECK(nu_image(diag, {1, 0}).order() == 1);
    CHECK(nu_image(TorusSubgroup::from_generators(2, 4, {}), {1, 0}).order() == 1);
}

TEST_CASE("|ker nu| * |im nu| fills the ambient torus")
{
    for (long q : {5, 7, 9, 13}) {
        AmalgamSpec sp = loop_tau(q);
        CoverDiagram c = build_double_cover(sp);
        auto perm = theta_permutation(c);
        Int n = q - 1;
        auto M = nu_image(TorusSubgroup::full(12, n), perm);
        // F = ker(1 - theta) via the kernel of the matrix I - P
        Mat a(12, Vec(12, 0));
        for (int i = 0; i < 12; ++i) {
            a[i][i] += 1;
            a[i][perm[i]] -= 1;
        }
        Int f_order = kernel_mod(a, n).order();
        Int total;
        mpz_pow_ui(total.get_mpz_t(), n.get_mpz_t(), 12);
        CHECK(f_order * M.order() == total);
    }
}

TEST_CASE("K over the cover")
{
    for (long q : {7, 8, 11, 13, 79}) {
        AmalgamSpec sp = loop_tau(q);
        CoverDiagram c = build_double_cover(sp);
        TorusSubgroup K = compute_K(sp, c);
        CHECK(K.order() == std::gcd(39L, q - 1));
        // K is the kernel: applying the lifted operator kills every basis row
        CartanOperator kl = lifted_cartan(sp, c);
        for (const auto& g : K.basis) CHECK(ctk::apply(kl, g) == Vec(12, 0));
    }
    // orientable input has a disconnected cover
    FieldSpec f7(7, 1);
    AmalgamSpec ori(e6_loop(), f7, {{{4, 5}, identity_twist(f7)}}, 6);
    CHECK_THROWS_AS(compute_K(ori, build_double_cover(ori)), PreconditionError);
}

TEST_CASE("condition (D) holds across the sampled fields")
{
    for (long q : {7, 8, 11, 13, 79}) {
        ConditionDReport r = condition_D_quotient(loop_tau(q));
        CHECK(r.K_order == std::gcd(39L, q - 1));
        CHECK(r.quotient_order == 1);
        CHECK(r.quotient_rank == 0);
        CHECK(r.condition_D);
        CHECK(r.MK_order == r.nuK_order);
        CHECK(r.warnings.empty());
        std::string txt = r.to_text();
        CHECK(txt.find("condition_D: true") != std::string::npos);
        CHECK(txt.find("quotient_order: 1") != std::string::npos);
    }
    // at q=79: K cyclic of order 39, M cap K = nu(K) of order 3
    // (frozen from an independent 39-element enumeration of K)
    ConditionDReport r79 = condition_D_quotient(loop_tau(79));
    CHECK(r79.K_order == 39);
    CHECK(r79.MK_order == 3);

    // small fields warn but still compute
    ConditionDReport r5 = condition_D_quotient(loop_tau(5));
    CHECK(!r5.warnings.empty());
    CHECK(r5.condition_D);

    FieldSpec f7(7, 1);
    AmalgamSpec ori(e6_loop(), f7, {{{4, 5}, frob_twist(f7, 0)}}, 6);
    CHECK_THROWS_AS(condition_D_quotient(ori), PreconditionError);
}

TEST_CASE("condition (D) machinery on other sign patterns")
{
    // square with one tau chord: 8-cycle cover (affine A_7 shape, singular)
    std::mt19937 rng(31);
    for (long q : {7, 9, 11, 13}) {
        FieldSpec f = field_from_q(q);
        Diagram sq({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
        AmalgamSpec sp(sq, f, {{{3, 4}, tau_twist(f)}}, 1);
        ConditionDReport r = condition_D_quotient(sp);
        // internal assertions (inclusion, 2-torsion, theta-stability) all ran
        CHECK(r.MK_order % r.nuK_order == 0);
        CHECK(r.quotient_order == r.MK_order / r.nuK_order);
        Int two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, (unsigned long)r.quotient_rank);
        CHECK(two_pow == r.quotient_order);
    }
    // tau*frob twists also flow through
    FieldSpec f9(3, 2);
    AmalgamSpec sp(e6_loop(), f9, {{{4, 5}, Twist{-1, 1, f9}}}, 6);
    ConditionDReport r = condition_D_quotient(sp);
    CHECK(r.quotient_order * r.nuK_order == r.MK_order);
}
