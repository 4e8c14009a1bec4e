#include <doctest.h>

#include <random>

#include "ctk/amalgam.hpp"

using namespace ctk;

namespace {

Diagram path3() { return Diagram({1, 2, 3}, {{1, 2}, {2, 3}}); }
Diagram square() { return Diagram({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }
Diagram star4() { return Diagram({1, 2, 3, 4}, {{1, 4}, {2, 4}, {3, 4}}); }
Diagram e6()
{
    return Diagram({1, 2, 3, 4, 5, 6}, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}});
}
Diagram e6_loop()
{
    return Diagram({1, 2, 3, 4, 5, 6}, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}, {3, 6}});
}

// the looped diagram rooted at 6, single chord {4,5} carrying tau
AmalgamSpec tau_loop_spec(const FieldSpec& f)
{
    return AmalgamSpec(e6_loop(), f, {{{4, 5}, tau_twist(f)}}, 6);
}

} // namespace

TEST_CASE("spec validation")
{
    FieldSpec f7(7, 1);
    CHECK_NOTHROW(AmalgamSpec(path3(), f7, {}, 1));
    // omega domain must equal the chord set
    CHECK_THROWS_AS(AmalgamSpec(square(), f7, {}, 1), ValidationError);
    CHECK_THROWS_AS(AmalgamSpec(path3(), f7, {{{1, 3}, tau_twist(f7)}}, 1), ValidationError);
    // chord set depends on the root
    CHECK_NOTHROW(tau_loop_spec(f7));
    CHECK_THROWS_AS(AmalgamSpec(e6_loop(), f7, {{{4, 5}, tau_twist(f7)}}, 1), ValidationError);
    CHECK_NOTHROW(AmalgamSpec(e6_loop(), f7, {{{5, 6}, tau_twist(f7)}}, 1));
    // twists must live over the spec's field
    CHECK_THROWS_AS(AmalgamSpec(square(), f7, {{{3, 4}, tau_twist(FieldSpec(5, 1))}},
                                Partition::singletons({1, 2, 3, 4}), 1),
                    ValidationError);
    // bad_pairs domain mismatch
    CHECK_THROWS_AS(AmalgamSpec(path3(), f7, {}, Partition::singletons({1, 2}), 1),
                    ValidationError);
    // characteristic 2 forbids merged blocks
    FieldSpec f4(2, 2);
    CHECK_THROWS_AS(AmalgamSpec(path3(), f4, {},
                                Partition::from_pairs({1, 2, 3}, {{1, 3}}), 1),
                    ValidationError);
    CHECK_NOTHROW(AmalgamSpec(path3(), f4, {}, 1));
}

TEST_CASE("omega_edge and rho")
{
    FieldSpec f7(7, 1);
    AmalgamSpec sp = tau_loop_spec(f7);
    // tree edges carry the identity both ways
    CHECK(omega_edge(sp, 3, 1) == identity_twist(f7));
    CHECK(omega_edge(sp, 1, 3) == identity_twist(f7));
    CHECK(rho(sp, 3, 1) == identity_twist(f7));
    // the chord carries tau in exactly one direction (5 precedes 4 from root 6)
    CHECK(omega_edge(sp, 4, 5) == tau_twist(f7));
    CHECK(omega_edge(sp, 5, 4) == identity_twist(f7));
    // rho is inversion in both directions
    CHECK(rho(sp, 5, 4) == tau_twist(f7));
    CHECK(rho(sp, 4, 5) == tau_twist(f7));
    CHECK_THROWS_AS(omega_edge(sp, 1, 2), PreconditionError);
    CHECK_THROWS_AS(rho(sp, 1, 6), PreconditionError);

    // all-identity omega on the same diagram
    AmalgamSpec id_sp(e6_loop(), f7, {{{4, 5}, identity_twist(f7)}}, 6);
    CHECK(omega_edge(id_sp, 4, 5) == identity_twist(f7));
    CHECK(rho(id_sp, 5, 4) == identity_twist(f7));
}

TEST_CASE("rho antisymmetry on random specs")
{
    std::mt19937 rng(11);
    FieldSpec f(3, 3);
    std::vector<Twist> pool;
    for (int sg : {1, -1})
        for (int e = 0; e < 3; ++e) pool.push_back(Twist{sg, e, f});
    for (int trial = 0; trial < 50; ++trial) {
        OmegaSpec om{{{4, 5}, pool[rng() % pool.size()]}};
        AmalgamSpec sp(e6_loop(), f, om, 6);
        for (const auto& [a, b] : sp.diagram.edges) {
            CHECK(rho(sp, a, b) == invert(rho(sp, b, a)));
            CHECK(compose(rho(sp, a, b), rho(sp, b, a)) == identity_twist(f));
        }
    }
}

TEST_CASE("orientability")
{
    FieldSpec f9(3, 2);
    CHECK(is_orientable(AmalgamSpec(e6_loop(), f9, {{{4, 5}, identity_twist(f9)}}, 6)));
    CHECK(is_orientable(AmalgamSpec(e6_loop(), f9, {{{4, 5}, frob_twist(f9, 1)}}, 6)));
    CHECK(!is_orientable(tau_loop_spec(f9)));
    CHECK(!is_orientable(AmalgamSpec(e6_loop(), f9, {{{4, 5}, Twist{-1, 1, f9}}}, 6)));
}

TEST_CASE("completion existence")
{
    FieldSpec f7(7, 1);
    // standard amalgams always have one
    for (auto d : {path3(), square(), star4(), e6(), e6_loop()}) {
        OmegaSpec om;
        for (const auto& c : spanning_tree(d, 1).chords(d)) om[c] = identity_twist(f7);
        CHECK(has_nontrivial_completion(AmalgamSpec(d, f7, om, 1)));
    }
    // {1,3} is a twin pair on the 3-path
    AmalgamSpec ok(path3(), f7, {}, Partition::from_pairs({1, 2, 3}, {{1, 3}}), 1);
    CHECK(has_nontrivial_completion(ok));
    // adjacent vertices are never twins
    Diagram p4({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}});
    AmalgamSpec badp(p4, f7, {}, Partition::from_pairs({1, 2, 3, 4}, {{1, 2}}), 1);
    CHECK(!has_nontrivial_completion(badp));
}

TEST_CASE("z_span dimensions")
{
    FieldSpec f7(7, 1);
    Diagram d = square();
    auto zero = ZVectorSpace::zero(4);
    CHECK(z_span(f7, d, Partition::singletons({1, 2, 3, 4}), zero).dimension() == 0);
    CHECK(z_span(f7, d, Partition::from_pairs({1, 2, 3, 4}, {{1, 3}}), zero).dimension() == 1);
    auto z1 = ZVectorSpace::span_of(4, {{1, 1, 1, 1}});
    auto sp = z_span(f7, d, Partition::from_pairs({1, 2, 3, 4}, {{1, 3}, {2, 4}}), z1);
    CHECK(sp.dimension() == 2); // e1+e3, e2+e4, sum all dependent
    CHECK(sp.contains({1, 0, 1, 0}));
    CHECK(sp.contains({0, 1, 0, 1}));
    CHECK(!sp.contains({1, 1, 0, 0}));
    CHECK_THROWS_AS(z_span(FieldSpec(2, 2), d, Partition::singletons({1, 2, 3, 4}), zero),
                    PreconditionError);
}

TEST_CASE("closure on the 4-star")
{
    FieldSpec f7(7, 1);
    Diagram d = star4();
    auto bp12 = Partition::from_pairs({1, 2, 3, 4}, {{1, 2}});
    AmalgamSpec sp(d, f7, {}, bp12, 1);
    CHECK(closure(sp).to_string() == "{1,2}|{3}|{4}"); // e1+e3 not in span{e1+e2}
    // adding e2+e3 to z1 merges 3 in
    auto z1 = ZVectorSpace::span_of(4, {{0, 1, 1, 0}});
    CHECK(closure(sp, z1).to_string() == "{1,2,3}|{4}");
    // closure of equality is equality when sim0 is trivial
    FieldSpec f13(13, 1);
    AmalgamSpec e6sp(e6(), f13, {}, 1);
    CHECK(closure(e6sp) == Partition::singletons({1, 2, 3, 4, 5, 6}));

    CHECK(injects_into_completion(sp));
    CHECK(!injects_into_completion(sp, z1));
    CHECK(injects_into_completion(e6sp));
    Diagram p4({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}});
    AmalgamSpec nope(p4, f7, {}, Partition::from_pairs({1, 2, 3, 4}, {{1, 2}}), 1);
    CHECK_THROWS_AS(injects_into_completion(nope), PreconditionError);
}

TEST_CASE("closure is idempotent and monotone on random star/square specs")
{
    std::mt19937 rng(13);
    FieldSpec f9(3, 2);
    for (int trial = 0; trial < 100; ++trial) {
        Diagram d = trial % 2 ? star4() : square();
        Partition s0 = sim0(d);
        // random sub-relation of sim0
        std::vector<EdgePair> pairs, all;
        for (const auto& blk : s0.blocks)
            for (std::size_t a = 0; a < blk.size(); ++a)
                for (std::size_t b = a + 1; b < blk.size(); ++b) all.push_back(make_edge(blk[a], blk[b]));
        for (const auto& pr : all)
            if (rng() % 2) pairs.push_back(pr);
        auto bp = Partition::from_pairs(d.vertices, pairs);
        OmegaSpec om;
        if (!spanning_tree(d, 1).chords(d).empty())
            om[{3, 4}] = rng() % 2 ? tau_twist(f9) : frob_twist(f9, 1);
        AmalgamSpec sp(d, f9, om, bp, 1);
        Partition c = closure(sp);
        CHECK(refines(bp, c));
        AmalgamSpec sp2(d, f9, om, c, 1);
        CHECK(closure(sp2) == c); // idempotent
        // monotone: coarsening bad_pairs within sim0 coarsens the closure
        AmalgamSpec coarse(d, f9, om, s0, 1);
        CHECK(refines(c, closure(coarse)));
    }
}

TEST_CASE("characteristic 2 short-circuits")
{
    FieldSpec f4(2, 2);
    AmalgamSpec sp(path3(), f4, {}, 1);
    CHECK(has_nontrivial_completion(sp));
    CHECK(injects_into_completion(sp));
    CHECK(closure(sp) == sp.bad_pairs);
}

TEST_CASE("isogeny bound and omega type count")
{
    FieldSpec f7(7, 1);
    AmalgamSpec std6(e6(), f7, {}, 1);
    CHECK(isogeny_bound(std6) == 1);
    AmalgamSpec one(path3(), f7, {}, Partition::from_pairs({1, 2, 3}, {{1, 3}}), 1);
    CHECK(isogeny_bound(one) == 2);
    AmalgamSpec two(star4(), f7, {}, Partition::from_pairs({1, 2, 3, 4}, {{1, 2}, {2, 3}}), 1);
    CHECK(isogeny_bound(two) == 4); // {{1,2,3},{4}}

    CHECK(count_omega_types(e6(), f7) == 1);
    CHECK(count_omega_types(square(), FieldSpec(2, 2)) == 4);
    CHECK(count_omega_types(e6_loop(), FieldSpec(2, 3)) == 6);
}
