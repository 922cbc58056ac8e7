#include <doctest.h>

#include "oracles.hpp"
#include "torb/decide.hpp"
#include "torb/errors.hpp"

using namespace torb;

TEST_CASE("form_invariants pinned values") {
    FormInvariants f = form_invariants(IntMatrix{{2, 0}, {0, -3}});
    CHECK(f.abs_det == 6);
    CHECK(f.n_plus == 1);
    CHECK(f.n_zero == 0);
    CHECK(f.n_minus == 1);
    CHECK(f.rank == 2);
    CHECK_FALSE(f.even);

    f = form_invariants(IntMatrix{{0}});
    CHECK(f.abs_det == 0);
    CHECK(f.n_zero == 1);
    CHECK(f.rank == 0);
    CHECK(f.even);

    f = form_invariants(IntMatrix{{0, 1}, {1, 0}});
    CHECK(f.abs_det == 1);
    CHECK(f.n_plus == 1);
    CHECK(f.n_minus == 1);
    CHECK(f.even);

    f = form_invariants(IntMatrix{{2, 1}, {1, 2}});
    CHECK(f.n_plus == 2);
    CHECK(f.n_minus == 0);
    CHECK(f.abs_det == 3);

    CHECK_THROWS_AS(form_invariants(IntMatrix{{0, 1}, {2, 0}}), InputError);
}

TEST_CASE("form_invariants is a congruence invariant") {
    testing::Rng rng(601);
    for (int k = 0; k < 100; ++k) {
        std::size_t n = static_cast<std::size_t>(rng.pick(1, 3));
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Int v = rng.pick_int(-5, 5);
                a.at(i, j) = v;
                a.at(j, i) = v;
            }
        IntMatrix w = testing::random_unimodular(rng, n, 4);
        CHECK(form_invariants(w.transposed() * a * w) == form_invariants(a));
    }
}

TEST_CASE("splitting_system pinned") {
    CupTriple t = make_triple(1, 6, IntMatrix{{1}}, {4}, 4);
    auto [sys, rhs] = splitting_system(t, 3);
    CHECK(sys == IntMatrix{{1}, {1}});
    CHECK(rhs == std::vector<Int>{2, 2});
    CHECK_THROWS_AS(splitting_system(t, 2), InputError);
    CHECK_THROWS_AS(splitting_system(t, 5), InputError);
}

TEST_CASE("lift_solution pinned") {
    CHECK(lift_solution({2}, 1, 3) == std::vector<Int>{2});
    CHECK(lift_solution({1}, 2, 3) == std::vector<Int>{4});
    CHECK(lift_solution({1, 2}, 0, 5) == std::vector<Int>{1, 2});
}

TEST_CASE("lift_solution congruences hold generically") {
    testing::Rng rng(602);
    for (int k = 0; k < 100; ++k) {
        unsigned s = static_cast<unsigned>(rng.pick(0, 4));
        Int q = 2 * rng.pick_int(0, 30) + 1;
        Int two_s = Int(1) << s;
        std::vector<Int> y{rng.pick_int(0, 60) % q, rng.pick_int(0, 60) % q};
        std::vector<Int> lift = lift_solution(y, s, q);
        for (std::size_t i = 0; i < y.size(); ++i) {
            CHECK(mod_floor(lift[i], q) == y[i]);
            CHECK(lift[i] % two_s == 0);
            CHECK(lift[i] >= 0);
            CHECK(lift[i] < two_s * q);
        }
    }
}

TEST_CASE("decide_split worked fixture") {
    CupTriple t = make_triple(1, 6, IntMatrix{{1}}, {4}, 4);
    SplitVerdict v = decide_split(t);
    CHECK(v.outcome == SplitVerdict::Outcome::Splits);
    CHECK(v.s == 1);
    CHECK(v.q == 3);
    CHECK(v.y == std::vector<Int>{2});
    CHECK(v.lift == std::vector<Int>{2});
    REQUIRE(v.reduced.has_value());
    CHECK(*v.reduced == make_triple(1, 2, IntMatrix{{1}}, {0}, 0));

    SplitVerdict again = decide_split(*v.reduced);
    CHECK(again.outcome == SplitVerdict::Outcome::NoOddPart);
    CHECK(again.s == 1);
    CHECK(again.q == 1);
}

TEST_CASE("decide_split negative and trivial cases") {
    SplitVerdict v = decide_split(make_triple(1, 3, IntMatrix{{0}}, {1}, 0));
    CHECK(v.outcome == SplitVerdict::Outcome::NoSplit);

    v = decide_split(make_triple(1, 4, IntMatrix{{2}}, {0}, 0));
    CHECK(v.outcome == SplitVerdict::Outcome::NoOddPart);
    CHECK(v.s == 2);
    CHECK(v.q == 1);

    v = decide_split(make_triple(2, 1, IntMatrix{{1, 0}, {0, 1}}));
    CHECK(v.outcome == SplitVerdict::Outcome::NoOddPart);
}

TEST_CASE("decide_split agrees with the exhaustive oracle") {
    testing::Rng rng(603);
    const long pool[] = {3, 5, 6, 9, 12, 15, 45};
    for (int k = 0; k < 150; ++k) {
        std::size_t n = static_cast<std::size_t>(rng.pick(1, 3));
        Int m = pool[rng.pick(0, 6)];
        CupTriple t = testing::random_triple(rng, n, m);
        auto [s, q] = split_two_part(m);
        SplitVerdict fast = decide_split(t);
        BruteSplitResult slow = brute_force_split(t, q);
        CHECK((fast.outcome == SplitVerdict::Outcome::Splits) == slow.solvable);
        if (fast.outcome != SplitVerdict::Outcome::Splits) continue;
        auto [sys, rhs] = splitting_system(t, q);
        CHECK(testing::verifies_mod(sys, rhs, q, fast.y));
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(mod_floor(fast.lift[i], q) == fast.y[i]);
            CHECK(fast.lift[i] % (Int(1) << s) == 0);
        }
        CHECK(fast.reduced->m == Int(1) << s);
    }
}

TEST_CASE("brute_force_split respects its budget") {
    testing::Rng rng(604);
    CupTriple t = testing::random_triple(rng, 3, 45);
    CHECK_THROWS_AS(brute_force_split(t, 45, 1000), BudgetError);
    CHECK_NOTHROW(brute_force_split(t, 45, 100000));
}

TEST_CASE("congruence_equiv fixtures") {
    EquivVerdict v = congruence_equiv(IntMatrix{{1}}, IntMatrix{{2}}, 4);
    CHECK(v.outcome == EquivVerdict::Outcome::NotEquivalent);
    CHECK(v.reason == "|det| differs: 1 vs 2");
    CHECK(v.homotopy_conclusive);

    v = congruence_equiv(IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, -1}}, 4);
    CHECK(v.outcome == EquivVerdict::Outcome::NotEquivalent);
    CHECK(v.reason == "signature differs: (2,0,0) vs (1,0,1)");

    v = congruence_equiv(IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{0, -1}, {-1, 0}}, 4);
    REQUIRE(v.outcome == EquivVerdict::Outcome::Equivalent);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->w == IntMatrix{{1, 0}, {0, -1}});

    CHECK_THROWS_AS(congruence_equiv(IntMatrix{{1}}, IntMatrix(2, 2), 1), InputError);
}

TEST_CASE("congruence_equiv inconclusive at depth zero") {
    EquivVerdict v =
        congruence_equiv(IntMatrix{{1, 0}, {0, 2}}, IntMatrix{{2, 0}, {0, 1}}, 0);
    CHECK(v.outcome == EquivVerdict::Outcome::Inconclusive);
    CHECK(v.reason == "search exhausted at depth 0");
}

TEST_CASE("ring_equiv pinned witness") {
    CupTriple t1 = make_triple(1, 3, IntMatrix{{1}}, {0}, 0);
    CupTriple t2 = make_triple(1, 3, IntMatrix{{1}}, {2}, 1);
    EquivVerdict v = ring_equiv(t1, t2, 4);
    REQUIRE(v.outcome == EquivVerdict::Outcome::Equivalent);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->w == IntMatrix{{-1}});
    CHECK(v.witness->y == std::vector<Int>{1});
    CHECK(v.witness->z == 1);
    CHECK(v.homotopy_conclusive);
    CHECK(transform(t1, *v.witness) == t2);

    EquivVerdict self = ring_equiv(t1, t1, 4);
    REQUIRE(self.outcome == EquivVerdict::Outcome::Equivalent);
    CHECK(self.witness->w == IntMatrix::identity(1));
    CHECK(self.witness->y == std::vector<Int>{0});
    CHECK(self.witness->z == 1);
}

TEST_CASE("ring_equiv certificates and flags") {
    CupTriple a = make_triple(1, 3, IntMatrix{{1}}, {0}, 0);
    CupTriple b = make_triple(1, 5, IntMatrix{{1}}, {0}, 0);
    EquivVerdict v = ring_equiv(a, b, 4);
    CHECK(v.outcome == EquivVerdict::Outcome::NotEquivalent);
    CHECK(v.reason == "m differs: 3 vs 5");
    CHECK(v.homotopy_conclusive);

    CupTriple c = make_triple(1, 6, IntMatrix{{1}}, {0}, 0);
    v = ring_equiv(a, c, 4);
    CHECK(v.outcome == EquivVerdict::Outcome::NotEquivalent);
    CHECK_FALSE(v.homotopy_conclusive);

    CHECK_THROWS_AS(
        ring_equiv(a, make_triple(2, 3, IntMatrix(2, 2), {0, 0}, 0), 4),
        InputError);

    // Same invariants, no witness in the depth-0 ball. m = 1 is odd, so an
    // outcome here would still be conclusive for homotopy type.
    CupTriple d1 = make_triple(2, 1, IntMatrix{{1, 0}, {0, 2}});
    CupTriple d2 = make_triple(2, 1, IntMatrix{{2, 0}, {0, 1}});
    v = ring_equiv(d1, d2, 0);
    CHECK(v.outcome == EquivVerdict::Outcome::Inconclusive);
    CHECK(v.homotopy_conclusive);
}

TEST_CASE("ring_equiv closes over constructed equivalences") {
    testing::Rng rng(605);
    for (int k = 0; k < 60; ++k) {
        std::size_t n = static_cast<std::size_t>(rng.pick(1, 2));
        Int m = rng.pick_int(1, 9);
        CupTriple t = testing::random_triple(rng, n, m);
        CellMapRep r = testing::random_equivalence_rep(rng, n, m, 4);
        CupTriple t2 = transform(t, r);
        EquivVerdict v = ring_equiv(t, t2, 4);
        REQUIRE(v.outcome == EquivVerdict::Outcome::Equivalent);
        CHECK(transform(t, *v.witness) == t2);
        CHECK(is_equivalence_rep(*v.witness, m));
    }
}

TEST_CASE("brute_force_equiv agrees and guards its budget") {
    CupTriple t1 = make_triple(1, 3, IntMatrix{{1}}, {0}, 0);
    CupTriple t2 = make_triple(1, 3, IntMatrix{{1}}, {2}, 1);
    EquivVerdict v = brute_force_equiv(t1, t2, 12);
    REQUIRE(v.outcome == EquivVerdict::Outcome::Equivalent);
    CHECK(transform(t1, *v.witness) == t2);
    CHECK_THROWS_AS(brute_force_equiv(t1, t2, 11), BudgetError);

    // Constructed equivalences whose W stays inside the {-1,0,1} box.
    testing::Rng rng(606);
    for (int k = 0; k < 30; ++k) {
        std::size_t n = static_cast<std::size_t>(rng.pick(1, 2));
        Int m = rng.pick_int(1, 6);
        CupTriple t = testing::random_triple(rng, n, m);
        CellMapRep r = testing::random_equivalence_rep(rng, n, m, 1);
        bool boxed = true;
        for (const Int& e : r.w.entries())
            if (e < -1 || e > 1) boxed = false;
        if (!boxed) continue;
        CupTriple moved = transform(t, r);
        EquivVerdict slow = brute_force_equiv(t, moved);
        REQUIRE(slow.outcome == EquivVerdict::Outcome::Equivalent);
        CHECK(transform(t, *slow.witness) == moved);
        EquivVerdict fast = ring_equiv(t, moved, 4);
        CHECK(fast.outcome == EquivVerdict::Outcome::Equivalent);
    }

    v = brute_force_equiv(make_triple(1, 1, IntMatrix{{1}}),
                          make_triple(1, 1, IntMatrix{{2}}));
    CHECK(v.outcome == EquivVerdict::Outcome::NotEquivalent);
}
