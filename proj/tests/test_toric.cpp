#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "torb/errors.hpp"
#include "torb/toric.hpp"

using namespace torb;

namespace {

const CharacteristicData kZ3{{{1, 3}, {-1, 0}, {1, -3}, {1, 0}}};
const CharacteristicData kSmooth{{{1, 0}, {0, 1}, {-1, -1}}};
const CharacteristicData kFiveGon{{{1, 0}, {2, 9}, {1, 3}, {-2, -3}, {-1, -9}}};

CharacteristicData apply_gl2(const CharacteristicData& data, const IntMatrix& u) {
    CharacteristicData out;
    for (const Vec2& v : data.xi) {
        std::vector<Int> w = mat_vec(u, {v[0], v[1]});
        out.xi.push_back(Vec2{w[0], w[1]});
    }
    return out;
}

}  // namespace

TEST_CASE("validate catches each failure mode in order") {
    CHECK_FALSE(validate(kSmooth).has_value());
    CHECK_FALSE(validate(kZ3).has_value());
    CHECK_FALSE(validate(kFiveGon).has_value());

    auto err = validate(CharacteristicData{{{1, 0}, {0, 1}}});
    REQUIRE(err.has_value());
    CHECK(err->kind == ValidationError::Kind::TooFewEdges);

    err = validate(CharacteristicData{{{2, 4}, {0, 1}, {-1, -1}}});
    REQUIRE(err.has_value());
    CHECK(err->kind == ValidationError::Kind::NonPrimitive);
    CHECK(err->index == 1);

    err = validate(CharacteristicData{{{1, 0}, {2, 1}, {1, 0}}});
    REQUIRE(err.has_value());
    CHECK(err->kind == ValidationError::Kind::AdjacentDependent);
    CHECK(err->index == 3);  // wrap-around pair (3, 1)

    // Parallel-but-opposite adjacent vectors are dependent too.
    err = validate(CharacteristicData{{{1, 0}, {-1, 0}, {0, 1}}});
    REQUIRE(err.has_value());
    CHECK(err->kind == ValidationError::Kind::AdjacentDependent);
    CHECK(err->index == 1);

    CHECK_THROWS_AS(require_valid(CharacteristicData{{{1, 0}, {0, 1}}}), InputError);
    CHECK_NOTHROW(require_valid(kZ3));
}

TEST_CASE("lens_orders pinned table") {
    IntMatrix m = lens_orders(kZ3);
    REQUIRE(m.rows() == 4);
    CHECK(m.at(0, 1) == 3);
    CHECK(m.at(0, 2) == 6);
    CHECK(m.at(0, 3) == 3);
    CHECK(m.at(1, 2) == 3);
    CHECK(m.at(1, 3) == 0);
    CHECK(m.at(2, 3) == 3);
    CHECK(m.is_symmetric());
    for (std::size_t i = 0; i < 4; ++i) CHECK(m.at(i, i) == 0);
}

TEST_CASE("torsion_order") {
    CHECK(torsion_order(kZ3) == 3);
    CHECK(torsion_order(kSmooth) == 1);
    CHECK(torsion_order(kFiveGon) == 3);
}

TEST_CASE("cohomology tables") {
    CohomologyTable t = cohomology(kZ3);
    CHECK(t.h0.rank == 1);
    CHECK(t.h0.torsion == 1);
    CHECK(t.h1.rank == 0);
    CHECK(t.h1.torsion == 1);
    CHECK(t.h2.rank == 2);
    CHECK(t.h2.torsion == 1);
    CHECK(t.h3.rank == 0);
    CHECK(t.h3.torsion == 3);
    CHECK(t.h4.rank == 1);
    CHECK(t.h4.torsion == 1);

    t = cohomology(kSmooth);
    CHECK(t.h2.rank == 1);
    CHECK(t.h3.rank == 0);
    CHECK(t.h3.torsion == 1);
}

TEST_CASE("nu_p is the p-power itself") {
    CHECK(nu_p(45, 3) == 9);
    CHECK(nu_p(45, 5) == 5);
    CHECK(nu_p(45, 2) == 1);
    CHECK(nu_p(12, 2) == 4);
    CHECK(nu_p(12, 3) == 3);
    CHECK_THROWS_AS(nu_p(0, 2), InputError);
    CHECK_THROWS_AS(nu_p(5, 4), InputError);
}

TEST_CASE("vertex_for_prime pinned") {
    CHECK(vertex_for_prime(kFiveGon, 3) == 2);
    CHECK(vertex_for_prime(kZ3, 3) == 1);
    CHECK_THROWS_AS(vertex_for_prime(kSmooth, 3), InputError);
    CHECK_THROWS_AS(vertex_for_prime(kZ3, 2), InputError);
}

TEST_CASE("vertex_for_prime succeeds for every prime dividing m") {
    testing::Rng rng(401);
    for (int k = 0; k < 100; ++k) {
        CharacteristicData data =
            testing::random_fan(rng, static_cast<std::size_t>(rng.pick(3, 8)), 20);
        Int m = torsion_order(data);
        for (const auto& [p, e] : factorize(m)) {
            std::size_t i = vertex_for_prime(data, p);
            CHECK(i >= 1);
            CHECK(i <= data.edges());
            IntMatrix orders = lens_orders(data);
            std::size_t a = i - 1;
            std::size_t b = i % data.edges();
            CHECK(nu_p(orders.at(a, b), p) == nu_p(m, p));
        }
    }
}

TEST_CASE("vertex_kernel pinned example") {
    CharacteristicData data{{{1, 0}, {1, 3}, {-1, -1}}};
    REQUIRE_FALSE(validate(data).has_value());
    LensDescriptor lens = vertex_kernel(data, 1);
    CHECK(lens.vertex_index == 1);
    CHECK(lens.order == 3);
    CHECK(lens.kernel_generator == Vec2{2, 1});
}

TEST_CASE("vertex_kernel generator properties") {
    testing::Rng rng(402);
    for (int k = 0; k < 100; ++k) {
        CharacteristicData data =
            testing::random_fan(rng, static_cast<std::size_t>(rng.pick(3, 6)), 12);
        for (std::size_t i = 1; i <= data.edges(); ++i) {
            LensDescriptor lens = vertex_kernel(data, i);
            const Vec2& a = data.vec(i);
            const Vec2& b = data.vec(i + 1);
            IntMatrix m{{a[0], b[0]}, {a[1], b[1]}};
            Int d = m.det();
            CHECK(lens.order == (d < 0 ? -d : d));
            if (lens.order == 1) continue;
            // (g0/d, g1/d) lies in the kernel: M maps it into Z^2.
            std::vector<Int> image =
                mat_vec(m, {lens.kernel_generator[0], lens.kernel_generator[1]});
            CHECK(image[0] % lens.order == 0);
            CHECK(image[1] % lens.order == 0);
            // It generates a cyclic group of full order d.
            CHECK(gcd(gcd(lens.kernel_generator[0], lens.kernel_generator[1]),
                      lens.order) == 1);
            // Canonical form: second numerator 1.
            CHECK(lens.kernel_generator[1] == 1);
            CHECK(lens.kernel_generator[0] >= 0);
            CHECK(lens.kernel_generator[0] < lens.order);
        }
    }
}

TEST_CASE("toric outputs are invariant under ambient GL2 changes of basis") {
    testing::Rng rng(403);
    for (int k = 0; k < 60; ++k) {
        CharacteristicData data =
            testing::random_fan(rng, static_cast<std::size_t>(rng.pick(3, 6)), 12);
        IntMatrix u = testing::random_unimodular(rng, 2, 6);
        CharacteristicData moved = apply_gl2(data, u);
        REQUIRE_FALSE(validate(moved).has_value());
        CHECK(lens_orders(moved) == lens_orders(data));
        CHECK(torsion_order(moved) == torsion_order(data));
        for (std::size_t i = 1; i <= data.edges(); ++i) {
            LensDescriptor l1 = vertex_kernel(data, i);
            LensDescriptor l2 = vertex_kernel(moved, i);
            CHECK(l1.order == l2.order);
            CHECK(l1.kernel_generator == l2.kernel_generator);
        }
        Int m = torsion_order(data);
        for (const auto& [p, e] : factorize(m)) {
            CHECK(vertex_for_prime(moved, p) == vertex_for_prime(data, p));
        }
    }
}

TEST_CASE("reversing the cyclic order preserves the derived values") {
    testing::Rng rng(404);
    for (int k = 0; k < 40; ++k) {
        CharacteristicData data =
            testing::random_fan(rng, static_cast<std::size_t>(rng.pick(3, 6)), 12);
        CharacteristicData rev = data;
        std::reverse(rev.xi.begin(), rev.xi.end());
        REQUIRE_FALSE(validate(rev).has_value());
        CHECK(torsion_order(rev) == torsion_order(data));
        CohomologyTable t1 = cohomology(data);
        CohomologyTable t2 = cohomology(rev);
        CHECK(t1.h2.rank == t2.h2.rank);
        CHECK(t1.h3.torsion == t2.h3.torsion);
        std::vector<Int> o1, o2;
        for (std::size_t i = 1; i <= data.edges(); ++i) {
            o1.push_back(vertex_kernel(data, i).order);
            o2.push_back(vertex_kernel(rev, i).order);
        }
        std::sort(o1.begin(), o1.end());
        std::sort(o2.begin(), o2.end());
        CHECK(o1 == o2);
    }
}
