#include <catch2/catch.hpp>

#include <nakafock/numerology.hpp>

using namespace nakafock;

TEST_CASE("moduli dimension", "[numerology]") {
    CHECK(moduli_dim(ModuliParams(1, 0, 5)) == 10);   // Hilbert scheme, dim 2n
    CHECK(moduli_dim(ModuliParams(2, 0, 3)) == 12);
    CHECK(moduli_dim(ModuliParams(3, -2, 1)) == 10);  // 6 + 4
    CHECK(ModuliParams(3, -2, 1).b() == 4);

    for (int r = 1; r <= 4; ++r)
        for (long long c2 : {-3ll, 0ll, 2ll})
            for (long long n = -1; n <= 5; ++n)
                for (int i = 1; i <= 4; ++i)
                    CHECK(moduli_dim(ModuliParams(r, c2, n + i)) -
                              moduli_dim(ModuliParams(r, c2, n)) ==
                          2ll * r * i);

    CHECK_THROWS_AS(ModuliParams(0, 0, 1), std::invalid_argument);
}

TEST_CASE("quot fiber dimension", "[numerology]") {
    CHECK(quot_fiber_dim(1, {1, 1, 1}) == 0);  // symmetric product points
    CHECK(quot_fiber_dim(2, {1, 1}) == 2);
    CHECK(quot_fiber_dim(3, {2}) == 5);        // rd - 1
    CHECK(quot_fiber_dim(2, {}) == 0);

    for (int r = 1; r <= 4; ++r)
        for (const auto& mults : std::vector<std::vector<int>>{
                 {1}, {3}, {2, 1}, {2, 2}, {5, 3, 1}, {1, 1, 1, 1}}) {
            long long n_minus_s = 0;
            for (int m : mults) n_minus_s += m;
            CHECK(quot_fiber_dim(r, mults) ==
                  r * n_minus_s - static_cast<long long>(mults.size()));
        }

    CHECK_THROWS_AS(quot_fiber_dim(2, {0}), std::invalid_argument);
}

TEST_CASE("cycle dimensions", "[numerology]") {
    CHECK(cycle_dims(1, 0, 7, CycleMode::fixed) == 7);    // punctual cycles, rk
    CHECK(cycle_dims(2, 1, 3, CycleMode::family) == 10);  // 2rs + rk
    CHECK(cycle_dims(3, 2, 0, CycleMode::fixed) == 0);

    for (int r = 1; r <= 3; ++r)
        for (int s = 0; s <= 3; ++s)
            for (int k = 0; k <= 4; ++k)
                CHECK(cycle_dims(r, s, k, CycleMode::family) -
                          cycle_dims(r, s, k, CycleMode::fixed) ==
                      2ll * r * s);
}

TEST_CASE("degree shifts preserve middle degree exactly for curve classes",
          "[numerology]") {
    CHECK(degree_shift_check(2, 1, 2).preserved);
    CHECK(degree_shift_check(1, 3, 2).preserved);
    {
        const auto rep = degree_shift_check(1, 3, 0);
        CHECK_FALSE(rep.preserved);
        CHECK(rep.shift == -2ll * 1 * 3 - 2);
    }
    for (int r = 1; r <= 4; ++r)
        for (int i : {-4, -2, -1, 1, 2, 4})
            for (int deg : {0, 2, 4, 6}) {
                const auto rep = degree_shift_check(r, i, deg);
                CHECK(rep.preserved == (deg == 2));
                CHECK(rep.source_middle.n_coeff == 2ll * r);
                CHECK(rep.image.n_coeff == rep.target_middle.n_coeff);
            }
    CHECK_THROWS_AS(degree_shift_check(2, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(degree_shift_check(2, 1, 3), std::invalid_argument);
}

TEST_CASE("correspondence dimension discrepancy is surfaced", "[numerology]") {
    // stated and shift-consistent dimensions agree only for i = 1 (and all i < 0)
    for (int r = 1; r <= 3; ++r) {
        CHECK(correspondence_dim_check(r, 1).agree);
        CHECK_FALSE(correspondence_dim_check(r, 2).agree);
        CHECK_FALSE(correspondence_dim_check(r, 3).agree);
        CHECK(correspondence_dim_check(r, -1).agree);
        CHECK(correspondence_dim_check(r, -2).agree);
        const auto rep = correspondence_dim_check(r, 2);
        CHECK(rep.stated.constant == r + 1);
        CHECK(rep.consistent.constant == 2ll * r + 1);
    }
}
