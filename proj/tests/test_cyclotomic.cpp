#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spr/cyclotomic.hpp"

using namespace spr;

TEST_CASE("field degrees are Euler phi") {
    const int phi[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
    for (int m = 1; m <= 12; ++m) CHECK(make_cyclo_field(m).degree == phi[m]);
}

TEST_CASE("zeta has exact order m") {
    for (int m = 1; m <= 12; ++m) {
        auto F = make_cyclo_field(m);
        CycloNum z = cyclo_zeta_pow(F, 1);
        CycloNum acc = cyclo_one(F);
        for (int k = 1; k < m; ++k) {
            acc = cyclo_mul(F, acc, z);
            CHECK(acc == cyclo_zeta_pow(F, k));
            if (k < m) CHECK_FALSE(acc == cyclo_one(F));
        }
        CHECK(cyclo_mul(F, acc, z) == cyclo_one(F));
        // negative exponents wrap
        CHECK(cyclo_zeta_pow(F, -1) == cyclo_zeta_pow(F, m - 1));
    }
}

TEST_CASE("inverses round-trip") {
    for (int m : {3, 4, 5, 6, 7, 8, 12}) {
        auto F = make_cyclo_field(m);
        // a haphazard nonzero element: 2/3 + zeta - zeta^2/5
        CycloNum a = cyclo_rat(F, Rat(2, 3));
        a = cyclo_add(a, cyclo_zeta_pow(F, 1));
        a = cyclo_sub(a, cyclo_mul(F, cyclo_rat(F, Rat(1, 5)), cyclo_zeta_pow(F, 2)));
        CHECK(cyclo_mul(F, a, cyclo_inv(F, a)) == cyclo_one(F));
        CHECK_THROWS_AS(cyclo_inv(F, cyclo_zero(F)), std::invalid_argument);
    }
}

TEST_CASE("zeta-power recognition") {
    auto F = make_cyclo_field(12);
    for (int k = 0; k < 12; ++k) CHECK(cyclo_as_zeta_power(F, cyclo_zeta_pow(F, k)) == k);
    CHECK(cyclo_as_zeta_power(F, cyclo_rat(F, 2)) == -1);
}

TEST_CASE("rank and kernel over a cyclotomic field") {
    auto F = make_cyclo_field(5);
    CycloNum z = cyclo_zeta_pow(F, 1);
    // [[1, z], [z^4, 1]] has rank 1 since z * z^4 = 1
    CycloMat mat{{cyclo_one(F), z}, {cyclo_zeta_pow(F, 4), cyclo_one(F)}};
    CHECK(cyclo_rank(F, mat) == 1);
    auto ker = cyclo_kernel(F, mat);
    REQUIRE(ker.size() == 1);
    // check the kernel vector annihilates the matrix
    for (const auto& row : mat) {
        CycloNum dot = cyclo_zero(F);
        for (std::size_t j = 0; j < row.size(); ++j)
            dot = cyclo_add(dot, cyclo_mul(F, row[j], ker[0][j]));
        CHECK(cyclo_is_zero(dot));
    }

    // identity has full rank and empty kernel
    CycloMat id{{cyclo_one(F), cyclo_zero(F)}, {cyclo_zero(F), cyclo_one(F)}};
    CHECK(cyclo_rank(F, id) == 2);
    CHECK(cyclo_kernel(F, id).empty());
}

TEST_CASE("span membership") {
    auto F = make_cyclo_field(3);
    CycloVec v1{cyclo_one(F), cyclo_zeta_pow(F, 1), cyclo_zero(F)};
    CycloVec v2{cyclo_zero(F), cyclo_one(F), cyclo_one(F)};
    CycloVec in = v1;
    for (std::size_t i = 0; i < 3; ++i)
        in[i] = cyclo_add(in[i], cyclo_mul(F, cyclo_zeta_pow(F, 2), v2[i]));
    CHECK(cyclo_in_span(F, {v1, v2}, in));
    CycloVec out{cyclo_one(F), cyclo_zero(F), cyclo_one(F)};
    CHECK_FALSE(cyclo_in_span(F, {v1, v2}, out));
}
