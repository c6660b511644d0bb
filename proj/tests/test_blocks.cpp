#include <doctest.h>

#include "ehodge/hodge_blocks.hpp"
#include "ehodge/oracles.hpp"

using namespace ehodge;

namespace {

const BiPoly u = BiPoly::u();
const BiPoly v = BiPoly::v();
const BiPoly x = BiPoly::uv_power(1);
const BiPoly one(1);
const BiPoly curve = (one + u) * (one + v);

}  // namespace

TEST_SUITE("hodge-blocks") {
    TEST_CASE("point, curve, affine, projective") {
        CHECK(e_point().value == one);
        CHECK(e_point() == e_affine(0));
        CHECK(fibration_product(e_point(), e_proj(3)) == e_proj(3));
        CHECK(e_curve().value == one + u + v + x);
        CHECK(eval(e_curve().value, Rational(-1), Rational(-1)) == Rational(0));
        CHECK(specialize_diagonal(e_curve().value) == pow(one + u, 2));
        CHECK(e_affine(1).value == x);
        CHECK(e_affine(3).value == BiPoly::monomial(3, 3));
        CHECK(e_proj(0).value == one);
        CHECK(e_proj(1).value == one + x);
        CHECK(e_proj(2).value == one + x + x * x);
    }

    TEST_CASE("grassmannians") {
        CHECK(e_grassmannian(1, 3).value == one + x + x * x);
        for (long N = 0; N <= 6; ++N) {
            CHECK(e_grassmannian(0, N).value == one);
            CHECK(e_grassmannian(N, N).value == one);
        }
        CHECK(e_grassmannian(2, 4).value == one + x + 2 * x * x + pow(x, 3) + pow(x, 4));
        CHECK(e_grassmannian(3, 7).value == oracle::gaussian_binomial(7, 3));
        CHECK_THROWS_AS(e_grassmannian(3, 2), InvalidRange);
        CHECK_THROWS_AS(e_grassmannian(-1, 2), InvalidRange);
    }

    TEST_CASE("stratifications and fibrations") {
        CHECK(stratification_sum({e_point(), e_affine(1)}) == e_proj(1));
        CHECK(stratification_sum({}).value.is_zero());
        CHECK(fibration_product(e_curve(), e_proj(1)).value == curve * (one + x));
        CHECK(fibration_product(e_curve(), e_point()) == e_curve());
        CHECK(fibration_product(e_proj(1), e_proj(1)).value == one + 2 * x + x * x);
    }

    TEST_CASE("symmetric square") {
        CHECK(z2_plus(e_curve()).value == curve * (one + x));
        CHECK(z2_plus(e_point()).value == one);
        CHECK(z2_plus(e_proj(1)).value == one + x + x * x);
        CHECK(z2_minus(e_proj(1)).value == x);
        CHECK(z2_minus(e_point()).value.is_zero());
        CHECK(z2_minus(e_curve()).value == curve * (u + v));
        for (const auto& f : {e_curve(), e_proj(3), e_grassmannian(2, 5)}) {
            CHECK(z2_plus(f).value + z2_minus(f).value == f.value * f.value);
        }
    }

    TEST_CASE("labels do not take part in equality") {
        CHECK(HodgeClass{one + x, "a"} == HodgeClass{one + x, "b"});
    }
}
