#include <doctest.h>

#include "ehodge/coherent_systems.hpp"
#include "ehodge/ratexpr.hpp"
#include "ehodge/verification.hpp"

using namespace ehodge;

namespace {

const BiPoly u = BiPoly::u();
const BiPoly v = BiPoly::v();
const BiPoly x = BiPoly::uv_power(1);
const BiPoly one(1);

BiPoly omx(std::uint32_t k) { return one - BiPoly::uv_power(k); }

// The gcd-2 closed form, with the sign of its (u+v) term as a parameter.
BiPoly g0_gcd2_with_sign(long d, bool fixed_det, long sign) {
    const auto h = static_cast<std::uint32_t>(d / 2);
    const BiPoly bracket = Rational(sign) * (u + v) * (x - BiPoly::uv_power(h)) + (one + x) * omx(h + 1);
    BiPoly num = omx(h) * bracket;
    if (!fixed_det) num = (one + u) * (one + v) * num;
    return to_poly(RatExpr(num, omx(1) * omx(1) * (one + x)));
}

BiPoly g0_gcd2_flipped_sign(long d, bool fixed_det) { return g0_gcd2_with_sign(d, fixed_det, -1); }

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        if (!r.passed) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("verification") {
    TEST_CASE("default suite passes at small bounds") {
        VerifyConfig config;
        config.max_d = 10;
        config.random_cases = 200;
        const auto results = run_verification(config);
        CHECK(results.size() == 17);
        for (const auto& r : results) {
            INFO(r.name << ": " << r.witness);
            CHECK(r.passed);
            CHECK(r.cases > 0);
        }
    }

    TEST_CASE("degenerate bounds") {
        VerifyConfig config;
        config.max_d = 2;
        config.max_a = 0;
        config.random_cases = 10;
        config.parallel = false;
        CHECK(all_passed(run_verification(config)));
    }

    TEST_CASE("the unmutated override reproduces the reference") {
        for (long d = 2; d <= 10; d += 2) {
            for (bool fixed : {false, true}) CHECK(g0_gcd2_with_sign(d, fixed, 1) == g0_gcd2_closed(d, fixed));
        }
    }

    TEST_CASE("a flipped sign in the gcd-2 closed form is caught at d=4") {
        Formulas mutated = Formulas::reference();
        mutated.g0_gcd2 = g0_gcd2_flipped_sign;
        const CheckResult r = check_stratification(20, mutated);
        CHECK_FALSE(r.passed);
        CHECK(r.witness.rfind("d=4 ", 0) == 0);

        VerifyConfig config;
        config.max_d = 8;
        config.random_cases = 10;
        config.formulas = mutated;
        CHECK_FALSE(all_passed(run_verification(config)));
    }

    TEST_CASE("a shifted chamber formula is caught") {
        Formulas mutated = Formulas::reference();
        mutated.gi_closed = [](long d, unsigned i, bool fixed) {
            return hodge_gi_closed(d, i, fixed) + (i == 1 ? BiPoly::uv_power(1) : BiPoly());
        };
        const CheckResult r = check_recursion(10, mutated);
        CHECK_FALSE(r.passed);
        CHECK_FALSE(r.witness.empty());
        CHECK(check_euler(10, mutated).passed == false);
    }

    TEST_CASE("exceptions are reported as failures") {
        Formulas broken = Formulas::reference();
        broken.g0_gcd2 = [](long, bool) -> BiPoly { throw std::runtime_error("boom"); };
        const CheckResult r = check_stratification(4, broken);
        CHECK_FALSE(r.passed);
        CHECK(r.witness.find("boom") != std::string::npos);
    }
}
