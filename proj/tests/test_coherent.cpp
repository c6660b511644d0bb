#include <doctest.h>

#include <set>

#include "ehodge/coherent_systems.hpp"
#include "ehodge/hodge_blocks.hpp"

using namespace ehodge;

namespace {

const BiPoly u = BiPoly::u();
const BiPoly v = BiPoly::v();
const BiPoly x = BiPoly::uv_power(1);
const BiPoly one(1);
const BiPoly curve = (one + u) * (one + v);

BiPoly proj(unsigned n) { return e_proj(n).value; }

ModuliQuery query(long n, long d, long k, bool fixed, Chamber c = SmallAlpha{}) { return ModuliQuery{n, d, k, fixed, c}; }

}  // namespace

TEST_SUITE("coherent-systems") {
    TEST_CASE("beta and chamber count") {
        CHECK(beta(5, 1) == 5);
        CHECK(beta(4, 4) == 1);
        CHECK(beta(6, 2) == 9);
        CHECK(chamber_count(1) == 0);
        CHECK(chamber_count(2) == 0);
        CHECK(chamber_count(5) == 2);
        CHECK(chamber_count(40) == 19);
    }

    TEST_CASE("coprime 0+ chamber") {
        const BiPoly g = hodge_g0_coprime(query(2, 3, 1, false));
        CHECK(g == curve * (one + x + x * x));
        CHECK(hodge_g0_coprime(query(2, 3, 3, true)) == one);
        for (long k = 1; k <= 7; ++k) {
            CHECK(hodge_g0_coprime(query(3, 7, k, false)).total_degree() == 2 * beta(7, k));
        }
        CHECK_THROWS_AS(hodge_g0_coprime(query(2, 4, 1, false)), PreconditionViolation);
        CHECK_THROWS_AS(hodge_g0_coprime(query(2, 3, 4, false)), PreconditionViolation);
    }

    TEST_CASE("gcd-2 strata") {
        CHECK(hodge_stratum_formula(2, false, Stratum::Generic) == x * curve);
        CHECK(hodge_stratum_formula(2, false, Stratum::Split).is_zero());
        CHECK(hodge_stratum_formula(2, false, Stratum::Extension) == curve);
        CHECK(hodge_stratum_formula(4, true, Stratum::Split) == BiPoly(4));
        for (long d = 2; d <= 12; d += 2) {
            for (bool fixed : {false, true}) {
                for (Stratum s : {Stratum::Generic, Stratum::Extension, Stratum::Split}) {
                    CHECK(hodge_stratum_formula(d, fixed, s) == hodge_stratum_constructive(d, fixed, s));
                }
            }
        }
        CHECK_THROWS_AS(hodge_stratum_formula(3, false, Stratum::Generic), PreconditionViolation);
        CHECK(hodge_stratum(query(4, 6, 1, false), Stratum::Extension) ==
              hodge_stratum_formula(6, false, Stratum::Extension));
    }

    TEST_CASE("gcd-2 closed form") {
        CHECK(hodge_g0_gcd2(query(2, 2, 1, false)) == curve * (one + x));
        CHECK(hodge_g0_gcd2(query(2, 2, 1, true)) == one + x);
        for (long d = 2; d <= 16; d += 2) {
            for (bool fixed : {false, true}) {
                BiPoly sum;
                for (Stratum s : {Stratum::Generic, Stratum::Extension, Stratum::Split}) {
                    sum += hodge_stratum(query(2, d, 1, fixed), s);
                }
                CHECK(sum == hodge_g0_gcd2(query(2, d, 1, fixed)));
            }
            CHECK(hodge_g0_gcd2(query(2, d, 1, false)) == curve * hodge_g0_gcd2(query(2, d, 1, true)));
        }
        CHECK_THROWS_AS(hodge_g0_gcd2(query(3, 6, 1, false)), PreconditionViolation);
        CHECK_THROWS_AS(hodge_g0_gcd2(query(2, 4, 2, false)), PreconditionViolation);
    }

    TEST_CASE("strata do not factor though the total does") {
        const BiPoly full = hodge_stratum_formula(4, false, Stratum::Generic);
        const BiPoly fixed = hodge_stratum_formula(4, true, Stratum::Generic);
        CHECK(full != curve * fixed);
    }

    TEST_CASE("critical values") {
        const auto cv = critical_values(5, 1);
        REQUIRE(cv.size() == 2);
        CHECK(cv[0].index == 1);
        CHECK(cv[0].d1 == 2);
        CHECK(cv[0].n1 == 3);
        CHECK(cv[0].n2 == 4);
        CHECK(cv[0].alpha == Rational(1, 4));
        CHECK(cv[1].index == 2);
        CHECK(cv[1].d1 == 1);
        CHECK(cv[1].n1 == 2);
        CHECK(cv[1].n2 == 5);
        CHECK(cv[1].alpha == Rational(3, 5));
        CHECK(cv[1].alpha < Rational(5, 6));
        for (long a = 0; a <= 4; ++a) CHECK(critical_values(2, a).empty());
    }

    TEST_CASE("exhaustive wall search") {
        CHECK(alphas(critical_values_bruteforce(7, 5)) == std::vector<Rational>{Rational(1, 4), Rational(3, 5)});
        CHECK(critical_values_bruteforce(3, 2).empty());
        CHECK(critical_values_bruteforce(2, 2).empty());
        CHECK(critical_values_bruteforce(1, 4).empty());
        const auto walls = critical_values_bruteforce(7, 5);
        REQUIRE(walls.size() == 2);
        CHECK(walls[0].decompositions == std::vector<std::pair<long, long>>{{3, 2}});
        CHECK(walls[1].decompositions == std::vector<std::pair<long, long>>{{2, 1}});
    }

    TEST_CASE("terminal chamber and flip loci") {
        CHECK(hodge_gL(1, false) == curve);
        CHECK(hodge_gL(3, true) == one + x + x * x);
        CHECK(hodge_gL(2, false) == curve * (one + x));
        CHECK(hodge_flip(5, 1, FlipSide::Plus, false) == curve * curve);
        CHECK(hodge_flip(5, 1, FlipSide::Minus, false) == proj(2) * curve * curve);
        CHECK(hodge_flip(5, 2, FlipSide::Minus, false) - hodge_flip(5, 2, FlipSide::Plus, false) ==
              curve * curve * proj(1) * (proj(0) - proj(1)));
        CHECK(hodge_flip(5, 1, FlipSide::Minus, false) == curve * hodge_flip(5, 1, FlipSide::Minus, true));
    }

    TEST_CASE("chambers") {
        for (long d = 1; d <= 12; ++d) {
            const unsigned L = chamber_count(d);
            for (bool fixed : {false, true}) {
                CHECK(hodge_gi_recursive(d, L, fixed) == hodge_gL(d, fixed));
                for (unsigned i = 0; i <= L; ++i) {
                    CHECK(hodge_gi_closed(d, i, fixed) == hodge_gi_recursive(d, i, fixed));
                    CHECK(eval(hodge_gi_closed(d, i, true), Rational(-1), Rational(-1)) == Rational(d));
                }
            }
        }
        CHECK(hodge_gi_closed(5, 0, false) == hodge_g0_coprime(query(7, 5, 1, false)));
        CHECK(hodge_gi_closed(4, 0, false) == hodge_g0_gcd2(query(2, 4, 1, false)));
        CHECK(hodge_gi_closed(4, 0, true) == hodge_g0_gcd2(query(2, 4, 1, true)));
        CHECK(hodge_gi_closed(5, 2, false) == hodge_gL(5, false));
        CHECK_THROWS_AS(hodge_gi_closed(5, 3, false), PreconditionViolation);
    }

    TEST_CASE("dispatch") {
        CHECK(hodge_polynomial(query(2, 3, 1, false)) == curve * proj(2));
        CHECK(hodge_polynomial(query(2, 4, 1, false, ChamberIndex{0})) == hodge_gi_closed(4, 0, false));
        CHECK(hodge_polynomial(query(2, 4, 1, true, ChamberIndex{1})) == hodge_gi_closed(4, 1, true));
        CHECK(hodge_polynomial(query(6, 4, 1, false)) == hodge_g0_gcd2(query(6, 4, 1, false)));
        CHECK(eval(hodge_polynomial(query(2, 4, 1, false, ChamberIndex{0})), Rational(-1), Rational(-1)) == Rational(0));
        CHECK(eval(hodge_polynomial(query(2, 4, 1, true, ChamberIndex{1})), Rational(-1), Rational(-1)) == Rational(4));
        CHECK_THROWS_AS(hodge_polynomial(query(3, 9, 1, false)), OutOfScope);
        CHECK_THROWS_AS(hodge_polynomial(query(2, 4, 1, false, ChamberIndex{2})), PreconditionViolation);
        CHECK_THROWS_AS(hodge_polynomial(query(2, 3, 0, false)), PreconditionViolation);
    }

    TEST_CASE("isomorphism classification") {
        CHECK(classify_isomorphism(2, 7, 5, 3).verdict == Verdict::Isomorphic);
        CHECK(classify_isomorphism(2, 3, 5, 1).verdict == Verdict::NotIsomorphic);
        CHECK(classify_isomorphism(2, 3, 5, 4).verdict == Verdict::NotIsomorphic);
        CHECK(classify_isomorphism(2, 3, 5, 2).verdict == Verdict::Undetermined);
        CHECK_THROWS_AS(classify_isomorphism(2, 4, 6, 1), PreconditionViolation);
    }

    TEST_CASE("birational type") {
        const BirationalType a = birational_type(4, 6, 1, false);
        CHECK(a.kind == BirationalType::Kind::ProjBundleTimesCurve);
        CHECK(a.parameter == 5);
        CHECK(describe(a) == "birational to P^5 × C");
        CHECK(birational_type(3, 5, 2, true).kind == BirationalType::Kind::Rational);
        const BirationalType b = birational_type(6, 9, 2, false);
        CHECK(b.kind == BirationalType::Kind::ProjBundleTimesCurve);
        CHECK(b.parameter == 14);
        const BirationalType c = birational_type(6, 9, 3, false);
        CHECK(c.kind == BirationalType::Kind::FibredOverSymProd);
        CHECK(c.parameter == 3);
        CHECK(birational_type(6, 9, 3, true).kind == BirationalType::Kind::FibredOverProjSpace);
        CHECK_THROWS_AS(birational_type(4, 2, 3, false), OutOfScope);
    }

    TEST_CASE("divisor count bound") {
        CHECK(birational_type_count_bound(12) == 6);
        CHECK(birational_type_count_bound(1) == 1);
        for (long p : {2L, 3L, 5L, 7L, 31L}) CHECK(birational_type_count_bound(p) == 2);
        CHECK(birational_type_count_bound(36) == 9);
    }
}
