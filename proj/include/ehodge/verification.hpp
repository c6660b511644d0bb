#ifndef EHODGE_VERIFICATION_HPP
#define EHODGE_VERIFICATION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ehodge/bipoly.hpp"

namespace ehodge {

/// The closed forms under test. Tests swap in deliberately broken versions to
/// make sure the identity checks actually catch transcription errors.
struct Formulas {
    std::function<BiPoly(long d, bool fixed_det)> g0_gcd2;
    std::function<BiPoly(long d, unsigned i, bool fixed_det)> gi_closed;

    static Formulas reference();
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string witness;  // first counterexample, empty when passed
    double seconds = 0.0;
};

// Each check covers one identity family over the given bounds. None of them
// throws: an exception raised while evaluating a case is reported as a
// failure with that case as witness.

CheckResult check_ring_laws(std::size_t cases, std::uint64_t seed);
CheckResult check_exact_div_roundtrip(std::size_t cases, std::uint64_t seed);
CheckResult check_parity_homomorphism(std::size_t cases, std::uint64_t seed);
CheckResult check_eval_homomorphism(std::size_t cases, std::uint64_t seed);
CheckResult check_ratexpr_equivalence(std::size_t cases, std::uint64_t seed);
CheckResult check_z2_split(std::size_t cases, std::uint64_t seed);

/// Product formula vs recurrence, value at (1,1), duality, P^n = Gr(1,n+1),
/// palindromic nonnegative coefficients, for 0 <= r <= N <= max_n.
CheckResult check_grassmannian(unsigned max_n);

/// Strata sum = closed form for even d <= max_d, full and fixed determinant.
CheckResult check_stratification(long max_d, const Formulas& f);
/// Closed formula and block construction agree on every stratum.
CheckResult check_strata_routes(long max_d);
/// Downward recursion = closed form in every chamber, d <= max_d.
CheckResult check_recursion(long max_d, const Formulas& f);
/// Chamber 0 against the coprime and gcd-2 results.
CheckResult check_boundary(long max_d, const Formulas& f);
/// full = (1+u)(1+v) * fixed for every chamber and for the gcd-2 closed form.
CheckResult check_determinant_factorization(long max_d, const Formulas& f);
/// The generic stratum does not factor through the determinant map at d.
CheckResult check_stratum_non_factorization(long d);
/// Closed-form walls vs exhaustive search for rank 2+ad, d <= max_d, a <= max_a,
/// including bounds, ordering and chamber count independent of a.
CheckResult check_critical_values(long max_d, long max_a);
/// No walls for type (1+a d1, d1, 1), d1 <= max_d1, 1 <= a <= max_a.
CheckResult check_no_walls_small_type(long max_d1, long max_a);
/// Euler characteristic: d for fixed determinant, 0 for the full family.
CheckResult check_euler(long max_d, const Formulas& f);
/// Degree 2 beta(d,k) (minus 2 for fixed determinant), monic, u<->v symmetric,
/// nonnegative integer coefficients.
CheckResult check_structural_laws(long max_d, const Formulas& f);

struct VerifyConfig {
    long max_d = 20;
    long max_a = 3;
    long max_grassmannian_n = 25;  // N bound for the Grassmannian kernel, capped by max_d
    std::size_t random_cases = 1000;
    std::uint64_t seed = 20240601;
    bool parallel = true;
    Formulas formulas = Formulas::reference();
};

std::vector<CheckResult> run_verification(const VerifyConfig& config);

}  // namespace ehodge

#endif
