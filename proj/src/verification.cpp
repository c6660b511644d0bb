#include "ehodge/verification.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <random>

#include "ehodge/coherent_systems.hpp"
#include "ehodge/format.hpp"
#include "ehodge/hodge_blocks.hpp"
#include "ehodge/oracles.hpp"
#include "ehodge/ratexpr.hpp"

namespace ehodge {

Formulas Formulas::reference() {
    return Formulas{
        [](long d, bool fixed_det) { return g0_gcd2_closed(d, fixed_det); },
        [](long d, unsigned i, bool fixed_det) { return hodge_gi_closed(d, i, fixed_det); },
    };
}

namespace {

std::string clip(std::string s) {
    constexpr std::size_t limit = 160;
    if (s.size() > limit) s = s.substr(0, limit) + " ...";
    return s;
}

// Empty string when equal, otherwise both sides.
std::string compare(const BiPoly& lhs, const BiPoly& rhs) {
    if (lhs == rhs) return {};
    return "lhs = " + clip(to_plain(lhs)) + "; rhs = " + clip(to_plain(rhs));
}

std::string compare(const Rational& lhs, const Rational& rhs) {
    if (lhs == rhs) return {};
    return "lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string();
}

std::string fd(bool fixed_det) { return fixed_det ? " fixed_det" : " full"; }

// Accumulates cases for one identity family and keeps the first failure.
class Check {
   public:
    explicit Check(std::string name) : start_(std::chrono::steady_clock::now()) { result_.name = std::move(name); }

    bool failed() const { return !result_.passed; }

    // body returns an empty string on success, a description otherwise.
    template <class Body>
    void run(const std::string& label, Body&& body) {
        if (failed()) return;
        ++result_.cases;
        try {
            std::string detail = body();
            if (!detail.empty()) fail(label + ": " + detail);
        } catch (const std::exception& e) {
            fail(label + ": exception: " + e.what());
        }
    }

    CheckResult finish() {
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return result_;
    }

   private:
    void fail(std::string witness) {
        result_.passed = false;
        result_.witness = std::move(witness);
    }

    CheckResult result_;
    std::chrono::steady_clock::time_point start_;
};

BiPoly nonzero_random(std::mt19937_64& rng) {
    BiPoly b;
    while (b.is_zero()) b = oracle::random_bipoly(rng);
    return b;
}

std::string case_label(std::size_t n) { return "random case " + std::to_string(n); }

bool nonnegative_integers(const BiPoly& f) {
    for (const auto& [m, c] : f.terms()) {
        if (!c.is_integer() || c.sign() < 0) return false;
    }
    return true;
}

// Degree, monic top term (uv)^{deg/2}, symmetry, nonnegative integer coefficients.
std::string structural(const BiPoly& f, long expected_degree) {
    if (f.total_degree() != expected_degree) {
        return "total degree " + std::to_string(f.total_degree()) + ", expected " + std::to_string(expected_degree);
    }
    const auto& top = *f.terms().rbegin();
    if (f.size() > 1 && std::next(f.terms().rbegin())->first.total_degree() == top.first.total_degree()) {
        return "more than one term of top degree";
    }
    if (top.second != Rational(1)) return "leading coefficient " + top.second.to_string();
    if (swap_variables(f) != f) return "not symmetric in u and v";
    if (!nonnegative_integers(f)) return "coefficient that is not a nonnegative integer";
    return {};
}

}  // namespace

CheckResult check_ring_laws(std::size_t cases, std::uint64_t seed) {
    Check check("ring laws");
    std::mt19937_64 rng(seed);
    for (std::size_t n = 0; n < cases; ++n) {
        const BiPoly a = oracle::random_bipoly(rng);
        const BiPoly b = oracle::random_bipoly(rng);
        const BiPoly c = oracle::random_bipoly(rng);
        check.run(case_label(n), [&]() -> std::string {
            if (a + b != b + a) return "a+b != b+a";
            if (a * b != b * a) return "ab != ba";
            if ((a + b) + c != a + (b + c)) return "+ not associative";
            if ((a * b) * c != a * (b * c)) return "* not associative";
            if (a * (b + c) != a * b + a * c) return "not distributive";
            if (a + BiPoly{} != a || a * BiPoly(1) != a) return "identity law";
            if (!(a + (-a)).is_zero() || !(a - a).is_zero()) return "additive inverse";
            return {};
        });
    }
    return check.finish();
}

CheckResult check_exact_div_roundtrip(std::size_t cases, std::uint64_t seed) {
    Check check("exact division round trip");
    std::mt19937_64 rng(seed + 1);
    for (std::size_t n = 0; n < cases; ++n) {
        const BiPoly a = oracle::random_bipoly(rng);
        const BiPoly b = nonzero_random(rng);
        check.run(case_label(n), [&] { return compare(exact_div(a * b, b), a); });
    }
    return check.finish();
}

CheckResult check_parity_homomorphism(std::size_t cases, std::uint64_t seed) {
    Check check("parity substitution homomorphism");
    std::mt19937_64 rng(seed + 2);
    const BiPoly minus_u2 = -BiPoly::monomial(2, 0);
    const BiPoly minus_v2 = -BiPoly::monomial(0, 2);
    const BiPoly minus_u4 = -BiPoly::monomial(4, 0);
    const BiPoly minus_v4 = -BiPoly::monomial(0, 4);
    for (std::size_t n = 0; n < cases; ++n) {
        const BiPoly a = oracle::random_bipoly(rng);
        const BiPoly b = oracle::random_bipoly(rng);
        check.run(case_label(n), [&]() -> std::string {
            if (parity_substitute(a + b) != parity_substitute(a) + parity_substitute(b)) return "not additive";
            if (parity_substitute(a * b) != parity_substitute(a) * parity_substitute(b)) return "not multiplicative";
            if (auto d = compare(parity_substitute(a), oracle::substitute(a, minus_u2, minus_v2)); !d.empty()) {
                return "f(-u^2,-v^2): " + d;
            }
            return compare(parity_substitute(parity_substitute(a)), oracle::substitute(a, minus_u4, minus_v4));
        });
    }
    return check.finish();
}

CheckResult check_eval_homomorphism(std::size_t cases, std::uint64_t seed) {
    Check check("evaluation homomorphism");
    std::mt19937_64 rng(seed + 3);
    for (std::size_t n = 0; n < cases; ++n) {
        const BiPoly a = oracle::random_bipoly(rng);
        const BiPoly b = oracle::random_bipoly(rng);
        const Rational p = oracle::random_rational(rng);
        const Rational q = oracle::random_rational(rng);
        check.run(case_label(n), [&]() -> std::string {
            if (auto d = compare(eval(a + b, p, q), eval(a, p, q) + eval(b, p, q)); !d.empty()) return "sum: " + d;
            return compare(eval(a * b, p, q), eval(a, p, q) * eval(b, p, q));
        });
    }
    return check.finish();
}

CheckResult check_ratexpr_equivalence(std::size_t cases, std::uint64_t seed) {
    Check check("rational expression equality is an equivalence");
    std::mt19937_64 rng(seed + 4);
    for (std::size_t n = 0; n < cases; ++n) {
        const BiPoly p = oracle::random_bipoly(rng);
        const BiPoly q = nonzero_random(rng);
        const BiPoly r = nonzero_random(rng);
        const BiPoly s = nonzero_random(rng);
        const RatExpr x(p, q);
        const RatExpr y(p * r, q * r);
        const RatExpr z(p * r * s, q * r * s);
        const RatExpr w(oracle::random_bipoly(rng), nonzero_random(rng));
        check.run(case_label(n), [&]() -> std::string {
            if (!equivalent(x, x) || !equivalent(w, w)) return "not reflexive";
            if (!equivalent(x, y) || !equivalent(y, z) || !equivalent(x, z)) return "scaled forms not equal";
            if (equivalent(x, w) != equivalent(w, x)) return "not symmetric";
            if (equivalent(x, w) != equivalent(z, w)) return "not transitive";
            return {};
        });
    }
    return check.finish();
}

CheckResult check_z2_split(std::size_t cases, std::uint64_t seed) {
    Check check("z2_plus + z2_minus = f^2");
    std::mt19937_64 rng(seed + 5);
    for (std::size_t n = 0; n < cases; ++n) {
        const HodgeClass f{oracle::random_bipoly(rng), "random"};
        check.run(case_label(n), [&] { return compare(z2_plus(f).value + z2_minus(f).value, f.value * f.value); });
    }
    return check.finish();
}

CheckResult check_grassmannian(unsigned max_n) {
    Check check("Grassmannian product formula");
    std::vector<BiPoly> pascal{BiPoly(1)};
    for (unsigned N = 0; N <= max_n; ++N) {
        if (N > 0) pascal = oracle::gaussian_next_row(pascal);
        std::vector<BiPoly> row(N + 1);
        for (unsigned r = 0; r <= N; ++r) {
            const std::string label = "Gr(" + std::to_string(r) + "," + std::to_string(N) + ")";
            check.run(label, [&]() -> std::string {
                const BiPoly& g = row[r] = e_grassmannian(r, N).value;
                if (auto d = compare(g, pascal[r]); !d.empty()) return "recurrence: " + d;
                if (eval(g, Rational(1), Rational(1)) != Rational(oracle::binomial(N, r))) return "value at (1,1)";
                if (2 * r > N && g != row[N - r]) return "duality r <-> N-r";
                if (!nonnegative_integers(g)) return "negative or fractional coefficient";
                const std::uint32_t top = r * (N - r);
                if (g.total_degree() != 2 * static_cast<std::int64_t>(top)) return "degree";
                for (const auto& [m, c] : g.terms()) {
                    if (m.u != m.v) return "term not a power of uv";
                    if (g.coefficient(top - m.u, top - m.u) != c) return "not palindromic";
                }
                return {};
            });
        }
        if (N >= 1) {
            check.run("P^" + std::to_string(N - 1), [&]() -> std::string {
                const BiPoly p = e_proj(N - 1).value;
                if (auto d = compare(p, e_grassmannian(1, N).value); !d.empty()) return "Gr(1,n+1): " + d;
                return compare(eval(p, Rational(-1), Rational(-1)), Rational(static_cast<long>(N)));
            });
        }
    }
    return check.finish();
}

CheckResult check_stratification(long max_d, const Formulas& f) {
    Check check("strata sum = gcd-2 closed form");
    for (long d = 2; d <= max_d; d += 2) {
        for (bool fixed : {false, true}) {
            check.run("d=" + std::to_string(d) + fd(fixed), [&] {
                const ModuliQuery q{2, d, 1, fixed, SmallAlpha{}};
                BiPoly sum;
                for (Stratum s : {Stratum::Generic, Stratum::Extension, Stratum::Split}) sum += hodge_stratum(q, s);
                return compare(sum, f.g0_gcd2(d, fixed));
            });
        }
    }
    return check.finish();
}

CheckResult check_strata_routes(long max_d) {
    Check check("strata: closed formula = block construction");
    for (long d = 2; d <= max_d; d += 2) {
        for (bool fixed : {false, true}) {
            for (Stratum s : {Stratum::Generic, Stratum::Extension, Stratum::Split}) {
                check.run("d=" + std::to_string(d) + fd(fixed) + " " + to_string(s), [&] {
                    return compare(hodge_stratum_formula(d, fixed, s), hodge_stratum_constructive(d, fixed, s));
                });
            }
        }
    }
    return check.finish();
}

CheckResult check_recursion(long max_d, const Formulas& f) {
    Check check("wall-crossing recursion = chamber closed form");
    for (long d = 1; d <= max_d; ++d) {
        for (unsigned i = 0; i <= chamber_count(d); ++i) {
            for (bool fixed : {false, true}) {
                check.run("d=" + std::to_string(d) + " i=" + std::to_string(i) + fd(fixed),
                          [&] { return compare(hodge_gi_recursive(d, i, fixed), f.gi_closed(d, i, fixed)); });
            }
        }
    }
    return check.finish();
}

CheckResult check_boundary(long max_d, const Formulas& f) {
    Check check("chamber 0 boundary consistency");
    for (long d = 1; d <= max_d; ++d) {
        for (bool fixed : {false, true}) {
            check.run("d=" + std::to_string(d) + fd(fixed), [&]() -> std::string {
                const BiPoly g0 = f.gi_closed(d, 0, fixed);
                if (d % 2 == 0) return compare(g0, f.g0_gcd2(d, fixed));
                const BiPoly p = to_poly(RatExpr(BiPoly(1) - BiPoly::uv_power(static_cast<std::uint32_t>(d)),
                                                 BiPoly(1) - BiPoly::uv_power(1)));
                if (auto diff = compare(g0, fixed ? p : e_curve().value * p); !diff.empty()) {
                    return "P^{d-1}-bundle: " + diff;
                }
                return compare(g0, hodge_g0_coprime(ModuliQuery{2, d, 1, fixed, SmallAlpha{}}));
            });
        }
    }
    return check.finish();
}

CheckResult check_determinant_factorization(long max_d, const Formulas& f) {
    Check check("full = (1+u)(1+v) * fixed determinant");
    const BiPoly e = e_curve().value;
    for (long d = 1; d <= max_d; ++d) {
        for (unsigned i = 0; i <= chamber_count(d); ++i) {
            check.run("d=" + std::to_string(d) + " i=" + std::to_string(i),
                      [&] { return compare(f.gi_closed(d, i, false), e * f.gi_closed(d, i, true)); });
        }
        if (d % 2 == 0) {
            check.run("gcd-2 d=" + std::to_string(d), [&] { return compare(f.g0_gcd2(d, false), e * f.g0_gcd2(d, true)); });
        }
    }
    return check.finish();
}

CheckResult check_stratum_non_factorization(long d) {
    Check check("generic stratum does not factor");
    check.run("d=" + std::to_string(d), [&]() -> std::string {
        const BiPoly full = hodge_stratum_formula(d, false, Stratum::Generic);
        const BiPoly fixed = hodge_stratum_formula(d, true, Stratum::Generic);
        if (full == e_curve().value * fixed) return "generic stratum factors: " + clip(to_plain(full));
        return {};
    });
    return check.finish();
}

CheckResult check_critical_values(long max_d, long max_a) {
    Check check("critical values = exhaustive wall search");
    for (long d = 1; d <= max_d; ++d) {
        std::size_t count_at_a0 = 0;
        for (long a = 0; a <= max_a; ++a) {
            check.run("d=" + std::to_string(d) + " a=" + std::to_string(a), [&]() -> std::string {
                const long n = 2 + a * d;
                const auto walls = critical_values(d, a);
                const auto found = critical_values_bruteforce(n, d);
                if (a == 0) count_at_a0 = found.size();
                if (found.size() != count_at_a0) return "chamber count depends on a";
                if (walls.size() != found.size() || walls.size() != chamber_count(d)) {
                    return "closed form has " + std::to_string(walls.size()) + " walls, search found " +
                           std::to_string(found.size());
                }
                const Rational upper = Rational(d) / Rational(1 + a * d);
                for (std::size_t k = 0; k < walls.size(); ++k) {
                    const CriticalValue& cv = walls[k];
                    const std::string at = "wall " + std::to_string(k + 1) + ": ";
                    if (cv.alpha != found[k].alpha) return at + "alpha " + cv.alpha.to_string() + " vs " + found[k].alpha.to_string();
                    if (found[k].decompositions != std::vector<std::pair<long, long>>{{cv.n1, cv.d1}}) {
                        return at + "decomposition (n1,d1) differs";
                    }
                    if (cv.index != k + 1 || cv.d1 != static_cast<long>(chamber_count(d)) - static_cast<long>(k)) return at + "index";
                    if (cv.n1 != cv.d1 * a + 1 || cv.d1 + cv.d2 != d || cv.n1 + cv.n2 != n) return at + "type split";
                    if (!(cv.alpha.sign() > 0 && cv.alpha < upper)) return at + "alpha outside (0, d/(1+ad))";
                    if (k > 0 && !(walls[k - 1].alpha < cv.alpha)) return at + "not increasing";
                }
                return {};
            });
        }
    }
    return check.finish();
}

CheckResult check_no_walls_small_type(long max_d1, long max_a) {
    Check check("no walls for type (1+a d1, d1, 1)");
    for (long a = 0; a <= max_a; ++a) {
        for (long d1 = 1; d1 <= max_d1; ++d1) {
            check.run("a=" + std::to_string(a) + " d1=" + std::to_string(d1), [&]() -> std::string {
                const auto found = critical_values_bruteforce(1 + a * d1, d1);
                if (!found.empty()) return "wall at alpha = " + found.front().alpha.to_string();
                return {};
            });
        }
    }
    return check.finish();
}

CheckResult check_euler(long max_d, const Formulas& f) {
    Check check("Euler characteristics");
    const Rational m1(-1);
    for (long d = 1; d <= max_d; ++d) {
        for (unsigned i = 0; i <= chamber_count(d); ++i) {
            check.run("d=" + std::to_string(d) + " i=" + std::to_string(i), [&]() -> std::string {
                if (auto diff = compare(eval(f.gi_closed(d, i, true), m1, m1), Rational(d)); !diff.empty()) {
                    return "fixed_det: " + diff;
                }
                return compare(eval(f.gi_closed(d, i, false), m1, m1), Rational(0));
            });
        }
        if (d % 2 == 0) {
            check.run("gcd-2 d=" + std::to_string(d), [&]() -> std::string {
                if (auto diff = compare(eval(f.g0_gcd2(d, true), m1, m1), Rational(d)); !diff.empty()) return diff;
                return compare(eval(f.g0_gcd2(d, false), m1, m1), Rational(0));
            });
        }
    }
    return check.finish();
}

CheckResult check_structural_laws(long max_d, const Formulas& f) {
    Check check("degree, monic, symmetry, nonnegativity");
    for (long d = 1; d <= max_d; ++d) {
        const long full_deg = 2 * beta(d, 1);
        for (bool fixed : {false, true}) {
            const long deg = fixed ? full_deg - 2 : full_deg;
            for (unsigned i = 0; i <= chamber_count(d); ++i) {
                check.run("chamber d=" + std::to_string(d) + " i=" + std::to_string(i) + fd(fixed),
                          [&] { return structural(f.gi_closed(d, i, fixed), deg); });
            }
            if (d % 2 == 0) {
                check.run("gcd-2 d=" + std::to_string(d) + fd(fixed), [&] { return structural(f.g0_gcd2(d, fixed), deg); });
            }
            for (long k = 1; k <= d; ++k) {
                const long cdeg = 2 * beta(d, k) - (fixed ? 2 : 0);
                check.run("coprime d=" + std::to_string(d) + " k=" + std::to_string(k) + fd(fixed), [&] {
                    // n = 1 is coprime to every d; the result does not depend on n.
                    return structural(hodge_g0_coprime(ModuliQuery{1, d, k, fixed, SmallAlpha{}}), cdeg);
                });
            }
        }
    }
    return check.finish();
}

std::vector<CheckResult> run_verification(const VerifyConfig& config) {
    const long max_d = config.max_d;
    const long max_a = config.max_a;
    const auto grass_n = static_cast<unsigned>(std::min(max_d, config.max_grassmannian_n));
    const std::size_t cases = config.random_cases;
    const std::uint64_t seed = config.seed;
    const Formulas& f = config.formulas;

    std::vector<std::function<CheckResult()>> tasks = {
        [=] { return check_ring_laws(cases, seed); },
        [=] { return check_exact_div_roundtrip(cases, seed); },
        [=] { return check_parity_homomorphism(cases, seed); },
        [=] { return check_eval_homomorphism(cases, seed); },
        [=] { return check_ratexpr_equivalence(cases, seed); },
        [=] { return check_z2_split(cases, seed); },
        [=] { return check_grassmannian(grass_n); },
        [=, &f] { return check_stratification(max_d, f); },
        [=] { return check_strata_routes(max_d); },
        [=, &f] { return check_recursion(max_d, f); },
        [=, &f] { return check_boundary(max_d, f); },
        [=, &f] { return check_determinant_factorization(max_d, f); },
        [=] { return check_stratum_non_factorization(4); },
        [=] { return check_critical_values(max_d, max_a); },
        [=] { return check_no_walls_small_type(max_d, max_a); },
        [=, &f] { return check_euler(max_d, f); },
        [=, &f] { return check_structural_laws(max_d, f); },
    };

    std::vector<CheckResult> results;
    results.reserve(tasks.size());
    if (!config.parallel) {
        for (auto& t : tasks) results.push_back(t());
        return results;
    }
    std::vector<std::future<CheckResult>> pending;
    pending.reserve(tasks.size());
    for (auto& t : tasks) pending.push_back(std::async(std::launch::async, t));
    for (auto& p : pending) results.push_back(p.get());
    return results;
}

}  // namespace ehodge
