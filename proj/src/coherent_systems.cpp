#include "ehodge/coherent_systems.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ehodge/hodge_blocks.hpp"
#include "ehodge/ratexpr.hpp"

namespace ehodge {

namespace {

std::uint32_t as_exp(long n) { return static_cast<std::uint32_t>(n); }

BiPoly x_pow(long n) { return BiPoly::uv_power(as_exp(n)); }

// 1 - x^n
BiPoly omx(long n) { return BiPoly(1) - x_pow(n); }

BiPoly curve() { return e_curve().value; }

BiPoly u_plus_v() { return BiPoly::u() + BiPoly::v(); }

// (1-x)^2 (1+x)
BiPoly strata_denominator() { return omx(1) * omx(1) * (BiPoly(1) + x_pow(1)); }

void require(bool condition, const std::string& message) {
    if (!condition) throw PreconditionViolation(message);
}

void require_gcd2_k1(const ModuliQuery& q) {
    require(q.n >= 1 && q.d >= 1, "n and d must be positive");
    require(q.k == 1, "the gcd(n,d) = 2 formulas need k = 1");
    require(std::gcd(q.n, q.d) == 2, "gcd(n,d) must be 2");
}

void require_even_d(long d) { require(d >= 2 && d % 2 == 0, "d must be even and at least 2"); }

// gamma = 1 for odd d, 2 for even d
long parity_gamma(long d) { return d % 2 == 0 ? 2 : 1; }

}  // namespace

unsigned chamber_index(const Chamber& c) {
    if (const auto* idx = std::get_if<ChamberIndex>(&c)) return idx->value;
    return 0;
}

std::string to_string(Stratum s) {
    switch (s) {
        case Stratum::Generic: return "generic";
        case Stratum::Extension: return "extension";
        case Stratum::Split: return "split";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Isomorphic: return "Isomorphic";
        case Verdict::NotIsomorphic: return "NotIsomorphic";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "?";
}

std::string describe(const BirationalType& t) {
    switch (t.kind) {
        case BirationalType::Kind::Rational: return "rational";
        case BirationalType::Kind::ProjBundleTimesCurve:
            return "birational to P^" + std::to_string(t.parameter) + " × C";
        case BirationalType::Kind::FibredOverSymProd:
            return "birational to a variety fibred over S^" + std::to_string(t.parameter) +
                   "C with general fibre unirational";
        case BirationalType::Kind::FibredOverProjSpace:
            return "birational to a variety fibred over P^" + std::to_string(t.parameter - 1) +
                   " with general fibre unirational";
    }
    return "?";
}

long beta(long d, long k) { return k * (d - k) + 1; }

unsigned chamber_count(long d) { return d >= 1 ? static_cast<unsigned>((d - 1) / 2) : 0U; }

BiPoly hodge_g0_coprime(const ModuliQuery& q) {
    require(q.n >= 1 && q.d >= 1, "n and d must be positive");
    require(std::gcd(q.n, q.d) == 1, "gcd(n,d) must be 1");
    require(q.k >= 1 && q.k <= q.d, "k must satisfy 1 <= k <= d");
    const BiPoly gr = e_grassmannian(q.k, q.d).value;
    return q.fixed_det ? gr : gr * curve();
}

BiPoly hodge_stratum_formula(long d, bool fixed_det, Stratum s) {
    require_even_d(d);
    const long h = d / 2;
    const BiPoly x = x_pow(1);
    // With fixed determinant N the curve factor of the non-generic strata
    // becomes the four square roots of N.
    const BiPoly outer = fixed_det ? BiPoly(4) : curve();
    switch (s) {
        case Stratum::Generic: {
            if (fixed_det) {
                return to_poly(RatExpr(omx(h) * (omx(h + 1) * (x - BiPoly(3)) + (x - x_pow(h)) * u_plus_v()),
                                       strata_denominator()));
            }
            return to_poly(RatExpr(curve() * omx(h) * (u_plus_v() * (x - x_pow(h)) + x * omx(h + 1)),
                                   strata_denominator()));
        }
        case Stratum::Extension:
            return to_poly(RatExpr(outer * x_pow(h - 1) * omx(h), omx(1)));
        case Stratum::Split:
            return to_poly(RatExpr(outer * omx(h) * omx(h - 1), strata_denominator()));
    }
    throw std::logic_error("unknown stratum");
}

BiPoly hodge_stratum_constructive(long d, bool fixed_det, Stratum s) {
    require_even_d(d);
    const long h = d / 2;
    const HodgeClass fibre = e_proj(static_cast<unsigned>(h - 1));
    switch (s) {
        case Stratum::Generic: {
            if (fixed_det) {
                // C_N minus the four fixed points splits into invariant part
                // P^1 minus four points and the anti-invariant remainder.
                const BiPoly base_plus = x_pow(1) - BiPoly(3);
                const BiPoly base_minus = curve() - BiPoly(4) - base_plus;
                return base_plus * z2_plus(fibre).value + base_minus * z2_minus(fibre).value;
            }
            // (P x P)_+ minus the part lying over the diagonal of C x C.
            const HodgeClass bundle = fibration_product(e_curve(), fibre);
            return z2_plus(bundle).value - curve() * z2_plus(fibre).value;
        }
        case Stratum::Extension: {
            const BiPoly per_bundle = e_affine(static_cast<unsigned>(h - 1)).value * fibre.value;
            return fixed_det ? BiPoly(4) * per_bundle : curve() * per_bundle;
        }
        case Stratum::Split: {
            if (h < 2) return BiPoly{};  // Gr(2, h) is empty
            const BiPoly gr = e_grassmannian(2, h).value;
            return fixed_det ? BiPoly(4) * gr : curve() * gr;
        }
    }
    throw std::logic_error("unknown stratum");
}

BiPoly hodge_stratum(const ModuliQuery& q, Stratum s) {
    require_gcd2_k1(q);
    BiPoly value = hodge_stratum_formula(q.d, q.fixed_det, s);
    if (s == Stratum::Generic && value != hodge_stratum_constructive(q.d, q.fixed_det, s)) {
        throw std::logic_error("generic stratum: closed formula and Z2 construction disagree at d = " +
                               std::to_string(q.d));
    }
    return value;
}

BiPoly g0_gcd2_closed(long d, bool fixed_det) {
    require_even_d(d);
    const long h = d / 2;
    const BiPoly x = x_pow(1);
    const BiPoly bracket = u_plus_v() * (x - x_pow(h)) + (BiPoly(1) + x) * omx(h + 1);
    const BiPoly num = omx(h) * bracket;
    return to_poly(RatExpr(fixed_det ? num : curve() * num, strata_denominator()));
}

BiPoly hodge_g0_gcd2(const ModuliQuery& q) {
    require_gcd2_k1(q);
    return g0_gcd2_closed(q.d, q.fixed_det);
}

std::vector<CriticalValue> critical_values(long d, long a) {
    require(d >= 1, "d must be positive");
    require(a >= 0, "a must be nonnegative");
    const long L = chamber_count(d);
    std::vector<CriticalValue> out;
    out.reserve(static_cast<std::size_t>(L));
    for (long i = 1; i <= L; ++i) {
        CriticalValue cv;
        cv.index = static_cast<unsigned>(i);
        cv.d1 = L - i + 1;
        cv.d2 = d - cv.d1;
        cv.n1 = cv.d1 * a + 1;
        cv.n2 = 2 + a * d - cv.n1;
        cv.alpha = Rational(d - 2 * cv.d1) / Rational(1 + a * (d - cv.d1));
        out.push_back(cv);
    }
    return out;
}

std::vector<WallCandidate> critical_values_bruteforce(long n, long d) {
    if (n < 2 || d < 1) return {};
    const Rational upper = Rational(d) / Rational(n - 1);
    std::map<Rational, std::vector<std::pair<long, long>>> walls;
    for (long n1 = 1; n1 < n; ++n1) {
        const long n2 = n - n1;
        for (long d1 = 1; d1 < d; ++d1) {
            const long d2 = d - d1;
            if (d1 * n2 >= d2 * n1) continue;  // need d1/n1 < d2/n2
            const Rational alpha = Rational(n1 * d2 - n2 * d1) / Rational(n2);
            if (alpha.sign() > 0 && alpha < upper) walls[alpha].emplace_back(n1, d1);
        }
    }
    std::vector<WallCandidate> out;
    out.reserve(walls.size());
    for (auto& [alpha, decomps] : walls) out.push_back({alpha, std::move(decomps)});
    return out;
}

std::vector<Rational> alphas(const std::vector<WallCandidate>& walls) {
    std::vector<Rational> out;
    out.reserve(walls.size());
    for (const auto& w : walls) out.push_back(w.alpha);
    return out;
}

BiPoly hodge_gL(long d, bool fixed_det) {
    require(d >= 1, "d must be positive");
    const HodgeClass fibre = e_proj(static_cast<unsigned>(d - 1));
    return fixed_det ? fibre.value : fibration_product(e_curve(), fibre).value;
}

BiPoly hodge_flip(long d, long d1, FlipSide side, bool fixed_det) {
    require(d >= 1, "d must be positive");
    const long L = chamber_count(d);
    require(d1 >= 1 && d1 <= L && d - 2 * d1 >= 1, "flip needs 1 <= d1 <= floor((d-gamma)/2)");
    // Base C x G_0(1+a d1, d1, 1), the second factor a P^{d1-1}-bundle over C.
    // With fixed determinant the first C factor is pinned by det F_2.
    const HodgeClass sub_system = fibration_product(e_curve(), e_proj(static_cast<unsigned>(d1 - 1)));
    const BiPoly base = fixed_det ? sub_system.value : curve() * sub_system.value;
    const long fibre_dim = side == FlipSide::Plus ? d1 - 1 : d - 2 * d1 - 1;
    return e_proj(static_cast<unsigned>(fibre_dim)).value * base;
}

BiPoly hodge_gi_recursive(long d, unsigned i, bool fixed_det) {
    require(d >= 1, "d must be positive");
    const unsigned L = chamber_count(d);
    require(i <= L, "chamber index must be at most floor((d-1)/2)");
    BiPoly acc = hodge_gL(d, fixed_det);
    for (unsigned j = L; j > i; --j) {
        const long d1 = static_cast<long>(L - j + 1);
        acc += hodge_flip(d, d1, FlipSide::Minus, fixed_det) - hodge_flip(d, d1, FlipSide::Plus, fixed_det);
    }
    return acc;
}

BiPoly hodge_gi_closed(long d, unsigned i, bool fixed_det) {
    require(d >= 1, "d must be positive");
    require(i <= chamber_count(d), "chamber index must be at most floor((d-1)/2)");
    const long gamma = parity_gamma(d);
    const long m = (d - gamma) / 2 - static_cast<long>(i);
    const BiPoly ee = fixed_det ? curve() : curve() * curve();
    const BiPoly num = ee * omx(m) * (x_pow(1) - x_pow(gamma + 2 * static_cast<long>(i))) * omx(m + 1);
    const BiPoly den = omx(1) * omx(1) * omx(2);
    return hodge_gL(d, fixed_det) + to_poly(RatExpr(num, den));
}

BiPoly hodge_polynomial(const ModuliQuery& q) {
    require(q.n >= 1 && q.d >= 1 && q.k >= 1, "n, d and k must be positive");
    const unsigned i = chamber_index(q.chamber);
    const long g = std::gcd(q.n, q.d);
    if (g == 1 && i == 0) return hodge_g0_coprime(q);
    const bool chamber_family = q.k == 1 && q.n >= 2 && (q.n - 2) % q.d == 0;
    if (chamber_family) {
        if (i > chamber_count(q.d)) {
            throw PreconditionViolation("chamber index " + std::to_string(i) + " exceeds floor((d-1)/2) = " +
                                        std::to_string(chamber_count(q.d)));
        }
        return hodge_gi_closed(q.d, i, q.fixed_det);
    }
    if (g == 2 && q.k == 1 && i == 0) return hodge_g0_gcd2(q);
    if (i != 0) throw OutOfScope("chambers past 0+ are only known for type (2+ad, d, 1)");
    if (g == 2) throw OutOfScope("gcd(n,d) = 2 is only known for k = 1");
    throw OutOfScope("no closed form for gcd(n,d) = " + std::to_string(g));
}

Classification classify_isomorphism(long n, long n2, long d, long k) {
    require(n >= 1 && n2 >= 1 && d >= 1, "n, n' and d must be positive");
    require(std::gcd(n, d) == 1, "gcd(n,d) must be 1");
    require(std::gcd(n2, d) == 1, "gcd(n',d) must be 1");
    require(k >= 1 && k <= d, "k must satisfy 1 <= k <= d");
    if ((n - n2) % d == 0) return {Verdict::Isomorphic, "n' ≡ n mod d"};
    if (k == 1 || k == d - 1) return {Verdict::NotIsomorphic, "n' ≢ n mod d and k ∈ {1, d-1}"};
    return {Verdict::Undetermined, "n' ≢ n mod d and 1 < k < d-1"};
}

BirationalType birational_type(long n, long d, long k, bool fixed_det) {
    require(n >= 1 && d >= 1 && k >= 1, "n, d and k must be positive");
    using Kind = BirationalType::Kind;
    const long h = std::gcd(n, d);
    auto rational_or_bundle = [&](long dim, std::string reason) {
        return fixed_det ? BirationalType{Kind::Rational, 0, std::move(reason)}
                         : BirationalType{Kind::ProjBundleTimesCurve, dim, std::move(reason)};
    };
    if (h == 1 && k <= d) return rational_or_bundle(k * (d - k), "gcd(n,d) = 1 and k <= d");
    if (h == 2 && k == 1) return rational_or_bundle(d - 1, "gcd(n,d) = 2 and k = 1");
    if (k < std::min(d, n) && std::gcd(n - k, d) == 1) {
        return rational_or_bundle(k * (d - k), "gcd(n-k,d) = 1 and k < min(d,n)");
    }
    if (h > 1 && k < d) {
        return fixed_det ? BirationalType{Kind::FibredOverProjSpace, h, "gcd(n,d) = h > 1 and k < d"}
                         : BirationalType{Kind::FibredOverSymProd, h, "gcd(n,d) = h > 1 and k < d"};
    }
    throw OutOfScope("no birational description for (n,d,k) = (" + std::to_string(n) + "," + std::to_string(d) +
                     "," + std::to_string(k) + "): needs gcd(n,d) = 1 with k <= d, gcd(n,d) = 2 with k = 1, " +
                     "gcd(n-k,d) = 1 with k < min(d,n), or k < d");
}

long birational_type_count_bound(long d) {
    require(d >= 1, "d must be positive");
    long count = 1;
    long rest = d;
    for (long p = 2; p * p <= rest; ++p) {
        long e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        count *= e + 1;
    }
    if (rest > 1) count *= 2;
    return count;
}

}  // namespace ehodge
