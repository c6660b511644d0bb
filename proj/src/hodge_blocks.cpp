#include "ehodge/hodge_blocks.hpp"

#include "ehodge/ratexpr.hpp"

namespace ehodge {

namespace {

// 1 - (uv)^n
BiPoly one_minus_x(std::uint32_t n) { return BiPoly(1) - BiPoly::uv_power(n); }

}  // namespace

HodgeClass e_point() { return {BiPoly(1), "point"}; }

HodgeClass e_curve() { return {(BiPoly(1) + BiPoly::u()) * (BiPoly(1) + BiPoly::v()), "C"}; }

HodgeClass e_affine(unsigned n) { return {BiPoly::uv_power(n), "A^" + std::to_string(n)}; }

HodgeClass e_proj(unsigned n) {
    BiPoly p;
    for (unsigned k = 0; k <= n; ++k) p += BiPoly::uv_power(k);
    return {p, "P^" + std::to_string(n)};
}

HodgeClass e_grassmannian(long r, long N) {
    if (r < 0 || N < 0 || r > N) {
        throw InvalidRange("Gr(" + std::to_string(r) + "," + std::to_string(N) + ") needs 0 <= r <= N");
    }
    // Divide after each factor so intermediate results stay polynomial.
    BiPoly acc(1);
    for (long m = 1; m <= r; ++m) {
        acc = to_poly(RatExpr(acc * one_minus_x(static_cast<std::uint32_t>(N - r + m)),
                              one_minus_x(static_cast<std::uint32_t>(m))));
    }
    return {acc, "Gr(" + std::to_string(r) + "," + std::to_string(N) + ")"};
}

HodgeClass stratification_sum(const std::vector<HodgeClass>& parts) {
    HodgeClass out{BiPoly{}, "union"};
    for (const auto& p : parts) out.value += p.value;
    return out;
}

HodgeClass fibration_product(const HodgeClass& base, const HodgeClass& fibre) {
    return {base.value * fibre.value, fibre.label + "-bundle over " + base.label};
}

HodgeClass z2_plus(const HodgeClass& f) {
    return {(f.value * f.value + parity_substitute(f.value)) * Rational(mpz_class(1), mpz_class(2)),
            "(" + f.label + " x " + f.label + ")_+"};
}

HodgeClass z2_minus(const HodgeClass& f) {
    return {(f.value * f.value - parity_substitute(f.value)) * Rational(mpz_class(1), mpz_class(2)),
            "(" + f.label + " x " + f.label + ")_-"};
}

}  // namespace ehodge
