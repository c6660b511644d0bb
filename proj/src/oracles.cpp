#include "ehodge/oracles.hpp"

#include <vector>

namespace ehodge::oracle {

std::vector<BiPoly> gaussian_next_row(const std::vector<BiPoly>& row) {
    const auto n = static_cast<unsigned>(row.size());
    std::vector<BiPoly> next(n + 1);
    next[0] = BiPoly(1);
    next[n] = BiPoly(1);
    for (unsigned k = 1; k < n; ++k) next[k] = row[k] + BiPoly::uv_power(n - k) * row[k - 1];
    return next;
}

BiPoly gaussian_binomial(unsigned N, unsigned r) {
    if (r > N) return BiPoly{};
    // Row-by-row Pascal triangle in x.
    std::vector<BiPoly> row{BiPoly(1)};
    for (unsigned n = 1; n <= N; ++n) row = gaussian_next_row(row);
    return row[r];
}

mpz_class binomial(unsigned N, unsigned r) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), N, r);
    return out;
}

BiPoly substitute(const BiPoly& f, const BiPoly& g_u, const BiPoly& g_v) {
    BiPoly out;
    for (const auto& [m, c] : f.terms()) {
        BiPoly term(c);
        for (std::uint32_t k = 0; k < m.u; ++k) term = term * g_u;
        for (std::uint32_t k = 0; k < m.v; ++k) term = term * g_v;
        out += term;
    }
    return out;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

BiPoly random_bipoly(std::mt19937_64& rng, unsigned max_terms, unsigned max_exp) {
    std::uniform_int_distribution<unsigned> count(0, max_terms);
    std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
    BiPoly out;
    const unsigned n = count(rng);
    for (unsigned t = 0; t < n; ++t) out += BiPoly::monomial(exp(rng), exp(rng), random_rational(rng));
    return out;
}

}  // namespace ehodge::oracle
