#ifndef EHODGE_ORACLES_HPP
#define EHODGE_ORACLES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ehodge/bipoly.hpp"

// Reference computations that share no code path with the formulas they are
// used to check. Kept deliberately naive.
namespace ehodge::oracle {

/// Row N+1 of the Pascal triangle in x from row N.
std::vector<BiPoly> gaussian_next_row(const std::vector<BiPoly>& row);

/// Gaussian binomial [N choose r] in x = uv via
/// [N r] = [N-1 r] + x^{N-r} [N-1 r-1].
BiPoly gaussian_binomial(unsigned N, unsigned r);

mpz_class binomial(unsigned N, unsigned r);

/// f(g_u, g_v) by expanding every term with repeated multiplication.
BiPoly substitute(const BiPoly& f, const BiPoly& g_u, const BiPoly& g_v);

/// Random sparse polynomial: up to max_terms terms, exponents <= max_exp,
/// coefficients p/q with |p| <= 9, 1 <= q <= 4.
BiPoly random_bipoly(std::mt19937_64& rng, unsigned max_terms = 6, unsigned max_exp = 4);

Rational random_rational(std::mt19937_64& rng);

}  // namespace ehodge::oracle

#endif
