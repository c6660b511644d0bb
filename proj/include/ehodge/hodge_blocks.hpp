#ifndef EHODGE_HODGE_BLOCKS_HPP
#define EHODGE_HODGE_BLOCKS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ehodge/bipoly.hpp"

namespace ehodge {

/// Hodge polynomial of a named variety. The label is provenance only and
/// never takes part in equality.
struct HodgeClass {
    BiPoly value;
    std::string label;

    friend bool operator==(const HodgeClass& a, const HodgeClass& b) { return a.value == b.value; }
};

class InvalidRange : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

HodgeClass e_point();

/// The elliptic curve: (1+u)(1+v).
HodgeClass e_curve();

/// Affine space A^n: (uv)^n.
HodgeClass e_affine(unsigned n);

/// Projective space P^n: 1 + uv + ... + (uv)^n.
HodgeClass e_proj(unsigned n);

/// Gr(r, N) from the product of (1-(uv)^{N-r+m})/(1-(uv)^m), m = 1..r,
/// reduced by exact division. Throws InvalidRange unless 0 <= r <= N.
HodgeClass e_grassmannian(long r, long N);

/// Additivity over a finite disjoint union.
HodgeClass stratification_sum(const std::vector<HodgeClass>& parts);

/// Multiplicativity over a Zariski locally trivial fibration.
HodgeClass fibration_product(const HodgeClass& base, const HodgeClass& fibre);

/// Invariant / anti-invariant parts of X x X under swapping the factors:
/// (f^2 +- f(-u^2,-v^2)) / 2.
HodgeClass z2_plus(const HodgeClass& f);
HodgeClass z2_minus(const HodgeClass& f);

}  // namespace ehodge

#endif
