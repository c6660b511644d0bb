#ifndef EHODGE_RATEXPR_HPP
#define EHODGE_RATEXPR_HPP

#include "ehodge/bipoly.hpp"

namespace ehodge {

/// Unreduced quotient num/den of two BiPoly. Closed-form Hodge polynomials
/// are assembled as RatExpr and reduced once with to_poly().
class RatExpr {
   public:
    RatExpr(BiPoly num, BiPoly den = BiPoly(1));

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }

    friend RatExpr operator+(const RatExpr& a, const RatExpr& b);
    friend RatExpr operator-(const RatExpr& a, const RatExpr& b);
    friend RatExpr operator*(const RatExpr& a, const RatExpr& b);
    /// Throws DivisionByZero if b is zero.
    friend RatExpr operator/(const RatExpr& a, const RatExpr& b);

   private:
    BiPoly num_;
    BiPoly den_;
};

/// Exact quotient num/den; throws NotDivisible when it is not a polynomial.
BiPoly to_poly(const RatExpr& r);

/// Cross-multiplication equality.
bool equivalent(const RatExpr& a, const RatExpr& b);

}  // namespace ehodge

#endif
