#ifndef EHODGE_BIPOLY_HPP
#define EHODGE_BIPOLY_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "ehodge/rational.hpp"

namespace ehodge {

/// Exponent pair of the monomial u^u v^v.
struct Monomial {
    std::uint32_t u = 0;
    std::uint32_t v = 0;

    std::uint64_t total_degree() const { return std::uint64_t{u} + v; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: ascending total degree, then descending power of u.
struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return a.u > b.u;
    }
};

class BiPoly;

/// Raised by exact_div when no polynomial quotient exists. Carries the
/// nonzero remainder reached by the division as a witness.
class NotDivisible : public std::runtime_error {
   public:
    NotDivisible(const std::string& what, const BiPoly& remainder);
    const BiPoly& remainder() const;

   private:
    std::shared_ptr<const BiPoly> remainder_;
};

class DivisionByZero : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Sparse polynomial in u, v with exact rational coefficients. The term map
/// never stores a zero coefficient, so equality of term maps is equality of
/// polynomials.
class BiPoly {
   public:
    using TermMap = std::map<Monomial, Rational, CanonicalOrder>;

    BiPoly() = default;
    BiPoly(const Rational& constant);
    BiPoly(long constant) : BiPoly(Rational(constant)) {}
    BiPoly(int constant) : BiPoly(Rational(constant)) {}
    BiPoly(std::initializer_list<std::pair<Monomial, Rational>> terms);

    static BiPoly u() { return monomial(1, 0); }
    static BiPoly v() { return monomial(0, 1); }
    static BiPoly monomial(std::uint32_t i, std::uint32_t j, const Rational& coeff = Rational(1));
    /// (uv)^n
    static BiPoly uv_power(std::uint32_t n) { return monomial(n, n); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(std::uint32_t i, std::uint32_t j) const;

    /// Total degree; -1 for the zero polynomial.
    std::int64_t total_degree() const;
    std::int64_t degree_u() const;
    std::int64_t degree_v() const;

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const BiPoly& rhs) { return *this = *this * rhs; }
    BiPoly& operator*=(const Rational& scalar);

    friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
    friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
    friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
    friend BiPoly operator*(BiPoly lhs, const Rational& s) { return lhs *= s; }
    friend BiPoly operator*(const Rational& s, BiPoly rhs) { return rhs *= s; }
    friend BiPoly operator*(long s, BiPoly rhs) { return rhs *= Rational(s); }
    friend BiPoly operator*(int s, BiPoly rhs) { return rhs *= Rational(s); }
    friend BiPoly operator*(BiPoly lhs, long s) { return lhs *= Rational(s); }
    friend BiPoly operator*(BiPoly lhs, int s) { return lhs *= Rational(s); }
    BiPoly operator-() const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

   private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

BiPoly pow(const BiPoly& base, std::uint64_t exponent);

/// f(u, v) -> f(-u^2, -v^2).
BiPoly parity_substitute(const BiPoly& f);

/// f(u, v) -> f(v, u).
BiPoly swap_variables(const BiPoly& f);

/// f(u, v) -> f(u, u); the result only involves u.
BiPoly specialize_diagonal(const BiPoly& f);

Rational eval(const BiPoly& f, const Rational& u0, const Rational& v0);

/// Returns q with a = b * q. Throws DivisionByZero if b = 0 and NotDivisible
/// if b does not divide a in Q[u, v].
BiPoly exact_div(const BiPoly& a, const BiPoly& b);

}  // namespace ehodge

#endif
