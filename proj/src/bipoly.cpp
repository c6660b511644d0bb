#include "ehodge/bipoly.hpp"

#include <algorithm>

namespace ehodge {

NotDivisible::NotDivisible(const std::string& what, const BiPoly& remainder)
    : std::runtime_error(what), remainder_(std::make_shared<const BiPoly>(remainder)) {}

const BiPoly& NotDivisible::remainder() const { return *remainder_; }

BiPoly::BiPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial{0, 0}, constant);
}

BiPoly::BiPoly(std::initializer_list<std::pair<Monomial, Rational>> terms) {
    for (const auto& [m, c] : terms) add_term(m, c);
}

BiPoly BiPoly::monomial(std::uint32_t i, std::uint32_t j, const Rational& coeff) {
    BiPoly p;
    p.add_term(Monomial{i, j}, coeff);
    return p;
}

Rational BiPoly::coefficient(std::uint32_t i, std::uint32_t j) const {
    auto it = terms_.find(Monomial{i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t BiPoly::total_degree() const {
    // The map is ordered by total degree, so the last term carries it.
    return terms_.empty() ? -1 : static_cast<std::int64_t>(terms_.rbegin()->first.total_degree());
}

std::int64_t BiPoly::degree_u() const {
    std::int64_t deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max<std::int64_t>(deg, m.u);
    return deg;
}

std::int64_t BiPoly::degree_v() const {
    std::int64_t deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max<std::int64_t>(deg, m.v);
    return deg;
}

void BiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
    BiPoly out;
    for (const auto& [ma, ca] : lhs.terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            out.add_term(Monomial{ma.u + mb.u, ma.v + mb.v}, ca * cb);
        }
    }
    return out;
}

BiPoly BiPoly::operator-() const {
    BiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

BiPoly pow(const BiPoly& base, std::uint64_t exponent) {
    BiPoly result(1);
    BiPoly b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return result;
}

BiPoly parity_substitute(const BiPoly& f) {
    BiPoly out;
    for (const auto& [m, c] : f.terms()) {
        const bool odd = (m.total_degree() % 2) != 0;
        out += BiPoly::monomial(2 * m.u, 2 * m.v, odd ? -c : c);
    }
    return out;
}

BiPoly swap_variables(const BiPoly& f) {
    BiPoly out;
    for (const auto& [m, c] : f.terms()) out += BiPoly::monomial(m.v, m.u, c);
    return out;
}

BiPoly specialize_diagonal(const BiPoly& f) {
    BiPoly out;
    for (const auto& [m, c] : f.terms()) out += BiPoly::monomial(m.u + m.v, 0, c);
    return out;
}

Rational eval(const BiPoly& f, const Rational& u0, const Rational& v0) {
    Rational sum(0);
    for (const auto& [m, c] : f.terms()) sum += c * pow(u0, m.u) * pow(v0, m.v);
    return sum;
}

namespace {

// Lexicographic order with u dominant: dividing by the lex-leading term is
// long division in u over Q[v], one v-monomial of the quotient at a time.
struct LexOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

using LexTerms = std::map<Monomial, Rational, LexOrder>;

BiPoly from_lex(const LexTerms& terms) {
    BiPoly out;
    for (const auto& [m, c] : terms) out += BiPoly::monomial(m.u, m.v, c);
    return out;
}

}  // namespace

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw DivisionByZero("exact_div: divisor is the zero polynomial");

    LexTerms rem(a.terms().begin(), a.terms().end());
    const LexTerms div(b.terms().begin(), b.terms().end());
    const auto& [lead_m, lead_c] = *div.rbegin();
    BiPoly quot;

    while (!rem.empty()) {
        const auto [top_m, top_c] = *rem.rbegin();
        if (top_m.u < lead_m.u || top_m.v < lead_m.v) {
            throw NotDivisible("exact_div: leading term " + std::to_string(top_m.u) + "," + std::to_string(top_m.v) +
                                   " of the remainder is not a multiple of the divisor's",
                               from_lex(rem));
        }
        const Monomial shift{top_m.u - lead_m.u, top_m.v - lead_m.v};
        const Rational c = top_c / lead_c;
        quot += BiPoly::monomial(shift.u, shift.v, c);
        for (const auto& [m, bc] : div) {
            const Monomial target{m.u + shift.u, m.v + shift.v};
            auto [it, inserted] = rem.try_emplace(target, -(c * bc));
            if (!inserted) {
                it->second -= c * bc;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
    }
    return quot;
}

}  // namespace ehodge
