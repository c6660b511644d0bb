#include "ehodge/ratexpr.hpp"

namespace ehodge {

RatExpr::RatExpr(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("RatExpr with zero denominator");
}

RatExpr operator+(const RatExpr& a, const RatExpr& b) {
    if (a.den_ == b.den_) return RatExpr(a.num_ + b.num_, a.den_);
    return RatExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatExpr operator-(const RatExpr& a, const RatExpr& b) {
    if (a.den_ == b.den_) return RatExpr(a.num_ - b.num_, a.den_);
    return RatExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatExpr operator*(const RatExpr& a, const RatExpr& b) { return RatExpr(a.num_ * b.num_, a.den_ * b.den_); }

RatExpr operator/(const RatExpr& a, const RatExpr& b) {
    if (b.num_.is_zero()) throw DivisionByZero("RatExpr division by zero");
    return RatExpr(a.num_ * b.den_, a.den_ * b.num_);
}

BiPoly to_poly(const RatExpr& r) { return exact_div(r.num(), r.den()); }

bool equivalent(const RatExpr& a, const RatExpr& b) { return a.num() * b.den() == b.num() * a.den(); }

}  // namespace ehodge
