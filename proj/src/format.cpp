#include "ehodge/format.hpp"

#include <stdexcept>

namespace ehodge {

OutputFormat parse_output_format(const std::string& name) {
    if (name == "plain") return OutputFormat::Plain;
    if (name == "latex") return OutputFormat::Latex;
    if (name == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown output format: " + name);
}

namespace {

std::string plain_monomial(const Monomial& m) {
    std::string s;
    if (m.u == 1) s += "u";
    if (m.u > 1) s += "u^" + std::to_string(m.u);
    if (m.v == 1) s += "v";
    if (m.v > 1) s += "v^" + std::to_string(m.v);
    return s;
}

std::string latex_monomial(const Monomial& m) {
    std::string s;
    if (m.u == 1) s += "u";
    if (m.u > 1) s += "u^{" + std::to_string(m.u) + "}";
    if (m.v == 1) s += "v";
    if (m.v > 1) s += "v^{" + std::to_string(m.v) + "}";
    return s;
}

std::string abs_plain_coeff(const Rational& c) {
    const Rational a = c.sign() < 0 ? -c : c;
    return a.to_string();
}

// Shared layout for both emitters: sign-separated terms, unit coefficients
// suppressed on non-constant monomials.
template <class CoeffFn, class MonoFn>
std::string render(const BiPoly& f, CoeffFn coeff, MonoFn mono) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational a = negative ? -c : c;
        const std::string mstr = mono(m);
        if (mstr.empty()) {
            out += coeff(a, false);
        } else if (a != Rational(1)) {
            out += coeff(a, true) + mstr;
        } else {
            out += mstr;
        }
    }
    return out;
}

}  // namespace

std::string to_plain(const Rational& r) { return r.to_string(); }

std::string to_plain(const BiPoly& f) {
    return render(
        f,
        [](const Rational& a, bool before_monomial) {
            if (before_monomial && !a.is_integer()) return "(" + abs_plain_coeff(a) + ")";
            return abs_plain_coeff(a);
        },
        plain_monomial);
}

std::string to_latex(const Rational& r) {
    if (r.is_integer()) return r.to_string();
    const Rational a = r.sign() < 0 ? -r : r;
    std::string s = "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
    return r.sign() < 0 ? "-" + s : s;
}

std::string to_latex(const BiPoly& f) {
    return render(
        f, [](const Rational& a, bool) { return to_latex(a); }, latex_monomial);
}

nlohmann::json to_json(const Rational& r) {
    return nlohmann::json{{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

nlohmann::json to_json(const BiPoly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : f.terms()) {
        terms.push_back({{"u", m.u}, {"v", m.v}, {"num", c.numerator().get_str()}, {"den", c.denominator().get_str()}});
    }
    return nlohmann::json{{"terms", terms}};
}

namespace {

mpz_class integer_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string()) {
        throw std::invalid_argument(std::string("missing decimal string field '") + key + "'");
    }
    mpz_class z;
    if (z.set_str(j.at(key).get<std::string>(), 10) != 0) {
        throw std::invalid_argument(std::string("field '") + key + "' is not a decimal integer");
    }
    return z;
}

}  // namespace

Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("rational must be a JSON object");
    const mpz_class num = integer_field(j, "num");
    const mpz_class den = integer_field(j, "den");
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
    return Rational(num, den);
}

BiPoly bipoly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
        throw std::invalid_argument("polynomial must be an object with a 'terms' array");
    }
    BiPoly out;
    for (const auto& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("u") || !t.contains("v") || !t.at("u").is_number_unsigned() ||
            !t.at("v").is_number_unsigned()) {
            throw std::invalid_argument("term needs nonnegative integer exponents 'u' and 'v'");
        }
        out += BiPoly::monomial(t.at("u").get<std::uint32_t>(), t.at("v").get<std::uint32_t>(), rational_from_json(t));
    }
    return out;
}

}  // namespace ehodge
