#ifndef EHODGE_FORMAT_HPP
#define EHODGE_FORMAT_HPP

#include <string>

#include <json.hpp>

#include "ehodge/bipoly.hpp"

namespace ehodge {

enum class OutputFormat { Plain, Latex, Json };

/// "plain" | "latex" | "json"; throws std::invalid_argument otherwise.
OutputFormat parse_output_format(const std::string& name);

/// e.g. "1 + u + v + 2uv - (1/2)u^2v"; the zero polynomial prints as "0".
std::string to_plain(const BiPoly& f);
std::string to_plain(const Rational& r);

/// e.g. "1 + 3u^{2}v^{2} - \frac{1}{2}u"
std::string to_latex(const BiPoly& f);
std::string to_latex(const Rational& r);

/// {"terms": [{"u": i, "v": j, "num": "...", "den": "..."}, ...]} in canonical order.
nlohmann::json to_json(const BiPoly& f);
nlohmann::json to_json(const Rational& r);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
BiPoly bipoly_from_json(const nlohmann::json& j);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace ehodge

#endif
