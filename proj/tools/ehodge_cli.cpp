// Command-line front end: compute, specialize, export and verify Hodge
// polynomials of moduli spaces of coherent systems on an elliptic curve.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ehodge/coherent_systems.hpp"
#include "ehodge/format.hpp"
#include "ehodge/verification.hpp"

namespace {

using namespace ehodge;
using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string render(const BiPoly& f, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Plain: return to_plain(f);
        case OutputFormat::Latex: return to_latex(f);
        case OutputFormat::Json: return to_json(f).dump();
    }
    return {};
}

std::string render(const Rational& r, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Plain: return to_plain(r);
        case OutputFormat::Latex: return to_latex(r);
        case OutputFormat::Json: return to_json(r).dump();
    }
    return {};
}

// "u0,v0" with rational entries, e.g. "1/2,2".
std::pair<Rational, Rational> parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--at expects u0,v0");
    try {
        return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--at: ") + e.what());
    }
}

long env_or(const char* name, long fallback) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0') return fallback;
    try {
        return std::stol(value);
    } catch (const std::exception&) {
        throw UsageError(std::string("environment variable ") + name + " is not an integer");
    }
}

struct HodgeArgs {
    long n = 0, d = 0, k = 1;
    bool fixed_det = false;
    unsigned chamber = 0;
    std::string format = "plain";
    bool poincare = false;
    bool euler = false;
    std::string at;
};

int cmd_hodge(const HodgeArgs& args) {
    const OutputFormat fmt = parse_output_format(args.format);
    const ModuliQuery q{args.n, args.d, args.k, args.fixed_det,
                        args.chamber == 0 ? Chamber{SmallAlpha{}} : Chamber{ChamberIndex{args.chamber}}};
    const BiPoly f = hodge_polynomial(q);
    if (args.euler) {
        std::cout << render(eval(f, Rational(-1), Rational(-1)), fmt) << "\n";
    } else if (!args.at.empty()) {
        const auto [u0, v0] = parse_point(args.at);
        std::cout << render(eval(f, u0, v0), fmt) << "\n";
    } else if (args.poincare) {
        std::cout << render(specialize_diagonal(f), fmt) << "\n";
    } else {
        std::cout << render(f, fmt) << "\n";
    }
    return 0;
}

int cmd_strata(long d, bool fixed_det, const std::string& format) {
    const OutputFormat fmt = parse_output_format(format);
    if (d < 2 || d % 2 != 0) throw PreconditionViolation("d must be even");
    // Rank 2 represents every n with gcd(n,d) = 2; the strata only depend on d.
    const ModuliQuery q{2, d, 1, fixed_det, SmallAlpha{}};
    BiPoly sum;
    json out = {{"d", d}, {"fixed_det", fixed_det}};
    for (Stratum s : {Stratum::Generic, Stratum::Extension, Stratum::Split}) {
        const BiPoly part = hodge_stratum(q, s);
        sum += part;
        if (fmt == OutputFormat::Json) {
            out[to_string(s)] = to_json(part);
        } else {
            std::cout << to_string(s) << ": " << render(part, fmt) << "\n";
        }
    }
    if (fmt == OutputFormat::Json) {
        out["sum"] = to_json(sum);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "sum: " << render(sum, fmt) << "\n";
    }
    return 0;
}

int cmd_critical_values(long d, long a, const std::string& format) {
    const OutputFormat fmt = parse_output_format(format);
    const auto walls = critical_values(d, a);
    switch (fmt) {
        case OutputFormat::Json: {
            json rows = json::array();
            for (const auto& cv : walls) {
                rows.push_back({{"i", cv.index}, {"d1", cv.d1}, {"d2", cv.d2}, {"n1", cv.n1}, {"n2", cv.n2},
                                {"alpha", cv.alpha.to_string()}});
            }
            std::cout << json{{"d", d}, {"a", a}, {"critical_values", rows}}.dump() << "\n";
            break;
        }
        case OutputFormat::Latex:
            std::cout << "\\begin{tabular}{rrrrr}\ni & d_1 & n_1 & n_2 & \\alpha_i \\\\\n\\hline\n";
            for (const auto& cv : walls) {
                std::cout << cv.index << " & " << cv.d1 << " & " << cv.n1 << " & " << cv.n2 << " & $"
                          << to_latex(cv.alpha) << "$ \\\\\n";
            }
            std::cout << "\\end{tabular}\n";
            break;
        case OutputFormat::Plain:
            std::cout << "i\td1\tn1\tn2\talpha\n";
            for (const auto& cv : walls) {
                std::cout << cv.index << "\t" << cv.d1 << "\t" << cv.n1 << "\t" << cv.n2 << "\t" << cv.alpha << "\n";
            }
            break;
    }
    return 0;
}

int cmd_verify(long max_d, long max_a, std::size_t cases, std::uint64_t seed, bool serial) {
    if (max_d < 2) throw PreconditionViolation("--max-d must be at least 2");
    if (max_a < 0) throw PreconditionViolation("--max-a must be nonnegative");
    VerifyConfig config;
    config.max_d = max_d;
    config.max_a = max_a;
    config.random_cases = cases;
    config.seed = seed;
    config.parallel = !serial;
    std::cout << "verify: max-d " << max_d << ", max-a " << max_a << ", " << cases << " random cases per family\n";
    bool all = true;
    for (const auto& r : run_verification(config)) {
        all = all && r.passed;
        std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << " (" << r.cases << " cases, " << r.seconds
                  << " s)\n";
        if (!r.passed) std::cout << "      witness: " << r.witness << "\n";
    }
    std::cout << (all ? "all identities hold\n" : "verification FAILED\n");
    return all ? 0 : kExitVerifyFailed;
}

int cmd_classify(long n, std::optional<long> n2, long d, long k, bool fixed_det) {
    if (n2) {
        const Classification c = classify_isomorphism(n, *n2, d, k);
        std::cout << to_string(c.verdict) << " (" << c.reason << ")\n";
        return 0;
    }
    const BirationalType t = birational_type(n, d, k, fixed_det);
    std::cout << describe(t) << " (" << t.reason << ")\n";
    std::cout << "at most " << birational_type_count_bound(d) << " birational types of G(alpha;n," << d
              << ",1) as n and alpha vary\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hodge polynomials of moduli spaces of coherent systems on an elliptic curve"};
    app.require_subcommand(1);

    HodgeArgs hodge;
    auto* hodge_cmd = app.add_subcommand("hodge", "Hodge polynomial of G(alpha; n, d, k)");
    hodge_cmd->add_option("--n", hodge.n, "rank")->required();
    hodge_cmd->add_option("--d", hodge.d, "degree")->required();
    hodge_cmd->add_option("--k", hodge.k, "number of sections");
    hodge_cmd->add_flag("--fixed-det", hodge.fixed_det, "fix the determinant");
    hodge_cmd->add_option("--chamber", hodge.chamber, "chamber index, 0 = small alpha");
    hodge_cmd->add_option("--format", hodge.format, "plain|latex|json");
    auto* poincare = hodge_cmd->add_flag("--poincare", hodge.poincare, "substitute v = u");
    auto* euler = hodge_cmd->add_flag("--euler", hodge.euler, "evaluate at u = v = -1");
    auto* at = hodge_cmd->add_option("--at", hodge.at, "evaluate at u0,v0 (rationals)");
    poincare->excludes(euler)->excludes(at);
    euler->excludes(at);

    long strata_d = 0;
    bool strata_fixed = false;
    std::string strata_format = "plain";
    auto* strata_cmd = app.add_subcommand("strata", "strata of G_0(n,d,1) for gcd(n,d) = 2 and their sum");
    strata_cmd->add_option("--d", strata_d, "even degree")->required();
    strata_cmd->add_flag("--fixed-det", strata_fixed, "fix the determinant");
    strata_cmd->add_option("--format", strata_format, "plain|latex|json");

    long cv_d = 0;
    long cv_a = 0;
    std::string cv_format = "plain";
    auto* cv_cmd = app.add_subcommand("critical-values", "walls for coherent systems of type (2+ad, d, 1)");
    cv_cmd->add_option("--d", cv_d, "degree")->required();
    cv_cmd->add_option("--a", cv_a, "rank parameter a >= 0")->required();
    cv_cmd->add_option("--format", cv_format, "plain|latex|json");

    std::optional<long> verify_d;
    std::optional<long> verify_a;
    bool verify_deep = false;
    bool verify_serial = false;
    std::size_t verify_cases = 1000;
    std::uint64_t verify_seed = 20240601;
    auto* verify_cmd = app.add_subcommand("verify", "check every identity family up to the given bounds");
    verify_cmd->add_option("--max-d", verify_d, "largest degree (default 20, env EHODGE_VERIFY_MAX_D)");
    verify_cmd->add_option("--max-a", verify_a, "largest a (default 3, env EHODGE_VERIFY_MAX_A)");
    verify_cmd->add_flag("--deep", verify_deep, "raise the default max-d to 40");
    verify_cmd->add_option("--cases", verify_cases, "random cases per arithmetic family");
    verify_cmd->add_option("--seed", verify_seed, "random seed");
    verify_cmd->add_flag("--serial", verify_serial, "run families one after another");

    long cl_n = 0, cl_d = 0, cl_k = 1;
    std::optional<long> cl_n2;
    bool cl_fixed = false;
    auto* classify_cmd = app.add_subcommand("classify", "isomorphism verdict or birational type");
    classify_cmd->add_option("--n", cl_n, "rank")->required();
    classify_cmd->add_option("--n2", cl_n2, "second rank n' for the isomorphism question");
    classify_cmd->add_option("--d", cl_d, "degree")->required();
    classify_cmd->add_option("--k", cl_k, "number of sections");
    classify_cmd->add_flag("--fixed-det", cl_fixed, "fix the determinant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*hodge_cmd) return cmd_hodge(hodge);
        if (*strata_cmd) return cmd_strata(strata_d, strata_fixed, strata_format);
        if (*cv_cmd) return cmd_critical_values(cv_d, cv_a, cv_format);
        if (*verify_cmd) {
            const long max_d = verify_d ? *verify_d : env_or("EHODGE_VERIFY_MAX_D", verify_deep ? 40 : 20);
            const long max_a = verify_a ? *verify_a : env_or("EHODGE_VERIFY_MAX_A", 3);
            return cmd_verify(max_d, max_a, verify_cases, verify_seed, verify_serial);
        }
        if (*classify_cmd) return cmd_classify(cl_n, cl_n2, cl_d, cl_k, cl_fixed);
    } catch (const PreconditionViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OutOfScope& e) {
        std::cerr << "out of scope: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
