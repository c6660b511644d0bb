#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "ehodge/format.hpp"
#include "ehodge/hodge_blocks.hpp"

using namespace ehodge;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(EHODGE_CLI_PATH) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) r.out += buf.data();
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

const BiPoly x = BiPoly::uv_power(1);
const BiPoly one(1);

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("hodge") {
        Run r = cli("hodge --n 2 --d 3 --k 1");
        CHECK(r.status == 0);
        CHECK(r.out == "1 + u + v + 2uv + u^2v + uv^2 + 2u^2v^2 + u^3v^2 + u^2v^3 + u^3v^3\n");

        CHECK(cli("hodge --n 2 --d 4 --k 1 --chamber 0 --euler").out == "0\n");
        CHECK(cli("hodge --n 2 --d 4 --k 1 --fixed-det --chamber 1 --euler").out == "4\n");
        CHECK(cli("hodge --n 2 --d 3 --k 1 --at 1,1").out == "12\n");
        CHECK(cli("hodge --n 2 --d 3 --k 1 --fixed-det --poincare").out == "1 + u^2 + u^4\n");
    }

    TEST_CASE("hodge json round trip") {
        Run r = cli("hodge --n 2 --d 5 --k 1 --chamber 1 --format json");
        REQUIRE(r.status == 0);
        const BiPoly f = bipoly_from_json(nlohmann::json::parse(r.out));
        CHECK(to_plain(f) + "\n" == cli("hodge --n 2 --d 5 --k 1 --chamber 1").out);
    }

    TEST_CASE("hodge errors") {
        CHECK(cli("hodge --n 3 --d 9 --k 1").status == 2);
        CHECK(cli("hodge --n 2 --d 4 --k 1 --chamber 5").status == 2);
        CHECK(cli("hodge --n 2 --d 3 --k 1 --format yaml").status == 2);
        CHECK(cli("hodge --n 2").status == 2);
        CHECK(cli("nonsense").status == 2);
    }

    TEST_CASE("strata") {
        Run r = cli("strata --d 2");
        CHECK(r.status == 0);
        CHECK(r.out ==
              "generic: uv + u^2v + uv^2 + u^2v^2\n"
              "extension: 1 + u + v + uv\n"
              "split: 0\n"
              "sum: 1 + u + v + 2uv + u^2v + uv^2 + u^2v^2\n");
        CHECK(cli("strata --d 2 --fixed-det").out.find("sum: 1 + uv\n") != std::string::npos);
        const auto j = nlohmann::json::parse(cli("strata --d 4 --fixed-det --format json").out);
        CHECK(bipoly_from_json(j["split"]) == BiPoly(4));
        Run bad = cli("strata --d 3");
        CHECK(bad.status == 2);
        CHECK(bad.out.find("d must be even") != std::string::npos);
    }

    TEST_CASE("critical-values") {
        Run r = cli("critical-values --d 5 --a 1");
        CHECK(r.status == 0);
        CHECK(r.out == "i\td1\tn1\tn2\talpha\n1\t2\t3\t4\t1/4\n2\t1\t2\t5\t3/5\n");
        CHECK(cli("critical-values --d 2 --a 0").out == "i\td1\tn1\tn2\talpha\n");
        const auto j = nlohmann::json::parse(cli("critical-values --d 5 --a 1 --format json").out);
        REQUIRE(j["critical_values"].size() == 2);
        CHECK(j["critical_values"][1]["alpha"] == "3/5");
    }

    TEST_CASE("verify") {
        Run r = cli("verify --max-d 2");
        CHECK(r.status == 0);
        CHECK(r.out.find("FAIL") == std::string::npos);
        CHECK(cli("verify --max-d 8 --max-a 2 --cases 50").status == 0);
        CHECK(cli("verify --max-d 1").status == 2);
    }

    TEST_CASE("classify") {
        Run r = cli("classify --n 2 --n2 7 --d 5 --k 1");
        CHECK(r.status == 0);
        CHECK(r.out.rfind("Isomorphic (n' ≡ n mod d)", 0) == 0);
        Run b = cli("classify --n 4 --d 6 --k 1");
        CHECK(b.status == 0);
        CHECK(b.out.rfind("birational to P^5 × C", 0) == 0);
        CHECK(cli("classify --n 4 --d 2 --k 3").status == 2);
        CHECK(cli("classify --n 2 --n2 4 --d 6 --k 1").status == 2);
    }
}
