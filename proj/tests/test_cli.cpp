#include "fibroots/cli.hpp"
#include "fibroots/decimal.hpp"

#include "support.hpp"

#include <json.hpp>

#include <sstream>

using fibroots::Rational;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = fibroots::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("poly") {
    CHECK(run({"poly", "--family", "G", "--k", "1", "--n", "2"}).out == "-1 -1 1\n");
    CHECK(run({"poly", "--family", "H", "--k", "2"}).out == "-2 0 1\n");
    CHECK(run({"poly", "--family", "BFP1", "--n", "3"}).out == "(2,1,2) (0,2,1)\n");
    const Run j = run({"poly", "--family", "BFP1", "--n", "3", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["terms"] == nlohmann::json::parse("[[2,1,2],[0,2,1]]"));
    const auto csv = lines(run({"poly", "--family", "F", "--n", "2", "--format", "csv"}).out);
    CHECK(csv == std::vector<std::string>{"power,coeff", "0,1", "1,0", "2,1"});
}

TEST_CASE("large coefficients stay exact in json") {
    const Run j = run({"poly", "--family", "F", "--n", "200", "--format", "json"});
    REQUIRE(j.code == 0);
    const auto coeffs = nlohmann::json::parse(j.out)["coefficients"];
    bool has_string = false;
    for (const auto& c : coeffs) has_string = has_string || c.is_string();
    CHECK(has_string);
}

TEST_CASE("xi") {
    const Run one = run({"xi", "--k", "1"});
    CHECK(one.code == 0);
    CHECK(one.out.find("lo     1.5\n") != std::string::npos);
    CHECK(one.out.find("hi     1.5\n") != std::string::npos);
    CHECK(one.out.find("width  0 (exact)") != std::string::npos);

    const Run two = run({"xi", "--k", "2", "--prec", "100", "--format", "json"});
    const auto j = nlohmann::json::parse(two.out);
    CHECK(j["lo"].get<std::string>().rfind("1.41421356237309504880", 0) == 0);
    CHECK(j["exact"] == false);

    const auto three = nlohmann::json::parse(run({"xi", "--k", "3", "--format", "json"}).out);
    CHECK(Rational(three["lo_exact"].get<std::string>()) > Rational(13, 10));
    CHECK(Rational(three["hi_exact"].get<std::string>()) < Rational(14, 10));
}

TEST_CASE("maxroot") {
    const auto phi = nlohmann::json::parse(run({"maxroot", "--k", "1", "--n", "2", "--prec", "80", "--format", "json"}).out);
    const Rational lo(phi["lo_exact"].get<std::string>()), hi(phi["hi_exact"].get<std::string>());
    CHECK(hi - lo <= fibroots::pow2_neg(80));
    CHECK(lo * lo - lo - 1 < 0);
    CHECK(hi * hi - hi - 1 > 0);
    CHECK(phi["lo"].get<std::string>().rfind("1.6180339887", 0) == 0);

    CHECK(run({"maxroot", "--k", "1", "--n", "1"}).out.find("width  0 (exact)") != std::string::npos);

    // Odd index sits below sqrt 2.
    const auto g3 = nlohmann::json::parse(run({"maxroot", "--k", "2", "--n", "3", "--format", "json"}).out);
    const Rational g3_hi(g3["hi_exact"].get<std::string>());
    CHECK(g3_hi * g3_hi < 2);

    const Run none = run({"maxroot", "--family", "F", "--n", "0"});
    CHECK(none.code == 1);
    CHECK_FALSE(none.err.empty());
}

TEST_CASE("printed endpoints are outward and differ only near the last digit") {
    const auto j = nlohmann::json::parse(run({"maxroot", "--k", "3", "--n", "9", "--prec", "70", "--format", "json"}).out);
    const std::string lo = j["lo"], hi = j["hi"];
    REQUIRE(lo.size() == hi.size());
    const std::size_t digits = lo.size() - lo.find('.') - 1;
    fibroots::Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    auto parse = [&](std::string d) {
        d.erase(d.find('.'), 1);
        return Rational(fibroots::Integer(d), scale);
    };
    const Rational unit(1, scale);
    CHECK(parse(lo) <= Rational(j["lo_exact"].get<std::string>()));
    CHECK(parse(hi) >= Rational(j["hi_exact"].get<std::string>()));
    CHECK(parse(hi) - parse(lo) <= 3 * unit);
    // One digit fewer would already exceed the enclosure width.
    CHECK(Rational(j["hi_exact"].get<std::string>()) - Rational(j["lo_exact"].get<std::string>()) <= unit);
}

TEST_CASE("converge csv") {
    const Run r = run({"converge", "--k", "1", "--n-max", "10", "--format", "csv"});
    CHECK(r.code == 0);
    const auto out = lines(r.out);
    REQUIRE(out.size() == 11);
    CHECK(out[0] == "k,n,parity,g_lo,g_hi,gap,width");
    for (std::size_t n = 1; n <= 10; ++n) {
        std::vector<std::string> cells;
        std::istringstream row(out[n]);
        for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
        REQUIRE(cells.size() == 7);
        CHECK(cells[1] == std::to_string(n));
        CHECK((cells[5][0] == '-') == (n % 2 == 1));
    }
}

TEST_CASE("converge json") {
    const Run r = run({"converge", "--k", "2", "--n-max", "40", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"rows", "xi_enclosure", "monotone_even_ok", "monotone_odd_ok", "bounds_ok", "interleave_ok"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["rows"].size() == 40);
    CHECK(std::abs(std::stod(j["rows"].back()["gap"].get<std::string>())) < 1e-6);
}

TEST_CASE("verify") {
    CHECK(run({"verify", "--suite", "fact3"}).code == 0);
    const Run appendix = run({"verify", "--suite", "appendix"});
    CHECK(appendix.code == 0);
    CHECK(appendix.out.find("f_n(2, 1) does not match") != std::string::npos);

    const Run all = run({"verify", "--suite", "all", "--format", "json"});
    CHECK(all.code == 0);
    const auto j = nlohmann::json::parse(all.out);
    CHECK(j["passed"] == true);
    CHECK(j["failed"] == 0);
    CHECK(j["checks"].size() > 30);
}

TEST_CASE("series, det and bivariate") {
    CHECK(run({"series", "--family", "G", "--k", "2", "--order", "10"}).code == 0);
    CHECK(run({"series", "--family", "H"}).code == 2);
    const Run det = run({"det", "--k", "2", "--n", "6", "--format", "json"});
    CHECK(det.code == 0);
    CHECK(nlohmann::json::parse(det.out)["passed"] == true);
    const Run bi = run({"bivariate", "--family", "BFP2", "--n", "3", "--x", "1", "--y", "2", "--format", "json"});
    CHECK(bi.code == 0);
    const auto j = nlohmann::json::parse(bi.out);
    CHECK(j["value"] == 7);
    CHECK(j["closed_form_matches"] == true);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"converge", "--k", "1", "--n-max", "1"}).code == 2);
    CHECK(run({"xi", "--k", "0"}).code == 2);
    CHECK(run({"xi", "--k", "-3"}).code == 2);
    CHECK(run({"xi", "--k", "two"}).code == 2);
    CHECK(run({"poly", "--family", "Q", "--n", "2"}).code == 2);
    CHECK(run({"poly", "--family", "F"}).code == 2);
    CHECK(run({"verify", "--suite", "fact9"}).code == 2);
    CHECK(run({"xi", "--k", "1", "--format", "xml"}).code == 2);
    CHECK(run({"bivariate", "--family", "BFP1", "--n", "2", "--x", "1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical inputs give identical output") {
    const std::vector<std::string> args{"converge", "--k", "3", "--n-max", "25", "--format", "json"};
    CHECK(run(args).out == run(args).out);
}
