#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

#include <json.hpp>

#include "cli_contract.hpp"

using contract::call;
using contract::kContract;

TEST_CASE("exit codes per subcommand") {
    for (const auto& c : kContract) {
        std::string line;
        for (const auto& a : c.args) line += a + " ";
        INFO(line);
        const auto r = call(c.args);
        CHECK(r.code == c.code);
        if (c.code == 2 || c.code == 3) CHECK_FALSE(r.err.empty());
        if (c.code == 3) CHECK(r.err.find("--cap") != std::string::npos);
        if (c.code <= 1 && !c.args.empty()) CHECK_FALSE(r.out.empty());
    }
}

TEST_CASE("every subcommand is covered by the contract table") {
    for (const char* s : {"validate", "compose", "lift", "ext", "colim", "lim", "presheaves", "yoneda-check", "kan",
                          "cocomplete", "cauchy-complete", "cauchy-test", "morita", "matr", "bim", "dsum", "split",
                          "lax-colim", "laws"}) {
        bool seen = false;
        for (const auto& c : kContract) seen = seen || (!c.args.empty() && std::find(c.args.begin(), c.args.end(), s) != c.args.end());
        CHECK_MESSAGE(seen, s);
    }
}

TEST_CASE("a parse error exits 2 with a located diagnostic") {
    const auto path = std::string(QK_BINARY_DIR) + "/broken.qk";
    {
        std::ofstream f(path);
        f << "quantaloid Two = bool2;\ncategory C over Two {\n  objects: a, b;\n  hom a b = z;\n}\n";
    }
    const auto r = call({"validate", path});
    CHECK(r.code == 2);
    CHECK(r.err.find(path + ":4:13: error:") != std::string::npos);
    CHECK(call({"laws", path}).code == 2);
}

TEST_CASE("JSON output carries the schema and is byte-identical across runs") {
    for (const auto& c : kContract) {
        if (c.code > 1 || c.args.empty()) continue;
        auto args = c.args;
        args.insert(args.begin(), "--json");
        const auto a = call(args), b = call(args);
        INFO(args[1]);
        CHECK(a.code == c.code);
        CHECK(a.out == b.out);
        const auto j = nlohmann::json::parse(a.out);
        CHECK(j.at("schema") == 1);
        CHECK(j.at("command") == args[1]);
    }
}

TEST_CASE("JSON certificates") {
    auto j = nlohmann::json::parse(call({"--json", "colim", "antichain.qk", "phi", "id"}).out);
    CHECK(j.at("exists") == false);
    CHECK(j.at("failing").at("object") == "**");

    j = nlohmann::json::parse(call({"--json", "morita", "chain-vs-doubled.qk", "A", "B"}).out);
    CHECK(j.at("equivalent") == true);
    REQUIRE(j.at("bijection").size() == 2);
    CHECK(j.at("bijection")[0].at("left") == "y(a)");
    CHECK(j.at("bijection")[0].at("right") == "y(a1)=y(a2)");

    j = nlohmann::json::parse(call({"--json", "laws", "bool2.qk", "--suite", "lemma04"}).out);
    CHECK(j.at("passed") == 14);
    CHECK(j.at("failed") == 0);
    CHECK(j.at("skipped") == 0);
    std::set<std::string> laws;
    for (const auto& row : j.at("rows")) {
        CHECK(row.at("suite") == "lemma04");
        CHECK(row.at("status") == "pass");
        laws.insert(row.at("law").get<std::string>());
    }
    CHECK(laws.size() == 7);
}

TEST_CASE("seeds change the random part of the law report") {
    const auto a = call({"--json", "--seed", "3", "laws", "bool2.qk", "--suite", "prop4"});
    const auto b = call({"--json", "--seed", "4", "laws", "bool2.qk", "--suite", "prop4"});
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(a.out != b.out);
    CHECK(a.out == call({"--json", "--seed", "3", "laws", "bool2.qk", "--suite", "prop4"}).out);
}

TEST_CASE("the full law battery exits 0 on every fixture") {
    for (const auto& f : oracle::fixture_names()) {
        INFO(f);
        const auto r = call({"laws", f});
        CHECK(r.code == 0);
        CHECK(r.out.find(" 0 failed, 0 skipped") != std::string::npos);
    }
}
