#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const code = dyndeg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("degseq") {
    auto const r = run({"degseq", "--map", R"({"N":2,"coords":["X*Y","X*Y+Z^2","-1*Y*Z+Z^2"]})", "--nmax", "4"});
    REQUIRE(r.code == 0);
    auto const doc = json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["degrees"] == json::array({2, 4, 7, 12}));
    CHECK(doc["drop_at"] == 3);
}

TEST_CASE("default nmax and term cap") {
    auto const r = run({"degseq", "--map", R"({"N":2,"coords":["X*Y","X*Y+Z^2","Y*Z+Z^2"]})"});
    CHECK(json::parse(r.out)["degrees"].size() == 5);
    auto const capped = run({"degseq", "--map", R"({"N":2,"coords":["X*Y","X*Y+Z^2","Y*Z+Z^2"]})", "--max-terms", "5"});
    CHECK(capped.code == 3);
    CHECK(json::parse(capped.out)["truncated"] == true);
}

TEST_CASE("classifier and mod p") {
    auto const c = run({"fabc-classify", "-a", "1", "-b", "-1", "-c", "1"});
    REQUIRE(c.code == 0);
    auto const doc = json::parse(c.out);
    CHECK(doc["status"] == "unstable");
    CHECK(doc["zeta_order"] == 3);
    CHECK(doc["vanishing_index"] == 2);

    auto const m = run({"fabc-modp", "-a", "-2", "-b", "1", "-c", "3", "--pmax", "100"});
    REQUIRE(m.code == 0);
    for (auto const& row : json::parse(m.out)["primes"]) {
        auto const p = row["p"].get<std::uint64_t>();
        if (p < 5) {
            CHECK(row["kind"] == "DegenerateModP");
            continue;
        }
        std::uint64_t ord = 1, x = 2 % p;
        while (x != 1) x = x * 2 % p, ++ord;
        CHECK(row["m"] == ord - 1);
    }
}

TEST_CASE("locus, intersection, gfam, monomial") {
    auto const l = run({"fabc-locus", "-a", "1", "-b", "1", "-c", "T", "--nmax", "6"});
    REQUIRE(l.code == 0);
    auto const ldoc = json::parse(l.out);
    CHECK(ldoc["truncation"] == 6);
    CHECK(ldoc["entries"][0]["poly"] == "T^2 + 1");

    auto const i = run({"fabc-intersect", "--a1", "1", "--b1", "1", "--c1", "T", "--a2", "1", "--b2", "1", "--c2", "T",
                        "--nmax", "8"});
    REQUIRE(i.code == 0);
    CHECK(json::parse(i.out)["symmetric_difference"] == 0);

    auto const g = run({"gfam", "-a", "1", "-b", "2", "--t", "4"});
    REQUIRE(g.code == 0);
    CHECK(json::parse(g.out)["exceptional_index"].is_null());

    auto const mono = run({"monomial", "--matrix", "[[2,1],[1,1]]", "--epsilon", "1.0"});
    REQUIRE(mono.code == 0);
    auto const mdoc = json::parse(mono.out);
    CHECK(mdoc["D"] == "3");
    CHECK(mdoc["m_epsilon"]["m"].is_number());
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"degseq", "--bogus"}).code == 2);
    CHECK_FALSE(run({"degseq", "--bogus"}).err.empty());
    CHECK(run({"fabc-classify", "-a", "x", "-b", "1", "-c", "1"}).code == 2);
    CHECK(run({"degseq", "--map", R"({"N":2,"coords":["X^2","Y","Z"]})"}).code == 2);
    CHECK(run({"monomial", "--matrix", "[[1,2],[2,4]]"}).code == 2);
    CHECK(run({"monomial", "--matrix", "[[2,1],[1,1]]", "--tol", "0.5"}).code == 2);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify is deterministic") {
    auto const a = run({"verify", "--suite", "monomial", "--count", "50", "--seed", "7"});
    auto const b = run({"verify", "--suite", "monomial", "--count", "50", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out)["seed"] == 7);
}

TEST_CASE("human output") {
    auto const r = run({"fabc-classify", "-a", "1", "-b", "1", "-c", "1", "--format", "human"});
    CHECK(r.code == 0);
    CHECK(r.out.find("status: stable") != std::string::npos);
}

}  // TEST_SUITE
