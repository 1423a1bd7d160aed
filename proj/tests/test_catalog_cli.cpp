#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "grouplat/catalog.hpp"
#include "grouplat/errors.hpp"
#include "grouplat/report_json.hpp"
#include "oracles.hpp"

using namespace grouplat;

TEST_CASE("generator text: two permutations generating S3") {
    const auto [degree, gens] = parse_generator_text("degree 3\n2 1 3\n2 3 1\n");
    CHECK(degree == 3);
    REQUIRE(gens.size() == 2);
    const GroupTable g = closure_from_generators(gens, degree, "file:test");
    CHECK(g.order == 6);
}

TEST_CASE("generator text: identity only") {
    const auto [degree, gens] = parse_generator_text("degree 1\n1\n");
    CHECK(degree == 1);
    REQUIRE(gens.size() == 1);
    CHECK(closure_from_generators(gens, degree, "t").order == 1);
}

TEST_CASE("generator text: comments and blank lines are ignored") {
    const auto [degree, gens] =
        parse_generator_text("# a comment\ndegree 3\n\n2 1 3  # trailing comment\n");
    CHECK(degree == 3);
    CHECK(gens.size() == 1);
}

TEST_CASE("generator text: errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_generator_text("degree 3\n2 2 1\n"),
                         doctest::Contains("line 2"), ValidationError);
    CHECK_THROWS_WITH_AS(parse_generator_text("degree 3\n2 1 4\n"),
                         doctest::Contains("out of range"), ValidationError);
    CHECK_THROWS_WITH_AS(parse_generator_text("degree 3\n2 1\n"),
                         doctest::Contains("expected 3 images"), ValidationError);
    CHECK_THROWS_WITH_AS(parse_generator_text("size 3\n2 1 3\n"),
                         doctest::Contains("degree N"), ValidationError);
    CHECK_THROWS_AS(parse_generator_text(""), ValidationError);
    CHECK_THROWS_AS(parse_generator_text("degree 0\n"), ValidationError);
}

TEST_CASE("file: spec builds the group from disk") {
    const std::string path = "gens_s3_test.txt";
    {
        std::ofstream f(path);
        f << "degree 3\n2 1 3\n2 3 1\n";
    }
    const GroupTable g = build_group_spec("file:" + path);
    CHECK(g.order == 6);
    CHECK_FALSE(g.is_abelian());
    std::remove(path.c_str());
    CHECK_THROWS_AS(build_group_spec("file:does_not_exist.txt"), ValidationError);
}

TEST_CASE("named constructions") {
    CHECK(build_group_spec("cyclic:1").order == 1);
    CHECK(build_group_spec("dihedral:30").order == 30);
    CHECK(build_group_spec("dihedral:4").order == 4);
    CHECK(build_group_spec("symmetric:4").order == 24);
    CHECK(build_group_spec("alternating:4").order == 12);
    CHECK(build_group_spec("alternating:5").order == 60);
    CHECK(build_group_spec("semidirect:15:2:14").order == 30);
    CHECK(build_group_spec("product:cyclic:3,cyclic:5").is_cyclic());
    CHECK(build_group_spec("product:product:cyclic:2,cyclic:2,cyclic:2").order == 8);

    const GroupTable f20 = build_group_spec("semidirect:5:4:2");
    CHECK(f20.order == 20);
    CHECK_FALSE(f20.is_abelian());
    CHECK(oracle::profile(f20).center_size == 1);

    const GroupTable sl23 = build_group_spec("semidirect:sl23");
    CHECK(sl23.order == 24);
    CHECK(oracle::profile(sl23).order_multiset ==
          std::map<int, int>{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}});

    // order-30 dihedral built two ways matches on invariants
    CHECK(oracle::profile(build_group_spec("semidirect:15:2:14")) ==
          oracle::profile(build_group_spec("dihedral:30")));
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(build_group_spec("cyclic:0"), ValidationError);
    CHECK_THROWS_AS(build_group_spec("dihedral:5"), ValidationError);
    CHECK_THROWS_AS(build_group_spec("dihedral:2"), ValidationError);
    CHECK_THROWS_AS(build_group_spec("alternating:2"), ValidationError);
    CHECK_THROWS_AS(build_group_spec("nonsense:5"), ValidationError);
    CHECK_THROWS_AS(build_group_spec("cyclic:6,cyclic:2"), ValidationError);  // trailing junk
    CHECK_THROWS_AS(build_group_spec("product:cyclic:6"), ValidationError);
    CHECK_THROWS_AS(build_group_spec("semidirect:5:3:2"), ValidationError);   // 2^3 != 1 mod 5
    CHECK_THROWS_AS(build_group_spec("semidirect:6:2:2"), ValidationError);   // gcd(2,6) != 1
    CHECK_THROWS_AS(build_group_spec("cyclic:2000"), CapacityError);
}

TEST_CASE("builtin catalog contents") {
    const std::vector<std::string> specs = builtin_catalog(60, 200);
    const std::set<std::string> set(specs.begin(), specs.end());
    CHECK(set.size() == specs.size());  // no duplicates
    for (const char* required :
         {"cyclic:1", "cyclic:60", "dihedral:4", "dihedral:200", "symmetric:3", "symmetric:4",
          "alternating:4", "alternating:5", "semidirect:3:2:2", "semidirect:a4",
          "semidirect:15:2:14", "semidirect:5:4:2", "semidirect:7:3:2", "semidirect:sl23",
          "semidirect:8:2:5", "product:cyclic:2,cyclic:2", "product:cyclic:2,cyclic:30",
          "product:cyclic:2,symmetric:4"})
        CHECK(set.count(required) == 1);
    // everything under the caps: orders are small enough to construct
    for (const auto& s : specs) {
        const GroupTable g = build_group_spec(s);
        const bool dihedral = s.rfind("dihedral:", 0) == 0;
        CHECK(g.order <= (dihedral ? 200 : 60));
    }
    // deterministic generation
    CHECK(builtin_catalog(60, 200) == specs);
    CHECK(builtin_catalog(24, 24).size() < specs.size());
}

TEST_CASE("cli end-to-end") {
    const char* bin = std::getenv("GROUPLAT_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "GROUPLAT_BIN must point at the CLI binary");
    const std::string cmd(bin);
    auto run = [](const std::string& c) {
        const int status = std::system(c.c_str());
        return WEXITSTATUS(status);
    };

    CHECK(run(cmd + " verify --group dihedral:30 > cli_d30.txt") == 0);
    {
        std::ifstream f("cli_d30.txt");
        std::stringstream ss;
        ss << f.rdbuf();
        const std::string out = ss.str();
        CHECK(out.find("fitting order 15") != std::string::npos);
        CHECK(out.find("result: PASS") != std::string::npos);
    }
    std::remove("cli_d30.txt");

    CHECK(run(cmd + " verify --group symmetric:4 > /dev/null") == 0);
    CHECK(run(cmd + " verify --group cyclic:0 2> /dev/null") == 2);
    CHECK(run(cmd + " verify --group cyclic:999 2> /dev/null") == 2);
    CHECK(run(cmd + " verify --group nonsense:3 2> /dev/null") == 2);
    CHECK(run(cmd + " bogus-subcommand 2> /dev/null") == 2);
    CHECK(run(cmd + " 2> /dev/null") == 2);
    CHECK(run(cmd + " --help > /dev/null") == 0);
    CHECK(run(cmd + " lemma --name tsch --group dihedral:30 > /dev/null") == 0);
    CHECK(run(cmd + " lemma --name bogus --group dihedral:30 2> /dev/null") == 2);
    CHECK(run(cmd + " classify --group symmetric:3 --all-subgroups > /dev/null") == 0);

    // scan determinism at the byte level
    CHECK(run(cmd + " scan --max-order 16 --max-dihedral 16 --json scan_a.json > /dev/null") == 0);
    CHECK(run(cmd + " scan --max-order 16 --max-dihedral 16 --json scan_b.json > /dev/null") == 0);
    auto slurp = [](const char* p) {
        std::ifstream f(p, std::ios::binary);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    const std::string a = slurp("scan_a.json"), b = slurp("scan_b.json");
    CHECK_FALSE(a.empty());
    CHECK(a == b);
    CHECK(a.find("\"schema_version\": \"1\"") != std::string::npos);
    std::remove("scan_a.json");
    std::remove("scan_b.json");
}
