#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "segre/cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = segre::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find(needle) != std::string::npos) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("cli: ring evaluation") {
    CliResult r = run({"ring", "(2*t1+t2)^2*t1"});
    CHECK(r.code == 0);
    CHECK(r.out == "t1*t2^2\nintegral=1\n");

    CliResult cube = run({"ring", "(t1+t2)^3"});
    CHECK(cube.code == 0);
    CHECK(cube.out == "3*t1*t2^2\nintegral=3\n");

    CliResult three = run({"ring", "(t1+t2+t3)^3", "--factors", "1,1,1"});
    CHECK(three.code == 0);
    CHECK(three.out.find("integral=6") != std::string::npos);
}

TEST_CASE("cli: ring rejects bad input with exit code 2") {
    CliResult dangling = run({"ring", "t1 +"});
    CHECK(dangling.code == 2);
    CHECK(dangling.err.find("parse error") != std::string::npos);
    CHECK(dangling.err.find("position 4") != std::string::npos);

    CHECK(run({"ring", "t3"}).code == 2);
    CHECK(run({"ring", "t1", "--factors", "0,2"}).code == 2);
    CHECK(run({"ring", "t1", "--factors", "x"}).code == 2);
}

TEST_CASE("cli: chern assembles bundles from parts") {
    CliResult sum = run({"chern", "--line", "1,0", "--line", "0,1"});
    CHECK(sum.code == 0);
    CHECK(sum.out == "rank=2; c1=(1,1); c2=(1,0); c3=0\n");

    CliResult twisted = run({"chern", "--tangent", "--twist", "1,0"});
    CHECK(twisted.code == 0);
    CHECK(twisted.out == "rank=2; c1=(2,1); c2=(1,1); c3=0\n");

    CliResult doubled = run({"chern", "--tangent", "--tangent"});
    CHECK(doubled.code == 0);
    CHECK(doubled.out == "rank=4; c1=(0,2); c2=(0,3); c3=0\n");

    CliResult with_character = run({"chern", "--line", "1,0", "--tangent", "--character"});
    CHECK(with_character.code == 0);
    CHECK(with_character.out.find("rank=3; c1=(1,1); c2=(1,1); c3=1\n") == 0);
    CHECK(with_character.out.find("character=3 + t1 + t2 - 1/2*t2^2") != std::string::npos);
}

TEST_CASE("cli: chern usage errors") {
    CHECK(run({"chern"}).code == 2);
    CHECK(run({"chern", "--rank", "2"}).code == 2);
    CHECK(run({"chern", "--line", "1"}).code == 2);
    CHECK(run({"chern", "--line", "a,b"}).code == 2);
}

TEST_CASE("cli: chi agrees with the line-bundle formula") {
    CliResult six = run({"chi", "--line", "1,1"});
    CHECK(six.code == 0);
    CHECK(six.out == "6\n");

    CliResult nine = run({"chi", "--line", "2,1"});
    CHECK(nine.code == 0);
    CHECK(nine.out == "9\n");

    CliResult sum = run({"chi", "--rank", "2", "--c1", "1,1", "--c2", "1,1", "--c3", "1"});
    CHECK(sum.code == 0);
    CHECK(sum.out == "4\n");
}

TEST_CASE("cli: chi rejects non-integral data with exit code 1") {
    CliResult odd = run({"chi", "--rank", "2", "--c1", "1,1", "--c2", "0,1", "--c3", "0"});
    CHECK(odd.code == 1);
    CHECK(odd.err.find("formula error") != std::string::npos);
}

TEST_CASE("cli: cohomology tables and single degrees") {
    CliResult all = run({"cohomology", "--line", "2,1"});
    CHECK(all.code == 0);
    CHECK(all.out == "h^0=9\nh^1=0\nh^2=0\nh^3=0\nchi=9\n");

    CliResult negative = run({"cohomology", "--line", "-2,1"});
    CHECK(negative.code == 0);
    CHECK(negative.out == "h^0=0\nh^1=3\nh^2=0\nh^3=0\nchi=-3\n");

    CliResult single = run({"cohomology", "--line", "-2,1", "--i", "1"});
    CHECK(single.code == 0);
    CHECK(single.out == "3\n");

    CliResult dual = run({"cohomology", "--line", "-4,-4"});
    CHECK(dual.code == 0);
    CHECK(dual.out.find("h^3=") != std::string::npos);
}

TEST_CASE("cli: ci reports curve data and rank bounds") {
    CliResult ci11 = run({"ci", "1", "1"});
    CHECK(ci11.code == 0);
    CHECK(ci11.out ==
          "s=1 bidegree=(1,2) genus=0\ndegree=3\nranks=[3,5]\n"
          "family-dimensions=r=3:8 r=4:5 r=5:0\n");

    CliResult ci12 = run({"ci", "1", "2"});
    CHECK(ci12.code == 0);
    CHECK(ci12.out == "s=1 bidegree=(4,4) genus=3\ndegree=8\nranks=[3,11]\n");

    CHECK(run({"ci", "0", "2"}).code == 2);
    CHECK(run({"ci", "1"}).code == 2);
}

TEST_CASE("cli: curve computations") {
    CliResult serre = run({"curve", "--bidegree", "1,2", "--genus", "0", "--serre", "1,1"});
    CHECK(serre.code == 0);
    CHECK(serre.out == "s=1 bidegree=(1,2) genus=0\nranks=[3,5]\n");

    CliResult canonical = run({"curve", "--s", "2", "--bidegree", "0,2", "--genus=-1",
                               "--serre", "2,1", "--canonical"});
    CHECK(canonical.code == 0);
    CHECK(canonical.out == "s=2 bidegree=(0,2) genus=-1\nranks=[2,3]\n");

    CliResult sections = run({"curve", "--bidegree", "2,3", "--genus", "1", "--twist", "1,1",
                              "--h0"});
    CHECK(sections.code == 0);
    CHECK(sections.out ==
          "s=1 bidegree=(2,3) genus=1\ntwisted-canonical-degree=5\nh0=5\n");

    CliResult pairing = run({"curve", "--bidegree", "1,2", "--genus", "0", "--pairing", "1,1"});
    CHECK(pairing.code == 0);
    CHECK(pairing.out.find("pairing=3") != std::string::npos);

    CHECK(run({"curve", "--bidegree", "1,2", "--genus", "0", "--h0"}).code == 2);
    CHECK(run({"curve", "--bidegree", "0,0", "--genus", "0"}).code == 2);

    CliResult unsupported = run({"curve", "--s", "2", "--bidegree", "0,2", "--genus=-1",
                                 "--twist", "1,0", "--h0"});
    CHECK(unsupported.code == 2);
    CHECK(unsupported.err.find("unsupported") != std::string::npos);
}

TEST_CASE("cli: classify text output") {
    CliResult table = run({"classify", "--c1", "1,1"});
    CHECK(table.code == 0);
    CHECK(count_lines(table.out, "c1=(1,1)") == 3);
    CHECK(table.out.find("c1=(1,1) s=1 bidegree=(0,1) genus=0 r=[2,2] {r=2: O(1,0)+O(0,1)}") ==
          0);

    CliResult as_c2 = run({"classify", "--c1", "2,1", "--as-c2"});
    CHECK(as_c2.code == 0);
    CHECK(count_lines(as_c2.out, "c2=(") == 7);
    CHECK(as_c2.out.find("bidegree=") == std::string::npos);

    CliResult wide = run({"classify", "--c1", "1,2"});
    CHECK(wide.code == 0);
    CHECK(count_lines(wide.out, "c1=(1,2)") == 10);
    CHECK(wide.out.find("s=1 bidegree=(2,3) genus=1 r=[3,6]") != std::string::npos);
}

TEST_CASE("cli: classify degenerate and unsupported classes") {
    CliResult partitions = run({"classify", "--c1", "4,0"});
    CHECK(partitions.code == 0);
    CHECK(count_lines(partitions.out, "c1=(4,0)") == 5);

    CliResult plane = run({"classify", "--c1", "0,1"});
    CHECK(plane.code == 0);
    CHECK(count_lines(plane.out, "c1=(0,1)") == 2);
    CHECK(plane.out.find("pullback-tangent") != std::string::npos);

    CliResult delegated = run({"classify", "--c1", "0,2"});
    CHECK(delegated.code == 2);
    CHECK(delegated.err.find("see: ") != std::string::npos);

    CliResult unknown = run({"classify", "--c1", "3,3"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("unsupported") != std::string::npos);

    CHECK(run({"classify", "--c1", "0,0"}).code == 2);
}

TEST_CASE("cli: classify json round-trips through a parser") {
    CliResult r = run({"classify", "--c1", "1,2", "--format", "json"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["c1"] == nlohmann::json::array({"1", "2"}));
    REQUIRE(j["entries"].size() == 10);
    bool found = false;
    for (const auto& entry : j["entries"]) {
        if (entry["bidegree"] == nlohmann::json::array({"2", "3"})) {
            found = true;
            CHECK(entry["ranks"]["lo"] == "3");
            CHECK(entry["ranks"]["hi"] == "6");
            CHECK(entry["genus"] == "1");
        }
    }
    CHECK(found);

    CliResult tsv = run({"classify", "--c1", "1,2", "--format", "tsv"});
    CHECK(tsv.code == 0);
    CHECK(count_lines(tsv.out, "\t") == 11);  // header plus ten rows
}

TEST_CASE("cli: verify passes against the frozen tables") {
    CliResult text = run({"verify"});
    CHECK(text.code == 0);
    CHECK(count_lines(text.out, "[PASS]") == 20);
    CHECK(text.out.find("[FAIL]") == std::string::npos);
    CHECK(count_lines(text.out, "note: ") == 3);
    CHECK(text.out.find("overall: PASS\n") != std::string::npos);

    CliResult tsv = run({"verify", "--format", "tsv"});
    CHECK(tsv.code == 0);
    CHECK(tsv.out.rfind("OVERALL\tPASS\n") ==
          tsv.out.size() - std::string("OVERALL\tPASS\n").size());

    CliResult json_report = run({"verify", "--format", "json"});
    REQUIRE(json_report.code == 0);
    nlohmann::json j = nlohmann::json::parse(json_report.out);
    CHECK(j["overall"] == "PASS");
    CHECK(j["rows"].size() == 20);
    CHECK(j["annotations"].size() == 3);
}

TEST_CASE("cli: json output for scalar commands") {
    CliResult r = run({"chi", "--line", "1,1", "--format", "json"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["chi"] == "6");

    CliResult ring = run({"ring", "(t1+t2)^3", "--format", "json"});
    REQUIRE(ring.code == 0);
    nlohmann::json rj = nlohmann::json::parse(ring.out);
    CHECK(rj["value"] == "3*t1*t2^2");
    CHECK(rj["integral"] == "3");

    CliResult tsv = run({"chi", "--line", "1,1", "--format", "tsv"});
    CHECK(tsv.code == 0);
    CHECK(tsv.out == "chi\t6\n");
}

TEST_CASE("cli: help and usage") {
    CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("ring") != std::string::npos);
    CHECK(help.out.find("classify") != std::string::npos);

    CliResult bare = run({});
    CHECK(bare.code == 0);
    CHECK(bare.out.find("segre") != std::string::npos);

    CliResult bogus = run({"bogus"});
    CHECK(bogus.code == 2);

    CliResult bad_format = run({"verify", "--format", "xml"});
    CHECK(bad_format.code == 2);
}
