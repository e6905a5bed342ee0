#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifdef CYHULL_BIN
#include <sys/wait.h>
#endif

#include "cyhull/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = cyhull::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args, int expect_status = 0) {
    auto r = run_cli(args);
    REQUIRE(r.status == expect_status);
    return json::parse(r.out);
}

std::set<std::string> factor_coeff_set(const json& j) {
    std::set<std::string> out;
    for (const auto& f : j.at("factors")) {
        std::string s;
        for (const auto& c : f.at("coeffs")) s += c.dump() + ",";
        out.insert(s);
    }
    return out;
}

}  // namespace

TEST_CASE("factor reproduces the worked factorizations") {
    const json j9 = run_json({"factor", "--q", "2", "--n", "9", "--format", "json"});
    CHECK(j9.at("q") == 2);
    CHECK(j9.at("n") == 9);
    CHECK(factor_coeff_set(j9) ==
          std::set<std::string>{"1,1,", "1,1,1,", "1,0,0,1,0,0,1,"});
    for (const auto& f : j9.at("factors")) CHECK(f.at("self_reciprocal") == true);

    const json j10 = run_json({"factor", "--q", "3", "--n", "10", "--format", "json"});
    CHECK(factor_coeff_set(j10) ==
          std::set<std::string>{"1,1,", "2,1,", "1,1,1,1,1,", "1,2,1,2,1,"});
    for (const auto& f : j10.at("factors")) CHECK(f.at("self_reciprocal") == true);

    // length one: the single factor x - 1
    const json j1 = run_json({"factor", "--q", "2", "--n", "1", "--format", "json"});
    REQUIRE(j1.at("factors").size() == 1);
    CHECK(j1.at("factors")[0].at("coeffs") == json::array({1, 1}));
}

TEST_CASE("factor validates its schema") {
    const json j = run_json({"factor", "--q", "4", "--n", "15", "--format", "json"});
    REQUIRE(j.contains("q"));
    REQUIRE(j.contains("n"));
    REQUIRE(j.at("factors").is_array());
    for (const auto& f : j.at("factors")) {
        CHECK(f.at("leader").is_number_unsigned());
        CHECK(f.at("coset").is_array());
        CHECK(f.at("delta").is_number_unsigned());
        CHECK(f.at("coeffs").is_array());
        CHECK(f.at("poly").is_string());
        CHECK(f.at("self_reciprocal").is_boolean());
    }
}

TEST_CASE("factor rejects invalid inputs with exit 2") {
    CHECK(run_cli({"factor", "--q", "6", "--n", "5"}).status == 2);
    CHECK(run_cli({"factor", "--q", "2", "--n", "6"}).status == 2);
    CHECK(run_cli({"factor", "--q", "2"}).status == 2);
    CHECK(run_cli({"factor", "--q", "2", "--n", "5", "--format", "yaml"}).status == 2);
    CHECK(run_cli({"nonsense"}).status == 2);
    CHECK_FALSE(run_cli({"factor", "--q", "6", "--n", "5"}).err.empty());
}

TEST_CASE("cosets command") {
    const json j = run_json({"cosets", "--q", "2", "--n", "7", "--format", "json"});
    REQUIRE(j.at("cosets").size() == 3);
    CHECK(j.at("cosets")[1].at("leader") == 1);
    CHECK(j.at("cosets")[1].at("elements") == json::array({1, 2, 4}));
    CHECK(j.at("cosets")[1].at("neg_pair") == 3);
}

TEST_CASE("classify enumerates every divisor") {
    const json j = run_json({"classify", "--q", "2", "--n", "9", "--format", "json"});
    REQUIRE(j.at("records").size() == 8);
    for (const auto& r : j.at("records")) {
        CHECK(r.at("lcd") == true);
        CHECK(r.at("hull_dim") == 0);
        CHECK(r.at("one_dim_hull") == false);
        CHECK(r.at("generator").is_array());
        CHECK(r.at("bz_dual").is_array());
        CHECK(r.at("dim").is_number_unsigned());
        // the record invariants from the schema
        CHECK((r.at("hull_dim") == 0) == r.at("lcd").get<bool>());
        CHECK((r.at("hull_dim") == 1) == r.at("one_dim_hull").get<bool>());
    }

    const json j16 = run_json({"classify", "--q", "3", "--n", "10", "--format", "json"});
    CHECK(j16.at("records").size() == 16);
}

TEST_CASE("classify filters") {
    const json one = run_json(
        {"classify", "--q", "4", "--n", "3", "--hull-dim", "1", "--format", "json"});
    CHECK(one.at("records").size() > 0);
    for (const auto& r : one.at("records")) CHECK(r.at("hull_dim") == 1);

    const json none = run_json(
        {"classify", "--q", "2", "--n", "7", "--hull-dim", "1", "--format", "json"});
    CHECK(none.at("records").empty());

    const json lcd = run_json({"classify", "--q", "2", "--n", "7", "--lcd-only", "--format",
                               "json"});
    for (const auto& r : lcd.at("records")) CHECK(r.at("lcd") == true);
}

TEST_CASE("classify output is identical across worker counts") {
    const auto one = run_cli({"classify", "--q", "4", "--n", "15", "--format", "csv"});
    const auto four = run_cli(
        {"classify", "--q", "4", "--n", "15", "--format", "csv", "--jobs", "4"});
    CHECK(one.status == 0);
    CHECK(four.status == 0);
    CHECK(one.out == four.out);
    // 2^9 records plus the header line
    size_t lines = 0;
    for (char c : one.out)
        if (c == '\n') ++lines;
    CHECK(lines == 513);
}

TEST_CASE("csv output quotes the list-valued columns") {
    const auto r = run_cli({"classify", "--q", "2", "--n", "7", "--format", "csv"});
    CHECK(r.out.find("\"1,1,0,1") != std::string::npos);
    CHECK(r.out.rfind("generator,dim,bz_dual,hull_dim,lcd,one_dim_hull\n", 0) == 0);
}

TEST_CASE("hull command reports formula and oracle") {
    const json j = run_json({"hull", "--q", "2", "--n", "7", "--gen", "1,1,0,1", "--format",
                             "json"});
    CHECK(j.at("hull_dim") == 3);
    CHECK(j.at("oracle_hull_dim") == 3);
    CHECK(j.at("agree") == true);
    CHECK(j.at("lcd") == false);
    CHECK(j.at("dim") == 4);
    CHECK(j.at("bz_dual") == json::array({0, 1}));

    // non-divisor generator: exit 2 and the remainder is reported
    const auto bad = run_cli({"hull", "--q", "2", "--n", "7", "--gen", "1,1,1"});
    CHECK(bad.status == 2);
    CHECK(bad.err.find("remainder") != std::string::npos);
}

TEST_CASE("lcp command") {
    // C = <m0 m1>, D = <m3> over F_2, n=7
    const json j = run_json({"lcp", "--q", "2", "--n", "7", "--gen-c", "1,0,1,1,1", "--gen-d",
                             "1,0,1,1", "--format", "json"});
    CHECK(j.at("lcp") == true);
    CHECK(j.at("oracle_lcp") == true);
    CHECK(j.at("product_is_xn_minus_1") == true);
    CHECK(j.at("agree") == true);

    const json no = run_json({"lcp", "--q", "2", "--n", "7", "--gen-c", "1,1,0,1", "--gen-d",
                              "1,1,0,1", "--format", "json"});
    CHECK(no.at("lcp") == false);
    CHECK(no.at("agree") == true);
}

TEST_CASE("intersect command") {
    const json j = run_json({"intersect", "--q", "2", "--n", "7", "--gen-c", "1,1", "--gen-d",
                             "1,0,1,1", "--format", "json"});
    CHECK(j.at("intersection_dim") == 3);
    CHECK(j.at("oracle_dim") == 3);
    CHECK(j.at("agree") == true);

    // C = D gives dim C
    const json same = run_json({"intersect", "--q", "2", "--n", "7", "--gen-c", "1,1,0,1",
                                "--gen-d", "1,1,0,1", "--format", "json"});
    CHECK(same.at("intersection_dim") == 4);
}

TEST_CASE("verify command runs the suites") {
    const json jm = run_json({"verify", "--q", "2", "--m", "3", "--format", "json"});
    CHECK(jm.at("all_pass") == true);
    CHECK(jm.at("n") == 7);
    bool saw_trace_rows = false;
    for (const auto& s : jm.at("suites")) {
        CHECK(s.at("fail") == 0);
        if (s.at("name") == "trace_row_space") {
            saw_trace_rows = true;
            CHECK(s.at("pass") == 8);
        }
    }
    CHECK(saw_trace_rows);

    const json jn = run_json({"verify", "--q", "2", "--n", "9", "--format", "json"});
    CHECK(jn.at("all_pass") == true);
    for (const auto& s : jn.at("suites")) {
        if (s.at("name") == "lcd_triple_agreement")
            CHECK(s.at("note").get<std::string>().find("lcd_count=8/8") != std::string::npos);
    }

    // no ternary one-dimensional hulls at q=3, m=2
    const json j32 = run_json({"verify", "--q", "3", "--m", "2", "--format", "json"});
    CHECK(j32.at("all_pass") == true);
    for (const auto& s : j32.at("suites"))
        if (s.at("name") == "one_dim_hull_scan")
            CHECK(s.at("note").get<std::string>().find("one_dim_hull_count=0") !=
                  std::string::npos);

    CHECK(run_cli({"verify", "--q", "2"}).status == 2);
    CHECK(run_cli({"verify", "--q", "2", "--n", "7", "--m", "3"}).status == 2);
}

TEST_CASE("trace-check command") {
    const json j = run_json({"trace-check", "--q", "2", "--m", "3", "--format", "json"});
    CHECK(j.at("all_pass") == true);
    REQUIRE(j.at("suites").size() == 2);
    CHECK(j.at("suites")[0].at("name") == "trace_row_space");
    CHECK(j.at("suites")[1].at("name") == "vanishing_criterion_vs_direct");
    CHECK(run_cli({"trace-check", "--q", "2", "--m", "30"}).status == 2);
}

TEST_CASE("output lands in a file with --out") {
    const std::string path = "cli_out_test.json";
    const auto r = run_cli({"factor", "--q", "2", "--n", "7", "--format", "json", "--out", path});
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    json j;
    in >> j;
    CHECK(j.at("factors").size() == 3);
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("help exits zero") {
    CHECK(run_cli({"--help"}).status == 0);
    CHECK_FALSE(run_cli({"--help"}).out.empty());
}

TEST_CASE("every command also renders table and csv") {
    CHECK(run_cli({"factor", "--q", "2", "--n", "9", "--format", "csv"}).status == 0);
    CHECK(run_cli({"cosets", "--q", "2", "--n", "9", "--format", "csv"}).status == 0);
    CHECK(run_cli({"hull", "--q", "2", "--n", "7", "--gen", "1,1,0,1", "--format", "csv"})
              .status == 0);
    CHECK(run_cli({"lcp", "--q", "2", "--n", "7", "--gen-c", "1,1", "--gen-d", "1,0,1,1",
                   "--format", "table"})
              .status == 0);
    CHECK(run_cli({"intersect", "--q", "2", "--n", "7", "--gen-c", "1,1", "--gen-d", "1,0,1,1",
                   "--format", "csv"})
              .status == 0);
    CHECK(run_cli({"verify", "--q", "2", "--n", "7", "--format", "csv"}).status == 0);
    CHECK(run_cli({"trace-check", "--q", "2", "--m", "2", "--format", "table"}).status == 0);

    const std::string path = "classify_out_test.csv";
    CHECK(run_cli({"classify", "--q", "2", "--n", "9", "--format", "csv", "--out", path})
              .status == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "generator,dim,bz_dual,hull_dim,lcd,one_dim_hull");
    size_t lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == 8);
    in.close();
    std::remove(path.c_str());
}

#ifdef CYHULL_BIN
TEST_CASE("the installed binary honors the exit-code contract") {
    auto shell = [](const std::string& cmd) {
        const int raw = std::system((std::string(CYHULL_BIN) + " " + cmd).c_str());
        return WEXITSTATUS(raw);
    };
    CHECK(shell("factor --q 2 --n 9 > /dev/null 2>&1") == 0);
    CHECK(shell("hull --q 2 --n 7 --gen 1,1,0,1 > /dev/null 2>&1") == 0);
    CHECK(shell("factor --q 6 --n 5 > /dev/null 2>&1") == 2);
    CHECK(shell("hull --q 2 --n 7 --gen 1,1,1 > /dev/null 2>&1") == 2);
    CHECK(shell("> /dev/null 2>&1") == 2);  // missing subcommand
}
#endif
