#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ffdistlab/cli.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = ffd::cli_main(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parse(const RunResult& r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST_CASE("audit-variety reports the unit circle") {
    const RunResult r = run({"audit-variety", "--q", "3", "--d", "2", "--variety", "sphere:1"});
    REQUIRE(r.code == 0);
    const nlohmann::json j = parse(r);
    CHECK(j["report"] == "variety-audit");
    CHECK(j["size"] == 4);
    CHECK(j["size_ratio"].get<double>() == doctest::Approx(4.0 / 3.0));
    CHECK(j["decay_constant"].get<double>() == doctest::Approx(2.0 / std::sqrt(3.0)));
    CHECK(j["max_affine_subspace"]["t_v"] == 1);
    CHECK(j["max_affine_subspace"]["searched_dim_cap"] == 2);

    const RunResult capped = run({"audit-variety", "--dim-cap", "1"});
    REQUIRE(capped.code == 0);
    CHECK(parse(capped)["max_affine_subspace"]["searched_dim_cap"] == 1);
}

TEST_CASE("energy reports exact and spectral values for explicit points") {
    const RunResult r =
        run({"energy", "--q", "3", "--d", "2", "--points", "0,0;1,0", "--k", "3"});
    REQUIRE(r.code == 0);
    const nlohmann::json j = parse(r);
    CHECK(j["report"] == "energy");
    CHECK(j["set_size"] == 2);
    CHECK(j["energy"] == "22");
    CHECK(j["energy_spectral"] == "22");
    CHECK(j["agree"] == true);

    const RunResult r2 =
        run({"energy", "--q", "3", "--d", "2", "--points", "0,0;1,0", "--k", "2"});
    REQUIRE(r2.code == 0);
    CHECK(parse(r2)["energy"] == "6");
}

TEST_CASE("energy handles extension fields with an explicit modulus") {
    const RunResult r = run({"energy", "--q", "9", "--ext-modulus", "1,0,1", "--d", "1",
                             "--points", "3", "--k", "2"});
    REQUIRE(r.code == 0);
    const nlohmann::json j = parse(r);
    CHECK(j["config"]["q"] == 9);
    CHECK(j["energy"] == "1"); // a singleton has energy 1 at every order

    // t^2 + 2 = (t-1)(t+1) over F_3 is reducible, so the modulus is rejected.
    const RunResult bad = run({"energy", "--q", "9", "--ext-modulus", "2,0,1", "--d", "1",
                               "--points", "3", "--k", "2"});
    CHECK(bad.code == 2);
}

TEST_CASE("distset reports the circle's distances and dot products") {
    const RunResult r = run({"distset", "--q", "3", "--d", "2", "--points",
                             "0,1;0,2;1,0;2,0", "--k", "2"});
    REQUIRE(r.code == 0);
    const nlohmann::json j = parse(r);
    CHECK(j["report"] == "distance-sets");
    CHECK(j["set_size"] == 4);
    CHECK(j["distance_set"] == nlohmann::json::array({0, 1, 2}));
    CHECK(j["distance_count"] == 3);
    CHECK(j["dot_product_count"] == j["dot_product_set"].size());
}

TEST_CASE("scan emits deterministic CSV by default and JSON on request") {
    const std::vector<std::string> args = {"scan", "--q", "3",       "--d",     "2",
                                           "--k",  "3", "--sizes",   "geom:1:4", "--samples",
                                           "3",    "--seed", "7"};
    const RunResult a = run(args);
    const RunResult b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out); // byte-identical across runs
    CHECK(a.out.rfind("config_hash,theorem,", 0) == 0);

    std::vector<std::string> jargs = args;
    jargs.push_back("--format");
    jargs.push_back("json");
    const RunResult c = run(jargs);
    REQUIRE(c.code == 0);
    const nlohmann::json j = parse(c);
    CHECK(j["report"] == "threshold-scan");
    REQUIRE(j["rows"].size() == 3); // geom:1:4 expands to 1,2,4
    CHECK(j["rows"][0]["size"] == 1);
    CHECK(j["rows"][1]["size"] == 2);
    CHECK(j["rows"][2]["size"] == 4);
    CHECK(j["theorem"] == "baseline"); // auto-selected: d = 2 has no sphere family
}

TEST_CASE("scan honors an explicit theorem when its hypotheses hold") {
    const RunResult r = run({"scan", "--q", "3", "--d", "2", "--k", "3", "--sizes", "4",
                             "--samples", "2", "--theorem", "baseline", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(parse(r)["predicted_exp"].get<double>() == doctest::Approx(1.0));

    // sphere-even needs even d >= 4; the circle violates that.
    const RunResult bad = run({"scan", "--q", "3", "--d", "2", "--k", "3", "--sizes", "4",
                               "--samples", "2", "--theorem", "sphere-even"});
    CHECK(bad.code == 2);
}

TEST_CASE("verify runs its suites and reports every instance passing") {
    const RunResult r = run({"verify", "--pairs", "3:2", "--samples", "4"});
    REQUIRE(r.code == 0);
    const nlohmann::json j = parse(r);
    CHECK(j["report"] == "identity-verification");
    CHECK(j["all_pass"] == true);
    REQUIRE(j["checks"].size() == 5);
    CHECK(j["checks"][0]["name"] == "parseval");
    CHECK(j["checks"][0]["instances"] == 4);
    for (const auto& check : j["checks"]) CHECK(check["pass"] == true);
}

TEST_CASE("--out writes the report to a file and keeps stdout quiet") {
    const std::string path = "cli_out_test.csv";
    const std::vector<std::string> base = {"scan", "--q", "3", "--d", "2", "--k", "3",
                                           "--sizes", "1,4", "--samples", "2"};
    const RunResult direct = run(base);
    REQUIRE(direct.code == 0);

    std::vector<std::string> filed = base;
    filed.push_back("--out");
    filed.push_back(path);
    const RunResult r = run(filed);
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream content;
    content << in.rdbuf();
    in.close();
    std::remove(path.c_str());
    CHECK(content.str() == direct.out);
}

TEST_CASE("usage and hypothesis failures exit 2, budget failures exit 3") {
    CHECK(run({}).code == 2);                      // a subcommand is required
    CHECK(run({"bogus"}).code == 2);               // unknown subcommand
    CHECK(run({"energy"}).code == 2);              // missing required --points
    CHECK(run({"--help"}).code == 0);              // help is a clean exit
    CHECK(run({"--help"}).out.find("audit-variety") != std::string::npos);

    const RunResult even_q = run({"audit-variety", "--q", "4"});
    CHECK(even_q.code == 2);

    const RunResult bad_coord =
        run({"energy", "--q", "3", "--d", "2", "--points", "0,3", "--k", "2"});
    CHECK(bad_coord.code == 2);
    CHECK(bad_coord.err.find("field-element index") != std::string::npos);

    const RunResult csv_energy =
        run({"energy", "--q", "3", "--d", "2", "--points", "0,0", "--format", "csv"});
    CHECK(csv_energy.code == 2);
    CHECK(csv_energy.err.find("csv output") != std::string::npos);

    const RunResult bad_lemma =
        run({"audit-lemma", "--lemma", "nope", "--sizes", "2", "--samples", "2"});
    CHECK(bad_lemma.code == 2);
    CHECK(bad_lemma.err.find("unknown lemma") != std::string::npos);

    const RunResult zero_size =
        run({"scan", "--q", "3", "--d", "2", "--k", "3", "--sizes", "0", "--samples", "2"});
    CHECK(zero_size.code == 2);

    const RunResult bad_pair = run({"verify", "--pairs", "3:2:9"});
    CHECK(bad_pair.code == 2);

    const RunResult bad_format = run({"scan", "--q", "3", "--d", "2", "--k", "3", "--sizes",
                                      "4", "--samples", "2", "--format", "xml"});
    CHECK(bad_format.code == 2);

    const RunResult budget = run({"audit-variety", "--q", "3", "--d", "20"});
    CHECK(budget.code == 3);
    CHECK(budget.err.find("budget") != std::string::npos);
}

TEST_CASE("audit-lemma runs end to end through the CLI") {
    const RunResult r = run({"audit-lemma", "--q", "3", "--d", "2", "--variety", "sphere:1",
                             "--lemma", "sumset-lower", "--k", "2", "--sizes", "1,2,3,4",
                             "--samples", "2"});
    REQUIRE(r.code == 0);
    const nlohmann::json j = parse(r);
    CHECK(j["report"] == "lemma-audit");
    CHECK(j["lemma"] == "sumset-lower");
    CHECK(j["instances"] == 15);
    CHECK(j["empirical_constant"].get<double>() >= 1.0);
}
