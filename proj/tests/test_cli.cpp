#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopfcyc/cli.hpp"
#include "hopfcyc/galois.hpp"
#include "hopfcyc/io.hpp"
#include "hopfcyc/specseq.hpp"

using namespace hopfcyc;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("hopfcyc_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

std::vector<std::int64_t> table_of(const json& j, const std::string& name) {
    for (const auto& r : j.at("reports"))
        for (const auto& t : r.at("tables"))
            if (t.at("name") == name) return t.at("values").get<std::vector<std::int64_t>>();
    FAIL("table " << name << " missing");
    return {};
}

}  // namespace

TEST_CASE("spec files round-trip for every built-in algebra") {
    for (const auto& name : builtin_hopf_names()) {
        CAPTURE(name);
        HopfAlgebra h = builtin_hopf(name);
        auto text = hopf_to_json(h).dump();
        HopfAlgebra back = hopf_from_json(json::parse(text));
        CHECK(hopf_to_json(back).dump() == text);
        CHECK(validate(back).ok());
    }
    HopfAlgebra f5 = hopf_from_json(json::parse(hopf_to_json(builtin_hopf("H4")).dump()), Field::prime(5));
    CHECK(f5.field() == Field::prime(5));
    CHECK(validate(f5).ok());
}

TEST_CASE("malformed spec files are input errors") {
    json good = json::parse(hopf_to_json(builtin_hopf("kC2")).dump());
    auto broken = [&](const std::function<void(json&)>& edit) {
        json j = good;
        edit(j);
        return j;
    };
    CHECK_THROWS_AS(hopf_from_json(broken([](json& j) { j.erase("mult"); })), InputError);
    CHECK_THROWS_AS(hopf_from_json(broken([](json& j) { j["mult"][0][2] = 7; })), InputError);
    CHECK_THROWS_AS(hopf_from_json(broken([](json& j) { j["counit"][0] = "1/0"; })), InputError);
    CHECK_THROWS_AS(hopf_from_json(broken([](json& j) { j["counit"][0] = "x"; })), InputError);
    CHECK_THROWS_AS(hopf_from_json(broken([](json& j) { j["dim"] = 3; })), InputError);
    CHECK_THROWS_AS(hopf_from_json(broken([](json& j) { j["field"] = {{"type", "Fp"}, {"p", 4}}; })), InputError);
    CHECK_THROWS_AS(hopf_from_json(broken([](json& j) { j["unit"] = json::array({"1"}); })), InputError);
    CHECK_NOTHROW(hopf_from_json(broken([](json& j) { j["counit"] = json::array({1, 1}); })));
}

TEST_CASE("group files") {
    json j = {{"name", "C2"}, {"elements", {"e", "a"}}, {"table", {{0, 1}, {1, 0}}}};
    FiniteGroup g = group_from_json(j);
    CHECK(g.order() == 2);
    j["table"] = {{0, 1}, {1, 1}};
    CHECK_THROWS_AS(group_from_json(j), InputError);
}

TEST_CASE("validate exit codes") {
    CHECK(cli_run({"validate", "kC2"}).code == 0);
    for (const auto& name : builtin_hopf_names()) CHECK(cli_run({"validate", name}).code == 0);

    json j = json::parse(hopf_to_json(builtin_hopf("H4")).dump());
    for (auto& t : j["mult"])
        if (t[0] == 2 && t[1] == 1) t = json::array({2, 1, 3, "1"});
    Run bad = cli_run({"validate", temp_file("h4_mutant.json", j.dump())});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("check failed") != std::string::npos);

    CHECK(cli_run({"validate", "/nonexistent/h.json"}).code == 2);
    CHECK(cli_run({"validate", temp_file("garbage.json", "{ not json")}).code == 2);
    CHECK(cli_run({"validate", "kC2", "--field", "fp:4"}).code == 2);
    CHECK(cli_run({"validate", "kC2", "--field", "fp:3"}).code == 0);
    CHECK(cli_run({"validate", "kC2", "--format", "xml"}).code == 2);
    CHECK(cli_run({"frobnicate"}).code == 2);
    CHECK(cli_run({}).code == 2);
}

TEST_CASE("galois from files and basis names") {
    HopfAlgebra s3 = builtin_hopf("kS3");
    std::string spec = temp_file("ks3.json", hopf_to_json(s3).dump());
    CHECK(cli_run({"galois", spec, "--subalgebra", "(12)"}).code == 0);
    CHECK(cli_run({"galois", "kS3/kC2"}).code == 0);

    SVec gen = s3.basis_vector(1) - s3.basis_vector(0);
    std::string ideal = temp_file("ks3_ideal.json", vectors_to_json({gen}, s3.dim()).dump());
    Run r = cli_run({"galois", spec, "--ideal", ideal, "--format", "json"});
    CHECK(r.code == 0);
    CHECK(table_of(json::parse(r.out), "dims H, B, I, C") == std::vector<std::int64_t>{6, 2, 3, 3});

    std::string zero = temp_file("zero_ideal.json", R"({"generators": []})");
    Run mismatch = cli_run({"galois", "kS3", "--subalgebra", "(12)", "--ideal", zero});
    CHECK(mismatch.code == 1);
    CHECK(mismatch.err.find("I = B+H") != std::string::npos);
    CHECK(cli_run({"galois", "kS3", "--subalgebra", "(45)"}).code == 2);
}

TEST_CASE("homology, isocheck, tor and spectral") {
    Run hc = cli_run({"homology", "kC2", "--theory", "hc", "--max-degree", "3", "--format", "json"});
    CHECK(hc.code == 0);
    CHECK(table_of(json::parse(hc.out), "HC") == std::vector<std::int64_t>{2, 0, 2, 0});
    CHECK(cli_run({"homology", "kC2", "--max-degree", "5"}).code == 2);
    CHECK(cli_run({"homology", "kC2", "--theory", "hp"}).code == 2);
    CHECK(cli_run({"tor", "kC2", "--max-degree", "-1"}).code == 2);
    CHECK(cli_run({"tor", "kC2", "--max-degree", "6"}).code == 2);

    CHECK(cli_run({"isocheck", "kS3/kC2", "--theorem", "3.4", "--max-degree", "3"}).code == 0);
    CHECK(cli_run({"isocheck", "H4/x", "--theorem", "3.7"}).code == 0);
    CHECK(cli_run({"isocheck", "H4/x", "--theorem", "gamma"}).out == cli_run({"isocheck", "H4/x", "--theorem", "gamma"}).out);
    CHECK(cli_run({"isocheck", "kS3/kC2", "--theorem", "psi-phi", "--max-degree", "2"}).code == 0);
    CHECK(cli_run({"isocheck", "kS3/kC3", "--theorem", "jara-stefan", "--max-degree", "2"}).code == 0);
    Run js = cli_run({"isocheck", "kS3/kC2", "--theorem", "jara-stefan"});
    CHECK(js.code == 1);
    CHECK(js.err.find("Hopf ideal") != std::string::npos);
    CHECK(cli_run({"isocheck", "kS3/kC2", "--theorem", "9.9"}).code == 2);

    Run tor = cli_run({"tor", "H4", "--format", "json"});
    CHECK(tor.code == 0);
    auto j = json::parse(tor.out);
    CHECK(table_of(j, "HH") == table_of(j, "Tor"));

    CHECK(cli_run({"spectral", "H4/x"}).code == 0);
}

TEST_CASE("classical subcommand") {
    Run r = cli_run({"classical", "--group", "S3", "--subgroup", "(12)", "--op", "frobenius", "--chi", "trivial",
                     "--format", "json"});
    CHECK(r.code == 0);
    CHECK(table_of(json::parse(r.out), "induced") == std::vector<std::int64_t>{3, 1, 0});
    r = cli_run({"classical", "--group", "S3", "--subgroup", "(12)", "--op", "frobenius", "--chi", "sign", "--format",
                 "json"});
    CHECK(table_of(json::parse(r.out), "induced") == std::vector<std::int64_t>{3, -1, 0});
    r = cli_run({"classical", "--group", "S3", "--subgroup", "(12)", "--op", "frobenius", "--chi", "1,-1", "--format",
                 "json"});
    CHECK(table_of(json::parse(r.out), "induced") == std::vector<std::int64_t>{3, -1, 0});

    CHECK(cli_run({"classical", "--group", "S3", "--subgroup", "(12)"}).code == 0);
    CHECK(cli_run({"classical", "--group", "Q8", "--subgroup", "i", "--op", "dual"}).code == 0);
    CHECK(cli_run({"classical", "--group", "S3", "--subgroup", "(123)", "--op", "frobenius", "--chi", "sign"}).code ==
          2);
    CHECK(cli_run({"classical", "--group", "S3", "--subgroup", "(12),(13)", "--op", "frobenius", "--chi",
                   "1,2,3,4,5,6"})
              .code == 2);
    CHECK(cli_run({"classical", "--group", "S3", "--op", "frobenius", "--field", "fp:3"}).code == 2);
    CHECK(cli_run({"classical", "--group", "S7"}).code == 2);
    CHECK(cli_run({"classical", "--group", "S3", "--subgroup", "(99)"}).code == 2);
    CHECK(cli_run({"classical", "--group", "S3", "--op", "bogus"}).code == 2);

    json c3 = {{"name", "C3"}, {"elements", {"e", "a", "b"}}, {"table", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}}};
    CHECK(cli_run({"classical", "--group", temp_file("c3.json", c3.dump()), "--subgroup", "e"}).code == 0);
}

TEST_CASE("JSON reports round-trip their tables") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"spectral", "kS3/kC2"}, {"tor", "kS3"}, {"classical", "--group", "S3", "--subgroup", "(12)"},
          {"homology", "H4/x", "--theory", "hc"}}) {
        std::vector<std::string> a = args;
        a.insert(a.end(), {"--format", "json"});
        Run r = cli_run(a);
        REQUIRE(r.code == 0);
        auto j = nlohmann::ordered_json::parse(r.out);
        for (const auto& rj : j.at("reports")) {
            Report back = report_from_json(json::parse(rj.dump()));
            CHECK(report_to_json(back).dump() == rj.dump());
        }
    }
    Run t = cli_run({"tor", "kS3", "--format", "json"});
    Report direct = corollary36_check(builtin_hopf("kS3"), 3);
    CHECK(table_of(json::parse(t.out), "Tor") == direct.tables()[1].second);
}

TEST_CASE("reports are deterministic and carry no timing by default") {
    std::vector<std::string> args = {"classical", "--group", "Q8", "--subgroup", "i", "--op", "stabilizers",
                                     "--max-degree", "5", "--seed", "7", "--format", "json"};
    Run a = cli_run(args), b = cli_run(args);
    CHECK(a.out == b.out);
    CHECK(a.out.find("timing") == std::string::npos);
    args.push_back("--timing");
    CHECK(cli_run(args).out.find("timing_ms") != std::string::npos);
}

TEST_CASE("export writes a loadable spec file") {
    Run r = cli_run({"export", "H4"});
    CHECK(r.code == 0);
    CHECK(validate(hopf_from_json(json::parse(r.out))).ok());
}
