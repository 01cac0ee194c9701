#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "fcorr/report.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary() {
    const char* bin = std::getenv("FCORR_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "FCORR_BIN must point at the CLI under test");
    return bin;
}

RunResult run(const std::string& args) {
    const std::string cmd = "\"" + binary() + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

}  // namespace

TEST_CASE("coeffs emits the reference values as json") {
    const auto res = run("coeffs --fixture CM0 --format json");
    CHECK(res.exit_code == 0);
    const auto doc = nlohmann::ordered_json::parse(res.out);
    CHECK(doc["coefficients"]["SUP"]["value"].get<double>() == doctest::Approx(0.7071).epsilon(1e-3));
    CHECK(doc["coefficients"]["II"]["value"].get<double>() == doctest::Approx(0.5345).epsilon(1e-3));
    CHECK(doc["coefficients"]["COANTI"]["value"].get<double>() ==
          doctest::Approx(0.6123).epsilon(1e-3));
    CHECK(doc["coefficients"]["SUP"]["route"] == "spectral");
    CHECK(doc["meta"].contains("seed"));
    CHECK(doc["meta"].contains("restarts"));
    CHECK(doc["meta"]["mass_deficit"].get<double>() == doctest::Approx(0.0));
    CHECK(doc["matrix"]["d"] == 3);

    const auto cm6 = run("coeffs --fixture CM6 --format json");
    REQUIRE(cm6.exit_code == 0);
    const auto d6 = nlohmann::ordered_json::parse(cm6.out);
    CHECK(d6["coefficients"]["II"]["value"].get<double>() == doctest::Approx(-0.0912).epsilon(2e-3));
    CHECK(d6["coefficients"]["ID"]["value"].get<double>() == doctest::Approx(0.4714).epsilon(1e-3));
    CHECK(d6["coefficients"]["CO"]["value"].get<double>() == doctest::Approx(0.2581).epsilon(1e-3));
    CHECK(d6["coefficients"]["ANTI"]["value"].get<double>() ==
          doctest::Approx(0.4714).epsilon(1e-3));
    CHECK(d6["coefficients"]["SUP"]["value"].get<double>() == doctest::Approx(0.4714).epsilon(1e-3));
}

TEST_CASE("json reports round-trip byte for byte") {
    for (const char* cmd : {"coeffs --fixture CM6 --format json",
                            "compare --fixture CM10 --fixture CM11 --format json",
                            "kappa --fixture CM2 --format json"}) {
        const auto res = run(cmd);
        REQUIRE(res.exit_code == 0);
        const auto doc = nlohmann::ordered_json::parse(res.out);
        CHECK(fcorr::dump_json(doc) == res.out);
    }
}

TEST_CASE("identical seeds give byte-identical reports") {
    const auto a = run("coeffs --fixture CM4 --format json --seed 99");
    const auto b = run("coeffs --fixture CM4 --format json --seed 99");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const auto mc1 = run("mc-check --fixture CM0 --class II --samples 5000 --seed 5 --format json");
    const auto mc2 = run("mc-check --fixture CM0 --class II --samples 5000 --seed 5 --format json");
    CHECK(mc1.exit_code == 0);
    CHECK(mc1.out == mc2.out);
}

TEST_CASE("file input accepts counts and probabilities") {
    write_file("cli_counts.csv", "30,5\n10,55\n");
    const auto res = run("coeffs cli_counts.csv --format json");
    CHECK(res.exit_code == 0);
    const auto doc = nlohmann::ordered_json::parse(res.out);
    CHECK(doc["matrix"]["cells"][0][0].get<double>() == doctest::Approx(0.3));
    CHECK(doc["meta"]["mass_deficit"].get<double>() == doctest::Approx(99.0));

    write_file("cli_probs.json", R"({"cells": [[0.25, 0.25], [0.25, 0.25]]})");
    const auto prod = run("coeffs cli_probs.json --format json");
    CHECK(prod.exit_code == 0);
    const auto pd = nlohmann::ordered_json::parse(prod.out);
    for (const char* cls : {"SUP", "II", "ID", "MON", "CO", "ANTI", "COANTI"}) {
        CHECK(std::abs(pd["coefficients"][cls]["value"].get<double>()) <= 1e-9);
    }
    std::remove("cli_counts.csv");
    std::remove("cli_probs.json");
}

TEST_CASE("exit codes distinguish input, degeneracy and invariants") {
    CHECK(run("coeffs --fixture NOPE").exit_code == 2);
    CHECK(run("coeffs missing_file.csv").exit_code == 2);

    write_file("cli_bad.csv", "1,2\n3\n");
    CHECK(run("coeffs cli_bad.csv").exit_code == 2);
    std::remove("cli_bad.csv");

    write_file("cli_degenerate.csv", "0.5,0.5\n0,0\n");
    CHECK(run("coeffs cli_degenerate.csv").exit_code == 3);
    std::remove("cli_degenerate.csv");

    CHECK(run("compare --fixture CM0").exit_code == 2);  // needs two inputs
}

TEST_CASE("compare reports verdicts and stays exit zero") {
    const auto sup = run("compare --fixture CM10 --fixture CM11 --format json");
    CHECK(sup.exit_code == 0);
    auto doc = nlohmann::ordered_json::parse(sup.out);
    CHECK(doc["outcome"] == "FirstSuperior");
    CHECK(doc["deciding_step"] == "CO");

    const auto tie = run("compare --fixture \"CM(B)\" --fixture \"CM(C)\" --format json");
    CHECK(tie.exit_code == 0);
    doc = nlohmann::ordered_json::parse(tie.out);
    CHECK(doc["outcome"] == "Incomparable");
    CHECK(doc["deciding_step"].is_null());

    const auto self = run("compare --fixture CM2 --fixture CM2 --format json");
    CHECK(self.exit_code == 0);
    CHECK(nlohmann::ordered_json::parse(self.out)["outcome"] == "Incomparable");

    const auto order = run(
        "compare --fixture \"CM(D)\" --fixture \"CM(B)\" --order ID,CO,ANTI,II --format json");
    CHECK(order.exit_code == 0);
    doc = nlohmann::ordered_json::parse(order.out);
    CHECK(doc["deciding_step"] == "ID");
    CHECK(doc["steps"][0]["step"] == "ID");
}

TEST_CASE("kappa subcommand") {
    write_file("cli_agree.csv", "0.4,0.1\n0.1,0.4\n");
    const auto res = run("kappa cli_agree.csv --weights indicator --format json");
    CHECK(res.exit_code == 0);
    const auto doc = nlohmann::ordered_json::parse(res.out);
    CHECK(doc["kappa"]["indicator"].get<double>() == doctest::Approx(0.6).epsilon(1e-9));
    CHECK_FALSE(doc["kappa"].contains("linear"));

    write_file("cli_diag.csv", "3,0\n0,7\n");
    const auto diag = run("kappa cli_diag.csv --format json");
    const auto dd = nlohmann::ordered_json::parse(diag.out);
    for (const char* scheme : {"indicator", "linear", "quadratic"}) {
        CHECK(dd["kappa"][scheme].get<double>() == doctest::Approx(1.0));
    }
    std::remove("cli_agree.csv");
    std::remove("cli_diag.csv");
}

TEST_CASE("mc-check reports the gap against the exact value") {
    const auto res = run("mc-check --fixture CM0 --class SUP --samples 20000 --format json");
    CHECK(res.exit_code == 0);
    const auto doc = nlohmann::ordered_json::parse(res.out);
    const double gap = doc["gap"].get<double>();
    CHECK(gap >= -1e-6);
    CHECK(gap <= 0.03);
    CHECK(doc["exact"].get<double>() == doctest::Approx(0.7071).epsilon(1e-3));

    // a draw budget too small to meet the sample target is an input error
    const auto tight = run("mc-check --fixture CM5 --class II --samples 100000 --max-draws 5000");
    CHECK(tight.exit_code == 2);
}

TEST_CASE("fixtures listing includes the patched variants") {
    const auto res = run("fixtures");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("CM3'") != std::string::npos);
    CHECK(res.out.find("CM(D)") != std::string::npos);
}
