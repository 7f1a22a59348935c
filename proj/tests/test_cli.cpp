#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "oracle.hpp"
#include "table.hpp"

using relbound::cli::run_cli;
using oracle::rel;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("pionium spectrum has six rows and the expected ground state") {
    const auto r = run({"spectrum", "pi+", "pi-", "--Z", "1", "--n-max", "3", "--branch", "normal", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 6);
    CHECK(j[0]["label"] == "1S");
    CHECK(j[0]["binding"].get<double>() * 1e3 == doctest::Approx(1.858).epsilon(1e-3));
    CHECK(j[5]["label"] == "3D");
    CHECK(j[0]["error"].is_null());
    CHECK(j[0]["converged"] == true);
}

TEST_CASE("hydrogen spectrum as csv") {
    const auto r = run({"spectrum", "electron", "proton", "--Z", "1", "--n-max", "1", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(count_lines(r.out) == 2);
    CHECK(r.out.rfind("n,l,label,branch,", 0) == 0);
    CHECK(r.out.find("eV") != std::string::npos);
    const auto j = nlohmann::json::parse(
        run({"spectrum", "electron", "proton", "--n-max", "1", "--format", "json"}).out);
    CHECK(j[0]["binding"].get<double>() * 1e6 == doctest::Approx(13.598).epsilon(1e-4));
}

TEST_CASE("supercritical row fails with exit 2") {
    const auto r = run({"spectrum", "electron", "lead-nucleus", "--Z", "69", "--n-max", "1", "--format", "csv"});
    CHECK(r.code == 2);
    CHECK(r.err.find("Zα") != std::string::npos);
    CHECK(r.err.find("l = 0") != std::string::npos);
    CHECK(r.out.find("supercritical") != std::string::npos);
    CHECK(run({"spectrum", "electron", "lead-nucleus", "--Z", "68", "--n-max", "1"}).code == 0);
}

TEST_CASE("l filter and partial failure") {
    const auto r = run({"spectrum", "electron", "lead-nucleus", "--Z", "69", "--n-max", "2", "--format", "json"});
    CHECK(r.code == 2);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["converged"] == false);
    CHECK(j[2]["converged"] == true);
    const auto f = run({"spectrum", "pi+", "pi-", "--n-max", "4", "--l", "2", "--format", "json"});
    CHECK(nlohmann::json::parse(f.out).size() == 2);
}

TEST_CASE("deterministic output") {
    for (const char* fmt : {"csv", "json", "pretty"}) {
        const std::vector<std::string> args{"spectrum", "pi-", "proton", "--n-max", "6", "--format", fmt};
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.out == b.out);
    }
    const std::vector<std::string> w{"wavefunction", "electron", "proton", "--n", "3", "--l", "1", "--format", "csv"};
    CHECK(run(w).out == run(w).out);
}

TEST_CASE("verify") {
    const auto ok = run({"verify", "electron", "proton", "--format", "json"});
    CHECK(ok.code == 0);
    const auto j = nlohmann::json::parse(ok.out);
    CHECK(j[0]["pass"] == true);
    CHECK(j[0]["rel_gap"].get<double>() <= 1e-8);

    const auto synth = run({"verify", "pi+", "pi-", "--which", "both", "--d0", "0", "--format", "json"});
    CHECK(synth.code == 0);
    const auto s = nlohmann::json::parse(synth.out);
    REQUIRE(s.size() == 2);
    CHECK(s[1]["rel_gap"].get<double>() <= 1e-12);

    CHECK(run({"verify", "electron", "proton", "--bracket", "1.2", "1.8"}).code == 2);
    CHECK(run({"verify", "electron", "proton", "--which", "sideways"}).code == 1);
    CHECK(run({"verify", "pi+", "pi-", "--n", "3", "--l", "2", "--which", "full"}).code == 0);
}

TEST_CASE("compare") {
    const auto r = run({"compare", "pi+", "pi-", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j[0]["label"] == "connell");
    CHECK(std::abs(j[0]["rel_gap"].get<double>()) <= 1e-14);

    const auto z = nlohmann::json::parse(run({"compare", "pi+", "pi-", "--alpha", "0", "--format", "json"}).out);
    for (const auto& row : z) CHECK(row["gap"].get<double>() == 0.0);

    const auto p = nlohmann::json::parse(run({"compare", "pi-", "proton", "--format", "json"}).out);
    REQUIRE(p.size() == 6);
    CHECK(std::abs(p[5]["rel_gap"].get<double>()) <= 1e-6);
}

TEST_CASE("wavefunction") {
    const auto g = run({"wavefunction", "pi+", "pi-", "--format", "csv"});
    REQUIRE(g.code == 0);
    CHECK(g.out.rfind("# nodes=0\n", 0) == 0);
    CHECK(g.out.find("r_fm,rho,R\n") != std::string::npos);

    const auto p = run({"wavefunction", "electron", "proton", "--n", "3", "--l", "1"});
    CHECK(p.code == 0);
    CHECK(p.out.rfind("# nodes=1\n", 0) == 0);

    const auto j = run({"wavefunction", "pi+", "pi-", "--points", "50", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.err.find("# nodes=0") != std::string::npos);
    CHECK(nlohmann::json::parse(j.out).size() == 50);

    const auto tail = run({"wavefunction", "electron", "proton", "--r-max", "1e4"});
    CHECK(tail.code == 2);
    CHECK(tail.err.find("extend the grid") != std::string::npos);
}

TEST_CASE("exit codes for usage and configuration problems") {
    CHECK(run({}).code == 1);
    CHECK(run({"spectrum"}).code == 1);
    CHECK(run({"spectrum", "unobtainium", "proton"}).code == 1);
    CHECK(run({"spectrum", "pi+", "pi-", "--format", "xml"}).code == 1);
    CHECK(run({"spectrum", "pi+", "pi-", "--n-max", "0"}).code == 1);
    CHECK(run({"spectrum", "pi+", "pi-", "--tol", "1,0e-3"}).code == 1);
    CHECK(run({"spectrum", "pi+", "pi-", "--catalog", "/nonexistent"}).code == 1);
    CHECK(run({"compare", "pi+", "pi-", "--n", "1", "--l", "1"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("custom catalog through a file") {
    const auto path = std::filesystem::temp_directory_path() / "relbound_cli_catalog.txt";
    {
        std::ofstream f(path);
        f << "light 1.0 -1 0\nheavy 1000.0 1 0\n";
    }
    const auto r = run({"--catalog", path.string(), "spectrum", "light", "heavy", "--format", "json"});
    std::filesystem::remove(path);
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j[0]["E_n"].get<double>() < 1001.0);
}

TEST_CASE("number formatting") {
    using relbound::cli::format_number;
    using relbound::cli::format_energy_unit;
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(1.3599192623159154e-05) == "1.35991926232e-05");
    CHECK(format_energy_unit(1.3599192623159154e-05) == "13.599193 eV");
    CHECK(format_energy_unit(1.858e-3) == "1.858 keV");
    CHECK(format_energy_unit(1.0185) == "1.0185 MeV");
}

}
