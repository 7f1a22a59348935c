#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "oracle.hpp"
#include "relbound/constants.hpp"
#include "relbound/errors.hpp"

using namespace relbound;

TEST_SUITE("catalog") {

TEST_CASE("single electron record parses") {
    const auto cat = parse_catalog("electron 0.51099895 -1 1/2\n");
    REQUIRE(cat.size() == 1);
    const auto& e = lookup_particle(cat, "electron");
    CHECK(e.rest_energy == 0.51099895);
    CHECK(e.charge == -1);
    CHECK(e.spin == Spin{1, 2});
    CHECK(e.spin.value() == 0.5);
}

TEST_CASE("duplicate names are rejected with the line number") {
    const char* text = "pi+ 139.57039 1 0\n# comment\npi+ 139.57039 1 0\n";
    CHECK_THROWS_AS(parse_catalog(text, "dup.txt"), CatalogError);
    try {
        parse_catalog(text, "dup.txt");
    } catch (const CatalogError& e) {
        CHECK(std::string(e.what()).find("dup.txt") != std::string::npos);
    }
}

TEST_CASE("empty and comment-only files give an empty catalog") {
    CHECK(parse_catalog("").empty());
    CHECK(parse_catalog("# nothing here\n\n   \n").empty());
}

TEST_CASE("malformed records") {
    CHECK_THROWS_AS(parse_catalog("electron 0.511 -1\n"), CatalogError);
    CHECK_THROWS_AS(parse_catalog("electron abc -1 1/2\n"), CatalogError);
    CHECK_THROWS_AS(parse_catalog("electron -0.511 -1 1/2\n"), CatalogError);
    CHECK_THROWS_AS(parse_catalog("electron 0 -1 1/2\n"), CatalogError);
    CHECK_THROWS_AS(parse_catalog("electron 0.511 -1 1/0\n"), CatalogError);
}

TEST_CASE("shipped catalog values") {
    const auto cat = load_catalog(default_catalog_path());
    CHECK(lookup_particle(cat, "pi-").rest_energy == 139.57039);
    CHECK(lookup_particle(cat, "electron").rest_energy == 0.51099895);
    CHECK(lookup_particle(cat, "proton").rest_energy == oracle::kProton);
    CHECK(lookup_particle(cat, "deuteron").spin == Spin{1, 1});
    CHECK_THROWS_AS(lookup_particle(cat, "unobtainium"), CatalogError);
}

TEST_CASE("shipped constants") {
    const auto c = load_constants(default_constants_path());
    CHECK(c.alpha == oracle::kAlpha);
    CHECK(c.hbar_c == oracle::kHbarC);
}

TEST_CASE("constants validation") {
    CHECK_THROWS_AS(parse_constants("alpha=0.0073\n"), Error);
    CHECK_THROWS_AS(parse_constants("alpha=0\nhbar_c=197\n"), Error);
    CHECK_THROWS_AS(parse_constants("alpha=0.02\nhbar_c=197\n"), Error);
    CHECK_THROWS_AS(parse_constants("alpha=0.0073\nhbar_c=-1\n"), Error);
    CHECK_THROWS_AS(parse_constants("alpha=0,0073\nhbar_c=197\n"), Error);
    const auto c = parse_constants("# comment\nalpha = 0.0073\nhbar_c=197.5\n");
    CHECK(c.alpha == 0.0073);
    CHECK(c.hbar_c == 197.5);
    CHECK(parse_constants(format_constants(c)).alpha == c.alpha);
}

TEST_CASE("round trip is bit exact for random catalogs") {
    oracle::Gen gen(20240601);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ParticleSpec> specs;
        const int count = gen.integer(0, 12);
        for (int i = 0; i < count; ++i) {
            ParticleSpec p;
            p.name = "p" + std::to_string(trial) + "_" + std::to_string(i);
            p.rest_energy = gen.log_uniform(1e-6, 1e6);
            p.charge = gen.integer(-3, 3);
            p.spin = Spin{gen.integer(0, 5), gen.integer(1, 2)};
            specs.push_back(p);
        }
        const Catalog original(specs);
        const auto parsed = parse_catalog(format_catalog(original));
        REQUIRE(parsed.size() == original.size());
        for (std::size_t i = 0; i < parsed.size(); ++i) CHECK(parsed.entries()[i] == original.entries()[i]);
    }
}

TEST_CASE("write then load through a file") {
    const auto path = std::filesystem::temp_directory_path() / "relbound_catalog_roundtrip.txt";
    const Catalog original({{"a", 1.0 / 3.0, 1, {1, 2}}, {"b", 2.0e5 + 1e-9, -2, {0, 1}}});
    write_catalog(original, path);
    const auto loaded = load_catalog(path);
    std::filesystem::remove(path);
    REQUIRE(loaded.size() == 2);
    CHECK(loaded.entries()[0] == original.entries()[0]);
    CHECK(loaded.entries()[1] == original.entries()[1]);
}

TEST_CASE("missing file") {
    CHECK_THROWS_AS(load_catalog("/nonexistent/particles.txt"), CatalogError);
}

TEST_CASE("locale independent number handling") {
    CHECK(parse_double("1.5e-3") == 1.5e-3);
    CHECK_THROWS_AS(parse_double("1,5"), DomainError);
    CHECK_THROWS_AS(parse_double(""), DomainError);
    CHECK_THROWS_AS(parse_double("2x"), DomainError);
    oracle::Gen gen(7);
    for (int i = 0; i < 1000; ++i) {
        const double v = gen.log_uniform(1e-300, 1e300) * (gen.integer(0, 1) ? 1 : -1);
        CHECK(parse_double(format_double_roundtrip(v)) == v);
    }
}

}
