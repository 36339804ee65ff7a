#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "nicety/corpus.hpp"
#include "test_support.hpp"

using namespace nicety;

TEST_CASE("fixture inventory") {
    const auto& names = list_fixtures();
    CHECK(names.size() == 8);
    CHECK(std::find(names.begin(), names.end(), "nagata") != names.end());
    CHECK(std::find(names.begin(), names.end(), "gz16") != names.end());
    CHECK_THROWS_AS(get_fixture("no_such_fixture"), UnknownFixtureError);
    CHECK_THROWS_AS(run_fixture("no_such_fixture"), UnknownFixtureError);
}

TEST_CASE("every fixture's expected facts pass when recomputed") {
    for (const auto& name : list_fixtures()) {
        CAPTURE(name);
        for (const FactResult& fact : run_fixture(name)) {
            CAPTURE(fact.label);
            CHECK((fact.pass || fact.informational));
        }
    }
}

TEST_CASE("fixture maps round-trip through the text format byte-identically") {
    for (const auto& name : list_fixtures()) {
        const Fixture& fx = get_fixture(name);
        const std::string text = render_map(fx.map, fx.var_names);
        const ParsedMap back = parse_map(text);
        CHECK(back.map == fx.map);
        CHECK(render_map(back.map, fx.var_names) == text);
        for (const auto& [aux, map] : fx.aux_maps) {
            const auto it = fx.aux_names.find(aux);
            const auto names =
                it != fx.aux_names.end() ? it->second : default_names(map.domain_dim());
            const std::string aux_text = render_map(map, names);
            CHECK(parse_map(aux_text).map == map);
        }
    }
}

TEST_CASE("frozen nagata inverse equals the hand expansion") {
    const Fixture& fx = get_fixture("nagata");
    const PolyMap inverse = parse_map(fx.frozen_texts.at("inverse")).map;
    // Expanded by hand from x1 + 2 q x2 - q^2 x3, x2 - q x3, x3 with
    // q = x1 x3 + x2^2.
    const PolyMap expected = nicety::test::poly_map(
        3, {"-x1^2*x3^3 - 2*x1*x2^2*x3^2 - x2^4*x3 + 2*x1*x2*x3 + 2*x2^3 + x1",
            "-x1*x3^2 - x2^2*x3 + x2", "x3"});
    CHECK(inverse == expected);
    CHECK(verify_inverse(fx.map, inverse));
}

TEST_CASE("the gz16 pairing survives transport to adapted coordinates") {
    const Fixture& fx = get_fixture("gz16");
    const RatMatrix& adapter = fx.aux_matrices.at("adapter");
    const RatMatrix inv = adapter.inverse();
    // Conjugating F and transporting B, C preserves every pairing identity.
    const PolyMap big_adapted = conjugate(fx.map, inv);
    const RatMatrix b2 = mul(fx.aux_matrices.at("B"), inv);
    const RatMatrix c2 = mul(adapter, fx.aux_matrices.at("C"));
    GZReport rep = gz_check(GZPair{fx.aux_maps.at("f"), big_adapted, b2, c2}, 3);
    CHECK(rep.all_ok);
}

TEST_CASE("fixture files are written in the documented layout") {
    const std::string dir = "corpus_export_test_tmp";
    const auto written = write_fixture_files("druzkowski_idx2", dir);
    CHECK(std::find(written.begin(), written.end(), "druzkowski_idx2.map") != written.end());
    CHECK(std::find(written.begin(), written.end(), "druzkowski_idx2.A.json") != written.end());
    for (const auto& file : written) {
        std::ifstream is(dir + "/" + file);
        CHECK(is.good());
    }
    std::filesystem::remove_all(dir);
}
