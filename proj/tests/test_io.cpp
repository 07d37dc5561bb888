#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "finv/genus.hpp"
#include "finv/io.hpp"
#include "support.hpp"

using namespace finv;
using namespace finv::testing;

TEST_SUITE("io") {

TEST_CASE("series round trip")
{
    for (int level : {2, 3, 5, 12}) {
        QSeries f = random_series(level, 9);
        f[3] += EpsPoly::linear(level, 0, Rational(2, 3));
        std::ostringstream out;
        write_series(out, f, std::nullopt, "random series");
        std::istringstream in(out.str());
        const auto back = read_series(in);
        REQUIRE(back.size() == 1);
        CHECK(back[0].label == "random series");
        CHECK_FALSE(back[0].weight.has_value());
        CHECK(back[0].series == f);
        CHECK(back[0].series.eps_degree() == 1);

        std::ostringstream again;
        write_series(again, back[0].series, std::nullopt, back[0].label);
        CHECK(again.str() == out.str());
    }
}

TEST_CASE("basis round trip is exact")
{
    const ModularBasis b = build_basis(3, 4, 12);
    std::ostringstream out;
    write_basis(out, b);
    std::istringstream in(out.str());
    const ModularBasis back = read_basis(in);
    CHECK(back.level == 3);
    CHECK(back.maxweight == 4);
    CHECK(back.prec == 12);
    CHECK(back.dims == b.dims);
    REQUIRE(back.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < b.entries.size(); ++i) {
        CHECK(back.entries[i].label == b.entries[i].label);
        CHECK(back.entries[i].weight == b.entries[i].weight);
        CHECK(back.entries[i].series == b.entries[i].series);
    }
    std::ostringstream again;
    write_basis(again, back);
    CHECK(again.str() == out.str());
}

TEST_CASE("empty top weights survive the round trip")
{
    const ModularBasis b = build_basis(2, 3, 10);
    std::ostringstream out;
    write_basis(out, b);
    std::istringstream in(out.str());
    CHECK(read_basis(in).maxweight == 3);
}

TEST_CASE("truncated input names the offending line")
{
    std::ostringstream out;
    write_series(out, G_hat(3, 2, 6), 2, "G2");
    std::string text = out.str();
    text.resize(text.rfind("4 "));
    std::istringstream in(text);
    try {
        read_series(in, "cut.txt");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 6);
        CHECK(std::string(e.what()).find("cut.txt:6") == 0);
    }
}

TEST_CASE("malformed lines")
{
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_series(in, "x");
    };
    CHECK_THROWS_AS(parse("level=3 weight=1 prec=1 label=a\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("level=3 weight=1 prec=1 label=a\n0 1 z\n"), ParseError);
    CHECK_THROWS_AS(parse("level=3 weight=1 prec=2 label=a\n1 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse("0 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse("level=3 prec=1 label=a\n0 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse("level=3 weight=1 prec=1 colour=red label=a\n0 1 0\n"), ParseError);
    CHECK(parse("# comment\nlevel=3 weight=? prec=1 label=a b c\n0 1/2 0  # trailing\n")[0].label == "a b c");
}

TEST_CASE("foreign-level basis is refused")
{
    const std::string path = "io_test_level3.basis";
    write_basis_file(path, build_basis(3, 2, 10));
    CHECK_THROWS_AS(read_basis_file(path, 5), LevelMismatch);
    CHECK(read_basis_file(path, 3).level == 3);
    std::remove(path.c_str());
}

TEST_CASE("dependent basis entries are rejected")
{
    std::ostringstream out;
    const QSeries g = G_hat(3, 1, 10);
    write_series(out, g, 1, "a");
    write_series(out, g * Rational(2), 1, "b");
    std::istringstream in(out.str());
    CHECK_THROWS_AS(read_basis(in), BasisError);
}

}  // TEST_SUITE
