#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <sys/wait.h>

#include "finv/genus.hpp"
#include "finv/io.hpp"

using namespace finv;

namespace {

struct Run {
    int code;
    std::string out;
};

Run finv_cli(const std::string& args)
{
    const std::string cmd = std::string(FINV_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void write_file(const std::string& path, const QSeries& f)
{
    std::ofstream out(path);
    write_series(out, f, std::nullopt, path);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eis prints exact coefficients")
{
    const Run r = finv_cli("eis -N 3 -k 2 -p 5");
    CHECK(r.code == 0);
    CHECK(r.out.find("q^0: 1/12") != std::string::npos);
    CHECK(r.out.find("q^2: 3") != std::string::npos);
    const Run z = finv_cli("eis -N 2 -k 1 -p 6");
    CHECK(z.code == 0);
    CHECK(z.out.find("  0\n") != std::string::npos);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(finv_cli("eis -N 1 -k 2").code == 2);
    CHECK(finv_cli("").code == 2);
    CHECK(finv_cli("eis --bogus").code == 2);
    CHECK(finv_cli("example nope -N 3").code == 2);
}

TEST_CASE("divcong verdicts and exit codes")
{
    const int prec = 20;
    const QSeries t = G_tilde(3, 2, prec);
    write_file("cli_f.txt", t * Rational(1, 12));
    write_file("cli_g.txt", t * t * Rational(1, 2));
    write_file("cli_half.txt", QSeries::from_rationals(3, {0, Rational(1, 2), 0, 0, 0, 0, 0, 0}));
    write_file("cli_zero.txt", QSeries(3, 8));

    CHECK(finv_cli("divcong cli_f.txt cli_f.txt -N 3 -w 4 --no-cache").code == 0);
    const Run nu = finv_cli("divcong cli_f.txt cli_g.txt -N 3 -w 4 --no-cache");
    CHECK(nu.code == 0);
    CHECK(nu.out.find("R*G~_4") != std::string::npos);
    CHECK(finv_cli("divcong cli_half.txt cli_zero.txt -N 3 -w 0 --no-cache").code == 1);
    CHECK(finv_cli("divcong cli_f.txt cli_g.txt -N 5 -w 4 --no-cache").code == 3);
    CHECK(finv_cli("divcong cli_f.txt missing.txt -N 3 -w 4 --no-cache").code == 3);
    CHECK(finv_cli("divcong cli_f.txt cli_g.txt -N 3 -w 4 -p 5 --no-cache").code == 3);
    const Run low = finv_cli("divcong cli_half.txt cli_zero.txt -N 3 -w 4 -p 5 --no-cache --allow-low-precision --machine");
    CHECK(low.code == 1);
    CHECK(low.out.find("proof=false") != std::string::npos);
}

TEST_CASE("examples")
{
    CHECK(finv_cli("example nu2 -N 3 -p 20 --basis-dir cli_bases").code == 0);
    const Run su = finv_cli("example su3 -N 3 -p 20 --basis-dir cli_bases");
    CHECK(su.code == 0);
    CHECK(su.out.find("k = 10: dim ker = 1331, parity 1") != std::string::npos);
    CHECK(finv_cli("example eta2 -N 4 -p 20 --no-cache").code == 0);
    CHECK(finv_cli("example nu2 -N 4 -p 20 --no-cache").code == 2);
    CHECK(finv_cli("example nu2 -N 7 -p 20 --no-cache").code == 3);
}

TEST_CASE("machine output is byte-stable")
{
    const Run a = finv_cli("example nu2 -N 3 -p 20 --machine --basis-dir cli_bases");
    const Run b = finv_cli("example nu2 -N 3 -p 20 --machine --no-cache");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("verdict=true") != std::string::npos);
}

TEST_CASE("basis files from the CLI are usable")
{
    CHECK(finv_cli("basis -N 3 -w 4 -p 20 -o cli_basis.txt").code == 0);
    CHECK(finv_cli("divcong cli_f.txt cli_g.txt -N 3 -w 4 --basis cli_basis.txt").code == 0);
    CHECK(finv_cli("divcong cli_f.txt cli_g.txt -N 3 -w 5 --basis cli_basis.txt").code == 3);
}

TEST_CASE("oracle and g2")
{
    CHECK(finv_cli("oracle -N 3 -k 6").code == 0);
    CHECK(finv_cli("g2 -N 5 -p 30").code == 0);
    CHECK(finv_cli("ell -N 3 -x 3 -p 4 --machine").out.find("label=x^3") != std::string::npos);
}

TEST_CASE("assemble")
{
    const Run r = finv_cli("assemble --table nu2 -N 3 -p 10 --machine");
    CHECK(r.code == 0);
    CHECK(r.out.find("# weight_bound=4") != std::string::npos);
    {
        std::ofstream xi("cli_xi.txt");
        xi << "# d value\n1 1\n";
    }
    CHECK(finv_cli("assemble --kind quaternionic_kernel_parity -l 4 --xi cli_xi.txt -N 3 -p 5").code == 3);
    {
        std::ofstream xi("cli_xi.txt");
        xi << "1 1\n2 x\n";
    }
    CHECK(finv_cli("assemble --kind quaternionic -l 2 --xi cli_xi.txt -N 3 -p 3").code == 3);
    CHECK(finv_cli("assemble --kind sideways -l 2 --xi cli_xi.txt -N 3 -p 3").code == 2);
}

}  // TEST_SUITE
