#include <doctest.h>

#include "finv/fassembly.hpp"
#include "finv/genus.hpp"
#include "finv/geometry.hpp"
#include "support.hpp"

using namespace finv;
using namespace finv::testing;

namespace {

XiTable random_table(XiKind kind, int level, int l, int dmax, bool negatives)
{
    XiTable t(kind, level, l);
    for (int d = 1; d <= dmax; ++d) {
        t.set(d, EpsPoly::linear(level, random_rational(), 0));
        if (negatives)
            t.set(-d, EpsPoly::linear(level, random_rational(), 0));
    }
    return t;
}

std::shared_ptr<const ModularBasis> basis(int level, int w, int prec)
{
    return std::make_shared<const ModularBasis>(build_basis(level, w, prec));
}

}  // namespace

TEST_SUITE("fassembly") {

TEST_CASE("constant table gives -e G~_1")
{
    for (int level : {2, 3, 5}) {
        XiTable t(XiKind::complex_full, level, 1);
        const Rational e(3, 7);
        for (int d = 1; d < 15; ++d) {
            t.set(d, e);
            t.set(-d, e);
        }
        CHECK(assemble_complex(t, 15).series == G_tilde(level, 1, 15) * (-e));
    }
}

TEST_CASE("zero and single-entry tables")
{
    XiTable z(XiKind::complex_full, 3, 1);
    for (int d = 1; d < 6; ++d) {
        z.set(d, Rational(0));
        z.set(-d, Rational(0));
    }
    CHECK(assemble_complex(z, 6).series.is_zero());

    XiTable one = z;
    one.set(1, Rational(1));
    CHECK(assemble_complex(one, 6).series.cyc(2) == CycNum::zeta_pow(3, -2));
}

TEST_CASE("nu2 table collapses to 1/12 G~_2")
{
    for (int level : {3, 5, 7}) {
        const auto f = assemble_complex_reduced(nu2_xi_table(level, 29), 30);
        CHECK(f.series == G_tilde(level, 2, 30) * Rational(1, 12));
        CHECK(f.weight_bound == 4);
    }
}

TEST_CASE("quaternionic assembly")
{
    XiTable cube(XiKind::quaternionic, 3, 2);
    for (int d = 1; d < 20; ++d)
        cube.set(d, Rational(Integer(d) * d * d));
    CHECK(assemble_quaternionic(cube, 20).series == G_tilde_level1(4, 20, 3));

    XiTable single(XiKind::quaternionic, 3, 2);
    single.set(1, Rational(5, 3));
    for (int d = 2; d < 10; ++d)
        single.set(d, Rational(0));
    const QSeries s = assemble_quaternionic(single, 10).series;
    for (int n = 1; n < 10; ++n)
        CHECK(s.cyc(n) == CycNum(3, Rational(5, 3)));
}

TEST_CASE("kernel-parity assembly")
{
    XiTable p(XiKind::quaternionic_kernel_parity, 3, 4);
    for (int d = 1; d < 40; d += 2)
        p.set(d, Rational(d % 2));
    const QSeries f = assemble_quaternionic_reduced(p, 40).series;
    CHECK(is_integral_series(f - G_tilde_level1(4, 40, 3) * Rational(1, 2)));

    XiTable six(XiKind::quaternionic_kernel_parity, 3, 6);
    six.set(1, Rational(1));
    CHECK(assemble_quaternionic_reduced(six, 10).series.is_zero());

    XiTable zero(XiKind::quaternionic_kernel_parity, 3, 4);
    for (int d = 1; d < 10; d += 2)
        zero.set(d, Rational(0));
    CHECK(assemble_quaternionic_reduced(zero, 10).series.is_zero());

    XiTable odd(XiKind::quaternionic_kernel_parity, 3, 3);
    CHECK_THROWS_AS(assemble_quaternionic_reduced(odd, 10), std::invalid_argument);
}

TEST_CASE("missing entries and wrong kinds are refused")
{
    XiTable t(XiKind::complex_positive, 3, 1);
    t.set(1, Rational(1));
    CHECK_THROWS_AS(assemble_complex_reduced(t, 5), MissingTwist);
    CHECK_THROWS_AS(assemble_complex(t, 5), std::invalid_argument);
    CHECK_THROWS_AS(t.set(-1, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(t.set(0, Rational(1)), std::invalid_argument);
}

TEST_CASE("known representatives")
{
    const CycNum z = CycNum::zeta_pow(3, 1);
    CHECK(known_representative("eta2", 3, 5).series.cyc(1) == (CycNum::zeta_pow(3, -1) - z) * Rational(-1, 2));
    CHECK(known_representative("nu2", 3, 5).series.cyc(2) == CycNum(3, Rational(1, 2)));
    CHECK(known_representative("etasigma", 3, 6).series.cyc(4) == CycNum(3, Rational(73, 2)));
    CHECK_THROWS_AS(known_representative("nu2", 4, 5), std::invalid_argument);
    CHECK_THROWS_AS(known_representative("etasigma", 2, 5), std::invalid_argument);
    CHECK(known_representative("eta2", 4, 5).weight_bound == 2);
}

TEST_CASE("assembly is linear")
{
    for (int trial = 0; trial < 10; ++trial) {
        const XiTable a = random_table(XiKind::complex_full, 3, 2, 11, true);
        const XiTable b = random_table(XiKind::complex_full, 3, 2, 11, true);
        CHECK(assemble_complex(a + b, 12).series == assemble_complex(a, 12).series + assemble_complex(b, 12).series);
        const XiTable c = random_table(XiKind::complex_positive, 3, 3, 11, false);
        const XiTable d = random_table(XiKind::complex_positive, 3, 3, 11, false);
        CHECK(assemble_complex_reduced(c + d, 12).series ==
              assemble_complex_reduced(c, 12).series + assemble_complex_reduced(d, 12).series);
    }
}

TEST_CASE("integer shifts only move the result by an integral series")
{
    const int prec = 20;
    const auto lat = make_lattice(basis(3, 4, prec), 4, true);
    XiTable t = nu2_xi_table(3, prec - 1);
    const QSeries base = assemble_complex_reduced(t, prec).series;
    for (int trial = 0; trial < 5; ++trial) {
        XiTable shifted = t;
        const int d = static_cast<int>(uniform(1, prec - 1));
        shifted.set(d, t.at(d) + EpsPoly(3, Rational(uniform(-3, 3))));
        const QSeries s = assemble_complex_reduced(shifted, prec).series;
        CHECK(is_integral_series(s - base));
        CHECK(is_equivalent(s, known_representative("nu2", 3, prec).series, lat).equivalent);
    }
}

TEST_CASE("full and positive-twist assemblies agree when xi_{-d} = -xi_d mod Z")
{
    // l odd: xi(lambda^{-d}) = (-1)^l xi(lambda^d) = -xi_d up to integers
    const int prec = 16;
    const auto lat = make_lattice(basis(3, 4, prec), 4, true);
    for (int trial = 0; trial < 5; ++trial) {
        XiTable pos(XiKind::complex_positive, 3, 3);
        XiTable full(XiKind::complex_full, 3, 3);
        for (int d = 1; d < prec; ++d) {
            const Rational x = random_rational();
            pos.set(d, x);
            full.set(d, x);
            full.set(-d, Rational(uniform(-2, 2) - x));
        }
        CHECK(is_equivalent(assemble_complex(full, prec).series, assemble_complex_reduced(pos, prec).series, lat)
                  .equivalent);
    }
}

TEST_CASE("representatives have zero constant term")
{
    CHECK(assemble_complex(random_table(XiKind::complex_full, 4, 1, 9, true), 10).series.cyc(0).is_zero());
    CHECK(assemble_quaternionic(random_table(XiKind::quaternionic, 4, 2, 9, false), 10).series.cyc(0).is_zero());
}

TEST_CASE("twice an l = 2 representative built from d^2-tables")
{
    // xi_d = r d^2 + integer: the assembly is r times a weight-3 Eisenstein series up to Z[[q]]
    const int prec = 20;
    const auto lat = make_lattice(basis(3, 3, prec), 3, true);
    for (int trial = 0; trial < 5; ++trial) {
        const Rational r = random_rational();
        XiTable t(XiKind::complex_positive, 3, 2);
        for (int d = 1; d < prec; ++d)
            t.set(d, Rational(r * d * d + uniform(-3, 3)));
        const QSeries twice = assemble_complex_reduced(t, prec).series * Rational(2);
        CHECK(is_equivalent(twice, QSeries(3, prec), lat).equivalent);
    }
}

TEST_CASE("worked examples at level 3")
{
    for (const auto& name : example_names()) {
        const ExampleReport r = run_example(name, 3, 20);
        CHECK_MESSAGE(r.verdict.equivalent, name);
        CHECK(r.assembled.series.cyc(0).is_zero());
    }
    const ExampleReport es = run_example("etasigma", 3, 20);
    const ExampleReport su = run_example("su3", 3, 20);
    CHECK(es.assembled.series == su.assembled.series);
    CHECK(run_example("eta2", 4, 20).verdict.equivalent);
    CHECK_THROWS_AS(run_example("nu2", 4, 20), std::invalid_argument);
    CHECK_THROWS_AS(run_example("nope", 3, 20), std::invalid_argument);
}

}  // TEST_SUITE
