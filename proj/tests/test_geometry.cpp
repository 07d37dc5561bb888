#include <doctest.h>

#include <cmath>

#include "finv/geometry.hpp"
#include "support.hpp"

using namespace finv;
using namespace finv::testing;

TEST_SUITE("geometry") {

TEST_CASE("circle xi values")
{
    CHECK(circle_xi(3, 1) == EpsPoly::linear(3, Rational(1, 2), -1));
    CHECK(circle_xi(3, 2) == EpsPoly::linear(3, Rational(1, 2), -2));
    CHECK(circle_xi(3, -1) == EpsPoly::linear(3, Rational(1, 2), 1));
    CHECK_THROWS_AS(circle_xi(3, 0), std::invalid_argument);
}

TEST_CASE("Hurwitz zeta and the circle eta invariant")
{
    CHECK(std::abs(hurwitz_zeta0_numeric(0.5)) < 1e-12);
    CHECK(std::abs(hurwitz_zeta0_numeric(0.25) - 0.25) < 1e-10);
    CHECK(std::abs(circle_eta_numeric(0.3) - 0.4) < 1e-9);
    CHECK(std::abs(hurwitz_zeta_numeric(2.0, 1.0) - M_PI * M_PI / 6) < 1e-10);
    for (double x : {0.1, 0.37, 0.9})
        CHECK(std::abs(hurwitz_zeta0_numeric(x) - (0.5 - x)) < 1e-10);
    CHECK_THROWS_AS(hurwitz_zeta0_numeric(1.5), std::domain_error);
}

TEST_CASE("Chebyshev polynomials and Adams operations")
{
    CHECK(chebyshev(ChebyshevKind::T, 2) == IntPoly({-1, 0, 2}));
    CHECK(adams_psi_poly(2) == IntPoly({-2, 0, 1}));
    CHECK(chebyshev(ChebyshevKind::U, 3) - chebyshev(ChebyshevKind::U, 1) == chebyshev(ChebyshevKind::T, 3) * Integer(2));
    for (int i = 0; i < 50; ++i) {
        const double t = 0.123 * i;
        CHECK(std::abs(2 * std::cos(5 * t) - 2 * chebyshev(ChebyshevKind::T, 5).eval(std::cos(t))) < 1e-12);
    }
    for (int d = 0; d <= 20; ++d)
        for (double t : {0.3, 1.1, 2.9})
            CHECK(std::abs(adams_psi_poly(d).eval(2 * std::cos(t)) - 2 * std::cos(d * t)) < 1e-9);
}

TEST_CASE("psi^d as SU(2) representations")
{
    CHECK(psi_as_irreps(2) == SU2Decomp::irrep(3) - SU2Decomp::irrep(1));
    CHECK(psi_as_irreps(3) == SU2Decomp::irrep(4) - SU2Decomp::irrep(2));
    for (int d = 2; d < 12; ++d) {
        CHECK(psi_as_irreps(d).dimension() == 2);
        CHECK(psi_as_irreps(d).is_virtual());
    }
    CHECK_THROWS_AS(psi_as_irreps(1), std::invalid_argument);
}

TEST_CASE("Clebsch-Gordan")
{
    CHECK(su2_tensor(SU2Decomp::irrep(2), SU2Decomp::irrep(4)) == SU2Decomp::irrep(3) + SU2Decomp::irrep(5));
    const SU2Decomp x = SU2Decomp::irrep(3, 2) + SU2Decomp::irrep(6);
    CHECK(su2_tensor(SU2Decomp::irrep(1), x) == x);
    for (int i = 0; i < 30; ++i) {
        const SU2Decomp a = SU2Decomp::irrep(static_cast<int>(uniform(1, 8)), uniform(1, 3)) +
                            SU2Decomp::irrep(static_cast<int>(uniform(1, 8)));
        const SU2Decomp b = SU2Decomp::irrep(static_cast<int>(uniform(1, 8)), uniform(1, 3));
        CHECK(su2_tensor(a, b).dimension() == a.dimension() * b.dimension());
    }
    CHECK(su2_from_character({{-1, 1}, {1, 1}}) == SU2Decomp::irrep(2));
}

TEST_CASE("SU(3) dimensions and branching")
{
    CHECK(su3_dim(0, 0) == 1);
    CHECK(su3_dim(1, 0) == 3);
    for (int k = 0; k <= 10; ++k)
        CHECK(su3_dim(k, k) == Integer((k + 1) * (k + 1) * (k + 1)));
    for (int m = 0; m < 5; ++m)
        for (int n = 0; n < 5; ++n) {
            const SU2Decomp r = su3_restrict_to_su2(m, n);
            CHECK(r == su3_restrict_to_su2_gt(m, n));
            CHECK(Integer(r.dimension()) == su3_dim(m, n));
        }
    // Sigma = 2 + V_2: the defining representation restricts to V_2 + V_1
    CHECK(su3_restrict_to_su2(1, 0) == SU2Decomp::irrep(2) + SU2Decomp::irrep(1));
}

TEST_CASE("SU(3) weights in the Eisenstein lattice")
{
    const SU3Weight w{1, 0};
    CHECK(w.real_part() == Rational(1, 2));
    CHECK(w.sqrt3_part() == Rational(1, 6));
    CHECK(w.norm() == Rational(1, 3));
    CHECK(SU3Weight{1, 1}.norm() == 1);
}

TEST_CASE("kernel parities on SU(3)/SU(2)")
{
    CHECK(su3_kernel_parity(0) == 1);
    CHECK(su3_kernel_parity(1) == 0);
    for (int k = 0; k <= 10; ++k) {
        const KernelReport r = su3_kernel_report(k);
        CHECK(r.parity == (k + 1) % 2);
        CHECK(r.dimension == Integer((k + 1) * (k + 1) * (k + 1)));
    }
    for (int d = 1; d <= 9; d += 2)
        CHECK(su3_psi_twist_kernel_parity(d) == 1);
    CHECK_THROWS_AS(su3_psi_twist_kernel_parity(2), std::invalid_argument);
}

TEST_CASE("HP^1 index")
{
    CHECK(hp1_index(1) == 1);
    CHECK(hp1_index(2) == 4);
    for (int d = 1; d <= 9; ++d) {
        CHECK(hp1_index(d) == Integer(d * d));
        CHECK(hp1_index(d) % 2 == d % 2);
        const HP1IndexData data = hp1_index_data(d);
        CHECK(data.ch[0] == 2);
        CHECK(data.ch[2] == Rational(d * d));
        CHECK(data.index == Rational(d * d));
    }
}

TEST_CASE("xi tables")
{
    CHECK(nu2_xi_table(3, 12).at(12) == EpsPoly(3, Rational(-1)));
    const XiTable es = etasigma_parity_table(3, 9);
    CHECK(es.at(3) == EpsPoly(3, Rational(1)));
    CHECK_FALSE(es.contains(2));
    CHECK(es.l() == 4);
    const XiTable su = su3_parity_table(3, 9);
    for (int d = 1; d <= 9; d += 2)
        CHECK(su.at(d) == es.at(d));
}

TEST_CASE("sphere relation and d^2 = 0")
{
    const ExtForm r = ExtForm::function(YPoly::y(1) * YPoly::y(1) + YPoly::y(2) * YPoly::y(2) +
                                        YPoly::y(3) * YPoly::y(3));
    CHECK(ext_d(r).is_zero());
    for (int i = 0; i < ExtForm::rank; ++i)
        CHECK(ext_d(ext_d(ExtForm::basis(i))).is_zero());
    CHECK(ext_d(ext_d(ExtForm::L3())).is_zero());
    for (int i = 1; i <= 3; ++i)
        CHECK(ext_d(ext_d(ExtForm::function(YPoly::y(i)))).is_zero());
    const ExtForm two = ExtForm::basis(ExtForm::L1).wedge(ExtForm::function(YPoly::y(2)) * Rational(3));
    CHECK(ext_d(ext_d(two)).is_zero());
}

TEST_CASE("connection matrix is skew")
{
    const auto w = connection_matrix();
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            CHECK((w[a][b] + w[b][a]).is_zero());
}

TEST_CASE("Chern-Simons traces")
{
    const CS3Data cs = cs3_data();
    CHECK(cs.omega_domega == 12);
    CHECK(cs.omega_cubed == -6);
    CHECK(cs.tr_omega_domega == volume_form() * Rational(12));
    CHECK(cs.tr_omega_cubed == volume_form() * Rational(-6));
    CHECK(cs_integral(5) == Rational(5, 12));
    CHECK_THROWS_AS(volume_multiple(ExtForm::basis(ExtForm::L1)), TraceReductionError);
}

}  // TEST_SUITE
