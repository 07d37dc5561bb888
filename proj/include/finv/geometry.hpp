#pragma once

// Geometric inputs for the examples: circle spectra, Chebyshev polynomials and
// Adams operations, SU(2)/SU(3) representation arithmetic, the HP^1 index and
// the Chern-Simons computation on S^3 x S^3 / S^1.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "finv/exactnum.hpp"
#include "finv/xitable.hpp"

namespace finv {

// ---------------------------------------------------------------------------
// circle

/// (eta + dim ker)/2 of the circle Dirac operator twisted by lambda^d with
/// connection 2 pi i eps dt, as the representative 1/2 - d eps.
EpsPoly circle_xi(int level, int d);

/// Hurwitz zeta(s, x) by Euler-Maclaurin summation; s != 1, x > 0.
double hurwitz_zeta_numeric(double s, double x);
/// zeta_H(0, x) for 0 < x < 1.
double hurwitz_zeta0_numeric(double x);
/// eta of the twisted circle operator: zeta_H(0, eps) - zeta_H(0, 1 - eps).
double circle_eta_numeric(double eps);

XiTable circle_xi_table(int level, int dmax);

// ---------------------------------------------------------------------------
// Chebyshev and Adams operations

enum class ChebyshevKind { T, U };
IntPoly chebyshev(ChebyshevKind kind, int d);
/// 2 T_d(x/2): psi^d of a quaternionic line as a polynomial in the line.
IntPoly adams_psi_poly(int d);

/// SU(2) representations as dimension -> multiplicity; negative for virtual.
class SU2Decomp {
public:
    SU2Decomp() = default;
    static SU2Decomp irrep(int dim, long mult = 1);

    const std::map<int, long>& terms() const { return terms_; }
    long multiplicity(int dim) const;
    long dimension() const;
    bool is_virtual() const;

    SU2Decomp operator+(const SU2Decomp& o) const;
    SU2Decomp operator-(const SU2Decomp& o) const;
    bool operator==(const SU2Decomp& o) const = default;

    std::string to_string() const;

private:
    void add(int dim, long mult);
    std::map<int, long> terms_;
};

/// psi^d of the defining representation as V_{d+1} - V_{d-1}, d >= 2.
SU2Decomp psi_as_irreps(int d);
SU2Decomp su2_tensor(const SU2Decomp& a, const SU2Decomp& b);
/// Decomposition of an SU(2) character given as weight -> multiplicity.
SU2Decomp su2_from_character(const std::map<int, long>& weights);

// ---------------------------------------------------------------------------
// SU(3)

/// Dominant weight m w_1 + n w_2 with w_{1,2} = 1/2 +- i sqrt3/6, stored as a + b i sqrt3.
struct SU3Weight {
    int m;
    int n;

    Rational real_part() const;
    Rational sqrt3_part() const;  // coefficient of i sqrt3
    Rational norm() const;        // |.|^2 = a^2 + 3 b^2
};

Integer su3_dim(int m, int n);

/// Weight multiplicities of the irreducible SU(3) module with highest weight
/// (m, n), by Freudenthal's formula; keys are Dynkin labels (p, q).
std::map<std::pair<int, int>, long> su3_weight_multiplicities(int m, int n);

/// Restriction to the SU(2) of the upper-left block.
SU2Decomp su3_restrict_to_su2(int m, int n);
/// The same restriction via Gelfand-Tsetlin interlacing.
SU2Decomp su3_restrict_to_su2_gt(int m, int n);

struct KernelTerm {
    SU3Weight gamma;
    Integer dim_w;
    long dim_hom;
};

struct KernelReport {
    int k;
    std::vector<KernelTerm> terms;  // all dominant gamma on the shell
    Integer dimension;
    int parity;
};

class CalibrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Kernel of the reductive Dirac operator on SU(3)/SU(2) twisted by V_{2k+2}.
KernelReport su3_kernel_report(int k);
int su3_kernel_parity(int k);
/// Parity of ker(D (x) psi^d lambda_H) for odd d.
int su3_psi_twist_kernel_parity(int d);

XiTable su3_parity_table(int level, int dmax);

// ---------------------------------------------------------------------------
// HP^1

struct HP1IndexData {
    std::vector<Rational> ch;  // ch(psi^d lambda_H) in powers of x, up to x^2
    Rational c2_coefficient;   // coefficient of c_2 after x^2 = -c_2
    Rational index;            // paired against the fundamental class
};

HP1IndexData hp1_index_data(int d);
Integer hp1_index(int d);

XiTable nu2_xi_table(int level, int dmax);
XiTable etasigma_parity_table(int level, int dmax);

// ---------------------------------------------------------------------------
// exterior calculus on S^3 x S^3 / S^1 with coframe (L1*, L2*, w1*, w2*, w3*)

/// Polynomial in y1, y2, y3 reduced modulo y1^2 + y2^2 + y3^2 = 1 (degree of y3 at most 1).
class YPoly {
public:
    using Exps = std::array<int, 3>;

    YPoly() = default;
    static YPoly constant(const Rational& c);
    static YPoly y(int i);  // i in {1, 2, 3}

    const std::map<Exps, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    YPoly operator+(const YPoly& o) const;
    YPoly operator-(const YPoly& o) const;
    YPoly operator*(const YPoly& o) const;
    YPoly operator*(const Rational& s) const;
    YPoly operator-() const { return *this * Rational(-1); }
    bool operator==(const YPoly& o) const { return terms_ == o.terms_; }

    YPoly derivative(int i) const;  // partial derivative in y_i of the stored representative
    Rational coefficient(const Exps& e) const;
    std::string to_string() const;

private:
    void add(Exps e, const Rational& c);
    std::map<Exps, Rational> terms_;
};

class ExtForm {
public:
    static constexpr int rank = 5;
    enum Basis { L1 = 0, L2 = 1, W1 = 2, W2 = 3, W3 = 4 };

    ExtForm() = default;
    static ExtForm function(const YPoly& f);
    static ExtForm basis(int i);
    static ExtForm L3();  // y1 w1* + y2 w2* + y3 w3*

    const std::map<std::uint8_t, YPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ExtForm operator+(const ExtForm& o) const;
    ExtForm operator-(const ExtForm& o) const;
    ExtForm operator*(const YPoly& f) const;
    ExtForm operator*(const Rational& s) const;
    ExtForm wedge(const ExtForm& o) const;
    bool operator==(const ExtForm& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    void add(std::uint8_t mask, const YPoly& c);
    std::map<std::uint8_t, YPoly> terms_;
};

/// The connection matrix in the coframe (1-forms).
std::array<std::array<ExtForm, 5>, 5> connection_matrix();
ExtForm ext_d(const ExtForm& f);
/// L1* ^ L2* ^ L3*
ExtForm volume_form();

class TraceReductionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// c with f = c * vol; throws TraceReductionError otherwise.
Rational volume_multiple(const ExtForm& f);

struct CS3Data {
    ExtForm tr_omega_domega;
    ExtForm tr_omega_cubed;
    Rational omega_domega;  // multiple of the volume form
    Rational omega_cubed;
};

CS3Data cs3_data();

/// int_M L1* ^ L2* ^ L3* ^ c_1(lambda), divided by pi^2.
inline const Rational kVolumeChernPairingOverPi2{2};

/// int_M cs(A-hat, pi) c_1(lambda^d)
Rational cs_integral(int d);

}  // namespace finv
