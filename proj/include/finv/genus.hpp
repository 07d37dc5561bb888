#pragma once

// Level-N Eisenstein data of the Hirzebruch elliptic genus and floating-point
// oracles built from the theta-type product Phi(tau, x).

#include <complex>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "finv/exactnum.hpp"
#include "finv/qseries.hpp"

namespace finv {

using Complex = std::complex<double>;

/// Constant term of hat-G_k: 1/2 + zeta/(1-zeta) for k = 1, B_k/k otherwise.
CycNum eisenstein_constant(int level, int k);

/// hat-G_k^{(N)} = c_k - sum_n ( sum_{d|n} (zeta^{-n/d} + (-1)^k zeta^{n/d}) d^{k-1} ) q^n
QSeries G_hat(int level, int k, int prec);

/// hat-G_k with its constant term removed.
QSeries G_tilde(int level, int k, int prec);

/// Classical level-one Eisenstein series without constant term, sum sigma_{k-1}(n) q^n,
/// embedded at the given cyclotomic level.
QSeries G_tilde_level1(int k, int prec, int level);

/// Classical G_k = -B_k/(2k) + sum sigma_{k-1}(n) q^n.
QSeries G_level1(int k, int prec, int level);

/// Taylor data of Ell(x) = 1 + sum_k hat-G_k x^k/(k-1)!.
struct EllExpansion {
    int level;
    int x_order;
    std::vector<QSeries> G_hat;  // G_hat[k-1] is hat-G_k

    /// Coefficient of x^k (k >= 1), i.e. hat-G_k/(k-1)!; k = 0 gives 1.
    QSeries x_coefficient(int k) const;
};

EllExpansion ell_expansion(int level, int x_order, int prec);

/// Coefficient pairs multiplying ch(lambda^d), ch(lambda^{-d}) at q^n in
/// the reduced genus of a line bundle divided by c_1: (-zeta^{-n/d}, +zeta^{n/d}).
class TwistTable {
public:
    TwistTable(int level, int prec);

    int level() const { return level_; }
    int prec() const { return prec_; }
    bool contains(int n, int d) const { return entries_.count({n, d}) != 0; }
    const std::pair<CycNum, CycNum>& at(int n, int d) const;
    const std::map<std::pair<int, int>, std::pair<CycNum, CycNum>>& entries() const { return entries_; }

private:
    friend TwistTable twist_table(int level, int prec);
    int level_;
    int prec_;
    std::map<std::pair<int, int>, std::pair<CycNum, CycNum>> entries_;
};

TwistTable twist_table(int level, int prec);

/// Coefficients of (Ell(x) Ell(-x) - 1)/c_2 in powers of x^2 = -c_2, for the
/// quaternionic line with Chern roots +-x. Entry 0 is g_2^{(N)}, entry 1 is -G_4.
/// The coefficient of c_2^j is (-1)^j times entry j.
std::vector<QSeries> ell_quaternionic(int level, int c2_order, int prec);

/// g_2^{(N)} = hat-G_1^2 - 2 hat-G_2.
QSeries g2(int level, int prec);

// ---------------------------------------------------------------------------
// Numeric oracles

class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Phi(tau, x) = 2 sinh(x/2) prod_{n>=1} (1 - q^n e^x)(1 - q^n e^{-x}) / (1 - q^n)^2.
Complex phi_numeric(Complex tau, Complex x, int terms = 200);

/// Ell(x) = x Phi(tau, x - 2 pi i/N) / (Phi(tau, x) Phi(tau, -2 pi i/N)).
/// Throws PoleError on nonzero points of 2 pi i (Z + tau Z).
Complex ell_numeric(int level, Complex tau, Complex x, int terms = 200);

/// Direct evaluation of the coth-plus-lattice-sum psi(x). Requires
/// |q| < min(|e^x|, |e^{-x}|).
Complex psi_numeric(int level, Complex tau, Complex x, int terms = 200);

/// Taylor coefficients a_0..a_order of a function holomorphic on |x| <= radius,
/// extracted by the trapezoid rule on the circle (Cauchy's formula).
template <typename F>
std::vector<Complex> taylor_coefficients(F&& f, int order, double radius, int points = 128);

/// Numeric value of an eps-free series at q, with zeta = exp(2 pi i/N).
Complex evaluate_series(const QSeries& f, Complex q);

}  // namespace finv

#include "finv/detail/taylor.hpp"
