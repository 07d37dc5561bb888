#pragma once

// Exact scalars: rationals, integer polynomials, the cyclotomic field Q(zeta_N)
// in its power basis, and polynomials in the formal real parameter eps.

#include <complex>
#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace finv {

using Integer = mpz_class;
using Rational = mpq_class;

class LevelMismatch : public std::invalid_argument {
public:
    LevelMismatch(int a, int b);
};

/// Render a rational as `p/q` (or `p` when integral).
std::string to_string(const Rational& q);

/// Parse `p/q` or `p`; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// True iff every prime dividing `den` also divides `n`.
bool is_smooth_over(const Integer& den, long n);

/// Bernoulli number B_k with B_1 = -1/2, so B_2/2 = 1/12.
Rational bernoulli(unsigned k);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

// ---------------------------------------------------------------------------

/// Dense integer polynomial, lowest degree first, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    static IntPoly monomial(const Integer& c, unsigned degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer coeff(unsigned i) const { return i < c_.size() ? c_[i] : Integer(0); }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Integer& s) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    /// Exact division by a monic divisor; throws if the remainder is nonzero.
    IntPoly exact_div_monic(const IntPoly& divisor) const;
    /// Remainder modulo a monic divisor.
    IntPoly mod_monic(const IntPoly& divisor) const;

    double eval(double x) const;
    Rational eval(const Rational& x) const;

private:
    void trim();
    std::vector<Integer> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// The N-th cyclotomic polynomial (N >= 1).
IntPoly cyclotomic_poly(int n);

/// Euler's totient.
int euler_phi(int n);

// ---------------------------------------------------------------------------

/// Shared per-level data for Q(zeta_N): the modulus and reduced powers of zeta.
class CycloField {
public:
    static std::shared_ptr<const CycloField> get(int n);

    int level() const { return n_; }
    int degree() const { return phi_; }
    const IntPoly& modulus() const { return modulus_; }
    /// Power-basis coordinates of zeta^e for 0 <= e < max(N, 2*phi - 1).
    const std::vector<Integer>& power(int e) const { return powers_[e]; }
    int power_count() const { return static_cast<int>(powers_.size()); }

    explicit CycloField(int n);

private:
    int n_;
    int phi_;
    IntPoly modulus_;
    std::vector<std::vector<Integer>> powers_;
};

/// An element of Q(zeta_N), zeta = exp(2 pi i / N), in the power basis.
class CycNum {
public:
    explicit CycNum(int level);
    CycNum(int level, const Rational& r);
    CycNum(int level, std::vector<Rational> coords);

    static CycNum zeta_pow(int level, long e);

    int level() const { return field_->level(); }
    const std::vector<Rational>& coords() const { return c_; }
    const CycloField& field() const { return *field_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Fixed by complex conjugation, i.e. lies in the maximal real subfield.
    bool is_real() const { return conj() == *this; }
    Rational rational_part() const { return c_[0]; }

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator/(const CycNum& o) const;
    CycNum operator*(const Rational& s) const;
    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    CycNum inverse() const;
    /// Galois conjugate zeta -> zeta^{-1}.
    CycNum conj() const;
    std::complex<double> to_complex() const;

    /// Membership in Z[zeta_N, 1/N]: every coordinate denominator is N-smooth.
    bool is_integral() const;

private:
    void check_level(const CycNum& o) const;
    std::shared_ptr<const CycloField> field_;
    std::vector<Rational> c_;
};

CycNum operator*(const Rational& s, const CycNum& a);
std::ostream& operator<<(std::ostream& os, const CycNum& a);
std::string to_string(const CycNum& a);

inline bool is_N_integral(const CycNum& a) { return a.is_integral(); }

// ---------------------------------------------------------------------------

/// Polynomial in the formal real parameter eps with CycNum coefficients.
class EpsPoly {
public:
    explicit EpsPoly(int level);
    EpsPoly(const CycNum& constant);
    EpsPoly(int level, const Rational& constant);
    EpsPoly(int level, std::vector<CycNum> coeffs);

    /// a + b*eps with rational a, b.
    static EpsPoly linear(int level, const Rational& a, const Rational& b);

    int level() const { return level_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<CycNum>& coeffs() const { return c_; }
    CycNum coeff(int j) const;

    EpsPoly operator+(const EpsPoly& o) const;
    EpsPoly operator-(const EpsPoly& o) const;
    EpsPoly operator*(const EpsPoly& o) const;
    EpsPoly operator*(const CycNum& s) const;
    EpsPoly operator*(const Rational& s) const;
    EpsPoly operator-() const;
    EpsPoly& operator+=(const EpsPoly& o);
    EpsPoly& operator-=(const EpsPoly& o);

    bool operator==(const EpsPoly& o) const;
    bool operator!=(const EpsPoly& o) const { return !(*this == o); }

private:
    void trim();
    int level_;
    std::vector<CycNum> c_;
};

std::ostream& operator<<(std::ostream& os, const EpsPoly& p);

}  // namespace finv
