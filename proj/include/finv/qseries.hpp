#pragma once

// Truncated q-expansions with coefficients in Q(zeta_N)[eps].

#include <optional>
#include <ostream>
#include <vector>

#include "finv/exactnum.hpp"

namespace finv {

/// A q-expansion known for q^0 .. q^{prec-1}.
class QSeries {
public:
    QSeries(int level, int prec);
    QSeries(int level, std::vector<EpsPoly> coeffs);

    static QSeries constant(int level, int prec, const CycNum& c);
    static QSeries constant(int level, int prec, const Rational& c);
    /// Series with rational coefficients, coeffs[n] at q^n.
    static QSeries from_rationals(int level, const std::vector<Rational>& coeffs);

    int level() const { return level_; }
    int prec() const { return static_cast<int>(c_.size()); }
    const std::vector<EpsPoly>& coeffs() const { return c_; }
    const EpsPoly& operator[](int n) const { return c_.at(n); }
    EpsPoly& operator[](int n) { return c_.at(n); }
    /// eps-free coefficient at q^n (throws if the coefficient involves eps).
    CycNum cyc(int n) const;

    int eps_degree() const;
    bool is_zero() const;
    bool is_eps_free() const { return eps_degree() <= 0; }

    QSeries truncate(int prec) const;
    QSeries without_constant() const;

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const EpsPoly& s) const;
    QSeries operator*(const CycNum& s) const;
    QSeries operator*(const Rational& s) const;
    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);

    QSeries pow(unsigned e) const;

    /// Equality on the shared precision.
    bool operator==(const QSeries& o) const;
    bool operator!=(const QSeries& o) const { return !(*this == o); }

private:
    void check_level(const QSeries& o) const;
    int level_;
    std::vector<EpsPoly> c_;
};

QSeries operator*(const Rational& s, const QSeries& f);
QSeries operator*(const CycNum& s, const QSeries& f);
std::ostream& operator<<(std::ostream& os, const QSeries& f);

enum class Op { add, sub, mul };
QSeries series_arith(const QSeries& f, const QSeries& g, Op op);

/// First q-index whose coefficient is not in Z[zeta_N, 1/N], if any.
/// Throws std::invalid_argument when f involves eps.
std::optional<int> first_nonintegral(const QSeries& f);
bool is_integral_series(const QSeries& f);

/// f = sum_j eps^j * result[j]; every part is eps-free.
std::vector<QSeries> eps_split(const QSeries& f);

/// sum_{n>=1} ( sum_{d|n} (zeta^{-n/d} + s*zeta^{n/d}) d^{k-1} ) q^n
QSeries divisor_weighted_series(int level, int prec, int k, int sign);

/// Divisors of n in increasing order.
std::vector<int> divisors(int n);
Integer sigma(int k, int n);

}  // namespace finv
