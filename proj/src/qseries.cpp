#include "finv/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace finv {

QSeries::QSeries(int level, int prec) : level_(level)
{
    if (prec < 1)
        throw std::invalid_argument("QSeries: precision must be positive");
    c_.assign(prec, EpsPoly(level));
}

QSeries::QSeries(int level, std::vector<EpsPoly> coeffs) : level_(level), c_(std::move(coeffs))
{
    if (c_.empty())
        throw std::invalid_argument("QSeries: precision must be positive");
    for (const auto& c : c_)
        if (c.level() != level_)
            throw LevelMismatch(level_, c.level());
}

QSeries QSeries::constant(int level, int prec, const CycNum& c)
{
    QSeries r(level, prec);
    r.c_[0] = EpsPoly(c);
    return r;
}

QSeries QSeries::constant(int level, int prec, const Rational& c)
{
    return constant(level, prec, CycNum(level, c));
}

QSeries QSeries::from_rationals(int level, const std::vector<Rational>& coeffs)
{
    QSeries r(level, static_cast<int>(coeffs.size()));
    for (std::size_t n = 0; n < coeffs.size(); ++n)
        r.c_[n] = EpsPoly(level, coeffs[n]);
    return r;
}

CycNum QSeries::cyc(int n) const
{
    const EpsPoly& p = c_.at(n);
    if (p.degree() > 0)
        throw std::invalid_argument("coefficient involves eps");
    return p.coeff(0);
}

void QSeries::check_level(const QSeries& o) const
{
    if (o.level_ != level_)
        throw LevelMismatch(level_, o.level_);
}

int QSeries::eps_degree() const
{
    int d = -1;
    for (const auto& c : c_)
        d = std::max(d, c.degree());
    return d;
}

bool QSeries::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const EpsPoly& p) { return p.is_zero(); });
}

QSeries QSeries::truncate(int prec) const
{
    if (prec > this->prec())
        throw std::invalid_argument("truncate: cannot raise precision");
    return QSeries(level_, std::vector<EpsPoly>(c_.begin(), c_.begin() + prec));
}

QSeries QSeries::without_constant() const
{
    QSeries r = *this;
    r.c_[0] = EpsPoly(level_);
    return r;
}

QSeries& QSeries::operator+=(const QSeries& o)
{
    check_level(o);
    if (o.prec() < prec())
        c_.resize(o.prec(), EpsPoly(level_));
    for (std::size_t n = 0; n < c_.size(); ++n)
        c_[n] += o.c_[n];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o)
{
    check_level(o);
    if (o.prec() < prec())
        c_.resize(o.prec(), EpsPoly(level_));
    for (std::size_t n = 0; n < c_.size(); ++n)
        c_[n] -= o.c_[n];
    return *this;
}

QSeries QSeries::operator+(const QSeries& o) const
{
    QSeries r = *this;
    r += o;
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const
{
    QSeries r = *this;
    r -= o;
    return r;
}

QSeries QSeries::operator-() const
{
    QSeries r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const
{
    check_level(o);
    const int p = std::min(prec(), o.prec());
    QSeries r(level_, p);
    // skip zero coefficients: many of the series here are sparse
    std::vector<int> nz_a, nz_b;
    for (int i = 0; i < p; ++i) {
        if (!c_[i].is_zero())
            nz_a.push_back(i);
        if (!o.c_[i].is_zero())
            nz_b.push_back(i);
    }
    for (int i : nz_a)
        for (int j : nz_b) {
            if (i + j >= p)
                break;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    return r;
}

QSeries QSeries::operator*(const EpsPoly& s) const
{
    QSeries r = *this;
    for (auto& c : r.c_)
        c = c * s;
    return r;
}

QSeries QSeries::operator*(const CycNum& s) const
{
    QSeries r = *this;
    for (auto& c : r.c_)
        c = c * s;
    return r;
}

QSeries QSeries::operator*(const Rational& s) const
{
    QSeries r = *this;
    for (auto& c : r.c_)
        c = c * s;
    return r;
}

QSeries operator*(const Rational& s, const QSeries& f)
{
    return f * s;
}

QSeries operator*(const CycNum& s, const QSeries& f)
{
    return f * s;
}

QSeries QSeries::pow(unsigned e) const
{
    QSeries r = constant(level_, prec(), Rational(1));
    QSeries b = *this;
    while (e) {
        if (e & 1u)
            r = r * b;
        e >>= 1u;
        if (e)
            b = b * b;
    }
    return r;
}

bool QSeries::operator==(const QSeries& o) const
{
    if (o.level_ != level_)
        return false;
    const int p = std::min(prec(), o.prec());
    for (int n = 0; n < p; ++n)
        if (c_[n] != o.c_[n])
            return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const QSeries& f)
{
    bool first = true;
    for (int n = 0; n < f.prec(); ++n) {
        if (f[n].is_zero())
            continue;
        if (!first)
            os << " + ";
        os << "(" << f[n] << ")";
        if (n >= 1)
            os << "*q";
        if (n >= 2)
            os << "^" << n;
        first = false;
    }
    if (first)
        os << "0";
    return os << " + O(q^" << f.prec() << ")";
}

QSeries series_arith(const QSeries& f, const QSeries& g, Op op)
{
    switch (op) {
    case Op::add:
        return f + g;
    case Op::sub:
        return f - g;
    case Op::mul:
        return f * g;
    }
    throw std::invalid_argument("series_arith: unknown op");
}

std::optional<int> first_nonintegral(const QSeries& f)
{
    if (!f.is_eps_free())
        throw std::invalid_argument("integrality is undefined for series involving eps");
    for (int n = 0; n < f.prec(); ++n)
        if (!f[n].coeff(0).is_integral())
            return n;
    return std::nullopt;
}

bool is_integral_series(const QSeries& f)
{
    return !first_nonintegral(f).has_value();
}

std::vector<QSeries> eps_split(const QSeries& f)
{
    const int deg = std::max(0, f.eps_degree());
    std::vector<QSeries> parts(deg + 1, QSeries(f.level(), f.prec()));
    for (int n = 0; n < f.prec(); ++n)
        for (int j = 0; j <= f[n].degree(); ++j)
            parts[j][n] = EpsPoly(f[n].coeffs()[j]);
    return parts;
}

std::vector<int> divisors(int n)
{
    std::vector<int> small, large;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Integer sigma(int k, int n)
{
    Integer s = 0;
    for (int d : divisors(n)) {
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), d, k);
        s += t;
    }
    return s;
}

QSeries divisor_weighted_series(int level, int prec, int k, int sign)
{
    if (k < 1)
        throw std::invalid_argument("divisor_weighted_series: weight must be >= 1");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("divisor_weighted_series: sign must be +1 or -1");
    QSeries r(level, prec);
    for (int n = 1; n < prec; ++n) {
        CycNum acc(level);
        for (int d : divisors(n)) {
            const int m = n / d;
            CycNum w = CycNum::zeta_pow(level, -m);
            if (sign > 0)
                w += CycNum::zeta_pow(level, m);
            else
                w -= CycNum::zeta_pow(level, m);
            Integer dp;
            mpz_ui_pow_ui(dp.get_mpz_t(), d, k - 1);
            acc += w * Rational(dp);
        }
        r[n] = EpsPoly(acc);
    }
    return r;
}

}  // namespace finv
