#include "finv/genus.hpp"

#include <cmath>
#include <numbers>

namespace finv {

namespace {

constexpr Complex two_pi_i{0.0, 2 * std::numbers::pi};

void check_level(int level)
{
    if (level < 2)
        throw std::invalid_argument("level must be >= 2, got " + std::to_string(level));
}

void check_weight(int k)
{
    if (k < 1)
        throw std::invalid_argument("weight must be >= 1, got " + std::to_string(k));
}

}  // namespace

CycNum eisenstein_constant(int level, int k)
{
    check_level(level);
    check_weight(k);
    if (k == 1) {
        const CycNum z = CycNum::zeta_pow(level, 1);
        const CycNum one(level, Rational(1));
        return CycNum(level, Rational(1, 2)) + z / (one - z);
    }
    return CycNum(level, bernoulli(k) / Rational(k));
}

QSeries G_hat(int level, int k, int prec)
{
    check_level(level);
    check_weight(k);
    QSeries r = -divisor_weighted_series(level, prec, k, (k % 2 == 0) ? 1 : -1);
    r[0] = EpsPoly(eisenstein_constant(level, k));
    return r;
}

QSeries G_tilde(int level, int k, int prec)
{
    return G_hat(level, k, prec).without_constant();
}

QSeries G_tilde_level1(int k, int prec, int level)
{
    check_weight(k);
    std::vector<Rational> c(prec, Rational(0));
    for (int n = 1; n < prec; ++n)
        c[n] = Rational(sigma(k - 1, n));
    return QSeries::from_rationals(level, c);
}

QSeries G_level1(int k, int prec, int level)
{
    QSeries r = G_tilde_level1(k, prec, level);
    r[0] = EpsPoly(level, -bernoulli(k) / Rational(2 * k));
    return r;
}

QSeries EllExpansion::x_coefficient(int k) const
{
    if (k == 0)
        return QSeries::constant(level, G_hat.front().prec(), Rational(1));
    if (k < 1 || k > x_order)
        throw std::out_of_range("EllExpansion: x order out of range");
    return G_hat[k - 1] * Rational(1, factorial(k - 1));
}

EllExpansion ell_expansion(int level, int x_order, int prec)
{
    if (x_order < 1)
        throw std::invalid_argument("ell_expansion: x_order must be >= 1");
    EllExpansion e{level, x_order, {}};
    e.G_hat.reserve(x_order);
    for (int k = 1; k <= x_order; ++k)
        e.G_hat.push_back(G_hat(level, k, prec));
    return e;
}

TwistTable::TwistTable(int level, int prec) : level_(level), prec_(prec) {}

const std::pair<CycNum, CycNum>& TwistTable::at(int n, int d) const
{
    auto it = entries_.find({n, d});
    if (it == entries_.end())
        throw std::out_of_range("twist table has no entry (" + std::to_string(n) + ", " + std::to_string(d) + ")");
    return it->second;
}

TwistTable twist_table(int level, int prec)
{
    check_level(level);
    TwistTable t(level, prec);
    for (int n = 1; n < prec; ++n)
        for (int d : divisors(n)) {
            const int m = n / d;
            t.entries_.emplace(std::make_pair(n, d),
                            std::make_pair(-CycNum::zeta_pow(level, -m), CycNum::zeta_pow(level, m)));
        }
    return t;
}

std::vector<QSeries> ell_quaternionic(int level, int c2_order, int prec)
{
    if (c2_order < 0)
        throw std::invalid_argument("ell_quaternionic: c2_order must be >= 0");
    const int top = 2 * c2_order + 2;
    const EllExpansion e = ell_expansion(level, top, prec);
    std::vector<QSeries> a;
    a.reserve(top + 1);
    for (int k = 0; k <= top; ++k)
        a.push_back(e.x_coefficient(k));
    std::vector<QSeries> out;
    for (int j = 0; j <= c2_order; ++j) {
        const int m = 2 * j + 2;
        // [x^m] Ell(x) Ell(-x) = sum_i (-1)^{m-i} a_i a_{m-i}
        QSeries acc(level, prec);
        for (int i = 0; i <= m; ++i) {
            QSeries t = a[i] * a[m - i];
            if ((m - i) % 2)
                acc -= t;
            else
                acc += t;
        }
        // divide by c_2 = -x^2
        out.push_back(-acc);
    }
    return out;
}

QSeries g2(int level, int prec)
{
    const QSeries g1 = G_hat(level, 1, prec);
    return g1 * g1 - G_hat(level, 2, prec) * Rational(2);
}

// ---------------------------------------------------------------------------

namespace {

// x = 2 pi i (a + b tau) with a, b integers
bool on_period_lattice(Complex tau, Complex x, bool* is_origin)
{
    const Complex w = x / two_pi_i;
    const double b = w.imag() / tau.imag();
    const double a = w.real() - b * tau.real();
    const double tol = 1e-10;
    const bool hit = std::abs(a - std::round(a)) < tol && std::abs(b - std::round(b)) < tol;
    if (is_origin)
        *is_origin = hit && std::round(a) == 0 && std::round(b) == 0;
    return hit;
}

void check_tau(Complex tau)
{
    if (!(tau.imag() > 0))
        throw std::domain_error("tau must lie in the upper half plane");
}

}  // namespace

Complex phi_numeric(Complex tau, Complex x, int terms)
{
    check_tau(tau);
    if (terms < 1)
        throw std::invalid_argument("phi_numeric: terms must be >= 1");
    const Complex q = std::exp(two_pi_i * tau);
    const Complex ex = std::exp(x);
    const Complex emx = std::exp(-x);
    Complex r = std::exp(x / 2.0) - std::exp(-x / 2.0);
    Complex qn = 1;
    for (int n = 1; n <= terms; ++n) {
        qn *= q;
        r *= (1.0 - qn * ex) * (1.0 - qn * emx) / ((1.0 - qn) * (1.0 - qn));
    }
    return r;
}

Complex ell_numeric(int level, Complex tau, Complex x, int terms)
{
    check_level(level);
    check_tau(tau);
    bool origin = false;
    if (on_period_lattice(tau, x, &origin)) {
        if (origin)
            return 1.0;
        throw PoleError("ell_numeric: x lies on the period lattice");
    }
    const Complex shift = two_pi_i / static_cast<double>(level);
    return x * phi_numeric(tau, x - shift, terms) / (phi_numeric(tau, x, terms) * phi_numeric(tau, -shift, terms));
}

Complex psi_numeric(int level, Complex tau, Complex x, int terms)
{
    check_level(level);
    check_tau(tau);
    const Complex q = std::exp(two_pi_i * tau);
    const Complex ex = std::exp(x);
    const Complex emx = std::exp(-x);
    if (!(std::abs(q) < std::min(std::abs(ex), std::abs(emx))))
        throw DivergenceError("psi_numeric: |q| >= min(|e^x|, |e^-x|)");
    if (on_period_lattice(tau, x, nullptr))
        throw PoleError("psi_numeric: x lies on the period lattice");
    const Complex z = std::polar(1.0, 2 * std::numbers::pi / level);
    Complex r = 0.5 * (ex + 1.0) / (ex - 1.0);
    Complex qn = 1, zn = 1;
    for (int n = 1; n <= terms; ++n) {
        qn *= q;
        zn *= z;
        r += zn * qn * emx / (1.0 - qn * emx) - (1.0 / zn) * qn * ex / (1.0 - qn * ex);
    }
    return r;
}

Complex evaluate_series(const QSeries& f, Complex q)
{
    Complex r = 0, qn = 1;
    for (int n = 0; n < f.prec(); ++n) {
        r += f.cyc(n).to_complex() * qn;
        qn *= q;
    }
    return r;
}

}  // namespace finv
