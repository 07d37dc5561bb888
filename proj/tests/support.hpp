#pragma once

// Shared helpers for the unit and acceptance tests: seeded random data and
// small brute-force oracles that avoid the library code paths.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "finv/exactnum.hpp"
#include "finv/qseries.hpp"

namespace finv::testing {

inline std::mt19937& rng()
{
    static std::mt19937 gen(20240611u);
    return gen;
}

inline long uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Rational random_rational(long num = 20, long den = 12)
{
    Rational r(Integer(uniform(-num, num)));
    r /= Integer(uniform(1, den));
    return r;
}

inline CycNum random_cyc(int level, long num = 20, long den = 12)
{
    std::vector<Rational> c;
    for (int j = 0; j < euler_phi(level); ++j)
        c.push_back(random_rational(num, den));
    return CycNum(level, std::move(c));
}

inline CycNum random_nonzero_cyc(int level)
{
    for (;;) {
        CycNum a = random_cyc(level);
        if (!a.is_zero())
            return a;
    }
}

inline QSeries random_series(int level, int prec, long num = 9, long den = 6)
{
    QSeries f(level, prec);
    for (int n = 0; n < prec; ++n)
        f[n] = EpsPoly(random_cyc(level, num, den));
    return f;
}

inline std::complex<double> zeta_numeric(int level)
{
    return std::polar(1.0, 2 * M_PI / level);
}

// Akiyama-Tanigawa: an independent route to B_k (with B_1 = +1/2).
inline Rational akiyama_tanigawa(unsigned k)
{
    std::vector<Rational> a(k + 1);
    for (unsigned m = 0; m <= k; ++m) {
        a[m] = Rational(1) / Integer(m + 1);
        for (unsigned j = m; j >= 1; --j) {
            a[j - 1] = Integer(j) * (a[j - 1] - a[j]);
            a[j - 1].canonicalize();
        }
    }
    return a[0];
}

}  // namespace finv::testing
