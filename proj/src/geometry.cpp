#include "finv/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

namespace finv {

// ---------------------------------------------------------------------------
// circle

EpsPoly circle_xi(int level, int d)
{
    if (d == 0)
        throw std::invalid_argument("circle_xi: d = 0 is the untwisted case (an e-invariant input)");
    return EpsPoly::linear(level, Rational(1, 2), Rational(-d));
}

double hurwitz_zeta_numeric(double s, double x)
{
    if (s == 1.0)
        throw std::domain_error("hurwitz_zeta_numeric: pole at s = 1");
    if (!(x > 0))
        throw std::domain_error("hurwitz_zeta_numeric: x must be positive");
    constexpr int head = 20;
    constexpr int corrections = 12;
    double sum = 0;
    for (int n = 0; n < head; ++n)
        sum += std::pow(n + x, -s);
    const double a = head + x;
    sum += std::pow(a, 1 - s) / (s - 1) + 0.5 * std::pow(a, -s);
    // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * a^{-s-2j+1}
    double rising = s;
    for (int j = 1; j <= corrections; ++j) {
        const double b = bernoulli(2 * j).get_d() / factorial(2 * j).get_d();
        sum += b * rising * std::pow(a, -s - 2 * j + 1);
        rising *= (s + 2 * j - 1) * (s + 2 * j);
    }
    return sum;
}

double hurwitz_zeta0_numeric(double x)
{
    if (!(x > 0 && x < 1))
        throw std::domain_error("hurwitz_zeta0_numeric: x must lie in (0, 1)");
    return hurwitz_zeta_numeric(0.0, x);
}

double circle_eta_numeric(double eps)
{
    return hurwitz_zeta0_numeric(eps) - hurwitz_zeta0_numeric(1 - eps);
}

XiTable circle_xi_table(int level, int dmax)
{
    XiTable t(XiKind::complex_positive, level, 1);
    for (int d = 1; d <= dmax; ++d)
        t.set(d, circle_xi(level, d));
    return t;
}

// ---------------------------------------------------------------------------
// Chebyshev

IntPoly chebyshev(ChebyshevKind kind, int d)
{
    if (d < 0)
        throw std::invalid_argument("chebyshev: negative degree");
    const IntPoly x({Integer(0), Integer(1)});
    IntPoly prev({Integer(1)});
    if (d == 0)
        return prev;
    IntPoly cur = kind == ChebyshevKind::T ? x : x * Integer(2);
    for (int n = 1; n < d; ++n) {
        IntPoly next = (x * cur) * Integer(2) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly adams_psi_poly(int d)
{
    const IntPoly t = chebyshev(ChebyshevKind::T, d);
    std::vector<Integer> c(t.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Integer num = t.coeffs()[i] * 2;
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, i);
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            throw std::logic_error("adams_psi_poly: non-integral coefficient");
        c[i] = num / den;
    }
    return IntPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// SU(2)

SU2Decomp SU2Decomp::irrep(int dim, long mult)
{
    SU2Decomp r;
    r.add(dim, mult);
    return r;
}

void SU2Decomp::add(int dim, long mult)
{
    if (dim < 1)
        throw std::invalid_argument("SU2Decomp: dimension must be positive");
    if (mult == 0)
        return;
    long& m = terms_[dim];
    m += mult;
    if (m == 0)
        terms_.erase(dim);
}

long SU2Decomp::multiplicity(int dim) const
{
    auto it = terms_.find(dim);
    return it == terms_.end() ? 0 : it->second;
}

long SU2Decomp::dimension() const
{
    long s = 0;
    for (const auto& [d, m] : terms_)
        s += d * m;
    return s;
}

bool SU2Decomp::is_virtual() const
{
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second < 0; });
}

SU2Decomp SU2Decomp::operator+(const SU2Decomp& o) const
{
    SU2Decomp r = *this;
    for (const auto& [d, m] : o.terms_)
        r.add(d, m);
    return r;
}

SU2Decomp SU2Decomp::operator-(const SU2Decomp& o) const
{
    SU2Decomp r = *this;
    for (const auto& [d, m] : o.terms_)
        r.add(d, -m);
    return r;
}

std::string SU2Decomp::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, m] : terms_) {
        if (!first)
            os << (m < 0 ? " - " : " + ");
        else if (m < 0)
            os << "-";
        const long a = std::labs(m);
        if (a != 1)
            os << a;
        os << "V" << d;
        first = false;
    }
    return os.str();
}

SU2Decomp psi_as_irreps(int d)
{
    if (d < 2)
        throw std::invalid_argument("psi_as_irreps: d must be >= 2 (use adams_psi_poly)");
    return SU2Decomp::irrep(d + 1) - SU2Decomp::irrep(d - 1);
}

SU2Decomp su2_tensor(const SU2Decomp& a, const SU2Decomp& b)
{
    SU2Decomp r;
    for (const auto& [da, ma] : a.terms())
        for (const auto& [db, mb] : b.terms())
            for (int c = std::abs(da - db) + 1; c <= da + db - 1; c += 2)
                r = r + SU2Decomp::irrep(c, ma * mb);
    return r;
}

SU2Decomp su2_from_character(const std::map<int, long>& weights)
{
    std::map<int, long> w = weights;
    SU2Decomp r;
    while (true) {
        while (!w.empty() && w.rbegin()->second == 0)
            w.erase(std::prev(w.end()));
        if (w.empty())
            break;
        const int top = w.rbegin()->first;
        const long mult = w.rbegin()->second;
        if (top < 0)
            throw std::invalid_argument("su2_from_character: not a character");
        for (int j = top; j >= -top; j -= 2)
            w[j] -= mult;
        r = r + SU2Decomp::irrep(top + 1, mult);
    }
    return r;
}

// ---------------------------------------------------------------------------
// SU(3)

Rational SU3Weight::real_part() const { return Rational(m + n) / 2; }
Rational SU3Weight::sqrt3_part() const { return Rational(m - n) / 6; }
Rational SU3Weight::norm() const
{
    const Rational a = real_part();
    const Rational b = sqrt3_part();
    return a * a + 3 * b * b;
}

Integer su3_dim(int m, int n)
{
    if (m < 0 || n < 0)
        throw std::invalid_argument("su3_dim: Dynkin labels must be nonnegative");
    return Integer(m + 1) * (n + 1) * (m + n + 2) / 2;
}

namespace {

// 3 (lambda, mu) for weights in Dynkin coordinates
long ip3(int p1, int q1, int p2, int q2)
{
    return 2L * p1 * p2 + static_cast<long>(p1) * q2 + static_cast<long>(q1) * p2 + 2L * q1 * q2;
}

std::pair<int, int> dominant_conjugate(int p, int q)
{
    while (p < 0 || q < 0) {
        if (p < 0) {
            q += p;
            p = -p;
        } else {
            p += q;
            q = -q;
        }
    }
    return {p, q};
}

}  // namespace

std::map<std::pair<int, int>, long> su3_weight_multiplicities(int m, int n)
{
    if (m < 0 || n < 0)
        throw std::invalid_argument("su3_weight_multiplicities: Dynkin labels must be nonnegative");
    const int top = m + n;
    // mu = lambda - a alpha_1 - b alpha_2
    auto weight = [&](int a, int b) { return std::pair<int, int>{m - 2 * a + b, n + a - 2 * b}; };
    auto is_weight = [&](int a, int b) {
        const auto [p, q] = weight(a, b);
        const auto [dp, dq] = dominant_conjugate(p, q);
        const int x = m - dp, y = n - dq;
        return (2 * x + y) >= 0 && (x + 2 * y) >= 0 && (2 * x + y) % 3 == 0 && (x + 2 * y) % 3 == 0;
    };
    const long lam = ip3(m + 1, n + 1, m + 1, n + 1);
    std::map<std::pair<int, int>, long> by_depth;  // keyed by (a, b)
    by_depth[{0, 0}] = 1;
    const std::array<std::array<int, 2>, 3> roots{{{1, 0}, {0, 1}, {1, 1}}};  // in (a, b) steps
    const std::array<std::array<int, 2>, 3> dynkin{{{2, -1}, {-1, 2}, {1, 1}}};
    for (int level = 1; level <= 2 * top; ++level)
        for (int a = std::max(0, level - top); a <= std::min(level, top); ++a) {
            const int b = level - a;
            if (!is_weight(a, b))
                continue;
            const auto [p, q] = weight(a, b);
            long num = 0;
            for (int r = 0; r < 3; ++r)
                for (int j = 1;; ++j) {
                    const int aa = a - j * roots[r][0], bb = b - j * roots[r][1];
                    if (aa < 0 || bb < 0)
                        break;
                    auto it = by_depth.find({aa, bb});
                    if (it == by_depth.end())
                        continue;
                    const auto [pp, qq] = weight(aa, bb);
                    num += it->second * ip3(pp, qq, dynkin[r][0], dynkin[r][1]);
                }
            num *= 2;
            const long den = lam - ip3(p + 1, q + 1, p + 1, q + 1);
            if (den <= 0 || num % den)
                throw std::logic_error("su3_weight_multiplicities: Freudenthal recursion broke down");
            if (num)
                by_depth[{a, b}] = num / den;
        }
    std::map<std::pair<int, int>, long> out;
    for (const auto& [ab, mult] : by_depth)
        out[weight(ab.first, ab.second)] = mult;
    return out;
}

SU2Decomp su3_restrict_to_su2(int m, int n)
{
    std::map<int, long> ch;
    for (const auto& [w, mult] : su3_weight_multiplicities(m, n))
        ch[w.first] += mult;
    return su2_from_character(ch);
}

SU2Decomp su3_restrict_to_su2_gt(int m, int n)
{
    if (m < 0 || n < 0)
        throw std::invalid_argument("su3_restrict_to_su2_gt: Dynkin labels must be nonnegative");
    SU2Decomp r;
    for (int mu1 = n; mu1 <= m + n; ++mu1)
        for (int mu2 = 0; mu2 <= n; ++mu2)
            r = r + SU2Decomp::irrep(mu1 - mu2 + 1);
    return r;
}

KernelReport su3_kernel_report(int k)
{
    if (k < 0)
        throw std::invalid_argument("su3_kernel_report: k must be >= 0");
    // Sigma_m = 2 + V_2 twisted by kappa = V_{2k+2}
    const SU2Decomp spinors = SU2Decomp::irrep(1, 2) + SU2Decomp::irrep(2);
    const SU2Decomp target = su2_tensor(spinors, SU2Decomp::irrep(2 * k + 2));
    const Rational shell = Rational(k + 1) * Rational(k + 1);

    KernelReport rep{k, {}, Integer(0), 0};
    bool on_real_line = false;
    // |gamma + rho|^2 >= ((m + n + 2)/2)^2 bounds m + n <= 2k
    for (int m = 0; m <= 2 * k; ++m)
        for (int n = 0; m + n <= 2 * k; ++n) {
            if (SU3Weight{m + 1, n + 1}.norm() != shell)
                continue;
            if (m == k && n == k)
                on_real_line = true;
            const SU2Decomp w = su3_restrict_to_su2(m, n);
            long hom = 0;
            for (const auto& [dim, mult] : w.terms())
                hom += mult * target.multiplicity(dim);
            KernelTerm t{{m, n}, su3_dim(m, n), hom};
            rep.dimension += t.dim_w * hom;
            rep.terms.push_back(std::move(t));
        }
    if (!on_real_line)
        throw CalibrationError("su3_kernel_report: gamma = k is not on the shell for k = " + std::to_string(k));
    rep.parity = mpz_odd_p(rep.dimension.get_mpz_t()) ? 1 : 0;
    return rep;
}

int su3_kernel_parity(int k)
{
    return su3_kernel_report(k).parity;
}

int su3_psi_twist_kernel_parity(int d)
{
    if (d < 1 || d % 2 == 0)
        throw std::invalid_argument("su3_psi_twist_kernel_parity: d must be odd and positive");
    // psi^d lambda_H = V_{d+1} - V_{d-1}, and V_{2k+2} belongs to k = (d-1)/2
    if (d == 1)
        return su3_kernel_parity(0);
    return (su3_kernel_parity((d - 1) / 2) + su3_kernel_parity((d - 3) / 2)) % 2;
}

XiTable su3_parity_table(int level, int dmax)
{
    XiTable t(XiKind::quaternionic_kernel_parity, level, 4);
    for (int d = 1; d <= dmax; d += 2)
        t.set(d, Rational(su3_psi_twist_kernel_parity(d)));
    return t;
}

// ---------------------------------------------------------------------------
// HP^1

HP1IndexData hp1_index_data(int d)
{
    if (d < 1)
        throw std::invalid_argument("hp1_index: d must be >= 1");
    HP1IndexData r;
    // ch = e^{dx} + e^{-dx}
    for (int j = 0; j <= 2; ++j) {
        Integer dj;
        mpz_ui_pow_ui(dj.get_mpz_t(), d, j);
        const Rational t = Rational(dj) / Rational(factorial(j));
        r.ch.push_back(j % 2 ? Rational(0) : 2 * t);
    }
    r.c2_coefficient = -r.ch[2];  // x^2 = -c_2
    const Rational c2_pairing(-1);
    r.index = r.c2_coefficient * c2_pairing;
    return r;
}

Integer hp1_index(int d)
{
    const Rational i = hp1_index_data(d).index;
    if (i.get_den() != 1)
        throw std::logic_error("hp1_index: non-integral index");
    return i.get_num();
}

XiTable nu2_xi_table(int level, int dmax)
{
    // no spectral contribution; xi_d is minus the Chern-Simons term
    XiTable t(XiKind::complex_positive, level, 3);
    for (int d = 1; d <= dmax; ++d)
        t.set(d, -cs_integral(d));
    return t;
}

XiTable etasigma_parity_table(int level, int dmax)
{
    XiTable t(XiKind::quaternionic_kernel_parity, level, 4);
    for (int d = 1; d <= dmax; d += 2)
        t.set(d, Rational(mpz_odd_p(hp1_index(d).get_mpz_t()) ? 1 : 0));
    return t;
}

// ---------------------------------------------------------------------------
// polynomials on the sphere

YPoly YPoly::constant(const Rational& c)
{
    YPoly p;
    p.add({0, 0, 0}, c);
    return p;
}

YPoly YPoly::y(int i)
{
    if (i < 1 || i > 3)
        throw std::invalid_argument("YPoly::y: index must be 1, 2 or 3");
    Exps e{0, 0, 0};
    e[i - 1] = 1;
    YPoly p;
    p.add(e, Rational(1));
    return p;
}

void YPoly::add(Exps e, const Rational& c)
{
    if (c == 0)
        return;
    if (e[2] >= 2) {
        // y3^2 = 1 - y1^2 - y2^2
        e[2] -= 2;
        add(e, c);
        add({e[0] + 2, e[1], e[2]}, -c);
        add({e[0], e[1] + 2, e[2]}, -c);
        return;
    }
    Rational& t = terms_[e];
    t += c;
    if (t == 0)
        terms_.erase(e);
}

YPoly YPoly::operator+(const YPoly& o) const
{
    YPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add(e, c);
    return r;
}

YPoly YPoly::operator-(const YPoly& o) const
{
    YPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add(e, -c);
    return r;
}

YPoly YPoly::operator*(const YPoly& o) const
{
    YPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return r;
}

YPoly YPoly::operator*(const Rational& s) const
{
    YPoly r;
    for (const auto& [e, c] : terms_)
        r.add(e, c * s);
    return r;
}

YPoly YPoly::derivative(int i) const
{
    if (i < 1 || i > 3)
        throw std::invalid_argument("YPoly::derivative: index must be 1, 2 or 3");
    YPoly r;
    for (const auto& [key, c] : terms_) {
        const int k = key[i - 1];
        if (k == 0)
            continue;
        Exps e = key;
        e[i - 1] = k - 1;
        r.add(e, c * k);
    }
    return r;
}

Rational YPoly::coefficient(const Exps& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string YPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        os << finv::to_string(c);
        for (int i = 0; i < 3; ++i)
            if (e[i])
                os << "*y" << i + 1 << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// forms

namespace {

// sign of moving the basis elements of b past those of a
int wedge_sign(std::uint8_t a, std::uint8_t b)
{
    int inversions = 0;
    for (int i = 0; i < ExtForm::rank; ++i)
        if (a & (1u << i))
            inversions += std::popcount(static_cast<unsigned>(b & ((1u << i) - 1)));
    return inversions % 2 ? -1 : 1;
}

}  // namespace

void ExtForm::add(std::uint8_t mask, const YPoly& c)
{
    if (c.is_zero())
        return;
    YPoly& t = terms_[mask];
    t = t + c;
    if (t.is_zero())
        terms_.erase(mask);
}

ExtForm ExtForm::function(const YPoly& f)
{
    ExtForm r;
    r.add(0, f);
    return r;
}

ExtForm ExtForm::basis(int i)
{
    if (i < 0 || i >= rank)
        throw std::invalid_argument("ExtForm::basis: index out of range");
    ExtForm r;
    r.add(static_cast<std::uint8_t>(1u << i), YPoly::constant(Rational(1)));
    return r;
}

ExtForm ExtForm::L3()
{
    return basis(W1) * YPoly::y(1) + basis(W2) * YPoly::y(2) + basis(W3) * YPoly::y(3);
}

ExtForm ExtForm::operator+(const ExtForm& o) const
{
    ExtForm r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add(m, c);
    return r;
}

ExtForm ExtForm::operator-(const ExtForm& o) const
{
    ExtForm r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add(m, -c);
    return r;
}

ExtForm ExtForm::operator*(const YPoly& f) const
{
    ExtForm r;
    for (const auto& [m, c] : terms_)
        r.add(m, c * f);
    return r;
}

ExtForm ExtForm::operator*(const Rational& s) const
{
    ExtForm r;
    for (const auto& [m, c] : terms_)
        r.add(m, c * s);
    return r;
}

ExtForm ExtForm::wedge(const ExtForm& o) const
{
    ExtForm r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            if (ma & mb)
                continue;
            const YPoly c = ca * cb;
            r.add(static_cast<std::uint8_t>(ma | mb), wedge_sign(ma, mb) < 0 ? -c : c);
        }
    return r;
}

std::string ExtForm::to_string() const
{
    static const char* names[rank] = {"L1*", "L2*", "w1*", "w2*", "w3*"};
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        os << "(" << c.to_string() << ")";
        for (int i = 0; i < rank; ++i)
            if (m & (1u << i))
                os << "^" << names[i];
        first = false;
    }
    return os.str();
}

std::array<std::array<ExtForm, 5>, 5> connection_matrix()
{
    using B = ExtForm;
    const YPoly y1 = YPoly::y(1), y2 = YPoly::y(2), y3 = YPoly::y(3);
    const ExtForm l1 = B::basis(B::L1), l2 = B::basis(B::L2), l3 = B::L3();
    const ExtForm w1 = B::basis(B::W1), w2 = B::basis(B::W2), w3 = B::basis(B::W3);
    const Rational two(2);
    std::array<std::array<ExtForm, 5>, 5> o;
    o[0] = {ExtForm(), l3 * Rational(-1), l2 * y1, l2 * y2, l2 * y3};
    o[1] = {l3, ExtForm(), l1 * (-y1), l1 * (-y2), l1 * (-y3)};
    o[2] = {l2 * (-y1), l1 * y1, ExtForm(), w3 * two - l3 * (y3 * two), l3 * (y2 * two) - w2 * two};
    o[3] = {l2 * (-y2), l1 * y2, l3 * (y3 * two) - w3 * two, ExtForm(), w1 * two - l3 * (y1 * two)};
    o[4] = {l2 * (-y3), l1 * y3, w2 * two - l3 * (y2 * two), l3 * (y1 * two) - w1 * two, ExtForm()};
    return o;
}

namespace {

const std::array<ExtForm, 3>& dy_forms()
{
    static const std::array<ExtForm, 3> dy = [] {
        using B = ExtForm;
        const YPoly y1 = YPoly::y(1), y2 = YPoly::y(2), y3 = YPoly::y(3);
        const Rational two(2);
        const ExtForm w1 = B::basis(B::W1), w2 = B::basis(B::W2), w3 = B::basis(B::W3);
        return std::array<ExtForm, 3>{(w2 * y3 - w3 * y2) * two, (w3 * y1 - w1 * y3) * two,
                                      (w1 * y2 - w2 * y1) * two};
    }();
    return dy;
}

const std::array<ExtForm, 5>& dtheta()
{
    static const std::array<ExtForm, 5> dt = [] {
        const auto o = connection_matrix();
        std::array<ExtForm, 5> r;
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                r[a] = r[a] - o[a][b].wedge(ExtForm::basis(b));
        return r;
    }();
    return dt;
}

ExtForm d_function(const YPoly& f)
{
    ExtForm r;
    for (int i = 1; i <= 3; ++i) {
        const YPoly di = f.derivative(i);
        if (!di.is_zero())
            r = r + dy_forms()[i - 1] * di;
    }
    return r;
}

}  // namespace

ExtForm ext_d(const ExtForm& f)
{
    ExtForm r;
    for (const auto& [mask, c] : f.terms()) {
        std::vector<int> idx;
        for (int i = 0; i < ExtForm::rank; ++i)
            if (mask & (1u << i))
                idx.push_back(i);
        ExtForm theta_i = ExtForm::function(YPoly::constant(Rational(1)));
        for (int i : idx)
            theta_i = theta_i.wedge(ExtForm::basis(i));
        r = r + d_function(c).wedge(theta_i);
        // c * sum_r (-1)^r theta_1 ^ ... ^ d theta_r ^ ... ^ theta_p
        for (std::size_t pos = 0; pos < idx.size(); ++pos) {
            ExtForm t = ExtForm::function(c);
            for (std::size_t s = 0; s < idx.size(); ++s)
                t = t.wedge(s == pos ? dtheta()[idx[s]] : ExtForm::basis(idx[s]));
            r = pos % 2 ? r - t : r + t;
        }
    }
    return r;
}

ExtForm volume_form()
{
    return ExtForm::basis(ExtForm::L1).wedge(ExtForm::basis(ExtForm::L2)).wedge(ExtForm::L3());
}

Rational volume_multiple(const ExtForm& f)
{
    if (f.is_zero())
        return 0;
    const std::uint8_t probe = (1u << ExtForm::L1) | (1u << ExtForm::L2) | (1u << ExtForm::W1);
    auto it = f.terms().find(probe);
    const Rational c = it == f.terms().end() ? Rational(0) : it->second.coefficient({1, 0, 0});
    if (!(volume_form() * c == f))
        throw TraceReductionError("form is not a constant multiple of L1* ^ L2* ^ L3*: " + f.to_string());
    return c;
}

CS3Data cs3_data()
{
    const auto o = connection_matrix();
    std::array<std::array<ExtForm, 5>, 5> dO;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            dO[a][b] = ext_d(o[a][b]);
    CS3Data r;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            if (o[a][b].is_zero())
                continue;
            r.tr_omega_domega = r.tr_omega_domega + o[a][b].wedge(dO[b][a]);
            const ExtForm ab = o[a][b];
            for (int c = 0; c < 5; ++c)
                r.tr_omega_cubed = r.tr_omega_cubed + ab.wedge(o[b][c]).wedge(o[c][a]);
        }
    r.omega_domega = volume_multiple(r.tr_omega_domega);
    r.omega_cubed = volume_multiple(r.tr_omega_cubed);
    return r;
}

Rational cs_integral(int d)
{
    static const CS3Data data = cs3_data();
    // (-1/24)(-1/(8 pi^2)) int tr(omega d omega + 2/3 omega^3) c_1(lambda^d)
    const Rational trace = data.omega_domega + Rational(2, 3) * data.omega_cubed;
    return Rational(1, 24) * Rational(1, 8) * trace * Rational(d) * kVolumeChernPairingOverPi2;
}

}  // namespace finv
