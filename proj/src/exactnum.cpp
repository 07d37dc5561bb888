#include "finv/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace finv {

LevelMismatch::LevelMismatch(int a, int b)
    : std::invalid_argument("level mismatch: " + std::to_string(a) + " vs " + std::to_string(b))
{
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational");
    const auto slash = text.find('/');
    auto check_int = [&](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size())
            throw std::invalid_argument("malformed rational '" + text + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("malformed rational '" + text + "'");
    };
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(Integer(text[0] == '+' ? text.substr(1) : text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    if (den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational '" + text + "'");
    Integer d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational r(Integer(num[0] == '+' ? num.substr(1) : num), d);
    r.canonicalize();
    return r;
}

bool is_smooth_over(const Integer& den, long n)
{
    Integer d = abs(den);
    const Integer nn(n);
    for (;;) {
        if (d == 1)
            return true;
        Integer g = gcd(d, nn);
        if (g == 1)
            return false;
        while (d % g == 0)
            d /= g;
    }
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational bernoulli(unsigned k)
{
    // (m+1) B_m = -sum_{j<m} C(m+1, j) B_j
    std::vector<Rational> b(k + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= k; ++m) {
        Rational s = 0;
        for (unsigned j = 0; j < m; ++j)
            s += Rational(binomial(m + 1, j)) * b[j];
        b[m] = -s / Rational(m + 1);
    }
    return b[k];
}

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs))
{
    trim();
}

IntPoly IntPoly::monomial(const Integer& c, unsigned degree)
{
    std::vector<Integer> v(degree + 1, Integer(0));
    v[degree] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const
{
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const
{
    return *this + (-o);
}

IntPoly IntPoly::operator-() const
{
    IntPoly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const
{
    if (is_zero() || o.is_zero())
        return {};
    std::vector<Integer> r(c_.size() + o.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Integer& s) const
{
    std::vector<Integer> r = c_;
    for (auto& c : r)
        c *= s;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::mod_monic(const IntPoly& divisor) const
{
    if (divisor.is_zero() || divisor.c_.back() != 1)
        throw std::invalid_argument("mod_monic: divisor must be monic");
    std::vector<Integer> r = c_;
    const int dd = divisor.degree();
    for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
        const Integer lead = r[i];
        if (lead == 0)
            continue;
        for (int j = 0; j <= dd; ++j)
            r[i - dd + j] -= lead * divisor.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::exact_div_monic(const IntPoly& divisor) const
{
    if (divisor.is_zero() || divisor.c_.back() != 1)
        throw std::invalid_argument("exact_div_monic: divisor must be monic");
    const int dd = divisor.degree();
    if (degree() < dd) {
        if (!is_zero())
            throw std::domain_error("exact_div_monic: nonzero remainder");
        return {};
    }
    std::vector<Integer> r = c_;
    std::vector<Integer> q(degree() - dd + 1, Integer(0));
    for (int i = degree(); i >= dd; --i) {
        const Integer lead = r[i];
        q[i - dd] = lead;
        if (lead == 0)
            continue;
        for (int j = 0; j <= dd; ++j)
            r[i - dd + j] -= lead * divisor.c_[j];
    }
    for (const auto& c : r)
        if (c != 0)
            throw std::domain_error("exact_div_monic: nonzero remainder");
    return IntPoly(std::move(q));
}

double IntPoly::eval(double x) const
{
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + it->get_d();
    return r;
}

Rational IntPoly::eval(const Rational& x) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + Rational(*it);
    return r;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p)
{
    if (p.is_zero())
        return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Integer& c = p.coeffs()[i];
        if (c == 0)
            continue;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        const Integer a = abs(c);
        if (a != 1 || i == 0)
            os << a;
        if (i >= 1)
            os << "x";
        if (i >= 2)
            os << "^" << i;
        first = false;
    }
    return os;
}

int euler_phi(int n)
{
    int r = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            r -= r / p;
        }
    }
    if (m > 1)
        r -= r / m;
    return r;
}

IntPoly cyclotomic_poly(int n)
{
    if (n < 1)
        throw std::invalid_argument("cyclotomic_poly: n must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d
    IntPoly p = IntPoly::monomial(1, n) - IntPoly::monomial(1, 0);
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            p = p.exact_div_monic(cyclotomic_poly(d));
    return p;
}

// ---------------------------------------------------------------------------
// CycloField

CycloField::CycloField(int n) : n_(n), phi_(euler_phi(n)), modulus_(cyclotomic_poly(n))
{
    const int count = std::max(n_, 2 * phi_ - 1);
    powers_.reserve(count);
    std::vector<Integer> cur(phi_, Integer(0));
    cur[0] = 1;
    for (int e = 0; e < count; ++e) {
        powers_.push_back(cur);
        // multiply by x and reduce by the monic modulus
        Integer carry = cur[phi_ - 1];
        for (int j = phi_ - 1; j > 0; --j)
            cur[j] = cur[j - 1];
        cur[0] = 0;
        if (carry != 0)
            for (int j = 0; j < phi_; ++j)
                cur[j] -= carry * modulus_.coeff(j);
    }
}

std::shared_ptr<const CycloField> CycloField::get(int n)
{
    if (n < 2)
        throw std::invalid_argument("cyclotomic level must be >= 2, got " + std::to_string(n));
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycloField>> registry;
    std::lock_guard lock(mu);
    auto& slot = registry[n];
    if (!slot)
        slot = std::make_shared<const CycloField>(n);
    return slot;
}

// ---------------------------------------------------------------------------
// CycNum

CycNum::CycNum(int level) : field_(CycloField::get(level)), c_(field_->degree(), Rational(0)) {}

CycNum::CycNum(int level, const Rational& r) : CycNum(level)
{
    c_[0] = r;
}

CycNum::CycNum(int level, std::vector<Rational> coords) : field_(CycloField::get(level)), c_(std::move(coords))
{
    if (static_cast<int>(c_.size()) != field_->degree())
        throw std::invalid_argument("CycNum: expected " + std::to_string(field_->degree()) + " coordinates");
}

CycNum CycNum::zeta_pow(int level, long e)
{
    CycNum r(level);
    const long n = level;
    const long k = ((e % n) + n) % n;
    const auto& p = r.field_->power(static_cast<int>(k));
    for (int j = 0; j < r.field_->degree(); ++j)
        r.c_[j] = p[j];
    return r;
}

void CycNum::check_level(const CycNum& o) const
{
    if (field_ != o.field_)
        throw LevelMismatch(level(), o.level());
}

bool CycNum::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool CycNum::is_rational() const
{
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

CycNum CycNum::operator+(const CycNum& o) const
{
    CycNum r = *this;
    r += o;
    return r;
}

CycNum CycNum::operator-(const CycNum& o) const
{
    CycNum r = *this;
    r -= o;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o)
{
    check_level(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o)
{
    check_level(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

CycNum CycNum::operator-() const
{
    CycNum r = *this;
    for (auto& q : r.c_)
        q = -q;
    return r;
}

CycNum CycNum::operator*(const Rational& s) const
{
    CycNum r = *this;
    for (auto& q : r.c_)
        q *= s;
    return r;
}

CycNum operator*(const Rational& s, const CycNum& a)
{
    return a * s;
}

CycNum CycNum::operator*(const CycNum& o) const
{
    check_level(o);
    const int phi = field_->degree();
    std::vector<Rational> prod(2 * phi - 1, Rational(0));
    for (int i = 0; i < phi; ++i) {
        if (c_[i] == 0)
            continue;
        for (int j = 0; j < phi; ++j)
            if (o.c_[j] != 0)
                prod[i + j] += c_[i] * o.c_[j];
    }
    CycNum r(level());
    for (int j = 0; j < phi; ++j)
        r.c_[j] = prod[j];
    for (int e = phi; e < 2 * phi - 1; ++e) {
        if (prod[e] == 0)
            continue;
        const auto& p = field_->power(e);
        for (int j = 0; j < phi; ++j)
            if (p[j] != 0)
                r.c_[j] += prod[e] * p[j];
    }
    return r;
}

bool CycNum::operator==(const CycNum& o) const
{
    return field_ == o.field_ && c_ == o.c_;
}

namespace {

using QPoly = std::vector<Rational>;

void qtrim(QPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Polynomial long division over Q; b must be nonzero.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b)
{
    qtrim(a);
    const int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db)
        return {QPoly{}, a};
    QPoly q(a.size() - b.size() + 1, Rational(0));
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        if (a[i] == 0)
            continue;
        const Rational f = a[i] / b[db];
        q[i - db] = f;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] -= f * b[j];
    }
    qtrim(a);
    qtrim(q);
    return {q, a};
}

QPoly qsub_mul(const QPoly& a, const QPoly& q, const QPoly& b)
{
    QPoly r = a;
    if (!q.empty() && !b.empty()) {
        if (r.size() < q.size() + b.size() - 1)
            r.resize(q.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] -= q[i] * b[j];
    }
    qtrim(r);
    return r;
}

}  // namespace

CycNum CycNum::inverse() const
{
    if (is_zero())
        throw std::domain_error("CycNum: division by zero");
    QPoly r0;
    for (const auto& c : field_->modulus().coeffs())
        r0.emplace_back(c);
    QPoly r1 = c_;
    qtrim(r1);
    QPoly s0{}, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = qdivmod(r0, r1);
        QPoly s2 = qsub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since the modulus is irreducible
    if (r0.size() != 1)
        throw std::logic_error("CycNum::inverse: non-unit gcd");
    const Rational g = r0[0];
    CycNum out(level());
    // s0 has degree < phi after the final step
    for (std::size_t i = 0; i < s0.size(); ++i) {
        if (static_cast<int>(i) < field_->degree()) {
            out.c_[i] += s0[i] / g;
        } else {
            const auto& p = field_->power(static_cast<int>(i));
            for (int j = 0; j < field_->degree(); ++j)
                out.c_[j] += s0[i] / g * p[j];
        }
    }
    return out;
}

CycNum CycNum::operator/(const CycNum& o) const
{
    check_level(o);
    return *this * o.inverse();
}

CycNum CycNum::conj() const
{
    const int n = level();
    CycNum r(n);
    for (int j = 0; j < field_->degree(); ++j)
        if (c_[j] != 0)
            r += zeta_pow(n, -j) * c_[j];
    return r;
}

std::complex<double> CycNum::to_complex() const
{
    std::complex<double> r = 0;
    const double t = 2 * std::numbers::pi / level();
    for (int j = 0; j < field_->degree(); ++j)
        if (c_[j] != 0)
            r += c_[j].get_d() * std::polar(1.0, t * j);
    return r;
}

bool CycNum::is_integral() const
{
    const long n = level();
    return std::all_of(c_.begin(), c_.end(), [n](const Rational& q) { return is_smooth_over(q.get_den(), n); });
}

std::string to_string(const CycNum& a)
{
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < static_cast<int>(a.coords().size()); ++j) {
        const Rational& c = a.coords()[j];
        if (c == 0)
            continue;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        const Rational m = abs(c);
        if (j == 0)
            os << m;
        else {
            if (m != 1)
                os << m << "*";
            os << "z";
            if (j > 1)
                os << "^" << j;
        }
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& a)
{
    return os << to_string(a);
}

// ---------------------------------------------------------------------------
// EpsPoly

EpsPoly::EpsPoly(int level) : level_(level)
{
    CycloField::get(level);
}

EpsPoly::EpsPoly(const CycNum& constant) : level_(constant.level()), c_{constant}
{
    trim();
}

EpsPoly::EpsPoly(int level, const Rational& constant) : EpsPoly(CycNum(level, constant)) {}

EpsPoly::EpsPoly(int level, std::vector<CycNum> coeffs) : level_(level), c_(std::move(coeffs))
{
    for (const auto& c : c_)
        if (c.level() != level_)
            throw LevelMismatch(level_, c.level());
    trim();
}

EpsPoly EpsPoly::linear(int level, const Rational& a, const Rational& b)
{
    return EpsPoly(level, {CycNum(level, a), CycNum(level, b)});
}

void EpsPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

CycNum EpsPoly::coeff(int j) const
{
    if (j >= 0 && j < static_cast<int>(c_.size()))
        return c_[j];
    return CycNum(level_);
}

EpsPoly& EpsPoly::operator+=(const EpsPoly& o)
{
    if (o.level_ != level_)
        throw LevelMismatch(level_, o.level_);
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), CycNum(level_));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& o)
{
    if (o.level_ != level_)
        throw LevelMismatch(level_, o.level_);
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), CycNum(level_));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

EpsPoly EpsPoly::operator+(const EpsPoly& o) const
{
    EpsPoly r = *this;
    r += o;
    return r;
}

EpsPoly EpsPoly::operator-(const EpsPoly& o) const
{
    EpsPoly r = *this;
    r -= o;
    return r;
}

EpsPoly EpsPoly::operator-() const
{
    EpsPoly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

EpsPoly EpsPoly::operator*(const EpsPoly& o) const
{
    if (o.level_ != level_)
        throw LevelMismatch(level_, o.level_);
    if (is_zero() || o.is_zero())
        return EpsPoly(level_);
    std::vector<CycNum> r(c_.size() + o.c_.size() - 1, CycNum(level_));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return EpsPoly(level_, std::move(r));
}

EpsPoly EpsPoly::operator*(const CycNum& s) const
{
    if (s.level() != level_)
        throw LevelMismatch(level_, s.level());
    std::vector<CycNum> r = c_;
    for (auto& c : r)
        c = c * s;
    return EpsPoly(level_, std::move(r));
}

EpsPoly EpsPoly::operator*(const Rational& s) const
{
    std::vector<CycNum> r = c_;
    for (auto& c : r)
        c = c * s;
    return EpsPoly(level_, std::move(r));
}

bool EpsPoly::operator==(const EpsPoly& o) const
{
    return level_ == o.level_ && c_ == o.c_;
}

std::ostream& operator<<(std::ostream& os, const EpsPoly& p)
{
    if (p.is_zero())
        return os << "0";
    bool first = true;
    for (int j = 0; j <= p.degree(); ++j) {
        if (p.coeffs()[j].is_zero())
            continue;
        if (!first)
            os << " + ";
        if (j == 0)
            os << p.coeffs()[j];
        else
            os << "(" << p.coeffs()[j] << ")*eps" << (j > 1 ? "^" + std::to_string(j) : "");
        first = false;
    }
    return os;
}

}  // namespace finv
