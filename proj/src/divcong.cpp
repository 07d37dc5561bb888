#include "finv/divcong.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "finv/genus.hpp"

namespace finv {

// ---------------------------------------------------------------------------
// generators and dimensions

std::vector<Generator> default_generators(int level, int prec)
{
    std::vector<int> weights;
    switch (level) {
    case 2:
        weights = {2, 4};
        break;
    case 3:
        weights = {1, 3};
        break;
    case 4:
        weights = {1, 2};
        break;
    default:
        throw BasisError("no built-in generators for level " + std::to_string(level) + "; supply a basis file");
    }
    std::vector<Generator> gens;
    for (int k : weights)
        gens.push_back({k, G_hat(level, k, prec), "G" + std::to_string(k)});
    return gens;
}

std::optional<int> expected_dimension(int level, int weight)
{
    // Gamma_1(N) has genus 0 for these levels; the counts follow from the
    // Riemann-Roch dimension formula with the cusp and elliptic data
    //   N=2: index 3, cusps 2, one elliptic point of order 2, -1 in the group
    //   N=3: index 4 (projective), cusps 2, one elliptic point of order 3
    //   N=4: index 6 (projective), cusps 3 (one irregular), no elliptic points
    if (weight < 0)
        return 0;
    switch (level) {
    case 2:
        return weight % 2 ? 0 : 1 + weight / 4;
    case 3:
        return 1 + weight / 3;
    case 4:
        return 1 + weight / 2;
    default:
        return std::nullopt;
    }
}

int sturm_bound(int level, int k)
{
    if (level < 2)
        throw std::invalid_argument("sturm_bound: level must be >= 2");
    if (k <= 0)
        return 0;
    long mu = 3;
    if (level > 2) {
        // N^2 prod (1 - p^-2) = prod p^{2e-2} (p^2 - 1)
        mu = 1;
        int n = level;
        for (int p = 2; p <= n; ++p) {
            if (n % p)
                continue;
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            long t = static_cast<long>(p) * p - 1;
            for (int i = 0; i < 2 * e - 2; ++i)
                t *= p;
            mu *= t;
        }
    }
    return static_cast<int>((k * mu + 11) / 12);
}

std::vector<int> ModularBasis::indices_of_weight(int w) const
{
    std::vector<int> r;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].weight == w)
            r.push_back(static_cast<int>(i));
    return r;
}

// ---------------------------------------------------------------------------
// rank over Q(zeta)

namespace {

/// Incremental row echelon form over Q(zeta_N).
class CycEchelon {
public:
    explicit CycEchelon(int level) : level_(level) {}

    /// Adds v if it is independent of the rows so far; returns whether it was.
    bool insert(std::vector<CycNum> v)
    {
        for (std::size_t t = 0; t < rows_.size(); ++t) {
            const CycNum& f = v[pivots_[t]];
            if (f.is_zero())
                continue;
            const CycNum s = f;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!rows_[t][i].is_zero())
                    v[i] -= s * rows_[t][i];
        }
        auto it = std::find_if(v.begin(), v.end(), [](const CycNum& c) { return !c.is_zero(); });
        if (it == v.end())
            return false;
        const int p = static_cast<int>(it - v.begin());
        const CycNum inv = v[p].inverse();
        for (auto& c : v)
            c *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    int level_;
    std::vector<std::vector<CycNum>> rows_;
    std::vector<int> pivots_;
};

std::vector<CycNum> cyc_vector(const QSeries& f, int prec)
{
    std::vector<CycNum> v;
    v.reserve(prec);
    for (int n = 0; n < prec; ++n)
        v.push_back(f.cyc(n));
    return v;
}

void enumerate_monomials(const std::vector<Generator>& gens, int weight, std::size_t i, std::vector<int>& exps,
                         const std::function<void(const std::vector<int>&)>& emit)
{
    if (i == gens.size()) {
        if (weight == 0)
            emit(exps);
        return;
    }
    const int w = gens[i].weight;
    for (int e = 0; e * w <= weight; ++e) {
        exps[i] = e;
        enumerate_monomials(gens, weight - e * w, i + 1, exps, emit);
    }
    exps[i] = 0;
}

}  // namespace

int cyc_rank(const std::vector<QSeries>& series)
{
    if (series.empty())
        return 0;
    int prec = series.front().prec();
    for (const auto& s : series) {
        if (s.level() != series.front().level())
            throw LevelMismatch(series.front().level(), s.level());
        prec = std::min(prec, s.prec());
    }
    CycEchelon ech(series.front().level());
    for (const auto& s : series)
        ech.insert(cyc_vector(s, prec));
    return ech.rank();
}

ModularBasis build_basis(int level, int maxweight, int prec)
{
    return build_basis(level, maxweight, prec, default_generators(level, prec));
}

ModularBasis build_basis(int level, int maxweight, int prec, const std::vector<Generator>& gens)
{
    if (maxweight < 0)
        throw std::invalid_argument("build_basis: negative weight bound");
    if (prec < precision_policy(level, maxweight))
        throw PrecisionError("build_basis: precision " + std::to_string(prec) + " is below the policy minimum " +
                             std::to_string(precision_policy(level, maxweight)));
    for (const auto& g : gens) {
        if (g.series.level() != level)
            throw LevelMismatch(level, g.series.level());
        if (g.weight < 1)
            throw BasisError("generator " + g.label + " has non-positive weight");
        if (g.series.prec() < prec)
            throw PrecisionError("generator " + g.label + " is known to fewer coefficients than requested");
        if (!g.series.is_eps_free())
            throw BasisError("generator " + g.label + " involves eps");
    }

    ModularBasis b;
    b.level = level;
    b.maxweight = maxweight;
    b.prec = prec;

    // powers[i][e] = gens[i]^e
    std::vector<std::vector<QSeries>> powers(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        powers[i].push_back(QSeries::constant(level, prec, Rational(1)));

    for (int w = 0; w <= maxweight; ++w) {
        CycEchelon ech(level);
        int count = 0;
        std::vector<int> exps(gens.size(), 0);
        enumerate_monomials(gens, w, 0, exps, [&](const std::vector<int>& ex) {
            QSeries m = QSeries::constant(level, prec, Rational(1));
            std::string label;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if (ex[i] == 0)
                    continue;
                while (static_cast<int>(powers[i].size()) <= ex[i])
                    powers[i].push_back(powers[i].back() * gens[i].series.truncate(prec));
                m = m * powers[i][ex[i]];
                if (!label.empty())
                    label += "*";
                label += gens[i].label;
                if (ex[i] > 1)
                    label += "^" + std::to_string(ex[i]);
            }
            if (label.empty())
                label = "1";
            if (ech.insert(cyc_vector(m, prec))) {
                b.entries.push_back({w, std::move(m), label});
                ++count;
            }
        });
        b.dims[w] = count;
        const auto expect = expected_dimension(level, w);
        if (expect && count != *expect)
            throw BasisError("generators reach dimension " + std::to_string(count) + " in weight " +
                             std::to_string(w) + ", expected " + std::to_string(*expect));
    }
    return b;
}

// ---------------------------------------------------------------------------
// integer matrices

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < o.cols_; ++j)
                r(i, j) += a * o(k, j);
        }
    return r;
}

Integer IntMatrix::determinant() const
{
    if (rows_ != cols_)
        throw std::invalid_argument("IntMatrix: determinant of a non-square matrix");
    const int n = rows_;
    if (n == 0)
        return 1;
    // Bareiss
    IntMatrix m = *this;
    int sign = 1;
    Integer prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int s = k + 1;
            while (s < n && m(s, k) == 0)
                ++s;
            if (s == n)
                return 0;
            for (int j = 0; j < n; ++j)
                std::swap(m(k, j), m(s, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

// columns a, b  <-  (x a + y b, -bq a + aq b), unimodular since x aq + y bq = 1
void combine_columns(IntMatrix& m, int a, int b, const Integer& x, const Integer& y, const Integer& aq,
                     const Integer& bq)
{
    for (int i = 0; i < m.rows(); ++i) {
        const Integer ca = m(i, a);
        const Integer cb = m(i, b);
        m(i, a) = x * ca + y * cb;
        m(i, b) = aq * cb - bq * ca;
    }
}

void add_column_multiple(IntMatrix& m, int dst, int src, const Integer& f)
{
    for (int i = 0; i < m.rows(); ++i)
        m(i, dst) += f * m(i, src);
}

void negate_column(IntMatrix& m, int c)
{
    for (int i = 0; i < m.rows(); ++i)
        m(i, c) = -m(i, c);
}

void swap_columns(IntMatrix& m, int a, int b)
{
    for (int i = 0; i < m.rows(); ++i)
        std::swap(m(i, a), m(i, b));
}

}  // namespace

HnfResult hnf(const IntMatrix& a)
{
    HnfResult r{a, IntMatrix::identity(a.cols()), {}};
    IntMatrix& h = r.H;
    IntMatrix& u = r.U;
    int col = 0;
    for (int i = 0; i < h.rows() && col < h.cols(); ++i) {
        for (int j = col + 1; j < h.cols(); ++j) {
            if (h(i, j) == 0)
                continue;
            if (h(i, col) == 0) {
                swap_columns(h, col, j);
                swap_columns(u, col, j);
                continue;
            }
            Integer g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h(i, col).get_mpz_t(), h(i, j).get_mpz_t());
            const Integer aq = h(i, col) / g;
            const Integer bq = h(i, j) / g;
            combine_columns(h, col, j, x, y, aq, bq);
            combine_columns(u, col, j, x, y, aq, bq);
        }
        if (h(i, col) == 0)
            continue;
        if (h(i, col) < 0) {
            negate_column(h, col);
            negate_column(u, col);
        }
        const Integer& p = h(i, col);
        for (int c = 0; c < col; ++c) {
            Integer f;
            mpz_fdiv_q(f.get_mpz_t(), h(i, c).get_mpz_t(), p.get_mpz_t());
            if (f != 0) {
                add_column_multiple(h, c, col, -f);
                add_column_multiple(u, c, col, -f);
            }
        }
        r.pivot_rows.push_back(i);
        ++col;
    }
    return r;
}

bool is_hnf(const IntMatrix& h, const std::vector<int>& pivot_rows)
{
    const int rank = static_cast<int>(pivot_rows.size());
    if (rank > h.cols())
        return false;
    for (int j = 0; j < rank; ++j) {
        const int pr = pivot_rows[j];
        if (j > 0 && pr <= pivot_rows[j - 1])
            return false;
        for (int i = 0; i < pr; ++i)
            if (h(i, j) != 0)
                return false;
        if (h(pr, j) <= 0)
            return false;
        for (int c = 0; c < j; ++c)
            if (h(pr, c) < 0 || h(pr, c) >= h(pr, j))
                return false;
    }
    for (int j = rank; j < h.cols(); ++j)
        for (int i = 0; i < h.rows(); ++i)
            if (h(i, j) != 0)
                return false;
    return true;
}

std::optional<std::vector<Integer>> hnf_solve(const HnfResult& h, const std::vector<Integer>& target)
{
    const IntMatrix& H = h.H;
    if (static_cast<int>(target.size()) != H.rows())
        throw std::invalid_argument("hnf_solve: target length mismatch");
    std::vector<Integer> w(H.cols(), Integer(0));
    for (int j = 0; j < h.rank(); ++j) {
        const int pr = h.pivot_rows[j];
        Integer rhs = target[pr];
        for (int c = 0; c < j; ++c)
            rhs -= H(pr, c) * w[c];
        if (!mpz_divisible_p(rhs.get_mpz_t(), H(pr, j).get_mpz_t()))
            return std::nullopt;
        w[j] = rhs / H(pr, j);
    }
    for (int i = 0; i < H.rows(); ++i) {
        Integer s = 0;
        for (int j = 0; j < h.rank(); ++j)
            s += H(i, j) * w[j];
        if (s != target[i])
            return std::nullopt;
    }
    return w;
}

// ---------------------------------------------------------------------------
// lattice

std::string IndeterminacyLattice::describe() const
{
    std::ostringstream os;
    os << "M_0 (x) Q + ";
    if (weight > 0)
        os << "M_" << weight << " (x) Q + ";
    os << "Z[zeta_" << level << ", 1/" << level << "][[q]]";
    if (real_gtilde)
        os << " + R*G~_" << weight;
    return os.str();
}

IndeterminacyLattice make_lattice(std::shared_ptr<const ModularBasis> basis, int weight, bool real_gtilde)
{
    if (!basis)
        throw std::invalid_argument("make_lattice: no basis");
    if (weight < 0 || weight > basis->maxweight)
        throw BasisError("make_lattice: weight " + std::to_string(weight) + " outside the basis range 0.." +
                         std::to_string(basis->maxweight));
    const int level = basis->level;
    // weight 0: constants and integral series only
    if (weight == 0) {
        QSeries zero(level, basis->prec);
        return {level, 0, std::move(basis), false, std::move(zero)};
    }
    QSeries gt = G_tilde(level, weight, basis->prec);
    return {level, weight, std::move(basis), real_gtilde, std::move(gt)};
}

namespace {

using RVec = std::vector<Rational>;

RVec flatten(const QSeries& f, int prec, int phi)
{
    RVec v(static_cast<std::size_t>(prec) * phi, Rational(0));
    for (int n = 0; n < prec; ++n) {
        const CycNum c = f.cyc(n);
        for (int j = 0; j < phi; ++j)
            v[static_cast<std::size_t>(n) * phi + j] = c.coords()[j];
    }
    return v;
}

bool n_integral(const Rational& r, int level)
{
    return is_smooth_over(r.get_den(), level);
}

Integer lcm_den(const Integer& acc, const Rational& r)
{
    Integer out;
    mpz_lcm(out.get_mpz_t(), acc.get_mpz_t(), r.get_den_mpz_t());
    return out;
}

int max_valuation(const Integer& det, int level)
{
    int best = 0;
    int n = level;
    for (int p = 2; p <= n; ++p) {
        if (n % p)
            continue;
        while (n % p == 0)
            n /= p;
        Integer d = abs(det);
        int v = 0;
        while (d != 0 && mpz_divisible_ui_p(d.get_mpz_t(), p)) {
            d /= p;
            ++v;
        }
        best = std::max(best, v);
    }
    return best;
}

struct Column {
    int entry;  // basis entry, or -1 for G~_k
    int power;  // multiplier zeta^power (basis) or zeta^power + zeta^-power (G~_k)
    RVec v;
};

/// Solve  D = sum x_c V_c + z  with x rational and z in Z[1/N]^rows.
std::optional<RVec> solve_modulo_integral(const std::vector<Column>& cols, const RVec& d, int level)
{
    const std::size_t len = d.size();
    const std::size_t m = cols.size();

    // Gauss-Jordan on columns: B_t = sum_c coef_t[c] V_c with B_t[p_s] = delta_ts
    std::vector<RVec> B, coef;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < m; ++c) {
        RVec v = cols[c].v;
        RVec comb(m, Rational(0));
        comb[c] = 1;
        for (std::size_t t = 0; t < B.size(); ++t) {
            const Rational f = v[piv[t]];
            if (f == 0)
                continue;
            for (std::size_t i = 0; i < len; ++i)
                if (B[t][i] != 0)
                    v[i] -= f * B[t][i];
            for (std::size_t i = 0; i < m; ++i)
                if (coef[t][i] != 0)
                    comb[i] -= f * coef[t][i];
        }
        std::size_t p = 0;
        while (p < len && v[p] == 0)
            ++p;
        if (p == len)
            continue;
        const Rational s = v[p];
        for (auto& x : v)
            x /= s;
        for (auto& x : comb)
            x /= s;
        for (std::size_t t = 0; t < B.size(); ++t) {
            const Rational g = B[t][p];
            if (g == 0)
                continue;
            for (std::size_t i = 0; i < len; ++i)
                if (v[i] != 0)
                    B[t][i] -= g * v[i];
            for (std::size_t i = 0; i < m; ++i)
                if (comb[i] != 0)
                    coef[t][i] -= g * comb[i];
        }
        B.push_back(std::move(v));
        coef.push_back(std::move(comb));
        piv.push_back(p);
    }
    const std::size_t r = B.size();
    std::vector<bool> is_pivot(len, false);
    for (auto p : piv)
        is_pivot[p] = true;

    // off the pivot rows:  z_i = e_i + sum_t B_t[i] z_{p_t}
    RVec e = d;
    for (std::size_t t = 0; t < r; ++t) {
        const Rational f = d[piv[t]];
        if (f == 0)
            continue;
        for (std::size_t i = 0; i < len; ++i)
            if (B[t][i] != 0)
                e[i] -= f * B[t][i];
    }
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < len; ++i) {
        if (is_pivot[i])
            continue;
        bool ok = n_integral(e[i], level);
        for (std::size_t t = 0; ok && t < r; ++t)
            ok = n_integral(B[t][i], level);
        if (!ok)
            bad.push_back(i);
    }

    RVec zr(r, Rational(0));
    if (!bad.empty()) {
        const int b = static_cast<int>(bad.size());
        Integer s = 1;
        for (auto i : bad) {
            s = lcm_den(s, e[i]);
            for (std::size_t t = 0; t < r; ++t)
                s = lcm_den(s, B[t][i]);
        }
        // [s C | s I] [w; u] = N^K s e,  z_R = -w / N^K
        IntMatrix g(b, static_cast<int>(r) + b);
        std::vector<Integer> target(b);
        for (int row = 0; row < b; ++row) {
            const std::size_t i = bad[row];
            for (std::size_t t = 0; t < r; ++t)
                g(row, static_cast<int>(t)) = Integer(B[t][i] * s);
            g(row, static_cast<int>(r) + row) = s;
            target[row] = Integer(e[i] * s);
        }
        const HnfResult h = hnf(g);
        IntMatrix square(b, b);
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < b; ++j)
                square(i, j) = h.H(i, j);
        const int K = max_valuation(square.determinant(), level);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), level, K);
        for (auto& t : target)
            t *= scale;
        const auto w = hnf_solve(h, target);
        if (!w)
            return std::nullopt;
        for (std::size_t t = 0; t < r; ++t) {
            Integer wt = 0;
            for (int j = 0; j < g.cols(); ++j)
                wt += h.U(static_cast<int>(t), j) * (*w)[j];
            zr[t] = -Rational(wt) / Rational(scale);
        }
    }

    RVec x(m, Rational(0));
    for (std::size_t t = 0; t < r; ++t) {
        const Rational y = d[piv[t]] - zr[t];
        if (y == 0)
            continue;
        for (std::size_t c = 0; c < m; ++c)
            if (coef[t][c] != 0)
                x[c] += y * coef[t][c];
    }
    return x;
}

CycNum real_unit(int level, int j)
{
    return CycNum::zeta_pow(level, j) + CycNum::zeta_pow(level, -j);
}

}  // namespace

EquivResult is_equivalent(const QSeries& f, const QSeries& g, const IndeterminacyLattice& lattice,
                          EquivOptions options)
{
    const int level = lattice.level;
    if (f.level() != level)
        throw LevelMismatch(level, f.level());
    if (g.level() != level)
        throw LevelMismatch(level, g.level());
    const ModularBasis& basis = *lattice.basis;
    const int prec = std::min({f.prec(), g.prec(), basis.prec});
    const int policy = precision_policy(level, lattice.weight);
    if (prec < policy && !options.allow_low_precision)
        throw PrecisionError("is_equivalent: precision " + std::to_string(prec) + " is below the policy minimum " +
                             std::to_string(policy));

    EquivResult res;
    res.prec = prec;
    res.modulus = lattice.describe();
    const bool sound_false = prec >= policy;

    const QSeries d = f.truncate(prec) - g.truncate(prec);
    if (d.eps_degree() >= 2)
        throw std::invalid_argument("is_equivalent: eps-degree of F - G exceeds 1");
    const std::vector<QSeries> parts = eps_split(d);
    const QSeries d0 = parts[0];
    const QSeries gt = lattice.gtilde.truncate(prec);
    const int phi = euler_phi(level);

    auto refuse = [&](std::string why) {
        res.equivalent = false;
        res.sound = sound_false;
        res.reason = std::move(why);
        return res;
    };

    CycNum beta(level);
    if (parts.size() > 1 && !parts[1].is_zero()) {
        const QSeries& d1 = parts[1];
        if (!lattice.real_gtilde)
            return refuse("eps-part is nonzero and the modulus has no G~ summand");
        int n0 = -1;
        for (int n = 0; n < prec && n0 < 0; ++n)
            if (!gt.cyc(n).is_zero())
                n0 = n;
        if (n0 < 0)
            return refuse("eps-part is nonzero but G~ vanishes to this precision");
        beta = d1.cyc(n0) / gt.cyc(n0);
        if (d1 != gt * beta)
            return refuse("eps-part is not a multiple of G~_" + std::to_string(lattice.weight));
        if (!beta.is_real())
            return refuse("eps-part is a non-real multiple of G~_" + std::to_string(lattice.weight));
    }

    std::vector<Column> cols;
    for (std::size_t e = 0; e < basis.entries.size(); ++e) {
        const BasisEntry& be = basis.entries[e];
        if (be.weight != 0 && be.weight != lattice.weight)
            continue;
        const QSeries s = be.series.truncate(prec);
        for (int j = 0; j < phi; ++j)
            cols.push_back({static_cast<int>(e), j, flatten(s * CycNum::zeta_pow(level, j), prec, phi)});
    }
    if (lattice.real_gtilde) {
        const int real_dim = std::max(1, phi / 2);
        for (int j = 0; j < real_dim; ++j) {
            const CycNum u = j == 0 ? CycNum(level, Rational(1)) : real_unit(level, j);
            cols.push_back({-1, j, flatten(gt * u, prec, phi)});
        }
    }

    const auto x = solve_modulo_integral(cols, flatten(d0, prec, phi), level);
    if (!x)
        return refuse("eps-free part is not in the modulus");

    EquivCertificate cert{std::vector<CycNum>(basis.entries.size(), CycNum(level)), CycNum(level), beta,
                          QSeries(level, prec)};
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if ((*x)[c] == 0)
            continue;
        const Column& col = cols[c];
        if (col.entry >= 0)
            cert.basis_coeffs[col.entry] += CycNum::zeta_pow(level, col.power) * (*x)[c];
        else
            cert.gtilde_const += (col.power == 0 ? CycNum(level, Rational(1)) : real_unit(level, col.power)) * (*x)[c];
    }
    QSeries residual = d0;
    for (std::size_t e = 0; e < basis.entries.size(); ++e)
        if (!cert.basis_coeffs[e].is_zero())
            residual -= basis.entries[e].series.truncate(prec) * cert.basis_coeffs[e];
    residual -= gt * cert.gtilde_const;
    cert.residual = residual;
    if (!is_integral_series(cert.residual))
        throw std::logic_error("is_equivalent: certificate residual is not integral");

    res.equivalent = true;
    res.sound = true;
    res.certificate = std::move(cert);
    if (!replay_certificate(*res.certificate, f, g, lattice))
        throw std::logic_error("is_equivalent: certificate does not replay");
    return res;
}

bool replay_certificate(const EquivCertificate& cert, const QSeries& f, const QSeries& g,
                        const IndeterminacyLattice& lattice)
{
    const ModularBasis& basis = *lattice.basis;
    const int level = lattice.level;
    if (cert.basis_coeffs.size() != basis.entries.size())
        return false;
    if (!cert.residual.is_eps_free() || !is_integral_series(cert.residual))
        return false;
    if (!cert.gtilde_const.is_real() || !cert.gtilde_eps.is_real())
        return false;
    if (!lattice.real_gtilde && (!cert.gtilde_const.is_zero() || !cert.gtilde_eps.is_zero()))
        return false;
    const int prec = cert.residual.prec();
    if (f.prec() < prec || g.prec() < prec)
        return false;
    QSeries sum = cert.residual;
    for (std::size_t e = 0; e < basis.entries.size(); ++e) {
        if (cert.basis_coeffs[e].is_zero())
            continue;
        const int w = basis.entries[e].weight;
        if (w != 0 && w != lattice.weight)
            return false;
        sum += basis.entries[e].series.truncate(prec) * cert.basis_coeffs[e];
    }
    const QSeries gt = lattice.gtilde.truncate(prec);
    sum += gt * EpsPoly(level, {cert.gtilde_const, cert.gtilde_eps});
    const QSeries d = f.truncate(prec) - g.truncate(prec);
    for (int n = 0; n < prec; ++n)
        if (sum[n] != d[n])
            return false;
    return true;
}

IntegralityReport relative_integrality_check(const QSeries& f)
{
    const auto n = first_nonintegral(f);
    return {!n.has_value(), n};
}

}  // namespace finv
