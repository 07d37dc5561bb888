#pragma once

// Modular-form bases for Gamma_1(N) as q-expansions and the decision procedure
// for equivalence modulo  Dbar_k + Z[zeta_N, 1/N][[q]] + R * G~_k.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "finv/exactnum.hpp"
#include "finv/qseries.hpp"

namespace finv {

class BasisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Generator {
    int weight;
    QSeries series;
    std::string label;
};

/// Built-in generators of M_*(Gamma_1(N)) for N in {2, 3, 4}.
/// Throws BasisError for other levels.
std::vector<Generator> default_generators(int level, int prec);

/// Dimension of M_k(Gamma_1(N)) for the built-in levels, if known.
std::optional<int> expected_dimension(int level, int weight);

/// ceil(k * mu / 12) with mu = N^2 prod_{p|N}(1 - p^-2) for N > 2 and mu = 3 for N = 2.
int sturm_bound(int level, int k);

/// Minimum precision accepted by the basis builder and the equivalence test.
inline int precision_policy(int level, int k) { return sturm_bound(level, k) + 5; }

struct BasisEntry {
    int weight;
    QSeries series;
    std::string label;
};

struct ModularBasis {
    int level = 0;
    int maxweight = 0;
    int prec = 0;
    std::vector<BasisEntry> entries;
    std::map<int, int> dims;  // achieved dimension per weight

    std::vector<int> indices_of_weight(int w) const;
};

/// Rank over Q(zeta_N) of eps-free series, compared on their shared precision.
int cyc_rank(const std::vector<QSeries>& series);

ModularBasis build_basis(int level, int maxweight, int prec);
ModularBasis build_basis(int level, int maxweight, int prec, const std::vector<Generator>& gens);

// ---------------------------------------------------------------------------

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Integer(0)) {}
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Integer& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Integer& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

    /// Integer determinant of a square matrix (fraction-free elimination).
    Integer determinant() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Integer> a_;
};

struct HnfResult {
    IntMatrix H;                  // A * U = H
    IntMatrix U;                  // unimodular
    std::vector<int> pivot_rows;  // pivot_rows[j] is the pivot row of column j of H
    int rank() const { return static_cast<int>(pivot_rows.size()); }
};

/// Column-style Hermite normal form: columns 0..rank-1 of H are the echelon
/// basis with positive pivots, entries left of a pivot reduced into [0, pivot),
/// and the remaining columns are zero.
HnfResult hnf(const IntMatrix& a);

/// Integer w with H * w = target if target lies in the column lattice of H.
std::optional<std::vector<Integer>> hnf_solve(const HnfResult& h, const std::vector<Integer>& target);

/// True iff H has the shape promised by hnf().
bool is_hnf(const IntMatrix& h, const std::vector<int>& pivot_rows);

// ---------------------------------------------------------------------------

struct IndeterminacyLattice {
    int level;
    int weight;                                 // top weight k
    std::shared_ptr<const ModularBasis> basis;  // weights 0..k
    bool real_gtilde;                           // include R * G~_k
    QSeries gtilde;                             // G~_k at the basis precision

    std::string describe() const;
};

IndeterminacyLattice make_lattice(std::shared_ptr<const ModularBasis> basis, int weight, bool real_gtilde);

/// Witness for F - G in the lattice:
///   F - G = sum_e coeff_e * e + (gtilde_const + gtilde_eps * eps) * G~_k + residual
/// with coefficients only on weight-0 and weight-k entries and an integral residual.
struct EquivCertificate {
    std::vector<CycNum> basis_coeffs;  // one per basis entry
    CycNum gtilde_const;               // real
    CycNum gtilde_eps;                 // real
    QSeries residual;
};

struct EquivResult {
    bool equivalent = false;
    /// A true verdict is always proved by the certificate; a false verdict is
    /// only a proof when the precision meets the Sturm policy.
    bool sound = false;
    int prec = 0;
    std::optional<EquivCertificate> certificate;
    std::string modulus;
    std::string reason;
};

struct EquivOptions {
    bool allow_low_precision = false;
};

EquivResult is_equivalent(const QSeries& f, const QSeries& g, const IndeterminacyLattice& lattice,
                          EquivOptions options = {});

/// Recombine a certificate and compare with F - G exactly.
bool replay_certificate(const EquivCertificate& cert, const QSeries& f, const QSeries& g,
                        const IndeterminacyLattice& lattice);

struct IntegralityReport {
    bool integral;
    std::optional<int> first_failure;
};

IntegralityReport relative_integrality_check(const QSeries& f);

}  // namespace finv
