#pragma once

// Assembly of f-invariant representatives from xi-tables, the known
// representatives of eta^2, nu^2 and eta*sigma, and the end-to-end examples.

#include <optional>
#include <string>
#include <vector>

#include "finv/divcong.hpp"
#include "finv/qseries.hpp"
#include "finv/xitable.hpp"

namespace finv {

struct FRepresentative {
    QSeries series;
    int weight_bound;  // k = l + 1
    int level;
    std::string note;
};

/// sum_n sum_{d|n} (zeta^{-n/d} xi_d - zeta^{n/d} xi_{-d}) q^n
FRepresentative assemble_complex(const XiTable& xi, int prec);

/// sum_n sum_{d|n} (zeta^{-n/d} + (-1)^{l+1} zeta^{n/d}) xi_d q^n
FRepresentative assemble_complex_reduced(const XiTable& xi, int prec);

/// sum_n sum_{d|n} xi_d q^n
FRepresentative assemble_quaternionic(const XiTable& xi, int prec);

/// l = 0 mod 4: 1/2 sum_n sum_{odd d|n} k_d q^n;  l = 2 mod 4: 0.
FRepresentative assemble_quaternionic_reduced(const XiTable& parities, int prec);

/// eta2 -> 1/2 G~_1,  nu2 -> 1/2 (G~_2)^2,  etasigma -> 1/2 sum sigma_3(n) q^n.
FRepresentative known_representative(const std::string& name, int level, int prec);

struct ExampleOptions {
    Rational e_invariant{1, 2};  // input for the trivial-bundle example
    std::optional<std::shared_ptr<const ModularBasis>> basis;
};

struct ExampleReport {
    std::string name;
    int level;
    int prec;
    XiTable xi;
    FRepresentative assembled;
    FRepresentative known;
    EquivResult verdict;
    std::vector<std::string> notes;  // example-specific tables
};

const std::vector<std::string>& example_names();

/// Accepts the full names and the short forms trivial, eta2, nu2, etasigma, su3.
ExampleReport run_example(const std::string& name, int level, int prec, const ExampleOptions& options = {});

}  // namespace finv
