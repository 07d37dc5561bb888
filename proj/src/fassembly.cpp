#include "finv/fassembly.hpp"

#include <map>

#include "finv/genus.hpp"
#include "finv/geometry.hpp"

namespace finv {

namespace {

void require_kind(const XiTable& xi, XiKind kind, const char* who)
{
    if (xi.kind() != kind)
        throw std::invalid_argument(std::string(who) + ": expected a " + to_string(kind) + " table, got " +
                                    to_string(xi.kind()));
}

void require_prec(int prec)
{
    if (prec < 2)
        throw std::invalid_argument("assembly needs precision >= 2");
}

}  // namespace

FRepresentative assemble_complex(const XiTable& xi, int prec)
{
    require_kind(xi, XiKind::complex_full, "assemble_complex");
    require_prec(prec);
    const int level = xi.level();
    QSeries f(level, prec);
    for (int n = 1; n < prec; ++n)
        for (int d : divisors(n)) {
            const int m = n / d;
            f[n] += xi.at(d) * CycNum::zeta_pow(level, -m) - xi.at(-d) * CycNum::zeta_pow(level, m);
        }
    return {std::move(f), xi.l() + 1, level, "complex transfer, all twists"};
}

FRepresentative assemble_complex_reduced(const XiTable& xi, int prec)
{
    require_kind(xi, XiKind::complex_positive, "assemble_complex_reduced");
    require_prec(prec);
    const int level = xi.level();
    const bool plus = xi.l() % 2 == 1;  // (-1)^{l+1}
    QSeries f(level, prec);
    for (int n = 1; n < prec; ++n)
        for (int d : divisors(n)) {
            const int m = n / d;
            CycNum w = CycNum::zeta_pow(level, -m);
            if (plus)
                w += CycNum::zeta_pow(level, m);
            else
                w -= CycNum::zeta_pow(level, m);
            f[n] += xi.at(d) * w;
        }
    return {std::move(f), xi.l() + 1, level, "complex transfer, positive twists"};
}

FRepresentative assemble_quaternionic(const XiTable& xi, int prec)
{
    require_kind(xi, XiKind::quaternionic, "assemble_quaternionic");
    require_prec(prec);
    QSeries f(xi.level(), prec);
    for (int n = 1; n < prec; ++n)
        for (int d : divisors(n))
            f[n] += xi.at(d);
    return {std::move(f), xi.l() + 1, xi.level(), "quaternionic transfer"};
}

FRepresentative assemble_quaternionic_reduced(const XiTable& parities, int prec)
{
    require_kind(parities, XiKind::quaternionic_kernel_parity, "assemble_quaternionic_reduced");
    require_prec(prec);
    const int l = parities.l();
    if (l % 2)
        throw std::invalid_argument("assemble_quaternionic_reduced: l must be even, got " + std::to_string(l));
    QSeries f(parities.level(), prec);
    if (l % 4 == 2)
        return {std::move(f), l + 1, parities.level(), "quaternionic transfer, l = 2 mod 4"};
    for (int n = 1; n < prec; ++n)
        for (int d : divisors(n))
            if (d % 2)
                f[n] += parities.at(d) * Rational(1, 2);
    return {std::move(f), l + 1, parities.level(), "quaternionic transfer, kernel parities"};
}

FRepresentative known_representative(const std::string& name, int level, int prec)
{
    if (name == "eta2")
        return {G_tilde(level, 1, prec) * Rational(1, 2), 2, level, "1/2 G~_1"};
    if (name == "nu2" || name == "etasigma") {
        if (level % 2 == 0)
            throw std::invalid_argument(name + " is represented this way only at odd levels, got N = " +
                                        std::to_string(level));
        if (name == "nu2") {
            const QSeries g = G_tilde(level, 2, prec);
            return {g * g * Rational(1, 2), 4, level, "1/2 (G~_2)^2"};
        }
        return {G_tilde_level1(4, prec, level) * Rational(1, 2), 5, level, "1/2 sum sigma_3(n) q^n"};
    }
    throw std::invalid_argument("unknown representative '" + name + "'");
}

const std::vector<std::string>& example_names()
{
    static const std::vector<std::string> names{"trivial", "eta2_circle", "nu2_homogeneous", "etasigma_product",
                                                "su3_coset"};
    return names;
}

namespace {

std::string canonical_example(const std::string& name)
{
    static const std::map<std::string, std::string> alias{{"eta2", "eta2_circle"},
                                                          {"nu2", "nu2_homogeneous"},
                                                          {"etasigma", "etasigma_product"},
                                                          {"su3", "su3_coset"}};
    auto it = alias.find(name);
    if (it != alias.end())
        return it->second;
    for (const auto& n : example_names())
        if (n == name)
            return n;
    throw std::invalid_argument("unknown example '" + name + "'");
}

std::shared_ptr<const ModularBasis> basis_for(int level, int weight, int prec, const ExampleOptions& options)
{
    if (options.basis) {
        const auto& b = *options.basis;
        if (b->level != level)
            throw LevelMismatch(level, b->level);
        if (b->maxweight < weight)
            throw BasisError("supplied basis stops at weight " + std::to_string(b->maxweight) + ", need " +
                             std::to_string(weight));
        return b;
    }
    return std::make_shared<const ModularBasis>(build_basis(level, weight, prec));
}

}  // namespace

ExampleReport run_example(const std::string& raw_name, int level, int prec, const ExampleOptions& options)
{
    const std::string name = canonical_example(raw_name);
    const int dmax = prec - 1;

    std::optional<XiTable> xi;
    std::optional<FRepresentative> assembled, known;
    bool real_gtilde = true;
    std::vector<std::string> notes;

    if (name == "trivial") {
        XiTable t(XiKind::complex_full, level, 1);
        for (int d = 1; d <= dmax; ++d) {
            t.set(d, options.e_invariant);
            t.set(-d, options.e_invariant);
        }
        assembled = assemble_complex(t, prec);
        known = FRepresentative{G_tilde(level, 1, prec) * (-options.e_invariant), 2, level, "-e G~_1"};
        notes.push_back("e = " + to_string(options.e_invariant));
        xi = std::move(t);
    } else if (name == "eta2_circle") {
        xi = circle_xi_table(level, dmax);
        assembled = assemble_complex_reduced(*xi, prec);
        known = known_representative("eta2", level, prec);
    } else if (name == "nu2_homogeneous") {
        known = known_representative("nu2", level, prec);
        xi = nu2_xi_table(level, dmax);
        assembled = assemble_complex_reduced(*xi, prec);
        const CS3Data cs = cs3_data();
        notes.push_back("tr(omega d omega) = " + to_string(cs.omega_domega) + " vol");
        notes.push_back("tr(omega^3) = " + to_string(cs.omega_cubed) + " vol");
        notes.push_back("int cs c_1(lambda^d) = d * " + to_string(cs_integral(1)));
    } else if (name == "etasigma_product") {
        known = known_representative("etasigma", level, prec);
        xi = etasigma_parity_table(level, dmax);
        assembled = assemble_quaternionic_reduced(*xi, prec);
        real_gtilde = false;
        for (int d = 1; d <= std::min(dmax, 9); ++d)
            notes.push_back("ind(HP1, psi^" + std::to_string(d) + ") = " + hp1_index(d).get_str());
    } else {
        known = known_representative("etasigma", level, prec);
        xi = su3_parity_table(level, dmax);
        assembled = assemble_quaternionic_reduced(*xi, prec);
        real_gtilde = false;
        for (int k = 0; k <= 10; ++k) {
            const KernelReport r = su3_kernel_report(k);
            notes.push_back("k = " + std::to_string(k) + ": dim ker = " + r.dimension.get_str() +
                            ", parity " + std::to_string(r.parity));
        }
    }

    const int weight = known->weight_bound;
    auto basis = basis_for(level, weight, prec, options);
    const IndeterminacyLattice lattice = make_lattice(basis, weight, real_gtilde);
    EquivResult verdict = is_equivalent(assembled->series, known->series, lattice);
    return {name, level, prec, std::move(*xi), std::move(*assembled), std::move(*known), std::move(verdict),
            std::move(notes)};
}

}  // namespace finv
