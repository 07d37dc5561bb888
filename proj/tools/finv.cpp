// Command-line front end: Eisenstein data, equivalence checks, assembly and
// the worked examples.

#include <CLI11.hpp>

#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "finv/divcong.hpp"
#include "finv/fassembly.hpp"
#include "finv/genus.hpp"
#include "finv/geometry.hpp"
#include "finv/io.hpp"

using namespace finv;

namespace {

enum Exit { ok = 0, false_verdict = 1, usage = 2, data = 3 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Common {
    int level = 3;
    int prec = 20;
    bool machine = false;
};

void add_common(CLI::App* app, Common& c)
{
    app->add_option("-N,--level", c.level, "level N >= 2")->capture_default_str();
    app->add_option("-p,--prec", c.prec, "q-adic precision (number of coefficients)")->capture_default_str();
    app->add_flag("--machine", c.machine, "machine-readable key=value output");
}

void check_level(int level)
{
    if (level < 2)
        throw UsageError("level must be >= 2, got " + std::to_string(level));
}

void print_series(std::ostream& os, const QSeries& f, const std::string& indent = "  ")
{
    bool any = false;
    for (int n = 0; n < f.prec(); ++n) {
        if (f[n].is_zero())
            continue;
        os << indent << "q^" << n << ": " << f[n] << "\n";
        any = true;
    }
    if (!any)
        os << indent << "0\n";
    os << indent << "+ O(q^" << f.prec() << ")\n";
}

struct BasisSource {
    std::string file;
    std::string dir = "./bases";
    bool no_cache = false;
};

void add_basis_options(CLI::App* app, BasisSource& b)
{
    app->add_option("--basis", b.file, "basis file (required for levels without built-in generators)");
    app->add_option("--basis-dir", b.dir, "basis cache directory")->capture_default_str();
    app->add_flag("--no-cache", b.no_cache, "do not read or write the basis cache");
}

std::shared_ptr<const ModularBasis> obtain_basis(int level, int weight, int prec, const BasisSource& src)
{
    if (!src.file.empty()) {
        ModularBasis b = read_basis_file(src.file, level);
        if (b.maxweight < weight)
            throw BasisError(src.file + " stops at weight " + std::to_string(b.maxweight) + ", need " +
                             std::to_string(weight));
        return std::make_shared<const ModularBasis>(std::move(b));
    }
    const std::filesystem::path cache = std::filesystem::path(src.dir) /
                                        ("level" + std::to_string(level) + "_w" + std::to_string(weight) + "_p" +
                                         std::to_string(prec) + ".basis");
    if (!src.no_cache && std::filesystem::exists(cache))
        return std::make_shared<const ModularBasis>(read_basis_file(cache.string(), level));
    ModularBasis b = build_basis(level, weight, prec);
    if (!src.no_cache) {
        std::filesystem::create_directories(src.dir);
        write_basis_file(cache.string(), b);
    }
    return std::make_shared<const ModularBasis>(std::move(b));
}

void print_verdict(std::ostream& os, const EquivResult& r, const ModularBasis& basis, bool machine)
{
    if (machine) {
        os << "verdict=" << (r.equivalent ? "true" : "false") << "\n";
        os << "proof=" << (r.sound ? "true" : "false") << "\n";
        os << "prec=" << r.prec << "\n";
        os << "modulus=" << r.modulus << "\n";
        if (!r.reason.empty())
            os << "reason=" << r.reason << "\n";
        if (r.certificate) {
            const auto& c = *r.certificate;
            for (std::size_t i = 0; i < c.basis_coeffs.size(); ++i)
                if (!c.basis_coeffs[i].is_zero())
                    os << "coeff[" << basis.entries[i].label << "]=" << c.basis_coeffs[i] << "\n";
            os << "gtilde_const=" << c.gtilde_const << "\n";
            os << "gtilde_eps=" << c.gtilde_eps << "\n";
            for (int n = 0; n < c.residual.prec(); ++n)
                if (!c.residual[n].is_zero())
                    os << "residual[" << n << "]=" << c.residual[n] << "\n";
        }
        return;
    }
    os << "modulus: " << r.modulus << "\n";
    os << "verdict: " << (r.equivalent ? "true" : "false");
    if (r.equivalent)
        os << " (certificate replayed exactly)";
    else if (r.sound)
        os << " (proof: precision meets the Sturm policy)";
    else
        os << " (precision below policy: false is not a proof)";
    os << "\n";
    if (!r.reason.empty())
        os << "reason: " << r.reason << "\n";
    if (r.certificate) {
        const auto& c = *r.certificate;
        os << "certificate:\n";
        for (std::size_t i = 0; i < c.basis_coeffs.size(); ++i)
            if (!c.basis_coeffs[i].is_zero())
                os << "  " << basis.entries[i].label << " (weight " << basis.entries[i].weight
                   << "): " << c.basis_coeffs[i] << "\n";
        os << "  G~ multiple: " << c.gtilde_const << " + (" << c.gtilde_eps << ")*eps\n";
        os << "  integral residual:\n";
        print_series(os, c.residual, "    ");
    }
}

QSeries single_series(const std::string& path)
{
    auto all = read_series_file(path);
    if (all.empty())
        throw std::runtime_error(path + ": no series");
    return all.front().series;
}

XiKind parse_kind(const std::string& s)
{
    for (XiKind k : {XiKind::complex_full, XiKind::complex_positive, XiKind::quaternionic,
                     XiKind::quaternionic_kernel_parity})
        if (to_string(k) == s)
            return k;
    throw UsageError("unknown table kind '" + s + "'");
}

// lines "d a [b]" meaning xi_d = a + b eps
XiTable read_xi_file(const std::string& path, XiKind kind, int level, int l)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    XiTable t(kind, level, l);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        std::istringstream ls(hash == std::string::npos ? raw : raw.substr(0, hash));
        std::string dtok, atok, btok;
        if (!(ls >> dtok))
            continue;
        if (!(ls >> atok))
            throw ParseError(path, lineno, "expected 'd value [eps-coefficient]'");
        ls >> btok;
        try {
            const Rational a = parse_rational(atok);
            const Rational b = btok.empty() ? Rational(0) : parse_rational(btok);
            t.set(std::stoi(dtok), EpsPoly::linear(level, a, b));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(path, lineno, e.what());
        }
    }
    return t;
}

FRepresentative assemble_table(const XiTable& xi, int prec)
{
    switch (xi.kind()) {
    case XiKind::complex_full:
        return assemble_complex(xi, prec);
    case XiKind::complex_positive:
        return assemble_complex_reduced(xi, prec);
    case XiKind::quaternionic:
        return assemble_quaternionic(xi, prec);
    case XiKind::quaternionic_kernel_parity:
        return assemble_quaternionic_reduced(xi, prec);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"f-invariants of circle and quaternionic transfers at level N"};
    app.require_subcommand(1);

    Common eis_c;
    int eis_k = 1;
    bool eis_tilde = false;
    auto* eis = app.add_subcommand("eis", "q-expansion of hat-G_k at level N");
    add_common(eis, eis_c);
    eis->add_option("-k,--weight", eis_k, "weight k >= 1")->capture_default_str();
    eis->add_flag("--tilde", eis_tilde, "drop the constant term");

    Common ell_c;
    int ell_x = 4;
    auto* ell = app.add_subcommand("ell", "x-expansion of Ell(x) = 1 + sum hat-G_k x^k/(k-1)!");
    add_common(ell, ell_c);
    ell->add_option("-x,--x-order", ell_x, "highest power of x")->capture_default_str();

    Common g2_c;
    auto* g2c = app.add_subcommand("g2", "g_2 = hat-G_1^2 - 2 hat-G_2 and its congruence to 1/12");
    add_common(g2c, g2_c);

    Common basis_c;
    int basis_w = 4;
    std::string basis_out;
    auto* basis = app.add_subcommand("basis", "build a modular-form basis and write it in the series format");
    add_common(basis, basis_c);
    basis->add_option("-w,--weight-bound", basis_w, "top weight")->capture_default_str();
    basis->add_option("-o,--output", basis_out, "output file (default: stdout)");

    Common dc_c;
    int dc_w = 2;
    std::string dc_f, dc_g;
    bool dc_no_gtilde = false, dc_low = false;
    BasisSource dc_b;
    auto* dc = app.add_subcommand("divcong", "decide F = G modulo the f-invariant indeterminacy");
    add_common(dc, dc_c);
    dc->add_option("F", dc_f, "series file")->required();
    dc->add_option("G", dc_g, "series file")->required();
    dc->add_option("-w,--weight-bound", dc_w, "top weight k")->capture_default_str();
    dc->add_flag("--no-gtilde", dc_no_gtilde, "leave R*G~_k out of the modulus");
    dc->add_flag("--allow-low-precision", dc_low, "run below the Sturm policy (false verdicts are then not proofs)");
    add_basis_options(dc, dc_b);
    bool dc_prec_given = false;

    Common as_c;
    std::string as_kind = "complex_positive", as_file, as_table, as_out;
    int as_l = 1;
    auto* as = app.add_subcommand("assemble", "assemble an f-invariant representative from a xi-table");
    add_common(as, as_c);
    as->add_option("--kind", as_kind, "complex_full | complex_positive | quaternionic | quaternionic_kernel_parity")
        ->capture_default_str();
    as->add_option("-l", as_l, "l (dim M = 2l-1 complex, 2l-3 quaternionic)")->capture_default_str();
    auto* as_xi = as->add_option("--xi", as_file, "table file: lines 'd value [eps-coefficient]'");
    as->add_option("--table", as_table, "built-in table: circle | nu2 | etasigma | su3")->excludes(as_xi);
    as->add_option("-o,--output", as_out, "write the series to a file");

    Common ex_c;
    std::string ex_name;
    std::string ex_e = "1/2";
    BasisSource ex_b;
    auto* ex = app.add_subcommand("example", "run a worked example end to end");
    add_common(ex, ex_c);
    ex->add_option("name", ex_name, "trivial | eta2 | nu2 | etasigma | su3 (or the long names)")->required();
    ex->add_option("--e", ex_e, "e-invariant for the trivial-bundle example")->capture_default_str();
    add_basis_options(ex, ex_b);

    Common or_c;
    int or_k = 6;
    std::vector<double> or_tau{0.0, 0.31, 0.05, 0.4};
    auto* orc = app.add_subcommand("oracle", "compare hat-G_k with Taylor coefficients of the theta-product Ell");
    or_c.prec = 60;
    add_common(orc, or_c);
    orc->add_option("-k,--weight", or_k, "highest k")->capture_default_str();
    orc->add_option("--tau", or_tau, "pairs re im of tau values")->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }
    dc_prec_given = dc->count("-p") > 0;

    std::ostream& out = std::cout;
    try {
        if (*eis) {
            check_level(eis_c.level);
            const QSeries f = eis_tilde ? G_tilde(eis_c.level, eis_k, eis_c.prec) : G_hat(eis_c.level, eis_k, eis_c.prec);
            const std::string label = (eis_tilde ? "Gtilde" : "Ghat") + std::to_string(eis_k);
            if (eis_c.machine) {
                write_series(out, f, eis_k, label);
            } else {
                out << label << " at level " << eis_c.level << ":\n";
                print_series(out, f);
            }
            return ok;
        }
        if (*ell) {
            check_level(ell_c.level);
            const EllExpansion e = ell_expansion(ell_c.level, ell_x, ell_c.prec);
            for (int k = 1; k <= ell_x; ++k) {
                const std::string label = "x^" + std::to_string(k);
                if (ell_c.machine) {
                    write_series(out, e.x_coefficient(k), k, label);
                } else {
                    out << "[" << label << "] Ell = Ghat" << k << "/" << factorial(k - 1).get_str() << ":\n";
                    print_series(out, e.x_coefficient(k));
                }
            }
            return ok;
        }
        if (*g2c) {
            check_level(g2_c.level);
            const QSeries g = g2(g2_c.level, g2_c.prec);
            const QSeries diff = g - QSeries::constant(g2_c.level, g2_c.prec, Rational(1, 12));
            const auto bad = first_nonintegral(diff);
            if (g2_c.machine) {
                write_series(out, g, 2, "g2");
                out << "# g2 - 1/12 integral=" << (bad ? "false" : "true") << "\n";
            } else {
                out << "g2 at level " << g2_c.level << ":\n";
                print_series(out, g);
                out << "g2 - 1/12 is " << (bad ? "NOT " : "") << "N-integral";
                if (bad)
                    out << " (first failure at q^" << *bad << ")";
                out << "\n";
            }
            return bad ? false_verdict : ok;
        }
        if (*basis) {
            check_level(basis_c.level);
            const ModularBasis b = build_basis(basis_c.level, basis_w, basis_c.prec);
            if (!basis_out.empty()) {
                write_basis_file(basis_out, b);
            } else if (basis_c.machine) {
                write_basis(out, b);
            }
            if (!basis_c.machine || !basis_out.empty())
                for (const auto& [w, d] : b.dims)
                    out << (basis_c.machine ? "dim[" + std::to_string(w) + "]=" : "weight " + std::to_string(w) + ": ")
                        << d << "\n";
            return ok;
        }
        if (*dc) {
            check_level(dc_c.level);
            QSeries f = single_series(dc_f);
            QSeries g = single_series(dc_g);
            if (f.level() != dc_c.level)
                throw LevelMismatch(dc_c.level, f.level());
            if (g.level() != dc_c.level)
                throw LevelMismatch(dc_c.level, g.level());
            int prec = std::min(f.prec(), g.prec());
            if (dc_prec_given)
                prec = std::min(prec, dc_c.prec);
            if (dc_w < 0)
                throw UsageError("weight bound must be >= 0");
            const int policy = precision_policy(dc_c.level, dc_w);
            if (prec < policy && !dc_low)
                throw PrecisionError("precision " + std::to_string(prec) + " is below the policy minimum " +
                                     std::to_string(policy) + " (use --allow-low-precision)");
            const int basis_prec = std::max(prec, policy);
            auto b = obtain_basis(dc_c.level, dc_w, basis_prec, dc_b);
            const auto lat = make_lattice(b, dc_w, !dc_no_gtilde);
            const EquivResult r = is_equivalent(f.truncate(prec), g.truncate(prec), lat, {dc_low});
            print_verdict(out, r, *b, dc_c.machine);
            return r.equivalent ? ok : false_verdict;
        }
        if (*as) {
            check_level(as_c.level);
            XiTable xi = [&] {
                if (as_table.empty()) {
                    if (as_file.empty())
                        throw UsageError("assemble needs --xi or --table");
                    return read_xi_file(as_file, parse_kind(as_kind), as_c.level, as_l);
                }
                const int dmax = as_c.prec - 1;
                if (as_table == "circle")
                    return circle_xi_table(as_c.level, dmax);
                if (as_table == "nu2")
                    return nu2_xi_table(as_c.level, dmax);
                if (as_table == "etasigma")
                    return etasigma_parity_table(as_c.level, dmax);
                if (as_table == "su3")
                    return su3_parity_table(as_c.level, dmax);
                throw UsageError("unknown built-in table '" + as_table + "'");
            }();
            const FRepresentative rep = assemble_table(xi, as_c.prec);
            if (!as_out.empty()) {
                std::ofstream f(as_out);
                if (!f)
                    throw std::runtime_error("cannot write " + as_out);
                write_series(f, rep.series, std::nullopt, "assembled");
            }
            if (as_c.machine) {
                write_series(out, rep.series, std::nullopt, "assembled");
                out << "# weight_bound=" << rep.weight_bound << "\n";
            } else {
                out << rep.note << " (l = " << xi.l() << ", weight bound " << rep.weight_bound << "):\n";
                print_series(out, rep.series);
            }
            return ok;
        }
        if (*ex) {
            check_level(ex_c.level);
            ExampleOptions opt;
            opt.e_invariant = parse_rational(ex_e);
            const std::string& n = ex_name;
            int w = 2;
            if (n == "nu2" || n == "nu2_homogeneous")
                w = 4;
            else if (n == "etasigma" || n == "etasigma_product" || n == "su3" || n == "su3_coset")
                w = 5;
            else if (n != "trivial" && n != "eta2" && n != "eta2_circle")
                throw UsageError("unknown example '" + n + "'");
            const auto basis_ptr = obtain_basis(ex_c.level, w, ex_c.prec, ex_b);
            opt.basis = basis_ptr;
            const ExampleReport r = run_example(ex_name, ex_c.level, ex_c.prec, opt);
            const ModularBasis& b = *basis_ptr;
            if (ex_c.machine) {
                out << "example=" << r.name << "\nlevel=" << r.level << "\nprec=" << r.prec << "\n";
                out << "xi_kind=" << to_string(r.xi.kind()) << "\nl=" << r.xi.l() << "\n";
                for (const auto& [d, v] : r.xi.entries())
                    out << "xi[" << d << "]=" << v << "\n";
                for (const auto& n : r.notes)
                    out << "note=" << n << "\n";
                write_series(out, r.assembled.series, std::nullopt, "assembled");
                write_series(out, r.known.series, r.known.weight_bound, "known");
                print_verdict(out, r.verdict, b, true);
            } else {
                out << "example " << r.name << " at level " << r.level << ", precision " << r.prec << "\n";
                out << "xi-table (" << to_string(r.xi.kind()) << ", l = " << r.xi.l() << "):";
                int shown = 0;
                for (const auto& [d, v] : r.xi.entries()) {
                    if (shown++ == 8) {
                        out << " ...";
                        break;
                    }
                    out << "  [" << d << "] " << v;
                }
                out << "\n";
                for (const auto& n : r.notes)
                    out << "  " << n << "\n";
                out << "assembled (" << r.assembled.note << "):\n";
                print_series(out, r.assembled.series);
                out << "known representative " << r.known.note << ":\n";
                print_series(out, r.known.series);
                print_verdict(out, r.verdict, b, false);
            }
            return r.verdict.equivalent ? ok : false_verdict;
        }
        if (*orc) {
            check_level(or_c.level);
            if (or_tau.size() % 2)
                throw UsageError("--tau takes pairs re im");
            const EllExpansion e = ell_expansion(or_c.level, or_k, or_c.prec);
            double worst = 0;
            for (std::size_t t = 0; t < or_tau.size(); t += 2) {
                const Complex tau(or_tau[t], or_tau[t + 1]);
                const auto coeffs = taylor_coefficients(
                    [&](Complex x) { return ell_numeric(or_c.level, tau, x); }, or_k, 1.0);
                const Complex q = std::exp(Complex(0, 2 * M_PI) * tau);
                for (int k = 1; k <= or_k; ++k) {
                    const Complex exact = evaluate_series(e.x_coefficient(k), q);
                    const double err = std::abs(exact - coeffs[k]);
                    worst = std::max(worst, err);
                    if (or_c.machine)
                        out << "err[tau=" << tau.real() << "+" << tau.imag() << "i,k=" << k << "]=" << err << "\n";
                    else
                        out << "tau = " << tau << "  k = " << k << "  |exact - numeric| = " << err << "\n";
                }
            }
            out << (or_c.machine ? "max_err=" : "max error: ") << worst << "\n";
            return worst < 1e-8 ? ok : false_verdict;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const LevelMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return data;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return data;
    }
    return usage;
}
