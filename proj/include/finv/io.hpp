#pragma once

// Line-oriented text format for q-series and modular bases.
//
//   level=<N> weight=<k|?> prec=<P> [eps=<j>] label=<text>
//   <n> <c_0> ... <c_{phi(N)-1}>        one line per n = 0 .. P-1
//
// Coordinates are rationals p/q in the power basis of Q(zeta_N); '#' starts a
// comment. A file holds any number of blocks. Blocks sharing a label and
// carrying eps=<j> are the eps^j parts of one series.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "finv/divcong.hpp"
#include "finv/qseries.hpp"

namespace finv {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

struct SeriesBlock {
    int level;
    std::optional<int> weight;
    int prec;
    int eps = 0;
    std::string label;
    QSeries series;  // eps-free
};

std::vector<SeriesBlock> read_blocks(std::istream& in, const std::string& source = "<input>");
void write_block(std::ostream& out, const SeriesBlock& block);

struct LabelledSeries {
    std::string label;
    std::optional<int> weight;
    QSeries series;  // eps parts recombined
};

/// Groups blocks by label (in order of first appearance) and recombines eps parts.
std::vector<LabelledSeries> read_series(std::istream& in, const std::string& source = "<input>");
std::vector<LabelledSeries> read_series_file(const std::string& path);
/// Writes one block per eps-degree of the series.
void write_series(std::ostream& out, const QSeries& f, std::optional<int> weight, const std::string& label);

void write_basis(std::ostream& out, const ModularBasis& basis);
/// Reads a basis; every block needs an integer weight. A missing weight-0
/// entry is supplied as the constant 1.
ModularBasis read_basis(std::istream& in, const std::string& source = "<input>");
ModularBasis read_basis_file(const std::string& path, std::optional<int> expected_level = std::nullopt);
void write_basis_file(const std::string& path, const ModularBasis& basis);

}  // namespace finv
