#include "finv/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace finv {

ParseError::ParseError(const std::string& source, int line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line)
{
}

namespace {

std::string strip_comment(const std::string& s)
{
    const auto pos = s.find('#');
    std::string r = pos == std::string::npos ? s : s.substr(0, pos);
    while (!r.empty() && (r.back() == ' ' || r.back() == '\t' || r.back() == '\r'))
        r.pop_back();
    std::size_t b = 0;
    while (b < r.size() && (r[b] == ' ' || r[b] == '\t'))
        ++b;
    return r.substr(b);
}

int parse_int(const std::string& text, const std::string& source, int line, const std::string& what)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size())
        throw ParseError(source, line, "bad " + what + " '" + text + "'");
    return v;
}

struct Header {
    int level = 0;
    std::optional<int> weight;
    int prec = 0;
    int eps = 0;
    std::string label;
};

Header parse_header(const std::string& line, const std::string& source, int lineno)
{
    Header h;
    bool have_level = false, have_weight = false, have_prec = false, have_label = false;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && line[pos] == ' ')
            ++pos;
        if (pos >= line.size())
            break;
        const auto eq = line.find('=', pos);
        if (eq == std::string::npos)
            throw ParseError(source, lineno, "expected key=value in header");
        const std::string key = line.substr(pos, eq - pos);
        if (key == "label") {
            h.label = line.substr(eq + 1);
            have_label = true;
            break;
        }
        auto end = line.find(' ', eq);
        if (end == std::string::npos)
            end = line.size();
        const std::string value = line.substr(eq + 1, end - eq - 1);
        if (key == "level") {
            h.level = parse_int(value, source, lineno, "level");
            have_level = true;
        } else if (key == "weight") {
            if (value != "?")
                h.weight = parse_int(value, source, lineno, "weight");
            have_weight = true;
        } else if (key == "prec") {
            h.prec = parse_int(value, source, lineno, "prec");
            have_prec = true;
        } else if (key == "eps") {
            h.eps = parse_int(value, source, lineno, "eps degree");
            if (h.eps < 0)
                throw ParseError(source, lineno, "negative eps degree");
        } else {
            throw ParseError(source, lineno, "unknown header key '" + key + "'");
        }
        pos = end;
    }
    if (!have_level || !have_weight || !have_prec || !have_label)
        throw ParseError(source, lineno, "header needs level=, weight=, prec= and label=");
    if (h.level < 2)
        throw ParseError(source, lineno, "level must be >= 2");
    if (h.prec < 1)
        throw ParseError(source, lineno, "prec must be positive");
    return h;
}

}  // namespace

std::vector<SeriesBlock> read_blocks(std::istream& in, const std::string& source)
{
    std::vector<SeriesBlock> blocks;
    std::optional<Header> cur;
    std::optional<QSeries> series;
    int expected = 0;
    int header_line = 0;
    int lineno = 0;

    auto finish = [&](int at) {
        if (!cur)
            return;
        if (expected != cur->prec)
            throw ParseError(source, at,
                             "block '" + cur->label + "' (header at line " + std::to_string(header_line) + ") has " +
                                 std::to_string(expected) + " of " + std::to_string(cur->prec) + " coefficient lines");
        blocks.push_back({cur->level, cur->weight, cur->prec, cur->eps, cur->label, std::move(*series)});
        cur.reset();
        series.reset();
    };

    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip_comment(raw);
        if (line.empty())
            continue;
        if (line.rfind("level=", 0) == 0) {
            finish(lineno);
            cur = parse_header(line, source, lineno);
            series.emplace(cur->level, cur->prec);
            expected = 0;
            header_line = lineno;
            continue;
        }
        if (!cur)
            throw ParseError(source, lineno, "coefficient line before any header");
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        const int n = parse_int(tok, source, lineno, "index");
        if (n != expected)
            throw ParseError(source, lineno,
                             "expected coefficient index " + std::to_string(expected) + ", got " + std::to_string(n));
        if (n >= cur->prec)
            throw ParseError(source, lineno, "index " + std::to_string(n) + " beyond prec");
        const int phi = euler_phi(cur->level);
        std::vector<Rational> coords;
        while (ls >> tok) {
            try {
                coords.push_back(parse_rational(tok));
            } catch (const std::exception&) {
                throw ParseError(source, lineno, "bad rational '" + tok + "'");
            }
        }
        if (static_cast<int>(coords.size()) != phi)
            throw ParseError(source, lineno,
                             "expected " + std::to_string(phi) + " coordinates, got " + std::to_string(coords.size()));
        (*series)[n] = EpsPoly(CycNum(cur->level, std::move(coords)));
        ++expected;
    }
    finish(lineno + 1);
    return blocks;
}

void write_block(std::ostream& out, const SeriesBlock& b)
{
    if (!b.series.is_eps_free())
        throw std::invalid_argument("write_block: block series must be eps-free");
    out << "level=" << b.level << " weight=" << (b.weight ? std::to_string(*b.weight) : "?") << " prec=" << b.prec;
    if (b.eps)
        out << " eps=" << b.eps;
    out << " label=" << b.label << "\n";
    for (int n = 0; n < b.prec; ++n) {
        out << n;
        const CycNum c_n = b.series.cyc(n);
        for (const auto& c : c_n.coords())
            out << " " << to_string(c);
        out << "\n";
    }
}

std::vector<LabelledSeries> read_series(std::istream& in, const std::string& source)
{
    const auto blocks = read_blocks(in, source);
    std::vector<LabelledSeries> out;
    std::map<std::string, std::size_t> index;
    for (const auto& b : blocks) {
        auto it = index.find(b.label);
        QSeries part = b.series;
        if (b.eps) {
            std::vector<EpsPoly> c;
            for (int n = 0; n < b.prec; ++n) {
                std::vector<CycNum> coeffs(b.eps + 1, CycNum(b.level));
                coeffs[b.eps] = b.series.cyc(n);
                c.emplace_back(b.level, std::move(coeffs));
            }
            part = QSeries(b.level, std::move(c));
        }
        if (it == index.end()) {
            index[b.label] = out.size();
            out.push_back({b.label, b.weight, std::move(part)});
            continue;
        }
        LabelledSeries& s = out[it->second];
        if (s.series.level() != b.level)
            throw LevelMismatch(s.series.level(), b.level);
        if (s.series.prec() != b.prec)
            throw std::invalid_argument("series '" + b.label + "': eps parts disagree on precision");
        s.series += part;
    }
    return out;
}

std::vector<LabelledSeries> read_series_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_series(in, path);
}

void write_series(std::ostream& out, const QSeries& f, std::optional<int> weight, const std::string& label)
{
    const auto parts = eps_split(f);
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (j > 0 && parts[j].is_zero())
            continue;
        write_block(out, {f.level(), weight, f.prec(), static_cast<int>(j), label, parts[j]});
    }
}

void write_basis(std::ostream& out, const ModularBasis& basis)
{
    out << "# basis level=" << basis.level << " maxweight=" << basis.maxweight << " prec=" << basis.prec << "\n";
    for (const auto& e : basis.entries)
        write_block(out, {basis.level, e.weight, basis.prec, 0, e.label, e.series});
}

ModularBasis read_basis(std::istream& in, const std::string& source)
{
    // the "# basis ... maxweight=W" line written by write_basis records empty top weights
    std::ostringstream all;
    all << in.rdbuf();
    const std::string text = all.str();
    int declared_max = 0;
    {
        std::istringstream scan(text);
        std::string line;
        while (std::getline(scan, line))
            if (line.rfind("# basis ", 0) == 0) {
                const auto pos = line.find("maxweight=");
                if (pos != std::string::npos)
                    declared_max = std::atoi(line.c_str() + pos + 10);
                break;
            }
    }
    std::istringstream body(text);
    const auto blocks = read_blocks(body, source);
    if (blocks.empty())
        throw ParseError(source, 1, "basis file has no entries");
    ModularBasis b;
    b.level = blocks.front().level;
    b.prec = blocks.front().prec;
    for (const auto& blk : blocks) {
        if (blk.level != b.level)
            throw LevelMismatch(b.level, blk.level);
        if (blk.prec != b.prec)
            throw std::invalid_argument("basis entries disagree on precision");
        if (!blk.weight)
            throw std::invalid_argument("basis entry '" + blk.label + "' has no weight");
        if (blk.eps)
            throw std::invalid_argument("basis entry '" + blk.label + "' involves eps");
        b.entries.push_back({*blk.weight, blk.series, blk.label});
    }
    if (b.indices_of_weight(0).empty())
        b.entries.insert(b.entries.begin(), {0, QSeries::constant(b.level, b.prec, Rational(1)), "1"});
    std::stable_sort(b.entries.begin(), b.entries.end(),
                     [](const BasisEntry& x, const BasisEntry& y) { return x.weight < y.weight; });
    b.maxweight = std::max(0, declared_max);
    for (const auto& e : b.entries) {
        b.maxweight = std::max(b.maxweight, e.weight);
        ++b.dims[e.weight];
    }
    for (int w = 0; w <= b.maxweight; ++w) {
        std::vector<QSeries> same;
        for (int i : b.indices_of_weight(w))
            same.push_back(b.entries[i].series);
        b.dims.emplace(w, 0);
        if (cyc_rank(same) != static_cast<int>(same.size()))
            throw BasisError("basis entries of weight " + std::to_string(w) + " are linearly dependent");
    }
    return b;
}

ModularBasis read_basis_file(const std::string& path, std::optional<int> expected_level)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    ModularBasis b = read_basis(in, path);
    if (expected_level && b.level != *expected_level)
        throw LevelMismatch(*expected_level, b.level);
    return b;
}

void write_basis_file(const std::string& path, const ModularBasis& basis)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    write_basis(out, basis);
}

}  // namespace finv
