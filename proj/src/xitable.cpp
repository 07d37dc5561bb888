#include "finv/xitable.hpp"

namespace finv {

std::string to_string(XiKind kind)
{
    switch (kind) {
    case XiKind::complex_full:
        return "complex_full";
    case XiKind::complex_positive:
        return "complex_positive";
    case XiKind::quaternionic:
        return "quaternionic";
    case XiKind::quaternionic_kernel_parity:
        return "quaternionic_kernel_parity";
    }
    return "?";
}

XiTable::XiTable(XiKind kind, int level, int l) : kind_(kind), level_(level), l_(l)
{
    if (level < 2)
        throw std::invalid_argument("XiTable: level must be >= 2");
    if (l < 1)
        throw std::invalid_argument("XiTable: l must be positive");
}

void XiTable::set(int d, EpsPoly value)
{
    if (d == 0)
        throw std::invalid_argument("XiTable: twist index 0 is not stored");
    if (d < 0 && kind_ != XiKind::complex_full)
        throw std::invalid_argument("XiTable: negative twist in a " + to_string(kind_) + " table");
    if (value.level() != level_)
        throw LevelMismatch(level_, value.level());
    entries_.insert_or_assign(d, std::move(value));
}

const EpsPoly& XiTable::at(int d) const
{
    auto it = entries_.find(d);
    if (it == entries_.end())
        throw MissingTwist("xi-table has no value for d = " + std::to_string(d));
    return it->second;
}

XiTable XiTable::operator+(const XiTable& o) const
{
    if (o.kind_ != kind_ || o.l_ != l_)
        throw std::invalid_argument("XiTable: adding tables of different shape");
    if (o.level_ != level_)
        throw LevelMismatch(level_, o.level_);
    if (o.entries_.size() != entries_.size())
        throw std::invalid_argument("XiTable: adding tables with different support");
    XiTable r = *this;
    for (auto& [d, v] : r.entries_)
        v += o.at(d);
    return r;
}

}  // namespace finv
