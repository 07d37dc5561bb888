#pragma once

// Tables of xi-invariants of twisted Dirac operators, indexed by the twist d.

#include <map>
#include <stdexcept>
#include <string>

#include "finv/exactnum.hpp"

namespace finv {

enum class XiKind {
    complex_full,               // xi(D (x) lambda^d) for d = +-1, +-2, ...
    complex_positive,           // d >= 1 only; the sign (-1)^{l+1} supplies the rest
    quaternionic,               // xi(D (x) d(psi^d lambda_H - 2)), d >= 1
    quaternionic_kernel_parity  // dim ker(D (x) psi^d lambda_H) (mod 2 is enough), odd d
};

std::string to_string(XiKind kind);

class MissingTwist : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class XiTable {
public:
    XiTable(XiKind kind, int level, int l);

    XiKind kind() const { return kind_; }
    int level() const { return level_; }
    int l() const { return l_; }
    const std::map<int, EpsPoly>& entries() const { return entries_; }

    void set(int d, EpsPoly value);
    void set(int d, const Rational& value) { set(d, EpsPoly(level_, value)); }
    bool contains(int d) const { return entries_.count(d) != 0; }
    const EpsPoly& at(int d) const;

    /// Entrywise sum; both tables must have the same shape and support.
    XiTable operator+(const XiTable& o) const;

private:
    XiKind kind_;
    int level_;
    int l_;
    std::map<int, EpsPoly> entries_;
};

}  // namespace finv
