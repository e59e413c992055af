#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace tilingforge {

// A point of Z^2; doubles as the exponent pair of a Laurent monomial z^a w^b
// and as an edge's homology weight (h_z, h_w).
struct LatticePoint {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    LatticePoint& operator+=(const LatticePoint& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    LatticePoint& operator-=(const LatticePoint& o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    friend LatticePoint operator+(LatticePoint l, const LatticePoint& r) { return l += r; }
    friend LatticePoint operator-(LatticePoint l, const LatticePoint& r) { return l -= r; }
    friend LatticePoint operator-(const LatticePoint& p) { return {-p.a, -p.b}; }

    friend std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
        return os << '(' << p.a << ',' << p.b << ')';
    }
};

}  // namespace tilingforge
