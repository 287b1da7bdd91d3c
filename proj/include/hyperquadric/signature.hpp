#pragma once

#include <string>

#include "hyperquadric/error.hpp"

namespace hq {

// Multiplicities (r; s; t) of the +1, -1 and 0 eigenvalues of the standard
// Hermitian form on C^n, n = r+s+t.
struct Signature {
    int r = 0;
    int s = 0;
    int t = 0;

    Signature() = default;
    Signature(int r_, int s_, int t_ = 0) : r(r_), s(s_), t(t_) {
        if (r < 0 || s < 0 || t < 0 || n() <= 0)
            throw DimensionError("signature requires r,s,t >= 0 and r+s+t > 0");
    }

    int n() const { return r + s + t; }

    // Eigenvalue of the form at 0-based coordinate j: +1, -1 or 0.
    int eps(int j) const {
        if (j < 0 || j >= n()) throw DimensionError("coordinate index out of range");
        if (j < r) return 1;
        if (j < r + s) return -1;
        return 0;
    }

    Signature swapped() const { return Signature(s, r, t); }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.r == b.r && a.s == b.s && a.t == b.t;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

    std::string to_string() const {
        return "(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + ")";
    }
};

}  // namespace hq
