// n-bit spin multi-indices alpha in {0,1}^n.  alpha_1 is the most
// significant bit, so the integer encoding is lexicographic on the tuple.

#pragma once

#include <vector>

namespace okmat {

struct Spin {
    static int dim(int n) { return 1 << n; }

    static int bit(int idx, int j, int n) { return (idx >> (n - j)) & 1; } // j = 1..n

    static int set_bit(int idx, int j, int n, int v) {
        int mask = 1 << (n - j);
        return v ? (idx | mask) : (idx & ~mask);
    }

    static int weight(int idx) { return __builtin_popcount(static_cast<unsigned>(idx)); }

    static int complement(int idx, int n) { return (~idx) & (dim(n) - 1); }

    static int reversed(int idx, int n) {
        int out = 0;
        for (int j = 1; j <= n; ++j) out = set_bit(out, n + 1 - j, n, bit(idx, j, n));
        return out;
    }

    static std::vector<int> bits(int idx, int n) {
        std::vector<int> b(static_cast<size_t>(n));
        for (int j = 1; j <= n; ++j) b[static_cast<size_t>(j - 1)] = bit(idx, j, n);
        return b;
    }

    static int from_bits(const std::vector<int>& b) {
        int idx = 0;
        for (int v : b) idx = (idx << 1) | (v & 1);
        return idx;
    }

    /// alpha +- e_j with range checking; returns -1 when the move leaves {0,1}^n.
    static int move(int idx, int j, int delta, int n) {
        int v = bit(idx, j, n) + delta;
        if (v < 0 || v > 1) return -1;
        return set_bit(idx, j, n, v);
    }
};

} // namespace okmat
