#pragma once

// Square binary matrices with n <= 64, one 64-bit word per row. Used by the
// inner loops of the congruence and Fitting searches, which run millions of
// tiny products and rank computations during graph enumeration.

#include "plc/field.hpp"

#include <array>
#include <bit>
#include <cstdint>

namespace plc::detail {

struct BitMat {
    std::size_t n = 0;
    std::array<std::uint64_t, 64> row{};

    static BitMat from(const Matrix& m) {
        BitMat b;
        b.n = m.rows();
        for (std::size_t i = 0; i < b.n; ++i) b.row[i] = m.row_words(i)[0];
        return b;
    }

    static BitMat identity(std::size_t n) {
        BitMat b;
        b.n = n;
        for (std::size_t i = 0; i < n; ++i) b.row[i] = std::uint64_t{1} << i;
        return b;
    }

    [[nodiscard]] Matrix to_matrix() const {
        Matrix m(FieldOrder(2), n, n);
        for (std::size_t i = 0; i < n; ++i) m.row_words(i)[0] = row[i];
        return m;
    }

    BitMat& operator^=(const BitMat& o) {
        for (std::size_t i = 0; i < n; ++i) row[i] ^= o.row[i];
        return *this;
    }

    [[nodiscard]] bool operator==(const BitMat& o) const {
        for (std::size_t i = 0; i < n; ++i) {
            if (row[i] != o.row[i]) return false;
        }
        return true;
    }

    [[nodiscard]] bool is_zero() const {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < n; ++i) acc |= row[i];
        return acc == 0;
    }
};

// row i of a*b = xor of rows k of b with a_ik = 1
inline BitMat mul(const BitMat& a, const BitMat& b) {
    BitMat c;
    c.n = a.n;
    for (std::size_t i = 0; i < a.n; ++i) {
        std::uint64_t r = a.row[i];
        std::uint64_t acc = 0;
        while (r != 0) {
            acc ^= b.row[std::countr_zero(r)];
            r &= r - 1;
        }
        c.row[i] = acc;
    }
    return c;
}

inline BitMat transpose(const BitMat& a) {
    BitMat t;
    t.n = a.n;
    for (std::size_t i = 0; i < a.n; ++i) {
        std::uint64_t r = a.row[i];
        while (r != 0) {
            const int j = std::countr_zero(r);
            t.row[j] |= std::uint64_t{1} << i;
            r &= r - 1;
        }
    }
    return t;
}

// (a * m * a^T)_ij = parity(row_i(a m) & row_j(a))
inline BitMat congruence(const BitMat& a, const BitMat& m) {
    const BitMat am = mul(a, m);
    BitMat out;
    out.n = a.n;
    for (std::size_t i = 0; i < a.n; ++i) {
        std::uint64_t r = 0;
        for (std::size_t j = 0; j < a.n; ++j) {
            r |= static_cast<std::uint64_t>(std::popcount(am.row[i] & a.row[j]) & 1) << j;
        }
        out.row[i] = r;
    }
    return out;
}

inline std::size_t rank(BitMat a) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.n && r < a.n; ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t p = r;
        while (p < a.n && (a.row[p] & bit) == 0) ++p;
        if (p == a.n) continue;
        std::swap(a.row[p], a.row[r]);
        for (std::size_t i = r + 1; i < a.n; ++i) {
            if (a.row[i] & bit) a.row[i] ^= a.row[r];
        }
        ++r;
    }
    return r;
}

inline bool invertible(const BitMat& a) { return rank(a) == a.n; }

// E^(2^s) with 2^s >= n: same image and kernel as E^n
inline BitMat stable_power(const BitMat& e) {
    BitMat p = e;
    for (std::size_t k = 1; k < e.n; k *= 2) p = mul(p, p);
    return p;
}

}  // namespace plc::detail
