#pragma once

// Brute-force references over all of GL(n, d); only feasible for tiny n.

#include "plc/commutation.hpp"

#include <optional>

namespace plc::oracles {

inline std::optional<Matrix> brute_force_congruence(const CommutationTuple& a, const CommutationTuple& b) {
    std::optional<Matrix> found;
    enumerate_invertible(a.size(), a.field(), [&](const Matrix& q) {
        const Matrix qt = q.transpose();
        for (std::size_t k = 0; k < a.parties(); ++k) {
            if (!(q * a[k] * qt == b[k])) return true;
        }
        found = q;
        return false;
    });
    return found;
}

inline bool block_diagonal(const CommutationTuple& c, std::size_t n1) {
    for (const auto& m : c.matrices()) {
        for (std::size_t i = 0; i < n1; ++i) {
            for (std::size_t j = n1; j < c.size(); ++j) {
                if (m(i, j) != 0) return false;
            }
        }
    }
    return true;
}

// Since Q ranges over all of GL(n), a leading block of every size is tried.
inline bool brute_force_decomposable(const CommutationTuple& c) {
    if (c.size() <= 1) return false;
    bool found = false;
    enumerate_invertible(c.size(), c.field(), [&](const Matrix& q) {
        const CommutationTuple t = change_basis(c, q);
        for (std::size_t n1 = 1; n1 < c.size(); ++n1) {
            if (block_diagonal(t, n1)) {
                found = true;
                return false;
            }
        }
        return true;
    });
    return found;
}

// All endomorphisms E with C E = E^T C, by enumerating every n x n matrix.
inline std::size_t brute_force_endomorphism_count(const CommutationTuple& c) {
    const std::size_t n = c.size();
    const unsigned d = c.field().value();
    std::size_t total = 1;
    for (std::size_t k = 0; k < n * n; ++k) total *= d;
    std::size_t count = 0;
    for (std::size_t code = 0; code < total; ++code) {
        Matrix e(c.field(), n, n);
        std::size_t rest = code;
        for (std::size_t k = 0; k < n * n; ++k) {
            e.set(k / n, k % n, static_cast<unsigned>(rest % d));
            rest /= d;
        }
        bool ok = true;
        for (const auto& m : c.matrices()) ok = ok && (m * e == e.transpose() * m);
        if (ok) ++count;
    }
    return count;
}

}  // namespace plc::oracles
