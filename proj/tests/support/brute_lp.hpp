#pragma once

// Brute-force LP by vertex enumeration, independent of the simplex kernel.
// Solves max c.x s.t. A x <= b over free x, assuming the feasible set is
// bounded (callers add box rows). Returns nullopt when infeasible.

#include "pk/rational.hpp"

#include <optional>
#include <vector>

namespace pk::test {

using Matrix = std::vector<std::vector<Rational>>;

// Solves the square system M x = r; nullopt if singular.
inline std::optional<std::vector<Rational>> solve_square(Matrix m, std::vector<Rational> r) {
    const std::size_t n = r.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) {
            ++piv;
        }
        if (piv == n) {
            return std::nullopt;
        }
        std::swap(m[piv], m[col]);
        std::swap(r[piv], r[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) {
                continue;
            }
            const Rational f = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) {
                m[row][k] -= f * m[col][k];
            }
            r[row] -= f * r[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = r[i] / m[i][i];
    }
    return x;
}

inline std::optional<Rational> brute_max(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
    const std::size_t n = c.size();
    const std::size_t m = a.size();
    std::optional<Rational> best;
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) {
        pick[i] = i;
    }
    if (m < n) {
        return std::nullopt;
    }
    for (;;) {
        Matrix sub;
        std::vector<Rational> rhs;
        for (std::size_t i : pick) {
            sub.push_back(a[i]);
            rhs.push_back(b[i]);
        }
        if (auto x = solve_square(sub, rhs)) {
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i) {
                Rational s(0);
                for (std::size_t j = 0; j < n; ++j) {
                    s += a[i][j] * (*x)[j];
                }
                ok = s <= b[i];
            }
            if (ok) {
                Rational v(0);
                for (std::size_t j = 0; j < n; ++j) {
                    v += c[j] * (*x)[j];
                }
                if (!best || v > *best) {
                    best = v;
                }
            }
        }
        std::size_t pos = n;
        while (pos > 0 && pick[pos - 1] == m - n + pos - 1) {
            --pos;
        }
        if (pos == 0) {
            break;
        }
        ++pick[pos - 1];
        for (std::size_t i = pos; i < n; ++i) {
            pick[i] = pick[i - 1] + 1;
        }
    }
    return best;
}

} // namespace pk::test
