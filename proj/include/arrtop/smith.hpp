#pragma once

#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#include "arrtop/rational.hpp"

namespace arrtop {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Diagonal entries d_1 | d_2 | ... | d_r (all positive) and the rank.
struct SmithResult {
    std::vector<Integer> diagonal;
    int rank = 0;
};

namespace detail {

struct SnfOverflow {};

/// int64 arithmetic that bails out to the big-integer path on overflow.
struct CheckedI64 {
    std::int64_t v = 0;
    CheckedI64() = default;
    CheckedI64(std::int64_t x) : v(x) {}
    friend CheckedI64 operator+(CheckedI64 a, CheckedI64 b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw SnfOverflow{};
        return r;
    }
    friend CheckedI64 operator-(CheckedI64 a, CheckedI64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw SnfOverflow{};
        return r;
    }
    friend CheckedI64 operator*(CheckedI64 a, CheckedI64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw SnfOverflow{};
        return r;
    }
    friend CheckedI64 operator/(CheckedI64 a, CheckedI64 b) { return a.v / b.v; }
    friend CheckedI64 operator%(CheckedI64 a, CheckedI64 b) { return a.v % b.v; }
    friend CheckedI64 operator-(CheckedI64 a) {
        if (a.v == INT64_MIN) throw SnfOverflow{};
        return -a.v;
    }
    friend bool operator==(CheckedI64 a, CheckedI64 b) { return a.v == b.v; }
    friend bool operator!=(CheckedI64 a, CheckedI64 b) { return a.v != b.v; }
    friend bool operator<(CheckedI64 a, CheckedI64 b) { return a.v < b.v; }
    friend bool operator>(CheckedI64 a, CheckedI64 b) { return a.v > b.v; }
};

inline CheckedI64 snf_abs(CheckedI64 a) { return a.v < 0 ? -a : a; }
inline Integer snf_abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

/// Quotient with remainder in (-|b|/2, |b|/2]; shrinks entries fastest.
template <class T>
T round_div(const T& a, const T& b) {
    T q = a / b;
    T r = a - q * b;
    T ab = snf_abs(b);
    if (snf_abs(r) + snf_abs(r) > ab) {
        if ((r > T(0)) == (b > T(0)))
            q = q + T(1);
        else
            q = q - T(1);
    }
    return q;
}

/**
 * In-place Smith normal form by unimodular row/column operations.
 * Pivot selection minimizes absolute value (ties: smallest row, then
 * column), which keeps coefficient growth mild on the sparse incidence
 * matrices this library produces.  Returns the diagonal.
 */
template <class T>
std::vector<T> snf_core(std::vector<std::vector<T>>& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<T> diag;
    int k = 0;
    while (k < rows && k < cols) {
        // Smallest nonzero |entry| in the trailing block.
        int pi = -1, pj = -1;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j)
                if (m[i][j] != T(0) &&
                    (pi < 0 || snf_abs(m[i][j]) < snf_abs(m[pi][pj])))
                    pi = i, pj = j;
        if (pi < 0) break;
        std::swap(m[k], m[pi]);
        if (pj != k)
            for (int i = 0; i < rows; ++i) std::swap(m[i][k], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = k + 1; i < rows; ++i) {
                if (m[i][k] == T(0)) continue;
                T q = round_div(m[i][k], m[k][k]);
                for (int j = k; j < cols; ++j) m[i][j] = m[i][j] - q * m[k][j];
                if (m[i][k] != T(0)) {  // remainder is smaller; promote it
                    std::swap(m[k], m[i]);
                    clean = false;
                }
            }
            for (int j = k + 1; j < cols; ++j) {
                if (m[k][j] == T(0)) continue;
                T q = round_div(m[k][j], m[k][k]);
                for (int i = k; i < rows; ++i) m[i][j] = m[i][j] - q * m[i][k];
                if (m[k][j] != T(0)) {
                    for (int i = k; i < rows; ++i) std::swap(m[i][k], m[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility fix: fold in a row holding a non-multiple.
            for (int i = k + 1; i < rows && clean; ++i)
                for (int j = k + 1; j < cols && clean; ++j)
                    if (m[i][j] % m[k][k] != T(0)) {
                        for (int c = k; c < cols; ++c) m[k][c] = m[k][c] + m[i][c];
                        clean = false;
                    }
        }
        if (m[k][k] < T(0)) m[k][k] = -m[k][k];
        diag.push_back(m[k][k]);
        ++k;
    }
    return diag;
}

}  // namespace detail

/**
 * Smith normal form of an integer matrix: positive diagonal entries in
 * divisibility order plus the rank.  Exact arithmetic throughout; a fast
 * int64 path handles the common case and falls back to arbitrary
 * precision when any intermediate value would overflow.
 */
inline SmithResult smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.size();
    bool fits = true;
    for (const auto& row : m)
        for (const Integer& v : row)
            if (v > INT64_MAX / 4 || v < INT64_MIN / 4) {
                fits = false;
                break;
            }
    if (fits && rows > 0) {
        try {
            std::vector<std::vector<detail::CheckedI64>> w(rows);
            for (std::size_t i = 0; i < rows; ++i) {
                w[i].reserve(m[i].size());
                for (const Integer& v : m[i])
                    w[i].emplace_back(static_cast<std::int64_t>(v));
            }
            std::vector<detail::CheckedI64> diag = detail::snf_core(w);
            SmithResult res;
            res.rank = static_cast<int>(diag.size());
            for (auto d : diag) res.diagonal.emplace_back(d.v);
            return res;
        } catch (const detail::SnfOverflow&) {
            // fall through to the big-integer path
        }
    }
    IntMatrix w = m;
    std::vector<Integer> diag = detail::snf_core(w);
    SmithResult res;
    res.rank = static_cast<int>(diag.size());
    res.diagonal = std::move(diag);
    return res;
}

}  // namespace arrtop
