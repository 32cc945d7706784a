#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arrtop/errors.hpp"
#include "arrtop/rational.hpp"

namespace arrtop {

/**
 * A nonempty affine subspace of Q^n, stored as a linear system in reduced
 * row echelon form: unit pivots, strictly increasing pivot columns, rows
 * linearly independent.  The representation is unique, so two values
 * describe the same point set iff their fields compare equal.
 *
 * Instances are immutable; construct through canonicalize() or intersect().
 * The empty set is not an AffineSubspace: operations that can produce it
 * return std::nullopt instead.
 */
class AffineSubspace {
  public:
    /**
     * Reduce a raw system (equations * x = rhs) to canonical form.
     * Returns std::nullopt when the system is inconsistent.
     */
    static std::optional<AffineSubspace> canonicalize(QMatrix equations, QVector rhs,
                                                      int ambient_dim) {
        if (ambient_dim < 0)
            throw DimensionMismatch("ambient dimension must be nonnegative");
        if (equations.size() != rhs.size())
            throw DimensionMismatch("equation and rhs counts differ");
        for (const auto& row : equations)
            if (static_cast<int>(row.size()) != ambient_dim)
                throw DimensionMismatch("equation row length differs from ambient dimension");

        const int n = ambient_dim;
        const int m = static_cast<int>(equations.size());
        int pivot_row = 0;
        for (int col = 0; col < n && pivot_row < m; ++col) {
            int sel = -1;
            for (int r = pivot_row; r < m; ++r) {
                if (equations[r][col] != 0) {
                    sel = r;
                    break;
                }
            }
            if (sel < 0) continue;
            std::swap(equations[sel], equations[pivot_row]);
            std::swap(rhs[sel], rhs[pivot_row]);
            const Rational inv = equations[pivot_row][col];
            for (int c = col; c < n; ++c) equations[pivot_row][c] /= inv;
            rhs[pivot_row] /= inv;
            for (int r = 0; r < m; ++r) {
                if (r == pivot_row || equations[r][col] == 0) continue;
                const Rational f = equations[r][col];
                for (int c = col; c < n; ++c) equations[r][c] -= f * equations[pivot_row][c];
                rhs[r] -= f * rhs[pivot_row];
            }
            ++pivot_row;
        }
        // Rows past pivot_row are all-zero on the left; a nonzero rhs there
        // means 0 = c with c != 0.
        for (int r = pivot_row; r < m; ++r)
            if (rhs[r] != 0) return std::nullopt;
        equations.resize(pivot_row);
        rhs.resize(pivot_row);
        return AffineSubspace(n, std::move(equations), std::move(rhs));
    }

    /// The whole space Q^n (zero equations).
    static AffineSubspace full_space(int ambient_dim) {
        auto s = canonicalize({}, {}, ambient_dim);
        return *s;
    }

    /// Canonical form of S ∩ T, or std::nullopt when they are disjoint.
    static std::optional<AffineSubspace> intersect(const AffineSubspace& s,
                                                   const AffineSubspace& t) {
        if (s.ambient_dim_ != t.ambient_dim_)
            throw DimensionMismatch("intersect: ambient dimensions differ");
        QMatrix rows = s.rows_;
        rows.insert(rows.end(), t.rows_.begin(), t.rows_.end());
        QVector rhs = s.rhs_;
        rhs.insert(rhs.end(), t.rhs_.begin(), t.rhs_.end());
        return canonicalize(std::move(rows), std::move(rhs), s.ambient_dim_);
    }

    /// True iff other ⊆ *this as point sets.
    bool contains(const AffineSubspace& other) const {
        if (ambient_dim_ != other.ambient_dim_)
            throw DimensionMismatch("contains: ambient dimensions differ");
        // Every equation of *this must reduce to 0 = 0 against other's RREF;
        // the RREF rows span all affine functionals vanishing on `other`.
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            QVector row = rows_[i];
            Rational b = rhs_[i];
            for (std::size_t j = 0; j < other.rows_.size(); ++j) {
                const int p = other.pivot_cols_[j];
                if (row[p] == 0) continue;
                const Rational f = row[p];
                for (int c = 0; c < ambient_dim_; ++c) row[c] -= f * other.rows_[j][c];
                b -= f * other.rhs_[j];
            }
            for (const Rational& v : row)
                if (v != 0) return false;
            if (b != 0) return false;
        }
        return true;
    }

    int ambient_dim() const { return ambient_dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    int dimension() const { return ambient_dim_ - rank(); }
    const QMatrix& equations() const { return rows_; }
    const QVector& rhs() const { return rhs_; }

    /// A point of the subspace: free variables 0, pivot variables from rhs.
    QVector point() const {
        QVector p(ambient_dim_, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) p[pivot_cols_[i]] = rhs_[i];
        return p;
    }

    /// Basis of the direction space, one vector per free column.
    QMatrix direction_basis() const {
        QMatrix basis;
        std::vector<bool> is_pivot(ambient_dim_, false);
        for (int p : pivot_cols_) is_pivot[p] = true;
        for (int f = 0; f < ambient_dim_; ++f) {
            if (is_pivot[f]) continue;
            QVector v(ambient_dim_, Rational(0));
            v[f] = 1;
            for (std::size_t i = 0; i < rows_.size(); ++i) v[pivot_cols_[i]] = -rows_[i][f];
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Evaluate all defining equations at p.
    bool satisfies(const QVector& p) const {
        if (static_cast<int>(p.size()) != ambient_dim_)
            throw DimensionMismatch("satisfies: point dimension differs");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Rational acc = 0;
            for (int c = 0; c < ambient_dim_; ++c) acc += rows_[i][c] * p[c];
            if (acc != rhs_[i]) return false;
        }
        return true;
    }

    /// Canonical text form; equal strings iff equal subspaces.
    std::string key() const {
        std::ostringstream os;
        os << ambient_dim_ << ';';
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (const Rational& v : rows_[i]) os << v << ',';
            os << '=' << rhs_[i] << ';';
        }
        return os.str();
    }

    bool operator==(const AffineSubspace& other) const {
        return ambient_dim_ == other.ambient_dim_ && rows_ == other.rows_ && rhs_ == other.rhs_;
    }
    bool operator!=(const AffineSubspace& other) const { return !(*this == other); }

  private:
    AffineSubspace(int n, QMatrix rows, QVector rhs)
        : ambient_dim_(n), rows_(std::move(rows)), rhs_(std::move(rhs)) {
        pivot_cols_.reserve(rows_.size());
        for (const auto& row : rows_) {
            int c = 0;
            while (row[c] == 0) ++c;
            pivot_cols_.push_back(c);
        }
    }

    int ambient_dim_;
    QMatrix rows_;
    QVector rhs_;
    std::vector<int> pivot_cols_;
};

}  // namespace arrtop
