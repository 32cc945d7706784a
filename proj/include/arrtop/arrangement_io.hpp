#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "arrtop/arrangement.hpp"
#include "arrtop/errors.hpp"
#include "arrtop/rational.hpp"

namespace arrtop {

namespace io_detail {

inline Rational rational_field(const nlohmann::json& j, const std::string& field) {
    if (j.is_string()) return parse_rational(j.get<std::string>(), field);
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError(field + ": expected a rational string such as \"3/4\"");
}

inline QVector vector_field(const nlohmann::json& j, const std::string& field, int n) {
    if (!j.is_array())
        throw ParseError(field + ": expected an array of " + std::to_string(n) + " rationals");
    if (static_cast<int>(j.size()) != n)
        throw ParseError(field + ": expected " + std::to_string(n) + " entries, got " +
                         std::to_string(j.size()));
    QVector v(n);
    for (int i = 0; i < n; ++i)
        v[i] = rational_field(j[i], field + "[" + std::to_string(i) + "]");
    return v;
}

inline QMatrix matrix_field(const nlohmann::json& j, const std::string& field, int n) {
    if (!j.is_array()) throw ParseError(field + ": expected an array of rows");
    QMatrix m;
    m.reserve(j.size());
    for (std::size_t r = 0; r < j.size(); ++r)
        m.push_back(vector_field(j[r], field + "[" + std::to_string(r) + "]", n));
    return m;
}

/// Basis of {v : Dv = 0} via row reduction of D; rows of D are directions.
inline QMatrix null_space_basis(QMatrix d, int n) {
    int pivot_row = 0;
    std::vector<int> pivot_col_of_row;
    for (int col = 0; col < n && pivot_row < static_cast<int>(d.size()); ++col) {
        int sel = -1;
        for (int r = pivot_row; r < static_cast<int>(d.size()); ++r)
            if (d[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(d[sel], d[pivot_row]);
        const Rational inv = d[pivot_row][col];
        for (int c = 0; c < n; ++c) d[pivot_row][c] /= inv;
        for (int r = 0; r < static_cast<int>(d.size()); ++r) {
            if (r == pivot_row || d[r][col] == 0) continue;
            const Rational f = d[r][col];
            for (int c = 0; c < n; ++c) d[r][c] -= f * d[pivot_row][c];
        }
        pivot_col_of_row.push_back(col);
        ++pivot_row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;
    QMatrix basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        QVector v(n, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[pivot_col_of_row[r]] = -d[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline AffineSubspace subspace_field(const nlohmann::json& j, const std::string& field, int n) {
    if (!j.is_object()) throw ParseError(field + ": expected an object");
    if ((j.contains("equations") || j.contains("rhs")) &&
        (j.contains("point") || j.contains("directions")))
        throw ParseError(field + ": give equations/rhs or point/directions, not both");
    std::optional<AffineSubspace> s;
    if (j.contains("equations") || j.contains("rhs")) {
        if (!j.contains("equations") || !j.contains("rhs"))
            throw ParseError(field + ": equations and rhs must appear together");
        const QMatrix eqs = matrix_field(j.at("equations"), field + ".equations", n);
        const nlohmann::json& rj = j.at("rhs");
        if (!rj.is_array() || rj.size() != eqs.size())
            throw ParseError(field + ".rhs: expected one entry per equation");
        QVector rhs(eqs.size());
        for (std::size_t i = 0; i < eqs.size(); ++i)
            rhs[i] = rational_field(rj[i], field + ".rhs[" + std::to_string(i) + "]");
        s = AffineSubspace::canonicalize(eqs, rhs, n);
    } else if (j.contains("point") || j.contains("directions")) {
        if (!j.contains("point") || !j.contains("directions"))
            throw ParseError(field + ": point and directions must appear together");
        const QVector point = vector_field(j.at("point"), field + ".point", n);
        const QMatrix dirs = matrix_field(j.at("directions"), field + ".directions", n);
        const QMatrix rows = null_space_basis(dirs, n);
        QVector rhs(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Rational dot = 0;
            for (int c = 0; c < n; ++c) dot += rows[r][c] * point[c];
            rhs[r] = dot;
        }
        s = AffineSubspace::canonicalize(rows, rhs, n);
    } else {
        throw ParseError(field + ": expected equations/rhs or point/directions");
    }
    if (!s) throw ValidationError(field + ": the equation system has no solution");
    return *s;
}

}  // namespace io_detail

/// Builds an Arrangement from the parsed JSON document.
inline Arrangement parse_arrangement(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("top level: expected an object");
    if (!doc.contains("ambient_dim") || !doc.at("ambient_dim").is_number_integer())
        throw ParseError("ambient_dim: expected an integer");
    const int n = doc.at("ambient_dim").get<int>();
    if (!doc.contains("subspaces") || !doc.at("subspaces").is_array())
        throw ParseError("subspaces: expected an array");
    std::vector<AffineSubspace> subs;
    const nlohmann::json& arr = doc.at("subspaces");
    subs.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        subs.push_back(
            io_detail::subspace_field(arr[i], "subspaces[" + std::to_string(i) + "]", n));
    return Arrangement::validate(std::move(subs), n);
}

inline Arrangement load_arrangement(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return parse_arrangement(doc);
}

}  // namespace arrtop
