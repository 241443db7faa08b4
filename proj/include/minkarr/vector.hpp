#pragma once

#include "minkarr/scalar.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace minkarr {

// Dense coordinate vector; arithmetic requires equal dimensions.
template <Scalar S>
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : coords_(dim, S(0)) {}
    Vector(std::initializer_list<S> init) : coords_(init) {}
    explicit Vector(std::vector<S> coords) : coords_(std::move(coords)) {}

    static Vector from_ints(std::initializer_list<long> values)
    {
        Vector v;
        for (long x : values) v.coords_.push_back(num::from_int<S>(x));
        return v;
    }

    static Vector unit(std::size_t dim, std::size_t axis)
    {
        Vector v(dim);
        v[axis] = S(1);
        return v;
    }

    std::size_t dim() const { return coords_.size(); }
    S& operator[](std::size_t i) { return coords_[i]; }
    const S& operator[](std::size_t i) const { return coords_[i]; }
    std::span<const S> coords() const { return coords_; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    Vector& operator+=(const Vector& o)
    {
        check_dim(o);
        for (std::size_t i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    Vector& operator-=(const Vector& o)
    {
        check_dim(o);
        for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    Vector& operator*=(const S& t)
    {
        for (auto& c : coords_) c *= t;
        return *this;
    }
    Vector& operator/=(const S& t)
    {
        for (auto& c : coords_) c /= t;
        return *this;
    }

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(Vector a, const S& t) { return a *= t; }
    friend Vector operator*(const S& t, Vector a) { return a *= t; }
    friend Vector operator/(Vector a, const S& t) { return a /= t; }
    friend Vector operator-(Vector a)
    {
        for (auto& c : a.coords_) c = -c;
        return a;
    }

    S dot(const Vector& o) const
    {
        check_dim(o);
        S acc(0);
        for (std::size_t i = 0; i < dim(); ++i) acc += coords_[i] * o.coords_[i];
        return acc;
    }

    S norm2() const { return dot(*this); }

    bool is_zero() const
    {
        for (const auto& c : coords_)
            if (!num::is_zero(c)) return false;
        return true;
    }

    // Tolerance-aware equality (exact in rational mode).
    bool approx_equal(const Vector& o) const
    {
        if (dim() != o.dim()) return false;
        for (std::size_t i = 0; i < dim(); ++i)
            if (!num::eq(coords_[i], o.coords_[i])) return false;
        return true;
    }

    friend bool operator==(const Vector& a, const Vector& b) { return a.coords_ == b.coords_; }

    // Lexicographic order on coordinates, used for deterministic tie-breaks.
    friend bool lex_less(const Vector& a, const Vector& b)
    {
        for (std::size_t i = 0; i < a.dim() && i < b.dim(); ++i) {
            if (num::lt(a[i], b[i])) return true;
            if (num::gt(a[i], b[i])) return false;
        }
        return a.dim() < b.dim();
    }

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < dim(); ++i) {
            if (i) s += ", ";
            s += num::to_string(coords_[i]);
        }
        return s + ")";
    }

private:
    void check_dim(const Vector& o) const
    {
        if (o.dim() != dim())
            throw dimension_error("vector dimension mismatch: " + std::to_string(dim()) + " vs " +
                                  std::to_string(o.dim()));
    }

    std::vector<S> coords_;
};

template <Scalar S>
Vector<S> append(const Vector<S>& v, const S& extra)
{
    std::vector<S> c(v.begin(), v.end());
    c.push_back(extra);
    return Vector<S>(std::move(c));
}

template <Scalar S>
Vector<S> cross(const Vector<S>& a, const Vector<S>& b)
{
    if (a.dim() != 3 || b.dim() != 3) throw dimension_error("cross product needs dimension 3");
    return Vector<S>{S(a[1] * b[2] - a[2] * b[1]), S(a[2] * b[0] - a[0] * b[2]),
                     S(a[0] * b[1] - a[1] * b[0])};
}

namespace linalg {

// Row-reduces `m` in place, pivoting on the first `cols` columns; returns the pivot columns.
template <Scalar S>
std::vector<std::size_t> reduce(std::vector<std::vector<S>>& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t best = r;
        bool found = false;
        for (std::size_t i = r; i < m.size(); ++i) {
            if (num::is_zero(m[i][c])) continue;
            if (!found) {
                best = i;
                found = true;
            }
            if constexpr (!scalar_traits<S>::exact) {
                if (std::fabs(m[i][c]) > std::fabs(m[best][c])) best = i;
            } else {
                break;
            }
        }
        if (!found) continue;
        std::swap(m[r], m[best]);
        const S inv = S(1) / m[r][c];
        for (std::size_t k = c; k < m[r].size(); ++k) m[r][k] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || num::is_zero(m[i][c])) continue;
            const S f = m[i][c];
            for (std::size_t k = c; k < m[i].size(); ++k) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <Scalar S>
std::size_t rank(std::span<const Vector<S>> vs)
{
    if (vs.empty()) return 0;
    const std::size_t cols = vs.front().dim();
    std::vector<std::vector<S>> m;
    for (const auto& v : vs) m.emplace_back(v.begin(), v.end());
    return reduce(m, cols).size();
}

template <Scalar S>
std::size_t rank(const std::vector<Vector<S>>& vs)
{
    return rank(std::span<const Vector<S>>(vs));
}

// Basis of {x : r·x = 0 for every row r}.
template <Scalar S>
std::vector<Vector<S>> nullspace(const std::vector<Vector<S>>& rows, std::size_t cols)
{
    std::vector<std::vector<S>> m;
    for (const auto& v : rows) m.emplace_back(v.begin(), v.end());
    const auto pivots = reduce(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector<S>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector<S> x(cols);
        x[free] = S(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

// Solves the square system A x = b; nullopt when A is singular.
template <Scalar S>
std::optional<Vector<S>> solve(const std::vector<Vector<S>>& a_rows, const Vector<S>& b)
{
    const std::size_t n = a_rows.size();
    std::vector<std::vector<S>> m;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<S> row(a_rows[i].begin(), a_rows[i].end());
        row.push_back(b[i]);
        m.push_back(std::move(row));
    }
    const auto pivots = reduce(m, n);
    if (pivots.size() != n) return std::nullopt;
    Vector<S> x(n);
    for (std::size_t r = 0; r < n; ++r) x[pivots[r]] = m[r][n];
    return x;
}

template <Scalar S>
S determinant(std::vector<Vector<S>> rows)
{
    const std::size_t n = rows.size();
    S det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && num::is_zero(rows[p][c])) ++p;
        if (p == n) return S(0);
        if (p != c) {
            std::swap(rows[p], rows[c]);
            det = -det;
        }
        det *= rows[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (num::is_zero(rows[i][c])) continue;
            const S f = rows[i][c] / rows[c][c];
            for (std::size_t k = c; k < n; ++k) rows[i][k] -= f * rows[c][k];
        }
    }
    return det;
}

}  // namespace linalg
}  // namespace minkarr
