#include "polyrec/linalg.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <cassert>
#include <stdexcept>

namespace polyrec {

Rational dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVector scale(const QVector& v, const Rational& c) {
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
    return r;
}

QVector add(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVector sub(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool is_zero(const QVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Rref rref(const QMatrix& m) {
    QMatrix a = m;
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("rref: ragged matrix");

    Rref out;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        // Normalize pivot to 1, then clear the column everywhere else.
        Rational inv = Rational(1) / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rows.assign(a.begin(), a.begin() + r);
    return out;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
    const int rows = static_cast<int>(a.size());
    if (rows != static_cast<int>(b.size()))
        throw std::invalid_argument("solve: dimension mismatch");
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;

    QMatrix aug(rows);
    for (int i = 0; i < rows; ++i) {
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    Rref r = rref(aug);
    QVector x(cols, Rational(0));
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        if (r.pivots[i] == cols) return std::nullopt; // 0 = 1 row
        x[r.pivots[i]] = r.rows[i].back();
    }
    return x;
}

QMatrix kernel_basis(const QMatrix& a, int cols) {
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("kernel_basis: dimension mismatch");
    Rref r = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int p : r.pivots) is_pivot[p] = true;

    QMatrix basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVector v(cols, Rational(0));
        v[c] = 1;
        for (std::size_t i = 0; i < r.rows.size(); ++i)
            v[r.pivots[i]] = -r.rows[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

QVector reduce_mod(const Rref& basis, QVector v) {
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        const Rational& c = v[basis.pivots[i]];
        if (c == 0) continue;
        Rational f = c; // pivot entries are 1 in rref
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis.rows[i][j];
    }
    return v;
}

QVector primitive(QVector v) {
    Integer lcm_den = 1;
    for (const auto& x : v)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    Integer g = 0;
    for (auto& x : v) {
        x *= Rational(lcm_den);
        g = boost::multiprecision::gcd(g, numerator(x));
    }
    if (g == 0) return v; // zero vector
    for (auto& x : v) x /= Rational(g);
    return v;
}

int compare(const QVector& a, const QVector& b) {
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

int compare(const QMatrix& a, const QMatrix& b) {
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (int c = compare(a[i], b[i]); c != 0) return c;
    return 0;
}

} // namespace polyrec
