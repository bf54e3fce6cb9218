#pragma once

#include "polyrec/rational.hpp"

#include <optional>
#include <vector>

namespace polyrec {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

Rational dot(const QVector& a, const QVector& b);
QVector scale(const QVector& v, const Rational& c);
QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
bool is_zero(const QVector& v);

// Result of Gauss-Jordan elimination.
struct Rref {
    QMatrix rows;            // nonzero rows in reduced row echelon form
    std::vector<int> pivots; // pivot column of rows[i]
};

// Reduced row echelon form with full normalization (pivot entries 1, pivots
// cleared above and below).  Zero rows are dropped.
Rref rref(const QMatrix& m);

inline int rank(const QMatrix& m) { return static_cast<int>(rref(m).rows.size()); }

// Solve A x = b.  Returns one solution, or nullopt if the system is
// inconsistent.  (Underdetermined systems yield the solution with free
// variables set to zero.)
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

// Basis of { x : A x = 0 }, one vector per free column.  `cols` is the
// ambient dimension, needed when A has no rows.
QMatrix kernel_basis(const QMatrix& a, int cols);

// Reduce v modulo the row space of an rref basis: subtract multiples of the
// basis rows so the pivot coordinates of the result vanish.
QVector reduce_mod(const Rref& basis, QVector v);

// Scale a nonzero rational vector to the unique integer vector with the same
// direction and content gcd 1.  Zero vectors pass through unchanged.
QVector primitive(QVector v);

// Lexicographic comparison, used for canonical sorting of generators and
// constraint rows.
int compare(const QVector& a, const QVector& b);
int compare(const QMatrix& a, const QMatrix& b);

} // namespace polyrec
