#pragma once

// Internal double-description engine working on homogeneous cones.
// The polyhedron module drives it through homogenization and polarity;
// nothing here is part of the installed API.

#include "polyrec/linalg.hpp"

namespace polyrec::dd {

// Canonical generator form of a cone: `lines` is a reduced-echelon basis of
// the lineality space (rows primitive), `rays` are the extreme rays modulo
// lineality, reduced against the line basis, primitive, and sorted.
struct Generators {
    QMatrix rays;
    QMatrix lines;
};

// Generators of {x : a.x >= 0 for rows a of ineq, c.x = 0 for rows c of eq}.
Generators cone_from_rows(const QMatrix& ineq, const QMatrix& eq, int dim);

// Minimal homogeneous description of cone(rays) + span(lines):
// ineq rows are the facet normals (extreme rays of the polar cone), eq rows
// a reduced-echelon basis of functionals vanishing on the cone.
struct Rows {
    QMatrix ineq;
    QMatrix eq;
};
Rows cone_to_rows(const QMatrix& rays, const QMatrix& lines, int dim);

} // namespace polyrec::dd
