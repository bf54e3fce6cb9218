#pragma once

#include "polyrec/linalg.hpp"

#include <optional>
#include <vector>

namespace polyrec {

// Closed halfspace {u : <normal,u> >= offset}; doubles as the equality
// {u : <normal,u> = offset} in the `equalities` list of an HRep.
struct Halfspace {
    QVector normal;
    Rational offset;
};

int compare(const Halfspace& a, const Halfspace& b);

inline bool operator==(const Halfspace& a, const Halfspace& b) { return compare(a, b) == 0; }

// Canonical representative of the hyperplane {u : <normal,u> = offset}:
// primitive integer coefficients, first nonzero entry of the normal positive.
// Throws std::invalid_argument on a zero normal.
Halfspace canonical_hyperplane(const QVector& normal, const Rational& offset);

struct HRep {
    int dim = 0;
    std::vector<Halfspace> inequalities;
    std::vector<Halfspace> equalities;
};

// Generator form: the point set is conv(vertices) + cone(rays) + span(lines).
// In canonical form: lines are a reduced-echelon basis of the lineality
// space, rays are primitive integer vectors reduced modulo the line span,
// vertices are reduced modulo the line span, and all three lists are sorted.
struct VRep {
    int dim = 0;
    QMatrix vertices;
    QMatrix rays;
    QMatrix lines;
};

// Convex rational polyhedron with both representations kept canonical and
// minimal, so structural equality coincides with equality of point sets.
class Polyhedron {
public:
    static Polyhedron from_hrep(const HRep& h);
    static Polyhedron from_vrep(const VRep& v);
    static Polyhedron empty(int dim);
    static Polyhedron whole_space(int dim);
    static Polyhedron point(const QVector& p);

    int ambient_dim() const { return hrep_.dim; }
    bool is_empty() const { return empty_; }
    const HRep& hrep() const { return hrep_; }
    const VRep& vrep() const { return vrep_; }

    // Affine dimension; -1 for the empty polyhedron.
    int dim() const;

    bool contains_point(const QVector& p) const;
    // Set containment: every generator of `other` satisfies this HRep.
    bool contains(const Polyhedron& other) const;
    bool equals(const Polyhedron& other) const;
    // Total order on canonical forms (tie broken by ambient dimension and
    // emptiness); used for deterministic sorting and dedup.
    int compare(const Polyhedron& other) const;

    // Vertex set == {origin}.  Cones are ordinary polyhedra here.
    bool is_cone() const;
    bool is_strongly_convex() const;
    QMatrix lineality_space() const;

private:
    Polyhedron() = default;
    HRep hrep_;
    VRep vrep_;
    bool empty_ = true;
};

inline bool operator<(const Polyhedron& a, const Polyhedron& b) { return a.compare(b) < 0; }
inline bool operator==(const Polyhedron& a, const Polyhedron& b) { return a.compare(b) == 0; }

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b);

// rec(P) = {u : P + u is contained in P}; requires P nonempty.
Polyhedron recession_cone(const Polyhedron& p);

// Cone over P x {1} in dimension n+1 (closure taken, so the recession cone
// appears as the slice at height 0).
Polyhedron lift_cone(const Polyhedron& p);

// The face of P minimizing the linear functional x.  Throws if x is
// unbounded below on P (the face would be empty).
Polyhedron face_where_minimized(const Polyhedron& p, const QVector& x);

// The facets (codimension-one faces) of P, canonically sorted.  Each
// inequality of the canonical minimal HRep defines exactly one.
std::vector<Polyhedron> facets(const Polyhedron& p);

// All nonempty faces of P, including P itself, canonically sorted.
std::vector<Polyhedron> faces(const Polyhedron& p);

bool is_face_of(const Polyhedron& f, const Polyhedron& p);

// A point of the relative interior: vertex barycenter plus the sum of the
// ray generators.
QVector relative_interior_point(const Polyhedron& p);

Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b);

// Locating a recession direction: several faces F can satisfy
// v in ri(rec(F)), but rec(F) is the same cone for all of them.
struct RecessionFace {
    Polyhedron face;      // one witness face
    Polyhedron recession; // rec(face), unique across all witnesses
};

// Requires v in rec(P).
RecessionFace locate_recession_face(const Polyhedron& p, const QVector& v);

// {u : (u,h) in c} for a polyhedron c in dimension n+1.
Polyhedron affine_slice(const Polyhedron& c, const Rational& h);

// cone(rays) + span(lines), with vertex at the origin.
Polyhedron conical_hull(int dim, const QMatrix& rays, const QMatrix& lines = {});

// Convex hull of the vertices of p (the polytope part of the
// Minkowski-Weyl decomposition p = polytope_part + recession_cone).
Polyhedron polytope_part(const Polyhedron& p);

} // namespace polyrec
