#pragma once

#include "polyrec/polyhedron.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace polyrec {

// Cell container with canonical ordering.  Whether the cells actually form a
// polyhedral complex is reported separately by a ComplexVerdict, so invalid
// collections (a legitimate outcome of the recession construction) can still
// be carried around and serialized.
class PolyhedralComplex {
public:
    PolyhedralComplex(int dim, std::vector<Polyhedron> cells);

    int dim() const { return dim_; }
    const std::vector<Polyhedron>& cells() const { return cells_; }
    bool conic() const { return conic_; }
    bool strongly_convex() const { return strongly_convex_; }

private:
    int dim_;
    std::vector<Polyhedron> cells_;
    bool conic_ = true;
    bool strongly_convex_ = true;
};

// Finite union of nonempty polyhedra.
struct PolyhedralSet {
    int dim = 0;
    std::vector<Polyhedron> pieces;
};

struct ComplexVerdict {
    enum class Status { valid, missing_face, bad_pair };
    Status status = Status::valid;
    // bad_pair: cell_a, cell_b and witness = their intersection.
    // missing_face: cell_a and witness = the face absent from the collection.
    std::optional<Polyhedron> cell_a;
    std::optional<Polyhedron> cell_b;
    std::optional<Polyhedron> witness;

    bool valid() const { return status == Status::valid; }
};

struct ComplexResult {
    PolyhedralComplex complex;
    ComplexVerdict verdict;
};

// Closes the cells under faces, then checks that pairwise intersections are
// empty or common faces.  The reported violation is the lexicographically
// first one in canonical cell order.
ComplexResult build_complex(int dim, const std::vector<Polyhedron>& cells);

// Checks both complex axioms on the cells exactly as given (no closure).
ComplexVerdict verify_complex(const std::vector<Polyhedron>& cells);

// Maximal cells only; their union is the support |complex|.
PolyhedralSet support(const PolyhedralComplex& c);

struct Connectivity {
    bool connected = true;
    std::vector<std::vector<int>> components; // piece indices per component
};

// Pieces are adjacent iff they intersect; a finite union of closed polyhedra
// is topologically connected iff this intersection graph is connected.
Connectivity is_connected(const PolyhedralSet& e);

// True iff p is contained in the union of the pieces.  Recursive region
// subtraction: carve p along the facet hyperplanes of each piece in turn and
// recurse on the parts that stick out.
bool covers(const PolyhedralSet& e, const Polyhedron& p);

// A point of p outside every piece, or nullopt when covers(e, p).  Found by
// sign-vector enumeration over all piece constraints restricted to p.
std::optional<QVector> uncovered_point(const PolyhedralSet& e, const Polyhedron& p);

// Support equals the whole space — or, for conic complexes, the halfspace
// with nonnegative last coordinate.
bool is_complete(const PolyhedralComplex& c);

// Membership test u in rec_p(E): the ray p + lambda*u stays in the union for
// all lambda >= 0.  Exact interval sweep; p must lie in E.
bool ray_in_set(const PolyhedralSet& e, const QVector& p, const QVector& u);

// Membership test u in rec(E) = the directions preserved from every point:
// for each piece, piece + cone(u) must be covered by E.
bool global_recession_contains(const PolyhedralSet& e, const QVector& u);

struct MWReport {
    bool holds = false;
    std::optional<Polyhedron> sigma;
    std::optional<std::vector<Polyhedron>> delta_pieces;
    // (p, u) with u in rec_p(E) but u not in rec(E).
    std::optional<std::pair<QVector, QVector>> failure_witness;
};

// Decides whether |complex| = (finite union of polytopes) + (one cone).
// tau = conical hull of all maximal-cell recession generators is the only
// candidate cone; the condition holds iff tau is covered by the recession
// cones and every polytope-part + tau stays inside the support.
// The caller must pass a valid complex.
MWReport check_minkowski_weyl(const PolyhedralComplex& pi);

// The cone rec(|complex|) when the Minkowski-Weyl condition holds; nullopt
// otherwise (membership queries via global_recession_contains still work).
std::optional<Polyhedron> recession_of_support(const PolyhedralComplex& pi);

} // namespace polyrec
