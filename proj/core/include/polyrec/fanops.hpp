#pragma once

#include "polyrec/complex.hpp"

namespace polyrec {

// Report of the full pipeline: hypotheses (connected support, Minkowski-Weyl
// condition), both derived complexes with verdicts, the support identity
// |rec(complex)| = rec(|complex|), and summary flags.  When both hypotheses
// hold, all verdicts must be valid and the identity must hold; anything else
// is an implementation bug, and the test suite treats it as such.
struct Theorem14Report {
    bool connected = false;
    MWReport mw;
    ComplexResult rec_complex;
    ComplexResult cone_complex;
    bool support_identity_rec = false;
    bool rational = true;
    bool fans = false;

    bool hypotheses_hold() const { return connected && mw.holds; }
    bool conclusions_hold() const {
        return rec_complex.verdict.valid() && cone_complex.verdict.valid() &&
               support_identity_rec;
    }
};

// Deduplicated recession cones of every cell; the verdict is computed on the
// cones exactly as produced (no face closure is needed: recession commutes
// with taking faces, which the facet-presence check re-asserts).
ComplexResult recession_complex(const PolyhedralComplex& pi);

// Lifted cones of every cell plus every recession cone embedded at height 0,
// in dimension n+1.
ComplexResult cone_complex(const PolyhedralComplex& pi);

Theorem14Report theorem14_pipeline(const PolyhedralComplex& pi);

// Height-1 slice of a conic complex contained in {last coordinate >= 0},
// closed under faces.  A conic complex with no cell meeting the slice yields
// the empty complex.
ComplexResult aff(const PolyhedralComplex& sigma);

// For a complete complex: slicing inverts lifting.  Conic complexes inside
// {last coordinate >= 0} are treated as lifted and checked the other way
// round.  Throws if the input is not complete.
bool roundtrip_check(const PolyhedralComplex& c);

bool is_fan(const std::vector<Polyhedron>& cells);

// Complete complex of all closed sign regions of the hyperplanes
// {normal * u = offset} and their faces.
PolyhedralComplex arrangement_complex(const std::vector<Halfspace>& hyperplanes, int dim);

struct SubdivisionResult {
    PolyhedralComplex refined;   // same support, refines the input cells
    PolyhedralComplex extension; // complete complex containing `refined`
};

// Subdivide by the arrangement of every defining hyperplane of every cell.
// The arrangement is complete and face-closed, so the refined complex is a
// subcomplex of a complete complex by construction.
SubdivisionResult extendable_subdivision(const PolyhedralComplex& pi);

struct ToricCone {
    QMatrix rays;              // primitive integer generators, gcd 1 per ray
    std::vector<int> faces_of; // indices of the cones this one is a face of
};

struct ToricDatum {
    int dim = 0;
    std::vector<ToricCone> cones;
};

// Classification datum of a complete, strongly convex rational complex: the
// lifted cone complex with primitive ray generators.  Each precondition is
// checked and the refusal names the failing one.
ToricDatum toric_datum(const PolyhedralComplex& pi);

} // namespace polyrec
