#pragma once

#include "polyrec/fanops.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace polyrec {

// Insertion-ordered JSON keeps serialized reports byte-deterministic.
using Json = nlohmann::ordered_json;

// All rational values travel as strings ("-3/4", "2"); floats are rejected
// on input so exactness can never silently degrade.

Json vector_json(const QVector& v);
QVector parse_vector(const Json& j, const char* what);

Json halfspace_json(const Halfspace& h);
Json polyhedron_json(const Polyhedron& p);

// {"dim": n, "cells": [...]}; each cell carries its H-representation and,
// on output, the generator representation as well.
Json complex_json(const PolyhedralComplex& c);

struct ParsedComplex {
    int dim = 0;
    std::vector<Polyhedron> cells;
};

// Reads "dim" and the H-representations under "cells"; generator blocks and
// unknown keys are ignored, so canonical output re-parses to an equal
// complex.  Malformed documents raise std::invalid_argument.
ParsedComplex parse_complex(const Json& j);

Json verdict_json(const ComplexVerdict& v, bool witnesses);
Json connectivity_json(const Connectivity& c);
Json mw_json(const MWReport& r, bool witnesses);
Json theorem14_json(const Theorem14Report& r, bool witnesses);
Json toric_json(const ToricDatum& d);

} // namespace polyrec
