#include "polyrec/json_io.hpp"

#include <stdexcept>
#include <utility>

namespace polyrec {

namespace {

std::string context(const char* what) {
    return std::string(what);
}

Rational parse_entry(const Json& j, const char* what) {
    if (!j.is_string())
        throw std::invalid_argument(context(what) + ": rational values must be strings");
    return parse_rational(j.get<std::string>());
}

Halfspace parse_halfspace(const Json& j, const char* what) {
    if (!j.is_object())
        throw std::invalid_argument(context(what) + ": constraint must be an object");
    if (!j.contains("normal"))
        throw std::invalid_argument(context(what) + ": constraint missing \"normal\"");
    Halfspace h;
    h.normal = parse_vector(j.at("normal"), what);
    h.offset = j.contains("offset") ? parse_entry(j.at("offset"), what) : Rational(0);
    return h;
}

} // namespace

Json vector_json(const QVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rational_to_string(x));
    return out;
}

QVector parse_vector(const Json& j, const char* what) {
    if (!j.is_array())
        throw std::invalid_argument(context(what) + ": vector must be an array");
    QVector v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(parse_entry(x, what));
    return v;
}

Json halfspace_json(const Halfspace& h) {
    Json out;
    out["normal"] = vector_json(h.normal);
    out["offset"] = rational_to_string(h.offset);
    return out;
}

Json polyhedron_json(const Polyhedron& p) {
    Json out;
    if (p.is_empty()) {
        out["empty"] = true;
        return out;
    }
    Json ineq = Json::array();
    for (const auto& h : p.hrep().inequalities) ineq.push_back(halfspace_json(h));
    Json eq = Json::array();
    for (const auto& h : p.hrep().equalities) eq.push_back(halfspace_json(h));
    out["inequalities"] = std::move(ineq);
    out["equalities"] = std::move(eq);
    Json verts = Json::array(), rays = Json::array(), lines = Json::array();
    for (const auto& v : p.vrep().vertices) verts.push_back(vector_json(v));
    for (const auto& r : p.vrep().rays) rays.push_back(vector_json(r));
    for (const auto& l : p.vrep().lines) lines.push_back(vector_json(l));
    out["vertices"] = std::move(verts);
    out["rays"] = std::move(rays);
    out["lines"] = std::move(lines);
    return out;
}

Json complex_json(const PolyhedralComplex& c) {
    Json out;
    out["dim"] = c.dim();
    Json cells = Json::array();
    for (const auto& cell : c.cells()) cells.push_back(polyhedron_json(cell));
    out["cells"] = std::move(cells);
    return out;
}

ParsedComplex parse_complex(const Json& j) {
    if (!j.is_object())
        throw std::invalid_argument("complex: document must be an object");
    if (!j.contains("dim") || !j.at("dim").is_number_integer())
        throw std::invalid_argument("complex: missing integer \"dim\"");
    ParsedComplex out;
    out.dim = j.at("dim").get<int>();
    if (out.dim < 1)
        throw std::invalid_argument("complex: \"dim\" must be at least 1");
    if (!j.contains("cells") || !j.at("cells").is_array())
        throw std::invalid_argument("complex: missing \"cells\" array");
    for (const auto& cj : j.at("cells")) {
        if (!cj.is_object())
            throw std::invalid_argument("complex: cell must be an object");
        HRep h;
        h.dim = out.dim;
        if (cj.contains("inequalities"))
            for (const auto& ij : cj.at("inequalities")) {
                Halfspace c = parse_halfspace(ij, "inequality");
                if (static_cast<int>(c.normal.size()) != out.dim)
                    throw std::invalid_argument("complex: inequality dimension mismatch");
                h.inequalities.push_back(std::move(c));
            }
        if (cj.contains("equalities"))
            for (const auto& ej : cj.at("equalities")) {
                Halfspace c = parse_halfspace(ej, "equality");
                if (static_cast<int>(c.normal.size()) != out.dim)
                    throw std::invalid_argument("complex: equality dimension mismatch");
                h.equalities.push_back(std::move(c));
            }
        Polyhedron cell = Polyhedron::from_hrep(h);
        if (cell.is_empty())
            throw std::invalid_argument("complex: cell is empty");
        out.cells.push_back(std::move(cell));
    }
    return out;
}

Json verdict_json(const ComplexVerdict& v, bool witnesses) {
    Json out;
    switch (v.status) {
    case ComplexVerdict::Status::valid: out["status"] = "valid"; break;
    case ComplexVerdict::Status::missing_face: out["status"] = "missing_face"; break;
    case ComplexVerdict::Status::bad_pair: out["status"] = "bad_pair"; break;
    }
    if (witnesses) {
        if (v.cell_a) out["cell_a"] = polyhedron_json(*v.cell_a);
        if (v.cell_b) out["cell_b"] = polyhedron_json(*v.cell_b);
        if (v.witness) out["witness"] = polyhedron_json(*v.witness);
    }
    return out;
}

Json connectivity_json(const Connectivity& c) {
    Json out;
    out["connected"] = c.connected;
    Json comps = Json::array();
    for (const auto& comp : c.components) comps.push_back(comp);
    out["components"] = std::move(comps);
    return out;
}

Json mw_json(const MWReport& r, bool witnesses) {
    Json out;
    out["holds"] = r.holds;
    if (r.sigma) out["sigma"] = polyhedron_json(*r.sigma);
    if (r.delta_pieces) {
        Json deltas = Json::array();
        for (const auto& d : *r.delta_pieces) deltas.push_back(polyhedron_json(d));
        out["delta_pieces"] = std::move(deltas);
    }
    if (witnesses && r.failure_witness) {
        Json w;
        w["point"] = vector_json(r.failure_witness->first);
        w["direction"] = vector_json(r.failure_witness->second);
        out["failure_witness"] = std::move(w);
    }
    return out;
}

namespace {

Json complex_result_json(const ComplexResult& r, bool witnesses) {
    Json out = complex_json(r.complex);
    out["verdict"] = verdict_json(r.verdict, witnesses);
    return out;
}

} // namespace

Json theorem14_json(const Theorem14Report& r, bool witnesses) {
    Json out;
    Json hyp;
    hyp["connected"] = r.connected;
    hyp["mw"] = mw_json(r.mw, witnesses);
    out["hypotheses"] = std::move(hyp);
    out["rec_complex"] = complex_result_json(r.rec_complex, witnesses);
    out["cone_complex"] = complex_result_json(r.cone_complex, witnesses);
    out["support_identity_rec"] = r.support_identity_rec;
    Json flags;
    flags["rational"] = r.rational;
    flags["fans"] = r.fans;
    out["flags"] = std::move(flags);
    return out;
}

Json toric_json(const ToricDatum& d) {
    Json out;
    out["dim"] = d.dim;
    Json cones = Json::array();
    for (const auto& c : d.cones) {
        Json cj;
        Json rays = Json::array();
        for (const auto& r : c.rays) rays.push_back(vector_json(r));
        cj["rays"] = std::move(rays);
        cj["faces_of"] = c.faces_of;
        cones.push_back(std::move(cj));
    }
    out["cones"] = std::move(cones);
    out["complete"] = true;
    out["strongly_convex"] = true;
    return out;
}

} // namespace polyrec
