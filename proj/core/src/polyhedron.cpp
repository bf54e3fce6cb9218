#include "polyrec/polyhedron.hpp"

#include "double_description.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace polyrec {

namespace {

void check_dim(const QVector& v, int dim, const char* what) {
    if (static_cast<int>(v.size()) != dim)
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

// Split homogenized generators (in R^{d+1}) into the VRep of the height-1
// slice: rays with positive last coordinate are vertices, rays at height 0
// are recession rays, lines stay lines (they always have height 0).
VRep vrep_from_cone(const dd::Generators& g, int d) {
    VRep v;
    v.dim = d;
    for (const auto& r : g.rays) {
        const Rational& t = r[d];
        QVector x(r.begin(), r.begin() + d);
        if (t == 0) {
            v.rays.push_back(std::move(x));
        } else {
            for (auto& c : x) c /= t;
            v.vertices.push_back(std::move(x));
        }
    }
    for (const auto& l : g.lines) {
        if (l[d] != 0)
            throw std::logic_error("homogenization cone has a line leaving t = 0");
        v.lines.push_back(QVector(l.begin(), l.begin() + d));
    }
    auto less = [](const QVector& a, const QVector& b) { return compare(a, b) < 0; };
    std::sort(v.vertices.begin(), v.vertices.end(), less);
    std::sort(v.rays.begin(), v.rays.end(), less);
    return v;
}

// Translate the minimal homogeneous description of the lifted cone back to
// constraints on the slice; the (0,...,0,1) facet is the trivial "t >= 0"
// and corresponds to no constraint on the polyhedron.
HRep hrep_from_cone_rows(const dd::Rows& rows, int d) {
    HRep h;
    h.dim = d;
    for (const auto& r : rows.ineq) {
        QVector a(r.begin(), r.begin() + d);
        if (is_zero(a)) continue;
        h.inequalities.push_back(Halfspace{std::move(a), -r[d]});
    }
    for (const auto& r : rows.eq) {
        QVector c(r.begin(), r.begin() + d);
        if (is_zero(c))
            throw std::logic_error("nonempty polyhedron with t = 0 equality");
        h.equalities.push_back(Halfspace{std::move(c), -r[d]});
    }
    auto less = [](const Halfspace& a, const Halfspace& b) { return compare(a, b) < 0; };
    std::sort(h.inequalities.begin(), h.inequalities.end(), less);
    std::sort(h.equalities.begin(), h.equalities.end(), less);
    return h;
}

struct HomogenizedRows {
    QMatrix ineq;
    QMatrix eq;
    bool infeasible = false;
};

HomogenizedRows homogenize(const HRep& h) {
    HomogenizedRows out;
    for (const auto& c : h.inequalities) {
        check_dim(c.normal, h.dim, "from_hrep inequality");
        if (is_zero(c.normal)) {
            if (c.offset > 0) out.infeasible = true;
            continue;
        }
        QVector row = c.normal;
        row.push_back(-c.offset);
        out.ineq.push_back(std::move(row));
    }
    for (const auto& c : h.equalities) {
        check_dim(c.normal, h.dim, "from_hrep equality");
        if (is_zero(c.normal)) {
            if (c.offset != 0) out.infeasible = true;
            continue;
        }
        QVector row = c.normal;
        row.push_back(-c.offset);
        out.eq.push_back(std::move(row));
    }
    QVector t_row(h.dim + 1, Rational(0));
    t_row[h.dim] = 1;
    out.ineq.push_back(std::move(t_row));
    return out;
}

QMatrix homogenize_generators(const VRep& v) {
    QMatrix rays;
    for (const auto& p : v.vertices) {
        QVector r = p;
        r.push_back(1);
        rays.push_back(std::move(r));
    }
    for (const auto& p : v.rays) {
        QVector r = p;
        r.push_back(0);
        rays.push_back(std::move(r));
    }
    return rays;
}

bool has_vertex_generator(const dd::Generators& g, int d) {
    for (const auto& r : g.rays)
        if (r[d] != 0) return true;
    return false;
}

} // namespace

int compare(const Halfspace& a, const Halfspace& b) {
    if (int c = compare(a.normal, b.normal); c != 0) return c;
    if (a.offset < b.offset) return -1;
    if (a.offset > b.offset) return 1;
    return 0;
}

Halfspace canonical_hyperplane(const QVector& normal, const Rational& offset) {
    if (is_zero(normal))
        throw std::invalid_argument("canonical_hyperplane: zero normal");
    QVector aug = normal;
    aug.push_back(offset);
    aug = primitive(std::move(aug));
    for (const auto& x : aug) {
        if (x == 0) continue;
        if (x < 0) aug = scale(aug, Rational(-1));
        break;
    }
    Rational b = aug.back();
    aug.pop_back();
    return Halfspace{std::move(aug), std::move(b)};
}

Polyhedron Polyhedron::empty(int dim) {
    if (dim < 1) throw std::invalid_argument("Polyhedron: dim must be >= 1");
    Polyhedron p;
    p.hrep_.dim = dim;
    p.vrep_.dim = dim;
    p.empty_ = true;
    return p;
}

Polyhedron Polyhedron::from_hrep(const HRep& h) {
    if (h.dim < 1) throw std::invalid_argument("from_hrep: dim must be >= 1");
    HomogenizedRows rows = homogenize(h);
    if (rows.infeasible) return empty(h.dim);

    dd::Generators gen = dd::cone_from_rows(rows.ineq, rows.eq, h.dim + 1);
    if (!has_vertex_generator(gen, h.dim)) return empty(h.dim);

    Polyhedron p;
    p.empty_ = false;
    p.vrep_ = vrep_from_cone(gen, h.dim);
    p.hrep_ = hrep_from_cone_rows(dd::cone_to_rows(gen.rays, gen.lines, h.dim + 1), h.dim);
    return p;
}

Polyhedron Polyhedron::from_vrep(const VRep& v) {
    if (v.dim < 1) throw std::invalid_argument("from_vrep: dim must be >= 1");
    for (const auto& p : v.vertices) check_dim(p, v.dim, "from_vrep vertex");
    for (const auto& r : v.rays) {
        check_dim(r, v.dim, "from_vrep ray");
        if (is_zero(r)) throw std::invalid_argument("from_vrep: zero ray");
    }
    for (const auto& l : v.lines) {
        check_dim(l, v.dim, "from_vrep line");
        if (is_zero(l)) throw std::invalid_argument("from_vrep: zero line");
    }
    // conv(empty) + anything is empty.
    if (v.vertices.empty()) return empty(v.dim);

    QMatrix cone_rays = homogenize_generators(v);
    QMatrix cone_lines;
    for (const auto& l : v.lines) {
        QVector r = l;
        r.push_back(0);
        cone_lines.push_back(std::move(r));
    }
    dd::Rows rows = dd::cone_to_rows(cone_rays, cone_lines, v.dim + 1);
    dd::Generators gen = dd::cone_from_rows(rows.ineq, rows.eq, v.dim + 1);
    if (!has_vertex_generator(gen, v.dim))
        throw std::logic_error("from_vrep: nonempty input produced empty cone");

    Polyhedron p;
    p.empty_ = false;
    p.vrep_ = vrep_from_cone(gen, v.dim);
    p.hrep_ = hrep_from_cone_rows(rows, v.dim);
    return p;
}

Polyhedron Polyhedron::whole_space(int dim) {
    return from_hrep(HRep{dim, {}, {}});
}

Polyhedron Polyhedron::point(const QVector& p) {
    return from_vrep(VRep{static_cast<int>(p.size()), {p}, {}, {}});
}

int Polyhedron::dim() const {
    if (empty_) return -1;
    QMatrix span;
    const QVector& v0 = vrep_.vertices.front();
    for (std::size_t i = 1; i < vrep_.vertices.size(); ++i)
        span.push_back(sub(vrep_.vertices[i], v0));
    for (const auto& r : vrep_.rays) span.push_back(r);
    for (const auto& l : vrep_.lines) span.push_back(l);
    return rank(span);
}

bool Polyhedron::contains_point(const QVector& p) const {
    check_dim(p, hrep_.dim, "contains_point");
    if (empty_) return false;
    for (const auto& c : hrep_.inequalities)
        if (dot(c.normal, p) < c.offset) return false;
    for (const auto& c : hrep_.equalities)
        if (dot(c.normal, p) != c.offset) return false;
    return true;
}

bool Polyhedron::contains(const Polyhedron& other) const {
    if (hrep_.dim != other.hrep_.dim)
        throw std::invalid_argument("contains: dimension mismatch");
    if (other.empty_) return true;
    if (empty_) return false;
    for (const auto& v : other.vrep_.vertices)
        if (!contains_point(v)) return false;
    for (const auto& r : other.vrep_.rays) {
        for (const auto& c : hrep_.inequalities)
            if (dot(c.normal, r) < 0) return false;
        for (const auto& c : hrep_.equalities)
            if (dot(c.normal, r) != 0) return false;
    }
    for (const auto& l : other.vrep_.lines) {
        for (const auto& c : hrep_.inequalities)
            if (dot(c.normal, l) != 0) return false;
        for (const auto& c : hrep_.equalities)
            if (dot(c.normal, l) != 0) return false;
    }
    return true;
}

bool Polyhedron::equals(const Polyhedron& other) const { return compare(other) == 0; }

int Polyhedron::compare(const Polyhedron& o) const {
    if (hrep_.dim != o.hrep_.dim) return hrep_.dim < o.hrep_.dim ? -1 : 1;
    if (empty_ != o.empty_) return empty_ ? -1 : 1;
    if (int c = polyrec::compare(vrep_.vertices, o.vrep_.vertices); c != 0) return c;
    if (int c = polyrec::compare(vrep_.rays, o.vrep_.rays); c != 0) return c;
    return polyrec::compare(vrep_.lines, o.vrep_.lines);
}

bool Polyhedron::is_cone() const {
    return !empty_ && vrep_.vertices.size() == 1 && is_zero(vrep_.vertices.front());
}

bool Polyhedron::is_strongly_convex() const {
    if (empty_) throw std::invalid_argument("is_strongly_convex: empty polyhedron");
    return vrep_.lines.empty();
}

QMatrix Polyhedron::lineality_space() const {
    if (empty_) throw std::invalid_argument("lineality_space: empty polyhedron");
    return vrep_.lines;
}

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("intersect: dimension mismatch");
    if (a.is_empty() || b.is_empty()) return Polyhedron::empty(a.ambient_dim());
    HRep h = a.hrep();
    const HRep& hb = b.hrep();
    h.inequalities.insert(h.inequalities.end(), hb.inequalities.begin(), hb.inequalities.end());
    h.equalities.insert(h.equalities.end(), hb.equalities.begin(), hb.equalities.end());
    return Polyhedron::from_hrep(h);
}

Polyhedron recession_cone(const Polyhedron& p) {
    if (p.is_empty()) throw std::invalid_argument("recession_cone: empty polyhedron");
    HRep h;
    h.dim = p.ambient_dim();
    for (const auto& c : p.hrep().inequalities)
        h.inequalities.push_back(Halfspace{c.normal, Rational(0)});
    for (const auto& c : p.hrep().equalities)
        h.equalities.push_back(Halfspace{c.normal, Rational(0)});
    return Polyhedron::from_hrep(h);
}

Polyhedron lift_cone(const Polyhedron& p) {
    if (p.is_empty()) throw std::invalid_argument("lift_cone: empty polyhedron");
    const int d = p.ambient_dim();
    VRep v;
    v.dim = d + 1;
    v.vertices.push_back(QVector(d + 1, Rational(0)));
    for (const auto& q : p.vrep().vertices) {
        QVector r = q;
        r.push_back(1);
        v.rays.push_back(std::move(r));
    }
    for (const auto& q : p.vrep().rays) {
        QVector r = q;
        r.push_back(0);
        v.rays.push_back(std::move(r));
    }
    for (const auto& q : p.vrep().lines) {
        QVector l = q;
        l.push_back(0);
        v.lines.push_back(std::move(l));
    }
    return Polyhedron::from_vrep(v);
}

Polyhedron face_where_minimized(const Polyhedron& p, const QVector& x) {
    if (p.is_empty()) throw std::invalid_argument("face_where_minimized: empty polyhedron");
    check_dim(x, p.ambient_dim(), "face_where_minimized");
    for (const auto& r : p.vrep().rays)
        if (dot(x, r) < 0)
            throw std::invalid_argument("face_where_minimized: functional unbounded below");
    for (const auto& l : p.vrep().lines)
        if (dot(x, l) != 0)
            throw std::invalid_argument("face_where_minimized: functional unbounded below");
    Rational m = dot(x, p.vrep().vertices.front());
    for (const auto& v : p.vrep().vertices)
        m = std::min(m, dot(x, v));
    HRep h = p.hrep();
    h.equalities.push_back(Halfspace{x, m});
    return Polyhedron::from_hrep(h);
}

std::vector<Polyhedron> facets(const Polyhedron& p) {
    if (p.is_empty()) throw std::invalid_argument("facets: empty polyhedron");
    std::set<Polyhedron> out;
    const HRep& h = p.hrep();
    for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
        HRep g = h;
        g.equalities.push_back(g.inequalities[i]);
        g.inequalities.erase(g.inequalities.begin() + static_cast<long>(i));
        Polyhedron facet = Polyhedron::from_hrep(g);
        if (facet.is_empty())
            throw std::logic_error("facets: empty facet from minimal HRep");
        out.insert(std::move(facet));
    }
    return std::vector<Polyhedron>(out.begin(), out.end());
}

std::vector<Polyhedron> faces(const Polyhedron& p) {
    if (p.is_empty()) throw std::invalid_argument("faces: empty polyhedron");
    // Iterating facets-of-facets reaches every face (the face lattice is
    // graded).
    std::set<Polyhedron> seen;
    std::queue<Polyhedron> todo;
    seen.insert(p);
    todo.push(p);
    while (!todo.empty()) {
        Polyhedron f = std::move(todo.front());
        todo.pop();
        for (Polyhedron& facet : facets(f))
            if (seen.insert(facet).second) todo.push(std::move(facet));
    }
    return std::vector<Polyhedron>(seen.begin(), seen.end());
}

bool is_face_of(const Polyhedron& f, const Polyhedron& p) {
    if (f.ambient_dim() != p.ambient_dim())
        throw std::invalid_argument("is_face_of: dimension mismatch");
    if (f.is_empty() || p.is_empty()) return false;
    if (!p.contains(f)) return false;
    // The candidate face defined by the inequalities of p tight on all of f.
    HRep h = p.hrep();
    std::vector<Halfspace> loose;
    for (const auto& c : p.hrep().inequalities) {
        bool tight = true;
        for (const auto& v : f.vrep().vertices)
            if (dot(c.normal, v) != c.offset) { tight = false; break; }
        if (tight)
            for (const auto& r : f.vrep().rays)
                if (dot(c.normal, r) != 0) { tight = false; break; }
        if (tight)
            for (const auto& l : f.vrep().lines)
                if (dot(c.normal, l) != 0) { tight = false; break; }
        if (tight) h.equalities.push_back(c);
        else loose.push_back(c);
    }
    h.inequalities = std::move(loose);
    return f.equals(Polyhedron::from_hrep(h));
}

QVector relative_interior_point(const Polyhedron& p) {
    if (p.is_empty()) throw std::invalid_argument("relative_interior_point: empty polyhedron");
    QVector x(p.ambient_dim(), Rational(0));
    for (const auto& v : p.vrep().vertices) x = add(x, v);
    Rational inv = Rational(1) / Rational(static_cast<int>(p.vrep().vertices.size()));
    x = scale(x, inv);
    for (const auto& r : p.vrep().rays) x = add(x, r);
    return x;
}

Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("minkowski_sum: dimension mismatch");
    if (a.is_empty() || b.is_empty()) return Polyhedron::empty(a.ambient_dim());
    VRep v;
    v.dim = a.ambient_dim();
    for (const auto& p : a.vrep().vertices)
        for (const auto& q : b.vrep().vertices)
            v.vertices.push_back(add(p, q));
    v.rays = a.vrep().rays;
    v.rays.insert(v.rays.end(), b.vrep().rays.begin(), b.vrep().rays.end());
    v.lines = a.vrep().lines;
    v.lines.insert(v.lines.end(), b.vrep().lines.begin(), b.vrep().lines.end());
    return Polyhedron::from_vrep(v);
}

RecessionFace locate_recession_face(const Polyhedron& p, const QVector& v) {
    Polyhedron rec = recession_cone(p);
    if (!rec.contains_point(v))
        throw std::invalid_argument("locate_recession_face: direction not in recession cone");
    // Minimal face of rec(p) containing v: turn the inequalities tight at v
    // into equalities; its relative interior contains v.
    HRep h = rec.hrep();
    std::vector<Halfspace> loose;
    for (const auto& c : rec.hrep().inequalities) {
        if (dot(c.normal, v) == c.offset) h.equalities.push_back(c);
        else loose.push_back(c);
    }
    h.inequalities = std::move(loose);
    Polyhedron target = Polyhedron::from_hrep(h);
    for (Polyhedron& f : faces(p))
        if (recession_cone(f).equals(target)) return RecessionFace{std::move(f), std::move(target)};
    throw std::logic_error("locate_recession_face: no face realizes the recession face");
}

Polyhedron affine_slice(const Polyhedron& c, const Rational& h) {
    const int n = c.ambient_dim() - 1;
    if (n < 1) throw std::invalid_argument("affine_slice: ambient dimension must be >= 2");
    if (c.is_empty()) return Polyhedron::empty(n);
    HRep out;
    out.dim = n;
    for (const auto& hs : c.hrep().inequalities) {
        QVector a(hs.normal.begin(), hs.normal.begin() + n);
        out.inequalities.push_back(Halfspace{std::move(a), hs.offset - hs.normal[n] * h});
    }
    for (const auto& hs : c.hrep().equalities) {
        QVector a(hs.normal.begin(), hs.normal.begin() + n);
        out.equalities.push_back(Halfspace{std::move(a), hs.offset - hs.normal[n] * h});
    }
    return Polyhedron::from_hrep(out);
}

Polyhedron conical_hull(int dim, const QMatrix& rays, const QMatrix& lines) {
    VRep v;
    v.dim = dim;
    v.vertices.push_back(QVector(dim, Rational(0)));
    for (const auto& r : rays)
        if (!is_zero(r)) v.rays.push_back(r);
    for (const auto& l : lines)
        if (!is_zero(l)) v.lines.push_back(l);
    return Polyhedron::from_vrep(v);
}

Polyhedron polytope_part(const Polyhedron& p) {
    if (p.is_empty()) throw std::invalid_argument("polytope_part: empty polyhedron");
    return Polyhedron::from_vrep(VRep{p.ambient_dim(), p.vrep().vertices, {}, {}});
}

} // namespace polyrec
