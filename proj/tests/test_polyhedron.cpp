#include "polyrec/polyhedron.hpp"

#include <doctest.h>

#include "test_oracles.hpp"

using namespace polyrec;
using testing_support::Rng;
using testing_support::oracle_faces;

namespace {

QVector qv(std::initializer_list<int> xs) {
    QVector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

Halfspace hs(std::initializer_list<int> n, int off) {
    return Halfspace{qv(n), Rational(off)};
}

Polyhedron cell(int dim, std::vector<Halfspace> ineq, std::vector<Halfspace> eq = {}) {
    return Polyhedron::from_hrep(HRep{dim, std::move(ineq), std::move(eq)});
}

Polyhedron unit_square() {
    return cell(2, {hs({1, 0}, 0), hs({-1, 0}, -1), hs({0, 1}, 0), hs({0, -1}, -1)});
}

// v lies in the relative interior iff every equality is tight and every
// inequality of the minimal description is strict.
bool in_relative_interior(const Polyhedron& p, const QVector& v) {
    if (p.is_empty()) return false;
    for (const auto& c : p.hrep().equalities)
        if (dot(c.normal, v) != c.offset) return false;
    for (const auto& c : p.hrep().inequalities)
        if (dot(c.normal, v) <= c.offset) return false;
    return true;
}

} // namespace

TEST_CASE("canonicalization removes redundancy and scaling") {
    // x >= 0 twice, scaled, plus a constraint implied by the others
    Polyhedron a = cell(2, {hs({1, 0}, 0), hs({2, 0}, 0), hs({0, 1}, 0), hs({1, 1}, 0)});
    Polyhedron b = cell(2, {hs({3, 0}, 0), hs({0, 5}, 0)});
    CHECK(a.equals(b));
    CHECK(a.hrep().inequalities.size() == 2);
    CHECK(a.vrep().rays.size() == 2);
    CHECK(a.vrep().vertices == QMatrix{qv({0, 0})});

    // equality given as opposite inequalities collapses into the equality list
    Polyhedron line = cell(2, {hs({0, 1}, 1), hs({0, -1}, -1)});
    CHECK(line.hrep().inequalities.empty());
    CHECK(line.hrep().equalities.size() == 1);
    CHECK(line.dim() == 1);
}

TEST_CASE("unit square basics") {
    Polyhedron sq = unit_square();
    CHECK(sq.dim() == 2);
    CHECK(sq.ambient_dim() == 2);
    CHECK_FALSE(sq.is_empty());
    CHECK(sq.vrep().vertices.size() == 4);
    CHECK(sq.vrep().rays.empty());
    CHECK(sq.vrep().lines.empty());
    CHECK(sq.hrep().inequalities.size() == 4);
    CHECK_FALSE(sq.is_cone());

    CHECK(faces(sq).size() == 9);   // square, 4 edges, 4 vertices
    CHECK(facets(sq).size() == 4);

    CHECK(sq.contains_point(qv({0, 0})));
    CHECK(sq.contains_point(QVector{Rational(1) / 2, Rational(1) / 3}));
    CHECK_FALSE(sq.contains_point(qv({2, 0})));
}

TEST_CASE("halfplane has a lineality direction") {
    Polyhedron h = cell(2, {hs({1, 0}, 0)});
    CHECK(h.dim() == 2);
    CHECK(h.vrep().lines == QMatrix{qv({0, 1})});
    CHECK(h.vrep().rays == QMatrix{qv({1, 0})});
    CHECK(h.is_cone());
    CHECK_FALSE(h.is_strongly_convex());
    CHECK(h.lineality_space() == QMatrix{qv({0, 1})});
    // faces: the halfplane and its boundary line
    CHECK(faces(h).size() == 2);
}

TEST_CASE("empty, whole space, point") {
    Polyhedron e = Polyhedron::empty(3);
    CHECK(e.is_empty());
    CHECK(e.dim() == -1);
    CHECK_FALSE(e.contains_point(qv({0, 0, 0})));

    Polyhedron w = Polyhedron::whole_space(3);
    CHECK(w.dim() == 3);
    CHECK(w.hrep().inequalities.empty());
    CHECK(w.hrep().equalities.empty());
    CHECK(w.vrep().lines.size() == 3);
    CHECK(w.contains(e));
    CHECK(w.contains_point(qv({5, -7, 9})));
    CHECK(intersect(w, e).is_empty());

    Polyhedron pt = Polyhedron::point(qv({2, 3, 4}));
    CHECK(pt.dim() == 0);
    CHECK(pt.vrep().vertices == QMatrix{qv({2, 3, 4})});
    CHECK(faces(pt).size() == 1);
    CHECK(recession_cone(pt) == Polyhedron::point(qv({0, 0, 0})));

    // inconsistent constraints
    Polyhedron none = cell(2, {hs({1, 0}, 1), hs({-1, 0}, 0)});
    CHECK(none.is_empty());
    CHECK_THROWS_AS(recession_cone(none), std::invalid_argument);
}

TEST_CASE("representation round trips on random polyhedra") {
    Rng rng(21);
    for (int iter = 0; iter < 120; ++iter) {
        int dim = rng.uniform(1, 4);
        Polyhedron p = rng.nonempty_polyhedron(dim, 6);
        Polyhedron via_h = Polyhedron::from_hrep(p.hrep());
        CHECK(via_h.equals(p));
        Polyhedron via_v = Polyhedron::from_vrep(p.vrep());
        CHECK(via_v.equals(p));
        CHECK(via_v.hrep().inequalities == p.hrep().inequalities);
        CHECK(via_v.hrep().equalities == p.hrep().equalities);
    }
}

TEST_CASE("faces agree with the tight-set oracle") {
    Rng rng(22);
    int checked = 0;
    for (int iter = 0; iter < 60; ++iter) {
        Polyhedron p = rng.nonempty_polyhedron(rng.uniform(1, 3), 5);
        auto fs = faces(p);
        auto expect = oracle_faces(p);
        REQUIRE(fs.size() == expect.size());
        for (std::size_t i = 0; i < fs.size(); ++i) CHECK(fs[i] == expect[i]);
        for (const auto& f : fs) {
            CHECK(is_face_of(f, p));
            CHECK(p.contains(f));
        }
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("recession cone matches the generator description") {
    Rng rng(23);
    for (int iter = 0; iter < 80; ++iter) {
        Polyhedron p = rng.nonempty_polyhedron(rng.uniform(1, 4), 6);
        Polyhedron rec = recession_cone(p);
        CHECK(rec.is_cone());
        CHECK(rec == conical_hull(p.ambient_dim(), p.vrep().rays, p.vrep().lines));
        // adding a recession generator to any vertex stays inside
        for (const auto& v : p.vrep().vertices)
            for (const auto& r : p.vrep().rays)
                CHECK(p.contains_point(add(v, r)));
    }
}

TEST_CASE("lift and slice invert each other") {
    Rng rng(24);
    for (int iter = 0; iter < 60; ++iter) {
        Polyhedron p = rng.nonempty_polyhedron(rng.uniform(1, 3), 5);
        Polyhedron c = lift_cone(p);
        CHECK(c.is_cone());
        CHECK(c.ambient_dim() == p.ambient_dim() + 1);
        CHECK(affine_slice(c, Rational(1)) == p);
        CHECK(affine_slice(c, Rational(0)) == recession_cone(p));
        // lifting scales: the slice at height 2 is the dilation of p by 2
        Polyhedron doubled = affine_slice(c, Rational(2));
        QVector w = relative_interior_point(p);
        CHECK(doubled.contains_point(scale(w, Rational(2))));
    }
}

TEST_CASE("face_where_minimized picks tight faces") {
    Polyhedron sq = unit_square();
    CHECK(face_where_minimized(sq, qv({1, 0})) ==
          cell(2, {hs({0, 1}, 0), hs({0, -1}, -1)}, {hs({1, 0}, 0)}));
    CHECK(face_where_minimized(sq, qv({1, 1})) == Polyhedron::point(qv({0, 0})));
    CHECK(face_where_minimized(sq, qv({0, 0})) == sq);

    Polyhedron h = cell(2, {hs({1, 0}, 0)});
    CHECK(face_where_minimized(h, qv({1, 0})).dim() == 1);
    CHECK_THROWS_AS(face_where_minimized(h, qv({-1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(face_where_minimized(h, qv({0, 1})), std::invalid_argument);

    Rng rng(25);
    for (int iter = 0; iter < 60; ++iter) {
        Polyhedron p = rng.nonempty_polyhedron(rng.uniform(1, 3), 5);
        QVector x = rng.vector(p.ambient_dim());
        std::optional<Polyhedron> found;
        try {
            found = face_where_minimized(p, x);
        } catch (const std::invalid_argument&) {
            // unbounded below: some recession generator must decrease x
            bool dec = false;
            for (const auto& r : p.vrep().rays) dec = dec || dot(x, r) < 0;
            for (const auto& l : p.vrep().lines) dec = dec || dot(x, l) != 0;
            CHECK(dec);
            continue;
        }
        const Polyhedron& f = *found;
        REQUIRE_FALSE(f.is_empty());
        CHECK(is_face_of(f, p));
        // x is constant on f and that value is the minimum over p
        Rational opt = dot(x, relative_interior_point(f));
        for (const auto& v : f.vrep().vertices) CHECK(dot(x, v) == opt);
        for (const auto& r : f.vrep().rays) CHECK(dot(x, r) == 0);
        for (const auto& l : f.vrep().lines) CHECK(dot(x, l) == 0);
        for (const auto& v : p.vrep().vertices) CHECK(dot(x, v) >= opt);
        for (const auto& r : p.vrep().rays) CHECK(dot(x, r) >= 0);
    }
}

TEST_CASE("relative interior point is strictly interior") {
    Rng rng(26);
    for (int iter = 0; iter < 100; ++iter) {
        Polyhedron p = rng.nonempty_polyhedron(rng.uniform(1, 4), 6);
        QVector w = relative_interior_point(p);
        CHECK(p.contains_point(w));
        CHECK(in_relative_interior(p, w));
    }
}

TEST_CASE("minkowski sum") {
    Polyhedron sq = unit_square();
    Polyhedron seg = cell(2, {hs({1, 0}, 0), hs({-1, 0}, -1)}, {hs({0, 1}, 0)});
    Polyhedron rect = minkowski_sum(sq, seg);
    CHECK(rect == cell(2, {hs({1, 0}, 0), hs({-1, 0}, -2), hs({0, 1}, 0), hs({0, -1}, -1)}));
    CHECK(minkowski_sum(seg, sq) == rect);

    // translation by a point
    Polyhedron moved = minkowski_sum(sq, Polyhedron::point(qv({5, 5})));
    CHECK(moved.contains_point(qv({5, 5})));
    CHECK(moved.contains_point(qv({6, 6})));
    CHECK_FALSE(moved.contains_point(qv({0, 0})));

    Rng rng(27);
    for (int iter = 0; iter < 40; ++iter) {
        int dim = rng.uniform(1, 3);
        Polyhedron a = rng.nonempty_polyhedron(dim, 4);
        Polyhedron b = rng.nonempty_polyhedron(dim, 4);
        Polyhedron s = minkowski_sum(a, b);
        CHECK(s.contains_point(add(relative_interior_point(a), relative_interior_point(b))));
        CHECK(recession_cone(s) == minkowski_sum(recession_cone(a), recession_cone(b)));
    }
}

TEST_CASE("polytope part restores the Minkowski-Weyl decomposition") {
    Rng rng(28);
    for (int iter = 0; iter < 60; ++iter) {
        Polyhedron p = rng.nonempty_polyhedron(rng.uniform(1, 3), 5);
        Polyhedron q = polytope_part(p);
        CHECK(q.vrep().rays.empty());
        CHECK(q.vrep().lines.empty());
        CHECK(minkowski_sum(q, recession_cone(p)) == p);
    }
}

TEST_CASE("locate_recession_face returns the unique recession cone") {
    // square swept along e1: rec = ray(e1); the witness face may be either
    // horizontal edge or the whole strip, but rec(face) is pinned.
    Polyhedron strip = cell(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({0, -1}, -1)});
    auto rf = locate_recession_face(strip, qv({1, 0}));
    CHECK(rf.recession == conical_hull(2, {qv({1, 0})}));
    CHECK(is_face_of(rf.face, strip));
    CHECK(recession_cone(rf.face) == rf.recession);
    CHECK(in_relative_interior(rf.recession, qv({1, 0})));

    CHECK_THROWS_AS(locate_recession_face(strip, qv({0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(locate_recession_face(unit_square(), qv({1, 0})), std::invalid_argument);

    Rng rng(29);
    for (int iter = 0; iter < 50; ++iter) {
        Polyhedron p = rng.nonempty_polyhedron(rng.uniform(1, 3), 5);
        Polyhedron rec = recession_cone(p);
        if (rec.dim() < 1) continue;
        QVector v = relative_interior_point(rec);
        auto [face, recession] = locate_recession_face(p, v);
        CHECK(is_face_of(face, p));
        CHECK(recession_cone(face) == recession);
        CHECK(in_relative_interior(recession, v));
        // uniqueness: every face whose recession cone holds v in its relative
        // interior produces the same cone
        for (const auto& f : faces(p)) {
            Polyhedron fr = recession_cone(f);
            if (in_relative_interior(fr, v)) CHECK(fr == recession);
        }
    }
}

TEST_CASE("intersection of two recession cones") {
    Polyhedron L1 = cell(3, {hs({1, 0, 0}, 0), hs({0, 1, 0}, 0)}, {hs({0, 0, 1}, 0)});
    Polyhedron L2 = cell(3, {hs({1, 1, 0}, 0), hs({1, -1, 0}, 0)}, {hs({0, 0, 1}, 1)});
    Polyhedron meet = intersect(recession_cone(L1), recession_cone(L2));
    CHECK(meet == cell(3, {hs({0, 1, 0}, 0), hs({1, -1, 0}, 0)}, {hs({0, 0, 1}, 0)}));
    CHECK(meet.dim() == 2);
    CHECK_FALSE(is_face_of(meet, recession_cone(L1)));
    CHECK_FALSE(is_face_of(meet, recession_cone(L2)));

    Rng rng(30);
    for (int iter = 0; iter < 60; ++iter) {
        int dim = rng.uniform(1, 3);
        Polyhedron a = rng.polyhedron(dim, 4);
        Polyhedron b = rng.polyhedron(dim, 4);
        Polyhedron m = intersect(a, b);
        CHECK(a.contains(m));
        CHECK(b.contains(m));
        if (!m.is_empty()) {
            QVector w = relative_interior_point(m);
            CHECK(a.contains_point(w));
            CHECK(b.contains_point(w));
        }
    }
}

TEST_CASE("canonical hyperplane representative") {
    Halfspace h = canonical_hyperplane(QVector{Rational(-2), Rational(4)}, Rational(6));
    CHECK(h.normal == qv({1, -2}));
    CHECK(h.offset == -3);
    Halfspace same = canonical_hyperplane(QVector{Rational(1), Rational(-2)}, Rational(-3));
    CHECK(compare(h, same) == 0);
    CHECK_THROWS_AS(canonical_hyperplane(qv({0, 0}), Rational(1)), std::invalid_argument);
}

TEST_CASE("polyhedron compare is a total order consistent with equals") {
    Rng rng(31);
    std::vector<Polyhedron> ps;
    for (int i = 0; i < 40; ++i) ps.push_back(rng.polyhedron(2, 4));
    for (const auto& a : ps)
        for (const auto& b : ps) {
            CHECK(a.compare(b) == -b.compare(a));
            CHECK((a.compare(b) == 0) == a.equals(b));
        }
    std::sort(ps.begin(), ps.end());
    CHECK(std::is_sorted(ps.begin(), ps.end(),
                         [](const Polyhedron& a, const Polyhedron& b) { return a.compare(b) < 0; }));
}
