#include "polyrec/fanops.hpp"

#include <doctest.h>

#include "test_oracles.hpp"

#include <set>

using namespace polyrec;
using testing_support::Rng;

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

// cone in R^d placed at height 0 in R^{d+1}
Polyhedron embed_cone(const Polyhedron& c) {
    VRep v;
    v.dim = c.ambient_dim() + 1;
    auto pad = [](QMatrix rows) {
        for (auto& r : rows) r.emplace_back(0);
        return rows;
    };
    v.vertices = pad(c.vrep().vertices);
    v.rays = pad(c.vrep().rays);
    v.lines = pad(c.vrep().lines);
    return Polyhedron::from_vrep(v);
}

ComplexResult ex17() {
    return build_complex(3, {cell(3, {hs({1, 0, 0}, 0), hs({0, 1, 0}, 0)}, {hs({0, 0, 1}, 0)}),
                             cell(3, {hs({1, 1, 0}, 0), hs({1, -1, 0}, 0)}, {hs({0, 0, 1}, 1)})});
}

ComplexResult quadrant_fan() {
    return build_complex(2, {cell(2, {hs({1, 0}, 0), hs({0, 1}, 0)}),
                             cell(2, {hs({-1, 0}, 0), hs({0, 1}, 0)}),
                             cell(2, {hs({1, 0}, 0), hs({0, -1}, 0)}),
                             cell(2, {hs({-1, 0}, 0), hs({0, -1}, 0)})});
}

} // namespace

TEST_CASE("pipeline on the three counterexample complexes") {
    // the two-cell counterexample: both hypotheses fail
    auto c17 = ex17();
    REQUIRE(c17.verdict.valid());
    auto rep = theorem14_pipeline(c17.complex);
    CHECK_FALSE(rep.connected);
    CHECK_FALSE(rep.mw.holds);
    CHECK_FALSE(rep.hypotheses_hold());
    CHECK_FALSE(rep.rec_complex.verdict.valid());
    CHECK_FALSE(rep.cone_complex.verdict.valid());
    CHECK_FALSE(rep.support_identity_rec);
    CHECK_FALSE(rep.fans);
    CHECK(rep.rational);

    // case (1): Minkowski-Weyl holds but the support is disconnected, and
    // the recession cells still fail the axioms
    Polyhedron A1 = cell(3, {hs({1, 0, 0}, 0), hs({0, 1, 0}, 0)}, {hs({0, 0, 1}, 0)});
    Polyhedron A2 = cell(3, {hs({1, -1, 0}, 0), hs({0, 1, 0}, 0)}, {hs({0, 0, 1}, 1)});
    Polyhedron A3 = cell(3, {hs({-1, 1, 0}, 0), hs({1, 0, 0}, 0)}, {hs({0, 0, 1}, 1)});
    auto c1 = build_complex(3, {A1, A2, A3});
    REQUIRE(c1.verdict.valid());
    auto rep1 = theorem14_pipeline(c1.complex);
    CHECK_FALSE(rep1.connected);
    CHECK(rep1.mw.holds);
    CHECK(*rep1.mw.sigma == recession_cone(A1));
    CHECK_FALSE(rep1.rec_complex.verdict.valid());
    // Minkowski-Weyl alone forces the support identity
    CHECK(rep1.support_identity_rec);
    CHECK_FALSE(rep1.fans);

    // case (2): Minkowski-Weyl fails yet every conclusion object is a fan
    Polyhedron B1 = cell(3, {hs({1, -1, 0}, 0), hs({0, 1, 0}, 0)}, {hs({0, 0, 1}, 0)});
    Polyhedron B2 = cell(3, {hs({-1, 1, 0}, 0), hs({1, 0, 0}, 0)}, {hs({0, 0, 1}, 1)});
    auto c2 = build_complex(3, {B1, B2});
    REQUIRE(c2.verdict.valid());
    auto rep2 = theorem14_pipeline(c2.complex);
    CHECK_FALSE(rep2.connected);
    CHECK_FALSE(rep2.mw.holds);
    CHECK(rep2.rec_complex.verdict.valid());
    CHECK(is_fan(rep2.rec_complex.complex.cells()));
    CHECK(rep2.cone_complex.verdict.valid());
    CHECK(rep2.fans);
    CHECK_FALSE(rep2.support_identity_rec);
    // (1,0,0) certifies the failed identity: it is a recession direction of
    // one cell but not of the whole support
    PolyhedralSet e = support(c2.complex);
    QVector u = qv({1, 0, 0});
    CHECK_FALSE(global_recession_contains(e, u));
    bool in_some_rec = false;
    for (const auto& s : rep2.rec_complex.complex.cells())
        if (s.contains_point(u)) in_some_rec = true;
    CHECK(in_some_rec);
    REQUIRE(rep2.mw.failure_witness);
    const auto& [p, w] = *rep2.mw.failure_witness;
    CHECK(ray_in_set(e, p, w));
    CHECK_FALSE(global_recession_contains(e, w));
}

TEST_CASE("recession complex of simple inputs") {
    // single polytope: recession collapses to the origin complex
    auto sq = build_complex(2, {cell(2, {hs({1, 0}, 0), hs({-1, 0}, -1), hs({0, 1}, 0),
                                         hs({0, -1}, -1)})});
    auto rec = recession_complex(sq.complex);
    CHECK(rec.verdict.valid());
    CHECK(rec.complex.cells().size() == 1);
    CHECK(rec.complex.cells().front() == Polyhedron::point(qv({0, 0})));

    // a fan is its own recession complex
    auto fan = quadrant_fan();
    auto recfan = recession_complex(fan.complex);
    CHECK(recfan.verdict.valid());
    CHECK(recfan.complex.cells() == fan.complex.cells());
}

TEST_CASE("cone complex of a point and of the full line") {
    auto pt = build_complex(1, {Polyhedron::point(qv({2}))});
    auto cc = cone_complex(pt.complex);
    CHECK(cc.verdict.valid());
    // the ray through (2,1) and its apex
    CHECK(cc.complex.cells().size() == 2);
    CHECK(cc.complex.conic());
    CHECK(cc.complex.cells().back() == conical_hull(2, {qv({2, 1})}));

    auto line = build_complex(1, {Polyhedron::whole_space(1)});
    REQUIRE(is_complete(line.complex));
    auto up = cone_complex(line.complex);
    CHECK(up.verdict.valid());
    // upper halfplane plus the horizontal line at height 0
    CHECK(up.complex.cells().size() == 2);
    CHECK(is_complete(up.complex));
    auto back = aff(up.complex);
    CHECK(back.verdict.valid());
    CHECK(back.complex.cells() == line.complex.cells());
    CHECK(roundtrip_check(line.complex));
}

TEST_CASE("dim-1 complete fan lifts to six cones") {
    auto fan = build_complex(1, {cell(1, {hs({1}, 0)}), cell(1, {hs({-1}, 0)})});
    REQUIRE(fan.verdict.valid());
    CHECK(fan.complex.cells().size() == 3);
    CHECK(is_complete(fan.complex));
    auto cc = cone_complex(fan.complex);
    CHECK(cc.verdict.valid());
    std::set<Polyhedron> cells(cc.complex.cells().begin(), cc.complex.cells().end());
    CHECK(cells.size() == 6);
    CHECK(cells.count(conical_hull(2, {qv({1, 0}), qv({0, 1})})) == 1);
    CHECK(cells.count(conical_hull(2, {qv({-1, 0}), qv({0, 1})})) == 1);
    CHECK(cells.count(conical_hull(2, {qv({0, 1})})) == 1);
    CHECK(cells.count(conical_hull(2, {qv({1, 0})})) == 1);
    CHECK(cells.count(conical_hull(2, {qv({-1, 0})})) == 1);
    CHECK(cells.count(Polyhedron::point(qv({0, 0}))) == 1);
}

TEST_CASE("lifted cones intersect by the slice formula") {
    // c(a) meets c(b) in c(a meet b) when the cells intersect, and in the
    // embedded intersection of the recession cones otherwise
    Rng rng(51);
    auto world = rng.complete_complex(2, 2);
    const auto& cells = world.cells();
    int pairs = 0;
    for (std::size_t i = 0; i < cells.size() && pairs < 60; ++i)
        for (std::size_t j = i; j < cells.size() && pairs < 60; ++j, ++pairs) {
            Polyhedron lhs = intersect(lift_cone(cells[i]), lift_cone(cells[j]));
            Polyhedron meet = intersect(cells[i], cells[j]);
            Polyhedron rhs =
                meet.is_empty()
                    ? embed_cone(intersect(recession_cone(cells[i]), recession_cone(cells[j])))
                    : lift_cone(meet);
            CHECK(lhs == rhs);
        }

    // a disjoint pair for the second branch
    Polyhedron a = cell(1, {hs({1}, 1)});
    Polyhedron b = cell(1, {hs({-1}, 1)});
    REQUIRE(intersect(a, b).is_empty());
    CHECK(intersect(lift_cone(a), lift_cone(b)) == Polyhedron::point(qv({0, 0})));
}

TEST_CASE("complete complexes satisfy both hypotheses and all conclusions") {
    Rng rng(52);
    for (int iter = 0; iter < 12; ++iter) {
        int dim = rng.uniform(1, 3);
        PolyhedralComplex world = rng.complete_complex(dim, 3);
        auto rep = theorem14_pipeline(world);
        CHECK(rep.connected);
        CHECK(rep.mw.holds);
        CHECK(*rep.mw.sigma == Polyhedron::whole_space(dim));
        CHECK(rep.hypotheses_hold());
        CHECK(rep.conclusions_hold());
        CHECK(rep.rec_complex.verdict.valid());
        CHECK(rep.cone_complex.verdict.valid());
        CHECK(rep.support_identity_rec);
    }
}

TEST_CASE("connected Minkowski-Weyl subcomplexes keep the conclusions") {
    Rng rng(53);
    int usable = 0;
    for (int iter = 0; iter < 60 && usable < 25; ++iter) {
        PolyhedralComplex sub = rng.subcomplex(rng.complete_complex(2, 3));
        auto rep = theorem14_pipeline(sub);
        if (!rep.hypotheses_hold()) continue;
        ++usable;
        CHECK(rep.conclusions_hold());
        CHECK(rep.rec_complex.verdict.valid());
        CHECK(rep.cone_complex.verdict.valid());
        CHECK(rep.support_identity_rec);
        // the recession support really is rec of the support: sample the
        // generators of sigma
        REQUIRE(rep.mw.sigma);
        PolyhedralSet e = support(sub);
        for (const auto& r : rep.mw.sigma->vrep().rays)
            CHECK(global_recession_contains(e, r));
    }
    CHECK(usable >= 5);
}

TEST_CASE("roundtrip in both directions") {
    auto fan = quadrant_fan();
    REQUIRE(fan.verdict.valid());
    CHECK(roundtrip_check(fan.complex));

    // conic complete complex inside the upper halfspace: checked as a
    // lifted complex (slice first, then lift back)
    auto cc = cone_complex(fan.complex);
    REQUIRE(cc.verdict.valid());
    REQUIRE(is_complete(cc.complex));
    CHECK(roundtrip_check(cc.complex));

    Rng rng(54);
    for (int iter = 0; iter < 8; ++iter) {
        PolyhedralComplex world = rng.complete_complex(rng.uniform(1, 2), 2);
        CHECK(roundtrip_check(world));
        auto lifted = cone_complex(world);
        REQUIRE(lifted.verdict.valid());
        CHECK(roundtrip_check(lifted.complex));
    }

    CHECK_THROWS_AS(roundtrip_check(ex17().complex), std::invalid_argument);
}

TEST_CASE("aff rejects unusable inputs") {
    auto sq = build_complex(2, {cell(2, {hs({1, 0}, 0), hs({-1, 0}, -1), hs({0, 1}, 0),
                                         hs({0, -1}, -1)})});
    CHECK_THROWS_AS(aff(sq.complex), std::invalid_argument); // not conic

    auto fan1 = build_complex(1, {cell(1, {hs({1}, 0)}), cell(1, {hs({-1}, 0)})});
    CHECK_THROWS_AS(aff(fan1.complex), std::invalid_argument); // dim 1

    // conic but sticking below the upper halfspace
    auto low = quadrant_fan();
    CHECK_THROWS_AS(aff(low.complex), std::invalid_argument);
}

TEST_CASE("arrangement census") {
    CHECK(arrangement_complex({}, 2).cells().size() == 1);
    CHECK(arrangement_complex({hs({1}, 0)}, 1).cells().size() == 3);
    // two crossing lines: 4 sectors + 4 rays + origin
    auto arr = arrangement_complex({hs({1, 0}, 0), hs({0, 1}, 0)}, 2);
    CHECK(arr.cells().size() == 9);
    CHECK(is_complete(arr));
    CHECK(is_fan(arr.cells()));
    // duplicate and rescaled planes collapse
    auto dup = arrangement_complex({hs({1, 0}, 0), hs({-2, 0}, 0), hs({0, 1}, 0)}, 2);
    CHECK(dup.cells().size() == 9);
    // parallel lines: 3 strips + 2 lines
    auto par = arrangement_complex({hs({1, 0}, 0), hs({1, 0}, 1)}, 2);
    CHECK(par.cells().size() == 5);
    CHECK_THROWS_AS(arrangement_complex({hs({1, 0}, 0)}, 0), std::invalid_argument);
}

TEST_CASE("subdivision of a halfline and of the counterexample") {
    Polyhedron halfline = cell(1, {hs({1}, 0)});
    auto hl = build_complex(1, {halfline});
    auto sub = extendable_subdivision(hl.complex);
    CHECK(sub.refined.cells().size() == 2); // halfline and its apex
    CHECK(sub.extension.cells().size() == 3);
    CHECK(verify_complex(sub.refined.cells()).valid());
    CHECK(is_complete(sub.extension));

    auto c17 = ex17();
    auto s17 = extendable_subdivision(c17.complex);
    CHECK(verify_complex(s17.refined.cells()).valid());
    CHECK(verify_complex(s17.extension.cells()).valid());
    CHECK(is_complete(s17.extension));
    // the refinement looks like a complex whose recession cells do form a
    // complex (the point of subdividing)
    auto recsub = recession_complex(s17.refined);
    CHECK(recsub.verdict.valid());
    // support unchanged in both directions
    PolyhedralSet before = support(c17.complex);
    PolyhedralSet after = support(s17.refined);
    for (const auto& piece : after.pieces) CHECK(covers(before, piece));
    for (const auto& piece : before.pieces) CHECK(covers(after, piece));
    // every refined cell sits inside a single input cell
    for (const auto& r : s17.refined.cells()) {
        bool inside = false;
        for (const auto& c : c17.complex.cells()) inside = inside || c.contains(r);
        CHECK(inside);
    }
    // refined cells are cells of the complete extension
    std::set<Polyhedron> ext(s17.extension.cells().begin(), s17.extension.cells().end());
    for (const auto& r : s17.refined.cells()) CHECK(ext.count(r) == 1);
}

TEST_CASE("subdivision invariants on random subcomplexes") {
    Rng rng(55);
    for (int iter = 0; iter < 15; ++iter) {
        PolyhedralComplex sub = rng.subcomplex(rng.complete_complex(2, 2));
        auto s = extendable_subdivision(sub);
        CHECK(verify_complex(s.refined.cells()).valid());
        CHECK(is_complete(s.extension));
        PolyhedralSet before = support(sub);
        PolyhedralSet after = support(s.refined);
        for (const auto& piece : after.pieces) CHECK(covers(before, piece));
        for (const auto& piece : before.pieces) CHECK(covers(after, piece));
        std::set<Polyhedron> ext(s.extension.cells().begin(), s.extension.cells().end());
        for (const auto& r : s.refined.cells()) CHECK(ext.count(r) == 1);
    }
}

TEST_CASE("toric datum of the quadrant fan") {
    auto fan = quadrant_fan();
    REQUIRE(fan.verdict.valid());
    REQUIRE(fan.complex.cells().size() == 9);
    auto td = toric_datum(fan.complex);
    CHECK(td.dim == 3);
    CHECK(td.cones.size() == 18);

    // primitive integer generators, entrywise
    for (const auto& cone : td.cones)
        for (const auto& ray : cone.rays) {
            Integer g = 0;
            for (const auto& x : ray) {
                CHECK(denominator(x) == 1);
                g = boost::multiprecision::gcd(g, numerator(x));
            }
            CHECK(g == 1);
        }

    // the trivial cone is a face of all 17 others; the t-ray of the other
    // 8 lifted cones only
    auto cc = cone_complex(fan.complex);
    REQUIRE(cc.verdict.valid());
    const auto& cells = cc.complex.cells();
    int trivial = -1, tray = -1;
    Polyhedron t = conical_hull(3, {qv({0, 0, 1})});
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] == Polyhedron::point(qv({0, 0, 0}))) trivial = static_cast<int>(i);
        if (cells[i] == t) tray = static_cast<int>(i);
    }
    REQUIRE(trivial >= 0);
    REQUIRE(tray >= 0);
    CHECK(td.cones[trivial].rays.empty());
    CHECK(td.cones[trivial].faces_of.size() == 17);
    CHECK(td.cones[tray].faces_of.size() == 8);
    // faces_of indices agree with geometric containment
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::set<int> listed(td.cones[i].faces_of.begin(), td.cones[i].faces_of.end());
        for (std::size_t j = 0; j < cells.size(); ++j) {
            bool should = i != j && cells[j].contains(cells[i]);
            CHECK(should == (listed.count(static_cast<int>(j)) == 1));
        }
    }
}

TEST_CASE("toric datum names the violated precondition") {
    auto check_message = [](const PolyhedralComplex& c, const char* needle) {
        try {
            toric_datum(c);
            FAIL_CHECK("expected a refusal mentioning \"" << needle << "\"");
        } catch (const std::invalid_argument& ex) {
            CHECK(std::string(ex.what()).find(needle) != std::string::npos);
        }
    };

    check_message(ex17().complex, "complete");

    // a lone quadrant without its faces is not a complex
    check_message(PolyhedralComplex(2, {cell(2, {hs({1, 0}, 0), hs({0, 1}, 0)})}), "valid");

    // the arrangement of one line contains that line: not strongly convex
    auto halves = arrangement_complex({hs({1, 0}, 0)}, 2);
    REQUIRE(is_complete(halves));
    check_message(halves, "strongly convex");
}

TEST_CASE("recession cones of all faces give exactly the faces of the recession cone") {
    Rng rng(56);
    for (int iter = 0; iter < 40; ++iter) {
        Polyhedron p = rng.nonempty_polyhedron(rng.uniform(1, 3), 5);
        std::set<Polyhedron> via_faces;
        for (const auto& f : faces(p)) via_faces.insert(recession_cone(f));
        auto rec_faces = faces(recession_cone(p));
        std::set<Polyhedron> expected(rec_faces.begin(), rec_faces.end());
        CHECK(via_faces == expected);
    }
}
