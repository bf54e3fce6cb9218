#include "polyrec/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace polyrec {

namespace {

std::vector<Polyhedron> sorted_dedup(std::vector<Polyhedron> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

void check_cells(int dim, const std::vector<Polyhedron>& cells, const char* who) {
    if (dim < 1) throw std::invalid_argument(std::string(who) + ": dim must be >= 1");
    for (const auto& c : cells) {
        if (c.is_empty())
            throw std::invalid_argument(std::string(who) + ": empty cell");
        if (c.ambient_dim() != dim)
            throw std::invalid_argument(std::string(who) + ": cell dimension mismatch");
    }
}

// One directed constraint per halfspace of q: inequalities as-is, equalities
// as two opposite inequalities.
std::vector<Halfspace> directed_constraints(const Polyhedron& q) {
    std::vector<Halfspace> out = q.hrep().inequalities;
    for (const auto& e : q.hrep().equalities) {
        out.push_back(e);
        out.push_back(Halfspace{scale(e.normal, Rational(-1)), -e.offset});
    }
    return out;
}

Polyhedron cut(const Polyhedron& r, const Halfspace& c, bool below) {
    HRep h = r.hrep();
    if (below)
        h.inequalities.push_back(Halfspace{scale(c.normal, Rational(-1)), -c.offset});
    else
        h.inequalities.push_back(c);
    return Polyhedron::from_hrep(h);
}

// part is contained in {c.normal * u <= c.offset}; true iff some point of
// part satisfies it strictly, i.e. part is not inside the hyperplane.
bool has_strict_point(const Polyhedron& part, const Halfspace& c) {
    for (const auto& v : part.vrep().vertices)
        if (dot(c.normal, v) != c.offset) return true;
    for (const auto& r : part.vrep().rays)
        if (dot(c.normal, r) != 0) return true;
    for (const auto& l : part.vrep().lines)
        if (dot(c.normal, l) != 0) return true;
    return false;
}

// Decision core of covers().  The region p is covered by pieces[k..] iff
// every strictly-protruding part carved off by a constraint of pieces[k] is
// covered by the remaining pieces (closedness makes the boundary slices
// free), and the remainder lies inside pieces[k] by construction.
bool covered_from(const Polyhedron& p, const std::vector<Polyhedron>& pieces, std::size_t k) {
    if (p.is_empty()) return true;
    if (k == pieces.size()) return false;
    const Polyhedron& q = pieces[k];
    if (q.contains(p)) return true;
    Polyhedron r = p;
    for (const Halfspace& c : directed_constraints(q)) {
        Polyhedron part = cut(r, c, /*below=*/true);
        if (part.is_empty() || !has_strict_point(part, c)) continue;
        if (!covered_from(part, pieces, k + 1)) return false;
        r = cut(r, c, /*below=*/false);
        if (r.is_empty()) return true;
    }
    return true;
}

} // namespace

PolyhedralComplex::PolyhedralComplex(int dim, std::vector<Polyhedron> cells) : dim_(dim) {
    check_cells(dim, cells, "PolyhedralComplex");
    cells_ = sorted_dedup(std::move(cells));
    for (const auto& c : cells_) {
        conic_ = conic_ && c.is_cone();
        strongly_convex_ = strongly_convex_ && c.is_strongly_convex();
    }
}

ComplexVerdict verify_complex(const std::vector<Polyhedron>& cells_in) {
    ComplexVerdict verdict;
    if (cells_in.empty()) return verdict;
    check_cells(cells_in.front().ambient_dim(), cells_in, "verify_complex");
    std::vector<Polyhedron> cells = sorted_dedup(cells_in);
    const int n = static_cast<int>(cells.size());

    std::map<Polyhedron, int> index;
    for (int i = 0; i < n; ++i) index.emplace(cells[i], i);

    // Axiom 1 via facet presence: facet closure implies face closure by
    // induction on dimension.
    std::vector<std::vector<int>> facet_idx(n);
    for (int i = 0; i < n; ++i) {
        for (Polyhedron& f : facets(cells[i])) {
            auto it = index.find(f);
            if (it == index.end()) {
                verdict.status = ComplexVerdict::Status::missing_face;
                verdict.cell_a = cells[i];
                verdict.witness = std::move(f);
                return verdict;
            }
            facet_idx[i].push_back(it->second);
        }
    }

    // Face sets, built bottom-up in order of increasing cell dimension.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::vector<int> cell_dim(n);
    for (int i = 0; i < n; ++i) cell_dim[i] = cells[i].dim();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cell_dim[a] < cell_dim[b]; });
    std::vector<std::vector<bool>> face_of(n, std::vector<bool>(n, false));
    for (int i : order) {
        face_of[i][i] = true;
        for (int f : facet_idx[i])
            for (int k = 0; k < n; ++k)
                if (face_of[f][k]) face_of[i][k] = true;
    }

    // Axiom 2: pairwise intersections are empty or common faces.  Pairs of
    // maximal cells are scanned first: when several pairs violate the axiom,
    // the reported one involves the cells that actually carry the support,
    // and lower-dimensional fallout of the same defect is suppressed.
    auto check_pair = [&](int i, int j) -> bool {
        if (face_of[i][j] || face_of[j][i]) return true;
        Polyhedron isec = intersect(cells[i], cells[j]);
        if (isec.is_empty()) return true;
        auto it = index.find(isec);
        if (it != index.end() && face_of[i][it->second] && face_of[j][it->second]) return true;
        verdict.status = ComplexVerdict::Status::bad_pair;
        verdict.cell_a = cells[i];
        verdict.cell_b = cells[j];
        verdict.witness = std::move(isec);
        return false;
    };
    std::vector<bool> maximal(n, true);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n && maximal[i]; ++k)
            if (k != i && cells[k].contains(cells[i])) maximal[i] = false;
    for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                bool both_maximal = maximal[i] && maximal[j];
                if (both_maximal != (pass == 0)) continue;
                if (!check_pair(i, j)) return verdict;
            }
    return verdict;
}

ComplexResult build_complex(int dim, const std::vector<Polyhedron>& cells) {
    check_cells(dim, cells, "build_complex");
    std::set<Polyhedron> closed;
    for (const auto& c : cells)
        for (Polyhedron& f : faces(c)) closed.insert(std::move(f));
    std::vector<Polyhedron> all(closed.begin(), closed.end());
    ComplexVerdict verdict = verify_complex(all);
    return ComplexResult{PolyhedralComplex(dim, std::move(all)), std::move(verdict)};
}

PolyhedralSet support(const PolyhedralComplex& c) {
    PolyhedralSet e;
    e.dim = c.dim();
    const auto& cells = c.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (i == j) continue;
            if (cells[j].contains(cells[i])) { maximal = false; break; }
        }
        if (maximal) e.pieces.push_back(cells[i]);
    }
    return e;
}

Connectivity is_connected(const PolyhedralSet& e) {
    Connectivity out;
    const int n = static_cast<int>(e.pieces.size());
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            int i = comp[head];
            for (int j = 0; j < n; ++j) {
                if (seen[j]) continue;
                if (!intersect(e.pieces[i], e.pieces[j]).is_empty()) {
                    seen[j] = true;
                    comp.push_back(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
    }
    out.connected = out.components.size() <= 1;
    return out;
}

bool covers(const PolyhedralSet& e, const Polyhedron& p) {
    for (const auto& q : e.pieces)
        if (q.ambient_dim() != p.ambient_dim())
            throw std::invalid_argument("covers: dimension mismatch");
    return covered_from(p, e.pieces, 0);
}

namespace {

std::optional<QVector> search_sign_cells(const Polyhedron& region,
                                         const std::vector<Halfspace>& hps, std::size_t idx,
                                         const std::vector<Polyhedron>& pieces) {
    if (region.is_empty()) return std::nullopt;
    if (idx == hps.size()) {
        QVector w = relative_interior_point(region);
        for (const auto& q : pieces)
            if (q.contains_point(w)) return std::nullopt;
        return w;
    }
    const Halfspace& c = hps[idx];
    // Piece membership is constant on the relative interior of each closed
    // sign region, so scanning all three branches finds a witness whenever
    // one exists.
    {
        HRep h = region.hrep();
        h.equalities.push_back(c);
        if (auto w = search_sign_cells(Polyhedron::from_hrep(h), hps, idx + 1, pieces)) return w;
    }
    if (auto w = search_sign_cells(cut(region, c, /*below=*/false), hps, idx + 1, pieces)) return w;
    return search_sign_cells(cut(region, c, /*below=*/true), hps, idx + 1, pieces);
}

} // namespace

std::optional<QVector> uncovered_point(const PolyhedralSet& e, const Polyhedron& p) {
    if (covers(e, p)) return std::nullopt;
    std::vector<Halfspace> hps;
    for (const auto& q : e.pieces) {
        for (const auto& c : q.hrep().inequalities) hps.push_back(canonical_hyperplane(c.normal, c.offset));
        for (const auto& c : q.hrep().equalities) hps.push_back(canonical_hyperplane(c.normal, c.offset));
    }
    std::sort(hps.begin(), hps.end(),
              [](const Halfspace& a, const Halfspace& b) { return compare(a, b) < 0; });
    hps.erase(std::unique(hps.begin(), hps.end(),
                          [](const Halfspace& a, const Halfspace& b) { return compare(a, b) == 0; }),
              hps.end());
    auto w = search_sign_cells(p, hps, 0, e.pieces);
    if (!w) throw std::logic_error("uncovered_point: decision and witness search disagree");
    return w;
}

bool is_complete(const PolyhedralComplex& c) {
    Polyhedron target = Polyhedron::whole_space(c.dim());
    if (c.conic()) {
        QVector last(c.dim(), Rational(0));
        last.back() = 1;
        target = Polyhedron::from_hrep(HRep{c.dim(), {Halfspace{last, Rational(0)}}, {}});
    }
    return covers(support(c), target);
}

bool ray_in_set(const PolyhedralSet& e, const QVector& p, const QVector& u) {
    bool inside = false;
    for (const auto& q : e.pieces)
        if (q.contains_point(p)) { inside = true; break; }
    if (!inside) throw std::invalid_argument("ray_in_set: base point not in the set");
    if (static_cast<int>(u.size()) != e.dim)
        throw std::invalid_argument("ray_in_set: direction dimension mismatch");
    if (is_zero(u)) return true;

    struct Interval {
        Rational lo;
        std::optional<Rational> hi; // nullopt = +infinity
    };
    std::vector<Interval> intervals;
    for (const auto& q : e.pieces) {
        Interval iv{Rational(0), std::nullopt};
        bool feasible = true;
        auto bound = [&](const Rational& c1, const Rational& c0, bool equality) {
            // constraint: c0 + lambda*c1 >= 0 (or = 0 for equalities)
            if (c1 == 0) {
                if (c0 < 0 || (equality && c0 != 0)) feasible = false;
                return;
            }
            Rational t = -c0 / c1;
            if (c1 > 0 || equality) iv.lo = std::max(iv.lo, t);
            if (c1 < 0 || equality) {
                if (!iv.hi || *iv.hi > t) iv.hi = t;
            }
        };
        for (const auto& c : q.hrep().inequalities)
            bound(dot(c.normal, u), dot(c.normal, p) - c.offset, false);
        for (const auto& c : q.hrep().equalities) {
            if (!feasible) break;
            bound(dot(c.normal, u), dot(c.normal, p) - c.offset, true);
        }
        if (!feasible) continue;
        if (iv.hi && *iv.hi < iv.lo) continue;
        intervals.push_back(std::move(iv));
    }

    // Finitely many closed intervals cover [0, inf) iff the greedy sweep
    // reaches infinity.
    Rational reach = 0;
    bool reached_start = false;
    for (const auto& iv : intervals)
        if (iv.lo <= reach && (!iv.hi || *iv.hi >= reach)) { reached_start = true; break; }
    if (!reached_start) return false;
    for (;;) {
        bool progress = false;
        for (const auto& iv : intervals) {
            if (iv.lo > reach) continue;
            if (!iv.hi) return true;
            if (*iv.hi > reach) { reach = *iv.hi; progress = true; }
        }
        if (!progress) return false;
    }
}

bool global_recession_contains(const PolyhedralSet& e, const QVector& u) {
    if (static_cast<int>(u.size()) != e.dim)
        throw std::invalid_argument("global_recession_contains: dimension mismatch");
    if (is_zero(u)) return true;
    Polyhedron shoot = conical_hull(e.dim, {u});
    for (const auto& q : e.pieces)
        if (!covers(e, minkowski_sum(q, shoot))) return false;
    return true;
}

MWReport check_minkowski_weyl(const PolyhedralComplex& pi) {
    MWReport report;
    PolyhedralSet e = support(pi);
    const int dim = pi.dim();
    if (e.pieces.empty()) {
        report.holds = true;
        report.sigma = conical_hull(dim, {});
        report.delta_pieces = std::vector<Polyhedron>{};
        return report;
    }

    std::vector<Polyhedron> sigmas;
    QMatrix tau_rays, tau_lines;
    for (const auto& q : e.pieces) {
        Polyhedron s = recession_cone(q);
        for (const auto& r : s.vrep().rays) tau_rays.push_back(r);
        for (const auto& l : s.vrep().lines) tau_lines.push_back(l);
        sigmas.push_back(std::move(s));
    }
    Polyhedron tau = conical_hull(dim, tau_rays, tau_lines);

    bool ok = covers(PolyhedralSet{dim, sigmas}, tau);
    std::vector<Polyhedron> deltas;
    for (const auto& q : e.pieces) deltas.push_back(polytope_part(q));
    if (ok) {
        for (const auto& d : deltas)
            if (!covers(e, minkowski_sum(d, tau))) { ok = false; break; }
    }
    if (ok) {
        report.holds = true;
        report.sigma = std::move(tau);
        report.delta_pieces = std::move(deltas);
        return report;
    }

    // Failure witness: some recession generator of some maximal cell is not
    // a global recession direction (if every generator were, both coverage
    // conditions above would hold).
    for (std::size_t i = 0; i < e.pieces.size(); ++i) {
        QMatrix gens = sigmas[i].vrep().rays;
        for (const auto& l : sigmas[i].vrep().lines) {
            gens.push_back(l);
            gens.push_back(scale(l, Rational(-1)));
        }
        for (const auto& g : gens) {
            if (global_recession_contains(e, g)) continue;
            report.failure_witness = std::make_pair(relative_interior_point(e.pieces[i]), g);
            return report;
        }
    }
    throw std::logic_error("check_minkowski_weyl: failed without a witness generator");
}

std::optional<Polyhedron> recession_of_support(const PolyhedralComplex& pi) {
    MWReport r = check_minkowski_weyl(pi);
    if (r.holds) return r.sigma;
    return std::nullopt;
}

} // namespace polyrec
