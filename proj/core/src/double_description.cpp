#include "double_description.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyrec::dd {

namespace {

struct Ray {
    QVector v;
    std::vector<bool> zero; // zero[i] = tight on the i-th processed row
};

// Incremental double description on a pure inequality system in R^k.
// Invariant: cone = span(lines) + cone(rays), rays extreme modulo lineality,
// lines orthogonal to every processed row.
struct State {
    QMatrix lines;
    std::vector<Ray> rays;
    QMatrix processed;

    explicit State(int k) {
        for (int i = 0; i < k; ++i) {
            QVector e(k, Rational(0));
            e[i] = 1;
            lines.push_back(std::move(e));
        }
    }

    std::vector<bool> zero_set(const QVector& v) const {
        std::vector<bool> z(processed.size());
        for (std::size_t i = 0; i < processed.size(); ++i)
            z[i] = (dot(processed[i], v) == 0);
        return z;
    }

    void insert(const QVector& a) {
        // Line folding: if some line leaves the hyperplane {a = 0}, the
        // lineality drops by one and the pivot line becomes a ray.
        int pivot = -1;
        for (std::size_t i = 0; i < lines.size(); ++i)
            if (dot(a, lines[i]) != 0) { pivot = static_cast<int>(i); break; }
        if (pivot >= 0) {
            QVector r0 = lines[pivot];
            Rational s = dot(a, r0);
            if (s < 0) { r0 = scale(r0, Rational(-1)); s = -s; }
            QMatrix folded;
            for (std::size_t i = 0; i < lines.size(); ++i) {
                if (static_cast<int>(i) == pivot) continue;
                Rational t = dot(a, lines[i]);
                folded.push_back(t == 0 ? lines[i] : sub(lines[i], scale(r0, t / s)));
            }
            lines = std::move(folded);
            // Previous rows vanish on r0 (it was a line), so only the new
            // row distinguishes the adjusted rays; their old zero sets are
            // unchanged.
            for (auto& r : rays) {
                Rational t = dot(a, r.v);
                if (t != 0) r.v = primitive(sub(r.v, scale(r0, t / s)));
                r.zero.push_back(true);
            }
            Ray nr;
            nr.v = primitive(std::move(r0));
            nr.zero.assign(processed.size(), true);
            nr.zero.push_back(false);
            rays.push_back(std::move(nr));
            processed.push_back(a);
            return;
        }

        std::vector<int> pos, neg, nil;
        std::vector<Rational> val(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i].v);
            if (val[i] > 0) pos.push_back(static_cast<int>(i));
            else if (val[i] < 0) neg.push_back(static_cast<int>(i));
            else nil.push_back(static_cast<int>(i));
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                rays[i].zero.push_back(val[i] == 0);
            processed.push_back(a);
            return;
        }

        std::vector<Ray> created;
        for (int ip : pos) {
            for (int in : neg) {
                if (!adjacent(ip, in)) continue;
                // val[ip] * neg - val[in] * pos has both coefficients > 0 and
                // lands on the hyperplane {a = 0}.
                QVector w = primitive(
                    sub(scale(rays[in].v, val[ip]), scale(rays[ip].v, val[in])));
                Ray nr;
                nr.v = std::move(w);
                nr.zero = zero_set(nr.v);
                nr.zero.push_back(true);
                created.push_back(std::move(nr));
            }
        }
        std::vector<Ray> next;
        for (int i : pos) { rays[i].zero.push_back(false); next.push_back(std::move(rays[i])); }
        for (int i : nil) { rays[i].zero.push_back(true); next.push_back(std::move(rays[i])); }
        for (auto& nr : created) next.push_back(std::move(nr));
        rays = std::move(next);
        processed.push_back(a);
    }

    // Combinatorial adjacency (Fukuda-Prodon): u,v are adjacent iff no third
    // ray is tight on every row tight at both u and v.  Valid because the
    // rays stay extreme modulo lineality throughout.
    bool adjacent(int u, int v) const {
        const auto& zu = rays[u].zero;
        const auto& zv = rays[v].zero;
        for (std::size_t w = 0; w < rays.size(); ++w) {
            if (static_cast<int>(w) == u || static_cast<int>(w) == v) continue;
            const auto& zw = rays[w].zero;
            bool superset = true;
            for (std::size_t i = 0; i < zu.size(); ++i) {
                if (zu[i] && zv[i] && !zw[i]) { superset = false; break; }
            }
            if (superset) return false;
        }
        return true;
    }
};

QMatrix canonical_line_basis(const QMatrix& lines) {
    QMatrix basis = rref(lines).rows;
    for (auto& row : basis) row = primitive(std::move(row));
    return basis;
}

Generators canonicalize(QMatrix rays, QMatrix lines) {
    Generators g;
    g.lines = canonical_line_basis(lines);
    Rref lr = rref(g.lines);
    for (auto& r : rays) {
        QVector red = primitive(reduce_mod(lr, std::move(r)));
        if (!is_zero(red)) g.rays.push_back(std::move(red));
    }
    std::sort(g.rays.begin(), g.rays.end(),
              [](const QVector& a, const QVector& b) { return compare(a, b) < 0; });
    g.rays.erase(std::unique(g.rays.begin(), g.rays.end(),
                             [](const QVector& a, const QVector& b) { return compare(a, b) == 0; }),
                 g.rays.end());
    return g;
}

} // namespace

Generators cone_from_rows(const QMatrix& ineq, const QMatrix& eq, int dim) {
    for (const auto& r : ineq)
        if (static_cast<int>(r.size()) != dim)
            throw std::invalid_argument("cone_from_rows: row dimension mismatch");
    for (const auto& r : eq)
        if (static_cast<int>(r.size()) != dim)
            throw std::invalid_argument("cone_from_rows: row dimension mismatch");

    // Normalize and dedup rows; opposite inequality pairs are equalities.
    QMatrix rows;
    for (const auto& r : ineq) {
        QVector p = primitive(r);
        if (!is_zero(p)) rows.push_back(std::move(p));
    }
    std::sort(rows.begin(), rows.end(),
              [](const QVector& a, const QVector& b) { return compare(a, b) < 0; });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const QVector& a, const QVector& b) { return compare(a, b) == 0; }),
               rows.end());
    QMatrix eqs = eq;
    QMatrix kept;
    for (const auto& r : rows) {
        QVector neg = scale(r, Rational(-1));
        bool has_opposite = std::binary_search(
            rows.begin(), rows.end(), neg,
            [](const QVector& a, const QVector& b) { return compare(a, b) < 0; });
        if (has_opposite) eqs.push_back(r);
        else kept.push_back(r);
    }

    // Restrict to the kernel of the equalities and run pure DD there.
    Rref er = rref(eqs);
    QMatrix K = kernel_basis(er.rows, dim);
    const int k = static_cast<int>(K.size());
    if (k == 0) return Generators{};

    QMatrix proj;
    for (const auto& r : kept) {
        QVector pr(k);
        bool zero = true;
        for (int j = 0; j < k; ++j) {
            pr[j] = dot(r, K[j]);
            if (pr[j] != 0) zero = false;
        }
        if (!zero) proj.push_back(primitive(std::move(pr)));
    }
    std::sort(proj.begin(), proj.end(),
              [](const QVector& a, const QVector& b) { return compare(a, b) < 0; });
    proj.erase(std::unique(proj.begin(), proj.end(),
                           [](const QVector& a, const QVector& b) { return compare(a, b) == 0; }),
               proj.end());

    State st(k);
    for (const auto& row : proj) st.insert(row);

    auto lift = [&](const QVector& y) {
        QVector x(dim, Rational(0));
        for (int j = 0; j < k; ++j)
            if (y[j] != 0) x = add(x, scale(K[j], y[j]));
        return x;
    };
    QMatrix rays, lines;
    for (const auto& r : st.rays) rays.push_back(lift(r.v));
    for (const auto& l : st.lines) lines.push_back(lift(l));
    return canonicalize(std::move(rays), std::move(lines));
}

Rows cone_to_rows(const QMatrix& rays, const QMatrix& lines, int dim) {
    // Polar cone {a : a.r >= 0, a.l = 0}; its extreme rays are the facet
    // normals and its lineality the functionals vanishing on the cone.
    Generators polar = cone_from_rows(rays, lines, dim);
    return Rows{polar.rays, polar.lines};
}

} // namespace polyrec::dd
