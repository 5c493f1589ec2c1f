#include "totmatch/balas.hpp"

#include "totmatch/enumerate.hpp"

#include <algorithm>

namespace totmatch {

namespace {

struct Layout {
    Graph g;
    int n, m;

    explicit Layout(int r, int s) : g(make_complete_bipartite(r, s)) {
        n = g.vertex_count;
        m = g.edge_count();
    }
    int x(int v) const { return v; }
    int y(int e) const { return n + e; }
    int l1() const { return n + m; }
    int y1(int e) const { return n + m + 1 + e; }
    int lifted_dim() const { return n + 2 * m + 1; }

    int u1v(int v) const { return v; }
    int u2v(int v) const { return n + v; }
    int u1e(int e) const { return 2 * n + e; }
    int u2e(int e) const { return 2 * n + m + e; }
    int ul1() const { return 2 * n + 2 * m; }
    int ul2() const { return 2 * n + 2 * m + 1; }
    int cone_dim() const { return 2 * (n + m + 1); }

    std::vector<int> incident(int v) const {
        std::vector<int> out;
        for (int e = 0; e < m; ++e)
            if (g.edges[e].first == v || g.edges[e].second == v) out.push_back(e);
        return out;
    }
};

} // namespace

Space lifted_space(int r, int s) {
    Layout lay(r, s);
    Space sp;
    for (int v = 0; v < lay.n; ++v) sp.ids.push_back("x" + std::to_string(v + 1));
    for (auto [u, v] : lay.g.edges)
        sp.ids.push_back("y" + std::to_string(u + 1) + "-" + std::to_string(v + 1));
    sp.ids.push_back("l1");
    for (auto [u, v] : lay.g.edges)
        sp.ids.push_back("y1_" + std::to_string(u + 1) + "-" + std::to_string(v + 1));
    return sp;
}

Space cone_space(int r, int s) {
    Layout lay(r, s);
    Space sp;
    for (int v = 0; v < lay.n; ++v) sp.ids.push_back("u1_v" + std::to_string(v + 1));
    for (int v = 0; v < lay.n; ++v) sp.ids.push_back("u2_v" + std::to_string(v + 1));
    for (auto [u, v] : lay.g.edges)
        sp.ids.push_back("u1_e" + std::to_string(u + 1) + "-" + std::to_string(v + 1));
    for (auto [u, v] : lay.g.edges)
        sp.ids.push_back("u2_e" + std::to_string(u + 1) + "-" + std::to_string(v + 1));
    sp.ids.push_back("ul1");
    sp.ids.push_back("ul2");
    return sp;
}

std::pair<HPolytope, HPolytope> build_PA_PB(int r, int s) {
    Layout lay(r, s);
    const int dim = lay.n + lay.m;
    auto build = [&](const std::vector<int>& kept, const std::vector<int>& removed) {
        HPolytope p;
        p.space = element_space(lay.g);
        for (int v : kept) {
            QVec c(dim, Rational(0));
            c[v] = 1;
            for (int e : lay.incident(v)) c[lay.n + e] = 1;
            p.add(LinearInequality(std::move(c), Rational(1), Rel::LessEq, Family::Node,
                                   element_id(Element::vertex(v))));
        }
        for (int w : removed) {
            QVec c(dim, Rational(0));
            for (int e : lay.incident(w)) c[lay.n + e] = 1;
            p.add(LinearInequality(std::move(c), Rational(1), Rel::LessEq, Family::Other,
                                   "star " + element_id(Element::vertex(w))));
        }
        for (int v : kept) {
            QVec c(dim, Rational(0));
            c[v] = -1;
            p.add(LinearInequality(std::move(c), Rational(0), Rel::LessEq, Family::Nonneg,
                                   element_id(Element::vertex(v))));
        }
        for (int e = 0; e < lay.m; ++e) {
            QVec c(dim, Rational(0));
            c[lay.n + e] = -1;
            p.add(LinearInequality(std::move(c), Rational(0), Rel::LessEq, Family::Nonneg,
                                   element_id(elements(lay.g)[lay.n + e])));
        }
        for (int w : removed) {
            QVec c(dim, Rational(0));
            c[w] = 1;
            p.add(LinearInequality(std::move(c), Rational(0), Rel::Eq, Family::Other,
                                   "excluded " + element_id(Element::vertex(w))));
        }
        return p;
    };
    const auto& a = lay.g.bipartition->side_a;
    const auto& b = lay.g.bipartition->side_b;
    return {build(a, b), build(b, a)};
}

HPolytope build_Q(int r, int s) {
    Layout lay(r, s);
    HPolytope q;
    q.space = lifted_space(r, s);
    const int dim = lay.lifted_dim();
    auto cone_ids = cone_space(r, s).ids;
    const auto& a = lay.g.bipartition->side_a;
    const auto& b = lay.g.bipartition->side_b;

    for (int v : a) {
        QVec c(dim, Rational(0));
        c[lay.x(v)] = 1;
        for (int e : lay.incident(v)) c[lay.y1(e)] = 1;
        c[lay.l1()] = -1;
        q.add(LinearInequality(std::move(c), Rational(0), Rel::LessEq, Family::EfRaw,
                               cone_ids[lay.u1v(v)]));
    }
    for (int w : b) {
        QVec c(dim, Rational(0));
        for (int e : lay.incident(w)) c[lay.y1(e)] = 1;
        c[lay.l1()] = -1;
        q.add(LinearInequality(std::move(c), Rational(0), Rel::LessEq, Family::EfRaw,
                               cone_ids[lay.u1v(w)]));
    }
    for (int w : b) {
        QVec c(dim, Rational(0));
        c[lay.x(w)] = 1;
        for (int e : lay.incident(w)) {
            c[lay.y(e)] = 1;
            c[lay.y1(e)] = -1;
        }
        c[lay.l1()] = 1;
        q.add(LinearInequality(std::move(c), Rational(1), Rel::LessEq, Family::EfRaw,
                               cone_ids[lay.u2v(w)]));
    }
    for (int v : a) {
        QVec c(dim, Rational(0));
        for (int e : lay.incident(v)) {
            c[lay.y(e)] = 1;
            c[lay.y1(e)] = -1;
        }
        c[lay.l1()] = 1;
        q.add(LinearInequality(std::move(c), Rational(1), Rel::LessEq, Family::EfRaw,
                               cone_ids[lay.u2v(v)]));
    }
    for (int e = 0; e < lay.m; ++e) {
        QVec c(dim, Rational(0));
        c[lay.y1(e)] = -1;
        q.add(LinearInequality(std::move(c), Rational(0), Rel::LessEq, Family::EfRaw,
                               cone_ids[lay.u1e(e)]));
    }
    for (int e = 0; e < lay.m; ++e) {
        QVec c(dim, Rational(0));
        c[lay.y(e)] = -1;
        c[lay.y1(e)] = 1;
        q.add(LinearInequality(std::move(c), Rational(0), Rel::LessEq, Family::EfRaw,
                               cone_ids[lay.u2e(e)]));
    }
    for (int v = 0; v < lay.n; ++v) {
        QVec c(dim, Rational(0));
        c[lay.x(v)] = -1;
        q.add(LinearInequality(std::move(c), Rational(0), Rel::LessEq, Family::EfRaw, ""));
    }
    {
        QVec c(dim, Rational(0));
        c[lay.l1()] = -1;
        q.add(LinearInequality(std::move(c), Rational(0), Rel::LessEq, Family::EfRaw,
                               cone_ids[lay.ul1()]));
    }
    {
        QVec c(dim, Rational(0));
        c[lay.l1()] = 1;
        q.add(LinearInequality(std::move(c), Rational(1), Rel::LessEq, Family::EfRaw,
                               cone_ids[lay.ul2()]));
    }
    return q;
}

std::optional<ExtendedVector> lift_point(const QVec& z, int r, int s) {
    Layout lay(r, s);
    if (static_cast<int>(z.size()) != lay.n + lay.m)
        throw std::invalid_argument("point has wrong length");
    HPolytope q = build_Q(r, s);
    // Substitute (x, y) = z, leaving a feasibility system over (l1, y1).
    HPolytope reduced;
    reduced.space.ids.assign(q.space.ids.begin() + lay.n + lay.m, q.space.ids.end());
    for (const auto& row : q.rows) {
        Rational rhs = row.rhs;
        for (int i = 0; i < lay.n + lay.m; ++i) rhs -= row.coeffs[i] * z[i];
        QVec c(row.coeffs.begin() + lay.n + lay.m, row.coeffs.end());
        if (is_zero(c)) {
            if (rhs < 0) return std::nullopt;
            continue;
        }
        reduced.add(LinearInequality(std::move(c), rhs, row.rel));
    }
    QVec zero_objective(reduced.space.dimension(), Rational(0));
    auto res = lp_solve(reduced, zero_objective, Sense::Max);
    if (res.status != LpStatus::Optimal) return std::nullopt;
    ExtendedVector lifted(z);
    lifted.insert(lifted.end(), res.point.begin(), res.point.end());
    return lifted;
}

QSolution solve_over_Q(int r, int s, const QVec& objective) {
    Layout lay(r, s);
    if (static_cast<int>(objective.size()) != lay.n + lay.m)
        throw std::invalid_argument("objective has wrong length");
    HPolytope q = build_Q(r, s);
    QVec extended(lay.lifted_dim(), Rational(0));
    std::copy(objective.begin(), objective.end(), extended.begin());
    auto res = lp_solve(q, extended, Sense::Max);
    if (res.status != LpStatus::Optimal)
        throw std::logic_error("Q should be bounded and nonempty");
    QVec projected(res.point.begin(), res.point.begin() + lay.n + lay.m);
    return {res.value, std::move(projected)};
}

HPolytope projection_cone(int r, int s) {
    Layout lay(r, s);
    HPolytope cone;
    cone.space = cone_space(r, s);
    const int dim = lay.cone_dim();
    for (int e = 0; e < lay.m; ++e) {
        auto [v, w] = lay.g.edges[e];
        QVec c(dim, Rational(0));
        c[lay.u1v(v)] = 1;
        c[lay.u1v(w)] = 1;
        c[lay.u1e(e)] = -1;
        c[lay.u2v(v)] = -1;
        c[lay.u2v(w)] = -1;
        c[lay.u2e(e)] = 1;
        cone.add(LinearInequality(std::move(c), Rational(0), Rel::Eq, Family::Other,
                                  "edge " + element_id(Element::edge(v, w))));
    }
    {
        QVec c(dim, Rational(0));
        for (int v = 0; v < lay.n; ++v) {
            c[lay.u1v(v)] = 1;
            c[lay.u2v(v)] = -1;
        }
        c[lay.ul1()] = 1;
        c[lay.ul2()] = -1;
        cone.add(LinearInequality(std::move(c), Rational(0), Rel::Eq, Family::Other, "balance"));
    }
    for (int i = 0; i < dim; ++i) {
        QVec c(dim, Rational(0));
        c[i] = -1;
        cone.add(LinearInequality(std::move(c), Rational(0), Rel::LessEq, Family::Nonneg,
                                  cone.space.ids[i]));
    }
    return cone;
}

HPolytope projection_cone_from_rows(const HPolytope& q, int r, int s) {
    Layout lay(r, s);
    Space cs = cone_space(r, s);
    const int dim = lay.cone_dim();
    HPolytope cone;
    cone.space = cs;
    // One equality per lifted column c: sum over labeled rows of B[row][c] u.
    for (int lifted = lay.n + lay.m; lifted < lay.lifted_dim(); ++lifted) {
        QVec c(dim, Rational(0));
        for (const auto& row : q.rows) {
            if (row.note.empty()) {
                if (row.coeffs[lifted] != 0)
                    throw std::logic_error("unlabeled row touches a lifted column");
                continue;
            }
            auto it = std::find(cs.ids.begin(), cs.ids.end(), row.note);
            if (it == cs.ids.end()) throw std::logic_error("unknown multiplier label " + row.note);
            c[it - cs.ids.begin()] += row.coeffs[lifted];
        }
        cone.add(LinearInequality(std::move(c), Rational(0), Rel::Eq, Family::Other,
                                  "column " + q.space.ids[lifted]));
    }
    for (int i = 0; i < dim; ++i) {
        QVec c(dim, Rational(0));
        c[i] = -1;
        cone.add(
            LinearInequality(std::move(c), Rational(0), Rel::LessEq, Family::Nonneg, cs.ids[i]));
    }
    return cone;
}

ProjectedRow ray_to_inequality(const ConeRay& u, int r, int s) {
    Layout lay(r, s);
    if (static_cast<int>(u.size()) != lay.cone_dim())
        throw std::invalid_argument("multiplier vector has wrong length");
    HPolytope cone = projection_cone(r, s);
    for (const auto& row : cone.rows)
        if (!row.satisfied_by(u))
            throw std::invalid_argument("vector is not in the projection cone");

    const int dim = lay.n + lay.m;
    QVec strong(dim, Rational(0)), raw(dim, Rational(0));
    for (int v : lay.g.bipartition->side_a) strong[v] = raw[v] = u[lay.u1v(v)];
    for (int w : lay.g.bipartition->side_b) strong[w] = raw[w] = u[lay.u2v(w)];
    Rational sum1 = 0, sum2 = 0;
    for (int v = 0; v < lay.n; ++v) {
        sum1 += u[lay.u1v(v)];
        sum2 += u[lay.u2v(v)];
    }
    for (int e = 0; e < lay.m; ++e) {
        auto [v, w] = lay.g.edges[e];
        Rational side1 = u[lay.u1v(v)] + u[lay.u1v(w)];
        Rational side2 = u[lay.u2v(v)] + u[lay.u2v(w)];
        strong[lay.n + e] = side1 < side2 ? side1 : side2;
        raw[lay.n + e] = side2 - u[lay.u2e(e)];
    }
    Rational strong_rhs = sum1 > sum2 ? sum1 : sum2;
    Rational raw_rhs = sum2 + u[lay.ul2()];
    return {LinearInequality(std::move(strong), strong_rhs, Rel::LessEq, Family::Projected),
            LinearInequality(std::move(raw), raw_rhs, Rel::LessEq, Family::EfRaw)};
}

HPolytope project_Q(int r, int s, int dimension_limit) {
    Layout lay(r, s);
    HPolytope cone = projection_cone(r, s);
    QMat rays = dd_rays(cone, dimension_limit);

    HPolytope out;
    out.space = element_space(lay.g);
    for (const auto& ray : rays) {
        auto mapped = ray_to_inequality(ray, r, s);
        if (is_zero(mapped.strengthened.coeffs)) continue;
        bool dup = false;
        for (const auto& kept : out.rows)
            if (kept.same_row(mapped.strengthened)) {
                dup = true;
                break;
            }
        if (!dup) out.add(std::move(mapped.strengthened));
    }
    auto elems = elements(lay.g);
    for (int i = 0; i < lay.n + lay.m; ++i) {
        QVec c(lay.n + lay.m, Rational(0));
        c[i] = -1;
        out.add(LinearInequality(std::move(c), Rational(0), Rel::LessEq, Family::Nonneg,
                                 element_id(elems[i])));
    }
    return irredundant_rows(out);
}

} // namespace totmatch
