#include "totmatch/dd.hpp"

#include "totmatch/errors.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

namespace totmatch {

namespace {

using Bitset = boost::dynamic_bitset<>;

struct Ray {
    QVec dir;
    Bitset tight; // over processed rows, in processing order
};

struct DdState {
    std::size_t dim = 0;
    QMat lineality;
    std::vector<Ray> rays;
    QMat processed; // rows already cut, equalities included
};

// Cuts the current cone with {row.x >= 0} (or = 0 for an equality). If some
// lineality direction leaves the hyperplane, it is pivoted out; otherwise the
// rays are split by sign and adjacent (+,-) pairs are combined.
void process_row(DdState& st, const QVec& row, bool equality) {
    const std::size_t row_index = st.processed.size();

    for (std::size_t li = 0; li < st.lineality.size(); ++li) {
        Rational d = dot(row, st.lineality[li]);
        if (d == 0) continue;
        QVec pivot = st.lineality[li];
        if (d < 0) {
            pivot = scaled(pivot, Rational(-1));
            d = -d;
        }
        st.lineality.erase(st.lineality.begin() + li);
        for (auto& l : st.lineality) {
            Rational dl = dot(row, l);
            if (dl != 0) l = axpy(l, -dl / d, pivot);
        }
        for (auto& r : st.rays) {
            Rational dr = dot(row, r.dir);
            if (dr != 0) r.dir = normalized_integral(axpy(r.dir, -dr / d, pivot));
            r.tight.push_back(true);
        }
        if (!equality) {
            Ray nr;
            nr.dir = normalized_integral(pivot);
            nr.tight = Bitset(row_index + 1);
            for (std::size_t i = 0; i < row_index; ++i) nr.tight[i] = true;
            st.rays.push_back(std::move(nr));
        }
        st.processed.push_back(row);
        return;
    }

    std::vector<std::size_t> plus, minus;
    std::vector<Rational> vals(st.rays.size());
    for (std::size_t i = 0; i < st.rays.size(); ++i) {
        vals[i] = dot(row, st.rays[i].dir);
        if (vals[i] > 0) plus.push_back(i);
        if (vals[i] < 0) minus.push_back(i);
    }

    // Two extreme rays are adjacent iff their common tight rows have rank
    // exactly dim - |lineality| - 2.
    const int needed = static_cast<int>(st.dim) - static_cast<int>(st.lineality.size()) - 2;
    auto adjacent_rays = [&](std::size_t a, std::size_t b) {
        if (needed < 0) return false;
        Bitset common = st.rays[a].tight & st.rays[b].tight;
        if (static_cast<int>(common.count()) < needed) return false;
        QMat tight_rows;
        for (std::size_t i = common.find_first(); i != Bitset::npos; i = common.find_next(i))
            tight_rows.push_back(st.processed[i]);
        return rank(tight_rows) == needed;
    };

    std::vector<Ray> combos;
    for (std::size_t p : plus)
        for (std::size_t m : minus) {
            if (!adjacent_rays(p, m)) continue;
            Ray combo;
            combo.dir = normalized_integral(
                axpy(scaled(st.rays[m].dir, vals[p]), -vals[m], st.rays[p].dir));
            combo.tight = st.rays[p].tight & st.rays[m].tight;
            combo.tight.push_back(true);
            combos.push_back(std::move(combo));
        }
    std::vector<Ray> next;
    for (std::size_t i = 0; i < st.rays.size(); ++i) {
        bool keep = equality ? vals[i] == 0 : vals[i] >= 0;
        if (keep) {
            Ray r = std::move(st.rays[i]);
            r.tight.push_back(vals[i] == 0);
            next.push_back(std::move(r));
        }
    }
    for (auto& combo : combos) next.push_back(std::move(combo));
    st.rays = std::move(next);
    st.processed.push_back(row);
}

QMat sorted_unique(QMat rows) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

} // namespace

ConeDescription dd_cone(const QMat& equalities, const QMat& inequalities) {
    std::size_t dim = 0;
    if (!equalities.empty()) dim = equalities[0].size();
    if (!inequalities.empty()) dim = inequalities[0].size();
    if (dim == 0) throw std::invalid_argument("dd_cone needs at least one row");

    DdState st;
    st.dim = dim;
    for (std::size_t i = 0; i < dim; ++i) {
        QVec e(dim, Rational(0));
        e[i] = 1;
        st.lineality.push_back(std::move(e));
    }
    // Lexicographic insertion order, equalities first.
    for (const auto& row : sorted_unique(equalities))
        if (!is_zero(row)) process_row(st, row, true);
    for (const auto& row : sorted_unique(inequalities))
        if (!is_zero(row)) process_row(st, row, false);

    ConeDescription out;
    out.lineality = rref(st.lineality);
    std::sort(out.lineality.begin(), out.lineality.end());
    for (auto& r : st.rays) out.rays.push_back(std::move(r.dir));
    out.rays = sorted_unique(std::move(out.rays));
    return out;
}

HPolytope dd_hull(const VPolytope& v, int dimension_limit) {
    if (!v.rays.empty()) throw std::invalid_argument("dd_hull expects a polytope without rays");
    if (v.vertices.empty()) throw std::invalid_argument("dd_hull of empty vertex set");
    const int dim = v.space.dimension();
    if (dim > dimension_limit)
        throw LimitError("hull dimension " + std::to_string(dim) + " exceeds limit " +
                         std::to_string(dimension_limit));

    // Facets of conv(V) are the extreme rays of the cone of valid rows
    // { (b, -a) : a.x <= b on V }, encoded as { y : (1, p).y >= 0, p in V };
    // its lineality directions are the affine-hull equalities.
    QMat ineq;
    for (const auto& p : v.vertices) {
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("vertex dimension mismatch");
        QVec row(dim + 1);
        row[0] = 1;
        for (int j = 0; j < dim; ++j) row[j + 1] = p[j];
        ineq.push_back(std::move(row));
    }
    auto cone = dd_cone({}, ineq);

    HPolytope out;
    out.space = v.space;
    for (const auto& l : cone.lineality) {
        QVec coeffs(l.begin() + 1, l.end());
        out.add(LinearInequality(std::move(coeffs), -l[0], Rel::Eq));
    }
    for (const auto& r : cone.rays) {
        QVec coeffs(r.size() - 1);
        bool trivial = true;
        for (std::size_t j = 1; j < r.size(); ++j) {
            coeffs[j - 1] = -r[j];
            if (r[j] != 0) trivial = false;
        }
        if (trivial) continue; // 0 <= b artifact of a hull with no facets
        out.add(LinearInequality(std::move(coeffs), r[0], Rel::LessEq));
    }
    out.canonicalize();
    return out;
}

QMat dd_rays(const HPolytope& cone, int dimension_limit) {
    QMat eq, ineq;
    for (const auto& row : cone.rows) {
        if (row.rhs != 0) throw std::invalid_argument("dd_rays expects homogeneous rows");
        // Internal convention is >= 0.
        if (row.rel == Rel::Eq)
            eq.push_back(row.coeffs);
        else
            ineq.push_back(scaled(row.coeffs, Rational(-1)));
    }
    if (eq.empty() && ineq.empty()) throw std::invalid_argument("dd_rays of empty system");
    const int effective = cone.space.dimension() - rank(eq);
    if (effective > dimension_limit)
        throw LimitError("cone dimension " + std::to_string(effective) + " exceeds limit " +
                         std::to_string(dimension_limit));
    auto desc = dd_cone(eq, ineq);
    if (!desc.lineality.empty())
        throw std::invalid_argument("cone has nontrivial lineality, no extreme rays");
    return desc.rays;
}

VPolytope enumerate_vertices(const HPolytope& p, int dimension_limit) {
    const int dim = p.space.dimension();
    if (dim > dimension_limit)
        throw LimitError("polytope dimension " + std::to_string(dim) + " exceeds limit " +
                         std::to_string(dimension_limit));
    // Homogenize: { (t, x) : t >= 0, A x <= b t, C x = d t }.
    QMat eq, ineq;
    for (const auto& row : p.rows) {
        QVec h(dim + 1);
        h[0] = row.rhs;
        for (int j = 0; j < dim; ++j) h[j + 1] = -row.coeffs[j];
        if (row.rel == Rel::Eq)
            eq.push_back(std::move(h));
        else
            ineq.push_back(std::move(h));
    }
    {
        QVec t(dim + 1, Rational(0));
        t[0] = 1;
        ineq.push_back(std::move(t));
    }
    auto cone = dd_cone(eq, ineq);
    if (!cone.lineality.empty())
        throw std::invalid_argument("polyhedron has a lineality space, not pointed");
    VPolytope out;
    out.space = p.space;
    for (const auto& r : cone.rays) {
        if (r[0] == 0) {
            out.rays.push_back(normalized_integral(QVec(r.begin() + 1, r.end())));
        } else {
            QVec x(r.begin() + 1, r.end());
            out.vertices.push_back(scaled(x, Rational(1) / r[0]));
        }
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

} // namespace totmatch
