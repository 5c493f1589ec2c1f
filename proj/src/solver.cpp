#include "totmatch/solver.hpp"

#include "totmatch/catalog.hpp"

#include <algorithm>
#include <functional>

namespace totmatch {

std::vector<int> hungarian_min(const QMat& cost) {
    const int n = static_cast<int>(cost.size());
    if (n == 0) return {};
    const int m = static_cast<int>(cost[0].size());
    if (m < n) throw std::invalid_argument("assignment needs at least as many columns as rows");
    // A strict upper bound on any slack that can occur.
    Rational inf = 1;
    for (const auto& row : cost)
        for (const auto& x : row) inf += abs(x);

    QVec u(n + 1, Rational(0)), v(m + 1, Rational(0));
    std::vector<int> p(m + 1, 0), way(m + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        QVec minv(m + 1, inf);
        std::vector<bool> used(m + 1, false);
        do {
            used[j0] = true;
            int i0 = p[j0], j1 = -1;
            Rational delta = inf;
            for (int j = 1; j <= m; ++j) {
                if (used[j]) continue;
                Rational cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= m; ++j)
        if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

namespace {

// One side of the reduction: elements of the removed side's vertices are
// forbidden; kept vertices choose their own vertex weight, one incident
// edge, or nothing.
std::pair<Rational, TotalMatching> solve_one_side(const Graph& g, const QVec& weights,
                                                  const std::vector<int>& kept,
                                                  const std::vector<int>& removed) {
    const int k = static_cast<int>(kept.size());
    const int u = static_cast<int>(removed.size());
    auto edge_weight = [&](int a, int b) { return weights[element_index(g, Element::edge(a, b))]; };
    auto clamp = [](const Rational& x) { return x > 0 ? x : Rational(0); };

    Rational forbid = 1;
    for (const auto& w : weights) forbid += abs(w);

    // Columns: removed vertices, then one self column per kept vertex.
    QMat cost(k, QVec(u + k, forbid));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < u; ++j) cost[i][j] = -clamp(edge_weight(kept[i], removed[j]));
        cost[i][u + i] = -clamp(weights[kept[i]]);
    }
    auto assignment = hungarian_min(cost);

    TotalMatching witness;
    for (int i = 0; i < k; ++i) {
        int col = assignment[i];
        if (col < u) {
            if (edge_weight(kept[i], removed[col]) > 0)
                witness.push_back(element_index(g, Element::edge(kept[i], removed[col])));
        } else if (weights[kept[i]] > 0) {
            witness.push_back(kept[i]);
        }
    }
    std::sort(witness.begin(), witness.end());
    Rational value = 0;
    for (int d : witness) value += weights[d];
    return {value, witness};
}

} // namespace

std::pair<Rational, TotalMatching> solve_complete_bipartite(const Graph& g, const QVec& weights) {
    if (!is_complete_bipartite(g))
        throw std::invalid_argument("solver requires a complete bipartite graph");
    if (static_cast<int>(weights.size()) != g.vertex_count + g.edge_count())
        throw std::invalid_argument("weight vector has wrong length");
    const auto& a = g.bipartition->side_a;
    const auto& b = g.bipartition->side_b;
    auto no_b = solve_one_side(g, weights, a, b);
    auto no_a = solve_one_side(g, weights, b, a);
    return no_a.first > no_b.first ? no_a : no_b;
}

std::pair<Rational, TotalMatching> solve_kbipartite(int r, int s, const QVec& weights) {
    return solve_complete_bipartite(make_complete_bipartite(r, s), weights);
}

SeparationResult separate_balanced(const Graph& g, const QVec& point, int r,
                                   long long pair_limit) {
    if (!is_complete_bipartite(g))
        throw std::invalid_argument("balanced separation requires a complete bipartite graph");
    if (static_cast<int>(point.size()) != g.vertex_count + g.edge_count())
        throw std::invalid_argument("point has wrong length");
    for (const auto& x : point)
        if (x < 0) throw std::invalid_argument("separation point must be nonnegative");
    const auto& a_side = g.bipartition->side_a;
    const auto& b_side = g.bipartition->side_b;
    if (r < 1 || r > static_cast<int>(std::min(a_side.size(), b_side.size())))
        throw std::invalid_argument("subset size out of range");

    auto choose = [](int n, int k) {
        BigInt c = 1;
        for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
        return c;
    };
    if (choose(static_cast<int>(a_side.size()), r) * choose(static_cast<int>(b_side.size()), r) >
        pair_limit)
        throw LimitError("balanced separation candidate count exceeds limit");

    SeparationResult result;
    result.violation = 0;
    std::vector<int> sa, sb;
    std::function<void(std::size_t)> pick_b;
    std::function<void(std::size_t)> pick_a = [&](std::size_t start) {
        if (static_cast<int>(sa.size()) == r) {
            pick_b(0);
            return;
        }
        for (std::size_t i = start; i < a_side.size(); ++i) {
            sa.push_back(a_side[i]);
            pick_a(i + 1);
            sa.pop_back();
        }
    };
    pick_b = [&](std::size_t start) {
        if (static_cast<int>(sb.size()) == r) {
            Rational lhs = 0;
            for (int v : sa) lhs += point[v];
            for (int v : sb) lhs += point[v];
            for (int x : sa)
                for (int y : sb) lhs += point[element_index(g, Element::edge(x, y))];
            Rational violation = lhs - r;
            if (violation > result.violation) {
                result.violated = true;
                result.violation = violation;
                result.inequality = balanced_biclique_inequality(g, sa, sb);
            }
            return;
        }
        for (std::size_t i = start; i < b_side.size(); ++i) {
            sb.push_back(b_side[i]);
            pick_b(i + 1);
            sb.pop_back();
        }
    };
    pick_a(0);
    return result;
}

SeparationResult separate_catalog(int r, int s, const QVec& point) {
    Graph g = make_complete_bipartite(r, s);
    if (static_cast<int>(point.size()) != g.vertex_count + g.edge_count())
        throw std::invalid_argument("point has wrong length");
    HPolytope catalog = complete_bipartite_description(r, s);
    SeparationResult result;
    result.violation = 0;
    for (const auto& row : catalog.rows) {
        Rational violation = row.violation(point);
        if (violation > result.violation) {
            result.violated = true;
            result.violation = violation;
            result.inequality = row;
        }
    }
    return result;
}

} // namespace totmatch
