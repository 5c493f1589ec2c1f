#include "totmatch/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace totmatch {

namespace {

std::string set_note(const char* name, const std::vector<int>& vertices) {
    std::ostringstream out;
    out << name << "={";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) out << ",";
        out << vertices[i] + 1;
    }
    out << "}";
    return out.str();
}

// (A, B) induces a biclique: disjoint, all cross pairs edges, no inner edges.
bool induces_biclique(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
        for (int v : b)
            if (u == v || !g.has_edge(u, v)) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (g.has_edge(a[i], a[j])) return false;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (g.has_edge(b[i], b[j])) return false;
    return true;
}

bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
    for (int v : small)
        if (std::find(big.begin(), big.end(), v) == big.end()) return false;
    return true;
}

void for_each_subset(const std::vector<int>& ground, int size,
                     const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(size);
    std::vector<int> chosen(size);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == size) {
            fn(chosen);
            return;
        }
        for (int i = start; i <= static_cast<int>(ground.size()) - (size - pos); ++i) {
            chosen[pos] = ground[i];
            self(self, pos + 1, i + 1);
        }
    };
    if (size == 0) {
        std::vector<int> empty;
        fn(empty);
        return;
    }
    rec(rec, 0, 0);
}

} // namespace

std::vector<LinearInequality> relaxation_inequalities(const Graph& g) {
    const int n = g.vertex_count;
    const int k = n + g.edge_count();
    std::vector<LinearInequality> rows;
    for (int v = 0; v < n; ++v) {
        QVec c(k, Rational(0));
        c[v] = 1;
        for (auto [a, b] : g.edges)
            if (a == v || b == v) c[element_index(g, Element::edge(a, b))] = 1;
        rows.emplace_back(std::move(c), Rational(1), Rel::LessEq, Family::Node,
                          element_id(Element::vertex(v)));
    }
    for (auto [a, b] : g.edges) {
        QVec c(k, Rational(0));
        c[a] = 1;
        c[b] = 1;
        c[element_index(g, Element::edge(a, b))] = 1;
        rows.emplace_back(std::move(c), Rational(1), Rel::LessEq, Family::Edge,
                          element_id(Element::edge(a, b)));
    }
    auto elems = elements(g);
    for (int i = 0; i < k; ++i) {
        QVec c(k, Rational(0));
        c[i] = -1;
        rows.emplace_back(std::move(c), Rational(0), Rel::LessEq, Family::Nonneg,
                          element_id(elems[i]));
    }
    return rows;
}

LinearInequality balanced_biclique_inequality(const Graph& g, const std::vector<int>& side_a,
                                              const std::vector<int>& side_b) {
    const int r = static_cast<int>(side_a.size());
    if (r < 2 || side_b.size() != side_a.size())
        throw std::invalid_argument("balanced biclique needs equal sides of size >= 2");
    if (!induces_biclique(g, side_a, side_b))
        throw std::invalid_argument("vertex sets do not induce a biclique");
    const int k = g.vertex_count + g.edge_count();
    QVec c(k, Rational(0));
    for (int v : side_a) c[v] = 1;
    for (int v : side_b) c[v] = 1;
    for (int u : side_a)
        for (int v : side_b) c[element_index(g, Element::edge(u, v))] = 1;
    return LinearInequality(std::move(c), Rational(r), Rel::LessEq, Family::BalancedBiclique,
                            set_note("A", side_a) + " " + set_note("B", side_b));
}

Rational lifted_beta(int r, int s, int a1, int b1) {
    return make_rational(s + a1 - r - b1, a1 - b1);
}

LinearInequality nonbalanced_lifted_inequality(const Graph& g, const BicliqueSelector& sel) {
    const int r = static_cast<int>(sel.side_a.size());
    const int s = static_cast<int>(sel.side_b.size());
    const int a1 = static_cast<int>(sel.a1.size());
    const int b1 = static_cast<int>(sel.b1.size());
    if (r < 2 || s <= r) throw std::invalid_argument("lifted row needs |B| > |A| >= 2");
    if (!(r > a1 && a1 > b1 && b1 >= 0))
        throw std::invalid_argument("lifted row needs |A| > |A1| > |B1| >= 0");
    if (b1 == 0 && a1 != 1)
        throw std::invalid_argument("lifted row with empty B1 needs |A1| = 1");
    if (!is_subset(sel.a1, sel.side_a) || !is_subset(sel.b1, sel.side_b))
        throw std::invalid_argument("A1, B1 must be subsets of A, B");
    if (!induces_biclique(g, sel.side_a, sel.side_b))
        throw std::invalid_argument("vertex sets do not induce a biclique");

    const Rational beta = lifted_beta(r, s, a1, b1);
    const int k = g.vertex_count + g.edge_count();
    QVec c(k, Rational(0));
    auto in = [](const std::vector<int>& set, int v) {
        return std::find(set.begin(), set.end(), v) != set.end();
    };
    for (int v : sel.side_a) c[v] = in(sel.a1, v) ? beta : 1;
    for (int v : sel.side_b) c[v] = in(sel.b1, v) ? beta : 1;
    for (int u : sel.side_a)
        for (int v : sel.side_b) {
            bool block = in(sel.a1, u) && in(sel.b1, v);
            c[element_index(g, Element::edge(u, v))] = block ? beta : 1;
        }
    Rational rhs = Rational(a1) * (beta - 1) + r;
    return LinearInequality(std::move(c), rhs, Rel::LessEq, Family::NonbalancedLifted,
                            set_note("A", sel.side_a) + " " + set_note("B", sel.side_b) + " " +
                                set_note("A1", sel.a1) + " " + set_note("B1", sel.b1));
}

LinearInequality plain_nonbalanced_inequality(const Graph& g, const std::vector<int>& side_a,
                                              const std::vector<int>& side_b) {
    const int r = static_cast<int>(side_a.size());
    const int s = static_cast<int>(side_b.size());
    if (r < 2 || s <= r) throw std::invalid_argument("plain row needs |B| > |A| >= 2");
    if (!induces_biclique(g, side_a, side_b))
        throw std::invalid_argument("vertex sets do not induce a biclique");
    const int k = g.vertex_count + g.edge_count();
    QVec c(k, Rational(0));
    for (int v : side_a) c[v] = 1;
    for (int v : side_b) c[v] = 1;
    for (int u : side_a)
        for (int v : side_b) c[element_index(g, Element::edge(u, v))] = 1;
    return LinearInequality(std::move(c), Rational(s), Rel::LessEq, Family::Other,
                            "non-facet " + set_note("A", side_a) + " " + set_note("B", side_b));
}

HPolytope tree_description(const Graph& g) {
    if (!is_tree(g)) throw std::invalid_argument("graph is not a tree");
    HPolytope p;
    p.space = element_space(g);
    for (auto& row : relaxation_inequalities(g)) p.add(std::move(row));
    return p;
}

HPolytope complete_bipartite_description(int r, int s) {
    Graph g = make_complete_bipartite(r, s);
    HPolytope p;
    p.space = element_space(g);
    for (auto& row : relaxation_inequalities(g)) p.add(std::move(row));

    const auto& a_side = g.bipartition->side_a;
    const auto& b_side = g.bipartition->side_b;
    for (int k = 2; k <= std::min(r, s); ++k)
        for_each_subset(a_side, k, [&](const std::vector<int>& sa) {
            for_each_subset(b_side, k, [&](const std::vector<int>& sb) {
                p.add(balanced_biclique_inequality(g, sa, sb));
            });
        });

    // Lifted rows for every non-balanced biclique subgraph, the smaller side
    // in the role of A, over all admissible (A1, B1).
    for (int a = 2; a <= std::max(r, s); ++a)
        for (int b = a + 1; b <= std::max(r, s); ++b) {
            for (int small_from_a = 0; small_from_a < 2; ++small_from_a) {
                const auto& small_side = small_from_a ? a_side : b_side;
                const auto& large_side = small_from_a ? b_side : a_side;
                if (a > static_cast<int>(small_side.size()) ||
                    b > static_cast<int>(large_side.size()))
                    continue;
                for_each_subset(small_side, a, [&](const std::vector<int>& sa) {
                    for_each_subset(large_side, b, [&](const std::vector<int>& sb) {
                        for (int a1 = 1; a1 < a; ++a1) {
                            int b1_lo = a1 == 1 ? 0 : 1;
                            for (int b1 = b1_lo; b1 < a1; ++b1)
                                for_each_subset(sa, a1, [&](const std::vector<int>& xa) {
                                    for_each_subset(sb, b1, [&](const std::vector<int>& xb) {
                                        p.add(nonbalanced_lifted_inequality(
                                            g, BicliqueSelector{sa, sb, xa, xb}));
                                    });
                                });
                        }
                    });
                });
            }
        }

    // Distinct selectors can in principle meet in normalized form; keep the
    // first occurrence.
    std::vector<LinearInequality> unique_rows;
    for (auto& row : p.rows) {
        bool dup = false;
        for (const auto& kept : unique_rows)
            if (kept.same_row(row)) {
                dup = true;
                break;
            }
        if (!dup) unique_rows.push_back(std::move(row));
    }
    p.rows = std::move(unique_rows);
    return p;
}

ValidityResult is_valid(const Graph& g, const LinearInequality& ineq, int element_limit) {
    if (static_cast<int>(ineq.coeffs.size()) != g.vertex_count + g.edge_count())
        throw std::invalid_argument("row dimension does not match the graph");
    for (const auto& t : enumerate_total_matchings(g, EnumerationMode::All, element_limit))
        if (!ineq.satisfied_by(characteristic_vector(g, t))) return {false, t};
    return {true, {}};
}

FacetResult is_facet(const Graph& g, const LinearInequality& ineq, int element_limit) {
    auto validity = is_valid(g, ineq, element_limit);
    if (!validity.valid)
        throw std::invalid_argument("row is not valid for the graph's total matchings");
    const int full = g.vertex_count + g.edge_count();
    FacetResult result;
    Echelon ech;
    QVec base;
    for (const auto& t : enumerate_total_matchings(g, EnumerationMode::All, element_limit)) {
        QVec chi = characteristic_vector(g, t);
        if (dot(ineq.coeffs, chi) != ineq.rhs) continue;
        if (result.certificate.empty()) {
            base = chi;
            result.certificate.push_back(std::move(chi));
        } else if (ech.insert(axpy(chi, Rational(-1), base))) {
            result.certificate.push_back(std::move(chi));
        }
    }
    result.tight_rank = static_cast<int>(result.certificate.size());
    result.facet = result.tight_rank == full;
    return result;
}

DescriptionReport verify_description(const Graph& g, const HPolytope& h, int element_limit,
                                     int dimension_limit) {
    VPolytope v;
    v.space = element_space(g);
    for (const auto& t : enumerate_total_matchings(g, EnumerationMode::All, element_limit))
        v.vertices.push_back(characteristic_vector(g, t));
    HPolytope hull = dd_hull(v, dimension_limit);

    DescriptionReport report;
    report.hull_facets = static_cast<int>(hull.rows.size());
    report.missing = row_set_difference(hull.rows, h.rows);
    report.extra = row_set_difference(h.rows, hull.rows);
    report.complete = report.missing.empty();
    report.irredundant = report.extra.empty();
    report.sound = true;
    for (const auto& row : h.rows) {
        auto validity = is_valid(g, row, element_limit);
        if (!validity.valid) {
            report.sound = false;
            report.invalid.push_back(row);
        }
    }
    return report;
}

} // namespace totmatch
