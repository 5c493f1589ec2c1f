#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "totmatch/balas.hpp"
#include "totmatch/catalog.hpp"
#include "totmatch/enumerate.hpp"
#include "totmatch/solver.hpp"

#include <set>

using namespace totmatch;
namespace oracle = totmatch::testing;

namespace {

// A side-free characteristic vector lifts by hand: lambda1 = 1 and y1 = y
// puts all weight on the first disjunct, lambda1 = 0 and y1 = 0 on the second.
ExtendedVector manual_lift(const Graph& g, const QVec& chi, bool first_disjunct) {
    const int n = g.vertex_count, m = g.edge_count();
    ExtendedVector v(chi);
    v.push_back(Rational(first_disjunct ? 1 : 0));
    for (int e = 0; e < m; ++e) v.push_back(first_disjunct ? chi[n + e] : Rational(0));
    return v;
}

} // namespace

TEST_CASE("P_A and P_B shapes") {
    auto [pa, pb] = build_PA_PB(2, 2);
    // 2 node + 2 star + 6 nonneg + 2 equalities.
    CHECK(pa.rows.size() == 12);
    CHECK(pb.rows.size() == 12);
    int eq = 0;
    for (const auto& row : pa.rows)
        if (row.rel == Rel::Eq) ++eq;
    CHECK(eq == 2);

    Graph g = make_complete_bipartite(2, 2);
    QVec chi_a = characteristic_vector(g, {0, 1}); // both side-A vertices
    CHECK(pa.contains(chi_a));
    CHECK_FALSE(pb.contains(chi_a));
}

TEST_CASE("vertices of P_A are the side-free characteristic vectors") {
    auto [pa, pb] = build_PA_PB(2, 2);
    Graph g = make_complete_bipartite(2, 2);
    std::set<QVec> expected;
    for (const auto& t : enumerate_total_matchings(g, EnumerationMode::All)) {
        bool avoids_b = true;
        for (int d : t)
            if (d == 2 || d == 3) avoids_b = false;
        if (avoids_b) expected.insert(characteristic_vector(g, t));
    }
    CHECK(expected.size() == 14);
    auto v = enumerate_vertices(pa);
    CHECK(v.rays.empty());
    CHECK(std::set<QVec>(v.vertices.begin(), v.vertices.end()) == expected);
}

TEST_CASE("Q has the documented shape") {
    auto q22 = build_Q(2, 2);
    CHECK(q22.space.dimension() == 13);
    CHECK(q22.rows.size() == 22);
    auto q23 = build_Q(2, 3);
    CHECK(q23.space.dimension() == 18);
    CHECK(q23.rows.size() == 29);

    // Multiplier labels: every cone coordinate appears exactly once, the
    // projected-variable bounds are unlabeled.
    auto ids = cone_space(2, 2).ids;
    std::multiset<std::string> labels;
    int unlabeled = 0;
    for (const auto& row : q22.rows) {
        if (row.note.empty())
            ++unlabeled;
        else
            labels.insert(row.note);
    }
    CHECK(unlabeled == 4);
    CHECK(labels.size() == ids.size());
    for (const auto& id : ids) CHECK(labels.count(id) == 1);
}

TEST_CASE("side-free matchings satisfy Q after the manual lift") {
    Graph g = make_complete_bipartite(2, 3);
    auto q = build_Q(2, 3);
    for (const auto& t : enumerate_total_matchings(g, EnumerationMode::All)) {
        bool touches_a = false, touches_b = false;
        for (int d : t) {
            if (d < 2) touches_a = true;
            else if (d < 5) touches_b = true;
        }
        QVec chi = characteristic_vector(g, t);
        if (!touches_b) CHECK(q.contains(manual_lift(g, chi, true)));
        if (!touches_a) CHECK(q.contains(manual_lift(g, chi, false)));
    }
}

TEST_CASE("lift_point certifies membership") {
    Graph g = make_complete_bipartite(2, 2);
    auto q = build_Q(2, 2);

    auto zero = lift_point(QVec(8, Rational(0)), 2, 2);
    REQUIRE(zero.has_value());
    CHECK(q.contains(*zero));

    QVec pm = characteristic_vector(g, {element_index(g, Element::edge(0, 2)),
                                        element_index(g, Element::edge(1, 3))});
    auto lifted_pm = lift_point(pm, 2, 2);
    REQUIRE(lifted_pm.has_value());
    CHECK(q.contains(*lifted_pm));

    QVec side_b = characteristic_vector(g, {2, 3});
    auto lifted_b = lift_point(side_b, 2, 2);
    REQUIRE(lifted_b.has_value());
    CHECK(q.contains(*lifted_b));

    CHECK_FALSE(lift_point(QVec(8, Rational(1)), 2, 2).has_value());
    QVec slightly_out(8, Rational(0));
    slightly_out[0] = parse_rational("9/8"); // x beyond 1
    CHECK_FALSE(lift_point(slightly_out, 2, 2).has_value());
}

TEST_CASE("every small characteristic vector lifts") {
    for (auto [r, s] :
         std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 2}, {2, 3},
                                          {2, 4}, {3, 3}}) {
        Graph g = make_complete_bipartite(r, s);
        auto q = build_Q(r, s);
        for (const auto& t : enumerate_total_matchings(g, EnumerationMode::All)) {
            auto lifted = lift_point(characteristic_vector(g, t), r, s);
            REQUIRE(lifted.has_value());
            CHECK(q.contains(*lifted));
        }
    }
}

TEST_CASE("Q rows appear in the documented order") {
    auto q = build_Q(2, 2);
    std::vector<std::string> expected{
        "u1_v1", "u1_v2", "u1_v3", "u1_v4", "u2_v3",     "u2_v4",     "u2_v1",     "u2_v2",
        "u1_e1-3", "u1_e1-4", "u1_e2-3", "u1_e2-4", "u2_e1-3", "u2_e1-4", "u2_e2-3", "u2_e2-4",
        "", "", "", "", "ul1", "ul2"};
    REQUIRE(q.rows.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(q.rows[i].note == expected[i]);
}

TEST_CASE("projected witnesses of solve_over_Q are never separated") {
    std::mt19937_64 rng(47);
    for (auto [r, s] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
        const int k = r + s + r * s;
        for (int trial = 0; trial < 10; ++trial) {
            QVec w(k);
            for (auto& x : w) x = Rational(oracle::rand_int(rng, -4, 6));
            auto sol = solve_over_Q(r, s, w);
            auto sep = separate_catalog(r, s, sol.projected);
            CHECK_FALSE(sep.violated);
        }
    }
}

TEST_CASE("solve_over_Q examples and random equivalence") {
    CHECK(solve_over_Q(2, 2, QVec(8, Rational(1))).value == 2);
    CHECK(solve_over_Q(2, 3, QVec(11, Rational(1))).value == 3);
    CHECK(solve_over_Q(2, 2, QVec(8, Rational(0))).value == 0);

    std::mt19937_64 rng(3);
    for (auto [r, s] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
        Graph g = make_complete_bipartite(r, s);
        const int k = g.vertex_count + g.edge_count();
        for (int trial = 0; trial < 15; ++trial) {
            QVec w(k);
            for (auto& x : w) x = Rational(oracle::rand_int(rng, -5, 5));
            auto via_q = solve_over_Q(r, s, w);
            auto brute = max_weight_total_matching_bruteforce(g, w);
            CHECK(via_q.value == brute.value);
        }
    }
}

TEST_CASE("projection cone shape and membership") {
    auto cone = projection_cone(2, 2);
    CHECK(cone.space.dimension() == 18);
    int eq = 0;
    for (const auto& row : cone.rows)
        if (row.rel == Rel::Eq) ++eq;
    CHECK(eq == 5);

    // u1 = 1 on side A, u2 = 1 on side B, edge and lambda slots zero.
    QVec u(18, Rational(0));
    u[0] = u[1] = 1;  // u1_v1, u1_v2
    u[6] = u[7] = 1;  // u2_v3, u2_v4
    CHECK(cone.contains(u));
    QVec bad = u;
    bad[8] = -1;
    CHECK_FALSE(cone.contains(bad));
    CHECK_THROWS_AS(ray_to_inequality(bad, 2, 2), std::invalid_argument);
}

TEST_CASE("cone from Q's labeled rows agrees with the stated equalities") {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
        auto direct = projection_cone(r, s);
        auto from_rows = projection_cone_from_rows(build_Q(r, s), r, s);
        QMat eq_direct, eq_rows;
        for (const auto& row : direct.rows)
            if (row.rel == Rel::Eq) eq_direct.push_back(row.coeffs);
        for (const auto& row : from_rows.rows)
            if (row.rel == Rel::Eq) eq_rows.push_back(row.coeffs);
        CHECK(eq_rows.size() == eq_direct.size());
        CHECK(rref(eq_direct) == rref(eq_rows));
    }
}

TEST_CASE("ray images: balanced pattern") {
    // Unit multipliers on a side pair give the balanced biclique row.
    Graph g = make_complete_bipartite(2, 2);
    QVec u(18, Rational(0));
    u[0] = u[1] = 1;
    u[6] = u[7] = 1;
    auto mapped = ray_to_inequality(u, 2, 2);
    auto expected = balanced_biclique_inequality(g, {0, 1}, {2, 3});
    CHECK(mapped.strengthened.same_row(expected));
}

TEST_CASE("ray images: lifted pattern") {
    // On K23 with A' = {v1}, B' = {w1, w2, w3}: unit multipliers on A' and
    // B' plus u1 = |B'| - |A'| on the leftover vertex v2 give the lifted row
    // with A1 = {v2}, B1 empty.
    Graph g = make_complete_bipartite(2, 3);
    const int n = 5, m = 6;
    QVec u(2 * (n + m + 1), Rational(0));
    u[0] = 1;                          // u1_v1
    u[1] = 2;                          // u1_v2 = |B'| - |A'|
    u[n + 2] = u[n + 3] = u[n + 4] = 1; // u2 on w1, w2, w3
    // Edge equalities force u1_e = 1 on edges at v2, everything else zero;
    // vertex sums are equal so both lambda slots stay zero.
    for (int e = 0; e < m; ++e) {
        auto [v, w] = g.edges[e];
        Rational gap = u[v] + u[w] - u[n + v] - u[n + w];
        if (gap >= 0)
            u[2 * n + e] = gap;
        else
            u[2 * n + m + e] = -gap;
    }
    REQUIRE(projection_cone(2, 3).contains(u));
    auto mapped = ray_to_inequality(u, 2, 3);
    auto expected =
        nonbalanced_lifted_inequality(g, BicliqueSelector{{0, 1}, {2, 3, 4}, {1}, {}});
    CHECK(mapped.strengthened.same_row(expected));
}

TEST_CASE("zero multiplier maps to the trivial row") {
    auto mapped = ray_to_inequality(QVec(18, Rational(0)), 2, 2);
    CHECK(is_zero(mapped.strengthened.coeffs));
    CHECK(mapped.strengthened.rhs == 0);
}

TEST_CASE("strengthened form dominates the raw form on extreme rays") {
    auto cone = projection_cone(2, 2);
    for (const auto& ray : dd_rays(cone)) {
        auto mapped = ray_to_inequality(ray, 2, 2);
        for (std::size_t i = 0; i < mapped.raw.coeffs.size(); ++i)
            CHECK(mapped.raw.coeffs[i] <= mapped.strengthened.coeffs[i]);
        CHECK(mapped.raw.rhs >= mapped.strengthened.rhs);
    }
}

TEST_CASE("extreme rays restricted to vertex multipliers satisfy the support count") {
    // Each extreme ray should satisfy 2(r+s) - 1 independent constraints
    // among { u^j_v = 0 }, the per-edge vertex equalities, and the vertex
    // balance equality.
    const int r = 2, s = 2, n = r + s;
    Graph g = make_complete_bipartite(r, s);
    auto cone = projection_cone(r, s);
    for (const auto& ray : dd_rays(cone)) {
        QMat tight;
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < 2; ++j)
                if (ray[j * n + v] == 0) {
                    QVec row(2 * n, Rational(0));
                    row[j * n + v] = 1;
                    tight.push_back(std::move(row));
                }
        for (auto [v, w] : g.edges) {
            if (ray[v] + ray[w] == ray[n + v] + ray[n + w]) {
                QVec row(2 * n, Rational(0));
                row[v] = row[w] = 1;
                row[n + v] = row[n + w] = -1;
                tight.push_back(std::move(row));
            }
        }
        {
            Rational s1 = 0, s2 = 0;
            for (int v = 0; v < n; ++v) {
                s1 += ray[v];
                s2 += ray[n + v];
            }
            if (s1 == s2) {
                QVec row(2 * n, Rational(0));
                for (int v = 0; v < n; ++v) {
                    row[v] = 1;
                    row[n + v] = -1;
                }
                tight.push_back(std::move(row));
            }
        }
        CHECK(rank(tight) >= 2 * n - 1);
    }
}

TEST_CASE("project_Q matches the catalog beyond the smallest sizes") {
    auto p23 = project_Q(2, 3, 17);
    CHECK(same_row_set(p23.rows, complete_bipartite_description(2, 3).rows));
    auto p24 = project_Q(2, 4, 21);
    CHECK(same_row_set(p24.rows, complete_bipartite_description(2, 4).rows));
    auto p33 = project_Q(3, 3, 22);
    CHECK(same_row_set(p33.rows, complete_bipartite_description(3, 3).rows));
}

TEST_CASE("project_Q matches the catalog on small instances") {
    auto p11 = project_Q(1, 1);
    CHECK(p11.rows.size() == 4);
    Graph k11 = make_complete_bipartite(1, 1);
    VPolytope v;
    v.space = element_space(k11);
    for (const auto& t : enumerate_total_matchings(k11, EnumerationMode::All))
        v.vertices.push_back(characteristic_vector(k11, t));
    CHECK(same_row_set(p11.rows, dd_hull(v).rows));

    auto p22 = project_Q(2, 2);
    CHECK(same_row_set(p22.rows, complete_bipartite_description(2, 2).rows));

    Graph g = make_complete_bipartite(2, 2);
    for (const auto& row : p22.rows) CHECK(is_valid(g, row).valid);
}
