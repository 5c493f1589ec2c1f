#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "totmatch/catalog.hpp"
#include "totmatch/simplex.hpp"
#include "totmatch/solver.hpp"

using namespace totmatch;
namespace oracle = totmatch::testing;

TEST_CASE("hungarian on small matrices") {
    // Classic 3x3: optimal picks 1 + 2 + 2.
    QMat cost = {{Rational(1), Rational(4), Rational(5)},
                 {Rational(5), Rational(7), Rational(2)},
                 {Rational(5), Rational(2), Rational(8)}};
    auto assign = hungarian_min(cost);
    Rational total = 0;
    for (int i = 0; i < 3; ++i) total += cost[i][assign[i]];
    CHECK(total == 5);

    // Rectangular: rows pick distinct cheapest columns.
    QMat rect = {{Rational(3), Rational(1), Rational(9)},
                 {Rational(3), Rational(1), Rational(9)}};
    auto ra = hungarian_min(rect);
    CHECK(ra[0] != ra[1]);
    Rational rt = rect[0][ra[0]] + rect[1][ra[1]];
    CHECK(rt == 4);

    CHECK_THROWS_AS(hungarian_min(QMat{{Rational(1)}, {Rational(2)}}), std::invalid_argument);
}

TEST_CASE("hungarian equals brute-force assignment on random instances") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 4);
        int cols = rows + static_cast<int>(rng() % 3);
        QMat cost(rows, QVec(cols));
        for (auto& row : cost)
            for (auto& x : row) x = oracle::rand_rational(rng, 9, 4);
        auto assign = hungarian_min(cost);
        Rational got = 0;
        std::vector<bool> used(cols, false);
        for (int i = 0; i < rows; ++i) {
            CHECK_FALSE(used[assign[i]]);
            used[assign[i]] = true;
            got += cost[i][assign[i]];
        }
        // Exhaustive minimum over injective assignments.
        std::vector<int> perm(cols);
        for (int j = 0; j < cols; ++j) perm[j] = j;
        Rational best;
        bool first = true;
        std::sort(perm.begin(), perm.end());
        do {
            Rational v = 0;
            for (int i = 0; i < rows; ++i) v += cost[i][perm[i]];
            if (first || v < best) best = v;
            first = false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(got == best);
    }
}

TEST_CASE("solver spot values") {
    CHECK(solve_kbipartite(3, 3, QVec(15, Rational(1))).first == 3);
    CHECK(solve_kbipartite(2, 3, QVec(11, Rational(1))).first == 3);
    QVec w(8, Rational(10));
    for (int v = 0; v < 4; ++v) w[v] = 1;
    CHECK(solve_kbipartite(2, 2, w).first == 20);
    // All-negative weights: best total matching is empty.
    auto neg = solve_kbipartite(2, 2, QVec(8, Rational(-3)));
    CHECK(neg.first == 0);
    CHECK(neg.second.empty());
}

TEST_CASE("solver witness is an optimal total matching") {
    std::mt19937_64 rng(29);
    for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {1, 4}, {2, 2}, {2, 3}, {3, 3}}) {
        Graph g = make_complete_bipartite(r, s);
        const int k = g.vertex_count + g.edge_count();
        for (int trial = 0; trial < 30; ++trial) {
            QVec w = oracle::rand_rational_vector(rng, k);
            auto [value, witness] = solve_kbipartite(r, s, w);
            CHECK(is_total_matching(g, witness));
            Rational check = 0;
            for (int d : witness) check += w[d];
            CHECK(check == value);
            CHECK(value == max_weight_total_matching_bruteforce(g, w).value);
        }
    }
}

TEST_CASE("each side's assignment reduction matches the side-restricted optimum") {
    std::mt19937_64 rng(31);
    Graph g = make_complete_bipartite(2, 3);
    for (int trial = 0; trial < 20; ++trial) {
        QVec w = oracle::rand_rational_vector(rng, 11);
        // Side-restricted brute force: skip matchings touching the removed side.
        auto restricted_best = [&](bool remove_b) {
            Rational best = 0;
            for (const auto& t : enumerate_total_matchings(g, EnumerationMode::All)) {
                bool ok = true;
                for (int d : t) {
                    bool in_b = d >= 2 && d < 5;
                    bool in_a = d < 2;
                    if ((remove_b && in_b) || (!remove_b && in_a)) ok = false;
                }
                if (!ok) continue;
                Rational v = 0;
                for (int d : t) v += w[d];
                if (v > best) best = v;
            }
            return best;
        };
        Rational overall = solve_kbipartite(2, 3, w).first;
        Rational better = std::max(restricted_best(true), restricted_best(false));
        CHECK(overall == better);
    }
}

TEST_CASE("balanced separation examples") {
    Graph g = make_complete_bipartite(2, 2);
    QVec point(8, Rational(0));
    for (int e = 4; e < 8; ++e) point[e] = parse_rational("3/4");
    auto res = separate_balanced(g, point, 2);
    CHECK(res.violated);
    CHECK(res.violation == 1);
    REQUIRE(res.inequality.has_value());
    CHECK(res.inequality->family == Family::BalancedBiclique);

    QVec chi(8, Rational(0));
    chi[0] = 1; // a single vertex
    auto none = separate_balanced(g, chi, 2);
    CHECK_FALSE(none.violated);
    CHECK(none.violation == 0);
    CHECK_FALSE(none.inequality.has_value());

    Graph k23 = make_complete_bipartite(2, 3);
    QVec quarter(11, Rational(0));
    for (int e = 5; e < 11; ++e) quarter[e] = parse_rational("1/4");
    CHECK_FALSE(separate_balanced(k23, quarter, 2).violated);

    QVec half(8, Rational(0));
    for (int e = 4; e < 8; ++e) half[e] = parse_rational("1/2");
    CHECK_FALSE(separate_balanced(g, half, 2).violated);

    QVec negative(8, Rational(0));
    negative[0] = -1;
    CHECK_THROWS_AS(separate_balanced(g, negative, 2), std::invalid_argument);
    CHECK_THROWS_AS(separate_balanced(g, point, 3), std::invalid_argument);
    CHECK_THROWS_AS(separate_balanced(g, point, 2, 0), LimitError);
}

TEST_CASE("catalog separation") {
    Graph g = make_complete_bipartite(2, 2);
    // The uniform third point violates only the balanced row.
    QVec third(8, parse_rational("1/3"));
    auto res = separate_catalog(2, 2, third);
    CHECK(res.violated);
    CHECK(res.inequality->family == Family::BalancedBiclique);
    CHECK(res.violation == parse_rational("2/3"));

    for (const auto& t : enumerate_total_matchings(g, EnumerationMode::All))
        CHECK_FALSE(separate_catalog(2, 2, characteristic_vector(g, t)).violated);

    // An optimum of the relaxation alone: if fractional it must be cut off.
    HPolytope relaxed;
    relaxed.space = element_space(g);
    for (auto& row : relaxation_inequalities(g)) relaxed.add(std::move(row));
    auto lp = lp_solve(relaxed, QVec(8, Rational(1)), Sense::Max);
    REQUIRE(lp.status == LpStatus::Optimal);
    bool fractional = false;
    for (const auto& x : lp.point)
        if (x != 0 && x != 1) fractional = true;
    if (fractional) {
        auto cut = separate_catalog(2, 2, lp.point);
        CHECK(cut.violated);
        CHECK(cut.inequality->family == Family::BalancedBiclique);
    }
    CHECK(lp.value > 2); // the relaxation overshoots nu_t = 2
}

TEST_CASE("balanced separation agrees with a filtered catalog scan") {
    std::mt19937_64 rng(41);
    for (auto [r, s] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
        Graph g = make_complete_bipartite(r, s);
        const int k = g.vertex_count + g.edge_count();
        auto catalog = complete_bipartite_description(r, s);
        for (int size = 2; size <= std::min(r, s); ++size)
            for (int trial = 0; trial < 10; ++trial) {
                QVec point(k);
                for (auto& x : point)
                    x = make_rational(oracle::rand_int(rng, 0, 12), oracle::rand_int(rng, 1, 4));
                auto direct = separate_balanced(g, point, size);
                SeparationResult filtered;
                filtered.violation = 0;
                for (const auto& row : catalog.rows) {
                    if (row.family != Family::BalancedBiclique || row.rhs != size) continue;
                    Rational violation = row.violation(point);
                    if (violation > filtered.violation) {
                        filtered.violated = true;
                        filtered.violation = violation;
                        filtered.inequality = row;
                    }
                }
                CHECK(direct.violated == filtered.violated);
                CHECK(direct.violation == filtered.violation);
                if (direct.violated)
                    CHECK(direct.inequality->same_row(*filtered.inequality));
            }
    }
}
