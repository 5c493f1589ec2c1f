#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "totmatch/dd.hpp"
#include "totmatch/enumerate.hpp"
#include "totmatch/simplex.hpp"

#include <set>

using namespace totmatch;
namespace oracle = totmatch::testing;

namespace {

QVec qv(std::initializer_list<int> xs) {
    QVec v;
    for (int x : xs) v.push_back(Rational(x));
    return v;
}

Space axes(int d) {
    Space s;
    for (int i = 0; i < d; ++i) s.ids.push_back("x" + std::to_string(i + 1));
    return s;
}

} // namespace

TEST_CASE("hull of the unit square") {
    VPolytope v;
    v.space = axes(2);
    v.vertices = {qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})};
    HPolytope h = dd_hull(v);
    REQUIRE(h.rows.size() == 4);
    HPolytope expected;
    expected.space = v.space;
    expected.add(LinearInequality(qv({-1, 0}), Rational(0), Rel::LessEq));
    expected.add(LinearInequality(qv({0, -1}), Rational(0), Rel::LessEq));
    expected.add(LinearInequality(qv({1, 0}), Rational(1), Rel::LessEq));
    expected.add(LinearInequality(qv({0, 1}), Rational(1), Rel::LessEq));
    CHECK(same_row_set(h.rows, expected.rows));
}

TEST_CASE("hull of the single-edge total matchings") {
    Graph g = make_complete_bipartite(1, 1);
    VPolytope v;
    v.space = element_space(g);
    for (const auto& t : enumerate_total_matchings(g, EnumerationMode::All))
        v.vertices.push_back(characteristic_vector(g, t));
    HPolytope h = dd_hull(v);
    HPolytope expected;
    expected.space = v.space;
    expected.add(LinearInequality(qv({-1, 0, 0}), Rational(0), Rel::LessEq));
    expected.add(LinearInequality(qv({0, -1, 0}), Rational(0), Rel::LessEq));
    expected.add(LinearInequality(qv({0, 0, -1}), Rational(0), Rel::LessEq));
    expected.add(LinearInequality(qv({1, 1, 1}), Rational(1), Rel::LessEq));
    CHECK(same_row_set(h.rows, expected.rows));
}

TEST_CASE("lower-dimensional hulls emit equalities") {
    VPolytope v;
    v.space = axes(3);
    v.vertices = {qv({0, 0, 1}), qv({1, 0, 1}), qv({0, 1, 1})};
    HPolytope h = dd_hull(v);
    int equalities = 0;
    for (const auto& row : h.rows)
        if (row.rel == Rel::Eq) ++equalities;
    CHECK(equalities == 1);
    CHECK(h.rows.size() == 4);
    for (const auto& p : v.vertices) CHECK(h.contains(p));
    CHECK_FALSE(h.contains(qv({0, 0, 0})));

    VPolytope single;
    single.space = axes(2);
    single.vertices = {qv({3, 4})};
    HPolytope hs = dd_hull(single);
    CHECK(hs.rows.size() == 2);
    for (const auto& row : hs.rows) CHECK(row.rel == Rel::Eq);
    CHECK(hs.contains(qv({3, 4})));
    CHECK_FALSE(hs.contains(qv({3, 5})));
}

TEST_CASE("rays of simple cones") {
    HPolytope orthant;
    orthant.space = axes(3);
    for (int i = 0; i < 3; ++i) {
        QVec c(3, Rational(0));
        c[i] = -1;
        orthant.add(LinearInequality(std::move(c), Rational(0), Rel::LessEq));
    }
    QMat rays = dd_rays(orthant);
    REQUIRE(rays.size() == 3);
    CHECK(std::set<QVec>(rays.begin(), rays.end()) ==
          std::set<QVec>{qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})});

    HPolytope diag;
    diag.space = axes(2);
    diag.add(LinearInequality(qv({-1, 0}), Rational(0), Rel::LessEq));
    diag.add(LinearInequality(qv({0, -1}), Rational(0), Rel::LessEq));
    diag.add(LinearInequality(qv({1, -1}), Rational(0), Rel::Eq));
    QMat one = dd_rays(diag);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == qv({1, 1}));

    HPolytope inhom;
    inhom.space = axes(2);
    inhom.add(LinearInequality(qv({1, 0}), Rational(1), Rel::LessEq));
    CHECK_THROWS_AS(dd_rays(inhom), std::invalid_argument);
}

TEST_CASE("hull then vertex enumeration returns the input points") {
    // Distinct 0/1 points are always vertices of their hull.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 3 + static_cast<int>(rng() % 3);
        std::set<QVec> points;
        int count = 4 + static_cast<int>(rng() % 5);
        while (static_cast<int>(points.size()) < count) {
            QVec p(d);
            for (auto& x : p) x = Rational(static_cast<int>(rng() % 2));
            points.insert(p);
        }
        VPolytope v;
        v.space = axes(d);
        v.vertices.assign(points.begin(), points.end());
        HPolytope h = dd_hull(v);
        VPolytope back = enumerate_vertices(h);
        CHECK(back.rays.empty());
        CHECK(std::set<QVec>(back.vertices.begin(), back.vertices.end()) == points);
    }
}

TEST_CASE("lp optimum over the hull equals the vertex maximum") {
    std::mt19937_64 rng(23);
    Graph g = make_complete_bipartite(2, 2);
    VPolytope v;
    v.space = element_space(g);
    for (const auto& t : enumerate_total_matchings(g, EnumerationMode::All))
        v.vertices.push_back(characteristic_vector(g, t));
    HPolytope h = dd_hull(v);
    for (int trial = 0; trial < 20; ++trial) {
        QVec obj = oracle::rand_rational_vector(rng, 8);
        Rational best = dot(obj, v.vertices[0]);
        for (const auto& p : v.vertices) {
            Rational val = dot(obj, p);
            if (val > best) best = val;
        }
        auto lp = lp_solve(h, obj, Sense::Max);
        REQUIRE(lp.status == LpStatus::Optimal);
        CHECK(lp.value == best);
    }
}

TEST_CASE("dimension limits") {
    VPolytope v;
    v.space = axes(16);
    v.vertices = {QVec(16, Rational(0))};
    CHECK_THROWS_AS(dd_hull(v), LimitError);
    CHECK_NOTHROW(dd_hull(v, 16));
}
