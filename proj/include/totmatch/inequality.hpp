#ifndef TOTMATCH_INEQUALITY_HPP
#define TOTMATCH_INEQUALITY_HPP

#include "totmatch/graph.hpp"
#include "totmatch/linalg.hpp"
#include "totmatch/rational.hpp"

#include <string>
#include <vector>

namespace totmatch {

// Named coordinate space; rows and vectors only combine when spaces match.
struct Space {
    std::vector<std::string> ids;
    int dimension() const { return static_cast<int>(ids.size()); }
    bool operator==(const Space& o) const = default;
};

// Element coordinates of a graph in canonical order: v1..vn, then edges.
Space element_space(const Graph& g);

enum class Rel { LessEq, Eq };

enum class Family {
    Nonneg,
    Node,
    Edge,
    BalancedBiclique,
    NonbalancedLifted,
    EfRaw,
    Projected,
    Other,
};

std::string family_name(Family f);

// A row "coeffs . z <= rhs" (or "= rhs"), kept in normalized form: the
// unique positive scaling with coprime integer entries. Equalities are
// additionally sign-canonicalized to a positive leading nonzero entry.
struct LinearInequality {
    QVec coeffs;
    Rational rhs;
    Rel rel = Rel::LessEq;
    Family family = Family::Other;
    std::string note;

    LinearInequality() = default;
    LinearInequality(QVec coeffs_, Rational rhs_, Rel rel_, Family family_ = Family::Other,
                     std::string note_ = "");

    bool satisfied_by(const QVec& point) const;
    Rational violation(const QVec& point) const { return dot(coeffs, point) - rhs; }

    // Identity ignores family and note.
    bool same_row(const LinearInequality& o) const {
        return rel == o.rel && rhs == o.rhs && coeffs == o.coeffs;
    }
};

bool row_less(const LinearInequality& a, const LinearInequality& b);

struct HPolytope {
    Space space;
    std::vector<LinearInequality> rows;

    void add(LinearInequality row);
    bool contains(const QVec& point) const;
    // Sorts rows (equalities first, then lexicographic) and removes
    // duplicates; row order is otherwise meaningful and left alone.
    void canonicalize();
};

struct VPolytope {
    Space space;
    QMat vertices;
    QMat rays;
};

// Set comparison helpers over normalized rows.
std::vector<LinearInequality> row_set_difference(const std::vector<LinearInequality>& a,
                                                 const std::vector<LinearInequality>& b);
bool same_row_set(const std::vector<LinearInequality>& a, const std::vector<LinearInequality>& b);

// --- inequality text format --------------------------------------------------
//
//   c <comment>
//   space <id> <id> ...
//   <c1> ... <ck> <rel> <rhs> [c <note>]
//
// with <rel> one of "<=" and "=", and rationals printed as p or p/q.
std::string write_hpolytope(const HPolytope& p, bool with_notes = true);
HPolytope parse_hpolytope(const std::string& text);

std::string write_row(const LinearInequality& row, bool with_note = true);

} // namespace totmatch

#endif
