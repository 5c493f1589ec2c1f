#ifndef TOTMATCH_LINALG_HPP
#define TOTMATCH_LINALG_HPP

#include "totmatch/rational.hpp"

namespace totmatch {

using QMat = std::vector<QVec>;

Rational dot(const QVec& a, const QVec& b);

QVec scaled(const QVec& v, const Rational& factor);

// a + factor * b
QVec axpy(const QVec& a, const Rational& factor, const QVec& b);

bool is_zero(const QVec& v);

// Scales v by the unique positive rational that makes all entries coprime
// integers. The zero vector is returned unchanged.
QVec normalized_integral(const QVec& v);

// Rank by fraction-free (Bareiss) elimination on the integer matrix obtained
// after clearing denominators row by row.
int rank(const QMat& rows);

// Maximum number of affinely independent points: rank of differences plus one.
int affine_rank(const QMat& points);

// Canonical reduced row-echelon basis of the row space, each row scaled to
// coprime integers. Independent of input row order.
QMat rref(QMat rows);

// Incremental row-echelon basis for greedy independence checks.
class Echelon {
public:
    // Returns true (and keeps the reduced vector) iff v is independent of the
    // rows inserted so far.
    bool insert(QVec v);
    int rank() const { return static_cast<int>(rows_.size()); }
    // True iff v lies in the span of the inserted rows.
    bool in_span(QVec v) const;

private:
    QMat rows_;                 // reduced, each with a unique pivot column
    std::vector<int> pivots_;
    void reduce(QVec& v) const;
};

} // namespace totmatch

#endif
