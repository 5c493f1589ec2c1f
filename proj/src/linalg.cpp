#include "totmatch/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace totmatch {

Rational dot(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

QVec scaled(const QVec& v, const Rational& factor) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * factor;
    return r;
}

QVec axpy(const QVec& a, const Rational& factor, const QVec& b) {
    assert(a.size() == b.size());
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + factor * b[i];
    return r;
}

bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

QVec normalized_integral(const QVec& v) {
    BigInt den_lcm = 1;
    for (const auto& x : v)
        if (x != 0) den_lcm = lcm(den_lcm, denominator(x));
    BigInt num_gcd = 0;
    for (const auto& x : v)
        if (x != 0) num_gcd = gcd(num_gcd, BigInt(numerator(x) * (den_lcm / denominator(x))));
    if (num_gcd == 0) return v;
    Rational factor = make_rational(den_lcm, num_gcd);
    return scaled(v, factor);
}

int rank(const QMat& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    // Integer working copy, each row scaled by its denominator lcm.
    std::vector<std::vector<BigInt>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        assert(row.size() == cols);
        if (is_zero(row)) continue;
        QVec nr = normalized_integral(row);
        std::vector<BigInt> ir(cols);
        for (std::size_t j = 0; j < cols; ++j) ir[j] = numerator(nr[j]);
        m.push_back(std::move(ir));
    }
    int r = 0;
    BigInt prev_pivot = 1;
    for (std::size_t col = 0; col < cols && r < static_cast<int>(m.size()); ++col) {
        std::size_t pivot_row = m.size();
        for (std::size_t i = r; i < m.size(); ++i)
            if (m[i][col] != 0) { pivot_row = i; break; }
        if (pivot_row == m.size()) continue;
        std::swap(m[r], m[pivot_row]);
        const BigInt pivot = m[r][col];
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            const BigInt factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                BigInt t = pivot * m[i][j] - factor * m[r][j];
                if (t % prev_pivot != 0)
                    throw std::logic_error("fraction-free elimination divisibility failure");
                m[i][j] = t / prev_pivot;
            }
        }
        prev_pivot = pivot;
        ++r;
    }
    return r;
}

int affine_rank(const QMat& points) {
    if (points.empty()) throw std::invalid_argument("affine_rank of empty point set");
    QMat diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != points[0].size())
            throw std::invalid_argument("affine_rank with mixed dimensions");
        diffs.push_back(axpy(points[i], Rational(-1), points[0]));
    }
    return rank(diffs) + 1;
}

QMat rref(QMat rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const QVec& r) { return is_zero(r); }),
               rows.end());
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i][col] != 0) { pivot = i; break; }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        Rational p = rows[r][col];
        for (auto& x : rows[r]) x /= p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Rational f = rows[i][col];
            rows[i] = axpy(rows[i], -f, rows[r]);
        }
        ++r;
    }
    rows.resize(r);
    for (auto& row : rows) row = normalized_integral(row);
    return rows;
}

void Echelon::reduce(QVec& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const int p = pivots_[k];
        if (v[p] != 0) {
            Rational factor = -v[p] / rows_[k][p];
            v = axpy(v, factor, rows_[k]);
        }
    }
}

bool Echelon::insert(QVec v) {
    reduce(v);
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] != 0) {
            pivots_.push_back(static_cast<int>(j));
            rows_.push_back(std::move(v));
            return true;
        }
    }
    return false;
}

bool Echelon::in_span(QVec v) const {
    reduce(v);
    return is_zero(v);
}

} // namespace totmatch
