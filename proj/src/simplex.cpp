#include "totmatch/simplex.hpp"

#include <algorithm>
#include <cassert>

namespace totmatch {

namespace {

// Standard-form tableau: rows Ax = b with b >= 0, all columns nonnegative.
struct Tableau {
    QMat rows;              // m x (cols + 1), last entry is b
    std::vector<int> basis; // basic column per row
    int cols = 0;

    Rational entry(int i, int j) const { return rows[i][j]; }
    Rational rhs(int i) const { return rows[i][cols]; }

    void pivot(int row, int col) {
        Rational p = rows[row][col];
        for (auto& x : rows[row]) x /= p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == row) continue;
            Rational f = rows[i][col];
            if (f == 0) continue;
            for (int j = 0; j <= cols; ++j) rows[i][j] -= f * rows[row][j];
        }
        basis[row] = col;
    }

    // Maximizes c over the tableau with Bland's rule. Returns false when
    // unbounded. `allowed` masks columns the pivoting may enter.
    bool run(const QVec& c, const std::vector<bool>& allowed) {
        while (true) {
            // Reduced costs c_j - c_B B^{-1} A_j; Bland: smallest improving index.
            int entering = -1;
            for (int j = 0; j < cols && entering == -1; ++j) {
                if (!allowed[j]) continue;
                bool basic = false;
                for (int b : basis)
                    if (b == j) basic = true;
                if (basic) continue;
                Rational rc = c[j];
                for (std::size_t i = 0; i < rows.size(); ++i)
                    if (c[basis[i]] != 0 && rows[i][j] != 0) rc -= c[basis[i]] * rows[i][j];
                if (rc > 0) entering = j;
            }
            if (entering == -1) return true;
            int leaving = -1;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][entering] <= 0) continue;
                Rational ratio = rhs(static_cast<int>(i)) / rows[i][entering];
                if (leaving == -1 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leaving])) {
                    leaving = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leaving == -1) return false;
            pivot(leaving, entering);
        }
    }

    Rational objective_value(const QVec& c) const {
        Rational v = 0;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (c[basis[i]] != 0) v += c[basis[i]] * rhs(static_cast<int>(i));
        return v;
    }

    QVec column_values() const {
        QVec x(cols, Rational(0));
        for (std::size_t i = 0; i < rows.size(); ++i) x[basis[i]] = rhs(static_cast<int>(i));
        return x;
    }
};

bool is_sign_row(const LinearInequality& row, int& var) {
    if (row.rel != Rel::LessEq || row.rhs != 0) return false;
    int nz = -1;
    for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
        if (row.coeffs[j] == 0) continue;
        if (nz != -1) return false;
        nz = static_cast<int>(j);
    }
    if (nz == -1 || row.coeffs[nz] >= 0) return false;
    var = nz;
    return true;
}

} // namespace

LpResult lp_solve(const HPolytope& p, const QVec& objective, Sense sense) {
    const int n = p.space.dimension();
    if (static_cast<int>(objective.size()) != n)
        throw std::invalid_argument("objective dimension mismatch");

    std::vector<bool> nonneg(n, false);
    std::vector<const LinearInequality*> constraint_rows;
    for (const auto& row : p.rows) {
        int var;
        if (is_sign_row(row, var))
            nonneg[var] = true;
        else
            constraint_rows.push_back(&row);
    }

    // Column layout: one column per variable, plus a negative column for each
    // free variable, then slacks, then artificials.
    std::vector<int> neg_col(n, -1);
    int cols = n;
    for (int j = 0; j < n; ++j)
        if (!nonneg[j]) neg_col[j] = cols++;
    const int slack_base = cols;
    int slack_count = 0;
    for (const auto* row : constraint_rows)
        if (row->rel == Rel::LessEq) ++slack_count;
    cols += slack_count;

    const int m = static_cast<int>(constraint_rows.size());
    Tableau t;
    t.basis.assign(m, -1);
    std::vector<int> art_rows;
    {
        int next_slack = slack_base;
        for (int i = 0; i < m; ++i) {
            const auto& row = *constraint_rows[i];
            QVec tr(cols + 1, Rational(0));
            for (int j = 0; j < n; ++j) {
                tr[j] = row.coeffs[j];
                if (neg_col[j] != -1) tr[neg_col[j]] = -row.coeffs[j];
            }
            int slack = -1;
            if (row.rel == Rel::LessEq) {
                slack = next_slack++;
                tr[slack] = 1;
            }
            tr[cols] = row.rhs;
            if (tr[cols] < 0)
                for (auto& x : tr) x = -x;
            if (slack != -1 && tr[slack] == 1)
                t.basis[i] = slack;
            else
                art_rows.push_back(i);
            t.rows.push_back(std::move(tr));
        }
    }
    const int art_base = cols;
    cols += static_cast<int>(art_rows.size());
    t.cols = cols;
    for (auto& row : t.rows) row.insert(row.end() - 1, art_rows.size(), Rational(0));
    for (std::size_t k = 0; k < art_rows.size(); ++k) {
        t.rows[art_rows[k]][art_base + static_cast<int>(k)] = 1;
        t.basis[art_rows[k]] = art_base + static_cast<int>(k);
    }

    std::vector<bool> allow_all(cols, true);
    if (!art_rows.empty()) {
        QVec phase1(cols, Rational(0));
        for (int j = art_base; j < cols; ++j) phase1[j] = -1;
        bool bounded = t.run(phase1, allow_all);
        assert(bounded);
        (void)bounded;
        if (t.objective_value(phase1) != 0) return {LpStatus::Infeasible, Rational(0), {}};
        // Drive leftover artificials out of the basis; rows that cannot be
        // pivoted are redundant and dropped.
        for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
            if (t.basis[i] < art_base) continue;
            int col = -1;
            for (int j = 0; j < art_base && col == -1; ++j)
                if (t.rows[i][j] != 0) col = j;
            if (col != -1) {
                t.pivot(i, col);
            } else {
                t.rows.erase(t.rows.begin() + i);
                t.basis.erase(t.basis.begin() + i);
            }
        }
    }

    std::vector<bool> allowed(cols, true);
    for (int j = art_base; j < cols; ++j) allowed[j] = false;
    QVec c(cols, Rational(0));
    const Rational flip = sense == Sense::Max ? 1 : -1;
    for (int j = 0; j < n; ++j) {
        c[j] = flip * objective[j];
        if (neg_col[j] != -1) c[neg_col[j]] = -flip * objective[j];
    }
    if (!t.run(c, allowed)) return {LpStatus::Unbounded, Rational(0), {}};

    QVec colvals = t.column_values();
    QVec x(n);
    for (int j = 0; j < n; ++j) {
        x[j] = colvals[j];
        if (neg_col[j] != -1) x[j] -= colvals[neg_col[j]];
    }
    Rational value = flip * t.objective_value(c);
    return {LpStatus::Optimal, value, std::move(x)};
}

bool is_implied(const LinearInequality& ineq, const HPolytope& p) {
    auto max_res = lp_solve(p, ineq.coeffs, Sense::Max);
    if (max_res.status == LpStatus::Infeasible)
        throw std::invalid_argument("implication check over an infeasible system");
    if (max_res.status == LpStatus::Unbounded || max_res.value > ineq.rhs) return false;
    if (ineq.rel == Rel::Eq) {
        auto min_res = lp_solve(p, ineq.coeffs, Sense::Min);
        if (min_res.status != LpStatus::Optimal || min_res.value < ineq.rhs) return false;
    }
    return true;
}

HPolytope irredundant_rows(const HPolytope& p) {
    HPolytope work = p;
    work.canonicalize();
    for (std::size_t i = 0; i < work.rows.size();) {
        HPolytope rest;
        rest.space = work.space;
        for (std::size_t j = 0; j < work.rows.size(); ++j)
            if (j != i) rest.rows.push_back(work.rows[j]);
        if (is_implied(work.rows[i], rest))
            work.rows.erase(work.rows.begin() + i);
        else
            ++i;
    }
    return work;
}

} // namespace totmatch
