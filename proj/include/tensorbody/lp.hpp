#ifndef TENSORBODY_LP_HPP
#define TENSORBODY_LP_HPP

#include <vector>

#include "tensorbody/errors.hpp"
#include "tensorbody/scalar.hpp"

namespace tb {

template <class S>
struct LpResult {
    bool feasible = false;
    S value = S(0);
    VectorX<S> solution;  // primal solution of the standard-form problem
};

/**
 * Dense two-phase primal simplex for  min c'z  s.t.  Az = b, z >= 0.
 *
 * Bland's rule is used throughout, so the method terminates on every input
 * when S is an exact scalar; `tol` is the pivot/zero threshold (0 for exact
 * scalars).  Redundant equality rows are dropped after phase 1.  State is
 * allocated per call, so concurrent use is safe.
 */
template <class S>
class SimplexSolver {
  public:
    explicit SimplexSolver(S tol = default_tol<S>(), int max_iters = 100000)
        : tol_(tol), max_iters_(max_iters) {}

    LpResult<S> solve(MatrixX<S> A, VectorX<S> b, const VectorX<S>& c) const {
        const int m = static_cast<int>(A.rows());
        const int n = static_cast<int>(A.cols());
        for (int i = 0; i < m; ++i)
            if (b(i) < S(0)) {
                A.row(i) = -A.row(i);
                b(i) = -b(i);
            }

        // Tableau over the original variables plus m artificials.
        MatrixX<S> T(m, n + m);
        T.leftCols(n) = A;
        T.rightCols(m) = MatrixX<S>::Identity(m, m);
        VectorX<S> rhs = b;
        std::vector<int> basis(m);
        for (int i = 0; i < m; ++i) basis[i] = n + i;
        std::vector<bool> row_active(m, true);

        VectorX<S> phase1_cost = VectorX<S>::Zero(n + m);
        phase1_cost.tail(m).setConstant(S(1));
        run_phase(T, rhs, basis, row_active, phase1_cost, n + m);

        S infeas = S(0);
        for (int i = 0; i < m; ++i)
            if (row_active[i]) infeas += phase1_cost(basis[i]) * rhs(i);
        if (infeas > tol_) return {};  // infeasible

        // Pivot artificials out of the basis; rows with no eligible pivot are
        // redundant and get deactivated.
        for (int i = 0; i < m; ++i) {
            if (!row_active[i] || basis[i] < n) continue;
            int enter = -1;
            for (int j = 0; j < n; ++j)
                if (scalar_abs(T(i, j)) > tol_) {
                    enter = j;
                    break;
                }
            if (enter < 0)
                row_active[i] = false;
            else
                pivot(T, rhs, basis, row_active, i, enter);
        }

        VectorX<S> cost = VectorX<S>::Zero(n + m);
        cost.head(n) = c;
        run_phase(T, rhs, basis, row_active, cost, n);

        LpResult<S> result;
        result.feasible = true;
        result.solution = VectorX<S>::Zero(n);
        for (int i = 0; i < m; ++i)
            if (row_active[i] && basis[i] < n) result.solution(basis[i]) = rhs(i);
        result.value = c.dot(result.solution);
        return result;
    }

  private:
    // One simplex phase with Bland's rule; columns >= limit are not eligible
    // to enter.
    void run_phase(MatrixX<S>& T, VectorX<S>& rhs, std::vector<int>& basis,
                   std::vector<bool>& row_active, const VectorX<S>& cost, int limit) const {
        const int m = static_cast<int>(T.rows());
        for (int iter = 0; iter < max_iters_; ++iter) {
            int enter = -1;
            for (int j = 0; j < limit; ++j) {
                S reduced = cost(j);
                for (int i = 0; i < m; ++i)
                    if (row_active[i]) reduced -= cost(basis[i]) * T(i, j);
                if (reduced < -tol_) {
                    enter = j;
                    break;  // Bland: smallest index
                }
            }
            if (enter < 0) return;  // optimal

            int leave = -1;
            S best_ratio = S(0);
            for (int i = 0; i < m; ++i) {
                if (!row_active[i] || !(T(i, enter) > tol_)) continue;
                const S ratio = rhs(i) / T(i, enter);
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) throw DegenerateBody("linear program is unbounded");
            pivot(T, rhs, basis, row_active, leave, enter);
        }
        throw Error("lp-iteration-cap", "simplex iteration cap exceeded");
    }

    void pivot(MatrixX<S>& T, VectorX<S>& rhs, std::vector<int>& basis,
               const std::vector<bool>& row_active, int row, int col) const {
        const S p = T(row, col);
        T.row(row) /= p;
        rhs(row) /= p;
        for (int i = 0; i < static_cast<int>(T.rows()); ++i) {
            if (i == row || !row_active[i]) continue;
            const S f = T(i, col);
            if (f == S(0)) continue;
            T.row(i) -= f * T.row(row);
            rhs(i) -= f * rhs(row);
        }
        basis[row] = col;
    }

    S tol_;
    int max_iters_;
};

/**
 * Minkowski gauge of conv{±g_k} at x: the optimum of
 *   min sum_k |lambda_k|   s.t.   sum_k lambda_k g_k = x,
 * solved as a standard-form LP in the positive/negative parts of lambda.
 * Returns the optimal value and the multipliers; throws DegenerateBody when x
 * is not in the span of the generators.
 */
template <class S>
struct GaugeLpResult {
    S value;
    VectorX<S> multipliers;
};

/** Pivot threshold for the simplex: exact for rationals, tight for doubles. */
template <class S>
S lp_pivot_tol() {
    if constexpr (is_exact_v<S>)
        return S(0);
    else
        return S(1e-11);
}

template <class S>
GaugeLpResult<S> gauge_lp(const MatrixX<S>& generators, const VectorX<S>& x,
                          S tol = lp_pivot_tol<S>()) {
    const int k = static_cast<int>(generators.rows());
    const int d = static_cast<int>(generators.cols());
    if (x.size() != d) throw ShapeMismatch("point dimension does not match generators");
    if (x.isZero(0)) return {S(0), VectorX<S>::Zero(k)};

    MatrixX<S> A(d, 2 * k);
    A.leftCols(k) = generators.transpose();
    A.rightCols(k) = -generators.transpose();
    const VectorX<S> c = VectorX<S>::Ones(2 * k);

    SimplexSolver<S> solver(tol);
    LpResult<S> lp = solver.solve(A, x, c);
    if (!lp.feasible) throw DegenerateBody("generators do not span the point");
    GaugeLpResult<S> out;
    out.value = lp.value;
    out.multipliers = lp.solution.head(k) - lp.solution.tail(k);
    return out;
}

}  // namespace tb

#endif
