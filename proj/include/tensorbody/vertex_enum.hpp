#ifndef TENSORBODY_VERTEX_ENUM_HPP
#define TENSORBODY_VERTEX_ENUM_HPP

#include <vector>

#include "tensorbody/body.hpp"

namespace tb {

namespace detail {

template <class S>
bool same_vertex_up_to_sign(const VectorX<S>& a, const VectorX<S>& b) {
    if constexpr (is_exact_v<S>) {
        return a == b || a == (-b).eval();
    } else {
        // Compare on the unit sphere so the tolerance is scale-free.
        const VectorX<S> an = a / a.norm();
        const VectorX<S> bn = b / b.norm();
        return (an - bn).template lpNorm<Eigen::Infinity>() <= 1e-9 ||
               (an + bn).template lpNorm<Eigen::Infinity>() <= 1e-9;
    }
}

template <class S>
void next_combination_init(std::vector<int>& comb, int k) {
    comb.resize(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
}

inline bool next_combination(std::vector<int>& comb, int m) {
    const int k = static_cast<int>(comb.size());
    int i = k - 1;
    while (i >= 0 && comb[i] == m - k + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    return true;
}

}  // namespace detail

/**
 * All vertices of the H-polytope {x : |<a_j,x>| <= 1}, one per +- pair, by
 * brute force: every choice of d constraints made active at signs
 * (+1, s_2, ..., s_d) yields a candidate d-by-d system, and the feasible,
 * deduplicated solutions are the vertices.  Guarded to d <= 8 and at most 64
 * constraint pairs.  Degenerate (singular) subsets are skipped.
 */
template <class S>
MatrixX<S> enumerate_vertices(const Body<S>& body) {
    const auto* h = body.as_hpolytope();
    if (!h) throw NotPolytopal("vertex enumeration needs an H-polytope");
    const int d = body.dim();
    const int m = static_cast<int>(h->normals.rows());
    if (d > 8 || m > 64) throw DimensionTooLarge("vertex enumeration guard exceeded");
    {
        Eigen::FullPivLU<MatrixX<S>> lu(h->normals);
        if (lu.rank() < d) throw DegenerateBody("normals do not span; body unbounded");
    }

    const S feas_tol = is_exact_v<S> ? S(0) : S(1e-9);
    std::vector<VectorX<S>> vertices;
    std::vector<int> comb;
    detail::next_combination_init<S>(comb, d);
    do {
        MatrixX<S> A(d, d);
        for (int i = 0; i < d; ++i) A.row(i) = h->normals.row(comb[i]);
        Eigen::FullPivLU<MatrixX<S>> lu(A);
        if (lu.rank() < d) continue;
        for (int mask = 0; mask < (1 << (d - 1)); ++mask) {
            VectorX<S> rhs(d);
            rhs(0) = S(1);
            for (int i = 1; i < d; ++i) rhs(i) = (mask >> (i - 1)) & 1 ? S(-1) : S(1);
            const VectorX<S> x = lu.solve(rhs);
            bool feasible = true;
            for (int j = 0; j < m && feasible; ++j)
                feasible = scalar_abs(h->normals.row(j).dot(x)) <= S(1) + feas_tol;
            if (!feasible) continue;
            bool duplicate = false;
            for (const auto& v : vertices)
                if (detail::same_vertex_up_to_sign<S>(v, x)) {
                    duplicate = true;
                    break;
                }
            if (!duplicate) vertices.push_back(x);
        }
    } while (detail::next_combination(comb, m));

    if (vertices.empty()) throw DegenerateBody("no vertices found");
    MatrixX<S> out(static_cast<int>(vertices.size()), d);
    for (std::size_t i = 0; i < vertices.size(); ++i) out.row(static_cast<int>(i)) = vertices[i];
    return out;
}

namespace detail {

/** Rows = all sign vectors of length d with leading +1 (vertices of B_inf). */
template <class S>
MatrixX<S> sign_vectors(int d) {
    if (d > 16) throw DimensionTooLarge("too many sign vectors");
    MatrixX<S> rows(1 << (d - 1), d);
    for (int mask = 0; mask < (1 << (d - 1)); ++mask) {
        rows(mask, 0) = S(1);
        for (int i = 1; i < d; ++i) rows(mask, i) = (mask >> (i - 1)) & 1 ? S(-1) : S(1);
    }
    return rows;
}

}  // namespace detail

/** V-representation of a polytopal body (enumerating vertices if needed). */
template <class S>
Body<S> to_vrep(const Body<S>& body) {
    switch (body.kind()) {
        case BodyKind::VPolytope:
            return body;
        case BodyKind::HPolytope:
            return Body<S>::vpolytope(enumerate_vertices(body));
        case BodyKind::LpBall: {
            const double p = body.as_lp_ball()->p;
            if (p == 1.0) return standard_ball<S>(body.dim(), 1.0, true);
            if (std::isinf(p)) return Body<S>::vpolytope(detail::sign_vectors<S>(body.dim()));
            throw NotPolytopal("lp-ball with p outside {1,inf} has no V-representation");
        }
        default:
            throw NotPolytopal("ellipsoids have no V-representation");
    }
}

/** H-representation of a polytopal body (through the polar when needed). */
template <class S>
Body<S> to_hrep(const Body<S>& body) {
    switch (body.kind()) {
        case BodyKind::HPolytope:
            return body;
        case BodyKind::VPolytope:
            // Normals of Q are the vertices of Q° = {x : |<g_k,x>| <= 1}.
            return Body<S>::hpolytope(enumerate_vertices(polar(body)));
        case BodyKind::LpBall: {
            const double p = body.as_lp_ball()->p;
            if (std::isinf(p)) return standard_ball<S>(body.dim(), kInfP, true);
            if (p == 1.0) return Body<S>::hpolytope(detail::sign_vectors<S>(body.dim()));
            throw NotPolytopal("lp-ball with p outside {1,inf} has no H-representation");
        }
        default:
            throw NotPolytopal("ellipsoids have no H-representation");
    }
}

}  // namespace tb

#endif
