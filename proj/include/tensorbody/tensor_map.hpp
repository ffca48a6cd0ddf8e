#ifndef TENSORBODY_TENSOR_MAP_HPP
#define TENSORBODY_TENSOR_MAP_HPP

#include <Eigen/SVD>
#include <utility>
#include <vector>

#include "tensorbody/tensor_shape.hpp"

namespace tb {

/**
 * An invertible linear map of the tensor space that sends decomposable
 * vectors to decomposable vectors: a permutation sigma of the factors
 * (restricted to factors of equal dimension) followed by one invertible
 * matrix per factor,
 *
 *     T(x^1 (x) ... (x) x^l) = T_1(x^{sigma(1)}) (x) ... (x) T_l(x^{sigma(l)}).
 *
 * `factors[i]` is the d_i-by-d_{sigma(i)} matrix T_i; since sigma only
 * permutes equal dimensions every factor is square.
 */
template <class S>
struct TensorMap {
    std::vector<int> sigma;          // 0-based permutation of {0,...,l-1}
    std::vector<MatrixX<S>> factors; // factors[i] applied to x^{sigma(i)}

    static TensorMap identity(const TensorShape& shape) {
        TensorMap t;
        t.sigma.resize(shape.factor_count());
        for (int i = 0; i < shape.factor_count(); ++i) {
            t.sigma[i] = i;
            t.factors.push_back(MatrixX<S>::Identity(shape.dim(i), shape.dim(i)));
        }
        return t;
    }
};

namespace detail {

inline bool is_permutation(const std::vector<int>& sigma) {
    std::vector<bool> seen(sigma.size(), false);
    for (int v : sigma) {
        if (v < 0 || v >= static_cast<int>(sigma.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

}  // namespace detail

/** Throws unless the map is well-formed for `shape` and all factors invertible. */
template <class S>
void validate_tensor_map(const TensorShape& shape, const TensorMap<S>& map,
                         double tol_det = 1e-12) {
    const int l = shape.factor_count();
    if (static_cast<int>(map.sigma.size()) != l || static_cast<int>(map.factors.size()) != l)
        throw ShapeMismatch("tensor map arity does not match shape");
    if (!detail::is_permutation(map.sigma)) throw ShapeMismatch("sigma is not a permutation");
    for (int i = 0; i < l; ++i) {
        if (shape.dim(map.sigma[i]) != shape.dim(i))
            throw ShapeMismatch("sigma permutes factors of different dimension");
        if (map.factors[i].rows() != shape.dim(i) || map.factors[i].cols() != shape.dim(map.sigma[i]))
            throw ShapeMismatch("factor matrix has wrong size");
        const S det = map.factors[i].determinant();
        if constexpr (is_exact_v<S>) {
            if (det == 0) throw SingularFactor("factor matrix is singular");
        } else {
            if (!(scalar_abs(det) > S(tol_det))) throw SingularFactor("factor matrix is singular");
        }
    }
}

/** Permutes the tensor axes: x^1 (x) ... (x) x^l -> x^{sigma(1)} (x) ... (x) x^{sigma(l)}. */
template <class S>
VectorX<S> permute_axes(const TensorShape& shape, const std::vector<int>& sigma,
                        const VectorX<S>& u) {
    const int l = shape.factor_count();
    std::vector<int> out_dims(l);
    for (int i = 0; i < l; ++i) out_dims[i] = shape.dim(sigma[i]);
    TensorShape out_shape(out_dims);
    VectorX<S> out(shape.total_dim());
    std::vector<int> src(l);
    for (int idx = 0; idx < shape.total_dim(); ++idx) {
        const std::vector<int> dst = out_shape.unflatten(idx);
        for (int i = 0; i < l; ++i) src[sigma[i]] = dst[i];
        out(idx) = u(shape.flatten(src));
    }
    return out;
}

namespace detail {

// Contracts `mat` along axis `axis` of the tensor stored in `u` with the
// given axis dimensions: out[..,p,..] = sum_q mat(p,q) u[..,q,..].
template <class S>
VectorX<S> contract_axis(const std::vector<int>& dims, int axis, const MatrixX<S>& mat,
                         const VectorX<S>& u) {
    int inner = 1, outer = 1;
    for (int k = axis + 1; k < static_cast<int>(dims.size()); ++k) inner *= dims[k];
    for (int k = 0; k < axis; ++k) outer *= dims[k];
    const int dq = static_cast<int>(mat.cols());
    const int dp = static_cast<int>(mat.rows());
    VectorX<S> out = VectorX<S>::Zero(outer * dp * inner);
    for (int o = 0; o < outer; ++o)
        for (int p = 0; p < dp; ++p)
            for (int q = 0; q < dq; ++q) {
                const S w = mat(p, q);
                if (w == S(0)) continue;
                out.segment((o * dp + p) * inner, inner) +=
                    w * u.segment((o * dq + q) * inner, inner);
            }
    return out;
}

}  // namespace detail

/** Applies the map to a flattened vector; linear, and kron-compatible on decomposables. */
template <class S>
VectorX<S> apply_tensor_map(const TensorShape& shape, const TensorMap<S>& map,
                            const VectorX<S>& u) {
    if (u.size() != shape.total_dim())
        throw ShapeMismatch("vector length does not match total dimension");
    validate_tensor_map(shape, map);
    VectorX<S> v = permute_axes(shape, map.sigma, u);
    // After the permutation axis i has length d_{sigma(i)} = d_i.
    for (int i = 0; i < shape.factor_count(); ++i)
        v = detail::contract_axis(shape.dims(), i, map.factors[i], v);
    return v;
}

/** Dense d-by-d matrix of the map (Kronecker factor product times axis permutation). */
template <class S>
MatrixX<S> materialize_tensor_map(const TensorShape& shape, const TensorMap<S>& map) {
    validate_tensor_map(shape, map);
    const int d = shape.total_dim();
    MatrixX<S> P = MatrixX<S>::Zero(d, d);
    const int l = shape.factor_count();
    std::vector<int> dst(l);
    for (int col = 0; col < d; ++col) {
        const std::vector<int> m = shape.unflatten(col);
        for (int i = 0; i < l; ++i) dst[i] = m[map.sigma[i]];
        P(shape.flatten(dst), col) = S(1);
    }
    return kron_mat(map.factors) * P;
}

template <class S>
TensorMap<S> tensor_map_inverse(const TensorShape& shape, const TensorMap<S>& map) {
    validate_tensor_map(shape, map);
    const int l = shape.factor_count();
    TensorMap<S> inv;
    inv.sigma.resize(l);
    inv.factors.resize(l);
    std::vector<int> sigma_inv(l);
    for (int i = 0; i < l; ++i) sigma_inv[map.sigma[i]] = i;
    for (int i = 0; i < l; ++i) {
        inv.sigma[i] = sigma_inv[i];
        Eigen::FullPivLU<MatrixX<S>> lu(map.factors[sigma_inv[i]]);
        inv.factors[i] = lu.inverse();
    }
    return inv;
}

/** Composition acting as apply(compose(T,S), u) = apply(T, apply(S, u)). */
template <class S>
TensorMap<S> tensor_map_compose(const TensorShape& shape, const TensorMap<S>& t,
                                const TensorMap<S>& s) {
    validate_tensor_map(shape, t);
    validate_tensor_map(shape, s);
    const int l = shape.factor_count();
    TensorMap<S> c;
    c.sigma.resize(l);
    c.factors.resize(l);
    for (int i = 0; i < l; ++i) {
        c.sigma[i] = s.sigma[t.sigma[i]];
        c.factors[i] = t.factors[i] * s.factors[t.sigma[i]];
    }
    return c;
}

/**
 * Recovers the factors of a rank-one vector by peeling leading singular pairs
 * off sequential reshapes.  Factors other than the last are unit vectors with
 * positive leading coordinate; the last factor carries the magnitude.
 */
inline DecomposableVector<double> decompose_rank_one(const TensorShape& shape,
                                                     const VectorXd& u, double tol = 1e-9) {
    if (u.size() != shape.total_dim())
        throw ShapeMismatch("vector length does not match total dimension");
    const double norm = u.norm();
    if (norm == 0.0) throw ZeroVector("cannot decompose the zero vector");

    DecomposableVector<double> result;
    VectorXd rest = u;
    std::vector<int> dims = shape.dims();
    while (dims.size() > 1) {
        const int d1 = dims[0];
        const int dr = static_cast<int>(rest.size()) / d1;
        Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
            U(rest.data(), d1, dr);
        Eigen::JacobiSVD<MatrixXd> svd(U, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        if (sv.size() > 1 && sv(1) > tol * sv(0))
            throw NotDecomposable("second singular value above tolerance");
        VectorXd x = svd.matrixU().col(0);
        VectorXd w = sv(0) * svd.matrixV().col(0);
        // Ties in singular values break toward the first factor via the SVD's
        // leading pair; fix signs so the peeled factor is deterministic.
        int lead = 0;
        for (int i = 0; i < x.size(); ++i)
            if (std::abs(x(i)) > std::abs(x(lead))) lead = i;
        if (x(lead) < 0) {
            x = -x;
            w = -w;
        }
        result.factors.push_back(x);
        rest = w;
        dims.erase(dims.begin());
    }
    result.factors.push_back(rest);

    if ((kron(shape, result) - u).norm() > tol * norm + 1e-300)
        throw NotDecomposable("reconstruction residual above tolerance");
    return result;
}

}  // namespace tb

#endif
