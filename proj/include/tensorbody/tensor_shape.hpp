#ifndef TENSORBODY_TENSOR_SHAPE_HPP
#define TENSORBODY_TENSOR_SHAPE_HPP

#include <numeric>
#include <vector>

#include "tensorbody/errors.hpp"
#include "tensorbody/scalar.hpp"

namespace tb {

/**
 * Factor dimensions (d_1,...,d_l) of a tensor product space together with the
 * lexicographic flattening between multi-indices and coordinates of R^d,
 * d = d_1*...*d_l.  The last factor index varies fastest, so the basis vector
 * e_{j_1} (x) ... (x) e_{j_l} lands on the standard basis vector of R^d at
 * position sum_i j_i * prod_{k>i} d_k (all indices 0-based).
 */
class TensorShape {
  public:
    explicit TensorShape(std::vector<int> dims) : dims_(std::move(dims)) {
        if (dims_.empty()) throw InvalidDimension("shape needs at least one factor");
        total_ = 1;
        for (int d : dims_) {
            if (d < 1) throw InvalidDimension("factor dimensions must be >= 1");
            total_ *= d;
            if (total_ > kMaxTotalDim) throw DimensionTooLarge("total dimension exceeds guard");
        }
        strides_.resize(dims_.size());
        int s = 1;
        for (int i = static_cast<int>(dims_.size()) - 1; i >= 0; --i) {
            strides_[i] = s;
            s *= dims_[i];
        }
    }

    static constexpr int kMaxTotalDim = 4096;

    int factor_count() const { return static_cast<int>(dims_.size()); }
    int dim(int i) const { return dims_.at(i); }
    const std::vector<int>& dims() const { return dims_; }
    int total_dim() const { return total_; }

    /** Multi-index (0-based per factor) -> linear coordinate index. */
    int flatten(const std::vector<int>& multi) const {
        if (static_cast<int>(multi.size()) != factor_count())
            throw ShapeMismatch("multi-index arity does not match shape");
        int idx = 0;
        for (int i = 0; i < factor_count(); ++i) {
            if (multi[i] < 0 || multi[i] >= dims_[i])
                throw IndexOutOfRange("multi-index component out of range");
            idx += multi[i] * strides_[i];
        }
        return idx;
    }

    /** Linear coordinate index -> multi-index. */
    std::vector<int> unflatten(int linear) const {
        if (linear < 0 || linear >= total_) throw IndexOutOfRange("linear index out of range");
        std::vector<int> multi(dims_.size());
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            multi[i] = linear / strides_[i];
            linear %= strides_[i];
        }
        return multi;
    }

    bool operator==(const TensorShape& other) const { return dims_ == other.dims_; }

    /** Shape of the leading factors (d_1,...,d_{l-1}). */
    TensorShape drop_last() const {
        return TensorShape(std::vector<int>(dims_.begin(), dims_.end() - 1));
    }

    /** Shape of the trailing factors (d_2,...,d_l). */
    TensorShape drop_first() const {
        return TensorShape(std::vector<int>(dims_.begin() + 1, dims_.end()));
    }

  private:
    std::vector<int> dims_;
    std::vector<int> strides_;
    int total_ = 1;
};

/** A rank-one (decomposable) vector given by its factors x^i in R^{d_i}. */
template <class S>
struct DecomposableVector {
    std::vector<VectorX<S>> factors;
};

/** Kronecker product of two coordinate vectors, u (x) v, last index fastest. */
template <class S>
VectorX<S> kron_vec(const VectorX<S>& u, const VectorX<S>& v) {
    VectorX<S> out(u.size() * v.size());
    for (Eigen::Index i = 0; i < u.size(); ++i)
        out.segment(i * v.size(), v.size()) = u(i) * v;
    return out;
}

/** Kronecker product of the factor list; coordinates follow the flattening. */
template <class S>
VectorX<S> kron(const TensorShape& shape, const std::vector<VectorX<S>>& factors) {
    if (static_cast<int>(factors.size()) != shape.factor_count())
        throw ShapeMismatch("factor count does not match shape");
    for (int i = 0; i < shape.factor_count(); ++i)
        if (factors[i].size() != shape.dim(i))
            throw ShapeMismatch("factor length does not match dimension");
    VectorX<S> out = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) out = kron_vec(out, factors[i]);
    return out;
}

template <class S>
VectorX<S> kron(const TensorShape& shape, const DecomposableVector<S>& v) {
    return kron(shape, v.factors);
}

/** Kronecker product of two matrices. */
template <class S>
MatrixX<S> kron_mat(const MatrixX<S>& A, const MatrixX<S>& B) {
    MatrixX<S> out(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return out;
}

template <class S>
MatrixX<S> kron_mat(const std::vector<MatrixX<S>>& mats) {
    MatrixX<S> out = mats.at(0);
    for (std::size_t i = 1; i < mats.size(); ++i) out = kron_mat(out, mats[i]);
    return out;
}

/**
 * Scalar product of the Hilbert tensor product: on the flattened coordinates
 * it is the standard dot product, and on decomposables it factors as the
 * product of the factor dot products.
 */
template <class S>
S inner_h(const TensorShape& shape, const VectorX<S>& u, const VectorX<S>& v) {
    if (u.size() != shape.total_dim() || v.size() != shape.total_dim())
        throw ShapeMismatch("vector length does not match total dimension");
    return u.dot(v);
}

}  // namespace tb

#endif
