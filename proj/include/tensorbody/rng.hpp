#ifndef TENSORBODY_RNG_HPP
#define TENSORBODY_RNG_HPP

#include <cstdint>
#include <random>

#include "tensorbody/scalar.hpp"
#include "tensorbody/tensor_shape.hpp"

namespace tb {

/** Deterministic RNG used everywhere a seed appears in an interface. */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double gaussian() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }
    std::uint64_t next_seed() { return engine_(); }

    VectorXd gaussian_vector(int d) {
        VectorXd v(d);
        for (int i = 0; i < d; ++i) v(i) = gaussian();
        return v;
    }

    VectorXd unit_vector(int d) {
        VectorXd v = gaussian_vector(d);
        while (v.norm() < 1e-8) v = gaussian_vector(d);
        return v / v.norm();
    }

    MatrixXd gaussian_matrix(int rows, int cols) {
        MatrixXd m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = gaussian();
        return m;
    }

    /** Invertible matrix with |det| bounded away from zero. */
    MatrixXd invertible_matrix(int d, double min_abs_det = 1e-3) {
        for (;;) {
            MatrixXd m = gaussian_matrix(d, d);
            if (std::abs(m.determinant()) > min_abs_det) return m;
        }
    }

    MatrixXd orthogonal_matrix(int d) {
        const MatrixXd m = gaussian_matrix(d, d);
        Eigen::HouseholderQR<MatrixXd> qr(m);
        MatrixXd q = qr.householderQ();
        // Fix signs so the factorization is unique.
        const MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (int i = 0; i < d; ++i)
            if (r(i, i) < 0) q.col(i) = -q.col(i);
        return q;
    }

    /** Symmetric positive definite matrix with spectrum in [lo, hi]. */
    MatrixXd spd_matrix(int d, double lo = 0.5, double hi = 2.0) {
        const MatrixXd q = orthogonal_matrix(d);
        VectorXd eig(d);
        for (int i = 0; i < d; ++i) eig(i) = lo + (hi - lo) * uniform();
        return q * eig.asDiagonal() * q.transpose();
    }

    /** Random small rational in [-bound, bound] with denominator <= max_den. */
    Rational rational(int bound = 4, int max_den = 4) {
        std::uniform_int_distribution<int> num(-bound, bound);
        std::uniform_int_distribution<int> den(1, max_den);
        return Rational(num(engine_), den(engine_));
    }

    MatrixXq rational_matrix(int rows, int cols, int bound = 4, int max_den = 4) {
        MatrixXq m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = rational(bound, max_den);
        return m;
    }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace tb

#endif
