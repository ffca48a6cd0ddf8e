#ifndef TENSORBODY_SCALAR_HPP
#define TENSORBODY_SCALAR_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <cmath>
#include <string>

namespace tb {

/** Exact scalar used in `--mode exact`: arbitrary-precision rational. */
using Rational = boost::multiprecision::mpq_rational;

template <class S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Eigen::MatrixXd;
using Eigen::VectorXd;
using MatrixXq = MatrixX<Rational>;
using VectorXq = VectorX<Rational>;

template <class S>
inline constexpr bool is_exact_v = false;
template <>
inline constexpr bool is_exact_v<Rational> = true;

/** Comparison slack: zero for rationals, a small float tolerance otherwise. */
template <class S>
S default_tol() {
    if constexpr (is_exact_v<S>)
        return S(0);
    else
        return S(1e-9);
}

template <class S>
S scalar_abs(const S& x) {
    using std::abs;
    return abs(x);
}

template <class S>
double to_double(const S& x) {
    if constexpr (is_exact_v<S>)
        return x.template convert_to<double>();
    else
        return static_cast<double>(x);
}

inline std::string rational_to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace tb

#endif
