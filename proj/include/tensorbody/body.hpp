#ifndef TENSORBODY_BODY_HPP
#define TENSORBODY_BODY_HPP

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <optional>
#include <variant>

#include "tensorbody/lp.hpp"
#include "tensorbody/scalar.hpp"

namespace tb {

inline constexpr double kInfP = std::numeric_limits<double>::infinity();

/** conv{±g_k}; one generator stored per +- pair. */
template <class S>
struct VPolytopeRep {
    MatrixX<S> generators;  // rows
};

/** {x : |<a_j, x>| <= 1 for all j}; one normal stored per +- pair. */
template <class S>
struct HPolytopeRep {
    MatrixX<S> normals;  // rows
};

/** {x : x'Mx <= 1} with M symmetric positive definite. */
template <class S>
struct EllipsoidRep {
    MatrixX<S> matrix;
};

/** Unit ball of l_p, p in [1, inf]. */
struct LpBallRep {
    double p;
};

enum class BodyKind { VPolytope, HPolytope, Ellipsoid, LpBall };

/**
 * A 0-symmetric convex body in R^d.  Symmetry is structural: polytope data
 * stores one element per +- pair and every operation treats x and -x alike,
 * so no numeric symmetry check ever runs.
 */
template <class S>
class Body {
  public:
    using Rep = std::variant<VPolytopeRep<S>, HPolytopeRep<S>, EllipsoidRep<S>, LpBallRep>;

    static Body vpolytope(MatrixX<S> generators) {
        if (generators.rows() == 0) throw DegenerateBody("no generators");
        for (Eigen::Index i = 0; i < generators.rows(); ++i)
            if (generators.row(i).isZero(0)) throw DegenerateBody("zero generator");
        return Body(static_cast<int>(generators.cols()),
                    VPolytopeRep<S>{std::move(generators)});
    }

    static Body hpolytope(MatrixX<S> normals) {
        if (normals.rows() == 0) throw DegenerateBody("no normals");
        for (Eigen::Index i = 0; i < normals.rows(); ++i)
            if (normals.row(i).isZero(0)) throw DegenerateBody("zero normal");
        return Body(static_cast<int>(normals.cols()), HPolytopeRep<S>{std::move(normals)});
    }

    static Body ellipsoid(MatrixX<S> matrix) {
        if (matrix.rows() != matrix.cols()) throw ShapeMismatch("ellipsoid matrix not square");
        if (matrix != matrix.transpose().eval()) {
            if constexpr (is_exact_v<S>) throw NotPD("ellipsoid matrix not symmetric");
            const double asym = (matrix - matrix.transpose()).template lpNorm<Eigen::Infinity>();
            if (asym > 1e-12 * (1.0 + matrix.template lpNorm<Eigen::Infinity>()))
                throw NotPD("ellipsoid matrix not symmetric");
            matrix = ((matrix + matrix.transpose()) / S(2)).eval();
        }
        if (!is_positive_definite(matrix)) throw NotPD("ellipsoid matrix not positive definite");
        return Body(static_cast<int>(matrix.rows()), EllipsoidRep<S>{std::move(matrix)});
    }

    static Body lp_ball(int dim, double p) {
        if (dim < 1) throw InvalidDimension("dimension must be positive");
        if (!(p >= 1.0)) throw InvalidP("p must lie in [1, inf]");
        return Body(dim, LpBallRep{p});
    }

    int dim() const { return dim_; }
    const Rep& rep() const { return rep_; }

    BodyKind kind() const {
        return std::visit(
            [](const auto& r) -> BodyKind {
                using R = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<R, VPolytopeRep<S>>) return BodyKind::VPolytope;
                if constexpr (std::is_same_v<R, HPolytopeRep<S>>) return BodyKind::HPolytope;
                if constexpr (std::is_same_v<R, EllipsoidRep<S>>) return BodyKind::Ellipsoid;
                return BodyKind::LpBall;
            },
            rep_);
    }

    const VPolytopeRep<S>* as_vpolytope() const { return std::get_if<VPolytopeRep<S>>(&rep_); }
    const HPolytopeRep<S>* as_hpolytope() const { return std::get_if<HPolytopeRep<S>>(&rep_); }
    const EllipsoidRep<S>* as_ellipsoid() const { return std::get_if<EllipsoidRep<S>>(&rep_); }
    const LpBallRep* as_lp_ball() const { return std::get_if<LpBallRep>(&rep_); }

    static bool is_positive_definite(const MatrixX<S>& m) {
        if constexpr (is_exact_v<S>) {
            // Sylvester's criterion, exact.
            for (Eigen::Index k = 1; k <= m.rows(); ++k)
                if (!(m.topLeftCorner(k, k).determinant() > S(0))) return false;
            return true;
        } else {
            Eigen::SelfAdjointEigenSolver<MatrixX<S>> es(m, Eigen::EigenvaluesOnly);
            return es.info() == Eigen::Success && es.eigenvalues().minCoeff() > 0;
        }
    }

  private:
    Body(int dim, Rep rep) : dim_(dim), rep_(std::move(rep)) {}

    int dim_;
    Rep rep_;
};

template <class S>
struct GaugeResult {
    S value = S(0);
    std::optional<int> active_index;         // maximizing constraint/generator
    std::optional<VectorX<S>> multipliers;   // LP certificate for V-polytopes
};

/** Dual exponent: 1/p + 1/p* = 1, with the pair {1, inf}. */
inline double dual_exponent(double p) {
    if (p == 1.0) return kInfP;
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

namespace detail {

template <class S>
S lp_norm(const VectorX<S>& x, double p) {
    if (p == 1.0) {
        S s(0);
        for (Eigen::Index i = 0; i < x.size(); ++i) s += scalar_abs(x(i));
        return s;
    }
    if (std::isinf(p)) {
        S s(0);
        for (Eigen::Index i = 0; i < x.size(); ++i) s = std::max(s, scalar_abs(x(i)));
        return s;
    }
    if constexpr (is_exact_v<S>) {
        throw ExactUnsupported("lp gauge for p outside {1,inf} needs float mode");
    } else {
        double s = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) s += std::pow(std::abs(x(i)), p);
        return std::pow(s, 1.0 / p);
    }
}

template <class S>
S quadratic_gauge(const MatrixX<S>& m, const VectorX<S>& x) {
    if constexpr (is_exact_v<S>) {
        throw ExactUnsupported("ellipsoid gauge needs float mode");
    } else {
        return std::sqrt(std::max(0.0, x.dot(m * x)));
    }
}

}  // namespace detail

/**
 * Minkowski gauge g_Q(x) = inf{t > 0 : x/t in Q}.  Exact for H-polytopes and
 * l_1/l_inf balls; V-polytopes go through the simplex LP (exact pivots when S
 * is rational).
 */
template <class S>
GaugeResult<S> gauge(const Body<S>& body, const VectorX<S>& x) {
    if (x.size() != body.dim()) throw ShapeMismatch("point dimension mismatch");
    GaugeResult<S> out;
    if (const auto* h = body.as_hpolytope()) {
        int best = 0;
        S value(0);
        for (Eigen::Index j = 0; j < h->normals.rows(); ++j) {
            const S v = scalar_abs(h->normals.row(j).dot(x));
            if (v > value) {
                value = v;
                best = static_cast<int>(j);
            }
        }
        out.value = value;
        out.active_index = best;
        return out;
    }
    if (const auto* v = body.as_vpolytope()) {
        auto lp = gauge_lp<S>(v->generators, x);
        out.value = lp.value;
        out.multipliers = std::move(lp.multipliers);
        return out;
    }
    if (const auto* e = body.as_ellipsoid()) {
        out.value = detail::quadratic_gauge(e->matrix, x);
        return out;
    }
    out.value = detail::lp_norm(x, body.as_lp_ball()->p);
    return out;
}

/** Support function h_Q(y) = sup{<x,y> : x in Q} = gauge of the polar at y. */
template <class S>
S support(const Body<S>& body, const VectorX<S>& y) {
    if (y.size() != body.dim()) throw ShapeMismatch("point dimension mismatch");
    if (const auto* v = body.as_vpolytope()) {
        S value(0);
        for (Eigen::Index k = 0; k < v->generators.rows(); ++k)
            value = std::max(value, scalar_abs(v->generators.row(k).dot(y)));
        return value;
    }
    if (const auto* h = body.as_hpolytope()) return gauge_lp<S>(h->normals, y).value;
    if (const auto* e = body.as_ellipsoid()) {
        if constexpr (is_exact_v<S>) {
            throw ExactUnsupported("ellipsoid support needs float mode");
        } else {
            const VectorX<S> z = e->matrix.ldlt().solve(y);
            return std::sqrt(std::max(0.0, y.dot(z)));
        }
    }
    return detail::lp_norm(y, dual_exponent(body.as_lp_ball()->p));
}

/** Polar body Q° = {y : |<x,y>| <= 1 for all x in Q}. */
template <class S>
Body<S> polar(const Body<S>& body) {
    if (const auto* v = body.as_vpolytope()) return Body<S>::hpolytope(v->generators);
    if (const auto* h = body.as_hpolytope()) return Body<S>::vpolytope(h->normals);
    if (const auto* e = body.as_ellipsoid()) {
        Eigen::FullPivLU<MatrixX<S>> lu(e->matrix);
        MatrixX<S> inv = lu.inverse();
        if constexpr (!is_exact_v<S>) inv = ((inv + inv.transpose()) / S(2)).eval();
        return Body<S>::ellipsoid(std::move(inv));
    }
    return Body<S>::lp_ball(body.dim(), dual_exponent(body.as_lp_ball()->p));
}

template <class S>
bool contains(const Body<S>& body, const VectorX<S>& x, S tol = default_tol<S>()) {
    return gauge(body, x).value <= S(1) + tol;
}

/**
 * B_p^d, optionally materialized: p=1 as the cross-polytope conv{±e_i},
 * p=inf as the cube {|x_i| <= 1}, p=2 as the unit-matrix ellipsoid.
 */
template <class S>
Body<S> standard_ball(int dim, double p, bool materialize = false) {
    if (!(p >= 1.0)) throw InvalidP("p must lie in [1, inf]");
    if (materialize) {
        if (p == 1.0) return Body<S>::vpolytope(MatrixX<S>::Identity(dim, dim));
        if (std::isinf(p)) return Body<S>::hpolytope(MatrixX<S>::Identity(dim, dim));
        if (p == 2.0) return Body<S>::ellipsoid(MatrixX<S>::Identity(dim, dim));
        throw NotPolytopal("only p in {1, 2, inf} can be materialized");
    }
    return Body<S>::lp_ball(dim, p);
}

/** lambda * Q for lambda > 0; abstract lp-balls are materialized first. */
template <class S>
Body<S> scale_body(const Body<S>& body, const S& lambda) {
    if (!(lambda > S(0))) throw InvalidDimension("scale factor must be positive");
    if (const auto* v = body.as_vpolytope())
        return Body<S>::vpolytope((lambda * v->generators).eval());
    if (const auto* h = body.as_hpolytope())
        return Body<S>::hpolytope((h->normals / lambda).eval());
    if (const auto* e = body.as_ellipsoid())
        return Body<S>::ellipsoid((e->matrix / (lambda * lambda)).eval());
    const double p = body.as_lp_ball()->p;
    return scale_body(standard_ball<S>(body.dim(), p, true), lambda);
}

}  // namespace tb

#endif
