#pragma once
//
// operator_norms.hpp — certified brackets for the L^p -> L^p norm of a dense
// kernel acting on a commutative weighted instance. Exact at p in {1, 2, inf};
// elsewhere a power-type ascent supplies the lower bound and Riesz-Thorin
// interpolation between the nearest exact exponents the upper one.
//

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "rng.hpp"
#include "vn_algebra.hpp"

namespace nclab {

struct PnormBracket {
    double lower;
    double upper;
    bool exact;  // lower == upper, computed in closed form
};

namespace detail {

inline Eigen::VectorXcd signed_power(const Eigen::VectorXcd& v, double e) {
    Eigen::VectorXcd out(v.size());
    for (int i = 0; i < v.size(); ++i) {
        double a = std::abs(v[i]);
        out[i] = a > 0.0 ? std::pow(a, e) * (v[i] / a) : Complex(0.0, 0.0);
    }
    return out;
}

inline double vec_pnorm(const Eigen::VectorXcd& v, double p) {
    double s = 0.0;
    for (int i = 0; i < v.size(); ++i) s += std::pow(std::abs(v[i]), p);
    return std::pow(s, 1.0 / p);
}

// one quotient-ascent run of the Boyd fixed-point iteration on the
// weight-transformed matrix
inline double ascend(const Matrix& M, Eigen::VectorXcd x, double p, int max_iter,
                     double rtol) {
    const double pd = p / (p - 1.0);
    double quot = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXcd y = M * x;
        double ny = vec_pnorm(y, p), nx = vec_pnorm(x, p);
        if (nx == 0.0 || ny == 0.0) return 0.0;
        double q = ny / nx;
        if (it > 0 && std::abs(q - quot) <= rtol * q) {
            quot = q;
            break;
        }
        quot = q;
        Eigen::VectorXcd z = M.adjoint() * signed_power(y, p - 1.0);
        x = signed_power(z, pd - 1.0);
        double n2 = vec_pnorm(x, p);
        if (n2 == 0.0) return quot;
        x /= n2;
    }
    return quot;
}

}  // namespace detail

// K acts on functions over a commutative instance; norms are taken with the
// instance's weights. Throws on non-commutative algebras.
inline PnormBracket operator_pnorm_bracket(const VnAlgebra& alg, const Matrix& K,
                                           double p, std::uint64_t seed = 1,
                                           int starts = 16, int max_iter = 500,
                                           double rtol = 1e-10) {
    if (!alg.commutative())
        throw std::invalid_argument("pnorm bracket: commutative instances only");
    if (!(p >= 1.0)) throw std::invalid_argument("pnorm bracket: need p >= 1");
    const int n = static_cast<int>(alg.block_count());
    if (K.rows() != n || K.cols() != n)
        throw std::invalid_argument("pnorm bracket: kernel shape mismatch");

    Eigen::VectorXd w(n);
    for (int i = 0; i < n; ++i) w[i] = alg.blocks()[static_cast<std::size_t>(i)].w;

    // ||K||_{p,w} equals the unweighted p-norm of W^{1/p} K W^{-1/p}
    auto transformed = [&](double pp) {
        Matrix M = K;
        if (!std::isinf(pp)) {
            for (int i = 0; i < n; ++i) M.row(i) *= std::pow(w[i], 1.0 / pp);
            for (int j = 0; j < n; ++j) M.col(j) *= std::pow(w[j], -1.0 / pp);
        }
        return M;
    };

    auto exact_norm = [&](double pp) -> double {
        Matrix M = transformed(pp);
        if (pp == 1.0) return M.cwiseAbs().colwise().sum().maxCoeff();
        if (std::isinf(pp)) return M.cwiseAbs().rowwise().sum().maxCoeff();
        Eigen::JacobiSVD<Matrix> svd(M);
        return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
    };

    if (p == 1.0 || p == 2.0 || std::isinf(p)) {
        double v = exact_norm(p);
        return {v, v, true};
    }

    // Riesz-Thorin between the neighbouring exact exponents
    double upper;
    if (p < 2.0) {
        double th = 2.0 * (1.0 - 1.0 / p);  // 1/p = (1-th)/1 + th/2
        upper = std::pow(exact_norm(1.0), 1.0 - th) * std::pow(exact_norm(2.0), th);
    } else {
        double th = 1.0 - 2.0 / p;  // 1/p = (1-th)/2
        upper = std::pow(exact_norm(2.0), 1.0 - th) * std::pow(exact_norm(kInf), th);
    }

    Matrix M = transformed(p);
    Rng rng(seed);
    double lower = 0.0;
    for (int s = 0; s < starts; ++s) {
        Eigen::VectorXcd x(n);
        for (int i = 0; i < n; ++i) x[i] = rng.cgaussian();
        lower = std::max(lower, detail::ascend(M, x, p, max_iter, rtol));
    }
    // informed start: the L^2 maximizer, transported to p-coordinates
    {
        Matrix M2 = transformed(2.0);
        Eigen::JacobiSVD<Matrix> svd(M2, Eigen::ComputeThinV);
        if (svd.matrixV().cols() > 0) {
            Eigen::VectorXcd v2 = svd.matrixV().col(0);
            for (int i = 0; i < n; ++i)
                v2[i] *= std::pow(w[i], 1.0 / p - 0.5);
            lower = std::max(lower, detail::ascend(M, v2, p, max_iter, rtol));
        }
    }
    lower = std::min(lower, upper);
    return {lower, upper, false};
}

// exact L^1 -> L^inf norm of a kernel on a commutative weighted instance
inline double opnorm_one_to_inf(const VnAlgebra& alg, const Matrix& K) {
    if (!alg.commutative())
        throw std::invalid_argument("opnorm 1->inf: commutative instances only");
    const int n = static_cast<int>(alg.block_count());
    double m = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m = std::max(m, std::abs(K(i, j)) / alg.blocks()[static_cast<std::size_t>(j)].w);
    return m;
}

}  // namespace nclab
