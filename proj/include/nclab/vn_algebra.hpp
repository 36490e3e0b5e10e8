#pragma once
//
// vn_algebra.hpp — finite direct sums of complex matrix blocks with weighted
// trace: the finite-dimensional model of a semifinite (M, tau). Elements carry
// their algebra; all spectral quantities route through Hermitian
// eigendecompositions of the blocks.
//

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rng.hpp"
#include "step_function.hpp"

namespace nclab {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

struct Block {
    int n;     // matrix dimension
    double w;  // trace weight

    friend bool operator==(const Block& a, const Block& b) {
        return a.n == b.n && a.w == b.w;
    }
};

class VnAlgebra {
  public:
    explicit VnAlgebra(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        if (blocks_.empty()) throw std::invalid_argument("algebra: no blocks");
        for (const auto& b : blocks_)
            if (b.n < 1 || !(b.w > 0.0))
                throw std::invalid_argument("algebra: need n >= 1 and w > 0");
    }

    // l^N with the given per-point weight
    static VnAlgebra diagonal(int n, double w = 1.0) {
        return VnAlgebra(std::vector<Block>(static_cast<std::size_t>(n), Block{1, w}));
    }

    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }

    bool commutative() const {
        for (const auto& b : blocks_)
            if (b.n > 1) return false;
        return true;
    }

    // tau(1), accumulated in block order; this is the canonical support
    // endpoint shared by every full-rank element
    double trace_identity() const {
        double s = 0.0;
        for (const auto& b : blocks_) s += b.w * b.n;
        return s;
    }

    double min_weight() const {
        double m = blocks_.front().w;
        for (const auto& b : blocks_) m = std::min(m, b.w);
        return m;
    }

    friend bool operator==(const VnAlgebra& a, const VnAlgebra& b) {
        return a.blocks_ == b.blocks_;
    }

  private:
    std::vector<Block> blocks_;
};

class AlgElement {
  public:
    AlgElement(VnAlgebra alg, std::vector<Matrix> m)
        : alg_(std::move(alg)), m_(std::move(m)) {
        if (m_.size() != alg_.block_count())
            throw std::invalid_argument("element: block count mismatch");
        for (std::size_t k = 0; k < m_.size(); ++k)
            if (m_[k].rows() != alg_.blocks()[k].n || m_[k].cols() != alg_.blocks()[k].n)
                throw std::invalid_argument("element: block shape mismatch");
    }

    static AlgElement zero(const VnAlgebra& alg) {
        std::vector<Matrix> m;
        for (const auto& b : alg.blocks()) m.push_back(Matrix::Zero(b.n, b.n));
        return AlgElement(alg, std::move(m));
    }

    static AlgElement identity(const VnAlgebra& alg) {
        std::vector<Matrix> m;
        for (const auto& b : alg.blocks()) m.push_back(Matrix::Identity(b.n, b.n));
        return AlgElement(alg, std::move(m));
    }

    // element of a commutative algebra from its list of point values
    static AlgElement diagonal(const VnAlgebra& alg, const std::vector<Complex>& vals) {
        if (!alg.commutative() || vals.size() != alg.block_count())
            throw std::invalid_argument("element: diagonal needs a commutative algebra");
        std::vector<Matrix> m;
        for (auto v : vals) {
            Matrix b(1, 1);
            b(0, 0) = v;
            m.push_back(b);
        }
        return AlgElement(alg, std::move(m));
    }

    const VnAlgebra& algebra() const { return alg_; }
    const Matrix& block(std::size_t k) const { return m_[k]; }
    std::size_t block_count() const { return m_.size(); }

    // values of a commutative element, in block order
    std::vector<Complex> diagonal_values() const {
        if (!alg_.commutative())
            throw std::invalid_argument("element: not commutative");
        std::vector<Complex> v;
        v.reserve(m_.size());
        for (const auto& b : m_) v.push_back(b(0, 0));
        return v;
    }

    AlgElement adjoint() const {
        std::vector<Matrix> m;
        for (const auto& b : m_) m.push_back(b.adjoint());
        return AlgElement(alg_, std::move(m));
    }

    friend AlgElement operator+(const AlgElement& a, const AlgElement& b) {
        a.check_same(b);
        std::vector<Matrix> m;
        for (std::size_t k = 0; k < a.m_.size(); ++k) m.push_back(a.m_[k] + b.m_[k]);
        return AlgElement(a.alg_, std::move(m));
    }
    friend AlgElement operator-(const AlgElement& a, const AlgElement& b) {
        a.check_same(b);
        std::vector<Matrix> m;
        for (std::size_t k = 0; k < a.m_.size(); ++k) m.push_back(a.m_[k] - b.m_[k]);
        return AlgElement(a.alg_, std::move(m));
    }
    friend AlgElement operator*(const AlgElement& a, const AlgElement& b) {
        a.check_same(b);
        std::vector<Matrix> m;
        for (std::size_t k = 0; k < a.m_.size(); ++k) m.push_back(a.m_[k] * b.m_[k]);
        return AlgElement(a.alg_, std::move(m));
    }
    friend AlgElement operator*(Complex c, const AlgElement& a) {
        std::vector<Matrix> m;
        for (const auto& b : a.m_) m.push_back(c * b);
        return AlgElement(a.alg_, std::move(m));
    }
    friend AlgElement operator*(double c, const AlgElement& a) {
        return Complex(c, 0.0) * a;
    }

  private:
    void check_same(const AlgElement& b) const {
        if (!(alg_ == b.alg_))
            throw std::invalid_argument("element: algebra mismatch");
    }

    VnAlgebra alg_;
    std::vector<Matrix> m_;
};

inline Complex trace(const AlgElement& x) {
    Complex s = 0.0;
    for (std::size_t k = 0; k < x.block_count(); ++k)
        s += x.algebra().blocks()[k].w * x.block(k).trace();
    return s;
}

inline bool is_hermitian(const AlgElement& x, double tol = 1e-10) {
    double scale = 0.0, dev = 0.0;
    for (std::size_t k = 0; k < x.block_count(); ++k) {
        scale = std::max(scale, x.block(k).cwiseAbs().maxCoeff());
        dev = std::max(dev, (x.block(k) - x.block(k).adjoint()).cwiseAbs().maxCoeff());
    }
    return dev <= tol * std::max(scale, 1.0);
}

namespace detail {

// singular values of every block, paired with the block weight
inline std::vector<std::pair<double, double>> weighted_singular_values(const AlgElement& x) {
    std::vector<std::pair<double, double>> sv;
    for (std::size_t k = 0; k < x.block_count(); ++k) {
        const Matrix& b = x.block(k);
        const double w = x.algebra().blocks()[k].w;
        Eigen::SelfAdjointEigenSolver<Matrix> es(b.adjoint() * b);
        for (int i = 0; i < es.eigenvalues().size(); ++i) {
            double ev = es.eigenvalues()[i];
            sv.emplace_back(std::sqrt(std::max(ev, 0.0)), w);
        }
    }
    return sv;
}

// Hermitian eigenvalues of every block, with tiny ones clamped to zero
inline std::vector<std::pair<double, double>> weighted_eigenvalues(const AlgElement& x) {
    if (!is_hermitian(x))
        throw std::invalid_argument("spectral op: element is not Hermitian");
    std::vector<std::pair<double, double>> ev;
    double top = 0.0;
    for (std::size_t k = 0; k < x.block_count(); ++k) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(x.block(k));
        const double w = x.algebra().blocks()[k].w;
        for (int i = 0; i < es.eigenvalues().size(); ++i) {
            ev.emplace_back(es.eigenvalues()[i], w);
            top = std::max(top, std::abs(es.eigenvalues()[i]));
        }
    }
    for (auto& [lam, w] : ev)
        if (std::abs(lam) < 1e-12 * top) lam = 0.0;
    return ev;
}

}  // namespace detail

// |x| = sqrt(x* x), through the Hermitian eigendecomposition of x* x
inline AlgElement abs_element(const AlgElement& x) {
    std::vector<Matrix> m;
    for (std::size_t k = 0; k < x.block_count(); ++k) {
        const Matrix& b = x.block(k);
        Eigen::SelfAdjointEigenSolver<Matrix> es(b.adjoint() * b);
        Eigen::VectorXd d = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
        m.push_back(es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint());
    }
    return AlgElement(x.algebra(), std::move(m));
}

// mu(., x): weighted singular values sorted decreasingly, cumulative weights
// as breakpoints. For full-rank elements the support endpoint is pinned to
// tau(1) so that elements of one algebra share it exactly.
inline StepFunction singular_value_function(const AlgElement& x) {
    auto sv = detail::weighted_singular_values(x);
    std::vector<std::pair<double, double>> nonzero;
    for (const auto& p : sv)
        if (p.first > 0.0) nonzero.push_back(p);
    const bool full_rank = nonzero.size() == sv.size();
    return StepFunction::from_weighted_values(
        std::move(nonzero), 0.0, full_rank ? x.algebra().trace_identity() : -1.0);
}

// d(s; |x|) = tau(e^{|x|}(s, inf))
inline double distribution_function(const AlgElement& x, double s) {
    double d = 0.0;
    for (const auto& [sigma, w] : detail::weighted_singular_values(x))
        if (sigma > s) d += w;
    return d;
}

// ||x||_p = (tau |x|^p)^{1/p}; p = inf gives the operator norm
inline double lp_norm(const AlgElement& x, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
    auto sv = detail::weighted_singular_values(x);
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& [sigma, w] : sv) m = std::max(m, sigma);
        return m;
    }
    double s = 0.0;
    for (const auto& [sigma, w] : sv) s += w * std::pow(sigma, p);
    return std::pow(s, 1.0 / p);
}

inline double operator_norm(const AlgElement& x) { return lp_norm(x, kInf); }

// ||x||_{p,q} = || mu(x) ||_{p,q}
inline double lorentz_norm(const AlgElement& x, double p, double q) {
    return lorentz_quasinorm(singular_value_function(x), p, q);
}

// psi applied to the spectrum of a Hermitian element
inline AlgElement functional_calculus(const AlgElement& x,
                                      const std::function<double(double)>& psi) {
    if (!is_hermitian(x))
        throw std::invalid_argument("functional_calculus: element is not Hermitian");
    std::vector<Matrix> m;
    for (std::size_t k = 0; k < x.block_count(); ++k) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(x.block(k));
        Eigen::VectorXd d = es.eigenvalues();
        for (int i = 0; i < d.size(); ++i) d[i] = psi(d[i]);
        m.push_back(es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint());
    }
    return AlgElement(x.algebra(), std::move(m));
}

// x^expo for Hermitian positive x. Eigenvalues below 1e-12 * ||x|| are treated
// as zero; raising a zero eigenvalue to a negative power is an error.
inline AlgElement element_power(const AlgElement& x, double expo) {
    if (!is_hermitian(x))
        throw std::invalid_argument("element_power: element is not Hermitian");
    double top = operator_norm(x);
    return functional_calculus(x, [expo, top](double lam) {
        if (lam < 0.0 && lam > -1e-12 * top) lam = 0.0;
        if (lam < 0.0) throw std::invalid_argument("element_power: negative eigenvalue");
        if (lam <= 1e-12 * top) {
            if (expo < 0.0)
                throw std::invalid_argument("element_power: inverting a zero eigenvalue");
            lam = 0.0;
            return expo == 0.0 ? 1.0 : 0.0;
        }
        return std::pow(lam, expo);
    });
}

// tau of the spectral projection of a Hermitian element onto the open (a,b)
inline double spectral_projection_trace(const AlgElement& x, double a, double b) {
    double s = 0.0;
    for (const auto& [lam, w] : detail::weighted_eigenvalues(x))
        if (lam > a && lam < b) s += w;
    return s;
}

// --- randomized element constructors (deterministic per Rng state) ---

inline AlgElement random_element(const VnAlgebra& alg, Rng& rng) {
    std::vector<Matrix> m;
    for (const auto& blk : alg.blocks()) {
        Matrix b(blk.n, blk.n);
        for (int i = 0; i < blk.n; ++i)
            for (int j = 0; j < blk.n; ++j) b(i, j) = rng.cgaussian();
        m.push_back(b);
    }
    return AlgElement(alg, std::move(m));
}

inline AlgElement random_hermitian(const VnAlgebra& alg, Rng& rng) {
    AlgElement x = random_element(alg, rng);
    return 0.5 * (x + x.adjoint());
}

// positive definite with spectrum bounded away from zero
inline AlgElement random_positive(const VnAlgebra& alg, Rng& rng, double floor = 0.1) {
    AlgElement x = random_element(alg, rng);
    AlgElement h = x * x.adjoint();
    return h + floor * AlgElement::identity(alg);
}

inline AlgElement random_unitary(const VnAlgebra& alg, Rng& rng) {
    std::vector<Matrix> m;
    for (const auto& blk : alg.blocks()) {
        Matrix b(blk.n, blk.n);
        for (int i = 0; i < blk.n; ++i)
            for (int j = 0; j < blk.n; ++j) b(i, j) = rng.cgaussian();
        Eigen::HouseholderQR<Matrix> qr(b);
        Matrix q = qr.householderQ();
        m.push_back(q);
    }
    return AlgElement(alg, std::move(m));
}

}  // namespace nclab
