#pragma once
//
// fourier.hpp — concrete Fourier structures: a pair of weighted-block algebras
// with mutually inverse transforms normalized so that the L^1 -> L^inf
// contraction and the Plancherel identity both hold with constant one.
// Instances: cyclic groups (direct DFT), finite groups through their unitary
// irreps, and the self-dual trivial structure. Multipliers act by symbol
// multiplication on the dual side.
//

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "groups.hpp"
#include "rng.hpp"
#include "vn_algebra.hpp"

namespace nclab {

struct FourierStructure {
    VnAlgebra source;
    VnAlgebra dual;
    std::function<AlgElement(const AlgElement&)> forward;   // F : source -> dual
    std::function<AlgElement(const AlgElement&)> inverse;   // F^ : dual -> source
    std::string descriptor;

    FourierStructure swapped() const {
        return {dual, source, inverse, forward, descriptor + ":swapped"};
    }
};

// --- cyclic instance: counting trace on the source, 1/N-weighted dual ---

inline FourierStructure make_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic: n >= 1");
    VnAlgebra src = VnAlgebra::diagonal(n, 1.0);
    VnAlgebra dua = VnAlgebra::diagonal(n, 1.0 / n);
    auto dft = std::make_shared<Matrix>(n, n);
    for (int k = 0; k < n; ++k)
        for (int g = 0; g < n; ++g) {
            double th = -2.0 * std::numbers::pi * g * k / n;
            (*dft)(k, g) = Complex(std::cos(th), std::sin(th));
        }
    auto fwd = [src, dua, dft](const AlgElement& x) {
        if (!(x.algebra() == src)) throw std::invalid_argument("forward: wrong algebra");
        auto v = x.diagonal_values();
        Eigen::VectorXcd f = Eigen::Map<const Eigen::VectorXcd>(v.data(), static_cast<long>(v.size()));
        Eigen::VectorXcd fh = (*dft) * f;
        return AlgElement::diagonal(dua, std::vector<Complex>(fh.data(), fh.data() + fh.size()));
    };
    auto inv = [src, dua, dft, n](const AlgElement& h) {
        if (!(h.algebra() == dua)) throw std::invalid_argument("inverse: wrong algebra");
        auto v = h.diagonal_values();
        Eigen::VectorXcd f = Eigen::Map<const Eigen::VectorXcd>(v.data(), static_cast<long>(v.size()));
        Eigen::VectorXcd g = dft->adjoint() * f / double(n);
        return AlgElement::diagonal(src, std::vector<Complex>(g.data(), g.data() + g.size()));
    };
    return {src, dua, fwd, inv, "cyclic:" + std::to_string(n)};
}

// --- finite-group instance: dual is the direct sum over irreps ---

inline FourierStructure make_finite_group(const GroupData& gd) {
    gd.validate();
    const int n = gd.table.order;
    VnAlgebra src = VnAlgebra::diagonal(n, 1.0);
    std::vector<Block> dual_blocks;
    for (const auto& r : gd.irreps)
        dual_blocks.push_back({r.dim, static_cast<double>(r.dim) / n});
    VnAlgebra dua(dual_blocks);
    auto data = std::make_shared<GroupData>(gd);

    auto fwd = [src, dua, data](const AlgElement& x) {
        if (!(x.algebra() == src)) throw std::invalid_argument("forward: wrong algebra");
        auto v = x.diagonal_values();
        std::vector<Matrix> out;
        for (const auto& r : data->irreps) {
            Matrix m = Matrix::Zero(r.dim, r.dim);
            for (std::size_t g = 0; g < v.size(); ++g)
                m += v[g] * r.mats[g].adjoint();
            out.push_back(std::move(m));
        }
        return AlgElement(dua, std::move(out));
    };
    auto inv = [src, dua, data, n](const AlgElement& h) {
        if (!(h.algebra() == dua)) throw std::invalid_argument("inverse: wrong algebra");
        std::vector<Complex> v(static_cast<std::size_t>(n));
        for (int g = 0; g < n; ++g) {
            Complex s = 0.0;
            for (std::size_t r = 0; r < data->irreps.size(); ++r) {
                const auto& rep = data->irreps[r];
                s += static_cast<double>(rep.dim) *
                     (rep.mats[static_cast<std::size_t>(g)] * h.block(r)).trace();
            }
            v[static_cast<std::size_t>(g)] = s / static_cast<double>(n);
        }
        return AlgElement::diagonal(src, v);
    };
    return {src, dua, fwd, inv, "group:" + gd.name};
}

// --- trivial self-dual instance ---

inline FourierStructure make_trivial(const VnAlgebra& alg) {
    // the L^1 -> L^inf axiom with the identity transform forces weights >= 1
    if (alg.min_weight() < 1.0)
        throw std::invalid_argument("trivial instance: needs all block weights >= 1");
    auto id = [alg](const AlgElement& x) {
        if (!(x.algebra() == alg)) throw std::invalid_argument("trivial: wrong algebra");
        return x;
    };
    return {alg, alg, id, id, "trivial"};
}

// --- multiplicative unitary W xi(p,q) = xi(p, p^{-1} q) on l^2(G x G) ---

inline Matrix multiplicative_unitary(const GroupTable& t) {
    t.validate();
    const int n = t.order;
    Matrix w = Matrix::Zero(n * n, n * n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            w(p * n + q, p * n + t.mul(t.inverse(p), q)) = 1.0;
    return w;
}

// (tau_L (x) Id)(W (x (x) 1)): the reconstruction of the group-algebra image
// of a function from the multiplicative unitary, as an |G| x |G| matrix
inline Matrix reconstruction_transform(const GroupTable& t, const std::vector<Complex>& f) {
    const int n = t.order;
    if (f.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("reconstruction: size mismatch");
    Matrix w = multiplicative_unitary(t);
    // T = W (f (x) 1); partial trace over the first tensor leg
    Matrix m = Matrix::Zero(n, n);
    for (int q = 0; q < n; ++q)
        for (int qp = 0; qp < n; ++qp) {
            Complex s = 0.0;
            for (int p = 0; p < n; ++p)
                s += w(p * n + q, p * n + qp) * f[static_cast<std::size_t>(p)];
            m(q, qp) = s;
        }
    return m;
}

// --- multipliers ---

struct MultiplierOp {
    FourierStructure structure;
    AlgElement symbol;  // element of the dual algebra

    MultiplierOp(FourierStructure f, AlgElement s)
        : structure(std::move(f)), symbol(std::move(s)) {
        if (!(symbol.algebra() == structure.dual))
            throw std::invalid_argument("multiplier: symbol must live in the dual");
    }
};

inline AlgElement apply_multiplier(const MultiplierOp& m, const AlgElement& f) {
    return m.structure.inverse(m.symbol * m.structure.forward(f));
}

// dense kernel of the multiplier on a commutative source, columns = images of
// the point masses
inline Matrix multiplier_kernel(const MultiplierOp& m) {
    const VnAlgebra& src = m.structure.source;
    if (!src.commutative())
        throw std::invalid_argument("multiplier kernel: commutative source only");
    const int n = static_cast<int>(src.block_count());
    Matrix k(n, n);
    for (int j = 0; j < n; ++j) {
        std::vector<Complex> delta(static_cast<std::size_t>(n), 0.0);
        delta[static_cast<std::size_t>(j)] = 1.0;
        AlgElement img = apply_multiplier(m, AlgElement::diagonal(src, delta));
        auto v = img.diagonal_values();
        for (int i = 0; i < n; ++i) k(i, j) = v[static_cast<std::size_t>(i)];
    }
    return k;
}

// --- axiom harness ---

struct AxiomReport {
    double inversion_err = 0.0;       // relative, both directions
    double plancherel_err = 0.0;      // relative, both directions
    double contraction_slack = kInf;  // min of rhs-lhs over both directions
    double module_err = 0.0;          // relative, (2.7) and its dual (2.8)

    bool pass(double tol_eq = 1e-10, double tol_slack = -1e-12) const {
        return inversion_err < tol_eq && plancherel_err < tol_eq &&
               contraction_slack >= tol_slack && module_err < tol_eq;
    }
};

inline AxiomReport check_axioms(const FourierStructure& f, int trials, std::uint64_t seed) {
    AxiomReport rep;
    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        AlgElement x = random_element(f.source, rng);
        AlgElement h = random_element(f.dual, rng);
        AlgElement fx = f.forward(x);
        AlgElement ih = f.inverse(h);

        double nx2 = lp_norm(x, 2.0), nh2 = lp_norm(h, 2.0);
        rep.inversion_err = std::max(rep.inversion_err, lp_norm(f.inverse(fx) - x, 2.0) / nx2);
        rep.inversion_err = std::max(rep.inversion_err, lp_norm(f.forward(ih) - h, 2.0) / nh2);

        rep.plancherel_err =
            std::max(rep.plancherel_err, std::abs(lp_norm(fx, 2.0) - nx2) / nx2);
        rep.plancherel_err =
            std::max(rep.plancherel_err, std::abs(lp_norm(ih, 2.0) - nh2) / nh2);

        double s1 = lp_norm(x, 1.0) - operator_norm(fx);
        double s2 = lp_norm(h, 1.0) - operator_norm(ih);
        rep.contraction_slack =
            std::min({rep.contraction_slack, s1 / std::max(lp_norm(x, 1.0), 1e-300),
                      s2 / std::max(lp_norm(h, 1.0), 1e-300)});

        // module identities: F(A x) = sigma F(x) with A the multiplier of
        // sigma, and the mirrored statement on the dual side
        AlgElement sigma = random_element(f.dual, rng);
        AlgElement ax = f.inverse(sigma * fx);
        rep.module_err = std::max(rep.module_err, lp_norm(f.forward(ax) - sigma * fx, 2.0) /
                                                      std::max(lp_norm(sigma * fx, 2.0), 1e-300));
        AlgElement a = random_element(f.source, rng);
        AlgElement bh = f.forward(a * ih);
        rep.module_err = std::max(rep.module_err, lp_norm(f.inverse(bh) - a * ih, 2.0) /
                                                      std::max(lp_norm(a * ih, 2.0), 1e-300));
    }
    return rep;
}

// default reference operator: on a cyclic instance, multiplication by
// (1 + |k|^2)^{1/2} with |k| = min(k, N-k); on a group dual, the block-index
// ladder (1 + j^2)^{1/2} I_{d_j}
inline AlgElement default_dirac(const FourierStructure& f) {
    const int n = static_cast<int>(f.dual.block_count());
    if (f.dual.commutative()) {
        std::vector<Complex> v(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            double ka = std::min(k, n - k);
            v[static_cast<std::size_t>(k)] = std::sqrt(1.0 + ka * ka);
        }
        return AlgElement::diagonal(f.dual, v);
    }
    std::vector<Matrix> blocks;
    for (std::size_t j = 0; j < f.dual.block_count(); ++j) {
        const int d = f.dual.blocks()[j].n;
        blocks.push_back(Matrix::Identity(d, d) *
                         std::sqrt(1.0 + static_cast<double>(j) * static_cast<double>(j)));
    }
    return AlgElement(f.dual, std::move(blocks));
}

}  // namespace nclab
