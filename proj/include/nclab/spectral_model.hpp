#pragma once
//
// spectral_model.hpp — a positive Hermitian element together with its
// eigenvalue ladder and the counting function u -> tau(E_(0,u)). The counting
// data is non-decreasing, so it lives in its own ladder form rather than in
// StepFunction (whose values are non-increasing by contract).
//

#include <algorithm>
#include <cmath>
#include <vector>

#include "vn_algebra.hpp"

namespace nclab {

class SpectralModel {
  public:
    explicit SpectralModel(AlgElement element) : element_(std::move(element)) {
        auto ev = detail::weighted_eigenvalues(element_);
        std::sort(ev.begin(), ev.end());
        for (const auto& [lam, w] : ev) {
            if (lam < 0.0)
                throw std::invalid_argument("spectral model: negative eigenvalue");
            if (!ladder_.empty() && ladder_.back().first == lam)
                ladder_.back().second += w;
            else
                ladder_.emplace_back(lam, w);
        }
    }

    const AlgElement& element() const { return element_; }

    // distinct eigenvalues (ascending) with accumulated weights
    const std::vector<std::pair<double, double>>& ladder() const { return ladder_; }

    bool strictly_positive() const { return ladder_.front().first > 0.0; }
    double min_eigenvalue() const { return ladder_.front().first; }
    double max_eigenvalue() const { return ladder_.back().first; }

    // tau(E_(0,u)): total weight of eigenvalues strictly between 0 and u
    double counting(double u) const {
        double s = 0.0;
        for (const auto& [lam, w] : ladder_) {
            if (lam >= u) break;
            if (lam > 0.0) s += w;
        }
        return s;
    }

    // lim_{v -> u+} tau(E_(0,v)): weight of eigenvalues in (0, u]
    double counting_upper(double u) const {
        double s = 0.0;
        for (const auto& [lam, w] : ladder_) {
            if (lam > u) break;
            if (lam > 0.0) s += w;
        }
        return s;
    }

  private:
    AlgElement element_;
    std::vector<std::pair<double, double>> ladder_;
};

// Power-law eigenvalue ladders lambda_i = i^{1/alpha}, realizing
// tau(E_(0,s)) ~ s^alpha at cutoff dimension m. `split` subdivides each unit
// weight into `split` rungs at fractional indices, refining the staircase.
struct GrowthLadder {
    double alpha;

    SpectralModel model(std::size_t m, unsigned split = 1) const {
        if (m == 0 || split == 0)
            throw std::invalid_argument("growth ladder: need m >= 1, split >= 1");
        const std::size_t count = m * split;
        VnAlgebra alg = VnAlgebra::diagonal(static_cast<int>(count), 1.0 / split);
        std::vector<Complex> vals(count);
        for (std::size_t j = 1; j <= count; ++j)
            vals[j - 1] = std::pow(static_cast<double>(j) / split, 1.0 / alpha);
        return SpectralModel(AlgElement::diagonal(alg, vals));
    }
};

}  // namespace nclab
