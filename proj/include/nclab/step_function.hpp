#pragma once
//
// step_function.hpp — right-continuous non-increasing step functions on [0,inf)
// and the Lorentz / weak-norm calculus built on them.
//

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nclab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// A non-negative, non-increasing, right-continuous step function.
// breakpoints() = [0 = T_0 < T_1 < ... < T_m]; values()[i] is assumed on
// [T_i, T_{i+1}); beyond T_m the function equals tail() (values >= tail).
// Adjacent equal values are merged and trailing values equal to the tail are
// absorbed, so the representation is canonical.
class StepFunction {
  public:
    StepFunction() : breakpoints_{0.0}, tail_(0.0) {}

    StepFunction(std::vector<double> breakpoints, std::vector<double> values,
                 double tail = 0.0)
        : breakpoints_(std::move(breakpoints)), values_(std::move(values)),
          tail_(tail) {
        validate();
        canonicalize();
    }

    // constant c on [0, upto), tail beyond
    static StepFunction constant(double c, double upto) {
        return StepFunction({0.0, upto}, {c});
    }

    // Builds the decreasing rearrangement of a finite collection of
    // (value, interval-length) pairs. If total_pin >= 0 the final breakpoint
    // is forced to it, so that elements of a common measure space share the
    // exact floating endpoint of their support.
    static StepFunction from_weighted_values(
        std::vector<std::pair<double, double>> value_length, double tail = 0.0,
        double total_pin = -1.0) {
        std::stable_sort(value_length.begin(), value_length.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        std::vector<double> bps{0.0}, vals;
        double acc = 0.0;
        for (const auto& [v, len] : value_length) {
            if (len <= 0.0) throw std::invalid_argument("step: nonpositive length");
            acc += len;
            bps.push_back(acc);
            vals.push_back(v);
        }
        if (total_pin >= 0.0 && !vals.empty()) bps.back() = total_pin;
        return StepFunction(std::move(bps), std::move(vals), tail);
    }

    double operator()(double t) const {
        if (t < 0.0) throw std::invalid_argument("step: eval at negative t");
        if (values_.empty() || t >= breakpoints_.back()) return tail_;
        auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
        return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
    }

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }
    double tail() const { return tail_; }
    double support_end() const { return breakpoints_.back(); }
    bool identically_zero() const { return values_.empty() && tail_ == 0.0; }

    // Lebesgue measure of {t : f(t) > s} (strict) or {t : f(t) >= s}.
    // Infinite when the tail qualifies.
    double superlevel_measure(double s, bool strict) const {
        if (strict ? (tail_ > s) : (tail_ >= s)) return kInf;
        // values are non-increasing: the superlevel set is [0, T_{k+1}) for
        // the last interval k that qualifies.
        for (std::size_t i = values_.size(); i-- > 0;) {
            if (strict ? (values_[i] > s) : (values_[i] >= s))
                return breakpoints_[i + 1];
        }
        return 0.0;
    }

  private:
    void validate() const {
        if (breakpoints_.empty() || breakpoints_.front() != 0.0)
            throw std::invalid_argument("step: breakpoints must start at 0");
        if (breakpoints_.size() != values_.size() + 1)
            throw std::invalid_argument("step: need one value per interval");
        if (!(tail_ >= 0.0) || !std::isfinite(tail_))
            throw std::invalid_argument("step: bad tail");
        for (std::size_t i = 1; i < breakpoints_.size(); ++i)
            if (!(breakpoints_[i] > breakpoints_[i - 1]) || !std::isfinite(breakpoints_[i]))
                throw std::invalid_argument("step: breakpoints not strictly increasing");
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!std::isfinite(values_[i]) || values_[i] < tail_)
                throw std::invalid_argument("step: values must be finite and >= tail");
            if (i > 0 && values_[i] > values_[i - 1])
                throw std::invalid_argument("step: values must be non-increasing");
        }
    }

    void canonicalize() {
        // drop trailing intervals whose value equals the tail
        while (!values_.empty() && values_.back() == tail_) {
            values_.pop_back();
            breakpoints_.pop_back();
        }
        // merge adjacent equal values
        std::vector<double> bps{0.0}, vals;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!vals.empty() && vals.back() == values_[i]) {
                bps.back() = breakpoints_[i + 1];
            } else {
                vals.push_back(values_[i]);
                bps.push_back(breakpoints_[i + 1]);
            }
        }
        breakpoints_ = std::move(bps);
        values_ = std::move(vals);
    }

    std::vector<double> breakpoints_;
    std::vector<double> values_;
    double tail_;
};

// ||f||_{L^{p,q}}: closed form of (int (t^{1/p} f(t))^q dt/t)^{1/q} for q < inf,
// sup_t t^{1/p} f(t) for q = inf. The supremum over a half-open interval is
// attained in the limit at its right endpoint. Infinite tails give +inf for
// finite p. p = inf is only paired with q = inf (the sup norm).
inline double lorentz_quasinorm(const StepFunction& f, double p, double q) {
    if (!(p > 0.0) || !(q > 0.0))
        throw std::invalid_argument("lorentz: exponents must be positive");
    const bool pinf = std::isinf(p), qinf = std::isinf(q);
    if (pinf && !qinf)
        throw std::invalid_argument("lorentz: p=inf with finite q is undefined");
    if (pinf) {
        double m = f.tail();
        for (double v : f.values()) m = std::max(m, v);
        return m;
    }
    if (f.tail() > 0.0) return kInf;
    const auto& v = f.values();
    const auto& T = f.breakpoints();
    if (qinf) {
        double m = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i)
            m = std::max(m, v[i] * std::pow(T[i + 1], 1.0 / p));
        return m;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0.0) continue;
        s += std::pow(v[i], q) * (p / q) *
             (std::pow(T[i + 1], q / p) - std::pow(T[i], q / p));
    }
    return std::pow(s, 1.0 / q);
}

// (sup_{t>0} t^p m{f > t})^{1/p}, evaluated by enumerating level-set measures
// at the distinct values of f. Agrees with lorentz_quasinorm(f, p, inf).
inline double weak_quasinorm_via_distribution(const StepFunction& f, double p) {
    if (!(p > 0.0) || std::isinf(p))
        throw std::invalid_argument("weak quasinorm: need 0 < p < inf");
    if (f.tail() > 0.0) return kInf;
    double m = 0.0;
    for (double level : f.values()) {
        if (level == 0.0) continue;
        // as t increases to `level`, m{f > t} -> m{f >= level}
        double meas = f.superlevel_measure(level, /*strict=*/false);
        m = std::max(m, level * std::pow(meas, 1.0 / p));
    }
    return m;
}

// M_phi = sup_{s>0} s * m{phi >= s}; attained at a value of phi.
inline double paley_constant(const StepFunction& phi) {
    if (phi.tail() > 0.0) return kInf;
    double m = 0.0;
    for (double level : phi.values()) {
        if (level == 0.0) continue;
        m = std::max(m, level * phi.superlevel_measure(level, /*strict=*/false));
    }
    return m;
}

// pointwise product of two step functions (again a valid non-increasing step)
inline StepFunction pointwise_product(const StepFunction& f, const StepFunction& g) {
    std::vector<double> bps;
    bps.reserve(f.breakpoints().size() + g.breakpoints().size());
    bps.insert(bps.end(), f.breakpoints().begin(), f.breakpoints().end());
    bps.insert(bps.end(), g.breakpoints().begin(), g.breakpoints().end());
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    std::vector<double> vals;
    vals.reserve(bps.size() - 1);
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) vals.push_back(f(bps[i]) * g(bps[i]));
    return StepFunction(std::move(bps), std::move(vals), f.tail() * g.tail());
}

// decreasing rearrangement of a step function (sorts interval values)
inline StepFunction rearrange(const StepFunction& f) {
    std::vector<std::pair<double, double>> vl;
    for (std::size_t i = 0; i < f.values().size(); ++i)
        vl.emplace_back(f.values()[i], f.breakpoints()[i + 1] - f.breakpoints()[i]);
    return StepFunction::from_weighted_values(std::move(vl), f.tail(),
                                              f.values().empty() ? -1.0 : f.support_end());
}

// (fg)*(t1+t2) <= f*(t1) g*(t2), the scalar form of the singular-value
// sub-multiplicativity bound.
inline bool pointwise_product_bound(const StepFunction& f, const StepFunction& g,
                                    double t1, double t2) {
    StepFunction h = rearrange(pointwise_product(f, g));
    return h(t1 + t2) <= f(t1) * g(t2);
}

// grid of n+1 log-uniform points on [lo, hi]
inline std::vector<double> log_grid(double lo, double hi, std::size_t cells) {
    if (!(lo > 0.0) || !(hi > lo) || cells == 0)
        throw std::invalid_argument("log_grid: need 0 < lo < hi and cells >= 1");
    std::vector<double> g(cells + 1);
    const double L = std::log(hi / lo);
    for (std::size_t i = 0; i <= cells; ++i)
        g[i] = lo * std::exp(L * static_cast<double>(i) / static_cast<double>(cells));
    g.front() = lo;
    g.back() = hi;
    return g;
}

// Discretizes a positive decreasing function as a step function on the given
// strictly increasing grid (left-endpoint sampling, so the staircase dominates
// the function). The head [0, grid[0]) takes the first sample; beyond the last
// grid point the function is 0. The grid is recorded in the breakpoints.
inline StepFunction discretize_decreasing(const std::function<double(double)>& fn,
                                          const std::vector<double>& grid) {
    if (grid.size() < 2) throw std::invalid_argument("discretize: need >= 2 grid points");
    std::vector<double> bps{0.0}, vals;
    vals.push_back(fn(grid.front()));
    bps.push_back(grid.front());
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        vals.push_back(fn(grid[i]));
        bps.push_back(grid[i + 1]);
    }
    return StepFunction(std::move(bps), std::move(vals), 0.0);
}

// The weight used throughout the multiplier machinery: 1/t sampled on a
// log-uniform grid over [1/n^2, n^2] with 4n cells.
inline StepFunction default_paley_weight(std::size_t n) {
    if (n == 0) throw std::invalid_argument("paley weight: n >= 1");
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    return discretize_decreasing([](double t) { return 1.0 / t; },
                                 log_grid(1.0 / n2, n2, 4 * n));
}

}  // namespace nclab
