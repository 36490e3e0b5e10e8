#pragma once
//
// Test-only reference computations, kept independent of the library paths
// they are used to check.
//

#include <nclab/step_function.hpp>
#include <nclab/rng.hpp>

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

// 16-point Gauss-Legendre on [a,b]
inline double gauss16(const std::function<double(double)>& g, double a, double b) {
    static const double xs[8] = {0.0950125098376374, 0.2816035507792589,
                                 0.4580167776572274, 0.6178762444026438,
                                 0.7554044083550030, 0.8656312023878318,
                                 0.9445750230732326, 0.9894009349916499};
    static const double ws[8] = {0.1894506104550685, 0.1826034150449236,
                                 0.1691565193950025, 0.1495959888165767,
                                 0.1246289712555339, 0.0951585116824928,
                                 0.0622535239386479, 0.0271524594117541};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i) s += ws[i] * (g(c - h * xs[i]) + g(c + h * xs[i]));
    return s * h;
}

inline double simpson(const std::function<double(double)>& g, double a, double b, int n) {
    double s = 0.0;
    const double h = (b - a) / n;
    for (int i = 0; i < n; ++i) s += gauss16(g, a + i * h, a + (i + 1) * h);
    return s;
}

// integral of g over (0, b] where g may have an integrable power singularity
// at 0: geometric bisection toward 0, Gauss-Legendre on each level
inline double integrate_to_zero(const std::function<double(double)>& g, double b,
                                int levels = 700, int panels = 4) {
    double total = 0.0;
    double hi = b;
    for (int l = 0; l < levels; ++l) {
        double lo = hi * 0.5;
        total += simpson(g, lo, hi, panels);
        hi = lo;
        if (hi == 0.0) break;
    }
    return total;
}

// brute-force quadrature of the Lorentz functional (int (t^{1/p} f(t))^q dt/t)^{1/q}.
// The function value is constant on each piece; only the t-power factor is
// integrated numerically. Sampling f itself at panel edges would leak the
// neighbouring interval's value through right-continuity.
inline double lorentz_by_quadrature(const nclab::StepFunction& f, double p, double q) {
    const auto& bp = f.breakpoints();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const double v = f(0.5 * (bp[i] + bp[i + 1]));
        auto integrand = [&](double t) {
            return std::pow(std::pow(t, 1.0 / p) * v, q) / t;
        };
        if (i == 0)
            total += integrate_to_zero(integrand, bp[1]);
        else
            total += simpson(integrand, bp[i], bp[i + 1], 64);
    }
    return std::pow(total, 1.0 / q);
}

// dense-grid approximation of sup_t t^{1/p} f(t)
inline double weak_norm_by_grid(const nclab::StepFunction& f, double p, int per_cell = 4096) {
    const auto& bp = f.breakpoints();
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        for (int j = 0; j < per_cell; ++j) {
            double t = bp[i] + (bp[i + 1] - bp[i]) * (j + 0.5) / per_cell;
            m = std::max(m, std::pow(t, 1.0 / p) * f(t));
        }
    }
    return m;
}

inline nclab::StepFunction random_step(nclab::Rng& rng, int max_pieces = 6) {
    int n = 1 + static_cast<int>(rng.uniform() * max_pieces);
    std::vector<std::pair<double, double>> vl;
    for (int i = 0; i < n; ++i)
        vl.emplace_back(0.1 + 3.0 * rng.uniform(), 0.05 + 2.0 * rng.uniform());
    return nclab::StepFunction::from_weighted_values(std::move(vl));
}

}  // namespace oracle
