#pragma once
//
// inequalities.hpp — both sides of the Hausdorff-Young, Paley,
// Hausdorff-Young-Paley, Hardy-Littlewood and multiplier bounds on a given
// Fourier structure, reported with their empirical constants. Exact-constant
// claims (HY) carry a pass threshold; the remaining bounds hold up to an
// unquantified constant, so their reports carry ratios and the operator-norm
// comparisons flag a violation only when the certified lower bound beats the
// right-hand side.
//

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourier.hpp"
#include "operator_norms.hpp"
#include "spectral_model.hpp"
#include "step_function.hpp"
#include "vn_algebra.hpp"

namespace nclab {

enum class ReportKind { HY, HY_LORENTZ, PALEY, HYP, HL, DUAL_HLP, MULT_51, MULT_56, DYADIC_55 };

inline const char* kind_name(ReportKind k) {
    switch (k) {
        case ReportKind::HY: return "HY";
        case ReportKind::HY_LORENTZ: return "HY_LORENTZ";
        case ReportKind::PALEY: return "PALEY";
        case ReportKind::HYP: return "HYP";
        case ReportKind::HL: return "HL";
        case ReportKind::DUAL_HLP: return "DUAL_HLP";
        case ReportKind::MULT_51: return "MULT_51";
        case ReportKind::MULT_56: return "MULT_56";
        case ReportKind::DYADIC_55: return "DYADIC_55";
    }
    return "?";
}

struct ExponentSet {
    std::optional<double> p, p_prime, q, r, gamma, beta, s, alpha;
};

struct InequalityReport {
    ReportKind kind;
    ExponentSet params;
    double lhs = 0.0;
    double rhs = 0.0;
    std::map<std::string, double> factors;
    double ratio = 0.0;
    bool pass = true;
    std::string instance;
    std::uint64_t seed = 0;
};

namespace detail {

inline double safe_ratio(double lhs, double rhs) {
    if (rhs > 0.0) return lhs / rhs;
    return lhs == 0.0 ? 0.0 : kInf;
}

inline double conjugate_exponent(double p) {
    if (p == 1.0) return kInf;
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

// closed-form step integral of (mu(t) phi(t)^e)^q dt. mu has bounded support;
// a zero of phi under a negative exponent makes the integral infinite unless
// mu vanishes there first.
inline double weighted_step_integral(const StepFunction& mu, const StepFunction& phi,
                                     double e, double q) {
    std::vector<double> bps;
    bps.insert(bps.end(), mu.breakpoints().begin(), mu.breakpoints().end());
    bps.insert(bps.end(), phi.breakpoints().begin(), phi.breakpoints().end());
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const double a = bps[i], b = bps[i + 1];
        const double mv = mu(a);
        if (mv == 0.0) continue;
        double pv = e == 0.0 ? 1.0 : 0.0;
        if (e != 0.0) {
            double ph = phi(a);
            if (ph == 0.0 && e < 0.0) return kInf;
            pv = std::pow(ph, e);
        }
        total += std::pow(mv * pv, q) * (b - a);
    }
    if (mu.tail() > 0.0) return kInf;
    return total;
}

}  // namespace detail

// Lemma-level Hausdorff-Young: ||F x||_{p'} <= ||x||_p, constant one.
inline InequalityReport check_hausdorff_young(const FourierStructure& f, const AlgElement& x,
                                              double p, std::uint64_t seed = 0) {
    if (!(p >= 1.0 && p <= 2.0))
        throw std::invalid_argument("hausdorff-young: need 1 <= p <= 2");
    const double pp = detail::conjugate_exponent(p);
    InequalityReport rep;
    rep.kind = ReportKind::HY;
    rep.params.p = p;
    rep.params.p_prime = pp;
    rep.lhs = lp_norm(f.forward(x), pp);
    rep.rhs = lp_norm(x, p);
    rep.ratio = detail::safe_ratio(rep.lhs, rep.rhs);
    rep.pass = rep.ratio <= 1.0 + 1e-9;
    rep.instance = f.descriptor;
    rep.seed = seed;
    return rep;
}

// Lorentz-refined Hausdorff-Young: ||F x||_{p',p} <~ ||x||_p (constant
// unquantified; the ratio is the empirical constant).
inline InequalityReport check_hy_lorentz(const FourierStructure& f, const AlgElement& x,
                                         double p, std::uint64_t seed = 0) {
    if (!(p > 1.0 && p <= 2.0))
        throw std::invalid_argument("hy-lorentz: need 1 < p <= 2");
    const double pp = detail::conjugate_exponent(p);
    InequalityReport rep;
    rep.kind = ReportKind::HY_LORENTZ;
    rep.params.p = p;
    rep.params.p_prime = pp;
    rep.lhs = lorentz_norm(f.forward(x), pp, p);
    rep.rhs = lp_norm(x, p);
    rep.ratio = detail::safe_ratio(rep.lhs, rep.rhs);
    rep.instance = f.descriptor;
    rep.seed = seed;
    return rep;
}

// Paley: (int mu^p(t, Fx) phi(t)^{2-p} dt)^{1/p} <~ M_phi^{(2-p)/p} ||x||_p.
inline InequalityReport check_paley(const FourierStructure& f, const AlgElement& x, double p,
                                    const StepFunction& phi, std::uint64_t seed = 0) {
    if (!(p > 1.0 && p <= 2.0)) throw std::invalid_argument("paley: need 1 < p <= 2");
    const double mphi = paley_constant(phi);
    if (std::isinf(mphi)) throw std::invalid_argument("paley: M_phi is infinite");
    InequalityReport rep;
    rep.kind = ReportKind::PALEY;
    rep.params.p = p;
    rep.params.p_prime = detail::conjugate_exponent(p);
    const double e = (2.0 - p) / p;
    StepFunction mu = singular_value_function(f.forward(x));
    rep.lhs = std::pow(detail::weighted_step_integral(mu, phi, e, p), 1.0 / p);
    rep.rhs = std::pow(mphi, e) * lp_norm(x, p);
    rep.factors["M_phi"] = mphi;
    rep.ratio = detail::safe_ratio(rep.lhs, rep.rhs);
    rep.instance = f.descriptor;
    rep.seed = seed;
    return rep;
}

// Hausdorff-Young-Paley: (int (mu(t,Fx) phi(t)^{1/q-1/p'})^q dt)^{1/q}
//   <~ M_phi^{1/q-1/p'} ||x||_p, for 1 < p <= q <= p' < inf.
inline InequalityReport check_hyp(const FourierStructure& f, const AlgElement& x, double p,
                                  double q, const StepFunction& phi, std::uint64_t seed = 0) {
    const double pp = detail::conjugate_exponent(p);
    if (!(p > 1.0) || std::isinf(pp) || !(p <= q && q <= pp))
        throw std::invalid_argument("hyp: need 1 < p <= q <= p' < inf");
    const double mphi = paley_constant(phi);
    if (std::isinf(mphi)) throw std::invalid_argument("hyp: M_phi is infinite");
    InequalityReport rep;
    rep.kind = ReportKind::HYP;
    rep.params.p = p;
    rep.params.p_prime = pp;
    rep.params.q = q;
    const double e = 1.0 / q - 1.0 / pp;
    StepFunction mu = singular_value_function(f.forward(x));
    rep.lhs = std::pow(detail::weighted_step_integral(mu, phi, e, q), 1.0 / q);
    rep.rhs = std::pow(mphi, e) * lp_norm(x, p);
    rep.factors["M_phi"] = mphi;
    rep.ratio = detail::safe_ratio(rep.lhs, rep.rhs);
    rep.instance = f.descriptor;
    rep.seed = seed;
    return rep;
}

// Hardy-Littlewood: ||D^{-beta} F x||_p <~ ||D^{-beta}||_{r,inf}^{1/r} ||x||_p,
// 1/r = (2-p)/p. The boundary p = 2 (r = inf) is rejected.
inline InequalityReport check_hardy_littlewood(const FourierStructure& f, const AlgElement& x,
                                               double p, const AlgElement& dirac, double beta,
                                               std::uint64_t seed = 0) {
    if (!(p > 1.0 && p < 2.0))
        throw std::invalid_argument(
            "hardy-littlewood: need 1 < p < 2 (at p = 2 the exponent r degenerates to infinity)");
    const double r = p / (2.0 - p);
    InequalityReport rep;
    rep.kind = ReportKind::HL;
    rep.params.p = p;
    rep.params.p_prime = detail::conjugate_exponent(p);
    rep.params.r = r;
    rep.params.beta = beta;
    AlgElement dnb = element_power(dirac, -beta);  // throws on non-invertible D
    rep.lhs = lp_norm(dnb * f.forward(x), p);
    const double wnorm = lorentz_norm(dnb, r, kInf);
    const double factor = std::pow(wnorm, 1.0 / r);
    rep.rhs = factor * lp_norm(x, p);
    rep.factors["D_neg_beta_weak_norm"] = wnorm;
    rep.factors["D_neg_beta_factor"] = factor;
    rep.ratio = detail::safe_ratio(rep.lhs, rep.rhs);
    rep.instance = f.descriptor;
    rep.seed = seed;
    return rep;
}

// Dual Hardy-Littlewood-Paley: ||x||_p <~ ||D^{-beta}||_{r,inf}^{1/r}
// ||D^beta F x||_p. Run it on f.swapped() to exercise the Kac-dual statement.
inline InequalityReport check_dual_hlp(const FourierStructure& f, const AlgElement& x, double p,
                                       const AlgElement& dirac, double beta,
                                       std::uint64_t seed = 0) {
    if (!(p > 1.0 && p < 2.0))
        throw std::invalid_argument("dual-hlp: need 1 < p < 2");
    const double r = p / (2.0 - p);
    InequalityReport rep;
    rep.kind = ReportKind::DUAL_HLP;
    rep.params.p = p;
    rep.params.p_prime = detail::conjugate_exponent(p);
    rep.params.r = r;
    rep.params.beta = beta;
    AlgElement dnb = element_power(dirac, -beta);
    AlgElement db = element_power(dirac, beta);
    rep.lhs = lp_norm(x, p);
    const double wnorm = lorentz_norm(dnb, r, kInf);
    rep.rhs = std::pow(wnorm, 1.0 / r) * lp_norm(db * f.forward(x), p);
    rep.factors["D_neg_beta_weak_norm"] = wnorm;
    rep.ratio = detail::safe_ratio(rep.lhs, rep.rhs);
    rep.instance = f.descriptor;
    rep.seed = seed;
    return rep;
}

// Multiplier theorem: ||A||_{p->p} <~ ||D^{-beta}||_{r,inf}^{1/r}
// ||D^beta A Psi||_{r,q} ||Psi^{-1}||_op with 1/r = 2|1/p - 1/2|. The left
// side is the certified bracket; a violation is declared only against its
// lower bound. p = 2 is refused (r degenerates; Plancherel handles it).
inline InequalityReport multiplier_bound_51(const FourierStructure& f, const AlgElement& symbol,
                                            const AlgElement& psi, const AlgElement& dirac,
                                            double beta, double p, double q,
                                            std::uint64_t seed = 0) {
    if (!(p > 1.0) || std::isinf(p) || p == 2.0)
        throw std::invalid_argument(
            "multiplier-51: need 1 < p < inf, p != 2 (r is infinite at p = 2; the L^2 norm "
            "equals the symbol sup by Plancherel)");
    if (!(q > 0.0)) throw std::invalid_argument("multiplier-51: need q > 0");
    if (!is_hermitian(psi))
        throw std::invalid_argument("multiplier-51: Psi must be self-adjoint");
    const double rinv = 2.0 * std::abs(1.0 / p - 0.5);
    const double r = 1.0 / rinv;
    InequalityReport rep;
    rep.kind = ReportKind::MULT_51;
    rep.params.p = p;
    rep.params.p_prime = detail::conjugate_exponent(p);
    rep.params.q = q;
    rep.params.r = r;
    rep.params.beta = beta;

    AlgElement psi_inv = element_power(psi, -1.0);  // throws if not invertible
    AlgElement dnb = element_power(dirac, -beta);
    AlgElement db = element_power(dirac, beta);

    MultiplierOp op(f, symbol);
    PnormBracket bracket = operator_pnorm_bracket(f.source, multiplier_kernel(op), p, seed + 1);
    rep.lhs = bracket.lower;
    rep.factors["lhs_upper"] = bracket.upper;

    const double wnorm = lorentz_norm(dnb, r, kInf);
    const double sym_norm = lorentz_norm(db * symbol * psi, r, q);
    const double psi_inv_op = operator_norm(psi_inv);
    rep.rhs = std::pow(wnorm, rinv) * sym_norm * psi_inv_op;
    rep.factors["D_neg_beta_weak_norm"] = wnorm;
    rep.factors["DbetaAPsi_lorentz"] = sym_norm;
    rep.factors["Psi_inv_op"] = psi_inv_op;
    rep.ratio = detail::safe_ratio(rep.lhs, rep.rhs);
    rep.pass = !(rep.lhs > rep.rhs * (1.0 + 1e-9));
    rep.instance = f.descriptor;
    rep.seed = seed;
    return rep;
}

// Hormander-type criterion: ||A||_{p->p} <~ ||phi||_{1,inf}^{1/q-1/p}
// ||D^{-beta}||_{r,inf}^{1/r} ||phi^{1/p-1/q} mu(D^beta A)||_{L^gamma},
// 2 <= p < inf, p' <= q <= p, 1/gamma = 1/q' - 1/p > 0. The phi-exponent
// follows the proof (1/q - 1/p); the displayed one is recorded alongside.
inline InequalityReport multiplier_bound_56(const FourierStructure& f, const AlgElement& symbol,
                                            const AlgElement& dirac, double beta, double p,
                                            double q, const StepFunction& phi,
                                            std::uint64_t seed = 0) {
    if (!(p >= 2.0) || std::isinf(p))
        throw std::invalid_argument("multiplier-56: need 2 <= p < inf");
    const double pp = detail::conjugate_exponent(p);
    if (!(q >= pp && q <= p))
        throw std::invalid_argument("multiplier-56: need p' <= q <= p");
    const double qp = detail::conjugate_exponent(q);
    const double ginv = 1.0 / qp - 1.0 / p;
    if (!(ginv > 0.0))
        throw std::invalid_argument("multiplier-56: need 1/gamma = 1/q' - 1/p > 0");
    const double gamma = 1.0 / ginv;
    const double rinv = 2.0 * std::abs(1.0 / p - 0.5);
    const double phi_weak = lorentz_quasinorm(phi, 1.0, kInf);
    if (std::isinf(phi_weak))
        throw std::invalid_argument("multiplier-56: phi must lie in weak L^1");

    InequalityReport rep;
    rep.kind = ReportKind::MULT_56;
    rep.params.p = p;
    rep.params.p_prime = pp;
    rep.params.q = q;
    rep.params.gamma = gamma;
    rep.params.beta = beta;
    if (rinv > 0.0) rep.params.r = 1.0 / rinv;

    AlgElement dnb = element_power(dirac, -beta);
    AlgElement db = element_power(dirac, beta);

    MultiplierOp op(f, symbol);
    PnormBracket bracket = operator_pnorm_bracket(f.source, multiplier_kernel(op), p, seed + 1);
    rep.lhs = bracket.lower;
    rep.factors["lhs_upper"] = bracket.upper;

    const double e_phi = 1.0 / q - 1.0 / p;   // proof exponent, used
    const double e_stated = (1.0 - 1.0 / q) / q;  // displayed exponent, logged
    const double wnorm = lorentz_norm(dnb, 1.0 / rinv, kInf);
    StepFunction mu = singular_value_function(db * symbol);
    const double gfactor =
        std::pow(detail::weighted_step_integral(mu, phi, 1.0 / p - 1.0 / q, gamma), 1.0 / gamma);
    rep.rhs = std::pow(phi_weak, e_phi) * std::pow(wnorm, rinv) * gfactor;
    rep.factors["phi_weak_norm"] = phi_weak;
    rep.factors["phi_exponent_used"] = e_phi;
    rep.factors["phi_exponent_stated"] = e_stated;
    rep.factors["D_neg_beta_weak_norm"] = wnorm;
    rep.factors["gamma_factor"] = gfactor;
    rep.ratio = detail::safe_ratio(rep.lhs, rep.rhs);
    rep.pass = !(rep.lhs > rep.rhs * (1.0 + 1e-9));
    rep.instance = f.descriptor;
    rep.seed = seed;
    return rep;
}

// at p = 2 the multiplier norm is the symbol sup (Plancherel); both sides
// returned for the harness's self-duality assertion
inline std::pair<double, double> multiplier_l2_identity(const FourierStructure& f,
                                                        const AlgElement& symbol) {
    MultiplierOp op(f, symbol);
    PnormBracket b = operator_pnorm_bracket(f.source, multiplier_kernel(op), 2.0);
    return {b.lower, operator_norm(symbol)};
}

// --- dyadic projection identity (discrete form) ---

struct DyadicReport {
    std::vector<std::pair<int, double>> band_norms;  // (j, ||M_s E_j A Psi||)
    double sup_norm = 0.0;
    double full_norm = 0.0;
    double ratio = 0.0;                        // sup / full
    std::vector<double> widened_sup;           // sup over widened bands, w = 0,1,...
    int covered_at = -1;                       // first widening with a band covering supp
    bool inequality_holds = false;             // sup <= full, exact
    bool covered_within_5pct = false;
};

// E_j = indicator of the dyadic frequency band (2^{j-1}, 2^{j+1}) under
// |k| = min(k, N-k); M_s = multiplication by (1+|k|^2)^{s/2}. Verifies
// sup_j ||M_s E_j A Psi||_{L^{1/s,1}} <= ||M_s A Psi||_{L^{1/s,1}} and the
// near-equality once a (widened) band covers the spectrum of the symbol.
inline DyadicReport dyadic_projection_identity(const FourierStructure& f,
                                               const AlgElement& symbol, const AlgElement& psi,
                                               double s) {
    const int n = static_cast<int>(f.dual.block_count());
    if (!f.dual.commutative() || (n & (n - 1)) != 0)
        throw std::invalid_argument("dyadic: cyclic power-of-two instances only");
    if (!(s > 0.0)) throw std::invalid_argument("dyadic: need s > 0");
    const double lp = 1.0 / s, lq = 1.0;

    AlgElement ms = AlgElement::identity(f.dual);
    {
        std::vector<Complex> v(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            double ka = std::min(k, n - k);
            v[static_cast<std::size_t>(k)] = std::pow(1.0 + ka * ka, s / 2.0);
        }
        ms = AlgElement::diagonal(f.dual, v);
    }
    AlgElement weighted = ms * symbol * psi;
    auto wvals = weighted.diagonal_values();

    auto band_indicator = [&](int j, int widen) {
        std::vector<Complex> v(static_cast<std::size_t>(n), 0.0);
        double lo = std::pow(2.0, j - 1 - widen), hi = std::pow(2.0, j + 1 + widen);
        for (int k = 0; k < n; ++k) {
            double ka = std::min(k, n - k);
            if (ka > lo && ka < hi) v[static_cast<std::size_t>(k)] = 1.0;
        }
        return AlgElement::diagonal(f.dual, v);
    };

    DyadicReport rep;
    rep.full_norm = lorentz_norm(weighted, lp, lq);
    const int jmax = static_cast<int>(std::round(std::log2(n))) - 1;
    for (int j = 0; j <= jmax; ++j) {
        double norm_j = lorentz_norm(band_indicator(j, 0) * weighted, lp, lq);
        rep.band_norms.emplace_back(j, norm_j);
        rep.sup_norm = std::max(rep.sup_norm, norm_j);
    }
    rep.ratio = detail::safe_ratio(rep.sup_norm, rep.full_norm);
    rep.inequality_holds = rep.sup_norm <= rep.full_norm;

    const int wmax = jmax + 1;
    for (int w = 0; w <= wmax; ++w) {
        double swide = 0.0;
        bool covered = false;
        for (int j = 0; j <= jmax; ++j) {
            AlgElement ej = band_indicator(j, w);
            swide = std::max(swide, lorentz_norm(ej * weighted, lp, lq));
            // does this band carry the whole weighted symbol?
            auto ev = ej.diagonal_values();
            bool cov = true;
            for (int k = 0; k < n; ++k)
                if (std::abs(wvals[static_cast<std::size_t>(k)]) > 1e-14 &&
                    ev[static_cast<std::size_t>(k)] == 0.0)
                    cov = false;
            covered = covered || cov;
        }
        rep.widened_sup.push_back(swide);
        if (covered && rep.covered_at < 0) {
            rep.covered_at = w;
            rep.covered_within_5pct = swide >= 0.95 * rep.full_norm;
        }
    }
    return rep;
}

// default beta policy: smallest grid value with 1/r < beta/alpha
inline double default_beta(double p, double alpha = 1.0) {
    const double rinv = 2.0 * std::abs(1.0 / p - 0.5);
    for (double b : {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2.0, 2.5, 3.0})
        if (rinv < b / alpha) return b;
    return 3.0;
}

}  // namespace nclab
