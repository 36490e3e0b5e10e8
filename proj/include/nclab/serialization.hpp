#pragma once
//
// serialization.hpp — wire formats: step functions, algebras, elements and
// group tables as JSON; inequality reports as JSON lines; CSV summaries and
// decay tables. Numeric formatting is deterministic so that identical runs
// produce byte-identical files.
//

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <string>

#include "fourier.hpp"
#include "inequalities.hpp"
#include "spectral_asymptotics.hpp"
#include "step_function.hpp"
#include "vn_algebra.hpp"

namespace nclab {

using json = nlohmann::json;

// shortest round-trip representation; "inf"/"nan" spelled out
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

inline json to_json(const StepFunction& f) {
    return json{{"breakpoints", f.breakpoints()}, {"values", f.values()}, {"tail", f.tail()}};
}

inline StepFunction step_function_from_json(const json& j) {
    return StepFunction(j.at("breakpoints").get<std::vector<double>>(),
                        j.at("values").get<std::vector<double>>(),
                        j.value("tail", 0.0));
}

inline json to_json(const VnAlgebra& a) {
    json blocks = json::array();
    for (const auto& b : a.blocks()) blocks.push_back(json{{"n", b.n}, {"w", b.w}});
    return json{{"blocks", blocks}};
}

inline VnAlgebra algebra_from_json(const json& j) {
    std::vector<Block> blocks;
    for (const auto& b : j.at("blocks"))
        blocks.push_back(Block{b.at("n").get<int>(), b.at("w").get<double>()});
    return VnAlgebra(std::move(blocks));
}

// matrices serialize as row-major [re, im] pair arrays
inline json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    return out;
}

inline Matrix matrix_from_json(const json& j, int n) {
    if (j.size() != static_cast<std::size_t>(n * n))
        throw std::invalid_argument("matrix json: size mismatch");
    Matrix m(n, n);
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj, ++idx)
            m(i, jj) = Complex(j[idx][0].get<double>(), j[idx][1].get<double>());
    return m;
}

inline json to_json(const AlgElement& x) {
    json blocks = json::array();
    for (std::size_t k = 0; k < x.block_count(); ++k) blocks.push_back(matrix_to_json(x.block(k)));
    return json{{"algebra", to_json(x.algebra())}, {"blocks", blocks}};
}

inline AlgElement element_from_json(const json& j) {
    VnAlgebra alg = algebra_from_json(j.at("algebra"));
    std::vector<Matrix> blocks;
    for (std::size_t k = 0; k < alg.block_count(); ++k)
        blocks.push_back(matrix_from_json(j.at("blocks")[k], alg.blocks()[k].n));
    return AlgElement(alg, std::move(blocks));
}

// {"order":..., "table":[[...]], "irreps":[{"dim":..., "matrices":[...]}]}
inline json to_json(const GroupData& g) {
    json irreps = json::array();
    for (const auto& r : g.irreps) {
        json mats = json::array();
        for (const auto& m : r.mats) mats.push_back(matrix_to_json(m));
        irreps.push_back(json{{"dim", r.dim}, {"matrices", mats}});
    }
    return json{{"order", g.table.order}, {"table", g.table.table}, {"irreps", irreps}};
}

inline GroupData group_from_json(const json& j, const std::string& name = "custom") {
    GroupData g;
    g.name = name;
    g.table.order = j.at("order").get<int>();
    g.table.table = j.at("table").get<std::vector<std::vector<int>>>();
    for (const auto& rj : j.at("irreps")) {
        Irrep r;
        r.dim = rj.at("dim").get<int>();
        for (const auto& mj : rj.at("matrices")) r.mats.push_back(matrix_from_json(mj, r.dim));
        g.irreps.push_back(std::move(r));
    }
    g.validate();
    return g;
}

namespace detail {

inline void put_opt(json& j, const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
}

}  // namespace detail

inline json to_json(const InequalityReport& r) {
    json params;
    detail::put_opt(params, "p", r.params.p);
    detail::put_opt(params, "p_prime", r.params.p_prime);
    detail::put_opt(params, "q", r.params.q);
    detail::put_opt(params, "r", r.params.r);
    detail::put_opt(params, "gamma", r.params.gamma);
    detail::put_opt(params, "beta", r.params.beta);
    detail::put_opt(params, "s", r.params.s);
    detail::put_opt(params, "alpha", r.params.alpha);
    return json{{"kind", kind_name(r.kind)}, {"params", params},
                {"lhs", r.lhs},             {"rhs", r.rhs},
                {"factors", r.factors},     {"ratio", r.ratio},
                {"pass", r.pass},           {"instance", r.instance},
                {"seed", r.seed}};
}

// one report per line
inline std::string to_jsonl(const std::vector<InequalityReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        out += to_json(r).dump();
        out += '\n';
    }
    return out;
}

inline std::string csv_field(const std::optional<double>& v) {
    return v ? format_double(*v) : "";
}

// kind,p,q,r,gamma,beta,lhs,rhs,ratio,seed
inline std::string to_csv(const std::vector<InequalityReport>& reports) {
    std::string out = "kind,p,q,r,gamma,beta,lhs,rhs,ratio,seed\n";
    for (const auto& r : reports) {
        out += kind_name(r.kind);
        out += ',' + csv_field(r.params.p) + ',' + csv_field(r.params.q) + ',' +
               csv_field(r.params.r) + ',' + csv_field(r.params.gamma) + ',' +
               csv_field(r.params.beta) + ',' + format_double(r.lhs) + ',' +
               format_double(r.rhs) + ',' + format_double(r.ratio) + ',' +
               std::to_string(r.seed) + '\n';
    }
    return out;
}

inline std::string to_csv(const DecayTable& t) {
    std::string out =
        "t,exact_norm,bound_appl52,bound_cor62,exact_opnorm_1inf,ratio_appl52,ratio_cor62,"
        "ode_residual\n";
    for (const auto& row : t.rows) {
        out += format_double(row.t) + ',' + format_double(row.exact_norm) + ',' +
               format_double(row.bound_appl52) + ',' + format_double(row.bound_cor62) + ',' +
               format_double(row.exact_opnorm_1inf) + ',' + format_double(row.ratio_appl52) +
               ',' + format_double(row.ratio_cor62) + ',' + format_double(row.ode_residual) +
               '\n';
    }
    return out;
}

inline std::string to_csv(const FinitenessReport& r) {
    std::string out = "m,norm\n";
    for (const auto& [m, v] : r.norms)
        out += std::to_string(m) + ',' + format_double(v) + '\n';
    out += "# alpha=" + format_double(r.alpha) + " beta=" + format_double(r.beta) +
           " r=" + format_double(r.r) + " classification=" +
           growth_class_name(r.classification) + " expected=" + growth_class_name(r.expected) +
           '\n';
    return out;
}

inline json to_json(const FinitenessReport& r) {
    json norms = json::array();
    for (const auto& [m, v] : r.norms) norms.push_back(json::array({m, v}));
    return json{{"alpha", r.alpha},
                {"beta", r.beta},
                {"r", r.r},
                {"norms", norms},
                {"classification", growth_class_name(r.classification)},
                {"expected", growth_class_name(r.expected)},
                {"matches", r.matches}};
}

inline json to_json(const DyadicReport& r) {
    json bands = json::array();
    for (const auto& [j, v] : r.band_norms) bands.push_back(json::array({j, v}));
    return json{{"band_norms", bands},
                {"sup_norm", r.sup_norm},
                {"full_norm", r.full_norm},
                {"ratio", r.ratio},
                {"widened_sup", r.widened_sup},
                {"covered_at", r.covered_at},
                {"inequality_holds", r.inequality_holds},
                {"covered_within_5pct", r.covered_within_5pct}};
}

}  // namespace nclab
