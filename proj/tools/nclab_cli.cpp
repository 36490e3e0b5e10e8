//
// nclab — command-line driver: instance generation, verification suites,
// sweep execution, report emission.
//
// Exit codes: 0 clean, 1 configuration error, 2 hard violation of an
// exact-constant claim (Hausdorff-Young at constant one, Fourier axioms,
// the weak-norm equality, sub-multiplicativity, semigroup machinery).
// Bounds with unquantified constants report ratios and never fail a run
// on their own.
//

#include <CLI11.hpp>

#include <nclab/nclab.hpp>

#include <fstream>
#include <iostream>

namespace {

nclab::ExperimentConfig config_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    nlohmann::json j;
    in >> j;
    nclab::ExperimentConfig cfg;
    cfg.kind = j.value("kind", cfg.kind);
    cfg.instance = j.value("instance", cfg.instance);
    if (j.contains("p")) cfg.p_list = j.at("p").get<std::vector<double>>();
    if (j.contains("q")) cfg.q_list = j.at("q").get<std::vector<double>>();
    cfg.beta = j.value("beta", cfg.beta);
    cfg.r = j.value("r", cfg.r);
    cfg.alpha = j.value("alpha", cfg.alpha);
    cfg.s = j.value("s", cfg.s);
    cfg.trials = j.value("trials", cfg.trials);
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.out = j.value("out", cfg.out);
    cfg.format = j.value("format", cfg.format);
    cfg.phi = j.value("phi", cfg.phi);
    cfg.dims = j.value("dims", cfg.dims);
    cfg.tgrid = j.value("tgrid", cfg.tgrid);
    cfg.swap = j.value("swap", cfg.swap);
    return cfg;
}

std::vector<double> parse_exponents(const std::string& spec) {
    std::vector<double> out;
    for (const auto& part : nclab::detail::split(spec, ',')) {
        if (part == "inf")
            out.push_back(nclab::kInf);
        else
            out.push_back(std::stod(part));
    }
    return out;
}

void emit(const nclab::SuiteResult& res, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << res.payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << res.payload;
    }
    std::cerr << res.summary << "\n";
    if (!res.offending_seeds.empty()) {
        std::cerr << "offending seeds:";
        for (auto s : res.offending_seeds) std::cerr << ' ' << s;
        std::cerr << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nclab — rearrangement calculus, finite Fourier structures and "
                 "multiplier-inequality verification"};
    app.require_subcommand(1);

    std::string config_path, kind, instance, out_path, format, phi, dims, tgrid;
    std::string p_spec, q_spec;
    double beta = 2.0, r = 2.0, alpha = 1.0, s = 1.0;
    int trials = 100;
    std::uint64_t seed = 0;
    bool swap = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file; explicit flags win");
        sub->add_option("--kind", kind, "suite kind");
        sub->add_option("--instance", instance,
                        "cyclic:N | group:NAME | group-file:PATH | trivial:NwW,...");
        sub->add_option("--p", p_spec, "exponent or comma list (inf allowed)");
        sub->add_option("--q", q_spec, "second exponent or comma list (inf allowed)");
        sub->add_option("--beta", beta, "power of the reference operator");
        sub->add_option("--r", r, "Lorentz first exponent");
        sub->add_option("--alpha", alpha, "spectral growth exponent");
        sub->add_option("--s", s, "smoothness parameter (dyadic sweeps)");
        sub->add_option("--trials", trials, "number of randomized trials");
        sub->add_option("--seed", seed, "mandatory run seed");
        sub->add_option("--out", out_path, "output path (default stdout)");
        sub->add_option("--format", format, "json | csv");
        sub->add_option("--phi", phi, "default | window:C:A | invt:LO:HI:CELLS");
        sub->add_option("--dims", dims, "dimension sweep, e.g. 16..4096");
        sub->add_option("--tgrid", tgrid, "time grid, e.g. log:0.01:10:50");
        sub->add_flag("--swap", swap, "run on the swapped (dual, source) structure");
    };

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    CLI::App* sweep = app.add_subcommand("sweep", "run a sweep (finiteness | heat | dyadic)");
    add_common(verify);
    add_common(sweep);

    CLI11_PARSE(app, argc, argv);
    CLI::App* sub = verify->parsed() ? verify : sweep;

    try {
        nclab::ExperimentConfig cfg;
        if (sub->count("--config")) cfg = config_from_file(config_path);
        cfg.command = verify->parsed() ? "verify" : "sweep";
        if (sub->count("--kind")) cfg.kind = kind;
        if (sub->count("--instance")) cfg.instance = instance;
        if (sub->count("--p")) cfg.p_list = parse_exponents(p_spec);
        if (sub->count("--q")) cfg.q_list = parse_exponents(q_spec);
        if (sub->count("--beta")) cfg.beta = beta;
        if (sub->count("--r")) cfg.r = r;
        if (sub->count("--alpha")) cfg.alpha = alpha;
        if (sub->count("--s")) cfg.s = s;
        if (sub->count("--trials")) cfg.trials = trials;
        if (sub->count("--seed")) cfg.seed = seed;
        if (sub->count("--out")) cfg.out = out_path;
        if (sub->count("--format")) cfg.format = format;
        if (sub->count("--phi")) cfg.phi = phi;
        if (sub->count("--dims")) cfg.dims = dims;
        if (sub->count("--tgrid")) cfg.tgrid = tgrid;
        if (sub->count("--swap")) cfg.swap = swap;
        if (cfg.kind.empty()) throw std::invalid_argument("--kind is required");

        nclab::SuiteResult res =
            cfg.command == "verify" ? nclab::run_verify(cfg) : nclab::run_sweep(cfg);
        emit(res, cfg.out);
        return res.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
