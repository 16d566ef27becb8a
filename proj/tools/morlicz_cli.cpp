// Command-line front end: reproducible experiment runs over the library with
// CSV report emission. Exit codes: 0 success, 2 parse error, 3 numeric range
// error, 4 certified-check failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "morlicz/lab.hpp"
#include "morlicz/rng.hpp"
#include "morlicz/objectives.hpp"
#include "morlicz/serialize.hpp"

namespace {

using namespace morlicz;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitRange = 3;
constexpr int kExitCheck = 4;

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

/// --family accepts a descriptor file path, a one-line function descriptor
/// (wrapped as a constant family), or the shorthands "nakano:p1,p2,..." and
/// "section6[:depth]".
MusielakFamily load_family(const std::string& spec) {
    if (std::ifstream(spec).good()) return parse_family(slurp(spec));
    if (spec.rfind("nakano:", 0) == 0) {
        std::vector<double> ps;
        std::istringstream is(spec.substr(7));
        std::string tok;
        while (std::getline(is, tok, ',')) ps.push_back(std::stod(tok));
        return MusielakFamily::nakano(std::move(ps));
    }
    if (spec == "section6" || spec.rfind("section6:", 0) == 0) {
        int depth = spec == "section6" ? 20 : std::stoi(spec.substr(9));
        return MusielakFamily::weighted(section6_piecewise(depth), WeightSequence::section6(depth));
    }
    return MusielakFamily::constant(parse_function(spec));
}

FiniteVector load_vector(const std::string& vec_path, const std::string& coords) {
    if (!vec_path.empty()) return vector_from_csv(slurp(vec_path));
    if (coords.empty()) throw ParseError("provide --vector <csv> or --coords a,b,...");
    std::vector<double> v;
    std::istringstream is(coords);
    std::string tok;
    while (std::getline(is, tok, ',')) v.push_back(std::stod(tok));
    return FiniteVector(std::move(v));
}

/// Single-owner sink for reports: --out file or stdout.
struct Out {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Out(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw ParseError("cannot open output '" + path + "'");
            os = &file;
        }
    }
};

struct Options {
    std::string family = "power(2)", vec_path, coords, out, objective = "quadratic",
                config_path;
    std::size_t dim = 8;
    std::uint64_t seed = 1;
    int budget = 4000, trials = 100, depth = 10, n = 5;
    double epsilon = 0.1, delta = 0.0, p = 0.5, at = 1.0, t0 = 0.5, a_cap = 0.5;
    std::vector<double> obj_params;
};

Problem make_problem(const Options& opt, const MusielakFamily& fam) {
    BoundedDomain S(opt.dim, 1.0);
    return Problem{make_objective(opt.objective, opt.obj_params, opt.dim, fam), S, std::nullopt,
                   opt.objective};
}

int cmd_norm(const Options& opt) {
    MusielakFamily fam = load_family(opt.family);
    FiniteVector x = load_vector(opt.vec_path, opt.coords);
    Out out(opt.out);
    *out.os << format_sig(luxemburg_norm(fam, x)) << "\n";
    return kExitOk;
}

int cmd_indices(const Options& opt) {
    MusielakFamily fam = load_family(opt.family);
    IndexEstimate est = matuszewska_indices(fam.at(1));
    Out out(opt.out);
    CsvWriter w(*out.os, {"alpha", "beta", "u_min", "grid_points"});
    w.row({format_sig(est.alpha), format_sig(est.beta), format_sig(est.u_min),
           std::to_string(est.grid_points)});
    return kExitOk;
}

int cmd_conjugate(const Options& opt) {
    MusielakFamily fam = load_family(opt.family);
    Out out(opt.out);
    *out.os << format_sig(conjugate(fam.at(1), opt.at)) << "\n";
    return kExitOk;
}

int cmd_delta2(const Options& opt) {
    MusielakFamily fam = load_family(opt.family);
    Delta2Report rep = delta2_check(fam.at(1), opt.t0);
    Out out(opt.out);
    CsvWriter w(*out.os, {"holds", "constant_est", "witness"});
    w.row({rep.holds ? "1" : "0", format_sig(rep.constant_est),
           rep.witness ? format_sig(*rep.witness) : "nan"});
    *out.os << (rep.holds ? "holds" : "fails") << "\n";
    return kExitOk;
}

int cmd_perturb(const Options& opt) {
    MusielakFamily fam = load_family(opt.family);
    Problem p = make_problem(opt, fam);
    EpsArgminSet amin = eps_argmin(p, fam, opt.epsilon, opt.budget, opt.seed);
    if (amin.points.empty()) throw RangeError("empty approximate argmin sample");
    PerturbationCertificate cert =
        construct_strong_perturbation(fam, p.S, amin.points.front(), opt.epsilon, opt.n, opt.seed);
    Out out(opt.out);
    CsvWriter w(*out.os, {"epsilon", "n", "k_n", "delta", "theta", "tail_start", "p_norm",
                          "g_at_x", "tail_diam", "c_est", "k_in_range", "seed"});
    w.row({format_sig(cert.epsilon), std::to_string(cert.n), format_sig(cert.k_n),
           format_sig(cert.delta), format_sig(cert.theta), std::to_string(cert.tail_start),
           format_sig(cert.p_norm), format_sig(cert.g_at_x), format_sig(cert.tail_diam),
           format_sig(cert.c_est), cert.k_in_range ? "1" : "0", std::to_string(cert.seed)});
    bool ok = std::abs(cert.p_norm - cert.epsilon) <= 1e-9 * (1.0 + cert.epsilon) &&
              cert.g_at_x < cert.delta && cert.tail_diam <= 1.0 / cert.n + 1e-9;
    return ok ? kExitOk : kExitCheck;
}

int cmd_stegall(const Options& opt) {
    MusielakFamily fam = load_family(opt.family);
    Problem p = make_problem(opt, fam);
    Rng rng(opt.seed);
    FiniteVector a(opt.dim);
    for (std::size_t i = 0; i < opt.dim; ++i) a[i] = -rng.uniform(0.0, opt.epsilon);
    StegallRecord rec = stegall_linear(p, fam, a, opt.budget, Rng::derive(opt.seed, 7));
    Out out(opt.out);
    CsvWriter w(*out.os, {"index", "a", "x0", "x_star"});
    for (std::size_t i = 0; i < opt.dim; ++i)
        w.row({std::to_string(i + 1), format_sig(a[i]), format_sig(rec.x0[i]),
               format_sig(rec.x_star[i])});
    *out.os << "residual_linear," << format_sig(rec.residual_linear) << "\n";
    *out.os << "residual_modular," << format_sig(rec.residual_modular) << "\n";
    *out.os << "dual_norm_est," << format_sig(rec.dual_norm_est) << "\n";
    *out.os << "norm_bound," << format_sig(rec.norm_bound) << "\n";
    bool ok = rec.certified && rec.residual_linear > -1e-9 && rec.residual_modular > -1e-9;
    return ok ? kExitOk : kExitCheck;
}

int cmd_genericity(const Options& opt) {
    MusielakFamily fam = load_family(opt.family);
    Problem p = make_problem(opt, fam);
    GenericityReport rep = empirical_genericity(p, fam, opt.a_cap, opt.trials, opt.seed);
    Out out(opt.out);
    CsvWriter w(*out.os, {"trials", "successes", "failures", "inconclusive"});
    w.row({std::to_string(rep.trials), std::to_string(rep.success_count),
           std::to_string(static_cast<int>(rep.failures.size())),
           std::to_string(rep.inconclusive)});
    for (const auto& f : rep.failures)
        *out.os << "failure," << f.seed << "," << format_sig(f.wpmc_score) << ","
                << f.cluster_count << "," << format_sig(f.cluster_radius) << "\n";
    int conclusive = rep.trials - rep.inconclusive;
    bool ok = conclusive > 0 && rep.success_count >= 0.99 * conclusive;
    return ok ? kExitOk : kExitCheck;
}

int cmd_section6(const Options& opt) {
    Section6Report rep = section6_verify(opt.depth, opt.p);
    Out out(opt.out);
    CsvWriter w(*out.os, {"k", "ba_ratio", "ratio_decay", "beta_k", "log_w_prime",
                          "log_divergence"});
    for (int k = 1; k <= rep.depth; ++k) {
        std::size_t i = static_cast<std::size_t>(k - 1);
        w.row({std::to_string(k), format_sig(rep.ba_ratio[i]),
               i < rep.ratio_decay.size() ? format_sig(rep.ratio_decay[i]) : "nan",
               format_sig(rep.beta_n[i]), format_sig(rep.log_w_prime[i]),
               i < rep.log_divergence.size() ? format_sig(rep.log_divergence[i]) : "nan"});
    }
    *out.os << "b1_over_a1," << format_sig(rep.b1_over_a1) << "\n";
    *out.os << "b2_over_a2," << format_sig(rep.b2_over_a2) << "\n";
    *out.os << "sum_ba," << format_sig(rep.sum_ba) << "\n";
    *out.os << "geometric_ba," << (rep.geometric_ba ? 1 : 0) << "\n";
    *out.os << "geometric_nb," << (rep.geometric_nb ? 1 : 0) << "\n";
    *out.os << "geometric_w," << (rep.geometric_w ? 1 : 0) << "\n";
    *out.os << "delta2," << (rep.delta2_fails ? "fails" : "holds") << "\n";
    *out.os << "alpha_s," << format_sig(rep.alpha_s) << "\n";
    *out.os << "alpha_target," << format_sig(rep.alpha_target) << "\n";
    bool ok = rep.delta2_fails && std::abs(rep.b1_over_a1 - 0.125) < 1e-12;
    return ok ? kExitOk : kExitCheck;
}

void merge_config(Options& opt) {
    if (opt.config_path.empty()) return;
    Config c = parse_config(slurp(opt.config_path));
    if (c.has("family")) opt.family = c.get("family");
    if (c.has("objective")) opt.objective = c.get("objective");
    if (c.has("dim")) opt.dim = static_cast<std::size_t>(c.get_long("dim"));
    if (c.has("seed")) opt.seed = static_cast<std::uint64_t>(c.get_long("seed"));
    if (c.has("budget")) opt.budget = static_cast<int>(c.get_long("budget"));
    if (c.has("trials")) opt.trials = static_cast<int>(c.get_long("trials"));
    if (c.has("epsilon")) opt.epsilon = c.get_double("epsilon");
    if (c.has("delta")) opt.delta = c.get_double("delta");
    if (c.has("p")) opt.p = c.get_double("p");
    if (c.has("depth")) opt.depth = static_cast<int>(c.get_long("depth"));
    if (c.has("out")) opt.out = c.get("out");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Musielak-Orlicz sequence-space laboratory"};
    app.require_subcommand(1);
    Options opt;
    int (*run)(const Options&) = nullptr;

    auto add = [&](const char* name, const char* desc, int (*fn)(const Options&)) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->callback([&run, fn] { run = fn; });
        sub->add_option("--family", opt.family, "family descriptor path or inline form");
        sub->add_option("--vector", opt.vec_path, "input vector CSV path");
        sub->add_option("--coords", opt.coords, "inline vector a,b,...");
        sub->add_option("--dim", opt.dim);
        sub->add_option("--seed", opt.seed);
        sub->add_option("--budget", opt.budget);
        sub->add_option("--epsilon", opt.epsilon);
        sub->add_option("--delta", opt.delta);
        sub->add_option("--out", opt.out, "report path (default stdout)");
        sub->add_option("--trials", opt.trials);
        sub->add_option("--p", opt.p);
        sub->add_option("--at", opt.at, "evaluation point (conjugate)");
        sub->add_option("--t0", opt.t0, "doubling-check grid top");
        sub->add_option("--n", opt.n, "certificate tail parameter");
        sub->add_option("--depth", opt.depth);
        sub->add_option("--a-cap", opt.a_cap, "weight sampler cap");
        sub->add_option("--objective", opt.objective);
        sub->add_option("--param", opt.obj_params, "objective parameters");
        sub->add_option("--config", opt.config_path, "key-value config file");
        return sub;
    };
    add("norm", "Luxemburg norm of a vector", cmd_norm);
    add("indices", "growth indices of the family's first member", cmd_indices);
    add("conjugate", "convex conjugate value at --at", cmd_conjugate);
    add("delta2", "doubling condition near zero", cmd_delta2);
    add("perturb", "strong-perturbation certificate", cmd_perturb);
    add("stegall", "linear perturbation record", cmd_stegall);
    add("genericity", "empirical well-posedness frequency", cmd_genericity);
    add("section6", "worked-example report", cmd_section6);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }
    try {
        merge_config(opt);
        return run(opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ConstructionError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const RangeError& e) {
        std::cerr << "range error: " << e.what() << "\n";
        return kExitRange;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRange;
    }
}
