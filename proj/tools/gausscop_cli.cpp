// gausscop: command-line front end for the bivariate normal copula library.
//
// Exit codes: 0 success, 2 usage or domain error, 3 numeric failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gausscop/binorm.hpp"
#include "gausscop/concordance.hpp"
#include "gausscop/copula.hpp"
#include "gausscop/diag_bounds.hpp"
#include "gausscop/errors.hpp"
#include "gausscop/oracle.hpp"
#include "gausscop/owen_t.hpp"
#include "gausscop/related_dists.hpp"

namespace {

using namespace gausscop;

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

enum class OutputFormat { plain, csv, json };

using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    bool scalar = false;  // plain format prints just the value

    void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

struct Options {
    OutputFormat format = OutputFormat::plain;
    int precision = 12;
    QuadratureConfig cfg;
    std::string method = "auto";
};

std::string format_number(double x, int precision) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return buf;
}

std::string cell_text(const Cell& cell, int precision) {
    struct Visitor {
        int precision;
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(double x) const { return format_number(x, precision); }
        std::string operator()(long long x) const { return std::to_string(x); }
        std::string operator()(bool x) const { return x ? "true" : "false"; }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{precision}, cell);
}

nlohmann::json cell_json(const Cell& cell, int precision) {
    struct Visitor {
        int precision;
        nlohmann::json operator()(std::monostate) const { return nullptr; }
        nlohmann::json operator()(double x) const {
            // JSON has no inf/nan; those become strings.
            if (!std::isfinite(x)) return format_number(x, precision);
            return std::stod(format_number(x, precision));
        }
        nlohmann::json operator()(long long x) const { return x; }
        nlohmann::json operator()(bool x) const { return x; }
        nlohmann::json operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{precision}, cell);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Plain output: scalar tables print the bare value, anything else is a
// whitespace-aligned table.
void print_table(const Table& table, const Options& opt) {
    const int p = opt.precision;
    switch (opt.format) {
        case OutputFormat::json: {
            auto rows = nlohmann::json::array();
            for (const auto& row : table.rows) {
                nlohmann::json obj = nlohmann::json::object();
                for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = cell_json(row[i], p);
                rows.push_back(std::move(obj));
            }
            std::cout << rows.dump(2) << '\n';
            return;
        }
        case OutputFormat::csv: {
            for (std::size_t i = 0; i < table.columns.size(); ++i) {
                std::cout << (i ? "," : "") << csv_escape(table.columns[i]);
            }
            std::cout << '\n';
            for (const auto& row : table.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_escape(cell_text(row[i], p));
                std::cout << '\n';
            }
            return;
        }
        case OutputFormat::plain: {
            const auto value_col = std::find(table.columns.begin(), table.columns.end(), "value");
            if (table.scalar && table.rows.size() == 1 && value_col != table.columns.end()) {
                std::cout << cell_text(table.rows[0][value_col - table.columns.begin()], p) << '\n';
                return;
            }
            std::vector<std::size_t> width(table.columns.size());
            for (std::size_t i = 0; i < table.columns.size(); ++i) width[i] = table.columns[i].size();
            for (const auto& row : table.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], cell_text(row[i], p).size());
            }
            auto emit = [&](auto text_of) {
                std::string line;
                for (std::size_t i = 0; i < table.columns.size(); ++i) {
                    std::string text = text_of(i);
                    if (i + 1 < table.columns.size()) text.resize(width[i] + 2, ' ');
                    line += text;
                }
                std::cout << line << '\n';
            };
            emit([&](std::size_t i) { return table.columns[i]; });
            for (const auto& row : table.rows) emit([&](std::size_t i) { return cell_text(row[i], p); });
            return;
        }
    }
}

Phi2Method method_of(const Options& opt) { return parse_phi2_method(opt.method); }

// ---- eval -------------------------------------------------------------------

struct EvalArgs {
    double u = 0.5, v = 0.5, h = 0.0, k = 0.0, a = 1.0, rho = 0.0;
    std::string given = "u";
};

Table run_eval(const std::string& what, const EvalArgs& e, const Options& opt) {
    const Phi2Method method = method_of(opt);
    Table t;
    t.scalar = true;
    if (what == "copula") {
        t.columns = {"u", "v", "rho", "method", "value"};
        t.add({e.u, e.v, e.rho, std::string(to_string(method)), copula_cdf(e.u, e.v, e.rho, method, opt.cfg)});
    } else if (what == "phi2") {
        t.columns = {"h", "k", "rho", "method", "value"};
        t.add({e.h, e.k, e.rho, std::string(to_string(method)), phi2_cdf(e.h, e.k, e.rho, method, opt.cfg)});
    } else if (what == "density") {
        t.columns = {"u", "v", "rho", "value"};
        t.add({e.u, e.v, e.rho, copula_density(e.u, e.v, e.rho)});
    } else if (what == "cond") {
        t.columns = {"u", "v", "rho", "given", "value"};
        const double value = e.given == "u" ? cond_cdf_given_u(e.u, e.v, e.rho) : cond_cdf_given_v(e.u, e.v, e.rho);
        t.add({e.u, e.v, e.rho, e.given, value});
    } else if (what == "owen-t") {
        t.columns = {"h", "a", "value"};
        t.add({e.h, e.a, owen_t(e.h, e.a)});
    } else {
        t.columns = {"u", "rho", "value"};
        t.add({e.u, e.rho, diag_g(e.u, e.rho)});
    }
    return t;
}

// ---- compare ----------------------------------------------------------------

struct CompareArgs {
    std::vector<double> h{-3.0, -1.5, -0.5, 0.0, 0.5, 1.5, 3.0};
    std::vector<double> k{-3.0, -1.5, -0.5, 0.0, 0.5, 1.5, 3.0};
    std::vector<double> rho{-0.95, -0.8, -0.6, -0.3, -0.05, 0.05, 0.3, 0.6, 0.8, 0.95};
    std::vector<std::string> engines{"owen", "plackett_from_independence", "plackett_from_max", "tetrachoric",
                                     "single_factor_quadrature"};
    bool summary_only = false;
};

Table run_compare(const CompareArgs& c, const Options& opt) {
    std::vector<Phi2Method> engines;
    for (const auto& name : c.engines) engines.push_back(parse_phi2_method(name));
    for (double r : c.rho) static_cast<void>(Correlation(r));

    struct Summary {
        long long points = 0;
        long long rejected = 0;
        double max_error = 0.0;
    };
    std::map<Phi2Method, Summary> summary;
    std::map<double, bool> warned;

    Table detail;
    detail.columns = {"h", "k", "rho", "engine", "value", "oracle", "abs_error", "status"};
    for (double h : c.h) {
        for (double k : c.k) {
            for (double r : c.rho) {
                const bool interior = Correlation(r).is_interior();
                const double reference = interior ? oracle::quad2d_phi2(h, k, r).value : phi2_cdf(h, k, r);
                for (auto m : engines) {
                    auto& s = summary[m];
                    if (!engine_accepts(m, r)) {
                        ++s.rejected;
                        if (!warned[r] || c.engines.size() == 1) {
                            std::cerr << "engine " << to_string(m) << " rejected for rho=" << format_number(r, 6)
                                      << " (outside its validity region)\n";
                        }
                        detail.add({h, k, r, std::string(to_string(m)), {}, reference, {}, std::string("rejected")});
                        continue;
                    }
                    const double value = phi2_cdf(h, k, r, m, opt.cfg);
                    const double err = std::abs(value - reference);
                    ++s.points;
                    s.max_error = std::max(s.max_error, err);
                    detail.add({h, k, r, std::string(to_string(m)), value, reference, err, std::string("ok")});
                }
                warned[r] = true;
            }
        }
    }

    Table totals;
    totals.columns = {"engine", "points", "rejected", "max_abs_error"};
    for (auto m : engines) {
        const auto& s = summary[m];
        totals.add({std::string(to_string(m)), s.points, s.rejected, s.points ? Cell{s.max_error} : Cell{}});
    }
    if (std::all_of(engines.begin(), engines.end(), [&](Phi2Method m) { return summary[m].points == 0; })) {
        throw EngineRejected("no requested engine accepts any correlation on the grid");
    }
    if (c.summary_only) return totals;
    for (const auto& row : totals.rows) {
        std::cerr << "max_abs_error " << cell_text(row[0], opt.precision) << ": "
                  << (std::holds_alternative<double>(row[3]) ? cell_text(row[3], opt.precision) : "n/a") << '\n';
    }
    return detail;
}

// ---- scan-bounds ------------------------------------------------------------

Table run_scan(const std::vector<std::string>& kinds, const ScanGrid& grid) {
    Table t;
    t.columns = {"kind", "max_abs_error", "u_at_max", "rho_at_max", "max_excess", "max_deficit", "bound_holds",
                 "evaluations"};
    for (const auto& name : kinds) {
        const DiagTarget target = parse_diag_target(name);
        const ScanReport r = bound_error_scan(target, grid);
        Cell holds;
        if (const auto* bound = std::get_if<DiagBoundKind>(&target)) {
            holds = is_upper(*bound) ? r.upper_bound_holds() : r.lower_bound_holds();
        } else if (std::get<DiagApproxKind>(target) == DiagApproxKind::meyer_tight) {
            // Conjectured upper bound; reported, not asserted.
            holds = r.upper_bound_holds();
        }
        t.add({std::string(to_string(target)), r.max_abs_error, r.u_at_max, r.rho_at_max, r.max_excess, r.max_deficit,
               holds, static_cast<long long>(r.evaluations)});
    }
    return t;
}

// ---- concordance ------------------------------------------------------------

struct ConcordanceArgs {
    std::vector<std::string> measures{"all"};
    std::vector<double> rho{0.5};
    bool invert = false;
    bool numeric = false;
};

Table run_concordance(const ConcordanceArgs& c, const Options& opt) {
    std::vector<Measure> measures;
    for (const auto& name : c.measures) {
        if (name == "all") {
            measures = {Measure::blomqvist_beta, Measure::kendall_tau, Measure::spearman_rho, Measure::gini_gamma,
                        Measure::gamma_tilde};
            break;
        }
        measures.push_back(parse_measure(name));
    }
    Table t;
    t.columns = {"measure", "rho", "value"};
    if (c.numeric) {
        t.columns.push_back("numeric");
        t.columns.push_back("abs_diff");
    }
    if (c.invert) t.columns.push_back("inverted_rho");
    QuadratureConfig cfg = kMeasureQuadrature;
    cfg.max_subdivisions = opt.cfg.max_subdivisions;
    cfg.series_max_terms = opt.cfg.series_max_terms;
    for (auto m : measures) {
        for (double r : c.rho) {
            const MeasureValue closed = measure_closed_form(m, r);
            std::vector<Cell> row{std::string(to_string(m)), r, closed.value};
            if (c.numeric) {
                const double numeric = measure_numeric(m, r, cfg).value;
                row.emplace_back(numeric);
                row.emplace_back(std::abs(numeric - closed.value));
            }
            if (c.invert) row.emplace_back(measure_invert(m, closed.value).value());
            t.add(std::move(row));
        }
    }
    return t;
}

// ---- dist -------------------------------------------------------------------

struct SkewArgs {
    double lambda = 0.0;
    std::vector<double> x{0.0};
};

Table run_skew(const SkewArgs& s, const Options& opt) {
    const Phi2Method method = method_of(opt);
    Table t;
    t.columns = {"x", "lambda", "pdf", "cdf", "cdf_diagonal"};
    for (double x : s.x) {
        t.add({x, s.lambda, skew_normal_pdf(x, {s.lambda}), skew_normal_cdf(x, {s.lambda}, method, opt.cfg),
               skew_normal_cdf_diagonal(x, {s.lambda}, method, opt.cfg)});
    }
    return t;
}

struct VasicekArgs {
    double p = 0.5;
    double rho = 0.5;
    std::vector<double> quantile, cdf, pdf;
    bool moments = false;
    bool mode = false;
    std::optional<double> pair_p, pair_rho, gamma;
};

Table run_vasicek(const VasicekArgs& a, const Options& opt) {
    const VasicekParams params{a.p, a.rho};
    Table t;
    t.columns = {"quantity", "argument", "value"};
    for (double alpha : a.quantile) t.add({std::string("quantile"), alpha, vasicek_quantile(alpha, params)});
    for (double q : a.cdf) t.add({std::string("cdf"), q, vasicek_cdf(q, params)});
    for (double q : a.pdf) t.add({std::string("pdf"), q, vasicek_pdf(q, params)});
    if (a.moments) {
        const auto m = vasicek_moments(params);
        t.add({std::string("mean"), {}, m.mean});
        t.add({std::string("second_moment"), {}, m.second_moment});
        t.add({std::string("variance"), {}, m.variance});
        t.add({std::string("probit_mean"), {}, vasicek_probit_mean(params)});
        t.add({std::string("probit_variance"), {}, vasicek_probit_variance(params)});
        t.add({std::string("median"), 0.5, vasicek_quantile(0.5, params)});
    }
    if (a.mode) {
        const auto m = vasicek_mode(params);
        t.add({std::string("mode"), std::string(to_string(m.shape)), m.mode ? Cell{*m.mode} : Cell{}});
    }
    if (a.pair_p || a.pair_rho || a.gamma) {
        if (!(a.pair_p && a.pair_rho && a.gamma)) {
            throw DomainError("pair covariance needs --pair-p, --pair-rho and --gamma together");
        }
        const VasicekParams other{*a.pair_p, *a.pair_rho};
        t.add({std::string("pair_cov"), *a.gamma, vasicek_pair_cov(params, other, *a.gamma, method_of(opt), opt.cfg)});
    }
    if (t.rows.empty()) {
        throw DomainError("nothing to compute: pass --quantile, --cdf, --pdf, --moments, --mode or a pair");
    }
    return t;
}

// ---- mc ---------------------------------------------------------------------

Table run_mc(const oracle::FactorModel& model, const oracle::McConfig& mc) {
    const auto est = oracle::mc_factor_model(model, mc);
    const double rho = model.alpha * model.beta * model.gamma;
    const double exact = copula_cdf(model.u, model.v, rho);
    Table t;
    t.columns = {"alpha", "beta", "gamma", "u", "v", "paths", "seed", "joint", "joint_se", "copula", "z_score",
                 "mean_p", "mean_p_se"};
    t.add({model.alpha, model.beta, model.gamma, model.u, model.v, static_cast<long long>(est.paths),
           static_cast<long long>(mc.seed), est.joint, est.joint_std_error, exact,
           (est.joint - exact) / est.joint_std_error, est.mean_p, est.mean_p_std_error});
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bivariate normal copula: evaluation, engine comparison, bounds, concordance, distributions"};
    app.require_subcommand(1);
    // -h would collide with the --h argument.
    app.set_help_flag("--help", "Print this help message and exit");
    // Global flags may also follow the subcommand.
    app.fallthrough();

    Options opt;
    std::string format = "plain";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
    app.add_option("--precision", opt.precision, "Significant digits")->check(CLI::Range(1, 17));
    app.add_option("--method", opt.method, "Phi2 engine (auto, owen, plackett_from_independence, plackett_from_max, "
                                           "tetrachoric, single_factor_quadrature)");
    app.add_option("--abs-tol", opt.cfg.abs_tol, "Absolute quadrature tolerance");
    app.add_option("--rel-tol", opt.cfg.rel_tol, "Relative quadrature tolerance");
    app.add_option("--max-subdivisions", opt.cfg.max_subdivisions, "Adaptive quadrature subdivision budget");
    app.add_option("--series-terms", opt.cfg.series_max_terms, "Tetrachoric series term budget");

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate a single quantity");
    std::string what;
    EvalArgs eargs;
    eval->add_option("quantity", what, "copula | phi2 | density | cond | owen-t | g")
        ->required()
        ->check(CLI::IsMember({"copula", "phi2", "density", "cond", "owen-t", "g"}));
    eval->add_option("--u", eargs.u, "First uniform argument");
    eval->add_option("--v", eargs.v, "Second uniform argument");
    eval->add_option("--h", eargs.h, "First normal argument");
    eval->add_option("--k", eargs.k, "Second normal argument");
    eval->add_option("--a", eargs.a, "Owen's T parameter a");
    eval->add_option("--rho", eargs.rho, "Correlation");
    eval->add_option("--given", eargs.given, "Conditioning variable for cond")->check(CLI::IsMember({"u", "v"}));

    // compare
    auto* compare = app.add_subcommand("compare", "Compare Phi2 engines against the quadrature oracle");
    CompareArgs cargs;
    compare->add_option("--h", cargs.h, "h grid")->delimiter(',');
    compare->add_option("--k", cargs.k, "k grid")->delimiter(',');
    compare->add_option("--rho", cargs.rho, "rho grid")->delimiter(',');
    compare->add_option("--engines", cargs.engines, "Engines to compare")->delimiter(',');
    compare->add_flag("--summary-only", cargs.summary_only, "Print only the per-engine summary");

    // scan-bounds
    auto* scan = app.add_subcommand("scan-bounds", "Maximum error of diagonal bounds and approximations");
    std::vector<std::string> kinds;
    ScanGrid grid;
    bool no_refine = false;
    scan->add_option("--kind", kinds, "Bound or approximation name(s), or all")->required()->delimiter(',');
    scan->add_option("--n-u", grid.n_u, "Grid points in u")->check(CLI::Range(2, 100000));
    scan->add_option("--n-rho", grid.n_rho, "Grid points in rho")->check(CLI::Range(2, 100000));
    scan->add_flag("--no-refine", no_refine, "Skip golden-section refinement");

    // concordance
    auto* conc = app.add_subcommand("concordance", "Concordance measures");
    ConcordanceArgs conc_args;
    conc->add_option("--measure", conc_args.measures, "Measure name(s) or all")->delimiter(',');
    conc->add_option("--rho", conc_args.rho, "Correlation(s)")->delimiter(',');
    conc->add_flag("--invert", conc_args.invert, "Invert the closed form back to rho");
    conc->add_flag("--numeric", conc_args.numeric, "Also evaluate the defining integral");

    // dist
    auto* dist = app.add_subcommand("dist", "Skew-normal and Vasicek distributions");
    dist->require_subcommand(1);
    auto* skew = dist->add_subcommand("skew-normal", "Skew-normal density and CDF");
    SkewArgs sargs;
    skew->add_option("--lambda", sargs.lambda, "Skewness parameter");
    skew->add_option("--x", sargs.x, "Evaluation point(s)")->delimiter(',');
    auto* vas = dist->add_subcommand("vasicek", "Vasicek distribution");
    VasicekArgs vargs;
    vas->add_option("--p", vargs.p, "Mean p in (0,1)")->required();
    vas->add_option("--rho", vargs.rho, "Correlation in (0,1)")->required();
    vas->add_option("--quantile", vargs.quantile, "Quantile level(s)")->delimiter(',');
    vas->add_option("--cdf", vargs.cdf, "CDF argument(s)")->delimiter(',');
    vas->add_option("--pdf", vargs.pdf, "Density argument(s)")->delimiter(',');
    vas->add_flag("--moments", vargs.moments, "Mean, second moment, variance and probit moments");
    vas->add_flag("--mode", vargs.mode, "Mode and shape");
    vas->add_option("--pair-p", vargs.pair_p, "p of the second Vasicek variable");
    vas->add_option("--pair-rho", vargs.pair_rho, "rho of the second Vasicek variable");
    vas->add_option("--gamma", vargs.gamma, "Probit correlation of the pair");

    // mc
    auto* mc = app.add_subcommand("mc", "Factor-model Monte Carlo check of C(u,v;alpha*beta*gamma)");
    oracle::FactorModel model{0.6, 0.7, 0.5, 0.3, 0.4};
    oracle::McConfig mc_cfg;
    mc->add_option("--alpha", model.alpha, "Loading of the first variable");
    mc->add_option("--beta", model.beta, "Loading of the second variable");
    mc->add_option("--gamma", model.gamma, "Factor correlation");
    mc->add_option("--u", model.u, "First threshold probability");
    mc->add_option("--v", model.v, "Second threshold probability");
    mc->add_option("--paths", mc_cfg.n_paths, "Number of paths");
    mc->add_option("--seed", mc_cfg.seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    opt.format = format == "csv" ? OutputFormat::csv : format == "json" ? OutputFormat::json : OutputFormat::plain;
    try {
        opt.cfg.validate();
        method_of(opt);
        Table table;
        if (*eval) {
            table = run_eval(what, eargs, opt);
        } else if (*compare) {
            table = run_compare(cargs, opt);
        } else if (*scan) {
            grid.refine = !no_refine;
            if (kinds.size() == 1 && kinds[0] == "all") {
                kinds = {"lower_thm1", "upper_thm1", "lower_thm2", "upper_thm2", "upper_thm3",
                         "mee_owen",   "cox_wermuth", "mallows", "meyer_tight", "meyer_refined"};
            }
            table = run_scan(kinds, grid);
        } else if (*conc) {
            table = run_concordance(conc_args, opt);
        } else if (*skew) {
            table = run_skew(sargs, opt);
        } else if (*vas) {
            table = run_vasicek(vargs, opt);
        } else {
            table = run_mc(model, mc_cfg);
        }
        print_table(table, opt);
    } catch (const ConvergenceError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
