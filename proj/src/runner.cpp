#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gibbslab/cli/config.hpp"
#include "gibbslab/cli/problem_io.hpp"
#include "gibbslab/errors.hpp"
#include "gibbslab/gaussian/gaussian.hpp"
#include "gibbslab/mc/estimator.hpp"
#include "gibbslab/rates/bounds.hpp"
#include "gibbslab/rates/claims.hpp"
#include "gibbslab/rates/rate_fit.hpp"
#include "gibbslab/rates/sweep.hpp"

namespace gibbslab::cli {

namespace {

using nlohmann::ordered_json;

/// 17 significant digits, round-trip safe, locale-independent enough for the
/// "C" locale this process never changes.
std::string fmt17(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string mode_name(Mode mode) {
    switch (mode) {
        case Mode::coin_toss: return "coin-toss";
        case Mode::gaussian: return "gaussian";
        case Mode::custom: return "custom";
        case Mode::bounds: return "bounds";
        case Mode::fit: return "fit";
    }
    return "unknown";
}

OutputFormat effective_format(const ExperimentConfig& config) {
    if (config.format) return *config.format;
    return config.mode == Mode::gaussian ? OutputFormat::json : OutputFormat::csv;
}

std::string default_extension(OutputFormat format) {
    return format == OutputFormat::csv ? ".csv" : ".json";
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || path.find('/', dot) != std::string::npos) {
        return path + suffix;
    }
    return path.substr(0, dot) + suffix + path.substr(dot);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ArgumentError("run: cannot write output file '" + path + "'");
    }
    out << content;
}

std::string sweep_csv(const rates::SweepTable& table) {
    std::ostringstream out;
    out << "n,I_ws,L_ws,Iskl_ws,chi2_ws,gen,I_wz,L_wz,Iskl_wz,chi2_wz,"
           "n_Iskl_wz_sum,gap,n_times_gap\n";
    for (const auto& row : table.rows) {
        out << row.n << ',' << fmt17(row.joint.mutual) << ',' << fmt17(row.joint.lautum) << ','
            << fmt17(row.joint.skl) << ',' << fmt17(row.joint.chi2) << ',' << fmt17(row.joint.gen)
            << ',' << fmt17(row.individual.mutual) << ',' << fmt17(row.individual.lautum) << ','
            << fmt17(row.individual.skl) << ',' << fmt17(row.individual.chi2) << ','
            << fmt17(row.n * row.individual.skl) << ',' << fmt17(row.gap) << ','
            << fmt17(row.n * row.gap) << '\n';
    }
    return out.str();
}

ordered_json sweep_json(const rates::SweepTable& table) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
        rows.push_back({{"n", row.n},
                        {"I_ws", row.joint.mutual},
                        {"L_ws", row.joint.lautum},
                        {"Iskl_ws", row.joint.skl},
                        {"chi2_ws", row.joint.chi2},
                        {"gen", row.joint.gen},
                        {"I_wz", row.individual.mutual},
                        {"L_wz", row.individual.lautum},
                        {"Iskl_wz", row.individual.skl},
                        {"chi2_wz", row.individual.chi2},
                        {"n_Iskl_wz_sum", row.n * row.individual.skl},
                        {"gap", row.gap},
                        {"n_times_gap", row.n * row.gap}});
    }
    return rows;
}

struct SummaryItem {
    std::string item;
    std::string status;
    double measured = 0.0;
    double expected = 0.0;
    std::string detail;
};

std::string summary_csv(const std::vector<SummaryItem>& items) {
    std::ostringstream out;
    out << "item,status,measured,expected,detail\n";
    for (const auto& it : items) {
        out << it.item << ',' << it.status << ',' << fmt17(it.measured) << ','
            << fmt17(it.expected) << ',' << it.detail << '\n';
    }
    return out.str();
}

std::vector<SummaryItem> make_summary(const rates::ClaimReport& claims,
                                      const rates::RateFit& joint_fit,
                                      const rates::RateFit& individual_fit) {
    std::vector<SummaryItem> items;
    for (const auto& claim : claims.claims) {
        items.push_back({claim.name, rates::to_string(claim.status), claim.measured,
                         claim.expected, claim.detail});
    }
    items.push_back({"joint_limit_fit", "info", joint_fit.limit_estimate, claims.constant,
                     "intercept of n*Iskl_ws on (1, 1/n)"});
    items.push_back({"individual_limit_fit", "info", individual_fit.limit_estimate,
                     claims.constant, "intercept of n^2*Iskl_wz on (1, 1/n)"});
    items.push_back({"asymptotic_constant", "info", claims.constant, claims.constant,
                     "variance constant of the limiting posterior"});
    return items;
}

std::string bounds_csv(const rates::BoundsTable& table) {
    std::ostringstream out;
    out << "n,gen,bound_eq21,bound_theorem6,bound_subgaussian,ratio_eq21,"
           "ratio_theorem6,ratio_subgaussian,theorem6_holds\n";
    for (const auto& row : table.rows) {
        out << row.n << ',' << fmt17(row.gen) << ',' << fmt17(row.eq21) << ','
            << fmt17(row.theorem6) << ',' << fmt17(row.subgaussian) << ','
            << fmt17(row.ratio_eq21) << ',' << fmt17(row.ratio_theorem6) << ','
            << fmt17(row.ratio_subgaussian) << ',' << (row.theorem6_holds ? 1 : 0) << '\n';
    }
    return out.str();
}

ordered_json bounds_json(const rates::BoundsTable& table) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
        ordered_json r = {{"n", row.n},
                          {"gen", row.gen},
                          {"bound_eq21", row.eq21},
                          {"bound_theorem6", row.theorem6},
                          {"bound_subgaussian", row.subgaussian},
                          {"ratio_eq21", row.ratio_eq21},
                          {"ratio_theorem6", row.ratio_theorem6},
                          {"ratio_subgaussian", row.ratio_subgaussian},
                          {"theorem6_holds", row.theorem6_holds}};
        rows.push_back(r);
    }
    ordered_json doc;
    doc["gamma"] = table.gamma;
    doc["delta"] = table.delta;
    doc["sigma"] = table.sigma;
    doc["ce"] = table.lautum_ratio;
    doc["eq21_applicable"] = table.eq21_applicable;
    if (table.theorem6_first_holding_n) {
        doc["theorem6_first_holding_n"] = *table.theorem6_first_holding_n;
    } else {
        doc["theorem6_first_holding_n"] = nullptr;
    }
    doc["rows"] = rows;
    return doc;
}

ordered_json claims_json(const rates::ClaimReport& claims) {
    ordered_json arr = ordered_json::array();
    for (const auto& claim : claims.claims) {
        arr.push_back({{"name", claim.name},
                       {"status", rates::to_string(claim.status)},
                       {"measured", claim.measured},
                       {"expected", claim.expected},
                       {"detail", claim.detail}});
    }
    return arr;
}

ordered_json fit_json(const rates::RateFit& fit) {
    return {{"exponent", fit.exponent},
            {"limit_estimate", fit.limit_estimate},
            {"slope_estimate", fit.slope_estimate},
            {"residual_rms", fit.residual_rms},
            {"tail_window", fit.tail_window},
            {"zeros_excluded_from_slope", fit.zeros_excluded_from_slope}};
}

void print_claims(const rates::ClaimReport& claims) {
    for (const auto& claim : claims.claims) {
        std::cout << (claim.status == rates::ClaimStatus::pass          ? "PASS "
                      : claim.status == rates::ClaimStatus::fail        ? "FAIL "
                                                                        : "---- ")
                  << claim.name << ": measured " << fmt17(claim.measured) << ", expected "
                  << fmt17(claim.expected)
                  << (claim.detail.empty() ? "" : " (" + claim.detail + ")") << "\n";
    }
}

int run_discrete_modes(const ExperimentConfig& config, const DiscreteProblem& problem) {
    const OutputFormat format = effective_format(config);
    const std::string base = config.out_path.empty()
                                 ? mode_name(config.mode) + default_extension(format)
                                 : config.out_path;
    if (config.n_list.empty()) {
        throw ArgumentError("run: --n list must be nonempty");
    }

    bool any_claim_failed = false;
    std::string failed_claim;
    for (std::size_t gi = 0; gi < config.gammas.size(); ++gi) {
        const double gamma = config.gammas[gi];
        const std::string path =
            config.gammas.size() == 1 ? base : with_suffix(base, "_g" + std::to_string(gi));

        const auto table = rates::sweep(problem, gamma, config.n_list);

        const bool claims_applicable =
            table.rows.size() >= 4 && table.rows.back().n >= 256 && gamma > 0.0;
        std::optional<rates::ClaimReport> claims;
        std::optional<rates::RateFit> joint_fit, individual_fit;
        if (claims_applicable) {
            claims = rates::verify_claims(problem, table, config.tol);
            std::vector<std::pair<int, double>> joint_seq, individual_seq;
            for (const auto& row : table.rows) {
                joint_seq.emplace_back(row.n, row.joint.skl);
                individual_seq.emplace_back(row.n, row.individual.skl);
            }
            joint_fit = rates::fit_limit(joint_seq, 1.0);
            individual_fit = rates::fit_limit(individual_seq, 2.0);
        }
        const auto bounds = rates::compare_bounds(problem, gamma, config.n_list, config.delta,
                                                  config.sigma, config.lautum_ratio);

        if (format == OutputFormat::csv) {
            write_file(path, sweep_csv(table));
            std::cout << "wrote " << path << "\n";
            if (claims) {
                const auto summary_path = with_suffix(path, ".summary");
                write_file(summary_path, summary_csv(make_summary(*claims, *joint_fit,
                                                                  *individual_fit)));
                std::cout << "wrote " << summary_path << "\n";
            }
            const auto bounds_path = with_suffix(path, ".bounds");
            write_file(bounds_path, bounds_csv(bounds));
            std::cout << "wrote " << bounds_path << "\n";
        } else {
            ordered_json doc;
            doc["mode"] = mode_name(config.mode);
            doc["gamma"] = gamma;
            doc["sweep"] = sweep_json(table);
            if (claims) {
                doc["claims"] = claims_json(*claims);
                doc["joint_limit_fit"] = fit_json(*joint_fit);
                doc["individual_limit_fit"] = fit_json(*individual_fit);
                doc["asymptotic_constant"] = claims->constant;
            }
            doc["bounds"] = bounds_json(bounds);
            write_file(path, doc.dump(2) + "\n");
            std::cout << "wrote " << path << "\n";
        }

        if (claims) {
            print_claims(*claims);
            if (const auto* failure = claims->first_failure()) {
                any_claim_failed = true;
                failed_claim = failure->name;
            }
        }
    }

    if (config.strict && any_claim_failed) {
        std::cout << "strict mode: claim '" << failed_claim << "' failed\n";
        return 1;
    }
    return 0;
}

int run_gaussian_mode(const ExperimentConfig& config) {
    const OutputFormat format = effective_format(config);
    const std::string path = config.out_path.empty()
                                 ? mode_name(config.mode) + default_extension(format)
                                 : config.out_path;
    if (config.n_list.empty()) {
        throw ArgumentError("run: --n list must be nonempty");
    }

    struct Row {
        double gamma;
        int n;
        gaussian::GaussianReport report;
        double trace_joint, trace_individual;
        std::optional<mc::McEstimate> estimate;
    };
    std::vector<Row> rows;
    for (double gamma : config.gammas) {
        for (int n : config.n_list) {
            const gaussian::GaussianProblem gp{config.beta, gamma, n};
            Row row{gamma, n, gaussian::gaussian_closed_forms(gp), 0.0, 0.0, std::nullopt};
            if (n <= gaussian::kDefaultDenseCeiling) {
                row.trace_joint = gaussian::gaussian_skl_trace(gaussian::gaussian_joint_covariance(gp));
            } else {
                row.trace_joint = std::numeric_limits<double>::quiet_NaN();
            }
            row.trace_individual =
                gaussian::gaussian_skl_trace(gaussian::gaussian_individual_covariance(gp));
            if (config.samples > 0) {
                mc::GridSpec grid;
                grid.points = config.grid_points;
                row.estimate = mc::estimate_gen_mc(mc::make_gaussian_mean_problem(config.beta),
                                                   gamma, n, config.samples, config.seed, grid);
            }
            rows.push_back(std::move(row));
        }
    }

    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "gamma,n,skl_joint,skl_individual,mutual_joint,mutual_individual,gap,"
               "skl_joint_trace,skl_individual_trace,mc_gen,mc_std_error,mc_pairs,mc_seed\n";
        for (const auto& row : rows) {
            out << fmt17(row.gamma) << ',' << row.n << ',' << fmt17(row.report.skl_joint) << ','
                << fmt17(row.report.skl_individual) << ',' << fmt17(row.report.mutual_joint)
                << ',' << fmt17(row.report.mutual_individual) << ',' << fmt17(row.report.gap)
                << ',' << fmt17(row.trace_joint) << ',' << fmt17(row.trace_individual) << ',';
            if (row.estimate) {
                out << fmt17(row.estimate->value) << ',' << fmt17(row.estimate->std_error) << ','
                    << row.estimate->num_datasets << ',' << row.estimate->seed;
            } else {
                out << "nan,nan,0,0";
            }
            out << '\n';
        }
        write_file(path, out.str());
    } else {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r = {{"gamma", row.gamma},
                              {"n", row.n},
                              {"skl_joint", row.report.skl_joint},
                              {"skl_individual", row.report.skl_individual},
                              {"mutual_joint", row.report.mutual_joint},
                              {"mutual_individual", row.report.mutual_individual},
                              {"gap", row.report.gap},
                              {"skl_joint_trace", row.trace_joint},
                              {"skl_individual_trace", row.trace_individual}};
            if (row.estimate) {
                r["mc"] = {{"gen", row.estimate->value},
                           {"std_error", row.estimate->std_error},
                           {"pairs", row.estimate->num_datasets},
                           {"seed", row.estimate->seed}};
            }
            arr.push_back(std::move(r));
        }
        ordered_json doc;
        doc["mode"] = "gaussian";
        doc["beta"] = config.beta;
        doc["rows"] = arr;
        write_file(path, doc.dump(2) + "\n");
    }
    std::cout << "wrote " << path << "\n";
    return 0;
}

int run_fit_mode(const ExperimentConfig& config) {
    if (config.problem_path.empty()) {
        throw ArgumentError("run: fit mode needs --problem <csv with n,value rows>");
    }
    std::ifstream in(config.problem_path);
    if (!in) {
        throw ArgumentError("run: cannot open sequence file '" + config.problem_path + "'");
    }
    std::vector<std::pair<int, double>> sequence;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string a, b;
        if (!std::getline(row, a, ',') || !std::getline(row, b, ',')) continue;
        try {
            sequence.emplace_back(std::stoi(a), std::stod(b));
        } catch (const std::exception&) {
            continue;  // header or comment line
        }
    }
    const auto fit = rates::fit_limit(sequence, config.fit_exponent);

    const OutputFormat format = effective_format(config);
    const std::string path = config.out_path.empty()
                                 ? mode_name(config.mode) + default_extension(format)
                                 : config.out_path;
    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "exponent,limit_estimate,slope_estimate,residual_rms,tail_window,"
               "zeros_excluded_from_slope\n"
            << fmt17(fit.exponent) << ',' << fmt17(fit.limit_estimate) << ','
            << fmt17(fit.slope_estimate) << ',' << fmt17(fit.residual_rms) << ','
            << fit.tail_window << ',' << (fit.zeros_excluded_from_slope ? 1 : 0) << '\n';
        write_file(path, out.str());
    } else {
        write_file(path, fit_json(fit).dump(2) + "\n");
    }
    std::cout << "wrote " << path << "\n";
    std::cout << "limit " << fmt17(fit.limit_estimate) << ", slope " << fmt17(fit.slope_estimate)
              << "\n";
    return 0;
}

int run_bounds_mode(const ExperimentConfig& config) {
    const DiscreteProblem problem = config.problem_path.empty()
                                        ? make_coin_toss(config.coin_bias)
                                        : load_problem(config.problem_path);
    const OutputFormat format = effective_format(config);
    const std::string base = config.out_path.empty()
                                 ? mode_name(config.mode) + default_extension(format)
                                 : config.out_path;
    if (config.n_list.empty()) {
        throw ArgumentError("run: --n list must be nonempty");
    }
    for (std::size_t gi = 0; gi < config.gammas.size(); ++gi) {
        const std::string path =
            config.gammas.size() == 1 ? base : with_suffix(base, "_g" + std::to_string(gi));
        const auto table = rates::compare_bounds(problem, config.gammas[gi], config.n_list,
                                                 config.delta, config.sigma, config.lautum_ratio);
        if (format == OutputFormat::csv) {
            write_file(path, bounds_csv(table));
        } else {
            write_file(path, bounds_json(table).dump(2) + "\n");
        }
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}

}  // namespace

int run(const ExperimentConfig& config) {
    switch (config.mode) {
        case Mode::coin_toss:
            return run_discrete_modes(config, make_coin_toss(config.coin_bias));
        case Mode::custom: {
            if (config.problem_path.empty()) {
                throw ArgumentError("run: custom mode needs --problem <file>");
            }
            return run_discrete_modes(config, load_problem(config.problem_path));
        }
        case Mode::gaussian:
            return run_gaussian_mode(config);
        case Mode::bounds:
            return run_bounds_mode(config);
        case Mode::fit:
            return run_fit_mode(config);
    }
    throw ArgumentError("run: unknown mode");
}

}  // namespace gibbslab::cli
