// Command-line front end: scenario ingestion, command dispatch and
// CSV / report emission.
//
// Exit codes: 0 success, 2 parse, 3 validation, 4 numerical, 5 I/O.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sihins/sihins.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kParse = 2, kValidation = 3, kNumerical = 4, kIo = 5 };

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string config_path;
    std::string out_dir;
    std::vector<std::string> overrides;
    std::string psi_list;
    std::string dt_override;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void apply_overrides(sihins::Scenario& sc, const RunConfig& rc) {
    for (const auto& kv : rc.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw sihins::ParseError("--set expects KEY=VALUE, got '" + kv + "'");
        }
        try {
            sihins::assign(sc, sihins::detail::trim(std::string_view(kv).substr(0, eq)),
                           sihins::detail::trim(std::string_view(kv).substr(eq + 1)));
        } catch (const std::invalid_argument& e) {
            throw sihins::ParseError(std::string("--set: ") + e.what());
        }
    }
    if (!rc.dt_override.empty()) {
        try {
            sihins::assign(sc, "dt", rc.dt_override);
        } catch (const std::invalid_argument& e) {
            throw sihins::ParseError(std::string("--dt: ") + e.what());
        }
    }
    sihins::validate(sc);
}

sihins::Scenario load_scenario(const RunConfig& rc) {
    sihins::Scenario sc = rc.config_path.empty() ? sihins::baseline_scenario()
                                                 : sihins::parse_config(read_file(rc.config_path));
    apply_overrides(sc, rc);
    return sc;
}

sihins::PerturbationSet load_psis(const RunConfig& rc) {
    sihins::PerturbationSet psis;
    if (rc.psi_list.empty()) return psis;
    psis.psis.clear();
    std::string_view rest = rc.psi_list;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = sihins::detail::trim(rest.substr(0, comma));
        try {
            psis.psis.push_back(sihins::detail::parse_number("--psi", item));
        } catch (const std::invalid_argument& e) {
            throw sihins::ParseError(e.what());
        }
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    psis.nonzero();  // rejects an all-zero set early
    return psis;
}

std::ofstream open_output(const std::string& dir, const std::string& file) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir + ": " + ec.message());
    std::ofstream out(fs::path(dir) / file);
    if (!out) throw IoError("cannot write " + (fs::path(dir) / file).string());
    return out;
}

void close_checked(std::ofstream& out, const std::string& what) {
    out.close();
    if (!out) throw IoError("failed writing " + what);
}

json analysis_json(const sihins::Scenario& sc) {
    const auto c = sihins::analyze_continuous(sc.epidemic);
    const auto d = sihins::analyze_discrete(sc.epidemic, sc.policy.dt);
    json j;
    j["r0"] = c.r0;
    j["continuous"]["dfe"] = {c.dfe.S, c.dfe.I, c.dfe.H};
    j["continuous"]["dfe_eigenvalues"] = c.dfe_stability.eigenvalues;
    j["continuous"]["dfe_verdict"] = sihins::to_string(c.dfe_stability.verdict);
    if (c.ee) j["continuous"]["ee"] = {c.ee->S, c.ee->I, c.ee->H};
    if (c.ee_stability) {
        j["continuous"]["rh_coefficients"] = c.ee_stability->coefficients;
        j["continuous"]["rh_margin"] = c.ee_stability->margin;
        j["continuous"]["ee_verdict"] = sihins::to_string(c.ee_stability->verdict);
    }
    j["discrete"]["dt"] = d.dt;
    j["discrete"]["dfe_eigenvalues"] = d.dfe.eigenvalues;
    j["discrete"]["dfe_dt_threshold"] = d.dfe.dt_threshold;
    j["discrete"]["dfe_verdict"] = sihins::to_string(d.dfe.verdict);
    if (d.ee) {
        j["discrete"]["ee_coefficients"] = d.ee->coefficients;
        j["discrete"]["schur_cohn"] = {{"cond_plus", d.ee->schur_cohn.cond_plus},
                                       {"cond_minus", d.ee->schur_cohn.cond_minus},
                                       {"cond_inner", d.ee->schur_cohn.cond_inner}};
        j["discrete"]["schur_cohn_sufficient"] = d.ee->schur_cohn_sufficient;
        j["discrete"]["max_root_modulus"] = d.ee->max_root_modulus;
        j["discrete"]["ee_verdict"] = sihins::to_string(d.ee->verdict);
    }
    return j;
}

int cmd_analyze(const RunConfig& rc) {
    const auto sc = load_scenario(rc);
    const auto text = sihins::format_analysis(sihins::analyze_continuous(sc.epidemic),
                                              sihins::analyze_discrete(sc.epidemic, sc.policy.dt));
    std::cout << text;
    if (!rc.out_dir.empty()) {
        auto out = open_output(rc.out_dir, "analysis.json");
        out << analysis_json(sc).dump(2) << '\n';
        close_checked(out, "analysis.json");
    }
    return kOk;
}

int cmd_simulate(const RunConfig& rc) {
    const auto traj = sihins::simulate(load_scenario(rc));
    if (rc.out_dir.empty()) {
        sihins::write_trajectory_csv(std::cout, traj);
    } else {
        auto out = open_output(rc.out_dir, "trajectory.csv");
        sihins::write_trajectory_csv(out, traj);
        close_checked(out, "trajectory.csv");
    }
    return kOk;
}

int cmd_price(const RunConfig& rc) {
    const auto report = sihins::price(load_scenario(rc));
    std::cout << sihins::format_pricing(report);
    if (!rc.out_dir.empty()) {
        auto out = open_output(rc.out_dir, "financials.csv");
        sihins::write_financial_csv(out, report);
        close_checked(out, "financials.csv");
    }
    return kOk;
}

int cmd_sensitivity(const RunConfig& rc) {
    const auto sc = load_scenario(rc);
    const auto table = sihins::sensitivity_table(sc, load_psis(rc));
    if (rc.out_dir.empty()) {
        sihins::write_sensitivity_csv(std::cout, table);
    } else {
        std::cout << sihins::format_sensitivity_table(table);
        auto out = open_output(rc.out_dir, "sensitivity.csv");
        sihins::write_sensitivity_csv(out, table);
        close_checked(out, "sensitivity.csv");
    }
    return kOk;
}

struct ScenarioRun {
    sihins::ScenarioSummary summary;
    sihins::Trajectory trajectory;
    sihins::SensitivityTable sensitivity;
};

ScenarioRun run_full(std::string label, const sihins::Scenario& sc,
                     const sihins::PerturbationSet& psis) {
    ScenarioRun run;
    run.trajectory = sihins::simulate(sc);
    run.summary = {label, sc, sihins::analyze_continuous(sc.epidemic), run.trajectory.states.back(),
                   sihins::price(run.trajectory, sc.policy)};
    run.sensitivity = sihins::sensitivity_table(sc, psis, std::move(label));
    return run;
}

int cmd_report(const RunConfig& rc) {
    auto base = load_scenario(rc);
    const auto psis = load_psis(rc);
    auto df = base;
    df.epidemic.beta = sihins::kBetaDiseaseFree;
    auto en = base;
    en.epidemic.beta = sihins::kBetaEndemic;

    auto df_run = std::async(std::launch::async, run_full, "disease-free", df, psis);
    auto en_run = std::async(std::launch::async, run_full, "endemic", en, psis);
    const ScenarioRun a = df_run.get();
    const ScenarioRun b = en_run.get();

    std::ostringstream text;
    text << sihins::format_summary_table(a.summary, b.summary) << '\n'
         << "sensitivity indices\n\n"
         << sihins::format_sensitivity_table(a.sensitivity) << '\n'
         << sihins::format_sensitivity_table(b.sensitivity) << '\n'
         << "note: the R0/mu1 cell is the perturbation mean of -1/(1+psi) ("
         << sihins::format_fixed(a.sensitivity.at(sihins::Quantity::R0, sihins::Parameter::Mu1), 5)
         << " for the default set); the exact elasticity is -1.\n";
    std::cout << text.str();

    if (!rc.out_dir.empty()) {
        auto write = [&](const std::string& file, auto&& emit) {
            auto out = open_output(rc.out_dir, file);
            emit(out);
            close_checked(out, file);
        };
        write("report.txt", [&](std::ostream& os) { os << text.str(); });
        for (const auto* run : {&a, &b}) {
            const std::string suffix = run == &a ? "disease_free" : "endemic";
            write("trajectory_" + suffix + ".csv",
                  [&](std::ostream& os) { sihins::write_trajectory_csv(os, run->trajectory); });
            write("financials_" + suffix + ".csv", [&](std::ostream& os) {
                sihins::write_financial_csv(os, run->summary.pricing);
            });
            write("sensitivity_" + suffix + ".csv", [&](std::ostream& os) {
                sihins::write_sensitivity_csv(os, run->sensitivity);
            });
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SIH epidemic model and health-insurance pricing"};
    app.require_subcommand(1);

    RunConfig rc;
    app.add_option("--config", rc.config_path, "scenario file (key = value lines)");
    app.add_option("--out", rc.out_dir, "output directory");
    app.add_option("--set", rc.overrides, "override KEY=VALUE (repeatable)")->take_all();
    app.add_option("--psi", rc.psi_list, "comma-separated perturbation fractions");
    app.add_option("--dt", rc.dt_override, "step size override (1/dt must be an integer)");

    const std::pair<const char*, const char*> commands[] = {
        {"analyze", "equilibria and stability, continuous and discrete"},
        {"simulate", "trajectory CSV (t,S,I,H,D,Dstar)"},
        {"price", "premium, capital and profit; financial CSV with --out"},
        {"sensitivity", "4 x 13 sensitivity-index table"},
        {"report", "both shipped scenarios side by side plus sensitivity tables"},
    };
    for (const auto& [name, help] : commands) {
        app.add_subcommand(name, help)->fallthrough()->callback([&rc, n = name] { rc.command = n; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (rc.command == "analyze") return cmd_analyze(rc);
        if (rc.command == "simulate") return cmd_simulate(rc);
        if (rc.command == "price") return cmd_price(rc);
        if (rc.command == "sensitivity") return cmd_sensitivity(rc);
        if (rc.command == "report") return cmd_report(rc);
    } catch (const sihins::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const sihins::ValidationError& e) {
        std::cerr << "invalid scenario: " << e.what() << '\n';
        return kValidation;
    } catch (const sihins::Error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kNumerical;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIo;
    }
    return kParse;
}
