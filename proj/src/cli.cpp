#include "smf/cli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "smf/angles.hpp"
#include "smf/core.hpp"
#include "smf/curves.hpp"
#include "smf/io.hpp"
#include "smf/mechanisms.hpp"
#include "smf/types.hpp"

namespace smf::cli {

namespace {

/// Everything the four subcommands can consume. Parsed by CLI11, validated
/// before execution; angle-valued fields are converted from degrees when
/// --deg is set.
struct RunConfig {
    std::string fn;
    std::string kind;
    double s = 0.0;
    double eps = 0.0;
    double R = 1.0;
    int det = 1;
    std::optional<double> theta;
    std::optional<double> alpha;
    std::optional<double> x;
    int n = 720;
    double Omega = 1.0;
    std::optional<double> t_end;
    std::optional<double> dt;
    double e = 0.0;
    double c = 0.0;
    double gamma = 0.0;
    std::string format = "csv";
    std::string output;  // empty: write to the data stream
    bool deg = false;

    [[nodiscard]] Determination determination() const noexcept {
        return det == 1 ? Determination::first : Determination::second;
    }
    [[nodiscard]] double angle_in(double value) const noexcept {
        return deg ? value * pi / 180.0 : value;
    }
    [[nodiscard]] ExCenter ex_center() const { return ExCenter(s, angle_in(eps)); }
};

/// Writes `text` to the configured output file (atomically) or to `out`.
void deliver(const std::string& text, const RunConfig& cfg, std::ostream& out) {
    if (cfg.output.empty()) {
        out << text;
    } else {
        io::write_file_atomic(cfg.output, text);
    }
}

struct EvalEntry {
    double (*fn)(double, const ExCenter&, Determination);
    bool theta_arg;  // true: expects --theta; false: expects --alpha
};

const std::map<std::string, EvalEntry>& eval_table() {
    static const std::map<std::string, EvalEntry> table = {
        {"delta", {[](double th, const ExCenter& ex, Determination) { return delta(th, ex); },
                   true}},
        {"rex", {&rex, true}},
        {"aex", {&aex, true}},
        {"cex", {&cex, true}},
        {"sex", {&sex, true}},
        {"dex", {&dex, true}},
        {"tex", {&tex, true}},
        {"cel", {&cel, true}},
        {"sel", {&sel, true}},
        {"Rex", {&Rex, false}},
        {"Aex", {&Aex, false}},
        {"Cex", {&Cex, false}},
        {"Sex", {&Sex, false}},
        {"Dex", {&Dex, false}},
        {"Cel", {&Cel, false}},
        {"Sel", {&Sel, false}},
    };
    return table;
}

int do_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto it = eval_table().find(cfg.fn);
    if (it == eval_table().end()) {
        err << "eval: unknown function '" << cfg.fn << "' (names are case-sensitive)\n";
        return 1;
    }
    const EvalEntry entry = it->second;
    double angle = 0.0;
    if (entry.theta_arg) {
        if (!cfg.theta) {
            err << "eval: --fn " << cfg.fn << " requires --theta\n";
            return 1;
        }
        if (cfg.alpha) {
            err << "eval: --fn " << cfg.fn << " takes --theta, not --alpha\n";
            return 1;
        }
        angle = cfg.angle_in(*cfg.theta);
    } else {
        if (!cfg.alpha) {
            err << "eval: --fn " << cfg.fn << " requires --alpha\n";
            return 1;
        }
        if (cfg.theta) {
            err << "eval: --fn " << cfg.fn << " takes --alpha, not --theta\n";
            return 1;
        }
        angle = cfg.angle_in(*cfg.alpha);
    }
    const double value = entry.fn(angle, cfg.ex_center(), cfg.determination());
    deliver(io::format_double(value) + "\n", cfg, out);
    return 0;
}

int do_curve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    curves::Polyline poly;
    if (cfg.kind == "booth") {
        poly = curves::sample_booth(cfg.ex_center(), cfg.R, cfg.n);
    } else if (cfg.kind == "excircle") {
        poly = curves::sample_excircle(cfg.ex_center(), cfg.R, cfg.n);
    } else if (cfg.kind == "quadrilobe") {
        poly = curves::sample_quadrilobe(cfg.s, cfg.n);
    } else if (cfg.kind == "elevated") {
        poly = curves::sample_elevated(cfg.ex_center(), cfg.determination(), cfg.n);
    } else if (cfg.kind == "exotic") {
        const double g = cfg.angle_in(cfg.gamma);
        const curves::ExoticConfig exotic{cfg.ex_center().point(),
                                          {cfg.c * std::cos(g), cfg.c * std::sin(g)}};
        poly = curves::sample_exotic(exotic, cfg.determination(), cfg.n);
    } else {
        err << "curve: unknown kind '" << cfg.kind << "'\n";
        return 1;
    }

    std::ostringstream buf;
    if (cfg.format == "csv") {
        io::emit_csv(poly, buf);
    } else if (cfg.format == "svg") {
        io::emit_svg(poly, buf);
    } else {
        io::emit_plain(poly, buf);
    }
    deliver(buf.str(), cfg, out);
    return 0;
}

int do_mech(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    double value = 0.0;
    if (cfg.kind == "stroke") {
        if (!cfg.theta) {
            err << "mech: --kind stroke requires --theta\n";
            return 1;
        }
        value = mech::stroke(cfg.angle_in(*cfg.theta), cfg.R, cfg.e);
    } else if (cfg.kind == "transfer") {
        if (!cfg.theta) {
            err << "mech: --kind transfer requires --theta\n";
            return 1;
        }
        value = mech::position_transfer(cfg.angle_in(*cfg.theta), cfg.ex_center(),
                                        cfg.determination());
    } else if (cfg.kind == "sec") {
        if (!cfg.x) {
            err << "mech: --kind sec requires --x\n";
            return 1;
        }
        value = mech::sec_force(*cfg.x, cfg.ex_center(), cfg.determination());
    } else {
        err << "mech: unknown kind '" << cfg.kind << "'\n";
        return 1;
    }
    deliver(io::format_double(value) + "\n", cfg, out);
    return 0;
}

int do_osc(const RunConfig& cfg, std::ostream& out) {
    const double period = two_pi / cfg.Omega;
    const double t_end = cfg.t_end ? *cfg.t_end : period;
    const double dt = cfg.dt ? *cfg.dt : period / 1e4;
    const auto series = mech::simulate_oscillator(cfg.ex_center(), cfg.Omega, cfg.R, t_end, dt);

    std::ostringstream buf;
    if (cfg.format == "csv") {
        io::emit_csv(series, buf);
    } else {
        io::emit_plain(series, buf);
    }
    deliver(buf.str(), cfg, out);
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Ex-centric circular function toolkit", "smf"};
    app.require_subcommand(1);

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate one function at one point");
    eval_cmd->add_option("--fn", cfg.fn, "function name (case-sensitive, e.g. rex or Rex)")
        ->required();
    eval_cmd->add_option("--s", cfg.s, "numerical ex-centricity");
    eval_cmd->add_option("--eps", cfg.eps, "ex-center direction angle");
    eval_cmd->add_option("--theta", cfg.theta, "angle at the ex-center pole S");
    eval_cmd->add_option("--alpha", cfg.alpha, "angle at the origin O");
    eval_cmd->add_option("--det", cfg.det, "determination")->check(CLI::IsMember({1, 2}));
    eval_cmd->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
    eval_cmd->add_flag("--deg", cfg.deg, "interpret input angles as degrees");

    auto* curve_cmd = app.add_subcommand("curve", "Sample a plane curve");
    curve_cmd->add_option("--kind", cfg.kind, "curve family")
        ->required()
        ->check(CLI::IsMember({"booth", "excircle", "quadrilobe", "elevated", "exotic"}));
    curve_cmd->add_option("--s", cfg.s, "numerical ex-centricity");
    curve_cmd->add_option("--eps", cfg.eps, "ex-center direction angle");
    curve_cmd->add_option("--R", cfg.R, "scale radius (booth, excircle)");
    curve_cmd->add_option("--n", cfg.n, "number of parameter steps");
    curve_cmd->add_option("--det", cfg.det, "determination (elevated, exotic)")
        ->check(CLI::IsMember({1, 2}));
    curve_cmd->add_option("--c", cfg.c, "exotic: circle-center distance from O");
    curve_cmd->add_option("--gamma", cfg.gamma, "exotic: circle-center direction angle");
    curve_cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "svg", "plain"}));
    curve_cmd->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
    curve_cmd->add_flag("--deg", cfg.deg, "interpret input angles as degrees");

    auto* mech_cmd = app.add_subcommand("mech", "Evaluate a mechanism quantity");
    mech_cmd->add_option("--kind", cfg.kind, "quantity")
        ->required()
        ->check(CLI::IsMember({"stroke", "transfer", "sec"}));
    mech_cmd->add_option("--theta", cfg.theta, "crank angle (stroke, transfer)");
    mech_cmd->add_option("--x", cfg.x, "deflection abscissa (sec)");
    mech_cmd->add_option("--s", cfg.s, "numerical ex-centricity (transfer, sec)");
    mech_cmd->add_option("--eps", cfg.eps, "ex-center direction angle (transfer, sec)");
    mech_cmd->add_option("--R", cfg.R, "crank radius (stroke)");
    mech_cmd->add_option("--e", cfg.e, "crank ex-centricity (stroke)");
    mech_cmd->add_option("--det", cfg.det, "determination")->check(CLI::IsMember({1, 2}));
    mech_cmd->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
    mech_cmd->add_flag("--deg", cfg.deg, "interpret input angles as degrees");

    auto* osc_cmd = app.add_subcommand("osc", "Simulate the nonlinear oscillator");
    osc_cmd->add_option("--s", cfg.s, "numerical ex-centricity (|s| <= 1)");
    osc_cmd->add_option("--eps", cfg.eps, "ex-center direction angle");
    osc_cmd->add_option("--Omega", cfg.Omega, "driving angular speed");
    osc_cmd->add_option("--R", cfg.R, "amplitude");
    osc_cmd->add_option("--t-end", cfg.t_end, "simulation end time (default: one period)");
    osc_cmd->add_option("--dt", cfg.dt, "time step (default: period / 10000)");
    osc_cmd->add_option("--format", cfg.format, "output format (no svg for time series)")
        ->check(CLI::IsMember({"csv", "plain"}));
    osc_cmd->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
    osc_cmd->add_flag("--deg", cfg.deg, "interpret input angles as degrees");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& pe) {
        const int code = app.exit(pe, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (eval_cmd->parsed()) {
            return do_eval(cfg, out, err);
        }
        if (curve_cmd->parsed()) {
            return do_curve(cfg, out, err);
        }
        if (mech_cmd->parsed()) {
            return do_mech(cfg, out, err);
        }
        return do_osc(cfg, out);
    } catch (const EvalError& ee) {
        err << "error: " << ee.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return 1;
    }
}

}  // namespace smf::cli
