// qchan: command-line front end.
//
// Exit codes: 0 success, 1 verify failure, 2 bad arguments or unparsable
// input, 3 invalid state or parameter.

#include "qchan/closedform.hpp"
#include "qchan/error.hpp"
#include "qchan/io.hpp"
#include "qchan/metrics.hpp"
#include "qchan/tables.hpp"
#include "qchan/telesim.hpp"
#include "qchan/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace qchan;

struct Options {
    std::string family;
    std::optional<double> fw, a, c, p;
    std::optional<std::string> matrix;
    double step = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
    std::string level = "quick";
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double require(const std::optional<double>& v, const char* flag, const std::string& family) {
    if (!v) throw UsageError("--family " + family + " needs " + flag);
    return *v;
}

FamilySpec family_from(const Options& o) {
    if (o.family == "werner") return Werner{require(o.fw, "--fw", o.family)};
    if (o.family == "mems") return Mems{require(o.c, "--c", o.family)};
    if (o.family == "wd") return WernerDerivative{require(o.fw, "--fw", o.family), require(o.a, "--a", o.family)};
    if (o.family == "new") return NmemsNew{require(o.p, "--p", o.family)};
    throw UsageError("unknown family '" + o.family + "'");
}

// Writes to --out when given, stdout otherwise.
template <class F>
void emit(const Options& o, F&& write) {
    if (o.out.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + o.out + "' for writing");
    write(f);
}

void emit_table(const Options& o, const SweepTable& t) {
    emit(o, [&](std::ostream& s) {
        if (o.format == "json")
            write_json(t, s);
        else
            write_csv(t, s);
    });
}

int cmd_analyze(const Options& o) {
    if (o.matrix && !o.family.empty()) throw UsageError("use either --matrix or --family, not both");
    if (!o.matrix && o.family.empty()) throw UsageError("analyze needs --family or --matrix");

    ojson j;
    std::optional<DensityMatrix> rho;
    if (o.matrix) {
        rho = validate_density(read_matrix_file(*o.matrix));
        j = to_json(analyze(*rho));
    } else {
        const FamilySpec spec = family_from(o);
        rho = make_state(spec);
        j = to_json(analyze(*rho));
        j["family"] = to_json(spec);
        j["closed_form"] = to_json(closed_form(spec));
    }
    ojson sim{{"f_2design", average_fidelity_2design(*rho)}};
    if (o.samples > 0) {
        sim["f_haar_mc"] = haar_average_fidelity(*rho, o.samples, o.seed);
        sim["fef_sampled"] = fef_sampling_oracle(*rho, o.samples, o.seed);
        sim["samples"] = o.samples;
        sim["seed"] = o.seed;
    }
    j["simulator"] = std::move(sim);
    emit(o, [&](std::ostream& s) { s << j.dump(2) << '\n'; });
    return 0;
}

int cmd_constants(const Options& o) {
    SweepTable t{"constants", {{"name", Provenance::ClosedForm}, {"value", Provenance::ClosedForm},
                               {"expression", Provenance::ClosedForm}, {"meaning", Provenance::ClosedForm}}, {}};
    for (const auto& c : constants::table())
        t.rows.push_back({std::string(c.name), c.value, std::string(c.expression), std::string(c.meaning)});
    emit_table(o, t);
    return 0;
}

int cmd_verify(const Options& o) {
    const auto checks = run_verify(o.level == "full" ? VerifyLevel::Full : VerifyLevel::Quick);
    emit(o, [&](std::ostream& s) { print_checks(checks, s); });
    bool ok = true;
    for (const auto& c : checks)
        if (!c.passed) {
            ok = false;
            std::cerr << "failed: " << c.name << " (residual " << format_number(c.residual) << ")\n";
        }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit states as teleportation channels: metrics, closed forms, tables"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> families{"werner", "mems", "wd", "new"};
    const std::vector<std::string> formats{"csv", "json"};

    auto* analyze_cmd = app.add_subcommand("analyze", "Metrics of one state (JSON)");
    analyze_cmd->add_option("--family", o.family, "State family")->check(CLI::IsMember(families));
    analyze_cmd->add_option("--fw", o.fw, "Werner singlet fraction F_w");
    analyze_cmd->add_option("--a", o.a, "Werner-derivative amplitude a");
    analyze_cmd->add_option("--c", o.c, "MEMS concurrence C");
    analyze_cmd->add_option("--p", o.p, "GHZ weight p of the new state");
    analyze_cmd->add_option("--matrix", o.matrix, "JSON file {\"dim\": 4, \"entries\": [[re, im], ...]}");
    analyze_cmd->add_option("--samples", o.samples, "Monte-Carlo samples for the oracles (0 = skip)");
    analyze_cmd->add_option("--seed", o.seed, "Seed for the Monte-Carlo oracles");
    analyze_cmd->add_option("--out", o.out, "Output path (default stdout)");

    auto* table1_cmd = app.add_subcommand("table1", "Werner derivative vs GHZ/W mixture rows");
    auto* table2_cmd = app.add_subcommand("table2", "Fidelities at fixed linear entropy");
    auto* fig1_cmd = app.add_subcommand("fig1", "Fidelity vs linear entropy, Werner and MEMS");
    auto* sweep_cmd = app.add_subcommand("sweep", "Definitional and closed-form metrics across a family");
    auto* constants_cmd = app.add_subcommand("constants", "Thresholds and interval endpoints");
    for (auto* cmd : {table1_cmd, table2_cmd, fig1_cmd, sweep_cmd, constants_cmd}) {
        cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember(formats));
        cmd->add_option("--out", o.out, "Output path (default stdout)");
    }
    fig1_cmd->add_option("--step", o.step, "S_L spacing, (0, 0.1]")->default_val(0.01);
    sweep_cmd->add_option("--family", o.family, "State family")->required()->check(CLI::IsMember(families));
    sweep_cmd->add_option("--step", o.step, "Parameter spacing, (0, 0.5]")->default_val(0.05);
    sweep_cmd->add_option("--fw", o.fw, "Fixed F_w for the wd family (default 0.9)");

    auto* verify_cmd = app.add_subcommand("verify", "Cross-pipeline invariant suite");
    verify_cmd->add_option("level,--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_option("--out", o.out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(o);
        if (*table1_cmd) emit_table(o, table1());
        if (*table2_cmd) emit_table(o, table2());
        if (*fig1_cmd) emit_table(o, fig1(o.step));
        if (*sweep_cmd) emit_table(o, sweep(o.family, o.step, o.fw.value_or(0.9)));
        if (*constants_cmd) return cmd_constants(o);
        if (*verify_cmd) return cmd_verify(o);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::ParseError ? 2 : 3;
    }
}
