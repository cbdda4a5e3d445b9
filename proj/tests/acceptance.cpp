// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit 1 if any fails.
#include "qchan/closedform.hpp"
#include "qchan/metrics.hpp"
#include "qchan/oracles.hpp"
#include "qchan/tables.hpp"
#include "qchan/telesim.hpp"
#include "qchan/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace qchan;

namespace {

constexpr double table_tol = 5e-6;
constexpr double table_seconds = 1.0;
constexpr double cross_tol = 1e-9;
constexpr double spectrum_floor = -1e-10;
constexpr double root_tol = 1e-10;
constexpr double exact_tol = 1e-12;
constexpr double oracle_slack = 1e-9;
constexpr double fef_reach = 2e-3;
constexpr double chsh_reach = 1e-3;
constexpr double mc_tol = 3e-3;
constexpr std::size_t grid_points = 500;
constexpr std::size_t random_states = 500;

struct Result {
    bool passed = true;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

int failures = 0;

void report(const std::string& id, const std::string& name, const std::function<Result()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("threw: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !r.passed;
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << secs;
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << id << ' ' << name << "  residual=" << format_number(r.residual)
              << " tol=" << format_number(r.tolerance) << "  time=" << time.str() << "s";
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    std::cout << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Reference formulas written out independently of the closedform module.
double ref_mems_h(double c) { return c >= 2.0 / 3.0 ? c / 2.0 : 1.0 / 3.0; }
double ref_new_concurrence(double p) {
    return 2.0 * std::max((1.0 - p) / 3.0 - std::sqrt(p * (p + 2.0) / 12.0), 0.0);
}

Result ac1() {
    const auto t0 = std::chrono::steady_clock::now();
    Result r{true, 0.0, table_tol, ""};
    std::string worst;
    int bad = 0;
    for (const auto& row : published_table2()) {
        const auto e = evaluate_table2_row(row);
        const std::pair<const char*, std::pair<double, double>> cells[] = {{"f_werner", {e.f_werner, row.f_werner}},
                                                                           {"f_mems", {e.f_mems, row.f_mems}},
                                                                           {"f_wd", {e.f_wd, row.f_wd}},
                                                                           {"f_new", {e.f_new, row.f_new}}};
        for (const auto& [name, v] : cells) {
            const double d = std::abs(v.first - v.second);
            if (d > table_tol) {
                ++bad;
                worst += " S_L=" + format_number(row.s_lin) + ",a=" + format_number(row.a) + " " + name + ": computed " +
                         format_number(v.first) + " printed " + format_number(v.second) + ";";
            }
            r.residual = std::max(r.residual, d);
        }
    }
    const double secs = seconds_since(t0);
    r.passed = bad == 0 && secs < table_seconds;
    r.detail = "40 cells, " + std::to_string(bad) + " outside tolerance" + (bad ? ":" + worst : std::string());
    if (secs >= table_seconds) r.detail += " runtime over 1 s";
    return r;
}

Result ac2() {
    const auto t0 = std::chrono::steady_clock::now();
    Result r{true, 0.0, table_tol, ""};
    int verdicts = 0;
    for (const auto& row : published_table1()) {
        const auto e = evaluate_table1_row(row);
        r.residual = std::max({r.residual, std::abs(e.f_wd - row.f_wd), std::abs(e.f_new - row.f_new)});
        const double m_wd = m_value(correlation_matrix(make_state(WernerDerivative{row.fw, row.a})));
        const double m_new = m_value(correlation_matrix(make_state(NmemsNew{row.p})));
        verdicts += m_wd > 1.0 && m_new <= 1.0;
    }
    const double secs = seconds_since(t0);
    r.passed = r.residual <= table_tol && verdicts == 16 && secs < table_seconds;
    r.detail = "16 rows, CHSH verdicts certified on " + std::to_string(verdicts) + "/16";
    return r;
}

Result ac3() {
    Result r{true, 0.0, exact_tol, ""};
    auto fw = [](double s) { return fidelity_vs_entropy("werner", s); };
    auto fm = [](double s) { return fidelity_vs_entropy("mems", s); };
    const double res[] = {std::abs(fw(0.0) - 1.0), std::abs(fm(0.0) - 1.0), std::abs(fm(16.0 / 27.0) - 7.0 / 9.0),
                          std::abs(fm(22.0 / 27.0) - 2.0 / 3.0), std::abs(fw(8.0 / 9.0) - 2.0 / 3.0)};
    for (double d : res) r.residual = std::max(r.residual, d);
    double min_gap = 1e300;
    bool ordered = true;
    for (double s : oracle::grid(0.0, 8.0 / 9.0, 1000)) {
        const double gap = fw(s) - fm(s);
        if (s == 0.0) {
            ordered = ordered && std::abs(gap) <= exact_tol;
        } else {
            ordered = ordered && gap > 0.0;
            min_gap = std::min(min_gap, gap);
        }
    }
    r.passed = r.residual <= exact_tol && ordered;
    r.detail = "five checkpoints; 1000-point grid strict order, smallest gap " + format_number(min_gap);
    return r;
}

Result ac4() {
    Result r{true, 0.0, cross_tol, ""};
    auto compare = [&](const DensityMatrix& rho, const FamilyClosedForm& cf) {
        const MetricsReport d = analyze(rho);
        r.residual = std::max({r.residual, std::abs(d.s_lin - cf.s_lin), std::abs(d.concurrence - cf.concurrence),
                               std::abs(d.fef - cf.fef), std::abs(d.n_value - cf.n_value),
                               std::abs(d.m_value - cf.m_value), std::abs(d.f_opt - cf.f_opt)});
    };
    double mems_m = 0.0;
    for (double x : oracle::grid(0.0, 1.0, grid_points)) {
        compare(make_state(Werner{x}), werner_cf(x));
        compare(make_state(Mems{x}), mems_cf(x));
        compare(make_state(NmemsNew{x}), new_cf(x));
        const double h = ref_mems_h(x);
        const double m_ref = std::max(2.0 * x * x, x * x + (4 * h - 1) * (4 * h - 1));
        mems_m = std::max(mems_m, std::abs(m_value(correlation_matrix(make_state(Mems{x}))) - m_ref));
    }
    for (double a : oracle::grid(0.5, 1.0, grid_points))
        for (double fw : {0.51, 0.75, 0.9, 1.0}) compare(make_state(WernerDerivative{fw, a}), wd_cf(fw, a));
    r.residual = std::max(r.residual, mems_m);
    r.passed = r.residual <= cross_tol;
    r.detail = "S_L, C, F, N, M, f_opt on 500-point grids; MEMS M asserted as max(2C^2, C^2+(4h-1)^2) within " +
               format_number(mems_m);
    return r;
}

Result ac5() {
    Result r{true, 0.0, cross_tol, ""};
    Rng rng = make_rng(31337, 0);
    double lowest = 1e300;
    for (std::size_t i = 0; i < random_states; ++i) {
        const auto rho = oracle::random_mixed_state(rng);
        const auto cs = concurrence_spectrum(rho);
        for (double ev : cs.product_eigenvalues) lowest = std::min(lowest, ev);
        r.residual = std::max(r.residual, std::abs(concurrence(rho) - oracle::wootters_concurrence(rho)));
    }
    for (double x : oracle::grid(0.0, 1.0, grid_points)) {
        r.residual = std::max(r.residual, std::abs(concurrence(make_state(Werner{x})) - std::max(0.0, 2 * x - 1)));
        r.residual = std::max(r.residual, std::abs(concurrence(make_state(Mems{x})) - x));
        r.residual = std::max(r.residual, std::abs(concurrence(make_state(NmemsNew{x})) - ref_new_concurrence(x)));
    }
    // C(p) before the clamp at zero, so the root is a sign change.
    const double root = oracle::bisect(
        [](double p) {
            const auto l = concurrence_spectrum(make_state(NmemsNew{p})).lambdas;
            return -(l[0] - l[1] - l[2] - l[3]);
        },
        0.0, 0.5);
    const double root_res = std::abs(root - (7.0 - 3.0 * std::sqrt(5.0)));
    r.passed = r.residual <= cross_tol && lowest >= spectrum_floor && root_res <= root_tol;
    r.detail = "500 random states, min eigenvalue " + format_number(lowest) + "; threshold root " +
               format_number(root) + " off by " + format_number(root_res);
    return r;
}

Result ac6() {
    Result r{true, 0.0, exact_tol, ""};
    for (double fw : oracle::grid(0.25, 1.0, grid_points))
        r.residual = std::max(r.residual, std::abs(fully_entangled_fraction(make_state(Werner{fw})) - fw));
    for (double c : oracle::grid(0.0, 1.0, grid_points))
        r.residual = std::max(r.residual, std::abs(fully_entangled_fraction(make_state(Mems{c})) - (ref_mems_h(c) + c / 2)));
    double above = -1.0, below = 0.0;
    for (const auto& s : oracle::test_states()) {
        const double f = fully_entangled_fraction(s.rho);
        const double sampled = fef_sampling_oracle(s.rho, 20000, 2024);
        above = std::max(above, sampled - f);
        below = std::max(below, f - sampled);
    }
    r.passed = r.residual <= exact_tol && above <= oracle_slack && below <= fef_reach;
    r.detail = "sampling oracle on 20 states: max shortfall " + format_number(below) + ", max excess " +
               format_number(std::max(above, 0.0));
    return r;
}

Result ac7() {
    Result r{true, 0.0, chsh_reach, ""};
    double above = -1.0;
    std::string named;
    for (const auto& s : oracle::test_states()) {
        const double target = 2.0 * std::sqrt(m_value(correlation_matrix(s.rho)));
        const double got = chsh_max_oracle(s.rho);
        above = std::max(above, got - target);
        r.residual = std::max(r.residual, target - got);
        if (s.name == "singlet" || s.name == "maximally_mixed") named += " " + s.name + "=" + format_number(got);
    }
    r.passed = r.residual <= chsh_reach && above <= oracle_slack;
    r.detail = "20 states, max excess " + format_number(std::max(above, 0.0)) + ";" + named;
    return r;
}

Result ac8() {
    Result r{true, 0.0, exact_tol, ""};
    for (double fw : oracle::grid(0.5, 1.0, 50))
        r.residual = std::max(r.residual, std::abs(average_fidelity_2design(make_state(Werner{fw})) - (2 * fw + 1) / 3));
    double excess = -1.0, mc = 0.0;
    std::vector<DensityMatrix> channels;
    for (const auto& s : oracle::test_states()) channels.push_back(s.rho);
    for (double x : oracle::grid(0.0, 1.0, 101)) {
        channels.push_back(make_state(Mems{x}));
        channels.push_back(make_state(NmemsNew{x}));
        channels.push_back(make_state(WernerDerivative{0.8, 0.5 + x / 2}));
    }
    for (const auto& rho : channels) excess = std::max(excess, average_fidelity_2design(rho) - analyze(rho).f_opt);
    for (const auto& s : oracle::test_states()) {
        const double exact = average_fidelity_2design(s.rho);
        for (std::uint64_t seed : {11u, 12u, 13u})
            mc = std::max(mc, std::abs(haar_average_fidelity(s.rho, 100000, seed) - exact));
    }
    r.passed = r.residual <= exact_tol && excess <= oracle_slack && mc <= mc_tol;
    r.detail = "Werner saturation on 50 F_w; " + std::to_string(channels.size()) + " channels max excess over f_opt " +
               format_number(excess) + "; Haar MC n=1e5 x3 seeds max deviation " + format_number(mc);
    return r;
}

Result ac9() {
    Result r{true, 0.0, exact_tol, ""};
    const double fw = (3.0 + std::sqrt(2.0)) / (4.0 * std::sqrt(2.0));
    const double werner = std::abs(m_value(correlation_matrix(make_state(Werner{fw}))) - 1.0);
    const double wd = std::abs(m_value(correlation_matrix(make_state(WernerDerivative{fw, 0.5}))) - 1.0);
    const double at_one = std::abs(m_value(correlation_matrix(make_state(NmemsNew{1.0}))) - 1.0);
    double highest = -1e300;
    for (double p : oracle::grid(0.0, 1.0, 1000))
        if (p < 1.0) highest = std::max(highest, m_value(correlation_matrix(make_state(NmemsNew{p}))));
    r.residual = std::max({werner, wd, at_one});
    r.passed = r.residual <= exact_tol && highest < 1.0 - exact_tol;
    r.detail = "Werner |M-1|=" + format_number(werner) + ", wd case III |M-1|=" + format_number(wd) +
               ", new state max M below p=1: " + format_number(highest);
    return r;
}

Result ac10() {
    Result r{true, 0.0, exact_tol, ""};
    double definitional = 0.0, printed = 1e300;
    for (double c : oracle::grid(0.0, 1.0, grid_points)) {
        const double h = ref_mems_h(c);
        const double f_ref = (2.0 * (h + c / 2.0) + 1.0) / 3.0;
        const double n_def = n_value(correlation_matrix(make_state(Mems{c})));
        const double n_printed = std::abs(h + c) + c + std::abs(4 * h - 1);
        definitional = std::max(definitional, std::abs((1.0 + n_def / 3.0) / 2.0 - f_ref));
        printed = std::min(printed, std::abs((1.0 + n_printed / 3.0) / 2.0 - f_ref));
    }
    const auto checks = run_verify(VerifyLevel::Full);
    const auto it = std::find_if(checks.begin(), checks.end(),
                                 [](const Check& c) { return c.name == "mems_chsh_paper_discrepancy"; });
    const bool emitted = it != checks.end() && it->passed;
    r.residual = definitional;
    r.passed = emitted && definitional <= exact_tol && printed > 1e-3;
    r.detail = std::string(emitted ? "verify full emits record" : "record missing or failed") +
               "; printed T misses the fidelity formula by >= " + format_number(printed);
    return r;
}

} // namespace

int main() {
    report("AC1", "table2_reproduction", ac1);
    report("AC2", "table1_reproduction", ac2);
    report("AC3", "fig1_checkpoints", ac3);
    report("AC4", "cross_pipeline_equivalence", ac4);
    report("AC5", "concurrence_oracle", ac5);
    report("AC6", "fully_entangled_fraction", ac6);
    report("AC7", "chsh_oracle", ac7);
    report("AC8", "teleportation_simulator", ac8);
    report("AC9", "classifier_boundaries", ac9);
    report("AC10", "mems_discrepancy_record", ac10);
    std::cout << (10 - failures) << "/10 criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
