#include "qchan/verify.hpp"

#include "qchan/closedform.hpp"
#include "qchan/metrics.hpp"
#include "qchan/oracles.hpp"
#include "qchan/tables.hpp"
#include "qchan/telesim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

namespace qchan {

namespace {

struct Point {
    FamilySpec spec;
    MetricsReport def;
    FamilyClosedForm cf;
};

std::vector<FamilySpec> family_grid(std::string_view family, std::size_t n) {
    std::vector<FamilySpec> out;
    if (family == "werner")
        for (double x : oracle::grid(0.0, 1.0, n)) out.emplace_back(Werner{x});
    else if (family == "mems")
        for (double x : oracle::grid(0.0, 1.0, n)) out.emplace_back(Mems{x});
    else if (family == "new")
        for (double x : oracle::grid(0.0, 1.0, n)) out.emplace_back(NmemsNew{x});
    else {
        // F_w sweeps (1/2, 1] while a walks [1/2, 1] with a golden-ratio stride.
        const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double fw = 0.5 + 0.5 * static_cast<double>(i + 1) / static_cast<double>(n);
            const double a = 0.5 + 0.5 * std::fmod(static_cast<double>(i) * phi, 1.0);
            out.emplace_back(WernerDerivative{fw, a});
        }
    }
    return out;
}

std::vector<Point> evaluate(const std::vector<FamilySpec>& specs) {
    std::vector<Point> pts;
    pts.reserve(specs.size());
    for (const auto& s : specs) pts.push_back({s, analyze(make_state(s)), closed_form(s)});
    return pts;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

Check bound_check(std::string name, double residual, double tol, std::string detail = {}) {
    return {std::move(name), residual <= tol, residual, tol, std::move(detail)};
}

void cross_checks(std::vector<Check>& out, std::string_view family, const std::vector<Point>& pts) {
    using Field = double (*)(const Point&, bool);
    struct Named {
        const char* name;
        Field f;
    };
    static const Named fields[] = {
        {"s_lin", [](const Point& p, bool cf) { return cf ? p.cf.s_lin : p.def.s_lin; }},
        {"concurrence", [](const Point& p, bool cf) { return cf ? p.cf.concurrence : p.def.concurrence; }},
        {"fef", [](const Point& p, bool cf) { return cf ? p.cf.fef : p.def.fef; }},
        {"n_value", [](const Point& p, bool cf) { return cf ? p.cf.n_value : p.def.n_value; }},
        {"m_value", [](const Point& p, bool cf) { return cf ? p.cf.m_value : p.def.m_value; }},
        {"f_opt", [](const Point& p, bool cf) { return cf ? p.cf.f_opt : p.def.f_opt; }},
    };
    for (const auto& field : fields) {
        double worst = 0.0;
        for (const auto& p : pts) worst = std::max(worst, std::abs(field.f(p, true) - field.f(p, false)));
        out.push_back(bound_check("cross_" + std::string(family) + "_" + field.name, worst, 1e-9,
                                  std::to_string(pts.size()) + " points"));
    }
}

void verdict_checks(std::vector<Check>& out, const std::vector<Point>& all) {
    std::size_t mismatches = 0, compared = 0;
    bool coherent = true;
    double identity = 0.0;
    for (const auto& p : all) {
        if (std::abs(p.def.n_value - 1.0) > 1e-9) {
            ++compared;
            mismatches += p.def.useful != p.cf.useful;
        }
        if (std::abs(p.def.m_value - 1.0) > 1e-9) {
            ++compared;
            mismatches += p.def.chsh_violated != p.cf.chsh_violated;
        }
        if (p.def.useful && !(p.def.f_opt > classical_fidelity + 1e-12)) coherent = false;
        if (p.def.useful) identity = std::max(identity, std::abs(p.def.f_opt - (2.0 * p.def.fef + 1.0) / 3.0));
    }
    out.push_back({"verdicts_match_closed_form", mismatches == 0, static_cast<double>(mismatches), 0.0,
                   std::to_string(compared) + " verdicts away from boundaries"});
    out.push_back({"verdict_coherence", coherent, 0.0, 0.0, "useful implies f_opt > 2/3"});
    out.push_back(bound_check("fopt_fef_identity", identity, 1e-9, "f_opt = (2F+1)/3 where N > 1"));

    auto sorted = all;
    std::sort(sorted.begin(), sorted.end(),
              [](const Point& a, const Point& b) { return a.def.n_value < b.def.n_value; });
    double drop = 0.0;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        drop = std::max(drop, sorted[i - 1].def.f_opt - sorted[i].def.f_opt);
    out.push_back(bound_check("monotone_fidelity", drop, 0.0, "f_opt non-decreasing in N"));
}

std::array<double, 3> sorted_squares(double a, double b, double c) {
    std::array<double, 3> u{a * a, b * b, c * c};
    std::sort(u.begin(), u.end(), std::greater<>());
    return u;
}

double u_residual(const FamilySpec& spec, const std::array<double, 3>& expected) {
    const auto u = correlation_matrix(make_state(spec)).u;
    double r = 0.0;
    for (int i = 0; i < 3; ++i) r = std::max(r, std::abs(u[i] - expected[i]));
    return r;
}

void correlation_checks(std::vector<Check>& out, std::size_t n) {
    double rw = 0.0, rwd = 0.0, rn = 0.0;
    for (double fw : oracle::grid(0.0, 1.0, n)) {
        const double k = (4.0 * fw - 1.0) / 3.0;
        rw = std::max(rw, u_residual(Werner{fw}, {k * k, k * k, k * k}));
    }
    for (const auto& s : family_grid("wd", n)) {
        const auto& d = std::get<WernerDerivative>(s);
        const double k = (4.0 * d.fw - 1.0) / 3.0, off = 2.0 * std::sqrt(d.a * (1.0 - d.a)) * k;
        rwd = std::max(rwd, u_residual(s, sorted_squares(off, off, k)));
    }
    for (double p : oracle::grid(0.0, 1.0, n)) {
        const double x = 2.0 * (1.0 - p) / 3.0;
        rn = std::max(rn, u_residual(NmemsNew{p}, sorted_squares(x, x, (4.0 * p - 1.0) / 3.0)));
    }
    out.push_back(bound_check("t_spectrum_werner", rw, 1e-12));
    out.push_back(bound_check("t_spectrum_wd", rwd, 1e-12));
    out.push_back(bound_check("t_spectrum_new", rn, 1e-12));
}

void boundary_checks(std::vector<Check>& out) {
    const double thr = constants::werner_chsh_fw;
    const double mw = m_value(correlation_matrix(make_state(Werner{thr})));
    out.push_back(bound_check("werner_chsh_boundary", std::abs(mw - 1.0), 1e-12, "M at F_w = (3+sqrt2)/(4 sqrt2)"));
    const double mwd = m_value(correlation_matrix(make_state(WernerDerivative{thr, 0.5})));
    const bool case3 = wd_bell_classify(thr, 0.5).label == WdBellCase::CaseIII;
    out.push_back({"wd_case3_boundary", case3 && std::abs(mwd - 1.0) <= 1e-12, std::abs(mwd - 1.0), 1e-12,
                   "a = 1/2 at the Werner threshold"});

    double worst = -1.0;
    const auto ps = oracle::grid(0.0, 1.0, 1000);
    for (std::size_t i = 0; i + 1 < ps.size(); ++i)
        worst = std::max(worst, m_value(correlation_matrix(make_state(NmemsNew{ps[i]}))) - 1.0);
    const double at_one = m_value(correlation_matrix(make_state(NmemsNew{1.0}))) - 1.0;
    out.push_back({"new_never_violates_chsh", worst < -1e-12 && std::abs(at_one) <= 1e-12, std::abs(at_one), 1e-12,
                   "max M - 1 below p = 1: " + fmt(worst)});

    const double root = oracle::bisect([](double p) { return concurrence(make_state(NmemsNew{p})); }, 0.0, 1.0);
    out.push_back(bound_check("new_entanglement_threshold", std::abs(root - constants::new_entangled_p), 1e-10,
                              "bisection root " + fmt(root) + " vs 7 - 3 sqrt5"));
}

void table_checks(std::vector<Check>& out) {
    std::size_t bad = 0, rows = 0;
    for (const auto& row : published_table1()) {
        const Table1Eval e = evaluate_table1_row(row);
        ++rows;
        bad += !(e.chsh_wd && !e.chsh_new);
    }
    out.push_back({"table1_chsh_verdicts", bad == 0, static_cast<double>(bad), 0.0,
                   std::to_string(rows) + " rows: wd violates, new does not"});

    const double s_branch = constants::mems_branch_slin, s_useful = constants::mems_useful_slin;
    const double r = std::max({std::abs(fidelity_vs_entropy("werner", 0.0) - 1.0),
                               std::abs(fidelity_vs_entropy("mems", 0.0) - 1.0),
                               std::abs(fidelity_vs_entropy("mems", s_branch) - 7.0 / 9.0),
                               std::abs(fidelity_vs_entropy("mems", s_useful) - 2.0 / 3.0),
                               std::abs(fidelity_vs_entropy("werner", constants::max_family_slin) - 2.0 / 3.0)});
    out.push_back(bound_check("fig1_checkpoints", r, 1e-12));

    bool dominated = true;
    for (double s : oracle::grid(0.0, constants::max_family_slin, 1000)) {
        const double fw = fidelity_vs_entropy("werner", s), fm = fidelity_vs_entropy("mems", s);
        if (s == 0.0 ? fw != fm : !(fw > fm)) dominated = false;
    }
    out.push_back({"fig1_werner_dominates", dominated, 0.0, 0.0, "f_W > f_MEMS for S_L > 0, equal at 0"});
}

void concurrence_checks(std::vector<Check>& out, std::size_t n) {
    Rng rng = make_rng(4242, 1);
    double min_ev = 0.0, diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const DensityMatrix rho = oracle::random_mixed_state(rng);
        const ConcurrenceSpectrum cs = concurrence_spectrum(rho);
        min_ev = std::min(min_ev, *std::min_element(cs.product_eigenvalues.begin(), cs.product_eigenvalues.end()));
        const auto lw = oracle::wootters_lambdas(rho);
        for (int k = 0; k < 4; ++k) diff = std::max(diff, std::abs(cs.lambdas[k] - lw[k]));
        diff = std::max(diff, std::abs(concurrence(rho) - oracle::wootters_concurrence(rho)));
    }
    out.push_back(bound_check("concurrence_spectrum_real", -min_ev, 1e-10,
                              std::to_string(n) + " random states, min eigenvalue " + fmt(min_ev)));
    out.push_back(bound_check("concurrence_matches_wootters_ensemble", diff, 1e-9, std::to_string(n) + " random states"));
}

void telesim_checks(std::vector<Check>& out, const std::vector<Point>& all) {
    double sat = 0.0;
    for (std::size_t i = 1; i <= 50; ++i) {
        const double fw = 0.5 + 0.01 * static_cast<double>(i);
        sat = std::max(sat, std::abs(average_fidelity_2design(make_state(Werner{fw})) - (2.0 * fw + 1.0) / 3.0));
    }
    out.push_back(bound_check("werner_2design_saturation", sat, 1e-12, "50 values of F_w in (1/2, 1]"));

    double excess = -1.0;
    for (const auto& p : all) excess = std::max(excess, average_fidelity_2design(make_state(p.spec)) - p.def.f_opt);
    for (const auto& s : oracle::test_states())
        excess = std::max(excess, average_fidelity_2design(s.rho) - analyze(s.rho).f_opt);
    out.push_back({"telesim_below_optimal", excess <= 1e-9, std::max(excess, 0.0), 1e-9,
                   "six-state average never exceeds f_opt"});
}

void monte_carlo_checks(std::vector<Check>& out) {
    const std::size_t n = 100000;
    const double tol = std::min(3e-3, 5.0 / std::sqrt(static_cast<double>(n)));
    double worst = 0.0;
    for (const auto& s : oracle::test_states()) {
        const double exact = average_fidelity_2design(s.rho);
        for (std::uint64_t seed : {1u, 2u, 3u})
            worst = std::max(worst, std::abs(haar_average_fidelity(s.rho, n, seed) - exact));
    }
    out.push_back(bound_check("haar_mc_matches_2design", worst, tol, "n = 1e5, 3 seeds, 20 channels"));
}

void oracle_checks(std::vector<Check>& out) {
    double above = -1.0, gap = 0.0, chsh_above = -1.0, chsh_gap = 0.0;
    for (const auto& s : oracle::test_states()) {
        const double fef = fully_entangled_fraction(s.rho);
        const double sampled = fef_sampling_oracle(s.rho, 20000, 7);
        above = std::max(above, sampled - fef);
        gap = std::max(gap, fef - sampled);
        const double target = 2.0 * std::sqrt(m_value(correlation_matrix(s.rho)));
        const double chsh = chsh_max_oracle(s.rho);
        chsh_above = std::max(chsh_above, chsh - target);
        chsh_gap = std::max(chsh_gap, target - chsh);
    }
    out.push_back({"fef_oracle_dominance", above <= 1e-9, std::max(above, 0.0), 1e-9, "20 states, 20000 samples"});
    out.push_back(bound_check("fef_oracle_reach", gap, 2e-3, "20 states, 20000 samples"));
    out.push_back({"chsh_oracle_bound", chsh_above <= 1e-9, std::max(chsh_above, 0.0), 1e-9, "never above 2 sqrt(M)"});
    out.push_back(bound_check("chsh_oracle_reach", chsh_gap, 1e-3, "20 states, grid 24x12 + refinement"));
}

void mems_discrepancy(std::vector<Check>& out, std::size_t n) {
    double definitional = 0.0, printed_min = 1e300;
    for (double c : oracle::grid(0.0, 1.0, n)) {
        const FamilyClosedForm cf = mems_cf(c);
        const double n_def = n_value(correlation_matrix(make_state(Mems{c})));
        definitional = std::max(definitional, std::abs(fidelity_from_n_raw(n_def) - cf.f_opt_raw));
        printed_min = std::min(printed_min, std::abs(cf.printed_variant->f_opt_raw - cf.f_opt_raw));
    }
    const double root = oracle::bisect(
        [](double c) { return m_value(correlation_matrix(make_state(Mems{c}))) - 1.0; }, 0.0, 1.0);
    const double thr_res = std::abs(root - constants::mems_chsh_c);
    const bool ok = definitional <= 1e-12 && printed_min > 1e-3 && thr_res <= 1e-10;
    out.push_back({"mems_chsh_paper_discrepancy", ok, definitional, 1e-12,
                   "documented, definitional threshold C > " + fmt(root) +
                       "; printed T diag(h+C, -C, 4h-1) implies C > " + fmt(constants::mems_chsh_c_printed) +
                       " and misses the fidelity formula by at least " + fmt(printed_min) +
                       "; definitional T reproduces it within " + fmt(definitional)});
}

} // namespace

std::vector<Check> run_verify(VerifyLevel level) {
    const bool full = level == VerifyLevel::Full;
    const std::size_t n = full ? 500 : 41;
    std::vector<Check> out;
    std::vector<Point> all;
    for (const char* family : {"werner", "mems", "wd", "new"}) {
        const auto pts = evaluate(family_grid(family, n));
        cross_checks(out, family, pts);
        all.insert(all.end(), pts.begin(), pts.end());
    }
    verdict_checks(out, all);
    correlation_checks(out, n);
    boundary_checks(out);
    table_checks(out);
    concurrence_checks(out, full ? 500 : 50);
    telesim_checks(out, all);
    if (full) {
        monte_carlo_checks(out);
        oracle_checks(out);
        mems_discrepancy(out, n);
    }
    return out;
}

void print_checks(const std::vector<Check>& checks, std::ostream& out) {
    std::size_t failed = 0;
    for (const auto& c : checks) {
        failed += !c.passed;
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "  residual=" << format_number(c.residual)
            << " tol=" << format_number(c.tolerance);
        if (!c.detail.empty()) out << "  " << c.detail;
        out << '\n';
    }
    out << checks.size() - failed << '/' << checks.size() << " checks passed\n";
}

} // namespace qchan
