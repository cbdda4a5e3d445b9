#include "qchan/closedform.hpp"

#include "qchan/error.hpp"
#include "qchan/metrics.hpp"
#include "qchan/overloaded.hpp"

#include <algorithm>
#include <charconv>

namespace qchan {

namespace {

// Shortest text that round-trips.
std::string fmt(double x) {
    char buf[32];
    return std::string(buf, std::to_chars(buf, buf + sizeof buf, x).ptr);
}

void require_entropy(std::string_view family, double s, double lo, double hi, bool hi_open) {
    const bool ok = s >= lo && (hi_open ? s < hi : s <= hi);
    if (!ok)
        throw Error(ErrorKind::DomainError, std::string(family) + ": S_L = " + fmt(s) + " outside [" + fmt(lo) +
                                                ", " + fmt(hi) + (hi_open ? ")" : "]"));
}

double sq(double x) { return x * x; }

} // namespace

std::vector<constants::Named> constants::table() {
    return {
        {"werner_chsh_fw", werner_chsh_fw, "(3+sqrt(2))/(4*sqrt(2))", "Werner/wd singlet fraction where M = 1"},
        {"mems_branch_c", mems_branch_c, "2/3", "MEMS concurrence where h(C) switches branch"},
        {"mems_branch_slin", mems_branch_slin, "16/27", "MEMS linear entropy at the branch point"},
        {"mems_useful_slin", mems_useful_slin, "22/27", "MEMS beats classical fidelity iff S_L below this"},
        {"mems_useful_c", mems_useful_c, "1/3", "MEMS beats classical fidelity iff C above this"},
        {"max_family_slin", max_family_slin, "8/9", "Werner/MEMS linear entropy at vanishing entanglement"},
        {"mems_chsh_c", mems_chsh_c, "1/sqrt(2)", "MEMS violates CHSH iff C above this (definitional T)"},
        {"mems_chsh_c_printed", mems_chsh_c_printed, "(sqrt(153)-3)/18",
         "CHSH threshold implied by the printed T_MEMS"},
        {"new_useful_p", new_useful_p, "1/4", "new state beats classical fidelity iff p below this"},
        {"new_case2_p", new_case2_p, "1/2", "new state: M switches from u1+u2 to u1+u3"},
        {"new_entangled_p", new_entangled_p, "7-3*sqrt(5)", "new state entangled iff p below this"},
        {"new_slin_lo", new_slin_lo, "208/351", "new state S_L at p = 0"},
        {"new_slin_hi", new_slin_hi, "2223/2808", "new state S_L at p = 1/4"},
        {"crossover_min_fw", crossover_min_fw, "2/3", "new state can beat wd only for F_w above this"},
        {"classical_fidelity", classical_fidelity, "2/3", "measure-and-prepare fidelity bound"},
    };
}

std::string_view to_string(WdBellCase c) {
    switch (c) {
    case WdBellCase::NotApplicable: return "NotApplicable";
    case WdBellCase::CaseI: return "CaseI";
    case WdBellCase::CaseII: return "CaseII";
    case WdBellCase::CaseIII: return "CaseIII";
    case WdBellCase::Separable: return "Separable";
    }
    return "Unknown";
}

FamilyClosedForm werner_cf(double fw) {
    check_family(Werner{fw});
    const double k = 4.0 * fw - 1.0;
    FamilyClosedForm r{.family = Werner{fw}};
    r.s_lin = 1.0 - sq(k / 3.0);
    r.concurrence = std::max(0.0, 2.0 * fw - 1.0);
    r.fef = std::max(fw, (1.0 - fw) / 3.0);
    r.n_value = std::abs(k);
    r.m_value = 2.0 * sq(k) / 9.0;
    r.f_opt_raw = fidelity_from_n_raw(r.n_value);
    r.f_opt = fw > 0.5 ? (2.0 * fw + 1.0) / 3.0 : classical_fidelity;
    r.entangled = fw > 0.5;
    r.useful = fw > 0.5;
    r.chsh_violated = fw > constants::werner_chsh_fw;
    return r;
}

FamilyClosedForm mems_cf(double c) {
    check_family(Mems{c});
    const double h = mems_h(c);
    const bool upper = c >= constants::mems_branch_c;
    FamilyClosedForm r{.family = Mems{c}};
    r.s_lin = upper ? 8.0 / 3.0 * (c - c * c) : 2.0 / 3.0 * (4.0 / 3.0 - c * c);
    r.concurrence = c;
    r.fef = h + c / 2.0;
    r.f_opt_raw = upper ? (2.0 * c + 1.0) / 3.0 : (5.0 + 3.0 * c) / 9.0;
    // N follows from inverting f = (1 + N/3)/2.
    r.n_value = 6.0 * r.f_opt_raw - 3.0;
    r.f_opt = std::max(r.f_opt_raw, classical_fidelity);
    r.m_value = std::max(2.0 * c * c, c * c + sq(4.0 * h - 1.0));
    r.entangled = c > 0.0;
    r.useful = r.s_lin < constants::mems_useful_slin;
    r.chsh_violated = r.m_value > 1.0;

    MemsPrintedVariant pv;
    pv.t_diag = {h + c, -c, 4.0 * h - 1.0};
    for (int i = 0; i < 3; ++i) pv.u[i] = sq(pv.t_diag[i]);
    std::sort(pv.u.begin(), pv.u.end(), std::greater<>());
    pv.n_value = std::abs(pv.t_diag[0]) + std::abs(pv.t_diag[1]) + std::abs(pv.t_diag[2]);
    pv.f_opt_raw = fidelity_from_n_raw(pv.n_value);
    if (upper)
        pv.m_value = 13.0 * c * c / 4.0;
    else if (c <= 1.0 / 3.0)
        pv.m_value = 1.0 + (9.0 * c * c + 6.0 * c - 7.0) / 9.0;
    else
        pv.m_value = 1.0 + 2.0 * (9.0 * c * c + 3.0 * c - 4.0) / 9.0;
    pv.chsh_violated = pv.m_value > 1.0;
    r.printed_variant = pv;
    return r;
}

double wd_a_upper(double fw) { return 0.5 * (1.0 + std::sqrt(3.0 * (4.0 * fw * fw - 1.0)) / (4.0 * fw - 1.0)); }

WdBellClass wd_bell_classify(double fw, double a) {
    check_family(WernerDerivative{fw, a});
    WdBellClass out;
    if (std::abs(fw - constants::werner_chsh_fw) <= 1e-12) {
        out.label = WdBellCase::CaseIII;
        out.beta = out.gamma = 0.5;
        return out;
    }
    if (fw < constants::werner_chsh_fw) return out;
    const double k = 4.0 * fw - 1.0;
    const double root = std::sqrt(2.0 * k * k - 9.0) / k;
    out.beta = 0.5 * (1.0 - root);
    out.gamma = 0.5 * (1.0 + root);
    if (a < out.gamma)
        out.label = WdBellCase::CaseII;
    else if (a < wd_a_upper(fw))
        out.label = WdBellCase::CaseI;
    else
        out.label = WdBellCase::Separable;
    return out;
}

FamilyClosedForm wd_cf(double fw, double a) {
    check_family(WernerDerivative{fw, a});
    const double k = 4.0 * fw - 1.0;
    const double s = std::sqrt(a * (1.0 - a));
    FamilyClosedForm r{.family = WernerDerivative{fw, a}};
    r.s_lin = 1.0 - sq(k / 3.0);
    // X-state concurrence 2 max(0, |rho_03| - sqrt(rho_11 rho_22)).
    r.concurrence = 2.0 * std::max(0.0, (k * s - (1.0 - fw)) / 3.0);
    r.fef = (1.0 + 2.0 * fw + 2.0 * s * k) / 6.0;
    r.n_value = k * (1.0 + 4.0 * s) / 3.0;
    r.m_value = (1.0 + 4.0 * a - 4.0 * a * a) * k * k / 9.0;
    r.f_opt_raw = (9.0 + k * (1.0 + 4.0 * s)) / 18.0;
    const double upper = wd_a_upper(fw);
    r.entangled = a < upper;
    r.useful = a < upper;
    r.f_opt = r.useful ? r.f_opt_raw : classical_fidelity;
    r.chsh_violated = r.m_value > 1.0;
    r.bell_class = wd_bell_classify(fw, a);
    return r;
}

FamilyClosedForm new_cf(double p) {
    check_family(NmemsNew{p});
    FamilyClosedForm r{.family = NmemsNew{p}};
    r.concurrence = 2.0 * std::max((1.0 - p) / 3.0 - std::sqrt(p * (p + 2.0) / 12.0), 0.0);
    r.s_lin = 2.0 * (8.0 + 14.0 * p - 13.0 * p * p) / 27.0;
    r.fef = p <= 0.5 ? 2.0 * (1.0 - p) / 3.0 : (1.0 + 2.0 * p) / 6.0;
    const bool below = p < constants::new_useful_p;
    r.n_value = below ? (5.0 - 8.0 * p) / 3.0 : 1.0;
    r.f_opt_raw = below ? (7.0 - 4.0 * p) / 9.0 : classical_fidelity;
    r.f_opt = r.f_opt_raw;
    r.m_value = p < constants::new_case2_p ? (8.0 + 8.0 * p * p - 16.0 * p) / 9.0
                                           : (20.0 * p * p - 16.0 * p + 5.0) / 9.0;
    r.entangled = p < constants::new_entangled_p;
    r.useful = below;
    r.chsh_violated = r.m_value > 1.0;
    return r;
}

FamilyClosedForm closed_form(const FamilySpec& spec) {
    return std::visit(overloaded{[](const Werner& w) { return werner_cf(w.fw); },
                                 [](const Mems& m) { return mems_cf(m.c); },
                                 [](const WernerDerivative& d) { return wd_cf(d.fw, d.a); },
                                 [](const NmemsNew& n) { return new_cf(n.p); }},
                      spec);
}

double werner_fw_from_entropy(double s_lin) {
    require_entropy("werner", s_lin, 0.0, 1.0, false);
    return (1.0 + 3.0 * std::sqrt(1.0 - s_lin)) / 4.0;
}

double mems_c_from_entropy(double s_lin) {
    require_entropy("mems", s_lin, 0.0, constants::max_family_slin, false);
    if (s_lin <= constants::mems_branch_slin) return 0.5 * (1.0 + std::sqrt(1.0 - 1.5 * s_lin));
    return std::sqrt((8.0 - 9.0 * s_lin) / 6.0);
}

double new_p_from_entropy(double s_lin) {
    require_entropy("new", s_lin, constants::new_slin_lo, 612.0 / 702.0, false);
    return (14.0 - std::sqrt(612.0 - 702.0 * s_lin)) / 26.0;
}

double fidelity_vs_entropy(std::string_view family, double s, std::optional<double> a) {
    if (family == "werner") {
        require_entropy(family, s, 0.0, constants::max_family_slin, false);
        return (1.0 + std::sqrt(1.0 - s)) / 2.0;
    }
    if (family == "mems") {
        require_entropy(family, s, 0.0, constants::max_family_slin, false);
        if (s <= constants::mems_branch_slin) return 2.0 / 3.0 + std::sqrt(2.0 - 3.0 * s) / (3.0 * std::sqrt(2.0));
        return 5.0 / 9.0 + std::sqrt(8.0 - 9.0 * s) / (3.0 * std::sqrt(6.0));
    }
    if (family == "wd") {
        require_entropy(family, s, 0.0, constants::max_family_slin, true);
        if (!a || !(*a >= 0.5 && *a <= 1.0))
            throw Error(ErrorKind::ParamOutOfRange, "wd: parameter a in [0.5, 1] is required");
        const double root = std::sqrt(*a * (1.0 - *a));
        return (9.0 + 3.0 * std::sqrt(1.0 - s) * (1.0 + 4.0 * root)) / 18.0;
    }
    if (family == "new") {
        require_entropy(family, s, constants::new_slin_lo, constants::new_slin_hi, true);
        return (7.0 - 4.0 / 26.0 * (14.0 - std::sqrt(612.0 - 702.0 * s))) / 9.0;
    }
    throw Error(ErrorKind::DomainError, "unknown family '" + std::string(family) + "'");
}

CrossoverReport crossover(double fw, double a) {
    check_family(WernerDerivative{fw, a});
    const double k = 4.0 * fw - 1.0;
    CrossoverReport r{.fw = fw, .a = a};
    r.p_max = 1.0 - ((1.0 + 2.0 * fw) / 4.0 + k * std::sqrt(a * (1.0 - a)) / 2.0);
    const double lo_radicand = (fw + 1.0) * (3.0 * fw - 2.0);
    r.a_window = {lo_radicand >= 0.0 ? 0.5 + std::sqrt(lo_radicand) / k : std::nan(""), wd_a_upper(fw)};
    r.feasible = fw > constants::crossover_min_fw && a > r.a_window[0] && a < r.a_window[1] && r.p_max > 0.0;
    return r;
}

} // namespace qchan
