#pragma once

#include "qchan/states.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qchan {

/// Interval endpoints and thresholds used by the analytic formulas. Every test
/// and table reads them from here.
namespace constants {
inline const double werner_chsh_fw = (3.0 + std::sqrt(2.0)) / (4.0 * std::sqrt(2.0));
inline constexpr double mems_branch_c = 2.0 / 3.0;
inline constexpr double mems_branch_slin = 16.0 / 27.0;
inline constexpr double mems_useful_slin = 22.0 / 27.0;
inline constexpr double mems_useful_c = 1.0 / 3.0;
inline constexpr double max_family_slin = 8.0 / 9.0;
inline const double mems_chsh_c = 1.0 / std::sqrt(2.0);
inline const double mems_chsh_c_printed = (std::sqrt(153.0) - 3.0) / 18.0;
inline constexpr double new_useful_p = 0.25;
inline constexpr double new_case2_p = 0.5;
inline const double new_entangled_p = 7.0 - 3.0 * std::sqrt(5.0);
inline constexpr double new_slin_lo = 208.0 / 351.0;
inline constexpr double new_slin_hi = 2223.0 / 2808.0;
inline constexpr double crossover_min_fw = 2.0 / 3.0;

struct Named {
    std::string_view name;
    double value;
    std::string_view expression;
    std::string_view meaning;
};

/// Table of all constants above, for documentation output.
std::vector<Named> table();
} // namespace constants

/// Quantities that the definitional pipeline does not reproduce for the MEMS
/// family: the printed correlation matrix diag(h + C, -C, 4h - 1) and the
/// Bell-CHSH values derived from it.
struct MemsPrintedVariant {
    std::array<double, 3> t_diag{};
    std::array<double, 3> u{};
    double n_value = 0.0;
    double f_opt_raw = 0.0;
    double m_value = 0.0; // printed piecewise expressions
    bool chsh_violated = false;
};

enum class WdBellCase { NotApplicable, CaseI, CaseII, CaseIII, Separable };

std::string_view to_string(WdBellCase c);

struct WdBellClass {
    WdBellCase label = WdBellCase::NotApplicable;
    double beta = std::nan("");
    double gamma = std::nan("");
};

struct FamilyClosedForm {
    FamilySpec family;
    double s_lin = 0.0;
    double concurrence = 0.0;
    double fef = 0.0;
    double n_value = 0.0;
    double m_value = 0.0;
    double f_opt = 0.0;     // never below 2/3
    double f_opt_raw = 0.0; // (1 + N/3)/2
    bool entangled = false;
    bool useful = false;
    bool chsh_violated = false;
    std::optional<MemsPrintedVariant> printed_variant{}; // MEMS only
    std::optional<WdBellClass> bell_class{};        // Werner derivative only
};

FamilyClosedForm werner_cf(double fw);
FamilyClosedForm mems_cf(double c);
FamilyClosedForm wd_cf(double fw, double a);
FamilyClosedForm new_cf(double p);
FamilyClosedForm closed_form(const FamilySpec& spec);

/// Upper end of the Werner-derivative entanglement (and teleportation) window in a.
double wd_a_upper(double fw);

WdBellClass wd_bell_classify(double fw, double a);

/// Printed fidelity-vs-linear-entropy expressions (not clamped at 2/3).
/// Werner and MEMS accept S_L in [0, 8/9]; wd in [0, 8/9) and needs `a`;
/// new in [208/351, 2223/2808). Throws Error(DomainError) otherwise.
double fidelity_vs_entropy(std::string_view family, double s_lin, std::optional<double> a = std::nullopt);

// Family parameter recovered from the linear entropy.
double werner_fw_from_entropy(double s_lin);
double mems_c_from_entropy(double s_lin);
double new_p_from_entropy(double s_lin);

struct CrossoverReport {
    double fw = 0.0;
    double a = 0.0;
    double p_max = 0.0;
    std::array<double, 2> a_window{};
    bool feasible = false;
};

/// Largest p for which the new state has larger N than the Werner derivative
/// at (F_w, a), and the a-window on which that bound is positive.
CrossoverReport crossover(double fw, double a);

} // namespace qchan
