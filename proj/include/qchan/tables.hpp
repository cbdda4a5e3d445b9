#pragma once

#include "qchan/closedform.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qchan {

namespace fixtures {
extern const char* const table1_csv;
extern const char* const table2_csv;
} // namespace fixtures

/// Which computation produced a column.
enum class Provenance { Input, Definitional, ClosedForm, Simulator, Published, Derived };

std::string_view to_string(Provenance p);

using Cell = std::variant<double, bool, std::string>;

struct Column {
    std::string name;
    Provenance provenance;
};

/// Rectangular result table. Every column carries its provenance.
struct SweepTable {
    std::string title;
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
};

/// 9 significant digits, locale-independent (always a '.' decimal separator).
std::string format_number(double x);

/// '#'-prefixed title and provenance lines, then a header row, then data; '\n' endings.
void write_csv(const SweepTable& table, std::ostream& out);
void write_json(const SweepTable& table, std::ostream& out);

// Published reference rows.
struct Table1Row {
    double fw, a, p, f_wd, f_new;
};
struct Table2Row {
    double s_lin, a, f_werner, f_mems, f_wd, f_new;
};

std::vector<Table1Row> published_table1();
std::vector<Table2Row> published_table2();

struct Table1Eval {
    Table1Row input;
    double f_wd = 0.0;  // closed form
    double f_new = 0.0; // closed form
    double m_wd = 0.0;  // definitional
    double m_new = 0.0; // definitional
    bool chsh_wd = false;
    bool chsh_new = false;
    WdBellCase wd_case = WdBellCase::NotApplicable;
    double p_max = 0.0;
};

struct Table2Eval {
    Table2Row input;
    double fw = 0.0; // recovered from S_L
    double f_werner = 0.0, f_mems = 0.0, f_wd = 0.0, f_new = 0.0;
};

Table1Eval evaluate_table1_row(const Table1Row& row);
Table2Eval evaluate_table2_row(const Table2Row& row);

inline constexpr double table_tolerance = 5e-6;

SweepTable table1();
SweepTable table2();

/// Printed fidelity-vs-entropy curves for Werner and MEMS on S_L in [0, 8/9]
/// (endpoint included) with the classical line. Throws Error(DomainError)
/// unless 0 < step <= 0.1.
SweepTable fig1(double step);

/// Definitional and closed-form metrics across a family's parameter range:
/// werner F_w in [0, 1], mems C in [0, 1], new p in [0, 1], wd a in [1/2, 1] at
/// fixed F_w. Rows are evaluated in parallel; order is deterministic.
SweepTable sweep(std::string_view family, double step, double wd_fw = 0.9);

namespace serial {
SweepTable sweep(std::string_view family, double step, double wd_fw = 0.9);
}

} // namespace qchan
