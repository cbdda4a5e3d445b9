#include "qchan/tables.hpp"

#include "qchan/error.hpp"
#include "qchan/io.hpp"
#include "qchan/metrics.hpp"
#include "qchan/parallel.hpp"
#include "qchan/telesim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

namespace qchan {

std::string_view to_string(Provenance p) {
    switch (p) {
    case Provenance::Input: return "input";
    case Provenance::Definitional: return "definitional";
    case Provenance::ClosedForm: return "closedform";
    case Provenance::Simulator: return "simulator";
    case Provenance::Published: return "published";
    case Provenance::Derived: return "derived";
    }
    return "unknown";
}

std::string format_number(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

namespace {

std::string render(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
    return std::get<std::string>(c);
}

std::vector<std::vector<double>> parse_fixture(const char* text, std::size_t width) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        std::vector<double> row;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            const std::size_t end = std::min(line.find(',', pos), line.size());
            double v = 0.0;
            const auto res = std::from_chars(line.data() + pos, line.data() + end, v);
            if (res.ec != std::errc{}) throw Error(ErrorKind::ParseError, "bad fixture cell in '" + line + "'");
            row.push_back(v);
            pos = end + 1;
        }
        if (row.size() != width) throw Error(ErrorKind::ParseError, "fixture row width mismatch: '" + line + "'");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
    const auto n = std::max<long long>(1, std::llround((hi - lo) / step));
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(n) + 1);
    for (long long i = 0; i <= n; ++i) xs.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n));
    return xs;
}

} // namespace

void write_csv(const SweepTable& table, std::ostream& out) {
    if (!table.title.empty()) out << "# " << table.title << '\n';
    out << "# provenance:";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : " ") << table.columns[i].name << '=' << to_string(table.columns[i].provenance);
    out << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i].name;
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << render(row[i]);
        out << '\n';
    }
}

void write_json(const SweepTable& table, std::ostream& out) {
    ojson cols = ojson::array();
    for (const auto& c : table.columns) cols.push_back({{"name", c.name}, {"provenance", to_string(c.provenance)}});
    ojson rows = ojson::array();
    for (const auto& row : table.rows) {
        ojson r = ojson::object();
        for (std::size_t i = 0; i < row.size(); ++i)
            std::visit([&](const auto& v) { r[table.columns[i].name] = v; }, row[i]);
        rows.push_back(std::move(r));
    }
    out << ojson{{"title", table.title}, {"columns", cols}, {"rows", rows}}.dump(2) << '\n';
}

std::vector<Table1Row> published_table1() {
    std::vector<Table1Row> out;
    for (const auto& r : parse_fixture(fixtures::table1_csv, 5)) out.push_back({r[0], r[1], r[2], r[3], r[4]});
    return out;
}

std::vector<Table2Row> published_table2() {
    std::vector<Table2Row> out;
    for (const auto& r : parse_fixture(fixtures::table2_csv, 6)) out.push_back({r[0], r[1], r[2], r[3], r[4], r[5]});
    return out;
}

Table1Eval evaluate_table1_row(const Table1Row& row) {
    Table1Eval e{.input = row};
    const FamilyClosedForm wd = wd_cf(row.fw, row.a);
    e.f_wd = wd.f_opt;
    e.f_new = new_cf(row.p).f_opt;
    e.m_wd = m_value(correlation_matrix(make_state(WernerDerivative{row.fw, row.a})));
    e.m_new = m_value(correlation_matrix(make_state(NmemsNew{row.p})));
    e.chsh_wd = e.m_wd > 1.0;
    e.chsh_new = e.m_new > 1.0;
    e.wd_case = wd.bell_class->label;
    e.p_max = crossover(row.fw, row.a).p_max;
    return e;
}

Table2Eval evaluate_table2_row(const Table2Row& row) {
    Table2Eval e{.input = row};
    e.fw = werner_fw_from_entropy(row.s_lin);
    e.f_werner = fidelity_vs_entropy("werner", row.s_lin);
    e.f_mems = fidelity_vs_entropy("mems", row.s_lin);
    e.f_wd = fidelity_vs_entropy("wd", row.s_lin, row.a);
    e.f_new = fidelity_vs_entropy("new", row.s_lin);
    return e;
}

SweepTable table1() {
    SweepTable t;
    t.title = "table1: Werner derivative vs GHZ/W mixture where only the former violates CHSH";
    t.columns = {{"f_w", Provenance::Input},
                 {"a", Provenance::Input},
                 {"p", Provenance::Input},
                 {"f_wd", Provenance::ClosedForm},
                 {"f_new", Provenance::ClosedForm},
                 {"f_wd_ref", Provenance::Published},
                 {"f_new_ref", Provenance::Published},
                 {"dev_wd", Provenance::Derived},
                 {"dev_new", Provenance::Derived},
                 {"m_wd", Provenance::Definitional},
                 {"m_new", Provenance::Definitional},
                 {"chsh_wd", Provenance::Definitional},
                 {"chsh_new", Provenance::Definitional},
                 {"wd_case", Provenance::ClosedForm},
                 {"p_max", Provenance::ClosedForm}};
    for (const auto& row : published_table1()) {
        const Table1Eval e = evaluate_table1_row(row);
        t.rows.push_back({row.fw, row.a, row.p, e.f_wd, e.f_new, row.f_wd, row.f_new, e.f_wd - row.f_wd,
                          e.f_new - row.f_new, e.m_wd, e.m_new, e.chsh_wd, e.chsh_new,
                          std::string(to_string(e.wd_case)), e.p_max});
    }
    return t;
}

SweepTable table2() {
    SweepTable t;
    t.title = "table2: optimal teleportation fidelity at fixed linear entropy";
    t.columns = {{"s_lin", Provenance::Input},          {"a", Provenance::Input},
                 {"f_w_recovered", Provenance::ClosedForm}, {"f_werner", Provenance::ClosedForm},
                 {"f_mems", Provenance::ClosedForm},   {"f_wd", Provenance::ClosedForm},
                 {"f_new", Provenance::ClosedForm},    {"f_werner_ref", Provenance::Published},
                 {"f_mems_ref", Provenance::Published}, {"f_wd_ref", Provenance::Published},
                 {"f_new_ref", Provenance::Published}, {"max_dev", Provenance::Derived}};
    for (const auto& row : published_table2()) {
        const Table2Eval e = evaluate_table2_row(row);
        const double dev = std::max({std::abs(e.f_werner - row.f_werner), std::abs(e.f_mems - row.f_mems),
                                     std::abs(e.f_wd - row.f_wd), std::abs(e.f_new - row.f_new)});
        t.rows.push_back({row.s_lin, row.a, e.fw, e.f_werner, e.f_mems, e.f_wd, e.f_new, row.f_werner, row.f_mems,
                          row.f_wd, row.f_new, dev});
    }
    return t;
}

SweepTable fig1(double step) {
    if (!(step > 0.0 && step <= 0.1))
        throw Error(ErrorKind::DomainError, "step must lie in (0, 0.1], got " + format_number(step));
    SweepTable t;
    t.title = "fig1: optimal fidelity vs linear entropy, Werner and MEMS";
    t.columns = {{"s_lin", Provenance::Input},
                 {"f_werner", Provenance::ClosedForm},
                 {"f_mems", Provenance::ClosedForm},
                 {"f_classical", Provenance::ClosedForm}};
    const double end = constants::max_family_slin;
    std::vector<double> xs;
    for (long long i = 0;; ++i) {
        const double s = static_cast<double>(i) * step;
        if (s >= end - 1e-12) break;
        xs.push_back(s);
    }
    xs.push_back(end);
    for (double s : xs)
        t.rows.push_back({s, fidelity_vs_entropy("werner", s), fidelity_vs_entropy("mems", s), classical_fidelity});
    return t;
}

namespace {

struct SweepSetup {
    std::vector<Column> columns;
    std::vector<FamilySpec> specs;
};

SweepSetup sweep_setup(std::string_view family, double step, double wd_fw) {
    if (!(step > 0.0 && step <= 0.5))
        throw Error(ErrorKind::DomainError, "step must lie in (0, 0.5], got " + format_number(step));
    SweepSetup s;
    if (family == "werner") {
        s.columns = {{"f_w", Provenance::Input}};
        for (double x : uniform_grid(0.0, 1.0, step)) s.specs.emplace_back(Werner{x});
    } else if (family == "mems") {
        s.columns = {{"c", Provenance::Input}};
        for (double x : uniform_grid(0.0, 1.0, step)) s.specs.emplace_back(Mems{x});
    } else if (family == "new") {
        s.columns = {{"p", Provenance::Input}};
        for (double x : uniform_grid(0.0, 1.0, step)) s.specs.emplace_back(NmemsNew{x});
    } else if (family == "wd") {
        check_family(WernerDerivative{wd_fw, 0.5});
        s.columns = {{"f_w", Provenance::Input}, {"a", Provenance::Input}};
        for (double x : uniform_grid(0.5, 1.0, step)) s.specs.emplace_back(WernerDerivative{wd_fw, x});
    } else {
        throw Error(ErrorKind::DomainError, "unknown family '" + std::string(family) + "'");
    }
    for (const char* name : {"s_lin", "concurrence", "fef", "n_value", "m_value", "f_opt", "useful", "chsh_violated"})
        s.columns.push_back({name, Provenance::Definitional});
    for (const char* name : {"cf_s_lin", "cf_concurrence", "cf_fef", "cf_n_value", "cf_m_value", "cf_f_opt",
                             "cf_useful", "cf_chsh_violated"})
        s.columns.push_back({name, Provenance::ClosedForm});
    s.columns.push_back({"max_dev", Provenance::Derived});
    s.columns.push_back({"f_sim_2design", Provenance::Simulator});
    return s;
}

std::vector<Cell> sweep_row(const FamilySpec& spec) {
    std::vector<Cell> row;
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Werner>) row.push_back(f.fw);
            if constexpr (std::is_same_v<T, Mems>) row.push_back(f.c);
            if constexpr (std::is_same_v<T, NmemsNew>) row.push_back(f.p);
            if constexpr (std::is_same_v<T, WernerDerivative>) {
                row.push_back(f.fw);
                row.push_back(f.a);
            }
        },
        spec);
    const DensityMatrix rho = make_state(spec);
    const MetricsReport m = analyze(rho);
    const FamilyClosedForm cf = closed_form(spec);
    row.insert(row.end(), {m.s_lin, m.concurrence, m.fef, m.n_value, m.m_value, m.f_opt, m.useful, m.chsh_violated});
    row.insert(row.end(),
               {cf.s_lin, cf.concurrence, cf.fef, cf.n_value, cf.m_value, cf.f_opt, cf.useful, cf.chsh_violated});
    const double dev = std::max({std::abs(m.s_lin - cf.s_lin), std::abs(m.concurrence - cf.concurrence),
                                 std::abs(m.fef - cf.fef), std::abs(m.n_value - cf.n_value),
                                 std::abs(m.m_value - cf.m_value), std::abs(m.f_opt - cf.f_opt)});
    row.push_back(dev);
    row.push_back(average_fidelity_2design(rho));
    return row;
}

std::string sweep_title(std::string_view family) { return "sweep: " + std::string(family); }

} // namespace

SweepTable sweep(std::string_view family, double step, double wd_fw) {
    SweepSetup s = sweep_setup(family, step, wd_fw);
    SweepTable t{sweep_title(family), std::move(s.columns), {}};
    t.rows = parallel_map<std::vector<Cell>>(s.specs.size(), [&](std::size_t i) { return sweep_row(s.specs[i]); });
    return t;
}

SweepTable serial::sweep(std::string_view family, double step, double wd_fw) {
    SweepSetup s = sweep_setup(family, step, wd_fw);
    SweepTable t{sweep_title(family), std::move(s.columns), {}};
    for (const auto& spec : s.specs) t.rows.push_back(sweep_row(spec));
    return t;
}

} // namespace qchan
