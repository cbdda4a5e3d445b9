#include "qchan/io.hpp"

#include "qchan/error.hpp"
#include "qchan/overloaded.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace qchan {

ojson matrix_to_json(const ComplexMatrix& m) {
    ojson entries = ojson::array();
    for (const cplx& e : m.entries()) entries.push_back({e.real(), e.imag()});
    return ojson{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
            throw Error(ErrorKind::ParseError, "matrix JSON needs keys 'dim' and 'entries'");
        const auto dim = j.at("dim").get<std::size_t>();
        const auto& entries = j.at("entries");
        if (!entries.is_array()) throw Error(ErrorKind::ParseError, "'entries' must be an array");
        std::vector<cplx> values;
        values.reserve(entries.size());
        for (const auto& e : entries) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw Error(ErrorKind::ParseError, "each entry must be [re, im]");
            values.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
        if (values.size() != dim * dim)
            throw Error(ErrorKind::ParseError, "dim " + std::to_string(dim) + " needs " + std::to_string(dim * dim) +
                                                   " entries, got " + std::to_string(values.size()));
        return ComplexMatrix(dim, values);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        throw Error(ErrorKind::ParseError, e.what());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, "'" + path + "': " + e.what());
    }
    return matrix_from_json(j);
}

ojson to_json(const MetricsReport& r) {
    return ojson{{"s_lin", r.s_lin},         {"concurrence", r.concurrence}, {"fef", r.fef},
                 {"n_value", r.n_value},     {"m_value", r.m_value},         {"f_opt", r.f_opt},
                 {"f_opt_raw", r.f_opt_raw}, {"useful", r.useful},           {"chsh_violated", r.chsh_violated}};
}

ojson to_json(const FamilySpec& spec) {
    ojson j{{"family", family_tag(spec)}};
    std::visit(overloaded{[&](const Werner& w) { j["fw"] = w.fw; }, [&](const Mems& m) { j["c"] = m.c; },
                          [&](const WernerDerivative& d) {
                              j["fw"] = d.fw;
                              j["a"] = d.a;
                          },
                          [&](const NmemsNew& n) { j["p"] = n.p; }},
               spec);
    return j;
}

ojson to_json(const FamilyClosedForm& cf) {
    ojson j{{"s_lin", cf.s_lin},
            {"concurrence", cf.concurrence},
            {"fef", cf.fef},
            {"n_value", cf.n_value},
            {"m_value", cf.m_value},
            {"f_opt", cf.f_opt},
            {"f_opt_raw", cf.f_opt_raw},
            {"entangled", cf.entangled},
            {"useful", cf.useful},
            {"chsh_violated", cf.chsh_violated}};
    if (cf.printed_variant) {
        const auto& pv = *cf.printed_variant;
        j["paper_variant"] = ojson{{"t_diag", pv.t_diag},
                                   {"u", pv.u},
                                   {"n_value", pv.n_value},
                                   {"f_opt_raw", pv.f_opt_raw},
                                   {"m_value", pv.m_value},
                                   {"chsh_violated", pv.chsh_violated}};
    }
    if (cf.bell_class) {
        const auto& b = *cf.bell_class;
        j["bell_case"] = ojson{{"label", std::string(to_string(b.label))}, {"beta", b.beta}, {"gamma", b.gamma}};
    }
    return j;
}

ojson to_json(const CrossoverReport& r) {
    return ojson{{"fw", r.fw}, {"a", r.a}, {"p_max", r.p_max}, {"a_window", r.a_window}, {"feasible", r.feasible}};
}

} // namespace qchan
