#pragma once

#include "qchan/closedform.hpp"
#include "qchan/metrics.hpp"
#include "qchan/numerics.hpp"

#include <json.hpp>

#include <string>

namespace qchan {

using ojson = nlohmann::ordered_json;

/// {"dim": n, "entries": [[re, im], ...]} with entries row-major.
ojson matrix_to_json(const ComplexMatrix& m);

/// Inverse of matrix_to_json. Throws Error(ParseError) on malformed input
/// (missing keys, wrong entry count, non-numeric values).
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// Reads a matrix file; Error(ParseError) if the file is unreadable or not JSON.
ComplexMatrix read_matrix_file(const std::string& path);

/// Field names: s_lin, concurrence, fef, n_value, m_value, f_opt, f_opt_raw, useful, chsh_violated.
ojson to_json(const MetricsReport& r);
ojson to_json(const FamilySpec& spec);
ojson to_json(const FamilyClosedForm& cf);
ojson to_json(const CrossoverReport& r);

} // namespace qchan
