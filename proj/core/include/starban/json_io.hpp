#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "starban/convolution.hpp"
#include "starban/matrix.hpp"
#include "starban/suites.hpp"
#include "starban/tensornorms.hpp"

namespace starban::json_io {

using ordered_json = nlohmann::ordered_json;

// Complex numbers are [re, im] pairs; matrices are
// {"rows": m, "cols": n, "entries": [[re, im], ...]} row-major.
ordered_json complex_to_json(num::Complex z);
ordered_json vector_to_json(const std::vector<num::Complex>& v);
ordered_json matrix_to_json(const num::Matrix& m);
num::Matrix matrix_from_json(const ordered_json& j);

ordered_json certificate_to_json(const tensornorms::NormCertificate& c);
ordered_json witness_to_json(const tensornorms::CorrectionWitness& w);

// Per-check objects are {"check": name, "passed": bool, "details": {...}}.
ordered_json suite_report_to_json(const suites::SuiteReport& report);

// {"support": {"<degree>": "fin:<n>" | "inf"}}
ordered_json dim_functor_to_json(const convolution::DimFunctor& f);
convolution::DimFunctor dim_functor_from_json(const ordered_json& j);

// Whole-file read; throws std::invalid_argument when the file cannot be
// opened.
std::string read_text_file(const std::string& path);

// Coordinate lists for the norm command: "[(3,0),(4,0)]" with explicit
// real/imaginary pairs, bare reals like "[3,4]" or "3, 4", or "@path" to
// read the same syntax from a file. Malformed input throws
// spaces::parse_error with a position.
std::vector<num::Complex> complex_list_from_text(const std::string& text);

}  // namespace starban::json_io
