#pragma once

// File formats. JSON carries structured objects (coefficient sequences,
// measures, banded matrices); CSV carries numeric tables. Complex numbers are
// [re, im] pairs in JSON and "re,im" cell pairs in CSV. Doubles print as
// shortest round-trip decimals so identical inputs give identical bytes.
// Writers go through a temp file plus rename; a failed run leaves no partial
// output behind.

#include "cmv/block_cmv.hpp"
#include "cmv/cmv_matrix.hpp"
#include "cmv/geronimus.hpp"
#include "cmv/opuc.hpp"

#include "json.hpp"

#include <string>

namespace cmv::io {

using json = nlohmann::json;

std::string read_text_file(const std::string& path);
void write_text_atomic(const std::string& path, const std::string& content);

// Parse wrapper that prefixes syntax errors with the file name.
json parse_json_text(const std::string& text, const std::string& what);

// Shortest round-trip decimal via to_chars.
std::string fmt(double x);
// "re,im"
std::string fmt(cplx z);

// {"coeffs": [[re, im], ...], "kind": "proper" | "improper"}
VerblunskySequence verblunsky_from_json(const json& j);
json verblunsky_to_json(const VerblunskySequence& v);

// {"atoms": [{"theta": t, "weight": w}, ...]}
DiscreteCircleMeasure measure_from_json(const json& j);
json measure_to_json(const DiscreteCircleMeasure& mu);

// {"n": n, "diagonals": {"-2": [...], ..., "2": [...]}}
json banded_to_json(const BandedUnitary& c);

// {"a": [...], "b": [...]}
json jacobi_to_json(const JacobiOperator& op);

// {"k": k, "kind": ..., "blocks": [[[ [re, im], ... ] row ] block ]}
MatrixVerblunsky matrix_verblunsky_from_json(const json& j);
json matrix_verblunsky_to_json(const MatrixVerblunsky& v);

} // namespace cmv::io
