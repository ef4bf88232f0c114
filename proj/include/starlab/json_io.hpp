#pragma once

// Matrix JSON:
//   {"ring": {"kind": "gaussian_rational"} | {"kind": "prime_field", "p": 5},
//    "rows": m, "cols": n, "entries": [["1/2+1i", ...], ...]}
// Entries use the scalar text grammar.

#include <string>

#include "json.hpp"
#include "starlab/matrix.hpp"

namespace starlab {

using Json = nlohmann::ordered_json;

Json ring_to_json(const RingSpec& ring);
RingSpec ring_from_json(const Json& j);

Json matrix_to_json(const Mat& a);
/// Throws ParseError on malformed documents, ShapeError if rows/cols
/// disagree with the entries.
Mat matrix_from_json(const Json& j);

/// Parses JSON text; throws ParseError.
Json parse_json(const std::string& text);

/// Reads a matrix from a file path, or from the argument itself when it
/// starts with '{'. Throws ParseError.
Mat load_matrix(const std::string& path_or_json);

/// "Q(i)", "gaussian", "Z_5", "Z5", "5".
RingSpec parse_ring_name(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace starlab
