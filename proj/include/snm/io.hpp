#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "snm/vec3.hpp"

namespace snm {

/// Shortest round-trip decimal representation (17 significant digits, C
/// locale, no locale-dependent separators). Used for every number that ends
/// up in a file so that identical inputs give byte-identical outputs.
std::string format_double(double v);

/// Minimal CSV assembly: fields joined with ',', rows with '\n'. Values made
/// with format_double never need quoting; free-text fields are quoted when
/// they contain a comma, quote or newline.
std::string csv_row(const std::vector<std::string>& fields);

/// Triangulates an n_s x n_t vertex grid; winding counterclockwise when seen
/// from the side the normal ps x pt points to.
std::vector<std::array<int, 3>> grid_faces(int n_s, int n_t);

std::string obj_text(const std::vector<Vec3>& vertices,
                     const std::vector<std::array<int, 3>>& faces);

/// One verification check: a named measurement set compared against pinned
/// tolerances, tied to a catalog anchor.
struct VerificationReport {
    std::string check;
    std::string anchor;
    bool pass = false;
    std::vector<std::pair<std::string, double>> measured;
    std::vector<std::pair<std::string, double>> tolerances;
    double runtime_ms = 0.0;  ///< console display only; not serialised
};

/// Deterministic JSON document for a set of reports: a single top-level
/// array with one object per check. Field order is fixed and all numbers go
/// through format_double; wall-clock data is omitted so identical seeds give
/// identical bytes.
std::string reports_json(const std::vector<VerificationReport>& reports);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace snm
