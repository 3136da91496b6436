#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snm/io.hpp"
#include "snm/vec3.hpp"

namespace snm {

struct CurvatureOptions {
    std::string surface = "sphere";
    std::string C = "0,0,1";
    std::string grid = "10x10";
    std::string method = "auto";  ///< auto | analytic | fd
    std::string format = "csv";   ///< csv | json
    std::string out;              ///< output path; empty writes to stdout
};

struct GenerateOptions {
    std::string family = "cylindrical";  ///< cylindrical | rotational | graph
    double K = 1.0;                      ///< target curvature (cylindrical)
    double c = 1.0;                      ///< graph family parameter
    std::string branch = "negative";     ///< rotational axis branch
    double x_max = 1.5;                  ///< rotational reach from the axis
    std::string grid = "64x64";
    std::string t_range = "-1,1";        ///< cylindrical ruling band
    std::string out = "surface";         ///< prefix: <out>.obj and <out>_curve.csv
};

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t seed = 42;
    std::string out;  ///< JSON report path; empty writes no file
};

/// One key=value entry of a flat config file, in file order.
struct ConfigEntry {
    std::string key;
    std::string value;
};

/// Parses a flat key=value config file: one entry per line, `#` comments and
/// blank lines ignored, optional whitespace around `=`, values may be quoted.
/// Throws std::invalid_argument on malformed lines and std::runtime_error on
/// I/O failure.
std::vector<ConfigEntry> load_flat_config(const std::string& path);

/// "a,b,c" -> vector; throws std::invalid_argument on malformed input.
Vec3 parse_vec3(const std::string& text);

/// "NxM" with N, M >= 2; throws std::invalid_argument otherwise.
void parse_grid(const std::string& text, int& n_s, int& n_t);

/// Full curvature-table payload (CSV or JSON per opts.format).
std::string curvature_payload(const CurvatureOptions& opts);

/// Mesh plus companion generating-curve table.
struct GeneratePayload {
    std::string obj;
    std::string curve_csv;
};
GeneratePayload generate_payload(const GenerateOptions& opts);

/// Human-readable console table for verification reports.
std::string verify_table(const std::vector<VerificationReport>& reports);

int cmd_curvature(const CurvatureOptions& opts);
int cmd_generate(const GenerateOptions& opts);
int cmd_verify(const VerifyOptions& opts);

}  // namespace snm
