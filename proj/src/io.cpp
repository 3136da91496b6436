#include "snm/io.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace snm {

std::string format_double(double v) {
    if (std::isnan(v)) return "\"nan\"";
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const std::string& f = fields[i];
        const bool quote = f.find_first_of(",\"\n") != std::string::npos;
        if (i) row += ',';
        if (!quote) {
            row += f;
        } else {
            row += '"';
            for (const char c : f) {
                if (c == '"') row += '"';
                row += c;
            }
            row += '"';
        }
    }
    row += '\n';
    return row;
}

std::vector<std::array<int, 3>> grid_faces(int n_s, int n_t) {
    std::vector<std::array<int, 3>> faces;
    faces.reserve(static_cast<std::size_t>(2 * (n_s - 1) * (n_t - 1)));
    auto id = [n_t](int i, int j) { return i * n_t + j; };
    for (int i = 0; i + 1 < n_s; ++i) {
        for (int j = 0; j + 1 < n_t; ++j) {
            // (s, t) -> (s+ds, t) -> (s+ds, t+dt) runs counterclockwise with
            // respect to the normal ps x pt; same for the second triangle.
            faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    }
    return faces;
}

std::string obj_text(const std::vector<Vec3>& vertices,
                     const std::vector<std::array<int, 3>>& faces) {
    std::string out;
    out.reserve(vertices.size() * 48 + faces.size() * 24);
    for (const Vec3& v : vertices) {
        out += "v ";
        out += format_double(v.x);
        out += ' ';
        out += format_double(v.y);
        out += ' ';
        out += format_double(v.z);
        out += '\n';
    }
    char buf[64];
    for (const auto& f : faces) {
        std::snprintf(buf, sizeof(buf), "f %d %d %d\n", f[0] + 1, f[1] + 1, f[2] + 1);
        out += buf;
    }
    return out;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

void append_kv_block(std::string& out, const char* name,
                     const std::vector<std::pair<std::string, double>>& kv) {
    out += "    \"";
    out += name;
    out += "\": {";
    for (std::size_t i = 0; i < kv.size(); ++i) {
        if (i) out += ", ";
        out += '"';
        out += json_escape(kv[i].first);
        out += "\": ";
        out += format_double(kv[i].second);
    }
    out += "}";
}

}  // namespace

std::string reports_json(const std::vector<VerificationReport>& reports) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const VerificationReport& r = reports[i];
        out += "  {\n";
        out += "    \"check\": \"" + json_escape(r.check) + "\",\n";
        out += "    \"anchor\": \"" + json_escape(r.anchor) + "\",\n";
        out += std::string("    \"status\": \"") + (r.pass ? "pass" : "fail") + "\",\n";
        append_kv_block(out, "measured", r.measured);
        out += ",\n";
        append_kv_block(out, "tolerances", r.tolerances);
        out += "\n  }";
        out += (i + 1 < reports.size()) ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error("error writing output file: " + path);
}

}  // namespace snm
