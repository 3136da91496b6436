#include "snm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <vector>

#include "snm/connection.hpp"
#include "snm/cylindrical.hpp"
#include "snm/graph_pde.hpp"
#include "snm/registry.hpp"
#include "snm/rotational.hpp"
#include "snm/verify.hpp"

namespace snm {

namespace {

double parse_number(const std::string& text, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + ": bad number '" + text + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = text.find(sep, pos);
        out.push_back(text.substr(pos, next - pos));
        if (next == std::string::npos) return out;
        pos = next + 1;
    }
}

JetMethod parse_method(const std::string& name) {
    if (name == "auto") return JetMethod::Auto;
    if (name == "analytic") return JetMethod::Analytic;
    if (name == "fd") return JetMethod::FiniteDifference;
    throw std::invalid_argument("method must be auto, analytic or fd (got '" + name + "')");
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        out.push_back(0.5 * (lo + hi));
        return out;
    }
    for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
    out.back() = hi;  // guard against one-ulp overshoot at the endpoint
    return out;
}

struct SampleRow {
    double s = 0, t = 0;
    bool has_point = false;
    Vec3 p;
    bool ok = false;
    CurvatureReport rep;
};

std::vector<SampleRow> sample_rows(const RegistryEntry& entry, const CanonicalConnection& conn,
                                   int n_s, int n_t, JetMethod method) {
    std::vector<SampleRow> rows;
    rows.reserve(static_cast<std::size_t>(n_s) * n_t);
    for (const double s : linspace(entry.window.s_min, entry.window.s_max, n_s)) {
        for (const double t : linspace(entry.window.t_min, entry.window.t_max, n_t)) {
            SampleRow row;
            row.s = s;
            row.t = t;
            try {
                row.p = entry.patch.point(s, t);
                row.has_point = true;
            } catch (const std::exception&) {
            }
            try {
                row.rep = curvature_report(entry.patch, s, t, conn, method);
                row.ok = true;
            } catch (const std::exception&) {
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string json_number_or_null(bool ok, double v) {
    return ok ? format_double(v) : std::string("null");
}

}  // namespace

std::vector<ConfigEntry> load_flat_config(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open config file: " + path);
    std::vector<ConfigEntry> entries;
    std::string line;
    int line_no = 0;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        if (a == std::string::npos) return std::string();
        const auto b = s.find_last_not_of(" \t\r");
        return s.substr(a, b - a + 1);
    };
    while (std::getline(file, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("config " + path + ":" + std::to_string(line_no) +
                                        ": expected key=value, got '" + text + "'");
        }
        const std::string key = trim(text.substr(0, eq));
        std::string value = trim(text.substr(eq + 1));
        if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
            value.back() == value.front()) {
            value = value.substr(1, value.size() - 2);
        }
        if (key.empty()) {
            throw std::invalid_argument("config " + path + ":" + std::to_string(line_no) +
                                        ": empty key");
        }
        entries.push_back(ConfigEntry{key, value});
    }
    return entries;
}

Vec3 parse_vec3(const std::string& text) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 3) {
        throw std::invalid_argument("expected three comma-separated numbers, got '" + text + "'");
    }
    return Vec3{parse_number(parts[0], "vector"), parse_number(parts[1], "vector"),
                parse_number(parts[2], "vector")};
}

void parse_grid(const std::string& text, int& n_s, int& n_t) {
    const auto x = text.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= text.size()) {
        throw std::invalid_argument("grid must have the form NxM, got '" + text + "'");
    }
    char* end = nullptr;
    const std::string a = text.substr(0, x), b = text.substr(x + 1);
    const long ns = std::strtol(a.c_str(), &end, 10);
    if (end != a.c_str() + a.size()) throw std::invalid_argument("bad grid '" + text + "'");
    const long nt = std::strtol(b.c_str(), &end, 10);
    if (end != b.c_str() + b.size()) throw std::invalid_argument("bad grid '" + text + "'");
    if (ns < 2 || nt < 2 || ns > 4096 || nt > 4096) {
        throw std::invalid_argument("grid sides must lie in [2, 4096], got '" + text + "'");
    }
    n_s = static_cast<int>(ns);
    n_t = static_cast<int>(nt);
}

std::string curvature_payload(const CurvatureOptions& opts) {
    const SurfaceSpec spec = parse_surface_spec(opts.surface);
    const RegistryEntry entry = make_surface(spec);
    const CanonicalConnection conn(parse_vec3(opts.C));
    int n_s = 0, n_t = 0;
    parse_grid(opts.grid, n_s, n_t);
    const JetMethod method = parse_method(opts.method);
    const std::vector<SampleRow> rows = sample_rows(entry, conn, n_s, n_t, method);

    if (opts.format == "csv") {
        std::string out = csv_row({"s", "t", "x", "y", "z", "K_tilde", "G", "H", "C_dot_N", "K",
                                   "status"});
        for (const SampleRow& r : rows) {
            std::vector<std::string> f;
            f.push_back(format_double(r.s));
            f.push_back(format_double(r.t));
            for (const double v : {r.p.x, r.p.y, r.p.z}) {
                f.push_back(r.has_point ? format_double(v) : std::string());
            }
            for (const double v : {r.rep.K_tilde, r.rep.G, r.rep.H, r.rep.C_dot_N, r.rep.K}) {
                f.push_back(r.ok ? format_double(v) : std::string());
            }
            f.push_back(r.ok ? "ok" : "degenerate");
            out += csv_row(f);
        }
        return out;
    }
    if (opts.format != "json") {
        throw std::invalid_argument("curvature output format must be csv or json (got '" +
                                    opts.format + "')");
    }
    std::string out = "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SampleRow& r = rows[i];
        out += "  {\"s\": " + format_double(r.s) + ", \"t\": " + format_double(r.t);
        out += ", \"x\": " + json_number_or_null(r.has_point, r.p.x);
        out += ", \"y\": " + json_number_or_null(r.has_point, r.p.y);
        out += ", \"z\": " + json_number_or_null(r.has_point, r.p.z);
        out += ", \"K_tilde\": " + json_number_or_null(r.ok, r.rep.K_tilde);
        out += ", \"G\": " + json_number_or_null(r.ok, r.rep.G);
        out += ", \"H\": " + json_number_or_null(r.ok, r.rep.H);
        out += ", \"C_dot_N\": " + json_number_or_null(r.ok, r.rep.C_dot_N);
        out += ", \"K\": " + json_number_or_null(r.ok, r.rep.K);
        out += std::string(", \"status\": \"") + (r.ok ? "ok" : "degenerate") + "\"}";
        out += (i + 1 < rows.size()) ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

namespace {

std::string curve_csv(const ProfileCurve& curve, const std::vector<double>& ss) {
    std::string out = csv_row({"s", "x", "z", "zp", "kappa"});
    for (const double s : ss) {
        const ProfilePoint p = curve.at(s);
        out += csv_row({format_double(s), format_double(p.x), format_double(p.z),
                        format_double(p.zp), format_double(p.kappa())});
    }
    return out;
}

GeneratePayload generate_cylindrical(const GenerateOptions& opts, int n_s, int n_t) {
    const ProfileCurve curve = generating_curve(opts.K);
    double lo = curve.s_min(), hi = curve.s_max();
    if (std::isfinite(lo) && std::isfinite(hi)) {
        const double trim = 1e-3 * (hi - lo);  // keep kappa finite at the ends
        lo += trim;
        hi -= trim;
    } else if (std::isfinite(lo)) {
        lo += 3e-3;
        hi = lo + 3.0;
    } else {
        lo = -2.0;
        hi = 2.0;
    }
    const std::vector<std::string> tr = split(opts.t_range, ',');
    if (tr.size() != 2) {
        throw std::invalid_argument("t-range must be 'a,b', got '" + opts.t_range + "'");
    }
    const double t_lo = parse_number(tr[0], "t-range"), t_hi = parse_number(tr[1], "t-range");
    if (!(t_lo < t_hi)) throw std::invalid_argument("t-range must be increasing");

    const CylinderSpec cyl(Vec3{0, 1, 0}, Vec3{1, 0, 0}, curve);
    std::vector<Vec3> vertices;
    vertices.reserve(static_cast<std::size_t>(n_s) * n_t);
    const std::vector<double> ss = linspace(lo, hi, n_s);
    for (const double s : ss) {
        const Vec3 base = cyl.curve_point(s);
        for (const double t : linspace(t_lo, t_hi, n_t)) {
            vertices.push_back(base + t * cyl.ruling());
        }
    }
    return GeneratePayload{obj_text(vertices, grid_faces(n_s, n_t)),
                           curve_csv(cyl.profile(), ss)};
}

GeneratePayload generate_rotational(const GenerateOptions& opts, int n_s, int n_t) {
    AxisBranch branch;
    if (opts.branch == "positive") {
        branch = AxisBranch::Positive;
    } else if (opts.branch == "negative") {
        branch = AxisBranch::Negative;
    } else {
        throw std::invalid_argument("branch must be positive or negative (got '" + opts.branch +
                                    "')");
    }
    const AxisProfile ap = axis_orthogonal_profile(branch, opts.x_max);
    const RotationalSurface surf(ap.curve);
    const ParametricPatch patch = surf.patch(0.0, 2.0 * 3.14159265358979323846);
    std::vector<Vec3> vertices;
    vertices.reserve(static_cast<std::size_t>(n_s) * n_t);
    const std::vector<double> ss = linspace(std::min(0.01, 0.1 * ap.arc_length), ap.arc_length,
                                            n_s);
    for (const double s : ss) {
        for (const double t : linspace(0.0, 2.0 * 3.14159265358979323846, n_t)) {
            vertices.push_back(patch.point(s, t));
        }
    }
    return GeneratePayload{obj_text(vertices, grid_faces(n_s, n_t)), curve_csv(ap.curve, ss)};
}

GeneratePayload generate_graph(const GenerateOptions& opts, int n_s, int n_t) {
    const GraphSurface surf = solution_family(opts.c);
    double wx = 0, wy = 0;
    solution_family_halfwidths(opts.c, wx, wy);
    const ParametricPatch patch = surf.patch();
    std::vector<Vec3> vertices;
    vertices.reserve(static_cast<std::size_t>(n_s) * n_t);
    const std::vector<double> xs = linspace(-0.89 * wx, 0.89 * wx, n_s);
    for (const double x : xs) {
        for (const double y : linspace(-0.89 * wy, 0.89 * wy, n_t)) {
            vertices.push_back(patch.point(x, y));
        }
    }
    // companion curve: the y = 0 section z = f(x), graph-parametrised
    std::string csv = csv_row({"s", "x", "z", "zp", "kappa"});
    for (const double x : xs) {
        const GraphJet2 j = surf.jet(x, 0.0);
        const double w = std::sqrt(1.0 + j.ux * j.ux);
        csv += csv_row({format_double(x), format_double(x), format_double(j.u),
                        format_double(j.ux), format_double(j.uxx / (w * w * w))});
    }
    return GeneratePayload{obj_text(vertices, grid_faces(n_s, n_t)), csv};
}

}  // namespace

GeneratePayload generate_payload(const GenerateOptions& opts) {
    int n_s = 0, n_t = 0;
    parse_grid(opts.grid, n_s, n_t);
    if (opts.family == "cylindrical") return generate_cylindrical(opts, n_s, n_t);
    if (opts.family == "rotational") return generate_rotational(opts, n_s, n_t);
    if (opts.family == "graph") return generate_graph(opts, n_s, n_t);
    throw std::invalid_argument("family must be cylindrical, rotational or graph (got '" +
                                opts.family + "')");
}

std::string verify_table(const std::vector<VerificationReport>& reports) {
    std::string out;
    int passed = 0;
    for (const VerificationReport& r : reports) {
        char line[256];
        std::snprintf(line, sizeof(line), "[%s] %-12s %s (%.1f ms)\n",
                      r.pass ? "PASS" : "FAIL", r.anchor.c_str(), r.check.c_str(), r.runtime_ms);
        out += line;
        if (r.pass) ++passed;
    }
    char tail[96];
    std::snprintf(tail, sizeof(tail), "%d/%zu checks passed\n", passed, reports.size());
    out += tail;
    return out;
}

int cmd_curvature(const CurvatureOptions& opts) {
    const std::string payload = curvature_payload(opts);
    if (opts.out.empty()) {
        std::fputs(payload.c_str(), stdout);
    } else {
        write_text_file(opts.out, payload);
    }
    return 0;
}

int cmd_generate(const GenerateOptions& opts) {
    const GeneratePayload payload = generate_payload(opts);
    const std::string obj_path = opts.out + ".obj";
    const std::string csv_path = opts.out + "_curve.csv";
    write_text_file(obj_path, payload.obj);
    write_text_file(csv_path, payload.curve_csv);
    std::printf("wrote %s and %s\n", obj_path.c_str(), csv_path.c_str());
    return 0;
}

int cmd_verify(const VerifyOptions& opts) {
    const std::vector<VerificationReport> reports = run_suites(opts.suite, opts.seed);
    std::fputs(verify_table(reports).c_str(), stdout);
    if (!opts.out.empty()) {
        write_text_file(opts.out, reports_json(reports));
        std::printf("report written to %s\n", opts.out.c_str());
    }
    for (const VerificationReport& r : reports) {
        if (!r.pass) return 1;
    }
    return 0;
}

}  // namespace snm
