#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "snm/cli.hpp"
#include "snm/verify.hpp"

namespace {

/// One settable key of a flat config file: the key doubles as the flag name
/// (without leading dashes, positionals as-is).
struct ConfigKey {
    const char* key;
    std::function<void(const std::string&)> set;
};

double config_double(const std::string& value, const char* key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("config key '") + key + "': bad number '" +
                                    value + "'");
    }
}

std::uint64_t config_uint(const std::string& value, const char* key) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("config key '") + key + "': bad integer '" +
                                    value + "'");
    }
}

/// Applies file entries to any option the command line did not set; flags
/// always win. Unknown keys are rejected so typos do not pass silently.
void apply_config(const CLI::App& sub, const std::string& path,
                  const std::vector<ConfigKey>& keys) {
    for (const snm::ConfigEntry& entry : snm::load_flat_config(path)) {
        const auto it = std::find_if(keys.begin(), keys.end(), [&](const ConfigKey& k) {
            return entry.key == k.key;
        });
        if (it == keys.end()) {
            throw std::invalid_argument("config key '" + entry.key + "' does not match any " +
                                        sub.get_name() + " flag");
        }
        const std::string flag =
            (entry.key == std::string("suite")) ? entry.key : "--" + entry.key;
        if (sub.count(flag) == 0) it->set(entry.value);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "snmcurv: sectional curvature of surfaces in Euclidean 3-space under the canonical "
        "semi-symmetric non-metric connection"};
    app.require_subcommand(1);

    snm::CurvatureOptions copts;
    snm::GenerateOptions gopts;
    snm::VerifyOptions vopts;
    std::string curv_config, gen_config, ver_config;
    const char* config_help = "Flat key=value file mirroring the flags; flags override the file";

    CLI::App* curvature =
        app.add_subcommand("curvature", "Sample the curvature field of a catalog surface");
    curvature->add_option("--config", curv_config, config_help);
    curvature->add_option("--surface", copts.surface, "Surface spec: name[:key=value,...]")
        ->capture_default_str();
    curvature
        ->add_option("--C", copts.C, "Connection direction a,b,c (normalised; must be nonzero)")
        ->capture_default_str();
    curvature->add_option("--grid", copts.grid, "Sample grid NxM, N and M >= 2")
        ->capture_default_str();
    curvature->add_option("--method", copts.method, "Jet evaluation method")
        ->check(CLI::IsMember({"auto", "analytic", "fd"}))
        ->capture_default_str();
    curvature->add_option("--format", copts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    curvature->add_option("--out", copts.out, "Output path (stdout when omitted)");

    CLI::App* generate = app.add_subcommand(
        "generate", "Generate a classified constant-curvature surface mesh and its curve");
    generate->add_option("--config", gen_config, config_help);
    generate->add_option("--family", gopts.family, "Surface family")
        ->check(CLI::IsMember({"cylindrical", "rotational", "graph"}))
        ->capture_default_str();
    generate->add_option("--K", gopts.K, "Sectional curvature target (cylindrical family)")
        ->capture_default_str();
    generate->add_option("--c", gopts.c, "Graph family parameter (not 0 or 1/2)")
        ->capture_default_str();
    generate->add_option("--branch", gopts.branch, "Axis branch (rotational family)")
        ->check(CLI::IsMember({"positive", "negative"}))
        ->capture_default_str();
    generate->add_option("--x-max", gopts.x_max, "Reach from the axis (rotational family)")
        ->capture_default_str();
    generate->add_option("--grid", gopts.grid, "Mesh resolution NxM")->capture_default_str();
    generate->add_option("--t-range", gopts.t_range, "Ruling band a,b (cylindrical family)")
        ->capture_default_str();
    std::string gformat = "obj";
    generate->add_option("--format", gformat, "Mesh format")->check(CLI::IsMember({"obj"}));
    generate->add_option("--out", gopts.out, "Output prefix: <out>.obj and <out>_curve.csv")
        ->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--config", ver_config, config_help);
    std::vector<std::string> suite_choices = snm::suite_ids();
    suite_choices.insert(suite_choices.begin(), "all");
    verify->add_option("suite", vopts.suite, "Suite id")
        ->check(CLI::IsMember(suite_choices))
        ->capture_default_str();
    verify->add_option("--seed", vopts.seed, "Seed for the randomised suites")
        ->capture_default_str();
    verify->add_option("--out", vopts.out, "Write the JSON report to this path");
    std::string vformat = "json";
    verify->add_option("--format", vformat, "Report format")->check(CLI::IsMember({"json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (curvature->parsed()) {
            if (!curv_config.empty()) {
                apply_config(*curvature, curv_config,
                             {{"surface", [&](const std::string& v) { copts.surface = v; }},
                              {"C", [&](const std::string& v) { copts.C = v; }},
                              {"grid", [&](const std::string& v) { copts.grid = v; }},
                              {"method", [&](const std::string& v) { copts.method = v; }},
                              {"format", [&](const std::string& v) { copts.format = v; }},
                              {"out", [&](const std::string& v) { copts.out = v; }}});
            }
            return snm::cmd_curvature(copts);
        }
        if (generate->parsed()) {
            if (!gen_config.empty()) {
                apply_config(
                    *generate, gen_config,
                    {{"family", [&](const std::string& v) { gopts.family = v; }},
                     {"K", [&](const std::string& v) { gopts.K = config_double(v, "K"); }},
                     {"c", [&](const std::string& v) { gopts.c = config_double(v, "c"); }},
                     {"branch", [&](const std::string& v) { gopts.branch = v; }},
                     {"x-max",
                      [&](const std::string& v) { gopts.x_max = config_double(v, "x-max"); }},
                     {"grid", [&](const std::string& v) { gopts.grid = v; }},
                     {"t-range", [&](const std::string& v) { gopts.t_range = v; }},
                     {"format",
                      [&](const std::string& v) {
                          if (v != "obj")
                              throw std::invalid_argument("config key 'format': must be obj");
                      }},
                     {"out", [&](const std::string& v) { gopts.out = v; }}});
            }
            return snm::cmd_generate(gopts);
        }
        if (!ver_config.empty()) {
            apply_config(*verify, ver_config,
                         {{"suite", [&](const std::string& v) { vopts.suite = v; }},
                          {"seed", [&](const std::string& v) { vopts.seed = config_uint(v, "seed"); }},
                          {"out", [&](const std::string& v) { vopts.out = v; }},
                          {"format", [&](const std::string& v) {
                               if (v != "json")
                                   throw std::invalid_argument("config key 'format': must be json");
                           }}});
        }
        return snm::cmd_verify(vopts);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "snmcurv: error: %s\n", e.what());
        return 1;
    }
}
