#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snm/io.hpp"

namespace snm {

/// Identifiers of the verification suites in canonical execution order.
const std::vector<std::string>& suite_ids();

/// Runs one suite. Reports are deterministic functions of (id, seed).
/// Throws std::invalid_argument for an unknown id.
std::vector<VerificationReport> run_suite(const std::string& id, std::uint64_t seed);

/// Runs "all" suites or a single one named by `selector`.
std::vector<VerificationReport> run_suites(const std::string& selector, std::uint64_t seed);

}  // namespace snm
