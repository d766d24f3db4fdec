#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmint/report.hpp"

namespace rmint {

/// One verification criterion: a named check with a machine-readable detail
/// block. The ten criteria together form the `verify-paper` suite.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double wall_ms = 0.0;
    Json details;
};

struct VerifyOptions {
    std::optional<std::string> code_file_path; // cross-check the shipped golden file
    std::optional<std::string> archive_dir;    // certificate archive for scan hits
    unsigned threads = 1;
};

struct VerifySummary {
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
    Json report;
};

/// The canonical [9,3,5] golden input, embedded so verification runs without
/// any file path.
const char* golden_code_text();

VerifySummary run_verification(const VerifyOptions& opts);

} // namespace rmint
