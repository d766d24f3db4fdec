// Acceptance gate: runs every verification criterion at its pinned tolerance
// and prints one pass/fail line per criterion.

#include <cstdio>

#include "rmint/verify.hpp"

int main() {
    rmint::VerifyOptions opts;
#ifdef RMINT_DATA_DIR
    opts.code_file_path = std::string(RMINT_DATA_DIR) + "/paper_9_3_5_f64.code";
#endif
    opts.threads = 4;
    auto summary = rmint::run_verification(opts);
    for (const auto& c : summary.criteria) {
        std::printf("%s  criterion %2d: %s  (%.0f ms)\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    c.wall_ms);
        if (!c.pass && c.details.contains("notes")) {
            for (const auto& note : c.details["notes"]) std::printf("        %s\n", note.dump().c_str());
        }
    }
    std::printf("%s\n", summary.all_pass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
    return summary.all_pass ? 0 : 1;
}
