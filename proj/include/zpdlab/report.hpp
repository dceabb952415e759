#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zpdlab {

struct CheckRequest {
    std::string check;      // check-zpd | check-zjpd | check-im-span | check-condition-m | solve | verify
    std::string spec_path;  // spec document to load
    std::map<std::string, std::string> params;  // tag, theorem, target_dim, samples
};

struct RunConfig {
    std::uint64_t seed = 0;
    std::optional<int> budget;  // per-check default: 50 * algebra dim
    std::vector<CheckRequest> checks;
};

// body: deterministic function of config + spec file contents (sorted keys,
// no timing data). timing: wall-clock section kept apart so byte-comparing
// bodies across runs is meaningful. exit code: 2 if any check errored on its
// input, else 1 if any check refuted, else 0.
struct Report {
    std::string body;
    std::string timing;
    int exit_code = 0;
};

Report run(const RunConfig& config);

std::string report_text(const Report& r);  // body and timing as one document

std::string fnv1a_hex(const std::string& bytes);

}  // namespace zpdlab
