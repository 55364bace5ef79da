#pragma once

#include "cli/config.hpp"
#include "cli/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cli {

struct AnalyzeOptions {
    bool asymptotes = false;
    bool present = false;
    bool classify = false;
    int factor = -1;       // truncation order for --factor, -1 when off
    int emit_points = 0;   // abscissae 0..K-1
    int trunc = 16;
};

Report cmd_analyze(const std::string& expr, const AnalyzeOptions& opts);

struct TransformOptions {
    std::vector<std::string> steps;  // one step per entry, script syntax
    bool verify = false;
    int trunc = 16;
};

// Script lines: "op key=value ...", '#' comments, blank lines ignored.
std::vector<std::string> read_script(const std::string& path);

Report cmd_transform(const std::string& expr, const TransformOptions& opts);

struct DegenerateOptions {
    std::optional<std::string> fiber;
    std::optional<std::string> asymptotic;  // strict | weak
    bool at_infinity = false;
    std::optional<std::string> track;       // comma separated parameters
    bool good_spec = false;
    int samples = 10;
    std::string tolerance = "1e-3";
};

Report cmd_degenerate(const Config& cfg, const DegenerateOptions& opts);

} // namespace cli
