#pragma once

#include "cli/report.hpp"
#include "degeneration/family.hpp"

#include <map>
#include <string>

namespace cli {

// Flat "key = value" text; '#' starts a comment.
struct Config {
    std::map<std::string, std::string> values;
    std::string source;

    static Config parse(const std::string& text, const std::string& source = "<config>");
    static Config load(const std::string& path);
    bool has(const std::string& key) const { return values.count(key) > 0; }
    const std::string& get(const std::string& key) const;
};

// Comma separated rationals.
degeneration::Vec3 parse_vec3(const std::string& text);

// The family declared by the config: family = cone | mirror | form.
degeneration::CurveFamily build_family(const Config& cfg, json* echo = nullptr);

} // namespace cli
