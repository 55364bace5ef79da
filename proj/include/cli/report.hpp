#pragma once

#include "exactmath/mpoly.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

using json = nlohmann::ordered_json;

// Bad command line, config or script content (exit 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Status { pass, fail, inconclusive, info };
std::string to_string(Status s);

struct Verdict {
    std::string check;
    Status status = Status::info;
    std::string witness;
};

struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    std::vector<Verdict> verdicts;
    std::vector<std::string> lines;  // text-format body
    double seconds = 0;

    void say(const std::string& line) { lines.push_back(line); }
    void verdict(const std::string& check, Status status, const std::string& witness);
    void verdict(const std::string& check, bool pass, const std::string& witness)
    {
        verdict(check, pass ? Status::pass : Status::fail, witness);
    }
    bool failed() const;
    int exit_code() const { return failed() ? 1 : 0; }
    json to_json() const;
    std::string to_text() const;
};

// "num/den", always with a denominator.
std::string rational_json(const exactmath::Rational& q);
// A rational as "num/den"; an algebraic number as {expr, field}.
json scalar_json(const exactmath::Scalar& a);
json field_json(const exactmath::FieldPtr& K);

// Report for a command that stopped with an error.
json error_json(const std::string& command, const json& inputs, const std::string& kind, const std::string& message,
                int exit_code);

} // namespace cli
